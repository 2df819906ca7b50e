//! Polar quadrature nodes on Euclidean disks in C.

use alloc::vec::Vec;

use super::gauss::gauss_legendre;
use crate::Complex64;

/// Nodes and area weights for integration over the disk
/// `{ |w - center| < radius }`, as a polar tensor rule: `n_radial`
/// Gauss-Legendre nodes in the radius (with the polar Jacobian folded into
/// the weights) times `n_angular` uniform angular nodes. Exact for smooth
/// integrands of moderate polynomial degree; callers refine by raising the
/// node counts.
pub fn disk_polar_nodes(
    center: Complex64,
    radius: f64,
    n_radial: usize,
    n_angular: usize,
) -> Vec<(Complex64, f64)> {
    let (gx, gw) = gauss_legendre(n_radial);
    let w_ang = core::f64::consts::TAU / n_angular as f64;
    let mut out = Vec::with_capacity(n_radial * n_angular);
    for (xi, wi) in gx.iter().zip(&gw) {
        let rho = 0.5 * radius * (xi + 1.0);
        let w_rad = 0.5 * radius * wi * rho;
        for j in 0..n_angular {
            let th = w_ang * j as f64;
            out.push((center + Complex64::from_polar(rho, th), w_rad * w_ang));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn disk_area_and_moments() {
        let c = Complex64::new(0.3, -0.2);
        let r = 0.7;
        let nodes = disk_polar_nodes(c, r, 16, 24);
        let area: f64 = nodes.iter().map(|(_, w)| w).sum();
        assert!((area - PI * r * r).abs() < 1e-12);
        // centroid of w over the disk is the center
        let m: Complex64 = nodes.iter().map(|(w, wt)| w * *wt).sum();
        assert!((m / area - c).norm() < 1e-12);
        // int |w - c|^2 = pi r^4 / 2
        let q: f64 = nodes.iter().map(|(w, wt)| (w - c).norm_sqr() * wt).sum();
        assert!((q - PI * r.powi(4) / 2.0).abs() < 1e-12);
    }
}

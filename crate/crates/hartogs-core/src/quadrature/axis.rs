//! Geometrically graded composite panels on an interval.
//!
//! An [`Axis`] splits `(lo, hi)` at the midpoint and tiles each half with
//! shells shrinking geometrically (ratio `lambda`) toward the endpoint,
//! with a Gauss-Legendre rule on every shell. Endpoint-algebraic integrands
//! `x^c g(x)` (`c > -1`, `g` analytic) then produce shell contributions that
//! decay in an exactly geometric way, so the dropped stubs next to the
//! endpoints can be restored by geometric extrapolation and a failure of the
//! shell sums to decay is a divergence signal.

use alloc::vec::Vec;

use num_traits::Float;

use super::gauss::gauss_legendre;
use super::Scalar;

/// Panelised interval. Nodes are grouped per panel, panels ordered left to
/// right; the first `depth` panels are the left shells (innermost first),
/// the last `depth` panels the right shells (innermost last).
pub(crate) struct Axis {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub nodes_per_panel: usize,
    pub depth: usize,
}

impl Axis {
    pub fn new(lo: f64, hi: f64, nodes_per_panel: usize, depth: usize, lambda: f64) -> Self {
        debug_assert!(hi > lo && (0.0..1.0).contains(&lambda) && depth >= 3);
        let half = 0.5 * (hi - lo);
        let n_panels = 2 * depth;
        let (gx, gw) = gauss_legendre(nodes_per_panel);
        let mut nodes = Vec::with_capacity(n_panels * nodes_per_panel);
        let mut weights = Vec::with_capacity(n_panels * nodes_per_panel);
        let mut push_panel = |a: f64, b: f64| {
            let c = 0.5 * (a + b);
            let h = 0.5 * (b - a);
            for (xi, wi) in gx.iter().zip(&gw) {
                nodes.push(c + h * xi);
                weights.push(h * wi);
            }
        };
        // left shells, innermost (closest to lo) first
        for j in (0..depth).rev() {
            let outer = lo + half * lambda.powi(j as i32);
            let inner = lo + half * lambda.powi(j as i32 + 1);
            push_panel(inner, outer);
        }
        // right shells, innermost (closest to hi) last
        for j in 0..depth {
            let outer = hi - half * lambda.powi(j as i32);
            let inner = hi - half * lambda.powi(j as i32 + 1);
            push_panel(outer, inner);
        }
        Axis {
            nodes,
            weights,
            nodes_per_panel,
            depth,
        }
    }

    pub fn unit(nodes_per_panel: usize, depth: usize, lambda: f64) -> Self {
        Axis::new(0.0, 1.0, nodes_per_panel, depth, lambda)
    }

    pub fn n_panels(&self) -> usize {
        2 * self.depth
    }
}

/// Outcome of integrating one level (value includes extrapolated tails).
#[derive(Debug, Clone, Copy)]
pub(crate) struct LevelOut<S> {
    pub value: S,
    /// Integral of |f|, used as the significance scale.
    pub abs: f64,
    /// Uncertainty attributed to the tail extrapolations.
    pub tail_err: f64,
    pub divergent: bool,
}

/// Geometric tail of a shell-sum sequence (ordered outermost to innermost).
///
/// Returns `(tail, err, divergent)`. The tail is `c_last * r / (1 - r)` with
/// `r` the last shell ratio, valid because shell sums of `x^c g(x)` are
/// asymptotically an exact geometric sequence. Ratios `|r| >= RHO_DIVERGENT`
/// with a significant innermost shell mean the tail does not converge.
pub(crate) fn shell_tail<S: Scalar>(shells: &[S], scale: f64) -> (S, f64, bool) {
    const RHO_TAIL: f64 = 0.95;
    const RHO_DIVERGENT: f64 = 0.995;
    let n = shells.len();
    if n < 3 {
        return (S::zero(), 0.0, false);
    }
    let c_last = shells[n - 1];
    let m_last = c_last.magnitude();
    let floor = 1e-13 * scale.max(1e-280);
    if m_last <= floor {
        return (S::zero(), 0.0, false);
    }
    let m_prev = shells[n - 2].magnitude();
    if m_prev <= floor {
        // isolated blip; report as uncertainty, not divergence
        return (S::zero(), m_last, false);
    }
    let rho = c_last / shells[n - 2];
    let rho_mag = rho.magnitude();
    if rho_mag >= RHO_DIVERGENT {
        return (S::zero(), m_last, true);
    }
    let rho_prev = if shells[n - 3].magnitude() > floor {
        shells[n - 2] / shells[n - 3]
    } else {
        rho
    };
    let tail = c_last * (rho / (S::one() - rho));
    let wobble = (rho - rho_prev).magnitude() / rho_mag.max(1e-9);
    let err = if rho_mag < RHO_TAIL {
        tail.magnitude() * (8.0 * wobble + 1e-3).min(1.0)
    } else {
        tail.magnitude()
    };
    (tail, err, false)
}

/// Integrate `f` over the axis, with tail extrapolation at both endpoints.
pub(crate) fn integrate_axis<S: Scalar>(axis: &Axis, f: impl Fn(f64) -> S) -> LevelOut<S> {
    let npp = axis.nodes_per_panel;
    let mut panel_sums: Vec<S> = Vec::with_capacity(axis.n_panels());
    let mut abs = 0.0;
    let mut value = S::zero();
    for p in 0..axis.n_panels() {
        let mut s = S::zero();
        for i in p * npp..(p + 1) * npp {
            let fx = f(axis.nodes[i]) * axis.weights[i];
            s = s + fx;
            abs += fx.magnitude();
        }
        value = value + s;
        panel_sums.push(s);
    }
    finish_level(axis, value, abs, &panel_sums)
}

/// Combine panel sums with the two endpoint tails.
pub(crate) fn finish_level<S: Scalar>(
    axis: &Axis,
    mut value: S,
    abs: f64,
    panel_sums: &[S],
) -> LevelOut<S> {
    let d = axis.depth;
    // left shells are panels d-1, d-2, .., 0 from outermost to innermost
    let left: Vec<S> = (0..d).map(|j| panel_sums[d - 1 - j]).collect();
    let right: Vec<S> = (0..d).map(|j| panel_sums[d + j]).collect();
    let (tl, el, dl) = shell_tail(&left, abs);
    let (tr, er, dr) = shell_tail(&right, abs);
    value = value + tl + tr;
    LevelOut {
        value,
        abs,
        tail_err: el + er,
        divergent: dl || dr,
    }
}

/// Integrate `f(u, v)` over the unit square with shell grading on both axes.
/// The inner (`u`) integral is tail-corrected per `v` node; inner tail
/// uncertainties and divergence flags are accumulated into the result.
pub(crate) fn integrate_square<S: Scalar>(
    ax_u: &Axis,
    ax_v: &Axis,
    f: impl Fn(f64, f64) -> S,
) -> LevelOut<S> {
    let npp = ax_v.nodes_per_panel;
    let mut panel_sums: Vec<S> = Vec::with_capacity(ax_v.n_panels());
    let mut value = S::zero();
    let mut abs = 0.0;
    let mut tail_err = 0.0;
    let mut divergent = false;
    for p in 0..ax_v.n_panels() {
        let mut s = S::zero();
        for i in p * npp..(p + 1) * npp {
            let v = ax_v.nodes[i];
            let wv = ax_v.weights[i];
            let inner = integrate_axis(ax_u, |u| f(u, v));
            s = s + inner.value * wv;
            abs += inner.abs * wv;
            tail_err += inner.tail_err * wv;
            divergent |= inner.divergent;
        }
        value = value + s;
        panel_sums.push(s);
    }
    let outer = finish_level(ax_v, value, abs, &panel_sums);
    LevelOut {
        value: outer.value,
        abs,
        tail_err: tail_err + outer.tail_err,
        divergent: divergent || outer.divergent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_covers_interval() {
        let ax = Axis::unit(6, 10, 0.125);
        let total: f64 = ax.weights.iter().sum();
        // missing mass is only the two stubs of width 0.5 * lambda^depth
        assert!((total - 1.0).abs() < 2.0 * 0.5 * 0.125f64.powi(10) + 1e-15);
        let smooth = integrate_axis(&ax, |x| x * x);
        assert!((smooth.value - 1.0 / 3.0).abs() < 1e-12);
        assert!(!smooth.divergent);
    }

    #[test]
    fn endpoint_singularity_resolved() {
        // int_0^1 x^{-0.9} dx = 10, a hard algebraic singularity
        let ax = Axis::unit(8, 12, 0.125);
        let out = integrate_axis(&ax, |x| x.powf(-0.9));
        assert!(!out.divergent);
        assert!(
            (out.value - 10.0).abs() < 1e-6 * 10.0,
            "got {} err {}",
            out.value,
            out.tail_err
        );
        // and at both ends: int_0^1 x^{-1/2}(1-x)^{-1/2} dx = pi
        let out = integrate_axis(&ax, |x| 1.0 / (x * (1.0 - x)).sqrt());
        assert!((out.value - core::f64::consts::PI).abs() < 1e-10);
    }

    #[test]
    fn log_divergence_is_flagged() {
        let ax = Axis::unit(8, 12, 0.125);
        let out = integrate_axis(&ax, |x| 1.0 / x);
        assert!(out.divergent, "1/x must be flagged divergent");
        let out = integrate_axis(&ax, |x| x.powf(-1.3));
        assert!(out.divergent);
        // near-divergent but convergent stays unflagged
        let out = integrate_axis(&ax, |x| x.powf(-0.95));
        assert!(!out.divergent);
        assert!((out.value - 20.0).abs() < 1e-4 * 20.0);
    }

    #[test]
    fn square_volume_of_triangle_region() {
        // int over U for k=1 of r1*r2 dr1 dr2 via u-substitution r1 = r2 u:
        // f(u, v) = v * (v u) * v = u v^3 -> integral 1/8
        let ax = Axis::unit(6, 10, 0.125);
        let out = integrate_square(&ax, &ax, |u, v| u * v * v * v);
        assert!((out.value - 0.125).abs() < 1e-12);
    }
}

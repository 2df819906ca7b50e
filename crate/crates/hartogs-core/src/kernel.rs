//! Closed-form Bergman kernel of `Omega_k`, an independent truncated-series
//! oracle, and two-sided diagonal envelope bounds with explicit constants.
//!
//! With `s = z1 conj(w1)` and `t = z2 conj(w2)`,
//!
//! ```text
//! K(z, w) = ( p_k(s) t^2 + q_k(s) t + s^k p_k(s) )
//!           / ( k pi^2 (1 - t)^2 (t - s^k)^2 )
//! ```
//!
//! where `p_k(s) = sum_{j=1}^{k-1} j (k-j) s^{j-1}` (empty sum = 0 for
//! `k = 1`) and `q_k(s) = sum_{j=1}^{k} (j^2 + (k-j)^2 s^k) s^{j-1}`.

use num_traits::Float;

use crate::domain::{self, DomainParam, Exponent, Point2C};
use crate::error::{Error, Result};
use crate::Complex64;

/// Evaluations closer than this to the singular set `{t = 1} U {t = s^k}`
/// are rejected rather than returned (catastrophic cancellation).
pub const SINGULAR_TOLERANCE: f64 = 1e-12;

/// The coefficient polynomials `(p_k(s), q_k(s))` by direct finite-sum
/// evaluation.
pub fn coefficient_polys(k: DomainParam, s: Complex64) -> (Complex64, Complex64) {
    let kk = k.k() as i64;
    let sk = s.powi(k.k() as i32);
    let mut p = Complex64::new(0.0, 0.0);
    let mut q = Complex64::new(0.0, 0.0);
    let mut s_pow = Complex64::new(1.0, 0.0); // s^{j-1}
    for j in 1..=kk {
        if j < kk {
            p += s_pow * (j * (kk - j)) as f64;
        }
        q += (Complex64::new((j * j) as f64, 0.0) + sk * ((kk - j) * (kk - j)) as f64) * s_pow;
        s_pow *= s;
    }
    (p, q)
}

/// Real-axis variant used on the diagonal.
fn coefficient_polys_re(k: DomainParam, s: f64) -> (f64, f64) {
    let kk = k.k() as i64;
    let sk = s.powi(k.k() as i32);
    let (mut p, mut q) = (0.0, 0.0);
    let mut s_pow = 1.0;
    for j in 1..=kk {
        if j < kk {
            p += (j * (kk - j)) as f64 * s_pow;
        }
        q += ((j * j) as f64 + (kk - j).pow(2) as f64 * sk) * s_pow;
        s_pow *= s;
    }
    (p, q)
}

/// Bergman kernel `K(z, w)` by the closed formula.
///
/// Both points must lie in `Omega_k`; evaluations within
/// [`SINGULAR_TOLERANCE`] of the singular set are rejected.
pub fn eval(k: DomainParam, z: &Point2C, w: &Point2C) -> Result<Complex64> {
    if !domain::contains(k, z) || !domain::contains(k, w) {
        return Err(Error::OutsideDomain);
    }
    let s = z.z1 * w.z1.conj();
    let t = z.z2 * w.z2.conj();
    eval_st(k, s, t)
}

/// Kernel as a function of the invariants `(s, t)`; exposed for angular
/// sweeps where `s, t` are built incrementally.
pub fn eval_st(k: DomainParam, s: Complex64, t: Complex64) -> Result<Complex64> {
    let sk = s.powi(k.k() as i32);
    let one_minus_t = Complex64::new(1.0, 0.0) - t;
    let t_minus_sk = t - sk;
    if one_minus_t.norm() < SINGULAR_TOLERANCE || t_minus_sk.norm() < SINGULAR_TOLERANCE {
        return Err(Error::SingularEvaluation);
    }
    let (p, q) = coefficient_polys(k, s);
    let numer = p * t * t + q * t + sk * p;
    let denom = one_minus_t.powi(2) * t_minus_sk.powi(2) * (k.k_f64() * PI2);
    Ok(numer / denom)
}

const PI2: f64 = core::f64::consts::PI * core::f64::consts::PI;

/// Diagonal value `K(z, z) > 0`, exactly `eval(k, z, z)`.
pub fn diagonal(k: DomainParam, z: &Point2C) -> Result<f64> {
    Ok(eval(k, z, z)?.re)
}

/// Diagonal value from the radial coordinates, by the equivalent real
/// formula. Caller must ensure `r1^k < r2 < 1`; no singularity guard.
/// This is the fast path used inside quadrature weights `K^{-alpha}(w, w)`.
pub fn diagonal_radial(k: DomainParam, r1: f64, r2: f64) -> f64 {
    let s = r1 * r1;
    let t = r2 * r2;
    let sigma = s.powi(k.k() as i32);
    let (p, q) = coefficient_polys_re(k, s);
    ((p * t + q) * t + sigma * p) / (k.k_f64() * PI2 * (1.0 - t).powi(2) * (t - sigma).powi(2))
}

/// Explicit envelope constants for the diagonal estimate
/// `c_lo * E(z) <= K(z,z) <= c_hi * E(z)` with
/// `E(z) = t / ((1-t)^2 (t-sigma)^2)`, `t = |z2|^2`, `sigma = |z1|^{2k}`.
///
/// Derived from term positivity: the numerator is at least `q_k >= 1` times
/// `t`, and at most `(2 p_k(1) + q_k(1)) t` since `t < 1` and `s^k < t` on
/// the diagonal. Hence `c_lo = 1/(k pi^2)` and
/// `c_hi = (2 p_k(1) + q_k(1))/(k pi^2)` (which simplifies to `k^2/pi^2`).
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DiagonalBoundConstants {
    pub c_lo: f64,
    pub c_hi: f64,
}

impl DiagonalBoundConstants {
    pub fn new(k: DomainParam) -> Self {
        let (p1, q1) = coefficient_polys_re(k, 1.0);
        DiagonalBoundConstants {
            c_lo: 1.0 / (k.k_f64() * PI2),
            c_hi: (2.0 * p1 + q1) / (k.k_f64() * PI2),
        }
    }

    /// Ratio `c_hi / c_lo = 2 p_k(1) + q_k(1) = k^3`.
    pub fn ratio(&self) -> f64 {
        self.c_hi / self.c_lo
    }
}

/// The diagonal envelope `E(z)` itself.
pub fn diagonal_envelope(k: DomainParam, z: &Point2C) -> f64 {
    let t = z.z2.norm_sqr();
    let sigma = z.z1.norm_sqr().powi(k.k() as i32);
    t / ((1.0 - t).powi(2) * (t - sigma).powi(2))
}

/// Two-sided bounds `(lo, hi)` with `lo <= K(z,z) <= hi`.
pub fn diagonal_bounds(k: DomainParam, z: &Point2C) -> Result<(f64, f64)> {
    if !domain::contains(k, z) {
        return Err(Error::OutsideDomain);
    }
    let e = diagonal_envelope(k, z);
    let c = DiagonalBoundConstants::new(k);
    Ok((c.c_lo * e, c.c_hi * e))
}

/// Off-diagonal envelope `c_hi |t| / (|1-t|^2 |t - s^k|^2) >= |K(z,w)|`,
/// with the same constant (term-by-term positivity of `p_k`, `q_k` plus
/// `|s| < 1`, `|s|^k < |t| < 1`).
pub fn envelope_abs(k: DomainParam, z: &Point2C, w: &Point2C) -> f64 {
    let s = z.z1 * w.z1.conj();
    let t = z.z2 * w.z2.conj();
    let sk = s.powi(k.k() as i32);
    let c = DiagonalBoundConstants::new(k);
    c.c_hi * t.norm() / ((Complex64::new(1.0, 0.0) - t).norm_sqr() * (t - sk).norm_sqr())
}

/// Truncated reproducing-series oracle
/// `sum_{beta in B, beta1 <= cap1, beta2 <= cap2} s^{beta1} t^{beta2} / N(beta)`,
/// where `N` is the closed-form monomial norm. Independent of [`eval`]:
/// it uses only the orthogonal-basis norms. The `beta2` lower limit is the
/// basis-set bound `-1 - floor(beta1 / k)` for each `beta1`.
pub fn series_partial(
    k: DomainParam,
    z: &Point2C,
    w: &Point2C,
    cap1: i32,
    cap2: i32,
) -> Result<Complex64> {
    if cap1 < 0 || cap2 < 0 {
        return Err(Error::InvalidParameter("series caps must be >= 0"));
    }
    if !domain::contains(k, z) || !domain::contains(k, w) {
        return Err(Error::OutsideDomain);
    }
    let s = z.z1 * w.z1.conj();
    let t = z.z2 * w.z2.conj();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut s_pow = Complex64::new(1.0, 0.0);
    for b1 in 0..=cap1 {
        let b2_min = domain::min_beta2(k, b1);
        let mut t_pow = t.powi(b2_min);
        for b2 in b2_min..=cap2 {
            let n = domain::monomial_norm_sq(k, Exponent::new(b1, b2))
                .expect("enumeration stays inside the basis set");
            sum += s_pow * t_pow / n;
            t_pow *= t;
        }
        s_pow *= s;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn k(v: u32) -> DomainParam {
        DomainParam::new(v).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn coefficient_poly_examples() {
        // k = 1: empty p, q forced to 1
        let (p, q) = coefficient_polys(k(1), c(0.37, -2.1));
        assert_eq!(p, c(0.0, 0.0));
        assert_eq!(q, c(1.0, 0.0));
        // k = 2: p = 1, q = 1 + 4 s + s^2
        let (p, q) = coefficient_polys(k(2), c(0.0, 0.0));
        assert_eq!(p, c(1.0, 0.0));
        assert_eq!(q, c(1.0, 0.0));
        let (p, q) = coefficient_polys(k(2), c(1.0, 0.0));
        assert_eq!(p, c(1.0, 0.0));
        assert!((q - c(6.0, 0.0)).norm() < 1e-15);
        // closed forms p_k(1) = k(k^2-1)/6, q_k(1) = k(2k^2+1)/3
        for kk in 1..=6u32 {
            let (p, q) = coefficient_polys_re(k(kk), 1.0);
            let kf = kk as f64;
            assert!((p - kf * (kf * kf - 1.0) / 6.0).abs() < 1e-12);
            assert!((q - kf * (2.0 * kf * kf + 1.0) / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn kernel_closed_form_anchors() {
        // k=1, z=w=(0, 0.5): K = 64/(9 pi^2)
        let z = Point2C::from_re(0.0, 0.5);
        let v = eval(k(1), &z, &z).unwrap();
        assert!((v.re - 64.0 / (9.0 * PI * PI)).abs() < 1e-14);
        assert!(v.im.abs() < 1e-16);
        // k=2, z=w=(0, 0.5): K = 40/(9 pi^2)
        let v = eval(k(2), &z, &z).unwrap();
        assert!((v.re - 40.0 / (9.0 * PI * PI)).abs() < 1e-14);
        // z1 = w1 = 0 reduction: (p(0) t^2 + q(0) t)/(k pi^2 (1-t)^2 t^2), real positive
        for kk in [1u32, 2, 3, 5] {
            let z = Point2C::from_re(0.0, 0.3);
            let w = Point2C::from_re(0.0, 0.7);
            let t = c(0.21, 0.0);
            let (p0, q0) = coefficient_polys(k(kk), c(0.0, 0.0));
            let expect = (p0 * t * t + q0 * t)
                / (kk as f64 * PI * PI * (c(1.0, 0.0) - t).powi(2) * t.powi(2));
            let v = eval(k(kk), &z, &w).unwrap();
            assert!((v - expect).norm() < 1e-13 * expect.norm());
            assert!(v.re > 0.0 && v.im.abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_outside_and_singular() {
        let z = Point2C::from_re(0.0, 0.5);
        let out = Point2C::from_re(0.8, 0.5);
        assert_eq!(eval(k(1), &z, &out), Err(Error::OutsideDomain));
        // singular guard on the invariant form
        assert_eq!(
            eval_st(k(1), c(0.0, 0.0), c(1.0 - 1e-14, 0.0)),
            Err(Error::SingularEvaluation)
        );
        assert_eq!(
            eval_st(k(2), c(0.5, 0.0), c(0.25 + 1e-14, 0.0)),
            Err(Error::SingularEvaluation)
        );
    }

    #[test]
    fn diagonal_increases_toward_boundary() {
        let mut prev = 0.0;
        for m in 1..=12 {
            let z = Point2C::from_re(0.0, 1.0 - 0.5f64.powi(m));
            let v = diagonal(k(2), &z).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn diagonal_matches_eval_and_radial_path() {
        for kk in [1u32, 2, 3] {
            for &(r1, r2) in &[(0.1, 0.4), (0.5, 0.6), (0.0, 0.9), (0.7, 0.8)] {
                if r1.powi(kk as i32) >= r2 {
                    continue;
                }
                let z = Point2C::from_re(r1, r2);
                let d = diagonal(k(kk), &z).unwrap();
                assert_eq!(d, eval(k(kk), &z, &z).unwrap().re);
                let dr = diagonal_radial(k(kk), r1, r2);
                assert!((d - dr).abs() <= 1e-13 * d);
                assert!(d > 0.0);
            }
        }
    }

    #[test]
    fn envelope_constants() {
        // k=1: c_lo = c_hi = 1/pi^2, bounds are exact
        let c1 = DiagonalBoundConstants::new(k(1));
        assert!((c1.c_lo - 1.0 / (PI * PI)).abs() < 1e-16);
        assert_eq!(c1.c_lo, c1.c_hi);
        // k=2: c_lo = 1/(2 pi^2), c_hi = (2 + 6)/(2 pi^2) = 4/pi^2
        let c2 = DiagonalBoundConstants::new(k(2));
        assert!((c2.c_lo - 0.5 / (PI * PI)).abs() < 1e-16);
        assert!((c2.c_hi - 4.0 / (PI * PI)).abs() < 1e-14);
        // ratio is k^3
        for kk in 1..=5u32 {
            let cc = DiagonalBoundConstants::new(k(kk));
            assert!((cc.ratio() - (kk as f64).powi(3)).abs() < 1e-10);
        }
    }

    #[test]
    fn two_sided_envelope_on_samples() {
        for kk in [1u32, 2, 3] {
            let pts = domain::sample_interior(k(kk), 500, 11, 0.0).unwrap();
            for z in pts {
                let kd = diagonal(k(kk), &z).unwrap();
                let (lo, hi) = diagonal_bounds(k(kk), &z).unwrap();
                assert!(lo <= kd * (1.0 + 1e-12), "k={kk}");
                assert!(kd <= hi * (1.0 + 1e-12), "k={kk}");
                if kk == 1 {
                    assert!((kd / lo - 1.0).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn hermitian_symmetry_and_offdiag_envelope() {
        for kk in [1u32, 2] {
            let zs = domain::sample_interior(k(kk), 40, 3, 0.05).unwrap();
            let ws = domain::sample_interior(k(kk), 40, 4, 0.05).unwrap();
            for (z, w) in zs.iter().zip(&ws) {
                let a = eval(k(kk), z, w).unwrap();
                let b = eval(k(kk), w, z).unwrap();
                assert!((a - b.conj()).norm() <= 1e-12 * a.norm().max(1.0));
                assert!(a.norm() <= envelope_abs(k(kk), z, w) * (1.0 + 1e-12));
            }
        }
    }

    #[test]
    fn series_oracle_agrees_with_closed_form() {
        // interior points with margin 0.2: relative 1e-8 at caps (40, 40)
        let z = Point2C::from_re(0.0, 0.5);
        let v = eval(k(1), &z, &z).unwrap();
        let s = series_partial(k(1), &z, &z, 40, 40).unwrap();
        assert!((s - v).norm() < 1e-8 * v.norm());

        for kk in [1u32, 2, 3] {
            let zs = domain::sample_interior(k(kk), 10, 21, 0.2).unwrap();
            let ws = domain::sample_interior(k(kk), 10, 22, 0.2).unwrap();
            for (z, w) in zs.iter().zip(&ws) {
                let kv = eval(k(kk), z, w).unwrap();
                let sv = series_partial(k(kk), z, w, 60, 60).unwrap();
                assert!(
                    (sv - kv).norm() <= 1e-8 * kv.norm(),
                    "k={kk}: rel {}",
                    (sv - kv).norm() / kv.norm()
                );
            }
        }
    }

    #[test]
    fn series_truncation_error_decreases_in_caps() {
        let z = Point2C::from_re(0.2, 0.6);
        let w = Point2C::from_re(0.1, 0.55);
        let exact = eval(k(2), &z, &w).unwrap();
        let mut prev = f64::INFINITY;
        for cap in [4, 8, 16, 32] {
            let s = series_partial(k(2), &z, &w, cap, cap).unwrap();
            let err = (s - exact).norm();
            assert!(err <= prev + 1e-15, "cap={cap}: {err} vs {prev}");
            prev = err;
        }
        assert!(prev < 1e-10 * exact.norm());
    }

    #[test]
    fn minimal_caps_partial_sum_is_exact() {
        // caps (0,0) includes exactly beta = (0,-1) and (0,0):
        // sum = t^{-1}/(k pi^2) + 1/Vol
        for kk in [1u32, 3] {
            let z = Point2C::from_re(0.0, 0.4);
            let w = Point2C::from_re(0.0, 0.8);
            let t = z.z2 * w.z2.conj();
            let expect = t.powi(-1) / (kk as f64 * PI * PI)
                + Complex64::new(1.0 / k(kk).volume(), 0.0);
            let s = series_partial(k(kk), &z, &w, 0, 0).unwrap();
            assert!((s - expect).norm() < 1e-15);
        }
    }
}

//! Angular integrals of powers of the Poisson-type kernel.

use num_traits::Float;

/// `int_0^{2pi} |1 - rho e^{i theta}|^{-2a} d theta` for `0 <= rho < 1`.
///
/// Expanding both conjugate factors binomially and integrating term by term
/// gives `2 pi * sum_n [ (a)_n / n! ]^2 rho^{2n}`. For `a = 1` and `a = 2`
/// the sum closes; otherwise it is evaluated adaptively, using the Euler
/// transform `(1-x)^{1-2a} sum_n [ (1-a)_n / n! ]^2 x^n` for `a >= 1`
/// (whose terms decay), with a geometric tail bound as stopping rule.
///
/// Returns `(value, error_estimate)`.
pub fn poisson_power_integral(a: f64, rho: f64) -> (f64, f64) {
    debug_assert!((0.0..1.0).contains(&rho));
    let tau = core::f64::consts::TAU;
    let x = rho * rho;
    if rho == 0.0 {
        return (tau, 0.0);
    }
    if a == 0.0 {
        return (tau, 0.0);
    }
    if a == 1.0 {
        return (tau / (1.0 - x), 0.0);
    }
    if a == 2.0 {
        return (tau * (1.0 + x) / (1.0 - x).powi(3), 0.0);
    }
    let (base, factor) = if a >= 1.0 {
        (1.0 - a, (1.0 - x).powf(1.0 - 2.0 * a))
    } else {
        (a, 1.0)
    };
    // sum over n of (c_n)^2 x^n with c_{n+1} = c_n (base + n)/(n + 1)
    let mut coeff = 1.0f64;
    let mut xp = 1.0f64;
    let mut sum = 1.0f64;
    let mut err;
    let tol = 1e-12;
    let mut n = 0usize;
    loop {
        coeff *= (base + n as f64) / (n as f64 + 1.0);
        xp *= x;
        let term = coeff * coeff * xp;
        sum += term;
        n += 1;
        // geometric tail bound (term ratios tend to x from values <= ~1)
        err = term.abs() * x / (1.0 - x);
        if err <= tol * sum.abs() || n >= 5_000_000 {
            break;
        }
    }
    (tau * factor * sum, tau * factor * err)
}

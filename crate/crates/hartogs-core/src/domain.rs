//! Geometry of the fat Hartogs triangle `Omega_k`, its monomial basis and
//! deterministic interior sampling.
//!
//! `Omega_k = { (z1, z2) in C^2 : |z1|^k < |z2| < 1 }` for an integer
//! `k >= 1`. All inequalities are strict: the domain is open and boundary
//! points are outside.

use alloc::vec::Vec;

use num_traits::Float;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::Complex64;

/// The integer exponent `k` defining `Omega_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DomainParam(u32);

impl DomainParam {
    pub fn new(k: u32) -> Result<Self> {
        if k >= 1 {
            Ok(DomainParam(k))
        } else {
            Err(Error::InvalidParameter("k must satisfy k >= 1"))
        }
    }

    #[inline]
    pub fn k(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn k_f64(self) -> f64 {
        self.0 as f64
    }

    /// `Vol(Omega_k) = pi^2 k / (k + 1)`.
    pub fn volume(self) -> f64 {
        let k = self.k_f64();
        core::f64::consts::PI.powi(2) * k / (k + 1.0)
    }
}

/// A point `(z1, z2)` of C^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2C {
    pub z1: Complex64,
    pub z2: Complex64,
}

impl Point2C {
    pub fn new(z1: Complex64, z2: Complex64) -> Self {
        Point2C { z1, z2 }
    }

    /// Point with real coordinates `(x1, x2)`.
    pub fn from_re(x1: f64, x2: f64) -> Self {
        Point2C {
            z1: Complex64::new(x1, 0.0),
            z2: Complex64::new(x2, 0.0),
        }
    }

    /// Moduli `(|z1|, |z2|)`.
    pub fn radial(&self) -> RadialPoint {
        RadialPoint {
            r1: self.z1.norm(),
            r2: self.z2.norm(),
        }
    }
}

/// Radial part `(r1, r2) = (|z1|, |z2|)` of a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialPoint {
    pub r1: f64,
    pub r2: f64,
}

impl RadialPoint {
    /// Interior of the radial shadow `U = { 0 <= r1, r1^k < r2 < 1 }`.
    pub fn is_interior(&self, k: DomainParam) -> bool {
        self.r1 >= 0.0 && self.r1.powi(k.k() as i32) < self.r2 && self.r2 < 1.0
    }
}

/// An exponent pair `(beta1, beta2)` indexing the monomial `z1^b1 z2^b2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exponent {
    pub beta1: i32,
    pub beta2: i32,
}

impl Exponent {
    pub fn new(beta1: i32, beta2: i32) -> Self {
        Exponent { beta1, beta2 }
    }
}

/// Strict membership test `|z1|^k < |z2| < 1`.
pub fn contains(k: DomainParam, z: &Point2C) -> bool {
    z.radial().is_interior(k)
}

/// Defect function `r(z) = (|z2|^2 - |z1|^{2k}) (|z2|^2 - 1)`.
///
/// Kept signed (negative on the interior); callers take `|r(z)|`.
pub fn defect(k: DomainParam, z: &Point2C) -> f64 {
    let s1 = z.z1.norm_sqr();
    let s2 = z.z2.norm_sqr();
    (s2 - s1.powi(k.k() as i32)) * (s2 - 1.0)
}

/// Membership of `beta` in the basis set `B`:
/// `beta1 >= 0` and `beta1 + k (beta2 + 1) > -1`.
pub fn in_basis_set(k: DomainParam, beta: Exponent) -> bool {
    beta.beta1 >= 0 && beta.beta1 as i64 + k.k() as i64 * (beta.beta2 as i64 + 1) > -1
}

/// Smallest `beta2` admissible for a given `beta1 >= 0`,
/// i.e. `-1 - floor(beta1 / k)`.
pub fn min_beta2(k: DomainParam, beta1: i32) -> i32 {
    debug_assert!(beta1 >= 0);
    -1 - beta1 / k.k() as i32
}

/// Squared `L^2(Omega_k)` norm of the monomial `z^beta`, in closed form:
///
/// `N(beta) = 4 pi^2 k / ((2 b1 + 2) (2 k (b2 + 1) + 2 b1 + 2))`,
///
/// obtained by iterated one-dimensional integration over the radial shadow.
/// Rejects exponents outside the basis set (the integral diverges there).
pub fn monomial_norm_sq(k: DomainParam, beta: Exponent) -> Result<f64> {
    if !in_basis_set(k, beta) {
        return Err(Error::ExponentOutsideBasis);
    }
    let kf = k.k_f64();
    let b1 = beta.beta1 as f64;
    let b2 = beta.beta2 as f64;
    let pi2 = core::f64::consts::PI.powi(2);
    Ok(4.0 * pi2 * kf / ((2.0 * b1 + 2.0) * (2.0 * kf * (b2 + 1.0) + 2.0 * b1 + 2.0)))
}

/// Absolute moment `int |z1|^{e1} |z2|^{e2} dV` over `Omega_k`, in closed
/// form, for real exponents with `e1 > -2` and `k (e2 + 2) + e1 + 2 > 0`.
/// Generalises [`monomial_norm_sq`] (`N(beta)` is the moment at
/// `(2 b1, 2 b2)`).
pub fn abs_moment(k: DomainParam, e1: f64, e2: f64) -> Result<f64> {
    let kf = k.k_f64();
    if e1 <= -2.0 || kf * (e2 + 2.0) + e1 + 2.0 <= 0.0 {
        return Err(Error::ExponentOutsideBasis);
    }
    let pi2 = core::f64::consts::PI.powi(2);
    Ok(4.0 * pi2 * kf / ((e1 + 2.0) * (kf * (e2 + 2.0) + e1 + 2.0)))
}

/// Deterministic seeded interior points.
///
/// Each returned point satisfies [`contains`] and keeps the boundary
/// distance factors `1 - |z2|` and `|z2| - |z1|^k` at least `margin * |z2|`.
/// Sampling is radial: `r2` is drawn first, then `r1` inside
/// `(0, ((1 - margin) r2)^{1/k})`, then independent uniform angles.
pub fn sample_interior(
    k: DomainParam,
    count: usize,
    seed: u64,
    margin: f64,
) -> Result<Vec<Point2C>> {
    if count == 0 {
        return Err(Error::InvalidParameter("count must be >= 1"));
    }
    if !(0.0..0.5).contains(&margin) {
        return Err(Error::InvalidParameter("margin must lie in [0, 1/2)"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r2_max = 1.0 / (1.0 + margin);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let r2: f64 = rng.random::<f64>() * r2_max;
        if r2 <= 0.0 {
            continue;
        }
        let r1_max = ((1.0 - margin) * r2).powf(1.0 / k.k_f64());
        let r1: f64 = rng.random::<f64>() * r1_max;
        let th1 = rng.random::<f64>() * core::f64::consts::TAU;
        let th2 = rng.random::<f64>() * core::f64::consts::TAU;
        let p = Point2C::new(
            Complex64::from_polar(r1, th1),
            Complex64::from_polar(r2, th2),
        );
        if contains(k, &p) {
            out.push(p);
        }
    }
    Ok(out)
}

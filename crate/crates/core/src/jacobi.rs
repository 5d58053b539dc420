//! Legendre elliptic integrals and the Jacobi functions `am`, `sn`, `cn`,
//! `dn` for a modulus in `[0, 1]`.
//!
//! Every routine accepts a negative modulus and uses its magnitude, since
//! all of these depend on `k` only through `k²`.
//!
//! The Jacobi functions come from the descending Landen (AGM) recursion.
//! The argument is first folded into `[-K, K]` using the period `2K` of the
//! amplitude's periodic part, so the recursion only ever sees a bounded
//! argument and `am` stays the continuous, unbounded branch.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::carlson::{rd, rf};
use crate::error::{domain, Result};

/// `sn`, `cn` and `dn` evaluated together at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiTriple {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

/// Complete integrals `K(k)` and `E(k)` of the first and second kind.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticPair {
    pub k: f64,
    pub e: f64,
}

impl EllipticPair {
    /// Both complete integrals for `|k| < 1`.
    pub fn new(k: f64) -> Result<Self> {
        Ok(Self {
            k: complete_k(k)?,
            e: complete_e(k)?,
        })
    }

    /// `E/K`, the mean value of `dn²` over a period.
    pub fn ratio(&self) -> f64 {
        self.e / self.k
    }
}

pub(crate) fn standard_modulus(k: f64) -> Result<f64> {
    let k = k.abs();
    if !(k <= 1.0) {
        return domain(format!("modulus must satisfy |k| <= 1, got {k}"));
    }
    Ok(k)
}

/// `1 − k²` without cancellation near `k = 1`.
#[inline]
pub(crate) fn complementary_sq(k: f64) -> f64 {
    (1.0 - k) * (1.0 + k)
}

/// Complete integral of the first kind `K(k) = RF(0, 1−k², 1)`.
///
/// Diverges at `|k| = 1`, which is reported as a domain error.
pub fn complete_k(k: f64) -> Result<f64> {
    let k = standard_modulus(k)?;
    if k == 1.0 {
        return domain("K(k) diverges at |k| = 1");
    }
    if k == 0.0 {
        return Ok(FRAC_PI_2);
    }
    rf(0.0, complementary_sq(k), 1.0)
}

/// Complete integral of the second kind `E(k)`, defined on `|k| <= 1`.
pub fn complete_e(k: f64) -> Result<f64> {
    let k = standard_modulus(k)?;
    if k == 1.0 {
        return Ok(1.0);
    }
    if k == 0.0 {
        return Ok(FRAC_PI_2);
    }
    let kc2 = complementary_sq(k);
    Ok(rf(0.0, kc2, 1.0)? - k * k / 3.0 * rd(0.0, kc2, 1.0)?)
}

/// Incomplete integral of the second kind, `E(φ,k) = ∫₀^φ √(1 − k² sin²θ) dθ`.
///
/// Any finite `φ` is accepted: `φ` is reduced to `[-π/2, π/2]` and the
/// quasi-periodicity `E(φ + π, k) = E(φ, k) + 2E(k)` accounts for the rest.
pub fn incomplete_e(phi: f64, k: f64) -> Result<f64> {
    let k = standard_modulus(k)?;
    if !phi.is_finite() {
        return domain(format!("amplitude must be finite, got {phi}"));
    }
    let turns = (phi / PI).round();
    let rest = phi - turns * PI;
    let body = legendre_e_principal(rest, k)?;
    if turns == 0.0 {
        return Ok(body);
    }
    Ok(2.0 * turns * complete_e(k)? + body)
}

/// `E(φ,k)` for `|φ| <= π/2` and `0 <= k <= 1`.
pub(crate) fn legendre_e_principal(phi: f64, k: f64) -> Result<f64> {
    let (s, c) = phi.sin_cos();
    if k == 1.0 {
        return Ok(s);
    }
    if s == 0.0 {
        return Ok(0.0);
    }
    let ks = k * s;
    let q = (1.0 - ks) * (1.0 + ks);
    let c2 = c * c;
    Ok(s * (rf(c2, q, 1.0)? - ks * ks / 3.0 * rd(c2, q, 1.0)?))
}

/// Argument folded into the primary cell `[-K, K]`, together with the
/// amplitude there.
///
/// `x = 2·periods·K + rest` and `am(x) = periods·π + phi`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Reduced {
    pub periods: f64,
    pub rest: f64,
    pub phi: f64,
}

const AGM_MAX_STEPS: usize = 64;

/// Descending Landen sequence for `0 < k < 1`: `aₙ`, `cₙ`, and `K = π/(2a_N)`.
struct Landen {
    a: [f64; AGM_MAX_STEPS],
    c: [f64; AGM_MAX_STEPS],
    steps: usize,
    quarter_period: f64,
}

impl Landen {
    fn new(k: f64) -> Self {
        let mut a = [0.0; AGM_MAX_STEPS];
        let mut c = [0.0; AGM_MAX_STEPS];
        a[0] = 1.0;
        c[0] = k;
        let mut b = complementary_sq(k).sqrt();
        let mut n = 0;
        while c[n].abs() > f64::EPSILON * a[n] && n + 1 < AGM_MAX_STEPS {
            a[n + 1] = 0.5 * (a[n] + b);
            c[n + 1] = 0.5 * (a[n] - b);
            b = (a[n] * b).sqrt();
            n += 1;
        }
        Self {
            a,
            c,
            steps: n,
            quarter_period: FRAC_PI_2 / a[n],
        }
    }

    /// Amplitude for `|x| <= K`.
    fn amplitude(&self, x: f64) -> f64 {
        let n = self.steps;
        let mut phi = 2f64.powi(n as i32) * self.a[n] * x;
        for j in (1..=n).rev() {
            phi = 0.5 * (phi + (self.c[j] / self.a[j] * phi.sin()).asin());
        }
        phi
    }
}

/// Fold `x` into `[-K, K]` for `0 <= k < 1`, returning the reduced amplitude.
pub(crate) fn reduce(x: f64, k: f64) -> Reduced {
    if k == 0.0 {
        let periods = (x / PI).round();
        let rest = x - periods * PI;
        return Reduced { periods, rest, phi: rest };
    }
    let landen = Landen::new(k);
    let half_period = 2.0 * landen.quarter_period;
    let periods = (x / half_period).round();
    let rest = x - periods * half_period;
    Reduced {
        periods,
        rest,
        phi: landen.amplitude(rest),
    }
}

fn check_argument(x: f64) -> Result<()> {
    if !x.is_finite() {
        return domain(format!("argument must be finite, got {x}"));
    }
    Ok(())
}

/// Gudermannian function, the amplitude at `k = 1`.
fn gudermannian(x: f64) -> f64 {
    2.0 * (0.5 * x).tanh().atan()
}

/// Jacobi amplitude `am(x,k)`, the continuous branch with `am(K,k) = π/2`.
pub fn amplitude(x: f64, k: f64) -> Result<f64> {
    let k = standard_modulus(k)?;
    check_argument(x)?;
    if k == 1.0 {
        return Ok(gudermannian(x));
    }
    if k == 0.0 {
        return Ok(x);
    }
    let r = reduce(x, k);
    Ok(r.periods * PI + r.phi)
}

/// Jacobi `sn`, `cn`, `dn` at `(x, k)`.
///
/// `k = 1` uses the hyperbolic limits `sn = tanh`, `cn = dn = sech`.
pub fn sncndn(x: f64, k: f64) -> Result<JacobiTriple> {
    let k = standard_modulus(k)?;
    check_argument(x)?;
    if k == 1.0 {
        let sech = 1.0 / x.cosh();
        return Ok(JacobiTriple {
            sn: x.tanh(),
            cn: sech,
            dn: sech,
        });
    }
    let r = reduce(x, k);
    let (mut sn, mut cn) = r.phi.sin_cos();
    if r.periods.rem_euclid(2.0) == 1.0 {
        sn = -sn;
        cn = -cn;
    }
    // dn² = k'² + k² cn² keeps full relative accuracy when dn ≈ k'
    let dn = (complementary_sq(k) + k * k * cn * cn).sqrt();
    Ok(JacobiTriple { sn, cn, dn })
}

//! Epsilon and zeta for real moduli `|k| > 1` and pure imaginary moduli `ik`.
//!
//! Real `k > 1` reduces to the reciprocal modulus `1/k` through
//! `dn(x,k) = cn(kx, 1/k)`:
//!
//! ```text
//! ε(x,k) = k·ε(kx, 1/k) + (1 − k²)·x
//! ```
//!
//! `K(k)` and `E(k)` are complex there, so `Z(x,k)` is complex. Its real
//! part is `k·Z(kx,1/k)` plus a linear term and its imaginary part is
//! linear in `x`. Both involve `1/k` and its complement
//! `1/k' = √(1 − 1/k²)`.
//!
//! Imaginary `ik` reduces to `k₁ = k/√(1+k²)`, `k₁' = 1/√(1+k²)` through
//! `dn(x,ik) = 1/dn(x/k₁', k₁)`:
//!
//! ```text
//! ε(x,ik) = E(k₁)/(k₁'²K(k₁))·x + Z(x/k₁' + K(k₁), k₁)/k₁'
//! Z(x,ik) = Z(x/k₁' + K(k₁), k₁)/k₁'
//! ```
//!
//! The sign of a real modulus (or of the imaginary coefficient) never
//! matters: every function here depends on `k²`.

use std::fmt;

use num_complex::Complex64;

use crate::epsilon_zeta::{epsilon, zeta, zeta_shift_quarter_period};
use crate::error::{domain, Result};
use crate::jacobi::EllipticPair;

/// A complex result. Only `Z(x,k)` for real `|k| > 1` has a nonzero
/// imaginary part.
pub type ComplexValue = Complex64;

/// Moduli in `(1, 1 + NEAR_UNIT_GAP)` are rejected by [`Modulus::real`]:
/// `K(1/k)` is at the edge of its logarithmic divergence there.
pub const NEAR_UNIT_GAP: f64 = 1e-12;

/// The three families of moduli handled here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// Real `k ∈ [0, 1]`.
    Standard,
    /// Real `k > 1`.
    LargeReal,
    /// Pure imaginary `i·k`, `k > 0`.
    PureImaginary,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Standard => "standard",
            Regime::LargeReal => "large_real",
            Regime::PureImaginary => "pure_imaginary",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A validated modulus: its regime and its (non-negative) magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus {
    regime: Regime,
    k: f64,
}

impl Modulus {
    /// Classify a real modulus. The sign is dropped; `|k| = 1` stays in the
    /// standard regime.
    pub fn real(k: f64) -> Result<Self> {
        if !k.is_finite() {
            return domain(format!("modulus must be finite, got {k}"));
        }
        let k = k.abs();
        if k <= 1.0 {
            return Ok(Self { regime: Regime::Standard, k });
        }
        if k < 1.0 + NEAR_UNIT_GAP {
            return domain(format!(
                "modulus {k} lies within {NEAR_UNIT_GAP:e} above 1, where K(1/k) is numerically singular"
            ));
        }
        Ok(Self { regime: Regime::LargeReal, k })
    }

    /// The imaginary modulus `i·k`. `k = 0` is the standard modulus 0.
    pub fn imaginary(k: f64) -> Result<Self> {
        if !k.is_finite() {
            return domain(format!("modulus must be finite, got {k}"));
        }
        let k = k.abs();
        if k == 0.0 {
            return Ok(Self { regime: Regime::Standard, k });
        }
        Ok(Self { regime: Regime::PureImaginary, k })
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    /// Magnitude `|k|` (for `PureImaginary`, the real coefficient of `i`).
    pub fn magnitude(&self) -> f64 {
        self.k
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.regime {
            Regime::PureImaginary => write!(f, "{}i", self.k),
            _ => write!(f, "{}", self.k),
        }
    }
}

/// Choice of sheet for the complex continuation to real `k > 1`.
///
/// `Lower` gives `Im Z(x,k) < 0` for `x > 0`. It corresponds to
/// `K(k) = (K(1/k) − i·K(1/k'))/k` and `Im E(k) > 0`, and is the value
/// obtained as the limit from `Im k² > 0`. `Upper` is the complex conjugate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Branch {
    #[default]
    Lower,
    Upper,
}

impl Branch {
    /// Sign carried by `Im E(k)` and `Im(E/K)`.
    fn sign(self) -> f64 {
        match self {
            Branch::Lower => 1.0,
            Branch::Upper => -1.0,
        }
    }
}

/// Moduli `k₁ = k/√(1+k²)` and `k₁' = 1/√(1+k²)` attached to `ik`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedModuli {
    pub k1: f64,
    pub k1p: f64,
}

impl DerivedModuli {
    pub fn new(k: f64) -> Result<Self> {
        if !k.is_finite() || k <= 0.0 {
            return domain(format!("imaginary modulus coefficient must be positive, got {k}"));
        }
        let h = 1f64.hypot(k);
        Ok(Self { k1: k / h, k1p: 1.0 / h })
    }
}

/// `k' = k/√(k²−1)` for `k > 1`. Its reciprocal is the complementary
/// modulus of `1/k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReciprocalCompanion {
    pub kprime: f64,
}

impl ReciprocalCompanion {
    pub fn new(k: f64) -> Result<Self> {
        check_large(k)?;
        Ok(Self {
            kprime: k / ((k - 1.0) * (k + 1.0)).sqrt(),
        })
    }

    /// `1/k' = √((k−1)(k+1))/k`, computed without forming `k'`.
    fn inverse_of(k: f64) -> f64 {
        ((k - 1.0) * (k + 1.0)).sqrt() / k
    }
}

fn check_large(k: f64) -> Result<()> {
    if !k.is_finite() || k <= 1.0 {
        return domain(format!("expected a real modulus k > 1, got {k}"));
    }
    Ok(())
}

fn check_argument(x: f64) -> Result<()> {
    if !x.is_finite() {
        return domain(format!("argument must be finite, got {x}"));
    }
    Ok(())
}

/// Complete integrals at `1/k` and at its complement `1/k'`.
struct ReciprocalPairs {
    inv: EllipticPair,
    comp: EllipticPair,
}

impl ReciprocalPairs {
    fn new(k: f64) -> Result<Self> {
        Ok(Self {
            inv: EllipticPair::new(1.0 / k)?,
            comp: EllipticPair::new(ReciprocalCompanion::inverse_of(k))?,
        })
    }

    fn norm(&self) -> f64 {
        self.inv.k * self.inv.k + self.comp.k * self.comp.k
    }

    /// `E(1/k)/K(1/k) + E(1/k')/K(1/k') − 1`.
    fn bracket(&self) -> f64 {
        self.inv.ratio() + self.comp.ratio() - 1.0
    }
}

/// `ε(x,k)` for real `k > 1`, through `k·ε(kx, 1/k) + (1 − k²)·x`.
pub fn epsilon_large_real(x: f64, k: f64) -> Result<f64> {
    check_large(k)?;
    check_argument(x)?;
    Ok(k * epsilon(k * x, 1.0 / k)? + (1.0 - k * k) * x)
}

/// `ε(x,k)` for real `k > 1` in its linear-plus-periodic form,
/// `[k²E(1/k)/K(1/k) + 1 − k²]·x + k·Z(kx, 1/k)`.
///
/// Same value as [`epsilon_large_real`] by a different route.
pub fn epsilon_large_real_linear_form(x: f64, k: f64) -> Result<f64> {
    check_large(k)?;
    check_argument(x)?;
    let inv = EllipticPair::new(1.0 / k)?;
    let slope = k * k * inv.ratio() + 1.0 - k * k;
    Ok(slope * x + k * zeta(k * x, 1.0 / k)?)
}

/// Complex ratio `E(k)/K(k)` for real `k > 1`.
pub fn ek_ratio_large_real(k: f64, branch: Branch) -> Result<ComplexValue> {
    check_large(k)?;
    let p = ReciprocalPairs::new(k)?;
    let (k1, e1, k2, e2) = (p.inv.k, p.inv.e, p.comp.k, p.comp.e);
    let k_sq = k * k;
    let d = p.norm();
    let re = 1.0 + k_sq * (k1 * (e1 - k1) - e2 * k2) / d;
    let im = k_sq * (k2 * (e1 - k1) + e2 * k1) / d;
    Ok(ComplexValue::new(re, branch.sign() * im))
}

/// Analytic continuations `(K(k), E(k))` for real `k > 1`:
///
/// ```text
/// K(k) = [K(1/k) ∓ i·K(1/k')] / k
/// E(k) = k[E(1/k) − K(1/k)/k'²] ± i·k[E(1/k') − K(1/k')/k²]
/// ```
///
/// The imaginary parts of `K` and `E` carry opposite signs, so that
/// `E/K` equals [`ek_ratio_large_real`] on the same branch.
///
/// Close to `k = 1`, `K(1/k)` grows like `ln(4/√(2(k−1)))`; the values
/// stay finite for any `k > 1` that is representable apart from 1.
pub fn k_e_continued(k: f64, branch: Branch) -> Result<(ComplexValue, ComplexValue)> {
    check_large(k)?;
    let p = ReciprocalPairs::new(k)?;
    let s = branch.sign();
    let inv_kp = ReciprocalCompanion::inverse_of(k);
    let kk = ComplexValue::new(p.inv.k / k, -s * p.comp.k / k);
    let ee = ComplexValue::new(
        k * (p.inv.e - inv_kp * inv_kp * p.inv.k),
        s * k * (p.comp.e - p.comp.k / (k * k)),
    );
    Ok((kk, ee))
}

/// `Z(x,k)` for real `k > 1`:
/// `k·Z(kx,1/k) + c·x ∓ i·d·x` with
///
/// ```text
/// c = k²K²(1/k')/[K²(1/k) + K²(1/k')] · B
/// d = k²K(1/k)K(1/k')/[K²(1/k) + K²(1/k')] · B
/// B = E(1/k)/K(1/k) + E(1/k')/K(1/k') − 1
/// ```
///
/// The lower branch takes `−i·d·x`. `Z` is odd in `x` on each branch.
pub fn zeta_large_real(x: f64, k: f64, branch: Branch) -> Result<ComplexValue> {
    check_large(k)?;
    check_argument(x)?;
    let p = ReciprocalPairs::new(k)?;
    let scale = k * k * p.bracket() / p.norm();
    let re = k * zeta(k * x, 1.0 / k)? + scale * p.comp.k * p.comp.k * x;
    let im = -branch.sign() * scale * p.inv.k * p.comp.k * x;
    Ok(ComplexValue::new(re, im))
}

/// `(K(ik), E(ik)) = (k₁'K(k₁), E(k₁)/k₁')`, both real.
pub fn k_e_imaginary(k: f64) -> Result<(f64, f64)> {
    let d = DerivedModuli::new(k)?;
    let pair = EllipticPair::new(d.k1)?;
    Ok((d.k1p * pair.k, pair.e / d.k1p))
}

/// `E(ik)/K(ik) = E(k₁)/(k₁'²K(k₁))`.
pub fn ek_ratio_imaginary(k: f64) -> Result<f64> {
    let d = DerivedModuli::new(k)?;
    Ok(EllipticPair::new(d.k1)?.ratio() / (d.k1p * d.k1p))
}

/// `ε(x, ik)` for `k > 0`.
pub fn epsilon_imaginary(x: f64, k: f64) -> Result<f64> {
    check_argument(x)?;
    let d = DerivedModuli::new(k)?;
    let pair = EllipticPair::new(d.k1)?;
    let slope = pair.ratio() / (d.k1p * d.k1p);
    Ok(slope * x + zeta_shift_quarter_period(x / d.k1p, d.k1)? / d.k1p)
}

/// `Z(x, ik)` for `k > 0`; always real.
pub fn zeta_imaginary(x: f64, k: f64) -> Result<f64> {
    check_argument(x)?;
    let d = DerivedModuli::new(k)?;
    Ok(zeta_shift_quarter_period(x / d.k1p, d.k1)? / d.k1p)
}

/// `ε(x, m)` for any supported modulus.
pub fn epsilon_any(x: f64, m: Modulus) -> Result<f64> {
    match m.regime {
        Regime::Standard => epsilon(x, m.k),
        Regime::LargeReal => epsilon_large_real(x, m.k),
        Regime::PureImaginary => epsilon_imaginary(x, m.k),
    }
}

/// `Z(x, m)` for any supported modulus, on the lower branch for `k > 1`.
pub fn zeta_any(x: f64, m: Modulus) -> Result<ComplexValue> {
    zeta_any_on_branch(x, m, Branch::Lower)
}

/// `Z(x, m)` with an explicit branch; the branch only matters for `k > 1`.
pub fn zeta_any_on_branch(x: f64, m: Modulus, branch: Branch) -> Result<ComplexValue> {
    match m.regime {
        Regime::Standard => Ok(zeta(x, m.k)?.into()),
        Regime::LargeReal => zeta_large_real(x, m.k, branch),
        Regime::PureImaginary => Ok(zeta_imaginary(x, m.k)?.into()),
    }
}

/// `E/K` for any supported modulus (complex only for `k > 1`).
pub fn ek_ratio_any(m: Modulus, branch: Branch) -> Result<ComplexValue> {
    match m.regime {
        Regime::Standard if m.k == 1.0 => Ok(0.0.into()),
        Regime::Standard => Ok(EllipticPair::new(m.k)?.ratio().into()),
        Regime::LargeReal => ek_ratio_large_real(m.k, branch),
        Regime::PureImaginary => Ok(ek_ratio_imaginary(m.k)?.into()),
    }
}

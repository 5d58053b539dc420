//! Adaptive 8-panel Newton–Cotes quadrature, used as an independent check
//! on the closed-form evaluations.
//!
//! Each interval is integrated once with the 9-point closed Newton–Cotes
//! rule and once as the sum of the rule on its two halves. The rule is
//! exact for polynomials of degree 9, so asymptotically the halved
//! estimate is off by about `(Q₂ − Q₁)/1023` and the extrapolated value
//! `Q₂ + (Q₂ − Q₁)/1023` is returned. The acceptance test is stricter and
//! uses `|Q₂ − Q₁|` itself: on panels that are wide compared to the
//! distance of the integrand's complex poles, `Q₁` and `Q₂` can agree far
//! better than either agrees with the integral. Partial results are
//! combined in tree order, so the sum does not depend on evaluation
//! scheduling.

use crate::error::{domain, Error, Result};
use crate::extended::{ek_ratio_any, Branch, ComplexValue, DerivedModuli, Modulus, Regime};
use crate::jacobi::{complete_k, sncndn};

/// Bisection depth at which refinement gives up.
pub const MAX_DEPTH: usize = 48;

/// Intervals are always split this many times before the error test may
/// accept them.
pub const MIN_DEPTH: usize = 1;

const WEIGHTS: [f64; 9] = [
    989.0, 5888.0, -928.0, 10496.0, -4540.0, 10496.0, -928.0, 5888.0, 989.0,
];
const WEIGHT_SCALE: f64 = 4.0 / 14175.0;
const RICHARDSON: f64 = 1023.0;

/// Result of [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    /// Sum over accepted panels of `|Q₂ − Q₁|`, or of the rounding noise
    /// where that dominated.
    pub err_estimate: f64,
}

/// Relative size of the rounding noise expected in one rule evaluation,
/// measured against the integral of `|f|` over the panel. Includes the
/// evaluation error of the integrands, which grows with the argument.
const NOISE: f64 = 64.0 * f64::EPSILON;

/// The 9-point closed Newton–Cotes rule on `[a, b]`.
pub fn newton_cotes8<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    rule(f, a, b).0
}

/// The rule applied to `f` and, with absolute weights, to `|f|`.
fn rule<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let h = (b - a) / 8.0;
    let (mut s, mut m) = (0.0, 0.0);
    for (i, w) in WEIGHTS.iter().enumerate() {
        let t = if i == 8 { b } else { a + i as f64 * h };
        let v = w * f(t);
        s += v;
        m += v.abs();
    }
    (WEIGHT_SCALE * h * s, WEIGHT_SCALE * h * m)
}

/// Integrate `f` over `[a, b]` to absolute tolerance `tol`.
///
/// Panels whose two estimates agree to within rounding noise are accepted
/// even when that noise exceeds their share of `tol`; the noise is then
/// reflected in `err_estimate`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<Quadrature> {
    if !(a.is_finite() && b.is_finite()) || a > b {
        return domain(format!("integration bounds must be finite with a <= b, got [{a}, {b}]"));
    }
    if !(tol > 0.0) {
        return domain(format!("tolerance must be positive, got {tol}"));
    }
    if a == b {
        return Ok(Quadrature { value: 0.0, err_estimate: 0.0 });
    }
    let whole = newton_cotes8(&f, a, b);
    check_finite(whole, a, b)?;
    refine(&f, a, b, whole, tol, 0)
}

fn check_finite(v: f64, a: f64, b: f64) -> Result<()> {
    if !v.is_finite() {
        return domain(format!("integrand is not finite on [{a}, {b}]"));
    }
    Ok(())
}

fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    coarse: f64,
    tol: f64,
    depth: usize,
) -> Result<Quadrature> {
    let mid = 0.5 * (a + b);
    let (left, left_mag) = rule(f, a, mid);
    let (right, right_mag) = rule(f, mid, b);
    let fine = left + right;
    check_finite(fine, a, b)?;
    let err = (fine - coarse).abs();
    let noise = NOISE * (left_mag + right_mag);
    if depth >= MIN_DEPTH && err <= tol.max(noise) {
        return Ok(Quadrature {
            value: fine + (fine - coarse) / RICHARDSON,
            err_estimate: if err <= tol { err } else { noise },
        });
    }
    if depth + 1 >= MAX_DEPTH {
        return Err(Error::Convergence { a, b, depth: MAX_DEPTH });
    }
    let l = refine(f, a, mid, left, 0.5 * tol, depth + 1)?;
    let r = refine(f, mid, b, right, 0.5 * tol, depth + 1)?;
    Ok(Quadrature {
        value: l.value + r.value,
        err_estimate: l.err_estimate + r.err_estimate,
    })
}

/// Which real integrand gives `ε` in a regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegrandKind {
    /// `dn²(t,k)`
    DnSquared,
    /// `cn²(kt, 1/k)`, equal to `dn²(t,k)` for `k > 1`
    ReciprocalCnSquared,
    /// `1/dn²(t/k₁', k₁)`, equal to `dn²(t,ik)`
    InverseDnSquared,
}

/// The integrand whose integral over `[0, x]` is `ε(x, m)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrandSpec {
    pub modulus: Modulus,
    pub kind: IntegrandKind,
}

impl IntegrandSpec {
    pub fn for_modulus(modulus: Modulus) -> Self {
        let kind = match modulus.regime() {
            Regime::Standard => IntegrandKind::DnSquared,
            Regime::LargeReal => IntegrandKind::ReciprocalCnSquared,
            Regime::PureImaginary => IntegrandKind::InverseDnSquared,
        };
        Self { modulus, kind }
    }

    pub fn description(&self) -> &'static str {
        match self.kind {
            IntegrandKind::DnSquared => "dn^2(t,k)",
            IntegrandKind::ReciprocalCnSquared => "cn^2(kt,1/k)",
            IntegrandKind::InverseDnSquared => "1/dn^2(t/k1',k1)",
        }
    }

    /// Period of the integrand in `t`; infinite at `k = 1`, where it decays.
    pub fn period(&self) -> Result<f64> {
        let k = self.modulus.magnitude();
        Ok(match self.kind {
            IntegrandKind::DnSquared if k == 1.0 => f64::INFINITY,
            IntegrandKind::DnSquared => 2.0 * complete_k(k)?,
            IntegrandKind::ReciprocalCnSquared => 2.0 * complete_k(1.0 / k)? / k,
            IntegrandKind::InverseDnSquared => {
                let d = DerivedModuli::new(k)?;
                2.0 * complete_k(d.k1)? * d.k1p
            }
        })
    }

    /// Integrand value at `t`.
    pub fn eval(&self, t: f64) -> Result<f64> {
        let k = self.modulus.magnitude();
        Ok(match self.kind {
            IntegrandKind::DnSquared => sncndn(t, k)?.dn.powi(2),
            IntegrandKind::ReciprocalCnSquared => sncndn(k * t, 1.0 / k)?.cn.powi(2),
            IntegrandKind::InverseDnSquared => {
                let d = DerivedModuli::new(k)?;
                sncndn(t / d.k1p, d.k1)?.dn.powi(-2)
            }
        })
    }
}

/// `ε(x, m)` by adaptive quadrature of the regime's integrand over `[0, x]`.
pub fn epsilon_by_quadrature(x: f64, m: Modulus, tol: f64) -> Result<f64> {
    if !x.is_finite() {
        return domain(format!("argument must be finite, got {x}"));
    }
    let spec = IntegrandSpec::for_modulus(m);
    // the integrands are well-defined for finite t, so evaluation errors
    // can only come from the modulus, which was validated already
    spec.eval(0.0)?;
    let f = |t: f64| spec.eval(t).unwrap_or(f64::NAN);
    // Integrate half a period at a time; a panel spanning several periods
    // can alias so that its two estimates agree while both are wrong.
    let end = x.abs();
    let pieces = (end / (0.5 * spec.period()?)).ceil().max(1.0);
    if pieces > 1e6 {
        return domain(format!("argument {x} spans too many periods for quadrature"));
    }
    let n = pieces as usize;
    let mut total = 0.0;
    for i in 0..n {
        let a = end * i as f64 / pieces;
        let b = if i + 1 == n { end } else { end * (i + 1) as f64 / pieces };
        total += integrate(f, a, b, tol / pieces)?.value;
    }
    Ok(if x < 0.0 { -total } else { total })
}

/// `Z(x, m) = ε(x, m) − (E/K)·x` with `ε` taken from quadrature.
pub fn zeta_by_quadrature(x: f64, m: Modulus, branch: Branch, tol: f64) -> Result<ComplexValue> {
    let eps = epsilon_by_quadrature(x, m, tol)?;
    Ok(ComplexValue::from(eps) - ek_ratio_any(m, branch)? * x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn elementary_integrals() {
        let q = integrate(|_| 1.0, 0.0, 1.0, 1e-12).unwrap();
        assert!((q.value - 1.0).abs() < 1e-15);
        let q = integrate(f64::sin, 0.0, PI, 1e-12).unwrap();
        assert!((q.value - 2.0).abs() < 1e-12);
        let q = integrate(f64::exp, -1.0, 2.0, 1e-12).unwrap();
        assert!((q.value - (2f64.exp() - (-1f64).exp())).abs() < 1e-12);
        assert!(q.err_estimate <= 1e-12);
    }

    #[test]
    fn base_rule_is_exact_through_degree_nine() {
        for deg in 0..=9 {
            let f = |t: f64| t.powi(deg);
            let exact = (2f64.powi(deg + 1) - (-1f64).powi(deg + 1)) / (deg as f64 + 1.0);
            let v = newton_cotes8(&f, -1.0, 2.0);
            assert!((v - exact).abs() < 1e-13 * exact.abs().max(1.0), "degree {deg}");
        }
    }

    #[test]
    fn bad_arguments() {
        assert!(integrate(|t| t, 1.0, 0.0, 1e-10).is_err());
        assert!(integrate(|t| t, 0.0, 1.0, 0.0).is_err());
        assert!(integrate(|t| 1.0 / t, 0.0, 1.0, 1e-10).is_err());
        assert_eq!(integrate(|t| t, 0.5, 0.5, 1e-10).unwrap().value, 0.0);
    }

    #[test]
    fn discontinuity_hits_depth_limit() {
        let step = |t: f64| if t < 1.0 / 3.0 { 0.0 } else { 1.0 };
        match integrate(step, 0.0, 1.0, 1e-14) {
            Err(Error::Convergence { depth, .. }) => assert_eq!(depth, MAX_DEPTH),
            other => panic!("expected convergence error, got {other:?}"),
        }
    }

    #[test]
    fn standard_table_cell() {
        let m = Modulus::real(0.5).unwrap();
        let v = epsilon_by_quadrature(0.5, m, 1e-10).unwrap();
        assert!((v - 0.490203).abs() < 5e-7);
    }

    #[test]
    fn odd_and_zero() {
        let m = Modulus::imaginary(2.0).unwrap();
        assert_eq!(epsilon_by_quadrature(0.0, m, 1e-10).unwrap(), 0.0);
        let a = epsilon_by_quadrature(0.8, m, 1e-12).unwrap();
        let b = epsilon_by_quadrature(-0.8, m, 1e-12).unwrap();
        assert_eq!(a, -b);
    }

    #[test]
    fn wide_panel_is_not_accepted_early() {
        // reference values from 30-digit quadrature
        let spec = IntegrandSpec::for_modulus(Modulus::imaginary(1.5).unwrap());
        let q = integrate(|t| spec.eval(t).unwrap(), 0.0, 6.0, 1e-12).unwrap();
        assert!((q.value - 12.080_341_309_497_752).abs() < 2e-12, "{}", q.value);
    }

    #[test]
    fn many_periods_do_not_alias() {
        let m = Modulus::real(5.244_667_466_355_39).unwrap();
        let v = epsilon_by_quadrature(4.692_490_560_655_084, m, 1e-6).unwrap();
        assert!((v - 2.287_390_672_437_643_5).abs() < 1e-6, "{v}");
    }

    #[test]
    fn rounding_noise_does_not_exhaust_depth() {
        let m = Modulus::imaginary(9.883_618_867_584_723).unwrap();
        let x = 9.982_179_570_727_334;
        let spec = IntegrandSpec::for_modulus(m);
        let q = integrate(|t| spec.eval(t).unwrap(), 0.0, x, 1e-12).unwrap();
        let exact = crate::extended::epsilon_any(x, m).unwrap();
        assert!((q.value - exact).abs() <= q.err_estimate.max(1e-12), "{} vs {exact}", q.value);
        assert!(q.err_estimate < 1e-10);
    }
}

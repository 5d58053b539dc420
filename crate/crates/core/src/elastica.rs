//! Euler's elastica in parametric form.
//!
//! With `u = ωs` the scaled arc length, the flexural curve (`k < 1`, with
//! inflection points) is
//!
//! ```text
//! x(u) = {−u + 2[ε(u+K, k) − E(k)]}/ω,    y(u) = −(2k/ω)·cn(u+K, k)
//! ```
//!
//! and the inflexional-free curve (`k > 1`) is
//!
//! ```text
//! x(u) = {(1−2k²)ku + 2k²ε(ku, 1/k)}/(ωk),    y(u) = −(2k/ω)·dn(ku, 1/k)
//! ```
//!
//! The second form follows from the first by the reciprocal-modulus
//! relation for `ε`, a shift of `u` and a translation in `x`.
//!
//! The figure closes on itself only for particular `k`; samplers accept any
//! finite range of `u`.

use std::fmt;

use crate::epsilon_zeta::epsilon;
use crate::error::{domain, Result};
use crate::jacobi::{complete_e, complete_k, sncndn};

/// Shape and scale of an elastica.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElasticaParams {
    /// Modulus; `k < 1` flexural, `k > 1` inflexural.
    pub k: f64,
    /// Scale parameter ω (inverse length).
    pub omega: f64,
}

impl ElasticaParams {
    pub fn new(k: f64, omega: f64) -> Result<Self> {
        let p = Self { k, omega };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        if !(self.omega.is_finite() && self.omega > 0.0) {
            return domain(format!("omega must be positive and finite, got {}", self.omega));
        }
        if !(self.k.is_finite() && self.k > 0.0) || self.k == 1.0 {
            return domain(format!("elastica modulus must be positive, finite and != 1, got {}", self.k));
        }
        Ok(())
    }
}

/// A point of the curve, in the same length units as `1/ω`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    Flexural,
    Inflexural,
}

impl CurveKind {
    pub fn name(self) -> &'static str {
        match self {
            CurveKind::Flexural => "flexural",
            CurveKind::Inflexural => "inflexural",
        }
    }
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One sample of a curve together with its parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSample {
    pub u: f64,
    pub point: PlanePoint,
}

fn check_parameter(u: f64) -> Result<()> {
    if !u.is_finite() {
        return domain(format!("curve parameter must be finite, got {u}"));
    }
    Ok(())
}

/// Point at parameter `u` on the flexural elastica (`0 < k < 1`).
pub fn flexural_point(u: f64, p: &ElasticaParams) -> Result<PlanePoint> {
    p.validate()?;
    check_parameter(u)?;
    if p.k >= 1.0 {
        return domain(format!("flexural elastica needs k < 1, got {}", p.k));
    }
    let quarter = complete_k(p.k)?;
    let shifted = u + quarter;
    let x = (-u + 2.0 * (epsilon(shifted, p.k)? - complete_e(p.k)?)) / p.omega;
    let y = -2.0 * p.k / p.omega * sncndn(shifted, p.k)?.cn;
    Ok(PlanePoint { x, y })
}

/// Point at parameter `u` on the inflexural elastica (`k > 1`).
pub fn inflexural_point(u: f64, p: &ElasticaParams) -> Result<PlanePoint> {
    p.validate()?;
    check_parameter(u)?;
    if p.k <= 1.0 {
        return domain(format!("inflexural elastica needs k > 1, got {}", p.k));
    }
    let k = p.k;
    let ku = k * u;
    let x = ((1.0 - 2.0 * k * k) * ku + 2.0 * k * k * epsilon(ku, 1.0 / k)?) / (p.omega * k);
    let y = -2.0 * k / p.omega * sncndn(ku, 1.0 / k)?.dn;
    Ok(PlanePoint { x, y })
}

pub fn point(kind: CurveKind, u: f64, p: &ElasticaParams) -> Result<PlanePoint> {
    match kind {
        CurveKind::Flexural => flexural_point(u, p),
        CurveKind::Inflexural => inflexural_point(u, p),
    }
}

/// `n` samples at uniformly spaced `u` from `u_min` to `u_max` inclusive.
pub fn sample_curve(
    kind: CurveKind,
    p: &ElasticaParams,
    u_min: f64,
    u_max: f64,
    n: usize,
) -> Result<Vec<CurveSample>> {
    if !(u_min.is_finite() && u_max.is_finite()) || u_min >= u_max {
        return domain(format!("need finite u_min < u_max, got [{u_min}, {u_max}]"));
    }
    if n < 2 {
        return domain(format!("need at least 2 samples, got {n}"));
    }
    let step = (u_max - u_min) / (n - 1) as f64;
    (0..n)
        .map(|i| {
            let u = if i == n - 1 { u_max } else { u_min + i as f64 * step };
            Ok(CurveSample { u, point: point(kind, u, p)? })
        })
        .collect()
}

//! Carlson's symmetric elliptic integrals `RF`, `RD` and `RC`.
//!
//! All three use the duplication theorem: the arguments are repeatedly
//! replaced by `(x + λ)/4` (with `λ = √x√y + √x√z + √y√z`) until they
//! cluster tightly around their mean `A`, after which a fifth-order
//! (seventh-order for `RC`) Taylor series in the normalized deviations
//! finishes the job.
//!
//! The stopping rule follows Carlson (1995): with `r` the target relative
//! truncation error, iterate until `4⁻ⁿ·Q < |Aₙ|` where
//!
//! ```text
//! RF:  Q = (3r)^(-1/6) · max|A₀ − x₀|
//! RD:  Q = (r/4)^(-1/6) · max|A₀ − x₀|
//! RC:  Q = (3r)^(-1/8) · |A₀ − x₀|
//! ```
//!
//! `r = 1e-16`, so the neglected series terms (E₂³, E₃², E₂²E₃ ... for RF and
//! RD; s⁸ for RC) stay below `1e-16` of the leading term. The remaining
//! error is rounding, a few ULP.
//!
//! Arguments are sorted on entry, so `rf` is exactly symmetric in all three
//! arguments and `rd` in its first two.

use crate::error::{domain, Result};

const TRUNCATION: f64 = 1e-16;
const MAX_DUPLICATIONS: usize = 200;

fn check_finite_nonneg(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v < 0.0 {
        return domain(format!("{name}: arguments must be finite and non-negative, got {v}"));
    }
    Ok(())
}

fn sort3(mut a: f64, mut b: f64, mut c: f64) -> (f64, f64, f64) {
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    if b > c {
        std::mem::swap(&mut b, &mut c);
    }
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    (a, b, c)
}

/// Symmetric integral of the first kind,
/// `RF(x,y,z) = ½ ∫₀^∞ dt / √((t+x)(t+y)(t+z))`.
///
/// At most one argument may be zero.
pub fn rf(x: f64, y: f64, z: f64) -> Result<f64> {
    for v in [x, y, z] {
        check_finite_nonneg("rf", v)?;
    }
    let (x, y, z) = sort3(x, y, z);
    if y == 0.0 {
        return domain("rf: at most one argument may be zero");
    }

    let a0 = (x + y + z) / 3.0;
    let mut q = (3.0 * TRUNCATION).powf(-1.0 / 6.0)
        * (a0 - x).abs().max((a0 - y).abs()).max((a0 - z).abs());
    let (mut xm, mut ym, mut zm, mut am) = (x, y, z, a0);
    let mut scale = 1.0; // 4^-n
    for _ in 0..MAX_DUPLICATIONS {
        if q < am.abs() {
            break;
        }
        let (sx, sy, sz) = (xm.sqrt(), ym.sqrt(), zm.sqrt());
        let lambda = sx * sy + sx * sz + sy * sz;
        xm = 0.25 * (xm + lambda);
        ym = 0.25 * (ym + lambda);
        zm = 0.25 * (zm + lambda);
        am = 0.25 * (am + lambda);
        q *= 0.25;
        scale *= 0.25;
    }

    let dx = (a0 - x) * scale / am;
    let dy = (a0 - y) * scale / am;
    let dz = -(dx + dy);
    let e2 = dx * dy - dz * dz;
    let e3 = dx * dy * dz;
    let series =
        1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0;
    Ok(series / am.sqrt())
}

/// Symmetric integral of the second kind,
/// `RD(x,y,z) = (3/2) ∫₀^∞ dt / (√((t+x)(t+y)) · (t+z)^(3/2))`.
///
/// Requires `z > 0` and at most one of `x`, `y` zero.
pub fn rd(x: f64, y: f64, z: f64) -> Result<f64> {
    for v in [x, y, z] {
        check_finite_nonneg("rd", v)?;
    }
    if z == 0.0 {
        return domain("rd: third argument must be positive");
    }
    let (x, y) = if x <= y { (x, y) } else { (y, x) };
    if y == 0.0 {
        return domain("rd: at most one of the first two arguments may be zero");
    }

    let a0 = (x + y + 3.0 * z) / 5.0;
    let mut q = (TRUNCATION / 4.0).powf(-1.0 / 6.0)
        * (a0 - x).abs().max((a0 - y).abs()).max((a0 - z).abs());
    let (mut xm, mut ym, mut zm, mut am) = (x, y, z, a0);
    let mut scale = 1.0;
    let mut tail = 0.0;
    for _ in 0..MAX_DUPLICATIONS {
        if q < am.abs() {
            break;
        }
        let (sx, sy, sz) = (xm.sqrt(), ym.sqrt(), zm.sqrt());
        let lambda = sx * sy + sx * sz + sy * sz;
        tail += scale / (sz * (zm + lambda));
        xm = 0.25 * (xm + lambda);
        ym = 0.25 * (ym + lambda);
        zm = 0.25 * (zm + lambda);
        am = 0.25 * (am + lambda);
        q *= 0.25;
        scale *= 0.25;
    }

    let dx = (a0 - x) * scale / am;
    let dy = (a0 - y) * scale / am;
    let dz = -(dx + dy) / 3.0;
    let xy = dx * dy;
    let dz2 = dz * dz;
    let e2 = xy - 6.0 * dz2;
    let e3 = (3.0 * xy - 8.0 * dz2) * dz;
    let e4 = 3.0 * (xy - dz2) * dz2;
    let e5 = xy * dz2 * dz;
    let series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0;
    Ok(scale * series / (am * am.sqrt()) + 3.0 * tail)
}

/// Degenerate integral `RC(x,y) = RF(x,y,y)`,
/// `½ ∫₀^∞ dt / (√(t+x) · (t+y))`.
///
/// For `y < 0` the Cauchy principal value is returned.
pub fn rc(x: f64, y: f64) -> Result<f64> {
    check_finite_nonneg("rc", x)?;
    if !y.is_finite() || y == 0.0 {
        return domain(format!("rc: second argument must be finite and non-zero, got {y}"));
    }
    if y < 0.0 {
        // principal value
        return Ok((x / (x - y)).sqrt() * rc_positive(x - y, -y));
    }
    Ok(rc_positive(x, y))
}

fn rc_positive(x: f64, y: f64) -> f64 {
    let a0 = (x + 2.0 * y) / 3.0;
    let mut q = (3.0 * TRUNCATION).powf(-1.0 / 8.0) * (a0 - x).abs();
    let (mut xm, mut ym, mut am) = (x, y, a0);
    let mut scale = 1.0;
    for _ in 0..MAX_DUPLICATIONS {
        if q < am.abs() {
            break;
        }
        let lambda = 2.0 * xm.sqrt() * ym.sqrt() + ym;
        xm = 0.25 * (xm + lambda);
        ym = 0.25 * (ym + lambda);
        am = 0.25 * (am + lambda);
        q *= 0.25;
        scale *= 0.25;
    }
    let s = (y - a0) * scale / am;
    let series = 1.0
        + s * s
            * (3.0 / 10.0
                + s * (1.0 / 7.0
                    + s * (3.0 / 8.0
                        + s * (9.0 / 22.0 + s * (159.0 / 208.0 + s * (9.0 / 8.0))))));
    series / am.sqrt()
}

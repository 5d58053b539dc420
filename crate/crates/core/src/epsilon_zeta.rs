//! Jacobi epsilon `ε(x,k) = E(am(x,k),k) = ∫₀ˣ dn²(t,k) dt` and zeta
//! `Z(x,k) = ε(x,k) − (E(k)/K(k))·x` for `|k| <= 1`.
//!
//! Both are odd in `x` and even in `k`. `Z` has period `2K`, so it is
//! evaluated on the folded argument only; `ε` adds `2E(k)` per folded
//! period.

use crate::error::{domain, Result};
use crate::jacobi::{self, legendre_e_principal, reduce, standard_modulus, EllipticPair};

fn check_argument(x: f64) -> Result<()> {
    if !x.is_finite() {
        return domain(format!("argument must be finite, got {x}"));
    }
    Ok(())
}

/// Jacobi epsilon function for `|k| <= 1`.
pub fn epsilon(x: f64, k: f64) -> Result<f64> {
    let k = standard_modulus(k)?;
    check_argument(x)?;
    if k == 1.0 {
        return Ok(x.tanh());
    }
    if k == 0.0 {
        return Ok(x);
    }
    let r = reduce(x, k);
    let body = legendre_e_principal(r.phi, k)?;
    if r.periods == 0.0 {
        return Ok(body);
    }
    Ok(2.0 * r.periods * jacobi::complete_e(k)? + body)
}

/// Jacobi zeta function for `|k| <= 1`.
///
/// At `|k| = 1` the ratio `E/K` vanishes and `Z(x,1) = ε(x,1) = tanh x`.
pub fn zeta(x: f64, k: f64) -> Result<f64> {
    let k = standard_modulus(k)?;
    check_argument(x)?;
    if k == 1.0 {
        return Ok(x.tanh());
    }
    if k == 0.0 {
        return Ok(0.0);
    }
    let r = reduce(x, k);
    let pair = EllipticPair::new(k)?;
    Ok(legendre_e_principal(r.phi, k)? - pair.ratio() * r.rest)
}

/// `Z(x + K(k), k)`, evaluated as `Z(x,k) − k²·sn(x,k)·cn(x,k)/dn(x,k)`.
pub fn zeta_shift_quarter_period(x: f64, k: f64) -> Result<f64> {
    let k = standard_modulus(k)?;
    if k == 1.0 {
        return domain("quarter-period shift undefined at |k| = 1 (K diverges)");
    }
    let z = zeta(x, k)?;
    let t = jacobi::sncndn(x, k)?;
    Ok(z - k * k * t.sn * t.cn / t.dn)
}

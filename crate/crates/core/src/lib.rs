//! Jacobi's epsilon `ε(x,k)` and zeta `Z(x,k)` functions for every real
//! modulus and for pure imaginary moduli `ik`.
//!
//! For `|k| <= 1` the functions are evaluated directly from Carlson's
//! symmetric integrals and the Landen/AGM form of the Jacobi functions. For
//! real `k > 1` and for `ik` they are mapped back onto moduli in `(0, 1)`
//! by the reciprocal and imaginary modulus transformations. `Z(x,k)` is
//! complex for `k > 1`.
//!
//! ```
//! use jacobi_eps_zeta::{epsilon_any, zeta_any, Modulus};
//!
//! let eps = epsilon_any(0.5, Modulus::real(2.0)?)?;
//! assert!((eps - 0.367975).abs() < 5e-7);
//!
//! let z = zeta_any(0.5, Modulus::real(2.0)?)?;
//! assert!((z.re - 0.663361).abs() < 5e-7 && (z.im + 0.419309).abs() < 5e-7);
//!
//! let z = zeta_any(0.5, Modulus::imaginary(1.0)?)?;
//! assert!((z.re + 0.187029).abs() < 5e-7);
//! # Ok::<(), jacobi_eps_zeta::Error>(())
//! ```
//!
//! An adaptive Newton–Cotes integrator ([`quadrature`]) provides an
//! independent route to `ε` in every regime, and [`elastica`] uses the
//! large-modulus formula to trace Euler's elastica.

pub mod carlson;
pub mod cli;
pub mod elastica;
pub mod epsilon_zeta;
mod error;
pub mod extended;
pub mod jacobi;
pub mod quadrature;

pub use epsilon_zeta::{epsilon, zeta, zeta_shift_quarter_period};
pub use error::{Error, Result};
pub use extended::{
    epsilon_any, epsilon_imaginary, epsilon_large_real, zeta_any, zeta_any_on_branch,
    zeta_imaginary, zeta_large_real, Branch, ComplexValue, Modulus, Regime,
};
pub use jacobi::{amplitude, complete_e, complete_k, incomplete_e, sncndn, EllipticPair, JacobiTriple};

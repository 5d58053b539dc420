//! The adaptive Newton–Cotes integrator as an independent check on ε in all
//! three regimes.

use jacobi_eps_zeta::quadrature::{epsilon_by_quadrature, integrate, IntegrandSpec};
use jacobi_eps_zeta::{epsilon_any, Modulus};

fn main() -> jacobi_eps_zeta::Result<()> {
    let q = integrate(|t: f64| t.exp(), 0.0, 1.0, 1e-13)?;
    println!("int_0^1 e^t dt = {:.16} (est. err {:.1e}, exact {:.16})", q.value, q.err_estimate, 1f64.exp() - 1.0);
    println!();

    let moduli = [
        Modulus::real(0.5)?,
        Modulus::real(3.0)?,
        Modulus::imaginary(1.5)?,
    ];
    for m in moduli {
        let spec = IntegrandSpec::for_modulus(m);
        println!("{m}  integrand {}", spec.description());
        for x in [0.5, 2.0, 6.0] {
            let closed = epsilon_any(x, m)?;
            let quad = epsilon_by_quadrature(x, m, 1e-12)?;
            println!("  x = {x:<4} closed form {closed:>18.14}  quadrature {quad:>18.14}  |diff| {:.1e}", (closed - quad).abs());
        }
    }
    Ok(())
}

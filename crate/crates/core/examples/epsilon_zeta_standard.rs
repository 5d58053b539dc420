//! ε(x,k) and Z(x,k) for 0 <= k <= 1: linear growth plus a periodic part.

use jacobi_eps_zeta::{epsilon, zeta, EllipticPair};

fn main() -> jacobi_eps_zeta::Result<()> {
    let k = 0.9;
    let pair = EllipticPair::new(k)?;
    println!("k = {k}: K = {:.12}, E = {:.12}, E/K = {:.12}", pair.k, pair.e, pair.ratio());
    println!("{:>8} {:>16} {:>16} {:>16}", "x", "eps", "(E/K)x", "Z");
    for i in -4..=12 {
        let x = 0.5 * i as f64;
        println!("{x:>8.2} {:>16.12} {:>16.12} {:>16.12}", epsilon(x, k)?, pair.ratio() * x, zeta(x, k)?);
    }
    let x = 0.7;
    println!(
        "Z(x + 2K) - Z(x) = {:.2e},  eps(x + 2K) - eps(x) - 2E = {:.2e}",
        zeta(x + 2.0 * pair.k, k)? - zeta(x, k)?,
        epsilon(x + 2.0 * pair.k, k)? - epsilon(x, k)? - 2.0 * pair.e
    );
    println!("Z(0.5, 1) = {:.12} = tanh(0.5)", zeta(0.5, 1.0)?);
    Ok(())
}

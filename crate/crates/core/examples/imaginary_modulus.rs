//! Pure imaginary modulus ik, mapped onto k1 = k/sqrt(1+k²).

use jacobi_eps_zeta::extended::{ek_ratio_imaginary, DerivedModuli};
use jacobi_eps_zeta::{epsilon_any, zeta_any, Modulus};

fn main() -> jacobi_eps_zeta::Result<()> {
    println!("{:>6} {:>10} {:>10} {:>14} {:>14} {:>14}", "k", "k1", "k1'", "E/K", "eps(0.5,ik)", "Z(0.5,ik)");
    for k in [0.25, 0.5, 1.0, 2.0, 4.0, 16.0] {
        let d = DerivedModuli::new(k)?;
        let m = Modulus::imaginary(k)?;
        println!(
            "{k:>6} {:>10.6} {:>10.6} {:>14.10} {:>14.10} {:>14.10}",
            d.k1,
            d.k1p,
            ek_ratio_imaginary(k)?,
            epsilon_any(0.5, m)?,
            zeta_any(0.5, m)?.re
        );
    }
    Ok(())
}

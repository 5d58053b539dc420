//! Real modulus k > 1: ε stays real while Z picks up an imaginary part that
//! grows linearly in x. The two branches differ in the sign of Im Z.

use jacobi_eps_zeta::extended::{ek_ratio_large_real, epsilon_large_real_linear_form, k_e_continued};
use jacobi_eps_zeta::{epsilon_large_real, zeta_large_real, Branch};

fn main() -> jacobi_eps_zeta::Result<()> {
    let k = 2.0;
    let (kk, ee) = k_e_continued(k, Branch::Lower)?;
    println!("k = {k}: K = {kk:.12}, E = {ee:.12}");
    println!("E/K lower = {:.12}", ek_ratio_large_real(k, Branch::Lower)?);
    println!("E/K upper = {:.12}", ek_ratio_large_real(k, Branch::Upper)?);
    println!();
    println!("{:>6} {:>16} {:>12} {:>34}", "x", "eps", "two forms", "Z (lower branch)");
    for i in 0..=8 {
        let x = 0.25 * i as f64;
        let e = epsilon_large_real(x, k)?;
        let gap = e - epsilon_large_real_linear_form(x, k)?;
        let z = zeta_large_real(x, k, Branch::Lower)?;
        println!("{x:>6.2} {e:>16.12} {gap:>12.1e} {:>16.12} {:>+16.12}i", z.re, z.im);
    }
    Ok(())
}

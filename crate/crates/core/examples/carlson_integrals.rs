//! Carlson's symmetric integrals and the complete Legendre integrals built
//! from them.

use jacobi_eps_zeta::carlson::{rc, rd, rf};
use jacobi_eps_zeta::{complete_e, complete_k, EllipticPair};

fn main() -> jacobi_eps_zeta::Result<()> {
    println!("RF(1,2,3)  = {:.16}", rf(1.0, 2.0, 3.0)?);
    println!("RD(0,2,1)  = {:.16}", rd(0.0, 2.0, 1.0)?);
    // RC(x,y) = arctan(sqrt((y-x)/x))/sqrt(y-x) for y > x
    println!("RC(1,2)    = {:.16}  (pi/4 = {:.16})", rc(1.0, 2.0)?, std::f64::consts::FRAC_PI_4);
    println!("RC(2,-1)   = {:.16}  (Cauchy principal value)", rc(2.0, -1.0)?);

    println!();
    println!("{:>6} {:>20} {:>20} {:>20}", "k", "K(k)", "E(k)", "EK'+E'K-KK'");
    for k in [0.1_f64, 0.5, 0.9, 0.999] {
        let kc = (1.0 - k * k).sqrt();
        let (a, b) = (EllipticPair::new(k)?, EllipticPair::new(kc)?);
        let legendre = a.e * b.k + b.e * a.k - a.k * b.k;
        println!("{k:>6} {:>20.16} {:>20.16} {legendre:>20.16}", complete_k(k)?, complete_e(k)?);
    }
    Ok(())
}

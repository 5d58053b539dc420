//! Amplitude and the Jacobi functions sn, cn, dn along the real line.

use jacobi_eps_zeta::{amplitude, complete_k, sncndn};

fn main() -> jacobi_eps_zeta::Result<()> {
    let k = 0.8;
    let quarter = complete_k(k)?;
    println!("k = {k}, K(k) = {quarter:.16}");
    println!("{:>8} {:>12} {:>12} {:>12} {:>12} {:>10}", "x/K", "am", "sn", "cn", "dn", "sn²+cn²");
    for i in 0..=8 {
        let x = 0.5 * i as f64 * quarter;
        let t = sncndn(x, k)?;
        println!(
            "{:>8.2} {:>12.8} {:>12.8} {:>12.8} {:>12.8} {:>10.2e}",
            x / quarter,
            amplitude(x, k)?,
            t.sn,
            t.cn,
            t.dn,
            t.sn * t.sn + t.cn * t.cn - 1.0
        );
    }
    // k = 1 degenerates to hyperbolic functions
    let t = sncndn(0.5, 1.0)?;
    println!("k=1, x=0.5: sn = {:.12} (tanh {:.12}), cn = dn = {:.12}", t.sn, 0.5f64.tanh(), t.cn);
    Ok(())
}

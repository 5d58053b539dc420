//! The four reference tables at x = 0.5, with the quadrature cross-check.

use jacobi_eps_zeta::cli::{compute_tables, fixed6_complex};

fn main() -> jacobi_eps_zeta::Result<()> {
    for table in compute_tables()? {
        println!("{}", table.title);
        for row in &table.rows {
            println!(
                "  k = {:<4} {:>24} {:>24}  |diff| {:.1e}",
                row.k,
                fixed6_complex(row.present),
                fixed6_complex(row.quadrature),
                row.abs_diff()
            );
        }
    }
    Ok(())
}

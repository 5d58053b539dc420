//! Sample both elastica forms and write them as CSV files.
//!
//! `cargo run --example elastica_curve -- [output_dir]`

use std::error::Error;
use std::path::PathBuf;

use jacobi_eps_zeta::elastica::{sample_curve, CurveKind, ElasticaParams};

fn main() -> Result<(), Box<dyn Error>> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    for (kind, k) in [(CurveKind::Flexural, 0.85), (CurveKind::Inflexural, 1.2)] {
        let p = ElasticaParams::new(k, 1.0)?;
        let samples = sample_curve(kind, &p, -12.0, 12.0, 481)?;
        let path = dir.join(format!("elastica_{kind}.csv"));
        let mut w = csv::Writer::from_path(&path)?;
        w.write_record(["u", "x", "y"])?;
        for s in &samples {
            w.write_record([s.u.to_string(), s.point.x.to_string(), s.point.y.to_string()])?;
        }
        w.flush()?;
        let (ymin, ymax) = samples
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), s| (a.min(s.point.y), b.max(s.point.y)));
        println!("{kind:<10} k={k}: {} points, y in [{ymin:.4}, {ymax:.4}] -> {}", samples.len(), path.display());
    }
    Ok(())
}

//! Survival against the number of measurements for five total rotations,
//! written as CSV and SVG.
//!
//! cargo run --release --example survival_sweep -- [output-dir]

use std::f64::consts::PI;
use std::path::PathBuf;

use zeno::render::{angle_label, emit_csv_curves, emit_svg};
use zeno::{run_sweep, SweepConfig};

fn main() -> zeno::Result<()> {
    let out_dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);

    let curves = [2.0, 3.0, 4.0, 5.0, 6.0]
        .iter()
        .map(|k| {
            let mut config = SweepConfig::new(PI / k, 1, 14);
            config.seed = 42;
            run_sweep(&config)
        })
        .collect::<zeno::Result<Vec<_>>>()?;

    print!("{:>3}", "n");
    for curve in &curves {
        print!(" {:>16}", format!("θ = {}", angle_label(curve.theta_total)));
    }
    println!();
    for row in 0..14 {
        print!("{:>3}", curves[0].points[row].n);
        for curve in &curves {
            let p = &curve.points[row];
            print!("  {:.5} ({:.3})", p.probability(), p.sampled_frequency());
        }
        println!();
    }

    let csv = out_dir.join("zeno_survival.csv");
    let svg = out_dir.join("zeno_survival.svg");
    std::fs::write(&csv, emit_csv_curves(&curves))?;
    std::fs::write(&svg, emit_svg(&curves)?)?;
    println!("\nwrote {} and {}", csv.display(), svg.display());
    Ok(())
}

//! One U3 of angle θ equals n consecutive U3 gates of θ/n, and slicing
//! without CNOTs leaves the survival probability untouched.
//!
//! cargo run --example slice_decomposition

use std::f64::consts::PI;

use zeno::render::angle_label;
use zeno::{build_qze_circuit, run_circuit, verify_decomposition};

fn main() -> zeno::Result<()> {
    println!(
        "{:>6} {:>7} {:>12} {:>12} {:>10} {:>10} {:>14}",
        "θ", "slices", "p_single", "p_sliced", "gate gap", "p gap", "with CNOTs"
    );
    for (theta, slices) in [(PI / 2.0, 8), (PI / 5.0, 14), (PI / 3.0, 5), (PI, 20)] {
        let r = verify_decomposition(theta, slices)?;
        let zeno = run_circuit(&build_qze_circuit(theta, slices)?)?.prob_qubit0(0);
        println!(
            "{:>6} {:>7} {:>12.9} {:>12.9} {:>10.1e} {:>10.1e} {:>14.9}",
            angle_label(theta),
            slices,
            r.p_single,
            r.p_sliced,
            r.max_entrywise_gate_gap,
            r.probability_gap,
            zeno
        );
    }
    Ok(())
}

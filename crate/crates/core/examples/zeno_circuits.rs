//! The n = 2 and n = 4 Zeno circuits: gate listing, register trace and
//! OpenQASM export.
//!
//! cargo run --example zeno_circuits

use std::f64::consts::FRAC_PI_2;

use zeno::render::{emit_qasm, print_trace};
use zeno::{build_qze_circuit, run_circuit};

fn main() -> zeno::Result<()> {
    for n in [2, 4] {
        let circuit = build_qze_circuit(FRAC_PI_2, n)?;
        let p = run_circuit(&circuit)?.prob_qubit0(0);
        println!(
            "== n = {n}: {} qubits, {} u3, {} cx, survival {p:.6}",
            circuit.num_qubits(),
            circuit.u3_count(),
            circuit.cnot_count()
        );
        print!("{}", emit_qasm(&circuit));
        println!();
    }

    println!("== register after each gate, θ = π/2, n = 2");
    print!("{}", print_trace(&build_qze_circuit(FRAC_PI_2, 2)?)?);
    Ok(())
}

//! Each ancilla CNOT erases the coherence of q0. The same survival numbers
//! come out of the full statevector, a dephased 2×2 density matrix, and
//! the closed form.
//!
//! cargo run --example implicit_measurement

use std::f64::consts::PI;

use zeno::{
    build_qze_circuit, run_circuit, survival_closed_form, survival_via_channel, trace_states, Op,
    ZenoParams,
};

fn main() -> zeno::Result<()> {
    let theta = PI / 2.0;
    let n = 4;
    let circuit = build_qze_circuit(theta, n)?;
    println!("q0 reduced density along the n = {n} circuit:");
    for (step, (op, state)) in circuit.ops().iter().zip(trace_states(&circuit)?).enumerate() {
        let rho = state.reduced_density_q0();
        let kind = match op {
            Op::U3 { .. } => "u3",
            Op::Cnot { .. } => "cx",
        };
        println!(
            "  step {:>2} {kind}: ρ00 = {:.6}  |ρ01| = {:.3e}",
            step + 1,
            rho.population(0),
            rho.off_diagonal_magnitude()
        );
    }

    println!("\n{:>3} {:>16} {:>16} {:>16}", "n", "statevector", "channel", "closed form");
    for n in 1..=14 {
        let params = ZenoParams::new(theta, n as u32)?;
        println!(
            "{n:>3} {:>16.13} {:>16.13} {:>16.13}",
            run_circuit(&build_qze_circuit(theta, n)?)?.prob_qubit0(0),
            survival_via_channel(&params),
            survival_closed_form(&params)
        );
    }
    Ok(())
}

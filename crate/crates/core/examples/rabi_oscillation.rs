//! From the two-level Hamiltonian to a single U3 gate and its readout.
//!
//! cargo run --example rabi_oscillation

use std::f64::consts::PI;

use zeno::{
    build_rabi_circuit, evolution_operator, exponentiate_hamiltonian, hamiltonian_matrix, rabi_u3,
    run_circuit, sample_shots,
};

fn main() -> zeno::Result<()> {
    let omega = 1.0;
    let t = PI / 4.0;

    let h = hamiltonian_matrix(omega)?;
    let closed = evolution_operator(omega, t)?;
    let spectral = exponentiate_hamiltonian(&h, t)?;
    let gate = rabi_u3(2.0 * omega * t)?;

    println!("H =\n{h}\n");
    println!("e^(-iHt), closed form =\n{closed}\n");
    println!("e^(-iHt), spectral route differs by {:.1e}", closed.max_abs_diff(&spectral));
    println!("U3(2Ωt, -π/2, π/2) differs by {:.1e}\n", closed.max_abs_diff(&gate));

    println!("{:>8} {:>12} {:>12} {:>10}", "Ωt", "P(0) exact", "cos²(Ωt)", "8192 shots");
    for step in 0u32..=8 {
        let phase = PI / 2.0 * f64::from(step) / 8.0;
        let p = run_circuit(&build_rabi_circuit(2.0 * phase)?)?.prob_qubit0(0);
        let shots = sample_shots(p, 8192, u64::from(step))?;
        println!(
            "{:>8.4} {:>12.9} {:>12.9} {:>10.5}",
            phase,
            p,
            phase.cos().powi(2),
            shots.frequency0()
        );
    }
    Ok(())
}

//! Exact simulation of the two-level quantum Zeno experiment.
//!
//! A qubit starts in `|0⟩` and is rotated towards `|1⟩` by the Rabi
//! evolution `U3(θ, −π/2, π/2)`. Splitting the rotation into `n` slices and
//! following each slice with a CNOT onto a fresh ancilla dephases the qubit
//! after every slice, and the probability of still reading `|0⟩` climbs
//! towards one as `n` grows.
//!
//! The survival probability is available three ways that share no code
//! path beyond the 2×2 gate itself:
//!
//! * [`run_circuit`] on a full `(n + 1)`-qubit statevector,
//! * [`survival_via_channel`], a single-qubit density matrix that is rotated
//!   and then dephased `n` times,
//! * [`survival_closed_form`], `(1 + cosⁿ(θ/n)) / 2`.
//!
//! ```
//! use std::f64::consts::FRAC_PI_2;
//! use zeno::{build_qze_circuit, run_circuit, survival_closed_form, ZenoParams};
//!
//! let circuit = build_qze_circuit(FRAC_PI_2, 2)?;
//! let p = run_circuit(&circuit)?.prob_qubit0(0);
//! assert!((p - 0.75).abs() < 1e-12);
//! assert!((p - survival_closed_form(&ZenoParams::new(FRAC_PI_2, 2)?)).abs() < 1e-12);
//! # Ok::<(), zeno::ZenoError>(())
//! ```
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod circuit;
pub mod cli;
pub mod error;
pub mod experiments;
pub mod math;
pub mod oracles;
pub mod render;
pub mod sampling;
pub mod state;

pub use circuit::{run_circuit, trace_states, Circuit, Op};
pub use error::{Result, ZenoError};
pub use experiments::{
    build_qze_circuit, build_rabi_circuit, build_sliced_rotation_circuit, run_sweep,
    verify_decomposition, Backend, DecompositionReport, SurvivalCurve, SurvivalPoint, SweepConfig,
};
pub use math::{
    evolution_operator, exponentiate_hamiltonian, hamiltonian_matrix, rabi_u3, u3_matrix, Complex,
    Mat2, MatN,
};
pub use oracles::{
    survival_closed_form, survival_via_channel, taylor_survival_n, taylor_survival_product,
    taylor_survival_single, ZenoParams,
};
pub use sampling::{sample_shots, ShotHistogram};
pub use state::{QubitDensity, StateVector};

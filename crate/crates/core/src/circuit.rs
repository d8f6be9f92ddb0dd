//! Gate lists and their execution on the statevector engine.

use crate::error::{Result, ZenoError};
use crate::math::{self, MatN};
use crate::state::{StateVector, MAX_QUBITS};

/// Widest circuit [`Circuit::unitary`] will expand into a dense matrix.
pub const MAX_DENSE_QUBITS: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Op {
    U3 {
        target: usize,
        theta: f64,
        phi: f64,
        lambda: f64,
    },
    Cnot {
        control: usize,
        target: usize,
    },
}

impl Op {
    pub fn apply(&self, state: &mut StateVector) -> Result<()> {
        match *self {
            Op::U3 {
                target,
                theta,
                phi,
                lambda,
            } => state.apply_u3(target, theta, phi, lambda),
            Op::Cnot { control, target } => state.apply_cnot(control, target),
        }
    }

    /// Highest qubit index the op touches.
    pub fn max_qubit(&self) -> usize {
        match *self {
            Op::U3 { target, .. } => target,
            Op::Cnot { control, target } => control.max(target),
        }
    }
}

/// An ordered list of U3 and CNOT applications on a fixed-width register,
/// read out on a single qubit at the end.
#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    num_qubits: usize,
    ops: Vec<Op>,
    measured_qubit: usize,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&num_qubits) {
            return Err(ZenoError::Capacity(format!(
                "circuit width {num_qubits} is outside 1..={MAX_QUBITS}"
            )));
        }
        Ok(Circuit {
            num_qubits,
            ops: Vec::new(),
            measured_qubit: 0,
        })
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit < self.num_qubits {
            Ok(())
        } else {
            Err(ZenoError::Index(format!(
                "qubit {qubit} out of range for a {}-qubit circuit",
                self.num_qubits
            )))
        }
    }

    pub fn u3(&mut self, target: usize, theta: f64, phi: f64, lambda: f64) -> Result<&mut Self> {
        self.check_qubit(target)?;
        for (name, value) in [("theta", theta), ("phi", phi), ("lambda", lambda)] {
            math::ensure_finite(name, value)?;
        }
        self.ops.push(Op::U3 {
            target,
            theta,
            phi,
            lambda,
        });
        Ok(self)
    }

    pub fn cnot(&mut self, control: usize, target: usize) -> Result<&mut Self> {
        self.check_qubit(control)?;
        self.check_qubit(target)?;
        if control == target {
            return Err(ZenoError::Index(format!(
                "cnot control and target are both qubit {control}"
            )));
        }
        self.ops.push(Op::Cnot { control, target });
        Ok(self)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn ops(&self) -> &[Op] {
        &self.ops
    }

    pub fn measured_qubit(&self) -> usize {
        self.measured_qubit
    }

    pub fn u3_count(&self) -> usize {
        self.ops.iter().filter(|op| matches!(op, Op::U3 { .. })).count()
    }

    pub fn cnot_count(&self) -> usize {
        self.ops.iter().filter(|op| matches!(op, Op::Cnot { .. })).count()
    }

    /// Dense unitary of the whole circuit, built by multiplying embedded
    /// gate matrices. Independent of the bit-indexed kernels and only
    /// practical for narrow circuits.
    pub fn unitary(&self) -> Result<MatN> {
        if self.num_qubits > MAX_DENSE_QUBITS {
            return Err(ZenoError::Capacity(format!(
                "dense unitary limited to {MAX_DENSE_QUBITS} qubits, circuit has {}",
                self.num_qubits
            )));
        }
        let mut total = MatN::identity(1 << self.num_qubits)?;
        for op in &self.ops {
            let layer = match *op {
                Op::U3 {
                    target,
                    theta,
                    phi,
                    lambda,
                } => MatN::embed_single(&math::u3_matrix(theta, phi, lambda)?, target, self.num_qubits)?,
                Op::Cnot { control, target } => MatN::cnot(control, target, self.num_qubits)?,
            };
            total = layer.matmul(&total)?;
        }
        Ok(total)
    }
}

/// Runs every op in order on `|0…0⟩`.
pub fn run_circuit(circuit: &Circuit) -> Result<StateVector> {
    let mut state = StateVector::new_zero_state(circuit.num_qubits())?;
    for op in circuit.ops() {
        op.apply(&mut state)?;
    }
    Ok(state)
}

/// The state after each op; `result[k]` follows `circuit.ops()[k]`.
pub fn trace_states(circuit: &Circuit) -> Result<Vec<StateVector>> {
    let mut state = StateVector::new_zero_state(circuit.num_qubits())?;
    let mut snapshots = Vec::with_capacity(circuit.ops().len());
    for op in circuit.ops() {
        op.apply(&mut state)?;
        snapshots.push(state.clone());
    }
    Ok(snapshots)
}

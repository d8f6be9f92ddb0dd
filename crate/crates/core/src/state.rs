//! Dense statevector over `q` qubits.
//!
//! Qubit `k` is bit `k` of the amplitude index, so qubit 0 is the least
//! significant bit. Ket strings produced elsewhere in the crate print q0
//! leftmost.

use rayon::prelude::*;

use crate::error::{Result, ZenoError};
use crate::math::{self, Complex, Mat2, MATRIX_TOL};

/// Largest register the engine will allocate (2^24 amplitudes, 256 MiB).
pub const MAX_QUBITS: usize = 24;

/// Norm drift tolerated after any sequence of gate applications.
pub const NORM_TOL: f64 = 1e-10;

/// Registers at least this wide run the single-qubit kernel on the rayon
/// pool. Each amplitude pair is updated by the same arithmetic regardless
/// of scheduling, so results are bitwise identical to the serial path.
const PARALLEL_MIN_QUBITS: usize = 16;

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex>,
}

fn check_width(num_qubits: usize) -> Result<()> {
    if (1..=MAX_QUBITS).contains(&num_qubits) {
        Ok(())
    } else {
        Err(ZenoError::Capacity(format!(
            "register of {num_qubits} qubits is outside 1..={MAX_QUBITS}"
        )))
    }
}

impl StateVector {
    /// `|0…0⟩` on `num_qubits` qubits.
    pub fn new_zero_state(num_qubits: usize) -> Result<Self> {
        check_width(num_qubits)?;
        let mut amps = vec![Complex::new(0.0, 0.0); 1 << num_qubits];
        amps[0] = Complex::new(1.0, 0.0);
        Ok(StateVector { num_qubits, amps })
    }

    /// Wraps explicit amplitudes. The length must be a power of two and the
    /// vector normalized to within [`NORM_TOL`].
    pub fn from_amplitudes(amps: Vec<Complex>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(ZenoError::InvalidParameter(format!(
                "amplitude count {len} is not a power of two >= 2"
            )));
        }
        let num_qubits = len.trailing_zeros() as usize;
        check_width(num_qubits)?;
        let state = StateVector { num_qubits, amps };
        let norm = state.norm_sqr();
        if !norm.is_finite() || (norm - 1.0).abs() > NORM_TOL {
            return Err(ZenoError::InvalidParameter(format!(
                "state is not normalized (norm² = {norm})"
            )));
        }
        Ok(state)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex] {
        &self.amps
    }

    pub fn amplitude(&self, index: usize) -> Complex {
        self.amps[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(Complex::norm_sqr).sum()
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit < self.num_qubits {
            Ok(())
        } else {
            Err(ZenoError::Index(format!(
                "qubit {qubit} out of range for {} qubits",
                self.num_qubits
            )))
        }
    }

    /// Applies an arbitrary 2×2 matrix to `target`.
    pub fn apply_gate(&mut self, target: usize, gate: &Mat2) -> Result<()> {
        self.check_qubit(target)?;
        let stride = 1usize << target;
        let kernel = |block: &mut [Complex]| {
            let (low, high) = block.split_at_mut(stride);
            for (a, b) in low.iter_mut().zip(high.iter_mut()) {
                let (x, y) = gate.apply(*a, *b);
                *a = x;
                *b = y;
            }
        };
        if self.num_qubits >= PARALLEL_MIN_QUBITS {
            self.amps.par_chunks_mut(2 * stride).for_each(kernel);
        } else {
            self.amps.chunks_mut(2 * stride).for_each(kernel);
        }
        Ok(())
    }

    pub fn apply_u3(&mut self, target: usize, theta: f64, phi: f64, lambda: f64) -> Result<()> {
        self.check_qubit(target)?;
        let gate = math::u3_matrix(theta, phi, lambda)?;
        self.apply_gate(target, &gate)
    }

    /// Swaps the amplitudes of `|…c=1…t=0…⟩` and `|…c=1…t=1…⟩`.
    pub fn apply_cnot(&mut self, control: usize, target: usize) -> Result<()> {
        self.check_qubit(control)?;
        self.check_qubit(target)?;
        if control == target {
            return Err(ZenoError::Index(format!(
                "cnot control and target are both qubit {control}"
            )));
        }
        let control_bit = 1usize << control;
        let target_bit = 1usize << target;
        for index in 0..self.amps.len() {
            if index & control_bit != 0 && index & target_bit == 0 {
                self.amps.swap(index, index | target_bit);
            }
        }
        Ok(())
    }

    /// Probability that a computational-basis readout of `qubit` yields
    /// `outcome`. Only the low bit of `outcome` is consulted.
    pub fn prob_qubit(&self, qubit: usize, outcome: u8) -> Result<f64> {
        self.check_qubit(qubit)?;
        let want = (outcome & 1) as usize;
        Ok(self
            .amps
            .iter()
            .enumerate()
            .filter(|(index, _)| (index >> qubit) & 1 == want)
            .map(|(_, amp)| amp.norm_sqr())
            .sum())
    }

    /// Readout probability of qubit 0.
    pub fn prob_qubit0(&self, outcome: u8) -> f64 {
        self.prob_qubit(0, outcome)
            .expect("every register has a qubit 0")
    }

    /// Reduced density matrix of `qubit`, tracing out every other wire:
    /// `ρ[a][b] = Σ_rest ψ(a, rest) · conj(ψ(b, rest))`.
    pub fn reduced_density(&self, qubit: usize) -> Result<QubitDensity> {
        self.check_qubit(qubit)?;
        let bit = 1usize << qubit;
        let mut rho = [[Complex::new(0.0, 0.0); 2]; 2];
        for (index, amp0) in self.amps.iter().enumerate() {
            if index & bit != 0 {
                continue;
            }
            let amp1 = self.amps[index | bit];
            rho[0][0] += amp0 * amp0.conj();
            rho[0][1] += amp0 * amp1.conj();
            rho[1][0] += amp1 * amp0.conj();
            rho[1][1] += amp1 * amp1.conj();
        }
        Ok(QubitDensity {
            rho: Mat2::new(rho),
        })
    }

    pub fn reduced_density_q0(&self) -> QubitDensity {
        self.reduced_density(0)
            .expect("every register has a qubit 0")
    }
}

/// 2×2 density matrix of a single qubit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QubitDensity {
    rho: Mat2,
}

impl QubitDensity {
    /// `|0⟩⟨0|`.
    pub fn ground() -> Self {
        QubitDensity {
            rho: Mat2::from_real([[1.0, 0.0], [0.0, 0.0]]),
        }
    }

    /// Validates Hermiticity, unit trace and positivity, each to 1e-12.
    pub fn from_matrix(rho: Mat2) -> Result<Self> {
        let density = QubitDensity { rho };
        density.check()?;
        Ok(density)
    }

    pub fn check(&self) -> Result<()> {
        let herm = self.rho.hermiticity_defect();
        if herm > MATRIX_TOL {
            return Err(ZenoError::Invariant(format!(
                "density matrix is not Hermitian (defect {herm:e})"
            )));
        }
        let trace = self.rho.trace();
        if (trace - Complex::new(1.0, 0.0)).norm() > MATRIX_TOL {
            return Err(ZenoError::Invariant(format!(
                "density matrix trace is {trace}"
            )));
        }
        let (low, _) = self.eigenvalues();
        if low < -MATRIX_TOL {
            return Err(ZenoError::Invariant(format!(
                "density matrix has negative eigenvalue {low:e}"
            )));
        }
        Ok(())
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.rho
    }

    pub fn population(&self, outcome: u8) -> f64 {
        let i = (outcome & 1) as usize;
        self.rho.get(i, i).re
    }

    pub fn coherence(&self) -> Complex {
        self.rho.get(0, 1)
    }

    /// Largest off-diagonal modulus.
    pub fn off_diagonal_magnitude(&self) -> f64 {
        self.rho.get(0, 1).norm().max(self.rho.get(1, 0).norm())
    }

    /// Eigenvalues `(low, high)` of the Hermitian part.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let a = self.rho.get(0, 0).re;
        let d = self.rho.get(1, 1).re;
        let mean = 0.5 * (a + d);
        let radius = (0.25 * (a - d) * (a - d) + self.rho.get(0, 1).norm_sqr()).sqrt();
        (mean - radius, mean + radius)
    }

    /// `U ρ U†`.
    pub fn conjugate(&self, unitary: &Mat2) -> Self {
        QubitDensity {
            rho: *unitary * self.rho * unitary.adjoint(),
        }
    }

    /// Complete dephasing in the computational basis.
    pub fn dephase(&self) -> Self {
        let zero = Complex::new(0.0, 0.0);
        QubitDensity {
            rho: Mat2::new([[self.rho.get(0, 0), zero], [zero, self.rho.get(1, 1)]]),
        }
    }
}

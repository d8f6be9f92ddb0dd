//! Complex scalars and small dense complex matrices.
//!
//! Everything here is built from closed-form trigonometry, so generated
//! gates are unitary to within a few ulps. Matrices are compared entrywise
//! in the max-norm; global phase is never factored out.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::ops::Mul;

pub use num_complex::Complex64 as Complex;

use crate::error::{Result, ZenoError};

/// Max-norm tolerance for unitarity, Hermiticity and matrix equality checks.
pub const MATRIX_TOL: f64 = 1e-12;

/// `φ` of the U3 family that reproduces the Rabi evolution operator.
pub const RABI_PHI: f64 = -FRAC_PI_2;
/// `λ` of the U3 family that reproduces the Rabi evolution operator.
pub const RABI_LAMBDA: f64 = FRAC_PI_2;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

pub(crate) fn ensure_finite(name: &str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(ZenoError::InvalidParameter(format!(
            "{name} must be finite, got {value}"
        )))
    }
}

/// A 2×2 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2([[Complex; 2]; 2]);

impl Mat2 {
    pub const fn new(entries: [[Complex; 2]; 2]) -> Self {
        Mat2(entries)
    }

    pub fn from_real(entries: [[f64; 2]; 2]) -> Self {
        Mat2([
            [Complex::new(entries[0][0], 0.0), Complex::new(entries[0][1], 0.0)],
            [Complex::new(entries[1][0], 0.0), Complex::new(entries[1][1], 0.0)],
        ])
    }

    pub const fn identity() -> Self {
        Mat2([[ONE, ZERO], [ZERO, ONE]])
    }

    pub const fn zero() -> Self {
        Mat2([[ZERO, ZERO], [ZERO, ZERO]])
    }

    pub fn entries(&self) -> &[[Complex; 2]; 2] {
        &self.0
    }

    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.0[row][col]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Mat2([
            [m[0][0].conj(), m[1][0].conj()],
            [m[0][1].conj(), m[1][1].conj()],
        ])
    }

    pub fn trace(&self) -> Complex {
        self.0[0][0] + self.0[1][1]
    }

    pub fn scale(&self, factor: Complex) -> Self {
        let m = &self.0;
        Mat2([
            [m[0][0] * factor, m[0][1] * factor],
            [m[1][0] * factor, m[1][1] * factor],
        ])
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        let mut worst = 0.0_f64;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max((self.0[r][c] - other.0[r][c]).norm());
            }
        }
        worst
    }

    pub fn approx_eq(&self, other: &Mat2, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// `‖U†U − I‖_max`.
    pub fn unitarity_defect(&self) -> f64 {
        (self.adjoint() * *self).max_abs_diff(&Mat2::identity())
    }

    /// `‖A − A†‖_max`.
    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Matrix-vector product on the pair `(a, b)`.
    #[inline]
    pub fn apply(&self, a: Complex, b: Complex) -> (Complex, Complex) {
        let m = &self.0;
        (m[0][0] * a + m[0][1] * b, m[1][0] * a + m[1][1] * b)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = [[ZERO; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        Mat2(out)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.0.iter().enumerate() {
            let sep = if r == 0 { "[" } else { " " };
            write!(f, "{sep}[{:.6}, {:.6}]", row[0], row[1])?;
            if r == 1 {
                write!(f, "]")?;
            } else {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Dense `dim × dim` complex matrix with `dim` a power of two.
///
/// Only meant for whole-circuit unitaries on a handful of qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct MatN {
    dim: usize,
    entries: Vec<Complex>,
}

impl MatN {
    fn check_dim(dim: usize) -> Result<()> {
        if dim >= 2 && dim.is_power_of_two() {
            Ok(())
        } else {
            Err(ZenoError::InvalidParameter(format!(
                "matrix dimension must be a power of two >= 2, got {dim}"
            )))
        }
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Self::check_dim(dim)?;
        Ok(MatN {
            dim,
            entries: vec![ZERO; dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.entries[i * dim + i] = ONE;
        }
        Ok(m)
    }

    pub fn from_rows(dim: usize, entries: Vec<Complex>) -> Result<Self> {
        Self::check_dim(dim)?;
        if entries.len() != dim * dim {
            return Err(ZenoError::InvalidParameter(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        Ok(MatN { dim, entries })
    }

    /// Embeds a single-qubit gate acting on `target` of a `num_qubits`
    /// register (qubit k is bit k of the basis index).
    pub fn embed_single(gate: &Mat2, target: usize, num_qubits: usize) -> Result<Self> {
        if target >= num_qubits {
            return Err(ZenoError::Index(format!(
                "target {target} out of range for {num_qubits} qubits"
            )));
        }
        let dim = 1usize << num_qubits;
        let mut m = Self::zeros(dim)?;
        let bit = 1usize << target;
        for row in 0..dim {
            for col in 0..dim {
                if row & !bit != col & !bit {
                    continue;
                }
                let r = (row & bit != 0) as usize;
                let c = (col & bit != 0) as usize;
                m.entries[row * dim + col] = gate.get(r, c);
            }
        }
        Ok(m)
    }

    /// Permutation matrix of a CNOT on a `num_qubits` register.
    pub fn cnot(control: usize, target: usize, num_qubits: usize) -> Result<Self> {
        if control >= num_qubits || target >= num_qubits || control == target {
            return Err(ZenoError::Index(format!(
                "invalid cnot ({control} -> {target}) on {num_qubits} qubits"
            )));
        }
        let dim = 1usize << num_qubits;
        let mut m = Self::zeros(dim)?;
        for col in 0..dim {
            let row = if col & (1 << control) != 0 {
                col ^ (1 << target)
            } else {
                col
            };
            m.entries[row * dim + col] = ONE;
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.entries[row * self.dim + col]
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![ZERO; n * n];
        for r in 0..n {
            for c in 0..n {
                entries[c * n + r] = self.entries[r * n + c].conj();
            }
        }
        MatN { dim: n, entries }
    }

    pub fn matmul(&self, rhs: &MatN) -> Result<MatN> {
        if self.dim != rhs.dim {
            return Err(ZenoError::InvalidParameter(format!(
                "dimension mismatch: {} vs {}",
                self.dim, rhs.dim
            )));
        }
        let n = self.dim;
        let mut entries = vec![ZERO; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.entries[r * n + k];
                if a == ZERO {
                    continue;
                }
                for c in 0..n {
                    entries[r * n + c] += a * rhs.entries[k * n + c];
                }
            }
        }
        Ok(MatN { dim: n, entries })
    }

    pub fn apply(&self, vector: &[Complex]) -> Result<Vec<Complex>> {
        if vector.len() != self.dim {
            return Err(ZenoError::InvalidParameter(format!(
                "vector length {} does not match dimension {}",
                vector.len(),
                self.dim
            )));
        }
        Ok(self
            .entries
            .chunks_exact(self.dim)
            .map(|row| row.iter().zip(vector).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn max_abs_diff(&self, other: &MatN) -> f64 {
        if self.dim != other.dim {
            return f64::INFINITY;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn unitarity_defect(&self) -> f64 {
        let product = self
            .adjoint()
            .matmul(self)
            .expect("adjoint has the same dimension");
        let identity = MatN::identity(self.dim).expect("dimension already validated");
        product.max_abs_diff(&identity)
    }
}

/// Two-level Rabi Hamiltonian `Ω(|0⟩⟨1| + |1⟩⟨0|)`.
pub fn hamiltonian_matrix(omega: f64) -> Result<Mat2> {
    ensure_finite("omega", omega)?;
    Ok(Mat2::from_real([[0.0, omega], [omega, 0.0]]))
}

/// Closed-form `e^{-iHt}` for the Rabi Hamiltonian:
/// `[[cos Ωt, −i sin Ωt], [−i sin Ωt, cos Ωt]]`.
pub fn evolution_operator(omega: f64, t: f64) -> Result<Mat2> {
    ensure_finite("omega", omega)?;
    ensure_finite("t", t)?;
    let phase = omega * t;
    let (s, c) = phase.sin_cos();
    let diag = Complex::new(c, 0.0);
    let off = Complex::new(0.0, -s);
    Ok(Mat2::new([[diag, off], [off, diag]]))
}

/// `e^{-iHt}` for an arbitrary 2×2 Hermitian `h`, via its spectral
/// decomposition.
///
/// Writing `h = m·I + K` with `m = tr(h)/2`, the traceless part satisfies
/// `K² = r²·I`, so the eigenvalues are `m ± r` with projectors
/// `P± = (I ± K/r)/2`. The result is `Σ e^{-iλt} P`, which needs no series
/// truncation. A degenerate spectrum (`r = 0`) collapses to a pure phase.
pub fn exponentiate_hamiltonian(h: &Mat2, t: f64) -> Result<Mat2> {
    ensure_finite("t", t)?;
    if !h.is_finite() {
        return Err(ZenoError::InvalidParameter(
            "hamiltonian has non-finite entries".into(),
        ));
    }
    let defect = h.hermiticity_defect();
    if defect > MATRIX_TOL {
        return Err(ZenoError::InvalidParameter(format!(
            "hamiltonian is not Hermitian (defect {defect:e})"
        )));
    }

    let mean = 0.5 * (h.get(0, 0).re + h.get(1, 1).re);
    let half_split = 0.5 * (h.get(0, 0).re - h.get(1, 1).re);
    let coupling = h.get(0, 1);
    let radius = (half_split * half_split + coupling.norm_sqr()).sqrt();

    let global = Complex::from_polar(1.0, -mean * t);
    if radius == 0.0 {
        return Ok(Mat2::identity().scale(global));
    }

    let traceless = Mat2::new([
        [Complex::new(half_split, 0.0), coupling],
        [coupling.conj(), Complex::new(-half_split, 0.0)],
    ])
    .scale(Complex::new(1.0 / radius, 0.0));
    let half = Complex::new(0.5, 0.0);
    let id = Mat2::identity();
    let mut upper = [[ZERO; 2]; 2];
    let mut lower = [[ZERO; 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            upper[r][c] = (id.get(r, c) + traceless.get(r, c)) * half;
            lower[r][c] = (id.get(r, c) - traceless.get(r, c)) * half;
        }
    }
    let up_phase = Complex::from_polar(1.0, -radius * t);
    let down_phase = Complex::from_polar(1.0, radius * t);
    let mut out = [[ZERO; 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            out[r][c] = global * (up_phase * upper[r][c] + down_phase * lower[r][c]);
        }
    }
    Ok(Mat2::new(out))
}

/// The general single-qubit gate
/// `[[cos(θ/2), −e^{iλ} sin(θ/2)], [e^{iφ} sin(θ/2), e^{i(λ+φ)} cos(θ/2)]]`.
pub fn u3_matrix(theta: f64, phi: f64, lambda: f64) -> Result<Mat2> {
    ensure_finite("theta", theta)?;
    ensure_finite("phi", phi)?;
    ensure_finite("lambda", lambda)?;
    let (s, c) = (0.5 * theta).sin_cos();
    Ok(Mat2::new([
        [Complex::new(c, 0.0), -Complex::from_polar(s, lambda)],
        [Complex::from_polar(s, phi), Complex::from_polar(c, lambda + phi)],
    ]))
}

/// `U3(θ, −π/2, π/2)`, the Rabi evolution operator for `θ = 2Ωt`.
pub fn rabi_u3(theta: f64) -> Result<Mat2> {
    u3_matrix(theta, RABI_PHI, RABI_LAMBDA)
}

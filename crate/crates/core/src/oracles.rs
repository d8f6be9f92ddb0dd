//! Analytic routes to the survival probability that never touch the
//! statevector engine.
//!
//! Once each ancilla CNOT has fired, the monitored qubit is fully dephased
//! and its populations evolve as a two-state Markov chain: each slice of
//! `θ/n` keeps the qubit where it is with probability `cos²(θ/2n)` and
//! flips it otherwise. After `n` slices the chance of reading 0 is
//! `(1 + cosⁿ(θ/n)) / 2`.

use std::f64::consts::PI;

use crate::error::{Result, ZenoError};
use crate::math::rabi_u3;
use crate::state::QubitDensity;

/// Total rotation and slice count of one Zeno experiment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZenoParams {
    theta_total: f64,
    n: u32,
}

impl ZenoParams {
    /// `theta_total = 2Ωt` must lie in `[0, π]`; `n ≥ 1`.
    pub fn new(theta_total: f64, n: u32) -> Result<Self> {
        check_theta(theta_total)?;
        if n == 0 {
            return Err(ZenoError::InvalidParameter(
                "number of slices must be at least 1".into(),
            ));
        }
        Ok(ZenoParams { theta_total, n })
    }

    pub fn theta_total(&self) -> f64 {
        self.theta_total
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Rotation angle of a single slice.
    pub fn slice_angle(&self) -> f64 {
        self.theta_total / f64::from(self.n)
    }
}

/// Rejects angles outside `[0, π]` rather than wrapping them.
pub fn check_theta(theta: f64) -> Result<()> {
    if theta.is_finite() && (0.0..=PI).contains(&theta) {
        Ok(())
    } else {
        Err(ZenoError::InvalidParameter(format!(
            "theta {theta} is outside [0, pi]"
        )))
    }
}

/// `(1 + cosⁿ(θ/n)) / 2`.
pub fn survival_closed_form(params: &ZenoParams) -> f64 {
    let contraction = params.slice_angle().cos();
    0.5 * (1.0 + powu(contraction, params.n))
}

fn powu(base: f64, exp: u32) -> f64 {
    match i32::try_from(exp) {
        Ok(e) => base.powi(e),
        Err(_) => base.powf(f64::from(exp)),
    }
}

/// Evolves a lone 2×2 density matrix: `n` times rotate by the slice U3,
/// then erase the coherences. Returns the final ground-state population.
pub fn survival_via_channel(params: &ZenoParams) -> f64 {
    let slice = rabi_u3(params.slice_angle()).expect("validated angle is finite");
    let mut rho = QubitDensity::ground();
    for _ in 0..params.n {
        rho = rho.conjugate(&slice).dephase();
    }
    rho.population(0)
}

/// Short-time expansion `1 − Ω²t²` of a single uninterrupted evolution.
pub fn taylor_survival_single(omega: f64, t: f64) -> f64 {
    let phase = omega * t;
    1.0 - phase * phase
}

/// Linearized `n`-interval survival `1 − Ω²t²/n`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn taylor_survival_n(omega: f64, t: f64, n: u32) -> f64 {
    assert!(n >= 1, "interval count must be at least 1");
    let phase = omega * t;
    1.0 - phase * phase / f64::from(n)
}

/// Product form `(1 − Ω²(t/n)²)ⁿ` that [`taylor_survival_n`] linearizes.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn taylor_survival_product(omega: f64, t: f64, n: u32) -> f64 {
    assert!(n >= 1, "interval count must be at least 1");
    let step = omega * t / f64::from(n);
    powu(1.0 - step * step, n)
}

//! Circuit families of the Zeno experiment and the survival sweep.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::circuit::{run_circuit, Circuit};
use crate::error::{Result, ZenoError};
use crate::math::{rabi_u3, Mat2, RABI_LAMBDA, RABI_PHI};
use crate::oracles::{check_theta, survival_closed_form, survival_via_channel, ZenoParams};
use crate::sampling::{sample_shots, DEFAULT_SHOTS};

/// Largest slice count the statevector backend is asked to simulate
/// (`n + 1` qubits).
pub const MAX_STATEVECTOR_N: usize = 20;

/// Single `U3(θ, −π/2, π/2)` on q0.
pub fn build_rabi_circuit(theta: f64) -> Result<Circuit> {
    check_theta(theta)?;
    let mut circuit = Circuit::new(1)?;
    circuit.u3(0, theta, RABI_PHI, RABI_LAMBDA)?;
    Ok(circuit)
}

/// `n` slices of `U3(θ/n, −π/2, π/2)` on q0, each followed by a CNOT from
/// q0 onto its own fresh ancilla `q[k]`.
pub fn build_qze_circuit(theta_total: f64, n: usize) -> Result<Circuit> {
    check_theta(theta_total)?;
    if n == 0 {
        return Err(ZenoError::InvalidParameter(
            "number of slices must be at least 1".into(),
        ));
    }
    if n > MAX_STATEVECTOR_N {
        return Err(ZenoError::Capacity(format!(
            "{n} measurements need {} qubits; the statevector backend stops at n = {MAX_STATEVECTOR_N}",
            n + 1
        )));
    }
    let slice = theta_total / n as f64;
    let mut circuit = Circuit::new(n + 1)?;
    for ancilla in 1..=n {
        circuit.u3(0, slice, RABI_PHI, RABI_LAMBDA)?.cnot(0, ancilla)?;
    }
    Ok(circuit)
}

/// `n_slices` consecutive `U3(θ/n_slices, −π/2, π/2)` gates on q0 with no
/// entangling gates.
pub fn build_sliced_rotation_circuit(theta_total: f64, n_slices: usize) -> Result<Circuit> {
    check_theta(theta_total)?;
    if n_slices == 0 {
        return Err(ZenoError::InvalidParameter(
            "number of slices must be at least 1".into(),
        ));
    }
    let slice = theta_total / n_slices as f64;
    let mut circuit = Circuit::new(1)?;
    for _ in 0..n_slices {
        circuit.u3(0, slice, RABI_PHI, RABI_LAMBDA)?;
    }
    Ok(circuit)
}

/// Survival probability computed by a given route.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Backend {
    Statevector,
    Channel,
    ClosedForm,
}

impl Backend {
    pub const ALL: [Backend; 3] = [Backend::Statevector, Backend::Channel, Backend::ClosedForm];

    pub fn name(&self) -> &'static str {
        match self {
            Backend::Statevector => "statevector",
            Backend::Channel => "channel",
            Backend::ClosedForm => "closed_form",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Backend {
    type Err = ZenoError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "statevector" => Ok(Backend::Statevector),
            "channel" => Ok(Backend::Channel),
            "closed_form" | "closed-form" => Ok(Backend::ClosedForm),
            other => Err(ZenoError::parse(
                other,
                "expected statevector, channel or closed_form",
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub theta_total: f64,
    pub n_min: usize,
    pub n_max: usize,
    pub shots: u64,
    pub seed: u64,
    pub backends: Vec<Backend>,
}

impl SweepConfig {
    /// All backends, 8192 shots, seed 0.
    pub fn new(theta_total: f64, n_min: usize, n_max: usize) -> Self {
        SweepConfig {
            theta_total,
            n_min,
            n_max,
            shots: DEFAULT_SHOTS,
            seed: 0,
            backends: Backend::ALL.to_vec(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_theta(self.theta_total)?;
        if !(1 <= self.n_min && self.n_min <= self.n_max) {
            return Err(ZenoError::InvalidParameter(format!(
                "n range {}..{} must satisfy 1 <= n_min <= n_max",
                self.n_min, self.n_max
            )));
        }
        if self.n_max > MAX_STATEVECTOR_N {
            return Err(ZenoError::Capacity(format!(
                "sweeps stop at n = {MAX_STATEVECTOR_N}, asked for {}",
                self.n_max
            )));
        }
        if self.shots == 0 {
            return Err(ZenoError::InvalidParameter("shots must be at least 1".into()));
        }
        if self.backends.is_empty() {
            return Err(ZenoError::InvalidParameter(
                "at least one backend is required".into(),
            ));
        }
        Ok(())
    }

    fn wants(&self, backend: Backend) -> bool {
        self.backends.contains(&backend)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurvivalPoint {
    pub n: usize,
    pub p_exact: Option<f64>,
    pub p_channel: Option<f64>,
    pub p_closed: Option<f64>,
    pub counts0: u64,
    pub counts1: u64,
    pub shots: u64,
    pub seed: u64,
}

impl SurvivalPoint {
    /// Best available probability: statevector, then channel, then closed form.
    pub fn probability(&self) -> f64 {
        self.p_exact
            .or(self.p_channel)
            .or(self.p_closed)
            .expect("a sweep point always carries at least one backend")
    }

    pub fn sampled_frequency(&self) -> f64 {
        self.counts0 as f64 / self.shots as f64
    }
}

/// Survival against measurement count for one total rotation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurvivalCurve {
    #[serde(rename = "theta")]
    pub theta_total: f64,
    pub points: Vec<SurvivalPoint>,
}

fn sweep_point(config: &SweepConfig, n: usize) -> Result<SurvivalPoint> {
    let slices = u32::try_from(n)
        .map_err(|_| ZenoError::InvalidParameter(format!("slice count {n} too large")))?;
    let params = ZenoParams::new(config.theta_total, slices)?;
    let p_exact = if config.wants(Backend::Statevector) {
        let state = run_circuit(&build_qze_circuit(config.theta_total, n)?)?;
        Some(state.prob_qubit0(0))
    } else {
        None
    };
    let p_channel = config
        .wants(Backend::Channel)
        .then(|| survival_via_channel(&params));
    let p_closed = config
        .wants(Backend::ClosedForm)
        .then(|| survival_closed_form(&params));

    let seed = config.seed ^ n as u64;
    let source = p_exact.or(p_channel).or(p_closed).ok_or_else(|| {
        ZenoError::InvalidParameter("at least one backend is required".into())
    })?;
    let histogram = sample_shots(source, config.shots, seed)?;
    Ok(SurvivalPoint {
        n,
        p_exact,
        p_channel,
        p_closed,
        counts0: histogram.counts0,
        counts1: histogram.counts1,
        shots: histogram.shots,
        seed,
    })
}

/// Evaluates every requested backend for each `n` in `n_min..=n_max` and
/// samples a shot histogram per point with seed `config.seed ^ n`.
///
/// Points are computed in parallel and returned in `n` order; the output
/// does not depend on scheduling.
pub fn run_sweep(config: &SweepConfig) -> Result<SurvivalCurve> {
    config.validate()?;
    let points = (config.n_min..=config.n_max)
        .into_par_iter()
        .map(|n| sweep_point(config, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(SurvivalCurve {
        theta_total: config.theta_total,
        points,
    })
}

/// One U3 of the full angle against `n_slices` U3 gates of a fraction of it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DecompositionReport {
    pub theta_total: f64,
    pub n_slices: usize,
    pub p_single: f64,
    pub p_sliced: f64,
    pub probability_gap: f64,
    pub max_entrywise_gate_gap: f64,
}

pub fn verify_decomposition(theta_total: f64, n_slices: usize) -> Result<DecompositionReport> {
    let single = build_rabi_circuit(theta_total)?;
    let sliced = build_sliced_rotation_circuit(theta_total, n_slices)?;

    let single_gate = rabi_u3(theta_total)?;
    let slice_gate = rabi_u3(theta_total / n_slices as f64)?;
    let mut product: Mat2 = slice_gate;
    for _ in 1..n_slices {
        product = slice_gate * product;
    }

    let p_single = run_circuit(&single)?.prob_qubit0(0);
    let p_sliced = run_circuit(&sliced)?.prob_qubit0(0);
    Ok(DecompositionReport {
        theta_total,
        n_slices,
        p_single,
        p_sliced,
        probability_gap: (p_single - p_sliced).abs(),
        max_entrywise_gate_gap: product.max_abs_diff(&single_gate),
    })
}

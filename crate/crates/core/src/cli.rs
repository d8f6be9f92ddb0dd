//! Command-line surface of the `zeno` binary.
//!
//! Parsing is done with clap; [`Cli::render`] turns a parsed invocation into
//! the exact text that ends up on stdout or in `--out`.

use std::fmt::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Result, ZenoError};
use crate::experiments::{
    build_qze_circuit, build_rabi_circuit, build_sliced_rotation_circuit, run_sweep,
    verify_decomposition, Backend, SweepConfig,
};
use crate::render::{
    angle_label, emit_csv_curves, emit_json, emit_qasm, emit_svg, format_significant, parse_angle,
    print_trace, ANGLE_DIGITS, PROBABILITY_DIGITS,
};
use crate::sampling::{sample_shots, DEFAULT_SHOTS};
use crate::circuit::run_circuit;

/// Environment variable consulted when `--seed` is absent.
pub const SEED_ENV: &str = "ZENO_SEED";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
    Qasm,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "zeno", version, about = "Quantum Zeno survival experiments on an exact statevector simulator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; each command accepts a subset.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Survival probability against the number of measurements.
    Sweep {
        /// Total rotation, e.g. `pi/2`; repeat for several series.
        #[arg(long, required = true, value_parser = parse_angle)]
        theta: Vec<f64>,
        /// `N`, `A..B` or `A..=B`; both ends are included either way.
        #[arg(long, default_value = "1..14", value_parser = parse_n_range)]
        n: (usize, usize),
        #[arg(long, default_value_t = DEFAULT_SHOTS)]
        shots: u64,
        #[arg(long)]
        seed: Option<u64>,
        /// Comma-separated subset of statevector, channel, closed_form.
        #[arg(long, value_delimiter = ',', default_values = ["statevector", "channel", "closed_form"])]
        backends: Vec<Backend>,
    },
    /// A single U3 rotation read out on q0.
    Rabi {
        #[arg(long, value_parser = parse_angle)]
        theta: f64,
        #[arg(long, default_value_t = DEFAULT_SHOTS)]
        shots: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// State of the register after every gate of a Zeno circuit.
    Trace {
        #[arg(long, value_parser = parse_angle)]
        theta: f64,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Compare one U3 against the same rotation split into slices.
    VerifyDecomp {
        #[arg(long, value_parser = parse_angle)]
        theta: f64,
        #[arg(long)]
        slices: usize,
    },
    /// OpenQASM 2.0 for the Zeno (`--n`), sliced (`--slices`) or single-gate circuit.
    Qasm {
        #[arg(long, value_parser = parse_angle)]
        theta: f64,
        #[arg(long, conflicts_with = "slices")]
        n: Option<usize>,
        #[arg(long)]
        slices: Option<usize>,
    },
}

/// Parses `N`, `A..B` or `A..=B`; both ends inclusive.
pub fn parse_n_range(text: &str) -> Result<(usize, usize)> {
    let number = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| ZenoError::parse(t, "expected a non-negative integer"))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (number(lo)?, number(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let n = number(text)?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi {
        return Err(ZenoError::parse(text, "range must satisfy 1 <= start <= end"));
    }
    Ok((lo, hi))
}

/// `--seed` wins over `ZENO_SEED`; with neither the seed is 0.
pub fn resolve_seed(flag: Option<u64>, env: Option<&str>) -> Result<u64> {
    match (flag, env) {
        (Some(seed), _) => Ok(seed),
        (None, Some(text)) => text
            .trim()
            .parse()
            .map_err(|_| ZenoError::parse(text, format!("{SEED_ENV} must be an unsigned 64-bit integer"))),
        (None, None) => Ok(0),
    }
}

fn env_seed() -> Option<String> {
    std::env::var(SEED_ENV).ok()
}

fn pick_format(requested: Option<Format>, allowed: &[Format], command: &str) -> Result<Format> {
    let format = requested.unwrap_or(allowed[0]);
    if allowed.contains(&format) {
        Ok(format)
    } else {
        Err(ZenoError::Usage(format!(
            "`{command}` cannot produce {format:?} output (supported: {allowed:?})"
        )))
    }
}

#[derive(Serialize)]
struct RabiReport {
    theta: f64,
    p_exact: f64,
    shots: u64,
    counts0: u64,
    counts1: u64,
    seed: u64,
    p_sampled: f64,
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| ZenoError::Invariant(format!("json serialization failed: {e}")))
}

impl Cli {
    /// Produces the command's output text without touching the filesystem.
    pub fn render(&self) -> Result<String> {
        self.render_with_env_seed(env_seed().as_deref())
    }

    pub fn render_with_env_seed(&self, env_seed: Option<&str>) -> Result<String> {
        match &self.command {
            Command::Sweep {
                theta,
                n,
                shots,
                seed,
                backends,
            } => {
                let format = pick_format(self.format, &[Format::Csv, Format::Json, Format::Svg], "sweep")?;
                let seed = resolve_seed(*seed, env_seed)?;
                let curves = theta
                    .iter()
                    .map(|&theta_total| {
                        run_sweep(&SweepConfig {
                            theta_total,
                            n_min: n.0,
                            n_max: n.1,
                            shots: *shots,
                            seed,
                            backends: backends.clone(),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                match format {
                    Format::Json => emit_json(&curves),
                    Format::Svg => emit_svg(&curves),
                    _ => Ok(emit_csv_curves(&curves)),
                }
            }
            Command::Rabi { theta, shots, seed } => {
                let format = pick_format(self.format, &[Format::Text, Format::Json, Format::Qasm], "rabi")?;
                let circuit = build_rabi_circuit(*theta)?;
                if format == Format::Qasm {
                    return Ok(emit_qasm(&circuit));
                }
                let seed = resolve_seed(*seed, env_seed)?;
                let p_exact = run_circuit(&circuit)?.prob_qubit0(0);
                let hist = sample_shots(p_exact, *shots, seed)?;
                let report = RabiReport {
                    theta: *theta,
                    p_exact,
                    shots: hist.shots,
                    counts0: hist.counts0,
                    counts1: hist.counts1,
                    seed,
                    p_sampled: hist.frequency0(),
                };
                if format == Format::Json {
                    return to_json(&report);
                }
                let mut out = String::new();
                writeln!(out, "theta = {} ({})", format_significant(*theta, ANGLE_DIGITS), angle_label(*theta)).unwrap();
                writeln!(out, "p_exact = {}", format_significant(p_exact, PROBABILITY_DIGITS)).unwrap();
                writeln!(out, "shots = {}", report.shots).unwrap();
                writeln!(out, "seed = {seed}").unwrap();
                writeln!(out, "counts0 = {}", report.counts0).unwrap();
                writeln!(out, "counts1 = {}", report.counts1).unwrap();
                writeln!(out, "p_sampled = {}", format_significant(report.p_sampled, PROBABILITY_DIGITS)).unwrap();
                Ok(out)
            }
            Command::Trace { theta, n } => {
                pick_format(self.format, &[Format::Text], "trace")?;
                print_trace(&build_qze_circuit(*theta, *n)?)
            }
            Command::VerifyDecomp { theta, slices } => {
                let format = pick_format(self.format, &[Format::Text, Format::Json], "verify-decomp")?;
                let report = verify_decomposition(*theta, *slices)?;
                if format == Format::Json {
                    return to_json(&report);
                }
                let mut out = String::new();
                writeln!(out, "theta = {} ({})", format_significant(*theta, ANGLE_DIGITS), angle_label(*theta)).unwrap();
                writeln!(out, "slices = {slices}").unwrap();
                writeln!(out, "p_single = {}", format_significant(report.p_single, PROBABILITY_DIGITS)).unwrap();
                writeln!(out, "p_sliced = {}", format_significant(report.p_sliced, PROBABILITY_DIGITS)).unwrap();
                writeln!(out, "probability_gap = {:e}", report.probability_gap).unwrap();
                writeln!(out, "max_entrywise_gate_gap = {:e}", report.max_entrywise_gate_gap).unwrap();
                Ok(out)
            }
            Command::Qasm { theta, n, slices } => {
                pick_format(self.format, &[Format::Qasm], "qasm")?;
                let circuit = match (n, slices) {
                    (Some(n), _) => build_qze_circuit(*theta, *n)?,
                    (None, Some(slices)) => build_sliced_rotation_circuit(*theta, *slices)?,
                    (None, None) => build_rabi_circuit(*theta)?,
                };
                Ok(emit_qasm(&circuit))
            }
        }
    }

    /// Renders and writes to `--out` or stdout.
    pub fn execute(&self) -> Result<()> {
        let text = self.render()?;
        match &self.out {
            Some(path) => std::fs::write(path, text)?,
            None => {
                use std::io::Write as _;
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(text.as_bytes())?;
                stdout.flush()?;
            }
        }
        Ok(())
    }
}

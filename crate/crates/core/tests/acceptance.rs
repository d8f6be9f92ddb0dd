//! Exit criteria for the whole crate. Each criterion prints one
//! `PASS`/`FAIL` line; run with `-- --nocapture` to see them.
//!
//! Criterion 7 (path-enumeration check of the closed form) runs first:
//! criteria 3 to 6 lean on the closed form and are reported as failed if
//! it does not hold.

mod common;

use std::f64::consts::PI;
use std::process::Command;

use zeno::{
    build_qze_circuit, run_circuit, run_sweep, sample_shots, survival_closed_form,
    survival_via_channel, trace_states, verify_decomposition, Op, SweepConfig, ZenoParams,
};

type Outcome = Result<String, String>;

const SHOT_TOL: f64 = 0.02;
const EXACT_TOL: f64 = 1e-12;
const SERIES: [(f64, &str); 5] = [
    (PI / 2.0, "pi/2"),
    (PI / 3.0, "pi/3"),
    (PI / 4.0, "pi/4"),
    (PI / 5.0, "pi/5"),
    (PI / 6.0, "pi/6"),
];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn zeno(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_zeno"))
        .args(args)
        .env_remove("ZENO_SEED")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("zeno {args:?} failed: {}", String::from_utf8_lossy(&out.stderr)));
    }
    Ok(out.stdout)
}

fn closed(theta: f64, n: u32) -> f64 {
    survival_closed_form(&ZenoParams::new(theta, n).unwrap())
}

fn exact(theta: f64, n: usize) -> f64 {
    run_circuit(&build_qze_circuit(theta, n).unwrap()).unwrap().prob_qubit0(0)
}

fn field(text: &str, key: &str) -> Result<f64, String> {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .ok_or_else(|| format!("missing `{key}` in output:\n{text}"))?
        .parse()
        .map_err(|e| format!("bad `{key}`: {e}"))
}

fn rabi_single_rotation() -> Outcome {
    let text = String::from_utf8(zeno(&["rabi", "--theta", "pi/2"])?).map_err(|e| e.to_string())?;
    ensure(text.contains("p_exact = 0.500000000000\n"), || format!("unexpected report:\n{text}"))?;
    let p_exact = field(&text, "p_exact")?;
    let p_sampled = field(&text, "p_sampled")?;
    ensure((p_exact - 0.5).abs() <= EXACT_TOL, || format!("p_exact = {p_exact}"))?;
    ensure((p_sampled - 0.5).abs() <= SHOT_TOL, || format!("p_sampled = {p_sampled}"))?;
    Ok(format!("p_exact = {p_exact:.12}, 8192-shot estimate {p_sampled:.5}"))
}

fn two_slices() -> Outcome {
    let p = exact(PI / 2.0, 2);
    ensure((p - 0.75).abs() <= EXACT_TOL, || format!("exact {p}"))?;
    let hist = sample_shots(p, 8192, 42 ^ 2).map_err(|e| e.to_string())?;
    let f = hist.frequency0();
    ensure((f - 0.75).abs() <= SHOT_TOL, || format!("sampled {f}"))?;
    Ok(format!("exact {p:.12}, sampled {f:.5}"))
}

fn three_slices_appendix_b() -> Outcome {
    let (c, s) = ((PI / 12.0).cos(), (PI / 12.0).sin());
    let expanded = c.powi(6) + 3.0 * c.powi(2) * s.powi(4);
    let p = exact(PI / 2.0, 3);
    let closed_value = (1.0 + (PI / 6.0).cos().powi(3)) / 2.0;
    ensure((p - expanded).abs() <= EXACT_TOL, || format!("statevector {p} vs expression {expanded}"))?;
    ensure((expanded - 0.82475).abs() <= 5e-5, || format!("{expanded} not within 5e-5 of 0.82475"))?;
    // the quoted 0.8247 is the exact value truncated to four decimals
    ensure((expanded * 1e4).floor() / 1e4 == 0.8247, || format!("{expanded} does not truncate to 0.8247"))?;
    ensure((expanded - closed_value).abs() <= EXACT_TOL, || format!("closed form {closed_value}"))?;
    ensure((closed(PI / 2.0, 3) - closed_value).abs() <= EXACT_TOL, || "library closed form differs".into())?;
    Ok(format!("P = {p:.10}"))
}

fn decomposition_appendix_a() -> Outcome {
    let mut details = Vec::new();
    for (theta, slices) in [(PI / 2.0, 8), (PI / 5.0, 14)] {
        let r = verify_decomposition(theta, slices).map_err(|e| e.to_string())?;
        ensure(r.max_entrywise_gate_gap <= EXACT_TOL, || format!("gate gap {r:?}"))?;
        ensure(r.probability_gap <= EXACT_TOL, || format!("probability gap {r:?}"))?;
        details.push(format!("{slices} slices: gaps {:.1e}/{:.1e}", r.max_entrywise_gate_gap, r.probability_gap));
        if slices == 14 {
            ensure((r.p_sliced - 0.904508).abs() <= 1e-6, || format!("p = {}", r.p_sliced))?;
            ensure((r.p_single - 0.904508).abs() <= 1e-6, || format!("p = {}", r.p_single))?;
        }
    }
    Ok(details.join("; "))
}

fn sweep_five_series() -> Outcome {
    for (theta, label) in SERIES {
        let curve = run_sweep(&SweepConfig::new(theta, 1, 14)).map_err(|e| e.to_string())?;
        let mut last = f64::NEG_INFINITY;
        for p in &curve.points {
            let (e, ch, cl) = (p.p_exact.unwrap(), p.p_channel.unwrap(), p.p_closed.unwrap());
            ensure(e > last, || format!("θ={label}: not increasing at n={}", p.n))?;
            ensure((e - ch).abs() <= EXACT_TOL && (e - cl).abs() <= EXACT_TOL && (ch - cl).abs() <= EXACT_TOL, || {
                format!("θ={label} n={}: {e} / {ch} / {cl}", p.n)
            })?;
            last = e;
        }
    }
    let p14 = closed(PI / 2.0, 14);
    ensure((p14 - 0.9577).abs() <= 1e-4, || format!("P(14) = {p14}"))?;
    ensure((exact(PI / 2.0, 14) - p14).abs() <= EXACT_TOL, || "statevector P(14) differs".into())?;

    let mut args = vec!["sweep"];
    for (_, label) in SERIES {
        args.extend(["--theta", label]);
    }
    args.extend(["--n", "1..14", "--format", "svg"]);
    let svg = String::from_utf8(zeno(&args)?).map_err(|e| e.to_string())?;
    let series = svg.matches("<polyline").count();
    let legend = svg.matches("class=\"legend-entry\"").count();
    ensure(series == 5 && legend == 5, || format!("{series} polylines, {legend} legend entries"))?;
    Ok(format!("5 monotone series, P(14) = {p14:.6}, svg has 5 series"))
}

fn taylor_consistency() -> Outcome {
    let theta = PI / 2.0;
    let gap = |n: u32| (closed(theta, n) - (1.0 - theta * theta / (4.0 * f64::from(n)))).abs();
    let g100 = gap(100);
    ensure(g100 <= 5e-5, || format!("gap at n=100 is {g100:e}"))?;
    let ratio = gap(50) / gap(200);
    ensure(ratio >= 3.5, || format!("gap ratio {ratio}"))?;
    Ok(format!("gap(100) = {g100:.3e}, gap(50)/gap(200) = {ratio:.2}"))
}

fn closed_form_provenance() -> Outcome {
    let mut worst = 0.0_f64;
    for theta in [PI / 2.0, PI / 3.0, PI / 6.0] {
        for n in 1..=10usize {
            let brute = common::survival_by_enumeration(theta, n);
            let diff = (brute - closed(theta, n as u32)).abs();
            ensure(diff <= EXACT_TOL, || format!("θ={theta} n={n}: diff {diff:e}"))?;
            let channel = survival_via_channel(&ZenoParams::new(theta, n as u32).unwrap());
            ensure((brute - channel).abs() <= EXACT_TOL, || format!("channel θ={theta} n={n}"))?;
            worst = worst.max(diff);
        }
    }
    Ok(format!("max |enumeration − closed form| = {worst:.1e}"))
}

fn dephasing_after_cnots() -> Outcome {
    let mut checked = 0;
    let mut worst = 0.0_f64;
    for (theta, label) in SERIES {
        for n in 1..=14 {
            let circuit = build_qze_circuit(theta, n).unwrap();
            let states = trace_states(&circuit).map_err(|e| e.to_string())?;
            for (step, (op, state)) in circuit.ops().iter().zip(&states).enumerate() {
                if let Op::Cnot { .. } = op {
                    let off = state.reduced_density_q0().off_diagonal_magnitude();
                    ensure(off <= EXACT_TOL, || format!("θ={label} n={n} step {}: {off:e}", step + 1))?;
                    worst = worst.max(off);
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} post-CNOT states, max |ρ01| = {worst:.1e}"))
}

fn byte_identical_sweeps() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut files = Vec::new();
    for run in 0..2 {
        let path = dir.path().join(format!("run{run}.csv"));
        zeno(&[
            "sweep", "--theta", "pi/2", "--n", "1..14", "--shots", "8192", "--seed", "42", "--format", "csv",
            "--out", path.to_str().unwrap(),
        ])?;
        files.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(!files[0].is_empty() && files[0] == files[1], || "outputs differ".into())?;
    Ok(format!("{} bytes, identical", files[0].len()))
}

#[test]
fn acceptance_criteria() {
    let gate = closed_form_provenance();
    let gate_ok = gate.is_ok();
    let gated = |f: fn() -> Outcome| -> Outcome {
        if gate_ok {
            f()
        } else {
            Err("closed form failed its enumeration check (criterion 7)".into())
        }
    };

    let results: Vec<(u32, &str, Outcome)> = vec![
        (7, "closed form vs 2^n path enumeration", gate),
        (1, "single π/2 rotation (CLI)", rabi_single_rotation()),
        (2, "two-slice survival 0.75", two_slices()),
        (3, "three-slice survival 0.82475", gated(three_slices_appendix_b)),
        (4, "slice decomposition equivalence", gated(decomposition_appendix_a)),
        (5, "five-series sweep and SVG", gated(sweep_five_series)),
        (6, "linearized survival consistency", gated(taylor_consistency)),
        (8, "q0 dephased after every CNOT", dephasing_after_cnots()),
        (9, "byte-identical CSV sweeps (CLI)", byte_identical_sweeps()),
    ];

    let mut failures = 0;
    for (id, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS  criterion {id}: {name} ({detail})"),
            Err(why) => {
                failures += 1;
                println!("FAIL  criterion {id}: {name}: {why}");
            }
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}

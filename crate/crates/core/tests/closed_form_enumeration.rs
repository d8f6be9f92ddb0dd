//! The closed form `(1 + cosⁿ(θ/n))/2` is only trusted after it matches a
//! brute-force sum over every classical dephasing record.

mod common;

use std::f64::consts::PI;

use common::{all_paths, path_probability, survival_by_enumeration};
use zeno::{build_qze_circuit, run_circuit, survival_closed_form, ZenoParams};

#[test]
fn enumeration_matches_closed_form_up_to_ten_slices() {
    for theta in [PI / 2.0, PI / 3.0, PI / 6.0] {
        for n in 1..=10u32 {
            let brute = survival_by_enumeration(theta, n as usize);
            let closed = survival_closed_form(&ZenoParams::new(theta, n).unwrap());
            assert!((brute - closed).abs() <= 1e-12, "θ={theta} n={n}: {brute} vs {closed}");
        }
    }
}

#[test]
fn frozen_enumeration_values() {
    // Computed once with an independent path enumerator and frozen here.
    let frozen = [
        (PI / 2.0, 4, 0.864_276_695_296_637_1),
        (PI / 2.0, 7, 0.918_579_095_562_619_4),
        (PI / 2.0, 10, 0.941_742_591_839_741_5),
        (PI / 3.0, 4, 0.935_256_350_946_109_7),
        (PI / 3.0, 7, 0.962_193_658_176_867),
        (PI / 3.0, 10, 0.973_274_923_712_568_3),
        (PI / 6.0, 4, 0.983_108_044_308_794_5),
        (PI / 6.0, 7, 0.990_295_005_480_108_5),
        (PI / 6.0, 10, 0.993_189_778_641_499_4),
    ];
    for (theta, n, expected) in frozen {
        assert!((survival_by_enumeration(theta, n) - expected).abs() <= 1e-14);
        let closed = survival_closed_form(&ZenoParams::new(theta, n as u32).unwrap());
        assert!((closed - expected).abs() <= 1e-12);
    }
}

#[test]
fn ancillas_record_the_classical_path() {
    // Each ancilla holds q0's value right after its slice, so the basis
    // state (q0 = last outcome, ancilla k = outcome k) carries exactly the
    // probability of that record.
    for (theta, n) in [(PI / 2.0, 3), (PI / 3.0, 5), (1.0, 6)] {
        let state = run_circuit(&build_qze_circuit(theta, n).unwrap()).unwrap();
        for path in all_paths(n) {
            let mut index = *path.last().unwrap() as usize;
            for (k, &bit) in path.iter().enumerate() {
                index |= (bit as usize) << (k + 1);
            }
            let amp = state.amplitude(index).norm_sqr();
            assert!((amp - path_probability(theta, &path)).abs() <= 1e-12, "{path:?}");
        }
    }
}

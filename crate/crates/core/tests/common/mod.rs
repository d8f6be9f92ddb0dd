//! Test-only oracles that share no code with the library's survival routes.

#![allow(dead_code)]

/// Probability of one classical record `path` (q0's value after each
/// slice), starting from 0, when every slice keeps the value with
/// probability `cos²(θ/2n)`.
pub fn path_probability(theta_total: f64, path: &[u8]) -> f64 {
    let n = path.len() as f64;
    let stay = (theta_total / (2.0 * n)).cos().powi(2);
    let flip = (theta_total / (2.0 * n)).sin().powi(2);
    let mut current = 0u8;
    let mut p = 1.0;
    for &next in path {
        p *= if next == current { stay } else { flip };
        current = next;
    }
    p
}

/// All 2ⁿ records, least significant bit = outcome of slice 1.
pub fn all_paths(n: usize) -> impl Iterator<Item = Vec<u8>> {
    (0u64..1 << n).map(move |bits| (0..n).map(|k| ((bits >> k) & 1) as u8).collect())
}

/// Survival by summing every record that ends in 0.
pub fn survival_by_enumeration(theta_total: f64, n: usize) -> f64 {
    all_paths(n)
        .filter(|path| path.last() == Some(&0))
        .map(|path| path_probability(theta_total, &path))
        .sum()
}

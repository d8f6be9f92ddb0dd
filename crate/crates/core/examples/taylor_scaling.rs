//! Short-time approximations of the survival probability against the
//! exact dephased result.
//!
//! cargo run --example taylor_scaling

use std::f64::consts::PI;

use zeno::{survival_closed_form, taylor_survival_n, taylor_survival_product, ZenoParams};

fn main() -> zeno::Result<()> {
    // θ = 2Ωt = π/2
    let (omega, t) = (1.0, PI / 4.0);
    println!(
        "{:>6} {:>14} {:>14} {:>14} {:>12}",
        "n", "exact", "(1-(Ωt/n)²)^n", "1-Ω²t²/n", "exact-linear"
    );
    for n in [1u32, 2, 5, 10, 20, 50, 100, 200, 1000, 10_000] {
        let exact = survival_closed_form(&ZenoParams::new(2.0 * omega * t, n)?);
        let product = taylor_survival_product(omega, t, n);
        let linear = taylor_survival_n(omega, t, n);
        println!("{n:>6} {exact:>14.10} {product:>14.10} {linear:>14.10} {:>12.3e}", exact - linear);
    }
    Ok(())
}

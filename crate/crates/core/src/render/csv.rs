use std::fmt::Write;

use super::{format_significant, ANGLE_DIGITS, PROBABILITY_DIGITS};
use crate::experiments::SurvivalCurve;

pub const CSV_HEADER: &str = "theta,n,p_exact,p_channel,p_closed,counts0,counts1,shots,seed";

fn probability_cell(p: Option<f64>) -> String {
    p.map(|p| format_significant(p, PROBABILITY_DIGITS))
        .unwrap_or_default()
}

fn push_rows(out: &mut String, curve: &SurvivalCurve) {
    let theta = format_significant(curve.theta_total, ANGLE_DIGITS);
    for point in &curve.points {
        writeln!(
            out,
            "{theta},{},{},{},{},{},{},{},{}",
            point.n,
            probability_cell(point.p_exact),
            probability_cell(point.p_channel),
            probability_cell(point.p_closed),
            point.counts0,
            point.counts1,
            point.shots,
            point.seed
        )
        .expect("writing to a String cannot fail");
    }
}

/// Header plus one row per point. Backends that were not run leave an
/// empty cell.
pub fn emit_csv(curve: &SurvivalCurve) -> String {
    emit_csv_curves(std::slice::from_ref(curve))
}

/// Several curves under a single header, in the given order.
pub fn emit_csv_curves(curves: &[SurvivalCurve]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for curve in curves {
        push_rows(&mut out, curve);
    }
    out
}

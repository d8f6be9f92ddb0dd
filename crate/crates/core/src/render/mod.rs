//! Text renderings of circuits and sweep results.

mod angle;
mod csv;
mod json;
mod qasm;
mod svg;
mod trace;

pub use angle::{angle_label, parse_angle};
pub use csv::{emit_csv, emit_csv_curves, CSV_HEADER};
pub use json::emit_json;
pub use qasm::emit_qasm;
pub use svg::{emit_svg, SVG_HEIGHT, SVG_WIDTH};
pub use trace::{format_state, print_trace};

/// Significant digits for probabilities in CSV and text reports.
pub const PROBABILITY_DIGITS: usize = 12;
/// Significant digits for angles; enough to round-trip any `f64`.
pub const ANGLE_DIGITS: usize = 17;

/// Fixed-point rendering of `x` with `digits` significant digits.
///
/// Zero renders as `0.` followed by `digits - 1` zeros.
pub fn format_significant(x: f64, digits: usize) -> String {
    assert!(digits >= 1, "at least one significant digit");
    if !x.is_finite() {
        return format!("{x}");
    }
    // Let the scientific formatter do the rounding, then read back the
    // exponent so that carries like 9.99… → 10.0 are accounted for.
    let sci = format!("{:.*e}", digits - 1, x);
    let exponent: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("scientific formatting always carries an exponent");
    let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(0.5, 12), "0.500000000000");
        assert_eq!(format_significant(0.75, 12), "0.750000000000");
        assert_eq!(format_significant(1.0, 12), "1.00000000000");
        assert_eq!(format_significant(0.0, 12), "0.00000000000");
        assert_eq!(format_significant(FRAC_PI_2, 17), "1.5707963267948966");
        assert_eq!(format_significant(-FRAC_PI_2, 17), "-1.5707963267948966");
        assert_eq!(format_significant(PI / 70.0, 17), "0.044879895051282759");
        assert_eq!(format_significant(0.999_999_999_999_9, 12), "1.00000000000");
        assert_eq!(format_significant(0.012_345, 3), "0.0123");
    }
}

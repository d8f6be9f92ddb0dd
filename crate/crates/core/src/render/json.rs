use crate::error::{Result, ZenoError};
use crate::experiments::SurvivalCurve;

/// `{theta, points: [...]}` for a single curve, an array of those for
/// several. Points mirror the CSV columns; skipped backends are `null`.
pub fn emit_json(curves: &[SurvivalCurve]) -> Result<String> {
    let rendered = match curves {
        [] => return Err(ZenoError::Usage("no curves to render".into())),
        [single] => serde_json::to_string_pretty(single),
        many => serde_json::to_string_pretty(many),
    }
    .map_err(|e| ZenoError::Invariant(format!("json serialization failed: {e}")))?;
    Ok(rendered + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::{run_sweep, SweepConfig};
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn single_and_multiple_curves() {
        let a = run_sweep(&SweepConfig::new(FRAC_PI_2, 1, 2)).unwrap();
        let b = run_sweep(&SweepConfig::new(PI / 3.0, 1, 2)).unwrap();

        let one: serde_json::Value = serde_json::from_str(&emit_json(std::slice::from_ref(&a)).unwrap()).unwrap();
        assert_eq!(one["theta"], FRAC_PI_2);
        assert_eq!(one["points"][1]["p_exact"], 0.75);
        assert_eq!(one["points"][1]["n"], 2);

        let two: serde_json::Value = serde_json::from_str(&emit_json(&[a, b]).unwrap()).unwrap();
        assert_eq!(two.as_array().unwrap().len(), 2);
        assert!(emit_json(&[]).is_err());
    }
}

use std::f64::consts::PI;

use crate::error::{Result, ZenoError};

fn positive_integer(token: &str) -> Result<u64> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ZenoError::parse(token, "expected a positive integer"));
    }
    match token.parse::<u64>() {
        Ok(0) => Err(ZenoError::parse(token, "must be positive")),
        Ok(v) if v <= 1 << 53 => Ok(v),
        _ => Err(ZenoError::parse(token, "integer too large")),
    }
}

fn parse_pi_multiple(token: &str) -> Result<u64> {
    match token {
        "pi" | "π" => Ok(1),
        _ => match token.split_once('*') {
            Some((factor, "pi" | "π")) => positive_integer(factor.trim()),
            _ => Err(ZenoError::parse(token, "expected `pi` or `J*pi`")),
        },
    }
}

/// Parses a rotation angle written as `pi`, `pi/K`, `J*pi/K`, `J*pi` or a
/// plain decimal literal. The result must lie in `[0, π]`.
///
/// `J*pi/K` evaluates as `(J·π)/K` in one multiply and one divide, so
/// `pi/2` is bit-identical to `std::f64::consts::FRAC_PI_2`.
pub fn parse_angle(expr: &str) -> Result<f64> {
    let text = expr.trim();
    if text.is_empty() {
        return Err(ZenoError::parse(expr, "empty angle"));
    }
    let value = if text.contains("pi") || text.contains('π') {
        let (numerator, denominator) = match text.split_once('/') {
            Some((num, den)) => (num.trim(), Some(positive_integer(den.trim())?)),
            None => (text, None),
        };
        let factor = parse_pi_multiple(numerator)?;
        let scaled = if factor == 1 { PI } else { factor as f64 * PI };
        match denominator {
            Some(k) => scaled / k as f64,
            None => scaled,
        }
    } else {
        let is_decimal = text
            .bytes()
            .all(|b| b.is_ascii_digit() || matches!(b, b'.' | b'e' | b'E' | b'+' | b'-'));
        let parsed = if is_decimal { text.parse::<f64>().ok() } else { None };
        match parsed {
            Some(v) if v.is_finite() => v,
            _ => return Err(ZenoError::parse(text, "not a decimal number or pi expression")),
        }
    };
    if !(0.0..=PI).contains(&value) {
        return Err(ZenoError::parse(text, "angle must lie in [0, pi]"));
    }
    Ok(value)
}

/// Human label such as `π/2` or `3π/7`; falls back to six decimals when
/// the angle is not a small rational multiple of π.
pub fn angle_label(theta: f64) -> String {
    if theta == 0.0 {
        return "0".to_string();
    }
    for k in 1..=360u32 {
        let j = theta * f64::from(k) / PI;
        let rounded = j.round();
        if rounded >= 1.0 && (j - rounded).abs() <= 1e-9 {
            let j = rounded as u64;
            return match (j, k) {
                (1, 1) => "π".to_string(),
                (j, 1) => format!("{j}π"),
                (1, k) => format!("π/{k}"),
                (j, k) => format!("{j}π/{k}"),
            };
        }
    }
    format!("{theta:.6}")
}

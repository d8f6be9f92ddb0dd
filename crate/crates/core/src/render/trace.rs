use std::fmt::Write;

use crate::circuit::{trace_states, Circuit, Op};
use crate::error::Result;
use crate::math::Complex;
use crate::state::StateVector;

/// Parts smaller than this print as zero at six decimals.
const DISPLAY_EPS: f64 = 5e-7;
const MINUS: char = '\u{2212}';

fn magnitude(x: f64) -> String {
    format!("{:.6}", x.abs())
}

/// Returns `(negative, body)` where body has no leading sign.
fn coefficient(amp: Complex) -> Option<(bool, String)> {
    let re = (amp.re.abs() >= DISPLAY_EPS).then_some(amp.re);
    let im = (amp.im.abs() >= DISPLAY_EPS).then_some(amp.im);
    match (re, im) {
        (None, None) => None,
        (Some(re), None) => Some((re < 0.0, magnitude(re))),
        (None, Some(im)) => Some((im < 0.0, format!("{}i", magnitude(im)))),
        (Some(re), Some(im)) => {
            let re_sign = if re < 0.0 { MINUS.to_string() } else { String::new() };
            let im_sign = if im < 0.0 { MINUS } else { '+' };
            Some((
                false,
                format!("({re_sign}{}{im_sign}{}i)", magnitude(re), magnitude(im)),
            ))
        }
    }
}

fn ket(index: usize, width: usize) -> String {
    let bits: String = (0..width)
        .map(|q| if (index >> q) & 1 == 1 { '1' } else { '0' })
        .collect();
    format!("|{bits}⟩")
}

/// Nonzero terms of `state` restricted to its lowest `width` qubits, in
/// ket order with q0 leftmost. Wires above `width` must be `|0⟩`.
pub fn format_state(state: &StateVector, width: usize) -> String {
    let width = width.clamp(1, state.num_qubits());
    let mut kets: Vec<(String, Complex)> = (0..1usize << width)
        .map(|index| (ket(index, width), state.amplitude(index)))
        .collect();
    kets.sort_by(|a, b| a.0.cmp(&b.0));

    let mut out = String::new();
    for (label, amp) in kets {
        let Some((negative, body)) = coefficient(amp) else {
            continue;
        };
        if !out.is_empty() {
            out.push(' ');
            out.push(if negative { MINUS } else { '+' });
        } else if negative {
            out.push(MINUS);
        }
        out.push_str(&body);
        out.push_str(&label);
    }
    out
}

fn describe(op: &Op) -> String {
    match *op {
        Op::U3 {
            target,
            theta,
            phi,
            lambda,
        } => format!("u3({theta:.6},{phi:.6},{lambda:.6}) q[{target}]"),
        Op::Cnot { control, target } => format!("cx q[{control}],q[{target}]"),
    }
}

/// Step-by-step listing of the register. The first line is the initial
/// `|0⟩`; each following line names the op and the resulting state.
///
/// Kets only span the wires touched so far, so a register grows as
/// ancillas are entangled in.
pub fn print_trace(circuit: &Circuit) -> Result<String> {
    let states = trace_states(circuit)?;
    let mut out = String::from("|0⟩\n");
    let mut width = 1;
    for (step, (op, state)) in circuit.ops().iter().zip(&states).enumerate() {
        width = width.max(op.max_qubit() + 1);
        writeln!(
            out,
            "step {} {}: {}",
            step + 1,
            describe(op),
            format_state(state, width)
        )
        .unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::build_qze_circuit;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn empty_circuit() {
        assert_eq!(print_trace(&Circuit::new(3).unwrap()).unwrap(), "|0⟩\n");
    }

    #[test]
    fn two_slice_steps_with_quarter_turn_slices() {
        // Per-slice angle π/2, so α = cos(π/4), β = −i sin(π/4).
        let text = print_trace(&build_qze_circuit(PI, 2).unwrap()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[1].ends_with(": 0.707107|0⟩ −0.707107i|1⟩"), "{}", lines[1]);
        assert!(lines[2].contains("0.707107|00⟩ −0.707107i|11⟩"), "{}", lines[2]);
        assert!(
            lines[3].ends_with(": 0.500000|00⟩ −0.500000|01⟩ −0.500000i|10⟩ −0.500000i|11⟩"),
            "{}",
            lines[3]
        );
        assert!(
            lines[4].ends_with(": 0.500000|000⟩ −0.500000|010⟩ −0.500000i|101⟩ −0.500000i|111⟩"),
            "{}",
            lines[4]
        );
    }

    #[test]
    fn two_slice_steps_for_half_turn_total() {
        // θ = π/2 split in two: α = cos(π/8), β = −i sin(π/8).
        let text = print_trace(&build_qze_circuit(FRAC_PI_2, 2).unwrap()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "|0⟩");
        assert_eq!(
            lines[1],
            "step 1 u3(0.785398,-1.570796,1.570796) q[0]: 0.923880|0⟩ −0.382683i|1⟩"
        );
        assert_eq!(lines[2], "step 2 cx q[0],q[1]: 0.923880|00⟩ −0.382683i|11⟩");
        assert!(
            lines[3].ends_with(": 0.853553|00⟩ −0.146447|01⟩ −0.353553i|10⟩ −0.353553i|11⟩"),
            "{}",
            lines[3]
        );
        assert!(
            lines[4].ends_with(": 0.853553|000⟩ −0.146447|010⟩ −0.353553i|101⟩ −0.353553i|111⟩"),
            "{}",
            lines[4]
        );
    }

    #[test]
    fn mixed_coefficients() {
        let amp = Complex::new(0.5, -0.25);
        assert_eq!(coefficient(amp).unwrap().1, "(0.500000−0.250000i)");
        assert!(coefficient(Complex::new(1e-9, -1e-9)).is_none());
    }
}

use std::fmt::Write;

use super::{format_significant, ANGLE_DIGITS};
use crate::circuit::{Circuit, Op};

/// OpenQASM 2.0 with `qelib1.inc` gate names, one classical bit holding the
/// readout of the measured qubit.
pub fn emit_qasm(circuit: &Circuit) -> String {
    let angle = |x: f64| format_significant(x, ANGLE_DIGITS);
    let mut out = String::from("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    writeln!(out, "qreg q[{}];", circuit.num_qubits()).unwrap();
    out.push_str("creg c[1];\n");
    for op in circuit.ops() {
        match *op {
            Op::U3 {
                target,
                theta,
                phi,
                lambda,
            } => writeln!(
                out,
                "u3({},{},{}) q[{target}];",
                angle(theta),
                angle(phi),
                angle(lambda)
            ),
            Op::Cnot { control, target } => writeln!(out, "cx q[{control}],q[{target}];"),
        }
        .unwrap();
    }
    writeln!(out, "measure q[{}] -> c[0];", circuit.measured_qubit()).unwrap();
    out
}

//! OpenQASM 3 emission.
//!
//! Every gate in the set maps onto a stdgates.inc primitive: h, x, swap,
//! cp and ccx. Phase angles are dyadic fractions of a full turn, printed
//! as `pi/2**e` so the text stays exact; `**` is the OpenQASM power
//! operator. Block annotations come out as comments ahead of their first
//! gate, which keeps the emitted file diffable against the circuit
//! structure without affecting any consumer.

use crate::angle::DyadicAngle;
use crate::circuit::{BlockKind, Circuit};
use crate::gate::Gate;
use std::fmt::Write;

fn angle_expr(angle: DyadicAngle) -> String {
    // sign * 2pi / 2^k == sign * pi / 2^(k-1)
    let sign = if angle.sign() < 0 { "-" } else { "" };
    match angle.denom_pow() {
        0 => format!("{sign}2*pi"),
        1 => format!("{sign}pi"),
        2 => format!("{sign}pi/2"),
        k => format!("{sign}pi/2**{}", k - 1),
    }
}

fn block_label(kind: BlockKind) -> &'static str {
    match kind {
        BlockKind::Qft => "qft",
        BlockKind::Iqft => "iqft",
        BlockKind::ToffoliStage => "toffoli-stage",
        BlockKind::Adder => "adder",
    }
}

/// Renders the circuit as a self-contained OpenQASM 3 program.
pub fn to_qasm(circuit: &Circuit) -> String {
    let mut out = String::new();
    out.push_str("OPENQASM 3.0;\n");
    out.push_str("include \"stdgates.inc\";\n\n");
    let _ = writeln!(out, "qubit[{}] q;", circuit.qubit_count());

    for (pos, gate) in circuit.gates().iter().enumerate() {
        for ann in circuit.annotations() {
            if ann.start == pos && ann.end > ann.start {
                match ann.index {
                    Some(i) => {
                        let _ = writeln!(out, "\n// {} {} [{}, {})", block_label(ann.kind), i, ann.start, ann.end);
                    }
                    None => {
                        let _ = writeln!(out, "\n// {} [{}, {})", block_label(ann.kind), ann.start, ann.end);
                    }
                }
            }
        }
        match *gate {
            Gate::H { target } => {
                let _ = writeln!(out, "h q[{target}];");
            }
            Gate::X { target } => {
                let _ = writeln!(out, "x q[{target}];");
            }
            Gate::Swap { a, b } => {
                let _ = writeln!(out, "swap q[{a}], q[{b}];");
            }
            Gate::CPhase {
                control,
                target,
                angle,
            } => {
                let _ = writeln!(out, "cp({}) q[{control}], q[{target}];", angle_expr(angle));
            }
            Gate::Toffoli {
                control1,
                control2,
                target,
            } => {
                let _ = writeln!(out, "ccx q[{control1}], q[{control2}], q[{target}];");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplier::build_multiplier;
    use crate::qft::qft_circuit;

    #[test]
    fn angle_rendering_is_exact() {
        assert_eq!(angle_expr(DyadicAngle::positive(1)), "pi");
        assert_eq!(angle_expr(DyadicAngle::positive(2)), "pi/2");
        assert_eq!(angle_expr(DyadicAngle::positive(5)), "pi/2**4");
        assert_eq!(angle_expr(DyadicAngle::negative(3)), "-pi/2**2");
        assert_eq!(angle_expr(DyadicAngle::positive(0)), "2*pi");
    }

    #[test]
    fn header_and_declaration_come_first() {
        let text = to_qasm(&qft_circuit(3).unwrap());
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("OPENQASM 3.0;"));
        assert_eq!(lines.next(), Some("include \"stdgates.inc\";"));
        assert!(text.contains("qubit[3] q;"));
        assert!(text.contains("// qft [0, 6)"));
    }

    #[test]
    fn multiplier_gate_lines_match_its_metrics() {
        let mult = build_multiplier(3).unwrap();
        let text = to_qasm(mult.circuit());
        let count = |prefix: &str| text.lines().filter(|l| l.starts_with(prefix)).count();
        assert_eq!(count("ccx "), 9);
        assert_eq!(count("h "), 12);
        assert_eq!(count("cp("), 70);
        assert_eq!(count("swap "), 0);
        assert!(text.contains("// toffoli-stage [0, 9)"));
        assert!(text.contains("// adder 0 "));
        assert!(text.contains("// adder 1 "));
        assert!(text.contains("// iqft "));
        // Inverse-transform rotations carry explicit negative angles, and
        // the lowest add-block exponent renders as a bare pi.
        assert!(text.contains("cp(-pi/2)"));
        assert!(text.contains("cp(pi)"));
    }
}

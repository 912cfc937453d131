//! Quantum Fourier transform synthesis.
//!
//! Wires are little endian: wire 0 carries the least significant bit of
//! the value being transformed. Wires are processed from the top down, so
//! each controlled phase fires while its control wire still holds a
//! computational-basis bit. After the swap-free transform, wire `p` is in
//! `(|0⟩ + exp(2πi·a/2^(p+1))|1⟩)/√2`, which is the Fourier expansion of
//! `a` with the output bits reversed. `WithSwaps` appends the
//! wire-reversal swaps so the realized unitary is exactly the DFT matrix;
//! the swap-free form is what the adder uses, since the reversal cancels
//! between the forward and inverse transforms.

use crate::angle::DyadicAngle;
use crate::circuit::{BlockKind, Circuit};
use crate::error::{Error, Result};
use crate::gate::Gate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QftStyle {
    #[default]
    SwapFree,
    WithSwaps,
}

fn check_wires(qubits: &[usize]) -> Result<()> {
    if qubits.is_empty() {
        return Err(Error::domain("transform needs at least one wire"));
    }
    for (i, &q) in qubits.iter().enumerate() {
        if qubits[..i].contains(&q) {
            return Err(Error::structural(format!("wire {q} listed twice")));
        }
    }
    Ok(())
}

fn qft_gate_list(qubits: &[usize], style: QftStyle) -> Vec<Gate> {
    let m = qubits.len();
    let mut gates = Vec::with_capacity(m * (m + 1) / 2 + m / 2);
    for w in (0..m).rev() {
        gates.push(Gate::H { target: qubits[w] });
        for l in (0..w).rev() {
            gates.push(Gate::CPhase {
                control: qubits[l],
                target: qubits[w],
                angle: DyadicAngle::positive((w - l + 1) as u32),
            });
        }
    }
    if style == QftStyle::WithSwaps {
        for i in 0..m / 2 {
            gates.push(Gate::Swap {
                a: qubits[i],
                b: qubits[m - 1 - i],
            });
        }
    }
    gates
}

/// Pushes a QFT over `qubits` onto `circuit` and annotates the block.
pub fn append_qft(circuit: &mut Circuit, qubits: &[usize], style: QftStyle) -> Result<()> {
    check_wires(qubits)?;
    let start = circuit.gate_count();
    for gate in qft_gate_list(qubits, style) {
        circuit.push(gate)?;
    }
    circuit.annotate_from(BlockKind::Qft, start, None);
    Ok(())
}

/// Pushes the inverse transform: the QFT gate list reversed with every
/// phase negated.
pub fn append_iqft(circuit: &mut Circuit, qubits: &[usize], style: QftStyle) -> Result<()> {
    check_wires(qubits)?;
    let start = circuit.gate_count();
    for gate in qft_gate_list(qubits, style).iter().rev() {
        circuit.push(gate.inverse())?;
    }
    circuit.annotate_from(BlockKind::Iqft, start, None);
    Ok(())
}

/// Standalone m-wire QFT over qubits `0..m`.
pub fn qft_circuit_with(m: usize, style: QftStyle) -> Result<Circuit> {
    let qubits: Vec<usize> = (0..m).collect();
    let mut circuit = Circuit::new(m)?;
    append_qft(&mut circuit, &qubits, style)?;
    Ok(circuit)
}

pub fn qft_circuit(m: usize) -> Result<Circuit> {
    qft_circuit_with(m, QftStyle::default())
}

pub fn iqft_circuit_with(m: usize, style: QftStyle) -> Result<Circuit> {
    let qubits: Vec<usize> = (0..m).collect();
    let mut circuit = Circuit::new(m)?;
    append_iqft(&mut circuit, &qubits, style)?;
    Ok(circuit)
}

pub fn iqft_circuit(m: usize) -> Result<Circuit> {
    iqft_circuit_with(m, QftStyle::default())
}

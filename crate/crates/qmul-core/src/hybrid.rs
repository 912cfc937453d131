//! Product-state simulation for Fourier-arithmetic circuits.
//!
//! The multiplier never entangles two accumulator wires: partial products
//! are computed by Toffolis over classical-basis wires, the forward QFT
//! puts each accumulator wire into its own single-qubit superposition
//! (the controls it needs are still classical at that point), the addend
//! rotations are classically controlled phases, and the inverse QFT
//! brings the wires back one at a time. That keeps the global state a
//! product of one-qubit states and classical bits, so it can be tracked
//! in O(qubits) memory instead of 2^qubits amplitudes.
//!
//! The one subtlety is the inverse transform: when a Hadamard lands on a
//! wire that is already in superposition, that wire is done interacting
//! (every later gate that reads it only needs its basis value), so the
//! engine resolves it to its more probable bit on the spot and folds the
//! branch weight into a running probability. For circuits that compute
//! exact arithmetic the discarded branch carries amplitude ~0 and the
//! probability stays ~1; the figure is reported, not assumed.
//!
//! Any gate that would genuinely entangle two superposed wires is a
//! structural error: this engine refuses rather than approximates.

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::Gate;
use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

#[derive(Debug, Clone, Copy)]
enum Wire {
    Classical(bool),
    /// Amplitudes of |0⟩ and |1⟩ for a wire in superposition.
    Quantum(Complex64, Complex64),
}

#[derive(Debug, Clone)]
pub struct HybridState {
    wires: Vec<Wire>,
    probability: f64,
}

impl HybridState {
    /// Starts every wire in the classical basis state given by `value`.
    pub fn basis(qubit_count: usize, value: u64) -> Result<Self> {
        if qubit_count == 0 {
            return Err(Error::domain("state needs at least one qubit"));
        }
        if qubit_count < 64 && value >> qubit_count != 0 {
            return Err(Error::domain(format!(
                "basis value {value} does not fit in {qubit_count} qubits"
            )));
        }
        let bits = (0..qubit_count)
            .map(|q| q < 64 && (value >> q) & 1 == 1)
            .collect();
        Self::from_bits(bits)
    }

    /// Starts from an explicit bit per wire, for registers that sit above
    /// the reach of a 64-bit basis value.
    pub fn from_bits(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::domain("state needs at least one qubit"));
        }
        Ok(HybridState {
            wires: bits.into_iter().map(Wire::Classical).collect(),
            probability: 1.0,
        })
    }

    pub fn qubit_count(&self) -> usize {
        self.wires.len()
    }

    /// Weight of the branch followed so far.
    pub fn probability(&self) -> f64 {
        self.probability
    }

    pub fn run(&mut self, circuit: &Circuit) -> Result<()> {
        if circuit.qubit_count() != self.wires.len() {
            return Err(Error::structural(format!(
                "circuit is over {} qubits but the state has {}",
                circuit.qubit_count(),
                self.wires.len()
            )));
        }
        for gate in circuit.gates() {
            self.apply(gate)?;
        }
        Ok(())
    }

    pub fn apply(&mut self, gate: &Gate) -> Result<()> {
        match *gate {
            Gate::H { target } => self.apply_h(target),
            Gate::X { target } => {
                self.flip(target);
                Ok(())
            }
            Gate::Swap { a, b } => {
                self.wires.swap(a, b);
                Ok(())
            }
            Gate::CPhase {
                control,
                target,
                angle,
            } => self.apply_cphase(control, target, angle.radians()),
            Gate::Toffoli {
                control1,
                control2,
                target,
            } => self.apply_toffoli(control1, control2, target),
        }
    }

    fn flip(&mut self, target: usize) {
        match &mut self.wires[target] {
            Wire::Classical(b) => *b = !*b,
            Wire::Quantum(a0, a1) => std::mem::swap(a0, a1),
        }
    }

    fn apply_h(&mut self, target: usize) -> Result<()> {
        match self.wires[target] {
            Wire::Classical(b) => {
                let sign = if b { -FRAC_1_SQRT_2 } else { FRAC_1_SQRT_2 };
                self.wires[target] = Wire::Quantum(
                    Complex64::new(FRAC_1_SQRT_2, 0.0),
                    Complex64::new(sign, 0.0),
                );
                Ok(())
            }
            Wire::Quantum(a0, a1) => {
                // Second Hadamard on a wire: it is leaving superposition,
                // so resolve it and keep the dominant branch.
                let b0 = (a0 + a1) * FRAC_1_SQRT_2;
                let b1 = (a0 - a1) * FRAC_1_SQRT_2;
                let p0 = b0.norm_sqr();
                let p1 = b1.norm_sqr();
                let bit = p1 > p0;
                self.probability *= if bit { p1 } else { p0 } / (p0 + p1);
                self.wires[target] = Wire::Classical(bit);
                Ok(())
            }
        }
    }

    fn apply_cphase(&mut self, control: usize, target: usize, theta: f64) -> Result<()> {
        // The gate is diagonal and symmetric: a phase lands iff both
        // wires read 1, so a classical 1 on either side reduces it to a
        // one-wire rotation.
        let phase = Complex64::cis(theta);
        match (self.wires[control], self.wires[target]) {
            (Wire::Classical(false), _) | (_, Wire::Classical(false)) => Ok(()),
            (Wire::Classical(true), Wire::Classical(true)) => Ok(()), // global phase
            (Wire::Classical(true), Wire::Quantum(a0, a1)) => {
                self.wires[target] = Wire::Quantum(a0, a1 * phase);
                Ok(())
            }
            (Wire::Quantum(a0, a1), Wire::Classical(true)) => {
                self.wires[control] = Wire::Quantum(a0, a1 * phase);
                Ok(())
            }
            (Wire::Quantum(..), Wire::Quantum(..)) => Err(Error::structural(format!(
                "phase gate would entangle wires {control} and {target}; \
                 this circuit shape needs the dense simulator"
            ))),
        }
    }

    fn apply_toffoli(&mut self, control1: usize, control2: usize, target: usize) -> Result<()> {
        match (self.wires[control1], self.wires[control2]) {
            (Wire::Classical(true), Wire::Classical(true)) => {
                self.flip(target);
                Ok(())
            }
            (Wire::Classical(_), Wire::Classical(_)) => Ok(()),
            _ => Err(Error::structural(format!(
                "Toffoli control on a superposed wire ({control1} or {control2}); \
                 this circuit shape needs the dense simulator"
            ))),
        }
    }

    /// Reads classical bits, little endian in list order. Errors if any
    /// listed wire is still in superposition.
    pub fn readout(&self, qubits: &[usize]) -> Result<(u64, f64)> {
        if qubits.len() > 64 {
            return Err(Error::domain("readout wider than 64 bits"));
        }
        let mut value = 0u64;
        for (j, &q) in qubits.iter().enumerate() {
            match self.wires[q] {
                Wire::Classical(b) => value |= (b as u64) << j,
                Wire::Quantum(..) => {
                    return Err(Error::structural(format!(
                        "wire {q} is still in superposition at readout"
                    )))
                }
            }
        }
        Ok((value, self.probability))
    }
}

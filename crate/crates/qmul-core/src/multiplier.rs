//! The non-modular multiplier circuit.
//!
//! Stage one writes every partial product with Toffoli gates: bit `i` of
//! `y` and bit `j` of `x` control a flip of wire `i+j` in partial-product
//! register `i`, so register `i` ends up holding `x·2^i` when `y_i` is
//! set and zero otherwise. That is `n²` Toffolis and leaves the operands
//! untouched.
//!
//! Stage two sums all the registers into the first one with a single
//! Fourier-space pass: one QFT on the 2n-wire accumulator, a phase block
//! per remaining register, one inverse QFT. The product of two n-bit
//! numbers always fits in 2n bits, so one wire of carry headroom above
//! the 2n-1-wire partial products is enough and the accumulator never
//! overflows.

use crate::adder::{fourier_add_block_with, parallel_adder_with, AdderPlan};
use crate::circuit::{BlockKind, Circuit};
use crate::error::{Error, Result};
use crate::gate::Gate;
use crate::hybrid::HybridState;
use crate::layout::{layout_for, RegisterLayout};
use crate::qft::{append_iqft, append_qft, QftStyle};
use crate::sim::{StateVector, DEFAULT_DENSE_LIMIT};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SimMode {
    /// Full state-vector simulation; exponential in qubit count.
    Dense,
    /// Product-state simulation; linear in qubit count, valid for the
    /// circuit shapes this crate generates.
    Hybrid,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MultiplyOutcome {
    pub product: u64,
    /// Weight of the reported value in the final state. Exact arithmetic
    /// keeps this within floating-point error of 1.
    pub probability: f64,
}

#[derive(Debug, Clone)]
pub struct MultiplierCircuit {
    n: usize,
    layout: RegisterLayout,
    circuit: Circuit,
    result_qubits: Vec<usize>,
}

impl MultiplierCircuit {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn layout(&self) -> &RegisterLayout {
        &self.layout
    }

    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    /// Accumulator wires holding the product, little endian.
    pub fn result_qubits(&self) -> &[usize] {
        &self.result_qubits
    }

    pub fn into_circuit(self) -> Circuit {
        self.circuit
    }
}

/// Pushes the n² Toffolis that populate the partial-product registers.
pub fn partial_product_stage(circuit: &mut Circuit, layout: &RegisterLayout) -> Result<()> {
    let start = circuit.gate_count();
    let n = layout.n();
    for i in 0..n {
        for j in 0..n {
            circuit.push(Gate::Toffoli {
                control1: layout.y_qubits()[i],
                control2: layout.x_qubits()[j],
                target: layout.aux_registers()[i][i + j],
            })?;
        }
    }
    circuit.annotate_from(BlockKind::ToffoliStage, start, None);
    Ok(())
}

pub fn build_multiplier_with(n: usize, style: QftStyle) -> Result<MultiplierCircuit> {
    let layout = layout_for(n)?;
    let mut circuit = Circuit::new(layout.total_qubits())?;
    partial_product_stage(&mut circuit, &layout)?;

    // One carry wire, not the generic headroom for n-1 addends: the sum
    // here is x·y, which is bounded by 2^2n no matter how many partial
    // products feed it.
    let plan = AdderPlan::with_carry_count(
        layout.accumulator().to_vec(),
        layout.aux_registers()[1..].to_vec(),
        1,
    )?;
    let adder = parallel_adder_with(&plan, layout.total_qubits(), style)?;
    circuit.append(&adder)?;

    let result_qubits = layout.accumulator().to_vec();
    Ok(MultiplierCircuit {
        n,
        layout,
        circuit,
        result_qubits,
    })
}

pub fn build_multiplier(n: usize) -> Result<MultiplierCircuit> {
    build_multiplier_with(n, QftStyle::default())
}

/// The sequential reference design: same Toffoli stage, but every
/// register is folded into the accumulator inside its own transform pair.
/// The first pass carries the accumulator through an empty pair (register
/// 0 is already in place), so the schedule runs n pairs where the
/// parallel form runs one.
pub fn build_baseline_multiplier_with(n: usize, style: QftStyle) -> Result<MultiplierCircuit> {
    let layout = layout_for(n)?;
    let mut circuit = Circuit::new(layout.total_qubits())?;
    partial_product_stage(&mut circuit, &layout)?;

    let acc = layout.accumulator().to_vec();
    append_qft(&mut circuit, &acc, style)?;
    append_iqft(&mut circuit, &acc, style)?;
    for (i, addend) in layout.aux_registers()[1..].iter().enumerate() {
        append_qft(&mut circuit, &acc, style)?;
        let start = circuit.gate_count();
        fourier_add_block_with(&mut circuit, addend, &acc, style)?;
        circuit.annotate_from(BlockKind::Adder, start, Some(i));
        append_iqft(&mut circuit, &acc, style)?;
    }

    let result_qubits = acc;
    Ok(MultiplierCircuit {
        n,
        layout,
        circuit,
        result_qubits,
    })
}

pub fn build_baseline_multiplier(n: usize) -> Result<MultiplierCircuit> {
    build_baseline_multiplier_with(n, QftStyle::default())
}

/// Runs a prebuilt multiplier on concrete operands.
pub fn run_multiplier(
    mult: &MultiplierCircuit,
    x: u64,
    y: u64,
    mode: SimMode,
    dense_limit: usize,
) -> Result<MultiplyOutcome> {
    let n = mult.n;
    if x >> n != 0 || y >> n != 0 {
        return Err(Error::domain(format!(
            "operands must fit in {n} bits: got x={x}, y={y}"
        )));
    }
    let layout = &mult.layout;
    let total = layout.total_qubits();
    match mode {
        SimMode::Dense => {
            // Basis indices are u64, so dense simulation tops out at 63
            // wires regardless of the configured amplitude budget.
            let limit = dense_limit.min(63);
            if total > limit {
                return Err(Error::Capacity {
                    required: total,
                    limit,
                });
            }
            let value = (x << layout.x_qubits()[0]) | (y << layout.y_qubits()[0]);
            let mut state = StateVector::basis_with_limit(total, value, limit)?;
            state.run(&mult.circuit)?;
            let (product, probability) = state.readout(&mult.result_qubits);
            Ok(MultiplyOutcome {
                product,
                probability,
            })
        }
        SimMode::Hybrid => {
            let mut bits = vec![false; total];
            for j in 0..n {
                bits[layout.x_qubits()[j]] = (x >> j) & 1 == 1;
                bits[layout.y_qubits()[j]] = (y >> j) & 1 == 1;
            }
            let mut state = HybridState::from_bits(bits)?;
            state.run(&mult.circuit)?;
            let (product, probability) = state.readout(&mult.result_qubits)?;
            Ok(MultiplyOutcome {
                product,
                probability,
            })
        }
    }
}

pub fn simulate_multiply_with(
    n: usize,
    x: u64,
    y: u64,
    mode: SimMode,
    style: QftStyle,
    dense_limit: usize,
) -> Result<MultiplyOutcome> {
    let mult = build_multiplier_with(n, style)?;
    run_multiplier(&mult, x, y, mode, dense_limit)
}

pub fn simulate_multiply(n: usize, x: u64, y: u64, mode: SimMode) -> Result<MultiplyOutcome> {
    simulate_multiply_with(n, x, y, mode, QftStyle::default(), DEFAULT_DENSE_LIMIT)
}

//! Fourier-space parallel addition.
//!
//! The adder moves the accumulator into Fourier space once, streams every
//! addend in as controlled phase rotations (all diagonal, so the blocks
//! commute and need no interleaved transforms), and comes back with one
//! inverse transform. Addend bit `j` targeting accumulator wire `p`
//! rotates by `2π/2^(p-j+1)`; in the `WithSwaps` convention the wire
//! order is reversed, so the exponent becomes `m-p-j`.
//!
//! Addition is exact (not modular) when the accumulator carries enough
//! headroom above the payload: `carry_count` extra wires absorb the worst
//! case sum of `k` addends when `2^carry_count > k`.

use crate::circuit::{BlockKind, Circuit};
use crate::error::{Error, Result};
use crate::gate::Gate;
use crate::angle::DyadicAngle;
use crate::qft::{append_iqft, append_qft, QftStyle};

/// Carry headroom that makes the sum of `addend_count` payload-width
/// values exact: the smallest t with `2^t >= addend_count + 1`.
pub fn default_carry_count(addend_count: usize) -> usize {
    (addend_count + 1).next_power_of_two().trailing_zeros() as usize
}

/// Wiring for one parallel addition: which wires form the accumulator
/// (carries are its top `carry_count` entries) and which form each addend.
/// An empty addend list is allowed and yields a bare transform pair; the
/// one-bit multiplier relies on that degenerate case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdderPlan {
    accumulator: Vec<usize>,
    addends: Vec<Vec<usize>>,
    carry_count: usize,
}

impl AdderPlan {
    /// Plan with the default carry headroom for the number of addends.
    /// Every addend must fit in the payload (accumulator minus carries).
    pub fn new(accumulator: Vec<usize>, addends: Vec<Vec<usize>>) -> Result<Self> {
        let carry_count = default_carry_count(addends.len());
        let plan = Self::with_carry_count(accumulator, addends, carry_count)?;
        let payload = plan.payload_width();
        for (i, addend) in plan.addends.iter().enumerate() {
            if addend.len() > payload {
                return Err(Error::structural(format!(
                    "addend {i} is {} wires but the payload is only {payload}",
                    addend.len()
                )));
            }
        }
        Ok(plan)
    }

    /// Plan with explicit carry headroom. Callers that can bound the sum
    /// more tightly than the generic worst case use this; the multiplier
    /// does, since `x*y` always fits in `2n` bits.
    pub fn with_carry_count(
        accumulator: Vec<usize>,
        addends: Vec<Vec<usize>>,
        carry_count: usize,
    ) -> Result<Self> {
        if accumulator.is_empty() {
            return Err(Error::structural("accumulator has no wires"));
        }
        if carry_count > accumulator.len() {
            return Err(Error::structural(format!(
                "carry count {carry_count} exceeds the {}-wire accumulator",
                accumulator.len()
            )));
        }
        for (i, addend) in addends.iter().enumerate() {
            if addend.is_empty() {
                return Err(Error::structural(format!("addend {i} has no wires")));
            }
            if addend.len() > accumulator.len() {
                return Err(Error::structural(format!(
                    "addend {i} is wider than the accumulator"
                )));
            }
        }
        let mut seen: Vec<usize> = accumulator.clone();
        for addend in &addends {
            seen.extend_from_slice(addend);
        }
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::structural("adder wires overlap"));
        }
        Ok(AdderPlan {
            accumulator,
            addends,
            carry_count,
        })
    }

    pub fn accumulator(&self) -> &[usize] {
        &self.accumulator
    }

    pub fn addends(&self) -> &[Vec<usize>] {
        &self.addends
    }

    pub fn carry_count(&self) -> usize {
        self.carry_count
    }

    pub fn payload_width(&self) -> usize {
        self.accumulator.len() - self.carry_count
    }

    fn max_wire(&self) -> usize {
        let acc = self.accumulator.iter().copied().max().unwrap_or(0);
        let add = self
            .addends
            .iter()
            .flat_map(|a| a.iter().copied())
            .max()
            .unwrap_or(0);
        acc.max(add)
    }
}

/// Pushes the phase rotations that add `addend` into a Fourier-space
/// `accumulator`. Valid only between a matching transform pair of the
/// same style.
pub fn fourier_add_block_with(
    circuit: &mut Circuit,
    addend: &[usize],
    accumulator: &[usize],
    style: QftStyle,
) -> Result<()> {
    let m = accumulator.len();
    if addend.len() > m {
        return Err(Error::structural(
            "addend is wider than the accumulator",
        ));
    }
    for (j, &src) in addend.iter().enumerate() {
        match style {
            QftStyle::SwapFree => {
                for (p, &dst) in accumulator.iter().enumerate().skip(j) {
                    circuit.push(Gate::CPhase {
                        control: src,
                        target: dst,
                        angle: DyadicAngle::positive((p - j + 1) as u32),
                    })?;
                }
            }
            QftStyle::WithSwaps => {
                for (p, &dst) in accumulator.iter().enumerate().take(m - j) {
                    circuit.push(Gate::CPhase {
                        control: src,
                        target: dst,
                        angle: DyadicAngle::positive((m - p - j) as u32),
                    })?;
                }
            }
        }
    }
    Ok(())
}

pub fn fourier_add_block(
    circuit: &mut Circuit,
    addend: &[usize],
    accumulator: &[usize],
) -> Result<()> {
    fourier_add_block_with(circuit, addend, accumulator, QftStyle::default())
}

/// The full adder circuit over `qubit_count` wires: one QFT, one phase
/// block per addend, one inverse QFT.
pub fn parallel_adder_with(
    plan: &AdderPlan,
    qubit_count: usize,
    style: QftStyle,
) -> Result<Circuit> {
    if plan.max_wire() >= qubit_count {
        return Err(Error::structural(format!(
            "plan uses wire {} but the circuit has {qubit_count} qubits",
            plan.max_wire()
        )));
    }
    let mut circuit = Circuit::new(qubit_count)?;
    append_qft(&mut circuit, &plan.accumulator, style)?;
    for (i, addend) in plan.addends.iter().enumerate() {
        let start = circuit.gate_count();
        fourier_add_block_with(&mut circuit, addend, &plan.accumulator, style)?;
        circuit.annotate_from(BlockKind::Adder, start, Some(i));
    }
    append_iqft(&mut circuit, &plan.accumulator, style)?;
    Ok(circuit)
}

pub fn parallel_adder(plan: &AdderPlan, qubit_count: usize) -> Result<Circuit> {
    parallel_adder_with(plan, qubit_count, QftStyle::default())
}

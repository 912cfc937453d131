//! Qubit register layout for the multiplier.
//!
//! Indexing is little endian throughout: index 0 is the least significant
//! bit of the accumulator register. For operand width `n` the map is
//!
//! ```text
//! [0, 2n)                  accumulator (partial product 0, width 2n)
//! [2n + (i-1)(2n-1), ...)  partial product i, width 2n-1, for i in 1..n
//! next n                   x operand
//! next n                   y operand
//! ```
//!
//! which totals `2n^2 + n + 1` qubits. The accumulator is one qubit wider
//! than the other partial products; that single extra qubit absorbs the
//! carry out of the additions, and the product fits because the largest
//! addend is bounded by `2^(2n-1)`.

use crate::error::{Error, Result};

/// Largest operand width the layout arithmetic (and the hybrid simulator's
/// u64 bookkeeping) supports.
pub const MAX_OPERAND_BITS: usize = 31;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegisterLayout {
    n: usize,
    aux_registers: Vec<Vec<usize>>,
    x_qubits: Vec<usize>,
    y_qubits: Vec<usize>,
    total_qubits: usize,
}

/// Builds the layout for `n`-bit operands.
pub fn layout_for(n: usize) -> Result<RegisterLayout> {
    if n == 0 {
        return Err(Error::domain("operand width must be at least 1 bit"));
    }
    if n > MAX_OPERAND_BITS {
        return Err(Error::domain(format!(
            "operand width {n} exceeds the supported maximum of {MAX_OPERAND_BITS} bits"
        )));
    }

    let acc_width = 2 * n;
    let partial_width = 2 * n - 1;
    let mut next = 0usize;
    let mut take = |width: usize| {
        let qubits: Vec<usize> = (next..next + width).collect();
        next += width;
        qubits
    };

    let mut aux_registers = Vec::with_capacity(n);
    aux_registers.push(take(acc_width));
    for _ in 1..n {
        aux_registers.push(take(partial_width));
    }
    let x_qubits = take(n);
    let y_qubits = take(n);

    debug_assert_eq!(next, 2 * n * n + n + 1);
    Ok(RegisterLayout {
        n,
        aux_registers,
        x_qubits,
        y_qubits,
        total_qubits: next,
    })
}

impl RegisterLayout {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn total_qubits(&self) -> usize {
        self.total_qubits
    }

    /// Partial product registers; entry 0 is the wide accumulator.
    pub fn aux_registers(&self) -> &[Vec<usize>] {
        &self.aux_registers
    }

    /// The accumulator, which holds the product after the adder runs.
    pub fn accumulator(&self) -> &[usize] {
        &self.aux_registers[0]
    }

    pub fn x_qubits(&self) -> &[usize] {
        &self.x_qubits
    }

    pub fn y_qubits(&self) -> &[usize] {
        &self.y_qubits
    }
}

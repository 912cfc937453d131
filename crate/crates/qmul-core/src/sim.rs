//! Dense state-vector simulation.
//!
//! Amplitudes are indexed little endian: basis index `i` assigns bit
//! `(i >> q) & 1` to qubit `q`. Gate kernels enumerate only the index
//! subset they touch, inserting fixed bits with `insert_zero`, so an
//! m-qubit controlled gate sweeps `2^(n-m)` index groups rather than
//! branching on every amplitude.

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::gate::Gate;
use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

/// Default cap on dense simulation width. 26 qubits is a one-gigabyte
/// amplitude array, which stays comfortably inside test-runner memory.
pub const DEFAULT_DENSE_LIMIT: usize = 26;

#[derive(Debug, Clone)]
pub struct StateVector {
    qubit_count: usize,
    amps: Vec<Complex64>,
}

/// Spreads `value` so a zero bit appears at `pos`, shifting higher bits up.
#[inline]
fn insert_zero(value: usize, pos: usize) -> usize {
    let high = (value >> pos) << (pos + 1);
    let low = value & ((1usize << pos) - 1);
    high | low
}

impl StateVector {
    /// `|value⟩` over `qubit_count` qubits, capped at the default width.
    pub fn basis(qubit_count: usize, value: u64) -> Result<Self> {
        Self::basis_with_limit(qubit_count, value, DEFAULT_DENSE_LIMIT)
    }

    pub fn basis_with_limit(qubit_count: usize, value: u64, limit: usize) -> Result<Self> {
        if qubit_count == 0 {
            return Err(Error::domain("state needs at least one qubit"));
        }
        if qubit_count > limit {
            return Err(Error::Capacity {
                required: qubit_count,
                limit,
            });
        }
        if qubit_count < 64 && value >> qubit_count != 0 {
            return Err(Error::domain(format!(
                "basis value {value} does not fit in {qubit_count} qubits"
            )));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 1usize << qubit_count];
        amps[value as usize] = Complex64::new(1.0, 0.0);
        Ok(StateVector { qubit_count, amps })
    }

    /// Wraps an explicit amplitude vector; the length fixes the qubit
    /// count and must be a power of two. No normalization is applied.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::domain(format!(
                "amplitude vector length {len} is not a power of two (>= 2)"
            )));
        }
        Ok(StateVector {
            qubit_count: len.trailing_zeros() as usize,
            amps,
        })
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_squared(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn apply(&mut self, gate: &Gate) {
        debug_assert!(gate.validate(self.qubit_count).is_ok());
        match *gate {
            Gate::H { target } => self.apply_h(target),
            Gate::X { target } => self.apply_x(target),
            Gate::Swap { a, b } => self.apply_swap(a, b),
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

    pub fn run(&mut self, circuit: &Circuit) -> Result<()> {
        if circuit.qubit_count() != self.qubit_count {
            return Err(Error::structural(format!(
                "circuit is over {} qubits but the state has {}",
                circuit.qubit_count(),
                self.qubit_count
            )));
        }
        for gate in circuit.gates() {
            self.apply(gate);
        }
        Ok(())
    }

    fn apply_h(&mut self, target: usize) {
        let bit = 1usize << target;
        for k in 0..self.amps.len() / 2 {
            let i0 = insert_zero(k, target);
            let i1 = i0 | bit;
            let a0 = self.amps[i0];
            let a1 = self.amps[i1];
            self.amps[i0] = (a0 + a1) * FRAC_1_SQRT_2;
            self.amps[i1] = (a0 - a1) * FRAC_1_SQRT_2;
        }
    }

    fn apply_x(&mut self, target: usize) {
        let bit = 1usize << target;
        for k in 0..self.amps.len() / 2 {
            let i0 = insert_zero(k, target);
            self.amps.swap(i0, i0 | bit);
        }
    }

    fn apply_swap(&mut self, a: usize, b: usize) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        for k in 0..self.amps.len() / 4 {
            let base = insert_zero(insert_zero(k, lo), hi);
            self.amps.swap(base | (1 << lo), base | (1 << hi));
        }
    }

    fn apply_cphase(&mut self, control: usize, target: usize, theta: f64) {
        let phase = Complex64::cis(theta);
        let (lo, hi) = if control < target {
            (control, target)
        } else {
            (target, control)
        };
        let set = (1usize << control) | (1usize << target);
        for k in 0..self.amps.len() / 4 {
            let i = insert_zero(insert_zero(k, lo), hi) | set;
            self.amps[i] *= phase;
        }
    }

    fn apply_toffoli(&mut self, control1: usize, control2: usize, target: usize) {
        let mut pos = [control1, control2, target];
        pos.sort_unstable();
        let controls = (1usize << control1) | (1usize << control2);
        let tbit = 1usize << target;
        for k in 0..self.amps.len() / 8 {
            let base = insert_zero(insert_zero(insert_zero(k, pos[0]), pos[1]), pos[2]);
            let i0 = base | controls;
            self.amps.swap(i0, i0 | tbit);
        }
    }

    /// Marginal readout over `qubits`, little endian in list order: the
    /// first listed qubit supplies bit 0 of the returned value. Returns the
    /// most probable value and its probability; ties go to the lower value.
    pub fn readout(&self, qubits: &[usize]) -> (u64, f64) {
        debug_assert!(qubits.iter().all(|&q| q < self.qubit_count));
        debug_assert!(qubits.len() < 64);
        let mut probs = vec![0.0f64; 1usize << qubits.len()];
        for (i, amp) in self.amps.iter().enumerate() {
            let p = amp.norm_sqr();
            if p == 0.0 {
                continue;
            }
            let mut value = 0usize;
            for (j, &q) in qubits.iter().enumerate() {
                value |= ((i >> q) & 1) << j;
            }
            probs[value] += p;
        }
        let mut best = 0usize;
        for (v, &p) in probs.iter().enumerate() {
            if p > probs[best] {
                best = v;
            }
        }
        (best as u64, probs[best])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::DyadicAngle;

    const EPS: f64 = 1e-12;

    #[test]
    fn insert_zero_spreads_bits() {
        assert_eq!(insert_zero(0b101, 0), 0b1010);
        assert_eq!(insert_zero(0b101, 1), 0b1001);
        assert_eq!(insert_zero(0b101, 3), 0b0101);
    }

    #[test]
    fn hadamard_splits_and_recombines() {
        let mut s = StateVector::basis(1, 0).unwrap();
        s.apply(&Gate::H { target: 0 });
        assert!((s.amplitudes()[0].re - FRAC_1_SQRT_2).abs() < EPS);
        assert!((s.amplitudes()[1].re - FRAC_1_SQRT_2).abs() < EPS);
        s.apply(&Gate::H { target: 0 });
        assert!((s.amplitudes()[0].re - 1.0).abs() < EPS);
        assert!(s.amplitudes()[1].norm() < EPS);
    }

    #[test]
    fn x_permutes_the_basis() {
        let mut s = StateVector::basis(3, 0b010).unwrap();
        s.apply(&Gate::X { target: 2 });
        assert!((s.amplitudes()[0b110].re - 1.0).abs() < EPS);
    }

    #[test]
    fn swap_exchanges_qubit_values() {
        let mut s = StateVector::basis(3, 0b001).unwrap();
        s.apply(&Gate::Swap { a: 0, b: 2 });
        assert!((s.amplitudes()[0b100].re - 1.0).abs() < EPS);
        // |101⟩ is symmetric under the swap.
        let mut t = StateVector::basis(3, 0b101).unwrap();
        t.apply(&Gate::Swap { a: 0, b: 2 });
        assert!((t.amplitudes()[0b101].re - 1.0).abs() < EPS);
    }

    #[test]
    fn cphase_full_turn_half_is_minus_one_on_11() {
        let mut s = StateVector::basis(2, 0b11).unwrap();
        s.apply(&Gate::CPhase {
            control: 0,
            target: 1,
            angle: DyadicAngle::positive(1),
        });
        assert!((s.amplitudes()[0b11].re + 1.0).abs() < EPS);
        // Other basis states are untouched.
        let mut t = StateVector::basis(2, 0b01).unwrap();
        t.apply(&Gate::CPhase {
            control: 0,
            target: 1,
            angle: DyadicAngle::positive(1),
        });
        assert!((t.amplitudes()[0b01].re - 1.0).abs() < EPS);
    }

    #[test]
    fn toffoli_truth_table() {
        for input in 0..8u64 {
            let mut s = StateVector::basis(3, input).unwrap();
            s.apply(&Gate::Toffoli {
                control1: 0,
                control2: 1,
                target: 2,
            });
            let expected = if input & 0b11 == 0b11 { input ^ 0b100 } else { input };
            assert!(
                (s.amplitudes()[expected as usize].re - 1.0).abs() < EPS,
                "input {input:03b}"
            );
        }
    }

    #[test]
    fn readout_marginalizes_and_breaks_ties_low() {
        let mut s = StateVector::basis(2, 0).unwrap();
        s.apply(&Gate::H { target: 1 });
        // Qubit 1 is uniform, qubit 0 is certainly 0.
        let (v, p) = s.readout(&[0]);
        assert_eq!(v, 0);
        assert!((p - 1.0).abs() < EPS);
        let (v, p) = s.readout(&[1]);
        assert_eq!(v, 0, "uniform marginal resolves to the lower value");
        assert!((p - 0.5).abs() < EPS);
        // List order sets bit significance.
        let mut t = StateVector::basis(2, 0b01).unwrap();
        t.apply(&Gate::X { target: 1 });
        assert_eq!(t.readout(&[1, 0]).0, 0b11);
        assert_eq!(t.readout(&[0]).0, 1);
    }

    #[test]
    fn capacity_limit_is_enforced() {
        let err = StateVector::basis_with_limit(12, 0, 10).unwrap_err();
        assert!(matches!(err, Error::Capacity { required: 12, limit: 10 }));
        assert!(StateVector::basis_with_limit(10, 0, 10).is_ok());
    }

    #[test]
    fn basis_value_must_fit() {
        assert!(StateVector::basis(2, 4).is_err());
        assert!(StateVector::basis(2, 3).is_ok());
    }

    #[test]
    fn amplitude_vectors_must_be_power_of_two() {
        let one = Complex64::new(1.0, 0.0);
        assert!(StateVector::from_amplitudes(vec![one; 3]).is_err());
        assert!(StateVector::from_amplitudes(vec![one; 1]).is_err());
        let s = StateVector::from_amplitudes(vec![one; 8]).unwrap();
        assert_eq!(s.qubit_count(), 3);
    }

    #[test]
    fn run_checks_width_and_preserves_norm() {
        let mut circuit = Circuit::new(4).unwrap();
        circuit.push(Gate::H { target: 0 }).unwrap();
        circuit.push(Gate::H { target: 2 }).unwrap();
        circuit
            .push(Gate::CPhase {
                control: 0,
                target: 3,
                angle: DyadicAngle::positive(3),
            })
            .unwrap();
        circuit
            .push(Gate::Toffoli {
                control1: 0,
                control2: 2,
                target: 1,
            })
            .unwrap();
        let mut s = StateVector::basis(4, 0b1010).unwrap();
        s.run(&circuit).unwrap();
        assert!((s.norm_squared() - 1.0).abs() < EPS);

        let mut narrow = StateVector::basis(2, 0).unwrap();
        assert!(narrow.run(&circuit).is_err());
    }
}

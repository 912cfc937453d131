//! Gate counts, circuit depth and block tallies.

use crate::circuit::{BlockKind, Circuit};
use crate::gate::Gate;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitMetrics {
    pub qubit_count: usize,
    pub gate_count: usize,
    pub h: usize,
    pub x: usize,
    pub swap: usize,
    pub cphase: usize,
    pub toffoli: usize,
    /// Longest chain of gates that share qubits, i.e. the circuit's
    /// schedule length when every independent gate runs in parallel.
    pub depth: usize,
    pub qft_blocks: usize,
    pub iqft_blocks: usize,
}

/// Tallies gate kinds and computes depth by greedy per-qubit layering.
pub fn compute_metrics(circuit: &Circuit) -> CircuitMetrics {
    let mut m = CircuitMetrics {
        qubit_count: circuit.qubit_count(),
        gate_count: circuit.gate_count(),
        h: 0,
        x: 0,
        swap: 0,
        cphase: 0,
        toffoli: 0,
        depth: 0,
        qft_blocks: 0,
        iqft_blocks: 0,
    };

    let mut qubit_layer = vec![0usize; circuit.qubit_count()];
    for gate in circuit.gates() {
        match gate {
            Gate::H { .. } => m.h += 1,
            Gate::X { .. } => m.x += 1,
            Gate::Swap { .. } => m.swap += 1,
            Gate::CPhase { .. } => m.cphase += 1,
            Gate::Toffoli { .. } => m.toffoli += 1,
        }
        let touched = gate.qubits();
        let layer = 1 + touched
            .iter()
            .map(|&q| qubit_layer[q])
            .max()
            .unwrap_or(0);
        for q in touched {
            qubit_layer[q] = layer;
        }
        m.depth = m.depth.max(layer);
    }

    for ann in circuit.annotations() {
        match ann.kind {
            BlockKind::Qft => m.qft_blocks += 1,
            BlockKind::Iqft => m.iqft_blocks += 1,
            _ => {}
        }
    }

    m
}

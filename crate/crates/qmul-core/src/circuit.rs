//! Circuit container, block annotations and JSON serialization.

use crate::error::{Error, Result};
use crate::gate::{Gate, GateRecord};
use serde::{Deserialize, Serialize};

/// Marker for a structural block of gates. Annotations are metadata for
/// metrics and emission; they never change what a circuit computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockKind {
    Qft,
    Iqft,
    ToffoliStage,
    Adder,
}

/// A half-open gate-index range `[start, end)` tagged with a block kind.
/// `index` carries the addend ordinal for adder blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockAnnotation {
    pub kind: BlockKind,
    pub start: usize,
    pub end: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
}

/// An ordered gate sequence over a declared number of qubits.
///
/// Gate order is execution order. A circuit built over a prefix of a larger
/// index space can be appended into a wider circuit, which is how QFT and
/// adder fragments are spliced into the multiplier.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CircuitDoc", into = "CircuitDoc")]
pub struct Circuit {
    qubit_count: usize,
    gates: Vec<Gate>,
    annotations: Vec<BlockAnnotation>,
}

impl Circuit {
    /// An empty circuit over `qubit_count` qubits.
    pub fn new(qubit_count: usize) -> Result<Self> {
        if qubit_count == 0 {
            return Err(Error::domain("a circuit needs at least one qubit"));
        }
        Ok(Circuit {
            qubit_count,
            gates: Vec::new(),
            annotations: Vec::new(),
        })
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn annotations(&self) -> &[BlockAnnotation] {
        &self.annotations
    }

    pub fn gate_count(&self) -> usize {
        self.gates.len()
    }

    /// Appends one gate after validating it against the qubit count.
    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.qubit_count)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Marks the gate range `[start, current end)` as a block.
    pub fn annotate_from(&mut self, kind: BlockKind, start: usize, index: Option<usize>) {
        debug_assert!(start <= self.gates.len());
        self.annotations.push(BlockAnnotation {
            kind,
            start,
            end: self.gates.len(),
            index,
        });
    }

    /// Splices another circuit's gates onto the end of this one. The
    /// fragment's annotations come along, shifted by the current gate count.
    pub fn append(&mut self, fragment: &Circuit) -> Result<()> {
        if fragment.qubit_count > self.qubit_count {
            return Err(Error::structural(format!(
                "cannot append a {}-qubit fragment into a {}-qubit circuit",
                fragment.qubit_count, self.qubit_count
            )));
        }
        let offset = self.gates.len();
        self.gates.extend_from_slice(&fragment.gates);
        self.annotations
            .extend(fragment.annotations.iter().map(|a| BlockAnnotation {
                kind: a.kind,
                start: a.start + offset,
                end: a.end + offset,
                index: a.index,
            }));
        Ok(())
    }

    /// The inverse circuit: gates reversed, phases negated, and qft/iqft
    /// annotations exchanged.
    pub fn inverse(&self) -> Circuit {
        let n = self.gates.len();
        Circuit {
            qubit_count: self.qubit_count,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
            annotations: self
                .annotations
                .iter()
                .map(|a| BlockAnnotation {
                    kind: match a.kind {
                        BlockKind::Qft => BlockKind::Iqft,
                        BlockKind::Iqft => BlockKind::Qft,
                        other => other,
                    },
                    start: n - a.end,
                    end: n - a.start,
                    index: a.index,
                })
                .collect(),
        }
    }

    /// Full structural check: every gate well formed, every annotation span
    /// inside the gate list.
    pub fn validate(&self) -> Result<()> {
        if self.qubit_count == 0 {
            return Err(Error::structural("circuit declares zero qubits"));
        }
        for gate in &self.gates {
            gate.validate(self.qubit_count)?;
        }
        for ann in &self.annotations {
            if ann.start > ann.end || ann.end > self.gates.len() {
                return Err(Error::structural(format!(
                    "annotation {ann:?} is outside the gate list (len {})",
                    self.gates.len()
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Serialization(e.to_string()))
    }

    pub fn from_json(json: &str) -> Result<Circuit> {
        serde_json::from_str(json).map_err(|e| Error::Serialization(e.to_string()))
    }
}

/// Wire format: `{"qubits": n, "gates": [...], "annotations": [...]}`.
#[derive(Serialize, Deserialize)]
struct CircuitDoc {
    qubits: usize,
    gates: Vec<GateRecord>,
    annotations: Vec<BlockAnnotation>,
}

impl From<Circuit> for CircuitDoc {
    fn from(c: Circuit) -> Self {
        CircuitDoc {
            qubits: c.qubit_count,
            gates: c.gates.iter().map(GateRecord::from).collect(),
            annotations: c.annotations,
        }
    }
}

impl TryFrom<CircuitDoc> for Circuit {
    type Error = Error;

    fn try_from(doc: CircuitDoc) -> Result<Circuit> {
        let gates = doc
            .gates
            .into_iter()
            .map(Gate::try_from)
            .collect::<Result<Vec<_>>>()?;
        let circuit = Circuit {
            qubit_count: doc.qubits,
            gates,
            annotations: doc.annotations,
        };
        circuit.validate()?;
        Ok(circuit)
    }
}

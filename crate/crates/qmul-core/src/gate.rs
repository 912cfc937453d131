//! The gate set.

use crate::angle::DyadicAngle;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A single gate over zero-based global qubit indices.
///
/// The set is exactly what the multiplier needs: Hadamard, NOT, swap,
/// controlled phase with an exact dyadic angle, and Toffoli.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    H {
        target: usize,
    },
    X {
        target: usize,
    },
    Swap {
        a: usize,
        b: usize,
    },
    /// Multiplies the amplitude by `e^{i·angle}` when control and target
    /// are both |1⟩. Symmetric in its two qubits.
    CPhase {
        control: usize,
        target: usize,
        angle: DyadicAngle,
    },
    /// Flips the target iff both controls are |1⟩.
    Toffoli {
        control1: usize,
        control2: usize,
        target: usize,
    },
}

/// Gate kind without operands, used for tallying.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateKind {
    H,
    X,
    Swap,
    CPhase,
    Toffoli,
}

impl Gate {
    pub fn kind(&self) -> GateKind {
        match self {
            Gate::H { .. } => GateKind::H,
            Gate::X { .. } => GateKind::X,
            Gate::Swap { .. } => GateKind::Swap,
            Gate::CPhase { .. } => GateKind::CPhase,
            Gate::Toffoli { .. } => GateKind::Toffoli,
        }
    }

    /// The qubits this gate touches, in declaration order.
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::H { target } | Gate::X { target } => vec![target],
            Gate::Swap { a, b } => vec![a, b],
            Gate::CPhase {
                control, target, ..
            } => vec![control, target],
            Gate::Toffoli {
                control1,
                control2,
                target,
            } => vec![control1, control2, target],
        }
    }

    /// Checks index distinctness and the qubit-count bound.
    pub fn validate(&self, qubit_count: usize) -> Result<()> {
        let qs = self.qubits();
        for (i, &q) in qs.iter().enumerate() {
            if q >= qubit_count {
                return Err(Error::structural(format!(
                    "gate {self:?} references qubit {q}, but the circuit has {qubit_count} qubits"
                )));
            }
            if qs[..i].contains(&q) {
                return Err(Error::structural(format!(
                    "gate {self:?} uses qubit {q} more than once"
                )));
            }
        }
        Ok(())
    }

    /// The inverse gate. H, X, Swap and Toffoli are self-inverse; a
    /// controlled phase inverts by negating its angle.
    pub fn inverse(&self) -> Gate {
        match *self {
            Gate::CPhase {
                control,
                target,
                angle,
            } => Gate::CPhase {
                control,
                target,
                angle: angle.negated(),
            },
            other => other,
        }
    }
}

/// Wire format for one gate: `{"kind", "targets", "controls", "angle"?}`.
#[derive(Serialize, Deserialize)]
pub(crate) struct GateRecord {
    kind: String,
    targets: Vec<usize>,
    controls: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    angle: Option<DyadicAngle>,
}

impl From<&Gate> for GateRecord {
    fn from(gate: &Gate) -> Self {
        match *gate {
            Gate::H { target } => GateRecord {
                kind: "h".into(),
                targets: vec![target],
                controls: vec![],
                angle: None,
            },
            Gate::X { target } => GateRecord {
                kind: "x".into(),
                targets: vec![target],
                controls: vec![],
                angle: None,
            },
            Gate::Swap { a, b } => GateRecord {
                kind: "swap".into(),
                targets: vec![a, b],
                controls: vec![],
                angle: None,
            },
            Gate::CPhase {
                control,
                target,
                angle,
            } => GateRecord {
                kind: "cphase".into(),
                targets: vec![target],
                controls: vec![control],
                angle: Some(angle),
            },
            Gate::Toffoli {
                control1,
                control2,
                target,
            } => GateRecord {
                kind: "toffoli".into(),
                targets: vec![target],
                controls: vec![control1, control2],
                angle: None,
            },
        }
    }
}

impl TryFrom<GateRecord> for Gate {
    type Error = Error;

    fn try_from(rec: GateRecord) -> Result<Gate> {
        let arity = |t: usize, c: usize| -> Result<()> {
            if rec.targets.len() == t && rec.controls.len() == c {
                Ok(())
            } else {
                Err(Error::Serialization(format!(
                    "gate kind {:?} wants {t} target(s) and {c} control(s), \
                     got {} and {}",
                    rec.kind,
                    rec.targets.len(),
                    rec.controls.len()
                )))
            }
        };
        if rec.kind != "cphase" && rec.angle.is_some() {
            return Err(Error::Serialization(format!(
                "gate kind {:?} must not carry an angle",
                rec.kind
            )));
        }
        match rec.kind.as_str() {
            "h" => {
                arity(1, 0)?;
                Ok(Gate::H {
                    target: rec.targets[0],
                })
            }
            "x" => {
                arity(1, 0)?;
                Ok(Gate::X {
                    target: rec.targets[0],
                })
            }
            "swap" => {
                arity(2, 0)?;
                Ok(Gate::Swap {
                    a: rec.targets[0],
                    b: rec.targets[1],
                })
            }
            "cphase" => {
                arity(1, 1)?;
                let angle = rec.angle.ok_or_else(|| {
                    Error::Serialization("cphase gate is missing its angle".into())
                })?;
                Ok(Gate::CPhase {
                    control: rec.controls[0],
                    target: rec.targets[0],
                    angle,
                })
            }
            "toffoli" => {
                arity(1, 2)?;
                Ok(Gate::Toffoli {
                    control1: rec.controls[0],
                    control2: rec.controls[1],
                    target: rec.targets[0],
                })
            }
            other => Err(Error::Serialization(format!("unknown gate kind {other:?}"))),
        }
    }
}

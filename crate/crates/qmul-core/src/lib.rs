//! Quantum multiplication out of Toffoli partial products and a single
//! Fourier-space accumulation.
//!
//! The circuit family here multiplies two n-bit registers without
//! modular wraparound: n² Toffolis write every shifted partial product
//! into its own register, then one QFT / phase-rotation / inverse-QFT
//! pass sums them all into a 2n-bit accumulator. Because the rotation
//! blocks for different addends are diagonal, they all fit inside one
//! transform pair; the sequential reference design that re-transforms
//! per addend is also provided for comparison.
//!
//! Circuits can be simulated densely (full state vector) or in a
//! product-state mode that exploits the fact that this family never
//! entangles two accumulator wires, verified in bulk against classical
//! arithmetic, serialized to JSON, and emitted as OpenQASM 3.

pub mod adder;
pub mod angle;
pub mod circuit;
pub mod error;
pub mod gate;
pub mod hybrid;
pub mod layout;
pub mod metrics;
pub mod multiplier;
pub mod qasm;
pub mod qft;
pub mod sim;
pub mod verify;

pub use adder::{default_carry_count, fourier_add_block, parallel_adder, AdderPlan};
pub use angle::DyadicAngle;
pub use circuit::{BlockAnnotation, BlockKind, Circuit};
pub use error::{Error, Result};
pub use gate::{Gate, GateKind};
pub use hybrid::HybridState;
pub use layout::{layout_for, RegisterLayout, MAX_OPERAND_BITS};
pub use metrics::{compute_metrics, CircuitMetrics};
pub use multiplier::{
    build_baseline_multiplier, build_multiplier, run_multiplier, simulate_multiply,
    MultiplierCircuit, MultiplyOutcome, SimMode,
};
pub use qasm::to_qasm;
pub use qft::{iqft_circuit, qft_circuit, QftStyle};
pub use sim::{StateVector, DEFAULT_DENSE_LIMIT};
pub use verify::{run_suite, Sampling, SuiteOptions, VerificationReport};

//! Quantum circuit synthesis by swarm search.
//!
//! Candidate circuits are encoded as flat instruction lists and scored by
//! simulating them on an embedded dense statevector simulator. Two search
//! engines operate on that encoding: a particle swarm whose velocities are
//! sampled-and-concatenated instruction lists ([`pso`]), and a generational
//! genetic algorithm over the same genes ([`ga`]). The [`harness`] module
//! packages named experiment presets, seed batches, and CSV/QASM/SVG output.
//!
//! Every run is a pure function of its configuration and seed: repeated runs
//! produce byte-identical output files, whether fitness evaluation happens
//! sequentially or on the rayon thread pool (the `parallel` feature, enabled
//! by default).

pub mod circuit;
mod error;
pub mod exec;
pub mod fitness;
pub mod ga;
pub mod harness;
pub mod pso;
pub mod qasm;
mod rng;
pub mod sim;
pub mod text;

pub use circuit::{Circuit, GateKind, GateSet, Instruction, ProblemConfig};
pub use error::{ConfigError, QasmError, WriteError};
pub use exec::Execution;
pub use fitness::{FitnessKind, FitnessValue};

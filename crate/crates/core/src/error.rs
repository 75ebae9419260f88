use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Rejected configuration or construction input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("gate set must not be empty")]
    EmptyGateSet,
    #[error("gate set needs a bit-flipping gate (x, y, rx, or ry)")]
    NoFlipGate,
    #[error("no gate in the set applies to a {num_qubits}-qubit circuit")]
    NoApplicableGate { num_qubits: usize },
    #[error("num_qubits must be between 1 and {max}, got {got}")]
    BadQubitCount { got: usize, max: usize },
    #[error("instruction {index} invalid: {reason}")]
    BadInstruction { index: usize, reason: String },
    #[error("{what} must be positive")]
    NotPositive { what: &'static str },
    #[error("{what} must be a finite value >= 0, got {got}")]
    NegativeParameter { what: &'static str, got: f64 },
    #[error("{what} must lie in [0, 1], got {got}")]
    NotARate { what: &'static str, got: f64 },
    #[error("init_len_range ({lo}, {hi}) must satisfy 1 <= lo <= hi <= max_body_len ({max})")]
    BadInitLenRange { lo: usize, hi: usize, max: usize },
    #[error("elitism ({elitism}) must be smaller than the population ({population})")]
    ElitismTooLarge { elitism: usize, population: usize },
    #[error("seed list must not be empty")]
    EmptySeedList,
    #[error("preset name `{0}` used twice in one batch")]
    DuplicatePresetName(String),
    #[error("iteration statistics need at least one fitness value")]
    EmptyStats,
}

/// Why a QASM source was rejected. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QasmError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: unsupported gate `{name}`")]
    UnsupportedGate {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("line {line}, column {column}: qubit index {index} out of range for qreg of size {size}")]
    QubitOutOfRange {
        index: usize,
        size: usize,
        line: usize,
        column: usize,
    },
    #[error("missing qreg declaration")]
    MissingQreg,
}

/// I/O failure while writing run output, with the offending path attached.
#[derive(Debug, Error)]
#[error("{path}: {source}")]
pub struct WriteError {
    pub path: PathBuf,
    #[source]
    pub source: io::Error,
}

impl WriteError {
    pub fn new(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Self {
            path: path.into(),
            source,
        }
    }
}

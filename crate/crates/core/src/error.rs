use thiserror::Error;

/// Errors surfaced by the library. Validation failures carry the offending
/// field so the CLI can emit a one-line diagnostic naming it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty generating segment")]
    EmptyWord,

    #[error("symbol {symbol} outside alphabet of size {alphabet}")]
    Alphabet { symbol: u8, alphabet: u8 },

    #[error("{field}: index must be >= 1")]
    IndexFromOne { field: &'static str },

    #[error("{field}: {message}")]
    InvalidParam { field: &'static str, message: String },

    #[error("memory below lambda+1 loses all V-values (memory = {memory}, lambda = {lambda})")]
    MemoryBelowLambda { memory: u32, lambda: u32 },

    #[error("zero direction")]
    ZeroDirection,

    #[error("repeated x-coordinate at index {index}")]
    RepeatedAbscissa { index: usize },

    #[error("point ({x}, {y}) outside domain x1^2 <= x2 <= 1")]
    OutsideDomain { x: f64, y: f64 },

    #[error(
        "target ({wx}, {wy}) outside the memory-{memory} rotation set: separated by direction ({dx}, {dy})"
    )]
    InfeasibleTarget {
        wx: f64,
        wy: f64,
        memory: u32,
        dx: f64,
        dy: f64,
    },

    #[error("primal oracle limited to memory <= 3 (got {memory})")]
    PrimalMemory { memory: u32 },

    #[error("non-stochastic input: {message}")]
    NonStochastic { message: String },

    #[error("infeasible constraint system: {message}")]
    Infeasible { message: String },

    #[error("parameter file: {message}")]
    ParamFile { message: String },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::exactnum::Symbol;

/// Errors raised by the symbolic engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol `{0}` has no assigned value")]
    MissingSymbol(Symbol),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("polynomial is not univariate in {expected}: found `{found}`")]
    NotUnivariate { expected: Symbol, found: Symbol },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("classes live on different models (n = {left} vs n = {right})")]
    ModelMismatch { left: usize, right: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: String, found: String },
    #[error("Chern class c_{index} is nonzero above the rank {rank}")]
    ChernAboveRank { index: usize, rank: usize },
    #[error("degree-0 part of a total Chern class must be 1")]
    NotUnipotent,
    #[error("rank {0} is not supported by the cached exterior-power formulas (max 7)")]
    UnsupportedRank(usize),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("linear system is inconsistent: {0}")]
    Inconsistent(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

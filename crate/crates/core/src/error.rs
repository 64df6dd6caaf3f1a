use thiserror::Error;

/// Everything that can go wrong inside the engine.
///
/// Domain errors carry the violated condition in plain words so the CLI can
/// hand them straight to the user.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension n = {n} is invalid: {requirement}")]
    Dimension { n: i64, requirement: &'static str },

    #[error("lattice rank m = {m} is invalid: {requirement}")]
    Rank { m: i64, requirement: &'static str },

    #[error("argument s = {s} is outside the domain: {requirement}")]
    Argument { s: i64, requirement: &'static str },

    #[error("shift parameter a = {a} must satisfy 0 < a <= 1")]
    Shift { a: String },

    #[error("precision of {bits} bits is below the minimum of {min}")]
    Precision { bits: u32, min: u32 },

    #[error("scalar {value} must be strictly positive")]
    NonPositiveScalar { value: String },

    #[error("matrix is not square ({rows} rows, row {row} has {len} entries)")]
    NotSquare { rows: usize, row: usize, len: usize },

    #[error("a Gram matrix needs at least one row")]
    EmptyMatrix,

    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },

    #[error("matrix has a non-integer entry at ({i}, {j}); parity is undefined")]
    NonInteger { i: usize, j: usize },

    #[error("Coxeter edge ({i}, {j}) has label {label}; only label 3 has a rational Gram entry")]
    UnsupportedLabel { i: usize, j: usize, label: u32 },

    #[error("invalid Coxeter edge ({i}, {j}, label {label}) on {nodes} nodes")]
    BadEdge { i: usize, j: usize, label: u32, nodes: usize },

    #[error("division by a ball that contains zero")]
    DivisionByZero,

    #[error("square root of a ball that is not strictly positive")]
    NegativeSqrt,
}

pub type Result<T> = std::result::Result<T, Error>;

//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("zero substituted into a negative power of {0}")]
    ZeroToNegativePower(String),
    #[error("substitution of {0} leaves a non-integral coefficient")]
    NonIntegralSubstitution(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cell ({row},{col}) is not in the shape")]
    CellNotInShape { row: usize, col: usize },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<u8>),
    #[error("not a subdiagram")]
    NotASubdiagram,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("not symmetric: M_{left:?} has {left_coeff} but M_{right:?} has {right_coeff}")]
    NotSymmetric {
        left: Vec<usize>,
        left_coeff: String,
        right: Vec<usize>,
        right_coeff: String,
    },
    #[error("diagram has {size} cells, above the enumeration cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("columns {0} and {1} do not satisfy the column exchange condition")]
    NotInV(usize, usize),
    #[error("columns {0} and {1} do not satisfy the bottomless exchange condition")]
    NotInBarV(usize, usize),
    #[error("invalid corner columns {i},{j} for {nu}")]
    InvalidCorners { nu: String, i: usize, j: usize },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("invalid pair: {0}")]
    InvalidPair(String),
    #[error("hypothesis fails: {0}")]
    HypothesisFails(String),
    #[error("descent set contains a bottom cell")]
    BottomCellInS,
    #[error("row condition violated: removed cells of {lam} and {mu} lie above row 2")]
    RowConditionViolated { lam: String, mu: String },
    #[error("{0} is not a hook")]
    NotAHook(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("{0} is not a 3-core")]
    NotACore(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

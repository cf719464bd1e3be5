use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("index out of range: {0}")]
    IndexRange(String),
    #[error("two-step algebra is degenerate (abelian factor of dimension {abelian_dim})")]
    Degenerate { abelian_dim: usize },
    #[error("algebra is not two-step nilpotent")]
    NotTwoStep,
    #[error("map beta_* is not surjective")]
    NotSurjective,
    #[error("unsupported signature ({0},{1})")]
    UnsupportedSignature(usize, usize),
    #[error("no grading node of type A{}xA{} found", .0.saturating_sub(1), .1.saturating_sub(1))]
    NoGradingNode(usize, usize),
    #[error("module isomorphism: solution space has dimension {0}, expected 1")]
    ModuleIso(usize),
    #[error("subalgebra is not reductive: {0}")]
    NotReductive(String),
    #[error("element is not semisimple")]
    NotSemisimple,
    #[error("unknown semisimple type: dim {dim}, Killing signature ({pos},{neg})")]
    UnknownType { dim: usize, pos: usize, neg: usize },
    #[error("semisimple part is not split: {0}")]
    NotSplit(String),
    #[error("unknown catalog row {row} in table {table}")]
    UnknownRow { table: u8, row: String },
    #[error("gram matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

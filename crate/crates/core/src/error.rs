use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot substitute 0 for {var} in a term with exponent {exp}")]
    NegativeExponentAtZero { var: char, exp: i32 },
    #[error("substitution {var} -> {coeff}*... would need 1/{coeff} for exponent {exp}")]
    NonUnitSubstitution { var: char, coeff: i64, exp: i32 },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("box (column {column}, row {row}) lies outside the diagram")]
    BoxOutsideDiagram { column: usize, row: usize },
    #[error("{m} and {n} are not coprime")]
    NotCoprime { m: usize, n: usize },
    #[error("function is not symmetric: coefficient of {0} differs from its rearrangement")]
    NotSymmetric(String),
    #[error("coefficient is not a Laurent polynomial: {0}")]
    NonLaurentResult(String),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("{beta} is not a rearrangement of the transpose of {mu}")]
    BadRearrangement { mu: String, beta: String },
    #[error("domino ({0}, {1}) is not a vertical domino of the diagram")]
    NotASubsetOfV(usize, usize),
    #[error("need at least {needed} variables, got {given}")]
    TooFewVariables { needed: usize, given: usize },
    #[error("basis matrix is singular")]
    SingularBasisMatrix,
    #[error("expansion is not homogeneous")]
    NotHomogeneous,
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

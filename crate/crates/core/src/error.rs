use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("unknown term order `{0}`")]
    UnknownOrder(String),
    #[error("invalid term order: {0}")]
    InvalidOrder(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("height undefined: every summand is zero")]
    UndefinedHeight,
    #[error("generator list contains the zero polynomial")]
    ZeroGenerator,
    #[error("exponent system has a column of total degree zero")]
    ZeroDegreeColumn,
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("subalgebra generators are not a verified SAGBI basis")]
    NotVerified,
    #[error("ideal generators are not a verified SG-basis")]
    IdealNotVerified,
    #[error("{0} is not an element of the subalgebra")]
    NotInSubalgebra(String),
    #[error("tag polynomial at index {0} is not homogeneous")]
    NotHomogeneous(usize),
    #[error("construction did not complete within {0} passes")]
    IterationCap(usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

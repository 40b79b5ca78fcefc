//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum RatlinError {
    #[error("cannot parse `{0}` as a rational")]
    BadRational(String),
    #[error("rational `{0}` has a zero denominator")]
    ZeroDenominator(String),
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
}

#[derive(Debug, Error)]
pub enum FusionError {
    #[error("fusion law parameter constraint violated: {0}")]
    BadParameter(String),
    #[error("minor subset must contain the eigenvalue 1")]
    MinorMissingOne,
    #[error("minor subset contains `{0}` which is not an eigenvalue of the law")]
    MinorUnknownEigenvalue(String),
    #[error("eigenvalue list must contain 1 and have no repeats")]
    BadEigenvalues,
    #[error("rule refers to `{0}` which is not an eigenvalue of the law")]
    RuleUnknownEigenvalue(String),
    #[error("grading parts must partition the eigenvalues with 1 in the plus part")]
    BadGradingPartition,
    #[error("the law has no grading attached")]
    NoGrading,
}

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("element dimension {got} does not match algebra dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("empty generator list")]
    EmptyGenerators,
    #[error("structure constant table is malformed: {0}")]
    BadTable(String),
}

#[derive(Debug, Error)]
pub enum AxisError {
    #[error("axis is not semisimple for the law: eigenspace dims sum to {found}, ambient is {ambient}")]
    NotSemisimple { found: usize, ambient: usize },
    #[error("axis is not primitive: its 1-eigenspace has dimension {0}")]
    NotPrimitive(usize),
    #[error("grading is invalid for the fusion law")]
    InvalidGrading,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Error)]
pub enum MiyamotoError {
    #[error("enumeration exceeded cap of {0}; result flagged incomplete")]
    CapExceeded(usize),
    #[error("axis closure incomplete; cannot decide equivalence")]
    IncompleteClosure,
    #[error(transparent)]
    Axis(#[from] AxisError),
}

#[derive(Debug, Error)]
pub enum FormError {
    #[error("the prescribed axis values are inconsistent with associativity")]
    Inconsistent,
    #[error("the form is not unique: a {0}-dimensional solution family exists")]
    NotUnique(usize),
    #[error(transparent)]
    Axis(#[from] AxisError),
}

#[derive(Debug, Error)]
pub enum MatsuoError {
    #[error("3-transposition verification failed: {0}")]
    NotThreeTransposition(String),
    #[error("eta must avoid 0 and 1")]
    BadEta,
    #[error("cannot parse permutation `{0}`")]
    BadPermutation(String),
    #[error("unknown builtin group `{0}`")]
    UnknownBuiltin(String),
}

#[derive(Debug, Error)]
pub enum DecompError {
    #[error("element is not an idempotent")]
    NotIdempotent,
    #[error("element does not lie in the sum of the parts")]
    NotInSum,
    #[error("fusion law is not Seress")]
    NotSeress,
    #[error("partition has a nonzero cross product between parts")]
    NonzeroCrossProduct,
}

#[derive(Debug, Error)]
pub enum FileError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid algebra file: {0}")]
    Invalid(String),
}

impl From<serde_json::Error> for FileError {
    fn from(e: serde_json::Error) -> Self {
        FileError::Parse(e.to_string())
    }
}

use thiserror::Error;

use crate::scalar::Field;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed scalar `{0}` (expected -?digits(/digits)?)")]
    MalformedScalar(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("characteristic {0} is not supported (need 0 or a prime p >= 5)")]
    Characteristic(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unrecognised field descriptor `{0}` (expected Q or F<p>)")]
    BadField(String),
    #[error("mixed-field arithmetic: {0} vs {1}")]
    MixedField(Field, Field),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("idempotent is not proper (it is 0 or 1)")]
    NotProper,
    #[error("no proper idempotent available: {0}")]
    NoProperIdempotent(String),
    #[error("eigenspaces do not exhaust the space: dimensions {found} of {dim}")]
    NotExhaustive { found: usize, dim: usize },
    #[error("vector does not lie in the expected subspace: {0}")]
    NotInSpan(String),
    #[error("not closed under the bracket: {0}")]
    NotClosed(String),
    #[error("not a short structure: {0}")]
    NotShort(String),
    #[error("not an sl2-triple: {0}")]
    NotSl2Triple(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid construction parameters: {0}")]
    Parameters(String),
}

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("marked count {0} is out of range (need 4 <= n <= {max})", max = crate::classes::labels::MAX_MARKED)]
    InvalidMarkedCount(usize),

    #[error("label {label} is out of range for n = {n}")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("boundary divisor needs 2 <= |I| <= n - 2, got |I| = {size} with n = {n}")]
    SizeOutOfRange { size: usize, n: usize },

    #[error("subset must be nonempty and proper")]
    EmptyOrFull,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("divisor {0} is adjacent and has no dual element in the nonadjacent basis")]
    AdjacentDivisor(String),

    #[error("forgetful map needs exactly four labels, got {0}")]
    BadSize(usize),

    #[error("objects live on different moduli spaces (n = {0} vs n = {1})")]
    MismatchedN(usize, usize),

    #[error("invariant locus is not a curve: {0}")]
    NotACurve(String),

    #[error("node budget of {0} exhausted")]
    Timeout(u64),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("ordered partition {0} is not a torus-invariant curve")]
    NotOneDimensional(String),

    #[error("degenerate family: {0}")]
    DegenerateFamily(String),

    #[error("unsupported field extension: {0}")]
    UnsupportedFieldExtension(String),

    #[error("germ order {0} exceeds the configured bound")]
    GermDepthExceeded(usize),

    #[error("upstairs class meets contracted divisor {0} whose fibre is not an F-curve")]
    UnsupportedExceptionalLocus(String),
}

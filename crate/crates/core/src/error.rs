use thiserror::Error;

/// Errors surfaced by the library.
///
/// Variants are grouped by the kind of misuse they report: malformed input
/// data, invalid model/coefficient combinations, queries outside the trusted
/// degree range of a truncated model, and internal verification failures that
/// must abort a computation rather than produce silently wrong output.
#[derive(Debug, Error)]
pub enum Error {
    #[error("facet element {vertex} out of range 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },

    #[error("subcomplex face {0} is not a face of the ambient complex")]
    NotASubcomplex(String),

    #[error("invalid model variant: {0}")]
    InvalidVariant(String),

    #[error("family {0} is infinite over this complex and requires a truncation degree")]
    TruncationRequired(String),

    #[error("degree {degree} is outside the trusted range {lo}..={hi} of this truncated complex")]
    OutsideTrustedRange { degree: i64, lo: i64, hi: i64 },

    #[error("coefficient modulus {0} is not prime")]
    ModulusNotPrime(u64),

    #[error("maximum degree {0} exceeds the trusted range of the model")]
    MaxDegreeUntrusted(i64),

    #[error("class lift failed: {0}")]
    LiftFailure(String),

    #[error("class does not live in the expected component: {0}")]
    WrongComponent(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

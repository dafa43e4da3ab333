use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown constant `{0}`")]
    UnknownConstant(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("invalid parameters for `{id}`: {reason}")]
    InvalidParams { id: String, reason: String },

    #[error("term index {k} is outside the domain of `{id}` (first index {first})")]
    TermOutOfDomain { id: String, k: u64, first: u64 },

    #[error("denominator partial sum is indistinguishable from zero at working precision")]
    ZeroDenominator,

    #[error("independent evaluations of {0} disagree at working precision")]
    ConstantMismatch(&'static str),

    #[error("coefficient {coefficient} of pi^{pi_power} in the {p}! group is not divisible by {p}")]
    DivisibilityFailed { p: u32, coefficient: String, pi_power: u32 },

    #[error("composite rewrite rejected the input: {0}")]
    CompositeInput(String),
}

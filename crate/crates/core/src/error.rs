use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition sizes differ: |λ| = {lambda}, |μ| = {mu}")]
    SizeMismatch { lambda: u32, mu: u32 },

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("weight {0} is not a positive even integer")]
    OddWeight(u32),

    #[error("weight {weight} is outside the supported range {min}..={max}")]
    WeightOutOfRange { weight: u32, min: u32, max: u32 },

    #[error("negative exponent {0} in series power")]
    NegativeExponent(i64),

    #[error("series of order {have} is too short, need order at least {need}")]
    InsufficientOrder { have: usize, need: usize },

    #[error("linear system is singular (rank {rank} < {needed})")]
    Singular { rank: usize, needed: usize },

    #[error("solution fails to reproduce coefficient {index}: the series is not in the span")]
    Inconsistent { index: usize },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("unknown matroid element {0}")]
    UnknownElement(String),

    #[error("ground set of {size} elements exceeds the Tutte enumeration cap of {cap}")]
    TutteTooLarge { size: usize, cap: usize },

    #[error("unsupported named restriction weight {0} (expected 14, 16 or 18)")]
    UnsupportedRestriction(u32),

    #[error("generator triple type {0} is not in 1..=8")]
    InvalidTripleType(u32),

    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },

    #[error("value {0} is not an integer")]
    NonIntegral(String),

    #[error("cannot parse rational {0:?}")]
    ParseRational(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable snake_case name of the variant, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::SizeMismatch { .. } => "size_mismatch",
            Error::InvalidPartition(_) => "invalid_partition",
            Error::OddWeight(_) => "odd_weight",
            Error::WeightOutOfRange { .. } => "weight_out_of_range",
            Error::NegativeExponent(_) => "negative_exponent",
            Error::InsufficientOrder { .. } => "insufficient_order",
            Error::Singular { .. } => "singular",
            Error::Inconsistent { .. } => "inconsistent",
            Error::Internal(_) => "internal",
            Error::UnknownElement(_) => "unknown_element",
            Error::TutteTooLarge { .. } => "tutte_too_large",
            Error::UnsupportedRestriction(_) => "unsupported_restriction",
            Error::InvalidTripleType(_) => "invalid_triple_type",
            Error::CoefficientCount { .. } => "coefficient_count",
            Error::NonIntegral(_) => "non_integral",
            Error::ParseRational(_) => "parse_rational",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }
}

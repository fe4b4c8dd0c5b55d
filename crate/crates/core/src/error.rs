use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("morphism is not well defined: {0}")]
    IllDefined(String),

    #[error("not a complex: d∘d is nonzero at degree {degree}")]
    NotAComplex { degree: i64 },

    #[error("invalid complex data: {0}")]
    InvalidComplex(String),

    #[error("not a chain map: square fails at degree {degree}")]
    NotChainMap { degree: i64 },

    #[error("map is not an epimorphism at degree {degree}")]
    NotEpi { degree: i64 },

    #[error("homotopy witness does not satisfy f = ds + sd at degree {degree}")]
    InvalidWitness { degree: i64 },

    #[error("factorization does not recompose s at degree {degree}")]
    InvalidFactorization { degree: i64 },

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("internal invariant breached: {0}")]
    Internal(String),
}

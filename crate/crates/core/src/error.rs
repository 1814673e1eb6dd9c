use thiserror::Error;

/// Errors raised by field construction, family generators and criteria.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument falls outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The supplied modulus has a nontrivial factor.
    #[error(
        "modulus is reducible over GF(3): it has an irreducible factor of degree {factor_degree}"
    )]
    ReducibleModulus { factor_degree: usize },

    /// The supplied modulus is malformed (wrong degree, not monic, bad trit).
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    /// The extension degree exceeds the configured table cap.
    #[error("extension degree {n} exceeds the limit {max}")]
    TooLarge { n: usize, max: usize },

    /// A derived identity that should always hold did not.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

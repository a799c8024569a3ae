use thiserror::Error;

/// Errors shared by all modules.
#[derive(Debug, Error)]
pub enum Error {
    /// Domain parameters violate a documented precondition.
    #[error("invalid parameters: {0}")]
    Validation(String),

    /// The requested domain admits no tiling.
    #[error("domain is not tilable: {0}")]
    Untilable(String),

    /// An enumeration would exceed the configured cap.
    #[error("enumeration cap exceeded: domain has {count} tilings, cap is {cap}")]
    CapExceeded { count: num::BigUint, cap: u64 },

    /// A quadrature or linear-algebra routine failed to converge.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Kernel/law evaluated outside its documented range of validity.
    #[error("unsupported range: {0}")]
    UnsupportedRange(String),

    /// Serialization problems on the CLI surface.
    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}

use thiserror::Error;

/// Errors produced by the library. `Domain` covers argument-validation
/// failures; the remaining variants carry enough context to be surfaced
/// on a single diagnostic line.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid model: {0}")]
    Model(String),

    #[error("inadmissible partition: {0}")]
    Partition(String),

    #[error("no admissible truncation constants for base {base}: {condition}")]
    Constants { base: f64, condition: String },

    #[error("{0}")]
    Input(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

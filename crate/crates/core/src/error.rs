use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no root: {0}")]
    NoRoot(String),
    #[error("zeta has a pole at s = 1")]
    Pole,
    #[error("|Im s| = {0} exceeds the evaluation guard of 1e5")]
    Range(f64),
    #[error("height {t} lies beyond the dataset completeness height {t_max}")]
    BeyondDataset { t: f64, t_max: f64 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

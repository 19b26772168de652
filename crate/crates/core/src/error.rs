use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("string of length {len} is too short, need at least {min} symbols")]
    TooShort { len: usize, min: usize },

    #[error("token {index} ({token:?}) is not an unsigned 32-bit integer")]
    BadToken { index: usize, token: String },

    #[error("renaming maps symbols {first} and {second} to the same id {target}")]
    NotInjective {
        first: u32,
        second: u32,
        target: u32,
    },

    #[error("renaming has no image for symbol {0}")]
    MissingImage(u32),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("unknown {what} {name:?}")]
    UnknownName { what: &'static str, name: String },

    #[error("csv: {0}")]
    Csv(String),
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}

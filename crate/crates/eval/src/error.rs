use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed dictionary XML at byte {offset}: {reason}")]
    Parse { offset: u64, reason: String },
    #[error("more than 128 distinct grammemes (last: {0})")]
    TooManyGrammemes(String),
    #[error("no {0} lexemes in the lexicon")]
    Empty(String),
    #[error("engine does not support {0}")]
    Unsupported(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

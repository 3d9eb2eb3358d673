use thiserror::Error;

/// Errors raised by the inflection and synthesis functions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a Russian word: {0:?}")]
    NotRussian(String),
    #[error("cannot remove {n} characters from {word:?}")]
    Underflow { word: String, n: usize },
    #[error("{0:?} is not adjective-shaped")]
    NotAdjectiveShaped(String),
    #[error("{0:?} is not an infinitive")]
    NotInfinitive(String),
    #[error("no such form: {0}")]
    NoSuchForm(String),
    #[error("invalid slot {slot} for {pos}")]
    InvalidSlot { pos: String, slot: String },
    #[error("value {0} is outside 0..=9999")]
    Range(i64),
    #[error("malformed expression: {0}")]
    MalformedExpression(String),
    #[error("missing field {0:?}")]
    MissingField(String),
    #[error("bad field {field:?}: {reason}")]
    BadField { field: String, reason: String },
    #[error("malformed template: {0}")]
    MalformedTemplate(String),
    #[error("unknown feature value {0:?}")]
    UnknownFeature(String),
    #[error("empty input")]
    Empty,
    #[error("exception table {name}: {reason}")]
    Table { name: String, reason: String },
}

impl Error {
    /// Stable machine-readable code, used in service responses.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotRussian(_) => "not-russian",
            Error::Underflow { .. } => "underflow",
            Error::NotAdjectiveShaped(_) => "not-adjective-shaped",
            Error::NotInfinitive(_) => "not-infinitive",
            Error::NoSuchForm(_) => "no-such-form",
            Error::InvalidSlot { .. } => "invalid-slot",
            Error::Range(_) => "range",
            Error::MalformedExpression(_) => "malformed-expression",
            Error::MissingField(_) => "missing-field",
            Error::BadField { .. } => "bad-field",
            Error::MalformedTemplate(_) => "malformed-template",
            Error::UnknownFeature(_) => "unknown-feature",
            Error::Empty => "empty",
            Error::Table { .. } => "table",
        }
    }

}

pub(crate) fn no_form(word: &str, what: &str) -> Error {
    Error::NoSuchForm(format!("{what} of {word:?}"))
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

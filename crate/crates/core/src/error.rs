use std::io;

use thiserror::Error;

use crate::poset::ElementId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("element {id} is not in the ground set of {poset}")]
    Range { id: ElementId, poset: String },

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("decoded relation is not a linear order: {0}")]
    Decode(String),

    #[error("solver protocol error: {0}")]
    Protocol(String),

    #[error("environment error: {0}")]
    Environment(String),

    #[error("no realizer with frequency <= {0} exists")]
    BoundExceeded(usize),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    /// Stable category name used in machine-readable diagnostics.
    pub fn category(&self) -> &'static str {
        match self {
            Error::Parameter(_) => "parameter",
            Error::Range { .. } => "range",
            Error::Contract(_) => "contract",
            Error::Parse { .. } => "parse",
            Error::Decode(_) => "decode",
            Error::Protocol(_) => "protocol",
            Error::Environment(_) => "environment",
            Error::BoundExceeded(_) => "bound-exceeded",
            Error::Io(_) => "io",
        }
    }
}

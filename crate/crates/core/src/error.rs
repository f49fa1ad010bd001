use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Concrete evidence attached to a failed precondition or audit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// A vertex tuple: a clique, a cycle, an embedding image, a pair.
    Vertices(Vec<usize>),
    /// Hyperedges given by their vertex lists.
    Edges(Vec<Vec<usize>>),
    /// A map from pattern vertices (by index) to host vertices.
    Map(Vec<usize>),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Vertices(v) => write!(f, "vertices {v:?}"),
            Witness::Edges(e) => write!(f, "edges {e:?}"),
            Witness::Map(m) => write!(f, "map {m:?}"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{what} ({witness})")]
    Precondition { what: String, witness: Witness },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// An output failed its independent re-check. Always a bug.
    #[error("validation fault: {0}")]
    ValidationFault(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn precondition(what: impl Into<String>, witness: Witness) -> Self {
        Error::Precondition { what: what.into(), witness }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Error::Precondition { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

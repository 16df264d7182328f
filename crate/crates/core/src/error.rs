use std::path::PathBuf;

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::poly::PolyError;

#[derive(Debug, Error)]
pub enum ArtinderError {
    #[error("parse error: {0}")]
    Parse(PolyError),
    #[error("{0}")]
    NotLocal(String),
    #[error(transparent)]
    DegreeCap(PolyError),
    #[error("{0}")]
    Usage(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("cannot write {}: {source}", path.display())]
    Output { path: PathBuf, source: std::io::Error },
}

impl ArtinderError {
    /// Process exit code for the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            ArtinderError::Parse(_) | ArtinderError::Usage(_) => 2,
            ArtinderError::NotLocal(_) | ArtinderError::DegreeCap(_) => 3,
            ArtinderError::Internal(_) => 4,
            ArtinderError::Output { .. } => 5,
        }
    }
}

impl From<PolyError> for ArtinderError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::DegreeCapExceeded { .. } => ArtinderError::DegreeCap(e),
            other => ArtinderError::Parse(other),
        }
    }
}

impl From<AlgebraError> for ArtinderError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Presentation(p) => p.into(),
            AlgebraError::NotLocal(msg) => ArtinderError::NotLocal(format!("not a local algebra: {msg}")),
            other => ArtinderError::Internal(other.to_string()),
        }
    }
}

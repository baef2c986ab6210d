use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("rank mismatch: expected SL({expected}), found SL({found})")]
    RankMismatch { expected: usize, found: usize },

    #[error("corrupt web: {0}")]
    Corruption(String),

    #[error("web is not coherent: {0}")]
    Incoherent(String),

    #[error("local move does not apply: {0}")]
    PatternMismatch(String),

    #[error("evaluation budget exceeded: {needed} > {budget}")]
    Budget { needed: u128, budget: u128 },

    #[error("arithmetic overflow during {0}")]
    Overflow(&'static str),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn check_rank(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::RankMismatch { expected, found })
    }
}

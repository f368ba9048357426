//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while parsing data files or running the
/// matching engine.
#[derive(Debug, Error)]
pub enum Error {
    /// A JEL code appears more than once in a snapshot.
    #[error("duplicate code {0}")]
    DuplicateCode(String),

    /// A record's parent code is not present in the snapshot.
    #[error("orphan code {0}: parent not found")]
    OrphanCode(String),

    /// A malformed JEL code token (`line` is 1-based: the record index for
    /// JSON arrays, the file line for line-oriented inputs).
    #[error("line {line}: bad code token {token:?}")]
    BadCode { line: usize, token: String },

    /// A catalog entry violates an invariant (bad id, keyword syntax,
    /// over-long list, duplicate keyword, selected keyword not in list, ...).
    #[error("bad catalog entry: {0}")]
    BadCatalog(String),

    /// A rank below 1 was passed to a weighting scheme.
    #[error("rank must be at least 1")]
    BadRank,

    /// A malformed stoplist line.
    #[error("stoplist line {line}: {message}")]
    BadStoplist { line: usize, message: String },

    /// Malformed trend-group specification (bad syntax or duplicate name).
    #[error("bad trend group: {0}")]
    BadGroup(String),

    /// Malformed linkage table JSON.
    #[error("bad linkage table: {0}")]
    BadLinkage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

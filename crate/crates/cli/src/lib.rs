//! Reporting, caching and verification drivers behind the `so7-atlas` binary.

pub mod cache;
pub mod export;
pub mod report;
pub mod verify;

use so7_core::atlas::{named_group, NamedGroup, NamedGroupId};

pub use cache::GroupCache;
pub use report::{build_report, GroupReport, SplitStatus, Table1Claim, Table1Comparison};
pub use verify::{verify_table1, CheckResult, Discrepancy, VerificationSummary};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] so7_core::Error),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: std::path::PathBuf,
        source: std::io::Error,
    },
    #[error("corrupt group cache {path}: {reason}")]
    CacheCorrupt { path: std::path::PathBuf, reason: String },
    #[error("malformed export file: {0}")]
    Export(String),
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Loads `id` from the cache when possible, otherwise builds it and stores
/// the result.
pub fn load_or_build(id: NamedGroupId, cache: Option<&GroupCache>) -> Result<NamedGroup> {
    if let Some(cache) = cache {
        if let Some(group) = cache.load(id)? {
            return Ok(group);
        }
    }
    let group = named_group(id)?;
    if let Some(cache) = cache {
        cache.store(&group)?;
    }
    Ok(group)
}

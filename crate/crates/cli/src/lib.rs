//! Scenario runner and file formats for `wigwell`.
//!
//! A scenario is a flat `key = value` file describing one well (or a sweep
//! over its splitting), a superposition angle, a list of times and the
//! artifacts to produce. [`run_scenario`] writes CSV tables, PPM heatmaps and
//! a checksum manifest into an output directory; the bytes depend only on
//! the scenario, never on the number of worker threads.

pub mod csvio;
pub mod heatmap;
pub mod manifest;
pub mod report;
pub mod run;
pub mod scenario;

use std::path::PathBuf;

use thiserror::Error;
use wigwell_core::{BenchError, WellError, WignerError};

pub use run::{run_scenario, FringeRow, NegativityRow, RunSummary};
pub use scenario::{Output, Scenario, TimeSpec};

#[derive(Debug, Error)]
pub enum CliError {
    /// `line` is 1-based; 0 when the problem is not tied to a line.
    #[error("{}key `{key}`: {message}", at_line(*line))]
    Parse {
        line: usize,
        key: String,
        message: String,
    },
    #[error("invalid scenario: {0}")]
    Validation(String),
    #[error(transparent)]
    Well(#[from] WellError),
    #[error(transparent)]
    Wigner(#[from] WignerError),
    #[error(transparent)]
    Bench(#[from] BenchError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },
}

impl CliError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn missing(key: &str) -> Self {
        CliError::Parse {
            line: 0,
            key: key.to_string(),
            message: "missing required key".into(),
        }
    }
}

fn at_line(line: usize) -> String {
    match line {
        0 => String::new(),
        n => format!("line {n}: "),
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

/// Shortest decimal that parses back to the same `f64`.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:?}")
}

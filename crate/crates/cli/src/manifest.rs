//! `manifest.txt`: one `file=sha256:<hex>` line per artifact, sorted by name.

use std::fmt::Write as _;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::{CliError, Result};

pub const MANIFEST_NAME: &str = "manifest.txt";

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
}

/// Digest every file in `names` (relative to `dir`) and write the manifest.
pub fn write_manifest(dir: &Path, names: &[String]) -> Result<String> {
    let mut sorted = names.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut text = String::new();
    for name in &sorted {
        let path = dir.join(name);
        let bytes = std::fs::read(&path).map_err(|e| CliError::io(&path, e))?;
        let _ = writeln!(text, "{name}=sha256:{}", sha256_hex(&bytes));
    }
    let path = dir.join(MANIFEST_NAME);
    std::fs::write(&path, &text).map_err(|e| CliError::io(&path, e))?;
    Ok(text)
}

//! Bundled data files and the path-resolution chain.
//!
//! Every command resolves each data file in this order:
//! 1. an explicit `--taxonomy` / `--catalog` / `--stoplist` path,
//! 2. `$SDGJEL_DATA_DIR/<standard file name>`,
//! 3. the copy embedded in the binary at compile time.

use std::path::PathBuf;

use crate::error::Result;

/// Compiled-in JEL snapshot (`data/jel_snapshot.json`).
pub const EMBEDDED_SNAPSHOT: &str = include_str!("../data/jel_snapshot.json");
/// Compiled-in SDG catalog (`data/sdg_catalog.json`).
pub const EMBEDDED_CATALOG: &str = include_str!("../data/sdg_catalog.json");
/// Compiled-in stoplist (`data/stoplist.txt`).
pub const EMBEDDED_STOPLIST: &str = include_str!("../data/stoplist.txt");

/// Environment variable naming a directory with override data files.
pub const DATA_DIR_ENV: &str = "SDGJEL_DATA_DIR";

/// The three standard data files.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DataFile {
    Snapshot,
    Catalog,
    Stoplist,
}

impl DataFile {
    /// File name looked up inside `$SDGJEL_DATA_DIR`.
    pub fn file_name(&self) -> &'static str {
        match self {
            DataFile::Snapshot => "jel_snapshot.json",
            DataFile::Catalog => "sdg_catalog.json",
            DataFile::Stoplist => "stoplist.txt",
        }
    }

    fn embedded(&self) -> &'static str {
        match self {
            DataFile::Snapshot => EMBEDDED_SNAPSHOT,
            DataFile::Catalog => EMBEDDED_CATALOG,
            DataFile::Stoplist => EMBEDDED_STOPLIST,
        }
    }

    /// Resolve this file's contents: explicit path, then the environment
    /// directory, then the embedded copy. An explicit path that cannot be
    /// read is an error; so is a missing file inside an explicitly set
    /// `$SDGJEL_DATA_DIR`.
    pub fn load(&self, explicit: Option<&PathBuf>) -> Result<String> {
        if let Some(path) = explicit {
            return Ok(std::fs::read_to_string(path)?);
        }
        if let Ok(dir) = std::env::var(DATA_DIR_ENV) {
            if !dir.is_empty() {
                let path = PathBuf::from(dir).join(self.file_name());
                return Ok(std::fs::read_to_string(path)?);
            }
        }
        Ok(self.embedded().to_string())
    }
}

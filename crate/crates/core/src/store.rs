//! On-disk store of analysed codes: one `NAME.json` metadata file and one
//! plain-text `NAME.gen` generator matrix per entry.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::analysis::{analyze, AnalysisOptions, EnumeratorReport};
use crate::error::{Error, Result};
use crate::gf2::{BinaryCode, BinaryMatrix};

/// Environment variable naming the default store directory.
pub const STORE_ENV: &str = "SELFDUAL_STORE";
const DEFAULT_DIR: &str = "selfdual-store";

/// How a stored code was built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Provenance {
    Graph {
        graph: String,
        faces: [usize; 2],
    },
    Lift {
        base: String,
        hex: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        rng: Option<String>,
    },
    Extension {
        base: String,
        x: String,
    },
    File {
        path: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeStoreEntry {
    pub name: String,
    pub provenance: Provenance,
    /// Generator in the text format of [`BinaryMatrix::to_text`].
    #[serde(skip)]
    pub generator: String,
    pub report: EnumeratorReport,
}

impl CodeStoreEntry {
    pub fn new(name: &str, provenance: Provenance, code: &BinaryCode, report: EnumeratorReport) -> Self {
        Self {
            name: name.to_string(),
            provenance,
            generator: code.generator().to_text(),
            report,
        }
    }

    pub fn code(&self) -> Result<BinaryCode> {
        BinaryCode::new(BinaryMatrix::parse_text(&self.generator)?)
    }

    /// Re-analyses the stored generator and compares with the stored report.
    pub fn verify(&self, opts: &AnalysisOptions) -> Result<bool> {
        Ok(analyze(&self.code()?, opts)? == self.report)
    }
}

#[derive(Clone, Debug)]
pub struct Store {
    dir: PathBuf,
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Store(format!("{}: {e}", path.display()))
}

fn check_name(name: &str) -> Result<()> {
    let ok = !name.is_empty()
        && !name.starts_with('.')
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'));
    if ok {
        Ok(())
    } else {
        Err(Error::Store(format!("invalid entry name {name:?}")))
    }
}

impl Store {
    /// Store directory: the explicit path, else `$SELFDUAL_STORE`, else
    /// `./selfdual-store`.
    pub fn resolve_dir(explicit: Option<&Path>) -> PathBuf {
        explicit
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os(STORE_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_DIR))
    }

    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| io_err(&dir, e))?;
        Ok(Self { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn paths(&self, name: &str) -> (PathBuf, PathBuf) {
        (
            self.dir.join(format!("{name}.json")),
            self.dir.join(format!("{name}.gen")),
        )
    }

    /// Writes both files; returns the metadata path.
    pub fn save(&self, entry: &CodeStoreEntry) -> Result<PathBuf> {
        check_name(&entry.name)?;
        let (json, gen) = self.paths(&entry.name);
        let text = serde_json::to_string_pretty(entry).map_err(|e| io_err(&json, e))?;
        fs::write(&gen, &entry.generator).map_err(|e| io_err(&gen, e))?;
        fs::write(&json, text + "\n").map_err(|e| io_err(&json, e))?;
        Ok(json)
    }

    pub fn load(&self, name: &str) -> Result<CodeStoreEntry> {
        check_name(name)?;
        let (json, gen) = self.paths(name);
        let text = fs::read_to_string(&json).map_err(|e| io_err(&json, e))?;
        let mut entry: CodeStoreEntry = serde_json::from_str(&text).map_err(|e| io_err(&json, e))?;
        entry.generator = fs::read_to_string(&gen).map_err(|e| io_err(&gen, e))?;
        Ok(entry)
    }

    /// Entry names, sorted.
    pub fn list(&self) -> Result<Vec<String>> {
        let mut names = Vec::new();
        for item in fs::read_dir(&self.dir).map_err(|e| io_err(&self.dir, e))? {
            let path = item.map_err(|e| io_err(&self.dir, e))?.path();
            if path.extension().is_some_and(|x| x == "json") {
                if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
                    names.push(stem.to_string());
                }
            }
        }
        names.sort();
        Ok(names)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_sanitized() {
        assert!(check_name("phi_K1").is_ok());
        assert!(check_name("C3.ext").is_ok());
        for bad in ["", "../x", "a/b", ".hidden"] {
            assert!(check_name(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn explicit_dir_wins() {
        let p = Store::resolve_dir(Some(Path::new("/tmp/somewhere")));
        assert_eq!(p, PathBuf::from("/tmp/somewhere"));
    }
}

use std::fs;
use std::path::{Path, PathBuf};

use super::EnumerationSpec;
use crate::error::{Error, Result};
use crate::formats::{parse_graph6, to_graph6};
use crate::graph::Graph;

const VERSION: &str = env!("CARGO_PKG_VERSION");

/// graph6 files keyed by enumeration spec and crate version.
#[derive(Debug, Clone)]
pub struct EnumerationCache {
    dir: PathBuf,
}

impl EnumerationCache {
    pub fn new(dir: impl AsRef<Path>) -> Self {
        EnumerationCache {
            dir: dir.as_ref().to_path_buf(),
        }
    }

    pub fn path_for(&self, spec: &EnumerationSpec) -> PathBuf {
        self.dir.join(format!("{}-v{VERSION}.g6", spec.key()))
    }

    /// Cached population, or `None` when missing or unreadable.
    pub fn load(&self, spec: &EnumerationSpec) -> Option<Vec<Graph>> {
        let text = fs::read_to_string(self.path_for(spec)).ok()?;
        let mut lines = text.lines();
        if lines.next()? != header(spec) {
            return None;
        }
        lines.map(parse_graph6).collect::<Result<Vec<_>>>().ok()
    }

    pub fn store(&self, spec: &EnumerationSpec, graphs: &[Graph]) -> Result<()> {
        let io = |e: std::io::Error| Error::input(format!("cache {}: {e}", self.dir.display()));
        fs::create_dir_all(&self.dir).map_err(io)?;
        let mut body = header(spec);
        body.push('\n');
        for g in graphs {
            body.push_str(&to_graph6(g));
            body.push('\n');
        }
        let path = self.path_for(spec);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, body).map_err(io)?;
        fs::rename(&tmp, &path).map_err(io)
    }
}

fn header(spec: &EnumerationSpec) -> String {
    format!("# irreg-core {VERSION} {}", spec.key())
}

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use tempfile::NamedTempFile;

/// `dir/name.json` with `suffix` "trace" becomes `dir/name.trace.json`.
pub fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    path.with_file_name(format!("{stem}.{suffix}"))
}

/// Writes every file or none. Contents are staged next to their targets and
/// renamed into place once all of them are written.
pub fn write_files(files: &[(PathBuf, String)]) -> Result<()> {
    let mut staged = Vec::with_capacity(files.len());
    for (path, body) in files {
        let dir = match path.parent() {
            Some(d) if !d.as_os_str().is_empty() => d,
            _ => Path::new("."),
        };
        let mut tmp = NamedTempFile::new_in(dir)
            .with_context(|| format!("cannot write to {}", dir.display()))?;
        tmp.write_all(body.as_bytes())
            .with_context(|| format!("writing {}", path.display()))?;
        staged.push((tmp, path));
    }
    let mut done: Vec<&PathBuf> = Vec::new();
    for (tmp, path) in staged {
        if let Err(e) = tmp.persist(path) {
            for p in done {
                let _ = fs::remove_file(p);
            }
            return Err(e.error).with_context(|| format!("writing {}", path.display()));
        }
        done.push(path);
    }
    Ok(())
}

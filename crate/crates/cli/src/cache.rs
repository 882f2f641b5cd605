//! On-disk cache of structure-constant tensors.

use std::fs;
use std::path::{Path, PathBuf};

use colored_eulerian::StructureConstants;

use crate::error::CliError;
use crate::report::VERSION;

pub fn cache_path(dir: &Path, r: u32, n: usize, partition: &str) -> PathBuf {
    dir.join(format!("structure-constants-r{r}-n{n}-{partition}-v{VERSION}.json"))
}

/// A cached tensor, if present and matching `(r, n, partition)`.
pub fn load(dir: &Path, r: u32, n: usize, partition: &str) -> Option<StructureConstants> {
    let text = fs::read_to_string(cache_path(dir, r, n, partition)).ok()?;
    let constants: StructureConstants = serde_json::from_str(&text).ok()?;
    (constants.r == r && constants.n == n && constants.partition == partition && constants.counts_consistent())
        .then_some(constants)
}

pub fn store(dir: &Path, constants: &StructureConstants) -> Result<PathBuf, CliError> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, constants.r, constants.n, &constants.partition);
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, crate::report::to_validated_json(constants)?)?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

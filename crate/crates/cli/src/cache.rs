//! On-disk cache of Eisenstein coordinate matrices `A_k`.
//!
//! One JSON file per weight, named after the library version so that a new
//! build never reads stale data. Writes go to a temporary file in the same
//! directory and are renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use descendent::matroid::descendent_matroid;
use descendent::rational::{format_rational, parse_rational};
use descendent::{DescendentLabel, LinearMatroid, Rational};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Serialize, Deserialize)]
struct Entry {
    version: String,
    weight: u32,
    dimension: usize,
    labels: Vec<DescendentLabel>,
    columns: Vec<Vec<String>>,
}

pub fn path_for(dir: &Path, k: u32) -> PathBuf {
    dir.join(format!("matrix-k{k}-v{}.json", descendent::VERSION))
}

fn read(path: &Path, k: u32) -> Option<LinearMatroid> {
    let text = fs::read_to_string(path).ok()?;
    let entry: Entry = serde_json::from_str(&text).ok()?;
    if entry.version != descendent::VERSION || entry.weight != k {
        return None;
    }
    let columns: Vec<Vec<Rational>> = entry
        .columns
        .iter()
        .map(|c| c.iter().map(|s| parse_rational(s)).collect())
        .collect::<Result<_, _>>()
        .ok()?;
    LinearMatroid::new(entry.labels, columns, entry.dimension).ok()
}

fn write(path: &Path, k: u32, m: &LinearMatroid) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let entry = Entry {
        version: descendent::VERSION.to_string(),
        weight: k,
        dimension: m.dimension(),
        labels: m.labels().to_vec(),
        columns: m
            .columns()
            .iter()
            .map(|c| c.iter().map(format_rational).collect())
            .collect(),
    };
    let tmp = dir.join(format!(
        ".{}.{}.tmp",
        path.file_name().unwrap_or_default().to_string_lossy(),
        std::process::id()
    ));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(serde_json::to_string(&entry)?.as_bytes())?;
    f.sync_all()?;
    fs::rename(&tmp, path)
}

/// The full descendent matroid of weight `k`, through the cache when one is
/// configured. A corrupt or foreign cache file is rebuilt.
pub fn full_matroid(cache_dir: Option<&Path>, k: u32) -> Result<LinearMatroid, CliError> {
    let Some(dir) = cache_dir else {
        return Ok(descendent_matroid(k, false)?);
    };
    let path = path_for(dir, k);
    if let Some(m) = read(&path, k) {
        return Ok(m);
    }
    let m = descendent_matroid(k, false)?;
    write(&path, k, &m).map_err(|e| CliError::io(&path, e))?;
    Ok(m)
}

pub fn matroid(cache_dir: Option<&Path>, k: u32, positive: bool) -> Result<LinearMatroid, CliError> {
    let full = full_matroid(cache_dir, k)?;
    if !positive {
        return Ok(full);
    }
    let keep: Vec<DescendentLabel> =
        full.labels().iter().filter(|l| l.is_positive()).cloned().collect();
    Ok(full.restrict(&keep)?)
}

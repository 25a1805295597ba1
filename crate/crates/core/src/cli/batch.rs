//! Manifest-driven runs over many problems.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::csv_input::parse_csv;
use super::format::{profiles_to_csv, profiles_to_jsonl};
use super::pairs::{all_pairs, restrict, whole};
use crate::analysis::{compute_profile, ComplexityProfile, ProfileTable};
use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::rng::derive_seed;
use crate::synth::GeneratorSpec;

/// Environment variable capping batch parallelism.
pub const JOBS_ENV: &str = "COMPLEXITY_JOBS";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassSelection {
    /// The literal string `"all-pairs"`.
    Keyword(String),
    Pair([String; 2]),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generate: Option<GeneratorSpec>,
    #[serde(default = "default_label")]
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<ClassSelection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default)]
    pub encode: bool,
    #[serde(default)]
    pub standardize: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
}

fn default_label() -> String {
    "label".into()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    #[serde(default)]
    pub global_seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    pub problems: Vec<ManifestEntry>,
}

impl Manifest {
    pub fn load(path: &Path) -> Result<Manifest> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let manifest: Manifest = serde_json::from_str(&text)?;
        manifest.validate()?;
        Ok(manifest)
    }

    pub fn validate(&self) -> Result<()> {
        let mut paths: Vec<&PathBuf> = self.problems.iter().filter_map(|p| p.path.as_ref()).collect();
        paths.sort();
        if let Some(w) = paths.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!("duplicate manifest path {}", w[0].display())));
        }
        for (i, p) in self.problems.iter().enumerate() {
            if p.path.is_some() == p.generate.is_some() {
                return Err(Error::InvalidArgument(format!(
                    "manifest entry {i}: exactly one of \"path\" or \"generate\" is required"
                )));
            }
            if let Some(ClassSelection::Keyword(k)) = &p.classes {
                if k != "all-pairs" {
                    return Err(Error::InvalidArgument(format!(
                        "manifest entry {i}: classes must be a label pair or \"all-pairs\""
                    )));
                }
            }
        }
        Ok(())
    }

    /// Entry seed, or one derived from the global seed and the entry index.
    pub fn seed_for(&self, index: usize) -> u64 {
        self.problems[index]
            .seed
            .unwrap_or_else(|| derive_seed(self.global_seed, index as u64))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchFailure {
    pub entry: usize,
    pub name: String,
    pub error: String,
    pub io: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BatchOutcome {
    pub table: ProfileTable,
    pub failures: Vec<BatchFailure>,
}

fn entry_problems(entry: &ManifestEntry, base: &Path) -> Result<Vec<Dataset>> {
    let mut problems = if let Some(spec) = &entry.generate {
        vec![spec.generate()?.with_name(spec.describe())]
    } else {
        let path = base.join(entry.path.as_ref().expect("validated"));
        let raw = parse_csv(&path, &entry.label, entry.encode)?;
        match &entry.classes {
            Some(ClassSelection::Pair([a, b])) => vec![restrict(&raw, a, b)?],
            Some(ClassSelection::Keyword(_)) => all_pairs(&raw)?,
            None => vec![whole(&raw)?],
        }
    };
    if entry.standardize {
        problems = problems.iter().map(Dataset::standardized).collect();
    }
    if let Some(name) = &entry.name {
        let single = problems.len() == 1;
        problems = problems
            .into_iter()
            .map(|ds| {
                let full = if single {
                    name.clone()
                } else {
                    // keep the pair suffix
                    let suffix = ds.name().rsplit_once(':').map(|(_, s)| s.to_owned()).unwrap_or_default();
                    format!("{name}:{suffix}")
                };
                ds.with_name(full)
            })
            .collect();
    }
    Ok(problems)
}

fn run_entry(manifest: &Manifest, index: usize, base: &Path) -> Result<Vec<ComplexityProfile>> {
    let entry = &manifest.problems[index];
    let seed = manifest.seed_for(index);
    let problems = entry_problems(entry, base)?;
    let many = problems.len() > 1;
    problems
        .iter()
        .enumerate()
        .map(|(k, ds)| {
            let s = if many { derive_seed(seed, k as u64) } else { seed };
            let mut p = compute_profile(ds, s)?;
            p.group = entry.group.clone();
            Ok(p)
        })
        .collect()
}

/// Parallelism from `COMPLEXITY_JOBS`, else the number of available cores.
pub fn default_jobs() -> usize {
    std::env::var(JOBS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&j| j > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Profiles every entry. Relative paths resolve against `base`. Failures are
/// collected per entry; output order follows the manifest regardless of
/// `jobs`.
pub fn run_batch(manifest: &Manifest, base: &Path, jobs: usize) -> Result<BatchOutcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let results: Vec<Result<Vec<ComplexityProfile>>> = pool.install(|| {
        (0..manifest.problems.len())
            .into_par_iter()
            .map(|i| run_entry(manifest, i, base))
            .collect()
    });
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(profiles) => rows.extend(profiles),
            Err(e) => {
                let entry = &manifest.problems[i];
                let name = entry
                    .name
                    .clone()
                    .or_else(|| entry.path.as_ref().map(|p| p.display().to_string()))
                    .or_else(|| entry.generate.as_ref().map(GeneratorSpec::describe))
                    .unwrap_or_default();
                failures.push(BatchFailure {
                    entry: i,
                    name,
                    io: e.is_io(),
                    error: e.to_string(),
                });
            }
        }
    }
    Ok(BatchOutcome {
        table: ProfileTable::new(rows),
        failures,
    })
}

pub const PROFILES_CSV: &str = "profiles.csv";
pub const PROFILES_JSONL: &str = "profiles.jsonl";
pub const FAILURES_JSONL: &str = "failures.jsonl";

/// Writes `profiles.csv`, `profiles.jsonl` and `failures.jsonl` into `dir`.
pub fn write_outputs(outcome: &BatchOutcome, dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let write = |name: &str, text: String| {
        let path = dir.join(name);
        std::fs::write(&path, text).map_err(|e| Error::io(path, e))
    };
    write(PROFILES_CSV, profiles_to_csv(&outcome.table)?)?;
    write(PROFILES_JSONL, profiles_to_jsonl(&outcome.table)?)?;
    let mut failures = String::new();
    for f in &outcome.failures {
        failures.push_str(&serde_json::to_string(f)?);
        failures.push('\n');
    }
    write(FAILURES_JSONL, failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_parsing_and_validation() {
        let text = r#"{
            "global_seed": 4,
            "problems": [
                {"path": "a.csv", "label": "y", "classes": ["p", "q"]},
                {"path": "b.csv", "classes": "all-pairs", "seed": 9},
                {"generate": {"kind": "checkerboard", "cells_per_side": 4, "n_per_class": 10, "seed": 1}}
            ]
        }"#;
        let m: Manifest = serde_json::from_str(text).unwrap();
        m.validate().unwrap();
        assert_eq!(m.problems[1].label, "label");
        assert_eq!(m.seed_for(1), 9);
        assert_eq!(m.seed_for(0), derive_seed(4, 0));
        assert_eq!(m.problems[0].classes, Some(ClassSelection::Pair(["p".into(), "q".into()])));

        let dup: Manifest = serde_json::from_str(
            r#"{"problems": [{"path": "a.csv"}, {"path": "a.csv"}]}"#,
        )
        .unwrap();
        assert!(dup.validate().is_err());
        let neither: Manifest = serde_json::from_str(r#"{"problems": [{"label": "x"}]}"#).unwrap();
        assert!(neither.validate().is_err());
        let bad: Manifest =
            serde_json::from_str(r#"{"problems": [{"path": "a.csv", "classes": "some"}]}"#).unwrap();
        assert!(bad.validate().is_err());
    }
}

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::ExperimentConfig;
use crate::HarnessError;

/// One CSV output.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(name: &str, header: &[&str]) -> Self {
        Table {
            name: name.to_string(),
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn file_name(&self) -> String {
        format!("{}.csv", self.name)
    }

    pub fn to_csv(&self) -> Result<Vec<u8>, HarnessError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.into_inner()
            .map_err(|e| HarnessError::Io(format!("csv buffer: {e}")))
    }
}

/// A statistic compared against a declared tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub estimate: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub std_error: Option<f64>,
    pub target: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// `|estimate - target| <= tolerance`.
    pub fn within(name: &str, estimate: f64, target: f64, tolerance: f64) -> Self {
        Check {
            name: name.to_string(),
            estimate,
            std_error: None,
            target,
            tolerance,
            pass: (estimate - target).abs() <= tolerance,
        }
    }

    pub fn at_most(name: &str, estimate: f64, bound: f64) -> Self {
        Check {
            name: name.to_string(),
            estimate,
            std_error: None,
            target: bound,
            tolerance: 0.0,
            pass: estimate <= bound,
        }
    }

    pub fn at_least(name: &str, estimate: f64, bound: f64) -> Self {
        Check {
            name: name.to_string(),
            estimate,
            std_error: None,
            target: bound,
            tolerance: 0.0,
            pass: estimate >= bound,
        }
    }

    pub fn with_std_error(mut self, se: f64) -> Self {
        self.std_error = Some(se);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub experiment: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    pub config: ExperimentConfig,
    pub seed: u64,
    /// SHA-256 of each data file.
    pub files: BTreeMap<String, String>,
    /// SHA-256 over all data files in name order.
    pub content_hash: String,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub config: ExperimentConfig,
    pub tables: Vec<Table>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: ExperimentConfig, tables: Vec<Table>, checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Report {
            summary: Summary {
                experiment: config.experiment.name().to_string(),
                checks,
                pass,
            },
            config,
            tables,
        }
    }

    pub fn manifest(&self) -> Result<Manifest, HarnessError> {
        let mut files = BTreeMap::new();
        let mut all = Sha256::new();
        let mut tables: Vec<&Table> = self.tables.iter().collect();
        tables.sort_by(|a, b| a.name.cmp(&b.name));
        for t in tables {
            let bytes = t.to_csv()?;
            files.insert(t.file_name(), hex::encode(Sha256::digest(&bytes)));
            all.update(t.file_name().as_bytes());
            all.update([0u8]);
            all.update(&bytes);
        }
        Ok(Manifest {
            config: self.config.clone(),
            seed: self.config.seed,
            files,
            content_hash: hex::encode(all.finalize()),
        })
    }

    /// Writes the CSV tables, `summary.json` and `manifest.json` into `dir`.
    pub fn write(&self, dir: &Path) -> Result<Vec<PathBuf>, HarnessError> {
        let io = |p: &Path, e: std::io::Error| HarnessError::Io(format!("{}: {e}", p.display()));
        fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
        let mut written = Vec::new();
        let mut put = |name: String, bytes: Vec<u8>| -> Result<(), HarnessError> {
            let path = dir.join(name);
            fs::write(&path, bytes).map_err(|e| io(&path, e))?;
            written.push(path);
            Ok(())
        };
        for t in &self.tables {
            put(t.file_name(), t.to_csv()?)?;
        }
        put(
            "summary.json".into(),
            serde_json::to_vec_pretty(&self.summary)?,
        )?;
        put(
            "manifest.json".into(),
            serde_json::to_vec_pretty(&self.manifest()?)?,
        )?;
        Ok(written)
    }
}

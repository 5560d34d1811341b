use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use taquin::ThomaParams;

use crate::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Experiment {
    Paths,
    ThetaDist,
    Frequencies,
    Invert,
    LimitShapeGrid,
    Pitman,
    S2,
}

impl Experiment {
    pub const ALL: [Experiment; 7] = [
        Experiment::Paths,
        Experiment::ThetaDist,
        Experiment::Frequencies,
        Experiment::Invert,
        Experiment::LimitShapeGrid,
        Experiment::Pitman,
        Experiment::S2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Experiment::Paths => "paths",
            Experiment::ThetaDist => "theta-dist",
            Experiment::Frequencies => "frequencies",
            Experiment::Invert => "invert",
            Experiment::LimitShapeGrid => "limit-shape-grid",
            Experiment::Pitman => "pitman",
            Experiment::S2 => "s2",
        }
    }

    /// Configuration used when no flag or file overrides a field.
    pub fn defaults(self) -> ExperimentConfig {
        let thoma = |a: &[f64], b: &[f64], g: f64| ThomaParams {
            alpha: a.to_vec(),
            beta: b.to_vec(),
            gamma: g,
        };
        let (thoma, n, trials) = match self {
            Experiment::Paths => (thoma(&[0.3], &[0.2], 0.5), 2000, 2000),
            Experiment::ThetaDist => (ThomaParams::plancherel(), 4000, 1000),
            Experiment::Frequencies => (thoma(&[0.6, 0.3], &[], 0.1), 5000, 200),
            Experiment::Invert => (thoma(&[0.3], &[0.2], 0.5), 5000, 100),
            Experiment::LimitShapeGrid => (ThomaParams::plancherel(), 101, 1),
            Experiment::Pitman => (thoma(&[0.5, 0.3, 0.2], &[], 0.0), 100, 100),
            Experiment::S2 => (thoma(&[0.5], &[], 0.5), 2, 100_000),
        };
        let tolerances = match self {
            Experiment::Paths => tol(&[("frequency", 0.05), ("dead_ends", 0.0)]),
            Experiment::ThetaDist => tol(&[("sup_distance", 0.05)]),
            Experiment::Frequencies => tol(&[
                ("mean", 0.03),
                ("first_row_low", 1.85),
                ("first_row_high", 2.15),
                ("first_row_fraction", 0.9),
            ]),
            Experiment::Invert => tol(&[("discrete_rate", 0.95), ("neutral_mae", 0.05)]),
            Experiment::LimitShapeGrid => tol(&[("numeric", 1e-9)]),
            Experiment::Pitman => tol(&[]),
            Experiment::S2 => tol(&[("std_errors", 3.0), ("exact", 1e-12)]),
        };
        ExperimentConfig {
            experiment: self,
            thoma,
            n,
            trials,
            seed: 7,
            k: 20,
            dim: 3,
            tolerances,
        }
    }
}

fn tol(pairs: &[(&str, f64)]) -> BTreeMap<String, f64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Experiment {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, HarnessError> {
        Experiment::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| HarnessError::Config(format!("unknown experiment {s:?}")))
    }
}

/// A fully resolved experiment description. Identical configs produce
/// identical output files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    pub thoma: ThomaParams,
    /// Prefix length (number of letters / boxes); grid size for `limit-shape-grid`.
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    /// Number of letters recovered by `invert`.
    #[serde(default = "default_k")]
    pub k: usize,
    /// Walk dimension for `pitman`.
    #[serde(default = "default_dim")]
    pub dim: usize,
    #[serde(default)]
    pub tolerances: BTreeMap<String, f64>,
}

fn default_k() -> usize {
    20
}

fn default_dim() -> usize {
    3
}

impl ExperimentConfig {
    pub fn tolerance(&self, key: &str) -> f64 {
        self.tolerances
            .get(key)
            .copied()
            .or_else(|| self.experiment.defaults().tolerances.get(key).copied())
            .unwrap_or(0.0)
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        self.thoma.validate()?;
        if self.trials == 0 {
            return Err(HarnessError::Config("trials must be positive".into()));
        }
        match self.experiment {
            Experiment::LimitShapeGrid if self.n < 2 => {
                Err(HarnessError::Config("grid needs at least 2 points".into()))
            }
            Experiment::Invert if self.k >= self.n => Err(HarnessError::Config(format!(
                "k = {} must be smaller than n = {}",
                self.k, self.n
            ))),
            Experiment::Pitman if self.dim == 0 || self.thoma.alpha.len() > self.dim => {
                Err(HarnessError::Config(format!(
                    "pitman needs 1 <= len(alpha) <= dim = {}",
                    self.dim
                )))
            }
            Experiment::Pitman if !self.thoma.beta.is_empty() || self.thoma.gamma > 1e-12 => {
                Err(HarnessError::Config(
                    "pitman walks use row letters only (beta = 0, gamma = 0)".into(),
                ))
            }
            Experiment::Paths | Experiment::ThetaDist | Experiment::Invert if self.n == 0 => {
                Err(HarnessError::Config("n must be positive".into()))
            }
            _ => Ok(()),
        }
    }

    /// Applies the keys present in a JSON document on top of `self`. Nested
    /// objects (`thoma`, `tolerances`) are merged key by key.
    pub fn overlay(self, patch: &Value) -> Result<Self, HarnessError> {
        let mut base = serde_json::to_value(&self)?;
        merge(&mut base, patch);
        Ok(serde_json::from_value(base)?)
    }

    pub fn overlay_file(self, path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))?;
        let patch: Value = serde_json::from_str(&text)?;
        self.overlay(&patch)
    }
}

fn merge(base: &mut Value, patch: &Value) {
    match (base, patch) {
        (Value::Object(b), Value::Object(p)) => {
            for (k, v) in p {
                match b.get_mut(k) {
                    Some(slot) if slot.is_object() && v.is_object() => merge(slot, v),
                    _ => {
                        b.insert(k.clone(), v.clone());
                    }
                }
            }
        }
        (b, p) => *b = p.clone(),
    }
}

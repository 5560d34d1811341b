//! Exact and statistical property suites: Greene invariants, standardization,
//! the two dualities, measure preservation and the Pitman invariants.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use taquin::greene::GreeneOracle;
use taquin::jdt::{jdt_transform, lazy_path};
use taquin::pitman::{pitman_transform, word_to_walk};
use taquin::rsk::{recording_tableau, rsk_shape, standardize};
use taquin::sampler::{sample_vk_prefix, sample_word, trial_rng};
use taquin::{Letter, Orientation, ThomaParams, Word};

use crate::experiments::par_trials;
use crate::HarnessError;

/// Letters used for the exhaustive corpora.
pub const TEST_POOL: [Letter; 6] = [
    Letter::Row(1),
    Letter::Row(2),
    Letter::Col(1),
    Letter::Col(2),
    Letter::Neutral(0.25),
    Letter::Neutral(0.75),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Greene,
    Standardization,
    ShiftDuality,
    InsertionDuality,
    MeasurePreserving,
    Pitman,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Greene,
        Suite::Standardization,
        Suite::ShiftDuality,
        Suite::InsertionDuality,
        Suite::MeasurePreserving,
        Suite::Pitman,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Greene => "greene",
            Suite::Standardization => "standardization",
            Suite::ShiftDuality => "shift-duality",
            Suite::InsertionDuality => "insertion-duality",
            Suite::MeasurePreserving => "measure-preserving",
            Suite::Pitman => "pitman",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A named selection of suites; `duality` covers both dualities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scope(pub Vec<Suite>);

impl Scope {
    pub fn all() -> Self {
        Scope(Suite::ALL.to_vec())
    }
}

impl FromStr for Scope {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, HarnessError> {
        match s {
            "all" => Ok(Scope::all()),
            "duality" => Ok(Scope(vec![Suite::ShiftDuality, Suite::InsertionDuality])),
            _ => Suite::ALL
                .into_iter()
                .find(|x| x.name() == s)
                .map(|x| Scope(vec![x]))
                .ok_or_else(|| HarnessError::Config(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Exhaustive corpora cover every pool word of length `<= exhaustive_max`.
    pub exhaustive_max: usize,
    pub random_words: usize,
    pub random_max_len: usize,
    /// Extra long random words for the insertion duality.
    pub long_words: usize,
    pub long_max_len: usize,
    pub thoma: ThomaParams,
    pub measure_trials: usize,
    pub measure_boxes: usize,
    pub tv_tolerance: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 7,
            exhaustive_max: 8,
            random_words: 10_000,
            random_max_len: 200,
            long_words: 1_000,
            long_max_len: 500,
            thoma: ThomaParams {
                alpha: vec![0.3],
                beta: vec![0.2],
                gamma: 0.5,
            },
            measure_trials: 100_000,
            measure_boxes: 6,
            tv_tolerance: 0.03,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub statistic: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub pass: bool,
}

impl SuiteReport {
    fn exact(suite: Suite, outcomes: Vec<Option<String>>) -> Self {
        let failures = outcomes.iter().filter(|o| o.is_some()).count();
        SuiteReport {
            suite,
            cases: outcomes.len(),
            failures,
            first_failure: outcomes.into_iter().flatten().next(),
            statistic: None,
            tolerance: None,
            pass: failures == 0,
        }
    }
}

/// Number of pool words of length `n`, counting repeated neutrals.
fn raw_count(n: usize) -> u64 {
    (TEST_POOL.len() as u64).pow(n as u32)
}

/// The `index`-th word of length `n` over the pool, or `None` if it repeats a
/// neutral letter.
fn pool_word(n: usize, mut index: u64) -> Option<Word> {
    let mut letters = Vec::with_capacity(n);
    for _ in 0..n {
        letters.push(TEST_POOL[(index % TEST_POOL.len() as u64) as usize]);
        index /= TEST_POOL.len() as u64;
    }
    Word::jdt(letters).ok()
}

/// Every pool word of length `<= max_len` without repeated neutrals.
pub fn exhaustive_words(max_len: usize) -> impl Iterator<Item = Word> {
    (0..=max_len).flat_map(|n| (0..raw_count(n)).filter_map(move |i| pool_word(n, i)))
}

/// Runs `check` on the exhaustive corpus in parallel. Outcomes are in corpus
/// order.
fn over_exhaustive<S, I, F>(max_len: usize, init: I, check: F) -> Vec<Option<String>>
where
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &Word) -> Option<String> + Sync + Send,
{
    (0..=max_len)
        .flat_map(|n| {
            (0..raw_count(n))
                .into_par_iter()
                .map_init(&init, |s, i| pool_word(n, i).map(|w| check(s, &w)))
                .flatten()
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Random corpus: word `i` has length uniform in `1..=max_len`.
fn random_word(p: &ThomaParams, seed: u64, i: u64, max_len: usize) -> Result<Word, HarnessError> {
    let mut rng = trial_rng(seed, i);
    let len = rng.gen_range(1..=max_len);
    Ok(sample_word(p, len, &mut rng)?)
}

fn over_random<F>(
    cfg: &SuiteConfig,
    stream: u64,
    count: usize,
    max_len: usize,
    check: F,
) -> Result<Vec<Option<String>>, HarnessError>
where
    F: Fn(&Word) -> Option<String> + Sync + Send,
{
    // distinct seeds per corpus keep corpora independent
    let seed = cfg.seed ^ (stream << 32);
    par_trials(count, None, |i| {
        Ok(check(&random_word(&cfg.thoma, seed, i, max_len)?))
    })
}

fn shift_failure(w: &Word) -> Option<String> {
    let q = recording_tableau(w);
    match jdt_transform(&q) {
        Ok(j) if j == recording_tableau(&w.suffix(1)) => None,
        Ok(_) => Some(format!("j(Q(w)) != Q(w_2..w_n) for w = {w}")),
        Err(e) => Some(format!("{w}: {e}")),
    }
}

fn insertion_failure(w: &Word) -> Option<String> {
    let n = w.len();
    let lazy = match lazy_path(&recording_tableau(w)) {
        Ok(l) => l,
        Err(e) => return Some(format!("{w}: {e}")),
    };
    let dual = recording_tableau(&w.reversed_phi());
    debug_assert_eq!(w.reversed_phi().orientation(), Orientation::Insertion);
    (Some(lazy[n - 1]) != dual.cell_of(n as u32)).then(|| {
        format!(
            "lazy box {} != box of {n} in dual tableau for w = {w}",
            lazy[n - 1]
        )
    })
}

fn standardization_failure(w: &Word) -> Option<String> {
    (recording_tableau(&standardize(w).as_word()) != recording_tableau(w))
        .then(|| format!("Q(std(w)) != Q(w) for w = {w}"))
}

fn nonempty(w: &Word, f: fn(&Word) -> Option<String>) -> Option<String> {
    if w.is_empty() {
        None
    } else {
        f(w)
    }
}

fn shape_key(shape: &taquin::YoungDiagram) -> Vec<usize> {
    shape.rows().to_vec()
}

/// Total-variation distance between the `m`-box shape of `j(Q)` for an
/// `(m+1)`-letter word and the shape of `Q` for `m` fresh letters.
pub fn measure_tv(cfg: &SuiteConfig) -> Result<f64, HarnessError> {
    let m = cfg.measure_boxes;
    let pairs = par_trials(cfg.measure_trials, None, |t| {
        let mut rng = trial_rng(cfg.seed, t);
        let shifted = jdt_transform(&sample_vk_prefix(&cfg.thoma, m + 1, &mut rng)?)?;
        let fresh = sample_vk_prefix(&cfg.thoma, m, &mut rng)?;
        Ok((shape_key(&shifted.shape()), shape_key(&fresh.shape())))
    })?;
    let mut counts: BTreeMap<Vec<usize>, (usize, usize)> = BTreeMap::new();
    for (a, b) in pairs {
        counts.entry(a).or_default().0 += 1;
        counts.entry(b).or_default().1 += 1;
    }
    let total = cfg.measure_trials as f64;
    Ok(counts
        .values()
        .map(|&(a, b)| (a as f64 - b as f64).abs() / total)
        .sum::<f64>()
        / 2.0)
}

fn pitman_failure(w: &Word, dim: usize) -> Option<String> {
    let walk = word_to_walk(w, dim).ok()?;
    let lam = pitman_transform(w, dim).ok()?;
    for (m, l) in lam.iter().enumerate() {
        if l.windows(2).any(|p| p[0] < p[1]) {
            return Some(format!("step {m} leaves the chamber: {l:?}"));
        }
        if l.iter().sum::<usize>() != m {
            return Some(format!("step {m} loses mass: {l:?}"));
        }
        if m > 0 && walk.positions[m - 1].iter().sum::<usize>() != m {
            return Some(format!("walk position {m} is off"));
        }
    }
    let short = w.prefix(10);
    match GreeneOracle::new(10).shape(&short) {
        Ok(g) if g.padded(dim) == lam[short.len()] => None,
        Ok(g) => Some(format!("greene shape {g} differs for prefix {short}")),
        Err(e) => Some(e.to_string()),
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport, HarnessError> {
    let e = cfg.exhaustive_max;
    let report = match suite {
        Suite::Greene => SuiteReport::exact(
            suite,
            over_exhaustive(
                e,
                || GreeneOracle::new(e.max(1)),
                |oracle, w| match oracle.shape(w) {
                    Ok(g) if g == rsk_shape(w) => None,
                    Ok(g) => Some(format!("greene {g} != rsk {} for w = {w}", rsk_shape(w))),
                    Err(err) => Some(format!("{w}: {err}")),
                },
            ),
        ),
        Suite::Standardization => SuiteReport::exact(
            suite,
            over_exhaustive(e, || (), |_, w| standardization_failure(w)),
        ),
        Suite::ShiftDuality => {
            let mut outcomes = over_exhaustive(e, || (), |_, w| nonempty(w, shift_failure));
            outcomes.extend(over_random(
                cfg,
                1,
                cfg.random_words,
                cfg.random_max_len,
                shift_failure,
            )?);
            SuiteReport::exact(suite, outcomes)
        }
        Suite::InsertionDuality => {
            let mut outcomes = over_exhaustive(e, || (), |_, w| nonempty(w, insertion_failure));
            outcomes.extend(over_random(
                cfg,
                1,
                cfg.random_words,
                cfg.random_max_len,
                insertion_failure,
            )?);
            outcomes.extend(over_random(
                cfg,
                2,
                cfg.long_words,
                cfg.long_max_len,
                insertion_failure,
            )?);
            SuiteReport::exact(suite, outcomes)
        }
        Suite::MeasurePreserving => {
            let tv = measure_tv(cfg)?;
            SuiteReport {
                suite,
                cases: cfg.measure_trials,
                failures: 0,
                first_failure: None,
                statistic: Some(tv),
                tolerance: Some(cfg.tv_tolerance),
                pass: tv <= cfg.tv_tolerance,
            }
        }
        Suite::Pitman => {
            let outcomes = par_trials(cfg.random_words, None, |i| {
                let dim = 2 + (i % 2) as usize;
                let mut rng = trial_rng(cfg.seed ^ (3 << 32), i);
                let len = rng.gen_range(0..=cfg.random_max_len);
                let letters = (0..len)
                    .map(|_| Letter::Row(rng.gen_range(1..=dim as u32)))
                    .collect();
                let w = Word::jdt(letters)?;
                Ok(pitman_failure(&w, dim))
            })?;
            SuiteReport::exact(suite, outcomes)
        }
    };
    Ok(report)
}

/// Runs every suite in `scope`.
pub fn run_property_suite(
    scope: &Scope,
    cfg: &SuiteConfig,
) -> Result<Vec<SuiteReport>, HarnessError> {
    scope.0.iter().map(|&s| run_suite(s, cfg)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SuiteConfig {
        SuiteConfig {
            exhaustive_max: 4,
            random_words: 200,
            random_max_len: 40,
            long_words: 10,
            long_max_len: 80,
            measure_trials: 2000,
            tv_tolerance: 0.1,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn corpus_sizes() {
        // length n: 4^n + 2n 4^(n-1) + n(n-1) 4^(n-2)
        let count = |n: usize| exhaustive_words(n).filter(|w| w.len() == n).count();
        assert_eq!(count(0), 1);
        assert_eq!(count(1), 6);
        assert_eq!(count(2), 16 + 16 + 2);
        assert_eq!(count(3), 64 + 96 + 24);
    }

    #[test]
    fn scopes() {
        assert_eq!("all".parse::<Scope>().unwrap(), Scope::all());
        assert_eq!("duality".parse::<Scope>().unwrap().0.len(), 2);
        assert_eq!("greene".parse::<Scope>().unwrap().0, vec![Suite::Greene]);
        assert!("nope".parse::<Scope>().is_err());
    }

    #[test]
    fn quick_suites_pass() {
        for r in run_property_suite(&Scope::all(), &quick()).unwrap() {
            assert!(r.pass, "{r:?}");
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn failures_are_reported() {
        let r = SuiteReport::exact(
            Suite::Greene,
            vec![None, Some("x".into()), Some("y".into())],
        );
        assert_eq!((r.cases, r.failures, r.pass), (3, 2, false));
        assert_eq!(r.first_failure.as_deref(), Some("x"));
    }
}

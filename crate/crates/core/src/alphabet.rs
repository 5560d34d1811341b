//! Letters with row/column/neutral kinds, the two alphabet orientations, and
//! Thoma-parameterized letter distributions.
//!
//! A [`Letter`] carries no orientation of its own. The same value is ordered
//! differently depending on whether it is read in the jeu de taquin alphabet
//!
//! ```text
//! R1 < R2 < R3 < ... < N(x) ... < ... < C3 < C2 < C1
//! ```
//!
//! or in the insertion alphabet
//!
//! ```text
//! C1 < C2 < C3 < ... < N(x) ... < ... < R3 < R2 < R1
//! ```
//!
//! In both, `R*` letters may repeat along a row and `C*` letters may repeat
//! along a column. [`phi`] maps one alphabet onto the other, reversing order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::distributions::Open01;
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Tolerance on the Thoma simplex normalization.
pub const THOMA_SUM_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Letter {
    /// Row letter with index `k >= 1`.
    Row(u32),
    /// Column letter with index `k >= 1`.
    Col(u32),
    /// Neutral letter with value in the open unit interval.
    Neutral(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Jdt,
    Insertion,
}

impl Orientation {
    pub fn opposite(self) -> Self {
        match self {
            Orientation::Jdt => Orientation::Insertion,
            Orientation::Insertion => Orientation::Jdt,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LetterKind {
    Row,
    Column,
    Neutral,
}

impl Letter {
    pub fn kind(self) -> LetterKind {
        match self {
            Letter::Row(_) => LetterKind::Row,
            Letter::Col(_) => LetterKind::Column,
            Letter::Neutral(_) => LetterKind::Neutral,
        }
    }

    pub fn is_neutral(self) -> bool {
        matches!(self, Letter::Neutral(_))
    }

    pub fn validate(self) -> Result<()> {
        match self {
            Letter::Row(0) | Letter::Col(0) => {
                Err(Error::Parse("letter index must be at least 1".into()))
            }
            Letter::Neutral(x) if !(x > 0.0 && x < 1.0) => Err(Error::Domain {
                what: "neutral letter",
                value: x,
            }),
            _ => Ok(()),
        }
    }
}

/// Total order of `a` and `b` under orientation `o`.
pub fn compare(a: Letter, b: Letter, o: Orientation) -> Ordering {
    // (block, key) with block 0 < 1 < 2 from bottom to top of the alphabet.
    fn rank(l: Letter, o: Orientation) -> (u8, i64) {
        match (o, l) {
            (Orientation::Jdt, Letter::Row(k)) => (0, k as i64),
            (Orientation::Jdt, Letter::Col(k)) => (2, -(k as i64)),
            (Orientation::Insertion, Letter::Col(k)) => (0, k as i64),
            (Orientation::Insertion, Letter::Row(k)) => (2, -(k as i64)),
            (_, Letter::Neutral(_)) => (1, 0),
        }
    }
    match (a, b) {
        (Letter::Neutral(x), Letter::Neutral(y)) => x.total_cmp(&y),
        _ => rank(a, o).cmp(&rank(b, o)),
    }
}

const NEUTRAL_BASE: u64 = 1 << 62;
const TOP_BLOCK: u64 = 1 << 63;

/// Order-preserving integer encoding of a letter under `o`: the bottom block
/// maps to `1..2^32`, neutral letters to `[2^62, 2^63)` (positive doubles
/// order like their bit patterns) and the top block to `u64::MAX - k`.
#[inline]
pub(crate) fn order_key(l: Letter, o: Orientation) -> u64 {
    match (o, l) {
        (Orientation::Jdt, Letter::Row(k)) | (Orientation::Insertion, Letter::Col(k)) => k as u64,
        (Orientation::Jdt, Letter::Col(k)) | (Orientation::Insertion, Letter::Row(k)) => {
            u64::MAX - k as u64
        }
        (_, Letter::Neutral(x)) => NEUTRAL_BASE + x.to_bits(),
    }
}

#[inline]
pub(crate) fn key_is_row(key: u64, o: Orientation) -> bool {
    match o {
        Orientation::Jdt => key < NEUTRAL_BASE,
        Orientation::Insertion => key >= TOP_BLOCK,
    }
}

pub(crate) fn from_order_key(key: u64, o: Orientation) -> Letter {
    if key < NEUTRAL_BASE {
        match o {
            Orientation::Jdt => Letter::Row(key as u32),
            Orientation::Insertion => Letter::Col(key as u32),
        }
    } else if key < TOP_BLOCK {
        Letter::Neutral(f64::from_bits(key - NEUTRAL_BASE))
    } else {
        let k = (u64::MAX - key) as u32;
        match o {
            Orientation::Jdt => Letter::Col(k),
            Orientation::Insertion => Letter::Row(k),
        }
    }
}

/// `a <_r b`: strictly smaller, or equal and a row letter.
pub fn less_r(a: Letter, b: Letter, o: Orientation) -> Result<bool> {
    match compare(a, b, o) {
        Ordering::Less => Ok(true),
        Ordering::Greater => Ok(false),
        Ordering::Equal => match a {
            Letter::Row(_) => Ok(true),
            Letter::Col(_) => Ok(false),
            Letter::Neutral(x) => Err(Error::UndefinedRelation(x)),
        },
    }
}

/// `a <_c b`: strictly smaller, or equal and a column letter.
pub fn less_c(a: Letter, b: Letter, o: Orientation) -> Result<bool> {
    match compare(a, b, o) {
        Ordering::Less => Ok(true),
        Ordering::Greater => Ok(false),
        Ordering::Equal => match a {
            Letter::Row(_) => Ok(false),
            Letter::Col(_) => Ok(true),
            Letter::Neutral(x) => Err(Error::UndefinedRelation(x)),
        },
    }
}

/// Infallible `<_r` for callers that have already excluded equal neutral pairs.
/// Equal neutral letters compare as not `<_r`.
#[inline]
pub(crate) fn less_r_unchecked(a: Letter, b: Letter, o: Orientation) -> bool {
    match compare(a, b, o) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => matches!(a, Letter::Row(_)),
    }
}

/// The anti-isomorphism between the jdt and insertion alphabets.
///
/// Kinds are preserved and neutral values are reflected; the image is meant to
/// be read under the opposite orientation.
pub fn phi(a: Letter) -> Letter {
    match a {
        Letter::Neutral(x) => Letter::Neutral(1.0 - x),
        other => other,
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Row(k) => write!(f, "R{k}"),
            Letter::Col(k) => write!(f, "C{k}"),
            Letter::Neutral(x) => write!(f, "N{x}"),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad letter token {s:?}"));
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let letter = match head {
            'R' | 'r' => Letter::Row(rest.parse().map_err(|_| bad())?),
            'C' | 'c' => Letter::Col(rest.parse().map_err(|_| bad())?),
            'N' | 'n' => Letter::Neutral(rest.parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        };
        letter.validate()?;
        Ok(letter)
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A point of the Thoma simplex with finitely many nonzero `alpha`, `beta`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThomaParams {
    #[serde(default)]
    pub alpha: Vec<f64>,
    #[serde(default)]
    pub beta: Vec<f64>,
    #[serde(default)]
    pub gamma: f64,
}

impl ThomaParams {
    pub fn new(alpha: Vec<f64>, beta: Vec<f64>, gamma: f64) -> Result<Self> {
        let p = ThomaParams { alpha, beta, gamma };
        p.validate()?;
        Ok(p)
    }

    /// Plancherel point: `alpha = beta = 0`, `gamma = 1`.
    pub fn plancherel() -> Self {
        ThomaParams {
            alpha: Vec::new(),
            beta: Vec::new(),
            gamma: 1.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        validate_thoma(self)
    }
}

pub fn validate_thoma(p: &ThomaParams) -> Result<()> {
    fn check_seq(name: &str, seq: &[f64]) -> Result<()> {
        for (i, &v) in seq.iter().enumerate() {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidThoma(format!(
                    "{name}[{}] = {v} is not a nonnegative number",
                    i + 1
                )));
            }
        }
        if let Some(i) = seq.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidThoma(format!(
                "{name} is not weakly decreasing at position {}",
                i + 2
            )));
        }
        Ok(())
    }
    check_seq("alpha", &p.alpha)?;
    check_seq("beta", &p.beta)?;
    if !p.gamma.is_finite() || p.gamma < 0.0 {
        return Err(Error::InvalidThoma(format!(
            "gamma = {} is not a nonnegative number",
            p.gamma
        )));
    }
    let sum: f64 = p.alpha.iter().sum::<f64>() + p.beta.iter().sum::<f64>() + p.gamma;
    if (sum - 1.0).abs() > THOMA_SUM_TOLERANCE {
        return Err(Error::InvalidThoma(format!(
            "alpha, beta and gamma sum to {sum}, not 1"
        )));
    }
    Ok(())
}

/// Sampler for the jdt letter measure attached to a Thoma point.
#[derive(Debug, Clone)]
pub struct LetterSampler {
    // cumulative weights of R1, R2, ..., C1, C2, ...
    cumulative: Vec<(f64, Letter)>,
    total: f64,
    gamma: f64,
}

impl LetterSampler {
    pub fn new(p: &ThomaParams) -> Result<Self> {
        p.validate()?;
        let mut cumulative = Vec::with_capacity(p.alpha.len() + p.beta.len());
        let mut acc = 0.0;
        let atoms = p
            .alpha
            .iter()
            .enumerate()
            .map(|(i, &a)| (a, Letter::Row(i as u32 + 1)))
            .chain(
                p.beta
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| (b, Letter::Col(i as u32 + 1))),
            );
        for (w, letter) in atoms {
            if w > 0.0 {
                acc += w;
                cumulative.push((acc, letter));
            }
        }
        Ok(LetterSampler {
            cumulative,
            total: acc + p.gamma,
            gamma: p.gamma,
        })
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Letter {
        let u = rng.gen::<f64>() * self.total;
        if let Some(&(_, letter)) = self.cumulative.iter().find(|(c, _)| u < *c) {
            return letter;
        }
        if self.gamma > 0.0 || self.cumulative.is_empty() {
            Letter::Neutral(rng.sample(Open01))
        } else {
            // rounding pushed u past the last atom
            self.cumulative.last().unwrap().1
        }
    }
}

/// Draw one letter from the jdt letter measure of `p`.
pub fn sample_letter<R: Rng + ?Sized>(p: &ThomaParams, rng: &mut R) -> Result<Letter> {
    Ok(LetterSampler::new(p)?.sample(rng))
}

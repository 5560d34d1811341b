//! Generalized Schensted row insertion, insertion and recording tableaux,
//! RSK shapes, and standardization of words.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alphabet::{
    compare, from_order_key, key_is_row, less_r_unchecked, order_key, Letter, Orientation,
};
use crate::error::{Error, Result};
use crate::tableaux::{Cell, SemistandardTableau, StandardTableau, YoungDiagram};

/// Finite word read under a fixed orientation. No neutral value repeats.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<Letter>,
    orientation: Orientation,
}

impl Word {
    pub fn new(letters: Vec<Letter>, orientation: Orientation) -> Result<Self> {
        let mut seen = HashSet::new();
        for &l in &letters {
            l.validate()?;
            if let Letter::Neutral(x) = l {
                if !seen.insert(x.to_bits()) {
                    return Err(Error::DuplicateNeutral(x));
                }
            }
        }
        Ok(Word {
            letters,
            orientation,
        })
    }

    /// Jdt-oriented word.
    pub fn jdt(letters: Vec<Letter>) -> Result<Self> {
        Self::new(letters, Orientation::Jdt)
    }

    pub(crate) fn new_unchecked(letters: Vec<Letter>, orientation: Orientation) -> Self {
        Word {
            letters,
            orientation,
        }
    }

    pub fn parse(text: &str, orientation: Orientation) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Letter>>>()?;
        Self::new(letters, orientation)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word with its first `k` letters dropped.
    pub fn suffix(&self, k: usize) -> Word {
        Word::new_unchecked(self.letters[k.min(self.len())..].to_vec(), self.orientation)
    }

    /// The first `k` letters.
    pub fn prefix(&self, k: usize) -> Word {
        Word::new_unchecked(self.letters[..k.min(self.len())].to_vec(), self.orientation)
    }

    /// `(φ(wₙ), …, φ(w₁))` under the opposite orientation.
    pub fn reversed_phi(&self) -> Word {
        Word::new_unchecked(
            self.letters
                .iter()
                .rev()
                .map(|&l| crate::alphabet::phi(l))
                .collect(),
            self.orientation.opposite(),
        )
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s, Orientation::Jdt)
    }
}

/// Insert `a` into `rows` by row bumping. Returns the new cell.
///
/// In each row, `a` goes to the leftmost position whose occupant `o` does not
/// satisfy `o <_r a`; the occupant (if any) is bumped to the next row.
#[inline]
fn bump_insert(rows: &mut Vec<Vec<Letter>>, mut a: Letter, o: Orientation) -> Cell {
    for (i, row) in rows.iter_mut().enumerate() {
        let pos = row.partition_point(|&occupant| less_r_unchecked(occupant, a, o));
        if pos == row.len() {
            row.push(a);
            return Cell::new(pos + 1, i + 1);
        }
        a = std::mem::replace(&mut row[pos], a);
    }
    rows.push(vec![a]);
    Cell::new(1, rows.len())
}

impl SemistandardTableau {
    /// In-place `self ← a`; returns the cell created by the insertion.
    pub fn insert(&mut self, a: Letter) -> Result<Cell> {
        a.validate()?;
        if let Letter::Neutral(x) = a {
            if self.rows.iter().flatten().any(|&l| l == a) {
                return Err(Error::DuplicateNeutral(x));
            }
        }
        Ok(bump_insert(&mut self.rows, a, self.orientation))
    }
}

/// `t ← a` together with the position of the new box.
pub fn insert_row(t: &SemistandardTableau, a: Letter) -> Result<(SemistandardTableau, Cell)> {
    let mut out = t.clone();
    let cell = out.insert(a)?;
    Ok((out, cell))
}

/// [`bump_insert`] on order keys.
#[inline]
fn bump_insert_keys(rows: &mut Vec<Vec<u64>>, mut a: u64, o: Orientation) -> Cell {
    for (i, row) in rows.iter_mut().enumerate() {
        let pos = if key_is_row(a, o) {
            row.partition_point(|&occupant| occupant <= a)
        } else {
            row.partition_point(|&occupant| occupant < a)
        };
        if pos == row.len() {
            row.push(a);
            return Cell::new(pos + 1, i + 1);
        }
        a = std::mem::replace(&mut row[pos], a);
    }
    rows.push(vec![a]);
    Cell::new(1, rows.len())
}

/// Incremental RSK: feeds letters one at a time and tracks both tableaux.
#[derive(Debug, Clone)]
pub struct Rsk {
    insertion: Vec<Vec<u64>>,
    recording: Vec<Vec<u32>>,
    orientation: Orientation,
    steps: u32,
}

impl Rsk {
    pub fn new(orientation: Orientation) -> Self {
        Rsk {
            insertion: Vec::new(),
            recording: Vec::new(),
            orientation,
            steps: 0,
        }
    }

    /// Inserts `a` and records the new box. The caller guarantees `a` does not
    /// duplicate a neutral letter already inserted.
    pub fn push(&mut self, a: Letter) -> Cell {
        self.steps += 1;
        let cell = bump_insert_keys(
            &mut self.insertion,
            order_key(a, self.orientation),
            self.orientation,
        );
        if cell.y > self.recording.len() {
            self.recording.push(Vec::new());
        }
        self.recording[cell.y - 1].push(self.steps);
        cell
    }

    pub fn len(&self) -> usize {
        self.steps as usize
    }

    pub fn is_empty(&self) -> bool {
        self.steps == 0
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram::new(self.insertion.iter().map(Vec::len).collect())
            .expect("insertion keeps a diagram shape")
    }

    /// Length of row `y` (1-based) of the current shape.
    pub fn row_len(&self, y: usize) -> usize {
        self.insertion.get(y.wrapping_sub(1)).map_or(0, Vec::len)
    }

    pub fn insertion_tableau(&self) -> SemistandardTableau {
        SemistandardTableau {
            orientation: self.orientation,
            rows: self
                .insertion
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&k| from_order_key(k, self.orientation))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn recording_tableau(&self) -> StandardTableau {
        StandardTableau::from_rows_unchecked(self.recording.clone())
    }

    pub fn into_recording_tableau(self) -> StandardTableau {
        StandardTableau::from_rows_unchecked(self.recording)
    }
}

fn run(w: &Word) -> Rsk {
    let mut rsk = Rsk::new(w.orientation());
    for &a in w.letters() {
        rsk.push(a);
    }
    rsk
}

/// `P(w₁, …, wₙ)`.
pub fn insertion_tableau(w: &Word) -> SemistandardTableau {
    run(w).insertion_tableau()
}

/// `Q(w₁, …, wₙ)`: the standard tableau of prefix RSK shapes.
pub fn recording_tableau(w: &Word) -> StandardTableau {
    run(w).into_recording_tableau()
}

pub fn rsk_shape(w: &Word) -> YoungDiagram {
    run(w).shape()
}

/// Ranks of the letters of a word, with ties broken so that
/// `perm[i] < perm[j]` iff `w_i <_r w_j` for `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Standardization {
    pub perm: Vec<usize>,
}

impl Standardization {
    /// The permutation as a jdt word of distinct row letters.
    pub fn as_word(&self) -> Word {
        Word::new_unchecked(
            self.perm.iter().map(|&p| Letter::Row(p as u32)).collect(),
            Orientation::Jdt,
        )
    }
}

pub fn standardize(w: &Word) -> Standardization {
    let letters = w.letters();
    let o = w.orientation();
    let mut order: Vec<usize> = (0..letters.len()).collect();
    order.sort_by(|&i, &j| match compare(letters[i], letters[j], o) {
        Ordering::Equal => match letters[i] {
            Letter::Col(_) => j.cmp(&i),
            _ => i.cmp(&j),
        },
        other => other,
    });
    let mut perm = vec![0; letters.len()];
    for (rank, &i) in order.iter().enumerate() {
        perm[i] = rank + 1;
    }
    Standardization { perm }
}

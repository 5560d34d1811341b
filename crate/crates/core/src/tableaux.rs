//! Young diagrams, generalized semistandard tableaux, and standard tableaux as
//! finite prefixes of infinite Young tableaux.
//!
//! Boxes use French coordinates `(x, y)`: `x` is the column and `y` the row,
//! both starting at 1, with row 1 at the bottom.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alphabet::{less_c, less_r, Letter, Orientation};
use crate::error::{Error, Result};

/// Box position `(column, row)`, 1-based. Serializes as `[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Cell {
    pub x: usize,
    pub y: usize,
}

impl Cell {
    pub const fn new(x: usize, y: usize) -> Self {
        Cell { x, y }
    }
}

impl From<(usize, usize)> for Cell {
    fn from((x, y): (usize, usize)) -> Self {
        Cell { x, y }
    }
}

impl From<Cell> for (usize, usize) {
    fn from(c: Cell) -> Self {
        (c.x, c.y)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Weakly decreasing positive row lengths, bottom row first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct YoungDiagram(Vec<usize>);

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if let Some(i) = rows.iter().position(|&r| r == 0) {
            return Err(Error::MalformedTableau(format!(
                "row {} has length 0",
                i + 1
            )));
        }
        if let Some(i) = rows.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::MalformedTableau(format!(
                "row {} is longer than row {}",
                i + 2,
                i + 1
            )));
        }
        Ok(YoungDiagram(rows))
    }

    pub fn empty() -> Self {
        YoungDiagram(Vec::new())
    }

    /// Drops trailing zeros; the remaining entries must be weakly decreasing.
    pub fn from_padded(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Self::new(rows)
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    /// Length of row `y` (1-based); zero beyond the last row.
    pub fn row_len(&self, y: usize) -> usize {
        if y == 0 {
            return 0;
        }
        self.0.get(y - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.x >= 1 && c.y >= 1 && c.x <= self.row_len(c.y)
    }

    /// Column lengths, left column first.
    pub fn conjugate(&self) -> YoungDiagram {
        let width = self.row_len(1);
        YoungDiagram(
            (1..=width)
                .map(|x| self.0.iter().take_while(|&&r| r >= x).count())
                .collect(),
        )
    }

    /// Cells that can be added while keeping a Young diagram.
    pub fn is_addable(&self, c: Cell) -> bool {
        c.x >= 1
            && c.y >= 1
            && self.row_len(c.y) == c.x - 1
            && (c.y == 1 || self.row_len(c.y - 1) >= c.x)
    }

    /// The single cell by which `bigger` extends `self`, if the two are adjacent.
    pub fn added_cell(&self, bigger: &YoungDiagram) -> Option<Cell> {
        if bigger.size() != self.size() + 1 || bigger.num_rows() > self.num_rows() + 1 {
            return None;
        }
        let mut added = None;
        for y in 1..=bigger.num_rows() {
            let (a, b) = (self.row_len(y), bigger.row_len(y));
            if b == a + 1 && added.is_none() {
                added = Some(Cell::new(b, y));
            } else if a != b {
                return None;
            }
        }
        added
    }

    /// Row lengths padded with zeros (or truncated) to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        (1..=len).map(|y| self.row_len(y)).collect()
    }

    pub(crate) fn push_cell(&mut self, y: usize) {
        if y > self.0.len() {
            self.0.push(1);
        } else {
            self.0[y - 1] += 1;
        }
    }
}

impl TryFrom<Vec<usize>> for YoungDiagram {
    type Error = Error;
    fn try_from(rows: Vec<usize>) -> Result<Self> {
        YoungDiagram::new(rows)
    }
}

impl From<YoungDiagram> for Vec<usize> {
    fn from(d: YoungDiagram) -> Self {
        d.0
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

/// Filling of a diagram by letters; rows are `<_r`-increasing and columns
/// `<_c`-increasing under the stored orientation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SemistandardTableau {
    pub orientation: Orientation,
    pub rows: Vec<Vec<Letter>>,
}

impl SemistandardTableau {
    pub fn empty(orientation: Orientation) -> Self {
        SemistandardTableau {
            orientation,
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram(self.rows.iter().map(Vec::len).collect())
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, c: Cell) -> Option<Letter> {
        self.rows
            .get(c.y.checked_sub(1)?)?
            .get(c.x.checked_sub(1)?)
            .copied()
    }

    pub fn validate(&self) -> Result<()> {
        let o = self.orientation;
        let shape_err = |y: usize| Error::InvalidTableau {
            x: 1,
            y,
            reason: "row lengths are not weakly decreasing".into(),
        };
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(shape_err(i + 1));
            }
            if i > 0 && row.len() > self.rows[i - 1].len() {
                return Err(shape_err(i + 1));
            }
        }
        let mut neutrals = HashSet::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &letter) in row.iter().enumerate() {
                let (x, y) = (j + 1, i + 1);
                letter.validate().map_err(|e| Error::InvalidTableau {
                    x,
                    y,
                    reason: e.to_string(),
                })?;
                if let Letter::Neutral(v) = letter {
                    if !neutrals.insert(v.to_bits()) {
                        return Err(Error::DuplicateNeutral(v));
                    }
                }
                if j > 0 && !less_r(row[j - 1], letter, o)? {
                    return Err(Error::InvalidTableau {
                        x,
                        y,
                        reason: format!("row not <_r-increasing: {} then {letter}", row[j - 1]),
                    });
                }
                if i > 0 {
                    let below = self.rows[i - 1][j];
                    if !less_c(below, letter, o)? {
                        return Err(Error::InvalidTableau {
                            x,
                            y,
                            reason: format!("column not <_c-increasing: {below} below {letter}"),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Bijective filling of an `n`-box diagram by `1..=n`, increasing along rows
/// and columns. Equivalently an `n`-step path in the Young graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawStandard", into = "RawStandard")]
pub struct StandardTableau {
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct RawStandard {
    rows: Vec<Vec<u32>>,
}

impl TryFrom<RawStandard> for StandardTableau {
    type Error = Error;
    fn try_from(raw: RawStandard) -> Result<Self> {
        StandardTableau::from_rows(raw.rows)
    }
}

impl From<StandardTableau> for RawStandard {
    fn from(t: StandardTableau) -> Self {
        RawStandard { rows: t.rows }
    }
}

impl StandardTableau {
    pub fn empty() -> Self {
        StandardTableau { rows: Vec::new() }
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = StandardTableau { rows };
        validate_standard(&t)?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        StandardTableau { rows }
    }

    /// Single-row tableau `1..=n`.
    pub fn single_row(n: usize) -> Self {
        if n == 0 {
            return Self::empty();
        }
        StandardTableau {
            rows: vec![(1..=n as u32).collect()],
        }
    }

    /// Single-column tableau `1..=n`.
    pub fn single_column(n: usize) -> Self {
        StandardTableau {
            rows: (1..=n as u32).map(|k| vec![k]).collect(),
        }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut Vec<Vec<u32>> {
        &mut self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram(self.rows.iter().map(Vec::len).collect())
    }

    pub fn get(&self, c: Cell) -> Option<u32> {
        self.rows
            .get(c.y.checked_sub(1)?)?
            .get(c.x.checked_sub(1)?)
            .copied()
    }

    /// Cell holding entry `label`.
    pub fn cell_of(&self, label: u32) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(i, row)| {
            row.iter()
                .position(|&e| e == label)
                .map(|j| Cell::new(j + 1, i + 1))
        })
    }

    /// The Young-graph path `∅ = λ⁰ ↗ λ¹ ↗ ... ↗ λⁿ`.
    pub fn to_path(&self) -> Vec<YoungDiagram> {
        let n = self.len();
        let mut row_of = vec![0usize; n + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for &e in row {
                row_of[e as usize] = i + 1;
            }
        }
        let mut path = Vec::with_capacity(n + 1);
        let mut current = YoungDiagram::empty();
        path.push(current.clone());
        for &y in &row_of[1..] {
            current.push_cell(y);
            path.push(current.clone());
        }
        path
    }

    pub fn from_path(path: &[YoungDiagram]) -> Result<Self> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        match path.first() {
            None => return Ok(Self::empty()),
            Some(first) if !first.is_empty() => {
                return Err(Error::MalformedTableau("path must start at ∅".into()))
            }
            _ => {}
        }
        for (step, pair) in path.windows(2).enumerate() {
            let cell = pair[0]
                .added_cell(&pair[1])
                .ok_or(Error::NonAdjacentPath { step })?;
            if cell.y > rows.len() {
                rows.push(Vec::new());
            }
            rows[cell.y - 1].push(step as u32 + 1);
        }
        Ok(StandardTableau { rows })
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{row:?}")?;
        }
        f.write_str("]")
    }
}

/// Checks shape, the label set `1..=n`, and strict row/column growth.
pub fn validate_standard(t: &StandardTableau) -> Result<()> {
    let rows = t.rows();
    for (i, row) in rows.iter().enumerate() {
        let bad_shape = row.is_empty() || (i > 0 && row.len() > rows[i - 1].len());
        if bad_shape {
            return Err(Error::InvalidTableau {
                x: row.len().max(1),
                y: i + 1,
                reason: "row lengths must be positive and weakly decreasing".into(),
            });
        }
    }
    let n = t.len();
    let mut seen = vec![false; n + 1];
    for (i, row) in rows.iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            let (x, y) = (j + 1, i + 1);
            let e_idx = e as usize;
            if e_idx == 0 || e_idx > n {
                return Err(Error::InvalidTableau {
                    x,
                    y,
                    reason: format!("entry {e} outside 1..={n}"),
                });
            }
            if std::mem::replace(&mut seen[e_idx], true) {
                return Err(Error::InvalidTableau {
                    x,
                    y,
                    reason: format!("entry {e} repeated"),
                });
            }
            if j > 0 && row[j - 1] >= e {
                return Err(Error::InvalidTableau {
                    x,
                    y,
                    reason: format!("row not increasing: {} then {e}", row[j - 1]),
                });
            }
            if i > 0 && rows[i - 1][j] >= e {
                return Err(Error::InvalidTableau {
                    x,
                    y,
                    reason: format!("column not increasing: {} below {e}", rows[i - 1][j]),
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(rows: Vec<Vec<u32>>) -> StandardTableau {
        StandardTableau::from_rows(rows).unwrap()
    }

    fn d(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(StandardTableau::from_rows(vec![vec![1, 2], vec![3]]).is_ok());
        assert!(StandardTableau::from_rows(vec![vec![1, 3], vec![2]]).is_ok());
        let err = StandardTableau::from_rows(vec![vec![2, 1]]).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidTableau {
                x: 2,
                y: 1,
                reason: "row not increasing: 2 then 1".into()
            }
        );
    }

    #[test]
    fn validate_rejects_bad_fillings() {
        assert!(StandardTableau::from_rows(vec![vec![1], vec![2, 3]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![2, 3], vec![1]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 1]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 4]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1], vec![]]).is_err());
    }

    #[test]
    fn path_examples() {
        assert_eq!(
            st(vec![vec![1, 2], vec![3]]).to_path(),
            vec![d(&[]), d(&[1]), d(&[2]), d(&[2, 1])]
        );
        assert_eq!(st(vec![vec![1]]).to_path(), vec![d(&[]), d(&[1])]);
        assert_eq!(
            st(vec![vec![1], vec![2]]).to_path(),
            vec![d(&[]), d(&[1]), d(&[1, 1])]
        );
        for t in [
            st(vec![vec![1, 2], vec![3]]),
            st(vec![vec![1]]),
            st(vec![vec![1], vec![2]]),
        ] {
            assert_eq!(StandardTableau::from_path(&t.to_path()).unwrap(), t);
        }
    }

    #[test]
    fn from_path_rejects_jumps() {
        let err = StandardTableau::from_path(&[d(&[]), d(&[1]), d(&[3])]).unwrap_err();
        assert_eq!(err, Error::NonAdjacentPath { step: 1 });
        assert!(StandardTableau::from_path(&[d(&[1])]).is_err());
        assert!(StandardTableau::from_path(&[d(&[]), d(&[1]), d(&[1])]).is_err());
    }

    #[test]
    fn diagram_basics() {
        let lam = d(&[3, 1]);
        assert_eq!(lam.conjugate(), d(&[2, 1, 1]));
        assert!(lam.is_addable(Cell::new(4, 1)));
        assert!(lam.is_addable(Cell::new(2, 2)));
        assert!(lam.is_addable(Cell::new(1, 3)));
        assert!(!lam.is_addable(Cell::new(3, 2)));
        assert_eq!(lam.to_string(), "(3,1)");
        assert_eq!(YoungDiagram::empty().to_string(), "∅");
        assert!(YoungDiagram::new(vec![1, 2]).is_err());
        assert_eq!(
            YoungDiagram::from_padded(vec![2, 1, 0, 0]).unwrap(),
            d(&[2, 1])
        );
    }

    #[test]
    fn standard_json() {
        let t: StandardTableau = serde_json::from_str(r#"{"rows":[[1,3],[2]]}"#).unwrap();
        assert_eq!(t, st(vec![vec![1, 3], vec![2]]));
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"rows":[[1,3],[2]]}"#
        );
        assert!(serde_json::from_str::<StandardTableau>(r#"{"rows":[[2,1]]}"#).is_err());
    }

    #[test]
    fn semistandard_validation() {
        use Letter::*;
        let ok = SemistandardTableau {
            orientation: Orientation::Jdt,
            rows: vec![vec![Row(1), Row(1), Col(1)], vec![Col(1)]],
        };
        ok.validate().unwrap();
        let bad_row = SemistandardTableau {
            orientation: Orientation::Jdt,
            rows: vec![vec![Col(1), Col(1)]],
        };
        assert!(bad_row.validate().is_err());
        let bad_col = SemistandardTableau {
            orientation: Orientation::Jdt,
            rows: vec![vec![Row(1)], vec![Row(1)]],
        };
        assert!(bad_col.validate().is_err());
        let dup = SemistandardTableau {
            orientation: Orientation::Jdt,
            rows: vec![vec![Neutral(0.5)], vec![Neutral(0.5)]],
        };
        assert!(dup.validate().is_err());
        let json = serde_json::to_string(&ok).unwrap();
        assert_eq!(
            json,
            r#"{"orientation":"jdt","rows":[["R1","R1","C1"],["C1"]]}"#
        );
    }
}

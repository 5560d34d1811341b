//! Jeu de taquin on finite prefixes of infinite Young tableaux: the path of
//! the empty box, the finite transformation `j`, its lazy parametrization,
//! and iteration.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::{Cell, StandardTableau};

/// Trajectory of the empty box, starting at `(1, 1)`.
///
/// `entries[k]` is the label the original tableau held at `boxes[k]`; these are
/// strictly increasing and drive the lazy parametrization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JdtPath {
    pub boxes: Vec<Cell>,
    pub entries: Vec<u32>,
    /// The walk looks like a dead end: its final box was filled during the
    /// first `⌈n/2⌉` growth steps and nothing has appeared to its right or
    /// above it since. A prefix can never rule out later growth, so this is
    /// the observable stand-in for a finite path.
    pub complete: bool,
}

impl JdtPath {
    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn last(&self) -> Cell {
        *self.boxes.last().expect("jdt paths are nonempty")
    }

    /// `q̃_m`: the path box with the largest entry `<= m` (for `m >= 1`).
    pub fn lazy_at(&self, m: u32) -> Cell {
        let k = self.entries.partition_point(|&e| e <= m);
        self.boxes[k.saturating_sub(1)]
    }
}

fn walk(rows: &[Vec<u32>]) -> JdtPath {
    let get = |rows: &[Vec<u32>], x: usize, y: usize| rows.get(y).and_then(|r| r.get(x)).copied();
    let (mut x, mut y) = (0usize, 0usize);
    let mut boxes = vec![Cell::new(1, 1)];
    let mut entries = vec![rows[0][0]];
    loop {
        let right = get(rows, x + 1, y);
        let up = get(rows, x, y + 1);
        let (nx, ny, value) = match (right, up) {
            (None, None) => break,
            (Some(r), None) => (x + 1, y, r),
            (None, Some(u)) => (x, y + 1, u),
            (Some(r), Some(u)) => {
                debug_assert_ne!(r, u, "standard tableau entries are distinct");
                if r < u {
                    (x + 1, y, r)
                } else {
                    (x, y + 1, u)
                }
            }
        };
        x = nx;
        y = ny;
        boxes.push(Cell::new(x + 1, y + 1));
        entries.push(value);
    }
    let n: usize = rows.iter().map(Vec::len).sum();
    let stalled = *entries.last().expect("nonempty") as usize <= n.div_ceil(2);
    JdtPath {
        boxes,
        entries,
        complete: stalled,
    }
}

/// The jdt path of a nonempty tableau.
pub fn jdt_path(t: &StandardTableau) -> Result<JdtPath> {
    if t.is_empty() {
        return Err(Error::EmptyTableau);
    }
    Ok(walk(t.rows()))
}

/// Applies `j` in place and returns the path. Requires a nonempty tableau.
pub fn jdt_step(t: &mut StandardTableau) -> Result<JdtPath> {
    if t.is_empty() {
        return Err(Error::EmptyTableau);
    }
    let path = walk(t.rows());
    let rows = t.rows_mut();
    for (k, pair) in path.boxes.windows(2).enumerate() {
        rows[pair[0].y - 1][pair[0].x - 1] = path.entries[k + 1];
    }
    let end = path.last();
    rows[end.y - 1].pop();
    if rows[end.y - 1].is_empty() {
        rows.pop();
    }
    for e in rows.iter_mut().flatten() {
        *e -= 1;
    }
    Ok(path)
}

/// `j(t)`: remove box `(1,1)`, slide along the jdt path, subtract one.
pub fn jdt_transform(t: &StandardTableau) -> Result<StandardTableau> {
    let mut out = t.clone();
    jdt_step(&mut out)?;
    Ok(out)
}

/// `(q̃_1, …, q̃_n)`.
pub fn lazy_path(t: &StandardTableau) -> Result<Vec<Cell>> {
    let path = jdt_path(t)?;
    Ok((1..=t.len() as u32).map(|m| path.lazy_at(m)).collect())
}

/// `k` successive applications of `j`, each with the path it followed.
pub fn iterate_jdt(t: &StandardTableau, k: usize) -> Result<Vec<(StandardTableau, JdtPath)>> {
    if k > t.len() {
        return Err(Error::TooManySteps {
            requested: k,
            available: t.len(),
        });
    }
    let mut current = t.clone();
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        let path = jdt_step(&mut current)?;
        out.push((current.clone(), path));
    }
    Ok(out)
}

//! Words over finitely many row letters as lattice walks, and the RSK shape
//! process of such a word as the generalized Pitman transform.

use serde::{Deserialize, Serialize};

use crate::alphabet::{Letter, Orientation};
use crate::error::{Error, Result};
use crate::rsk::{Rsk, Word};

/// Walk in `Z^dim` with unit steps along the coordinate axes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeWalk {
    pub dim: usize,
    /// Axis (1-based) of each step.
    pub steps: Vec<usize>,
    /// Position after each step.
    pub positions: Vec<Vec<usize>>,
}

fn axes(w: &Word, dim: usize) -> Result<Vec<usize>> {
    w.letters()
        .iter()
        .enumerate()
        .map(|(i, l)| match *l {
            Letter::Row(k) if (1..=dim).contains(&(k as usize)) => Ok(k as usize),
            _ => Err(Error::NotARowLetter {
                position: i + 1,
                max: dim,
            }),
        })
        .collect()
}

pub fn word_to_walk(w: &Word, dim: usize) -> Result<LatticeWalk> {
    let steps = axes(w, dim)?;
    let mut pos = vec![0usize; dim];
    let positions = steps
        .iter()
        .map(|&a| {
            pos[a - 1] += 1;
            pos.clone()
        })
        .collect();
    Ok(LatticeWalk {
        dim,
        steps,
        positions,
    })
}

/// `Λ⁰, …, Λⁿ`: the RSK shapes of the prefixes, each padded to `dim` entries.
pub fn pitman_transform(w: &Word, dim: usize) -> Result<Vec<Vec<usize>>> {
    axes(w, dim)?;
    let mut rsk = Rsk::new(Orientation::Jdt);
    let mut out = Vec::with_capacity(w.len() + 1);
    out.push(vec![0; dim]);
    for &l in w.letters() {
        rsk.push(l);
        let shape = rsk.shape();
        debug_assert!(shape.num_rows() <= dim);
        out.push(shape.padded(dim));
    }
    Ok(out)
}

//! Exhaustive Greene-invariant oracle for RSK shapes.
//!
//! The shape is reconstructed from maximal unions of `k` disjoint
//! `<_r`-increasing subsequences (row partial sums) and cross-checked against
//! maximal unions of `k` disjoint `<_c`-decreasing subsequences (column partial
//! sums). Nothing here touches the insertion code.

use std::collections::HashMap;

use crate::alphabet::{less_c, less_r};
use crate::error::{Error, Result};
use crate::rsk::Word;
use crate::tableaux::YoungDiagram;

pub const DEFAULT_ORACLE_BOUND: usize = 10;

/// Hard cap on the bound: subsets are enumerated as `u32` masks and the cover
/// table has `2^n` entries.
pub const MAX_ORACLE_BOUND: usize = 16;

/// For each position `j`, the mask of earlier positions `i` that may precede
/// `j` in a chain of the given relation.
fn predecessor_masks(w: &Word, rel: impl Fn(usize, usize) -> Result<bool>) -> Result<Vec<u32>> {
    let n = w.len();
    let mut pred = vec![0u32; n];
    for (j, mask) in pred.iter_mut().enumerate() {
        for i in 0..j {
            if rel(i, j)? {
                *mask |= 1 << i;
            }
        }
    }
    Ok(pred)
}

/// `best[k]` = largest subset size coverable by `k` chains, `k = 0..=n`.
fn max_chain_unions(pred: &[u32]) -> Vec<usize> {
    let n = pred.len();
    let full = 1usize << n;
    let mut is_chain = vec![false; full];
    is_chain[0] = true;
    for mask in 1..full {
        let top = usize::BITS - 1 - mask.leading_zeros();
        let rest = mask ^ (1 << top);
        is_chain[mask] = is_chain[rest] && (rest as u32 & !pred[top as usize]) == 0;
    }
    let mut cover = vec![u8::MAX; full];
    cover[0] = 0;
    for mask in 1..full {
        let low = mask & mask.wrapping_neg();
        let others = mask ^ low;
        let mut best = u8::MAX;
        // every chain containing the lowest element of mask
        let mut sub = others;
        loop {
            let chain = sub | low;
            if is_chain[chain] {
                best = best.min(cover[mask ^ chain].saturating_add(1));
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & others;
        }
        cover[mask] = best;
    }
    let mut best = vec![0usize; n + 1];
    for (mask, &c) in cover.iter().enumerate() {
        let size = mask.count_ones() as usize;
        let c = c as usize;
        if size > best[c] {
            best[c] = size;
        }
    }
    for k in 1..=n {
        best[k] = best[k].max(best[k - 1]);
    }
    best
}

fn differences(sums: &[usize]) -> Vec<usize> {
    sums.windows(2)
        .map(|w| w[1] - w[0])
        .filter(|&d| d > 0)
        .collect()
}

fn shape_from_relations(pred_r: &[u32], pred_c: &[u32]) -> Result<YoungDiagram> {
    let rows = differences(&max_chain_unions(pred_r));
    let columns = differences(&max_chain_unions(pred_c));
    let mismatch = || Error::GreeneMismatch {
        rows: rows.clone(),
        columns: columns.clone(),
    };
    let shape = YoungDiagram::new(rows.clone()).map_err(|_| mismatch())?;
    let conj = YoungDiagram::new(columns.clone()).map_err(|_| mismatch())?;
    if shape.conjugate() != conj {
        return Err(mismatch());
    }
    Ok(shape)
}

fn relations(w: &Word) -> Result<(Vec<u32>, Vec<u32>)> {
    let letters = w.letters();
    let o = w.orientation();
    let pred_r = predecessor_masks(w, |i, j| less_r(letters[i], letters[j], o))?;
    let pred_c = predecessor_masks(w, |i, j| less_c(letters[j], letters[i], o))?;
    Ok((pred_r, pred_c))
}

/// Greene shape of `w`, by exhaustive search, for `|w| <= bound`.
pub fn greene_oracle_with_bound(w: &Word, bound: usize) -> Result<YoungDiagram> {
    let bound = bound.min(MAX_ORACLE_BOUND);
    if w.len() > bound {
        return Err(Error::OracleBoundExceeded {
            len: w.len(),
            bound,
        });
    }
    let (pred_r, pred_c) = relations(w)?;
    shape_from_relations(&pred_r, &pred_c)
}

pub fn greene_oracle(w: &Word) -> Result<YoungDiagram> {
    greene_oracle_with_bound(w, DEFAULT_ORACLE_BOUND)
}

/// Memoizing oracle for exhaustive sweeps: words with the same pair of
/// comparison relations share one search.
#[derive(Debug, Default)]
pub struct GreeneOracle {
    bound: usize,
    cache: HashMap<(Vec<u32>, Vec<u32>), YoungDiagram>,
}

impl GreeneOracle {
    pub fn new(bound: usize) -> Self {
        GreeneOracle {
            bound: bound.min(MAX_ORACLE_BOUND),
            cache: HashMap::new(),
        }
    }

    pub fn shape(&mut self, w: &Word) -> Result<YoungDiagram> {
        if w.len() > self.bound {
            return Err(Error::OracleBoundExceeded {
                len: w.len(),
                bound: self.bound,
            });
        }
        let key = relations(w)?;
        if let Some(shape) = self.cache.get(&key) {
            return Ok(shape.clone());
        }
        let shape = shape_from_relations(&key.0, &key.1)?;
        self.cache.insert(key, shape.clone());
        Ok(shape)
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Letter::*;

    fn d(rows: &[usize]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            greene_oracle(&Word::jdt(vec![Row(1), Row(1), Col(1)]).unwrap()).unwrap(),
            d(&[3])
        );
        assert_eq!(
            greene_oracle(&Word::jdt(vec![Col(1), Col(1)]).unwrap()).unwrap(),
            d(&[1, 1])
        );
        assert_eq!(greene_oracle(&Word::jdt(vec![]).unwrap()).unwrap(), d(&[]));
    }

    #[test]
    fn classic_permutation() {
        // 3 1 4 2 5 has longest increasing run 3 (e.g. 1 4 5 / 3 4 5) and two
        // disjoint increasing subsequences covering all five letters.
        let w = Word::jdt([3, 1, 4, 2, 5].map(Row).to_vec()).unwrap();
        assert_eq!(greene_oracle(&w).unwrap(), d(&[3, 2]));
    }

    #[test]
    fn bound_is_enforced() {
        let w = Word::jdt(vec![Row(1); 11]).unwrap();
        assert_eq!(
            greene_oracle(&w).unwrap_err(),
            Error::OracleBoundExceeded { len: 11, bound: 10 }
        );
        assert_eq!(greene_oracle_with_bound(&w, 11).unwrap(), d(&[11]));
    }

    #[test]
    fn memo_agrees_with_direct() {
        let mut memo = GreeneOracle::new(8);
        let a = Word::jdt(vec![Row(2), Row(1), Col(1)]).unwrap();
        let b = Word::jdt(vec![Row(5), Row(3), Col(4)]).unwrap();
        assert_eq!(memo.shape(&a).unwrap(), greene_oracle(&a).unwrap());
        assert_eq!(memo.shape(&b).unwrap(), greene_oracle(&b).unwrap());
        assert_eq!(memo.cache_len(), 1);
    }
}

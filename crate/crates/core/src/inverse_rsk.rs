//! Finite-truncation estimate of the inverse of RSK: classify the jdt path of
//! each successive iterate `t, j(t), j(j(t)), …`.

use crate::error::{Error, Result};
use crate::jdt::jdt_step;
use crate::limit_shape::{classify_path_with_min, PsiValue, DEFAULT_CLASSIFIER_MIN};
use crate::tableaux::StandardTableau;

/// `(Ψ(t), Ψ(j(t)), …)`, the first `k` values, classifying with prefix size
/// `n − i + 1` at step `i`.
pub fn invert_prefix_with_min(t: &StandardTableau, k: usize, min: usize) -> Result<Vec<PsiValue>> {
    let n = t.len();
    if n < min || k > n - min {
        return Err(Error::PrefixTooShort { n, min: min + k });
    }
    let mut current = t.clone();
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let size = n - i;
        let path = jdt_step(&mut current)?;
        out.push(classify_path_with_min(&path, size, min)?);
    }
    Ok(out)
}

pub fn invert_prefix(t: &StandardTableau, k: usize) -> Result<Vec<PsiValue>> {
    invert_prefix_with_min(t, k, DEFAULT_CLASSIFIER_MIN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Letter;

    #[test]
    fn single_row_and_column() {
        let row = StandardTableau::single_row(200);
        let letters: Vec<Letter> = invert_prefix(&row, 5)
            .unwrap()
            .into_iter()
            .map(PsiValue::to_letter)
            .collect();
        assert_eq!(letters, vec![Letter::Row(1); 5]);
        let col = StandardTableau::single_column(200);
        let letters: Vec<Letter> = invert_prefix(&col, 5)
            .unwrap()
            .into_iter()
            .map(PsiValue::to_letter)
            .collect();
        assert_eq!(letters, vec![Letter::Col(1); 5]);
    }

    #[test]
    fn too_short() {
        let row = StandardTableau::single_row(120);
        assert!(invert_prefix(&row, 20).is_ok());
        assert!(matches!(
            invert_prefix(&row, 21),
            Err(Error::PrefixTooShort { .. })
        ));
        assert!(invert_prefix(&StandardTableau::single_row(50), 0).is_err());
    }
}

//! Seeded sampling of i.i.d. words and of Vershik-Kerov tableau prefixes
//! realized through RSK, plus frequency statistics.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::alphabet::{Letter, LetterSampler, Orientation, ThomaParams};
use crate::error::Result;
use crate::rsk::{Rsk, Word};
use crate::tableaux::{SemistandardTableau, StandardTableau};

/// Independent stream for trial `trial` of an experiment seeded by `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Draws letters for one word, resampling neutral collisions.
#[derive(Debug, Clone)]
pub struct WordSampler {
    letters: LetterSampler,
    seen: HashSet<u64>,
    /// Number of neutral draws discarded because their value already occurred.
    pub resampled: usize,
}

impl WordSampler {
    pub fn new(p: &ThomaParams) -> Result<Self> {
        Ok(WordSampler {
            letters: LetterSampler::new(p)?,
            seen: HashSet::new(),
            resampled: 0,
        })
    }

    /// Next letter of the word; never repeats a neutral value.
    pub fn next<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Letter {
        loop {
            let l = self.letters.sample(rng);
            match l {
                Letter::Neutral(x) if !self.seen.insert(x.to_bits()) => self.resampled += 1,
                _ => return l,
            }
        }
    }
}

/// `n` i.i.d. letters from the jdt letter measure of `p`.
pub fn sample_word<R: Rng + ?Sized>(p: &ThomaParams, n: usize, rng: &mut R) -> Result<Word> {
    let mut sampler = WordSampler::new(p)?;
    let letters = (0..n).map(|_| sampler.next(rng)).collect();
    Ok(Word::new_unchecked(letters, Orientation::Jdt))
}

/// `n`-box prefix of a `M_{α,β,γ}`-distributed infinite tableau: the recording
/// tableau of `n` i.i.d. letters.
pub fn sample_vk_prefix<R: Rng + ?Sized>(
    p: &ThomaParams,
    n: usize,
    rng: &mut R,
) -> Result<StandardTableau> {
    let mut sampler = WordSampler::new(p)?;
    let mut rsk = Rsk::new(Orientation::Jdt);
    for _ in 0..n {
        rsk.push(sampler.next(rng));
    }
    Ok(rsk.into_recording_tableau())
}

/// Row and column lengths of a shape divided by its size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Frequencies {
    pub rows: Vec<f64>,
    pub columns: Vec<f64>,
}

pub fn row_frequencies(t: &StandardTableau) -> Frequencies {
    let shape = t.shape();
    let n = shape.size().max(1) as f64;
    Frequencies {
        rows: shape.rows().iter().map(|&r| r as f64 / n).collect(),
        columns: shape
            .conjugate()
            .rows()
            .iter()
            .map(|&c| c as f64 / n)
            .collect(),
    }
}

/// Probability that two i.i.d. jdt letters `u, v` satisfy `u <_r v`, i.e.
/// fill the one-row shape `(2)` semistandardly.
pub fn row_pair_probability(p: &ThomaParams) -> Result<f64> {
    p.validate()?;
    let sum_a: f64 = p.alpha.iter().sum();
    let sum_b: f64 = p.beta.iter().sum();
    let g = p.gamma;
    let sq_a: f64 = p.alpha.iter().map(|a| a * a).sum();
    let sq_b: f64 = p.beta.iter().map(|b| b * b).sum();
    // Σ_{i<j} x_i x_j
    let e2 = |s: f64, sq: f64| (s * s - sq) / 2.0;
    // u < v, block by block: R1 < R2 < ... < (0,1) < ... < C2 < C1
    let strictly_less =
        e2(sum_a, sq_a) + sum_a * g + sum_a * sum_b + g * g / 2.0 + g * sum_b + e2(sum_b, sq_b);
    // u = v with u a row letter
    Ok(sq_a + strictly_less)
}

/// Monte Carlo frequency of semistandard fillings of `(2)` by two i.i.d. letters.
pub fn row_pair_frequency(p: &ThomaParams, trials: usize, seed: u64) -> Result<f64> {
    let sampler = LetterSampler::new(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0usize;
    for _ in 0..trials {
        let (u, v) = (sampler.sample(&mut rng), sampler.sample(&mut rng));
        let t = SemistandardTableau {
            orientation: Orientation::Jdt,
            rows: vec![vec![u, v]],
        };
        if t.validate().is_ok() {
            hits += 1;
        }
    }
    Ok(hits as f64 / trials.max(1) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rsk::recording_tableau;
    use Letter::*;

    fn params(a: &[f64], b: &[f64], g: f64) -> ThomaParams {
        ThomaParams::new(a.to_vec(), b.to_vec(), g).unwrap()
    }

    #[test]
    fn word_examples() {
        let mut rng = trial_rng(0, 0);
        let w = sample_word(&params(&[1.0], &[], 0.0), 5, &mut rng).unwrap();
        assert_eq!(w.letters(), &[Row(1); 5]);
        let w = sample_word(&ThomaParams::plancherel(), 3, &mut rng).unwrap();
        assert!(w.letters().iter().all(|l| l.is_neutral()));
        Word::jdt(w.letters().to_vec()).expect("distinct neutral letters");
    }

    #[test]
    fn word_kind_frequencies() {
        let mut rng = trial_rng(42, 0);
        let n = 100_000;
        let w = sample_word(&params(&[0.3], &[0.2], 0.5), n, &mut rng).unwrap();
        let mut counts = [0usize; 3];
        for l in w.letters() {
            counts[match l {
                Row(_) => 0,
                Col(_) => 1,
                Neutral(_) => 2,
            }] += 1;
        }
        for (c, e) in counts.iter().zip([0.3, 0.2, 0.5]) {
            assert!((*c as f64 / n as f64 - e).abs() < 0.01);
        }
    }

    #[test]
    fn prefix_examples() {
        let mut rng = trial_rng(1, 0);
        assert_eq!(
            sample_vk_prefix(&params(&[1.0], &[], 0.0), 4, &mut rng).unwrap(),
            StandardTableau::single_row(4)
        );
        assert_eq!(
            sample_vk_prefix(&params(&[], &[1.0], 0.0), 4, &mut rng).unwrap(),
            StandardTableau::single_column(4)
        );
    }

    #[test]
    fn prefix_equals_recording_of_sampled_word() {
        let p = params(&[0.3], &[0.2], 0.5);
        let w = sample_word(&p, 300, &mut trial_rng(9, 4)).unwrap();
        let t = sample_vk_prefix(&p, 300, &mut trial_rng(9, 4)).unwrap();
        assert_eq!(t, recording_tableau(&w));
    }

    #[test]
    fn trial_streams_differ() {
        let a: u64 = trial_rng(5, 0).gen();
        let b: u64 = trial_rng(5, 1).gen();
        let c: u64 = trial_rng(5, 0).gen();
        assert_ne!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn frequency_examples() {
        let f = row_frequencies(&StandardTableau::single_row(4));
        assert_eq!(f.rows, vec![1.0]);
        assert_eq!(f.columns, vec![0.25; 4]);
        let t = StandardTableau::from_rows(vec![vec![1, 3], vec![2]]).unwrap();
        let f = row_frequencies(&t);
        assert!((f.rows[0] - 2.0 / 3.0).abs() < 1e-15);
        assert!((f.rows[1] - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn vk_row_frequencies() {
        let p = params(&[0.6, 0.3], &[], 0.1);
        let t = sample_vk_prefix(&p, 5000, &mut trial_rng(11, 0)).unwrap();
        let f = row_frequencies(&t);
        assert!((f.rows[0] - 0.6).abs() < 0.05, "{:?}", &f.rows[..2]);
        assert!((f.rows[1] - 0.3).abs() < 0.05, "{:?}", &f.rows[..2]);
    }

    #[test]
    fn pair_probability_examples() {
        assert_eq!(
            row_pair_probability(&params(&[0.5], &[], 0.5)).unwrap(),
            0.625
        );
        assert_eq!(
            row_pair_probability(&params(&[1.0], &[], 0.0)).unwrap(),
            1.0
        );
        assert_eq!(
            row_pair_probability(&params(&[], &[1.0], 0.0)).unwrap(),
            0.0
        );
    }

    #[test]
    fn pair_probability_matches_symmetry_identity() {
        // P(u < v) = P(v < u) for i.i.d. letters, so
        // P(u <_r v) = Σα² + (1 − Σα² − Σβ²)/2.
        for p in [
            params(&[0.4, 0.1], &[0.3, 0.05], 0.15),
            params(&[0.25], &[], 0.75),
            params(&[], &[0.5, 0.5], 0.0),
            ThomaParams::plancherel(),
        ] {
            let sa: f64 = p.alpha.iter().map(|a| a * a).sum();
            let sb: f64 = p.beta.iter().map(|b| b * b).sum();
            let expected = sa + (1.0 - sa - sb) / 2.0;
            assert!((row_pair_probability(&p).unwrap() - expected).abs() < 1e-12);
        }
    }
}

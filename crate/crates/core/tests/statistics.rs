use taquin::inverse_rsk::invert_prefix;
use taquin::rsk::recording_tableau;
use taquin::sampler::{sample_word, trial_rng};
use taquin::{Letter, ThomaParams};

fn neutral_mae(n: usize, trials: u64) -> f64 {
    let p = ThomaParams::new(vec![0.3], vec![0.2], 0.5).unwrap();
    let (mut total, mut count) = (0.0, 0);
    for t in 0..trials {
        let w = sample_word(&p, n, &mut trial_rng(21, t)).unwrap();
        let psi = invert_prefix(&recording_tableau(&w), 5).unwrap();
        for (l, v) in w.letters().iter().zip(psi) {
            if let Letter::Neutral(x) = l {
                total += (x - v.unit_value()).abs();
                count += 1;
            }
        }
    }
    total / count as f64
}

#[test]
fn longer_prefixes_invert_better() {
    let short = neutral_mae(500, 60);
    let long = neutral_mae(5000, 60);
    assert!(long <= short + 0.01, "n=500: {short}, n=5000: {long}");
}

//! Monte Carlo and grid experiments. Every trial draws from its own RNG stream
//! and results are merged in trial order, so output does not depend on the
//! number of workers.

use std::f64::consts::PI;

use rayon::prelude::*;
use taquin::inverse_rsk::invert_prefix;
use taquin::jdt::jdt_path;
use taquin::limit_shape::{classify_path, curve_point, theta_cdf};
use taquin::pitman::{pitman_transform, word_to_walk};
use taquin::rsk::recording_tableau;
use taquin::sampler::{
    row_frequencies, row_pair_frequency, row_pair_probability, sample_vk_prefix, sample_word,
    trial_rng,
};
use taquin::{Letter, PsiValue, ThomaParams};

use crate::config::{Experiment, ExperimentConfig};
use crate::report::{Check, Report, Table};
use crate::HarnessError;

/// Maps `f` over trial indices `0..trials` on a pool of `workers` threads
/// (all available cores when `None`), keeping trial order.
pub fn par_trials<T, F>(trials: usize, workers: Option<usize>, f: F) -> Result<Vec<T>, HarnessError>
where
    T: Send,
    F: Fn(u64) -> Result<T, HarnessError> + Sync + Send,
{
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        builder = builder.num_threads(w.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| HarnessError::Config(format!("thread pool: {e}")))?;
    pool.install(|| (0..trials as u64).into_par_iter().map(&f).collect())
}

pub fn run_experiment(
    config: &ExperimentConfig,
    workers: Option<usize>,
) -> Result<Report, HarnessError> {
    config.validate()?;
    match config.experiment {
        Experiment::Paths => paths(config, workers),
        Experiment::ThetaDist => theta_dist(config, workers),
        Experiment::Frequencies => frequencies(config, workers),
        Experiment::Invert => invert(config, workers),
        Experiment::LimitShapeGrid => limit_shape_grid(config),
        Experiment::Pitman => pitman(config, workers),
        Experiment::S2 => s2(config),
    }
}

fn binomial_se(p: f64, trials: usize) -> f64 {
    (p * (1.0 - p) / trials as f64).sqrt()
}

fn first(seq: &[f64]) -> f64 {
    seq.first().copied().unwrap_or(0.0)
}

fn psi_cells(psi: PsiValue) -> [String; 2] {
    match psi {
        PsiValue::Row(k) => ["row".into(), k.to_string()],
        PsiValue::Column(k) => ["column".into(), k.to_string()],
        PsiValue::Continuous(v) => ["sloped".into(), v.to_string()],
    }
}

fn paths(c: &ExperimentConfig, workers: Option<usize>) -> Result<Report, HarnessError> {
    let rows = par_trials(c.trials, workers, |t| {
        let tab = sample_vk_prefix(&c.thoma, c.n, &mut trial_rng(c.seed, t))?;
        let path = jdt_path(&tab)?;
        let psi = classify_path(&path, c.n)?;
        Ok((t, psi, path.last(), path.len(), path.complete))
    })?;
    let mut table = Table::new(
        "paths",
        &[
            "trial", "kind", "value", "end_x", "end_y", "path_len", "complete",
        ],
    );
    let (mut row1, mut col1, mut sloped, mut dead) = (0usize, 0usize, 0usize, 0usize);
    for (t, psi, end, len, complete) in rows {
        match psi {
            PsiValue::Row(1) => row1 += 1,
            PsiValue::Column(1) => col1 += 1,
            PsiValue::Continuous(_) => sloped += 1,
            _ => {}
        }
        dead += complete as usize;
        let [kind, value] = psi_cells(psi);
        table.rows.push(vec![
            t.to_string(),
            kind,
            value,
            end.x.to_string(),
            end.y.to_string(),
            len.to_string(),
            complete.to_string(),
        ]);
    }
    let tol = c.tolerance("frequency");
    let freq = |k: usize| k as f64 / c.trials as f64;
    let check = |name: &str, k: usize, target: f64| {
        Check::within(name, freq(k), target, tol).with_std_error(binomial_se(freq(k), c.trials))
    };
    let checks = vec![
        check("row_1", row1, first(&c.thoma.alpha)),
        check("column_1", col1, first(&c.thoma.beta)),
        check("sloped", sloped, c.thoma.gamma),
        Check::at_most("dead_ends", dead as f64, c.tolerance("dead_ends")),
    ];
    Ok(Report::new(c.clone(), vec![table], checks))
}

/// Kolmogorov distance between the empirical law of `samples` and `cdf`.
pub fn sup_distance(samples: &mut [f64], cdf: impl Fn(f64) -> f64) -> f64 {
    samples.sort_by(f64::total_cmp);
    let m = samples.len() as f64;
    samples.iter().enumerate().fold(0.0, |d: f64, (i, &s)| {
        let f = cdf(s);
        d.max((f - i as f64 / m).abs())
            .max((f - (i + 1) as f64 / m).abs())
    })
}

fn theta_dist(c: &ExperimentConfig, workers: Option<usize>) -> Result<Report, HarnessError> {
    let rows = par_trials(c.trials, workers, |t| {
        let tab = sample_vk_prefix(&c.thoma, c.n, &mut trial_rng(c.seed, t))?;
        let end = jdt_path(&tab)?.last();
        let theta = (end.y as f64).atan2(end.x as f64);
        Ok((t, end, theta, theta_cdf(theta)?))
    })?;
    let mut table = Table::new("theta", &["trial", "x", "y", "theta", "theta_cdf"]);
    let mut thetas = Vec::with_capacity(rows.len());
    for (t, end, theta, f) in rows {
        thetas.push(theta);
        table.rows.push(vec![
            t.to_string(),
            end.x.to_string(),
            end.y.to_string(),
            theta.to_string(),
            f.to_string(),
        ]);
    }
    let d = sup_distance(&mut thetas, |th| theta_cdf(th).expect("angle in range"));
    let checks = vec![Check::at_most(
        "sup_distance",
        d,
        c.tolerance("sup_distance"),
    )];
    Ok(Report::new(c.clone(), vec![table], checks))
}

fn frequencies(c: &ExperimentConfig, workers: Option<usize>) -> Result<Report, HarnessError> {
    let n_rows = c.thoma.alpha.len().max(1);
    let n_cols = c.thoma.beta.len().max(1);
    let sqrt_n = (c.n as f64).sqrt();
    let rows = par_trials(c.trials, workers, |t| {
        let tab = sample_vk_prefix(&c.thoma, c.n, &mut trial_rng(c.seed, t))?;
        let f = row_frequencies(&tab);
        let pad = |v: &[f64], k: usize| {
            (0..k)
                .map(|i| v.get(i).copied().unwrap_or(0.0))
                .collect::<Vec<_>>()
        };
        let first_row = tab.shape().row_len(1) as f64 / sqrt_n;
        Ok((pad(&f.rows, n_rows), pad(&f.columns, n_cols), first_row))
    })?;
    let mut header = vec!["trial".to_string()];
    header.extend((1..=n_rows).map(|i| format!("row_{i}")));
    header.extend((1..=n_cols).map(|j| format!("column_{j}")));
    header.push("row_1_scaled".into());
    let mut table = Table {
        name: "frequencies".into(),
        header,
        rows: Vec::new(),
    };
    let mut sums = vec![0.0; n_rows + n_cols];
    let mut sq = vec![0.0; n_rows + n_cols];
    let (low, high) = (c.tolerance("first_row_low"), c.tolerance("first_row_high"));
    let mut in_band = 0usize;
    for (t, (r, col, first_row)) in rows.into_iter().enumerate() {
        let mut line = vec![t.to_string()];
        for (i, v) in r.iter().chain(&col).enumerate() {
            sums[i] += v;
            sq[i] += v * v;
            line.push(v.to_string());
        }
        if (low..=high).contains(&first_row) {
            in_band += 1;
        }
        line.push(first_row.to_string());
        table.rows.push(line);
    }
    let m = c.trials as f64;
    let tol = c.tolerance("mean");
    let mut checks = Vec::new();
    let targets = c
        .thoma
        .alpha
        .iter()
        .enumerate()
        .map(|(i, &a)| (format!("mean_row_{}", i + 1), i, a));
    let targets = targets.chain(
        c.thoma
            .beta
            .iter()
            .enumerate()
            .map(|(j, &b)| (format!("mean_column_{}", j + 1), n_rows + j, b)),
    );
    for (name, idx, target) in targets {
        let mean = sums[idx] / m;
        let var = (sq[idx] / m - mean * mean).max(0.0);
        checks.push(Check::within(&name, mean, target, tol).with_std_error((var / m).sqrt()));
    }
    if c.thoma.alpha.is_empty() && c.thoma.beta.is_empty() {
        let frac = in_band as f64 / m;
        checks.push(
            Check::at_least("first_row_in_band", frac, c.tolerance("first_row_fraction"))
                .with_std_error(binomial_se(frac, c.trials)),
        );
    }
    Ok(Report::new(c.clone(), vec![table], checks))
}

fn invert(c: &ExperimentConfig, workers: Option<usize>) -> Result<Report, HarnessError> {
    let rows = par_trials(c.trials, workers, |t| {
        let w = sample_word(&c.thoma, c.n, &mut trial_rng(c.seed, t))?;
        let recovered = invert_prefix(&recording_tableau(&w), c.k)?;
        Ok(w.letters()[..c.k]
            .iter()
            .copied()
            .zip(recovered)
            .collect::<Vec<_>>())
    })?;
    let mut table = Table::new(
        "invert",
        &["trial", "position", "true_letter", "recovered", "error"],
    );
    let (mut exact, mut discrete) = (0usize, 0usize);
    let mut errors = Vec::new();
    for (t, pairs) in rows.into_iter().enumerate() {
        for (pos, (truth, psi)) in pairs.into_iter().enumerate() {
            let err = match truth {
                Letter::Neutral(x) => {
                    let e = (x - psi.unit_value()).abs();
                    errors.push(e);
                    e
                }
                _ => {
                    discrete += 1;
                    let hit = psi.to_letter() == truth;
                    exact += hit as usize;
                    if hit {
                        0.0
                    } else {
                        1.0
                    }
                }
            };
            table.rows.push(vec![
                t.to_string(),
                (pos + 1).to_string(),
                truth.to_string(),
                psi.to_letter().to_string(),
                err.to_string(),
            ]);
        }
    }
    let mut checks = Vec::new();
    if discrete > 0 {
        let rate = exact as f64 / discrete as f64;
        checks.push(
            Check::at_least("discrete_rate", rate, c.tolerance("discrete_rate"))
                .with_std_error(binomial_se(rate, discrete)),
        );
    }
    if !errors.is_empty() {
        let m = errors.len() as f64;
        let mae = errors.iter().sum::<f64>() / m;
        let var = errors.iter().map(|e| (e - mae).powi(2)).sum::<f64>() / m;
        checks.push(
            Check::at_most("neutral_mae", mae, c.tolerance("neutral_mae"))
                .with_std_error((var / m).sqrt()),
        );
    }
    Ok(Report::new(c.clone(), vec![table], checks))
}

fn limit_shape_grid(c: &ExperimentConfig) -> Result<Report, HarnessError> {
    let mut table = Table::new("limit_shape", &["w", "X", "Y", "U", "theta"]);
    for i in 0..c.n {
        let w = i as f64 / (c.n - 1) as f64;
        let p = curve_point(w)?;
        table.rows.push(vec![
            w.to_string(),
            p.x.to_string(),
            p.y.to_string(),
            p.u().to_string(),
            p.angle().to_string(),
        ]);
    }
    let tol = c.tolerance("numeric");
    let endpoint_err = [(0.0, 0.0, 2.0), (1.0, 2.0, 0.0), (0.5, 2.0 / PI, 2.0 / PI)]
        .iter()
        .map(|&(w, x, y)| {
            let p = curve_point(w)?;
            Ok((p.x - x).abs().max((p.y - y).abs()))
        })
        .collect::<Result<Vec<f64>, HarnessError>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let mut round_trip: f64 = 0.0;
    for i in 1..=19 {
        let w = i as f64 / 20.0;
        let p = curve_point(1.0 - w)?;
        round_trip = round_trip.max((theta_cdf(p.y.atan2(p.x))? - w).abs());
    }
    let checks = vec![
        Check::at_most("reference_points", endpoint_err, tol),
        Check::at_most("theta_round_trip", round_trip, tol),
    ];
    Ok(Report::new(c.clone(), vec![table], checks))
}

fn pitman(c: &ExperimentConfig, workers: Option<usize>) -> Result<Report, HarnessError> {
    let dim = c.dim;
    let rows = par_trials(c.trials, workers, |t| {
        let w = sample_word(&c.thoma, c.n, &mut trial_rng(c.seed, t))?;
        Ok((word_to_walk(&w, dim)?, pitman_transform(&w, dim)?))
    })?;
    let mut header = vec!["trial".to_string(), "m".into(), "step".into()];
    header.extend((1..=dim).map(|i| format!("x_{i}")));
    header.extend((1..=dim).map(|i| format!("lambda_{i}")));
    let mut table = Table {
        name: "pitman".into(),
        header,
        rows: Vec::new(),
    };
    let (mut chamber, mut conservation) = (0usize, 0usize);
    for (t, (walk, lam)) in rows.into_iter().enumerate() {
        for (m, l) in lam.iter().enumerate() {
            chamber += l.windows(2).any(|p| p[0] < p[1]) as usize;
            conservation += (l.iter().sum::<usize>() != m) as usize;
            let mut line = vec![t.to_string(), m.to_string()];
            if m == 0 {
                line.push(String::new());
                line.extend((0..dim).map(|_| "0".to_string()));
            } else {
                line.push(walk.steps[m - 1].to_string());
                line.extend(walk.positions[m - 1].iter().map(|v| v.to_string()));
            }
            line.extend(l.iter().map(|v| v.to_string()));
            table.rows.push(line);
        }
    }
    let checks = vec![
        Check::at_most("chamber_violations", chamber as f64, 0.0),
        Check::at_most("conservation_violations", conservation as f64, 0.0),
    ];
    Ok(Report::new(c.clone(), vec![table], checks))
}

fn s2(c: &ExperimentConfig) -> Result<Report, HarnessError> {
    let mut table = Table::new(
        "s2",
        &[
            "alpha",
            "beta",
            "gamma",
            "exact",
            "formula",
            "monte_carlo",
            "std_error",
        ],
    );
    let k = c.tolerance("std_errors");
    let exact_tol = c.tolerance("exact");
    let mut checks = Vec::new();
    let mut cases = vec![("config".to_string(), c.thoma.clone())];
    for a in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let p = ThomaParams::new(if a > 0.0 { vec![a] } else { vec![] }, vec![], 1.0 - a)?;
        cases.push((format!("alpha_{a}"), p));
    }
    for (i, (label, p)) in cases.iter().enumerate() {
        let exact = row_pair_probability(p)?;
        let sa: f64 = p.alpha.iter().map(|x| x * x).sum();
        let sb: f64 = p.beta.iter().map(|x| x * x).sum();
        // u < v and v < u are equally likely for i.i.d. letters
        let formula = sa + (1.0 - sa - sb) / 2.0;
        let mc = row_pair_frequency(p, c.trials, c.seed.wrapping_add(i as u64))?;
        let se = binomial_se(exact, c.trials);
        let join = |v: &[f64]| v.iter().map(f64::to_string).collect::<Vec<_>>().join(" ");
        table.rows.push(vec![
            join(&p.alpha),
            join(&p.beta),
            p.gamma.to_string(),
            exact.to_string(),
            formula.to_string(),
            mc.to_string(),
            se.to_string(),
        ]);
        checks.push(Check::within(
            &format!("{label}_formula"),
            exact,
            formula,
            exact_tol,
        ));
        checks.push(
            Check::within(&format!("{label}_monte_carlo"), mc, exact, k * se).with_std_error(se),
        );
    }
    Ok(Report::new(c.clone(), vec![table], checks))
}

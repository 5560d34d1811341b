//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use taquin::limit_shape::{curve_point, theta_cdf};
use taquin::sampler::row_pair_probability;
use taquin::ThomaParams;
use taquin_cli::properties::run_suite;
use taquin_cli::{run_experiment, Experiment, Report, Suite, SuiteConfig, SuiteReport};

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn exact_suite(suite: Suite, limit: Option<Duration>) -> Outcome {
    let start = Instant::now();
    let r: SuiteReport = run_suite(suite, &SuiteConfig::default()).expect("suite runs");
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|l| elapsed < l);
    Outcome {
        pass: r.pass && in_time,
        detail: format!(
            "{} cases, {} failures{}, {:.1}s",
            r.cases,
            r.failures,
            r.first_failure
                .map_or(String::new(), |f| format!(" (first: {f})")),
            elapsed.as_secs_f64()
        ),
    }
}

fn describe(r: &Report) -> String {
    r.summary
        .checks
        .iter()
        .map(|c| {
            format!(
                "{}={:.5}{}",
                c.name,
                c.estimate,
                if c.pass { "" } else { " (FAIL)" }
            )
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn experiment(
    e: Experiment,
    edit: impl FnOnce(&mut taquin_cli::ExperimentConfig),
) -> (Report, Duration) {
    let mut c = e.defaults();
    edit(&mut c);
    let start = Instant::now();
    let r = run_experiment(&c, None).expect("experiment runs");
    (r, start.elapsed())
}

fn criterion_5() -> Outcome {
    let (r, t) = experiment(Experiment::Paths, |c| {
        c.thoma = ThomaParams::new(vec![0.3], vec![0.2], 0.5).unwrap();
        c.n = 2000;
        c.trials = 2000;
        c.seed = 7;
    });
    let targets = [("row_1", 0.3), ("column_1", 0.2), ("sloped", 0.5)];
    let freq_ok = targets.iter().all(|&(name, target)| {
        let c = r.summary.checks.iter().find(|c| c.name == name).unwrap();
        (c.estimate - target).abs() <= 0.05
    });
    let dead = r
        .summary
        .checks
        .iter()
        .find(|c| c.name == "dead_ends")
        .unwrap();
    Outcome {
        pass: freq_ok && dead.estimate == 0.0 && t < Duration::from_secs(300),
        detail: format!("{}, {:.1}s", describe(&r), t.as_secs_f64()),
    }
}

fn criterion_6() -> Outcome {
    let (r, _) = experiment(Experiment::Frequencies, |c| {
        c.thoma = ThomaParams::new(vec![0.6, 0.3], vec![], 0.1).unwrap();
        c.n = 5000;
        c.trials = 200;
    });
    let mean = |name: &str| {
        r.summary
            .checks
            .iter()
            .find(|c| c.name == name)
            .unwrap()
            .estimate
    };
    let pass = (mean("mean_row_1") - 0.6).abs() <= 0.03 && (mean("mean_row_2") - 0.3).abs() <= 0.03;
    Outcome {
        pass,
        detail: describe(&r),
    }
}

fn criterion_7() -> Outcome {
    let (r, _) = experiment(Experiment::ThetaDist, |c| {
        c.thoma = ThomaParams::plancherel();
        c.n = 4000;
        c.trials = 1000;
    });
    let d = r.summary.checks[0].estimate;
    Outcome {
        pass: d <= 0.05,
        detail: describe(&r),
    }
}

fn criterion_8() -> Outcome {
    let mut worst: f64 = 0.0;
    for (w, x, y) in [(0.0, 0.0, 2.0), (1.0, 2.0, 0.0), (0.5, 2.0 / PI, 2.0 / PI)] {
        let p = curve_point(w).unwrap();
        worst = worst.max((p.x - x).abs()).max((p.y - y).abs());
    }
    let mut round_trip: f64 = 0.0;
    for i in 1..=19 {
        let w = i as f64 * 0.05;
        let p = curve_point(1.0 - w).unwrap();
        round_trip = round_trip.max((theta_cdf(p.y.atan2(p.x)).unwrap() - w).abs());
    }
    let (r, _) = experiment(Experiment::Frequencies, |c| {
        c.thoma = ThomaParams::plancherel();
        c.n = 10_000;
        c.trials = 200;
    });
    let scaled: Vec<f64> = r.tables[0]
        .rows
        .iter()
        .map(|row| row.last().unwrap().parse().unwrap())
        .collect();
    let frac = scaled
        .iter()
        .filter(|&&s| (1.85..=2.15).contains(&s))
        .count() as f64
        / scaled.len() as f64;
    Outcome {
        pass: worst <= 1e-9 && round_trip <= 1e-9 && frac >= 0.9,
        detail: format!(
            "reference points err {worst:.2e}, round trip err {round_trip:.2e}, first row in band {frac:.3}"
        ),
    }
}

fn criterion_9() -> Outcome {
    let (r, _) = experiment(Experiment::Invert, |c| {
        c.thoma = ThomaParams::new(vec![0.3], vec![0.2], 0.5).unwrap();
        c.n = 5000;
        c.k = 20;
        c.trials = 100;
    });
    let get = |name: &str| {
        r.summary
            .checks
            .iter()
            .find(|c| c.name == name)
            .unwrap()
            .estimate
    };
    Outcome {
        pass: get("discrete_rate") >= 0.95 && get("neutral_mae") <= 0.05,
        detail: describe(&r),
    }
}

fn criterion_10() -> Outcome {
    let r = run_suite(Suite::MeasurePreserving, &SuiteConfig::default()).unwrap();
    let tv = r.statistic.unwrap();
    Outcome {
        pass: tv <= 0.03 && r.cases == 100_000,
        detail: format!("total variation {tv:.5} over {} trials", r.cases),
    }
}

fn criterion_11() -> Outcome {
    let p = ThomaParams::new(vec![0.5], vec![], 0.5).unwrap();
    let exact = row_pair_probability(&p).unwrap() == 0.625;
    let mut formula_err: f64 = 0.0;
    for a in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let p = ThomaParams::new(if a > 0.0 { vec![a] } else { vec![] }, vec![], 1.0 - a).unwrap();
        formula_err =
            formula_err.max((row_pair_probability(&p).unwrap() - (a * a + 1.0) / 2.0).abs());
    }
    let (r, _) = experiment(Experiment::S2, |c| {
        c.thoma = p.clone();
        c.trials = 100_000;
    });
    let mc_ok = r
        .summary
        .checks
        .iter()
        .filter(|c| c.name.ends_with("monte_carlo"))
        .all(|c| (c.estimate - c.target).abs() <= 3.0 * c.std_error.unwrap());
    Outcome {
        pass: exact && formula_err <= 1e-12 && mc_ok,
        detail: format!(
            "exact 0.625: {exact}, formula err {formula_err:.1e}, monte carlo within 3 se: {mc_ok}"
        ),
    }
}

fn criterion_12() -> Outcome {
    let mut o = exact_suite(Suite::Pitman, None);
    let (r, _) = experiment(Experiment::Pitman, |_| {});
    o.pass &= r.summary.pass;
    o.detail = format!("{}; experiment {}", o.detail, describe(&r));
    o
}

fn criterion_13() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_taquin");
    let dir = tempfile::tempdir().unwrap();
    let mut mismatched = Vec::new();
    for (e, file) in [
        ("paths", "paths.csv"),
        ("theta-dist", "theta.csv"),
        ("frequencies", "frequencies.csv"),
        ("invert", "invert.csv"),
        ("pitman", "pitman.csv"),
        ("limit-shape-grid", "limit_shape.csv"),
        ("s2", "s2.csv"),
    ] {
        let run = |workers: &str| {
            let out = dir.path().join(format!("{e}-{workers}"));
            let status = Command::new(exe)
                .args([
                    e,
                    "--n",
                    "400",
                    "--trials",
                    "40",
                    "--seed",
                    "11",
                    "--workers",
                    workers,
                ])
                .arg("--out")
                .arg(&out)
                .output()
                .unwrap();
            assert!(
                status.status.code().is_some_and(|c| c <= 1),
                "{e}: {status:?}"
            );
            (
                std::fs::read(out.join(file)).unwrap(),
                std::fs::read(out.join("manifest.json")).unwrap(),
            )
        };
        let (a, b) = (run("1"), run("4"));
        if a != b || a.0.is_empty() {
            mismatched.push(e);
        }
    }
    Outcome {
        pass: mismatched.is_empty(),
        detail: if mismatched.is_empty() {
            "7 experiments byte-identical with 1 and 4 workers".into()
        } else {
            format!("differing output: {mismatched:?}")
        },
    }
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            "shift duality",
            Box::new(|| exact_suite(Suite::ShiftDuality, Some(Duration::from_secs(60)))),
        ),
        (
            "insertion duality",
            Box::new(|| exact_suite(Suite::InsertionDuality, None)),
        ),
        (
            "greene oracle equivalence",
            Box::new(|| exact_suite(Suite::Greene, None)),
        ),
        (
            "standardization",
            Box::new(|| exact_suite(Suite::Standardization, None)),
        ),
        ("path direction probabilities", Box::new(criterion_5)),
        ("row frequencies", Box::new(criterion_6)),
        ("angle distribution", Box::new(criterion_7)),
        ("limit shape numerics", Box::new(criterion_8)),
        ("inverse round trip", Box::new(criterion_9)),
        ("measure preservation", Box::new(criterion_10)),
        ("two-letter row probability", Box::new(criterion_11)),
        ("pitman invariants", Box::new(criterion_12)),
        ("determinism", Box::new(criterion_13)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!(
            "criterion {:>2} {:<30} {}  {}",
            i + 1,
            name,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        failed += !o.pass as usize;
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

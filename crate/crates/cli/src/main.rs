use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use taquin_cli::{
    run_experiment, run_property_suite, Experiment, ExperimentConfig, HarnessError, Scope,
    SuiteConfig,
};

#[derive(Parser)]
#[command(name = "taquin", version, about = "RSK and jeu de taquin experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Asymptotic direction of jdt paths: row, column or sloped.
    Paths(ExpArgs),
    /// Angle of the jdt path end under Plancherel measure against F_Θ.
    ThetaDist(ExpArgs),
    /// Row and column frequencies of random prefixes.
    Frequencies(ExpArgs),
    /// Recover the first letters of a word from its recording tableau.
    Invert(ExpArgs),
    /// Limit curve (X, Y) on a uniform grid of w.
    LimitShapeGrid(ExpArgs),
    /// Lattice walks and their RSK shape processes.
    Pitman(ExpArgs),
    /// Probability that two letters fill the shape (2).
    S2(ExpArgs),
    /// Run property suites; exits nonzero on any failure.
    Check(CheckArgs),
}

#[derive(Args)]
struct ExpArgs {
    #[arg(long, value_delimiter = ',')]
    alpha: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    beta: Option<Vec<f64>>,
    /// Defaults to 1 - sum(alpha) - sum(beta) when alpha or beta is given.
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Letters to recover (invert).
    #[arg(long)]
    k: Option<usize>,
    /// Walk dimension (pitman).
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// JSON config; its keys override the flags.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Worker threads (default: all cores). Does not affect output.
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Args)]
struct CheckArgs {
    /// all, duality, greene, standardization, shift-duality,
    /// insertion-duality, measure-preserving, pitman
    #[arg(default_value = "all")]
    scope: Vec<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Random words per corpus.
    #[arg(long)]
    words: Option<usize>,
    /// Trials for measure-preserving.
    #[arg(long)]
    trials: Option<usize>,
    /// Maximum length of the exhaustive corpus.
    #[arg(long)]
    exhaustive: Option<usize>,
    /// Write the report as JSON here.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn resolve(e: Experiment, a: &ExpArgs) -> Result<ExperimentConfig, HarnessError> {
    let mut c = e.defaults();
    if a.alpha.is_some() || a.beta.is_some() || a.gamma.is_some() {
        let alpha = a.alpha.clone().unwrap_or_default();
        let beta = a.beta.clone().unwrap_or_default();
        let rest = 1.0 - alpha.iter().sum::<f64>() - beta.iter().sum::<f64>();
        c.thoma = taquin::ThomaParams {
            gamma: a.gamma.unwrap_or(rest.max(0.0)),
            alpha,
            beta,
        };
    }
    c.n = a.n.unwrap_or(c.n);
    c.trials = a.trials.unwrap_or(c.trials);
    c.seed = a.seed.unwrap_or(c.seed);
    c.k = a.k.unwrap_or(c.k);
    c.dim = a.dim.unwrap_or(c.dim);
    if let Some(path) = &a.config {
        c = c.overlay_file(path)?;
        if c.experiment != e {
            return Err(HarnessError::Config(format!(
                "config is for {}, not {e}",
                c.experiment
            )));
        }
    }
    Ok(c)
}

fn experiment(e: Experiment, a: &ExpArgs) -> Result<bool, HarnessError> {
    let c = resolve(e, a)?;
    let report = run_experiment(&c, a.workers)?;
    let files = report.write(&a.out)?;
    for c in &report.summary.checks {
        let se = c
            .std_error
            .map_or(String::new(), |s| format!(" (se {s:.4})"));
        println!(
            "{} {}: {}{se}, target {} tol {}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.estimate,
            c.target,
            c.tolerance
        );
    }
    for f in files {
        println!("wrote {}", f.display());
    }
    Ok(report.summary.pass)
}

fn check(a: &CheckArgs) -> Result<bool, HarnessError> {
    let mut suites = Vec::new();
    for s in &a.scope {
        for x in s.parse::<Scope>()?.0 {
            if !suites.contains(&x) {
                suites.push(x);
            }
        }
    }
    let mut cfg = SuiteConfig::default();
    cfg.seed = a.seed.unwrap_or(cfg.seed);
    cfg.random_words = a.words.unwrap_or(cfg.random_words);
    cfg.measure_trials = a.trials.unwrap_or(cfg.measure_trials);
    cfg.exhaustive_max = a.exhaustive.unwrap_or(cfg.exhaustive_max);
    let reports = run_property_suite(&Scope(suites), &cfg)?;
    for r in &reports {
        let stat = r
            .statistic
            .map_or(String::new(), |s| format!(", statistic {s:.5}"));
        println!(
            "{} {}: {} cases, {} failures{stat}",
            if r.pass { "PASS" } else { "FAIL" },
            r.suite,
            r.cases,
            r.failures
        );
        if let Some(f) = &r.first_failure {
            println!("  first failure: {f}");
        }
    }
    if let Some(path) = &a.out {
        std::fs::write(path, serde_json::to_vec_pretty(&reports)?)
            .map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Paths(a) => experiment(Experiment::Paths, a),
        Command::ThetaDist(a) => experiment(Experiment::ThetaDist, a),
        Command::Frequencies(a) => experiment(Experiment::Frequencies, a),
        Command::Invert(a) => experiment(Experiment::Invert, a),
        Command::LimitShapeGrid(a) => experiment(Experiment::LimitShapeGrid, a),
        Command::Pitman(a) => experiment(Experiment::Pitman, a),
        Command::S2(a) => experiment(Experiment::S2, a),
        Command::Check(a) => check(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

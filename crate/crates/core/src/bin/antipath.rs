use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use antipath::harness::{self, Construction, ExperimentConfig, HarnessError, Mode, OutputFormat};

#[derive(Parser)]
#[command(
    name = "antipath",
    version,
    about = "Antidirected path search and verification campaigns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample graphs above the degree threshold and search every antipath shape of length k
    VerifyTheorem(Common),
    /// Check the directed-triangle blow-up with blobs of size k/2
    Tightness(Common),
    /// Check the small-graph lemma statements on every labelled oriented graph
    ExhaustiveLemmas(Common),
    /// Audit oracle-longest antipaths of sampled graphs
    Audit(Common),
    /// Run the oracle and the rotation heuristic on one graph
    Search(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// blowup:ELL,B | random:P | min-pd:D
    #[arg(long)]
    construction: Option<String>,
    /// Smallest k for exhaustive-lemmas (default 4)
    #[arg(long)]
    k_min: Option<usize>,
    /// Largest k for exhaustive-lemmas (default 2n)
    #[arg(long)]
    k_max: Option<usize>,
    /// Edge-list file: "n m" then m lines "u v"
    #[arg(long)]
    input: Option<PathBuf>,
    /// json | csv
    #[arg(long, default_value = "json")]
    format: String,
    /// Write records here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the searched graph as DOT with the witness highlighted
    #[arg(long)]
    dot: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Record wall-clock time per trial (breaks byte-reproducibility)
    #[arg(long)]
    timing: bool,
    /// Densification rounds for the pd-targeted generator
    #[arg(long, default_value_t = 100)]
    max_attempts: usize,
}

fn config(mode: Mode, c: Common) -> Result<ExperimentConfig, HarnessError> {
    let mut cfg = ExperimentConfig::new(mode);
    cfg.k = c.k;
    cfg.n = c.n;
    cfg.samples = c.samples;
    cfg.seed = c.seed;
    cfg.construction = c
        .construction
        .as_deref()
        .map(str::parse::<Construction>)
        .transpose()?;
    cfg.k_min = c.k_min;
    cfg.k_max = c.k_max;
    cfg.input = c.input;
    cfg.format = c.format.parse::<OutputFormat>()?;
    cfg.out = c.out;
    cfg.dot = c.dot;
    cfg.jobs = c.jobs;
    cfg.timing = c.timing;
    cfg.max_attempts = c.max_attempts;
    Ok(cfg)
}

fn execute(cli: Cli) -> Result<i32, HarnessError> {
    let (mode, common) = match cli.command {
        Command::VerifyTheorem(c) => (Mode::VerifyTheorem, c),
        Command::Tightness(c) => (Mode::Tightness, c),
        Command::ExhaustiveLemmas(c) => (Mode::ExhaustiveLemmas, c),
        Command::Audit(c) => (Mode::Audit, c),
        Command::Search(c) => (Mode::Search, c),
    };
    let cfg = config(mode, common)?;
    let outcome = harness::run(&cfg)?;

    match &cfg.out {
        Some(path) => harness::write_records(
            &outcome.records,
            cfg.format,
            BufWriter::new(File::create(path)?),
        )?,
        None => harness::write_records(&outcome.records, cfg.format, io::stdout().lock())?,
    }
    if let (Some(path), Some(dot)) = (&cfg.dot, &outcome.dot) {
        File::create(path)?.write_all(dot.as_bytes())?;
    }

    eprintln!(
        "{}: records {}, failures {}",
        mode.name(),
        outcome.records.len(),
        outcome.failures()
    );
    for r in outcome.records.iter().filter(|r| !r.passed) {
        eprintln!(
            "  trial {}: {}",
            r.trial,
            r.failure.as_deref().unwrap_or("failed")
        );
    }
    Ok(outcome.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

//! Verification campaigns: sampling, exhaustive enumeration, auditing and
//! single-graph search, each producing a stream of [`TrialRecord`]s.
//!
//! Trials are independent and run on a rayon pool of `jobs` threads. Trial
//! `t` draws its graph from `trial_seed(seed, t)` and results are collected
//! by trial index, so the record stream does not depend on `jobs`.

mod config;
mod record;

use std::ops::ControlFlow;
use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

pub use config::{Construction, ExperimentConfig, Mode, OutputFormat};
pub use record::{
    decode_arcs, encode_arcs, read_csv_records, read_json_records, write_records, TrialRecord,
};

use crate::antiwalk::{antipath_shapes, Direction};
use crate::constructions::{
    cycle_blowup, integer_threshold, random_oriented_graph, random_with_min_pd, trial_seed,
    ConstructionError,
};
use crate::graph::{OrientedGraph, ParseError};
use crate::oracle::{
    contains_antipath_of_length, for_each_antipath_of_length, longest_anticycle_at_most,
    longest_antipath, oriented_graph_at, oriented_graph_count, OracleError,
};
use crate::rotation::{greedy_antipath, improve, RotationState, Violation};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("config: {0}")]
    Config(String),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl HarnessError {
    /// Process exit code: 2 for configuration and input problems.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

/// Records of one run plus the tally the exit code is derived from.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub records: Vec<TrialRecord>,
    /// Dot rendering of the search result, when one was requested.
    pub dot: Option<String>,
}

impl RunOutcome {
    pub fn failures(&self) -> usize {
        self.records.iter().filter(|r| !r.passed).count()
    }

    /// 0 if every trial passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.failures() > 0)
    }
}

pub fn run(cfg: &ExperimentConfig) -> Result<RunOutcome, HarnessError> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| HarnessError::Config(format!("thread pool: {e}")))?;
    pool.install(|| match cfg.mode {
        Mode::VerifyTheorem => run_verify_theorem(cfg).map(plain),
        Mode::Tightness => run_tightness(cfg).map(|r| plain(vec![r])),
        Mode::ExhaustiveLemmas => run_exhaustive_lemmas(cfg).map(plain),
        Mode::Audit => run_audit(cfg).map(plain),
        Mode::Search => run_search(cfg),
    })
}

fn plain(records: Vec<TrialRecord>) -> RunOutcome {
    RunOutcome { records, dot: None }
}

fn timed<F>(cfg: &ExperimentConfig, f: F) -> Result<TrialRecord, HarnessError>
where
    F: FnOnce() -> Result<TrialRecord, HarnessError>,
{
    let t0 = Instant::now();
    let mut r = f()?;
    if cfg.timing {
        r.wall_ms = Some(t0.elapsed().as_millis() as u64);
    }
    Ok(r)
}

/// Runs `trial` for `0..count` on the current pool, in trial order.
fn par_trials<F>(count: u64, trial: F) -> Result<Vec<TrialRecord>, HarnessError>
where
    F: Fn(u64) -> Result<TrialRecord, HarnessError> + Sync + Send,
{
    (0..count).into_par_iter().map(trial).collect()
}

/// The sampling construction for `verify-theorem` and `audit`.
fn sampling_construction(cfg: &ExperimentConfig, k: usize) -> Result<Construction, HarnessError> {
    Ok(cfg.construction.unwrap_or(Construction::MinPd {
        d: integer_threshold(k)?,
    }))
}

fn build_graph(
    cfg: &ExperimentConfig,
    c: Construction,
    seed: u64,
) -> Result<OrientedGraph, HarnessError> {
    let n = || {
        cfg.n
            .ok_or_else(|| HarnessError::Config(format!("{c} needs --n")))
    };
    Ok(match c {
        Construction::Blowup { ell, b } => cycle_blowup(ell, b)?,
        Construction::Random { p } => random_oriented_graph(n()?, p, seed)?,
        Construction::MinPd { d } => random_with_min_pd(n()?, d, seed, cfg.max_attempts)?,
    })
}

/// The lemma-parity fact: with `2 pd >= k`, a longest antipath shorter than
/// `k` has odd length.
fn check_parity(r: &mut TrialRecord, k: usize) {
    if let Some(m) = r.longest {
        if 2 * r.pd >= k && m < k {
            r.checks += 1;
            if m % 2 == 0 {
                r.fail(format!(
                    "longest antipath {m} < k = {k} is even with pd = {}",
                    r.pd
                ));
            }
        }
    }
}

fn shape_list(k: usize) -> Vec<Direction> {
    match antipath_shapes(k) {
        Ok(1) => vec![Direction::Forward],
        _ => vec![Direction::Forward, Direction::Backward],
    }
}

/// Samples graphs with `pd >= integer_threshold(k)` and looks for every
/// antipath shape of length `k`.
pub fn run_verify_theorem(cfg: &ExperimentConfig) -> Result<Vec<TrialRecord>, HarnessError> {
    cfg.validate()?;
    let k = cfg.k.expect("validated");
    let d = integer_threshold(k)?;
    let c = sampling_construction(cfg, k)?;
    par_trials(cfg.samples as u64, |t| {
        timed(cfg, || {
            let seed = trial_seed(cfg.seed, t);
            let g = build_graph(cfg, c, seed)?;
            let mut r =
                TrialRecord::new(Mode::VerifyTheorem.name(), cfg.seed, t, c.to_string(), &g);
            r.seed = Some(seed);
            r.k = Some(k);
            let hypothesis = r.pd >= d;
            r.hypothesis = Some(hypothesis);

            for (idx, shape) in shape_list(k).into_iter().enumerate() {
                let found = contains_antipath_of_length(&g, k, Some(shape));
                if let Some(w) = &found {
                    if let Err(e) = w.revalidate(&g) {
                        r.fail(format!("witness {w} does not revalidate: {e}"));
                    }
                }
                let slot = if idx == 0 {
                    &mut r.shape_forward
                } else {
                    &mut r.shape_backward
                };
                *slot = Some(found.is_some());
                if hypothesis {
                    r.checks += 1;
                    if found.is_none() {
                        r.fail(format!(
                            "pd = {} >= {d} but no antipath of length {k} starting {shape:?}",
                            r.pd
                        ));
                    }
                }
            }

            let best = longest_antipath(&g);
            r.longest = Some(best.as_ref().map_or(0, |w| w.len()));
            r.witness = best.map(|w| w.to_string());
            check_parity(&mut r, k);
            Ok(r)
        })
    })
}

/// The directed-triangle blow-up with blobs of size `k/2`.
pub fn run_tightness(cfg: &ExperimentConfig) -> Result<TrialRecord, HarnessError> {
    cfg.validate()?;
    let k = cfg.k.expect("validated");
    let half = k / 2;
    let c = Construction::Blowup { ell: 3, b: half };
    timed(cfg, || {
        let g = build_graph(cfg, c, cfg.seed)?;
        let mut r = TrialRecord::new(Mode::Tightness.name(), cfg.seed, 0, c.to_string(), &g);
        r.k = Some(k);
        r.hypothesis = Some(r.pd >= integer_threshold(k)?);
        let best = longest_antipath(&g);
        let m = best.as_ref().map_or(0, |w| w.len());
        r.longest = Some(m);
        r.witness = best.map(|w| w.to_string());
        r.shape_forward =
            Some(contains_antipath_of_length(&g, k, Some(Direction::Forward)).is_some());
        r.shape_backward =
            Some(contains_antipath_of_length(&g, k, Some(Direction::Backward)).is_some());
        r.checks = 3;
        if r.pd != half {
            r.fail(format!("expected pd = {half}, got {}", r.pd));
        }
        if m != k - 1 {
            r.fail(format!("expected longest antipath {}, got {m}", k - 1));
        }
        if r.shape_forward == Some(true) || r.shape_backward == Some(true) {
            r.fail(format!("blow-up contains an antipath of length {k}"));
        }
        check_parity(&mut r, k);
        Ok(r)
    })
}

/// Every labelled oriented graph on `n <= 5` vertices against the parity,
/// anticycle and endpoint-neighbourhood statements, for each `k` in range.
pub fn run_exhaustive_lemmas(cfg: &ExperimentConfig) -> Result<Vec<TrialRecord>, HarnessError> {
    cfg.validate()?;
    let n = cfg.n.expect("validated");
    let (k_lo, k_hi) = cfg.k_range()?;
    par_trials(oriented_graph_count(n), |index| {
        timed(cfg, || {
            let g = oriented_graph_at(n, index);
            let mut r = TrialRecord::new(
                Mode::ExhaustiveLemmas.name(),
                cfg.seed,
                index,
                format!("enumerate:{n}"),
                &g,
            );
            let best = longest_antipath(&g);
            let m = best.as_ref().map_or(0, |w| w.len());
            r.longest = Some(m);
            r.witness = best.map(|w| w.to_string());
            let pd = r.pd;

            for k in k_lo..=k_hi {
                check_parity(&mut r, k);

                if 2 * pd > k {
                    if let Some(c) = longest_anticycle_at_most(&g, k) {
                        r.checks += 1;
                        r.anticycle = Some(r.anticycle.unwrap_or(0).max(c.len()));
                        if c.len() % 2 == 1 || c.len() < 4 {
                            r.fail(format!("emitted anticycle {c} has bad length"));
                        }
                        if m < c.len() {
                            r.fail(format!(
                                "k = {k}: anticycle of length {} but longest antipath {m}",
                                c.len()
                            ));
                        }
                    }
                }

                if 2 * pd >= k && m < k && m >= 1 {
                    r.checks += 1;
                    if !endpoint_neighbourhood_holds(&g, m, pd, k) {
                        r.fail(format!(
                            "k = {k}: no longest antipath has v1 with >= pd - k/2 outside \
                             in-neighbours or v(m-1) with as many outside out-neighbours"
                        ));
                    }
                }
            }
            Ok(r)
        })
    })
}

/// Some longest antipath `v_0 … v_m` with `v_0 -> v_1` has `v_1` with at
/// least `pd - k/2` in-neighbours off the path, or `v_{m-1}` with at least
/// that many out-neighbours off the path.
fn endpoint_neighbourhood_holds(g: &OrientedGraph, m: usize, pd: usize, k: usize) -> bool {
    let need2 = 2 * pd as i64 - k as i64;
    let mut on_path = vec![false; g.vertex_count()];
    let flow = for_each_antipath_of_length(g, m, |seq, start| {
        if start != Direction::Forward {
            return ControlFlow::Continue(());
        }
        for &v in seq {
            on_path[v] = true;
        }
        let off = |nbrs: &[usize]| nbrs.iter().filter(|&&x| !on_path[x]).count() as i64;
        let ok = 2 * off(g.in_neighbors(seq[1])) >= need2
            || 2 * off(g.out_neighbors(seq[m - 1])) >= need2;
        for &v in seq {
            on_path[v] = false;
        }
        if ok {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    flow.is_break()
}

/// Oracle-longest antipaths of sampled graphs, run through the claim auditor.
pub fn run_audit(cfg: &ExperimentConfig) -> Result<Vec<TrialRecord>, HarnessError> {
    cfg.validate()?;
    let k = cfg.k.expect("validated");
    let d = integer_threshold(k)?;
    let c = sampling_construction(cfg, k)?;
    par_trials(cfg.samples as u64, |t| {
        timed(cfg, || {
            let seed = trial_seed(cfg.seed, t);
            let g = build_graph(cfg, c, seed)?;
            let mut r = TrialRecord::new(Mode::Audit.name(), cfg.seed, t, c.to_string(), &g);
            r.seed = Some(seed);
            r.k = Some(k);
            let hypothesis = r.pd >= d;
            r.hypothesis = Some(hypothesis);

            let Some(best) = longest_antipath(&g) else {
                r.longest = Some(0);
                r.audit_skipped = Some("no arcs".into());
                return Ok(r);
            };
            let m = best.len();
            r.longest = Some(m);
            r.witness = Some(best.to_string());
            check_parity(&mut r, k);
            if hypothesis {
                r.checks += 1;
                if m < k {
                    r.fail(format!(
                        "pd = {} >= {d} but longest antipath is {m} < {k}",
                        r.pd
                    ));
                }
            }

            let state = match RotationState::build(&g, &best) {
                Ok(s) => s,
                Err(e) => {
                    r.audit_skipped = Some(e.to_string());
                    return Ok(r);
                }
            };
            let report = state.audit_claims(k);
            r.checks += 1;
            r.audit_forbidden_pairs = Some(report.count("forbidden-pair"));
            r.audit_violations = Some(report.violations.len());
            r.audit_contradiction =
                Some(report.counting.upper_bound_applies && report.counting.bounds_contradict);
            for v in report.maximality_violations() {
                let longer = v.longer_path().expect("maximality violation");
                r.fail(format!(
                    "{} on an oracle-longest path of length {m}: {longer}",
                    v.claim_id()
                ));
            }
            if hypothesis
                && m < k
                && report
                    .violations
                    .iter()
                    .any(|v| matches!(v, Violation::CountingUpperBound { .. }))
            {
                r.fail("counting bound exceeded on a short longest path");
            }
            Ok(r)
        })
    })
}

/// Oracle and heuristic on one user-supplied or constructed graph.
pub fn run_search(cfg: &ExperimentConfig) -> Result<RunOutcome, HarnessError> {
    cfg.validate()?;
    let (g, label) = match (&cfg.input, cfg.construction) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)?;
            (
                text.parse::<OrientedGraph>()?,
                format!("input:{}", path.display()),
            )
        }
        (None, Some(c)) => (build_graph(cfg, c, cfg.seed)?, c.to_string()),
        (None, None) => unreachable!("validated"),
    };
    let mut dot = None;
    let record = timed(cfg, || {
        let mut r = TrialRecord::new(Mode::Search.name(), cfg.seed, 0, label.clone(), &g);
        r.k = cfg.k;
        let best = longest_antipath(&g);
        let m = best.as_ref().map(|w| w.len());
        r.longest = m;
        r.witness = best.as_ref().map(|w| w.to_string());

        if let Some(seed_path) = greedy_antipath(&g) {
            let h = improve(&g, &seed_path).expect("greedy path is valid");
            r.checks += 1;
            if Some(h.len()) > m {
                r.fail(format!("heuristic {h} longer than the oracle optimum"));
            }
            if let Err(e) = h.revalidate(&g) {
                r.fail(format!("heuristic witness invalid: {e}"));
            }
            r.heuristic = Some(h.len());
            r.heuristic_witness = Some(h.to_string());
        }

        if let Some(k) = cfg.k {
            if k >= 1 {
                let shapes = shape_list(k);
                r.shape_forward =
                    Some(contains_antipath_of_length(&g, k, Some(shapes[0])).is_some());
                if shapes.len() > 1 {
                    r.shape_backward =
                        Some(contains_antipath_of_length(&g, k, Some(shapes[1])).is_some());
                }
                if k >= 4 {
                    r.hypothesis = Some(r.pd >= integer_threshold(k)?);
                }
                check_parity(&mut r, k);
            }
        }
        if cfg.dot.is_some() {
            dot = Some(g.to_dot(best.as_ref().map(|w| w.vertices())));
        }
        Ok(r)
    })?;
    Ok(RunOutcome {
        records: vec![record],
        dot,
    })
}

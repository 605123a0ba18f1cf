use std::io::{self, BufRead, Write};

use serde::{Deserialize, Serialize};

use super::config::OutputFormat;
use super::HarnessError;
use crate::graph::OrientedGraph;

/// One trial of a verification run. Flat so that the JSON and CSV encodings
/// carry exactly the same fields.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub mode: String,
    pub run_seed: u64,
    pub trial: u64,
    /// Seed handed to the generator for this trial, if it was sampled.
    pub seed: Option<u64>,
    pub k: Option<usize>,
    pub n: usize,
    pub construction: String,
    /// 16 hex digits, see [`OrientedGraph::stable_hash`].
    pub graph_hash: String,
    /// Arcs as `u>v` tokens separated by spaces, sorted.
    pub arcs: String,
    pub arc_count: usize,
    pub pd: usize,
    pub min_semidegree: usize,
    /// Whether `pd >= integer_threshold(k)`.
    pub hypothesis: Option<bool>,
    pub longest: Option<usize>,
    pub witness: Option<String>,
    /// Length-`k` antipath found, starting forward / backward. Odd `k` has a
    /// single shape and only fills the first.
    pub shape_forward: Option<bool>,
    pub shape_backward: Option<bool>,
    pub heuristic: Option<usize>,
    pub heuristic_witness: Option<String>,
    pub anticycle: Option<usize>,
    /// Number of individual statement checks that applied to this trial.
    pub checks: u64,
    pub audit_forbidden_pairs: Option<usize>,
    pub audit_violations: Option<usize>,
    pub audit_contradiction: Option<bool>,
    pub audit_skipped: Option<String>,
    pub passed: bool,
    pub failure: Option<String>,
    pub wall_ms: Option<u64>,
}

impl TrialRecord {
    pub fn new(
        mode: &str,
        run_seed: u64,
        trial: u64,
        construction: String,
        g: &OrientedGraph,
    ) -> Self {
        let profile = g.degree_profile();
        Self {
            mode: mode.to_string(),
            run_seed,
            trial,
            seed: None,
            k: None,
            n: g.vertex_count(),
            construction,
            graph_hash: format!("{:016x}", g.stable_hash()),
            arcs: encode_arcs(g),
            arc_count: g.arc_count(),
            pd: profile.pd(),
            min_semidegree: profile.min_semidegree,
            hypothesis: None,
            longest: None,
            witness: None,
            shape_forward: None,
            shape_backward: None,
            heuristic: None,
            heuristic_witness: None,
            anticycle: None,
            checks: 0,
            audit_forbidden_pairs: None,
            audit_violations: None,
            audit_contradiction: None,
            audit_skipped: None,
            passed: true,
            failure: None,
            wall_ms: None,
        }
    }

    /// Marks the trial failed, keeping earlier failure messages.
    pub fn fail(&mut self, why: impl Into<String>) {
        self.passed = false;
        let why = why.into();
        self.failure = Some(match self.failure.take() {
            Some(prev) => format!("{prev}; {why}"),
            None => why,
        });
    }

    /// Rebuilds the host graph from the stored arc list.
    pub fn graph(&self) -> Result<OrientedGraph, HarnessError> {
        let arcs = decode_arcs(&self.arcs)?;
        OrientedGraph::from_arcs(self.n, arcs)
            .map_err(|e| HarnessError::Config(format!("record arcs invalid: {e}")))
    }
}

pub fn encode_arcs(g: &OrientedGraph) -> String {
    g.arcs()
        .map(|(u, v)| format!("{u}>{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn decode_arcs(s: &str) -> Result<Vec<(usize, usize)>, HarnessError> {
    s.split_whitespace()
        .map(|tok| {
            let (u, v) = tok
                .split_once('>')
                .ok_or_else(|| HarnessError::Config(format!("bad arc token {tok:?}")))?;
            let parse = |x: &str| {
                x.parse::<usize>()
                    .map_err(|_| HarnessError::Config(format!("bad arc token {tok:?}")))
            };
            Ok((parse(u)?, parse(v)?))
        })
        .collect()
}

pub fn write_records<W: Write>(
    records: &[TrialRecord],
    format: OutputFormat,
    mut out: W,
) -> Result<(), HarnessError> {
    match format {
        OutputFormat::Json => {
            for r in records {
                serde_json::to_writer(&mut out, r)?;
                out.write_all(b"\n")?;
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            for r in records {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    out.flush()?;
    Ok(())
}

pub fn read_json_records<R: BufRead>(input: R) -> Result<Vec<TrialRecord>, HarnessError> {
    input
        .lines()
        .filter(|l| l.as_ref().map_or(true, |l| !l.trim().is_empty()))
        .map(|l| Ok(serde_json::from_str(&l?)?))
        .collect()
}

pub fn read_csv_records<R: io::Read>(input: R) -> Result<Vec<TrialRecord>, HarnessError> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|r| r.map_err(HarnessError::from))
        .collect()
}

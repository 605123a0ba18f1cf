use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::constructions::integer_threshold;
use crate::oracle::DEFAULT_ENUMERATION_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    VerifyTheorem,
    Tightness,
    ExhaustiveLemmas,
    Audit,
    Search,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::VerifyTheorem => "verify-theorem",
            Mode::Tightness => "tightness",
            Mode::ExhaustiveLemmas => "exhaustive-lemmas",
            Mode::Audit => "audit",
            Mode::Search => "search",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(HarnessError::Config(format!("unknown format {other:?}"))),
        }
    }
}

/// A named generator with its parameters, written `name:params` on the
/// command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Construction {
    /// `blowup:ELL,B`
    Blowup { ell: usize, b: usize },
    /// `random:P`, on `--n` vertices.
    Random { p: f64 },
    /// `min-pd:D`, on `--n` vertices.
    MinPd { d: usize },
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Blowup { ell, b } => write!(f, "blowup:{ell},{b}"),
            Construction::Random { p } => write!(f, "random:{p}"),
            Construction::MinPd { d } => write!(f, "min-pd:{d}"),
        }
    }
}

impl FromStr for Construction {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HarnessError::Config(format!("bad construction {s:?}"));
        let (name, params) = s.split_once(':').ok_or_else(bad)?;
        match name {
            "blowup" => {
                let (ell, b) = params.split_once(',').ok_or_else(bad)?;
                Ok(Self::Blowup {
                    ell: ell.trim().parse().map_err(|_| bad())?,
                    b: b.trim().parse().map_err(|_| bad())?,
                })
            }
            "random" => {
                let p: f64 = params.trim().parse().map_err(|_| bad())?;
                if !(0.0..=1.0).contains(&p) {
                    return Err(bad());
                }
                Ok(Self::Random { p })
            }
            "min-pd" => Ok(Self::MinPd {
                d: params.trim().parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub mode: Mode,
    pub k: Option<usize>,
    pub n: Option<usize>,
    pub samples: usize,
    pub seed: u64,
    pub construction: Option<Construction>,
    /// Range of `k` for the exhaustive lemma checks; defaults to `4..=2n`.
    pub k_min: Option<usize>,
    pub k_max: Option<usize>,
    pub input: Option<PathBuf>,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub dot: Option<PathBuf>,
    pub jobs: usize,
    /// Add wall-clock times to records. Off by default so that record
    /// streams are byte-reproducible.
    pub timing: bool,
    pub max_attempts: usize,
    pub enumeration_cap: usize,
}

impl ExperimentConfig {
    pub fn new(mode: Mode) -> Self {
        Self {
            mode,
            k: None,
            n: None,
            samples: 100,
            seed: 0,
            construction: None,
            k_min: None,
            k_max: None,
            input: None,
            format: OutputFormat::Json,
            out: None,
            dot: None,
            jobs: 1,
            timing: false,
            max_attempts: 100,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn with_construction(mut self, c: Construction) -> Self {
        self.construction = Some(c);
        self
    }

    fn require_k(&self) -> Result<usize, HarnessError> {
        self.k
            .ok_or_else(|| HarnessError::Config(format!("{} needs --k", self.mode.name())))
    }

    fn require_n(&self) -> Result<usize, HarnessError> {
        self.n
            .ok_or_else(|| HarnessError::Config(format!("{} needs --n", self.mode.name())))
    }

    /// Inclusive range of `k` checked by the exhaustive mode.
    pub fn k_range(&self) -> Result<(usize, usize), HarnessError> {
        let n = self.require_n()?;
        let lo = self.k_min.unwrap_or(4);
        let hi = self.k_max.unwrap_or(2 * n).max(lo);
        if lo == 0 {
            return Err(HarnessError::Config("--k-min must be positive".into()));
        }
        Ok((lo, hi))
    }

    /// Checks that everything the mode needs is present and consistent,
    /// before any work starts.
    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.jobs == 0 {
            return Err(HarnessError::Config("--jobs must be at least 1".into()));
        }
        match self.mode {
            Mode::VerifyTheorem | Mode::Audit => {
                let k = self.require_k()?;
                if k < 4 {
                    return Err(HarnessError::Config(format!(
                        "--k must be at least 4, got {k}"
                    )));
                }
                match self.construction {
                    Some(Construction::Blowup { ell, b }) if ell < 3 || b == 0 => {
                        return Err(HarnessError::Config("blowup needs ELL >= 3, B >= 1".into()));
                    }
                    Some(Construction::Blowup { .. }) => {}
                    other => {
                        let n = self.require_n()?;
                        if n <= k {
                            return Err(HarnessError::Config(format!(
                                "--n must exceed --k (n = {n}, k = {k})"
                            )));
                        }
                        let d = match other {
                            Some(Construction::MinPd { d }) => d,
                            Some(_) => 1,
                            None => integer_threshold(k)?,
                        };
                        if d == 0 || n < 2 * d + 1 {
                            return Err(HarnessError::Config(format!(
                                "need n >= 2d + 1 for pd target d = {d} (n = {n})"
                            )));
                        }
                    }
                }
            }
            Mode::Tightness => {
                let k = self.require_k()?;
                if k < 4 || k % 2 == 1 {
                    return Err(HarnessError::Config(format!(
                        "tightness needs an even k >= 4, got {k}"
                    )));
                }
            }
            Mode::ExhaustiveLemmas => {
                let n = self.require_n()?;
                if n > self.enumeration_cap {
                    return Err(crate::oracle::OracleError::CapExceeded {
                        n,
                        cap: self.enumeration_cap,
                    }
                    .into());
                }
                self.k_range()?;
            }
            Mode::Search => {
                if self.input.is_none() && self.construction.is_none() {
                    return Err(HarnessError::Config(
                        "search needs --input or --construction".into(),
                    ));
                }
                if matches!(
                    self.construction,
                    Some(Construction::Random { .. } | Construction::MinPd { .. })
                ) && self.input.is_none()
                {
                    self.require_n()?;
                }
            }
        }
        Ok(())
    }
}

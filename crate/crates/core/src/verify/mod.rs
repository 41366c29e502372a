//! Randomized verification of every inequality and identity the library
//! relies on.
//!
//! Each registered check draws random inputs, evaluates one or more
//! inequalities and reports the smallest margin ("slack"): `rhs − lhs` for an
//! inequality `lhs ≤ rhs`, `−|a − b|` for an identity. A trial is a violation
//! when its slack falls below `−tolerance`.
//!
//! Trial `k` of check `c` at dimension `d` draws from
//! `trial_rng(seed, [hash(c), d, k])`, so results do not depend on thread
//! scheduling, on which other checks run, or on their order.

mod checks;
mod properties;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{QsdError, Result};
use crate::hermitian::HermitianOperator;
use crate::io::StateFile;
use crate::random::trial_rng;

pub use checks::CHECKS;
pub use properties::{Property, PropertyKind, PROPERTIES};

/// Default absolute slack allowed on inequalities.
pub const DEFAULT_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_SEED: u64 = 42;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Frechet,
    Ensemble,
    Sim,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Frechet => "frechet",
            Suite::Ensemble => "ensemble",
            Suite::Sim => "sim",
        }
    }
}

/// `all` or a single suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteSelection {
    All,
    Only(Suite),
}

impl SuiteSelection {
    pub fn includes(self, s: Suite) -> bool {
        match self {
            SuiteSelection::All => true,
            SuiteSelection::Only(x) => x == s,
        }
    }
}

impl fmt::Display for SuiteSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuiteSelection::All => f.write_str("all"),
            SuiteSelection::Only(s) => f.write_str(s.name()),
        }
    }
}

impl FromStr for SuiteSelection {
    type Err = QsdError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => SuiteSelection::All,
            "core" => SuiteSelection::Only(Suite::Core),
            "frechet" => SuiteSelection::Only(Suite::Frechet),
            "ensemble" => SuiteSelection::Only(Suite::Ensemble),
            "sim" => SuiteSelection::Only(Suite::Sim),
            other => return Err(QsdError::Format(format!("unknown suite \"{other}\""))),
        })
    }
}

/// Where a check takes its tolerance from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Tolerance {
    /// The run-wide value (`--tol`).
    Global,
    /// A value tied to the statement itself.
    Fixed(f64),
}

impl Tolerance {
    pub fn resolve(self, global: f64) -> f64 {
        match self {
            Tolerance::Global => global,
            Tolerance::Fixed(t) => t,
        }
    }
}

/// Result of one random instance.
#[derive(Clone, Debug)]
pub struct Trial {
    pub slack: f64,
    pub inputs: TrialInputs,
}

impl Trial {
    pub fn new(slack: f64, inputs: TrialInputs) -> Self {
        Self { slack, inputs }
    }
}

/// Named operators a trial was drawn from.
pub type TrialInputs = Vec<(&'static str, HermitianOperator)>;

pub type CheckFn = fn(&mut ChaCha8Rng, usize) -> Result<Trial>;

pub struct CheckSpec {
    pub id: &'static str,
    /// The statement under test, as an inequality or identity.
    pub label: &'static str,
    pub suite: Suite,
    pub tolerance: Tolerance,
    /// Ids from [`PROPERTIES`] this check exercises.
    pub covers: &'static [&'static str],
    /// Dimensions below this are skipped.
    pub min_dim: usize,
    pub run: CheckFn,
}

impl fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckSpec").field("id", &self.id).field("suite", &self.suite).finish()
    }
}

pub fn find_check(id: &str) -> Option<&'static CheckSpec> {
    CHECKS.iter().find(|c| c.id == id)
}

/// Panics unless every property is covered by some check and every check
/// refers only to known properties.
pub fn assert_registry_complete() {
    let mut ids = std::collections::HashSet::new();
    for c in CHECKS {
        assert!(ids.insert(c.id), "duplicate check id {}", c.id);
        assert!(!c.covers.is_empty(), "check {} covers no property", c.id);
        for p in c.covers {
            assert!(PROPERTIES.iter().any(|q| q.id == *p), "check {} refers to unknown property {p}", c.id);
        }
    }
    for p in PROPERTIES {
        assert!(CHECKS.iter().any(|c| c.covers.contains(&p.id)), "property {} has no check", p.id);
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub suite: SuiteSelection,
    pub dims: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub tolerance: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            suite: SuiteSelection::All,
            dims: vec![2, 3, 4],
            trials: 200,
            seed: DEFAULT_SEED,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NamedState {
    pub name: String,
    pub state: StateFile,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WorstCase {
    pub dim: usize,
    pub trial: usize,
    pub inputs: Vec<NamedState>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub label: String,
    pub suite: Suite,
    pub covers: Vec<String>,
    pub tolerance: f64,
    pub trials: usize,
    /// `None` only if no trial completed.
    pub worst_slack: Option<f64>,
    pub violations: usize,
    /// Trials that returned an error instead of a value.
    pub errors: usize,
    pub first_error: Option<String>,
    /// Present only when there are violations.
    pub worst_case_inputs: Option<WorstCase>,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.errors == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub dims: Vec<usize>,
    pub trials: usize,
    pub tolerance: f64,
    pub checks: Vec<CheckRecord>,
    /// Property id to the checks that exercise it.
    pub properties: BTreeMap<String, Vec<String>>,
    pub violations: usize,
    pub errors: usize,
    pub passed: bool,
    pub wall_time: f64,
}

fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

enum Outcome {
    Value { slack: f64, dim: usize, trial: usize, inputs: TrialInputs },
    Failed(String),
}

/// Runs one check over `dims × trials` instances.
pub fn run_check(spec: &CheckSpec, dims: &[usize], trials: usize, seed: u64, global_tolerance: f64) -> CheckRecord {
    let tol = spec.tolerance.resolve(global_tolerance);
    let key = fnv1a(spec.id);
    let jobs: Vec<(usize, usize)> =
        dims.iter().filter(|d| **d >= spec.min_dim).flat_map(|&d| (0..trials).map(move |k| (d, k))).collect();
    let outcomes: Vec<Outcome> = jobs
        .par_iter()
        .map(|&(dim, trial)| {
            let mut rng = trial_rng(seed, &[key, dim as u64, trial as u64]);
            match (spec.run)(&mut rng, dim) {
                Ok(t) if t.slack.is_nan() => Outcome::Failed(format!("dim {dim} trial {trial}: slack is NaN")),
                Ok(t) => Outcome::Value { slack: t.slack, dim, trial, inputs: t.inputs },
                Err(e) => Outcome::Failed(format!("dim {dim} trial {trial}: {e}")),
            }
        })
        .collect();

    // sequential reduction in job order: ties keep the earliest trial
    let mut worst: Option<(f64, usize, usize, TrialInputs)> = None;
    let mut violations = 0;
    let mut errors = 0;
    let mut first_error = None;
    for o in outcomes {
        match o {
            Outcome::Value { slack, dim, trial, inputs } => {
                if slack < -tol {
                    violations += 1;
                }
                if worst.as_ref().is_none_or(|w| slack < w.0) {
                    worst = Some((slack, dim, trial, inputs));
                }
            }
            Outcome::Failed(msg) => {
                errors += 1;
                first_error.get_or_insert(msg);
            }
        }
    }
    let worst_slack = worst.as_ref().map(|w| w.0);
    let worst_case_inputs = match worst {
        Some((_, dim, trial, inputs)) if violations > 0 => Some(WorstCase {
            dim,
            trial,
            inputs: inputs
                .iter()
                .map(|(name, op)| NamedState { name: name.to_string(), state: StateFile::from_operator(op) })
                .collect(),
        }),
        _ => None,
    };
    CheckRecord {
        check_id: spec.id.to_string(),
        label: spec.label.to_string(),
        suite: spec.suite,
        covers: spec.covers.iter().map(|s| s.to_string()).collect(),
        tolerance: tol,
        trials: jobs.len(),
        worst_slack,
        violations,
        errors,
        first_error,
        worst_case_inputs,
    }
}

/// Runs every check in the selected suite.
pub fn run_verification(cfg: &VerifyConfig) -> Result<VerificationReport> {
    assert_registry_complete();
    if cfg.trials == 0 {
        return Err(QsdError::domain("trials must be at least 1"));
    }
    if cfg.dims.is_empty() || cfg.dims.contains(&0) {
        return Err(QsdError::domain("dimensions must be a nonempty list of positive integers"));
    }
    if !(cfg.tolerance.is_finite() && cfg.tolerance >= 0.0) {
        return Err(QsdError::domain("tolerance must be finite and non-negative"));
    }
    let start = Instant::now();
    let checks: Vec<CheckRecord> = CHECKS
        .iter()
        .filter(|c| cfg.suite.includes(c.suite))
        .map(|c| run_check(c, &cfg.dims, cfg.trials, cfg.seed, cfg.tolerance))
        .collect();
    let mut properties: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for c in &checks {
        for p in &c.covers {
            properties.entry(p.clone()).or_default().push(c.check_id.clone());
        }
    }
    let violations = checks.iter().map(|c| c.violations).sum();
    let errors = checks.iter().map(|c| c.errors).sum();
    Ok(VerificationReport {
        suite: cfg.suite.to_string(),
        seed: cfg.seed,
        dims: cfg.dims.clone(),
        trials: cfg.trials,
        tolerance: cfg.tolerance,
        passed: violations == 0 && errors == 0,
        checks,
        properties,
        violations,
        errors,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

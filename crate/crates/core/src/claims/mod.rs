//! Randomized audits of implications and equivalences between the
//! orthogonality relations and between conditions on linear maps.
//!
//! Each registered claim samples candidate inputs, evaluates a signed
//! `strength` (positive exactly when the inputs witness a failure), and
//! hill-climbs from promising trials. A claim is reported as a
//! counterexample only when its best witness, round-tripped through JSON and
//! evaluated afresh, still violates it.

mod registry;
mod sampling;
mod search;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relations::RelationId;
use crate::space::{Exponent, Matrix, NormSpec, Vector};

pub use search::{search_counterexample, Implication};

/// A strength must exceed this (in normalized units) to count as a violation.
pub const VIOLATION_FLOOR: f64 = 1e-9;

/// Family of norms a claim samples from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpaceKind {
    Lp { p: Exponent },
    /// `ℓp` with log-uniform random weights in `[0.1, 10]`.
    WeightedLp { p: Exponent },
    /// Inner product with a random SPD gram matrix.
    RandomIp,
    /// `factor · ‖·‖_p`.
    ScaledLp { p: Exponent, factor: f64 },
}

impl SpaceKind {
    pub fn lp(p: f64) -> Self {
        SpaceKind::Lp { p: Exponent::Finite(p) }
    }

    pub fn linf() -> Self {
        SpaceKind::Lp { p: Exponent::Infinity }
    }
}

/// Where a claim draws its inputs from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Universe {
    /// Inclusive dimension range.
    pub dims: (usize, usize),
    pub norm_specs: Vec<SpaceKind>,
    /// Second norm of each pair, index-aligned with `norm_specs`, for claims
    /// comparing two norms or mapping between two spaces.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub partner_specs: Vec<SpaceKind>,
    pub eps_grid: Vec<f64>,
}

pub const EPS_GRID: [f64; 7] = [0.01, 0.05, 0.1, 0.2, 0.3, 0.5, 0.8];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Random trials only.
    Sample,
    /// Random trials followed by extended local refinement.
    Optimize,
    /// Random trials with local refinement.
    Both,
}

/// A fully specified audit run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimSpec {
    pub id: String,
    pub statement: String,
    pub universe: Universe,
    pub trials: usize,
    pub seed: u64,
    pub mode: Mode,
}

impl ClaimSpec {
    /// Registered defaults for `id`.
    pub fn new(id: &str) -> Result<Self> {
        let def = registry::find(id)?;
        Ok(Self {
            id: def.id.to_string(),
            statement: def.statement.to_string(),
            universe: (def.universe)(),
            trials: def.default_trials,
            seed: 0,
            mode: Mode::Both,
        })
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidInput("trials must be at least 1".into()));
        }
        if let Some(e) = self.universe.eps_grid.iter().find(|e| !(0.0..1.0).contains(*e)) {
            return Err(Error::EpsilonOutOfRange(*e, "[0, 1)"));
        }
        let (lo, hi) = self.universe.dims;
        if lo == 0 || lo > hi {
            return Err(Error::InvalidInput("dimension range must satisfy 1 <= lo <= hi".into()));
        }
        if self.universe.norm_specs.is_empty() {
            return Err(Error::InvalidInput("universe has no norms".into()));
        }
        Ok(())
    }
}

/// Serialized inputs of one evaluation, enough to re-run it from scratch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub norm: NormSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub norm2: Option<NormSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Matrix>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, f64>,
    /// Margins recorded by the evaluation that produced this witness.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub margins: BTreeMap<String, f64>,
}

impl Witness {
    pub(crate) fn new(norm: NormSpec) -> Self {
        Self {
            norm,
            norm2: None,
            x: None,
            y: None,
            eps: None,
            matrix: None,
            params: BTreeMap::new(),
            margins: BTreeMap::new(),
        }
    }

    pub(crate) fn pair(norm: NormSpec, x: Vector, y: Vector) -> Self {
        Self { x: Some(x), y: Some(y), ..Self::new(norm) }
    }

    pub(crate) fn param(&self, key: &str) -> Result<f64> {
        self.params
            .get(key)
            .copied()
            .ok_or_else(|| Error::InvalidInput(format!("witness lacks parameter `{key}`")))
    }

    pub(crate) fn xy(&self) -> Result<(&Vector, &Vector)> {
        match (&self.x, &self.y) {
            (Some(x), Some(y)) => Ok((x, y)),
            _ => Err(Error::InvalidInput("witness lacks vectors".into())),
        }
    }

    pub(crate) fn epsilon(&self) -> Result<f64> {
        self.eps.ok_or_else(|| Error::InvalidInput("witness lacks epsilon".into()))
    }
}

/// Outcome of evaluating a claim on one witness.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evaluation {
    pub violated: bool,
    /// Whether the hypothesis of the claim held on this input.
    pub premise_held: bool,
    /// Positive exactly when the input is a (robust) failure of the claim.
    pub strength: f64,
    pub margins: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Confirmed,
    Counterexample,
    Inconclusive,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Confirmed => "confirmed",
            Status::Counterexample => "counterexample",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub id: String,
    pub status: Status,
    pub trials_run: usize,
    pub violations: usize,
    /// Trials on which the hypothesis held.
    pub premise_held: usize,
    /// Trials whose evaluation failed numerically and were skipped.
    pub skipped: usize,
    pub refinements: usize,
    /// Largest strength seen; `worst_witness` attains it (or, for a
    /// counterexample, is the strongest verified violation).
    pub worst_strength: f64,
    pub worst_witness: Option<Witness>,
    pub seed: u64,
    pub elapsed_ms: u64,
}

/// Registered claim ids in order.
pub fn claim_ids() -> Vec<&'static str> {
    registry::REGISTRY.iter().map(|d| d.id).collect()
}

/// Default specs of every registered claim.
pub fn registry_specs() -> Vec<ClaimSpec> {
    claim_ids().into_iter().map(|id| ClaimSpec::new(id).unwrap()).collect()
}

/// Runs one audit. Deterministic in everything except `elapsed_ms`.
pub fn run_claim(spec: &ClaimSpec) -> Result<ClaimReport> {
    spec.validate()?;
    let def = registry::find(&spec.id)?;
    let start = Instant::now();
    let mut report = search::run(def, spec);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Evaluates claim `id` on `witness` from scratch.
pub fn verify_witness(id: &str, witness: &Witness) -> Result<Evaluation> {
    (registry::find(id)?.evaluate)(witness)
}

/// Relations exercised by a claim, for documentation output.
pub fn claim_relations(id: &str) -> Result<Vec<RelationId>> {
    Ok(registry::find(id)?.relations.to_vec())
}

fn fmt_strength(s: f64) -> String {
    format!("{s:.3e}")
}

/// Summary table in GitHub markdown.
pub fn render_markdown(reports: &[ClaimReport]) -> String {
    let mut out = String::from(
        "| claim | status | trials | violations | premise held | worst strength | ms |\n\
         |---|---|---:|---:|---:|---:|---:|\n",
    );
    for r in reports {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} |",
            r.id,
            r.status.as_str(),
            r.trials_run,
            r.violations,
            r.premise_held,
            fmt_strength(r.worst_strength),
            r.elapsed_ms
        );
    }
    out
}

/// Same columns as [`render_markdown`], comma separated with a header row.
pub fn render_csv(reports: &[ClaimReport]) -> String {
    let mut out = String::from("id,status,trials_run,violations,premise_held,worst_strength,elapsed_ms\n");
    for r in reports {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{:e},{}",
            r.id,
            r.status.as_str(),
            r.trials_run,
            r.violations,
            r.premise_held,
            r.worst_strength,
            r.elapsed_ms
        );
    }
    out
}

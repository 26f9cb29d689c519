//! Trial loop with local refinement, and a generic implication falsifier.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::registry::{implication, part_of, relation_scale, ClaimDef};
use super::sampling::{perturb, refine_rng, sample_pair, trial_rng};
use super::{ClaimReport, ClaimSpec, Evaluation, Mode, Status, Universe, Witness};
use crate::error::Result;
use crate::relations::{evaluate, RelationId};
use crate::space::{Tolerance, Vector};

/// Trials per refinement block.
pub(crate) const BLOCK: usize = 1000;
/// Records before this in-block index are not refined.
const WARMUP: usize = 32;
const REFINE_STEPS: usize = 40;

struct Candidate {
    witness: Witness,
    eval: Evaluation,
}

/// Hill-climbs on `strength` from `start`, returning every improvement.
fn refine(
    evaluate: &dyn Fn(&Witness) -> Result<Evaluation>,
    start: &Candidate,
    rng: &mut ChaCha8Rng,
    steps: usize,
) -> Vec<Candidate> {
    let mut cur = Candidate { witness: start.witness.clone(), eval: start.eval.clone() };
    let mut found = Vec::new();
    let mut scale = 0.25;
    for _ in 0..steps {
        let w = perturb(&cur.witness, rng, scale);
        match evaluate(&w) {
            Ok(e) if e.strength > cur.eval.strength => {
                cur = Candidate { witness: w, eval: e };
                found.push(Candidate { witness: cur.witness.clone(), eval: cur.eval.clone() });
            }
            _ => scale = (scale * 0.8).max(1e-6),
        }
    }
    found
}

/// Re-evaluates the witness after a JSON round trip; `None` unless it still
/// violates.
fn reverify(evaluate: &dyn Fn(&Witness) -> Result<Evaluation>, w: &Witness) -> Option<(Witness, Evaluation)> {
    let json = serde_json::to_string(w).ok()?;
    let back: Witness = serde_json::from_str(&json).ok()?;
    let e = evaluate(&back).ok()?;
    e.violated.then_some((back, e))
}

/// Scales both vectors so that the smaller has norm 1, keeping the result
/// only if it still verifies.
fn normalize_scale(evaluate: &dyn Fn(&Witness) -> Result<Evaluation>, w: &Witness, e: &Evaluation) -> (Witness, Evaluation) {
    let keep = || (w.clone(), e.clone());
    let Ok((x, y)) = w.xy() else { return keep() };
    let m = w.norm.eval(x).min(w.norm.eval(y));
    if !(m > 0.0) || m == 1.0 {
        return keep();
    }
    let mut scaled = w.clone();
    scaled.x = Some(x.scaled(1.0 / m));
    scaled.y = Some(y.scaled(1.0 / m));
    match reverify(evaluate, &scaled) {
        Some(v) if e.violated => v,
        _ if !e.violated => match evaluate(&scaled) {
            Ok(se) => (scaled, se),
            Err(_) => keep(),
        },
        _ => keep(),
    }
}

fn with_margins(mut w: Witness, e: &Evaluation) -> Witness {
    w.margins = e.margins.clone();
    w
}

pub(crate) fn run(def: &ClaimDef, spec: &ClaimSpec) -> ClaimReport {
    let evaluate = def.evaluate;
    let steps = match spec.mode {
        Mode::Sample => 0,
        Mode::Both => REFINE_STEPS,
        Mode::Optimize => 4 * REFINE_STEPS,
    };
    let mut violations = 0;
    let mut premise_held = 0;
    let mut skipped = 0;
    let mut refinements = 0;
    let mut best: Option<Candidate> = None;
    let mut violators: Vec<Candidate> = Vec::new();
    let mut block_record = f64::NEG_INFINITY;

    let consider = |c: Candidate, best: &mut Option<Candidate>, violators: &mut Vec<Candidate>| {
        if best.as_ref().is_none_or(|b| c.eval.strength > b.eval.strength) {
            *best = Some(Candidate { witness: c.witness.clone(), eval: c.eval.clone() });
        }
        if c.eval.violated {
            violators.push(c);
        }
    };

    for i in 0..spec.trials {
        if i % BLOCK == 0 {
            block_record = f64::NEG_INFINITY;
        }
        let mut rng = trial_rng(spec.seed, &spec.id, i as u64);
        let w = (def.sample)(&spec.universe, &mut rng);
        let eval = match evaluate(&w) {
            Ok(e) => e,
            Err(_) => {
                skipped += 1;
                continue;
            }
        };
        if eval.premise_held {
            premise_held += 1;
        }
        if eval.violated {
            violations += 1;
        }
        let record = eval.strength > block_record;
        if record {
            block_record = eval.strength;
        }
        let cand = Candidate { witness: w, eval };
        if steps > 0 && record && i % BLOCK >= WARMUP.min(spec.trials / 2) {
            refinements += 1;
            let mut rrng = refine_rng(spec.seed, &spec.id, i as u64);
            let found = refine(&evaluate, &cand, &mut rrng, steps);
            if !cand.eval.violated && found.last().is_some_and(|c| c.eval.violated) {
                violations += 1;
            }
            for c in found {
                consider(c, &mut best, &mut violators);
            }
        }
        consider(cand, &mut best, &mut violators);
    }

    // strongest verified violation, earliest on ties
    violators.sort_by(|a, b| b.eval.strength.total_cmp(&a.eval.strength));
    let verified = violators
        .iter()
        .take(8)
        .find_map(|c| reverify(&evaluate, &c.witness));

    let (status, worst) = match verified {
        Some((w, e)) => {
            let (w, e) = normalize_scale(&evaluate, &w, &e);
            (Status::Counterexample, Some((with_margins(w, &e), e.strength)))
        }
        None => {
            let status = if premise_held > 0 { Status::Confirmed } else { Status::Inconclusive };
            let worst = best.map(|c| {
                let (w, e) = normalize_scale(&evaluate, &c.witness, &c.eval);
                (with_margins(w, &e), e.strength)
            });
            (status, worst)
        }
    };
    let (worst_witness, worst_strength) = match worst {
        Some((w, s)) => (Some(w), s),
        None => (None, f64::NEG_INFINITY),
    };
    ClaimReport {
        id: spec.id.clone(),
        status,
        trials_run: spec.trials,
        violations,
        premise_held,
        skipped,
        refinements,
        worst_strength,
        worst_witness,
        seed: spec.seed,
        elapsed_ms: 0,
    }
}

/// A candidate implication between two pair relations, each at a fixed ε
/// (ignored by relations without a parameter).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Implication {
    pub premise: RelationId,
    pub premise_eps: Option<f64>,
    pub conclusion: RelationId,
    pub conclusion_eps: Option<f64>,
}

impl Implication {
    fn evaluate(&self, w: &Witness) -> Result<Evaluation> {
        let (x, y) = w.xy()?;
        let tol = Tolerance::default();
        let side = |r: RelationId, eps: Option<f64>| -> Result<super::registry::Part> {
            let v = evaluate(r, &w.norm, x, y, eps, tol)?;
            Ok(part_of(&v, relation_scale(r, &w.norm, x, y), is_equality(r)))
        };
        let p = side(self.premise, self.premise_eps)?;
        let q = side(self.conclusion, self.conclusion_eps)?;
        Ok(implication(("premise", p), ("conclusion", q)))
    }
}

/// Relations whose margin never exceeds zero.
fn is_equality(r: RelationId) -> bool {
    matches!(
        r,
        RelationId::Classic | RelationId::Birkhoff | RelationId::Isosceles | RelationId::HhExact
    )
}

/// Random search plus refinement for inputs where `imp.premise` holds and
/// `imp.conclusion` fails. Returns the first witness that re-verifies, or
/// `None` when the budget runs out.
pub fn search_counterexample(imp: &Implication, universe: &Universe, budget: usize, seed: u64) -> Result<Option<Witness>> {
    let eval = |w: &Witness| imp.evaluate(w);
    let tag = format!("{}=>{}", imp.premise, imp.conclusion);
    let mut best: Option<Candidate> = None;
    for i in 0..budget {
        let mut rng = trial_rng(seed, &tag, i as u64);
        let (lo, hi) = universe.dims;
        let n = rng.random_range(lo..=hi);
        let kind = &universe.norm_specs[rng.random_range(0..universe.norm_specs.len())];
        let norm = kind.instantiate(n, &mut rng);
        let (x, y): (Vector, Vector) = sample_pair(&mut rng, n);
        let w = Witness::pair(norm, x, y);
        let Ok(e) = eval(&w) else { continue };
        let cand = Candidate { witness: w, eval: e };
        if let Some((w, e)) = cand.eval.violated.then(|| reverify(&eval, &cand.witness)).flatten() {
            return Ok(Some(with_margins(w, &e)));
        }
        if best.as_ref().is_none_or(|b| cand.eval.strength > b.eval.strength) {
            best = Some(cand);
        }
        if (i + 1) % 100 == 0 {
            if let Some(b) = &best {
                let mut rrng = refine_rng(seed, &tag, i as u64);
                for c in refine(&eval, b, &mut rrng, REFINE_STEPS) {
                    if let Some((w, e)) = c.eval.violated.then(|| reverify(&eval, &c.witness)).flatten() {
                        return Ok(Some(with_margins(w, &e)));
                    }
                }
            }
        }
    }
    Ok(None)
}

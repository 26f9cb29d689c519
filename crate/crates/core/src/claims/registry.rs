//! The audited statements: samplers and evaluators for each claim id.

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::sampling::{random_matrix, sample_eps, sample_pair, sample_scalar};
use super::{Evaluation, SpaceKind, Universe, Witness, EPS_GRID, VIOLATION_FLOOR};
use crate::error::{Error, Result};
use crate::hh::hh_values;
use crate::mapping::{check_bounds_12, check_condition_17, min_eps_condition_11, two_norm_embedding, LinearMap, Sampler};
use crate::relations::{
    eps_inner, hh_absolute, hh_absolute_from, hh_exact, hh_relative, hh_relative_from, OrthoVerdict, RelationId,
};
use crate::solvers::{beta_functional_min, beta_functional_numeric, hh_orthogonal_in_pencil};
use crate::space::{NormSpec, Tolerance, Vector};

pub(crate) struct ClaimDef {
    pub id: &'static str,
    pub statement: &'static str,
    pub default_trials: usize,
    pub relations: &'static [RelationId],
    pub universe: fn() -> Universe,
    pub sample: fn(&Universe, &mut ChaCha8Rng) -> Witness,
    pub evaluate: fn(&Witness) -> Result<Evaluation>,
}

pub(crate) fn find(id: &str) -> Result<&'static ClaimDef> {
    REGISTRY
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// One side of an implication, margins normalized to a dimensionless scale.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Part {
    pub margin: f64,
    pub band: f64,
    /// Margin is at most zero by construction (an equality-type relation).
    pub equality: bool,
}

impl Part {
    fn holds(&self) -> bool {
        self.margin >= -self.band
    }
}

pub(crate) fn part_of(v: &OrthoVerdict, scale: f64, equality: bool) -> Part {
    let s = if scale > 0.0 { scale } else { 1.0 };
    Part { margin: v.margin / s, band: v.band() / s, equality }
}

/// `‖x‖² + ‖y‖²`.
pub(crate) fn hh_scale(spec: &NormSpec, x: &[f64], y: &[f64]) -> f64 {
    let (a, b) = (spec.eval(x), spec.eval(y));
    a * a + b * b
}

/// Natural size of the margin of `r` on `(x, y)`.
pub(crate) fn relation_scale(r: RelationId, spec: &NormSpec, x: &[f64], y: &[f64]) -> f64 {
    let (a, b) = (spec.eval(x), spec.eval(y));
    match r {
        RelationId::Classic | RelationId::EpsInner => a * b,
        RelationId::Birkhoff | RelationId::DragomirBirkhoff | RelationId::Isosceles | RelationId::IsoMultiplicative => {
            a.max(b)
        }
        _ => a * a + b * b,
    }
}

fn strength_of(p: Part, q: Part) -> f64 {
    let pm = if p.equality && p.holds() { f64::INFINITY } else { p.margin };
    pm.min(-q.margin)
}

pub(crate) fn implication(p: (&str, Part), q: (&str, Part)) -> Evaluation {
    let strength = strength_of(p.1, q.1);
    let mut margins = BTreeMap::new();
    margins.insert(format!("premise:{}", p.0), p.1.margin);
    margins.insert(format!("conclusion:{}", q.0), q.1.margin);
    Evaluation {
        violated: p.1.holds() && !q.1.holds() && strength > VIOLATION_FLOOR,
        premise_held: p.1.holds(),
        strength,
        margins,
    }
}

fn equivalence(a: (&str, Part), b: (&str, Part)) -> Evaluation {
    let strength = strength_of(a.1, b.1).max(strength_of(b.1, a.1));
    let mut margins = BTreeMap::new();
    margins.insert(a.0.to_string(), a.1.margin);
    margins.insert(b.0.to_string(), b.1.margin);
    Evaluation {
        violated: a.1.holds() != b.1.holds() && strength > VIOLATION_FLOOR,
        premise_held: true,
        strength,
        margins,
    }
}

fn conclusion_only(q: (&str, Part)) -> Evaluation {
    let strength = -q.1.margin;
    let mut margins = BTreeMap::new();
    margins.insert(q.0.to_string(), q.1.margin);
    Evaluation {
        violated: !q.1.holds() && strength > VIOLATION_FLOOR,
        premise_held: true,
        strength,
        margins,
    }
}

/// Worst of several evaluations, with all margins merged.
fn worst_of(evals: Vec<Evaluation>) -> Evaluation {
    let mut out = Evaluation {
        violated: false,
        premise_held: false,
        strength: f64::NEG_INFINITY,
        margins: BTreeMap::new(),
    };
    for e in evals {
        out.violated |= e.violated;
        out.premise_held |= e.premise_held;
        out.strength = out.strength.max(e.strength);
        out.margins.extend(e.margins);
    }
    out
}

fn with_values(mut e: Evaluation, values: &[(&str, f64)]) -> Evaluation {
    for (k, v) in values {
        e.margins.insert((*k).to_string(), *v);
    }
    e
}

fn tol() -> Tolerance {
    Tolerance::default()
}

// ---- universes ----

fn ip_universe() -> Universe {
    Universe {
        dims: (2, 6),
        norm_specs: vec![SpaceKind::lp(2.0), SpaceKind::RandomIp],
        partner_specs: vec![],
        eps_grid: EPS_GRID.to_vec(),
    }
}

fn all_universe() -> Universe {
    Universe {
        dims: (2, 4),
        norm_specs: vec![
            SpaceKind::lp(1.0),
            SpaceKind::lp(1.5),
            SpaceKind::lp(2.0),
            SpaceKind::lp(3.0),
            SpaceKind::linf(),
            SpaceKind::WeightedLp { p: crate::space::Exponent::Finite(2.0) },
            SpaceKind::WeightedLp { p: crate::space::Exponent::Finite(3.0) },
            SpaceKind::RandomIp,
        ],
        partner_specs: vec![],
        eps_grid: EPS_GRID.to_vec(),
    }
}

fn lp_universe() -> Universe {
    Universe {
        dims: (2, 4),
        norm_specs: vec![SpaceKind::lp(1.0), SpaceKind::lp(1.5), SpaceKind::lp(3.0), SpaceKind::linf()],
        partner_specs: vec![],
        eps_grid: EPS_GRID.to_vec(),
    }
}

fn beta_universe() -> Universe {
    Universe { dims: (2, 6), ..all_universe() }
}

fn map_pairs(dims: (usize, usize)) -> Universe {
    Universe {
        dims,
        norm_specs: vec![SpaceKind::lp(2.0), SpaceKind::RandomIp, SpaceKind::lp(2.0), SpaceKind::RandomIp],
        partner_specs: vec![SpaceKind::lp(2.0), SpaceKind::lp(2.0), SpaceKind::RandomIp, SpaceKind::RandomIp],
        eps_grid: EPS_GRID.to_vec(),
    }
}

fn planar_maps() -> Universe {
    map_pairs((2, 2))
}

fn small_maps() -> Universe {
    map_pairs((2, 4))
}

fn embedding_pairs() -> Universe {
    Universe {
        dims: (2, 3),
        norm_specs: vec![
            SpaceKind::lp(2.0),
            SpaceKind::lp(1.0),
            SpaceKind::lp(2.0),
            SpaceKind::lp(1.0),
            SpaceKind::RandomIp,
        ],
        partner_specs: vec![
            SpaceKind::linf(),
            SpaceKind::lp(2.0),
            SpaceKind::lp(3.0),
            SpaceKind::linf(),
            SpaceKind::lp(2.0),
        ],
        eps_grid: vec![],
    }
}

fn scaled_pairs() -> Universe {
    let two = crate::space::Exponent::Finite(2.0);
    Universe {
        dims: (2, 4),
        norm_specs: vec![SpaceKind::lp(2.0), SpaceKind::lp(2.0)],
        partner_specs: vec![
            SpaceKind::ScaledLp { p: two, factor: 3.0 },
            SpaceKind::ScaledLp { p: two, factor: 0.5 },
        ],
        eps_grid: vec![],
    }
}

fn linf_pairs() -> Universe {
    Universe {
        dims: (2, 3),
        norm_specs: vec![SpaceKind::lp(2.0)],
        partner_specs: vec![SpaceKind::linf()],
        eps_grid: vec![],
    }
}

// ---- samplers ----

/// Dimension, norm and (if the universe pairs norms) partner norm.
fn pick(u: &Universe, rng: &mut ChaCha8Rng) -> (usize, NormSpec, Option<NormSpec>) {
    let n = rng.random_range(u.dims.0..=u.dims.1);
    let k = rng.random_range(0..u.norm_specs.len());
    let norm = u.norm_specs[k].instantiate(n, rng);
    let partner = u.partner_specs.get(k).map(|s| s.instantiate(n, rng));
    (n, norm, partner)
}

fn sample_pair_eps(u: &Universe, rng: &mut ChaCha8Rng) -> Witness {
    let (n, norm, norm2) = pick(u, rng);
    let (x, y) = sample_pair(rng, n);
    let eps = sample_eps(rng, &u.eps_grid);
    Witness { norm2, eps: Some(eps), ..Witness::pair(norm, x, y) }
}

fn sample_pair_scalars(u: &Universe, rng: &mut ChaCha8Rng) -> Witness {
    let mut w = sample_pair_eps(u, rng);
    w.params.insert("alpha".into(), sample_scalar(rng));
    w.params.insert("beta".into(), sample_scalar(rng));
    w
}

fn sample_norm_pair(u: &Universe, rng: &mut ChaCha8Rng) -> Witness {
    let (n, norm, norm2) = pick(u, rng);
    let (x, y) = sample_pair(rng, n);
    let mut w = Witness { norm2, ..Witness::pair(norm, x, y) };
    w.params.insert("direction".into(), if rng.random_bool(0.5) { 1.0 } else { 0.0 });
    w
}

fn sample_map(u: &Universe, rng: &mut ChaCha8Rng) -> Witness {
    let (n, norm, norm2) = pick(u, rng);
    let mut g = random_matrix(rng, n, n);
    // a quarter of the draws are diagonal, where the extremes are axis-aligned
    if rng.random_bool(0.25) {
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    g[(i, j)] = 0.0;
                }
            }
        }
    }
    let mut w = Witness { norm2, eps: Some(sample_eps(rng, &u.eps_grid)), matrix: Some(g), ..Witness::new(norm) };
    w.params.insert("eta_t".into(), rng.random_range(0.0..=1.0));
    w
}

// ---- evaluators ----

fn hh_rel_part(spec: &NormSpec, x: &Vector, y: &Vector, eps: f64) -> Result<Part> {
    Ok(part_of(&hh_relative(spec, x, y, eps, tol())?, hh_scale(spec, x, y), false))
}

fn hh_abs_part(spec: &NormSpec, x: &Vector, y: &Vector, eps: f64) -> Result<Part> {
    Ok(part_of(&hh_absolute(spec, x, y, eps, tol())?, hh_scale(spec, x, y), false))
}

fn eps_inner_part(spec: &NormSpec, x: &Vector, y: &Vector, eps: f64) -> Result<Part> {
    let s = spec.eval(x) * spec.eval(y);
    Ok(part_of(&eps_inner(spec, x, y, eps, tol())?, s, false))
}

fn eval_symmetry(w: &Witness) -> Result<Evaluation> {
    let (x, y) = w.xy()?;
    let eps = w.epsilon()?;
    let spec = &w.norm;
    let (nx, ny) = (spec.eval(x), spec.eval(y));
    let s = nx * nx + ny * ny;
    let h_xy = hh_values(spec, x, y, tol())?;
    let h_yx = hh_values(spec, y, x, tol())?;
    let p = |v: OrthoVerdict| part_of(&v, s, false);
    Ok(worst_of(vec![
        equivalence(
            ("hh_relative(x,y)", p(hh_relative_from(&h_xy, nx, ny, eps, tol()))),
            ("hh_relative(y,x)", p(hh_relative_from(&h_yx, ny, nx, eps, tol()))),
        ),
        equivalence(
            ("hh_absolute(x,y)", p(hh_absolute_from(&h_xy, nx, ny, eps, tol()))),
            ("hh_absolute(y,x)", p(hh_absolute_from(&h_yx, ny, nx, eps, tol()))),
        ),
    ]))
}

fn scaled_pair(w: &Witness) -> Result<(Vector, Vector)> {
    let (x, y) = w.xy()?;
    Ok((x.scaled(w.param("alpha")?), y.scaled(w.param("beta")?)))
}

fn eval_homogeneity_absolute(w: &Witness) -> Result<Evaluation> {
    let (x, y) = w.xy()?;
    let eps = w.epsilon()?;
    let (ax, by) = scaled_pair(w)?;
    Ok(implication(
        ("hh_absolute(x,y)", hh_abs_part(&w.norm, x, y, eps)?),
        ("hh_absolute(ax,by)", hh_abs_part(&w.norm, &ax, &by, eps)?),
    ))
}

fn eval_homogeneity_relative(w: &Witness) -> Result<Evaluation> {
    let (x, y) = w.xy()?;
    let eps = w.epsilon()?;
    let (ax, by) = scaled_pair(w)?;
    Ok(implication(
        ("hh_relative(x,y)", hh_rel_part(&w.norm, x, y, eps)?),
        ("hh_relative(ax,by)", hh_rel_part(&w.norm, &ax, &by, eps)?),
    ))
}

fn eval_absolute_vs_eps_inner(w: &Witness) -> Result<Evaluation> {
    let (x, y) = w.xy()?;
    let eps = w.epsilon()?;
    Ok(equivalence(
        ("hh_absolute", hh_abs_part(&w.norm, x, y, eps)?),
        ("eps_inner", eps_inner_part(&w.norm, x, y, eps)?),
    ))
}

/// `|⟨x,y⟩| ≤ ε/(1+ε²)·(‖x‖²+‖y‖²)` as a margin over `‖x‖²+‖y‖²`.
fn eval_stated_threshold(w: &Witness) -> Result<Evaluation> {
    let (x, y) = w.xy()?;
    let eps = w.epsilon()?;
    let c = w.norm.eval_inner(x, y).ok_or(Error::NotInnerProduct("stated threshold"))?;
    let s = hh_scale(&w.norm, x, y);
    let threshold = Part {
        margin: (eps / (1.0 + eps * eps) * s - c.abs()) / s,
        band: tol().band(s) / s,
        equality: false,
    };
    Ok(equivalence(("hh_relative", hh_rel_part(&w.norm, x, y, eps)?), ("threshold", threshold)))
}

fn map_of(w: &Witness) -> Result<LinearMap> {
    let g = w.matrix.clone().ok_or_else(|| Error::InvalidInput("witness lacks a matrix".into()))?;
    let codomain = w.norm2.clone().unwrap_or_else(|| w.norm.clone());
    let map = LinearMap::new(g, w.norm.clone(), codomain)?;
    if map.matrix.max_abs() == 0.0 {
        return Err(Error::InvalidInput("zero map".into()));
    }
    Ok(map)
}

fn bounds_sampler() -> Sampler {
    Sampler::new(16, 0)
}

/// The two-sided bound at ε, as a part normalized by `‖g‖²`.
fn bounds_part(map: &LinearMap, eps: f64) -> Result<(Part, crate::mapping::ConditionReport, f64)> {
    let r = check_bounds_12(map, eps, &bounds_sampler())?;
    let op2 = r.max_ratio.max(f64::MIN_POSITIVE);
    let part = Part { margin: r.margin / op2, band: tol().band(1.0), equality: false };
    Ok((part, r, op2))
}

/// Part for "ε is at least `needed`".
fn eps_part(eps: f64, needed: f64) -> Part {
    Part { margin: eps - needed, band: 1e-12, equality: false }
}

fn eval_forward_map(w: &Witness) -> Result<Evaluation> {
    let map = map_of(w)?;
    let eps = w.epsilon()?;
    let e11 = min_eps_condition_11(&map, 2048)?;
    let (bounds, _, _) = bounds_part(&map, eps)?;
    let e = implication(("preserves", eps_part(eps, e11.eps)), ("bounds", bounds));
    Ok(with_values(e, &[("eps_min_preserving", e11.eps)]))
}

fn eval_converse_map(w: &Witness) -> Result<Evaluation> {
    let map = map_of(w)?;
    let eps = w.epsilon()?;
    let t = w.param("eta_t")?;
    let (bounds, r, op2) = bounds_part(&map, eps)?;
    let e11 = min_eps_condition_11(&map, 64)?;
    let preserves = eps_part(eps, e11.eps);
    // interpolated bounds for η² between [g]² and ‖g‖²
    let co2 = r.min_ratio;
    let eta2 = co2 + t * (op2 - co2);
    let lo = (1.0 - eps) / (1.0 + eps) * eta2;
    let hi = (1.0 + eps) / (1.0 - eps) * eta2;
    let interp = Part {
        margin: (r.min_ratio - lo).min(hi - r.max_ratio) / op2,
        band: tol().band(1.0),
        equality: false,
    };
    let e = worst_of(vec![
        implication(("bounds", bounds), ("preserves", preserves)),
        implication(("bounds", bounds), ("interpolated", interp)),
    ]);
    Ok(with_values(e, &[("eps_min_preserving", e11.eps), ("eta_sq", eta2)]))
}

fn eval_equivalent_conditions(w: &Witness) -> Result<Evaluation> {
    let map = map_of(w)?;
    let eps = w.epsilon()?;
    let (bounds, r, op2) = bounds_part(&map, eps)?;
    let norm_ratio = Part {
        margin: ((1.0 + eps) / (1.0 - eps) * r.min_ratio - op2) / op2,
        band: tol().band(1.0),
        equality: false,
    };
    let pr = check_condition_17(&map, eps, &bounds_sampler())?;
    let pairwise = Part { margin: pr.margin / pr.max_ratio.max(f64::MIN_POSITIVE), band: tol().band(1.0), equality: false };
    Ok(worst_of(vec![
        equivalence(("bounds", bounds), ("norm_ratio", norm_ratio)),
        equivalence(("norm_ratio", norm_ratio), ("pairwise", pairwise)),
        equivalence(("bounds", bounds), ("pairwise", pairwise)),
    ]))
}

/// `w = y + s·x` with `x ⊥ w` in `spec`.
fn orthogonal_partner(spec: &NormSpec, x: &Vector, y: &Vector) -> Result<Vector> {
    let root = hh_orthogonal_in_pencil(spec, x, y, tol())?;
    let w = y.axpy(root.location, x);
    if w.is_zero() {
        return Err(Error::InvalidInput("degenerate pencil root".into()));
    }
    Ok(w)
}

fn eval_embedding(w: &Witness, squared: bool) -> Result<Evaluation> {
    let (x, y) = w.xy()?;
    let norm2 = w.norm2.as_ref().ok_or_else(|| Error::InvalidInput("witness lacks second norm".into()))?;
    let (m, big) = two_norm_embedding(&w.norm, norm2, x.dim())?;
    let eta = if squared {
        (big * big - m * m) / (big * big + m * m)
    } else {
        (big - m) / (big + m)
    };
    let v = orthogonal_partner(&w.norm, x, y)?;
    let premise = part_of(&hh_exact(&w.norm, x, &v, tol())?, hh_scale(&w.norm, x, &v), true);
    let conclusion = hh_rel_part(norm2, x, &v, eta)?;
    let e = implication(("hh_exact(norm1)", premise), ("hh_relative(norm2)", conclusion));
    Ok(with_values(e, &[("eta", eta), ("m", m), ("M", big)]))
}

fn eval_embedding_eta(w: &Witness) -> Result<Evaluation> {
    eval_embedding(w, false)
}

fn eval_embedding_eta_sq(w: &Witness) -> Result<Evaluation> {
    eval_embedding(w, true)
}

fn eval_beta(w: &Witness) -> Result<Evaluation> {
    let (x, y) = w.xy()?;
    let exact = beta_functional_min(&w.norm, x, y)?.value;
    let numeric = beta_functional_numeric(&w.norm, x, y)?.value;
    let scale = exact.max(f64::MIN_POSITIVE);
    let part = Part {
        margin: (1e-8 * scale - (numeric - exact).abs()) / scale,
        band: 0.0,
        equality: false,
    };
    Ok(with_values(conclusion_only(("agreement", part)), &[("numeric", numeric), ("analytic", exact)]))
}

fn eval_th2_forward(w: &Witness) -> Result<Evaluation> {
    let (x, y) = w.xy()?;
    let eps = w.epsilon()?;
    Ok(implication(
        ("hh_relative(eps)", hh_rel_part(&w.norm, x, y, eps)?),
        ("eps_inner(2eps)", eps_inner_part(&w.norm, x, y, 2.0 * eps)?),
    ))
}

fn eval_th2_converse(w: &Witness) -> Result<Evaluation> {
    let (x, y) = w.xy()?;
    let eps = w.epsilon()?;
    Ok(implication(
        ("eps_inner(2eps)", eps_inner_part(&w.norm, x, y, 2.0 * eps)?),
        ("hh_relative(eps)", hh_rel_part(&w.norm, x, y, eps)?),
    ))
}

/// `(1 − √(1 − ε²))/ε`, written to avoid cancellation.
pub(crate) fn eta_of(eps: f64) -> f64 {
    eps / (1.0 + (1.0 - eps * eps).sqrt())
}

fn eval_eta_forward(w: &Witness) -> Result<Evaluation> {
    let (x, y) = w.xy()?;
    let eps = w.epsilon()?;
    let eta = eta_of(eps);
    let e = implication(
        ("hh_absolute(eps)", hh_abs_part(&w.norm, x, y, eps)?),
        ("hh_relative(eta)", hh_rel_part(&w.norm, x, y, eta)?),
    );
    Ok(with_values(e, &[("eta", eta)]))
}

fn eval_eta_reverse(w: &Witness) -> Result<Evaluation> {
    let (x, y) = w.xy()?;
    let eps = w.epsilon()?;
    let eta = eta_of(eps);
    let e = implication(
        ("hh_relative(eta)", hh_rel_part(&w.norm, x, y, eta)?),
        ("hh_absolute(eps)", hh_abs_part(&w.norm, x, y, eps)?),
    );
    Ok(with_values(e, &[("eta", eta)]))
}

fn eval_same_orthogonality(w: &Witness) -> Result<Evaluation> {
    let (x, y) = w.xy()?;
    let norm2 = w.norm2.as_ref().ok_or_else(|| Error::InvalidInput("witness lacks second norm".into()))?;
    let (a, b) = if w.param("direction")? == 0.0 { (&w.norm, norm2) } else { (norm2, &w.norm) };
    let v = orthogonal_partner(a, x, y)?;
    Ok(implication(
        ("hh_exact(first)", part_of(&hh_exact(a, x, &v, tol())?, hh_scale(a, x, &v), true)),
        ("hh_exact(second)", part_of(&hh_exact(b, x, &v, tol())?, hh_scale(b, x, &v), true)),
    ))
}

use RelationId as R;

pub(crate) static REGISTRY: [ClaimDef; 18] = [
    ClaimDef {
        id: "C1",
        statement: "relative and absolute eps-HH-I orthogonality are symmetric in (x, y)",
        default_trials: 100_000,
        relations: &[R::HhRelative, R::HhAbsolute],
        universe: all_universe,
        sample: sample_pair_eps,
        evaluate: eval_symmetry,
    },
    ClaimDef {
        id: "C2",
        statement: "absolute eps-HH-I orthogonality of (x, y) implies it for (ax, by), inner-product norms",
        default_trials: 100_000,
        relations: &[R::HhAbsolute],
        universe: ip_universe,
        sample: sample_pair_scalars,
        evaluate: eval_homogeneity_absolute,
    },
    ClaimDef {
        id: "C2-lp",
        statement: "absolute eps-HH-I orthogonality of (x, y) implies it for (ax, by), non-Euclidean lp norms",
        default_trials: 5_000,
        relations: &[R::HhAbsolute],
        universe: lp_universe,
        sample: sample_pair_scalars,
        evaluate: eval_homogeneity_absolute,
    },
    ClaimDef {
        id: "C3",
        statement: "relative eps-HH-I orthogonality of (x, y) implies it for (ax, by)",
        default_trials: 100_000,
        relations: &[R::HhRelative],
        universe: ip_universe,
        sample: sample_pair_scalars,
        evaluate: eval_homogeneity_relative,
    },
    ClaimDef {
        id: "C4",
        statement: "in inner-product norms, absolute eps-HH-I orthogonality <=> |<x,y>| <= eps |x||y|",
        default_trials: 100_000,
        relations: &[R::HhAbsolute, R::EpsInner],
        universe: ip_universe,
        sample: sample_pair_eps,
        evaluate: eval_absolute_vs_eps_inner,
    },
    ClaimDef {
        id: "C5",
        statement: "in inner-product norms, relative eps-HH-I orthogonality <=> |<x,y>| <= eps/(1+eps^2) (|x|^2+|y|^2)",
        default_trials: 100_000,
        relations: &[R::HhRelative],
        universe: ip_universe,
        sample: sample_pair_eps,
        evaluate: eval_stated_threshold,
    },
    ClaimDef {
        id: "C6",
        statement: "if g maps orthogonal pairs to relatively eps-HH-I orthogonal pairs then (1-eps)/(1+eps)|g|^2|x|^2 <= |gx|^2 <= (1+eps)/(1-eps)[g]^2|x|^2",
        default_trials: 500,
        relations: &[R::HhRelative],
        universe: planar_maps,
        sample: sample_map,
        evaluate: eval_forward_map,
    },
    ClaimDef {
        id: "C7",
        statement: "the two-sided bound with eps implies that g maps orthogonal pairs to relatively eps-HH-I orthogonal pairs, and the bounds with eta^2 for every eta in [[g], |g|]",
        default_trials: 100_000,
        relations: &[R::HhRelative],
        universe: planar_maps,
        sample: sample_map,
        evaluate: eval_converse_map,
    },
    ClaimDef {
        id: "C8",
        statement: "the two-sided bound, |g|^2 <= (1+eps)/(1-eps)[g]^2, and |gx|^2|y|^2 <= (1+eps)/(1-eps)|gy|^2|x|^2 are equivalent",
        default_trials: 100_000,
        relations: &[],
        universe: small_maps,
        sample: sample_map,
        evaluate: eval_equivalent_conditions,
    },
    ClaimDef {
        id: "C9",
        statement: "if m|x|_1 <= |x|_2 <= M|x|_1, HH-I orthogonality in norm 1 implies relative eta-HH-I orthogonality in norm 2, eta = (M-m)/(M+m)",
        default_trials: 2_000,
        relations: &[R::HhExact, R::HhRelative],
        universe: embedding_pairs,
        sample: sample_norm_pair,
        evaluate: eval_embedding_eta,
    },
    ClaimDef {
        id: "C9-prime",
        statement: "as C9 with eta = (M^2-m^2)/(M^2+m^2)",
        default_trials: 2_000,
        relations: &[R::HhExact, R::HhRelative],
        universe: embedding_pairs,
        sample: sample_norm_pair,
        evaluate: eval_embedding_eta_sq,
    },
    ClaimDef {
        id: "C10",
        statement: "min over beta != 0 of |x/beta|^2 + |beta y|^2 equals 2|x||y|",
        default_trials: 100_000,
        relations: &[],
        universe: beta_universe,
        sample: sample_pair_eps,
        evaluate: eval_beta,
    },
    ClaimDef {
        id: "C11-forward",
        statement: "in inner-product norms, relative eps-HH-I orthogonality implies |<x,y>| <= 2 eps |x||y|",
        default_trials: 100_000,
        relations: &[R::HhRelative, R::EpsInner],
        universe: ip_universe,
        sample: sample_pair_eps,
        evaluate: eval_th2_forward,
    },
    ClaimDef {
        id: "C11-converse",
        statement: "in inner-product norms, |<x,y>| <= 2 eps |x||y| implies relative eps-HH-I orthogonality",
        default_trials: 100_000,
        relations: &[R::EpsInner, R::HhRelative],
        universe: ip_universe,
        sample: sample_pair_eps,
        evaluate: eval_th2_converse,
    },
    ClaimDef {
        id: "C12-forward",
        statement: "in inner-product norms, absolute eps-HH-I orthogonality implies relative eta-HH-I orthogonality, eta = (1-sqrt(1-eps^2))/eps",
        default_trials: 100_000,
        relations: &[R::HhAbsolute, R::HhRelative],
        universe: ip_universe,
        sample: sample_pair_eps,
        evaluate: eval_eta_forward,
    },
    ClaimDef {
        id: "C12-reverse",
        statement: "in inner-product norms, relative eta-HH-I orthogonality implies absolute eps-HH-I orthogonality, eta = (1-sqrt(1-eps^2))/eps",
        default_trials: 100_000,
        relations: &[R::HhRelative, R::HhAbsolute],
        universe: ip_universe,
        sample: sample_pair_eps,
        evaluate: eval_eta_reverse,
    },
    ClaimDef {
        id: "C13-scaled",
        statement: "HH-I orthogonality for |.|_2 and for c|.|_2 coincide",
        default_trials: 5_000,
        relations: &[R::HhExact],
        universe: scaled_pairs,
        sample: sample_norm_pair,
        evaluate: eval_same_orthogonality,
    },
    ClaimDef {
        id: "C13-linf",
        statement: "HH-I orthogonality for |.|_2 and for |.|_inf coincide",
        default_trials: 2_000,
        relations: &[R::HhExact],
        universe: linf_pairs,
        sample: sample_norm_pair,
        evaluate: eval_same_orthogonality,
    },
];

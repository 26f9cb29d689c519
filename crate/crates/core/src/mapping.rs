//! Linear maps between normed spaces: operator norm `‖g‖`, co-norm `[g]`, the
//! constant `eps_star` and sampled checks of the approximate
//! orthogonality-preservation conditions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hh::hh_values;
use crate::linalg::{cholesky, jacobi_eigen, solve_lower, solve_lower_transpose};
use crate::solvers::{golden_section, hh_orthogonal_in_pencil};
use crate::space::{validate_spec, Exponent, Matrix, NormSpec, Tolerance, Vector};

/// Number of starts for the estimated (non inner-product) profile.
pub const PROFILE_STARTS: usize = 64;

/// A dense `m × n` matrix together with the norms on its domain (`n`) and
/// codomain (`m`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearMap {
    pub matrix: Matrix,
    pub domain: NormSpec,
    pub codomain: NormSpec,
}

impl LinearMap {
    pub fn new(matrix: Matrix, domain: NormSpec, codomain: NormSpec) -> Result<Self> {
        if matrix.max_abs().is_nan() || !matrix.max_abs().is_finite() {
            return Err(Error::InvalidInput("matrix entries must be finite".into()));
        }
        validate_spec(&domain, matrix.cols())?;
        validate_spec(&codomain, matrix.rows())?;
        Ok(Self { matrix, domain, codomain })
    }

    /// Square matrix with the same norm on both sides.
    pub fn endomorphism(matrix: Matrix, spec: NormSpec) -> Result<Self> {
        Self::new(matrix, spec.clone(), spec)
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.matrix.apply_slice(x)
    }

    /// `‖gx‖ / ‖x‖`, or `None` for `x = 0`.
    pub fn ratio(&self, x: &[f64]) -> Option<f64> {
        let nx = self.domain.eval(x);
        (nx > 0.0).then(|| self.codomain.eval(&self.apply(x)) / nx)
    }

    fn grams(&self) -> Option<(Matrix, Matrix)> {
        Some((
            self.domain.gram(self.matrix.cols())?,
            self.codomain.gram(self.matrix.rows())?,
        ))
    }

    pub fn is_exact_ip(&self) -> bool {
        self.domain.is_inner_product() && self.codomain.is_inner_product()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProfileMethod {
    ExactIp,
    Estimated,
}

/// Extremal behaviour of a linear map on the unit sphere of its domain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapProfile {
    pub op_norm: f64,
    pub co_norm: f64,
    #[serde(with = "maybe_inf")]
    pub kappa: f64,
    pub eps_star: f64,
    /// Set when `co_norm = 0`, so no finite ε bounds the distortion.
    pub unbounded: bool,
    /// Unit vector with `‖g·cert_max‖ = op_norm`.
    pub cert_max: Vector,
    /// Unit vector with `‖g·cert_min‖ = co_norm`.
    pub cert_min: Vector,
    pub method: ProfileMethod,
}

/// `(κ² − 1)/(κ² + 1)` written in terms of the two norms.
pub fn eps_from_norms(op: f64, co: f64) -> f64 {
    let (a, b) = (op * op, co * co);
    if b <= 0.0 {
        1.0
    } else {
        ((a - b) / (a + b)).clamp(0.0, 1.0)
    }
}

mod maybe_inf {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(f64),
        Text(String),
    }

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_infinite() {
            s.serialize_str(if *v > 0.0 { "inf" } else { "-inf" })
        } else {
            s.serialize_f64(*v)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(v),
            Repr::Text(t) if t == "inf" => Ok(f64::INFINITY),
            Repr::Text(t) if t == "-inf" => Ok(f64::NEG_INFINITY),
            Repr::Text(t) => Err(serde::de::Error::custom(format!("expected number or \"inf\", got {t:?}"))),
        }
    }
}

/// Flips `v` so that its largest-magnitude entry is positive.
fn canonical_sign(mut v: Vec<f64>) -> Vec<f64> {
    let lead = v
        .iter()
        .copied()
        .fold(0.0f64, |m, c| if c.abs() > m.abs() { c } else { m });
    if lead < 0.0 {
        v.iter_mut().for_each(|c| *c = -*c);
    }
    v
}

fn unit(spec: &NormSpec, v: Vec<f64>) -> Vector {
    let n = spec.eval(&v);
    let v = canonical_sign(v.into_iter().map(|c| c / n).collect());
    Vector::new(v).expect("nonzero finite vector")
}

fn finish(op: f64, co: f64, cert_max: Vector, cert_min: Vector, method: ProfileMethod) -> MapProfile {
    let unbounded = co <= 0.0;
    let kappa = if unbounded { f64::INFINITY } else { op / co };
    MapProfile {
        op_norm: op,
        co_norm: co,
        kappa,
        eps_star: eps_from_norms(op, co),
        unbounded,
        cert_max,
        cert_min,
        method,
    }
}

/// Profile with the default seed for the estimated path.
pub fn profile(map: &LinearMap) -> Result<MapProfile> {
    profile_with(map, 0)
}

/// Exact profile for inner-product domain and codomain, multi-start pattern
/// search otherwise. On the estimated path `op_norm` is attained by
/// `cert_max` (a lower bound on `‖g‖`) and `co_norm` by `cert_min` (an upper
/// bound on `[g]`).
pub fn profile_with(map: &LinearMap, seed: u64) -> Result<MapProfile> {
    match map.grams() {
        Some((gd, gc)) => exact_profile(map, &gd, &gc),
        None => Ok(estimated_profile(map, seed)),
    }
}

/// With `G_d = C Cᵀ` and `x = C⁻ᵀ v`, `‖x‖ = |v|` and `‖gx‖² = vᵀ S v` for
/// `S = C⁻¹ gᵀ G_c g C⁻ᵀ`.
fn exact_profile(map: &LinearMap, gd: &Matrix, gc: &Matrix) -> Result<MapProfile> {
    let n = map.domain_dim();
    let c = cholesky(gd).ok_or_else(|| Error::InvalidSpec("domain gram is not positive definite".into()))?;
    let g = &map.matrix;
    let m = g.transpose().matmul(&gc.matmul(g)?)?;
    // W = C⁻¹ M, then S = C⁻¹ Wᵀ
    let mut w = Matrix::zeros(n, n);
    for j in 0..n {
        let col: Vec<f64> = (0..n).map(|i| m[(i, j)]).collect();
        let z = solve_lower(&c, &col);
        for i in 0..n {
            w[(i, j)] = z[i];
        }
    }
    let mut s = Matrix::zeros(n, n);
    for j in 0..n {
        let z = solve_lower(&c, w.row(j));
        for i in 0..n {
            s[(i, j)] = z[i];
        }
    }
    let eig = jacobi_eigen(&s);
    let lmax = eig.values[n - 1].max(0.0);
    let mut lmin = eig.values[0].max(0.0);
    if lmin <= 64.0 * f64::EPSILON * n as f64 * lmax {
        lmin = 0.0;
    }
    let cert = |k: usize| unit(&map.domain, solve_lower_transpose(&c, &eig.vector(k)));
    Ok(finish(lmax.sqrt(), lmin.sqrt(), cert(n - 1), cert(0), ProfileMethod::ExactIp))
}

fn start_vectors(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let mut starts: Vec<Vec<f64>> = (0..n).map(|i| Vector::basis(n, i).into_inner()).collect();
    if n > 1 && n <= 6 {
        for mask in 0..(1u32 << (n - 1)) {
            let v = (0..n)
                .map(|i| if i > 0 && mask & (1 << (i - 1)) != 0 { -1.0 } else { 1.0 })
                .collect();
            starts.push(v);
        }
    }
    starts.truncate(PROFILE_STARTS);
    while starts.len() < PROFILE_STARTS {
        starts.push((0..n).map(|_| rng.sample(StandardNormal)).collect());
    }
    starts
}

/// Pattern search on the unit sphere along coordinate and pairwise diagonal
/// directions, halving the step when no direction improves.
fn pattern_search(map: &LinearMap, start: &[f64], maximize: bool) -> (f64, Vec<f64>) {
    let n = start.len();
    let better = |a: f64, b: f64| if maximize { a > b * (1.0 + 1e-15) } else { a < b * (1.0 - 1e-15) };
    let mut dirs: Vec<Vec<f64>> = Vec::new();
    for i in 0..n {
        for s in [1.0, -1.0] {
            let mut d = vec![0.0; n];
            d[i] = s;
            dirs.push(d);
        }
        for j in (i + 1)..n {
            for (a, b) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                let mut d = vec![0.0; n];
                d[i] = a;
                d[j] = b;
                dirs.push(d);
            }
        }
    }
    let normalize = |v: &mut Vec<f64>| {
        let nv = map.domain.eval(v);
        v.iter_mut().for_each(|c| *c /= nv);
    };
    let mut x = start.to_vec();
    normalize(&mut x);
    let mut fx = map.ratio(&x).unwrap_or(0.0);
    let mut h = 0.25;
    let mut cand = vec![0.0; n];
    for _ in 0..20_000 {
        if h < 1e-10 {
            break;
        }
        let mut moved = false;
        for d in &dirs {
            for i in 0..n {
                cand[i] = x[i] + h * d[i];
            }
            if let Some(fc) = map.ratio(&cand) {
                if better(fc, fx) {
                    x.copy_from_slice(&cand);
                    normalize(&mut x);
                    fx = fc;
                    moved = true;
                }
            }
        }
        if !moved {
            h *= 0.5;
        }
    }
    (fx, x)
}

fn estimated_profile(map: &LinearMap, seed: u64) -> MapProfile {
    let n = map.domain_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let starts = start_vectors(n, &mut rng);
    // ties resolved by start index: strict comparison keeps the earliest
    let mut hi = (f64::NEG_INFINITY, Vec::new());
    let mut lo = (f64::INFINITY, Vec::new());
    for s in &starts {
        let up = pattern_search(map, s, true);
        if up.0 > hi.0 {
            hi = up;
        }
        let down = pattern_search(map, s, false);
        if down.0 < lo.0 {
            lo = down;
        }
    }
    let cert_max = unit(&map.domain, hi.1);
    let cert_min = unit(&map.domain, lo.1);
    // re-evaluate at the normalized certificates so they attain the reported values
    let op = map.ratio(&cert_max).unwrap_or(0.0);
    let mut co = map.ratio(&cert_min).unwrap_or(0.0);
    if co <= 64.0 * f64::EPSILON * op {
        co = 0.0;
    }
    finish(op, co, cert_max, cert_min, ProfileMethod::Estimated)
}

/// Random unit directions used by the sampled checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sampler {
    pub samples: usize,
    pub seed: u64,
}

impl Default for Sampler {
    fn default() -> Self {
        Self { samples: 4096, seed: 0 }
    }
}

impl Sampler {
    pub fn new(samples: usize, seed: u64) -> Self {
        Self { samples, seed }
    }

    /// Basis vectors, the profile certificates, then standard-normal draws.
    fn directions(&self, n: usize, profile: &MapProfile) -> Vec<Vec<f64>> {
        let mut out: Vec<Vec<f64>> = (0..n).map(|i| Vector::basis(n, i).into_inner()).collect();
        out.push(profile.cert_max.clone().into_inner());
        out.push(profile.cert_min.clone().into_inner());
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        for _ in 0..self.samples {
            let v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
            if v.iter().any(|c| *c != 0.0) {
                out.push(v);
            }
        }
        out
    }
}

/// Outcome of a sampled check of a quantitative condition.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub condition: String,
    pub epsilon: f64,
    pub passes: bool,
    pub samples: usize,
    /// Extremes of `‖gx‖² / ‖x‖²` over the samples.
    pub min_ratio: f64,
    pub max_ratio: f64,
    /// The sampled quantity closest to (or furthest past) its bound.
    pub worst_ratio: f64,
    /// The bound `worst_ratio` was compared against.
    pub limit: f64,
    /// Signed slack at the worst sample, negative on failure.
    pub margin: f64,
    /// Unit vectors realizing the worst sample first, then the opposite extreme.
    pub witness: Vec<Vector>,
}

fn check_eps(eps: f64) -> Result<()> {
    if eps.is_finite() && (0.0..1.0).contains(&eps) {
        Ok(())
    } else {
        Err(Error::EpsilonOutOfRange(eps, "[0, 1)"))
    }
}

struct Squares {
    ratios: Vec<(f64, Vec<f64>)>,
    lo: usize,
    hi: usize,
}

fn squared_ratios(map: &LinearMap, profile: &MapProfile, sampler: &Sampler) -> Squares {
    let ratios: Vec<(f64, Vec<f64>)> = sampler
        .directions(map.domain_dim(), profile)
        .into_iter()
        .filter_map(|v| map.ratio(&v).map(|r| (r * r, v)))
        .collect();
    let mut lo = 0;
    let mut hi = 0;
    for (i, (r, _)) in ratios.iter().enumerate() {
        if *r < ratios[lo].0 {
            lo = i;
        }
        if *r > ratios[hi].0 {
            hi = i;
        }
    }
    Squares { ratios, lo, hi }
}

/// Checks `((1−ε)/(1+ε))‖g‖²‖x‖² ≤ ‖gx‖² ≤ ((1+ε)/(1−ε))[g]²‖x‖²` on sampled
/// directions, with `‖g‖` and `[g]` taken from the profile.
pub fn check_bounds_12(map: &LinearMap, eps: f64, sampler: &Sampler) -> Result<ConditionReport> {
    check_eps(eps)?;
    let p = profile_with(map, sampler.seed)?;
    Ok(bounds_report(map, &p, eps, sampler, Tolerance::default()))
}

fn bounds_report(map: &LinearMap, p: &MapProfile, eps: f64, sampler: &Sampler, tol: Tolerance) -> ConditionReport {
    let sq = squared_ratios(map, p, sampler);
    let lower = (1.0 - eps) / (1.0 + eps) * p.op_norm * p.op_norm;
    let upper = (1.0 + eps) / (1.0 - eps) * p.co_norm * p.co_norm;
    let band = tol.band(p.op_norm * p.op_norm);
    let (rmin, rmax) = (sq.ratios[sq.lo].0, sq.ratios[sq.hi].0);
    let lower_slack = rmin - lower;
    let upper_slack = upper - rmax;
    // the lower inequality is reported unless only the upper one fails
    let (worst_ratio, limit, margin, first, second) = if lower_slack < -band || lower_slack <= upper_slack {
        (rmin, lower, lower_slack, sq.lo, sq.hi)
    } else {
        (rmax, upper, upper_slack, sq.hi, sq.lo)
    };
    ConditionReport {
        condition: "bounds".into(),
        epsilon: eps,
        passes: lower_slack.min(upper_slack) >= -band,
        samples: sq.ratios.len(),
        min_ratio: rmin,
        max_ratio: rmax,
        worst_ratio,
        limit,
        margin,
        witness: vec![
            unit(&map.domain, sq.ratios[first].1.clone()),
            unit(&map.domain, sq.ratios[second].1.clone()),
        ],
    }
}

/// Checks `‖gx‖²‖y‖² ≤ ((1+ε)/(1−ε))‖gy‖²‖x‖²` over all sampled pairs. The
/// worst pair combines the largest and smallest sampled ratio, so
/// `worst_ratio` estimates `κ²`.
pub fn check_condition_17(map: &LinearMap, eps: f64, sampler: &Sampler) -> Result<ConditionReport> {
    check_eps(eps)?;
    let p = profile_with(map, sampler.seed)?;
    let sq = squared_ratios(map, &p, sampler);
    let (rmax, rmin) = (sq.ratios[sq.hi].0, sq.ratios[sq.lo].0);
    let limit = (1.0 + eps) / (1.0 - eps);
    let band = Tolerance::default().band(rmax);
    // slack of rmax ≤ limit·rmin, in units of ‖x‖²‖y‖²
    let margin = limit * rmin - rmax;
    let worst_ratio = if rmin > 0.0 { rmax / rmin } else { f64::INFINITY };
    Ok(ConditionReport {
        condition: "pair-ratio".into(),
        epsilon: eps,
        passes: margin >= -band,
        samples: sq.ratios.len(),
        min_ratio: rmin,
        max_ratio: rmax,
        worst_ratio,
        limit,
        margin,
        witness: vec![
            unit(&map.domain, sq.ratios[sq.hi].1.clone()),
            unit(&map.domain, sq.ratios[sq.lo].1.clone()),
        ],
    })
}

/// Smallest ε with `|‖gx‖² − ‖gy‖²| ≤ ε(‖gx‖² + ‖gy‖²)` for all `‖x‖ = ‖y‖`.
/// The supremum is reached at the two extremal directions, so this is
/// `eps_star` of the profile (estimated on the non inner-product path).
pub fn min_eps_condition_14(map: &LinearMap) -> Result<f64> {
    Ok(profile(map)?.eps_star)
}

/// Smallest ε for which `g` sends HH-I orthogonal pairs to relatively
/// ε-HH-I orthogonal pairs, with a pair attaining it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpsSearch {
    pub eps: f64,
    pub u: Vector,
    pub w: Vector,
    /// Set when the value comes from random sampling rather than a full
    /// parametrization of the orthogonal pairs.
    pub approximate: bool,
    pub evaluations: usize,
}

/// `|gap| / total` of the images of `u` and `w`.
fn image_ratio(map: &LinearMap, u: &[f64], w: &[f64]) -> Result<f64> {
    let gu = Vector::new(map.apply(u))?;
    let gw = Vector::new(map.apply(w))?;
    let h = hh_values(&map.codomain, &gu, &gw, Tolerance::default())?;
    Ok(if h.total > 0.0 { h.gap.abs() / h.total } else { 0.0 })
}

/// Sup over HH-I orthogonal pairs `(u, w)` of `|gap(gu, gw)| / total(gu, gw)`.
///
/// For a 2-dimensional inner-product domain every orthogonal pair is
/// `(a·e(θ), b·e(θ+π/2))` in an orthonormal frame; `θ` runs over a grid of
/// `budget` points and the ratio `a/b` is optimized per angle (in closed form
/// when the codomain is an inner-product space), followed by golden-section
/// refinement of the best angle. Other domains sample `budget` pairs made
/// orthogonal with [`hh_orthogonal_in_pencil`] and flag the result approximate.
pub fn min_eps_condition_11(map: &LinearMap, budget: usize) -> Result<EpsSearch> {
    let budget = budget.max(16);
    let n = map.domain_dim();
    if n == 2 {
        if let Some(gd) = map.domain.gram(2) {
            return planar_search(map, &gd, budget);
        }
    }
    sampled_search(map, budget)
}

fn planar_search(map: &LinearMap, gd: &Matrix, budget: usize) -> Result<EpsSearch> {
    let c = cholesky(gd).ok_or_else(|| Error::InvalidSpec("domain gram is not positive definite".into()))?;
    let frame = |theta: f64| {
        let (s, co) = theta.sin_cos();
        (
            solve_lower_transpose(&c, &[co, s]),
            solve_lower_transpose(&c, &[-s, co]),
        )
    };
    let gc = map.codomain.gram(map.matrix.rows());
    let mut evaluations = 0usize;
    // best (ratio, u, w) at angle θ
    let mut at = |theta: f64| -> Result<(f64, Vec<f64>, Vec<f64>)> {
        let (u1, w1) = frame(theta);
        let (gu, gw) = (map.apply(&u1), map.apply(&w1));
        let log_r = match &gc {
            Some(gc) => {
                let (a, b) = (gc.bilinear(&gu, &gu), gc.bilinear(&gw, &gw));
                if a <= 0.0 || b <= 0.0 {
                    return Ok((0.0, u1, w1));
                }
                0.5 * (b / a).ln()
            }
            None => {
                let mut err = None;
                let m = golden_section(
                    |lr: f64| {
                        let u: Vec<f64> = u1.iter().map(|c| c * lr.exp()).collect();
                        match image_ratio(map, &u, &w1) {
                            Ok(v) => -v,
                            Err(e) => {
                                err.get_or_insert(e);
                                0.0
                            }
                        }
                    },
                    -12.0,
                    12.0,
                );
                if let Some(e) = err {
                    return Err(e);
                }
                m.at
            }
        };
        let u: Vec<f64> = u1.iter().map(|c| c * log_r.exp()).collect();
        evaluations += 1;
        let v = image_ratio(map, &u, &w1)?;
        Ok((v, u, w1))
    };
    let step = std::f64::consts::PI / budget as f64;
    let mut best = (f64::NEG_INFINITY, 0.0);
    for k in 0..budget {
        let theta = k as f64 * step;
        let (v, _, _) = at(theta)?;
        if v > best.0 {
            best = (v, theta);
        }
    }
    let mut err = None;
    let refined = golden_section(
        |theta: f64| match at(theta) {
            Ok((v, _, _)) => -v,
            Err(e) => {
                err.get_or_insert(e);
                0.0
            }
        },
        best.1 - step,
        best.1 + step,
    );
    if let Some(e) = err {
        return Err(e);
    }
    let theta = if -refined.value > best.0 { refined.at } else { best.1 };
    let (v, u, w) = at(theta)?;
    Ok(EpsSearch {
        eps: v,
        u: Vector::new(u)?,
        w: Vector::new(w)?,
        approximate: false,
        evaluations,
    })
}

fn sampled_search(map: &LinearMap, budget: usize) -> Result<EpsSearch> {
    let n = map.domain_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d61_7031_3121);
    let tol = Tolerance::default();
    let mut best: Option<(f64, Vector, Vector)> = None;
    for _ in 0..budget {
        let u = Vector::new((0..n).map(|_| rng.sample(StandardNormal)).collect())?;
        let scale = (rng.random_range(-2.0..2.0f64)).exp();
        let y = Vector::new((0..n).map(|_| scale * rng.sample::<f64, _>(StandardNormal)).collect())?;
        if u.is_zero() || y.is_zero() {
            continue;
        }
        let root = match hh_orthogonal_in_pencil(&map.domain, &u, &y, tol) {
            Ok(r) => r,
            Err(Error::NonConvergence(_)) => continue,
            Err(e) => return Err(e),
        };
        let w = y.axpy(root.location, &u);
        if w.is_zero() {
            continue;
        }
        let v = image_ratio(map, &u, &w)?;
        if best.as_ref().is_none_or(|b| v > b.0) {
            best = Some((v, u, w));
        }
    }
    let (eps, u, w) = best.ok_or(Error::NonConvergence("no orthogonal pair sampled"))?;
    Ok(EpsSearch {
        eps,
        u,
        w,
        approximate: true,
        evaluations: budget,
    })
}

/// Tightest `(m, M)` with `m‖x‖₁ ≤ ‖x‖₂ ≤ M‖x‖₁` on `R^dim`, where `‖·‖₁` is
/// `norm1` and `‖·‖₂` is `norm2`. Closed form for two unweighted `ℓp` norms;
/// otherwise the co-norm and operator norm of the identity map.
pub fn two_norm_embedding(norm1: &NormSpec, norm2: &NormSpec, dim: usize) -> Result<(f64, f64)> {
    validate_spec(norm1, dim)?;
    validate_spec(norm2, dim)?;
    if let (NormSpec::Lp { p: p1 }, NormSpec::Lp { p: p2 }) = (norm1, norm2) {
        let inv = |p: &Exponent| match p {
            Exponent::Finite(p) => 1.0 / p,
            Exponent::Infinity => 0.0,
        };
        let c = (dim as f64).powf(inv(p2) - inv(p1));
        return Ok(if inv(p2) <= inv(p1) { (c, 1.0) } else { (1.0, c) });
    }
    let id = LinearMap::new(Matrix::identity(dim), norm1.clone(), norm2.clone())?;
    let p = profile(&id)?;
    Ok((p.co_norm, p.op_norm))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l2map(rows: Vec<Vec<f64>>) -> LinearMap {
        LinearMap::endomorphism(Matrix::from_rows(rows).unwrap(), NormSpec::lp(2.0)).unwrap()
    }

    #[test]
    fn diag_profile() {
        let p = profile(&l2map(vec![vec![2.0, 0.0], vec![0.0, 1.0]])).unwrap();
        assert!((p.op_norm - 2.0).abs() < 1e-12);
        assert!((p.co_norm - 1.0).abs() < 1e-12);
        assert!((p.kappa - 2.0).abs() < 1e-12);
        assert!((p.eps_star - 0.6).abs() < 1e-12);
        assert_eq!(p.method, ProfileMethod::ExactIp);
        assert_eq!(p.cert_max.as_slice(), &[1.0, 0.0]);
        assert_eq!(p.cert_min.as_slice(), &[0.0, 1.0]);
    }

    #[test]
    fn identity_and_shear() {
        let p = profile(&l2map(vec![vec![1.0, 0.0], vec![0.0, 1.0]])).unwrap();
        assert_eq!((p.op_norm, p.co_norm, p.eps_star), (1.0, 1.0, 0.0));
        let p = profile(&l2map(vec![vec![1.0, 1.0], vec![0.0, 1.0]])).unwrap();
        assert!((p.op_norm - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-10);
    }

    #[test]
    fn singular_map_is_unbounded() {
        let p = profile(&l2map(vec![vec![1.0, 1.0], vec![1.0, 1.0]])).unwrap();
        assert_eq!(p.co_norm, 0.0);
        assert!(p.unbounded && p.kappa.is_infinite());
        assert_eq!(p.eps_star, 1.0);
        let json = serde_json::to_string(&p).unwrap();
        assert!(json.contains("\"kappa\":\"inf\""));
        let back: MapProfile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn gram_domain_profile_uses_domain_norm() {
        // identity from ⟨x,y⟩ = xᵀ diag(4,1) y to ℓ2: ratios 1/2 and 1
        let map = LinearMap::new(
            Matrix::identity(2),
            NormSpec::inner_product(Matrix::diag(&[4.0, 1.0])),
            NormSpec::lp(2.0),
        )
        .unwrap();
        let p = profile(&map).unwrap();
        assert!((p.op_norm - 1.0).abs() < 1e-14);
        assert!((p.co_norm - 0.5).abs() < 1e-14);
        assert!((map.ratio(&p.cert_min).unwrap() - 0.5).abs() < 1e-14);
    }

    #[test]
    fn estimated_profile_l1() {
        // ℓ1 → ℓ1 operator norm is the largest column sum; the minimum
        // of ‖gx‖₁ on the ℓ1 sphere of diag(2,1) is 1
        let g = Matrix::from_rows(vec![vec![1.0, -2.0], vec![3.0, 1.0]]).unwrap();
        let p = profile(&LinearMap::endomorphism(g, NormSpec::lp(1.0)).unwrap()).unwrap();
        assert_eq!(p.method, ProfileMethod::Estimated);
        assert!((p.op_norm - 4.0).abs() < 1e-9);
        let d = LinearMap::endomorphism(Matrix::diag(&[2.0, 1.0]), NormSpec::lp(1.0)).unwrap();
        let p = profile(&d).unwrap();
        assert!((p.op_norm - 2.0).abs() < 1e-9 && (p.co_norm - 1.0).abs() < 1e-9);
    }

    #[test]
    fn bounds_examples() {
        let g = l2map(vec![vec![2.0, 0.0], vec![0.0, 1.0]]);
        let s = Sampler::default();
        assert!(check_bounds_12(&g, 0.6, &s).unwrap().passes);
        let r = check_bounds_12(&g, 0.3, &s).unwrap();
        assert!(!r.passes);
        assert_eq!(r.witness[0].as_slice(), &[0.0, 1.0]);
        assert!((r.worst_ratio - 1.0).abs() < 1e-12);
        assert!((r.limit - 0.7 / 1.3 * 4.0).abs() < 1e-12);
        let id = l2map(vec![vec![1.0, 0.0], vec![0.0, 1.0]]);
        assert!(check_bounds_12(&id, 0.0, &s).unwrap().passes);
    }

    #[test]
    fn condition_17_examples() {
        let g = l2map(vec![vec![2.0, 0.0], vec![0.0, 1.0]]);
        let s = Sampler::default();
        let r = check_condition_17(&g, 0.6, &s).unwrap();
        assert!(r.passes);
        assert!((r.worst_ratio - 4.0).abs() < 1e-12);
        let r = check_condition_17(&g, 0.5, &s).unwrap();
        assert!(!r.passes);
        assert_eq!(r.witness[0].as_slice(), &[1.0, 0.0]);
        assert_eq!(r.witness[1].as_slice(), &[0.0, 1.0]);
        let id = l2map(vec![vec![1.0, 0.0], vec![0.0, 1.0]]);
        for eps in [0.0, 0.4, 0.9] {
            assert!(check_condition_17(&id, eps, &s).unwrap().passes);
        }
    }

    #[test]
    fn condition_14_examples() {
        let d = |a: f64, b: f64| l2map(vec![vec![a, 0.0], vec![0.0, b]]);
        assert!((min_eps_condition_14(&d(2.0, 1.0)).unwrap() - 0.6).abs() < 1e-12);
        assert_eq!(min_eps_condition_14(&d(1.0, 1.0)).unwrap(), 0.0);
        assert!((min_eps_condition_14(&d(3.0, 1.0)).unwrap() - 0.8).abs() < 1e-12);
    }

    #[test]
    fn condition_11_examples() {
        let d = |a: f64, b: f64| l2map(vec![vec![a, 0.0], vec![0.0, b]]);
        let r = min_eps_condition_11(&d(2.0, 1.0), 1024).unwrap();
        assert!((r.eps - 0.3).abs() < 1e-9, "{}", r.eps);
        assert!(!r.approximate);
        assert!(min_eps_condition_11(&d(1.0, 1.0), 256).unwrap().eps < 1e-15);
        assert!(min_eps_condition_11(&d(1.7, 1.7), 256).unwrap().eps < 1e-15);
    }

    #[test]
    fn embedding_examples() {
        let (m, big) = two_norm_embedding(&NormSpec::lp(2.0), &NormSpec::linf(), 2).unwrap();
        assert!((m - 0.5f64.sqrt()).abs() < 1e-15 && big == 1.0);
        let (m, big) = two_norm_embedding(&NormSpec::lp(1.0), &NormSpec::lp(2.0), 2).unwrap();
        assert!((m - 0.5f64.sqrt()).abs() < 1e-15 && big == 1.0);
        assert_eq!(two_norm_embedding(&NormSpec::lp(3.0), &NormSpec::lp(3.0), 4).unwrap(), (1.0, 1.0));
        let (m, big) = two_norm_embedding(&NormSpec::linf(), &NormSpec::lp(1.0), 3).unwrap();
        assert!(m == 1.0 && (big - 3.0).abs() < 1e-14);
    }

    /// Sphere-sampling oracle for the closed-form ℓp constants.
    #[test]
    fn embedding_constants_bound_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let (m, big) = two_norm_embedding(&NormSpec::lp(2.0), &NormSpec::linf(), 2).unwrap();
        let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
        for _ in 0..20000 {
            let t: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            let v = [t.cos(), t.sin()];
            let r = NormSpec::linf().eval(&v);
            lo = lo.min(r);
            hi = hi.max(r);
        }
        assert!(lo >= m - 1e-12 && lo < m + 1e-3);
        assert!(hi <= big + 1e-12 && hi > big - 1e-3);
    }

    #[test]
    fn embedding_weighted_uses_identity_profile() {
        let w = NormSpec::weighted(Exponent::Finite(2.0), vec![4.0, 1.0]);
        let (m, big) = two_norm_embedding(&NormSpec::lp(2.0), &w, 2).unwrap();
        assert!((m - 1.0).abs() < 1e-14 && (big - 2.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = Matrix::from_rows(vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]]).unwrap();
        assert!(LinearMap::new(g.clone(), NormSpec::lp(2.0), NormSpec::lp(2.0)).is_ok());
        let bad = NormSpec::inner_product(Matrix::identity(2));
        assert!(matches!(
            LinearMap::new(g, bad, NormSpec::lp(2.0)),
            Err(Error::DimensionMismatch { .. })
        ));
        let id = l2map(vec![vec![1.0, 0.0], vec![0.0, 1.0]]);
        assert!(check_bounds_12(&id, 1.0, &Sampler::default()).is_err());
    }
}

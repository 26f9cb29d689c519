//! Random inputs for the claim audits and the perturbations used by local
//! refinement.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{SpaceKind, Witness};
use crate::space::{Exponent, Matrix, NormSpec, Vector};

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

/// Generator for one trial, a function of `(seed, claim id, index)` only.
pub(crate) fn trial_rng(seed: u64, id: &str, index: u64) -> ChaCha8Rng {
    let h = splitmix64(splitmix64(splitmix64(seed) ^ fnv1a(id)) ^ index);
    ChaCha8Rng::seed_from_u64(h)
}

/// Generator for the refinement started from trial `index`.
pub(crate) fn refine_rng(seed: u64, id: &str, index: u64) -> ChaCha8Rng {
    trial_rng(seed, id, index | 1 << 63)
}

pub(crate) fn normal_vec(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        if v.iter().any(|c| *c != 0.0) {
            return v;
        }
    }
}

pub(crate) fn log_uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo.ln()..hi.ln()).exp()
}

/// Half the draws come from `grid`, the rest uniformly from `[0, 0.95)`.
pub(crate) fn sample_eps(rng: &mut impl Rng, grid: &[f64]) -> f64 {
    if !grid.is_empty() && rng.random_bool(0.5) {
        grid[rng.random_range(0..grid.len())]
    } else {
        rng.random_range(0.0..0.95)
    }
}

/// Normal pair; half the time `y` is rescaled so that `|y|/|x|` (Euclidean)
/// is log-uniform on `[1e-2, 1e2]`.
pub(crate) fn sample_pair(rng: &mut impl Rng, n: usize) -> (Vector, Vector) {
    let x = normal_vec(rng, n);
    let mut y = normal_vec(rng, n);
    if rng.random_bool(0.5) {
        let r = log_uniform(rng, 1e-2, 1e2);
        let e = |v: &[f64]| v.iter().map(|c| c * c).sum::<f64>().sqrt();
        let s = r * e(&x) / e(&y);
        y.iter_mut().for_each(|c| *c *= s);
    }
    (Vector::new(x).unwrap(), Vector::new(y).unwrap())
}

/// Nonzero scalar with log-uniform magnitude on `[1e-2, 1e2]` and random sign.
pub(crate) fn sample_scalar(rng: &mut impl Rng) -> f64 {
    let m = log_uniform(rng, 1e-2, 1e2);
    if rng.random_bool(0.5) { m } else { -m }
}

/// `AᵀA/n + 0.1·I` for a standard-normal `A`.
pub(crate) fn random_gram(rng: &mut impl Rng, n: usize) -> Matrix {
    let a: Vec<Vec<f64>> = (0..n).map(|_| normal_vec(rng, n)).collect();
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let s: f64 = (0..n).map(|k| a[k][i] * a[k][j]).sum();
            g[(i, j)] = s / n as f64 + if i == j { 0.1 } else { 0.0 };
        }
    }
    g
}

pub(crate) fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    let rows = (0..rows).map(|_| normal_vec(rng, cols)).collect();
    Matrix::from_rows(rows).unwrap()
}

impl SpaceKind {
    /// A concrete norm on `R^n`; random parts are drawn from `rng`.
    pub fn instantiate(&self, n: usize, rng: &mut impl Rng) -> NormSpec {
        match self {
            SpaceKind::Lp { p } => NormSpec::Lp { p: *p },
            SpaceKind::WeightedLp { p } => {
                NormSpec::weighted(*p, (0..n).map(|_| log_uniform(rng, 0.1, 10.0)).collect())
            }
            SpaceKind::RandomIp => NormSpec::inner_product(random_gram(rng, n)),
            SpaceKind::ScaledLp { p, factor } => {
                let w = match p {
                    Exponent::Finite(p) => factor.powf(*p),
                    Exponent::Infinity => *factor,
                };
                NormSpec::weighted(*p, vec![w; n])
            }
        }
    }
}

fn jiggle(rng: &mut impl Rng, v: &[f64], scale: f64) -> Vec<f64> {
    let size = v.iter().map(|c| c * c).sum::<f64>().sqrt() / (v.len() as f64).sqrt();
    v.iter()
        .map(|c| c + scale * size * rng.sample::<f64, _>(StandardNormal))
        .collect()
}

/// Parameters perturbed multiplicatively.
const LOG_PARAMS: [&str; 2] = ["alpha", "beta"];
/// Parameters confined to `[0, 1]`.
const UNIT_PARAMS: [&str; 1] = ["eta_t"];

/// Random neighbour of `w` at relative step `scale`. Norms stay fixed.
pub(crate) fn perturb(w: &Witness, rng: &mut impl Rng, scale: f64) -> Witness {
    let mut out = w.clone();
    let vec_of = |rng: &mut _, v: &Option<Vector>| {
        v.as_ref().map(|v| {
            let j = jiggle(rng, v, scale);
            Vector::new(j).unwrap_or_else(|_| v.clone())
        })
    };
    out.x = vec_of(rng, &w.x);
    out.y = vec_of(rng, &w.y);
    if let Some(e) = w.eps {
        out.eps = Some((e + 0.1 * scale * rng.sample::<f64, _>(StandardNormal)).clamp(0.0, 0.99));
    }
    if let Some(m) = &w.matrix {
        let size = m.max_abs().max(1e-3);
        let mut m2 = m.clone();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                m2[(i, j)] += scale * size * rng.sample::<f64, _>(StandardNormal);
            }
        }
        out.matrix = Some(m2);
    }
    for (k, v) in out.params.iter_mut() {
        if LOG_PARAMS.contains(&k.as_str()) {
            *v *= (scale * rng.sample::<f64, _>(StandardNormal)).exp();
        } else if UNIT_PARAMS.contains(&k.as_str()) {
            *v = (*v + 0.3 * scale * rng.sample::<f64, _>(StandardNormal)).clamp(0.0, 1.0);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trial_streams_depend_only_on_inputs() {
        let a: f64 = trial_rng(7, "C1", 3).random();
        let b: f64 = trial_rng(7, "C1", 3).random();
        let c: f64 = trial_rng(7, "C1", 4).random();
        let d: f64 = trial_rng(7, "C2", 3).random();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(a, d);
    }

    #[test]
    fn random_gram_is_spd() {
        let mut rng = trial_rng(0, "gram", 0);
        for n in 1..6 {
            let g = random_gram(&mut rng, n);
            assert!(crate::space::validate_spec(&NormSpec::inner_product(g), n).is_ok());
        }
    }

    #[test]
    fn scaled_lp_is_a_multiple() {
        let mut rng = trial_rng(0, "s", 0);
        let v = [1.0, -2.0, 0.5];
        for p in [Exponent::Finite(1.0), Exponent::Finite(2.0), Exponent::Infinity] {
            let s = SpaceKind::ScaledLp { p, factor: 3.0 }.instantiate(3, &mut rng);
            let base = NormSpec::Lp { p }.eval(&v);
            assert!((s.eval(&v) - 3.0 * base).abs() < 1e-12);
        }
    }
}

//! Vectors, dense matrices, norm descriptions and tolerances.
//!
//! Every other module evaluates norms through [`NormSpec`]. The three
//! supported families are plain `l_p`, weighted `l_p` and norms induced by a
//! symmetric positive-definite Gram matrix.

use std::fmt;
use std::ops::{Deref, Index, IndexMut};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;

/// A finite-dimensional real vector with finite components.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Vector(Vec<f64>);

impl Vector {
    pub fn new(components: Vec<f64>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInput("vector must have dimension >= 1".into()));
        }
        if let Some(i) = components.iter().position(|c| !c.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "vector component {i} is not finite"
            )));
        }
        Ok(Self(components))
    }

    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "vector dimension must be >= 1");
        Self(vec![0.0; dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = 1.0;
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0.0)
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self(self.0.iter().map(|c| c * s).collect())
    }

    /// `self + s * other`.
    pub fn axpy(&self, s: f64, other: &Vector) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + s * b).collect())
    }

    pub fn add(&self, other: &Vector) -> Self {
        self.axpy(1.0, other)
    }

    pub fn sub(&self, other: &Vector) -> Self {
        self.axpy(-1.0, other)
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }
}

impl Deref for Vector {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for Vector {
    type Error = Error;
    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Vector> for Vec<f64> {
    fn from(v: Vector) -> Vec<f64> {
        v.0
    }
}

/// Dense row-major real matrix. Serializes as an array of rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<f64>>", into = "Vec<Vec<f64>>")]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diag(&vec![1.0; n])
    }

    pub fn diag(d: &[f64]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &v) in d.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::InvalidInput("matrix must have at least one row".into()));
        }
        let c = rows[0].len();
        if c == 0 {
            return Err(Error::InvalidInput("matrix must have at least one column".into()));
        }
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::InvalidInput(format!(
                    "row {i} has {} entries, expected {c}",
                    row.len()
                )));
            }
            if row.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidInput(format!("row {i} has a non-finite entry")));
            }
            data.extend(row);
        }
        Ok(Self { rows: r, cols: c, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product on raw slices; `x.len()` must equal `cols`.
    pub fn apply_slice(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        if x.dim() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.dim(),
            });
        }
        Ok(Vector(self.apply_slice(x)))
    }

    /// `xᵀ A y` for a square matrix.
    pub fn bilinear(&self, x: &[f64], y: &[f64]) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.rows {
            let xi = x[i];
            if xi == 0.0 {
                continue;
            }
            acc += xi * self.row(i).iter().zip(y).map(|(a, b)| a * b).sum::<f64>();
        }
        acc
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

impl TryFrom<Vec<Vec<f64>>> for Matrix {
    type Error = Error;
    fn try_from(rows: Vec<Vec<f64>>) -> Result<Self> {
        Self::from_rows(rows)
    }
}

impl From<Matrix> for Vec<Vec<f64>> {
    fn from(m: Matrix) -> Self {
        m.to_rows()
    }
}

/// The exponent of an `l_p` norm; infinity is a distinguished value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Finite(f64),
    Infinity,
}

impl Exponent {
    pub fn is_two(&self) -> bool {
        matches!(self, Exponent::Finite(p) if *p == 2.0)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(p) => write!(f, "{p}"),
            Exponent::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "Inf" | "INF" | "infinity" | "∞" => Ok(Exponent::Infinity),
            other => other
                .parse::<f64>()
                .map(Exponent::Finite)
                .map_err(|_| Error::InvalidSpec(format!("cannot parse exponent `{other}`"))),
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Exponent::Finite(p) => s.serialize_f64(*p),
            Exponent::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(p) => Ok(Exponent::Finite(p)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Description of a norm on `R^n`.
///
/// For the weighted sup-norm (`p = inf`) the weights act linearly:
/// `‖v‖ = max_i w_i |v_i|`. For finite `p` the norm is `(Σ w_i |v_i|^p)^(1/p)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum NormSpec {
    Lp { p: Exponent },
    Wlp { p: Exponent, weights: Vec<f64> },
    Ip { gram: Matrix },
}

impl NormSpec {
    pub fn lp(p: f64) -> Self {
        NormSpec::Lp {
            p: Exponent::Finite(p),
        }
    }

    pub fn linf() -> Self {
        NormSpec::Lp {
            p: Exponent::Infinity,
        }
    }

    pub fn euclidean() -> Self {
        Self::lp(2.0)
    }

    pub fn weighted(p: Exponent, weights: Vec<f64>) -> Self {
        NormSpec::Wlp { p, weights }
    }

    pub fn inner_product(gram: Matrix) -> Self {
        NormSpec::Ip { gram }
    }

    /// Fixed dimension implied by the spec, if any.
    pub fn dim(&self) -> Option<usize> {
        match self {
            NormSpec::Lp { .. } => None,
            NormSpec::Wlp { weights, .. } => Some(weights.len()),
            NormSpec::Ip { gram } => Some(gram.rows()),
        }
    }

    /// True when the norm comes from an inner product (`l_2`, weighted `l_2`, Gram).
    pub fn is_inner_product(&self) -> bool {
        match self {
            NormSpec::Lp { p } | NormSpec::Wlp { p, .. } => p.is_two(),
            NormSpec::Ip { .. } => true,
        }
    }

    /// Gram matrix of the inducing inner product at dimension `dim`.
    pub fn gram(&self, dim: usize) -> Option<Matrix> {
        match self {
            NormSpec::Lp { p } if p.is_two() => Some(Matrix::identity(dim)),
            NormSpec::Wlp { p, weights } if p.is_two() => Some(Matrix::diag(weights)),
            NormSpec::Ip { gram } => Some(gram.clone()),
            _ => None,
        }
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        match self.dim() {
            Some(d) if d != dim => Err(Error::DimensionMismatch {
                expected: d,
                found: dim,
            }),
            _ => Ok(()),
        }
    }

    /// Cheap structural checks (no factorization).
    fn check_shallow(&self) -> Result<()> {
        let check_p = |p: &Exponent| match p {
            Exponent::Finite(p) if !(p.is_finite() && *p >= 1.0) => {
                Err(Error::InvalidSpec("p < 1".into()))
            }
            _ => Ok(()),
        };
        match self {
            NormSpec::Lp { p } => check_p(p),
            NormSpec::Wlp { p, weights } => {
                check_p(p)?;
                if weights.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
                    return Err(Error::InvalidSpec("weights must be finite and > 0".into()));
                }
                Ok(())
            }
            NormSpec::Ip { gram } => {
                if !gram.is_square() {
                    return Err(Error::InvalidSpec("gram matrix is not square".into()));
                }
                Ok(())
            }
        }
    }

    /// Unchecked evaluation on a slice. Callers guarantee dimension compatibility.
    pub(crate) fn eval(&self, v: &[f64]) -> f64 {
        match self {
            NormSpec::Lp { p } => lp_norm(*p, v.iter().map(|c| c.abs())),
            NormSpec::Wlp { p, weights } => match p {
                Exponent::Infinity => v
                    .iter()
                    .zip(weights)
                    .fold(0.0, |m, (c, w)| m.max(w * c.abs())),
                Exponent::Finite(pf) => {
                    let pf = *pf;
                    lp_norm(
                        *p,
                        v.iter().zip(weights).map(|(c, w)| w.powf(1.0 / pf) * c.abs()),
                    )
                }
            },
            NormSpec::Ip { gram } => gram.bilinear(v, v).max(0.0).sqrt(),
        }
    }

    /// Unchecked inner product for inner-product specs.
    pub(crate) fn eval_inner(&self, x: &[f64], y: &[f64]) -> Option<f64> {
        match self {
            NormSpec::Lp { p } if p.is_two() => {
                Some(x.iter().zip(y).map(|(a, b)| a * b).sum())
            }
            NormSpec::Wlp { p, weights } if p.is_two() => Some(
                x.iter()
                    .zip(y)
                    .zip(weights)
                    .map(|((a, b), w)| w * a * b)
                    .sum(),
            ),
            NormSpec::Ip { gram } => Some(gram.bilinear(x, y)),
            _ => None,
        }
    }
}

fn lp_norm(p: Exponent, abs: impl Iterator<Item = f64> + Clone) -> f64 {
    let m = abs.clone().fold(0.0, f64::max);
    if m == 0.0 {
        return 0.0;
    }
    match p {
        Exponent::Infinity => m,
        Exponent::Finite(p) if p == 1.0 => abs.sum(),
        Exponent::Finite(p) if p == 2.0 => m * abs.map(|a| (a / m) * (a / m)).sum::<f64>().sqrt(),
        Exponent::Finite(p) => m * abs.map(|a| (a / m).powf(p)).sum::<f64>().powf(1.0 / p),
    }
}

impl fmt::Display for NormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormSpec::Lp { p } => write!(f, "lp:{p}"),
            NormSpec::Wlp { p, weights } => {
                let w: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
                write!(f, "wlp:{p}:{}", w.join(","))
            }
            NormSpec::Ip { gram } => write!(f, "ip:{}x{}", gram.rows(), gram.cols()),
        }
    }
}

/// Absolute/relative tolerance pair used for every comparison against zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
        }
    }
}

impl Tolerance {
    pub fn new(abs_tol: f64, rel_tol: f64) -> Result<Self> {
        let ok = |t: f64| t.is_finite() && t >= 0.0;
        if !ok(abs_tol) || !ok(rel_tol) {
            return Err(Error::InvalidInput("tolerances must be finite and >= 0".into()));
        }
        if abs_tol == 0.0 && rel_tol == 0.0 {
            return Err(Error::InvalidInput(
                "at least one of abs_tol, rel_tol must be > 0".into(),
            ));
        }
        Ok(Self { abs_tol, rel_tol })
    }

    /// Width of the indifference band around zero for quantities of magnitude `scale`.
    pub fn band(&self, scale: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * scale.abs())
    }

    /// `|value| <= band(scale)`.
    pub fn is_zero(&self, value: f64, scale: f64) -> bool {
        value.abs() <= self.band(scale)
    }
}

/// `‖v‖` under `spec`.
pub fn norm(spec: &NormSpec, v: &Vector) -> Result<f64> {
    spec.check_shallow()?;
    spec.check_dim(v.dim())?;
    Ok(spec.eval(v))
}

/// `xᵀ G y` for a Gram matrix `G`.
pub fn inner(gram: &Matrix, x: &Vector, y: &Vector) -> Result<f64> {
    if !gram.is_square() {
        return Err(Error::InvalidSpec("gram matrix is not square".into()));
    }
    for v in [x, y] {
        if v.dim() != gram.rows() {
            return Err(Error::DimensionMismatch {
                expected: gram.rows(),
                found: v.dim(),
            });
        }
    }
    Ok(gram.bilinear(x, y))
}

/// Inner product induced by `spec`, if it has one.
pub fn spec_inner(spec: &NormSpec, x: &Vector, y: &Vector) -> Result<f64> {
    check_pair(spec, x, y)?;
    spec.eval_inner(x, y)
        .ok_or(Error::NotInnerProduct("inner product"))
}

/// Accepts iff every invariant of `spec` holds at dimension `dim`; otherwise
/// the error names the first violated invariant.
pub fn validate_spec(spec: &NormSpec, dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(Error::InvalidSpec("dimension must be >= 1".into()));
    }
    spec.check_shallow()?;
    spec.check_dim(dim)?;
    if let NormSpec::Ip { gram } = spec {
        let scale = gram.max_abs();
        for i in 0..dim {
            for j in (i + 1)..dim {
                if (gram[(i, j)] - gram[(j, i)]).abs() > 1e-12 * scale {
                    return Err(Error::InvalidSpec("gram matrix is not symmetric".into()));
                }
            }
        }
        if linalg::cholesky(gram).is_none() {
            return Err(Error::InvalidSpec("not positive definite".into()));
        }
    }
    Ok(())
}

pub(crate) fn check_pair(spec: &NormSpec, x: &Vector, y: &Vector) -> Result<()> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    spec.check_shallow()?;
    spec.check_dim(x.dim())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[f64]) -> Vector {
        Vector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn norm_examples() {
        assert_eq!(norm(&NormSpec::lp(2.0), &v(&[3.0, 4.0])).unwrap(), 5.0);
        assert_eq!(norm(&NormSpec::linf(), &v(&[1.0, -2.0])).unwrap(), 2.0);
        let g = Matrix::diag(&[2.0, 1.0]);
        let n = norm(&NormSpec::inner_product(g), &v(&[1.0, 1.0])).unwrap();
        assert!((n - 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn weighted_sup_norm_applies_weights_linearly() {
        let spec = NormSpec::weighted(Exponent::Infinity, vec![3.0, 0.5]);
        assert_eq!(norm(&spec, &v(&[1.0, -4.0])).unwrap(), 3.0);
        let spec = NormSpec::weighted(Exponent::Finite(1.0), vec![3.0, 0.5]);
        assert_eq!(norm(&spec, &v(&[1.0, -4.0])).unwrap(), 5.0);
    }

    #[test]
    fn inner_examples() {
        let i2 = Matrix::identity(2);
        assert_eq!(inner(&i2, &v(&[1.0, 0.0]), &v(&[0.0, 1.0])).unwrap(), 0.0);
        assert_eq!(inner(&i2, &v(&[1.0, 2.0]), &v(&[3.0, -1.0])).unwrap(), 1.0);
        let g = Matrix::diag(&[2.0, 1.0]);
        assert_eq!(inner(&g, &v(&[1.0, 0.0]), &v(&[1.0, 1.0])).unwrap(), 2.0);
    }

    #[test]
    fn validate_examples() {
        let err = validate_spec(&NormSpec::lp(0.5), 2).unwrap_err();
        assert!(err.to_string().contains("p < 1"));
        let bad = Matrix::from_rows(vec![vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        let err = validate_spec(&NormSpec::inner_product(bad), 2).unwrap_err();
        assert!(err.to_string().contains("not positive definite"));
        assert!(validate_spec(&NormSpec::linf(), 5).is_ok());
    }

    #[test]
    fn validate_rejects_asymmetric_and_bad_weights() {
        let asym = Matrix::from_rows(vec![vec![2.0, 0.1], vec![0.0, 2.0]]).unwrap();
        let err = validate_spec(&NormSpec::inner_product(asym), 2).unwrap_err();
        assert!(err.to_string().contains("symmetric"));
        let w = NormSpec::weighted(Exponent::Finite(2.0), vec![1.0, 0.0]);
        assert!(validate_spec(&w, 2).is_err());
        let w = NormSpec::weighted(Exponent::Finite(2.0), vec![1.0, 1.0]);
        assert!(matches!(
            validate_spec(&w, 3),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn vector_rejects_non_finite_and_empty() {
        assert!(Vector::new(vec![]).is_err());
        assert!(Vector::new(vec![1.0, f64::NAN]).is_err());
        assert!(serde_json::from_str::<Vector>("[]").is_err());
    }

    #[test]
    fn norm_spec_json_shape() {
        let s = serde_json::to_string(&NormSpec::lp(2.0)).unwrap();
        assert_eq!(s, r#"{"kind":"lp","p":2.0}"#);
        let s = serde_json::to_string(&NormSpec::linf()).unwrap();
        assert_eq!(s, r#"{"kind":"lp","p":"inf"}"#);
        let parsed: NormSpec = serde_json::from_str(r#"{"kind":"lp","p":2}"#).unwrap();
        assert_eq!(parsed, NormSpec::lp(2.0));
        let parsed: NormSpec =
            serde_json::from_str(r#"{"kind":"ip","gram":[[2,0],[0,1]]}"#).unwrap();
        assert_eq!(parsed, NormSpec::inner_product(Matrix::diag(&[2.0, 1.0])));
    }

    #[test]
    fn parallelogram_law_fails_for_l1_witness() {
        let (x, y) = (v(&[1.0, 0.0]), v(&[0.0, 1.0]));
        let l1 = NormSpec::lp(1.0);
        let n = |w: &Vector| norm(&l1, w).unwrap();
        let lhs = n(&x.add(&y)).powi(2) + n(&x.sub(&y)).powi(2);
        let rhs = 2.0 * n(&x).powi(2) + 2.0 * n(&y).powi(2);
        assert_eq!((lhs, rhs), (8.0, 4.0));
    }

    #[test]
    fn tolerance_requires_positive_component() {
        assert!(Tolerance::new(0.0, 0.0).is_err());
        let t = Tolerance::default();
        assert_eq!(t.band(0.0), 1e-12);
        assert!((t.band(1e3) - 1e-7).abs() < 1e-22);
    }
}

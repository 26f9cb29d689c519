//! Decision procedures for the classical, approximate and integral
//! orthogonality relations.
//!
//! Every predicate returns an [`OrthoVerdict`] whose `margin` is the slack of
//! the defining inequality: positive when it holds with room to spare,
//! negative when it fails. `holds` is `margin >= -band`, where `band` is the
//! tolerance band recorded in `details`.
//!
//! If `x` or `y` is the zero vector every relation holds by convention and the
//! verdict carries `degenerate: true`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::hh::{hh_values, HHValues};
use crate::solvers::{golden_section, line_min_unchecked};
use crate::space::{check_pair, NormSpec, Tolerance, Vector};

/// Stable identifiers of the supported relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationId {
    Classic,
    Birkhoff,
    Isosceles,
    EpsInner,
    DragomirBirkhoff,
    ChmielinskiBirkhoff,
    IsoAdditive,
    IsoMultiplicative,
    HhExact,
    HhRelative,
    HhAbsolute,
}

impl RelationId {
    pub const ALL: [RelationId; 11] = [
        RelationId::Classic,
        RelationId::Birkhoff,
        RelationId::Isosceles,
        RelationId::EpsInner,
        RelationId::DragomirBirkhoff,
        RelationId::ChmielinskiBirkhoff,
        RelationId::IsoAdditive,
        RelationId::IsoMultiplicative,
        RelationId::HhExact,
        RelationId::HhRelative,
        RelationId::HhAbsolute,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            RelationId::Classic => "classic",
            RelationId::Birkhoff => "birkhoff",
            RelationId::Isosceles => "isosceles",
            RelationId::EpsInner => "eps_inner",
            RelationId::DragomirBirkhoff => "dragomir_birkhoff",
            RelationId::ChmielinskiBirkhoff => "chmielinski_birkhoff",
            RelationId::IsoAdditive => "iso_additive",
            RelationId::IsoMultiplicative => "iso_multiplicative",
            RelationId::HhExact => "hh_exact",
            RelationId::HhRelative => "hh_relative",
            RelationId::HhAbsolute => "hh_absolute",
        }
    }

    /// Whether the relation is parametrized by ε.
    pub fn takes_epsilon(&self) -> bool {
        !matches!(
            self,
            RelationId::Classic | RelationId::Birkhoff | RelationId::Isosceles | RelationId::HhExact
        )
    }

    /// Whether the relation only makes sense for inner-product norms.
    pub fn needs_inner_product(&self) -> bool {
        matches!(self, RelationId::Classic | RelationId::EpsInner)
    }
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RelationId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RelationId::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| Error::UnknownRelation(s.to_string()))
    }
}

/// Decision plus signed slack for one relation on one pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrthoVerdict {
    pub relation: RelationId,
    pub holds: bool,
    pub margin: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(default)]
    pub details: BTreeMap<String, Value>,
}

impl OrthoVerdict {
    fn new(relation: RelationId, epsilon: Option<f64>, margin: f64, band: f64) -> Self {
        let mut details = BTreeMap::new();
        details.insert("band".into(), Value::from(band));
        Self {
            relation,
            holds: margin >= -band,
            margin,
            epsilon,
            details,
        }
    }

    fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.into(), value.into());
        self
    }

    /// Tolerance band the margin was compared against.
    pub fn band(&self) -> f64 {
        self.details.get("band").and_then(Value::as_f64).unwrap_or(0.0)
    }

    pub fn is_degenerate(&self) -> bool {
        self.details.get("degenerate").and_then(Value::as_bool).unwrap_or(false)
    }

    fn degenerate(mut self) -> Self {
        self.holds = true;
        self.margin = self.margin.max(0.0);
        self.with("degenerate", true)
    }
}

fn check_eps_unit(eps: f64) -> Result<()> {
    if eps.is_finite() && (0.0..1.0).contains(&eps) {
        Ok(())
    } else {
        Err(Error::EpsilonOutOfRange(eps, "[0, 1)"))
    }
}

fn check_eps_nonneg(eps: f64) -> Result<()> {
    if eps.is_finite() && eps >= 0.0 {
        Ok(())
    } else {
        Err(Error::EpsilonOutOfRange(eps, "[0, inf)"))
    }
}

fn ip_parts(spec: &NormSpec, x: &[f64], y: &[f64], who: &'static str) -> Result<(f64, f64, f64)> {
    let c = spec.eval_inner(x, y).ok_or(Error::NotInnerProduct(who))?;
    Ok((c, spec.eval(x), spec.eval(y)))
}

fn combo(x: &[f64], s: f64, y: &[f64]) -> Vec<f64> {
    x.iter().zip(y).map(|(a, b)| a + s * b).collect()
}

/// Classical orthogonality `⟨x, y⟩ = 0`, decided relative to `‖x‖‖y‖`.
pub fn classic(spec: &NormSpec, x: &Vector, y: &Vector, tol: Tolerance) -> Result<OrthoVerdict> {
    check_pair(spec, x, y)?;
    let (c, nx, ny) = ip_parts(spec, x, y, "classic")?;
    let band = tol.band(nx * ny);
    let v = OrthoVerdict::new(RelationId::Classic, None, band - c.abs(), 0.0)
        .with("inner", c);
    Ok(if nx == 0.0 || ny == 0.0 { v.degenerate() } else { v })
}

/// Birkhoff orthogonality `‖x + αy‖ ≥ ‖x‖` for all real α.
pub fn birkhoff(spec: &NormSpec, x: &Vector, y: &Vector, tol: Tolerance) -> Result<OrthoVerdict> {
    check_pair(spec, x, y)?;
    let (nx, ny) = (spec.eval(x), spec.eval(y));
    if nx == 0.0 || ny == 0.0 {
        return Ok(OrthoVerdict::new(RelationId::Birkhoff, None, 0.0, tol.band(nx)).degenerate());
    }
    let m = line_min_unchecked(spec, x, y, ny);
    Ok(
        OrthoVerdict::new(RelationId::Birkhoff, None, m.value - nx, tol.band(nx))
            .with("alpha_star", m.t_star)
            .with("min_value", m.value),
    )
}

/// Isosceles orthogonality `‖x + y‖ = ‖x − y‖`.
pub fn isosceles(spec: &NormSpec, x: &Vector, y: &Vector, tol: Tolerance) -> Result<OrthoVerdict> {
    check_pair(spec, x, y)?;
    let a = spec.eval(&combo(x, 1.0, y));
    let b = spec.eval(&combo(x, -1.0, y));
    let v = OrthoVerdict::new(RelationId::Isosceles, None, -(a - b).abs(), tol.band(a.max(b)))
        .with("norm_sum", a)
        .with("norm_diff", b);
    Ok(if x.is_zero() || y.is_zero() { v.degenerate() } else { v })
}

/// ε-orthogonality `|⟨x, y⟩| ≤ ε‖x‖‖y‖`. Any ε ≥ 0 is accepted so that the
/// δ = 2ε form can be evaluated.
pub fn eps_inner(
    spec: &NormSpec,
    x: &Vector,
    y: &Vector,
    eps: f64,
    tol: Tolerance,
) -> Result<OrthoVerdict> {
    check_pair(spec, x, y)?;
    check_eps_nonneg(eps)?;
    let (c, nx, ny) = ip_parts(spec, x, y, "eps_inner")?;
    let rhs = eps * nx * ny;
    let v = OrthoVerdict::new(RelationId::EpsInner, Some(eps), rhs - c.abs(), tol.band(rhs.max(c.abs())))
        .with("inner", c);
    Ok(if nx == 0.0 || ny == 0.0 { v.degenerate() } else { v })
}

/// Approximate Birkhoff orthogonality `‖x + ty‖ ≥ (1 − ε)‖x‖` for all t.
pub fn dragomir_birkhoff(
    spec: &NormSpec,
    x: &Vector,
    y: &Vector,
    eps: f64,
    tol: Tolerance,
) -> Result<OrthoVerdict> {
    check_pair(spec, x, y)?;
    check_eps_nonneg(eps)?;
    let (nx, ny) = (spec.eval(x), spec.eval(y));
    let id = RelationId::DragomirBirkhoff;
    if nx == 0.0 || ny == 0.0 {
        return Ok(OrthoVerdict::new(id, Some(eps), eps * nx, tol.band(nx)).degenerate());
    }
    let m = line_min_unchecked(spec, x, y, ny);
    Ok(OrthoVerdict::new(id, Some(eps), m.value - (1.0 - eps) * nx, tol.band(nx))
        .with("t_star", m.t_star)
        .with("min_value", m.value))
}

/// Approximate Birkhoff orthogonality `‖x + ty‖² ≥ ‖x‖² − 2ε‖x‖‖ty‖` for all t.
///
/// `t ↦ ‖x + ty‖² + 2ε‖x‖‖y‖|t|` is convex on each half-line; both halves are
/// searched over `[0, 2‖x‖/‖y‖]` (beyond which the function exceeds `‖x‖²`).
pub fn chmielinski_birkhoff(
    spec: &NormSpec,
    x: &Vector,
    y: &Vector,
    eps: f64,
    tol: Tolerance,
) -> Result<OrthoVerdict> {
    check_pair(spec, x, y)?;
    check_eps_nonneg(eps)?;
    let (nx, ny) = (spec.eval(x), spec.eval(y));
    let id = RelationId::ChmielinskiBirkhoff;
    let band = tol.band(nx * nx);
    if nx == 0.0 || ny == 0.0 {
        return Ok(OrthoVerdict::new(id, Some(eps), 0.0, band).degenerate());
    }
    let mut buf = vec![0.0; x.dim()];
    let mut phi = |t: f64| {
        for i in 0..x.dim() {
            buf[i] = x[i] + t * y[i];
        }
        let n = spec.eval(&buf);
        n * n + 2.0 * eps * nx * ny * t.abs()
    };
    let r = 2.0 * nx / ny;
    let left = golden_section(&mut phi, -r, 0.0);
    let right = golden_section(&mut phi, 0.0, r);
    let best = if left.value <= right.value { left } else { right };
    let (t_star, inf) = if best.value < nx * nx {
        (best.at, best.value)
    } else {
        (0.0, nx * nx)
    };
    Ok(OrthoVerdict::new(id, Some(eps), inf - nx * nx, band)
        .with("t_star", t_star)
        .with("inf_value", inf))
}

/// `|‖x+y‖² − ‖x−y‖²| ≤ 4ε‖x‖‖y‖`.
pub fn iso_additive(
    spec: &NormSpec,
    x: &Vector,
    y: &Vector,
    eps: f64,
    tol: Tolerance,
) -> Result<OrthoVerdict> {
    check_pair(spec, x, y)?;
    check_eps_nonneg(eps)?;
    let a = spec.eval(&combo(x, 1.0, y));
    let b = spec.eval(&combo(x, -1.0, y));
    let lhs = (a * a - b * b).abs();
    let rhs = 4.0 * eps * spec.eval(x) * spec.eval(y);
    let v = OrthoVerdict::new(RelationId::IsoAdditive, Some(eps), rhs - lhs, tol.band((a * a).max(b * b)))
        .with("lhs", lhs)
        .with("rhs", rhs);
    Ok(if x.is_zero() || y.is_zero() { v.degenerate() } else { v })
}

/// `|‖x+y‖ − ‖x−y‖| ≤ ε‖x+y‖‖x−y‖`.
///
/// With `x + y = 0` or `x − y = 0` the right side vanishes; the verdict then
/// holds only if the left side vanishes too and is flagged degenerate.
pub fn iso_multiplicative(
    spec: &NormSpec,
    x: &Vector,
    y: &Vector,
    eps: f64,
    tol: Tolerance,
) -> Result<OrthoVerdict> {
    check_pair(spec, x, y)?;
    check_eps_nonneg(eps)?;
    let a = spec.eval(&combo(x, 1.0, y));
    let b = spec.eval(&combo(x, -1.0, y));
    let lhs = (a - b).abs();
    let rhs = eps * a * b;
    let v = OrthoVerdict::new(RelationId::IsoMultiplicative, Some(eps), rhs - lhs, tol.band(a.max(b)))
        .with("lhs", lhs)
        .with("rhs", rhs);
    if x.is_zero() || y.is_zero() {
        return Ok(v.degenerate());
    }
    if a == 0.0 || b == 0.0 {
        return Ok(v.with("degenerate", true));
    }
    Ok(v)
}

/// Shared tolerance band for the three integral relations:
/// `tol·max(I+ + I−, ‖x‖² + ‖y‖²)` plus the quadrature error estimate.
pub fn hh_band(h: &HHValues, nx: f64, ny: f64, tol: Tolerance) -> f64 {
    tol.band(h.total.max(nx * nx + ny * ny)) + h.est_abs_error
}

fn hh_details(v: OrthoVerdict, h: &HHValues) -> OrthoVerdict {
    v.with("i_plus", h.i_plus)
        .with("i_minus", h.i_minus)
        .with("gap", h.gap)
        .with("total", h.total)
}

/// HH-I orthogonality `I+(x, y) = I−(x, y)`.
pub fn hh_exact(spec: &NormSpec, x: &Vector, y: &Vector, tol: Tolerance) -> Result<OrthoVerdict> {
    check_pair(spec, x, y)?;
    let h = hh_values(spec, x, y, tol)?;
    Ok(hh_exact_from(&h, spec.eval(x), spec.eval(y), tol))
}

pub(crate) fn hh_exact_from(h: &HHValues, nx: f64, ny: f64, tol: Tolerance) -> OrthoVerdict {
    let v = OrthoVerdict::new(RelationId::HhExact, None, -h.gap.abs(), hh_band(h, nx, ny, tol));
    let v = hh_details(v, h);
    if nx == 0.0 || ny == 0.0 { v.degenerate() } else { v }
}

/// Relative ε-HH-I orthogonality `|I+ − I−| ≤ ε(I+ + I−)`, equivalently
/// `(1−ε)/(1+ε) ≤ I+/I− ≤ (1+ε)/(1−ε)`.
pub fn hh_relative(
    spec: &NormSpec,
    x: &Vector,
    y: &Vector,
    eps: f64,
    tol: Tolerance,
) -> Result<OrthoVerdict> {
    check_pair(spec, x, y)?;
    check_eps_unit(eps)?;
    let h = hh_values(spec, x, y, tol)?;
    Ok(hh_relative_from(&h, spec.eval(x), spec.eval(y), eps, tol))
}

pub(crate) fn hh_relative_from(h: &HHValues, nx: f64, ny: f64, eps: f64, tol: Tolerance) -> OrthoVerdict {
    let margin = eps * h.total - h.gap.abs();
    let mut v = OrthoVerdict::new(RelationId::HhRelative, Some(eps), margin, hh_band(h, nx, ny, tol));
    v = hh_details(v, h)
        .with("lower", (1.0 - eps) / (1.0 + eps))
        .with("upper", (1.0 + eps) / (1.0 - eps));
    if h.i_minus > 0.0 {
        v = v.with("ratio", h.i_plus / h.i_minus);
    }
    if nx == 0.0 || ny == 0.0 { v.degenerate() } else { v }
}

/// Absolute ε-HH-I orthogonality `|I+ − I−| ≤ (2/3)ε‖x‖‖y‖`.
pub fn hh_absolute(
    spec: &NormSpec,
    x: &Vector,
    y: &Vector,
    eps: f64,
    tol: Tolerance,
) -> Result<OrthoVerdict> {
    check_pair(spec, x, y)?;
    check_eps_unit(eps)?;
    let h = hh_values(spec, x, y, tol)?;
    Ok(hh_absolute_from(&h, spec.eval(x), spec.eval(y), eps, tol))
}

pub(crate) fn hh_absolute_from(h: &HHValues, nx: f64, ny: f64, eps: f64, tol: Tolerance) -> OrthoVerdict {
    let rhs = 2.0 / 3.0 * eps * nx * ny;
    let v = OrthoVerdict::new(RelationId::HhAbsolute, Some(eps), rhs - h.gap.abs(), hh_band(h, nx, ny, tol));
    let v = hh_details(v, h).with("rhs", rhs);
    if nx == 0.0 || ny == 0.0 { v.degenerate() } else { v }
}

/// Dispatches on `relation`. ε is required exactly for relations that take it.
pub fn evaluate(
    relation: RelationId,
    spec: &NormSpec,
    x: &Vector,
    y: &Vector,
    eps: Option<f64>,
    tol: Tolerance,
) -> Result<OrthoVerdict> {
    let need = |e: Option<f64>| {
        e.ok_or_else(|| Error::InvalidInput(format!("relation `{relation}` requires epsilon")))
    };
    match relation {
        RelationId::Classic => classic(spec, x, y, tol),
        RelationId::Birkhoff => birkhoff(spec, x, y, tol),
        RelationId::Isosceles => isosceles(spec, x, y, tol),
        RelationId::HhExact => hh_exact(spec, x, y, tol),
        RelationId::EpsInner => eps_inner(spec, x, y, need(eps)?, tol),
        RelationId::DragomirBirkhoff => dragomir_birkhoff(spec, x, y, need(eps)?, tol),
        RelationId::ChmielinskiBirkhoff => chmielinski_birkhoff(spec, x, y, need(eps)?, tol),
        RelationId::IsoAdditive => iso_additive(spec, x, y, need(eps)?, tol),
        RelationId::IsoMultiplicative => iso_multiplicative(spec, x, y, need(eps)?, tol),
        RelationId::HhRelative => hh_relative(spec, x, y, need(eps)?, tol),
        RelationId::HhAbsolute => hh_absolute(spec, x, y, need(eps)?, tol),
    }
}

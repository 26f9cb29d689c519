//! Parsing of norms, vectors, matrices and ε from command-line arguments.

use std::fs;
use std::path::Path;

use ortho_core::{Error, Exponent, Matrix, NormSpec, Result, Vector};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

/// `lp:<p|inf>`, `wlp:<p>:<w1,w2,...>`, `ip:<path-to-gram>`, or a JSON object.
pub fn parse_norm(s: &str) -> Result<NormSpec> {
    let s = s.trim();
    if s.starts_with('{') {
        return serde_json::from_str(s).map_err(|e| Error::InvalidSpec(format!("bad norm JSON: {e}")));
    }
    let (kind, rest) = s
        .split_once(':')
        .ok_or_else(|| Error::InvalidSpec(format!("`{s}`: expected lp:<p>, wlp:<p>:<weights> or ip:<path>")))?;
    match kind {
        "lp" => Ok(NormSpec::Lp { p: rest.parse()? }),
        "wlp" => {
            let (p, w) = rest
                .split_once(':')
                .ok_or_else(|| Error::InvalidSpec("wlp needs weights: wlp:<p>:<w1,w2,...>".into()))?;
            let weights = w
                .split(',')
                .map(|c| c.trim().parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::InvalidSpec(format!("bad weight list `{w}`: {e}")))?;
            Ok(NormSpec::weighted(p.parse::<Exponent>()?, weights))
        }
        "ip" => Ok(NormSpec::inner_product(read_matrix(Path::new(rest))?)),
        other => Err(Error::InvalidSpec(format!("unknown norm kind `{other}`"))),
    }
}

pub fn parse_vector(s: &str) -> Result<Vector> {
    let v: Vec<f64> =
        serde_json::from_str(s.trim()).map_err(|e| Error::InvalidInput(format!("`{s}` is not a JSON array of numbers: {e}")))?;
    Vector::new(v)
}

#[derive(serde::Deserialize)]
struct PairFile {
    x: Vec<f64>,
    y: Vec<f64>,
}

/// Vectors from `--x/--y`, or from a JSON file `{"x": [...], "y": [...]}`.
pub fn vector_pair(x: Option<&str>, y: Option<&str>, file: Option<&Path>) -> Result<(Vector, Vector)> {
    match (x, y, file) {
        (Some(x), Some(y), None) => Ok((parse_vector(x)?, parse_vector(y)?)),
        (None, None, Some(path)) => {
            let p: PairFile = serde_json::from_str(&read(path)?)
                .map_err(|e| Error::InvalidInput(format!("{}: expected {{\"x\": [..], \"y\": [..]}}: {e}", path.display())))?;
            Ok((Vector::new(p.x)?, Vector::new(p.y)?))
        }
        _ => Err(Error::InvalidInput("give both --x and --y, or --file".into())),
    }
}

/// JSON array of rows, or CSV with one row per line.
pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let t = text.trim();
    if t.starts_with('[') {
        let rows: Vec<Vec<f64>> =
            serde_json::from_str(t).map_err(|e| Error::InvalidInput(format!("bad matrix JSON: {e}")))?;
        return Matrix::from_rows(rows);
    }
    let rows = t
        .lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, line)| {
            line.split(',')
                .map(|c| c.trim().parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::InvalidInput(format!("CSV line {}: {e}", i + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

pub fn read_matrix(path: &Path) -> Result<Matrix> {
    parse_matrix(&read(path)?)
}

pub fn check_eps(eps: f64) -> Result<f64> {
    if (0.0..1.0).contains(&eps) {
        Ok(eps)
    } else {
        Err(Error::EpsilonOutOfRange(eps, "[0, 1)"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_syntax() {
        assert_eq!(parse_norm("lp:1").unwrap(), NormSpec::lp(1.0));
        assert_eq!(parse_norm("lp:inf").unwrap(), NormSpec::linf());
        assert_eq!(
            parse_norm("wlp:2:1,4").unwrap(),
            NormSpec::weighted(Exponent::Finite(2.0), vec![1.0, 4.0])
        );
        assert_eq!(parse_norm(r#"{"kind":"lp","p":3}"#).unwrap(), NormSpec::lp(3.0));
        assert!(parse_norm("l2").is_err());
        assert!(parse_norm("xp:2").is_err());
    }

    #[test]
    fn matrix_formats_agree() {
        let a = parse_matrix("[[2,0],[0,1]]").unwrap();
        let b = parse_matrix("2, 0\n0, 1\n").unwrap();
        assert_eq!(a, b);
        assert!(parse_matrix("1,2\n3\n").is_err());
    }

    #[test]
    fn eps_range() {
        assert!(check_eps(0.0).is_ok());
        assert!(check_eps(1.0).is_err());
        assert!(check_eps(-0.1).is_err());
    }
}

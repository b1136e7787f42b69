//! Polynomial sources (`.mp` files, the bundled corpus, inline text),
//! parameter values and ray/chart specifications.

use std::collections::BTreeMap;
use std::path::Path;

use mixsing_core::fan::Ray;
use mixsing_core::parse::{parse, Bindings};
use mixsing_core::{ExactComplex, MixedPolynomial};
use num_rational::BigRational;

use crate::error::CliError;

/// Example polynomials shipped with the binary, by file name.
pub const CORPUS: &[(&str, &str)] = &[
    ("j10_case1_k3.mp", include_str!("../corpus/j10_case1_k3.mp")),
    ("j10_case2_k3.mp", include_str!("../corpus/j10_case2_k3.mp")),
    ("j10_case3_k3.mp", include_str!("../corpus/j10_case3_k3.mp")),
    ("j10_case4_k3.mp", include_str!("../corpus/j10_case4_k3.mp")),
    ("j10_case5_k3.mp", include_str!("../corpus/j10_case5_k3.mp")),
    ("j10_holo_k3.mp", include_str!("../corpus/j10_holo_k3.mp")),
    ("oka_9_17.mp", include_str!("../corpus/oka_9_17.mp")),
    ("rho.mp", include_str!("../corpus/rho.mp")),
];

/// An `.mp` document: expression text plus `@param name=value` defaults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MpSource {
    pub expression: String,
    pub params: BTreeMap<String, String>,
}

pub fn parse_mp(text: &str) -> Result<MpSource, CliError> {
    let mut expression = String::new();
    let mut params = BTreeMap::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if let Some(rest) = line.strip_prefix("@param") {
            let (name, value) = rest
                .trim()
                .split_once('=')
                .ok_or_else(|| CliError::Parse(format!("malformed parameter line `{line}`")))?;
            params.insert(name.trim().to_string(), value.trim().to_string());
        } else if !line.is_empty() {
            if !expression.is_empty() {
                expression.push(' ');
            }
            expression.push_str(line);
        }
    }
    Ok(MpSource { expression, params })
}

/// Resolves `--poly`: an existing file, a bundled corpus entry (by file
/// name, any directory prefix ignored), or literal polynomial text.
pub fn resolve_source(spec: &str) -> Result<MpSource, CliError> {
    let path = Path::new(spec);
    if path.is_file() {
        return parse_mp(&std::fs::read_to_string(path)?);
    }
    if spec.ends_with(".mp") {
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or(spec);
        return match CORPUS.iter().find(|(n, _)| *n == name) {
            Some((_, text)) => parse_mp(text),
            None => Err(CliError::Usage(format!("no such polynomial file `{spec}`"))),
        };
    }
    Ok(MpSource { expression: spec.to_string(), params: BTreeMap::new() })
}

/// An exact value: integer, fraction `a/b`, decimal, or any constant
/// expression the polynomial grammar accepts.
pub fn parse_value(text: &str) -> Result<ExactComplex, CliError> {
    let p = parse(text, &Bindings::new()).map_err(|e| CliError::Parse(format!("parameter value `{text}`: {e}")))?;
    match p.terms() {
        [] => Ok(ExactComplex::zero()),
        [t] if t.exps.nu.iter().chain(&t.exps.mu).all(|&e| e == 0) => Ok(t.coeff.clone()),
        _ => Err(CliError::Parse(format!("parameter value `{text}` is not a constant"))),
    }
}

pub fn parse_real(text: &str) -> Result<BigRational, CliError> {
    let v = parse_value(text)?;
    if !v.is_real() {
        return Err(CliError::Parse(format!("`{text}` is not real")));
    }
    Ok(v.re)
}

/// Parses `name=value` assignments.
pub fn parse_assignment(text: &str) -> Result<(String, String), CliError> {
    let (n, v) = text
        .split_once('=')
        .ok_or_else(|| CliError::Usage(format!("expected name=value, got `{text}`")))?;
    Ok((n.trim().to_string(), v.trim().to_string()))
}

/// Loads the polynomial for a run; explicit params override file defaults.
pub fn load_polynomial(spec: &str, params: &BTreeMap<String, String>) -> Result<(MixedPolynomial, Bindings), CliError> {
    let src = resolve_source(spec)?;
    let mut merged = src.params;
    merged.extend(params.iter().map(|(k, v)| (k.clone(), v.clone())));
    let mut bindings = Bindings::new();
    for (k, v) in &merged {
        bindings.insert(k.clone(), parse_value(v)?);
    }
    let f = parse(&src.expression, &bindings)?;
    Ok((f, bindings))
}

/// `E1`, `E2`, `S`, `P`, `T` or `(a,b)`.
pub fn parse_ray(text: &str) -> Result<Ray, CliError> {
    let t = text.trim();
    let r = match t {
        "E1" | "e1" => Ray::E1,
        "E2" | "e2" => Ray::E2,
        "S" => Ray::new(1, 1)?,
        "P" => Ray::new(1, 2)?,
        "T" => Ray::new(1, 3)?,
        _ => {
            let inner = t
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| CliError::Usage(format!("unrecognized ray `{t}`")))?;
            let (a, b) = inner.split_once(',').ok_or_else(|| CliError::Usage(format!("unrecognized ray `{t}`")))?;
            let num = |s: &str| s.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("unrecognized ray `{t}`")));
            Ray::new(num(a)?, num(b)?).map_err(|e| CliError::Usage(e.to_string()))?
        }
    };
    Ok(r)
}

/// Comma-separated rays; commas inside parentheses belong to the ray.
pub fn parse_ray_list(text: &str) -> Result<Vec<Ray>, CliError> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(parse_ray(&text[start..i])?);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(parse_ray(&text[start..])?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mp_format() {
        let src = parse_mp("# comment\n@param k=5/2\nz1 + # trailing\n k*z2\n").unwrap();
        assert_eq!(src.expression, "z1 + k*z2");
        assert_eq!(src.params["k"], "5/2");
    }

    #[test]
    fn corpus_lookup() {
        let (f, _) = load_polynomial("examples/j10_case4_k3.mp", &BTreeMap::new()).unwrap();
        assert_eq!(f.to_string(), "z2^2*~z2 - 6*z1^2*z2*~z2 + 11*z1^2*~z1^2*z2 - 6*z1^4*~z1^2");
        let mut p = BTreeMap::new();
        p.insert("k".to_string(), "4".to_string());
        let (g, _) = load_polynomial("j10_case4_k3.mp", &p).unwrap();
        assert_eq!(g.terms()[1].coeff, ExactComplex::from_int(-7));
        assert!(load_polynomial("missing.mp", &BTreeMap::new()).is_err());
    }

    #[test]
    fn values_and_rays() {
        assert_eq!(parse_value("2.5").unwrap(), ExactComplex::from_ratio(5, 2));
        assert_eq!(parse_value("5/2").unwrap(), ExactComplex::from_ratio(5, 2));
        assert!(parse_value("z1").is_err());
        assert_eq!(parse_ray_list("E1,(1,2), E2").unwrap(), [Ray::E1, Ray::new(1, 2).unwrap(), Ray::E2]);
        assert_eq!(parse_ray("S").unwrap(), Ray::new(1, 1).unwrap());
        assert!(parse_ray("(2,4)").is_err());
    }
}

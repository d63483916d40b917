//! Text, LaTeX and JSON renderings of elements.

use serde_json::{json, Value};
use thiserror::Error;

use crate::grading::Grading;
use crate::scalar::{Coeff, CoefficientMode, Scalar};

use super::element::{Element, RawExpr};
use super::monomial::Monomial;
use super::rules::normalize;
use super::RingParams;

/// Renders `Σ s·x` in the expression grammar, so that the output parses back.
pub(crate) fn terms_text<'a, T: Coeff + 'a>(terms: impl Iterator<Item = (&'a Monomial, &'a Scalar<T>)>) -> String {
    let mut out = String::new();
    for (mono, s) in terms {
        let (negative, body) = term_body(mono, s);
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `(is_negative, text without the leading sign)` for one term.
fn term_body<T: Coeff>(mono: &Monomial, s: &Scalar<T>) -> (bool, String) {
    let st = s.to_string();
    if s.term_count() > 1 {
        let body = format!("({st})");
        return (false, if mono.is_one() { body } else { format!("{body}*{mono}") });
    }
    let (negative, coeff) = match st.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, st),
    };
    let body = match (coeff.as_str(), mono.is_one()) {
        (c, true) => c.to_string(),
        ("1", false) => mono.to_string(),
        (c, false) => format!("{c}*{mono}"),
    };
    (negative, body)
}

fn latex_factor(name: &str, k: i64) -> Option<String> {
    match k {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{{{k}}}")),
    }
}

/// LaTeX for a monomial, in the paper's notation.
pub(crate) fn monomial_latex(mono: &Monomial) -> String {
    let factors: Vec<String> = [
        ("c_{\\omega-2}", mono.a),
        ("c_{\\chi\\omega-2}", mono.b),
        ("c_{\\omega}", mono.m),
        ("c_{\\chi\\omega}", mono.n),
    ]
    .into_iter()
    .filter_map(|(name, k)| latex_factor(name, k))
    .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join(" ")
    }
}

impl<T: Coeff> Element<T> {
    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        for (mono, s) in self.terms() {
            let coeff = s.to_latex();
            let mono_tex = monomial_latex(mono);
            let (negative, body) = if s.term_count() > 1 {
                (false, if mono.is_one() { format!("({coeff})") } else { format!("({coeff}) {mono_tex}") })
            } else {
                let (neg, c) = match coeff.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, coeff),
                };
                let body = match (c.as_str(), mono.is_one()) {
                    (c, true) => c.to_string(),
                    ("1", false) => mono_tex,
                    (c, false) => format!("{c} {mono_tex}"),
                };
                (neg, body)
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// `{"grading": [a,b,c], "terms": [{"coeff": {"poly": [[i,j,c],…], "kappa": k}, "mono": [a,b,m,n]}]}`.
    ///
    /// Coefficients that do not fit an `i64` are written as decimal strings.
    pub fn to_json(&self) -> Value {
        let g = self.grading();
        let terms: Vec<Value> = self
            .terms()
            .map(|(mono, s)| {
                json!({
                    "coeff": scalar_json(s),
                    "mono": [mono.a, mono.b, mono.m, mono.n],
                })
            })
            .collect();
        json!({ "grading": [g.a, g.b, g.c], "terms": terms })
    }

    /// Reads the encoding written by [`Element::to_json`] and re-normalizes it.
    pub fn from_json(value: &Value, params: &RingParams) -> Result<Self, ElementJsonError> {
        let grading = int_array::<3>(value.get("grading").ok_or(ElementJsonError::Missing("grading"))?)?;
        let grading = Grading::new(grading[0], grading[1], grading[2]);
        let terms = value.get("terms").and_then(Value::as_array).ok_or(ElementJsonError::Missing("terms"))?;
        let mut raw = RawExpr::zero();
        for term in terms {
            let mono = int_array::<4>(term.get("mono").ok_or(ElementJsonError::Missing("mono"))?)?;
            if mono[2] < 0 || mono[3] < 0 {
                return Err(ElementJsonError::Malformed("negative Euler exponent".into()));
            }
            let coeff = term.get("coeff").ok_or(ElementJsonError::Missing("coeff"))?;
            let s = scalar_from_json::<T>(coeff, params.mode)?;
            raw = raw.add(&RawExpr::term(s, Monomial::new(mono[0], mono[1], mono[2], mono[3])));
        }
        let element = normalize(&raw, params).map_err(|e| ElementJsonError::Malformed(e.to_string()))?;
        if element.is_zero() {
            return Ok(Element::zero(grading));
        }
        if element.grading() != grading {
            return Err(ElementJsonError::Malformed(format!(
                "declared grading {grading} but terms have grading {}",
                element.grading()
            )));
        }
        Ok(element)
    }
}

/// Errors reading the JSON element encoding.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ElementJsonError {
    #[error("missing field `{0}`")]
    Missing(&'static str),
    #[error("malformed element: {0}")]
    Malformed(String),
}

fn coeff_json<T: Coeff>(c: &T) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

fn scalar_json<T: Coeff>(s: &Scalar<T>) -> Value {
    let poly: Vec<Value> = s.poly().iter().map(|(&(i, j), c)| json!([i, j, coeff_json(c)])).collect();
    json!({ "poly": poly, "kappa": coeff_json(s.kappa_coeff()) })
}

fn coeff_from_json<T: Coeff>(v: &Value) -> Result<T, ElementJsonError> {
    let parsed = match v {
        Value::Number(n) => n.as_i64().and_then(T::from_i64),
        Value::String(s) => T::from_str_radix(s, 10).ok(),
        _ => None,
    };
    parsed.ok_or_else(|| ElementJsonError::Malformed(format!("bad coefficient {v}")))
}

fn scalar_from_json<T: Coeff>(v: &Value, mode: CoefficientMode) -> Result<Scalar<T>, ElementJsonError> {
    let poly = v.get("poly").and_then(Value::as_array).ok_or(ElementJsonError::Missing("poly"))?;
    let kappa = coeff_from_json::<T>(v.get("kappa").ok_or(ElementJsonError::Missing("kappa"))?)?;
    let mut entries = Vec::new();
    for entry in poly {
        let arr = entry
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| ElementJsonError::Malformed(format!("bad poly entry {entry}")))?;
        let exp = |k: usize| {
            arr[k]
                .as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| ElementJsonError::Malformed(format!("bad exponent {}", arr[k])))
        };
        entries.push(((exp(0)?, exp(1)?), coeff_from_json::<T>(&arr[2])?));
    }
    Ok(Scalar::from_parts(entries, kappa, mode))
}

fn int_array<const N: usize>(v: &Value) -> Result<[i64; N], ElementJsonError> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == N)
        .ok_or_else(|| ElementJsonError::Malformed(format!("expected {N} integers, got {v}")))?;
    let mut out = [0i64; N];
    for (slot, x) in out.iter_mut().zip(arr) {
        *slot = x.as_i64().ok_or_else(|| ElementJsonError::Malformed(format!("expected an integer, got {x}")))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_expr;

    fn nf(text: &str, p: u32, q: u32) -> Element<i64> {
        normalize(&parse_expr(text).unwrap(), &RingParams::finite(p, q).unwrap()).unwrap()
    }

    #[test]
    fn text_forms() {
        assert_eq!(nf("cxwm2*cw*cxwm2*cw", 1, 2).to_string(), "e^2*cxwm2*cw + xi*cw*cxw");
        assert_eq!(nf("cwm2*cxw", 2, 2).to_string(), "e^2 + (1 - kappa)*cxwm2*cw");
        assert_eq!(nf("-3*cw", 2, 2).to_string(), "-3*cw");
        assert_eq!(nf("cw + kappa*cw", 2, 2).to_string(), "(1 + kappa)*cw");
        assert_eq!(nf("-cw + kappa*cw", 2, 2).to_string(), "(-1 + kappa)*cw");
        assert_eq!(nf("cw^2*cxw^2", 2, 2).to_string(), "0");
    }

    #[test]
    fn latex_forms() {
        assert_eq!(nf("cxwm2^-1*cw", 1, 2).to_latex(), "c_{\\chi\\omega-2}^{-1} c_{\\omega}");
        assert_eq!(nf("cwm2*cxw", 2, 2).to_latex(), "e^{2} + (1 - \\kappa) c_{\\chi\\omega-2} c_{\\omega}");
    }

    #[test]
    fn json_round_trip() {
        let params = RingParams::finite(2, 2).unwrap();
        for text in ["cwm2*cxw", "cxwm2^2*cw^2", "3*kappa*cw", "cxwm2^-1*cw^2", "0"] {
            let x = normalize(&parse_expr::<i64>(text).unwrap(), &params).unwrap();
            let json = x.to_json();
            assert_eq!(Element::from_json(&json, &params).unwrap(), x, "{text}");
        }
        let x = nf("cwm2*cxw", 2, 2);
        let text = serde_json::to_string(&x.to_json()).unwrap();
        assert!(text.starts_with("{\"grading\":[0,2,0],\"terms\":[{\"coeff\":{\"poly\":"), "{text}");
    }
}

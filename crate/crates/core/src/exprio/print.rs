use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value as Json};

use crate::operator::ShiftOperator;
use crate::polyarith::{Polynomial, Rational, RationalFunction};

/// Version tag carried by every structured document.
pub const SCHEMA: &str = "holoreduce-v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Format {
    #[default]
    Text,
    Latex,
    Structured,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "structured" => Ok(Format::Structured),
            other => Err(format!("format must be text, latex or structured, got '{other}'")),
        }
    }
}

/// Values with the three canonical renderings.
pub trait Render {
    /// Reparses to an identical value.
    fn to_text(&self) -> String;
    fn to_latex(&self) -> String;
    /// Schema-free JSON body; [`print`] wraps it with the schema tag.
    fn to_json(&self) -> Json;
}

pub fn print<T: Render + ?Sized>(value: &T, format: Format) -> String {
    match format {
        Format::Text => value.to_text(),
        Format::Latex => value.to_latex(),
        Format::Structured => {
            let mut doc = value.to_json();
            if let Json::Object(m) = &mut doc {
                m.insert("schema".into(), Json::String(SCHEMA.into()));
            }
            serde_json::to_string(&doc).expect("json values serialize")
        }
    }
}

pub fn rational_json(r: &Rational) -> Json {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string() })
}

fn coeffs_json(p: &Polynomial) -> Json {
    Json::Array(p.coeffs().iter().map(rational_json).collect())
}

fn push_signed(out: &mut String, negative: bool, body: &str) {
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    out.push_str(body);
}

fn monomial(var: &str, k: usize, latex: bool) -> String {
    match (k, latex) {
        (0, _) => String::new(),
        (1, _) => var.to_string(),
        (k, false) => format!("{var}^{k}"),
        (k, true) if k < 10 => format!("{var}^{k}"),
        (k, true) => format!("{var}^{{{k}}}"),
    }
}

pub fn poly_to_text(p: &Polynomial) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let a = c.abs();
        let mono = monomial("n", k, false);
        let body = if mono.is_empty() {
            a.to_string()
        } else if a.is_one() {
            mono
        } else {
            format!("{a}*{mono}")
        };
        push_signed(&mut out, c.is_negative(), &body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn ratfunc_to_text(r: &RationalFunction) -> String {
    if r.is_polynomial() {
        poly_to_text(r.numer())
    } else {
        format!("({})/({})", poly_to_text(r.numer()), poly_to_text(r.denom()))
    }
}

pub fn operator_to_text(op: &ShiftOperator) -> String {
    let mut out = String::new();
    for (i, c) in op.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let shift = monomial("S", i, false);
        let body = match (shift.is_empty(), c.is_one()) {
            (true, _) => format!("({})", poly_to_text(c)),
            (false, true) => shift,
            (false, false) => format!("({})*{shift}", poly_to_text(c)),
        };
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn integer_poly_latex(ints: &[num_bigint::BigInt]) -> (String, usize) {
    let mut out = String::new();
    let mut terms = 0;
    for (k, c) in ints.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        terms += 1;
        let a = c.abs();
        let mono = monomial("n", k, true);
        let body = if mono.is_empty() {
            a.to_string()
        } else if a.is_one() {
            mono
        } else {
            format!("{a} {mono}")
        };
        push_signed(&mut out, c.is_negative(), &body);
    }
    (out, terms)
}

fn rational_latex(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        format!("{sign}\\frac{{{}}}{{{}}}", r.numer().abs(), r.denom())
    }
}

/// Content times primitive part, e.g. `\frac{1}{9}(15 n^4 + 27)`.
pub fn poly_to_latex(p: &Polynomial) -> String {
    let Some((content, ints)) = p.primitive_part() else {
        return "0".into();
    };
    if ints.len() == 1 {
        return rational_latex(&content);
    }
    let (body, terms) = integer_poly_latex(&ints);
    if content.is_one() {
        return body;
    }
    let wrapped = if terms > 1 { format!("({body})") } else { body };
    if content == -Rational::one() {
        format!("-{wrapped}")
    } else if terms == 1 && ints.iter().all(|c| c.is_zero() || c.is_one()) {
        // primitive part is a bare monomial
        format!("{} {wrapped}", rational_latex(&content))
    } else {
        format!("{}{wrapped}", rational_latex(&content))
    }
}

pub fn ratfunc_to_latex(r: &RationalFunction) -> String {
    if r.is_polynomial() {
        poly_to_latex(r.numer())
    } else {
        format!("\\frac{{{}}}{{{}}}", poly_to_latex(r.numer()), poly_to_latex(r.denom()))
    }
}

pub fn operator_to_latex(op: &ShiftOperator) -> String {
    let mut out = String::new();
    for (i, c) in op.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let shift = monomial("\\sigma", i, true);
        let coef = poly_to_latex(c);
        let body = match (shift.is_empty(), c.is_one()) {
            (true, _) => format!("({coef})"),
            (false, true) => shift,
            (false, false) => format!("({coef}) {shift}"),
        };
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl Render for Polynomial {
    fn to_text(&self) -> String {
        poly_to_text(self)
    }
    fn to_latex(&self) -> String {
        poly_to_latex(self)
    }
    fn to_json(&self) -> Json {
        json!({ "type": "polynomial", "coeffs": coeffs_json(self) })
    }
}

impl Render for RationalFunction {
    fn to_text(&self) -> String {
        ratfunc_to_text(self)
    }
    fn to_latex(&self) -> String {
        ratfunc_to_latex(self)
    }
    fn to_json(&self) -> Json {
        json!({
            "type": "rational_function",
            "numer": coeffs_json(self.numer()),
            "denom": coeffs_json(self.denom()),
        })
    }
}

impl Render for ShiftOperator {
    fn to_text(&self) -> String {
        operator_to_text(self)
    }
    fn to_latex(&self) -> String {
        operator_to_latex(self)
    }
    fn to_json(&self) -> Json {
        json!({
            "type": "operator",
            "coeffs": self.coeffs().iter().map(coeffs_json).collect::<Vec<_>>(),
        })
    }
}

/// Polynomial body used when nesting inside larger structured reports.
pub fn poly_json(p: &Polynomial) -> Json {
    p.to_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exprio::{parse_operator, parse_polynomial};

    #[test]
    fn text_forms() {
        let p = parse_polynomial("(2*n-1)^4").unwrap();
        assert_eq!(poly_to_text(&p), "16*n^4 - 32*n^3 + 24*n^2 - 8*n + 1");
        assert_eq!(poly_to_text(&Polynomial::zero()), "0");
        assert_eq!(poly_to_text(&parse_polynomial("-n/3 + 1").unwrap()), "-1/3*n + 1");
        let op = parse_operator("S - 1").unwrap();
        assert_eq!(operator_to_text(&op), "(-1) + S");
        assert_eq!(parse_operator(&operator_to_text(&op)).unwrap(), op);
    }

    #[test]
    fn latex_forms() {
        let p = parse_polynomial("(27+103*n+141*n^2+78*n^3+15*n^4)/9").unwrap();
        assert_eq!(
            poly_to_latex(&p),
            "\\frac{1}{9}(15 n^4 + 78 n^3 + 141 n^2 + 103 n + 27)"
        );
        assert_eq!(poly_to_latex(&parse_polynomial("-2*n").unwrap()), "-2 n");
        assert_eq!(poly_to_latex(&parse_polynomial("n/9").unwrap()), "\\frac{1}{9} n");
        let op = parse_operator("n + 8*(n+2)^3*S^2").unwrap();
        assert!(operator_to_latex(&op).contains("\\sigma^2"));
    }

    #[test]
    fn structured_form() {
        let p = parse_polynomial("n/2 - 3").unwrap();
        let s = print(&p, Format::Structured);
        let v: Json = serde_json::from_str(&s).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["coeffs"][0]["num"], "-3");
        assert_eq!(v["coeffs"][1]["den"], "2");
    }
}

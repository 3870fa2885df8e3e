use serde_json::{json, Map, Value as Json};

use crate::exprio::{rational_json, Format, Render, SCHEMA};
use crate::operator::ShiftOperator;
use crate::polyarith::{Polynomial, Rational, RationalFunction};

pub enum Field {
    Int(i64),
    Bool(bool),
    Text(String),
    Rational(Rational),
    Rationals(Vec<Rational>),
    Ints(Vec<i64>),
    Poly(Polynomial),
    Polys(Vec<Polynomial>),
    RatFn(RationalFunction),
    Operator(ShiftOperator),
    Null,
}

fn rational_text(r: &Rational) -> String {
    r.to_string()
}

fn rational_latex(r: &Rational) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    let sign = if r.numer().sign() == num_bigint::Sign::Minus { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", r.numer().magnitude(), r.denom())
}

impl Field {
    fn text(&self) -> String {
        match self {
            Field::Int(i) => i.to_string(),
            Field::Bool(b) => b.to_string(),
            Field::Text(s) => s.clone(),
            Field::Rational(r) => rational_text(r),
            Field::Rationals(v) => join(v.iter().map(rational_text)),
            Field::Ints(v) => join(v.iter().map(|i| i.to_string())),
            Field::Poly(p) => p.to_text(),
            Field::Polys(v) => join(v.iter().map(|p| p.to_text())),
            Field::RatFn(r) => r.to_text(),
            Field::Operator(op) => op.to_text(),
            Field::Null => "none".into(),
        }
    }

    fn latex(&self) -> String {
        match self {
            Field::Rational(r) => rational_latex(r),
            Field::Rationals(v) => join(v.iter().map(rational_latex)),
            Field::Poly(p) => p.to_latex(),
            Field::Polys(v) => join(v.iter().map(|p| p.to_latex())),
            Field::RatFn(r) => r.to_latex(),
            Field::Operator(op) => op.to_latex(),
            Field::Text(s) => format!("\\text{{{s}}}"),
            other => other.text(),
        }
    }

    fn json(&self) -> Json {
        match self {
            Field::Int(i) => json!(i),
            Field::Bool(b) => json!(b),
            Field::Text(s) => json!(s),
            Field::Rational(r) => rational_json(r),
            Field::Rationals(v) => Json::Array(v.iter().map(rational_json).collect()),
            Field::Ints(v) => json!(v),
            Field::Poly(p) => p.to_json(),
            Field::Polys(v) => Json::Array(v.iter().map(|p| p.to_json()).collect()),
            Field::RatFn(r) => r.to_json(),
            Field::Operator(op) => op.to_json(),
            Field::Null => Json::Null,
        }
    }
}

fn join(items: impl Iterator<Item = String>) -> String {
    let v: Vec<String> = items.collect();
    format!("[{}]", v.join(", "))
}

/// Ordered key/value report. Text and LaTeX keep insertion order; the
/// structured form is a JSON object with sorted keys.
pub struct Report {
    command: &'static str,
    summary: Option<String>,
    fields: Vec<(&'static str, Field)>,
}

impl Report {
    pub fn new(command: &'static str) -> Report {
        Report {
            command,
            summary: None,
            fields: Vec::new(),
        }
    }

    pub fn summary(mut self, s: impl Into<String>) -> Report {
        self.summary = Some(s.into());
        self
    }

    pub fn field(mut self, key: &'static str, value: Field) -> Report {
        self.fields.push((key, value));
        self
    }

    pub fn push(&mut self, key: &'static str, value: Field) {
        self.fields.push((key, value));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text | Format::Latex => {
                let mut out = String::new();
                if let Some(s) = &self.summary {
                    out.push_str(s);
                    out.push('\n');
                }
                for (k, v) in &self.fields {
                    let body = if format == Format::Text { v.text() } else { v.latex() };
                    out.push_str(&format!("{k}: {body}\n"));
                }
                out
            }
            Format::Structured => {
                let mut m = Map::new();
                m.insert("schema".into(), json!(SCHEMA));
                m.insert("command".into(), json!(self.command));
                if let Some(s) = &self.summary {
                    m.insert("summary".into(), json!(s));
                }
                for (k, v) in &self.fields {
                    m.insert((*k).into(), v.json());
                }
                let mut s = serde_json::to_string(&Json::Object(m)).expect("json values serialize");
                s.push('\n');
                s
            }
        }
    }
}

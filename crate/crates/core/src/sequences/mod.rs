//! Exact evaluation of holonomic sequences, the built-in catalog, and
//! annihilator guessing from terms.

mod catalog;
pub mod closed;
mod guess;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::Zero;
use thiserror::Error;

use crate::operator::ShiftOperator;
use crate::polyarith::{integer_roots, BigInt, Rational};

pub use catalog::{catalog, lookup, CatalogEntry};
pub use guess::{guess_annihilator, min_terms, HELD_OUT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("index {n} is below the start index {start}")]
    IndexBelowStart { n: i64, start: i64 },
    #[error("leading coefficient a_J vanishes at n = {at} and no stored value covers F({target})")]
    SingularLeadingCoefficient { at: i64, target: i64 },
    #[error("need at least {needed} terms, got {got}")]
    InsufficientTerms { needed: usize, got: usize },
    #[error("line {line}: cannot read {text:?} as a rational")]
    BadTerm { line: usize, text: String },
    #[error("expected {expected} initial values, got {got}")]
    InitialValues { expected: usize, got: usize },
    #[error("unknown sequence key '{0}'")]
    UnknownKey(String),
    #[error("sequence operator must have order at least 1")]
    OrderZero,
}

pub type Oracle = Arc<dyn Fn(i64) -> Rational + Send + Sync>;

/// `F(n)` for `n >= start`, defined by `L(F) = 0` and `F(start..start+J)`.
///
/// Values are cached; the cache only grows, so evaluation order does not
/// change results.
pub struct HolonomicSequence {
    name: String,
    operator: ShiftOperator,
    start: i64,
    initial: Vec<Rational>,
    oracle: Option<Oracle>,
    overrides: BTreeMap<i64, Rational>,
    cache: Mutex<Vec<Rational>>,
}

impl HolonomicSequence {
    pub fn new(
        name: impl Into<String>,
        operator: ShiftOperator,
        start: i64,
        initial: Vec<Rational>,
    ) -> Result<Self, SequenceError> {
        let j = operator.order();
        if operator.is_zero() || j == 0 {
            return Err(SequenceError::OrderZero);
        }
        if initial.len() != j {
            return Err(SequenceError::InitialValues {
                expected: j,
                got: initial.len(),
            });
        }
        Ok(Self {
            name: name.into(),
            operator,
            start,
            cache: Mutex::new(initial.clone()),
            initial,
            oracle: None,
            overrides: BTreeMap::new(),
        })
    }

    /// Attaches a direct evaluator and stores its value at every point the
    /// forward recurrence cannot reach.
    pub fn with_oracle(mut self, oracle: Oracle) -> Self {
        let j = self.operator.order() as i64;
        let lead = self.operator.coeff(self.operator.order());
        if let Ok(roots) = integer_roots(&lead) {
            for r in roots.iter().filter_map(|r| i64::try_from(r).ok()) {
                if r >= self.start {
                    self.overrides.insert(r + j, oracle(r + j));
                }
            }
        }
        self.oracle = Some(oracle);
        self
    }

    pub fn with_override(mut self, n: i64, value: Rational) -> Self {
        self.overrides.insert(n, value);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn operator(&self) -> &ShiftOperator {
        &self.operator
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn initial_values(&self) -> &[Rational] {
        &self.initial
    }

    pub fn has_oracle(&self) -> bool {
        self.oracle.is_some()
    }

    pub fn oracle_eval(&self, n: i64) -> Option<Rational> {
        self.oracle.as_ref().map(|f| f(n))
    }

    pub fn eval(&self, n: i64) -> Result<Rational, SequenceError> {
        if n < self.start {
            return Err(SequenceError::IndexBelowStart {
                n,
                start: self.start,
            });
        }
        let idx = (n - self.start) as usize;
        let mut cache = self.cache.lock().expect("sequence cache poisoned");
        let j = self.operator.order();
        let lead = self.operator.coeff(j);
        while cache.len() <= idx {
            let target = self.start + cache.len() as i64;
            let m = target - j as i64;
            let value = if let Some(v) = self.overrides.get(&target) {
                v.clone()
            } else {
                let d = lead.eval_int(m);
                if d.is_zero() {
                    return Err(SequenceError::SingularLeadingCoefficient { at: m, target });
                }
                let base = cache.len() - j;
                let mut acc = Rational::zero();
                for i in 0..j {
                    let c = self.operator.coeff(i);
                    if !c.is_zero() {
                        acc += c.eval_int(m) * &cache[base + i];
                    }
                }
                -acc / d
            };
            cache.push(value);
        }
        Ok(cache[idx].clone())
    }

    pub fn values(&self, from: i64, to_inclusive: i64) -> Result<Vec<Rational>, SequenceError> {
        if to_inclusive >= from {
            self.eval(to_inclusive)?;
        }
        (from..=to_inclusive).map(|n| self.eval(n)).collect()
    }
}

impl fmt::Debug for HolonomicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HolonomicSequence")
            .field("name", &self.name)
            .field("operator", &self.operator)
            .field("start", &self.start)
            .field("initial", &self.initial)
            .field("oracle", &self.oracle.is_some())
            .finish()
    }
}

/// One exact rational per line (`a/b` or an integer); `#` starts a comment.
pub fn parse_terms(text: &str) -> Result<Vec<Rational>, SequenceError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(parse_rational(line).ok_or_else(|| SequenceError::BadTerm {
            line: i + 1,
            text: line.to_string(),
        })?);
    }
    Ok(out)
}

/// `a`, `-a`, `a/b` with integer `a`, nonzero `b`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

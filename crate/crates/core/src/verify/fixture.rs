//! Key/value fixture files.
//!
//! ```text
//! # comment
//! kind     = identity            # or congruence
//! sequence = domb_over_neg32n    # catalog key
//! numer    = 3*n + 1
//! denom    = 1
//! start    = 0
//! target   = 2/pi                # identity: r0 + r1/pi
//! source   = domb_neg32              # identity, optional: fixture this one is derived from
//! factor   = (n+2)^2             #   with the rational-reduction data
//! side     = upper
//! order    = 2
//! target   = 3/2 mod p^2         # congruence
//! primes   = 1 mod 3             # congruence: residue filter on p
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_traits::Zero;

use super::VerifyError;
use crate::exprio::parse_polynomial;
use crate::polyarith::{Polynomial, Rational};
use crate::reduction::Side;
use crate::sequences::parse_rational;

/// `r0 + r1/pi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiLinear {
    pub r0: Rational,
    pub r1: Rational,
}

impl PiLinear {
    pub fn parse(text: &str) -> Option<PiLinear> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let compact = compact.replace('π', "pi");
        if compact.is_empty() {
            return None;
        }
        let mut r0 = Rational::zero();
        let mut r1 = Rational::zero();
        let bytes = compact.as_bytes();
        let mut start = 0;
        for i in 1..=bytes.len() {
            if i < bytes.len() && !(matches!(bytes[i], b'+' | b'-') && bytes[i - 1] != b'/') {
                continue;
            }
            let term = &compact[start..i];
            start = i;
            let (sign, body) = match term.as_bytes()[0] {
                b'+' => (1, &term[1..]),
                b'-' => (-1, &term[1..]),
                _ => (1, term),
            };
            let sign = Rational::from_integer(sign.into());
            if let Some(coef) = body.strip_suffix("/pi") {
                r1 += sign * parse_rational(coef)?;
            } else {
                r0 += sign * parse_rational(body)?;
            }
        }
        Some(PiLinear { r0, r1 })
    }

    pub fn scale(&self, c: &Rational) -> PiLinear {
        PiLinear {
            r0: &self.r0 * c,
            r1: &self.r1 * c,
        }
    }
}

impl fmt::Display for PiLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.r0.is_zero(), self.r1.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.r0),
            (true, false) => write!(f, "{}/pi", self.r1),
            (false, false) => {
                let sign = if self.r1 < Rational::zero() { '-' } else { '+' };
                write!(f, "{} {sign} {}/pi", self.r0, num_traits::Signed::abs(&self.r1))
            }
        }
    }
}

/// Rational reduction that turns the source fixture into this one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub source: String,
    pub factor: Polynomial,
    pub side: Side,
    pub order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityFixture {
    pub name: String,
    pub sequence_key: String,
    pub numer: Polynomial,
    pub denom: Polynomial,
    pub start: i64,
    /// Value of `sum_{n >= start} numer(n)/denom(n) F(n)`.
    pub target: PiLinear,
    pub derivation: Option<Derivation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceFixture {
    pub name: String,
    pub sequence_key: String,
    pub numer: Polynomial,
    pub denom: Polynomial,
    pub start: i64,
    pub modulus_power: u32,
    /// `p = residue mod modulus`.
    pub prime_filter: (u64, u64),
    /// `sum_{n=start}^{p-1} numer(n)/denom(n) F(n) = target mod p^k`.
    pub target: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fixture {
    Identity(IdentityFixture),
    Congruence(CongruenceFixture),
}

impl Fixture {
    pub fn name(&self) -> &str {
        match self {
            Fixture::Identity(f) => &f.name,
            Fixture::Congruence(f) => &f.name,
        }
    }

    pub fn load(path: &Path) -> Result<Fixture, VerifyError> {
        let text = std::fs::read_to_string(path).map_err(|e| VerifyError::Fixture {
            line: 0,
            message: format!("{}: {e}", path.display()),
        })?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        Fixture::parse(&name, &text)
    }

    pub fn parse(name: &str, text: &str) -> Result<Fixture, VerifyError> {
        let mut fields: BTreeMap<String, (usize, String)> = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| bad(i + 1, "expected 'key = value'"))?;
            let key = k.trim().to_string();
            if fields.insert(key.clone(), (i + 1, v.trim().to_string())).is_some() {
                return Err(bad(i + 1, format!("duplicate key '{key}'")));
            }
        }
        let mut f = Fields { fields, name };
        let kind = f.take("kind")?;
        let sequence_key = f.take("sequence")?.1;
        let numer = f.poly("numer")?;
        let denom = f.poly("denom")?;
        let (line, start) = f.take("start")?;
        let start: i64 = start.parse().map_err(|_| bad(line, "start must be an integer"))?;
        let (tline, target) = f.take("target")?;
        if denom.is_zero() {
            return Err(bad(0, "denom must be nonzero"));
        }
        let fixture = match kind.1.as_str() {
            "identity" => {
                let target = PiLinear::parse(&target)
                    .ok_or_else(|| bad(tline, "target must read 'r0 + r1/pi'"))?;
                let derivation = match f.try_take("source") {
                    None => None,
                    Some((_, source)) => {
                        let factor = f.poly("factor")?;
                        let (sl, side) = f.take("side")?;
                        let side = side.parse().map_err(|e: String| bad(sl, e))?;
                        let (ol, order) = f.take("order")?;
                        let order = order.parse().map_err(|_| bad(ol, "order must be a nonnegative integer"))?;
                        Some(Derivation {
                            source,
                            factor,
                            side,
                            order,
                        })
                    }
                };
                Fixture::Identity(IdentityFixture {
                    name: name.to_string(),
                    sequence_key,
                    numer,
                    denom,
                    start,
                    target,
                    derivation,
                })
            }
            "congruence" => {
                let (target, power) = parse_mod_target(&target)
                    .ok_or_else(|| bad(tline, "target must read 'a/b mod p^k'"))?;
                let (pl, filter) = f.take("primes")?;
                let prime_filter = parse_residue(&filter)
                    .ok_or_else(|| bad(pl, "primes must read 'r mod m'"))?;
                Fixture::Congruence(CongruenceFixture {
                    name: name.to_string(),
                    sequence_key,
                    numer,
                    denom,
                    start,
                    modulus_power: power,
                    prime_filter,
                    target,
                })
            }
            other => return Err(bad(kind.0, format!("unknown kind '{other}'"))),
        };
        if let Some((k, (line, _))) = f.fields.into_iter().next() {
            return Err(bad(line, format!("unexpected key '{k}'")));
        }
        Ok(fixture)
    }
}

fn bad(line: usize, message: impl Into<String>) -> VerifyError {
    VerifyError::Fixture {
        line,
        message: message.into(),
    }
}

struct Fields<'a> {
    fields: BTreeMap<String, (usize, String)>,
    name: &'a str,
}

impl Fields<'_> {
    fn try_take(&mut self, key: &str) -> Option<(usize, String)> {
        self.fields.remove(key)
    }

    fn take(&mut self, key: &str) -> Result<(usize, String), VerifyError> {
        self.try_take(key)
            .ok_or_else(|| bad(0, format!("fixture '{}' lacks key '{key}'", self.name)))
    }

    fn poly(&mut self, key: &str) -> Result<Polynomial, VerifyError> {
        let (line, text) = self.take(key)?;
        parse_polynomial(&text).map_err(|e| bad(line, format!("{key}: {e}")))
    }
}

/// `a/b mod p^k`
pub fn parse_mod_target(text: &str) -> Option<(Rational, u32)> {
    let (value, modulus) = text.split_once("mod")?;
    let modulus: String = modulus.chars().filter(|c| !c.is_whitespace()).collect();
    let power = match modulus.strip_prefix('p')? {
        "" => 1,
        rest => rest.strip_prefix('^')?.parse().ok()?,
    };
    if power == 0 {
        return None;
    }
    Some((parse_rational(value)?, power))
}

/// `r mod m`
pub fn parse_residue(text: &str) -> Option<(u64, u64)> {
    let (r, m) = text.split_once("mod")?;
    let m: u64 = m.trim().parse().ok()?;
    let r: u64 = r.trim().parse().ok()?;
    (m > 0).then_some((r % m, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::{rat, ratio};

    #[test]
    fn pi_linear_forms() {
        let t = PiLinear::parse("80 - 162/pi").unwrap();
        assert_eq!((t.r0, t.r1), (rat(80), rat(-162)));
        let t = PiLinear::parse("33/4 - 18/pi").unwrap();
        assert_eq!((t.r0, t.r1), (ratio(33, 4), rat(-18)));
        let t = PiLinear::parse("-217/8 + 162/pi").unwrap();
        assert_eq!((t.r0, t.r1), (ratio(-217, 8), rat(162)));
        let t = PiLinear::parse("2/π").unwrap();
        assert_eq!((t.r0, t.r1), (rat(0), rat(2)));
        assert_eq!(PiLinear::parse("33/4 - 18/pi").unwrap().to_string(), "33/4 - 18/pi");
        assert!(PiLinear::parse("").is_none());
        assert!(PiLinear::parse("2*pi").is_none());
    }

    #[test]
    fn mod_targets() {
        assert_eq!(parse_mod_target("3/2 mod p^2"), Some((ratio(3, 2), 2)));
        assert_eq!(parse_mod_target("0 mod p"), Some((rat(0), 1)));
        assert_eq!(parse_mod_target("1 mod q^2"), None);
        assert_eq!(parse_residue("1 mod 3"), Some((1, 3)));
    }

    #[test]
    fn parse_identity() {
        let text = "kind = identity\nsequence = domb_over_neg32n\nnumer = 3*n+1 # x\ndenom = 1\nstart = 0\ntarget = 2/pi\n";
        let Fixture::Identity(f) = Fixture::parse("domb_neg32", text).unwrap() else {
            panic!("kind")
        };
        assert_eq!(f.numer, Polynomial::from_ints(&[1, 3]));
        assert!(f.derivation.is_none());
        let err = Fixture::parse("x", &format!("{text}extra = 1\n")).unwrap_err();
        assert!(matches!(err, VerifyError::Fixture { line: 7, .. }));
        assert!(Fixture::parse("x", "kind = identity\n").is_err());
    }
}

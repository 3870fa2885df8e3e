//! Fixed-point evaluation of series partial sums and of `r0 + r1/pi`.
//!
//! Reals are `BigInt` mantissas over `2^bits`. The sequence is advanced by
//! its forward recurrence in fixed point, so only the dominant-solution case
//! is numerically stable; [`numeric_series_check`] cross-checks the start of
//! the run against exact values and reports [`VerifyError::PrecisionLoss`]
//! when they drift.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::fixture::{IdentityFixture, PiLinear};
use super::VerifyError;
use crate::polyarith::{Polynomial, Rational};
use crate::sequences::lookup;

/// Bits carried beyond the requested precision.
pub const GUARD_BITS: u32 = 64;
/// Default requested precision; `HOLOREDUCE_PRECISION_BITS` overrides it.
pub const DEFAULT_PRECISION_BITS: u32 = 96;
/// Indices after the sequence start that are checked against exact values.
const EXACT_PREFIX: i64 = 256;

pub fn precision_from_env() -> u32 {
    std::env::var("HOLOREDUCE_PRECISION_BITS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&b| b >= 64)
        .unwrap_or(DEFAULT_PRECISION_BITS)
}

/// `mant / 2^bits`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixed {
    pub mant: BigInt,
    pub bits: u32,
}

impl Fixed {
    pub fn zero(bits: u32) -> Fixed {
        Fixed {
            mant: BigInt::zero(),
            bits,
        }
    }

    /// Rounded to nearest.
    pub fn from_rational(r: &Rational, bits: u32) -> Fixed {
        let num = r.numer() << (bits + 1);
        let q = num.div_floor(r.denom());
        Fixed {
            mant: (q + 1) >> 1,
            bits,
        }
    }

    pub fn add(&self, o: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, o.bits);
        Fixed {
            mant: &self.mant + &o.mant,
            bits: self.bits,
        }
    }

    pub fn sub(&self, o: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, o.bits);
        Fixed {
            mant: &self.mant - &o.mant,
            bits: self.bits,
        }
    }

    pub fn abs(&self) -> Fixed {
        Fixed {
            mant: self.mant.abs(),
            bits: self.bits,
        }
    }

    pub fn half(&self) -> Fixed {
        Fixed {
            mant: &self.mant >> 1,
            bits: self.bits,
        }
    }

    /// Exact rational value of the mantissa.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mant.clone(), BigInt::one() << self.bits)
    }

    pub fn to_f64(&self) -> f64 {
        let excess = self.mant.bits().saturating_sub(60) as u32;
        let shift = excess.min(self.bits);
        let m = (&self.mant >> shift).to_f64().unwrap_or(f64::NAN);
        m * 2f64.powi(shift as i32 - self.bits as i32)
    }

    /// Truncated decimal expansion with `digits` fractional digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        let scaled = (self.mant.abs() * BigInt::from(10).pow(digits)) >> self.bits;
        let s = format!("{:0>width$}", scaled.to_string(), width = digits as usize + 1);
        let (int, frac) = s.split_at(s.len() - digits as usize);
        let sign = if self.mant.is_negative() { "-" } else { "" };
        format!("{sign}{int}.{frac}")
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(30))
    }
}

fn arctan_inv(x: u64, bits: u32) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = (BigInt::one() << bits) / &x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// `pi` by Machin's formula `16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(bits: u32) -> Fixed {
    let work = bits + 16;
    let v = arctan_inv(5, work) * 16 - arctan_inv(239, work) * 4;
    Fixed {
        mant: v >> 16,
        bits,
    }
}

pub fn pi_linear_value(t: &PiLinear, bits: u32) -> Fixed {
    let work = bits + 16;
    let p = pi(work);
    let inv_pi = (BigInt::one() << (2 * work)) / &p.mant;
    let r1 = (t.r1.numer() * inv_pi).div_floor(t.r1.denom());
    let r0 = Fixed::from_rational(&t.r0, work).mant;
    Fixed {
        mant: (r0 + r1) >> 16,
        bits,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Accel {
    #[default]
    None,
    /// Mean of the last two partial sums.
    Average1,
}

impl FromStr for Accel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "none" => Ok(Accel::None),
            "average1" => Ok(Accel::Average1),
            other => Err(format!("accel must be none or average1, got '{other}'")),
        }
    }
}

impl fmt::Display for Accel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Accel::None => "none",
            Accel::Average1 => "average1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericReport {
    pub value: Fixed,
    pub target: Fixed,
    pub abs_error: Fixed,
    /// `|summand|` at index `start + terms`.
    pub first_omitted: Fixed,
    pub terms: usize,
    pub accel: Accel,
    pub precision_bits: u32,
    /// Index after which the fixed-point state was identically zero.
    pub underflow_at: Option<i64>,
}

impl NumericReport {
    pub fn abs_error_f64(&self) -> f64 {
        self.abs_error.to_f64()
    }
}

/// Integer polynomial `content * ints`, evaluated without rationals.
struct IntPoly {
    content: Rational,
    ints: Vec<BigInt>,
}

impl IntPoly {
    fn new(p: &Polynomial) -> IntPoly {
        match p.primitive_part() {
            Some((content, ints)) => IntPoly { content, ints },
            None => IntPoly {
                content: Rational::zero(),
                ints: vec![],
            },
        }
    }

    fn eval(&self, n: i64) -> BigInt {
        let x = BigInt::from(n);
        self.ints.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
    }
}

/// `sum_{n=start}^{start+N-1} numer(n)/denom(n) F(n)` in fixed point, with
/// optional averaging, compared against the fixture target.
pub fn numeric_series_check(
    fix: &IdentityFixture,
    n_terms: usize,
    accel: Accel,
    precision_bits: u32,
) -> Result<NumericReport, VerifyError> {
    if n_terms < 100 {
        return Err(VerifyError::InvalidArgument(format!(
            "numeric checks need N >= 100, got {n_terms}"
        )));
    }
    let entry = lookup(&fix.sequence_key)
        .ok_or_else(|| VerifyError::Sequence(crate::sequences::SequenceError::UnknownKey(fix.sequence_key.clone())))?;
    let seq = &entry.sequence;
    if fix.start < seq.start() {
        return Err(VerifyError::DomainViolation {
            a: fix.start,
            start: seq.start(),
        });
    }
    let bits = precision_bits + GUARD_BITS;
    let op = seq.operator().primitive();
    let j = op.order();
    // primitive operator: every content is an integer
    let coeffs: Vec<IntPoly> = op.coeffs().iter().map(IntPoly::new).collect();
    debug_assert!(coeffs.iter().all(|c| c.content.is_integer()));
    let numer = IntPoly::new(&fix.numer);
    let denom = IntPoly::new(&fix.denom);
    let ratio = &numer.content / &denom.content;

    let mut window: Vec<BigInt> = seq
        .initial_values()
        .iter()
        .map(|v| Fixed::from_rational(v, bits).mant)
        .collect();
    let last = fix.start + n_terms as i64;
    let mut sum = BigInt::zero();
    let mut prev_sum = BigInt::zero();
    let mut max_term = BigInt::zero();
    let mut first_omitted = BigInt::zero();
    let mut underflow_at = None;
    let mut n = seq.start();
    loop {
        let f = window[0].clone();
        if n <= seq.start() + EXACT_PREFIX {
            let exact = Fixed::from_rational(&seq.eval(n)?, bits).mant;
            let drift = (&exact - &f).abs();
            let allowed = (exact.abs() >> precision_bits) + (BigInt::one() << (GUARD_BITS / 2));
            if drift > allowed {
                return Err(VerifyError::PrecisionLoss(format!(
                    "fixed-point recurrence drifted at n = {n}"
                )));
            }
        }
        if n >= fix.start {
            let d = denom.eval(n);
            if d.is_zero() {
                return Err(VerifyError::DenominatorVanishes { n });
            }
            let num = numer.eval(n) * ratio.numer();
            let den = d * ratio.denom();
            let term = (&f * num).div_floor(&den);
            if n == last {
                first_omitted = term.abs();
                break;
            }
            max_term = max_term.max(term.abs());
            prev_sum = sum.clone();
            sum += term;
        }
        if window.iter().all(Zero::is_zero) && n >= fix.start && underflow_at.is_none() {
            // zero state stays zero; every later term vanishes
            underflow_at = Some(n);
            prev_sum = sum.clone();
            break;
        }
        let m = n;
        let lead = coeffs[j].eval(m);
        let next = if lead.is_zero() {
            Fixed::from_rational(&seq.eval(m + j as i64)?, bits).mant
        } else {
            let mut acc = BigInt::zero();
            for (i, c) in coeffs.iter().enumerate().take(j) {
                if !c.ints.is_empty() {
                    acc += c.eval(m) * c.content.numer() * &window[i];
                }
            }
            -(acc.div_floor(&(lead * coeffs[j].content.numer())))
        };
        window.remove(0);
        window.push(next);
        n += 1;
    }
    let value_mant = match accel {
        Accel::None => sum.clone(),
        Accel::Average1 => (&sum + &prev_sum) >> 1,
    };
    let cancel = max_term.bits() as i64 - value_mant.bits() as i64;
    if !value_mant.is_zero() && cancel > (GUARD_BITS as i64 - 8) {
        return Err(VerifyError::PrecisionLoss(format!(
            "partial sums cancel {cancel} bits"
        )));
    }
    let value = Fixed { mant: value_mant, bits };
    let target = pi_linear_value(&fix.target, bits);
    let abs_error = value.sub(&target).abs();
    Ok(NumericReport {
        value,
        target,
        abs_error,
        first_omitted: Fixed {
            mant: first_omitted,
            bits,
        },
        terms: n_terms,
        accel,
        precision_bits,
        underflow_at,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        assert_eq!(pi(200).to_decimal(40), "3.1415926535897932384626433832795028841971");
        assert!((pi(96).to_f64() - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn pi_linear() {
        let t = PiLinear::parse("33/4 - 18/pi").unwrap();
        let v = pi_linear_value(&t, 128).to_f64();
        assert!((v - (33.0 / 4.0 - 18.0 / std::f64::consts::PI)).abs() < 1e-14);
    }

    #[test]
    fn fixed_roundtrip() {
        let r = Rational::new((-7).into(), 3.into());
        let f = Fixed::from_rational(&r, 80);
        assert!((f.to_f64() + 7.0 / 3.0).abs() < 1e-15);
        assert_eq!(f.to_decimal(5), "-2.33333");
    }
}

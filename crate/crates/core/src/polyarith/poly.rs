use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{PolyError, Rational};

/// Degree of a polynomial. The zero polynomial has degree [`Degree::NegInf`],
/// which orders below every finite degree (variant order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn as_i64(self) -> Option<i64> {
        self.finite().map(|d| d as i64)
    }
}

/// Degree of a product: `NegInf` absorbs.
impl std::ops::Add for Degree {
    type Output = Degree;
    fn add(self, other: Degree) -> Degree {
        match (self, other) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInf,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense univariate polynomial in `n` with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `n^i`. Trailing zeros are always
/// trimmed, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn from_big_ints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// The polynomial `n`.
    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c * n^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    /// `n + c`.
    pub fn linear(c: i64) -> Self {
        Self::from_ints(&[c, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            l => Degree::Finite(l - 1),
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `n^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::from_integer(x.into()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// `p(n + k)`.
    pub fn shift(&self, k: i64) -> Self {
        if k == 0 || self.is_constant() {
            return self.clone();
        }
        let step = Polynomial::linear(k);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &step) + &Self::constant(c.clone());
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        let Some(lc) = divisor.leading_coeff() else {
            return Err(PolyError::DivisionByZero);
        };
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lc_inv = lc.recip();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial, PolyError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::DivisionNotExact)
        }
    }

    pub fn divides(&self, other: &Polynomial) -> bool {
        matches!(other.div_rem(self), Ok((_, r)) if r.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::BothZero);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            // keep intermediate coefficients small
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Splits `self = content * primitive` where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    /// Returns `None` for the zero polynomial.
    pub fn primitive_part(&self) -> Option<(Rational, Vec<BigInt>)> {
        let lc = self.leading_coeff()?;
        let den_lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if lc.is_negative() {
            g = -g;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        Some((Rational::new(g, den_lcm), prim))
    }

    /// Coefficients scaled to coprime integers with positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        match self.primitive_part() {
            None => Self::zero(),
            Some((_, ints)) => Self::from_big_ints(&ints),
        }
    }

    /// Largest `k` with `n^k | self`; zero for the zero polynomial.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn derivative(&self) -> Polynomial {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }
}

/// Falling factorial `s (s-1) ... (s-k+1)` as a polynomial in its variable;
/// `k = 0` gives `1`.
pub fn falling_factorial(k: usize) -> Polynomial {
    (0..k as i64).fold(Polynomial::one(), |acc, j| &acc * &Polynomial::linear(-j))
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::exprio::poly_to_text(self))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn difference_of_squares() {
        let prod = &p(&[1, 1]) * &p(&[-1, 1]);
        assert_eq!(prod, p(&[-1, 0, 1]));
        assert_eq!(prod.exact_div(&p(&[1, 1])).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn binomial_expansion_of_two_n_minus_one() {
        // oracle: sum_k C(4,k) (2n)^k (-1)^(4-k)
        let binom = [1i64, 4, 6, 4, 1];
        let expected: Vec<i64> = (0..5)
            .map(|k| binom[k] * 2i64.pow(k as u32) * if (4 - k) % 2 == 0 { 1 } else { -1 })
            .collect();
        assert_eq!(expected, vec![1, -8, 24, -32, 16]);
        assert_eq!(p(&[-1, 2]).pow(4), p(&expected));
    }

    #[test]
    fn inexact_division_errors() {
        assert_eq!(
            p(&[1, 0, 1]).exact_div(&p(&[1, 1])),
            Err(PolyError::DivisionNotExact)
        );
        assert_eq!(p(&[1]).div_rem(&Polynomial::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn shifts() {
        assert_eq!(p(&[0, 0, 1]).shift(1), p(&[1, 2, 1]));
        // n (n+1)^2 at n-1 is (n-1) n^2; substitution oracle on a few points
        let q = &p(&[0, 1]) * &p(&[1, 1]).pow(2);
        let shifted = q.shift(-1);
        for x in -5..=5 {
            assert_eq!(shifted.eval_int(x), q.eval_int(x - 1));
        }
        assert_eq!(shifted, &p(&[-1, 1]) * &p(&[0, 0, 1]));
        assert_eq!(q.shift(0), q);
    }

    #[test]
    fn gcds() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, 1])).unwrap(), p(&[1, 1]));
        let a = &p(&[0, 1]) * &p(&[1, 1]).pow(2);
        let b = &p(&[2, 1]).pow(2) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b).unwrap(), Polynomial::one());
        assert_eq!(Polynomial::zero().gcd(&p(&[0, 1])).unwrap(), p(&[0, 1]));
        assert_eq!(
            Polynomial::zero().gcd(&Polynomial::zero()),
            Err(PolyError::BothZero)
        );
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(0), Polynomial::one());
        assert_eq!(falling_factorial(2), p(&[0, -1, 1]));
        // product oracle s(s-1)(s-2) at sample points
        let f3 = falling_factorial(3);
        for s in -4..8i64 {
            assert_eq!(f3.eval_int(s), Rational::from_integer((s * (s - 1) * (s - 2)).into()));
        }
        assert_eq!(f3, p(&[0, 2, -3, 1]));
    }

    #[test]
    fn degree_sentinel_orders_below_everything() {
        assert!(Degree::NegInf < Degree::Finite(0));
        assert_eq!(Polynomial::zero().degree(), Degree::NegInf);
        assert_eq!(Degree::NegInf + Degree::Finite(3), Degree::NegInf);
    }

    #[test]
    fn primitive_split() {
        let q = Polynomial::new(vec![
            Rational::new((-2).into(), 3.into()),
            Rational::new(4.into(), 9.into()),
        ]);
        let (content, ints) = q.primitive_part().unwrap();
        assert_eq!(ints, vec![BigInt::from(-3), BigInt::from(2)]);
        assert_eq!(content, Rational::new(2.into(), 9.into()));
    }
}

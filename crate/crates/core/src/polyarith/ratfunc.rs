use std::fmt;

use num_traits::Zero;

use super::{PolyError, Polynomial, Rational};

/// Reduced quotient of polynomials with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numer: Polynomial,
    denom: Polynomial,
}

impl RationalFunction {
    pub fn new(numer: Polynomial, denom: Polynomial) -> Result<Self, PolyError> {
        if denom.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if numer.is_zero() {
            return Ok(Self::from_poly(Polynomial::zero()));
        }
        let g = numer.gcd(&denom)?;
        let numer = numer.exact_div(&g)?;
        let denom = denom.exact_div(&g)?;
        let lc = denom.leading_coeff().expect("nonzero").recip();
        Ok(Self {
            numer: numer.scale(&lc),
            denom: denom.scale(&lc),
        })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self {
            numer: p,
            denom: Polynomial::one(),
        }
    }

    pub fn numer(&self) -> &Polynomial {
        &self.numer
    }

    pub fn denom(&self) -> &Polynomial {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom.is_constant()
    }

    pub fn into_polynomial(self) -> Option<Polynomial> {
        self.is_polynomial().then_some(self.numer)
    }

    /// `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.denom.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.numer.eval(x) / d)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            &(&self.numer * &other.denom) + &(&other.numer * &self.denom),
            &self.denom * &other.denom,
        )
        .expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.numer * &other.numer, &self.denom * &other.denom)
            .expect("nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self, PolyError> {
        if other.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Self::new(&self.numer * &other.denom, &self.denom * &other.numer)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self {
            numer: self.numer.pow(e),
            denom: self.denom.pow(e),
        }
    }

    pub fn shift(&self, k: i64) -> Self {
        Self {
            numer: self.numer.shift(k),
            denom: self.denom.shift(k),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::from_poly(Polynomial::zero());
        }
        Self {
            numer: self.numer.scale(c),
            denom: self.denom.clone(),
        }
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::from_poly(Polynomial::zero())
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::exprio::ratfunc_to_text(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn normalization_is_canonical() {
        let a = Polynomial::from_ints(&[1, 2]);
        let b = Polynomial::from_ints(&[-3, 0, 5]);
        let c = Polynomial::from_ints(&[-7, 0, 3]);
        let r1 = RationalFunction::new(a.clone(), b.clone()).unwrap();
        let r2 = RationalFunction::new(&c * &a, &c * &b).unwrap();
        assert_eq!(r1, r2);
        assert!(r1.denom().leading_coeff().unwrap().is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFunction::new(Polynomial::one(), Polynomial::zero()).is_err());
    }

    #[test]
    fn arithmetic() {
        let x = RationalFunction::from_poly(Polynomial::var());
        let one = RationalFunction::from_poly(Polynomial::one());
        // 1/n - 1/(n+1) = 1/(n(n+1))
        let lhs = one.div(&x).unwrap().sub(&one.div(&x.add(&one)).unwrap());
        let rhs = RationalFunction::new(Polynomial::one(), Polynomial::from_ints(&[0, 1, 1])).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(rhs.eval(&Rational::zero()), None);
    }
}

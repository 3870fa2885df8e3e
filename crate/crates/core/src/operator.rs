//! Linear recurrence operators `L = sum_i a_i(n) S^i` and the degree
//! machinery of their adjoints.
//!
//! For `L` annihilating `F`, every `L*(x) F` telescopes:
//!
//! ```text
//! L*(x)(n) = sum_i a_i(n-i) x(n-i)
//! L*(x)(n) F(n) = Delta( -sum_{i<J} u_i(n) F(n+i) ),  u_i(n) = sum_{j=1}^{J-i} a_{i+j}(n-j) x(n-j)
//! ```
//!
//! The certificate polynomials `u_i` are stored exactly as defined above; the
//! negation lives in the telescoped quantity, never in the `u_i`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::polyarith::{
    falling_factorial, integer_roots, shift_resultant, Degree, PolyError, Polynomial, Rational,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("operator is zero")]
    ZeroOperator,
    #[error("operator has order zero; certificates need J >= 1")]
    OrderZero,
    #[error("input polynomial must be nonzero")]
    ZeroInput,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `sum_{i=0}^{J} a_i(n) S^i` with `a_J != 0` (trailing zeros trimmed).
///
/// `a_0 = 0` is allowed; callers needing `a_0 a_J != 0` check it themselves.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ShiftOperator {
    coeffs: Vec<Polynomial>,
}

impl ShiftOperator {
    pub fn new(mut coeffs: Vec<Polynomial>) -> Self {
        while coeffs.last().is_some_and(Polynomial::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `J`; zero for the zero operator.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Polynomial {
        self.coeffs.get(i).cloned().unwrap_or_else(Polynomial::zero)
    }

    pub fn leading(&self) -> Option<&Polynomial> {
        self.coeffs.last()
    }

    pub fn trailing(&self) -> Option<&Polynomial> {
        self.coeffs.first()
    }

    /// `d_L = max_i deg a_i`.
    pub fn max_coeff_degree(&self) -> Degree {
        self.coeffs.iter().map(Polynomial::degree).max().unwrap_or(Degree::NegInf)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    /// Multiplies every coefficient by `p` on the left.
    pub fn left_mul_poly(&self, p: &Polynomial) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * p).collect())
    }

    /// Associate with coprime integer coefficients and `lc(a_J) > 0`.
    pub fn primitive(&self) -> Self {
        let Some(lead) = self.leading() else {
            return Self::default();
        };
        let mut den = BigInt::one();
        for c in self.coeffs.iter().flat_map(|a| a.coeffs()) {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let scaled = self.scale(&Rational::from_integer(den));
        let g = scaled
            .coeffs
            .iter()
            .flat_map(|a| a.coeffs())
            .fold(BigInt::zero(), |acc, c| num_integer::gcd(acc, c.to_integer()));
        let sign = if lead.leading_coeff().unwrap().is_negative() { -1 } else { 1 };
        scaled.scale(&Rational::new(BigInt::from(sign), g))
    }

    /// Operator annihilating `c^n F(n)` when `self` annihilates `F(n)`.
    pub fn geometric_twist(&self, c: &Rational) -> Self {
        let inv = c.recip();
        let mut factor = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.scale(&factor));
            factor *= &inv;
        }
        Self::new(coeffs)
    }

    /// `L(F)(n) = sum_i a_i(n) F(n+i)` for a sequence given as a closure.
    pub fn apply_at<E>(
        &self,
        n: i64,
        mut value: impl FnMut(i64) -> Result<Rational, E>,
    ) -> Result<Rational, E> {
        let mut acc = Rational::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            acc += a.eval_int(n) * value(n + i as i64)?;
        }
        Ok(acc)
    }

    /// `L*(x)(n) = sum_i a_i(n-i) x(n-i)`.
    pub fn adjoint_apply(&self, x: &Polynomial) -> Polynomial {
        if x.is_zero() {
            return Polynomial::zero();
        }
        self.coeffs
            .iter()
            .enumerate()
            .fold(Polynomial::zero(), |acc, (i, a)| {
                let shift = -(i as i64);
                &acc + &(&a.shift(shift) * &x.shift(shift))
            })
    }

    /// Certificate polynomials `u_0 .. u_{J-1}`, with
    /// `u_i(n) = sum_{j=1}^{J-i} a_{i+j}(n-j) x(n-j)`.
    pub fn certificate_polys(&self, x: &Polynomial) -> Result<Vec<Polynomial>, OperatorError> {
        if self.is_zero() {
            return Err(OperatorError::ZeroOperator);
        }
        let order = self.order();
        if order == 0 {
            return Err(OperatorError::OrderZero);
        }
        let shifted_x: Vec<Polynomial> = (0..=order).map(|j| x.shift(-(j as i64))).collect();
        Ok((0..order)
            .map(|i| {
                (1..=order - i).fold(Polynomial::zero(), |acc, j| {
                    &acc + &(&self.coeffs[i + j].shift(-(j as i64)) * &shifted_x[j])
                })
            })
            .collect())
    }

    /// `b_k(n) = sum_{j=k}^{J} C(j,k) a_{J-j}(n+j-J)`.
    pub fn b_polys(&self) -> Vec<Polynomial> {
        let order = self.order();
        (0..=order)
            .map(|k| {
                (k..=order).fold(Polynomial::zero(), |acc, j| {
                    let c = Rational::from_integer(binomial(BigInt::from(j), BigInt::from(k)));
                    let term = self.coeffs[order - j].shift(j as i64 - order as i64).scale(&c);
                    &acc + &term
                })
            })
            .collect()
    }

    pub fn degree_profile(&self) -> Result<DegreeProfile, OperatorError> {
        if self.is_zero() {
            return Err(OperatorError::ZeroOperator);
        }
        let order = self.order();
        let bpolys = self.b_polys();
        let deg_l = bpolys
            .iter()
            .enumerate()
            .filter_map(|(k, b)| b.degree().as_i64().map(|d| d - k as i64))
            .max()
            .ok_or_else(|| {
                OperatorError::InternalInconsistency("all b_k vanish for a nonzero operator".into())
            })?;
        let fpoly = bpolys.iter().enumerate().fold(Polynomial::zero(), |acc, (k, b)| {
            let idx = deg_l + k as i64;
            if idx < 0 {
                return acc;
            }
            let c = b.coeff(idx as usize);
            &acc + &falling_factorial(k).scale(&c)
        });
        if fpoly.is_zero() {
            return Err(OperatorError::InternalInconsistency(
                "indicial polynomial f(s) vanished".into(),
            ));
        }
        let r_l: Vec<u64> = integer_roots(&fpoly)?
            .into_iter()
            .filter(|r| !r.is_negative())
            .map(|r| r.to_u64().expect("root bounded by order"))
            .collect();
        let c_l = (0..=order)
            .find(|&s| !self.adjoint_apply(&Polynomial::monomial(Rational::one(), s)).is_zero())
            .ok_or_else(|| {
                OperatorError::InternalInconsistency(format!(
                    "L*(n^s) = 0 for every s <= J = {order}"
                ))
            })?;
        let d_l = self.max_coeff_degree().finite().expect("nonzero operator");
        let degenerated = !r_l.is_empty();
        Ok(DegreeProfile {
            order,
            deg_l,
            d_l,
            bpolys,
            fpoly,
            r_l,
            c_l,
            degenerated,
            strongly_nondegenerated: deg_l == d_l as i64,
        })
    }

    /// Compares `deg L*(x)` with `deg L + deg x` and checks the outcome
    /// against the degree law: strictly smaller exactly when `L` is
    /// degenerated and `deg x` lies in `R_L`.
    pub fn degree_law_check(&self, x: &Polynomial) -> Result<DegreeOrdering, OperatorError> {
        let profile = self.degree_profile()?;
        profile.degree_law_check(self, x)
    }

    /// Degree bounds for polynomials `p` with `p F` summable.
    ///
    /// The upper bound `deg L + C_L` is always attained by the witness
    /// `L*(n^{C_L})`. The lower bound is reported when `gcd(a_0(n), a_J(n+h)) = 1`
    /// for all `h >= 0` and every element of `R_L` is below `C_L` (this
    /// covers the nondegenerated case, where `C_L = 0`).
    pub fn summable_degree_bounds(&self) -> Result<SummableBounds, OperatorError> {
        let profile = self.degree_profile()?;
        if profile.order == 0 {
            return Err(OperatorError::OrderZero);
        }
        let upper = profile.deg_l + profile.c_l as i64;
        let witness = self.adjoint_apply(&Polynomial::monomial(Rational::one(), profile.c_l));
        let a0 = self.trailing().expect("nonzero");
        let gcd_ok = !a0.is_zero() && gcd_condition(a0, self.leading().unwrap(), 0)?;
        let roots_below = profile.r_l.iter().all(|&s| s < profile.c_l as u64);
        let lower_valid = gcd_ok && roots_below;
        Ok(SummableBounds {
            upper,
            lower_valid,
            lower: lower_valid.then_some(upper),
            witness,
            profile,
        })
    }
}

/// `gcd(a(n), b(n+h)) = 1` for every integer `h >= offset`.
///
/// Decided through the resultant `res_n(a(n), b(n+h))` as a polynomial in
/// `h`: the gcd is nontrivial exactly at its integer roots.
pub fn gcd_condition(a: &Polynomial, b: &Polynomial, offset: i64) -> Result<bool, OperatorError> {
    if a.is_zero() || b.is_zero() {
        return Err(OperatorError::ZeroInput);
    }
    if a.is_constant() || b.is_constant() {
        return Ok(true);
    }
    let res = shift_resultant(a, b);
    if res.is_zero() {
        return Err(OperatorError::InternalInconsistency(
            "shift resultant vanished identically".into(),
        ));
    }
    if res.is_constant() {
        return Ok(true);
    }
    let offset = BigInt::from(offset);
    Ok(integer_roots(&res)?.iter().all(|h| *h < offset))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeOrdering {
    Less,
    Equal,
}

impl fmt::Display for DegreeOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegreeOrdering::Less => "<",
            DegreeOrdering::Equal => "=",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub order: usize,
    /// `deg L = max_k (deg b_k - k)`; may be negative.
    pub deg_l: i64,
    /// `d_L = max_i deg a_i`.
    pub d_l: usize,
    pub bpolys: Vec<Polynomial>,
    /// Indicial polynomial `f(s)` (variable printed as `n`).
    pub fpoly: Polynomial,
    /// Nonnegative integer roots of `f`, ascending.
    pub r_l: Vec<u64>,
    /// Continued zero index.
    pub c_l: usize,
    pub degenerated: bool,
    pub strongly_nondegenerated: bool,
}

impl DegreeProfile {
    pub fn in_r_l(&self, s: usize) -> bool {
        self.r_l.contains(&(s as u64))
    }

    /// Leading coefficient `f(s)` of `L*(n^s)` at degree `deg L + s`.
    pub fn f_at(&self, s: usize) -> Rational {
        self.fpoly.eval_int(s as i64)
    }

    pub fn degree_law_check(
        &self,
        op: &ShiftOperator,
        x: &Polynomial,
    ) -> Result<DegreeOrdering, OperatorError> {
        let Some(dx) = x.degree().finite() else {
            return Err(OperatorError::ZeroInput);
        };
        let expected = self.deg_l + dx as i64;
        let observed = match op.adjoint_apply(x).degree().as_i64() {
            None => DegreeOrdering::Less,
            Some(d) if d < expected => DegreeOrdering::Less,
            Some(d) if d == expected => DegreeOrdering::Equal,
            Some(d) => {
                return Err(OperatorError::InternalInconsistency(format!(
                    "deg L*(x) = {d} exceeds deg L + deg x = {expected}"
                )))
            }
        };
        let predicted = if self.degenerated && self.in_r_l(dx) {
            DegreeOrdering::Less
        } else {
            DegreeOrdering::Equal
        };
        if observed != predicted {
            return Err(OperatorError::InternalInconsistency(format!(
                "degree law predicts '{predicted}' but observed '{observed}' for deg x = {dx}"
            )));
        }
        Ok(observed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummableBounds {
    pub upper: i64,
    pub lower_valid: bool,
    pub lower: Option<i64>,
    /// `L*(n^{C_L})`, a summable multiplier of degree at most `upper`.
    pub witness: Polynomial,
    pub profile: DegreeProfile,
}

impl fmt::Debug for ShiftOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ShiftOperator({self})")
    }
}

impl fmt::Display for ShiftOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::exprio::operator_to_text(self))
    }
}

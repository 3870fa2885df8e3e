//! Polynomial reduction modulo `L*(K[n])` and the two rational reductions.
//!
//! Polynomial reduction writes `p = L*(x) + p~` where every monomial of `p~`
//! is either below `deg L` or sits at a degree `deg L + s` with `s in R_L`.
//! Rational reduction first moves to `G(n) = F(n) / SP(n)` for a shift product
//! `SP` of a factor of `a_0` (lower side) or `a_J` (upper side), builds an
//! annihilator `L1` of `G`, and reduces `p(n) SP(n)` with `L1`:
//!
//! ```text
//! p(n) F(n) = p~(n) / SP(n) * F(n) + Delta(T(n)),   T(n) = -sum_i u_i(n) G(n+i)
//! ```

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::operator::{gcd_condition, DegreeProfile, OperatorError, ShiftOperator};
use crate::polyarith::{Degree, PolyError, Polynomial, Rational};

/// Extra orders tried by [`rational_reduce_auto_grow`] beyond the requested one.
pub const AUTO_GROW_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("factor {factor} does not divide {which}")]
    FactorNotDivisor { factor: String, which: &'static str },
    #[error("shift-product order I = {order} is smaller than the operator order J = {op_order}")]
    OrderTooSmall { order: usize, op_order: usize },
    #[error("a_0 must be nonzero for a lower-side reduction")]
    ZeroTrailingCoefficient,
    #[error(
        "remainder of degree {remainder_degree} is not reducible below deg L1 = {deg_l1} at I = {order}"
    )]
    IrreducibleAtThisI {
        order: usize,
        remainder_degree: Degree,
        deg_l1: i64,
    },
    #[error("no I in {from}..={to} gave a reducible remainder")]
    AutoGrowExhausted { from: usize, to: usize },
}

/// `p = L*(multiplier) + remainder`, with the certificate of `L*(multiplier)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub remainder: Polynomial,
    pub multiplier: Polynomial,
    pub certificate: Vec<Polynomial>,
    pub operator: ShiftOperator,
}

impl ReductionResult {
    /// `sum_i u_i(n) F(n+i)`; the telescoping identity reads
    /// `sum_{n=a}^{b-1} L*(x)(n) F(n) = boundary(a) - boundary(b)`.
    pub fn boundary_at<E>(
        &self,
        n: i64,
        mut value: impl FnMut(i64) -> Result<Rational, E>,
    ) -> Result<Rational, E> {
        let mut acc = Rational::zero();
        for (i, u) in self.certificate.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            acc += u.eval_int(n) * value(n + i as i64)?;
        }
        Ok(acc)
    }
}

/// Greedy top-down reduction of `p` by the adjoint image of `op`.
///
/// Degrees `D >= deg L` with `D - deg L` outside `R_L` are eliminated with
/// `L*(n^{D - deg L})`, whose leading coefficient is `f(D - deg L)`; the
/// remaining monomials form the remainder.
pub fn polynomial_reduce(
    p: &Polynomial,
    op: &ShiftOperator,
) -> Result<ReductionResult, ReductionError> {
    let profile = op.degree_profile()?;
    reduce_with_profile(p, op, &profile)
}

fn reduce_with_profile(
    p: &Polynomial,
    op: &ShiftOperator,
    profile: &DegreeProfile,
) -> Result<ReductionResult, ReductionError> {
    if profile.order == 0 {
        return Err(OperatorError::OrderZero.into());
    }
    let mut remainder = p.clone();
    let mut multiplier = Polynomial::zero();
    if let Some(top) = p.degree().as_i64() {
        let low = profile.deg_l.max(0);
        for d in (low..=top).rev() {
            let s = (d - profile.deg_l) as usize;
            if profile.in_r_l(s) {
                continue;
            }
            let c = remainder.coeff(d as usize);
            if c.is_zero() {
                continue;
            }
            let t = c / profile.f_at(s);
            let mono = Polynomial::monomial(t, s);
            remainder = &remainder - &op.adjoint_apply(&mono);
            debug_assert!(remainder.coeff(d as usize).is_zero());
            multiplier = &multiplier + &mono;
        }
    }
    let certificate = op.certificate_polys(&multiplier)?;
    Ok(ReductionResult {
        remainder,
        multiplier,
        certificate,
        operator: op.clone(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `prod_{j=1}^{I} A(n + shift - j)`
    Backward,
    /// `prod_{j=1}^{I} A(n + shift + j)`
    Forward,
}

/// Shift product `SP_{+-I}(A(n + base_shift))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftProductSpec {
    pub base: Polynomial,
    pub direction: Direction,
    pub order: usize,
    pub base_shift: i64,
}

impl ShiftProductSpec {
    pub fn expand(&self) -> Polynomial {
        sp_expand(self)
    }
}

pub fn sp_expand(spec: &ShiftProductSpec) -> Polynomial {
    (1..=spec.order as i64).fold(Polynomial::one(), |acc, j| {
        let k = match spec.direction {
            Direction::Forward => spec.base_shift + j,
            Direction::Backward => spec.base_shift - j,
        };
        &acc * &spec.base.shift(k)
    })
}

fn shifted_product(a: &Polynomial, shifts: impl Iterator<Item = i64>) -> Polynomial {
    shifts.fold(Polynomial::one(), |acc, k| &acc * &a.shift(k))
}

fn check_orders(op: &ShiftOperator, order: usize) -> Result<usize, ReductionError> {
    if op.is_zero() {
        return Err(OperatorError::ZeroOperator.into());
    }
    let j = op.order();
    if j == 0 {
        return Err(OperatorError::OrderZero.into());
    }
    if order < j {
        return Err(ReductionError::OrderTooSmall { order, op_order: j });
    }
    Ok(j)
}

/// Annihilator of `G(n) = F(n) / SP_{-I}(A_0(n))` for `A_0 | a_0`:
///
/// ```text
/// L1 = A~_0(n) prod_{j=I-J+1}^{I} A_0(n-j)
///    + sum_{i=1}^{J} a_i(n) prod_{j=1}^{i-1} A_0(n+j) prod_{j=I-J+1}^{I-i} A_0(n-j) S^i
/// ```
pub fn build_l1_lower(
    op: &ShiftOperator,
    factor: &Polynomial,
    order: usize,
) -> Result<ShiftOperator, ReductionError> {
    let j_ord = check_orders(op, order)?;
    let a0 = op.coeff(0);
    if a0.is_zero() {
        return Err(ReductionError::ZeroTrailingCoefficient);
    }
    let cofactor = a0.exact_div(factor).map_err(|_| ReductionError::FactorNotDivisor {
        factor: factor.to_string(),
        which: "a_0",
    })?;
    let (i_big, j_big) = (order as i64, j_ord as i64);
    let mut coeffs = Vec::with_capacity(j_ord + 1);
    coeffs.push(&cofactor * &shifted_product(factor, (i_big - j_big + 1..=i_big).map(|j| -j)));
    for i in 1..=j_big {
        let fwd = shifted_product(factor, 1..i);
        let back = shifted_product(factor, (i_big - j_big + 1..=i_big - i).map(|j| -j));
        coeffs.push(&(&op.coeff(i as usize) * &fwd) * &back);
    }
    Ok(ShiftOperator::new(coeffs))
}

/// Annihilator of `G(n) = F(n) / SP_I(A_J(n-J))` for `A_J | a_J`:
///
/// ```text
/// L1 = sum_{i=0}^{J-1} a_i(n) prod_{j=1}^{J-i-1} A_J(n-j) prod_{j=I-J+1}^{I-J+i} A_J(n+j) S^i
///    + A~_J(n) prod_{j=I-J+1}^{I} A_J(n+j) S^J
/// ```
pub fn build_l1_upper(
    op: &ShiftOperator,
    factor: &Polynomial,
    order: usize,
) -> Result<ShiftOperator, ReductionError> {
    let j_ord = check_orders(op, order)?;
    let a_j = op.coeff(j_ord);
    let cofactor = a_j.exact_div(factor).map_err(|_| ReductionError::FactorNotDivisor {
        factor: factor.to_string(),
        which: "a_J",
    })?;
    let (i_big, j_big) = (order as i64, j_ord as i64);
    let mut coeffs = Vec::with_capacity(j_ord + 1);
    for i in 0..j_big {
        let back = shifted_product(factor, (1..j_big - i).map(|j| -j));
        let fwd = shifted_product(factor, i_big - j_big + 1..=i_big - j_big + i);
        coeffs.push(&(&op.coeff(i as usize) * &back) * &fwd);
    }
    coeffs.push(&cofactor * &shifted_product(factor, i_big - j_big + 1..=i_big));
    Ok(ShiftOperator::new(coeffs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Factor of `a_0`, denominator `SP_{-I}(A_0(n))`.
    Lower,
    /// Factor of `a_J`, denominator `SP_I(A_J(n-J))`.
    Upper,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        })
    }
}

impl std::str::FromStr for Side {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lower" => Ok(Side::Lower),
            "upper" => Ok(Side::Upper),
            other => Err(format!("side must be 'lower' or 'upper', got '{other}'")),
        }
    }
}

/// `p(n) SP(n) = L1*(multiplier) + remainder_numer`, so that
/// `p F = remainder_numer / SP * F + Delta(T)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalReductionResult {
    pub remainder_numer: Polynomial,
    pub denom_spec: ShiftProductSpec,
    pub derived_operator: ShiftOperator,
    pub reduction: ReductionResult,
    pub side: Side,
    /// Degree bound `deg L + (J-1) deg A` when `L` is strongly nondegenerated.
    pub degree_bound: Option<i64>,
}

impl RationalReductionResult {
    pub fn denominator(&self) -> Polynomial {
        self.denom_spec.expand()
    }

    /// `sum_i u_i(n) G(n+i)` with `G = F / SP`. `None` when `SP` vanishes at
    /// one of the needed points.
    pub fn boundary_at<E>(
        &self,
        n: i64,
        mut value: impl FnMut(i64) -> Result<Rational, E>,
    ) -> Result<Option<Rational>, E> {
        let sp = self.denominator();
        let mut acc = Rational::zero();
        for (i, u) in self.reduction.certificate.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            let m = n + i as i64;
            let d = sp.eval_int(m);
            if d.is_zero() {
                return Ok(None);
            }
            acc += u.eval_int(n) * value(m)? / d;
        }
        Ok(Some(acc))
    }
}

pub fn shift_product_for(op: &ShiftOperator, factor: &Polynomial, side: Side, order: usize) -> ShiftProductSpec {
    match side {
        Side::Lower => ShiftProductSpec {
            base: factor.clone(),
            direction: Direction::Backward,
            order,
            base_shift: 0,
        },
        Side::Upper => ShiftProductSpec {
            base: factor.clone(),
            direction: Direction::Forward,
            order,
            base_shift: -(op.order() as i64),
        },
    }
}

/// Rational reduction of `p` with respect to `op` using `factor` on `side`
/// and shift-product order `order`.
pub fn rational_reduce(
    p: &Polynomial,
    op: &ShiftOperator,
    factor: &Polynomial,
    side: Side,
    order: usize,
) -> Result<RationalReductionResult, ReductionError> {
    let l1 = match side {
        Side::Lower => build_l1_lower(op, factor, order)?,
        Side::Upper => build_l1_upper(op, factor, order)?,
    };
    let spec = shift_product_for(op, factor, side, order);
    let q = p * &spec.expand();
    let l1_profile = l1.degree_profile()?;
    let reduction = reduce_with_profile(&q, &l1, &l1_profile)?;
    let profile = op.degree_profile()?;
    let rem_deg = reduction.remainder.degree();
    let degree_bound = if profile.strongly_nondegenerated {
        let deg_a = factor.degree().as_i64().unwrap_or(0);
        let bound = profile.deg_l + (profile.order as i64 - 1) * deg_a;
        if rem_deg.as_i64().is_some_and(|d| d >= bound) {
            return Err(OperatorError::InternalInconsistency(format!(
                "remainder degree {rem_deg} breaks the bound {bound} for a strongly nondegenerated operator"
            ))
            .into());
        }
        Some(bound)
    } else {
        if rem_deg.as_i64().is_some_and(|d| d >= l1_profile.deg_l.max(0)) {
            return Err(ReductionError::IrreducibleAtThisI {
                order,
                remainder_degree: rem_deg,
                deg_l1: l1_profile.deg_l,
            });
        }
        None
    };
    Ok(RationalReductionResult {
        remainder_numer: reduction.remainder.clone(),
        denom_spec: spec,
        derived_operator: l1,
        reduction,
        side,
        degree_bound,
    })
}

/// Outcome of [`rational_reduce_auto_grow`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutoGrow {
    pub result: RationalReductionResult,
    pub requested_order: usize,
    pub order_used: usize,
}

/// Retries [`rational_reduce`] with `I, I+1, ..., I+AUTO_GROW_CAP` while the
/// remainder stays irreducible.
pub fn rational_reduce_auto_grow(
    p: &Polynomial,
    op: &ShiftOperator,
    factor: &Polynomial,
    side: Side,
    order: usize,
) -> Result<AutoGrow, ReductionError> {
    for i in order..=order + AUTO_GROW_CAP {
        match rational_reduce(p, op, factor, side, i) {
            Ok(result) => {
                return Ok(AutoGrow {
                    result,
                    requested_order: order,
                    order_used: i,
                })
            }
            Err(ReductionError::IrreducibleAtThisI { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(ReductionError::AutoGrowExhausted {
        from: order,
        to: order + AUTO_GROW_CAP,
    })
}

/// Which of the four sufficient gcd conditions for `b | a` hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdmissibilityReport {
    /// `gcd(a_0(n), a_J(n+h)) = 1`
    pub a0_aj: bool,
    /// `gcd(b(n), b(n+J+h)) = 1`
    pub b_b: bool,
    /// `gcd(a_0(n), b(n+J+h)) = 1`
    pub a0_b: bool,
    /// `gcd(b(n), a_J(n+h)) = 1`
    pub b_aj: bool,
}

impl AdmissibilityReport {
    /// When every condition holds, summability of `a/b F` forces `b | a`.
    pub fn all_hold(&self) -> bool {
        self.a0_aj && self.b_b && self.a0_b && self.b_aj
    }
}

pub fn denominator_admissibility(
    op: &ShiftOperator,
    b: &Polynomial,
) -> Result<AdmissibilityReport, ReductionError> {
    if op.is_zero() {
        return Err(OperatorError::ZeroOperator.into());
    }
    let j = op.order();
    if j == 0 {
        return Err(OperatorError::OrderZero.into());
    }
    let a0 = op.coeff(0);
    let aj = op.coeff(j);
    if a0.is_zero() || b.is_zero() {
        return Err(OperatorError::ZeroInput.into());
    }
    let j = j as i64;
    Ok(AdmissibilityReport {
        a0_aj: gcd_condition(&a0, &aj, 0)?,
        b_b: gcd_condition(b, b, j)?,
        a0_b: gcd_condition(&a0, b, j)?,
        b_aj: gcd_condition(b, &aj, 0)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::{rat, ratio};

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn lin(c: i64) -> Polynomial {
        Polynomial::linear(c)
    }

    fn domb_neg32() -> ShiftOperator {
        ShiftOperator::new(vec![
            lin(1).pow(3),
            &p(&[3, 2]) * &p(&[12, 15, 5]),
            lin(2).pow(3).scale(&rat(16)),
        ])
    }

    fn domb_16() -> ShiftOperator {
        ShiftOperator::new(vec![
            lin(1).pow(3).scale(&rat(2)),
            -(&p(&[3, 2]) * &p(&[12, 15, 5])),
            lin(2).pow(3).scale(&rat(8)),
        ])
    }

    fn harmonic() -> ShiftOperator {
        ShiftOperator::new(vec![
            &lin(0) * &lin(1).pow(2),
            -(&(&lin(1) * &lin(2)) * &p(&[3, 2])),
            &lin(2).pow(2) * &lin(3),
        ])
    }

    /// L1 as the full shifted operator divided by the common factor: an
    /// independent route to the builders' closed product formulas.
    fn l1_by_division(op: &ShiftOperator, factor: &Polynomial, side: Side, order: usize) -> ShiftOperator {
        let j = op.order() as i64;
        let i_big = order as i64;
        let spec = shift_product_for(op, factor, side, order);
        let sp = spec.expand();
        let full: Vec<Polynomial> = (0..=j)
            .map(|i| &op.coeff(i as usize) * &sp.shift(i))
            .collect();
        let common = match side {
            Side::Lower => shifted_product(factor, (0..=i_big - j).map(|k| -k)),
            Side::Upper => shifted_product(factor, 0..=i_big - j),
        };
        ShiftOperator::new(full.iter().map(|c| c.exact_div(&common).unwrap()).collect())
    }

    #[test]
    fn shift_products() {
        let spec = ShiftProductSpec {
            base: lin(1),
            direction: Direction::Backward,
            order: 2,
            base_shift: 0,
        };
        assert_eq!(sp_expand(&spec), &lin(0) * &lin(-1));
        let spec = ShiftProductSpec {
            base: lin(2).pow(2),
            direction: Direction::Forward,
            order: 2,
            base_shift: -2,
        };
        assert_eq!(sp_expand(&spec), &lin(1).pow(2) * &lin(2).pow(2));
        let spec = ShiftProductSpec { order: 0, ..spec };
        assert_eq!(sp_expand(&spec), Polynomial::one());
    }

    #[test]
    fn lower_side_reduction() {
        let l1 = build_l1_lower(&domb_16(), &lin(1), 2).unwrap();
        let expected = ShiftOperator::new(vec![
            &(&p(&[-2, 2]) * &lin(0)) * &lin(1).pow(2),
            -(&(&lin(0) * &p(&[3, 2])) * &p(&[12, 15, 5])),
            lin(2).pow(4).scale(&rat(8)),
        ]);
        assert_eq!(l1, expected);
        let q = &(&lin(0) * &lin(-1)) * &p(&[1, 3]);
        let r = polynomial_reduce(&q, &l1).unwrap();
        assert_eq!(r.remainder, lin(1).pow(2).scale(&rat(2)));
        assert_eq!(r.multiplier, Polynomial::from_int(-1));
        assert_eq!(&r.remainder + &l1.adjoint_apply(&r.multiplier), q);
    }

    #[test]
    fn upper_side_reduction() {
        let l1 = build_l1_upper(&domb_neg32(), &lin(2).pow(2), 2).unwrap();
        assert_eq!(l1.coeff(0), lin(1).pow(5));
        assert_eq!(
            l1.coeff(1),
            &(&lin(3).pow(2) * &p(&[3, 2])) * &p(&[12, 15, 5])
        );
        assert_eq!(
            l1.coeff(2),
            &(&lin(2) * &lin(3).pow(2)) * &lin(4).pow(2).scale(&rat(16))
        );
        let q = &p(&[1, 3]) * &(&lin(1).pow(2) * &lin(2).pow(2));
        let r = polynomial_reduce(&q, &l1).unwrap();
        assert_eq!(r.remainder, p(&[27, 103, 141, 78, 15]).scale(&ratio(1, 9)));
        // p = L1*(x) + p~ forces x = 3/27
        assert_eq!(r.multiplier, Polynomial::constant(ratio(1, 9)));
    }

    #[test]
    fn builders_agree_with_division_route() {
        let cases = [
            (domb_neg32(), lin(2).pow(2), Side::Upper),
            (domb_neg32(), lin(2).pow(3), Side::Upper),
            (domb_neg32(), lin(1).pow(2), Side::Lower),
            (domb_neg32(), lin(1).pow(3), Side::Lower),
            (domb_16(), lin(1), Side::Lower),
            (harmonic(), lin(0), Side::Lower),
            (harmonic(), lin(3), Side::Upper),
        ];
        for (op, factor, side) in cases {
            for order in 2..=5 {
                let built = match side {
                    Side::Lower => build_l1_lower(&op, &factor, order).unwrap(),
                    Side::Upper => build_l1_upper(&op, &factor, order).unwrap(),
                };
                assert_eq!(built, l1_by_division(&op, &factor, side, order), "{side} {order}");
            }
        }
    }

    #[test]
    fn trivial_factor_keeps_operator() {
        for order in 2..5 {
            assert_eq!(build_l1_lower(&domb_16(), &Polynomial::one(), order).unwrap(), domb_16());
            assert_eq!(build_l1_upper(&domb_16(), &Polynomial::one(), order).unwrap(), domb_16());
        }
    }

    #[test]
    fn builder_errors() {
        assert!(matches!(
            build_l1_lower(&domb_16(), &lin(5), 2),
            Err(ReductionError::FactorNotDivisor { .. })
        ));
        assert!(matches!(
            build_l1_upper(&domb_16(), &lin(2), 1),
            Err(ReductionError::OrderTooSmall { order: 1, op_order: 2 })
        ));
    }

    #[test]
    fn rational_reductions_reproduce_known_numerators() {
        let three_n_plus_one = p(&[1, 3]);
        let r = rational_reduce(&three_n_plus_one, &domb_neg32(), &lin(2).pow(2), Side::Upper, 2)
            .unwrap();
        assert_eq!(r.remainder_numer, p(&[27, 103, 141, 78, 15]).scale(&ratio(1, 9)));
        assert_eq!(r.denominator(), &lin(1).pow(2) * &lin(2).pow(2));
        assert_eq!(r.degree_bound, Some(5));

        let r = rational_reduce(&three_n_plus_one, &domb_neg32(), &lin(1).pow(2), Side::Lower, 2)
            .unwrap();
        assert_eq!(r.remainder_numer, p(&[2, 5, -9, -21, 39]).scale(&ratio(-1, 9)));
        assert_eq!(r.denominator(), &lin(0).pow(2) * &lin(-1).pow(2));

        let r = rational_reduce(&three_n_plus_one, &domb_16(), &lin(1), Side::Lower, 2).unwrap();
        assert_eq!(r.remainder_numer, lin(1).pow(2).scale(&rat(2)));
        assert_eq!(r.denominator(), &lin(0) * &lin(-1));
        assert_eq!(r.degree_bound, None);
    }

    #[test]
    fn zero_polynomial_reduces_to_zero() {
        let r = polynomial_reduce(&Polynomial::zero(), &domb_16()).unwrap();
        assert!(r.remainder.is_zero() && r.multiplier.is_zero());
    }

    #[test]
    fn degenerated_operator_keeps_r_l_monomials() {
        // Harmonic operator: deg L = 1, R_L = {0}; n^1 cannot be eliminated.
        let op = harmonic();
        let q = p(&[5, 7, 3, 2]);
        let r = polynomial_reduce(&q, &op).unwrap();
        assert_eq!(&r.remainder + &op.adjoint_apply(&r.multiplier), q);
        assert!(r.remainder.degree() <= Degree::Finite(1));
    }

    #[test]
    fn admissibility() {
        // b = n + 5: b(n) collides with a_2(n+h) = (n+h+2)^2 (n+h+3) at h = 2, 3
        let rep = denominator_admissibility(&harmonic(), &lin(5)).unwrap();
        assert!(rep.a0_aj && rep.b_b && rep.a0_b);
        assert!(!rep.b_aj);
        let rep = denominator_admissibility(&harmonic(), &p(&[1, 2])).unwrap();
        assert!(rep.all_hold());
        let rep = denominator_admissibility(&domb_16(), &(&lin(0) * &lin(-1))).unwrap();
        assert!(!rep.a0_b);
        assert!(denominator_admissibility(&domb_16(), &Polynomial::one()).unwrap().all_hold());
    }
}

//! Checks of reductions against their sequences, exactly, numerically or
//! modulo `p^2`.

mod congruence;
mod fixture;
mod numeric;

use num_traits::Zero;
use thiserror::Error;

use crate::operator::{OperatorError, ShiftOperator};
use crate::polyarith::{Polynomial, Rational, RationalFunction};
use crate::reduction::{rational_reduce, RationalReductionResult, ReductionError};
use crate::sequences::{lookup, HolonomicSequence, SequenceError};

pub use congruence::{congruence_residue, is_prime, rational_mod, verify_congruence, CongruenceReport};
pub use fixture::{
    parse_mod_target, parse_residue, CongruenceFixture, Derivation, Fixture, IdentityFixture, PiLinear,
};
pub use numeric::{
    numeric_series_check, pi, pi_linear_value, precision_from_env, Accel, Fixed, NumericReport,
    DEFAULT_PRECISION_BITS, GUARD_BITS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error("window starting at {a} leaves the domain n >= {start}")]
    DomainViolation { a: i64, start: i64 },
    #[error("fixtures use different sequences: '{0}' and '{1}'")]
    MismatchedSequence(String, String),
    #[error("{prime} is not {residue} mod {modulus}")]
    PrimeFilterViolation { prime: u64, residue: u64, modulus: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("denominator at n = {n} is not invertible modulo a power of {prime}")]
    NonInvertibleDenominator { n: i64, prime: u64 },
    #[error("denominator vanishes at n = {n}")]
    DenominatorVanishes { n: i64 },
    #[error("precision loss: {0}")]
    PrecisionLoss(String),
    #[error("fixture line {line}: {message}")]
    Fixture { line: usize, message: String },
    #[error("fixture summand is not a constant multiple of the reduction remainder")]
    ScalarNotConstant,
    #[error("{0}")]
    InvalidArgument(String),
}

/// Both sides of `sum_{n=a}^{b-1} L*(x)(n) F(n) = B(a) - B(b)`, where
/// `B(n) = sum_i u_i(n) F(n+i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TelescopingReport {
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

/// Telescoping check for an arbitrary `F` defined on `n >= start`.
pub fn telescoping_report<E>(
    mut f: impl FnMut(i64) -> Result<Rational, E>,
    start: i64,
    op: &ShiftOperator,
    x: &Polynomial,
    a: i64,
    b: i64,
) -> Result<TelescopingReport, VerifyError>
where
    VerifyError: From<E>,
{
    if a < start {
        return Err(VerifyError::DomainViolation { a, start });
    }
    if b < a {
        return Err(VerifyError::InvalidArgument(format!("window [{a}, {b}] is empty")));
    }
    let lx = op.adjoint_apply(x);
    let u = op.certificate_polys(x)?;
    let mut boundary = |n: i64| -> Result<Rational, VerifyError> {
        let mut acc = Rational::zero();
        for (i, ui) in u.iter().enumerate() {
            if !ui.is_zero() {
                acc += ui.eval_int(n) * f(n + i as i64)?;
            }
        }
        Ok(acc)
    };
    let rhs = boundary(a)? - boundary(b)?;
    let mut lhs = Rational::zero();
    for n in a..b {
        lhs += lx.eval_int(n) * f(n)?;
    }
    Ok(TelescopingReport {
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

/// Exact check of the certificate identity on `[a, b]` for a catalog
/// sequence.
pub fn check_telescoping(
    seq_key: &str,
    op: &ShiftOperator,
    x: &Polynomial,
    a: i64,
    b: i64,
) -> Result<bool, VerifyError> {
    let seq = &lookup(seq_key)
        .ok_or_else(|| SequenceError::UnknownKey(seq_key.to_string()))?
        .sequence;
    Ok(telescoping_report(|n| seq.eval(n), seq.start(), op, x, a, b)?.holds)
}

/// With `D(n) = p(n) F(n) - p~(n)/SP(n) F(n)`, checks
/// `sum_{n=a}^{b} D(n) = B(a) - B(b+1)` where `B(n) = sum_i u_i(n) F(n+i)/SP(n+i)`.
pub fn check_rational_telescoping(
    seq: &HolonomicSequence,
    p: &Polynomial,
    rr: &RationalReductionResult,
    a: i64,
    b: i64,
) -> Result<bool, VerifyError> {
    if a < seq.start() {
        return Err(VerifyError::DomainViolation { a, start: seq.start() });
    }
    let sp = rr.denominator();
    let boundary = |n: i64| -> Result<Rational, VerifyError> {
        rr.boundary_at(n, |m| seq.eval(m))?
            .ok_or(VerifyError::DenominatorVanishes { n })
    };
    let mut lhs = Rational::zero();
    for n in a..=b {
        let d = sp.eval_int(n);
        if d.is_zero() {
            return Err(VerifyError::DenominatorVanishes { n });
        }
        let f = seq.eval(n)?;
        lhs += (p.eval_int(n) - rr.remainder_numer.eval_int(n) / d) * f;
    }
    Ok(lhs == boundary(a)? - boundary(b + 1)?)
}

/// `sum_{n=start}^{start+N-1} numer(n)/denom(n) F(n)` exactly.
pub fn exact_partial_sum(fix: &IdentityFixture, n_terms: usize) -> Result<Rational, VerifyError> {
    let seq = &lookup(&fix.sequence_key)
        .ok_or_else(|| SequenceError::UnknownKey(fix.sequence_key.clone()))?
        .sequence;
    let mut acc = Rational::zero();
    for n in fix.start..fix.start + n_terms as i64 {
        let d = fix.denom.eval_int(n);
        if d.is_zero() {
            return Err(VerifyError::DenominatorVanishes { n });
        }
        acc += fix.numer.eval_int(n) / d * seq.eval(n)?;
    }
    Ok(acc)
}

/// Outcome of [`verify_identity_exact`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    /// `c` with `fixture summand = c * remainder / SP * F`.
    pub scalar: Rational,
    /// Prefix identity held for every window length up to `W`.
    pub windows_hold: bool,
    /// First failing prefix end, if any.
    pub first_failure: Option<i64>,
    /// `c (source value - sum_{src start}^{s-1} source - B(s))`, valid when the
    /// certificate tail `B(n)` tends to zero.
    pub derived_target: PiLinear,
    pub target_matches: bool,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.windows_hold && self.target_matches
    }
}

/// Checks that `source - fixture / c` telescopes through the certificate of
/// `rr` on every window inside `[s, s + W]`, `s = fix.start`, and re-derives
/// the fixture's closed form from the source's.
pub fn verify_identity_exact(
    fix: &IdentityFixture,
    source: &IdentityFixture,
    rr: &RationalReductionResult,
    window: usize,
) -> Result<IdentityReport, VerifyError> {
    if fix.sequence_key != source.sequence_key {
        return Err(VerifyError::MismatchedSequence(
            fix.sequence_key.clone(),
            source.sequence_key.clone(),
        ));
    }
    if !source.denom.is_constant() {
        return Err(VerifyError::InvalidArgument(
            "the source summand must have a polynomial multiplier".into(),
        ));
    }
    let seq = &lookup(&fix.sequence_key)
        .ok_or_else(|| SequenceError::UnknownKey(fix.sequence_key.clone()))?
        .sequence;
    let s = fix.start;
    if s < source.start {
        return Err(VerifyError::DomainViolation { a: s, start: source.start });
    }
    if rr.remainder_numer.is_zero() {
        return Err(VerifyError::ScalarNotConstant);
    }
    let sp = rr.denominator();
    let ratio = RationalFunction::new(&fix.numer * &sp, &fix.denom * &rr.remainder_numer)
        .map_err(|_| VerifyError::ScalarNotConstant)?;
    let scalar = match ratio.into_polynomial() {
        Some(p) if p.is_constant() && !p.is_zero() => p.coeff(0),
        _ => return Err(VerifyError::ScalarNotConstant),
    };
    let source_p = source.numer.scale(&source.denom.coeff(0).recip());
    let boundary = |n: i64| -> Result<Rational, VerifyError> {
        rr.boundary_at(n, |m| seq.eval(m))?
            .ok_or(VerifyError::DenominatorVanishes { n })
    };
    let b_s = boundary(s)?;
    let mut prefix = Rational::zero();
    let mut first_failure = None;
    for k in s..=s + window as i64 {
        if prefix != &b_s - boundary(k)? {
            first_failure = Some(k);
            break;
        }
        let d = fix.denom.eval_int(k);
        if d.is_zero() {
            return Err(VerifyError::DenominatorVanishes { n: k });
        }
        let f = seq.eval(k)?;
        prefix += (source_p.eval_int(k) - fix.numer.eval_int(k) / d / &scalar) * f;
    }
    let mut head = Rational::zero();
    for n in source.start..s {
        head += source_p.eval_int(n) * seq.eval(n)?;
    }
    let derived_target = PiLinear {
        r0: &scalar * (&source.target.r0 - head - b_s),
        r1: &scalar * &source.target.r1,
    };
    Ok(IdentityReport {
        target_matches: derived_target == fix.target,
        windows_hold: first_failure.is_none(),
        first_failure,
        scalar,
        derived_target,
    })
}

/// Runs the fixture's recorded rational reduction against its source.
pub fn reduce_for_fixture(
    fix: &IdentityFixture,
    source: &IdentityFixture,
) -> Result<RationalReductionResult, VerifyError> {
    let d = fix
        .derivation
        .as_ref()
        .ok_or_else(|| VerifyError::InvalidArgument(format!("fixture '{}' has no derivation", fix.name)))?;
    let seq = &lookup(&fix.sequence_key)
        .ok_or_else(|| SequenceError::UnknownKey(fix.sequence_key.clone()))?
        .sequence;
    let p = source.numer.scale(&source.denom.coeff(0).recip());
    Ok(rational_reduce(&p, seq.operator(), &d.factor, d.side, d.order)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::{rat, ratio};
    use crate::reduction::{build_l1_lower, Direction, ReductionResult, ShiftProductSpec, Side};

    fn lin(c: i64) -> Polynomial {
        Polynomial::linear(c)
    }

    #[test]
    fn lower_side_boundary() {
        let seq = &lookup("domb_over_16n").unwrap().sequence;
        let l1 = build_l1_lower(seq.operator(), &lin(1), 2).unwrap();
        let g = |n: i64| -> Result<Rational, SequenceError> {
            Ok(seq.eval(n)? / rat(n * (n - 1)))
        };
        for p in [7i64, 13] {
            let r = telescoping_report(g, 2, &l1, &Polynomial::one(), 2, p).unwrap();
            assert!(r.holds);
            let pp = rat(p);
            let closed = rat(5)
                + rat(2) * &pp * &pp * rat(p * p - 3 * p + 2) * g(p - 1).unwrap()
                - rat(8) * pp.pow(4) * g(p).unwrap();
            assert_eq!(r.lhs, closed);
        }
        let r = telescoping_report(g, 2, &l1, &Polynomial::one(), 7, 7).unwrap();
        assert!(r.holds && r.lhs.is_zero());
        assert!(matches!(
            telescoping_report(g, 2, &l1, &Polynomial::one(), 1, 5),
            Err(VerifyError::DomainViolation { a: 1, start: 2 })
        ));
    }

    #[test]
    fn franel_example_sum() {
        let op = lookup("franel_signed_scaled").unwrap().sequence.operator().clone();
        assert_eq!(op.adjoint_apply(&Polynomial::one()), Polynomial::from_ints(&[2, -3]));
        assert!(check_telescoping("franel_signed_scaled", &op, &Polynomial::one(), 2, 30).unwrap());
    }

    fn domb_neg32() -> IdentityFixture {
        IdentityFixture {
            name: "domb_neg32".into(),
            sequence_key: "domb_over_neg32n".into(),
            numer: Polynomial::from_ints(&[1, 3]),
            denom: Polynomial::one(),
            start: 0,
            target: PiLinear { r0: rat(0), r1: rat(2) },
            derivation: None,
        }
    }

    #[test]
    fn source_against_itself() {
        let src = domb_neg32();
        let op = lookup("domb_over_neg32n").unwrap().sequence.operator().clone();
        let rr = RationalReductionResult {
            remainder_numer: src.numer.clone(),
            denom_spec: ShiftProductSpec {
                base: Polynomial::one(),
                direction: Direction::Forward,
                order: 0,
                base_shift: 0,
            },
            derived_operator: op.clone(),
            reduction: ReductionResult {
                remainder: src.numer.clone(),
                multiplier: Polynomial::zero(),
                certificate: vec![Polynomial::zero(); 2],
                operator: op,
            },
            side: Side::Upper,
            degree_bound: None,
        };
        let rep = verify_identity_exact(&src, &src, &rr, 50).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.scalar, rat(1));
    }

    #[test]
    fn lower_side_identity_recovers_offset() {
        let src = domb_neg32();
        let fix = IdentityFixture {
            name: "lower".into(),
            numer: Polynomial::from_ints(&[2, 5, -9, -21, 39]),
            denom: &lin(0).pow(2) * &lin(-1).pow(2),
            start: 2,
            target: PiLinear { r0: ratio(33, 4), r1: rat(-18) },
            derivation: None,
            ..src.clone()
        };
        let seq = &lookup("domb_over_neg32n").unwrap().sequence;
        let rr = rational_reduce(&src.numer, seq.operator(), &lin(1).pow(2), Side::Lower, 2).unwrap();
        let rep = verify_identity_exact(&fix, &src, &rr, 60).unwrap();
        assert_eq!(rep.scalar, rat(-9));
        assert!(rep.holds(), "{rep:?}");
        assert!(check_rational_telescoping(seq, &src.numer, &rr, 2, 40).unwrap());
    }

    #[test]
    fn mismatched_sequences() {
        let src = domb_neg32();
        let other = IdentityFixture {
            sequence_key: "domb".into(),
            ..src.clone()
        };
        let seq = &lookup("domb_over_neg32n").unwrap().sequence;
        let rr = rational_reduce(&src.numer, seq.operator(), &lin(2).pow(2), Side::Upper, 2).unwrap();
        assert!(matches!(
            verify_identity_exact(&other, &src, &rr, 10),
            Err(VerifyError::MismatchedSequence(..))
        ));
    }
}

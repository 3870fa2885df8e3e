//! Exact `mod p^k` evaluation of finite sums `sum_{n=start}^{p-1} r(n) F(n)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::fixture::CongruenceFixture;
use super::VerifyError;
use crate::polyarith::Rational;
use crate::sequences::{lookup, HolonomicSequence, SequenceError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceReport {
    pub prime: u64,
    pub modulus: BigInt,
    /// Sum reduced into `[0, p^k)`.
    pub residue: BigInt,
    /// Target reduced into `[0, p^k)`.
    pub expected: BigInt,
    pub holds: bool,
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `r mod m` for `r = a/b` with `gcd(b, m) = 1`.
pub fn rational_mod(r: &Rational, m: &BigInt) -> Option<BigInt> {
    let b = r.denom().mod_floor(m);
    let e = b.extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some((r.numer() * e.x).mod_floor(m))
}

fn value_at(seq: &HolonomicSequence, n: i64) -> Result<Rational, SequenceError> {
    match seq.oracle_eval(n) {
        Some(v) if n >= seq.start() => Ok(v),
        _ => seq.eval(n),
    }
}

/// The sum for one prime. `F(n)` comes from the sequence's closed form when
/// it has one, so no division by `a_J` modulo `p` is ever needed.
pub fn congruence_residue(
    fix: &CongruenceFixture,
    seq: &HolonomicSequence,
    p: u64,
) -> Result<CongruenceReport, VerifyError> {
    let modulus = BigInt::from(p).pow(fix.modulus_power);
    let mut acc = BigInt::zero();
    for n in fix.start..p as i64 {
        let d = fix.denom.eval_int(n);
        let r = fix.numer.eval_int(n);
        if d.is_zero() {
            return Err(VerifyError::NonInvertibleDenominator { n, prime: p });
        }
        let term = r / d * value_at(seq, n)?;
        let t = rational_mod(&term, &modulus)
            .ok_or(VerifyError::NonInvertibleDenominator { n, prime: p })?;
        acc = (acc + t).mod_floor(&modulus);
    }
    let expected = rational_mod(&fix.target, &modulus).ok_or(VerifyError::NonInvertibleDenominator {
        n: -1,
        prime: p,
    })?;
    Ok(CongruenceReport {
        prime: p,
        holds: acc == expected,
        residue: acc,
        expected,
        modulus,
    })
}

/// Checks every prime against the fixture's filter, then evaluates the
/// primes concurrently. Reports are sorted by prime.
pub fn verify_congruence(
    fix: &CongruenceFixture,
    primes: &[u64],
) -> Result<Vec<CongruenceReport>, VerifyError> {
    let (residue, m) = fix.prime_filter;
    for &p in primes {
        if !is_prime(p) {
            return Err(VerifyError::NotPrime(p));
        }
        if p % m != residue {
            return Err(VerifyError::PrimeFilterViolation {
                prime: p,
                residue,
                modulus: m,
            });
        }
    }
    let entry = lookup(&fix.sequence_key)
        .ok_or_else(|| SequenceError::UnknownKey(fix.sequence_key.clone()))?;
    let mut sorted = primes.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let results: Vec<Result<CongruenceReport, VerifyError>> = std::thread::scope(|s| {
        let handles: Vec<_> = sorted
            .iter()
            .map(|&p| s.spawn(move || congruence_residue(fix, &entry.sequence, p)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("congruence worker panicked"))
            .collect()
    });
    results.into_iter().collect()
}

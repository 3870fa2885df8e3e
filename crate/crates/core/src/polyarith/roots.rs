//! Integer roots, resultants and interpolation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{PolyError, Polynomial, Rational};

/// Above this bound on root magnitude the candidate scan switches to
/// enumerating divisors of the constant term by trial division.
const SCAN_LIMIT: u64 = 2_000_000;

/// All integer roots of `p`, sorted ascending.
///
/// Denominators are cleared first; candidates are the divisors of the
/// constant term of the primitive integer polynomial (after removing the
/// `n^k` factor) that lie inside a root-modulus bound, each confirmed by
/// exact evaluation.
pub fn integer_roots(p: &Polynomial) -> Result<Vec<BigInt>, PolyError> {
    let Some((_, ints)) = p.primitive_part() else {
        return Err(PolyError::ZeroPolynomial);
    };
    let low = ints.iter().take_while(|c| c.is_zero()).count();
    let ints = &ints[low..];
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(BigInt::zero());
    }
    if ints.len() <= 1 {
        return Ok(roots);
    }
    let c0 = ints[0].abs();
    let bound = root_bound(ints);
    let eval = |x: &BigInt| -> bool {
        let mut acc = BigInt::zero();
        for c in ints.iter().rev() {
            acc = acc * x + c;
        }
        acc.is_zero()
    };
    let mut consider = |d: BigInt| {
        if d > bound {
            return;
        }
        for cand in [d.clone(), -d] {
            if eval(&cand) {
                roots.push(cand);
            }
        }
    };
    let limit = bound.clone().min(c0.clone());
    if limit <= BigInt::from(SCAN_LIMIT) {
        let limit = limit.to_u64().unwrap_or(0);
        for d in 1..=limit {
            let d = BigInt::from(d);
            if c0.is_multiple_of(&d) {
                consider(d);
            }
        }
    } else {
        for d in divisors(&c0) {
            consider(d);
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Fujiwara-style bound: every complex root z satisfies
/// `|z| <= 2 max_i |a_{d-i}/a_d|^(1/i)`; rounded up to an integer.
fn root_bound(ints: &[BigInt]) -> BigInt {
    let d = ints.len() - 1;
    let lead = ints[d].abs();
    let mut best = BigInt::one();
    for i in 1..=d {
        let c = ints[d - i].abs();
        if c.is_zero() {
            continue;
        }
        // ceil(c / lead)^(1/i), rounded up
        let ratio = c.div_ceil(&lead);
        let mut r = ratio.nth_root(i as u32);
        if r.pow(i as u32) < ratio {
            r += 1;
        }
        best = best.max(r);
    }
    best * 2
}

/// Positive divisors by trial division. Used only when the candidate range is
/// too wide to scan directly.
fn divisors(m: &BigInt) -> Vec<BigInt> {
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = m.clone();
    let mut q = BigInt::from(2);
    while &q * &q <= rest {
        let mut e = 0;
        while rest.is_multiple_of(&q) {
            rest /= &q;
            e += 1;
        }
        if e > 0 {
            factors.push((q.clone(), e));
        }
        q += 1;
    }
    if rest > BigInt::one() {
        factors.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &prime;
            }
        }
        divs = next;
    }
    divs
}

/// Resultant of two univariate polynomials over the rationals, by the
/// Euclidean recurrence `res(a,b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} res(b, r)`.
pub fn resultant(a: &Polynomial, b: &Polynomial) -> Rational {
    let (Some(da), Some(db)) = (a.degree().finite(), b.degree().finite()) else {
        return Rational::zero();
    };
    if db == 0 {
        return pow_rat(b.leading_coeff().unwrap(), da);
    }
    if da == 0 {
        return pow_rat(a.leading_coeff().unwrap(), db);
    }
    let (_, r) = a.div_rem(b).expect("b nonzero");
    let Some(dr) = r.degree().finite() else {
        return Rational::zero();
    };
    let sign = if (da * db) % 2 == 1 { -Rational::one() } else { Rational::one() };
    sign * pow_rat(b.leading_coeff().unwrap(), da - dr) * resultant(b, &r)
}

fn pow_rat(x: &Rational, e: usize) -> Rational {
    num_traits::pow(x.clone(), e)
}

/// `R(h) = res_n(a(n), b(n + h))` as a polynomial in `h`. `gcd(a(n), b(n+h)) != 1`
/// exactly at the roots of `R`.
pub fn shift_resultant(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (Some(da), Some(db)) = (a.degree().finite(), b.degree().finite()) else {
        return Polynomial::zero();
    };
    let points: Vec<(Rational, Rational)> = (0..=(da * db) as i64)
        .map(|h| (Rational::from_integer(h.into()), resultant(a, &b.shift(h))))
        .collect();
    interpolate(&points)
}

/// Newton interpolation through `(x_i, y_i)` with distinct `x_i`.
pub fn interpolate(points: &[(Rational, Rational)]) -> Polynomial {
    let m = points.len();
    let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..m {
        for i in (level..m).rev() {
            let num = &table[i] - &table[i - 1];
            let den = &points[i].0 - &points[i - level].0;
            table[i] = num / den;
        }
    }
    let mut acc = Polynomial::zero();
    for i in (0..m).rev() {
        let factor = Polynomial::new(vec![-points[i].0.clone(), Rational::one()]);
        acc = &(&acc * &factor) + &Polynomial::constant(table[i].clone());
    }
    acc
}

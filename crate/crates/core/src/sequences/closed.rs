//! Direct-summation definitions used as oracles and for singular overrides.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::polyarith::Rational;

fn binom(n: u64, k: u64) -> BigInt {
    binomial(BigInt::from(n), BigInt::from(k))
}

/// `sum_k C(n,k)^2 C(2k,k) C(2(n-k), n-k)`
pub fn domb(n: u64) -> BigInt {
    (0..=n)
        .map(|k| {
            let c = binom(n, k);
            &c * &c * binom(2 * k, k) * binom(2 * (n - k), n - k)
        })
        .sum()
}

/// `sum_k C(n,k)^3`
pub fn franel(n: u64) -> BigInt {
    (0..=n).map(|k| binom(n, k).pow(3)).sum()
}

/// `sum_{k=1}^{n} 1/k^m`
pub fn harmonic(n: u64, m: u32) -> Rational {
    (1..=n).fold(Rational::zero(), |acc, k| {
        acc + Rational::new(BigInt::one(), BigInt::from(k).pow(m))
    })
}

/// `C(2n, n)`
pub fn central_binomial(n: u64) -> BigInt {
    binom(2 * n, n)
}

/// Coefficient of `x^n` in `(x^2 + b x + c)^n`:
/// `sum_k C(n, 2k) C(2k, k) b^{n-2k} c^k`.
pub fn t_poly(n: u64, b: &BigInt, c: &BigInt) -> BigInt {
    (0..=n / 2)
        .map(|k| binom(n, 2 * k) * binom(2 * k, k) * b.pow((n - 2 * k) as u32) * c.pow(k as u32))
        .sum()
}

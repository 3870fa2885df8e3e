use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use super::closed;
use super::HolonomicSequence;
use crate::operator::ShiftOperator;
use crate::polyarith::{rat, Polynomial, Rational};

#[derive(Debug)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub sequence: HolonomicSequence,
    pub description: &'static str,
}

const KEYS: &[(&str, &str)] = &[
    ("domb", "Domb numbers sum_k C(n,k)^2 C(2k,k) C(2(n-k),n-k)"),
    ("franel", "Franel numbers sum_k C(n,k)^3"),
    ("domb_over_16n", "Domb(n) / 16^n"),
    ("domb_over_neg32n", "Domb(n) / (-32)^n"),
    ("franel_signed_scaled", "(-1)^n Franel(n) / (n(n-1)), n >= 2"),
    ("harmonic_scaled", "H_n / (n(n+1)), n >= 1"),
    ("central_binomial_quartic", "C(2n,n)^4 / ((2n-1)^4 256^n)"),
    ("harmonic_1", "H_n = sum_{k<=n} 1/k"),
    ("harmonic_2", "H_n^(2) = sum_{k<=n} 1/k^2"),
    ("harmonic_3", "H_n^(3) = sum_{k<=n} 1/k^3"),
    ("t_poly_62_1", "T_n(62, 1), the x^n coefficient of (x^2 + 62x + 1)^n"),
];

fn p(c: &[i64]) -> Polynomial {
    Polynomial::from_ints(c)
}

fn lin(c: i64) -> Polynomial {
    Polynomial::linear(c)
}

fn int(b: BigInt) -> Rational {
    Rational::from_integer(b)
}

fn pow_i(base: i64, n: i64) -> BigInt {
    BigInt::from(base).pow(n as u32)
}

/// `(n+2)^3 S^2 - 2(2n+3)(5n^2+15n+12) S + 64(n+1)^3`
pub fn domb_operator() -> ShiftOperator {
    ShiftOperator::new(vec![
        lin(1).pow(3).scale(&rat(64)),
        (&p(&[3, 2]) * &p(&[12, 15, 5])).scale(&rat(-2)),
        lin(2).pow(3),
    ])
}

/// `(n+2)^2 S^2 - (7n^2+21n+16) S - 8(n+1)^2`
pub fn franel_operator() -> ShiftOperator {
    ShiftOperator::new(vec![
        lin(1).pow(2).scale(&rat(-8)),
        -p(&[16, 21, 7]),
        lin(2).pow(2),
    ])
}

/// `(n+2) S^2 - (2n+3) b S + (n+1)(b^2 - 4c)`
pub fn t_poly_operator(b: i64, c: i64) -> ShiftOperator {
    ShiftOperator::new(vec![
        lin(1).scale(&rat(b * b - 4 * c)),
        p(&[3, 2]).scale(&rat(-b)),
        lin(2),
    ])
}

/// `(n+2)^m S^2 - ((n+2)^m + (n+1)^m) S + (n+1)^m`
pub fn harmonic_operator(m: u32) -> ShiftOperator {
    ShiftOperator::new(vec![
        lin(1).pow(m),
        -(&lin(2).pow(m) + &lin(1).pow(m)),
        lin(2).pow(m),
    ])
}

fn with_oracle(
    name: &str,
    op: ShiftOperator,
    start: i64,
    oracle: impl Fn(i64) -> Rational + Send + Sync + 'static,
) -> HolonomicSequence {
    let j = op.order() as i64;
    let initial = (start..start + j).map(&oracle).collect();
    HolonomicSequence::new(name, op, start, initial)
        .expect("catalog operators have positive order")
        .with_oracle(Arc::new(oracle))
}

/// Fresh (uncached) instance of a catalog sequence.
pub fn build(key: &str) -> Option<HolonomicSequence> {
    let seq = match key {
        "domb" => with_oracle(key, domb_operator(), 0, |n| int(closed::domb(n as u64))),
        "franel" => with_oracle(key, franel_operator(), 0, |n| int(closed::franel(n as u64))),
        "domb_over_16n" => with_oracle(key, domb_operator().geometric_twist(&Rational::new(1.into(), 16.into())).primitive(), 0, |n| {
            Rational::new(closed::domb(n as u64), pow_i(16, n))
        }),
        "domb_over_neg32n" => with_oracle(
            key,
            domb_operator().geometric_twist(&Rational::new((-1).into(), 32.into())).primitive(),
            0,
            |n| Rational::new(closed::domb(n as u64), pow_i(-32, n)),
        ),
        "franel_signed_scaled" => {
            let op = ShiftOperator::new(vec![
                &p(&[0, 8]) * &p(&[-1, 0, 1]),
                -(&lin(0) * &p(&[16, 21, 7])),
                -lin(2).pow(3),
            ]);
            with_oracle(key, op, 2, |n| {
                Rational::new(closed::franel(n as u64) * pow_i(-1, n), BigInt::from(n * (n - 1)))
            })
        }
        "harmonic_scaled" => {
            let op = ShiftOperator::new(vec![
                &lin(0) * &lin(1).pow(2),
                -(&(&lin(1) * &lin(2)) * &p(&[3, 2])),
                &lin(2).pow(2) * &lin(3),
            ]);
            with_oracle(key, op, 1, |n| {
                closed::harmonic(n as u64, 1) / Rational::from_integer(BigInt::from(n * (n + 1)))
            })
        }
        "central_binomial_quartic" => {
            let op = ShiftOperator::new(vec![p(&[-1, 2]).pow(4), lin(1).pow(4).scale(&rat(-16))]);
            with_oracle(key, op, 0, |n| {
                let c = closed::central_binomial(n as u64).pow(4);
                Rational::new(c, BigInt::from(2 * n - 1).pow(4) * pow_i(256, n))
            })
        }
        "harmonic_1" | "harmonic_2" | "harmonic_3" => {
            let m: u32 = key[9..].parse().expect("key suffix");
            with_oracle(key, harmonic_operator(m), 0, move |n| closed::harmonic(n as u64, m))
        }
        "t_poly_62_1" => with_oracle(key, t_poly_operator(62, 1), 0, |n| {
            int(closed::t_poly(n as u64, &62.into(), &BigInt::one()))
        }),
        _ => return None,
    };
    Some(seq)
}

/// Shared catalog instances; their caches persist for the process.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        KEYS.iter()
            .map(|&(key, description)| CatalogEntry {
                key,
                sequence: build(key).expect("every key builds"),
                description,
            })
            .collect()
    })
}

pub fn lookup(key: &str) -> Option<&'static CatalogEntry> {
    catalog().iter().find(|e| e.key == key)
}

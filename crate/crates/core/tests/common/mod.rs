#![allow(dead_code)]

use std::path::{Path, PathBuf};

use holoreduce::polyarith::{rat, ratio};
use holoreduce::verify::{Fixture, IdentityFixture};
use holoreduce::{Polynomial, Rational, RationalFunction, ShiftOperator};
use proptest::prelude::*;

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn identity(name: &str) -> IdentityFixture {
    match Fixture::load(&fixtures_dir().join(format!("{name}.fixture"))).unwrap() {
        Fixture::Identity(f) => f,
        Fixture::Congruence(_) => panic!("{name} is not an identity fixture"),
    }
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

pub fn int_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-bound..=bound, 0..=max_deg + 1).prop_map(|c| Polynomial::from_ints(&c))
}

pub fn rat_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(small_rational(), 0..=max_deg + 1).prop_map(Polynomial::new)
}

pub fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    rat_poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

/// Operators of order 1..=`max_order` with coefficient degree at most
/// `max_deg` and a nonzero leading coefficient.
pub fn operator(max_order: usize, max_deg: usize) -> impl Strategy<Value = ShiftOperator> {
    (1..=max_order)
        .prop_flat_map(move |j| prop::collection::vec(int_poly(max_deg, 6), j + 1))
        .prop_map(ShiftOperator::new)
        .prop_filter("order >= 1", |op| op.order() >= 1)
}

pub fn ratfunc(max_deg: usize) -> impl Strategy<Value = RationalFunction> {
    (rat_poly(max_deg), nonzero_poly(max_deg))
        .prop_map(|(n, d)| RationalFunction::new(n, d).expect("nonzero denominator"))
}

pub fn lin(c: i64) -> Polynomial {
    Polynomial::linear(c)
}

pub fn r(n: i64) -> Rational {
    rat(n)
}

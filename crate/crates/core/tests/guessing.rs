//! Guessed annihilators against closed-form values.

mod common;

use holoreduce::polyarith::{ratio, Rational};
use holoreduce::sequences::closed::{domb, franel};
use holoreduce::sequences::guess_annihilator;
use holoreduce::exprio::parse_operator;
use holoreduce::ShiftOperator;
use num_traits::Zero;

const FIT: usize = 60;
const HELD: usize = 30;

fn terms(f: fn(u64) -> num_bigint::BigInt, from: u64, to: u64) -> Vec<Rational> {
    (from..to).map(|n| Rational::from_integer(f(n))).collect()
}

fn annihilates(op: &ShiftOperator, values: &[Rational], start: i64) -> bool {
    let j = op.order();
    (0..values.len() - j).all(|k| {
        let n = start + k as i64;
        let mut acc = Rational::zero();
        for (i, a) in op.coeffs().iter().enumerate() {
            acc += a.eval_int(n) * &values[k + i];
        }
        acc.is_zero()
    })
}

#[test]
fn franel_and_domb_hold_out() {
    for f in [franel as fn(u64) -> num_bigint::BigInt, domb] {
        let fit = terms(f, 0, FIT as u64);
        let op = guess_annihilator(&fit, 0, 2, 4).unwrap().expect("annihilator");
        assert_eq!(op.order(), 2);
        // next 30 terms were never seen by the guesser
        let held = terms(f, FIT as u64 - 2, (FIT + HELD) as u64);
        assert!(annihilates(&op, &held, FIT as i64 - 2));
    }
}

#[test]
fn domb_guess_twists_to_known_operator() {
    let op = guess_annihilator(&terms(domb, 0, FIT as u64), 0, 2, 4).unwrap().unwrap();
    let twisted = op.geometric_twist(&ratio(1, 16)).primitive();
    let known = parse_operator("8*(2+n)^3*S^2 - (3+2*n)*(12+15*n+5*n^2)*S + 2*(1+n)^3").unwrap();
    assert_eq!(twisted, known.primitive());
}

#[test]
fn ones_and_underdetermined() {
    let ones = vec![Rational::from_integer(1.into()); 30];
    let op = guess_annihilator(&ones, 0, 2, 2).unwrap().unwrap();
    assert_eq!(op, parse_operator("S - 1").unwrap());
    assert!(guess_annihilator(&ones[..10], 0, 2, 2).is_err());
}

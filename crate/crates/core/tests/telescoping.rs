//! Certificate identities on 100 consecutive indices, exact.

mod common;

use common::{identity, int_poly, lin, r};
use holoreduce::reduction::{build_l1_lower, polynomial_reduce};
use holoreduce::sequences::{lookup, SequenceError};
use holoreduce::verify::{check_rational_telescoping, check_telescoping, reduce_for_fixture, telescoping_report};
use holoreduce::{Polynomial, Rational};
use proptest::prelude::*;

#[test]
fn generated_identities() {
    let source = identity("domb_neg32");
    let seq = &lookup("domb_over_neg32n").unwrap().sequence;
    for name in ["upper_a2_i2", "upper_a3_i2", "lower_a2_i2", "lower_a3_i2", "upper_a2_i3"] {
        let fix = identity(name);
        let rr = reduce_for_fixture(&fix, &source).unwrap();
        let a = fix.start;
        assert!(check_rational_telescoping(seq, &source.numer, &rr, a, a + 99).unwrap(), "{name}");
        // shifted window
        assert!(check_rational_telescoping(seq, &source.numer, &rr, a + 17, a + 116).unwrap(), "{name}");
    }
}

#[test]
fn lower_side_decomposition() {
    let f = &lookup("domb_over_16n").unwrap().sequence;
    let l1 = build_l1_lower(f.operator(), &lin(1), 2).unwrap();
    let p = &(&lin(0) * &lin(-1)) * &Polynomial::from_ints(&[1, 3]);
    let red = polynomial_reduce(&p, &l1).unwrap();
    assert_eq!(red.remainder, lin(1).pow(2).scale(&r(2)));
    assert_eq!(red.multiplier, Polynomial::from_int(-1));
    let g = |n: i64| -> Result<Rational, SequenceError> { Ok(f.eval(n)? / r(n * (n - 1))) };
    let t = telescoping_report(g, 2, &l1, &red.multiplier, 2, 102).unwrap();
    assert!(t.holds);
    // p G - 2 (n+1)^2 G telescopes with the same certificate
    let mut lhs = Rational::from_integer(0.into());
    for n in 2..102 {
        lhs += (p.eval_int(n) - red.remainder.eval_int(n)) * g(n).unwrap();
    }
    let b = |n: i64| red.boundary_at(n, g).unwrap();
    assert_eq!(lhs, b(2) - b(102));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_multipliers(x in int_poly(4, 9), a in 0i64..40) {
        prop_assume!(!x.is_zero());
        for key in ["domb_over_neg32n", "franel", "harmonic_1"] {
            let seq = &lookup(key).unwrap().sequence;
            let start = seq.start().max(a);
            prop_assert!(check_telescoping(key, seq.operator(), &x, start, start + 100).unwrap());
        }
    }
}

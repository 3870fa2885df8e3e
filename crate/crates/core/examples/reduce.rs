//! Polynomial reduction with its telescoping certificate, checked on
//! exact values of the sequence.

use holoreduce::exprio::parse_polynomial;
use holoreduce::reduction::{build_l1_lower, polynomial_reduce};
use holoreduce::sequences::lookup;
use holoreduce::verify::telescoping_report;
use holoreduce::Rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = &lookup("domb_over_16n").expect("catalog key").sequence;
    // annihilator of G(n) = F(n) / (n (n-1)), n >= 2
    let l1 = build_l1_lower(f.operator(), &parse_polynomial("n+1")?, 2)?;
    let p = parse_polynomial("n*(n-1)*(3*n+1)")?;
    let r = polynomial_reduce(&p, &l1)?;
    println!("L1          = {l1}");
    println!("p           = {p}");
    println!("remainder   = {}", r.remainder);
    println!("multiplier  = {}", r.multiplier);
    for (i, u) in r.certificate.iter().enumerate() {
        println!("u_{i}         = {u}");
    }

    let g = |n: i64| -> Result<Rational, holoreduce::sequences::SequenceError> {
        Ok(f.eval(n)? / Rational::from_integer((n * (n - 1)).into()))
    };
    let t = telescoping_report(g, 2, &l1, &r.multiplier, 2, 12)?;
    println!("sum_(n=2)^11 L1*(x) G = {} (boundary form {}), holds: {}", t.lhs, t.rhs, t.holds);
    Ok(())
}

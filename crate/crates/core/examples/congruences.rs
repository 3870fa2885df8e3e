//! Exact residues modulo p^2 for primes p = 1 mod 3.

use std::path::Path;

use holoreduce::verify::{verify_congruence, Fixture};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let primes = [7, 13, 19, 31, 37, 43, 61, 67, 73, 79];
    for name in ["domb16_cong", "domb16_cong_lower"] {
        let Fixture::Congruence(fix) = Fixture::load(&dir.join(format!("{name}.fixture")))? else {
            unreachable!("congruence fixtures")
        };
        println!("{name}: target {} mod p^{}", fix.target, fix.modulus_power);
        for r in verify_congruence(&fix, &primes)? {
            println!("    p = {:>2}: residue {:>4} of {:>4}, expected {:>4}", r.prime, r.residue, r.modulus, r.expected);
        }
    }
    Ok(())
}

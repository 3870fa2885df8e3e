//! Recover annihilators from terms alone.

use holoreduce::sequences::{guess_annihilator, lookup, min_terms};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for key in ["franel", "domb", "harmonic_1"] {
        let seq = &lookup(key).expect("catalog key").sequence;
        let n = min_terms(2, 4) + 20;
        let terms = seq.values(seq.start(), seq.start() + n as i64 - 1)?;
        match guess_annihilator(&terms, seq.start(), 2, 4)? {
            Some(op) => println!("{key:<12} {op}"),
            None => println!("{key:<12} none up to order 2, degree 4"),
        }
    }
    Ok(())
}

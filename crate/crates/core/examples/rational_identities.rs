//! New series for Domb(n)/(-32)^n from the known value of
//! sum (3n+1) Domb(n)/(-32)^n = 2/pi by rational reduction.

use std::path::Path;

use holoreduce::verify::{reduce_for_fixture, verify_identity_exact, Fixture};

fn load(dir: &Path, name: &str) -> Result<Fixture, Box<dyn std::error::Error>> {
    Ok(Fixture::load(&dir.join(format!("{name}.fixture")))?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let Fixture::Identity(source) = load(&dir, "domb_neg32")? else {
        unreachable!("domb_neg32 is an identity fixture")
    };
    for name in ["upper_a2_i2", "upper_a3_i2", "lower_a2_i2", "lower_a3_i2", "upper_a2_i3"] {
        let Fixture::Identity(fix) = load(&dir, name)? else {
            unreachable!("eq fixtures are identities")
        };
        let rr = reduce_for_fixture(&fix, &source)?;
        let rep = verify_identity_exact(&fix, &source, &rr, 100)?;
        let d = fix.derivation.as_ref().expect("derived fixture");
        println!(
            "{name}: A = {}, {} side, I = {}",
            d.factor, d.side, d.order
        );
        println!("    sum_(n>={}) ({}) / ({}) F(n)", fix.start, fix.numer, fix.denom);
        println!("    = {}  [scalar {}, certificate windows hold: {}]", rep.derived_target, rep.scalar, rep.windows_hold);
    }
    Ok(())
}

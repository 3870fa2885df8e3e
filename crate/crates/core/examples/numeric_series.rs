//! Partial sums of the Domb(n)/(-32)^n series in fixed point against their
//! closed forms in 1/pi.

use std::path::Path;

use holoreduce::verify::{numeric_series_check, Accel, Fixture, DEFAULT_PRECISION_BITS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for name in ["domb_neg32", "upper_a2_i2", "upper_a3_i2", "lower_a2_i2", "lower_a3_i2", "upper_a2_i3"] {
        let Fixture::Identity(fix) = Fixture::load(&dir.join(format!("{name}.fixture")))? else {
            unreachable!("identity fixtures")
        };
        let rep = numeric_series_check(&fix, 1000, Accel::Average1, DEFAULT_PRECISION_BITS)?;
        println!(
            "{name:<7} {} vs {} = {}  |error| = {:.2e}",
            rep.value.to_decimal(25),
            fix.target,
            rep.target.to_decimal(25),
            rep.abs_error_f64()
        );
    }
    Ok(())
}

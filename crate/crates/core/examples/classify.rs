//! Degree profiles and summable-degree bounds of the catalog operators.

use holoreduce::sequences::catalog;

fn main() {
    for entry in catalog() {
        let op = entry.sequence.operator();
        let Ok(bounds) = op.summable_degree_bounds() else {
            continue;
        };
        let p = &bounds.profile;
        println!("{:<26} {}", entry.key, entry.description);
        println!("    L = {op}");
        println!(
            "    degL={} dL={} CL={} R_L={:?} degenerated={} strongly_nondegenerated={}",
            p.deg_l, p.d_l, p.c_l, p.r_l, p.degenerated, p.strongly_nondegenerated
        );
        match bounds.lower {
            Some(lower) => println!("    upper bound {}, lower bound {lower}", bounds.upper),
            None => println!("    upper bound {}, no lower bound", bounds.upper),
        }
        println!("    witness L*(n^CL) = {}", bounds.witness);
    }
}

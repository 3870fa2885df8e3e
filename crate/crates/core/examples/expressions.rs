//! Parse and print operators, polynomials and rational functions.

use holoreduce::exprio::{parse_operator, parse_rational_function, print, Format};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let op = parse_operator("(n+1)^3 + (2*n+3)*(5*n^2+15*n+12)*S + 16*(n+2)^3*S^2")?;
    for f in [Format::Text, Format::Latex, Format::Structured] {
        println!("{}", print(&op, f));
    }
    let r = parse_rational_function("(27 + 103*n + 141*n^2 + 78*n^3 + 15*n^4) / ((n+1)^2*(n+2)^2)")?;
    println!("{}", print(&r, Format::Text));
    println!("{}", print(&r, Format::Latex));
    match parse_operator("S*n") {
        Ok(op) => println!("{op}"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}

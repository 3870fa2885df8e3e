//! Parsing and printing of polynomials, rational functions and shift operators.
//!
//! ```text
//! expr     = term { ("+" | "-") term } ;
//! term     = unary { ("*" | "/") unary } ;
//! unary    = ("-" | "+") unary | power ;
//! power    = atom [ "^" integer ] ;
//! atom     = integer | "n" | "S" | "(" expr ")" ;
//! ```
//!
//! Juxtaposition is rejected. A factor containing `S` may only be multiplied
//! on its right by an `n`-free factor, so `a(n)*S^i` is the operator form and
//! `S*n` is an error. Divisors are `S`-free and nonzero.

mod parse;
mod print;

pub use parse::{parse_operator, parse_polynomial, parse_rational_function, ExprError, ParseError, DEGREE_CAP};
pub use print::{
    operator_to_latex, operator_to_text, poly_json, poly_to_latex, poly_to_text, print, rational_json,
    ratfunc_to_latex, ratfunc_to_text, Format, Render, SCHEMA,
};

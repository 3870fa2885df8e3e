//! Reduction-based creative telescoping for holonomic sequences.
//!
//! Given an annihilator `L = sum_i a_i(n) S^i` of `F(n)`, every polynomial
//! multiple `p(n) F(n)` splits as `p~(n) F(n) + Delta(T(n))` with `p~` of
//! bounded degree, and with a shift-product denominator the bound drops
//! further. Every decomposition is exact and carries its telescoping
//! certificate.

pub mod cli;
pub mod exprio;
pub mod operator;
pub mod polyarith;
pub mod reduction;
pub mod sequences;
pub mod verify;

pub use operator::{DegreeProfile, ShiftOperator};
pub use polyarith::{Polynomial, Rational, RationalFunction};

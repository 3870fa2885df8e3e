use num_traits::{One, Zero};

use super::SequenceError;
use crate::operator::ShiftOperator;
use crate::polyarith::{Polynomial, Rational};

/// Trailing terms kept out of the fitting system and used only for checking.
pub const HELD_OUT: usize = 10;

pub fn min_terms(max_order: usize, max_deg: usize) -> usize {
    (max_order + 1) * (max_deg + 2) + max_order + HELD_OUT
}

/// Smallest `(order, degree)` annihilator, in lexicographic order, fitted on
/// all but the last [`HELD_OUT`] terms and confirmed on every term.
/// `terms[k]` is `F(start + k)`. The result is primitive with `lc(a_J) > 0`.
pub fn guess_annihilator(
    terms: &[Rational],
    start: i64,
    max_order: usize,
    max_deg: usize,
) -> Result<Option<ShiftOperator>, SequenceError> {
    let needed = min_terms(max_order, max_deg);
    if terms.len() < needed {
        return Err(SequenceError::InsufficientTerms {
            needed,
            got: terms.len(),
        });
    }
    let fit = &terms[..terms.len() - HELD_OUT];
    for order in 1..=max_order {
        for deg in 0..=max_deg {
            let Some(op) = fit_operator(fit, start, order, deg) else {
                continue;
            };
            if annihilates(&op, terms, start) {
                return Ok(Some(op.primitive()));
            }
        }
    }
    Ok(None)
}

fn annihilates(op: &ShiftOperator, terms: &[Rational], start: i64) -> bool {
    let j = op.order();
    if op.is_zero() || terms.len() <= j {
        return false;
    }
    (0..terms.len() - j).all(|k| {
        let n = start + k as i64;
        let mut acc = Rational::zero();
        for (i, a) in op.coeffs().iter().enumerate() {
            acc += a.eval_int(n) * &terms[k + i];
        }
        acc.is_zero()
    })
}

/// Unknown `c_{i,d}` sits in column `i (deg + 1) + d`.
fn fit_operator(terms: &[Rational], start: i64, order: usize, deg: usize) -> Option<ShiftOperator> {
    if terms.len() <= order {
        return None;
    }
    let cols = (order + 1) * (deg + 1);
    let mut rows: Vec<Vec<Rational>> = (0..terms.len() - order)
        .map(|k| {
            let n = Rational::from_integer((start + k as i64).into());
            let mut row = Vec::with_capacity(cols);
            for i in 0..=order {
                let mut pw = Rational::one();
                for _ in 0..=deg {
                    row.push(&pw * &terms[k + i]);
                    pw *= &n;
                }
            }
            row
        })
        .collect();
    let x = nullspace_vector(&mut rows, cols)?;
    let coeffs = (0..=order)
        .map(|i| Polynomial::new(x[i * (deg + 1)..(i + 1) * (deg + 1)].to_vec()))
        .collect();
    let op = ShiftOperator::new(coeffs);
    (!op.is_zero()).then_some(op)
}

/// Reduces `rows` in place and returns the basis vector of the first free
/// column, or `None` when the kernel is trivial.
fn nullspace_vector(rows: &mut [Vec<Rational>], cols: usize) -> Option<Vec<Rational>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v -= &f * p;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut x = vec![Rational::zero(); cols];
    x[free] = Rational::one();
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = -rows[row][free].clone();
    }
    Some(x)
}

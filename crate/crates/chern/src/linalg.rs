//! Minimal exact linear algebra over the rationals: just what basis
//! conversion and the odd-coefficient dependence solver need.

use num_traits::{One, Zero};

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub(crate) fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

/// Exact Gauss-Jordan inverse. `None` if the matrix is singular.
pub(crate) fn invert(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a = m.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = Rational::one() / a[col][col].clone();
        for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
            *x *= &scale;
        }
        for row in 0..n {
            if row == col || a[row][col].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut a[row][col], Rational::zero());
            for c in col + 1..n {
                let t = &a[col][c] * &factor;
                a[row][c] -= t;
            }
            for c in 0..n {
                let t = &inv[col][c] * &factor;
                inv[row][c] -= t;
            }
        }
    }
    Some(inv)
}

/// Solves `A x = b` exactly for a possibly overdetermined system.
/// Free variables are set to zero. Returns `None` when inconsistent.
pub(crate) fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut v = row.clone();
            v.push(rhs.clone());
            v
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next_row = 0;
    for col in 0..cols {
        let Some(pivot) = (next_row..rows).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(next_row, pivot);
        let scale = Rational::one() / aug[next_row][col].clone();
        for x in aug[next_row].iter_mut() {
            *x *= &scale;
        }
        for row in 0..rows {
            if row == next_row || aug[row][col].is_zero() {
                continue;
            }
            let factor = aug[row][col].clone();
            for c in col..=cols {
                let t = &aug[next_row][c] * &factor;
                aug[row][c] -= t;
            }
        }
        pivots.push((next_row, col));
        next_row += 1;
    }
    for row in next_row..rows {
        if !aug[row][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, col) in pivots {
        x[col] = aug[row][cols].clone();
    }
    Some(x)
}

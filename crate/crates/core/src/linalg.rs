//! Exact linear algebra over `Q` by fraction-free (Bareiss) elimination.
//!
//! Rational rows are first scaled to integer rows by their common denominator;
//! elimination then runs entirely in `BigInt` with exact divisions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::{common_denominator, Rational};
use crate::{Error, Result};

/// Scales a rational vector to a primitive-free integer vector with the same
/// span (multiplies by the common denominator).
pub fn integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let lcd = common_denominator(v);
    v.iter()
        .map(|q| (q * Rational::from_integer(lcd.clone())).to_integer())
        .collect()
}

/// Reduces `m` in place to row echelon form, pivoting only on the first
/// `pivot_cols` columns. Returns the pivot column of each leading row.
pub fn bareiss_echelon(m: &mut [Vec<BigInt>], pivot_cols: usize) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols.min(ncols) {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = &pivot_row[c];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let num = piv * &row[j] - &factor * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of an integer matrix given by rows.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    bareiss_echelon(&mut m, ncols).len()
}

/// Rank of a rational matrix given by rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_vector(r)).collect();
    integer_rank(&ints)
}

/// Solves the square-or-tall system `rows · x = rhs` using as few leading
/// equations as possible, then checks every equation.
///
/// Equations are taken in order: first `n` of them (`n` unknowns), then one
/// more at a time until the coefficient rank reaches `n`. All remaining
/// equations must be satisfied by the solution.
pub fn solve_leading(rows: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>> {
    assert_eq!(rows.len(), rhs.len(), "one right-hand side per equation");
    let n = rows.first().map_or(0, Vec::len);
    if n == 0 {
        return Ok(Vec::new());
    }
    if rows.len() < n {
        return Err(Error::Singular {
            rank: rank(rows),
            needed: n,
        });
    }
    let augmented = |i: usize| {
        let mut row = rows[i].clone();
        row.push(rhs[i].clone());
        integer_vector(&row)
    };
    let mut used: Vec<Vec<BigInt>> = (0..n).map(augmented).collect();
    let mut next = n;
    let (echelon, pivots) = loop {
        let mut m = used.clone();
        let pivots = bareiss_echelon(&mut m, n);
        if pivots.len() == n {
            break (m, pivots);
        }
        if next == rows.len() {
            return Err(Error::Singular {
                rank: pivots.len(),
                needed: n,
            });
        }
        used.push(augmented(next));
        next += 1;
    };
    debug_assert!(pivots.iter().enumerate().all(|(i, &c)| i == c));

    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(echelon[i][n].clone());
        for j in i + 1..n {
            acc -= Rational::from_integer(echelon[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from_integer(echelon[i][i].clone());
    }

    for (idx, (row, b)) in rows.iter().zip(rhs).enumerate() {
        let lhs: Rational = row.iter().zip(&x).map(|(a, xi)| a * xi).sum();
        if &lhs != b {
            return Err(Error::Inconsistent { index: idx });
        }
    }
    Ok(x)
}

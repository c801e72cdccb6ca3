//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::rational::{int, Rational};

/// Row-reduces in place and returns the pivot columns.
fn reduce(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Rational::from_integer(1.into()) / &m[row][col];
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..cols {
                    let d = &f * &m[row][c];
                    m[r][c] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    reduce(&mut m).len()
}

/// Dimension of the affine hull of integer points; -1 for no points.
pub fn affine_rank(points: &[Vec<i64>]) -> isize {
    let Some(first) = points.first() else {
        return -1;
    };
    let rows: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| int(a - b)).collect())
        .collect();
    rank(&rows) as isize
}

/// The unique `x` with `sum_j x_j * columns[j] = rhs`, or `None` when the
/// system is inconsistent or the columns are dependent.
pub fn solve(columns: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let k = columns.len();
    let mut m: Vec<Vec<Rational>> = (0..rhs.len())
        .map(|i| columns.iter().map(|c| c[i].clone()).chain(std::iter::once(rhs[i].clone())).collect())
        .collect();
    let pivots = reduce(&mut m);
    if pivots.contains(&k) || pivots.len() != k {
        return None;
    }
    Some((0..k).map(|j| m[j][k].clone()).collect())
}

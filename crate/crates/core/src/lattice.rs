//! Invariant factors of integer matrices via Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Nonzero invariant factors d_1 | d_2 | ... of `m`, all positive. Their
/// count is the rank.
pub fn invariant_factors(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        // Pivot: smallest nonzero magnitude in the trailing block.
        let Some((pr, pc)) = smallest(&m, t) else {
            break;
        };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                if m[r][t].is_zero() {
                    continue;
                }
                let q = m[r][t].div_floor(&m[t][t]);
                for c in t..cols {
                    let d = &q * &m[t][c];
                    m[r][c] -= d;
                }
                if !m[r][t].is_zero() {
                    dirty = true;
                }
            }
            for c in t + 1..cols {
                if m[t][c].is_zero() {
                    continue;
                }
                let q = m[t][c].div_floor(&m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let d = &q * &row[t];
                    row[c] -= d;
                }
                if !m[t][c].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                // Divisibility: fold any entry the pivot does not divide into row t.
                let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !(&m[r][c] % &m[t][t]).is_zero()));
                match bad {
                    Some(r) => {
                        for c in t..cols {
                            let v = m[r][c].clone();
                            m[t][c] += v;
                        }
                    }
                    None => break,
                }
            }
            let (pr, pc) = smallest(&m, t).unwrap();
            m.swap(t, pr);
            for row in m.iter_mut() {
                row.swap(t, pc);
            }
        }
        out.push(m[t][t].abs());
    }
    out
}

fn smallest(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for r in t..m.len() {
        for c in t..m[r].len() {
            if m[r][c].is_zero() {
                continue;
            }
            if best.is_none_or(|(br, bc)| m[r][c].abs() < m[br][bc].abs()) {
                best = Some((r, c));
            }
        }
    }
    best
}

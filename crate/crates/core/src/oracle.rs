//! Brute-force verifiers, independent of the facet-pivot enumeration.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::FramedNetwork;
use crate::error::{Error, Result};
use crate::graph::{count_integer_flows, Dag, Netflow};
use crate::rational::{int, Rational};
use crate::triangulation::{dual_graph, is_layering_simplex, Triangulation};

pub const BRUTE_FORCE_MAX_LAYERINGS: usize = 20;

/// Number of integer `t * a`-flows for `t = 0..=max_dilation`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EhrhartTable {
    pub counts: Vec<u64>,
}

pub fn ehrhart_table(dag: &Dag, netflow: &Netflow, max_dilation: u32) -> EhrhartTable {
    let counts = (0..=max_dilation).into_par_iter().map(|t| count_integer_flows(dag, netflow, t)).collect();
    EhrhartTable { counts }
}

/// The `d`-th finite difference at 0 of the lattice-point counts, which is
/// `d!` times the leading Ehrhart coefficient.
pub fn volume_by_ehrhart(dag: &Dag, netflow: &Netflow, dimension: isize) -> BigInt {
    if dimension < 0 {
        return BigInt::zero();
    }
    let d = dimension as u32;
    let table = ehrhart_table(dag, netflow, d);
    finite_difference(&table.counts)
}

fn finite_difference(counts: &[u64]) -> BigInt {
    let d = counts.len() - 1;
    let mut total = BigInt::zero();
    let mut binom = BigInt::from(1u8);
    for k in 0..=d {
        // binom = C(d, k)
        let term = &binom * BigInt::from(counts[k]);
        if (d - k).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
        binom = binom * BigInt::from(d - k) / BigInt::from(k + 1);
    }
    total
}

/// Every `size`-subset of layerings passing the layering-simplex test, as
/// sorted layering indices.
pub fn brute_force_maximal_simplices(net: &FramedNetwork, size: usize) -> Result<Vec<Vec<usize>>> {
    let ls = net.enumerate_layerings();
    if ls.len() > BRUTE_FORCE_MAX_LAYERINGS {
        return Err(Error::GuardExceeded { count: ls.len(), limit: BRUTE_FORCE_MAX_LAYERINGS });
    }
    let mut out = Vec::new();
    if size == 0 || size > ls.len() {
        return Ok(out);
    }
    // Pairwise compatibility of the route union prunes most subsets early.
    let pair_ok: Vec<Vec<bool>> = ls
        .iter()
        .map(|a| ls.iter().map(|b| a.routes().iter().all(|&p| b.routes().iter().all(|&q| net.compatible(p, q)))).collect())
        .collect();
    let mut chosen = Vec::new();
    extend_subsets(ls.len(), size, 0, &pair_ok, &mut chosen, &mut |subset| {
        let members: Vec<_> = subset.iter().map(|&i| ls[i].clone()).collect();
        if is_layering_simplex(net, &members).is_simplex() {
            out.push(subset.to_vec());
        }
    });
    Ok(out)
}

fn extend_subsets(
    n: usize,
    size: usize,
    start: usize,
    pair_ok: &[Vec<bool>],
    chosen: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == size {
        visit(chosen);
        return;
    }
    for i in start..n {
        if n - i < size - chosen.len() {
            break;
        }
        if chosen.iter().all(|&c| pair_ok[c][i]) {
            chosen.push(i);
            extend_subsets(n, size, i + 1, pair_ok, chosen, visit);
            chosen.pop();
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub samples: usize,
    pub passed: usize,
    pub failed: usize,
    /// Up to ten failure descriptions, by sample index.
    pub failures: Vec<String>,
}

impl CoverageReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

fn weights(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    let raw: Vec<u64> = (0..n).map(|_| rng.random_range(1..=997)).collect();
    let total: u64 = raw.iter().sum();
    raw.into_iter().map(|w| Rational::new(BigInt::from(w), BigInt::from(total))).collect()
}

/// Each sample makes three checks. A random combination of all layerings
/// must decompose into a face of some maximal simplex and reconstruct the
/// point. A random interior point of a random maximal simplex must return
/// that simplex with its weights. A random interior point of a random face
/// shared by two adjacent simplices (or of a random face, without adjacency)
/// must return exactly that face.
pub fn coverage_audit(net: &FramedNetwork, tri: &Triangulation, samples: usize, seed: u64) -> CoverageReport {
    let results: Vec<Option<String>> =
        (0..samples).into_par_iter().map(|k| audit_sample(net, tri, seed, k as u64).err()).collect();
    let failures: Vec<String> =
        results.iter().enumerate().filter_map(|(k, r)| r.as_ref().map(|m| format!("sample {k}: {m}"))).collect();
    CoverageReport {
        samples,
        passed: samples - failures.len(),
        failed: failures.len(),
        failures: failures.into_iter().take(10).collect(),
    }
}

fn point_of(tri: &Triangulation, members: &[usize], w: &[Rational]) -> Vec<Rational> {
    let dim = tri.vertex_coordinates(0, false).len();
    let mut p = vec![Rational::zero(); dim];
    for (&m, a) in members.iter().zip(w) {
        for (x, &c) in p.iter_mut().zip(tri.vertex_coordinates(m, false)) {
            if c != 0 {
                *x += a * int(c);
            }
        }
    }
    p
}

/// Decomposes `point` and returns layering indices with coefficients, sorted
/// by index, after checking reconstruction.
fn decompose(net: &FramedNetwork, tri: &Triangulation, point: &[Rational]) -> std::result::Result<Vec<(usize, Rational)>, String> {
    let combo = net.layering_simplex_decompose(point).map_err(|e| e.to_string())?;
    let mut terms = combo
        .terms
        .iter()
        .map(|(l, a)| net.layering_index(l).map(|i| (i, a.clone())).ok_or("unknown layering".to_string()))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    terms.sort();
    let members: Vec<usize> = terms.iter().map(|(i, _)| *i).collect();
    let coeffs: Vec<Rational> = terms.iter().map(|(_, a)| a.clone()).collect();
    if point_of(tri, &members, &coeffs) != point {
        return Err("decomposition does not reconstruct the point".into());
    }
    Ok(terms)
}

fn expect_exact(got: &[(usize, Rational)], members: &[usize], w: &[Rational], what: &str) -> std::result::Result<(), String> {
    let mut want: Vec<(usize, Rational)> = members.iter().copied().zip(w.iter().cloned()).collect();
    want.sort();
    if got != want {
        return Err(format!("{what}: expected layerings {members:?}, got {:?}", got.iter().map(|t| t.0).collect::<Vec<_>>()));
    }
    Ok(())
}

fn audit_sample(net: &FramedNetwork, tri: &Triangulation, seed: u64, k: u64) -> std::result::Result<(), String> {
    if tri.simplices().is_empty() {
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k);

    let all: Vec<usize> = (0..tri.layerings().len()).collect();
    let w = weights(&mut rng, all.len());
    let got = decompose(net, tri, &point_of(tri, &all, &w))?;
    let used: BTreeSet<usize> = got.iter().map(|t| t.0).collect();
    if !tri.simplices().iter().any(|s| used.iter().all(|u| s.contains(u))) {
        return Err(format!("layerings {used:?} lie in no maximal simplex"));
    }

    let s = &tri.simplices()[rng.random_range(0..tri.simplices().len())];
    let w = weights(&mut rng, s.len());
    expect_exact(&decompose(net, tri, &point_of(tri, s, &w))?, s, &w, "simplex interior")?;

    let dual = dual_graph(tri);
    let face: Vec<usize> = if dual.edges.is_empty() {
        let s = &tri.simplices()[rng.random_range(0..tri.simplices().len())];
        let mask = rng.random_range(1..(1u64 << s.len()));
        (0..s.len()).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect()
    } else {
        let (a, b) = dual.edges[rng.random_range(0..dual.edges.len())];
        tri.simplices()[a].iter().copied().filter(|x| tri.simplices()[b].contains(x)).collect()
    };
    let w = weights(&mut rng, face.len());
    expect_exact(&decompose(net, tri, &point_of(tri, &face, &w))?, &face, &w, "shared face")
}

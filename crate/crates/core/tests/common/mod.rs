//! Brute-force reference implementations written straight from the
//! definitions. They share no code paths with the library beyond reading the
//! graph and framing.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeSet;

use flowtri::decomposition::FramedNetwork;
use flowtri::graph::{Dag, Netflow};
use flowtri::rational::{int, Rational};
use num_traits::{Signed, Zero};

pub type Path = Vec<usize>;

fn vertex_seq(dag: &Dag, p: &[usize]) -> Vec<usize> {
    let mut out = vec![dag.edge(p[0]).tail];
    out.extend(p.iter().map(|&e| dag.edge(e).head));
    out
}

/// Post-order at `v`: walk forward in lockstep, decide at the first fork.
pub fn post(net: &FramedNetwork, v: usize, p: &[usize], q: &[usize]) -> Ordering {
    let (dag, fr) = (net.dag(), net.framing());
    let i = vertex_seq(dag, p).iter().position(|&x| x == v).unwrap();
    let j = vertex_seq(dag, q).iter().position(|&x| x == v).unwrap();
    let (a, b) = (&p[i..], &q[j..]);
    let k = a.iter().zip(b).take_while(|(x, y)| x == y).count();
    match (a.get(k), b.get(k)) {
        (Some(&x), Some(&y)) => fr.out_rank(x).unwrap().cmp(&fr.out_rank(y).unwrap()),
        _ => Ordering::Equal,
    }
}

/// Pre-order at `v`: walk backward in lockstep, decide at the merge.
pub fn pre(net: &FramedNetwork, v: usize, p: &[usize], q: &[usize]) -> Ordering {
    let (dag, fr) = (net.dag(), net.framing());
    let i = vertex_seq(dag, p).iter().position(|&x| x == v).unwrap();
    let j = vertex_seq(dag, q).iter().position(|&x| x == v).unwrap();
    let a: Vec<usize> = p[..i].iter().rev().copied().collect();
    let b: Vec<usize> = q[..j].iter().rev().copied().collect();
    let k = a.iter().zip(&b).take_while(|(x, y)| x == y).count();
    match (a.get(k), b.get(k)) {
        (Some(&x), Some(&y)) => fr.in_rank(x).unwrap().cmp(&fr.in_rank(y).unwrap()),
        _ => Ordering::Equal,
    }
}

pub fn compatible(net: &FramedNetwork, p: &[usize], q: &[usize]) -> bool {
    let dag = net.dag();
    let vq: BTreeSet<usize> = vertex_seq(dag, q).into_iter().collect();
    for v in vertex_seq(dag, p) {
        if !vq.contains(&v) || dag.is_sink(v) {
            continue;
        }
        let (a, b) = (pre(net, v, p, q), post(net, v, p, q));
        if a != Ordering::Equal && b != Ordering::Equal && a != b {
            return false;
        }
    }
    true
}

/// A layering as one path per source, in source order.
pub type Lay = Vec<Path>;

pub fn routes_from(net: &FramedNetwork, s: usize) -> Vec<Path> {
    net.routes().iter().filter(|r| r.source(net.dag()) == s).map(|r| r.edges().to_vec()).collect()
}

pub fn is_clique(net: &FramedNetwork, paths: &[Path]) -> bool {
    paths.iter().all(|p| paths.iter().all(|q| compatible(net, p, q)))
}

pub fn cmp_layerings(net: &FramedNetwork, l: &Lay, m: &Lay) -> Ordering {
    let sources = net.framing().source_order();
    for i in (0..l.len()).rev() {
        if l[i] != m[i] {
            return post(net, sources[i], &l[i], &m[i]);
        }
    }
    Ordering::Equal
}

/// All layerings by exhaustive product over sources, sorted.
pub fn layerings(net: &FramedNetwork) -> Vec<Lay> {
    let dag = net.dag();
    let sources = net.framing().source_order().to_vec();
    let mut all: Vec<Lay> = vec![vec![]];
    for &s in &sources {
        let mut next = Vec::new();
        for partial in &all {
            for r in routes_from(net, s) {
                let mut l = partial.clone();
                l.push(r);
                next.push(l);
            }
        }
        all = next;
    }
    let demand = |l: &Lay| {
        (0..dag.vertex_count()).filter(|&v| dag.is_sink(v)).all(|t| {
            let ends = l.iter().filter(|p| dag.edge(*p.last().unwrap()).head == t).count() as i64;
            ends == -net.netflow().get(t)
        })
    };
    let mut out: Vec<Lay> = all.into_iter().filter(|l| demand(l) && is_clique(net, l)).collect();
    out.sort_by(|a, b| cmp_layerings(net, a, b));
    out
}

pub fn route_set(ls: &[&Lay]) -> BTreeSet<Path> {
    ls.iter().flat_map(|l| l.iter().cloned()).collect()
}

/// Violated condition numbers (1, 2, 3) of a set of layerings.
pub fn simplex_violations(net: &FramedNetwork, all: &[Lay], members: &[&Lay]) -> BTreeSet<u8> {
    let mut sorted: Vec<&Lay> = members.to_vec();
    sorted.sort_by(|a, b| cmp_layerings(net, a, b));
    let mut bad = BTreeSet::new();
    let union: Vec<Path> = route_set(&sorted).into_iter().collect();
    if !is_clique(net, &union) {
        bad.insert(1);
    }
    for i in 0..sorted.len() {
        let suffix = route_set(&sorted[i..]);
        let min = all.iter().find(|l| l.iter().all(|p| suffix.contains(p)));
        if min != Some(sorted[i]) {
            bad.insert(2);
        }
        let later = route_set(&sorted[i + 1..]);
        if sorted[i].iter().all(|p| later.contains(p)) {
            bad.insert(3);
        }
    }
    bad
}

/// Inclusion-maximal layering-simplices over all subsets, as sorted indices.
pub fn maximal_simplices(net: &FramedNetwork, all: &[Lay]) -> Vec<Vec<usize>> {
    let n = all.len();
    assert!(n <= 16, "oracle is exponential");
    let good: Vec<u32> = (1u32..(1 << n))
        .filter(|mask| {
            let members: Vec<&Lay> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &all[i]).collect();
            simplex_violations(net, all, &members).is_empty()
        })
        .collect();
    let mut out: Vec<Vec<usize>> = good
        .iter()
        .filter(|&&m| !good.iter().any(|&g| g != m && g & m == m))
        .map(|&m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect();
    out.sort();
    out
}

pub fn indicator(net: &FramedNetwork, paths: &[Path]) -> Vec<i64> {
    let mut v = vec![0; net.dag().edge_count()];
    for p in paths {
        for &e in p {
            v[e] += 1;
        }
    }
    v
}

/// Solves `cols * c = rhs` exactly; `None` unless the solution is unique.
pub fn solve_unique(cols: &[Vec<i64>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let (m, n) = (rhs.len(), cols.len());
    let mut a: Vec<Vec<Rational>> =
        (0..m).map(|r| (0..n).map(|c| int(cols[c][r])).chain([rhs[r].clone()]).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..n {
        let p = (row..m).find(|&r| !a[r][c].is_zero())?;
        a.swap(row, p);
        let lead = a[row][c].clone();
        for x in a[row].iter_mut() {
            *x /= &lead;
        }
        for r in 0..m {
            if r != row && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..=n {
                    let d = &f * &a[row][k];
                    a[r][k] -= d;
                }
            }
        }
        pivots.push(row);
        row += 1;
    }
    if (row..m).any(|r| !a[r][n].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| a[r][n].clone()).collect())
}

/// Every positive route-clique combination of `flow`, by searching all
/// cliques of routes inside the support.
pub fn route_clique_combinations(net: &FramedNetwork, flow: &[Rational]) -> Vec<Vec<(Path, Rational)>> {
    let inside: Vec<Path> = net
        .routes()
        .iter()
        .map(|r| r.edges().to_vec())
        .filter(|p| p.iter().all(|&e| flow[e].is_positive()))
        .collect();
    let ok: Vec<Vec<bool>> = inside.iter().map(|p| inside.iter().map(|q| compatible(net, p, q)).collect()).collect();
    let mut cliques = vec![vec![]];
    grow(&ok, 0, &mut vec![], &mut cliques);
    let mut out = Vec::new();
    for chosen in cliques {
        if chosen.is_empty() {
            if flow.iter().all(Zero::is_zero) {
                out.push(vec![]);
            }
            continue;
        }
        let cols: Vec<Vec<i64>> = chosen.iter().map(|&i| indicator(net, std::slice::from_ref(&inside[i]))).collect();
        if let Some(c) = solve_unique(&cols, flow) {
            if c.iter().all(Signed::is_positive) {
                out.push(chosen.iter().map(|&i| inside[i].clone()).zip(c).collect());
            }
        }
    }
    out
}

fn grow(ok: &[Vec<bool>], start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    for i in start..ok.len() {
        if current.iter().all(|&c| ok[c][i]) {
            current.push(i);
            out.push(current.clone());
            grow(ok, i + 1, current, out);
            current.pop();
        }
    }
}

/// Integer `t * a`-flows: every edge takes each value up to `t * strength`,
/// and a vertex is checked once all its edges are assigned.
pub fn integer_flows(dag: &Dag, netflow: &Netflow, t: i64) -> Vec<Vec<i64>> {
    let bound = t * netflow.values().iter().filter(|&&a| a > 0).sum::<i64>();
    let m = dag.edge_count();
    // Vertices that become fully assigned after edge k.
    let mut done_after: Vec<Vec<usize>> = vec![vec![]; m];
    let mut isolated = Vec::new();
    for v in 0..dag.vertex_count() {
        let last = dag.in_edges(v).iter().chain(dag.out_edges(v)).max();
        match last {
            Some(&k) => done_after[k].push(v),
            None => isolated.push(v),
        }
    }
    if isolated.iter().any(|&v| t * netflow.get(v) != 0) {
        return vec![];
    }
    fn go(dag: &Dag, a: &Netflow, t: i64, bound: i64, done: &[Vec<usize>], x: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let k = x.len();
        if k == dag.edge_count() {
            out.push(x.clone());
            return;
        }
        for value in 0..=bound {
            x.push(value);
            let balanced = done[k].iter().all(|&v| {
                let o: i64 = dag.out_edges(v).iter().map(|&e| x[e]).sum();
                let i: i64 = dag.in_edges(v).iter().map(|&e| x[e]).sum();
                o - i == t * a.get(v)
            });
            if balanced {
                go(dag, a, t, bound, done, x, out);
            }
            x.pop();
        }
    }
    let mut out = Vec::new();
    go(dag, netflow, t, bound, &done_after, &mut Vec::with_capacity(m), &mut out);
    out.sort();
    out
}

/// Every set of pairwise co-facial vertices lies in one simplex.
pub fn is_flag(n: usize, simplices: &[Vec<usize>]) -> bool {
    let cofacial = |a: usize, b: usize| simplices.iter().any(|s| s.contains(&a) && s.contains(&b));
    (1u32..(1 << n)).all(|mask| {
        let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let pairwise = set.iter().all(|&a| set.iter().all(|&b| cofacial(a, b)));
        !pairwise || simplices.iter().any(|s| set.iter().all(|x| s.contains(x)))
    })
}

fn closure(n: usize, arcs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut r = vec![vec![false; n]; n];
    for &(a, b) in arcs {
        r[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r
}

/// Acyclic and equal to its transitive reduction.
pub fn is_hasse(n: usize, arcs: &[(usize, usize)]) -> bool {
    let r = closure(n, arcs);
    if (0..n).any(|i| r[i][i]) {
        return false;
    }
    arcs.iter().all(|&(a, b)| !(0..n).any(|k| k != a && k != b && r[a][k] && r[k][b]))
}

pub fn some_orientation_is_hasse(n: usize, edges: &[(usize, usize)]) -> bool {
    (0u32..(1 << edges.len())).any(|mask| {
        let arcs: Vec<(usize, usize)> =
            edges.iter().enumerate().map(|(k, &(a, b))| if mask >> k & 1 == 1 { (b, a) } else { (a, b) }).collect();
        is_hasse(n, &arcs)
    })
}

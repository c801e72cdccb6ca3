//! The framing triangulation: maximal layering-simplices by facet pivots,
//! the dual graph, and structural checks.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::augmentation::Core;
use crate::cliques::maximal_cliques;
use crate::decomposition::{FramedNetwork, Layering, RouteId};
use crate::error::{Error, Result};
use crate::lattice::invariant_factors;
use crate::linalg::affine_rank;
use crate::rational::{int, Rational};

/// Why a set of layerings is not a layering-simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// The union of routes has an incompatible pair.
    NotRouteClique(RouteId, RouteId),
    /// The member at this position is not the minimal layering on the routes
    /// of itself and its successors; `minimum` is the actual minimum.
    NotSuffixMinimal { position: usize, minimum: Layering },
    /// The member at this position has no route outside its successors.
    NoOwnRoute { position: usize },
}

impl Violation {
    pub fn condition(&self) -> u8 {
        match self {
            Violation::NotRouteClique(..) => 1,
            Violation::NotSuffixMinimal { .. } => 2,
            Violation::NoOwnRoute { .. } => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexReport {
    /// The input, deduplicated and sorted by the post-source order.
    pub sorted: Vec<Layering>,
    pub violations: Vec<Violation>,
}

impl SimplexReport {
    pub fn is_simplex(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the three layering-simplex conditions and reports every failure.
pub fn is_layering_simplex(net: &FramedNetwork, layerings: &[Layering]) -> SimplexReport {
    let mut sorted = layerings.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut violations = Vec::new();
    let union: Vec<RouteId> =
        sorted.iter().flat_map(|l| l.routes().iter().copied()).collect::<BTreeSet<_>>().into_iter().collect();
    if let Some((a, b)) = net.incompatible_pair(&union) {
        violations.push(Violation::NotRouteClique(a, b));
    }
    for i in 0..sorted.len() {
        let suffix: Vec<RouteId> = sorted[i..]
            .iter()
            .flat_map(|l| l.routes().iter().copied())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if let Some(minimum) = net.min_layering_within(&suffix) {
            if minimum != sorted[i] {
                violations.push(Violation::NotSuffixMinimal { position: i, minimum });
            }
        }
    }
    for i in 0..sorted.len() {
        let later: HashSet<RouteId> = sorted[i + 1..].iter().flat_map(|l| l.routes().iter().copied()).collect();
        if sorted[i].routes().iter().all(|r| later.contains(r)) {
            violations.push(Violation::NoOwnRoute { position: i });
        }
    }
    SimplexReport { sorted, violations }
}

/// Maximal layering-simplices with vertex coordinates. Simplices index into
/// `layerings`, which is sorted by the post-source order, so each simplex is
/// listed in that order too.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    layerings: Vec<Layering>,
    simplices: Vec<Vec<usize>>,
    dimension: isize,
    points: Vec<Vec<i64>>,
    base_points: Vec<Vec<i64>>,
}

impl Triangulation {
    pub fn empty() -> Triangulation {
        Triangulation { layerings: vec![], simplices: vec![], dimension: -1, points: vec![], base_points: vec![] }
    }

    pub fn layerings(&self) -> &[Layering] {
        &self.layerings
    }

    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn dimension(&self) -> isize {
        self.dimension
    }

    /// Indicator of a layering on the core edges, or on the base edges when
    /// `deaugmented`.
    pub fn vertex_coordinates(&self, layering: usize, deaugmented: bool) -> &[i64] {
        if deaugmented {
            &self.base_points[layering]
        } else {
            &self.points[layering]
        }
    }

    /// Same complex with a replaced simplex list.
    pub fn with_simplices(&self, mut simplices: Vec<Vec<usize>>) -> Triangulation {
        for s in &mut simplices {
            s.sort_unstable();
        }
        simplices.sort();
        Triangulation { simplices, ..self.clone() }
    }

    pub fn volume(&self) -> usize {
        self.simplices.len()
    }
}

pub fn enumerate_layerings(core: &Core) -> Vec<Layering> {
    core.network().map(|n| n.enumerate_layerings().to_vec()).unwrap_or_default()
}

/// Affine dimension of the flow polytope; -1 when empty.
pub fn dimension(core: &Core) -> isize {
    match core.network() {
        None => -1,
        Some(net) => {
            let points: Vec<Vec<i64>> = net.enumerate_layerings().iter().map(|l| net.layering_indicator(l)).collect();
            affine_rank(&points)
        }
    }
}

fn indices_of(net: &FramedNetwork, layerings: &[&Layering]) -> Result<Vec<usize>> {
    let mut out = layerings
        .iter()
        .map(|l| net.layering_index(l).ok_or_else(|| Error::Internal("unknown layering".into())))
        .collect::<Result<Vec<_>>>()?;
    out.sort_unstable();
    Ok(out)
}

fn combination(points: &[Vec<Rational>], members: &[usize], weights: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); points.first().map_or(0, Vec::len)];
    for (&m, w) in members.iter().zip(weights) {
        for (o, p) in out.iter_mut().zip(&points[m]) {
            if !p.is_zero() {
                *o += w * p;
            }
        }
    }
    out
}

fn weights_from(raw: &[u32]) -> Vec<Rational> {
    let total: u64 = raw.iter().map(|&w| u64::from(w)).sum();
    raw.iter().map(|&w| Rational::new(BigInt::from(w), BigInt::from(total))).collect()
}

/// All maximal layering-simplices. A generic interior point gives the first
/// one; each facet is then crossed by decomposing a point just beyond its
/// barycenter, away from the opposite vertex. Samples with a negative entry
/// lie outside the polytope, so their facet is on the boundary.
pub fn maximal_simplices(core: &Core) -> Result<Triangulation> {
    let Some(net) = core.network() else {
        return Ok(Triangulation::empty());
    };
    let layerings = net.enumerate_layerings().to_vec();
    let points: Vec<Vec<i64>> = layerings.iter().map(|l| net.layering_indicator(l)).collect();
    let base_points: Vec<Vec<i64>> = points.iter().map(|p| core.to_base(p)).collect();
    let d = affine_rank(&points);
    let mut tri = Triangulation { layerings, simplices: vec![], dimension: d, points, base_points };
    if d < 0 {
        return Ok(tri);
    }
    if d == 0 {
        tri.simplices = vec![vec![0]];
        return Ok(tri);
    }
    let size = d as usize + 1;
    let qpoints: Vec<Vec<Rational>> = tri.points.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect();
    let all: Vec<usize> = (0..qpoints.len()).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut seed = None;
    for _ in 0..64 {
        let raw: Vec<u32> = all.iter().map(|_| rng.random_range(1..=997)).collect();
        let point = combination(&qpoints, &all, &weights_from(&raw));
        let combo = net.layering_simplex_decompose(&point)?;
        let found = indices_of(net, &combo.layerings())?;
        if found.len() == size {
            seed = Some(found);
            break;
        }
    }
    let seed = seed.ok_or_else(|| Error::Internal("no generic interior point found".into()))?;

    let mut registry: BTreeSet<Vec<usize>> = BTreeSet::from([seed.clone()]);
    let mut crossed: HashSet<Vec<usize>> = HashSet::new();
    let mut frontier = vec![seed];
    while !frontier.is_empty() {
        let jobs: Vec<(Vec<usize>, usize)> = frontier
            .iter()
            .flat_map(|s| (0..s.len()).map(move |j| (s.clone(), j)))
            .filter(|(s, j)| {
                let mut facet = s.clone();
                facet.remove(*j);
                crossed.insert(facet)
            })
            .collect();
        let found: Vec<Option<Vec<usize>>> = jobs
            .par_iter()
            .map(|(s, j)| pivot(net, &qpoints, s, *j, size))
            .collect::<Result<Vec<_>>>()?;
        frontier = Vec::new();
        for s in found.into_iter().flatten() {
            if registry.insert(s.clone()) {
                frontier.push(s);
            }
        }
    }
    tri.simplices = registry.into_iter().collect();
    Ok(tri)
}

/// The simplex across the facet `simplex \ {simplex[j]}`, or `None` on the boundary.
fn pivot(
    net: &FramedNetwork,
    points: &[Vec<Rational>],
    simplex: &[usize],
    j: usize,
    size: usize,
) -> Result<Option<Vec<usize>>> {
    let mut facet = simplex.to_vec();
    let opposite = facet.remove(j);
    let share = Rational::new(BigInt::one(), BigInt::from(facet.len()));
    let bary = combination(points, &facet, &vec![share; facet.len()]);
    // An interior facet's barycenter is interior to the polytope, where every
    // core edge carries flow.
    if bary.iter().any(Zero::is_zero) {
        return Ok(None);
    }
    let away: Vec<Rational> = bary.iter().zip(&points[opposite]).map(|(b, v)| b - v).collect();
    let mut eps = Rational::new(BigInt::one(), BigInt::from(2 * (size + 1)));
    for _ in 0..64 {
        let sample: Vec<Rational> = bary.iter().zip(&away).map(|(b, a)| b + &eps * a).collect();
        if sample.iter().all(|x| !x.is_negative()) {
            let combo = net.layering_simplex_decompose(&sample)?;
            let found = indices_of(net, &combo.layerings())?;
            if found.len() == size && facet.iter().all(|f| found.contains(f)) && !found.contains(&opposite) {
                return Ok(Some(found));
            }
        }
        eps /= int(2);
    }
    Err(Error::Internal("facet pivot did not settle".into()))
}

/// Maximal simplices sharing a facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualGraph {
    pub nodes: usize,
    pub edges: Vec<(usize, usize)>,
}

impl DualGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in 0..self.nodes {
            out.push_str(&format!("  {v};\n"));
        }
        for (a, b) in &self.edges {
            out.push_str(&format!("  {a} -- {b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

pub fn dual_graph(tri: &Triangulation) -> DualGraph {
    let s = &tri.simplices;
    let mut edges = Vec::new();
    for a in 0..s.len() {
        for b in a + 1..s.len() {
            let shared = s[a].iter().filter(|x| s[b].contains(x)).count();
            if shared + 1 == s[a].len() && s[a].len() == s[b].len() {
                edges.push((a, b));
            }
        }
    }
    DualGraph { nodes: s.len(), edges }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WellOrderedReport {
    pub well_ordered: bool,
    /// Source vertex -> terminal sink vertex, in source order.
    pub phi: Option<Vec<(usize, usize)>>,
    /// Indices of two layerings with different maps.
    pub counterexample: Option<(usize, usize)>,
}

/// Whether every layering sends each source to the same sink.
pub fn is_well_ordered(net: &FramedNetwork) -> WellOrderedReport {
    let ls = net.enumerate_layerings();
    let phi = |l: &Layering| -> Vec<usize> { l.routes().iter().map(|&r| net.route_sink(r)).collect() };
    let Some(first) = ls.first() else {
        return WellOrderedReport { well_ordered: true, phi: Some(vec![]), counterexample: None };
    };
    let reference = phi(first);
    if let Some(k) = ls.iter().position(|l| phi(l) != reference) {
        return WellOrderedReport { well_ordered: false, phi: None, counterexample: Some((0, k)) };
    }
    let map = net.sources().iter().copied().zip(reference).collect();
    WellOrderedReport { well_ordered: true, phi: Some(map), counterexample: None }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NoncrossingReport {
    /// An incompatible pair in the union of the two route sets.
    pub incompatible: Option<(RouteId, RouteId)>,
    /// Source indices `(i, j)` with `L_i < M_i` but `L_j > M_j` in post-order.
    pub crossing: Option<(usize, usize)>,
}

impl NoncrossingReport {
    pub fn noncrossing(&self) -> bool {
        self.incompatible.is_none() && self.crossing.is_none()
    }
}

/// Pairwise test valid for well-ordered networks: compatible route union and
/// componentwise comparable routes.
pub fn noncrossing(net: &FramedNetwork, l: &Layering, m: &Layering) -> Result<NoncrossingReport> {
    if !is_well_ordered(net).well_ordered {
        return Err(Error::NotWellOrdered);
    }
    Ok(noncrossing_unchecked(net, l, m))
}

fn noncrossing_unchecked(net: &FramedNetwork, l: &Layering, m: &Layering) -> NoncrossingReport {
    let union: Vec<RouteId> = l.routes().iter().chain(m.routes()).copied().collect::<BTreeSet<_>>().into_iter().collect();
    let incompatible = net.incompatible_pair(&union);
    let mut below = None;
    let mut above = None;
    for i in 0..l.routes().len() {
        let (a, b) = (net.post_rank(l.route(i)), net.post_rank(m.route(i)));
        if a < b && below.is_none() {
            below = Some(i);
        }
        if a > b && above.is_none() {
            above = Some(i);
        }
    }
    let crossing = below.zip(above);
    NoncrossingReport { incompatible, crossing }
}

/// Maximal sets of pairwise noncrossing layerings, as sorted layering indices.
pub fn maximal_cliques_noncrossing(net: &FramedNetwork) -> Result<Vec<Vec<usize>>> {
    if !is_well_ordered(net).well_ordered {
        return Err(Error::NotWellOrdered);
    }
    let ls = net.enumerate_layerings();
    Ok(maximal_cliques(ls.len(), |a, b| noncrossing_unchecked(net, &ls[a], &ls[b]).noncrossing()))
}

/// Whether the complex is determined by its edges: every set of pairwise
/// co-facial layerings lies in one maximal simplex.
pub fn flag_check(tri: &Triangulation) -> bool {
    let n = tri.layerings.len();
    let mut cofacial = vec![vec![false; n]; n];
    for s in &tri.simplices {
        for &a in s {
            for &b in s {
                cofacial[a][b] = true;
            }
        }
    }
    let sets: Vec<HashSet<usize>> = tri.simplices.iter().map(|s| s.iter().copied().collect()).collect();
    maximal_cliques(n, |a, b| cofacial[a][b])
        .into_iter()
        .all(|c| sets.iter().any(|s| c.iter().all(|x| s.contains(x))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseReport {
    /// The orientation towards the simplex whose own layering is larger is
    /// acyclic and transitively reduced.
    pub orientation_is_hasse: bool,
    /// Some orientation is acyclic and transitively reduced; `None` when the
    /// dual graph is too large to search.
    pub any_orientation: Option<bool>,
}

pub const HASSE_SEARCH_MAX_NODES: usize = 12;
pub const HASSE_SEARCH_MAX_EDGES: usize = 24;

pub fn hasse_check(tri: &Triangulation, dual: &DualGraph) -> HasseReport {
    let arcs: Vec<(usize, usize)> = dual
        .edges
        .iter()
        .map(|&(a, b)| {
            let own_a = tri.simplices[a].iter().find(|x| !tri.simplices[b].contains(x));
            let own_b = tri.simplices[b].iter().find(|x| !tri.simplices[a].contains(x));
            // Layering indices follow the post-source order.
            if own_a < own_b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    let orientation_is_hasse = is_hasse(dual.nodes, &arcs);
    let any_orientation = (dual.nodes <= HASSE_SEARCH_MAX_NODES && dual.edges.len() <= HASSE_SEARCH_MAX_EDGES)
        .then(|| search_orientation(dual.nodes, &dual.edges, &mut Vec::new()));
    HasseReport { orientation_is_hasse, any_orientation }
}

fn reach_without(n: usize, arcs: &[(usize, usize)], from: usize, to: usize, skip: Option<usize>) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![from];
    while let Some(v) = stack.pop() {
        for (k, &(a, b)) in arcs.iter().enumerate() {
            if a == v && Some(k) != skip && !seen[b] {
                if b == to {
                    return true;
                }
                seen[b] = true;
                stack.push(b);
            }
        }
    }
    false
}

/// Acyclic, and no arc is implied by a longer directed path.
fn is_hasse(n: usize, arcs: &[(usize, usize)]) -> bool {
    arcs.iter().enumerate().all(|(k, &(a, b))| !reach_without(n, arcs, b, a, None) && !reach_without(n, arcs, a, b, Some(k)))
}

fn search_orientation(n: usize, edges: &[(usize, usize)], chosen: &mut Vec<(usize, usize)>) -> bool {
    let Some(&(a, b)) = edges.get(chosen.len()) else {
        return is_hasse(n, chosen);
    };
    for arc in [(a, b), (b, a)] {
        // Adding u->v closes a cycle iff v already reaches u.
        if !reach_without(n, chosen, arc.1, arc.0, None) {
            chosen.push(arc);
            if search_orientation(n, edges, chosen) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Vertex differences generate a rank-`d` lattice with all invariant factors 1.
pub fn simplex_is_unimodular(vertices: &[&[i64]], d: usize) -> bool {
    let Some((first, rest)) = vertices.split_first() else {
        return false;
    };
    if rest.len() != d {
        return false;
    }
    let rows: Vec<Vec<BigInt>> =
        rest.iter().map(|v| v.iter().zip(first.iter()).map(|(a, b)| BigInt::from(a - b)).collect()).collect();
    let factors = invariant_factors(rows);
    factors.len() == d && factors.iter().all(One::is_one)
}

/// Checks every maximal simplex in base coordinates.
pub fn unimodularity_check(tri: &Triangulation) -> bool {
    if tri.dimension < 0 {
        return true;
    }
    let d = tri.dimension as usize;
    tri.simplices.iter().all(|s| {
        let vs: Vec<&[i64]> = s.iter().map(|&i| tri.base_points[i].as_slice()).collect();
        simplex_is_unimodular(&vs, d)
    })
}

/// Face counts f_0, ..., f_d of the complex.
pub fn f_vector(tri: &Triangulation) -> Vec<usize> {
    if tri.dimension < 0 {
        return vec![];
    }
    let mut faces: Vec<HashSet<Vec<usize>>> = vec![HashSet::new(); tri.dimension as usize + 1];
    for s in &tri.simplices {
        for mask in 1u64..(1u64 << s.len()) {
            let face: Vec<usize> = (0..s.len()).filter(|k| mask >> k & 1 == 1).map(|k| s[k]).collect();
            faces[face.len() - 1].insert(face);
        }
    }
    faces.iter().map(HashSet::len).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub dimension: isize,
    pub volume: usize,
    pub f_vector: Vec<usize>,
}

/// Normalized volume is the simplex count, since every simplex is unimodular.
pub fn dimension_and_volume(core: &Core) -> Result<Summary> {
    let tri = maximal_simplices(core)?;
    Ok(summarize(&tri))
}

pub fn summarize(tri: &Triangulation) -> Summary {
    Summary { dimension: tri.dimension, volume: tri.volume(), f_vector: f_vector(tri) }
}

/// Map from layering to its index, for callers holding layerings from a
/// decomposition.
pub fn layering_positions(tri: &Triangulation) -> HashMap<Layering, usize> {
    tri.layerings.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect()
}

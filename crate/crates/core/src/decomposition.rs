//! Conservationist framed networks, layerings, and the two exact flow
//! decompositions: into route-cliques and into layering-simplices.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use crate::cliques::maximal_cliques;
use crate::error::{Error, Result};
use crate::framing::{compare_post, incompatibility_witness, Framing};
use crate::graph::{enumerate_routes, Dag, Flow, Netflow, Route};
use crate::linalg::solve;
use crate::matching::saturates_left;
use crate::rational::{int, Rational};

pub type RouteId = usize;

/// One route per source, indexed by source position in the framing's source
/// order. Ordered by the post-source order: compare at the highest source
/// index where the routes differ, by the post-order at that source.
#[derive(Clone, Debug)]
pub struct Layering {
    routes: Vec<RouteId>,
    ranks: Vec<usize>,
}

impl Layering {
    pub fn routes(&self) -> &[RouteId] {
        &self.routes
    }

    /// The route starting at the `i`-th source.
    pub fn route(&self, i: usize) -> RouteId {
        self.routes[i]
    }
}

impl PartialEq for Layering {
    fn eq(&self, other: &Self) -> bool {
        self.routes == other.routes
    }
}

impl Eq for Layering {}

impl Hash for Layering {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.routes.hash(state);
    }
}

impl Ord for Layering {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ranks.iter().rev().cmp(other.ranks.iter().rev())
    }
}

impl PartialOrd for Layering {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Positive combination of pairwise compatible routes, sorted by route id.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RouteCliqueCombination {
    pub terms: Vec<(RouteId, Rational)>,
}

/// Positive combination of layerings in extraction order, which is
/// increasing post-source order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LayeringSimplexCombination {
    pub terms: Vec<(Layering, Rational)>,
}

impl LayeringSimplexCombination {
    pub fn layerings(&self) -> Vec<&Layering> {
        self.terms.iter().map(|(l, _)| l).collect()
    }
}

/// A DAG with conservationist netflow and a complete framing, together with
/// its interned routes and their compatibility relation.
#[derive(Debug)]
pub struct FramedNetwork {
    dag: Dag,
    netflow: Netflow,
    framing: Framing,
    sources: Vec<usize>,
    routes: Vec<Route>,
    route_index: HashMap<Vec<usize>, RouteId>,
    route_source: Vec<usize>,
    route_sink: Vec<usize>,
    by_source: Vec<Vec<RouteId>>,
    post_rank: Vec<usize>,
    compatible: Vec<Vec<bool>>,
    layerings: OnceLock<Vec<Layering>>,
}

impl Clone for FramedNetwork {
    fn clone(&self) -> Self {
        FramedNetwork::new(self.dag.clone(), self.netflow.clone(), self.framing.clone())
            .expect("cloning a validated network")
    }
}

impl FramedNetwork {
    pub fn new(dag: Dag, netflow: Netflow, framing: Framing) -> Result<FramedNetwork> {
        if netflow.values().len() != dag.vertex_count() {
            return Err(Error::NotConservationist("netflow length differs from vertex count".into()));
        }
        let bad = |v: usize| match (dag.is_source(v), dag.is_sink(v)) {
            (true, true) => true,
            (true, false) => netflow.get(v) != 1,
            (false, true) => netflow.get(v) >= 0,
            (false, false) => netflow.get(v) != 0,
        };
        if let Some(v) = (0..dag.vertex_count()).find(|&v| bad(v)) {
            return Err(Error::NotConservationist(format!(
                "vertex `{}` has netflow {}",
                dag.vertex_id(v),
                netflow.get(v)
            )));
        }
        framing.check_conservationist(&dag)?;
        let sources = framing.source_order().to_vec();
        let mut source_index = vec![usize::MAX; dag.vertex_count()];
        for (i, &s) in sources.iter().enumerate() {
            source_index[s] = i;
        }
        let routes = enumerate_routes(&dag);
        let route_index: HashMap<Vec<usize>, RouteId> =
            routes.iter().enumerate().map(|(i, r)| (r.edges().to_vec(), i)).collect();
        let route_source: Vec<usize> = routes.iter().map(|r| source_index[r.source(&dag)]).collect();
        let route_sink: Vec<usize> = routes.iter().map(|r| r.sink(&dag)).collect();
        let mut by_source: Vec<Vec<RouteId>> = vec![Vec::new(); sources.len()];
        for (id, &i) in route_source.iter().enumerate() {
            by_source[i].push(id);
        }
        let mut post_rank = vec![0; routes.len()];
        for (i, list) in by_source.iter_mut().enumerate() {
            let s = sources[i];
            let mut failure = None;
            list.sort_by(|&a, &b| {
                compare_post(&dag, &framing, s, routes[a].edges(), routes[b].edges()).unwrap_or_else(|e| {
                    failure = Some(e);
                    Ordering::Equal
                })
            });
            if let Some(e) = failure {
                return Err(e);
            }
            for (rank, &id) in list.iter().enumerate() {
                post_rank[id] = rank;
            }
        }
        let mut compatible = vec![vec![true; routes.len()]; routes.len()];
        for a in 0..routes.len() {
            for b in a + 1..routes.len() {
                let ok = incompatibility_witness(&dag, &framing, routes[a].edges(), routes[b].edges())?.is_none();
                compatible[a][b] = ok;
                compatible[b][a] = ok;
            }
        }
        Ok(FramedNetwork {
            dag,
            netflow,
            framing,
            sources,
            routes,
            route_index,
            route_source,
            route_sink,
            by_source,
            post_rank,
            compatible,
            layerings: OnceLock::new(),
        })
    }

    pub fn dag(&self) -> &Dag {
        &self.dag
    }

    pub fn netflow(&self) -> &Netflow {
        &self.netflow
    }

    pub fn framing(&self) -> &Framing {
        &self.framing
    }

    /// Source vertices in framing order.
    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    pub fn routes(&self) -> &[Route] {
        &self.routes
    }

    pub fn route(&self, id: RouteId) -> &Route {
        &self.routes[id]
    }

    pub fn route_id(&self, route: &Route) -> Option<RouteId> {
        self.route_index.get(route.edges()).copied()
    }

    pub fn route_id_from_ids<S: AsRef<str>>(&self, ids: &[S]) -> Result<RouteId> {
        let route = Route::from_ids(&self.dag, ids)?;
        self.route_id(&route).ok_or_else(|| Error::InvalidRoute("route not in network".into()))
    }

    pub fn route_label(&self, id: RouteId) -> String {
        self.routes[id].label(&self.dag)
    }

    /// Index of the route's source in the source order.
    pub fn route_source(&self, id: RouteId) -> usize {
        self.route_source[id]
    }

    pub fn route_sink(&self, id: RouteId) -> usize {
        self.route_sink[id]
    }

    /// Routes from the `i`-th source in increasing post-order.
    pub fn routes_from(&self, i: usize) -> &[RouteId] {
        &self.by_source[i]
    }

    /// Rank of a route in the post-order at its source.
    pub fn post_rank(&self, id: RouteId) -> usize {
        self.post_rank[id]
    }

    pub fn compatible(&self, a: RouteId, b: RouteId) -> bool {
        self.compatible[a][b]
    }

    pub fn is_clique(&self, routes: &[RouteId]) -> bool {
        routes.iter().enumerate().all(|(i, &a)| routes[i + 1..].iter().all(|&b| self.compatible[a][b]))
    }

    /// Some incompatible pair among `routes`.
    pub fn incompatible_pair(&self, routes: &[RouteId]) -> Option<(RouteId, RouteId)> {
        for (i, &a) in routes.iter().enumerate() {
            for &b in &routes[i + 1..] {
                if !self.compatible[a][b] {
                    return Some((a, b));
                }
            }
        }
        None
    }

    fn sink_demand(&self) -> Vec<usize> {
        (0..self.dag.vertex_count())
            .map(|v| if self.dag.is_sink(v) { (-self.netflow.get(v)).max(0) as usize } else { 0 })
            .collect()
    }

    /// Builds a layering from one route per source, in source order, checking
    /// sink multiplicities and compatibility.
    pub fn layering(&self, routes: Vec<RouteId>) -> Result<Layering> {
        if routes.len() != self.sources.len() {
            return Err(Error::InvalidRoute(format!("expected {} routes", self.sources.len())));
        }
        let mut demand = self.sink_demand();
        for (i, &r) in routes.iter().enumerate() {
            if r >= self.routes.len() || self.route_source[r] != i {
                return Err(Error::InvalidRoute(format!("route {i} does not start at source {i}")));
            }
            let t = self.route_sink[r];
            if demand[t] == 0 {
                return Err(Error::InvalidRoute(format!("too many routes end at `{}`", self.dag.vertex_id(t))));
            }
            demand[t] -= 1;
        }
        if let Some((a, b)) = self.incompatible_pair(&routes) {
            return Err(Error::InvalidRoute(format!(
                "`{}` and `{}` are incompatible",
                self.route_label(a),
                self.route_label(b)
            )));
        }
        Ok(self.layering_unchecked(routes))
    }

    fn layering_unchecked(&self, routes: Vec<RouteId>) -> Layering {
        let ranks = routes.iter().map(|&r| self.post_rank[r]).collect();
        Layering { routes, ranks }
    }

    /// Layering from route edge-id lists, one per source in source order.
    pub fn layering_from_ids<S: AsRef<str>>(&self, routes: &[Vec<S>]) -> Result<Layering> {
        let mut ids = routes.iter().map(|r| self.route_id_from_ids(r)).collect::<Result<Vec<_>>>()?;
        // Accept any listing order; place each route at its source's slot.
        ids.sort_by_key(|&r| self.route_source[r]);
        self.layering(ids)
    }

    pub fn layering_indicator(&self, layering: &Layering) -> Vec<i64> {
        let mut out = vec![0; self.dag.edge_count()];
        for &r in &layering.routes {
            for &e in self.routes[r].edges() {
                out[e] += 1;
            }
        }
        out
    }

    pub fn layering_labels(&self, layering: &Layering) -> Vec<String> {
        layering.routes.iter().map(|&r| self.route_label(r)).collect()
    }

    /// All layerings, sorted by the post-source order. Cached.
    pub fn enumerate_layerings(&self) -> &[Layering] {
        self.layerings.get_or_init(|| {
            let mut out = Vec::new();
            let mut demand = self.sink_demand();
            let mut chosen = Vec::with_capacity(self.sources.len());
            self.extend_layerings(&mut chosen, &mut demand, &mut out);
            out.sort();
            out
        })
    }

    fn extend_layerings(&self, chosen: &mut Vec<RouteId>, demand: &mut [usize], out: &mut Vec<Layering>) {
        let i = chosen.len();
        if i == self.sources.len() {
            if demand.iter().all(|&d| d == 0) {
                out.push(self.layering_unchecked(chosen.clone()));
            }
            return;
        }
        for &r in &self.by_source[i] {
            let t = self.route_sink[r];
            if demand[t] == 0 || !chosen.iter().all(|&c| self.compatible[c][r]) {
                continue;
            }
            demand[t] -= 1;
            chosen.push(r);
            self.extend_layerings(chosen, demand, out);
            chosen.pop();
            demand[t] += 1;
        }
    }

    /// Position of `layering` in [`Self::enumerate_layerings`].
    pub fn layering_index(&self, layering: &Layering) -> Option<usize> {
        let all = self.enumerate_layerings();
        all.binary_search(layering).ok().filter(|&i| all[i] == *layering)
    }

    fn check_flow(&self, values: &[Rational]) -> Result<Flow> {
        Flow::new(&self.dag, &self.netflow, values.to_vec())
    }

    /// The unique positive route-clique combination of a flow.
    ///
    /// Each source's outflow is laid out as an interval and pushed through the
    /// graph: at every vertex the incoming edges are stacked in in-order and
    /// the outgoing edges in out-order, both over the same interval. Routes
    /// traced this way never cross, so the result is a clique; it is verified
    /// anyway, with [`Self::route_clique_decompose_by_cliques`] as fallback.
    pub fn route_clique_decompose(&self, values: &[Rational]) -> Result<RouteCliqueCombination> {
        let flow = self.check_flow(values)?;
        let stacked = self.stack_routes(flow.values());
        if self.is_clique(&stacked.terms.iter().map(|(r, _)| *r).collect::<Vec<_>>())
            && self.reconstructs(&stacked, flow.values())
        {
            return Ok(stacked);
        }
        let certified = self.route_clique_decompose_by_cliques(values)?;
        if self.reconstructs(&certified, flow.values()) {
            Ok(certified)
        } else {
            Err(Error::Internal("route-clique decomposition failed verification".into()))
        }
    }

    fn reconstructs(&self, combo: &RouteCliqueCombination, values: &[Rational]) -> bool {
        let mut sum = vec![Rational::zero(); self.dag.edge_count()];
        for (r, a) in &combo.terms {
            if !a.is_positive() {
                return false;
            }
            for &e in self.routes[*r].edges() {
                sum[e] += a;
            }
        }
        sum == values
    }

    fn stack_routes(&self, values: &[Rational]) -> RouteCliqueCombination {
        let dag = &self.dag;
        let mut out_start = vec![Rational::zero(); dag.edge_count()];
        let mut in_start = vec![Rational::zero(); dag.edge_count()];
        for v in 0..dag.vertex_count() {
            let mut acc = Rational::zero();
            for &e in self.framing.out_order(v).unwrap_or(&[]) {
                out_start[e] = acc.clone();
                acc += &values[e];
            }
            let mut acc = Rational::zero();
            for &e in self.framing.in_order(v).unwrap_or(&[]) {
                in_start[e] = acc.clone();
                acc += &values[e];
            }
        }
        struct Ctx<'a> {
            net: &'a FramedNetwork,
            values: &'a [Rational],
            out_start: Vec<Rational>,
            in_start: Vec<Rational>,
            found: BTreeMap<RouteId, Rational>,
        }
        fn trace(ctx: &mut Ctx, v: usize, lo: Rational, hi: Rational, path: &mut Vec<usize>) {
            let order = ctx.net.framing.out_order(v).unwrap_or(&[]).to_vec();
            for e in order {
                if ctx.values[e].is_zero() {
                    continue;
                }
                let a = ctx.out_start[e].clone();
                let b = &a + &ctx.values[e];
                let l = if lo > a { lo.clone() } else { a.clone() };
                let h = if hi < b { hi.clone() } else { b };
                if l >= h {
                    continue;
                }
                path.push(e);
                let w = ctx.net.dag.edge(e).head;
                if ctx.net.dag.is_sink(w) {
                    let id = ctx.net.route_index[&path[..]];
                    *ctx.found.entry(id).or_insert_with(Rational::zero) += &h - &l;
                } else {
                    let shift = &ctx.in_start[e] - &a;
                    trace(ctx, w, &l + &shift, &h + &shift, path);
                }
                path.pop();
            }
        }
        let mut ctx = Ctx { net: self, values, out_start, in_start, found: BTreeMap::new() };
        for &s in &self.sources {
            let total: Rational = self.dag.out_edges(s).iter().map(|&e| values[e].clone()).sum();
            trace(&mut ctx, s, Rational::zero(), total, &mut Vec::new());
        }
        RouteCliqueCombination { terms: ctx.found.into_iter().collect() }
    }

    /// Certified decomposition: among the maximal cliques of routes supported
    /// by the flow, find the one whose indicators express the flow with
    /// nonnegative coefficients.
    pub fn route_clique_decompose_by_cliques(&self, values: &[Rational]) -> Result<RouteCliqueCombination> {
        self.check_flow(values)?;
        if values.iter().all(Zero::is_zero) {
            return Ok(RouteCliqueCombination::default());
        }
        let support: Vec<RouteId> = (0..self.routes.len())
            .filter(|&r| self.routes[r].edges().iter().all(|&e| values[e].is_positive()))
            .collect();
        let cliques = maximal_cliques(support.len(), |a, b| self.compatible[support[a]][support[b]]);
        for clique in cliques {
            let ids: Vec<RouteId> = clique.iter().map(|&i| support[i]).collect();
            let columns: Vec<Vec<Rational>> = ids
                .iter()
                .map(|&r| {
                    let mut col = vec![Rational::zero(); self.dag.edge_count()];
                    for &e in self.routes[r].edges() {
                        col[e] = int(1);
                    }
                    col
                })
                .collect();
            if let Some(coef) = solve(&columns, values) {
                if coef.iter().all(|a| !a.is_negative()) {
                    let terms = ids.into_iter().zip(coef).filter(|(_, a)| a.is_positive()).collect();
                    return Ok(RouteCliqueCombination { terms });
                }
            }
        }
        Err(Error::Internal("no route-clique expresses the flow".into()))
    }

    /// Inverse of [`Self::layering_indicator`] on integer a-flows.
    pub fn layering_from_integer_flow(&self, values: &[Rational]) -> Result<Layering> {
        let flow = self.check_flow(values)?;
        if let Some(e) = flow.values().iter().position(|x| !x.is_integer()) {
            return Err(Error::NotIntegral(self.dag.edge_id(e).to_string()));
        }
        if *flow.scale() != int(1) {
            return Err(Error::NotAFlow("expected an a-flow of scale 1".into()));
        }
        let combo = self.route_clique_decompose(values)?;
        let mut routes = vec![usize::MAX; self.sources.len()];
        for (r, a) in combo.terms {
            if a != int(1) || routes[self.route_source[r]] != usize::MAX {
                return Err(Error::Internal("integer flow did not expand to a layering".into()));
            }
            routes[self.route_source[r]] = r;
        }
        self.layering(routes)
    }

    /// The post-source-minimal layering using only `available` routes, built
    /// greedily from the last source down. A candidate route is kept only if
    /// the remaining sources can still be matched to the remaining sink slots.
    /// Assumes `available` is a route-clique; see [`Self::min_layering_within`].
    pub fn min_layering(&self, available: &[RouteId]) -> Result<Layering> {
        let avail: HashSet<RouteId> = available.iter().copied().collect();
        let by_source: Vec<Vec<RouteId>> =
            self.by_source.iter().map(|list| list.iter().copied().filter(|r| avail.contains(r)).collect()).collect();
        let mut demand = self.sink_demand();
        let mut chosen = vec![usize::MAX; self.sources.len()];
        for i in (0..self.sources.len()).rev() {
            let mut picked = None;
            for &r in &by_source[i] {
                let t = self.route_sink[r];
                if demand[t] == 0 {
                    continue;
                }
                demand[t] -= 1;
                if self.matchable(i, &demand, &by_source) {
                    picked = Some(r);
                    break;
                }
                demand[t] += 1;
            }
            chosen[i] = picked.ok_or(Error::NoLayering)?;
        }
        Ok(self.layering_unchecked(chosen))
    }

    /// Can sources `0..upto` be sent to sinks with `demand` slots exactly?
    fn matchable(&self, upto: usize, demand: &[usize], by_source: &[Vec<RouteId>]) -> bool {
        if demand.iter().sum::<usize>() != upto {
            return false;
        }
        let adj: Vec<Vec<usize>> = (0..upto)
            .map(|i| {
                let mut sinks: Vec<usize> = by_source[i].iter().map(|&r| self.route_sink[r]).collect();
                sinks.sort_unstable();
                sinks.dedup();
                sinks
            })
            .collect();
        saturates_left(&adj, demand)
    }

    /// Post-source-minimal layering whose routes all lie in `available`, with
    /// no assumption on `available`.
    pub fn min_layering_within(&self, available: &[RouteId]) -> Option<Layering> {
        if self.is_clique(available) {
            return self.min_layering(available).ok();
        }
        let avail: HashSet<RouteId> = available.iter().copied().collect();
        self.enumerate_layerings().iter().find(|l| l.routes.iter().all(|r| avail.contains(r))).cloned()
    }

    /// The unique positive layering-simplex combination of a flow: decompose
    /// into routes, then repeatedly peel off the minimal layering on the
    /// remaining routes with the smallest of its route coefficients.
    pub fn layering_simplex_decompose(&self, values: &[Rational]) -> Result<LayeringSimplexCombination> {
        let flow = self.check_flow(values)?;
        let routes = self.route_clique_decompose(values)?;
        let mut residual: BTreeMap<RouteId, Rational> = routes.terms.into_iter().collect();
        let mut terms = Vec::new();
        while !residual.is_empty() {
            let available: Vec<RouteId> = residual.keys().copied().collect();
            let layering = self.min_layering(&available)?;
            let a = layering.routes.iter().map(|r| residual[r].clone()).min().unwrap();
            for r in &layering.routes {
                let left = &residual[r] - &a;
                if left.is_zero() {
                    residual.remove(r);
                } else {
                    residual.insert(*r, left);
                }
            }
            terms.push((layering, a));
            if terms.len() > self.routes.len() + 1 {
                return Err(Error::Internal("peeling did not shrink the route support".into()));
            }
        }
        let combo = LayeringSimplexCombination { terms };
        let mut sum = vec![Rational::zero(); self.dag.edge_count()];
        let mut total = Rational::zero();
        for (l, a) in &combo.terms {
            total += a;
            for (e, x) in self.layering_indicator(l).into_iter().enumerate() {
                if x != 0 {
                    sum[e] += a * int(x);
                }
            }
        }
        if sum != flow.values() || total != *flow.scale() {
            return Err(Error::Internal("layering-simplex combination does not reconstruct the flow".into()));
        }
        Ok(combo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn cons() -> FramedNetwork {
        let dag = Dag::new(
            &["v1", "v2", "v3", "v4"],
            &[("α1", "v1", "v3"), ("β1", "v2", "v3"), ("γ", "v2", "v4"), ("α2", "v3", "v4"), ("β2", "v3", "v4")],
        )
        .unwrap();
        let framing = Framing::declaration_order(&dag, vec![0, 1]).unwrap();
        FramedNetwork::new(dag, Netflow(vec![1, 1, 0, -2]), framing).unwrap()
    }

    fn q(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn labels(net: &FramedNetwork, l: &Layering) -> Vec<String> {
        net.layering_labels(l)
    }

    #[test]
    fn rejects_non_conservationist() {
        let dag = Dag::new(&["s", "t"], &[("e", "s", "t")]).unwrap();
        let framing = Framing::declaration_order(&dag, vec![0]).unwrap();
        assert!(matches!(
            FramedNetwork::new(dag, Netflow(vec![2, -2]), framing),
            Err(Error::NotConservationist(_))
        ));
    }

    #[test]
    fn cons_layerings_sorted() {
        let net = cons();
        let all: Vec<Vec<String>> = net.enumerate_layerings().iter().map(|l| labels(&net, l)).collect();
        assert_eq!(
            all,
            vec![
                vec!["α1α2", "β1α2"],
                vec!["α1α2", "β1β2"],
                vec!["α1β2", "β1β2"],
                vec!["α1α2", "γ"],
                vec!["α1β2", "γ"],
            ]
        );
    }

    #[test]
    fn route_clique_examples() {
        let net = cons();
        let combo = net.route_clique_decompose(&q(&[1, 1, 0, 2, 0])).unwrap();
        let got: Vec<(String, Rational)> = combo.terms.iter().map(|(r, a)| (net.route_label(*r), a.clone())).collect();
        assert_eq!(got, vec![("α1α2".to_string(), int(1)), ("β1α2".to_string(), int(1))]);
        let combo = net.route_clique_decompose(&q(&[1, 1, 0, 1, 1])).unwrap();
        let got: Vec<String> = combo.terms.iter().map(|(r, _)| net.route_label(*r)).collect();
        assert_eq!(got, ["α1α2", "β1β2"]);
        assert!(net.route_clique_decompose(&q(&[0; 5])).unwrap().terms.is_empty());
        assert!(matches!(net.route_clique_decompose(&q(&[1, 0, 0, 0, 0])), Err(Error::NotAFlow(_))));
    }

    #[test]
    fn fallback_agrees_with_stacking() {
        let net = cons();
        let f = vec![int(1), ratio(1, 3), ratio(2, 3), ratio(5, 6), ratio(1, 2)];
        assert_eq!(net.route_clique_decompose(&f).unwrap(), net.route_clique_decompose_by_cliques(&f).unwrap());
    }

    #[test]
    fn min_layering_examples() {
        let net = cons();
        let all: Vec<RouteId> = (0..5).collect();
        assert_eq!(labels(&net, &net.min_layering_within(&all).unwrap()), ["α1α2", "β1α2"]);
        let avail = vec![net.route_id_from_ids(&["α1", "α2"]).unwrap(), net.route_id_from_ids(&["γ"]).unwrap()];
        assert_eq!(labels(&net, &net.min_layering(&avail).unwrap()), ["α1α2", "γ"]);
        assert_eq!(net.min_layering(&avail[..1]), Err(Error::NoLayering));
    }

    #[test]
    fn layering_round_trip() {
        let net = cons();
        for l in net.enumerate_layerings() {
            let f = q(&net.layering_indicator(l));
            assert_eq!(&net.layering_from_integer_flow(&f).unwrap(), l);
        }
        let half = vec![ratio(1, 2), ratio(1, 2), int(0), ratio(1, 2), ratio(1, 2)];
        assert!(net.layering_from_integer_flow(&half).is_err());
        assert!(net.layering_from_integer_flow(&q(&[2, 2, 0, 2, 2])).is_err());
    }

    #[test]
    fn simplex_decomposition_examples() {
        let net = cons();
        let ls = net.enumerate_layerings().to_vec();
        let single = net.layering_simplex_decompose(&q(&net.layering_indicator(&ls[4]))).unwrap();
        assert_eq!(single.terms, vec![(ls[4].clone(), int(1))]);
        let point: Vec<Rational> = (0..5)
            .map(|e| ratio(net.layering_indicator(&ls[0])[e] + net.layering_indicator(&ls[3])[e], 2))
            .collect();
        let combo = net.layering_simplex_decompose(&point).unwrap();
        assert_eq!(combo.terms, vec![(ls[0].clone(), ratio(1, 2)), (ls[3].clone(), ratio(1, 2))]);
        assert!(net.layering_simplex_decompose(&q(&[0; 5])).unwrap().terms.is_empty());
    }
}

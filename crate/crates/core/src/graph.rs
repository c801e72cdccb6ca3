//! DAGs with integer netflow, exact flows and routes.

use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::maxflow::MaxFlow;
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

/// Directed acyclic multigraph. Vertex and edge indices follow declaration order.
#[derive(Clone, Debug)]
pub struct Dag {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
    in_edges: Vec<Vec<usize>>,
    out_edges: Vec<Vec<usize>>,
    topo: Vec<usize>,
}

impl Dag {
    /// Builds a DAG from `(id, tail, head)` triples.
    pub fn new<V: AsRef<str>, E: AsRef<str>>(vertices: &[V], edges: &[(E, E, E)]) -> Result<Dag> {
        let mut vertex_index = HashMap::new();
        let mut names = Vec::with_capacity(vertices.len());
        for v in vertices {
            let v = v.as_ref();
            if vertex_index.insert(v.to_string(), names.len()).is_some() {
                return Err(Error::DuplicateVertex(v.to_string()));
            }
            names.push(v.to_string());
        }
        let mut edge_index = HashMap::new();
        let mut list = Vec::with_capacity(edges.len());
        let mut in_edges = vec![Vec::new(); names.len()];
        let mut out_edges = vec![Vec::new(); names.len()];
        for (id, tail, head) in edges {
            let (id, tail, head) = (id.as_ref(), tail.as_ref(), head.as_ref());
            if edge_index.insert(id.to_string(), list.len()).is_some() {
                return Err(Error::DuplicateEdge(id.to_string()));
            }
            let t = *vertex_index.get(tail).ok_or_else(|| Error::UnknownVertex(tail.to_string()))?;
            let h = *vertex_index.get(head).ok_or_else(|| Error::UnknownVertex(head.to_string()))?;
            out_edges[t].push(list.len());
            in_edges[h].push(list.len());
            list.push(Edge { id: id.to_string(), tail: t, head: h });
        }
        let topo = match topological_order(names.len(), &list, &in_edges, &out_edges) {
            Ok(order) => order,
            Err(cycle) => return Err(Error::Cycle(cycle.into_iter().map(|v| names[v].clone()).collect())),
        };
        Ok(Dag { vertices: names, edges: list, vertex_index, edge_index, in_edges, out_edges, topo })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_ids(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_id(&self, e: usize) -> &str {
        &self.edges[e].id
    }

    pub fn vertex(&self, id: &str) -> Result<usize> {
        self.vertex_index.get(id).copied().ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn edge_by_id(&self, id: &str) -> Result<usize> {
        self.edge_index.get(id).copied().ok_or_else(|| Error::UnknownEdge(id.to_string()))
    }

    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.in_edges[v].is_empty()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out_edges[v].is_empty()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.is_source(v)).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.is_sink(v)).collect()
    }

    /// Topological order, ties broken by declaration order.
    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    /// Subgraph on the given edges, keeping only incident vertices. Both index
    /// maps point from the subgraph back into `self`.
    pub fn edge_subgraph(&self, keep: &[usize]) -> (Dag, Vec<usize>, Vec<usize>) {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut used = vec![false; self.vertex_count()];
        for &e in &keep {
            used[self.edges[e].tail] = true;
            used[self.edges[e].head] = true;
        }
        let vertex_map: Vec<usize> = (0..self.vertex_count()).filter(|&v| used[v]).collect();
        let names: Vec<&str> = vertex_map.iter().map(|&v| self.vertices[v].as_str()).collect();
        let triples: Vec<(&str, &str, &str)> = keep
            .iter()
            .map(|&e| {
                let edge = &self.edges[e];
                (edge.id.as_str(), self.vertices[edge.tail].as_str(), self.vertices[edge.head].as_str())
            })
            .collect();
        let sub = Dag::new(&names, &triples).expect("subgraph of a DAG is a DAG");
        (sub, vertex_map, keep)
    }
}

/// Kahn's algorithm; on failure returns one directed cycle as a vertex list.
fn topological_order(
    n: usize,
    edges: &[Edge],
    in_edges: &[Vec<usize>],
    out_edges: &[Vec<usize>],
) -> std::result::Result<Vec<usize>, Vec<usize>> {
    let mut indeg: Vec<usize> = in_edges.iter().map(Vec::len).collect();
    let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for &e in &out_edges[v] {
            let h = edges[e].head;
            indeg[h] -= 1;
            if indeg[h] == 0 {
                ready.insert(h);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    // Every leftover vertex has a leftover predecessor; walk backwards until a repeat.
    let mut v = (0..n).find(|&v| indeg[v] > 0).unwrap();
    let mut seen = HashMap::new();
    let mut walk = Vec::new();
    while !seen.contains_key(&v) {
        seen.insert(v, walk.len());
        walk.push(v);
        let e = in_edges[v].iter().find(|&&e| indeg[edges[e].tail] > 0).copied().unwrap();
        v = edges[e].tail;
    }
    let mut cycle = walk[seen[&v]..].to_vec();
    cycle.reverse();
    Err(cycle)
}

/// Integer netflow indexed by vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Netflow(pub Vec<i64>);

impl Netflow {
    pub fn get(&self, v: usize) -> i64 {
        self.0[v]
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn scaled(&self, t: i64) -> Netflow {
        Netflow(self.0.iter().map(|a| a * t).collect())
    }

    pub fn restrict(&self, vertex_map: &[usize]) -> Netflow {
        Netflow(vertex_map.iter().map(|&v| self.0[v]).collect())
    }

    /// 1 on sources, negative on sinks, 0 elsewhere.
    pub fn is_conservationist(&self, dag: &Dag) -> bool {
        (0..dag.vertex_count()).all(|v| match (dag.is_source(v), dag.is_sink(v)) {
            (true, true) => false,
            (true, false) => self.0[v] == 1,
            (false, true) => self.0[v] < 0,
            (false, false) => self.0[v] == 0,
        })
    }
}

/// Sum of the positive entries.
pub fn strength(netflow: &Netflow) -> i64 {
    netflow.0.iter().filter(|&&a| a > 0).sum()
}

/// Nonnegative exact flow; `scale` is the x of an x·a-flow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flow {
    values: Vec<Rational>,
    scale: Rational,
}

impl Flow {
    /// Derives the scale and checks conservation against it.
    pub fn new(dag: &Dag, netflow: &Netflow, values: Vec<Rational>) -> Result<Flow> {
        if values.len() != dag.edge_count() {
            return Err(Error::NotAFlow(format!(
                "expected {} edge values, got {}",
                dag.edge_count(),
                values.len()
            )));
        }
        let excess = excess(dag, &values);
        let scale = match (0..dag.vertex_count()).find(|&v| netflow.get(v) != 0) {
            Some(v) => &excess[v] / int(netflow.get(v)),
            None => Rational::zero(),
        };
        if scale.is_negative() {
            return Err(Error::NotAFlow("negative scale".into()));
        }
        if let Some(e) = values.iter().position(Signed::is_negative) {
            return Err(Error::NotAFlow(format!("negative value on edge `{}`", dag.edge_id(e))));
        }
        if let Some(v) = (0..dag.vertex_count()).find(|&v| excess[v] != &scale * int(netflow.get(v))) {
            return Err(Error::NotAFlow(format!("conservation fails at vertex `{}`", dag.vertex_id(v))));
        }
        Ok(Flow { values, scale })
    }

    pub fn from_integers(dag: &Dag, netflow: &Netflow, values: &[i64]) -> Result<Flow> {
        Flow::new(dag, netflow, values.iter().map(|&x| int(x)).collect())
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(Rational::is_integer)
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }
}

fn excess(dag: &Dag, values: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dag.vertex_count()];
    for (e, x) in values.iter().enumerate() {
        let edge = dag.edge(e);
        out[edge.tail] += x;
        out[edge.head] -= x;
    }
    out
}

/// Nonnegativity plus `out - in = scale * a` at every vertex.
pub fn is_flow(dag: &Dag, netflow: &Netflow, candidate: &[Rational], scale: &Rational) -> bool {
    candidate.len() == dag.edge_count()
        && candidate.iter().all(|x| !x.is_negative())
        && excess(dag, candidate)
            .iter()
            .enumerate()
            .all(|(v, x)| *x == scale * int(netflow.get(v)))
}

/// Source-to-sink path stored as edge indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Route(Vec<usize>);

impl Route {
    pub fn new(dag: &Dag, edges: Vec<usize>) -> Result<Route> {
        check_path(dag, &edges)?;
        let first = dag.edge(edges[0]).tail;
        let last = dag.edge(*edges.last().unwrap()).head;
        if !dag.is_source(first) {
            return Err(Error::InvalidRoute(format!("`{}` is not a source", dag.vertex_id(first))));
        }
        if !dag.is_sink(last) {
            return Err(Error::InvalidRoute(format!("`{}` is not a sink", dag.vertex_id(last))));
        }
        Ok(Route(edges))
    }

    pub fn from_ids<S: AsRef<str>>(dag: &Dag, ids: &[S]) -> Result<Route> {
        let edges = ids.iter().map(|id| dag.edge_by_id(id.as_ref())).collect::<Result<Vec<_>>>()?;
        Route::new(dag, edges)
    }

    pub fn edges(&self) -> &[usize] {
        &self.0
    }

    pub fn source(&self, dag: &Dag) -> usize {
        dag.edge(self.0[0]).tail
    }

    pub fn sink(&self, dag: &Dag) -> usize {
        dag.edge(*self.0.last().unwrap()).head
    }

    /// Visited vertices in order, both endpoints included.
    pub fn vertices(&self, dag: &Dag) -> Vec<usize> {
        path_vertices(dag, &self.0)
    }

    pub fn ids(&self, dag: &Dag) -> Vec<String> {
        self.0.iter().map(|&e| dag.edge_id(e).to_string()).collect()
    }

    /// Edge ids concatenated, the notation used for routes in examples.
    pub fn label(&self, dag: &Dag) -> String {
        self.0.iter().map(|&e| dag.edge_id(e)).collect()
    }
}

/// Nonempty, chained head to tail.
pub fn check_path(dag: &Dag, edges: &[usize]) -> Result<()> {
    if edges.is_empty() {
        return Err(Error::InvalidRoute("empty path".into()));
    }
    if let Some(&e) = edges.iter().find(|&&e| e >= dag.edge_count()) {
        return Err(Error::InvalidRoute(format!("edge index {e} out of range")));
    }
    for w in edges.windows(2) {
        if dag.edge(w[0]).head != dag.edge(w[1]).tail {
            return Err(Error::InvalidRoute(format!(
                "`{}` does not continue `{}`",
                dag.edge_id(w[1]),
                dag.edge_id(w[0])
            )));
        }
    }
    Ok(())
}

pub fn path_vertices(dag: &Dag, edges: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(edges.len() + 1);
    if let Some(&first) = edges.first() {
        out.push(dag.edge(first).tail);
    }
    out.extend(edges.iter().map(|&e| dag.edge(e).head));
    out
}

/// Every source-to-sink route, sorted lexicographically by edge index.
pub fn enumerate_routes(dag: &Dag) -> Vec<Route> {
    fn walk(dag: &Dag, v: usize, path: &mut Vec<usize>, out: &mut Vec<Route>) {
        if dag.is_sink(v) {
            out.push(Route(path.clone()));
            return;
        }
        for &e in dag.out_edges(v) {
            path.push(e);
            walk(dag, dag.edge(e).head, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    for s in dag.sources() {
        if dag.is_sink(s) {
            continue;
        }
        walk(dag, s, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

pub fn indicator(dag: &Dag, route: &Route) -> Vec<i64> {
    let mut out = vec![0; dag.edge_count()];
    for &e in route.edges() {
        out[e] += 1;
    }
    out
}

/// Integrity findings for raw input, before a [`Dag`] can be built.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub acyclic: bool,
    pub cycle: Option<Vec<String>>,
    pub duplicate_vertices: Vec<String>,
    pub duplicate_edges: Vec<String>,
    pub dangling_edges: Vec<String>,
    pub unknown_netflow_vertices: Vec<String>,
    pub netflow_sum: i64,
    pub flow_exists: bool,
    pub messages: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawEdge {
    pub id: String,
    pub tail: String,
    pub head: String,
}

/// Reports every integrity problem at once instead of stopping at the first.
pub fn validate(vertices: &[String], edges: &[RawEdge], netflow: &[(String, i64)]) -> ValidationReport {
    let mut report = ValidationReport::default();
    let mut seen = HashSet::new();
    for v in vertices {
        if !seen.insert(v.as_str()) && !report.duplicate_vertices.contains(v) {
            report.duplicate_vertices.push(v.clone());
        }
    }
    let mut seen_edges = HashSet::new();
    for e in edges {
        if !seen_edges.insert(e.id.as_str()) && !report.duplicate_edges.contains(&e.id) {
            report.duplicate_edges.push(e.id.clone());
        }
        if !seen.contains(e.tail.as_str()) || !seen.contains(e.head.as_str()) {
            report.dangling_edges.push(e.id.clone());
        }
    }
    for (v, _) in netflow {
        if !seen.contains(v.as_str()) {
            report.unknown_netflow_vertices.push(v.clone());
        }
    }
    report.netflow_sum = netflow.iter().map(|(_, a)| a).sum();
    if report.netflow_sum != 0 {
        report.messages.push("netflow does not sum to 0: no flow can exist".into());
    }
    let integrity = report.duplicate_vertices.is_empty()
        && report.duplicate_edges.is_empty()
        && report.dangling_edges.is_empty()
        && report.unknown_netflow_vertices.is_empty();
    if !integrity {
        report.messages.push("identifier integrity violated".into());
        // Acyclicity is still meaningful on the well-formed edges.
        let verts: Vec<&str> = seen.iter().copied().collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        let mut ids = HashSet::new();
        let triples: Vec<(&str, &str, &str)> = edges
            .iter()
            .filter(|e| seen.contains(e.tail.as_str()) && seen.contains(e.head.as_str()) && ids.insert(e.id.as_str()))
            .map(|e| (e.id.as_str(), e.tail.as_str(), e.head.as_str()))
            .collect();
        match Dag::new(&verts, &triples) {
            Err(Error::Cycle(c)) => {
                report.messages.push(format!("directed cycle through {c:?}"));
                report.cycle = Some(c);
            }
            _ => report.acyclic = true,
        }
        return report;
    }
    let triples: Vec<(&str, &str, &str)> =
        edges.iter().map(|e| (e.id.as_str(), e.tail.as_str(), e.head.as_str())).collect();
    let dag = match Dag::new(vertices, &triples) {
        Ok(dag) => dag,
        Err(Error::Cycle(c)) => {
            report.messages.push(format!("directed cycle through {c:?}"));
            report.cycle = Some(c);
            return report;
        }
        Err(e) => {
            report.messages.push(e.to_string());
            return report;
        }
    };
    report.acyclic = true;
    report.valid = true;
    let mut values = vec![0; dag.vertex_count()];
    for (v, a) in netflow {
        values[dag.vertex(v).unwrap()] += a;
    }
    let netflow = Netflow(values);
    report.flow_exists = feasible_flow(&dag, &netflow).is_some();
    if report.netflow_sum == 0 && !report.flow_exists {
        report.messages.push("netflow sums to 0 but no flow exists".into());
    }
    report
}

/// Some integer a-flow, if any exists.
pub fn feasible_flow(dag: &Dag, netflow: &Netflow) -> Option<Vec<i64>> {
    if netflow.sum() != 0 {
        return None;
    }
    let n = dag.vertex_count();
    let s = strength(netflow);
    let (src, snk) = (n, n + 1);
    let mut net = MaxFlow::new(n + 2);
    let arcs: Vec<_> = dag.edges().iter().map(|e| net.add_arc(e.tail, e.head, s)).collect();
    for v in 0..n {
        let a = netflow.get(v);
        if a > 0 {
            net.add_arc(src, v, a);
        } else if a < 0 {
            net.add_arc(v, snk, -a);
        }
    }
    (net.run(src, snk) == s).then(|| arcs.iter().map(|&a| net.flow_on(a)).collect())
}

/// Flow-supporting subgraph with its maps back into the input graph.
#[derive(Clone, Debug)]
pub struct FlowSupport {
    pub dag: Dag,
    pub netflow: Netflow,
    /// Subgraph vertex -> input vertex.
    pub vertex_map: Vec<usize>,
    /// Subgraph edge -> input edge.
    pub edge_map: Vec<usize>,
    /// No a-flow exists at all.
    pub empty: bool,
}

impl FlowSupport {
    /// Zero-pads a subgraph edge vector back to the input edges.
    pub fn embed<T: Clone + Zero>(&self, values: &[T], ambient_edges: usize) -> Vec<T> {
        let mut out = vec![T::zero(); ambient_edges];
        for (i, &e) in self.edge_map.iter().enumerate() {
            out[e] = values[i].clone();
        }
        out
    }
}

/// Edges carrying positive value in some a-flow. An edge qualifies iff a
/// feasible flow already uses it or its endpoints close a cycle in the
/// residual graph of that flow.
pub fn flow_supporting_subgraph(dag: &Dag, netflow: &Netflow) -> FlowSupport {
    let Some(base) = feasible_flow(dag, netflow) else {
        let (sub, vertex_map, edge_map) = dag.edge_subgraph(&[]);
        return FlowSupport { dag: sub, netflow: Netflow(Vec::new()), vertex_map, edge_map, empty: true };
    };
    let n = dag.vertex_count();
    // Residual arcs: every edge forward, edges with flow also backward.
    let mut residual = vec![Vec::new(); n];
    for (e, edge) in dag.edges().iter().enumerate() {
        residual[edge.tail].push(edge.head);
        if base[e] > 0 {
            residual[edge.head].push(edge.tail);
        }
    }
    let reach = |from: usize, to: usize| {
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(v) = queue.pop_front() {
            if v == to {
                return true;
            }
            for &w in &residual[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        false
    };
    let keep: Vec<usize> = (0..dag.edge_count())
        .filter(|&e| base[e] > 0 || reach(dag.edge(e).head, dag.edge(e).tail))
        .collect();
    let (sub, vertex_map, edge_map) = dag.edge_subgraph(&keep);
    let netflow = netflow.restrict(&vertex_map);
    FlowSupport { dag: sub, netflow, vertex_map, edge_map, empty: false }
}

/// Visits every integer (t·a)-flow. Vertices are processed in topological
/// order; the outflow of each vertex is split over its out-edges, pruned by
/// the total demand still reachable downstream.
fn for_each_integer_flow(dag: &Dag, netflow: &Netflow, t: i64, visit: &mut dyn FnMut(&[i64])) {
    if t > 0 && netflow.sum() != 0 {
        return;
    }
    let n = dag.vertex_count();
    let order = dag.topological_order().to_vec();
    // absorb[v]: demand of negative vertices strictly downstream of v.
    let mut absorb = vec![0i64; n];
    for &v in order.iter().rev() {
        let mut reach = HashSet::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for &e in dag.out_edges(u) {
                let h = dag.edge(e).head;
                if reach.insert(h) {
                    stack.push(h);
                }
            }
        }
        absorb[v] = reach.iter().map(|&u| (-netflow.get(u) * t).max(0)).sum();
    }
    struct State<'a> {
        dag: &'a Dag,
        netflow: &'a Netflow,
        t: i64,
        order: Vec<usize>,
        absorb: Vec<i64>,
        inflow: Vec<i64>,
        values: Vec<i64>,
    }
    fn vertex(st: &mut State, k: usize, visit: &mut dyn FnMut(&[i64])) {
        if k == st.order.len() {
            visit(&st.values);
            return;
        }
        let v = st.order[k];
        let need = st.inflow[v] + st.t * st.netflow.get(v);
        if need < 0 || need > st.absorb[v] {
            return;
        }
        let outs = st.dag.out_edges(v).to_vec();
        if outs.is_empty() {
            if need == 0 {
                vertex(st, k + 1, visit);
            }
            return;
        }
        split(st, k, &outs, 0, need, visit);
    }
    fn split(st: &mut State, k: usize, outs: &[usize], j: usize, remaining: i64, visit: &mut dyn FnMut(&[i64])) {
        let e = outs[j];
        let h = st.dag.edge(e).head;
        let last = j + 1 == outs.len();
        let lo = if last { remaining } else { 0 };
        for x in lo..=remaining {
            if st.inflow[h] + x + st.t * st.netflow.get(h) > st.absorb[h] {
                break;
            }
            st.values[e] = x;
            st.inflow[h] += x;
            if last {
                vertex(st, k + 1, visit);
            } else {
                split(st, k, outs, j + 1, remaining - x, visit);
            }
            st.inflow[h] -= x;
        }
        st.values[e] = 0;
    }
    let mut st = State {
        dag,
        netflow,
        t,
        order,
        absorb,
        inflow: vec![0; n],
        values: vec![0; dag.edge_count()],
    };
    vertex(&mut st, 0, visit);
}

/// All integer (t·a)-flows, sorted lexicographically by edge values.
pub fn enumerate_integer_flows(dag: &Dag, netflow: &Netflow, dilation: u32) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for_each_integer_flow(dag, netflow, i64::from(dilation), &mut |f| out.push(f.to_vec()));
    out.sort();
    out
}

pub fn count_integer_flows(dag: &Dag, netflow: &Netflow, dilation: u32) -> u64 {
    let mut count = 0u64;
    for_each_integer_flow(dag, netflow, i64::from(dilation), &mut |_| count += 1);
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cons() -> (Dag, Netflow) {
        let dag = Dag::new(
            &["v1", "v2", "v3", "v4"],
            &[("α1", "v1", "v3"), ("β1", "v2", "v3"), ("γ", "v2", "v4"), ("α2", "v3", "v4"), ("β2", "v3", "v4")],
        )
        .unwrap();
        (dag, Netflow(vec![1, 1, 0, -2]))
    }

    #[test]
    fn rejects_bad_graphs() {
        assert_eq!(Dag::new::<&str, &str>(&["a", "a"], &[]).unwrap_err(), Error::DuplicateVertex("a".into()));
        assert!(matches!(Dag::new(&["a", "b"], &[("e", "a", "c")]), Err(Error::UnknownVertex(_))));
        assert!(matches!(
            Dag::new(&["a", "b"], &[("e", "a", "b"), ("e", "b", "a")]),
            Err(Error::DuplicateEdge(_))
        ));
        let err = Dag::new(&["a", "b", "c"], &[("e", "a", "b"), ("f", "b", "c"), ("g", "c", "b")]).unwrap_err();
        let Error::Cycle(c) = err else { panic!() };
        assert_eq!(c.len(), 2);
        assert!(c.contains(&"b".to_string()) && c.contains(&"c".to_string()));
    }

    #[test]
    fn strength_examples() {
        assert_eq!(strength(&Netflow(vec![1, 1, 0, -2])), 2);
        assert_eq!(strength(&Netflow(vec![0, 0])), 0);
        assert_eq!(strength(&Netflow(vec![1, 1, 1, -1, -1, -1])), 3);
    }

    #[test]
    fn cons_routes_in_declared_order() {
        let (dag, _) = cons();
        let labels: Vec<String> = enumerate_routes(&dag).iter().map(|r| r.label(&dag)).collect();
        assert_eq!(labels, ["α1α2", "α1β2", "β1α2", "β1β2", "γ"]);
    }

    #[test]
    fn indicator_marks_route_edges() {
        let (dag, _) = cons();
        let r = Route::from_ids(&dag, &["γ"]).unwrap();
        assert_eq!(indicator(&dag, &r), vec![0, 0, 1, 0, 0]);
        assert!(Route::from_ids(&dag, &["δ"]).is_err());
        assert!(Route::from_ids(&dag, &["α1"]).is_err());
        assert!(Route::from_ids(&dag, &["α1", "γ"]).is_err());
    }

    #[test]
    fn is_flow_examples() {
        let (dag, a) = cons();
        let f: Vec<Rational> = [1, 1, 0, 1, 1].iter().map(|&x| int(x)).collect();
        assert!(is_flow(&dag, &a, &f, &int(1)));
        let z = vec![Rational::zero(); 5];
        assert!(is_flow(&dag, &a, &z, &int(0)));
        let bad: Vec<Rational> = [1, 0, 0, 0, 0].iter().map(|&x| int(x)).collect();
        assert!(!is_flow(&dag, &a, &bad, &int(1)));
    }

    #[test]
    fn flow_derives_scale() {
        let (dag, a) = cons();
        let f = Flow::from_integers(&dag, &a, &[3, 3, 0, 3, 3]).unwrap();
        assert_eq!(f.scale(), &int(3));
        assert!(Flow::from_integers(&dag, &a, &[1, 0, 0, 0, 0]).is_err());
        assert!(Flow::from_integers(&dag, &a, &[1, 1]).is_err());
    }

    #[test]
    fn reversed_edge_is_not_a_flow() {
        let dag = Dag::new(&["s", "t"], &[("e", "t", "s")]).unwrap();
        let a = Netflow(vec![1, -1]);
        assert!(Flow::from_integers(&dag, &a, &[1]).is_err());
        let fs = flow_supporting_subgraph(&dag, &a);
        assert!(fs.empty);
        assert_eq!(fs.dag.edge_count(), 0);
    }

    #[test]
    fn flow_support_drops_dead_edges() {
        let dag = Dag::new(&["s", "a", "t", "u"], &[("e1", "s", "a"), ("e2", "a", "t"), ("e3", "a", "u")]).unwrap();
        let fs = flow_supporting_subgraph(&dag, &Netflow(vec![1, 0, -1, 0]));
        assert!(!fs.empty);
        assert_eq!(fs.edge_map, vec![0, 1]);
        assert_eq!(fs.dag.vertex_ids(), ["s", "a", "t"]);
        let (dag, a) = cons();
        assert_eq!(flow_supporting_subgraph(&dag, &a).edge_map, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn integer_flow_counts() {
        let (dag, a) = cons();
        assert_eq!(enumerate_integer_flows(&dag, &a, 1).len(), 5);
        assert_eq!(enumerate_integer_flows(&dag, &a, 0), vec![vec![0; 5]]);
        let skew = Netflow(vec![1, 1, 0, -1]);
        assert!(enumerate_integer_flows(&dag, &skew, 1).is_empty());
        assert_eq!(enumerate_integer_flows(&dag, &skew, 0).len(), 1);
    }

    #[test]
    fn validate_reports() {
        let v = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let e = |id: &str, t: &str, h: &str| RawEdge { id: id.into(), tail: t.into(), head: h.into() };
        let r = validate(&v(&["x"]), &[], &[("x".into(), 0)]);
        assert!(r.valid && r.flow_exists);
        let r = validate(&v(&["a", "b"]), &[e("p", "a", "b"), e("q", "b", "a")], &[]);
        assert!(!r.valid && !r.acyclic && r.cycle.is_some());
        let r = validate(&v(&["a", "b"]), &[e("p", "a", "b")], &[("a".into(), 1)]);
        assert!(r.valid && !r.flow_exists && r.netflow_sum == 1);
        let r = validate(&v(&["a", "a"]), &[e("p", "a", "z")], &[("q".into(), 0)]);
        assert!(!r.valid);
        assert_eq!(r.duplicate_vertices, ["a"]);
        assert_eq!(r.dangling_edges, ["p"]);
        assert_eq!(r.unknown_netflow_vertices, ["q"]);
    }
}

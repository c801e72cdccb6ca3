//! Augmentations by inflow and outflow edges, flow projection, and the
//! reduction to a conservationist framed core.

use std::collections::HashSet;

use num_traits::Zero;

use crate::decomposition::FramedNetwork;
use crate::error::{Error, Result};
use crate::framing::Framing;
use crate::graph::{flow_supporting_subgraph, strength, Dag, Flow, Netflow};
use crate::rational::{int, Rational};

/// Generated identifiers start with this and user identifiers may not.
pub const RESERVED_PREFIX: char = '+';

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OutflowPolicy {
    /// One outflow edge carrying the whole demand of each negative vertex.
    SingleEdgePerSink,
    /// `|a_i|` outflow edges of netflow -1 at each negative vertex.
    UnaryEdges,
    /// Explicit `(base vertex, netflow)` outflow vertices, in order.
    Explicit(Vec<(usize, i64)>),
}

/// The base pair together with the augmented graph. Hat indices extend base
/// indices: base vertices and edges keep their positions, inflow items follow,
/// then outflow items.
#[derive(Clone, Debug)]
pub struct Augmentation {
    base: Dag,
    base_netflow: Netflow,
    hat: Dag,
    hat_netflow: Netflow,
    inflow_vertices: Vec<usize>,
    inflow_edges: Vec<usize>,
    outflow_vertices: Vec<usize>,
    outflow_edges: Vec<usize>,
}

pub fn check_reserved(dag: &Dag) -> Result<()> {
    let ids = dag.vertex_ids().iter().chain(dag.edges().iter().map(|e| &e.id));
    for id in ids {
        if id.starts_with(RESERVED_PREFIX) {
            return Err(Error::ReservedIdentifier(id.clone()));
        }
    }
    Ok(())
}

/// `inflow_order` lists the heads of the inflow edges (positive vertices with
/// multiplicity) and fixes the numbering of the inflow vertices; by default
/// positive vertices appear in declaration order.
pub fn build_augmentation(
    dag: &Dag,
    netflow: &Netflow,
    policy: &OutflowPolicy,
    inflow_order: Option<&[usize]>,
) -> Result<Augmentation> {
    check_reserved(dag)?;
    if netflow.values().len() != dag.vertex_count() {
        return Err(Error::InvalidAugmentation("netflow length differs from vertex count".into()));
    }
    if netflow.sum() != 0 {
        return Err(Error::InvalidAugmentation("netflow must sum to 0".into()));
    }
    let n = dag.vertex_count();
    let default_inflow: Vec<usize> =
        (0..n).flat_map(|v| std::iter::repeat_n(v, netflow.get(v).max(0) as usize)).collect();
    let inflow: Vec<usize> = match inflow_order {
        None => default_inflow.clone(),
        Some(order) => {
            let mut a = order.to_vec();
            a.sort_unstable();
            if a != default_inflow {
                return Err(Error::InvalidAugmentation(
                    "inflow list must name each positive vertex as often as its netflow".into(),
                ));
            }
            order.to_vec()
        }
    };
    let outflow: Vec<(usize, i64)> = match policy {
        OutflowPolicy::SingleEdgePerSink => (0..n).filter(|&v| netflow.get(v) < 0).map(|v| (v, netflow.get(v))).collect(),
        OutflowPolicy::UnaryEdges => (0..n)
            .flat_map(|v| std::iter::repeat_n((v, -1), (-netflow.get(v)).max(0) as usize))
            .collect(),
        OutflowPolicy::Explicit(list) => {
            let mut total = vec![0i64; n];
            let mut count = vec![0i64; n];
            for &(v, b) in list {
                if v >= n {
                    return Err(Error::InvalidAugmentation("outflow vertex out of range".into()));
                }
                if netflow.get(v) >= 0 {
                    return Err(Error::InvalidAugmentation(format!(
                        "outflow edge at `{}`, whose netflow is not negative",
                        dag.vertex_id(v)
                    )));
                }
                if b >= 0 {
                    return Err(Error::InvalidAugmentation("outflow netflow must be negative".into()));
                }
                total[v] += b;
                count[v] += 1;
            }
            for v in (0..n).filter(|&v| netflow.get(v) < 0) {
                if count[v] == 0 || count[v] > -netflow.get(v) || total[v] != netflow.get(v) {
                    return Err(Error::InvalidAugmentation(format!(
                        "outflow at `{}` must use 1 to {} edges summing to {}",
                        dag.vertex_id(v),
                        -netflow.get(v),
                        netflow.get(v)
                    )));
                }
            }
            list.clone()
        }
    };

    let mut vertices: Vec<String> = dag.vertex_ids().to_vec();
    let mut edges: Vec<(String, String, String)> = dag
        .edges()
        .iter()
        .map(|e| (e.id.clone(), dag.vertex_id(e.tail).to_string(), dag.vertex_id(e.head).to_string()))
        .collect();
    let mut hat_values = vec![0i64; n];
    let (mut inflow_vertices, mut inflow_edges) = (Vec::new(), Vec::new());
    for (k, &v) in inflow.iter().enumerate() {
        inflow_vertices.push(vertices.len());
        inflow_edges.push(edges.len());
        let s = format!("{RESERVED_PREFIX}s{}", k + 1);
        edges.push((format!("{RESERVED_PREFIX}x{}", k + 1), s.clone(), dag.vertex_id(v).to_string()));
        vertices.push(s);
        hat_values.push(1);
    }
    let (mut outflow_vertices, mut outflow_edges) = (Vec::new(), Vec::new());
    for (k, &(v, b)) in outflow.iter().enumerate() {
        outflow_vertices.push(vertices.len());
        outflow_edges.push(edges.len());
        let t = format!("{RESERVED_PREFIX}t{}", k + 1);
        edges.push((format!("{RESERVED_PREFIX}y{}", k + 1), dag.vertex_id(v).to_string(), t.clone()));
        vertices.push(t);
        hat_values.push(b);
    }
    let hat = Dag::new(&vertices, &edges)?;
    Ok(Augmentation {
        base: dag.clone(),
        base_netflow: netflow.clone(),
        hat,
        hat_netflow: Netflow(hat_values),
        inflow_vertices,
        inflow_edges,
        outflow_vertices,
        outflow_edges,
    })
}

impl Augmentation {
    pub fn base(&self) -> &Dag {
        &self.base
    }

    pub fn base_netflow(&self) -> &Netflow {
        &self.base_netflow
    }

    pub fn hat(&self) -> &Dag {
        &self.hat
    }

    pub fn hat_netflow(&self) -> &Netflow {
        &self.hat_netflow
    }

    pub fn inflow_vertices(&self) -> &[usize] {
        &self.inflow_vertices
    }

    pub fn inflow_edges(&self) -> &[usize] {
        &self.inflow_edges
    }

    pub fn outflow_vertices(&self) -> &[usize] {
        &self.outflow_vertices
    }

    pub fn outflow_edges(&self) -> &[usize] {
        &self.outflow_edges
    }

    /// Restriction of a hat flow to the base edges.
    pub fn deaugment(&self, hat_values: &[Rational]) -> Result<Flow> {
        Flow::new(&self.hat, &self.hat_netflow, hat_values.to_vec())?;
        Flow::new(&self.base, &self.base_netflow, hat_values[..self.base.edge_count()].to_vec())
    }

    /// Inverse of [`Self::deaugment`]: inflow and outflow edges carry the
    /// scaled netflow of their new endpoint.
    pub fn augment_flow(&self, base_values: &[Rational]) -> Result<Flow> {
        let flow = Flow::new(&self.base, &self.base_netflow, base_values.to_vec())?;
        let x = flow.scale().clone();
        let mut values = base_values.to_vec();
        values.resize(self.hat.edge_count(), Rational::zero());
        for &e in &self.inflow_edges {
            values[e] = x.clone();
        }
        for (&v, &e) in self.outflow_vertices.iter().zip(&self.outflow_edges) {
            values[e] = &x * int(-self.hat_netflow.get(v));
        }
        Flow::new(&self.hat, &self.hat_netflow, values)
    }
}

/// Checks the defining conditions of an augmentation against its base pair.
pub fn validate_augmentation(aug: &Augmentation) -> Result<()> {
    let (base, hat, a) = (&aug.base, &aug.hat, &aug.base_netflow);
    let fail = |m: String| Err(Error::InvalidAugmentation(m));
    if aug.inflow_edges.len() as i64 != strength(a) {
        return fail("inflow edge count differs from strength".into());
    }
    let n = base.vertex_count();
    let mut inflow_count = vec![0i64; n];
    for &e in &aug.inflow_edges {
        inflow_count[hat.edge(e).head] += 1;
    }
    let mut outflow_count = vec![0i64; n];
    let mut outflow_total = vec![0i64; n];
    for (&v, &e) in aug.outflow_vertices.iter().zip(&aug.outflow_edges) {
        let t = hat.edge(e).tail;
        if t >= n || hat.edge(e).head != v {
            return fail("outflow edge must run from a base vertex to its outflow vertex".into());
        }
        outflow_count[t] += 1;
        outflow_total[t] += aug.hat_netflow.get(v);
    }
    for v in 0..n {
        let av = a.get(v);
        if inflow_count[v] != av.max(0) {
            return fail(format!("`{}` needs {} inflow edges", base.vertex_id(v), av.max(0)));
        }
        if av < 0 && !(1..=-av).contains(&outflow_count[v]) {
            return fail(format!("`{}` needs 1 to {} outflow edges", base.vertex_id(v), -av));
        }
        if av >= 0 && outflow_count[v] != 0 {
            return fail(format!("`{}` may not carry outflow edges", base.vertex_id(v)));
        }
        if av < 0 && outflow_total[v] != av {
            return fail(format!("outflow netflow at `{}` must sum to {av}", base.vertex_id(v)));
        }
        if aug.hat_netflow.get(v) != 0 {
            return fail("base vertices must have hat netflow 0".into());
        }
    }
    for &x in aug.inflow_vertices.iter().chain(&aug.outflow_vertices) {
        if hat.in_edges(x).len() + hat.out_edges(x).len() != 1 {
            return fail(format!("`{}` must meet exactly one edge", hat.vertex_id(x)));
        }
    }
    if aug.inflow_vertices.iter().any(|&x| aug.hat_netflow.get(x) != 1) {
        return fail("inflow vertices must have netflow 1".into());
    }
    if aug.outflow_vertices.iter().any(|&y| aug.hat_netflow.get(y) >= 0) {
        return fail("outflow vertices must have negative netflow".into());
    }
    // Contracting the new edges gives back the base graph.
    let expected = n + aug.inflow_vertices.len() + aug.outflow_vertices.len();
    if hat.vertex_count() != expected || hat.edge_count() != base.edge_count() + aug.inflow_edges.len() + aug.outflow_edges.len() {
        return fail("hat graph has extra vertices or edges".into());
    }
    for (e, edge) in base.edges().iter().enumerate() {
        let h = hat.edge(e);
        if h.id != edge.id || h.tail != edge.tail || h.head != edge.head {
            return fail(format!("base edge `{}` altered", edge.id));
        }
    }
    Ok(())
}

/// An augmentation with a framing on its hat graph.
#[derive(Clone, Debug)]
pub struct FramedAugmentation {
    augmentation: Augmentation,
    framing: Framing,
}

impl FramedAugmentation {
    /// Requires orders at every base vertex (out-orders where there are
    /// out-edges, in-orders where there are both) and a source order that is
    /// a permutation of the inflow vertices.
    pub fn new(augmentation: Augmentation, framing: Framing) -> Result<FramedAugmentation> {
        let hat = &augmentation.hat;
        for v in 0..augmentation.base.vertex_count() {
            if !hat.is_sink(v) && framing.out_order(v).is_none() {
                return Err(Error::InvalidFraming(format!("missing out-order at `{}`", hat.vertex_id(v))));
            }
            if !hat.is_sink(v) && !hat.is_source(v) && framing.in_order(v).is_none() {
                return Err(Error::InvalidFraming(format!("missing in-order at `{}`", hat.vertex_id(v))));
            }
        }
        let mut given = framing.source_order().to_vec();
        let mut expected = augmentation.inflow_vertices.clone();
        given.sort_unstable();
        expected.sort_unstable();
        if given != expected {
            return Err(Error::InvalidFraming("source order must list every inflow vertex exactly once".into()));
        }
        Ok(FramedAugmentation { augmentation, framing })
    }

    /// Declaration-order framing with inflow vertices in creation order.
    pub fn with_declaration_order(augmentation: Augmentation) -> Result<FramedAugmentation> {
        let framing = Framing::declaration_order(&augmentation.hat, augmentation.inflow_vertices.clone())?;
        FramedAugmentation::new(augmentation, framing)
    }

    pub fn augmentation(&self) -> &Augmentation {
        &self.augmentation
    }

    pub fn framing(&self) -> &Framing {
        &self.framing
    }
}

/// Completes partial orders on the hat graph. Listed edges come first in the
/// given order; unlisted incident edges follow in declaration order. Source
/// entries may be inflow vertices or positive base vertices, the latter
/// standing for all their inflow vertices in creation order.
pub fn extend_framing(
    aug: &Augmentation,
    in_orders: &[(usize, Vec<usize>)],
    out_orders: &[(usize, Vec<usize>)],
    sources: &[usize],
) -> Result<Framing> {
    let hat = &aug.hat;
    let complete = |v: usize, given: Option<&Vec<usize>>, incident: &[usize], side: &str| -> Result<Vec<usize>> {
        let mut order = Vec::new();
        let mut seen = HashSet::new();
        for &e in given.into_iter().flatten() {
            if !incident.contains(&e) || !seen.insert(e) {
                return Err(Error::InvalidFraming(format!(
                    "{side}-order at `{}` lists `{}` wrongly",
                    hat.vertex_id(v),
                    hat.edge_id(e)
                )));
            }
            order.push(e);
        }
        order.extend(incident.iter().copied().filter(|e| !seen.contains(e)));
        Ok(order)
    };
    for &(v, _) in in_orders.iter().chain(out_orders) {
        if v >= hat.vertex_count() {
            return Err(Error::InvalidFraming("order at unknown vertex".into()));
        }
    }
    let mut ins = Vec::new();
    let mut outs = Vec::new();
    for v in 0..hat.vertex_count() {
        if !hat.is_sink(v) {
            let given = out_orders.iter().find(|(u, _)| *u == v).map(|(_, o)| o);
            outs.push((v, complete(v, given, hat.out_edges(v), "out")?));
            if !hat.is_source(v) {
                let given = in_orders.iter().find(|(u, _)| *u == v).map(|(_, o)| o);
                ins.push((v, complete(v, given, hat.in_edges(v), "in")?));
            }
        } else if in_orders.iter().any(|(u, _)| *u == v) {
            return Err(Error::InvalidFraming(format!("no in-order allowed at sink `{}`", hat.vertex_id(v))));
        }
    }
    let mut order = Vec::new();
    for &s in sources {
        if aug.inflow_vertices.contains(&s) {
            order.push(s);
        } else if s < aug.base.vertex_count() && aug.base_netflow.get(s) > 0 {
            for (&x, &e) in aug.inflow_vertices.iter().zip(&aug.inflow_edges) {
                if hat.edge(e).head == s {
                    order.push(x);
                }
            }
        } else {
            return Err(Error::InvalidFraming(format!(
                "`{}` is neither an inflow vertex nor a positive vertex",
                hat.vertex_ids().get(s).map(String::as_str).unwrap_or("?")
            )));
        }
    }
    let listed: HashSet<usize> = order.iter().copied().collect();
    if listed.len() != order.len() {
        return Err(Error::InvalidFraming("source order repeats a vertex".into()));
    }
    order.extend(aug.inflow_vertices.iter().copied().filter(|x| !listed.contains(x)));
    Framing::new(hat, ins, outs, order)
}

/// The flow-supporting part of a framed (augmented) graph, which is
/// conservationist, with maps back to the ambient graph and its base.
#[derive(Clone, Debug)]
pub struct Core {
    network: Option<FramedNetwork>,
    ambient: Dag,
    ambient_netflow: Netflow,
    base: Dag,
    base_netflow: Netflow,
    edge_map: Vec<usize>,
}

impl Core {
    /// `None` when no flow exists.
    pub fn network(&self) -> Option<&FramedNetwork> {
        self.network.as_ref()
    }

    pub fn is_empty(&self) -> bool {
        self.network.is_none()
    }

    pub fn ambient(&self) -> &Dag {
        &self.ambient
    }

    pub fn base(&self) -> &Dag {
        &self.base
    }

    pub fn base_netflow(&self) -> &Netflow {
        &self.base_netflow
    }

    /// Core edge -> ambient edge.
    pub fn edge_map(&self) -> &[usize] {
        &self.edge_map
    }

    /// Zero-pads core edge values to the ambient graph.
    pub fn to_ambient<T: Clone + Zero>(&self, core_values: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.ambient.edge_count()];
        for (i, &e) in self.edge_map.iter().enumerate() {
            out[e] = core_values[i].clone();
        }
        out
    }

    /// Projects core edge values onto the base edges.
    pub fn to_base<T: Clone + Zero>(&self, core_values: &[T]) -> Vec<T> {
        let mut out = self.to_ambient(core_values);
        out.truncate(self.base.edge_count());
        out
    }

    /// Lifts a flow on the base graph to core coordinates.
    pub fn from_base(&self, base_values: &[Rational]) -> Result<Vec<Rational>> {
        let flow = Flow::new(&self.base, &self.base_netflow, base_values.to_vec())?;
        let x = flow.scale().clone();
        let mut ambient = base_values.to_vec();
        ambient.resize(self.ambient.edge_count(), Rational::zero());
        for e in self.base.edge_count()..self.ambient.edge_count() {
            let edge = self.ambient.edge(e);
            // New edges meet exactly one new vertex, which carries the netflow.
            let v = if edge.tail >= self.base.vertex_count() { edge.tail } else { edge.head };
            ambient[e] = &x * int(self.ambient_netflow.get(v).abs());
        }
        Flow::new(&self.ambient, &self.ambient_netflow, ambient.clone())?;
        let Some(net) = &self.network else {
            return Err(Error::NotAFlow("polytope is empty".into()));
        };
        let kept: HashSet<usize> = self.edge_map.iter().copied().collect();
        if let Some(e) = (0..ambient.len()).find(|e| !kept.contains(e) && !ambient[*e].is_zero()) {
            return Err(Error::Internal(format!("flow uses non-supporting edge `{}`", self.ambient.edge_id(e))));
        }
        let values: Vec<Rational> = self.edge_map.iter().map(|&e| ambient[e].clone()).collect();
        Flow::new(net.dag(), net.netflow(), values.clone())?;
        Ok(values)
    }
}

/// Flow-supporting subgraph of the augmented graph with the restricted framing.
pub fn conservationist_core(fa: &FramedAugmentation) -> Result<Core> {
    let aug = &fa.augmentation;
    core_of(&aug.hat, &aug.hat_netflow, &fa.framing, &aug.base, &aug.base_netflow)
}

/// Core of an input that is already conservationist, used without augmenting.
pub fn conservationist_core_direct(dag: &Dag, netflow: &Netflow, framing: &Framing) -> Result<Core> {
    if !netflow.is_conservationist(dag) {
        return Err(Error::NotConservationist("input must be 1 on sources, negative on sinks, 0 elsewhere".into()));
    }
    framing.check_conservationist(dag)?;
    core_of(dag, netflow, framing, dag, netflow)
}

fn core_of(ambient: &Dag, ambient_netflow: &Netflow, framing: &Framing, base: &Dag, base_netflow: &Netflow) -> Result<Core> {
    let fs = flow_supporting_subgraph(ambient, ambient_netflow);
    let network = if fs.empty {
        None
    } else {
        let restricted = framing.restrict(&fs.dag, &fs.vertex_map, &fs.edge_map)?;
        Some(FramedNetwork::new(fs.dag, fs.netflow, restricted)?)
    };
    Ok(Core {
        network,
        ambient: ambient.clone(),
        ambient_netflow: ambient_netflow.clone(),
        base: base.clone(),
        base_netflow: base_netflow.clone(),
        edge_map: fs.edge_map,
    })
}

/// Identifies all sources to one vertex and all sinks to another. Edge
/// indices are preserved, so routes correspond edge for edge. The source
/// out-orders and the source order are forgotten.
pub fn two_point_identification(net: &FramedNetwork) -> Result<FramedNetwork> {
    let dag = net.dag();
    if dag.edge_count() == 0 {
        return Err(Error::NotConservationist("no edges to identify".into()));
    }
    let source = format!("{RESERVED_PREFIX}source");
    let sink = format!("{RESERVED_PREFIX}sink");
    let internal: Vec<usize> = (0..dag.vertex_count()).filter(|&v| !dag.is_source(v) && !dag.is_sink(v)).collect();
    let name = |v: usize| -> String {
        if dag.is_source(v) {
            source.clone()
        } else if dag.is_sink(v) {
            sink.clone()
        } else {
            dag.vertex_id(v).to_string()
        }
    };
    let mut vertices = vec![source.clone()];
    vertices.extend(internal.iter().map(|&v| dag.vertex_id(v).to_string()));
    vertices.push(sink.clone());
    let edges: Vec<(String, String, String)> =
        dag.edges().iter().map(|e| (e.id.clone(), name(e.tail), name(e.head))).collect();
    let two = Dag::new(&vertices, &edges)?;
    let mut netflow = vec![0; two.vertex_count()];
    netflow[0] = 1;
    *netflow.last_mut().unwrap() = -1;
    let mut ins = Vec::new();
    let mut outs = vec![(0, two.out_edges(0).to_vec())];
    for (k, &v) in internal.iter().enumerate() {
        let order = |o: Option<&[usize]>| o.map(<[usize]>::to_vec).ok_or_else(|| Error::InvalidFraming("incomplete framing".into()));
        ins.push((k + 1, order(net.framing().in_order(v))?));
        outs.push((k + 1, order(net.framing().out_order(v))?));
    }
    let framing = Framing::new(&two, ins, outs, vec![0])?;
    FramedNetwork::new(two, Netflow(netflow), framing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_integer_flows;

    fn cons() -> (Dag, Netflow) {
        let dag = Dag::new(
            &["v1", "v2", "v3", "v4"],
            &[("α1", "v1", "v3"), ("β1", "v2", "v3"), ("γ", "v2", "v4"), ("α2", "v3", "v4"), ("β2", "v3", "v4")],
        )
        .unwrap();
        (dag, Netflow(vec![1, 1, 0, -2]))
    }

    fn two_s_one_t() -> (Dag, Netflow) {
        let dag = Dag::new(
            &["v1", "v2", "v3"],
            &[("α1", "v1", "v2"), ("α2", "v1", "v2"), ("β1", "v2", "v3"), ("β2", "v2", "v3")],
        )
        .unwrap();
        (dag, Netflow(vec![1, 1, -2]))
    }

    #[test]
    fn single_edge_policy() {
        let (dag, a) = cons();
        let aug = build_augmentation(&dag, &a, &OutflowPolicy::SingleEdgePerSink, None).unwrap();
        validate_augmentation(&aug).unwrap();
        assert_eq!(aug.outflow_edges().len(), 1);
        assert_eq!(aug.hat_netflow().get(aug.outflow_vertices()[0]), -2);
        assert_eq!(aug.hat().edge(aug.outflow_edges()[0]).tail, 3);
    }

    #[test]
    fn unary_policy() {
        let (dag, a) = two_s_one_t();
        let aug = build_augmentation(&dag, &a, &OutflowPolicy::UnaryEdges, None).unwrap();
        validate_augmentation(&aug).unwrap();
        let ys: Vec<&str> = aug.outflow_edges().iter().map(|&e| aug.hat().edge_id(e)).collect();
        assert_eq!(ys, ["+y1", "+y2"]);
        assert!(aug.outflow_vertices().iter().all(|&y| aug.hat_netflow().get(y) == -1));
    }

    #[test]
    fn explicit_policy_errors() {
        let (dag, a) = cons();
        let bad = [vec![(0, -1)], vec![(3, -1)], vec![(3, -1), (3, -2)], vec![(3, 1), (3, -3)], vec![(3, -1); 3]];
        for spec in bad {
            assert!(build_augmentation(&dag, &a, &OutflowPolicy::Explicit(spec.clone()), None).is_err(), "{spec:?}");
        }
        let ok = build_augmentation(&dag, &a, &OutflowPolicy::Explicit(vec![(3, -1), (3, -1)]), None).unwrap();
        validate_augmentation(&ok).unwrap();
        assert!(build_augmentation(&dag, &Netflow(vec![1, 1, 0, -1]), &OutflowPolicy::UnaryEdges, None).is_err());
        assert!(build_augmentation(&dag, &a, &OutflowPolicy::UnaryEdges, Some(&[0, 0])).is_err());
    }

    #[test]
    fn reserved_ids_rejected() {
        let dag = Dag::new(&["+s", "t"], &[("e", "+s", "t")]).unwrap();
        assert!(matches!(
            build_augmentation(&dag, &Netflow(vec![1, -1]), &OutflowPolicy::UnaryEdges, None),
            Err(Error::ReservedIdentifier(_))
        ));
    }

    #[test]
    fn deaugment_round_trip() {
        let (dag, a) = cons();
        let aug = build_augmentation(&dag, &a, &OutflowPolicy::UnaryEdges, None).unwrap();
        for f in enumerate_integer_flows(&dag, &a, 1) {
            let base: Vec<Rational> = f.iter().map(|&x| int(x)).collect();
            let hat = aug.augment_flow(&base).unwrap();
            assert_eq!(aug.deaugment(hat.values()).unwrap().values(), &base[..]);
        }
        let zero = vec![Rational::zero(); aug.hat().edge_count()];
        assert_eq!(aug.deaugment(&zero).unwrap().values(), &vec![Rational::zero(); 5][..]);
        let mut bad = zero.clone();
        bad[0] = int(1);
        assert!(aug.deaugment(&bad).is_err());
    }

    #[test]
    fn core_drops_unusable_edges() {
        let dag = Dag::new(&["s", "a", "t", "u"], &[("e1", "s", "a"), ("e2", "a", "t"), ("e3", "a", "u")]).unwrap();
        let a = Netflow(vec![1, 0, -1, 0]);
        let aug = build_augmentation(&dag, &a, &OutflowPolicy::SingleEdgePerSink, None).unwrap();
        let fa = FramedAugmentation::with_declaration_order(aug).unwrap();
        let core = conservationist_core(&fa).unwrap();
        let kept: Vec<&str> = core.edge_map().iter().map(|&e| core.ambient().edge_id(e)).collect();
        assert_eq!(kept, ["e1", "e2", "+x1", "+y1"]);
        let net = core.network().unwrap();
        assert!(net.netflow().is_conservationist(net.dag()));
    }

    #[test]
    fn empty_core() {
        let dag = Dag::new(&["s", "t"], &[("e", "t", "s")]).unwrap();
        let aug = build_augmentation(&dag, &Netflow(vec![1, -1]), &OutflowPolicy::SingleEdgePerSink, None).unwrap();
        let fa = FramedAugmentation::with_declaration_order(aug).unwrap();
        assert!(conservationist_core(&fa).unwrap().is_empty());
    }

    #[test]
    fn extend_framing_appends_new_edges() {
        let (dag, a) = two_s_one_t();
        let aug = build_augmentation(&dag, &a, &OutflowPolicy::UnaryEdges, None).unwrap();
        let f = extend_framing(&aug, &[(1, vec![1, 0])], &[], &[1, 0]).unwrap();
        let names = |o: &[usize]| o.iter().map(|&e| aug.hat().edge_id(e).to_string()).collect::<Vec<_>>();
        assert_eq!(names(f.in_order(1).unwrap()), ["α2", "α1", "+x2"]);
        assert_eq!(names(f.out_order(2).unwrap()), ["+y1", "+y2"]);
        let srcs: Vec<&str> = f.source_order().iter().map(|&v| aug.hat().vertex_id(v)).collect();
        assert_eq!(srcs, ["+s2", "+s1"]);
        assert!(extend_framing(&aug, &[(1, vec![2])], &[], &[]).is_err());
        assert!(extend_framing(&aug, &[], &[], &[2]).is_err());
    }

    #[test]
    fn two_point_keeps_routes() {
        let (dag, a) = cons();
        let framing = Framing::declaration_order(&dag, vec![0, 1]).unwrap();
        let core = conservationist_core_direct(&dag, &a, &framing).unwrap();
        let net = core.network().unwrap();
        let two = two_point_identification(net).unwrap();
        assert_eq!(two.dag().vertex_count(), 3);
        assert_eq!(two.routes().len(), net.routes().len());
        for (p, q) in net.routes().iter().zip(two.routes()) {
            assert_eq!(p.edges(), q.edges());
        }
    }
}

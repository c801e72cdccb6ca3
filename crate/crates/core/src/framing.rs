//! Framings, the induced path orders at a vertex, and route compatibility.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{path_vertices, Dag, Route};
use crate::rational::Rational;

/// Per-vertex orders on incoming and outgoing edges plus an order on sources.
/// Orders are stored low to high.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Framing {
    in_order: Vec<Option<Vec<usize>>>,
    out_order: Vec<Option<Vec<usize>>>,
    source_order: Vec<usize>,
    in_rank: Vec<Option<usize>>,
    out_rank: Vec<Option<usize>>,
}

impl Framing {
    /// Each given order must be a permutation of that vertex's in- or out-edges.
    pub fn new(
        dag: &Dag,
        in_orders: Vec<(usize, Vec<usize>)>,
        out_orders: Vec<(usize, Vec<usize>)>,
        source_order: Vec<usize>,
    ) -> Result<Framing> {
        let n = dag.vertex_count();
        let mut framing = Framing {
            in_order: vec![None; n],
            out_order: vec![None; n],
            source_order: Vec::new(),
            in_rank: vec![None; dag.edge_count()],
            out_rank: vec![None; dag.edge_count()],
        };
        for (v, order) in in_orders {
            check_permutation(dag, v, &order, dag.in_edges(v), "in")?;
            if framing.in_order[v].is_some() {
                return Err(Error::InvalidFraming(format!("two in-orders at `{}`", dag.vertex_id(v))));
            }
            for (r, &e) in order.iter().enumerate() {
                framing.in_rank[e] = Some(r);
            }
            framing.in_order[v] = Some(order);
        }
        for (v, order) in out_orders {
            check_permutation(dag, v, &order, dag.out_edges(v), "out")?;
            if framing.out_order[v].is_some() {
                return Err(Error::InvalidFraming(format!("two out-orders at `{}`", dag.vertex_id(v))));
            }
            for (r, &e) in order.iter().enumerate() {
                framing.out_rank[e] = Some(r);
            }
            framing.out_order[v] = Some(order);
        }
        let mut seen = HashSet::new();
        for &s in &source_order {
            if s >= n || !seen.insert(s) {
                return Err(Error::InvalidFraming("source order repeats or leaves the graph".into()));
            }
        }
        framing.source_order = source_order;
        Ok(framing)
    }

    /// Declaration order everywhere: out-orders at non-sinks, in-orders at
    /// internal vertices.
    pub fn declaration_order(dag: &Dag, source_order: Vec<usize>) -> Result<Framing> {
        let n = dag.vertex_count();
        let ins = (0..n)
            .filter(|&v| !dag.is_source(v) && !dag.is_sink(v))
            .map(|v| (v, dag.in_edges(v).to_vec()))
            .collect();
        let outs = (0..n).filter(|&v| !dag.is_sink(v)).map(|v| (v, dag.out_edges(v).to_vec())).collect();
        Framing::new(dag, ins, outs, source_order)
    }

    pub fn in_order(&self, v: usize) -> Option<&[usize]> {
        self.in_order[v].as_deref()
    }

    pub fn out_order(&self, v: usize) -> Option<&[usize]> {
        self.out_order[v].as_deref()
    }

    pub fn source_order(&self) -> &[usize] {
        &self.source_order
    }

    pub fn in_rank(&self, e: usize) -> Option<usize> {
        self.in_rank[e]
    }

    pub fn out_rank(&self, e: usize) -> Option<usize> {
        self.out_rank[e]
    }

    pub fn with_source_order(&self, dag: &Dag, source_order: Vec<usize>) -> Result<Framing> {
        let ins = (0..dag.vertex_count()).filter_map(|v| self.in_order[v].clone().map(|o| (v, o))).collect();
        let outs = (0..dag.vertex_count()).filter_map(|v| self.out_order[v].clone().map(|o| (v, o))).collect();
        Framing::new(dag, ins, outs, source_order)
    }

    /// Out-orders at every non-sink, in-orders exactly at internal vertices,
    /// and a source order covering exactly the sources.
    pub fn check_conservationist(&self, dag: &Dag) -> Result<()> {
        for v in 0..dag.vertex_count() {
            let name = dag.vertex_id(v);
            if !dag.is_sink(v) && self.out_order[v].is_none() {
                return Err(Error::InvalidFraming(format!("missing out-order at `{name}`")));
            }
            if !dag.is_sink(v) && !dag.is_source(v) && self.in_order[v].is_none() {
                return Err(Error::InvalidFraming(format!("missing in-order at `{name}`")));
            }
            if dag.is_sink(v) && self.in_order[v].is_some() {
                return Err(Error::InvalidFraming(format!("sink `{name}` carries an in-order")));
            }
        }
        let mut sources = dag.sources();
        let mut given = self.source_order.clone();
        sources.sort_unstable();
        given.sort_unstable();
        if sources != given {
            return Err(Error::InvalidFraming("source order must list every source exactly once".into()));
        }
        Ok(())
    }

    /// Restriction to a subgraph given by index maps into `self`'s graph.
    /// Relative orders survive; orders are kept only where the subgraph needs
    /// them (out at non-sinks, in at internal vertices).
    pub fn restrict(&self, sub: &Dag, vertex_map: &[usize], edge_map: &[usize]) -> Result<Framing> {
        let mut new_edge = HashMap::new();
        for (i, &e) in edge_map.iter().enumerate() {
            new_edge.insert(e, i);
        }
        let mut new_vertex = HashMap::new();
        for (i, &v) in vertex_map.iter().enumerate() {
            new_vertex.insert(v, i);
        }
        let project = |order: &Option<Vec<usize>>| -> Option<Vec<usize>> {
            order.as_ref().map(|o| o.iter().filter_map(|e| new_edge.get(e).copied()).collect())
        };
        let mut ins = Vec::new();
        let mut outs = Vec::new();
        for (i, &v) in vertex_map.iter().enumerate() {
            if !sub.is_sink(i) {
                let order = project(&self.out_order[v])
                    .ok_or_else(|| Error::InvalidFraming(format!("missing out-order at `{}`", sub.vertex_id(i))))?;
                outs.push((i, order));
                if !sub.is_source(i) {
                    let order = project(&self.in_order[v])
                        .ok_or_else(|| Error::InvalidFraming(format!("missing in-order at `{}`", sub.vertex_id(i))))?;
                    ins.push((i, order));
                }
            }
        }
        let sources = self.source_order.iter().filter_map(|v| new_vertex.get(v).copied()).collect();
        Framing::new(sub, ins, outs, sources)
    }
}

fn check_permutation(dag: &Dag, v: usize, order: &[usize], incident: &[usize], side: &str) -> Result<()> {
    let mut a = order.to_vec();
    let mut b = incident.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if v >= dag.vertex_count() || a != b {
        return Err(Error::InvalidFraming(format!(
            "{side}-order at `{}` is not a permutation of its {side}-edges",
            dag.vertex_ids().get(v).map(String::as_str).unwrap_or("?")
        )));
    }
    Ok(())
}

/// Index into `path` of the first edge leaving `v`; `path.len()` if the path ends at `v`.
fn position(dag: &Dag, path: &[usize], v: usize) -> Option<usize> {
    if let Some(k) = path.iter().position(|&e| dag.edge(e).tail == v) {
        return Some(k);
    }
    match path.last() {
        Some(&e) if dag.edge(e).head == v => Some(path.len()),
        _ => None,
    }
}

fn shared_positions(dag: &Dag, vertex: usize, p: &[usize], q: &[usize]) -> Result<(usize, usize)> {
    match (position(dag, p, vertex), position(dag, q, vertex)) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::VertexNotShared(dag.vertex_ids().get(vertex).cloned().unwrap_or_default())),
    }
}

/// Post-order at `vertex`: compares the continuations, deciding at the first
/// divergence by the out-order there.
pub fn compare_post(dag: &Dag, framing: &Framing, vertex: usize, p: &[usize], q: &[usize]) -> Result<Ordering> {
    let (kp, kq) = shared_positions(dag, vertex, p, q)?;
    let (sp, sq) = (&p[kp..], &q[kq..]);
    for (&a, &b) in sp.iter().zip(sq) {
        if a != b {
            let at = dag.edge(a).tail;
            return match (framing.out_rank(a), framing.out_rank(b)) {
                (Some(ra), Some(rb)) => Ok(ra.cmp(&rb)),
                _ => Err(Error::InvalidFraming(format!("missing out-order at `{}`", dag.vertex_id(at)))),
            };
        }
    }
    Ok(sp.len().cmp(&sq.len()))
}

/// Pre-order at `vertex`: compares the histories backwards, deciding at the
/// merge vertex by the in-order there.
pub fn compare_pre(dag: &Dag, framing: &Framing, vertex: usize, p: &[usize], q: &[usize]) -> Result<Ordering> {
    if vertex < dag.vertex_count() && dag.is_sink(vertex) {
        return Err(Error::NoPreOrderAtSink(dag.vertex_id(vertex).to_string()));
    }
    let (kp, kq) = shared_positions(dag, vertex, p, q)?;
    let (hp, hq) = (&p[..kp], &q[..kq]);
    for (&a, &b) in hp.iter().rev().zip(hq.iter().rev()) {
        if a != b {
            let at = dag.edge(a).head;
            return match (framing.in_rank(a), framing.in_rank(b)) {
                (Some(ra), Some(rb)) => Ok(ra.cmp(&rb)),
                _ => Err(Error::InvalidFraming(format!("missing in-order at `{}`", dag.vertex_id(at)))),
            };
        }
    }
    Ok(hp.len().cmp(&hq.len()))
}

/// First shared vertex (along `q`) where the pre- and post-orders disagree.
/// Sinks never witness, since they carry no pre-order.
pub fn incompatibility_witness(dag: &Dag, framing: &Framing, p: &[usize], q: &[usize]) -> Result<Option<usize>> {
    let on_p: HashSet<usize> = path_vertices(dag, p).into_iter().collect();
    for v in path_vertices(dag, q) {
        if !on_p.contains(&v) || dag.is_sink(v) || dag.is_source(v) {
            continue;
        }
        let pre = compare_pre(dag, framing, v, p, q)?;
        let post = compare_post(dag, framing, v, p, q)?;
        if pre != Ordering::Equal && post == pre.reverse() {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

pub fn routes_compatible(dag: &Dag, framing: &Framing, p: &Route, q: &Route) -> Result<bool> {
    Ok(incompatibility_witness(dag, framing, p.edges(), q.edges())?.is_none())
}

pub fn is_route_clique(dag: &Dag, framing: &Framing, routes: &[Route]) -> Result<bool> {
    for (i, p) in routes.iter().enumerate() {
        for q in &routes[i + 1..] {
            if !routes_compatible(dag, framing, p, q)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Heights for an embedding of the graph in the plane: one per vertex and one
/// per edge endpoint, given as (height at tail, height at head).
#[derive(Clone, Debug, Default)]
pub struct Embedding {
    pub vertex_heights: HashMap<usize, Rational>,
    pub edge_heights: HashMap<usize, (Rational, Rational)>,
}

/// Ranks lower attachment points below higher ones. Orders are produced in the
/// conservationist shape; `sources` are ordered by their vertex heights.
pub fn framing_from_embedding(dag: &Dag, embedding: &Embedding, sources: &[usize]) -> Result<Framing> {
    let height = |e: usize, at_head: bool| -> Result<&Rational> {
        embedding
            .edge_heights
            .get(&e)
            .map(|(t, h)| if at_head { h } else { t })
            .ok_or_else(|| Error::AmbiguousEmbedding(format!("no height for edge `{}`", dag.edge_id(e))))
    };
    let sort_by = |edges: &[usize], at_head: bool, v: usize| -> Result<Vec<usize>> {
        let mut keyed = edges.iter().map(|&e| Ok((height(e, at_head)?, e))).collect::<Result<Vec<_>>>()?;
        keyed.sort();
        if keyed.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::AmbiguousEmbedding(format!(
                "tied {} heights at `{}`",
                if at_head { "incoming" } else { "outgoing" },
                dag.vertex_id(v)
            )));
        }
        Ok(keyed.into_iter().map(|(_, e)| e).collect())
    };
    let mut ins = Vec::new();
    let mut outs = Vec::new();
    for v in 0..dag.vertex_count() {
        if !dag.is_sink(v) {
            outs.push((v, sort_by(dag.out_edges(v), false, v)?));
            if !dag.is_source(v) {
                ins.push((v, sort_by(dag.in_edges(v), true, v)?));
            }
        }
    }
    let mut keyed = sources
        .iter()
        .map(|&s| {
            embedding
                .vertex_heights
                .get(&s)
                .map(|h| (h, s))
                .ok_or_else(|| Error::AmbiguousEmbedding(format!("no height for source `{}`", dag.vertex_id(s))))
        })
        .collect::<Result<Vec<_>>>()?;
    keyed.sort();
    if keyed.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::AmbiguousEmbedding("tied source heights".into()));
    }
    Framing::new(dag, ins, outs, keyed.into_iter().map(|(_, s)| s).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_routes;
    use crate::rational::int;

    fn cons() -> (Dag, Framing) {
        let dag = Dag::new(
            &["v1", "v2", "v3", "v4"],
            &[("α1", "v1", "v3"), ("β1", "v2", "v3"), ("γ", "v2", "v4"), ("α2", "v3", "v4"), ("β2", "v3", "v4")],
        )
        .unwrap();
        let f = Framing::declaration_order(&dag, vec![0, 1]).unwrap();
        (dag, f)
    }

    fn path(dag: &Dag, ids: &[&str]) -> Vec<usize> {
        ids.iter().map(|id| dag.edge_by_id(id).unwrap()).collect()
    }

    #[test]
    fn post_order_examples() {
        let (dag, f) = cons();
        let v3 = dag.vertex("v3").unwrap();
        let v2 = dag.vertex("v2").unwrap();
        let cmp = |v, p: &[&str], q: &[&str]| compare_post(&dag, &f, v, &path(&dag, p), &path(&dag, q)).unwrap();
        assert_eq!(cmp(v3, &["α1", "α2"], &["β1", "β2"]), Ordering::Less);
        assert_eq!(cmp(v3, &["α1", "α2"], &["β1", "α2"]), Ordering::Equal);
        assert_eq!(cmp(v2, &["β1", "α2"], &["γ"]), Ordering::Less);
    }

    #[test]
    fn pre_order_examples() {
        let (dag, f) = cons();
        let v3 = dag.vertex("v3").unwrap();
        let cmp = |v, p: &[&str], q: &[&str]| compare_pre(&dag, &f, v, &path(&dag, p), &path(&dag, q));
        assert_eq!(cmp(v3, &["α1", "β2"], &["β1", "β2"]).unwrap(), Ordering::Less);
        assert_eq!(cmp(v3, &["β1", "α2"], &["β1", "β2"]).unwrap(), Ordering::Equal);
        let v4 = dag.vertex("v4").unwrap();
        assert!(matches!(cmp(v4, &["γ"], &["β1", "β2"]), Err(Error::NoPreOrderAtSink(_))));
        let v1 = dag.vertex("v1").unwrap();
        assert!(matches!(
            compare_post(&dag, &f, v1, &path(&dag, &["α1", "α2"]), &path(&dag, &["γ"])),
            Err(Error::VertexNotShared(_))
        ));
    }

    #[test]
    fn cons_crossing_pair() {
        let (dag, f) = cons();
        let p = Route::from_ids(&dag, &["α1", "β2"]).unwrap();
        let q = Route::from_ids(&dag, &["β1", "α2"]).unwrap();
        assert!(!routes_compatible(&dag, &f, &p, &q).unwrap());
        assert_eq!(incompatibility_witness(&dag, &f, p.edges(), q.edges()).unwrap(), Some(2));
        for r in enumerate_routes(&dag) {
            assert!(routes_compatible(&dag, &f, &r, &r).unwrap());
        }
        assert!(is_route_clique(&dag, &f, &[]).unwrap());
    }

    #[test]
    fn conservationist_shape_is_checked() {
        let (dag, f) = cons();
        f.check_conservationist(&dag).unwrap();
        let partial = Framing::new(&dag, vec![], vec![(0, vec![0])], vec![0, 1]).unwrap();
        assert!(partial.check_conservationist(&dag).is_err());
        let wrong_sources = f.with_source_order(&dag, vec![0]).unwrap();
        assert!(wrong_sources.check_conservationist(&dag).is_err());
        assert!(Framing::new(&dag, vec![(2, vec![0])], vec![], vec![]).is_err());
        assert!(Framing::new(&dag, vec![], vec![], vec![0, 0]).is_err());
    }

    #[test]
    fn embedding_orders_and_ties() {
        let dag = Dag::new(&["s", "t"], &[("e", "s", "t")]).unwrap();
        let mut emb = Embedding::default();
        emb.vertex_heights.insert(0, int(0));
        emb.edge_heights.insert(0, (int(0), int(0)));
        let f = framing_from_embedding(&dag, &emb, &[0]).unwrap();
        assert_eq!(f.out_order(0), Some(&[0][..]));

        let par = Dag::new(&["s", "t"], &[("a", "s", "t"), ("b", "s", "t")]).unwrap();
        let mut emb = Embedding::default();
        emb.vertex_heights.insert(0, int(0));
        emb.edge_heights.insert(0, (int(1), int(1)));
        emb.edge_heights.insert(1, (int(1), int(1)));
        assert!(matches!(framing_from_embedding(&par, &emb, &[0]), Err(Error::AmbiguousEmbedding(_))));
        emb.edge_heights.insert(1, (int(0), int(0)));
        let f = framing_from_embedding(&par, &emb, &[0]).unwrap();
        assert_eq!(f.out_order(0), Some(&[1, 0][..]));
    }
}

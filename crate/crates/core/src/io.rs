//! JSON documents and the resolution of a network document into a framed
//! conservationist core.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::augmentation::{
    build_augmentation, conservationist_core, conservationist_core_direct, extend_framing, Augmentation, Core,
    FramedAugmentation, OutflowPolicy,
};
use crate::decomposition::{FramedNetwork, Layering};
use crate::error::{Error, Result};
use crate::framing::{framing_from_embedding, Embedding, Framing};
use crate::graph::{validate, Dag, Netflow, RawEdge, ValidationReport};
use crate::rational::{parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDocument {
    pub id: String,
    pub tail: String,
    pub head: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutflowDocument {
    pub vertex: String,
    pub netflow: i64,
}

/// Orders low to high. Unlisted incident edges and sources are appended in
/// declaration order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FramingDocument {
    #[serde(rename = "in", default)]
    pub in_orders: BTreeMap<String, Vec<String>>,
    #[serde(rename = "out", default)]
    pub out_orders: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub sources: Vec<String>,
}

/// Heights as rational strings: one per vertex, and `[tail, head]` per edge.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingDocument {
    #[serde(default)]
    pub vertices: BTreeMap<String, String>,
    #[serde(default)]
    pub edges: BTreeMap<String, [String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDocument>,
    #[serde(default)]
    pub netflow: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub framing: Option<FramingDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<EmbeddingDocument>,
    /// Heads of the inflow edges, with multiplicity, in inflow order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inflow: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outflow: Option<Vec<OutflowDocument>>,
}

fn parse_error(e: serde_json::Error) -> Error {
    let suffix = format!(" at line {} column {}", e.line(), e.column());
    let message = e.to_string();
    let message = message.strip_suffix(&suffix).unwrap_or(&message);
    Error::Parse(format!("line {} column {}: {message}", e.line(), e.column()))
}

pub fn parse_network(text: &str) -> Result<NetworkDocument> {
    serde_json::from_str(text).map_err(parse_error)
}

pub fn parse_framing(text: &str) -> Result<FramingDocument> {
    serde_json::from_str(text).map_err(parse_error)
}

pub fn parse_embedding(text: &str) -> Result<EmbeddingDocument> {
    serde_json::from_str(text).map_err(parse_error)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FlowValue {
    Text(String),
    Integer(i64),
}

/// A flow as `{edge id: "p/q"}`; plain JSON integers are accepted too.
pub fn parse_flow(text: &str) -> Result<Vec<(String, Rational)>> {
    let raw: BTreeMap<String, FlowValue> = serde_json::from_str(text).map_err(parse_error)?;
    raw.into_iter()
        .map(|(k, v)| {
            let q = match v {
                FlowValue::Text(s) => parse_rational(&s)?,
                FlowValue::Integer(n) => crate::rational::int(n),
            };
            Ok((k, q))
        })
        .collect()
}

/// Edge values in declaration order; unlisted edges carry 0.
pub fn flow_values(dag: &Dag, entries: &[(String, Rational)]) -> Result<Vec<Rational>> {
    let mut out = vec![Rational::default(); dag.edge_count()];
    for (id, q) in entries {
        out[dag.edge_by_id(id)?] = q.clone();
    }
    Ok(out)
}

impl NetworkDocument {
    fn raw_edges(&self) -> Vec<RawEdge> {
        self.edges.iter().map(|e| RawEdge { id: e.id.clone(), tail: e.tail.clone(), head: e.head.clone() }).collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let netflow: Vec<(String, i64)> = self.netflow.iter().map(|(k, v)| (k.clone(), *v)).collect();
        validate(&self.vertices, &self.raw_edges(), &netflow)
    }

    /// The graph and netflow; vertices absent from `netflow` carry 0.
    pub fn build(&self) -> Result<(Dag, Netflow)> {
        let edges: Vec<(&str, &str, &str)> =
            self.edges.iter().map(|e| (e.id.as_str(), e.tail.as_str(), e.head.as_str())).collect();
        let dag = Dag::new(&self.vertices, &edges)?;
        let mut values = vec![0; dag.vertex_count()];
        for (id, &a) in &self.netflow {
            values[dag.vertex(id)?] = a;
        }
        Ok((dag, Netflow(values)))
    }
}

/// How the input is brought into conservationist form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AugmentMode {
    /// Explicit outflow list if given, the input itself if already
    /// conservationist, one outflow edge per sink otherwise.
    Auto,
    /// Use the input as is; it must be conservationist.
    None,
    Single,
    Unary,
}

/// A resolved input, ready for decompositions and triangulation.
#[derive(Debug)]
pub struct Prepared {
    pub base: Dag,
    pub base_netflow: Netflow,
    pub augmentation: Option<Augmentation>,
    pub core: Core,
    pub warnings: Vec<String>,
}

impl Prepared {
    pub fn network(&self) -> Option<&FramedNetwork> {
        self.core.network()
    }
}

type Orders = Vec<(usize, Vec<usize>)>;

fn resolve_orders(dag: &Dag, doc: &FramingDocument) -> Result<(Orders, Orders, Vec<usize>)> {
    let resolve = |m: &BTreeMap<String, Vec<String>>| -> Result<Orders> {
        m.iter()
            .map(|(v, es)| Ok((dag.vertex(v)?, es.iter().map(|e| dag.edge_by_id(e)).collect::<Result<Vec<_>>>()?)))
            .collect()
    };
    let sources = doc.sources.iter().map(|s| dag.vertex(s)).collect::<Result<Vec<_>>>()?;
    Ok((resolve(&doc.in_orders)?, resolve(&doc.out_orders)?, sources))
}

fn embedding_of(dag: &Dag, doc: &EmbeddingDocument) -> Result<Embedding> {
    let mut emb = Embedding::default();
    for (v, h) in &doc.vertices {
        emb.vertex_heights.insert(dag.vertex(v)?, parse_rational(h)?);
    }
    for (e, [t, h]) in &doc.edges {
        emb.edge_heights.insert(dag.edge_by_id(e)?, (parse_rational(t)?, parse_rational(h)?));
    }
    Ok(emb)
}

/// Sorts every vertex's incident edges by attachment height, which yields
/// partial orders for [`extend_framing`].
fn orders_from_embedding(dag: &Dag, emb: &Embedding) -> Result<(Orders, Orders)> {
    let sorted = |v: usize, edges: &[usize], at_head: bool| -> Result<Vec<usize>> {
        let mut keyed = Vec::new();
        for &e in edges {
            let (t, h) = emb
                .edge_heights
                .get(&e)
                .ok_or_else(|| Error::AmbiguousEmbedding(format!("no height for edge `{}`", dag.edge_id(e))))?;
            keyed.push((if at_head { h } else { t }, e));
        }
        keyed.sort();
        if keyed.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::AmbiguousEmbedding(format!("tied heights at `{}`", dag.vertex_id(v))));
        }
        Ok(keyed.into_iter().map(|(_, e)| e).collect())
    };
    let mut ins = Vec::new();
    let mut outs = Vec::new();
    for v in 0..dag.vertex_count() {
        if !dag.in_edges(v).is_empty() {
            ins.push((v, sorted(v, dag.in_edges(v), true)?));
        }
        if !dag.out_edges(v).is_empty() {
            outs.push((v, sorted(v, dag.out_edges(v), false)?));
        }
    }
    Ok((ins, outs))
}

fn positive_by_height(dag: &Dag, netflow: &Netflow, emb: &Embedding) -> Result<Vec<usize>> {
    let mut keyed = Vec::new();
    for v in (0..dag.vertex_count()).filter(|&v| netflow.get(v) > 0) {
        let h = emb
            .vertex_heights
            .get(&v)
            .ok_or_else(|| Error::AmbiguousEmbedding(format!("no height for vertex `{}`", dag.vertex_id(v))))?;
        keyed.push((h, v));
    }
    keyed.sort();
    if keyed.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::AmbiguousEmbedding("tied source heights".into()));
    }
    Ok(keyed.into_iter().map(|(_, v)| v).collect())
}

/// Completes partial orders on a conservationist graph without augmenting.
fn complete_direct(dag: &Dag, ins: &Orders, outs: &Orders, sources: &[usize]) -> Result<Framing> {
    fn complete(given: Option<&Vec<usize>>, incident: &[usize]) -> Vec<usize> {
        let mut order: Vec<usize> = given.cloned().unwrap_or_default();
        let rest: Vec<usize> = incident.iter().copied().filter(|e| !order.contains(e)).collect();
        order.extend(rest);
        order
    }
    fn find(m: &Orders, v: usize) -> Option<&Vec<usize>> {
        m.iter().find(|(u, _)| *u == v).map(|(_, o)| o)
    }
    let mut in_orders = Vec::new();
    let mut out_orders = Vec::new();
    for v in 0..dag.vertex_count() {
        if dag.is_sink(v) {
            if find(ins, v).is_some() {
                return Err(Error::InvalidFraming(format!("no in-order allowed at sink `{}`", dag.vertex_id(v))));
            }
            continue;
        }
        out_orders.push((v, complete(find(outs, v), dag.out_edges(v))));
        if !dag.is_source(v) {
            in_orders.push((v, complete(find(ins, v), dag.in_edges(v))));
        } else if find(ins, v).is_some() {
            return Err(Error::InvalidFraming(format!("no in-order allowed at source `{}`", dag.vertex_id(v))));
        }
    }
    let mut order = sources.to_vec();
    order.extend(dag.sources().into_iter().filter(|s| !sources.contains(s)));
    Framing::new(dag, in_orders, out_orders, order)
}

/// Builds the framed core a document describes. At most one of `framing`
/// and `embedding` may be present; with neither, declaration order is used
/// and a warning recorded. Framing entries name base identifiers or, for
/// sources, generated inflow vertices.
pub fn prepare(doc: &NetworkDocument, mode: AugmentMode) -> Result<Prepared> {
    let (dag, netflow) = doc.build()?;
    let mut warnings = Vec::new();
    if doc.framing.is_some() && doc.embedding.is_some() {
        return Err(Error::InvalidFraming("give either a framing or an embedding, not both".into()));
    }
    if doc.framing.is_none() && doc.embedding.is_none() {
        warnings.push("no framing given; using declaration order".to_string());
    }
    let direct = match mode {
        AugmentMode::None => true,
        AugmentMode::Auto => doc.outflow.is_none() && doc.inflow.is_none() && netflow.is_conservationist(&dag),
        AugmentMode::Single | AugmentMode::Unary => false,
    };
    if direct {
        if doc.outflow.is_some() || doc.inflow.is_some() {
            return Err(Error::InvalidAugmentation("inflow/outflow lists need an augmentation mode".into()));
        }
        let framing = if let Some(emb) = &doc.embedding {
            framing_from_embedding(&dag, &embedding_of(&dag, emb)?, &dag.sources())?
        } else {
            let (ins, outs, sources) = resolve_orders(&dag, &doc.framing.clone().unwrap_or_default())?;
            complete_direct(&dag, &ins, &outs, &sources)?
        };
        let core = conservationist_core_direct(&dag, &netflow, &framing)?;
        return Ok(Prepared { base: dag, base_netflow: netflow, augmentation: None, core, warnings });
    }

    let policy = match (mode, &doc.outflow) {
        (AugmentMode::Single, _) => OutflowPolicy::SingleEdgePerSink,
        (AugmentMode::Unary, _) => OutflowPolicy::UnaryEdges,
        (_, Some(list)) => OutflowPolicy::Explicit(
            list.iter().map(|o| Ok((dag.vertex(&o.vertex)?, o.netflow))).collect::<Result<Vec<_>>>()?,
        ),
        (_, None) => OutflowPolicy::SingleEdgePerSink,
    };
    if doc.outflow.is_some() && matches!(mode, AugmentMode::Single | AugmentMode::Unary) {
        warnings.push("explicit outflow list ignored in favour of --augment".to_string());
    }
    let inflow = doc.inflow.as_ref().map(|l| l.iter().map(|v| dag.vertex(v)).collect::<Result<Vec<_>>>()).transpose()?;
    let aug = build_augmentation(&dag, &netflow, &policy, inflow.as_deref())?;
    let hat = aug.hat();
    let (ins, outs, sources) = if let Some(emb) = &doc.embedding {
        let emb = embedding_of(&dag, emb)?;
        let (ins, outs) = orders_from_embedding(&dag, &emb)?;
        (ins, outs, positive_by_height(&dag, &netflow, &emb)?)
    } else {
        resolve_orders(hat, &doc.framing.clone().unwrap_or_default())?
    };
    // Base sinks that keep no outflow edge stay sinks and take no in-order.
    let ins: Orders = ins.into_iter().filter(|(v, _)| !hat.is_sink(*v)).collect();
    let framing = extend_framing(&aug, &ins, &outs, &sources)?;
    let fa = FramedAugmentation::new(aug.clone(), framing)?;
    let core = conservationist_core(&fa)?;
    Ok(Prepared { base: dag, base_netflow: netflow, augmentation: Some(aug), core, warnings })
}

/// Routes of a layering as edge-id lists, in source order.
pub fn layering_ids(net: &FramedNetwork, layering: &Layering) -> Vec<Vec<String>> {
    layering.routes().iter().map(|&r| net.route(r).ids(net.dag())).collect()
}

/// Nonzero entries of a vector keyed by edge id, in declaration order.
pub fn sparse_point(dag: &Dag, values: &[i64]) -> BTreeMap<String, i64> {
    values.iter().enumerate().filter(|(_, &x)| x != 0).map(|(e, &x)| (dag.edge_id(e).to_string(), x)).collect()
}

/// Looks layerings up by their route edge lists.
pub fn layering_lookup(net: &FramedNetwork) -> HashMap<Vec<Vec<String>>, usize> {
    net.enumerate_layerings().iter().enumerate().map(|(i, l)| (layering_ids(net, l), i)).collect()
}

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use flowtri::decomposition::{FramedNetwork, Layering};
use flowtri::error::Error;
use flowtri::graph::enumerate_routes;
use flowtri::io::{
    flow_values, layering_ids, parse_embedding, parse_flow, parse_framing, parse_network, prepare, sparse_point,
    AugmentMode, NetworkDocument, Prepared,
};
use flowtri::oracle::{
    brute_force_maximal_simplices, coverage_audit, ehrhart_table, CoverageReport, BRUTE_FORCE_MAX_LAYERINGS,
};
use flowtri::rational::format_rational;
use flowtri::triangulation::{
    dual_graph, f_vector, flag_check, hasse_check, is_well_ordered, maximal_simplices, unimodularity_check, Triangulation,
};

#[derive(Parser)]
#[command(name = "flowtri", version, about = "Framing triangulations of flow polytopes of DAGs")]
struct Cli {
    /// How to bring the input into conservationist form.
    #[arg(long, global = true, value_enum, default_value_t = Augment::Auto)]
    augment: Augment,

    /// Framing document replacing any framing or embedding in the input.
    #[arg(long, global = true, conflicts_with = "embedding")]
    framing: Option<PathBuf>,

    /// Embedding heights replacing any framing or embedding in the input.
    #[arg(long, global = true)]
    embedding: Option<PathBuf>,

    /// Worker threads; output does not depend on it.
    #[arg(long, global = true, env = "FLOWTRI_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Augment {
    /// Explicit outflow list if present, the input as is if conservationist,
    /// otherwise one outflow edge per sink.
    Auto,
    /// Require a conservationist input.
    None,
    /// One outflow edge per sink.
    Single,
    /// One unit outflow edge per unit of sink demand.
    Unary,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Report acyclicity, identifier integrity and the netflow sum.
    Validate { input: PathBuf },
    /// List every source-to-sink route of the input graph.
    Routes { input: PathBuf },
    /// List the layerings in post-source order.
    Layerings { input: PathBuf },
    /// Decompose a flow into route-cliques and layering-simplices.
    Decompose {
        input: PathBuf,
        /// Flow on the input edges as `{edge id: "p/q"}`.
        #[arg(long)]
        flow: PathBuf,
    },
    /// Enumerate the maximal simplices of the framing triangulation.
    Triangulate {
        input: PathBuf,
        /// Give vertex coordinates on the input edges only.
        #[arg(long)]
        deaugment: bool,
    },
    /// Facet adjacency of the maximal simplices.
    DualGraph {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Structural checks; all of them when none is selected.
    Check {
        input: PathBuf,
        /// Every layering sends each source to the same sink.
        #[arg(long)]
        well_ordered: bool,
        /// Every set of pairwise co-facial layerings lies in one maximal simplex.
        #[arg(long)]
        flag: bool,
        /// Oriented dual graph is a Hasse diagram.
        #[arg(long)]
        hasse: bool,
        /// Every maximal simplex has normalized volume 1.
        #[arg(long)]
        unimodular: bool,
    },
    /// Normalized volume, optionally certified by brute-force oracles.
    Volume {
        input: PathBuf,
        #[arg(long)]
        oracle: bool,
        /// Coverage audit samples with `--oracle`.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Exit status 1 for domain failures, 2 for unusable input.
enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

struct Context {
    mode: AugmentMode,
    framing: Option<PathBuf>,
    embedding: Option<PathBuf>,
}

impl Context {
    fn document(&self, input: &Path) -> Result<NetworkDocument, Failure> {
        let mut doc = parse_network(&read(input)?)?;
        if let Some(path) = &self.framing {
            doc.framing = Some(parse_framing(&read(path)?)?);
            doc.embedding = None;
        }
        if let Some(path) = &self.embedding {
            doc.embedding = Some(parse_embedding(&read(path)?)?);
            doc.framing = None;
        }
        Ok(doc)
    }

    fn prepare(&self, input: &Path) -> Result<Prepared, Failure> {
        let doc = self.document(input)?;
        let prepared = prepare(&doc, self.mode)?;
        for w in &prepared.warnings {
            eprintln!("warning: {w}");
        }
        Ok(prepared)
    }
}

#[derive(Serialize)]
struct EmptyDocument {
    empty: bool,
    dimension: isize,
    message: &'static str,
}

fn empty() -> String {
    json(&EmptyDocument { empty: true, dimension: -1, message: "empty polytope, dimension -1" })
}

fn ids(net: &FramedNetwork, l: &Layering) -> Vec<Vec<String>> {
    layering_ids(net, l)
}

fn validate(ctx: &Context, input: &Path) -> Outcome {
    let report = ctx.document(input)?.validate();
    Ok((json(&report), report.valid))
}

fn routes(ctx: &Context, input: &Path) -> Outcome {
    let (dag, _) = ctx.document(input)?.build()?;
    let routes: Vec<Vec<String>> = enumerate_routes(&dag).iter().map(|r| r.ids(&dag)).collect();
    Ok((json(&serde_json::json!({ "count": routes.len(), "routes": routes })), true))
}

#[derive(Serialize)]
struct LayeringEntry {
    index: usize,
    routes: Vec<Vec<String>>,
    /// Nonzero input-edge values of the lattice point.
    point: BTreeMap<String, i64>,
}

fn layering_entries(p: &Prepared, net: &FramedNetwork, tri_layerings: &[Layering]) -> Vec<LayeringEntry> {
    tri_layerings
        .iter()
        .enumerate()
        .map(|(index, l)| LayeringEntry {
            index,
            routes: ids(net, l),
            point: sparse_point(&p.base, &p.core.to_base(&net.layering_indicator(l))),
        })
        .collect()
}

fn layerings(ctx: &Context, input: &Path) -> Outcome {
    let p = ctx.prepare(input)?;
    let Some(net) = p.network() else { return Ok((empty(), true)) };
    let entries = layering_entries(&p, net, net.enumerate_layerings());
    Ok((json(&serde_json::json!({ "count": entries.len(), "layerings": entries })), true))
}

#[derive(Serialize)]
struct RouteTerm {
    coefficient: String,
    route: Vec<String>,
}

#[derive(Serialize)]
struct LayeringTerm {
    coefficient: String,
    layering: Vec<Vec<String>>,
}

fn decompose(ctx: &Context, input: &Path, flow: &Path) -> Outcome {
    let p = ctx.prepare(input)?;
    let entries = parse_flow(&read(flow)?)?;
    let values = flow_values(&p.base, &entries)?;
    let core_values = p.core.from_base(&values)?;
    let net = p.network().ok_or_else(|| Failure::Domain("empty polytope, dimension -1".into()))?;
    let rc = net.route_clique_decompose(&core_values)?;
    let ls = net.layering_simplex_decompose(&core_values)?;
    let scale = ls.terms.iter().map(|(_, a)| a.clone()).sum();
    let doc = serde_json::json!({
        "scale": format_rational(&scale),
        "route_cliques": rc.terms.iter().map(|(r, a)| RouteTerm {
            coefficient: format_rational(a),
            route: net.route(*r).ids(net.dag()),
        }).collect::<Vec<_>>(),
        "layerings": ls.terms.iter().map(|(l, a)| LayeringTerm {
            coefficient: format_rational(a),
            layering: ids(net, l),
        }).collect::<Vec<_>>(),
    });
    Ok((json(&doc), true))
}

fn triangulation(p: &Prepared) -> Result<Option<Triangulation>, Failure> {
    if p.core.is_empty() {
        return Ok(None);
    }
    Ok(Some(maximal_simplices(&p.core)?))
}

#[derive(Serialize)]
struct TriangulationDocument {
    empty: bool,
    dimension: isize,
    volume: usize,
    layerings: Vec<Vec<Vec<String>>>,
    /// Vertex coordinates, nonzero entries only.
    coordinates: Vec<BTreeMap<String, i64>>,
    simplex_indices: Vec<Vec<usize>>,
    simplices: Vec<Vec<Vec<Vec<String>>>>,
}

fn triangulate(ctx: &Context, input: &Path, deaugment: bool) -> Outcome {
    let p = ctx.prepare(input)?;
    let (Some(net), Some(tri)) = (p.network(), triangulation(&p)?) else { return Ok((empty(), true)) };
    let layerings: Vec<Vec<Vec<String>>> = tri.layerings().iter().map(|l| ids(net, l)).collect();
    let coordinates = (0..layerings.len())
        .map(|i| {
            let dag = if deaugment { &p.base } else { net.dag() };
            sparse_point(dag, tri.vertex_coordinates(i, deaugment))
        })
        .collect();
    let doc = TriangulationDocument {
        empty: false,
        dimension: tri.dimension(),
        volume: tri.volume(),
        simplices: tri.simplices().iter().map(|s| s.iter().map(|&i| layerings[i].clone()).collect()).collect(),
        simplex_indices: tri.simplices().to_vec(),
        coordinates,
        layerings,
    };
    Ok((json(&doc), true))
}

fn dual(ctx: &Context, input: &Path, format: Format) -> Outcome {
    let p = ctx.prepare(input)?;
    let Some(tri) = triangulation(&p)? else {
        return Ok((if matches!(format, Format::Dot) { "graph {\n}\n".to_string() } else { empty() }, true));
    };
    let g = dual_graph(&tri);
    Ok((if matches!(format, Format::Dot) { g.to_dot() } else { json(&g) }, true))
}

#[derive(Serialize)]
struct CheckReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    well_ordered: Option<bool>,
    /// Source -> terminal sink, when well-ordered.
    #[serde(skip_serializing_if = "Option::is_none")]
    phi: Option<BTreeMap<String, String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    flag: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hasse: Option<bool>,
    /// Whether any orientation of the dual graph is a Hasse diagram; null
    /// when the graph is too large to search.
    #[serde(skip_serializing_if = "Option::is_none")]
    hasse_any_orientation: Option<Option<bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    unimodular: Option<bool>,
    dimension: isize,
    volume: usize,
    f_vector: Vec<usize>,
}

struct Checks {
    well_ordered: bool,
    flag: bool,
    hasse: bool,
    unimodular: bool,
}

fn check(ctx: &Context, input: &Path, mut which: Checks) -> Outcome {
    if !(which.well_ordered || which.flag || which.hasse || which.unimodular) {
        which = Checks { well_ordered: true, flag: true, hasse: true, unimodular: true };
    }
    let p = ctx.prepare(input)?;
    let tri = triangulation(&p)?.unwrap_or_else(Triangulation::empty);
    let mut report = CheckReport {
        well_ordered: None,
        phi: None,
        flag: which.flag.then(|| flag_check(&tri)),
        hasse: None,
        hasse_any_orientation: None,
        unimodular: which.unimodular.then(|| unimodularity_check(&tri)),
        dimension: tri.dimension(),
        volume: tri.volume(),
        f_vector: f_vector(&tri),
    };
    if which.well_ordered {
        let wo = p.network().map(is_well_ordered);
        report.well_ordered = Some(wo.as_ref().is_none_or(|w| w.well_ordered));
        if let (Some(net), Some(map)) = (p.network(), wo.and_then(|w| w.phi)) {
            let dag = net.dag();
            report.phi = Some(map.iter().map(|&(s, t)| (dag.vertex_id(s).into(), dag.vertex_id(t).into())).collect());
        }
    }
    if which.hasse {
        let h = hasse_check(&tri, &dual_graph(&tri));
        report.hasse = Some(h.orientation_is_hasse);
        report.hasse_any_orientation = Some(h.any_orientation);
    }
    Ok((json(&report), true))
}

#[derive(Serialize)]
struct VolumeReport {
    dimension: isize,
    volume: usize,
    f_vector: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleReport>,
}

#[derive(Serialize)]
struct OracleReport {
    /// Integer points of the t-th dilate, t = 0..=dimension.
    ehrhart_counts: Vec<u64>,
    ehrhart_volume: String,
    oracle_agreement: bool,
    /// Null when there are too many layerings for the subset search.
    brute_force_agreement: Option<bool>,
    coverage: CoverageReport,
}

fn volume(ctx: &Context, input: &Path, oracle: bool, samples: usize, seed: u64) -> Outcome {
    let p = ctx.prepare(input)?;
    let tri = triangulation(&p)?.unwrap_or_else(Triangulation::empty);
    let mut report = VolumeReport { dimension: tri.dimension(), volume: tri.volume(), f_vector: f_vector(&tri), oracle: None };
    let mut ok = true;
    if oracle {
        let d = tri.dimension().max(0) as u32;
        let table = ehrhart_table(&p.base, &p.base_netflow, d);
        let ehrhart = if tri.dimension() < 0 {
            0.into()
        } else {
            flowtri::oracle::volume_by_ehrhart(&p.base, &p.base_netflow, tri.dimension())
        };
        let agreement = ehrhart == tri.volume().into();
        let (brute, coverage) = match p.network() {
            Some(net) => {
                let brute = (tri.layerings().len() <= BRUTE_FORCE_MAX_LAYERINGS)
                    .then(|| brute_force_maximal_simplices(net, (tri.dimension() + 1) as usize))
                    .transpose()?
                    .map(|b| b == tri.simplices());
                (brute, coverage_audit(net, &tri, samples, seed))
            }
            None => (Some(true), CoverageReport { samples: 0, passed: 0, failed: 0, failures: vec![] }),
        };
        ok = agreement && brute != Some(false) && coverage.ok();
        report.oracle = Some(OracleReport {
            ehrhart_counts: if tri.dimension() < 0 { vec![] } else { table.counts },
            ehrhart_volume: ehrhart.to_string(),
            oracle_agreement: agreement,
            brute_force_agreement: brute,
            coverage,
        });
    }
    Ok((json(&report), ok))
}

fn run(cli: Cli) -> Outcome {
    let mode = match cli.augment {
        Augment::Auto => AugmentMode::Auto,
        Augment::None => AugmentMode::None,
        Augment::Single => AugmentMode::Single,
        Augment::Unary => AugmentMode::Unary,
    };
    let ctx = Context { mode, framing: cli.framing, embedding: cli.embedding };
    match cli.command {
        Command::Validate { input } => validate(&ctx, &input),
        Command::Routes { input } => routes(&ctx, &input),
        Command::Layerings { input } => layerings(&ctx, &input),
        Command::Decompose { input, flow } => decompose(&ctx, &input, &flow),
        Command::Triangulate { input, deaugment } => triangulate(&ctx, &input, deaugment),
        Command::DualGraph { input, format } => dual(&ctx, &input, format),
        Command::Check { input, well_ordered, flag, hasse, unimodular } => {
            check(&ctx, &input, Checks { well_ordered, flag, hasse, unimodular })
        }
        Command::Volume { input, oracle, samples, seed } => volume(&ctx, &input, oracle, samples, seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok((out, ok)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

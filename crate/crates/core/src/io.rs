//! File formats.
//!
//! Graph JSON: `{"n": 3, "edges": [[0, 1], [0, 2], [1, 2]]}` with 0-based indices,
//! each edge written as `[i, j]` with `i < j`, sorted lexicographically.
//!
//! Network JSON: `{"dim": 2, "graph": {...}, "positions": [[x, y], ...]}` with
//! every coordinate written to 17 significant digits so values round-trip exactly.
//!
//! Trace JSON: `{"n": 8, "steps": [{"op": "vertex_addition", "v": 2, "i": 0, "j": 1}, ...]}`.
//!
//! Every writer accepts an optional extra object stored under `"manifest"`;
//! readers ignore unknown keys.

use std::fmt::Write as _;

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{Graph, HennebergTrace};
use crate::rigidity::{Configuration, Network};

#[derive(Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Deserialize)]
struct NetworkFile {
    dim: usize,
    graph: GraphFile,
    positions: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
struct TraceFile {
    n: Option<usize>,
    #[serde(flatten)]
    trace: HennebergTrace,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

impl GraphFile {
    fn into_graph(self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.into_iter().map(|[i, j]| (i, j)))
    }
}

fn edges_inline(g: &Graph) -> String {
    let parts: Vec<String> = g.edges().map(|(i, j)| format!("[{i}, {j}]")).collect();
    format!("[{}]", parts.join(", "))
}

fn graph_inline(g: &Graph) -> String {
    format!("{{\"n\": {}, \"edges\": {}}}", g.n(), edges_inline(g))
}

fn push_manifest(out: &mut String, manifest: Option<&Value>) {
    if let Some(m) = manifest {
        let text = serde_json::to_string_pretty(m).expect("JSON values always serialize");
        let indented = text.replace('\n', "\n  ");
        let _ = write!(out, ",\n  \"manifest\": {indented}");
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    serde_json::from_str::<GraphFile>(text)
        .map_err(parse_err)?
        .into_graph()
}

pub fn write_graph(g: &Graph, manifest: Option<&Value>) -> String {
    let mut out = format!("{{\n  \"n\": {},\n  \"edges\": {}", g.n(), edges_inline(g));
    push_manifest(&mut out, manifest);
    out.push_str("\n}\n");
    out
}

/// 17 significant digits in scientific notation.
pub fn format_coordinate(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn parse_network(text: &str) -> Result<Network> {
    let file: NetworkFile = serde_json::from_str(text).map_err(parse_err)?;
    let graph = file.graph.into_graph()?;
    if file.positions.len() != graph.n() {
        return Err(Error::invalid(format!(
            "graph has {} vertices but {} positions were given",
            graph.n(),
            file.positions.len()
        )));
    }
    let config = Configuration::new(file.dim, &file.positions)?;
    Network::new(graph, config)
}

pub fn write_network(net: &Network, manifest: Option<&Value>) -> String {
    let mut out = format!(
        "{{\n  \"dim\": {},\n  \"graph\": {},\n  \"positions\": [",
        net.dim(),
        graph_inline(&net.graph)
    );
    for (idx, p) in net.config.points().enumerate() {
        let coords: Vec<String> = p.iter().map(|&x| format_coordinate(x)).collect();
        let sep = if idx == 0 { "" } else { "," };
        let _ = write!(out, "{sep}\n    [{}]", coords.join(", "));
    }
    out.push_str("\n  ]");
    push_manifest(&mut out, manifest);
    out.push_str("\n}\n");
    out
}

pub fn parse_trace(text: &str) -> Result<HennebergTrace> {
    let file: TraceFile = serde_json::from_str(text).map_err(parse_err)?;
    if let Some(n) = file.n {
        if n != file.trace.n() {
            return Err(Error::invalid(format!(
                "trace declares n = {n} but has {} steps",
                file.trace.steps.len()
            )));
        }
    }
    Ok(file.trace)
}

pub fn write_trace(trace: &HennebergTrace, manifest: Option<&Value>) -> String {
    let mut out = format!("{{\n  \"n\": {},\n  \"steps\": [", trace.n());
    for (idx, step) in trace.steps.iter().enumerate() {
        let sep = if idx == 0 { "" } else { "," };
        let step = serde_json::to_string(step).expect("steps always serialize");
        let _ = write!(out, "{sep}\n    {step}");
    }
    out.push_str(if trace.steps.is_empty() { "]" } else { "\n  ]" });
    push_manifest(&mut out, manifest);
    out.push_str("\n}\n");
    out
}

/// Undirected DOT with vertices `0..n` and one line per edge in sorted order.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n  node [shape=circle];\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (i, j) in g.edges() {
        let _ = writeln!(out, "  {i} -- {j};");
    }
    out.push_str("}\n");
    out
}

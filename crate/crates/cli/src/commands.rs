use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde_json::{json, Value};
use thiserror::Error;

use bearing_core::graph::is_laman_bruteforce;
use bearing_core::io::{
    parse_graph, parse_network, parse_trace, to_dot, write_graph, write_network, write_trace,
};
use bearing_core::repro::reproduce;
use bearing_core::{
    henneberg_generate, is_bearing_rigid, is_laman_pebble, test_generic_rigidity, Graph,
};

use crate::manifest::RunManifest;
use crate::{Cli, Command, MethodArg};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        source: bearing_core::Error,
    },
    #[error(transparent)]
    Core(#[from] bearing_core::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Positive,
    Negative,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::Positive
        } else {
            Verdict::Negative
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load<T>(path: &Path, parse: fn(&str) -> bearing_core::Result<T>) -> Result<T> {
    parse(&read(path)?).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })
}

struct Ctx<'a> {
    cli: &'a Cli,
    start: Instant,
}

impl Ctx<'_> {
    /// Prints `body` with the timed manifest prepended, unless `--quiet`.
    fn report(&self, manifest: &RunManifest, body: Value) {
        if self.cli.quiet {
            return;
        }
        let mut out = serde_json::Map::new();
        out.insert(
            "manifest".into(),
            manifest.timed(self.start.elapsed()).to_value(),
        );
        if let Value::Object(fields) = body {
            out.extend(fields);
        }
        let text =
            serde_json::to_string_pretty(&Value::Object(out)).expect("reports always serialize");
        emit(&(text + "\n"));
    }

    fn note(&self, msg: &str) {
        if !self.cli.quiet {
            eprintln!("{msg}");
        }
    }
}

pub fn run(cli: &Cli) -> Result<Verdict> {
    let policy = cli.policy()?;
    let ctx = Ctx {
        cli,
        start: Instant::now(),
    };
    match &cli.command {
        Command::Laman { graph, method } => {
            let g = load(graph, parse_graph)?;
            let cert = match method {
                MethodArg::Brute => is_laman_bruteforce(&g)?,
                MethodArg::Pebble | MethodArg::Auto => is_laman_pebble(&g),
            };
            let manifest = RunManifest::new("laman", None, policy);
            ctx.report(
                &manifest,
                json!({"n": g.n(), "edges": g.edge_count(), "laman": cert.verdict, "certificate": cert}),
            );
            Ok(cert.verdict.into())
        }

        Command::Generate {
            n,
            seed,
            op_mix,
            out,
            trace,
        } => {
            let (g, steps) = henneberg_generate(*n, *seed, *op_mix)?;
            let manifest = RunManifest::new("generate", Some(*seed), policy);
            write(out, &write_graph(&g, Some(&manifest.to_value())))?;
            if let Some(path) = trace {
                write(path, &write_trace(&steps, Some(&manifest.to_value())))?;
            }
            let laman = is_laman_pebble(&g).verdict;
            ctx.report(
                &manifest,
                json!({
                    "n": g.n(),
                    "edges": g.edge_count(),
                    "laman": laman,
                    "graph_file": out,
                    "trace_file": trace,
                    "steps": steps.steps.len(),
                }),
            );
            Ok(laman.into())
        }

        Command::Replay { trace, out } => {
            let steps = load(trace, parse_trace)?;
            let g = steps.replay()?;
            let manifest = RunManifest::new("replay", None, policy);
            if let Some(path) = out {
                write(path, &write_graph(&g, Some(&manifest.to_value())))?;
            }
            let laman = is_laman_pebble(&g).verdict;
            ctx.report(
                &manifest,
                json!({"n": g.n(), "edges": g.edge_count(), "laman": laman, "graph": edge_list(&g)}),
            );
            Ok(laman.into())
        }

        Command::Rigidity { network } => {
            let net = load(network, parse_network)?;
            let report = is_bearing_rigid(&net, policy)?;
            let manifest = RunManifest::new("rigidity", None, policy);
            ctx.report(
                &manifest,
                json!({"n": net.n(), "dim": net.dim(), "edges": net.graph.edge_count(), "report": report}),
            );
            Ok(report.rigid.into())
        }

        Command::Generic {
            graph,
            dim,
            samples,
            seed,
        } => {
            let g = load(graph, parse_graph)?;
            let verdict = test_generic_rigidity(&g, *dim, *samples, *seed, policy)?;
            let manifest = RunManifest::new("generic", Some(*seed), policy);
            let note = if verdict.is_generically_rigid() {
                "certified by a rigid sample"
            } else {
                "sampled evidence only; absence of a rigid sample is not a proof"
            };
            ctx.report(&manifest, json!({"verdict": verdict, "note": note}));
            Ok(verdict.is_generically_rigid().into())
        }

        Command::Repro {
            figure,
            out_dir,
            seed,
        } => {
            let report = reproduce((*figure).into(), *seed, policy)?;
            let manifest = RunManifest::new("repro", Some(*seed), policy);
            fs::create_dir_all(out_dir).map_err(|source| CliError::Io {
                path: out_dir.clone(),
                source,
            })?;
            let mut files = Vec::new();
            for panel in &report.panels {
                let dot = out_dir.join(format!("{}.dot", panel.name));
                write(&dot, &to_dot(&panel.graph, &panel.name.replace('-', "_")))?;
                files.push(dot);
                if let Some(net) = &panel.network {
                    let path = out_dir.join(format!("{}.network.json", panel.name));
                    write(&path, &write_network(net, Some(&manifest.to_value())))?;
                    files.push(path);
                }
            }
            for c in &report.checks {
                ctx.note(&format!(
                    "{} {:<36} {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                ));
            }
            let mut summary = serde_json::to_value(&report).expect("reports always serialize");
            summary["passed"] = json!(report.passed());
            summary["files"] = json!(files);
            let mut with_manifest = summary.clone();
            with_manifest["manifest"] = manifest.to_value();
            let path = out_dir.join(format!("{}-summary.json", report.figure));
            write(
                &path,
                &(serde_json::to_string_pretty(&with_manifest).expect("reports always serialize")
                    + "\n"),
            )?;
            ctx.report(&manifest, summary);
            Ok(report.passed().into())
        }

        Command::ExportDot { graph, out } => {
            let g = load(graph, parse_graph)?;
            let dot = to_dot(&g, "G");
            match out {
                Some(path) => write(path, &dot)?,
                None => emit(&dot),
            }
            Ok(Verdict::Positive)
        }
    }
}

/// Writes to standard output; a closed pipe is not an error worth dying over.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn edge_list(g: &Graph) -> Value {
    json!(g.edges().map(|(i, j)| [i, j]).collect::<Vec<_>>())
}

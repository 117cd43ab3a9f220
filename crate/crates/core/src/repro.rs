//! Rebuilds the worked examples: the path/triangle pair, the eight-vertex
//! Henneberg construction and the 4-cycle that is rigid in space but not in the plane.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_laman_bruteforce, is_laman_pebble, Graph, HennebergStep, HennebergTrace};
use crate::linalg::TolPolicy;
use crate::rigidity::{
    is_bearing_rigid, random_configuration, test_generic_rigidity, Configuration, GenericOutcome,
    Network,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    Fig1,
    Fig3,
    Fig5,
}

impl Figure {
    pub const ALL: [Figure; 3] = [Figure::Fig1, Figure::Fig3, Figure::Fig5];

    pub fn name(self) -> &'static str {
        match self {
            Figure::Fig1 => "fig1",
            Figure::Fig3 => "fig3",
            Figure::Fig5 => "fig5",
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Figure::ALL
            .into_iter()
            .find(|fig| fig.name() == s)
            .ok_or_else(|| {
                Error::invalid(format!("unknown figure '{s}', expected fig1, fig3 or fig5"))
            })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// One drawable piece of a figure: a graph, optionally with coordinates.
#[derive(Debug, Clone)]
pub struct Panel {
    pub name: String,
    pub graph: Graph,
    pub network: Option<Network>,
}

impl Panel {
    fn graph(name: &str, graph: Graph) -> Self {
        Panel {
            name: name.to_string(),
            graph,
            network: None,
        }
    }

    fn network(name: &str, network: Network) -> Self {
        Panel {
            name: name.to_string(),
            graph: network.graph.clone(),
            network: Some(network),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FigureReport {
    pub figure: &'static str,
    pub seed: u64,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub panels: Vec<Panel>,
}

impl FigureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn reproduce(figure: Figure, seed: u64, policy: TolPolicy) -> Result<FigureReport> {
    let (checks, panels) = match figure {
        Figure::Fig1 => path_and_triangle(seed, policy)?,
        Figure::Fig3 => eight_vertex_construction(seed, policy)?,
        Figure::Fig5 => four_cycle(seed, policy)?,
    };
    Ok(FigureReport {
        figure: figure.name(),
        seed,
        checks,
        panels,
    })
}

fn network(graph: Graph, d: usize, points: &[Vec<f64>]) -> Result<Network> {
    Network::new(graph, Configuration::new(d, points)?)
}

fn rank_detail(net: &Network, policy: TolPolicy) -> Result<(bool, usize, usize)> {
    let r = is_bearing_rigid(net, policy)?;
    Ok((r.rigid, r.rank, r.target_rank))
}

fn path_and_triangle(seed: u64, policy: TolPolicy) -> Result<(Vec<Check>, Vec<Panel>)> {
    let mut checks = Vec::new();

    let path = Graph::path(3);
    let v = test_generic_rigidity(&path, 2, 50, seed, policy)?;
    checks.push(Check::new(
        "path-no-rigid-sample",
        v.verdict == GenericOutcome::NoRigidSampleFound && v.samples_tested == 50,
        format!(
            "{} of {} planar samples rigid",
            v.samples_rigid, v.samples_tested
        ),
    ));

    let triangle = Graph::complete(3);
    let v = test_generic_rigidity(&triangle, 2, 1, seed, policy)?;
    checks.push(Check::new(
        "triangle-rigid-first-draw",
        v.first_rigid_sample == Some(0),
        format!("first rigid sample: {:?}", v.first_rigid_sample),
    ));

    let drawn = network(
        triangle.clone(),
        2,
        &[vec![-2.0, 0.0], vec![2.0, 0.0], vec![0.0, 2.0]],
    )?;
    let (rigid, rank, target) = rank_detail(&drawn, policy)?;
    checks.push(Check::new(
        "triangle-drawn-rigid",
        rigid,
        format!("rank {rank}/{target}"),
    ));

    let collinear = network(
        triangle.clone(),
        2,
        &[vec![0.0, 0.0], vec![1.0, 0.0], vec![2.0, 0.0]],
    )?;
    let (rigid, rank, target) = rank_detail(&collinear, policy)?;
    checks.push(Check::new(
        "triangle-collinear-not-rigid",
        !rigid && rank == 2,
        format!("rank {rank}/{target}"),
    ));

    let drawn_collinear = network(
        triangle,
        2,
        &[vec![-2.0, 0.0], vec![2.0, 0.0], vec![0.0, 0.0]],
    )?;
    let (rigid, rank, target) = rank_detail(&drawn_collinear, policy)?;
    checks.push(Check::new(
        "triangle-drawn-collinear-not-rigid",
        !rigid,
        format!("rank {rank}/{target}"),
    ));

    let panels = vec![
        Panel::graph("fig1a-path", path),
        Panel::network("fig1b-triangle", drawn),
        Panel::network("fig1b-collinear", drawn_collinear),
    ];
    Ok((checks, panels))
}

/// The six steps that grow the seed edge into the eight-vertex graph.
pub fn eight_vertex_trace() -> HennebergTrace {
    use HennebergStep::{EdgeSplitting as S, VertexAddition as A};
    HennebergTrace {
        steps: vec![
            A { v: 2, i: 0, j: 1 },
            S {
                v: 3,
                i: 1,
                j: 2,
                k: 0,
            },
            S {
                v: 4,
                i: 0,
                j: 3,
                k: 1,
            },
            S {
                v: 5,
                i: 1,
                j: 4,
                k: 0,
            },
            S {
                v: 6,
                i: 0,
                j: 5,
                k: 1,
            },
            S {
                v: 7,
                i: 1,
                j: 6,
                k: 2,
            },
        ],
    }
}

/// Vertices of the unit cube in the order the eight-vertex construction labels them.
pub fn cube_positions() -> Vec<Vec<f64>> {
    vec![
        vec![0.0, 1.0, 0.0],
        vec![1.0, 0.0, 1.0],
        vec![0.0, 1.0, 1.0],
        vec![1.0, 1.0, 1.0],
        vec![1.0, 1.0, 0.0],
        vec![1.0, 0.0, 0.0],
        vec![0.0, 0.0, 0.0],
        vec![0.0, 0.0, 1.0],
    ]
}

fn eight_vertex_construction(seed: u64, policy: TolPolicy) -> Result<(Vec<Check>, Vec<Panel>)> {
    let mut checks = Vec::new();
    let trace = eight_vertex_trace();
    let graphs = trace.replay_all()?;
    checks.push(Check::new(
        "trace-replays",
        graphs.len() == 7,
        format!("{} steps, {} graphs", trace.steps.len(), graphs.len()),
    ));

    for (t, g) in graphs.iter().enumerate() {
        let pebble = is_laman_pebble(g);
        let brute = is_laman_bruteforce(g)?;
        checks.push(Check::new(
            format!("step-{t}-laman"),
            pebble.verdict && brute.verdict,
            format!("n = {}, |E| = {}", g.n(), g.edge_count()),
        ));
    }

    let last = graphs.last().expect("replay_all yields the seed graph");
    checks.push(Check::new(
        "final-size",
        last.n() == 8 && last.edge_count() == 13,
        format!("n = {}, |E| = {}", last.n(), last.edge_count()),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = Network::new(last.clone(), random_configuration(&mut rng, 8, 3)?)?;
    let (rigid, rank, target) = rank_detail(&random, policy)?;
    checks.push(Check::new(
        "final-rigid-random-r3",
        rigid && rank == 20,
        format!("rank {rank}/{target}"),
    ));

    let cube = network(last.clone(), 3, &cube_positions())?;
    let (rigid, rank, target) = rank_detail(&cube, policy)?;
    checks.push(Check::new(
        "final-rigid-cube",
        rigid,
        format!("rank {rank}/{target}"),
    ));

    let mut panels: Vec<Panel> = graphs
        .iter()
        .enumerate()
        .map(|(t, g)| Panel::graph(&format!("fig3-step{t}"), g.clone()))
        .collect();
    panels.push(Panel::network("fig3-cube", cube));
    Ok((checks, panels))
}

fn four_cycle(seed: u64, policy: TolPolicy) -> Result<(Vec<Check>, Vec<Panel>)> {
    let mut checks = Vec::new();
    let cycle = Graph::cycle(4);

    let v = test_generic_rigidity(&cycle, 2, 50, seed, policy)?;
    checks.push(Check::new(
        "planar-no-rigid-sample",
        v.verdict == GenericOutcome::NoRigidSampleFound && v.samples_tested == 50,
        format!(
            "{} of {} planar samples rigid",
            v.samples_rigid, v.samples_tested
        ),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut flat_rigid = 0;
    for _ in 0..20 {
        let planar = random_configuration(&mut rng, 4, 2)?;
        let lifted = planar
            .points()
            .map(|p| vec![p[0], p[1], 0.0])
            .collect::<Vec<_>>();
        let net = network(cycle.clone(), 3, &lifted)?;
        flat_rigid += usize::from(is_bearing_rigid(&net, policy)?.rigid);
    }
    checks.push(Check::new(
        "planar-in-r3-no-rigid-sample",
        flat_rigid == 0,
        format!("{flat_rigid} of 20 samples with z = 0 rigid"),
    ));

    let random = Network::new(cycle.clone(), random_configuration(&mut rng, 4, 3)?)?;
    let (rigid, rank, target) = rank_detail(&random, policy)?;
    checks.push(Check::new(
        "random-r3-rank-8",
        rigid && rank == 8,
        format!("rank {rank}/{target}"),
    ));

    let flat = network(
        cycle.clone(),
        2,
        &[
            vec![1.4, 0.0],
            vec![1.4, 3.0],
            vec![0.0, 3.0],
            vec![0.0, 0.0],
        ],
    )?;
    let (rigid, rank, target) = rank_detail(&flat, policy)?;
    checks.push(Check::new(
        "drawn-planar-not-rigid",
        !rigid,
        format!("rank {rank}/{target}"),
    ));

    let raised = network(
        cycle,
        3,
        &[
            vec![1.4, 0.0, 0.0],
            vec![1.4, 3.0, 0.0],
            vec![0.0, 3.0, 0.0],
            vec![0.0, 0.0, 2.0],
        ],
    )?;
    let (rigid, rank, target) = rank_detail(&raised, policy)?;
    checks.push(Check::new(
        "drawn-r3-rank-8",
        rigid && rank == 8,
        format!("rank {rank}/{target}"),
    ));

    let panels = vec![
        Panel::network("fig5a-planar", flat),
        Panel::network("fig5b-spatial", raised),
    ];
    Ok((checks, panels))
}

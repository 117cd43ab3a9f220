use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// One Henneberg move. The new vertex `v` must be the next free label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum HennebergStep {
    /// Connect `v` to `i` and `j`.
    VertexAddition { v: usize, i: usize, j: usize },
    /// Connect `v` to `i`, `j`, `k` and delete the edge `(i, j)`.
    EdgeSplitting {
        v: usize,
        i: usize,
        j: usize,
        k: usize,
    },
}

impl HennebergStep {
    pub fn new_vertex(&self) -> usize {
        match *self {
            HennebergStep::VertexAddition { v, .. } | HennebergStep::EdgeSplitting { v, .. } => v,
        }
    }
}

/// Sequence of moves applied to the seed graph `K2` on vertices `{0, 1}`.
///
/// Step `t` introduces vertex `t + 2`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HennebergTrace {
    pub steps: Vec<HennebergStep>,
}

impl HennebergTrace {
    pub fn seed_graph() -> Graph {
        Graph::complete(2)
    }

    /// Final vertex count.
    pub fn n(&self) -> usize {
        self.steps.len() + 2
    }

    /// Replays the trace from `K2`, returning every intermediate graph
    /// (the seed first, the final graph last).
    pub fn replay_all(&self) -> Result<Vec<Graph>> {
        let mut graphs = vec![Self::seed_graph()];
        for step in &self.steps {
            let next = henneberg_apply(graphs.last().unwrap(), step)?;
            graphs.push(next);
        }
        Ok(graphs)
    }

    pub fn replay(&self) -> Result<Graph> {
        let mut g = Self::seed_graph();
        for step in &self.steps {
            g = henneberg_apply(&g, step)?;
        }
        Ok(g)
    }
}

/// Applies one Henneberg move to `g`.
pub fn henneberg_apply(g: &Graph, step: &HennebergStep) -> Result<Graph> {
    let n = g.n();
    let v = step.new_vertex();
    if v != n {
        return Err(Error::InvalidStep(format!(
            "new vertex must be labeled {n}, got {v}"
        )));
    }
    let in_range = |x: usize| {
        if x < n {
            Ok(())
        } else {
            Err(Error::InvalidStep(format!("vertex {x} does not exist")))
        }
    };

    let mut out = g.clone();
    out.add_vertex();
    match *step {
        HennebergStep::VertexAddition { i, j, .. } => {
            in_range(i)?;
            in_range(j)?;
            if i == j {
                return Err(Error::InvalidStep(format!(
                    "vertex addition needs two distinct vertices, got {i} twice"
                )));
            }
            out.add_edge(v, i)?;
            out.add_edge(v, j)?;
        }
        HennebergStep::EdgeSplitting { i, j, k, .. } => {
            in_range(i)?;
            in_range(j)?;
            in_range(k)?;
            if i == j || j == k || i == k {
                return Err(Error::InvalidStep(format!(
                    "edge splitting needs distinct vertices, got ({i}, {j}, {k})"
                )));
            }
            if !g.has_edge(i, j) {
                return Err(Error::InvalidStep(format!(
                    "edge ({i}, {j}) is not present"
                )));
            }
            out.remove_edge(i, j)?;
            out.add_edge(v, i)?;
            out.add_edge(v, j)?;
            out.add_edge(v, k)?;
        }
    }
    Ok(out)
}

/// Grows a random Laman graph on `n` vertices from `K2`.
///
/// At each step an edge splitting is chosen with probability `op_mix` once at
/// least three vertices exist; otherwise a vertex addition is applied. Vertices
/// and edges are drawn uniformly from a ChaCha8 stream seeded with `seed`.
pub fn henneberg_generate(n: usize, seed: u64, op_mix: f64) -> Result<(Graph, HennebergTrace)> {
    if n < 2 {
        return Err(Error::invalid(format!("need at least 2 vertices, got {n}")));
    }
    if !(0.0..=1.0).contains(&op_mix) {
        return Err(Error::invalid(format!(
            "op_mix must lie in [0, 1], got {op_mix}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = HennebergTrace::seed_graph();
    let mut trace = HennebergTrace::default();

    while g.n() < n {
        let v = g.n();
        let split = v >= 3 && g.edge_count() > 0 && rng.random_bool(op_mix);
        let step = if split {
            let edges: Vec<_> = g.edges().collect();
            let (i, j) = edges[rng.random_range(0..edges.len())];
            // k uniform over the other v - 2 vertices
            let mut k = rng.random_range(0..v - 2);
            for skip in [i.min(j), i.max(j)] {
                if k >= skip {
                    k += 1;
                }
            }
            HennebergStep::EdgeSplitting { v, i, j, k }
        } else {
            let i = rng.random_range(0..v);
            let mut j = rng.random_range(0..v - 1);
            if j >= i {
                j += 1;
            }
            HennebergStep::VertexAddition { v, i, j }
        };
        g = henneberg_apply(&g, &step)?;
        trace.steps.push(step);
    }
    Ok((g, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_laman_pebble;

    #[test]
    fn first_step_gives_triangle() {
        let g = henneberg_apply(
            &Graph::complete(2),
            &HennebergStep::VertexAddition { v: 2, i: 0, j: 1 },
        )
        .unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn edge_splitting_on_triangle() {
        let g = henneberg_apply(
            &Graph::complete(3),
            &HennebergStep::EdgeSplitting {
                v: 3,
                i: 0,
                j: 1,
                k: 2,
            },
        )
        .unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        );
    }

    #[test]
    fn invalid_steps() {
        let k3 = Graph::complete(3);
        let bad = [
            HennebergStep::VertexAddition { v: 4, i: 0, j: 1 },
            HennebergStep::VertexAddition { v: 3, i: 1, j: 1 },
            HennebergStep::VertexAddition { v: 3, i: 0, j: 5 },
            HennebergStep::EdgeSplitting {
                v: 3,
                i: 0,
                j: 1,
                k: 1,
            },
        ];
        for step in bad {
            assert!(
                matches!(henneberg_apply(&k3, &step), Err(Error::InvalidStep(_))),
                "{step:?}"
            );
        }
        let p3 = Graph::path(3);
        assert!(matches!(
            henneberg_apply(
                &p3,
                &HennebergStep::EdgeSplitting {
                    v: 3,
                    i: 0,
                    j: 2,
                    k: 1
                }
            ),
            Err(Error::InvalidStep(_))
        ));
    }

    #[test]
    fn generate_small_cases() {
        let (g, trace) = henneberg_generate(2, 1, 0.5).unwrap();
        assert_eq!(g, Graph::complete(2));
        assert!(trace.steps.is_empty());
        for seed in 0..20 {
            let (g, _) = henneberg_generate(3, seed, 1.0).unwrap();
            assert_eq!(g, Graph::complete(3));
        }
        assert!(henneberg_generate(1, 0, 0.5).is_err());
        assert!(henneberg_generate(5, 0, 1.5).is_err());
    }

    #[test]
    fn generated_graphs_are_laman_and_replayable() {
        for seed in 0..50 {
            for mix in [0.0, 0.5, 1.0] {
                let (g, trace) = henneberg_generate(8, seed, mix).unwrap();
                assert_eq!(g.edge_count(), 13);
                assert!(is_laman_pebble(&g).verdict);
                assert_eq!(trace.replay().unwrap(), g);
                for (t, step) in trace.steps.iter().enumerate() {
                    assert_eq!(step.new_vertex(), t + 2);
                }
            }
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            henneberg_generate(12, 99, 0.4).unwrap(),
            henneberg_generate(12, 99, 0.4).unwrap()
        );
    }
}

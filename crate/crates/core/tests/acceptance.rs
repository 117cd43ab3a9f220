//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any failed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bearing_core::graph::is_laman_bruteforce;
use bearing_core::linalg::normalized;
use bearing_core::repro::{reproduce, Figure};
use bearing_core::rigidity::{random_configuration, DEFAULT_MAX_ATTEMPTS};
use bearing_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<String, String>;

struct Criterion {
    id: usize,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn figure(fig: Figure, required: &[&str]) -> Outcome {
    let report = reproduce(fig, 0, TolPolicy::default()).map_err(|e| e.to_string())?;
    for name in required {
        let c = report
            .check(name)
            .ok_or_else(|| format!("missing check {name}"))?;
        ensure(c.passed, || format!("{name}: {}", c.detail))?;
    }
    let failed: Vec<_> = report
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| &c.name)
        .collect();
    ensure(failed.is_empty(), || format!("failed checks: {failed:?}"))?;
    Ok(format!("{} checks", report.checks.len()))
}

fn path_and_triangle() -> Outcome {
    figure(
        Figure::Fig1,
        &[
            "path-no-rigid-sample",
            "triangle-rigid-first-draw",
            "triangle-collinear-not-rigid",
        ],
    )
}

fn eight_vertex() -> Outcome {
    let mut required: Vec<String> = (0..7).map(|t| format!("step-{t}-laman")).collect();
    required.push("final-size".into());
    required.push("final-rigid-random-r3".into());
    let names: Vec<&str> = required.iter().map(String::as_str).collect();
    figure(Figure::Fig3, &names)
}

fn four_cycle() -> Outcome {
    figure(
        Figure::Fig5,
        &[
            "planar-no-rigid-sample",
            "planar-in-r3-no-rigid-sample",
            "random-r3-rank-8",
        ],
    )
}

fn random_vector(rng: &mut ChaCha8Rng, d: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..d).map(|_| rng.random_range(-1.0..1.0)).collect();
        if let Some(u) = normalized(&v) {
            if u.iter().all(|x| x.is_finite()) && v.iter().map(|x| x * x).sum::<f64>() > 1e-4 {
                return u;
            }
        }
    }
}

fn random_unit_set(rng: &mut ChaCha8Rng, d: usize, m: usize) -> Vec<Vec<f64>> {
    (0..m).map(|_| random_vector(rng, d)).collect()
}

fn complement_spectrum() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst_dev = 0.0_f64;
    let mut worst_null = 0.0_f64;
    for trial in 0..100 {
        let d = 2 + trial % 3;
        let m = 2 + (trial / 3) % 4;
        let vectors = random_unit_set(&mut rng, d, m);
        let r =
            projection_complement_spectrum(&vectors).map_err(|e| format!("trial {trial}: {e}"))?;
        ensure(r.zeros == m + d && r.ones == d * m - m - d, || {
            format!(
                "trial {trial} (d={d}, m={m}): {} zeros, {} ones",
                r.zeros, r.ones
            )
        })?;
        ensure(r.max_deviation <= 1e-8, || {
            format!(
                "trial {trial}: eigenvalue {} away from {{0, 1}}",
                r.max_deviation
            )
        })?;
        ensure(r.null_basis_residual <= 1e-9, || {
            format!("trial {trial}: H N residual {}", r.null_basis_residual)
        })?;
        worst_dev = worst_dev.max(r.max_deviation);
        worst_null = worst_null.max(r.null_basis_residual);
    }
    Ok(format!(
        "100 trials, max deviation {worst_dev:.1e}, max null residual {worst_null:.1e}"
    ))
}

fn projection_sums() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let policy = TolPolicy::default();
    let mut smallest_general = f64::INFINITY;
    for trial in 0..100 {
        let d = 2 + trial % 3;
        let m = 2 + (trial / 3) % 4;
        let general = random_unit_set(&mut rng, d, m);
        let r = projection_sum_singularity(&general, policy).map_err(|e| e.to_string())?;
        ensure(
            !r.collinear && !r.singular && r.min_eigenvalue > r.threshold,
            || {
                format!(
                    "trial {trial}: general set has min eigenvalue {}",
                    r.min_eigenvalue
                )
            },
        )?;
        smallest_general = smallest_general.min(r.min_eigenvalue);

        let axis = random_vector(&mut rng, d);
        let collinear: Vec<Vec<f64>> = (0..m)
            .map(|_| {
                let s = rng.random_range(0.1..3.0) * if rng.random_bool(0.5) { 1.0 } else { -1.0 };
                axis.iter().map(|x| s * x).collect()
            })
            .collect();
        let r = projection_sum_singularity(&collinear, policy).map_err(|e| e.to_string())?;
        ensure(r.collinear && r.singular, || {
            format!(
                "trial {trial}: collinear set has min eigenvalue {}",
                r.min_eigenvalue
            )
        })?;
    }
    Ok(format!(
        "100 general sets nonsingular (smallest eigenvalue {smallest_general:.2e}), 100 collinear sets singular"
    ))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for (i, j) in Graph::all_pairs(n) {
        if rng.random_bool(p) {
            g.add_edge(i, j).unwrap();
        }
    }
    g
}

fn null_space_and_rank_cap() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let policy = TolPolicy::default();
    let mut worst = 0.0_f64;
    for trial in 0..200 {
        let n = rng.random_range(2..=10);
        let d = 2 + trial % 3;
        let density = rng.random_range(0.2..1.0);
        let graph = random_graph(&mut rng, n, density);
        let config = random_configuration(&mut rng, n, d).map_err(|e| e.to_string())?;
        let p = config.as_flat().to_vec();
        let net = Network::new(graph, config).map_err(|e| e.to_string())?;
        let lap = assemble_laplacian(&net).map_err(|e| e.to_string())?;
        let scale = lap.matrix.max_abs().max(f64::MIN_POSITIVE);
        let p_scale = p.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        let translation = lap.translation_residual() / scale;
        let scaling = lap.scaling_residual(&p) / (scale * p_scale);
        ensure(translation <= 1e-9 && scaling <= 1e-9, || {
            format!("trial {trial}: residuals {translation:.2e}, {scaling:.2e}")
        })?;
        let rank = numerical_rank(&lap.matrix, policy)
            .map_err(|e| e.to_string())?
            .rank;
        ensure(rank <= lap.target_rank(), || {
            format!("trial {trial}: rank {rank} exceeds {}", lap.target_rank())
        })?;
        worst = worst.max(translation).max(scaling);
    }
    Ok(format!("200 networks, worst relative residual {worst:.1e}"))
}

fn rigid_once(graph: &Graph, d: usize, seed: u64) -> std::result::Result<bool, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let config = random_configuration(&mut rng, graph.n(), d).map_err(|e| e.to_string())?;
    let net = Network::new(graph.clone(), config).map_err(|e| e.to_string())?;
    Ok(is_bearing_rigid(&net, TolPolicy::default())
        .map_err(|e| e.to_string())?
        .rigid)
}

fn henneberg_graphs_rigid() -> Outcome {
    let mut summary = Vec::new();
    for d in 2..=4 {
        let mut first = 0;
        let mut after = 0;
        for g in 0..500u64 {
            let n = 3 + (g % 8) as usize;
            let (graph, _) = henneberg_generate(n, g, 0.5).map_err(|e| e.to_string())?;
            let seed = (g << 8) | d as u64;
            let ok = rigid_once(&graph, d, seed)?;
            first += usize::from(ok);
            after += usize::from(ok || rigid_once(&graph, d, seed ^ 0xDEAD_BEEF)?);
        }
        ensure(first >= 499 && after == 500, || {
            format!("d={d}: {first}/500 on first draw, {after}/500 after resample")
        })?;
        summary.push(format!("d={d}: {first}/500"));
    }
    Ok(summary.join(", "))
}

fn has_laman_subgraph_exhaustive(g: &Graph) -> bool {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let target = 2 * n - 3;
    if edges.len() < target {
        return false;
    }
    (0u64..1 << edges.len())
        .filter(|mask| mask.count_ones() as usize == target)
        .any(|mask| {
            let sub = Graph::from_mask(n, &edges, mask);
            is_laman_bruteforce(&sub).unwrap().verdict
        })
}

fn generic_iff_laman_spanning() -> Outcome {
    let mut total = 0;
    let mut rigid = 0;
    for n in 3..=5 {
        let pairs = Graph::all_pairs(n);
        for mask in 0u64..1 << pairs.len() {
            let g = Graph::from_mask(n, &pairs, mask);
            if !g.is_connected() {
                continue;
            }
            total += 1;
            let generic = test_generic_rigidity(&g, 2, 5, mask, TolPolicy::default())
                .map_err(|e| e.to_string())?
                .is_generically_rigid();
            let extracted = extract_laman_spanning(&g);
            let exhaustive = has_laman_subgraph_exhaustive(&g);
            ensure(extracted.is_some() == exhaustive, || {
                format!(
                    "n={n} mask={mask:#x}: extraction {} vs exhaustive {exhaustive}",
                    extracted.is_some()
                )
            })?;
            if let Some(sub) = &extracted {
                ensure(is_laman_pebble(sub).verdict, || {
                    format!("n={n} mask={mask:#x}: extracted subgraph not Laman")
                })?;
            }
            ensure(generic == exhaustive, || {
                format!("n={n} mask={mask:#x}: generic {generic} vs Laman spanning {exhaustive}")
            })?;
            rigid += usize::from(generic);
        }
    }
    Ok(format!(
        "{total} connected graphs, {rigid} generically rigid, 100% agreement"
    ))
}

fn pebble_vs_bruteforce() -> Outcome {
    let mut laman = 0;
    let mut total = 0;
    for n in 1..=6 {
        let pairs = Graph::all_pairs(n);
        for mask in 0u64..1 << pairs.len() {
            let g = Graph::from_mask(n, &pairs, mask);
            let brute = is_laman_bruteforce(&g).map_err(|e| e.to_string())?;
            let pebble = is_laman_pebble(&g);
            ensure(brute.verdict == pebble.verdict, || {
                format!(
                    "n={n} mask={mask:#x}: brute {} vs pebble {}",
                    brute.verdict, pebble.verdict
                )
            })?;
            ensure(pebble.witness_holds(&g), || {
                format!("n={n} mask={mask:#x}: bad witness")
            })?;
            laman += usize::from(brute.verdict);
            total += 1;
        }
    }
    Ok(format!(
        "{total} graphs ({} on six vertices), {laman} Laman",
        1 << 15
    ))
}

fn edge_split_pairs() -> Outcome {
    let policy = TolPolicy::default();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut rigid_pairs = 0;
    for d in 2..=3 {
        for inst in 0..50u64 {
            let n = rng.random_range(3..=8);
            let (graph, _) = henneberg_generate(n, inst, 0.5).map_err(|e| e.to_string())?;
            let config = random_configuration(&mut rng, n, d).map_err(|e| e.to_string())?;
            let net = Network::new(graph, config).map_err(|e| e.to_string())?;
            let edges: Vec<_> = net.graph.edges().collect();
            let pair = loop {
                let (i, j) = edges[rng.random_range(0..edges.len())];
                let k = rng.random_range(0..n);
                if k == i || k == j {
                    continue;
                }
                if let Ok(pair) = edge_split_equiv_pair(&net, i, j, k) {
                    break pair;
                }
            };
            let (a, b) = pair.ranks(policy).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("d={d} instance {inst}: rank {a} vs {b}"))?;
            rigid_pairs += usize::from(a == d * (n + 1) - d - 1);
        }
    }
    Ok(format!(
        "100 instances equal rank, {rigid_pairs} of them rigid"
    ))
}

fn perturbation_repair() -> Outcome {
    let net = Network::new(
        Graph::complete(3),
        Configuration::new(2, &[vec![0.0, 0.0], vec![1.0, 0.0], vec![2.0, 0.0]]).unwrap(),
    )
    .unwrap();
    let mut worst_attempts = 0;
    let mut worst_disp = 0.0_f64;
    for seed in 0..100 {
        let out = perturb_to_rigid(&net, 1e-3, seed, DEFAULT_MAX_ATTEMPTS, TolPolicy::default())
            .map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(out.displacement < 1e-3 && out.attempts <= 40, || {
            format!(
                "seed {seed}: displacement {}, attempts {}",
                out.displacement, out.attempts
            )
        })?;
        let check =
            is_bearing_rigid(&out.network, TolPolicy::default()).map_err(|e| e.to_string())?;
        ensure(check.rigid, || format!("seed {seed}: result not rigid"))?;
        worst_attempts = worst_attempts.max(out.attempts);
        worst_disp = worst_disp.max(out.displacement);
    }
    Ok(format!(
        "100 seeds repaired, at most {worst_attempts} attempts, max displacement {worst_disp:.6e}"
    ))
}

fn bearing_vs_distance() -> Outcome {
    let policy = TolPolicy::default();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut rigid = 0;
    for trial in 0..100u64 {
        let n = rng.random_range(3..=8);
        let graph = match trial % 4 {
            0 => {
                henneberg_generate(n, trial, 0.5)
                    .map_err(|e| e.to_string())?
                    .0
            }
            1 => {
                let (mut g, _) = henneberg_generate(n, trial, 0.5).map_err(|e| e.to_string())?;
                let (i, j) = g.edges().next().unwrap();
                g.remove_edge(i, j).unwrap();
                g
            }
            _ => {
                let density = rng.random_range(0.3..0.9);
                random_graph(&mut rng, n, density)
            }
        };
        let config = random_configuration(&mut rng, n, 2).map_err(|e| e.to_string())?;
        let net = Network::new(graph, config).map_err(|e| e.to_string())?;
        let distance =
            distance_rigidity_rank(&net, policy).map_err(|e| e.to_string())? == 2 * n - 3;
        let bearing = is_bearing_rigid(&net, policy)
            .map_err(|e| e.to_string())?
            .rigid;
        ensure(distance == bearing, || {
            format!("trial {trial}: distance rigid {distance}, bearing rigid {bearing}")
        })?;
        rigid += usize::from(bearing);
    }
    Ok(format!(
        "100 planar networks, {rigid} rigid, 100% agreement"
    ))
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            id: 1,
            name: "path and triangle",
            budget: secs(1),
            run: path_and_triangle,
        },
        Criterion {
            id: 2,
            name: "eight-vertex Henneberg construction",
            budget: secs(1),
            run: eight_vertex,
        },
        Criterion {
            id: 3,
            name: "4-cycle plane vs space",
            budget: secs(1),
            run: four_cycle,
        },
        Criterion {
            id: 4,
            name: "Schur complement spectrum",
            budget: secs(5),
            run: complement_spectrum,
        },
        Criterion {
            id: 5,
            name: "projection sum singularity",
            budget: secs(1),
            run: projection_sums,
        },
        Criterion {
            id: 6,
            name: "null space and rank cap",
            budget: secs(10),
            run: null_space_and_rank_cap,
        },
        Criterion {
            id: 7,
            name: "Henneberg graphs are rigid",
            budget: secs(60),
            run: henneberg_graphs_rigid,
        },
        Criterion {
            id: 8,
            name: "generic rigidity iff Laman spanning subgraph",
            budget: secs(120),
            run: generic_iff_laman_spanning,
        },
        Criterion {
            id: 9,
            name: "pebble game vs subset enumeration",
            budget: secs(60),
            run: pebble_vs_bruteforce,
        },
        Criterion {
            id: 10,
            name: "edge-splitting rank equivalence",
            budget: secs(10),
            run: edge_split_pairs,
        },
        Criterion {
            id: 11,
            name: "perturbation repair",
            budget: secs(5),
            run: perturbation_repair,
        },
        Criterion {
            id: 12,
            name: "planar bearing vs distance rigidity",
            budget: secs(10),
            run: bearing_vs_distance,
        },
    ];

    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(_) if elapsed > c.budget => (
                "FAIL",
                format!(
                    "took {:.2}s, budget {}s",
                    elapsed.as_secs_f64(),
                    c.budget.as_secs()
                ),
            ),
            Ok(detail) => ("PASS", detail),
            Err(detail) => ("FAIL", detail),
        };
        failures += usize::from(status == "FAIL");
        println!(
            "{status} [{:>2}] {:<46} {:>8.3}s  {detail}",
            c.id,
            c.name,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

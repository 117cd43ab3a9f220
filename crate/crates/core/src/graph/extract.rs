use super::laman::laman_edge_target;
use super::pebble::PebbleGame;
use super::Graph;

/// Finds a spanning Laman subgraph of `g` by matroid greedy: edges are offered
/// to the pebble game in lexicographic order and kept when independent.
///
/// Returns `None` when fewer than `2n − 3` independent edges exist.
pub fn extract_laman_spanning(g: &Graph) -> Option<Graph> {
    let target = laman_edge_target(g.n());
    if target < 1 || (g.edge_count() as i64) < target {
        return None;
    }
    let mut game = PebbleGame::new(g.n());
    let mut sub = Graph::new(g.n());
    for (i, j) in g.edges() {
        if game.insert(i, j).is_ok() {
            sub.add_edge(i, j).expect("edges of a simple graph");
            if sub.edge_count() as i64 == target {
                break;
            }
        }
    }
    (sub.edge_count() as i64 == target && sub.is_connected()).then_some(sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_laman_bruteforce, is_laman_pebble};

    /// Exhaustive oracle: does any `(2n − 3)`-edge subset pass the brute-force test?
    fn has_laman_subgraph_exhaustive(g: &Graph) -> bool {
        let target = laman_edge_target(g.n());
        if target < 1 {
            return false;
        }
        let edges: Vec<_> = g.edges().collect();
        let m = edges.len();
        (0u64..1 << m)
            .filter(|mask| mask.count_ones() as i64 == target)
            .any(|mask| {
                let sub = Graph::from_mask(g.n(), &edges, mask);
                is_laman_bruteforce(&sub).unwrap().verdict
            })
    }

    #[test]
    fn examples() {
        let sub = extract_laman_spanning(&Graph::complete(4)).unwrap();
        assert_eq!(sub.edge_count(), 5);
        assert!(is_laman_bruteforce(&sub).unwrap().verdict);
        assert_eq!(
            extract_laman_spanning(&Graph::complete(3)),
            Some(Graph::complete(3))
        );
        assert_eq!(extract_laman_spanning(&Graph::cycle(4)), None);
        assert_eq!(extract_laman_spanning(&Graph::new(1)), None);
        assert_eq!(
            extract_laman_spanning(&Graph::complete(2)),
            Some(Graph::complete(2))
        );
    }

    #[test]
    fn agrees_with_exhaustive_search_up_to_five_vertices() {
        for n in 2..=5 {
            let pairs = Graph::all_pairs(n);
            for mask in 0u64..1 << pairs.len() {
                let g = Graph::from_mask(n, &pairs, mask);
                let found = extract_laman_spanning(&g);
                assert_eq!(found.is_some(), has_laman_subgraph_exhaustive(&g), "{g:?}");
                if let Some(sub) = found {
                    assert!(is_laman_pebble(&sub).verdict);
                    assert!(sub.edges().all(|(i, j)| g.has_edge(i, j)));
                }
            }
        }
    }
}

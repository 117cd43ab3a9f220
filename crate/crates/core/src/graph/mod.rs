//! Combinatorial layer: undirected simple graphs, Laman verification, the
//! Henneberg construction and Laman spanning subgraph extraction.

mod extract;
mod henneberg;
mod laman;
pub mod pebble;

use std::collections::BTreeSet;

pub use extract::extract_laman_spanning;
pub use henneberg::{henneberg_apply, henneberg_generate, HennebergStep, HennebergTrace};
pub use laman::{
    is_laman_bruteforce, is_laman_pebble, LamanCertificate, LamanMethod, Violation,
    BRUTE_FORCE_MAX_VERTICES,
};

use crate::error::{Error, Result};

/// Labeled undirected simple graph on vertices `0..n`.
///
/// Edges are stored as ordered pairs `(i, j)` with `i < j`, so iteration is
/// always lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

#[inline]
fn key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in (i + 1)..n {
                g.edges.insert((i, j));
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.edges.insert((i - 1, i));
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.edges.insert((0, n - 1));
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&key(i, j))
    }

    /// Inserts `{i, j}`; rejects self-loops, out-of-range endpoints and duplicates.
    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if i == j {
            return Err(Error::invalid(format!("self-loop at vertex {i}")));
        }
        if i >= self.n || j >= self.n {
            return Err(Error::invalid(format!(
                "edge ({i}, {j}) out of range for {} vertices",
                self.n
            )));
        }
        if !self.edges.insert(key(i, j)) {
            return Err(Error::invalid(format!("duplicate edge ({i}, {j})")));
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if !self.edges.remove(&key(i, j)) {
            return Err(Error::invalid(format!("edge ({i}, {j}) not present")));
        }
        Ok(())
    }

    /// Appends a fresh vertex and returns its label.
    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// Sorted neighbor lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(i, j)| i == v || j == v)
            .count()
    }

    /// Number of edges with both endpoints in `vertices`.
    pub fn spanned_edges(&self, vertices: &[usize]) -> usize {
        let mut inside = vec![false; self.n];
        for &v in vertices {
            if v < self.n {
                inside[v] = true;
            }
        }
        self.edges
            .iter()
            .filter(|&&(i, j)| inside[i] && inside[j])
            .count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Graph on `n` vertices whose edges are the members of `all_pairs` selected by `mask`.
    ///
    /// Used to enumerate all labeled graphs on small vertex sets.
    pub fn from_mask(n: usize, all_pairs: &[(usize, usize)], mask: u64) -> Self {
        let mut g = Graph::new(n);
        for (bit, &e) in all_pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                g.edges.insert(key(e.0, e.1));
            }
        }
        g
    }

    /// All unordered vertex pairs of `K_n` in lexicographic order.
    pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
        Graph::complete(n).edges().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_enforced() {
        let mut g = Graph::new(3);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        g.add_edge(2, 0).unwrap();
        assert!(g.add_edge(0, 2).is_err());
        assert!(g.has_edge(0, 2) && g.has_edge(2, 0));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2)]);
        assert!(g.remove_edge(1, 2).is_err());
    }

    #[test]
    fn families() {
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(
            Graph::path(3).edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2)]
        );
        assert_eq!(Graph::cycle(4).edge_count(), 4);
        assert!(Graph::cycle(4).is_connected());
        assert!(!Graph::new(2).is_connected());
        assert_eq!(Graph::complete(4).spanned_edges(&[0, 1, 2]), 3);
    }

    #[test]
    fn mask_enumeration() {
        let pairs = Graph::all_pairs(4);
        assert_eq!(pairs.len(), 6);
        let g = Graph::from_mask(4, &pairs, 0b111111);
        assert_eq!(g, Graph::complete(4));
    }
}

//! The (2,3)-pebble game.
//!
//! Every vertex starts with two pebbles. An accepted edge is covered by one
//! pebble of its tail and oriented tail → head. A new edge `{u, v}` is
//! independent iff four pebbles can be gathered on `u` and `v` by reversing
//! directed paths; when that fails, the vertices reachable from `u` and `v`
//! span exactly `2k − 3` accepted edges and the new edge over-constrains them.

/// Incremental pebble game state on a fixed vertex set.
#[derive(Debug, Clone)]
pub struct PebbleGame {
    pebbles: Vec<u8>,
    out: Vec<Vec<usize>>,
    accepted: usize,
}

impl PebbleGame {
    pub fn new(n: usize) -> Self {
        PebbleGame {
            pebbles: vec![2; n],
            out: vec![Vec::new(); n],
            accepted: 0,
        }
    }

    pub fn accepted(&self) -> usize {
        self.accepted
    }

    pub fn free_pebbles(&self, v: usize) -> u8 {
        self.pebbles[v]
    }

    /// Tries to insert `{u, v}`.
    ///
    /// Returns `Err(closure)` with the sorted vertex set reachable from `u` and
    /// `v` when the edge is dependent; the game state is left consistent either way.
    pub fn insert(&mut self, u: usize, v: usize) -> Result<(), Vec<usize>> {
        debug_assert!(u != v);
        while self.pebbles[u] + self.pebbles[v] < 4 {
            let gathered = (self.pebbles[u] < 2 && self.gather(u, v))
                || (self.pebbles[v] < 2 && self.gather(v, u));
            if !gathered {
                return Err(self.reach(&[u, v]));
            }
        }
        self.pebbles[u] -= 1;
        self.out[u].push(v);
        self.accepted += 1;
        Ok(())
    }

    /// Moves one free pebble to `root` along a reversed directed path that avoids `pinned`.
    fn gather(&mut self, root: usize, pinned: usize) -> bool {
        let n = self.pebbles.len();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        seen[pinned] = true;
        let mut stack = vec![root];
        let mut found = None;
        'search: while let Some(a) = stack.pop() {
            for idx in 0..self.out[a].len() {
                let b = self.out[a][idx];
                if seen[b] {
                    continue;
                }
                seen[b] = true;
                parent[b] = a;
                if self.pebbles[b] > 0 {
                    found = Some(b);
                    break 'search;
                }
                stack.push(b);
            }
        }
        let Some(w) = found else {
            return false;
        };
        self.pebbles[w] -= 1;
        let mut b = w;
        while b != root {
            let a = parent[b];
            let pos = self.out[a].iter().position(|&x| x == b).unwrap();
            self.out[a].swap_remove(pos);
            self.out[b].push(a);
            b = a;
        }
        self.pebbles[root] += 1;
        true
    }

    fn reach(&self, from: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.pebbles.len()];
        let mut stack: Vec<usize> = from.to_vec();
        for &s in from {
            seen[s] = true;
        }
        while let Some(a) = stack.pop() {
            for &b in &self.out[a] {
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }
}

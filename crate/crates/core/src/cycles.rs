//! Bipartiteness, odd girth and shortest odd cycles.
//!
//! Everything here runs one breadth-first search per root. An edge joining
//! two vertices on the same BFS layer `d` closes an odd walk of length
//! `2d + 1`; the minimum over all roots and all such edges is the odd girth.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OddGirth {
    Bipartite,
    Finite(usize),
}

impl OddGirth {
    pub fn is_bipartite(self) -> bool {
        matches!(self, OddGirth::Bipartite)
    }

    pub fn value(self) -> Option<usize> {
        match self {
            OddGirth::Bipartite => None,
            OddGirth::Finite(g) => Some(g),
        }
    }
}

impl fmt::Display for OddGirth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OddGirth::Bipartite => f.write_str("bipartite"),
            OddGirth::Finite(g) => write!(f, "{g}"),
        }
    }
}

impl Serialize for OddGirth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            OddGirth::Bipartite => s.serialize_str("bipartite"),
            OddGirth::Finite(g) => s.serialize_u64(*g as u64),
        }
    }
}

const UNSEEN: usize = usize::MAX;

fn bfs_layers(adj: &[Vec<usize>], root: usize, dist: &mut [usize], queue: &mut VecDeque<usize>) {
    dist.fill(UNSEEN);
    dist[root] = 0;
    queue.clear();
    queue.push_back(root);
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if dist[u] == UNSEEN {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
}

/// Smallest same-layer edge depth seen from `root`, if any.
fn min_same_layer_depth(adj: &[Vec<usize>], dist: &[usize]) -> Option<usize> {
    let mut best = None;
    for (v, nbrs) in adj.iter().enumerate() {
        if dist[v] == UNSEEN {
            continue;
        }
        for &u in nbrs {
            if u > v && dist[u] == dist[v] {
                best = Some(best.map_or(dist[v], |b: usize| b.min(dist[v])));
            }
        }
    }
    best
}

/// Per-root minima `(root, depth)`; roots without a same-layer edge are skipped.
fn root_minima(g: &Graph) -> (Vec<Vec<usize>>, Vec<(usize, usize)>) {
    let adj = g.adjacency_lists();
    let mut dist = vec![UNSEEN; g.order()];
    let mut queue = VecDeque::new();
    let mut minima = Vec::new();
    for root in 0..g.order() {
        bfs_layers(&adj, root, &mut dist, &mut queue);
        if let Some(d) = min_same_layer_depth(&adj, &dist) {
            minima.push((root, d));
        }
    }
    (adj, minima)
}

pub fn odd_girth(g: &Graph) -> OddGirth {
    let (_, minima) = root_minima(g);
    minima
        .iter()
        .map(|&(_, d)| 2 * d + 1)
        .min()
        .map_or(OddGirth::Bipartite, OddGirth::Finite)
}

/// True iff `g` has no odd cycle of length at most `2k + 1`.
pub fn is_forbidden_free(g: &Graph, k: usize) -> bool {
    match odd_girth(g) {
        OddGirth::Bipartite => true,
        OddGirth::Finite(len) => len >= 2 * k + 3,
    }
}

/// A shortest odd cycle as a vertex sequence (closing edge implied), or
/// `None` for bipartite graphs.
///
/// Among all shortest odd cycles the one returned goes through the lowest
/// possible root and, starting at that root, is lexicographically smallest.
pub fn shortest_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let (adj, minima) = root_minima(g);
    let depth = minima.iter().map(|&(_, d)| d).min()?;
    let root = minima.iter().find(|&&(_, d)| d == depth)?.0;

    let mut dist = vec![UNSEEN; g.order()];
    bfs_layers(&adj, root, &mut dist, &mut VecDeque::new());

    // A shortest odd cycle through the root climbs one layer per step to
    // depth `d`, crosses a same-layer edge, then descends back. `good[v]`
    // marks vertices from which such a climb can still be completed.
    let n = g.order();
    let mut good = vec![false; n];
    for v in 0..n {
        if dist[v] == depth && adj[v].iter().any(|&u| dist[u] == depth) {
            good[v] = true;
        }
    }
    for layer in (0..depth).rev() {
        for v in 0..n {
            if dist[v] == layer && adj[v].iter().any(|&u| dist[u] == layer + 1 && good[u]) {
                good[v] = true;
            }
        }
    }

    let mut cycle = vec![root];
    let mut cur = root;
    for layer in 1..=depth {
        cur = *adj[cur]
            .iter()
            .find(|&&u| dist[u] == layer && good[u])
            .expect("climb exists by construction");
        cycle.push(cur);
    }
    cur = *adj[cur]
        .iter()
        .find(|&&u| dist[u] == depth)
        .expect("same-layer edge exists by construction");
    cycle.push(cur);
    for layer in (1..depth).rev() {
        cur = *adj[cur]
            .iter()
            .find(|&&u| dist[u] == layer)
            .expect("BFS parents exist");
        cycle.push(cur);
    }
    debug_assert_eq!(cycle.len(), 2 * depth + 1);
    Some(cycle)
}

/// Whether the closed sequence is a cycle of `g` without chords.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    if len < 3 {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !cycle.iter().all(|v| seen.insert(*v)) {
        return false;
    }
    for a in 0..len {
        for b in a + 1..len {
            let consecutive = b == a + 1 || (a == 0 && b == len - 1);
            if g.has_edge(cycle[a], cycle[b]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Exact test for a cycle (not necessarily induced) of length `len`, by
/// depth-first search anchored at the smallest vertex of the cycle.
pub fn has_cycle_of_length(g: &Graph, len: usize) -> bool {
    let n = g.order();
    if len < 3 || len > n {
        return false;
    }
    let adj = g.adjacency_lists();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(len);

    fn extend(
        adj: &[Vec<usize>],
        start: usize,
        len: usize,
        on_path: &mut [bool],
        path: &mut Vec<usize>,
    ) -> bool {
        let last = *path.last().unwrap();
        if path.len() == len {
            return adj[last].contains(&start);
        }
        for &u in &adj[last] {
            if u > start && !on_path[u] {
                on_path[u] = true;
                path.push(u);
                if extend(adj, start, len, on_path, path) {
                    return true;
                }
                path.pop();
                on_path[u] = false;
            }
        }
        false
    }

    for start in 0..n {
        on_path[start] = true;
        path.clear();
        path.push(start);
        if extend(&adj, start, len, &mut on_path, &mut path) {
            return true;
        }
        on_path[start] = false;
    }
    false
}

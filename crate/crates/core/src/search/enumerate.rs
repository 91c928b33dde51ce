//! Isomorph-free generation of small graphs by canonical augmentation.
//!
//! Graphs of order `m + 1` are produced from canonical graphs of order `m`
//! by adding one vertex `x` adjacent to a subset of the old vertices. A child
//! is kept only if deleting the vertex that receives the last canonical label
//! yields its parent again, so every isomorphism class has exactly one
//! parent. Children of one parent that are isomorphic to each other are
//! merged through a per-parent set, which keeps memory proportional to the
//! fan-out of a single node rather than to the whole level.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::canon::{canonical_labeling_masks, canonical_masks, relabel_masks};

/// Default order cap for enumeration.
pub const DEFAULT_MAX_N: usize = 10;

/// Environment variable that overrides [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "SPECTRAL_LAB_MAX_N";

/// The enumeration cap, honoring `SPECTRAL_LAB_MAX_N` when it parses.
pub fn max_order() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

/// Which graphs an enumeration yields.
///
/// `odd_cycle_free` and `bipartite` are hereditary and prune the generation
/// tree; `connected` and `non_bipartite` are checked on final graphs only.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Filter {
    /// Keep graphs without odd cycles of length `<= 2k + 1`.
    pub odd_cycle_free: Option<usize>,
    pub bipartite: bool,
    pub connected: bool,
    pub non_bipartite: bool,
}

impl Filter {
    pub fn all() -> Self {
        Filter::default()
    }

    /// `{C_3, ..., C_{2k+1}}`-free graphs.
    pub fn forbidden_free(k: usize) -> Self {
        Filter {
            odd_cycle_free: Some(k),
            ..Filter::default()
        }
    }

    pub fn non_bipartite(mut self) -> Self {
        self.non_bipartite = true;
        self
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    fn hereditary_ok(&self, rows: &[u64]) -> bool {
        if self.odd_cycle_free.is_none() && !self.bipartite {
            return true;
        }
        let girth = odd_girth_masks(rows);
        if self.bipartite && girth.is_some() {
            return false;
        }
        match (self.odd_cycle_free, girth) {
            (Some(k), Some(g)) => g >= 2 * k + 3,
            _ => true,
        }
    }

    fn final_ok(&self, rows: &[u64]) -> bool {
        if self.non_bipartite && odd_girth_masks(rows).is_none() {
            return false;
        }
        if self.connected && !connected_masks(rows) {
            return false;
        }
        true
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        match g.row_masks() {
            Some(rows) => self.hereditary_ok(&rows) && self.final_ok(&rows),
            None => false,
        }
    }
}

/// Odd girth of a graph given by masks; `None` when bipartite.
pub(crate) fn odd_girth_masks(rows: &[u64]) -> Option<usize> {
    let n = rows.len();
    let mut best: Option<usize> = None;
    for root in 0..n {
        // layer-by-layer BFS; stop once no shorter odd cycle can appear
        let mut seen = 1u64 << root;
        let mut frontier = 1u64 << root;
        let mut depth = 0;
        while frontier != 0 {
            if let Some(b) = best {
                if 2 * depth + 1 >= b {
                    break;
                }
            }
            let mut f = frontier;
            let mut same_layer = false;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                if rows[v] & frontier != 0 {
                    same_layer = true;
                    break;
                }
            }
            if same_layer {
                best = Some(2 * depth + 1);
                break;
            }
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= rows[v];
            }
            next &= !seen;
            seen |= next;
            frontier = next;
            depth += 1;
        }
    }
    best
}

fn connected_masks(rows: &[u64]) -> bool {
    let n = rows.len();
    if n <= 1 {
        return true;
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

/// Canonical children of the canonical graph `parent` (masks), in a
/// deterministic order.
fn children(parent: &[u64], filter: &Filter) -> Vec<Vec<u64>> {
    let m = parent.len();
    let parent_deg: Vec<u32> = parent.iter().map(|r| r.count_ones()).collect();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::new();
    let mut child = Vec::with_capacity(m + 1);
    for subset in 0u64..(1u64 << m) {
        let dx = subset.count_ones();
        // the last canonical label always goes to a vertex of maximum degree
        let max_old = (0..m)
            .map(|v| parent_deg[v] + (subset >> v & 1) as u32)
            .max()
            .unwrap_or(0);
        if dx < max_old {
            continue;
        }
        child.clear();
        child.extend((0..m).map(|v| parent[v] | ((subset >> v & 1) << m)));
        child.push(subset);
        if !filter.hereditary_ok(&child) {
            continue;
        }
        let lab = canonical_labeling_masks(&child);
        let last = lab.order[m];
        let accepted = if last == m {
            true
        } else {
            let reduced: Vec<u64> = (0..=m)
                .filter(|&v| v != last)
                .map(|v| {
                    let r = child[v] & !(1u64 << last);
                    // close the gap left by `last`
                    let low = r & ((1u64 << last) - 1);
                    let high = (r >> (last + 1)) << last;
                    low | high
                })
                .collect();
            canonical_masks(&reduced) == parent
        };
        if accepted {
            let canon = relabel_masks(&child, &lab.labels);
            if seen.insert(canon.clone()) {
                out.push(canon);
            }
        }
    }
    out
}

fn descend<F>(graph: Vec<u64>, n: usize, filter: &Filter, emit: &mut F)
where
    F: FnMut(Vec<u64>),
{
    if graph.len() == n {
        if filter.final_ok(&graph) {
            emit(graph);
        }
        return;
    }
    for c in children(&graph, filter) {
        descend(c, n, filter, emit);
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("enumeration needs n >= 1"));
    }
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    Ok(())
}

/// Canonical graphs (as masks) at `split` vertices that seed parallel work.
fn seeds(n: usize, filter: &Filter) -> Vec<Vec<u64>> {
    let split = n.saturating_sub(3).clamp(1, 6);
    let mut out = Vec::new();
    let relaxed = Filter {
        connected: false,
        non_bipartite: false,
        ..*filter
    };
    descend(vec![0u64], split, &relaxed, &mut |g| out.push(g));
    out
}

/// Folds every isomorphism class of order `n` passing `filter` into
/// per-shard accumulators, using up to `workers` threads.
///
/// The generation tree is cut into shards at a fixed depth; the returned
/// accumulators are in shard order, so any in-order merge is independent of
/// the worker count.
pub fn enumerate_fold<A, I, F>(
    n: usize,
    filter: &Filter,
    workers: usize,
    cap: usize,
    init: I,
    fold: F,
) -> Result<Vec<A>>
where
    A: Send,
    I: Fn() -> A + Sync,
    F: Fn(&mut A, Graph) + Sync,
{
    check_cap(n, cap)?;
    let seeds = seeds(n, filter);
    let work = |seed: &Vec<u64>| {
        let mut acc = init();
        descend(seed.clone(), n, filter, &mut |g| fold(&mut acc, Graph::from_row_masks(&g)));
        acc
    };
    if workers <= 1 {
        return Ok(seeds.iter().map(work).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::precondition(format!("thread pool: {e}")))?;
    Ok(pool.install(|| seeds.par_iter().map(work).collect()))
}

/// Applies `f` to one representative of every isomorphism class of order
/// `n` passing `filter`. Results come back in generation order regardless
/// of the worker count.
pub fn enumerate_map<T, F>(n: usize, filter: &Filter, workers: usize, cap: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(Graph) -> Option<T> + Sync,
{
    let chunks = enumerate_fold(n, filter, workers, cap, Vec::new, |acc, g| acc.extend(f(g)))?;
    Ok(chunks.into_iter().flatten().collect())
}

/// All isomorphism classes of order `n` passing `filter`, each in canonical
/// form, under the default cap.
pub fn enumerate(n: usize, filter: &Filter) -> Result<Vec<Graph>> {
    enumerate_map(n, filter, 1, max_order(), Some)
}

/// Number of classes, without materializing graphs.
pub fn count(n: usize, filter: &Filter, workers: usize) -> Result<usize> {
    Ok(enumerate_map(n, filter, workers, max_order(), |_| Some(()))?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::is_forbidden_free;
    use crate::search::canon::canonical_graph;

    #[test]
    fn small_counts() {
        let expect = [1, 2, 4, 11, 34, 156];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(count(i + 1, &Filter::all(), 1).unwrap(), e, "n={}", i + 1);
        }
    }

    #[test]
    fn yields_are_canonical() {
        for g in enumerate(6, &Filter::all()).unwrap() {
            assert_eq!(canonical_graph(&g).unwrap(), g);
        }
    }

    #[test]
    fn triangle_free_filter() {
        let graphs = enumerate(5, &Filter::forbidden_free(1)).unwrap();
        assert!(graphs.iter().all(|g| is_forbidden_free(g, 1)));
        // triangle-free graphs on 5 vertices
        assert_eq!(graphs.len(), 14);
    }

    #[test]
    fn cap_and_domain() {
        assert!(matches!(
            enumerate_map(11, &Filter::all(), 1, 10, Some),
            Err(Error::TooLarge { n: 11, cap: 10 })
        ));
        assert!(enumerate(0, &Filter::all()).is_err());
    }

    #[test]
    fn worker_count_does_not_change_order() {
        let a = enumerate_map(6, &Filter::all(), 1, 10, Some).unwrap();
        let b = enumerate_map(6, &Filter::all(), 3, 10, Some).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn odd_girth_masks_agrees() {
        for g in enumerate(6, &Filter::all()).unwrap() {
            let rows = g.row_masks().unwrap();
            assert_eq!(odd_girth_masks(&rows), crate::cycles::odd_girth(&g).value());
        }
    }
}

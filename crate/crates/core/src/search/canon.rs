//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree follows the classical scheme: refine the ordered vertex
//! partition to an equitable one, individualize each vertex of the first
//! non-singleton cell in turn, and recurse. Every leaf is a discrete
//! partition, i.e. a relabeling; the canonical form is the relabeled graph
//! with the smallest certificate. Automorphisms found by comparing leaves
//! prune the tree, both by jumping back to the level where the current path
//! left the first (or best) path and by skipping children that lie in the
//! same orbit of the known automorphisms fixing the current prefix.
//!
//! The public [`canonical_form`] is capped at [`CANONICAL_MAX_N`] vertices;
//! the labeler itself handles up to 64 and is used internally for
//! isomorphism tests on larger certificate inputs.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;

/// Order cap for the public canonical-form operation.
pub const CANONICAL_MAX_N: usize = 12;

/// Largest order the bit-mask labeler supports.
pub const LABELER_MAX_N: usize = 64;

#[inline]
fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Refines an ordered partition until every cell sees a constant number of
/// neighbors in every cell. Split pieces replace their parent in place,
/// ordered by increasing neighbor count.
pub(crate) fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    let mut scratch: Vec<u64> = Vec::with_capacity(rows.len());
    let mut si = 0;
    while si < cells.len() {
        let splitter = cells[si];
        let mut split_any = false;
        scratch.clear();
        for &cell in cells.iter() {
            if cell & (cell - 1) == 0 {
                scratch.push(cell);
                continue;
            }
            // bucket by neighbor count into the splitter
            let mut buckets = [0u64; 65];
            let mut lo = 64usize;
            let mut hi = 0usize;
            for v in bits(cell) {
                let c = (rows[v] & splitter).count_ones() as usize;
                buckets[c] |= 1 << v;
                lo = lo.min(c);
                hi = hi.max(c);
            }
            if lo == hi {
                scratch.push(cell);
            } else {
                split_any = true;
                for b in &buckets[lo..=hi] {
                    if *b != 0 {
                        scratch.push(*b);
                    }
                }
            }
        }
        if split_any {
            std::mem::swap(cells, &mut scratch);
            si = 0;
        } else {
            si += 1;
        }
    }
}

/// Result of canonical labeling: `labels[v]` is the canonical label of `v`.
#[derive(Debug, Clone)]
pub struct Labeling {
    pub labels: Vec<usize>,
    /// `order[i]` is the vertex that receives label `i`.
    pub order: Vec<usize>,
    /// Generators of (a subgroup of) the automorphism group found during the
    /// search, as vertex maps.
    pub automorphisms: Vec<Vec<usize>>,
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<(Vec<u64>, Vec<usize>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
    cert: Vec<u64>,
}

enum Step {
    Continue,
    /// Abandon everything below the node at this depth.
    JumpTo(usize),
}

const MAX_STORED_AUTOS: usize = 256;

impl<'a> Search<'a> {
    fn certificate(&mut self, order: &[usize]) {
        let n = self.n;
        let mut pos = [0usize; 64];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        for (j, &v) in order.iter().enumerate() {
            let mut col = 0u64;
            for u in bits(self.rows[v]) {
                let i = pos[u];
                if i < j {
                    col |= 1 << i;
                }
            }
            self.cert[j] = col;
        }
        debug_assert_eq!(self.cert.len(), n);
    }

    fn automorphism(from: &[usize], to: &[usize], n: usize) -> Vec<usize> {
        let mut g = vec![0; n];
        for (a, b) in from.iter().zip(to) {
            g[*a] = *b;
        }
        g
    }

    fn common_prefix(a: &[usize], b: &[usize]) -> usize {
        a.iter().zip(b).take_while(|(x, y)| x == y).count()
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Step {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        self.certificate(&order);

        let Some((first_cert, first_order, first_path)) = &self.first else {
            let entry = (self.cert.clone(), order, path.to_vec());
            self.first = Some(entry.clone());
            self.best = Some(entry);
            return Step::Continue;
        };
        if *first_cert == self.cert {
            let auto = Self::automorphism(first_order, &order, self.n);
            let level = Self::common_prefix(first_path, path);
            if self.autos.len() < MAX_STORED_AUTOS {
                self.autos.push(auto);
            }
            return Step::JumpTo(level);
        }
        let (best_cert, best_order, best_path) = self.best.as_ref().expect("set with first");
        match self.cert.cmp(best_cert) {
            Ordering::Equal => {
                let auto = Self::automorphism(best_order, &order, self.n);
                let level = Self::common_prefix(best_path, path);
                if self.autos.len() < MAX_STORED_AUTOS {
                    self.autos.push(auto);
                }
                Step::JumpTo(level)
            }
            Ordering::Less => {
                self.best = Some((self.cert.clone(), order, path.to_vec()));
                Step::Continue
            }
            Ordering::Greater => Step::Continue,
        }
    }

    /// Orbit representatives under the stored automorphisms that fix every
    /// vertex of `prefix`.
    fn orbit_roots(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in &self.autos {
            if prefix.iter().any(|&v| a[v] != v) {
                continue;
            }
            for v in 0..self.n {
                let (x, y) = (find(&mut parent, v), find(&mut parent, a[v]));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    fn node(&mut self, mut cells: Vec<u64>, path: &mut Vec<usize>) -> Step {
        refine(self.rows, &mut cells);
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let depth = path.len();
        let ti = cells
            .iter()
            .position(|c| c & (c - 1) != 0)
            .expect("a non-discrete partition has a non-singleton cell");
        let target = cells[ti];
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(target) {
            if !explored.is_empty() && !self.autos.is_empty() {
                let roots = self.orbit_roots(path);
                if explored.iter().any(|&w| roots[w] == roots[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1u64 << v);
            child.push(target & !(1u64 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            path.push(v);
            let step = self.node(child, path);
            path.pop();
            if let Step::JumpTo(level) = step {
                if level < depth {
                    return step;
                }
            }
        }
        Step::Continue
    }
}

/// Canonical labeling of a graph given by neighbor masks (`n <= 64`).
pub fn canonical_labeling_masks(rows: &[u64]) -> Labeling {
    let n = rows.len();
    assert!(n <= LABELER_MAX_N);
    if n == 0 {
        return Labeling {
            labels: vec![],
            order: vec![],
            automorphisms: vec![],
        };
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search {
        rows,
        n,
        first: None,
        best: None,
        autos: Vec::new(),
        cert: vec![0; n],
    };
    search.node(vec![all], &mut Vec::new());
    let (_, order, _) = search.best.expect("search reaches at least one leaf");
    let mut labels = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        labels[v] = i;
    }
    Labeling {
        labels,
        order,
        automorphisms: search.autos,
    }
}

/// Canonically relabeled copy of a graph given by masks, returned as masks.
pub fn canonical_masks(rows: &[u64]) -> Vec<u64> {
    let lab = canonical_labeling_masks(rows);
    relabel_masks(rows, &lab.labels)
}

pub(crate) fn relabel_masks(rows: &[u64], labels: &[usize]) -> Vec<u64> {
    let mut out = vec![0u64; rows.len()];
    for (v, &row) in rows.iter().enumerate() {
        let mut m = 0u64;
        for u in bits(row) {
            m |= 1 << labels[u];
        }
        out[labels[v]] = m;
    }
    out
}

fn masks_of(g: &Graph) -> Result<Vec<u64>> {
    g.row_masks().ok_or(Error::TooLarge {
        n: g.order(),
        cap: LABELER_MAX_N,
    })
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let rows = masks_of(g)?;
    Ok(Graph::from_row_masks(&canonical_masks(&rows)))
}

/// Canonical form as graph6 text; two graphs are isomorphic iff their
/// canonical forms are byte-equal.
pub fn canonical_form(g: &Graph) -> Result<String> {
    if g.order() > CANONICAL_MAX_N {
        return Err(Error::TooLarge {
            n: g.order(),
            cap: CANONICAL_MAX_N,
        });
    }
    to_graph6(&canonical_graph(g)?)
}

/// Isomorphism test through canonical labeling (up to 64 vertices).
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    let (mut da, mut db) = (a.degrees(), b.degrees());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_masks(&masks_of(a)?) == canonical_masks(&masks_of(b)?))
}

//! Simple undirected graphs and the constructions used throughout the crate.
//!
//! A [`Graph`] stores the upper triangle of its adjacency matrix as a packed
//! bit set, in the same column-major order graph6 uses: the pair `(i, j)`
//! with `i < j` lives at bit `j * (j - 1) / 2 + i`. Values are immutable once
//! built; all constructors return fresh graphs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    bits: Vec<u64>,
}

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn words_for(n: usize) -> usize {
    let pairs = n * n.saturating_sub(1) / 2;
    pairs.div_ceil(64)
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            bits: vec![0; words_for(n)],
        }
    }

    /// Builds a graph from an edge list. Loops and out-of-range endpoints are
    /// rejected; repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::domain(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::domain(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from neighbor bit masks (`rows[v]` bit `u` set iff
    /// `uv` is an edge). Only valid for `n <= 64`; the masks must be
    /// symmetric and loop-free.
    pub fn from_row_masks(rows: &[u64]) -> Self {
        let n = rows.len();
        assert!(n <= 64, "row masks only cover graphs with at most 64 vertices");
        let mut g = Graph::empty(n);
        for (j, &row) in rows.iter().enumerate() {
            let mut lower = row & ((1u64 << j) - 1);
            while lower != 0 {
                let i = lower.trailing_zeros() as usize;
                lower &= lower - 1;
                g.set_edge(i, j);
            }
        }
        g
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        let k = pair_index(i, j);
        self.bits[k / 64] |= 1u64 << (k % 64);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        let k = pair_index(i, j);
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    pub fn size(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Edges `(i, j)` with `i < j`, ordered by `j` then `i`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |j| (0..j).filter(move |&i| self.has_edge(i, j)).map(move |i| (i, j)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(u, v)).collect()
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut lists = vec![Vec::new(); self.n];
        for (i, j) in self.edges() {
            lists[i].push(j);
            lists[j].push(i);
        }
        for l in &mut lists {
            l.sort_unstable();
        }
        lists
    }

    /// Neighbor masks, one `u64` per vertex. `None` when `n > 64`.
    pub fn row_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        let mut rows = vec![0u64; self.n];
        for (i, j) in self.edges() {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
        Some(rows)
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(u, v)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for (i, j) in self.edges() {
            d[i] += 1;
            d[j] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn adjacency_f64(&self) -> Vec<Vec<f64>> {
        let mut a = vec![vec![0.0; self.n]; self.n];
        for (i, j) in self.edges() {
            a[i][j] = 1.0;
            a[j][i] = 1.0;
        }
        a
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &u in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.degrees()
            .into_iter()
            .enumerate()
            .filter(|&(_, d)| d == 0)
            .map(|(v, _)| v)
            .collect()
    }

    /// The subgraph induced on `vertices`, relabeled `0..vertices.len()` in
    /// the order given.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(a, b);
                }
            }
        }
        g
    }

    /// Relabels vertices: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut g = Graph::empty(self.n);
        for (i, j) in self.edges() {
            g.set_edge(perm[i], perm[j]);
        }
        g
    }

    /// Removes vertex `v`; higher labels shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Block-diagonal union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (i, j) in self.edges() {
            g.set_edge(i, j);
        }
        for (i, j) in other.edges() {
            g.set_edge(i + shift, j + shift);
        }
        g
    }

    /// The union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.set_edge(u, self.n + v);
            }
        }
        g
    }

    /// Two-colouring test by BFS.
    pub fn is_bipartite(&self) -> bool {
        crate::cycles::odd_girth(self).is_bipartite()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::domain("path needs n >= 1"));
    }
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::domain(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::domain("complete graph needs n >= 1"));
    }
    Graph::from_edges(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j))))
}

/// `K_{s,t}` with the `s` side on `0..s` and the `t` side on `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    if s == 0 || t == 0 {
        return Err(Error::domain(format!(
            "complete bipartite graph needs s, t >= 1, got s={s}, t={t}"
        )));
    }
    Graph::from_edges(s + t, (0..s).flat_map(|i| (s..s + t).map(move |j| (i, j))))
}

/// `K_k` joined to `n - k` isolated vertices.
pub fn split_graph(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k > n {
        return Err(Error::domain(format!("split graph needs 1 <= k <= n, got n={n}, k={k}")));
    }
    let clique = complete(k)?;
    Ok(clique.join(&Graph::empty(n - k)))
}

/// Replaces each vertex `v` of `base` by a stable set of `sizes[v]` vertices;
/// classes are laid out contiguously in base-vertex order and may be empty.
pub fn blow_up(base: &Graph, sizes: &[usize]) -> Result<Graph> {
    if sizes.len() != base.order() {
        return Err(Error::domain(format!(
            "blow-up needs one class size per base vertex: {} sizes for {} vertices",
            sizes.len(),
            base.order()
        )));
    }
    let mut offsets = Vec::with_capacity(sizes.len() + 1);
    let mut total = 0;
    for &s in sizes {
        offsets.push(total);
        total += s;
    }
    let mut g = Graph::empty(total);
    for (a, b) in base.edges() {
        for x in offsets[a]..offsets[a] + sizes[a] {
            for y in offsets[b]..offsets[b] + sizes[b] {
                g.set_edge(x, y);
            }
        }
    }
    Ok(g)
}

/// The spider with legs of `a <= b <= c` vertices; the centre is vertex 0 and
/// the legs follow in order, each listed outward from the centre.
pub fn t_tree(a: usize, b: usize, c: usize) -> Result<Graph> {
    if a == 0 || !(a <= b && b <= c) {
        return Err(Error::domain(format!(
            "T-shaped tree needs 1 <= a <= b <= c, got ({a}, {b}, {c})"
        )));
    }
    let mut edges = Vec::new();
    let mut next = 1;
    for len in [a, b, c] {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(a + b + c + 1, edges)
}

/// `K_{s,t}` with the edge `uv` replaced by a path `u, u_1, ..., u_{2k-1}, v`.
///
/// Labels: the `s` side is `0..s` with `u = 0`, the `t` side is `s..s+t` with
/// `v = s`, and the path interior takes the last `2k - 1` labels in path order.
pub fn rk_bipartite(k: usize, s: usize, t: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::domain("R_k(K_{s,t}) needs k >= 1"));
    }
    if s < 2 || t < 2 {
        return Err(Error::domain(format!(
            "R_k(K_{{s,t}}) needs s, t >= 2, got s={s}, t={t}"
        )));
    }
    let n = s + t + 2 * k - 1;
    let (u, v) = (0, s);
    let mut edges: Vec<(usize, usize)> = (0..s)
        .flat_map(|i| (s..s + t).map(move |j| (i, j)))
        .filter(|&e| e != (u, v))
        .collect();
    let interior: Vec<usize> = (s + t..n).collect();
    let mut prev = u;
    for &w in &interior {
        edges.push((prev, w));
        prev = w;
    }
    edges.push((prev, v));
    Graph::from_edges(n, edges)
}

/// The four bases whose blow-ups are the equality cases of the
/// `lambda_1^{2k} + lambda_2^{2k}` bound. The `K_1` vertex is always last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BaseGraph {
    #[serde(rename = "P2+K1")]
    P2K1,
    #[serde(rename = "2P2+K1")]
    TwoP2K1,
    #[serde(rename = "P4+K1")]
    P4K1,
    #[serde(rename = "P5+K1")]
    P5K1,
}

impl BaseGraph {
    pub const ALL: [BaseGraph; 4] = [
        BaseGraph::P2K1,
        BaseGraph::TwoP2K1,
        BaseGraph::P4K1,
        BaseGraph::P5K1,
    ];

    pub fn graph(self) -> Graph {
        let k1 = Graph::empty(1);
        let body = match self {
            BaseGraph::P2K1 => path(2).unwrap(),
            BaseGraph::TwoP2K1 => path(2).unwrap().disjoint_union(&path(2).unwrap()),
            BaseGraph::P4K1 => path(4).unwrap(),
            BaseGraph::P5K1 => path(5).unwrap(),
        };
        body.disjoint_union(&k1)
    }

    pub fn name(self) -> &'static str {
        match self {
            BaseGraph::P2K1 => "P2+K1",
            BaseGraph::TwoP2K1 => "2P2+K1",
            BaseGraph::P4K1 => "P4+K1",
            BaseGraph::P5K1 => "P5+K1",
        }
    }

    /// Accepts the display name or the short CLI spelling (`p2k1`, `2p2k1`, ...).
    pub fn parse(s: &str) -> Option<BaseGraph> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        match key.as_str() {
            "p2k1" => Some(BaseGraph::P2K1),
            "2p2k1" => Some(BaseGraph::TwoP2K1),
            "p4k1" => Some(BaseGraph::P4K1),
            "p5k1" => Some(BaseGraph::P5K1),
            _ => None,
        }
    }
}

/// A declarative description of one graph construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConstructionSpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { s: usize, t: usize },
    TTree { a: usize, b: usize, c: usize },
    BlowUp { base: BaseGraph, sizes: Vec<usize> },
    RkBipartite { k: usize, s: usize, t: usize },
    Split { n: usize, k: usize },
    Join { left: Box<ConstructionSpec>, right: Box<ConstructionSpec> },
    DisjointUnion { left: Box<ConstructionSpec>, right: Box<ConstructionSpec> },
    Empty { n: usize },
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            ConstructionSpec::Path { n } => path(*n),
            ConstructionSpec::Cycle { n } => cycle(*n),
            ConstructionSpec::Complete { n } => complete(*n),
            ConstructionSpec::CompleteBipartite { s, t } => complete_bipartite(*s, *t),
            ConstructionSpec::TTree { a, b, c } => t_tree(*a, *b, *c),
            ConstructionSpec::BlowUp { base, sizes } => blow_up(&base.graph(), sizes),
            ConstructionSpec::RkBipartite { k, s, t } => rk_bipartite(*k, *s, *t),
            ConstructionSpec::Split { n, k } => split_graph(*n, *k),
            ConstructionSpec::Join { left, right } => Ok(left.build()?.join(&right.build()?)),
            ConstructionSpec::DisjointUnion { left, right } => {
                Ok(left.build()?.disjoint_union(&right.build()?))
            }
            ConstructionSpec::Empty { n } => Ok(Graph::empty(*n)),
        }
    }
}

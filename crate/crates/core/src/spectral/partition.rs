use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::eigen::symmetric_eigenvalues;

/// An equitable partition together with its quotient matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquitablePartition {
    pub blocks: Vec<Vec<usize>>,
    /// `quotient[i][j]` is the number of neighbors a vertex of block `i` has
    /// in block `j`.
    pub quotient: Vec<Vec<f64>>,
}

impl EquitablePartition {
    /// Eigenvalues of the quotient, non-increasing.
    ///
    /// The quotient `B` of an equitable partition satisfies
    /// `|V_i| B_ij = |V_j| B_ji`, so `D^{1/2} B D^{-1/2}` is symmetric with
    /// entries `sqrt(B_ij B_ji)` and has the same eigenvalues.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let b = &self.quotient;
        let sym: Vec<Vec<f64>> = (0..b.len())
            .map(|i| (0..b.len()).map(|j| (b[i][j] * b[j][i]).sqrt()).collect())
            .collect();
        symmetric_eigenvalues(&sym)
    }
}

/// Checks that `blocks` partition the vertex set equitably and returns the
/// quotient. Empty blocks are rejected.
pub fn quotient_matrix(g: &Graph, blocks: &[Vec<usize>]) -> Result<EquitablePartition> {
    let n = g.order();
    let mut owner = vec![usize::MAX; n];
    for (b, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::NotPartition(format!("block {b} is empty")));
        }
        for &v in block {
            if v >= n {
                return Err(Error::NotPartition(format!("vertex {v} is out of range 0..{n}")));
            }
            if owner[v] != usize::MAX {
                return Err(Error::NotPartition(format!(
                    "vertex {v} appears in blocks {} and {b}",
                    owner[v]
                )));
            }
            owner[v] = b;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::NotPartition(format!("vertex {v} is not covered")));
    }

    let adj = g.adjacency_lists();
    let t = blocks.len();
    let mut quotient = vec![vec![0.0; t]; t];
    for (i, block) in blocks.iter().enumerate() {
        let mut first: Option<Vec<usize>> = None;
        for &v in block {
            let mut counts = vec![0usize; t];
            for &u in &adj[v] {
                counts[owner[u]] += 1;
            }
            match &first {
                None => first = Some(counts),
                Some(f) => {
                    if let Some(j) = (0..t).find(|&j| f[j] != counts[j]) {
                        return Err(Error::NotEquitable {
                            from: i,
                            to: j,
                            first: f[j],
                            second: counts[j],
                        });
                    }
                }
            }
        }
        let f = first.expect("blocks are non-empty");
        for j in 0..t {
            quotient[i][j] = f[j] as f64;
        }
    }
    Ok(EquitablePartition {
        blocks: blocks.to_vec(),
        quotient,
    })
}

/// The `2k + 3` blocks `[X - u, Y - v, u, u_1, ..., u_{2k-1}, v]` of
/// `rk_bipartite(k, s, t)` under its labeling (`u = 0`, `v = s`, path
/// interior last).
pub fn rk_partition_blocks(k: usize, s: usize, t: usize) -> Vec<Vec<usize>> {
    let mut blocks = vec![(1..s).collect::<Vec<_>>(), (s + 1..s + t).collect(), vec![0]];
    for w in s + t..s + t + 2 * k - 1 {
        blocks.push(vec![w]);
    }
    blocks.push(vec![s]);
    blocks
}

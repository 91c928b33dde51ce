//! Exact clique number by branch and bound with a greedy colouring bound.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::canon::LABELER_MAX_N;

/// Colours the candidate set greedily; returns vertices with their colour
/// number, ordered so that colours are non-decreasing.
fn colour_order(rows: &[u64], mut cand: u64) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(cand.count_ones() as usize);
    let mut colour = 0;
    while cand != 0 {
        colour += 1;
        let mut free = cand;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= !(1u64 << v);
            free &= !rows[v];
            cand &= !(1u64 << v);
            out.push((v, colour));
        }
    }
    out
}

fn expand(rows: &[u64], size: usize, cand: u64, best: &mut usize) {
    let order = colour_order(rows, cand);
    let mut cand = cand;
    for &(v, colour) in order.iter().rev() {
        if size + colour <= *best {
            return;
        }
        let next = cand & rows[v];
        if next == 0 {
            *best = (*best).max(size + 1);
        } else {
            expand(rows, size + 1, next, best);
        }
        cand &= !(1u64 << v);
    }
}

/// The clique number `omega(G)`; `0` for the graph with no vertices.
pub fn clique_number(g: &Graph) -> Result<usize> {
    let rows = g.row_masks().ok_or(Error::TooLarge {
        n: g.order(),
        cap: LABELER_MAX_N,
    })?;
    let n = rows.len();
    if n == 0 {
        return Ok(0);
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 1;
    expand(&rows, 0, all, &mut best);
    Ok(best)
}

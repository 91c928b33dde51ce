//! Exact integer identities: closed walks, walks and rank.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn matmul_u128(a: &[Vec<u128>], b: &[Vec<u128>]) -> Option<Vec<Vec<u128>>> {
    let n = a.len();
    let mut c = vec![vec![0u128; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                c[i][j] = c[i][j].checked_add(aik.checked_mul(b[k][j])?)?;
            }
        }
    }
    Some(c)
}

fn matmul_big(a: &[Vec<BigUint>], b: &[Vec<BigUint>]) -> Vec<Vec<BigUint>> {
    let n = a.len();
    let mut c = vec![vec![BigUint::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    c[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    c
}

fn closed_walks_u128(g: &Graph, t: u32) -> Option<u128> {
    let n = g.order();
    let mut a = vec![vec![0u128; n]; n];
    for (i, j) in g.edges() {
        a[i][j] = 1;
        a[j][i] = 1;
    }
    let mut p = a.clone();
    for _ in 1..t {
        p = matmul_u128(&p, &a)?;
    }
    p.iter().enumerate().try_fold(0u128, |acc, (i, row)| acc.checked_add(row[i]))
}

/// `Tr(A^t)`, the number of closed walks of length `t`, in exact arithmetic.
pub fn closed_walks(g: &Graph, t: u32) -> Result<BigUint> {
    if t == 0 {
        return Err(Error::domain("closed walks need t >= 1"));
    }
    if let Some(v) = closed_walks_u128(g, t) {
        return Ok(BigUint::from(v));
    }
    let n = g.order();
    let mut a = vec![vec![BigUint::zero(); n]; n];
    for (i, j) in g.edges() {
        a[i][j] = BigUint::one();
        a[j][i] = BigUint::one();
    }
    let mut p = a.clone();
    for _ in 1..t {
        p = matmul_big(&p, &a);
    }
    Ok((0..n).map(|i| p[i][i].clone()).sum())
}

/// Number of walks with `t` vertices: `1^T A^{t-1} 1`. `walks(g, 1)` is the order.
pub fn walks(g: &Graph, t: u32) -> Result<BigUint> {
    if t == 0 {
        return Err(Error::domain("walks need t >= 1"));
    }
    let adj = g.adjacency_lists();
    let mut x = vec![BigUint::one(); g.order()];
    for _ in 1..t {
        x = adj
            .iter()
            .map(|nbrs| nbrs.iter().map(|&u| &x[u]).sum())
            .collect();
    }
    Ok(x.into_iter().sum())
}

/// Rank over the rationals of an integer matrix by fraction-free
/// (Bareiss) elimination with row pivoting.
pub fn integer_rank(matrix: &[Vec<i64>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

pub fn rank_exact(g: &Graph) -> usize {
    let n = g.order();
    let mut a = vec![vec![0i64; n]; n];
    for (i, j) in g.edges() {
        a[i][j] = 1;
        a[j][i] = 1;
    }
    integer_rank(&a)
}

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default threshold below which an eigenvalue counts as zero.
pub const DEFAULT_ZERO_TOL: f64 = 1e-7;

/// Iteration cap for the QR sweeps; zero means no cap.
pub const MAX_ITERATIONS: usize = 10_000;

/// Adjacency eigenvalues in non-increasing order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub zero_tol: f64,
}

impl Spectrum {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// The spectral radius (largest eigenvalue).
    pub fn lambda1(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    /// Second largest eigenvalue; 0 for a single vertex.
    pub fn lambda2(&self) -> f64 {
        self.values.get(1).copied().unwrap_or(0.0)
    }

    pub fn positive(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().copied().filter(move |&x| x > self.zero_tol)
    }

    pub fn negative(&self) -> impl Iterator<Item = f64> + '_ {
        self.values.iter().copied().filter(move |&x| x < -self.zero_tol)
    }

    /// Number of eigenvalues classified as non-zero.
    pub fn nonzero_count(&self) -> usize {
        self.values.iter().filter(|x| x.abs() > self.zero_tol).count()
    }

    /// Sum of `t`-th powers; `Tr(A^t)` in floating point.
    pub fn power_sum(&self, t: u32) -> f64 {
        self.values.iter().map(|x| x.powi(t as i32)).sum()
    }
}

/// Sums of even powers of the positive and negative eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InertiaSums {
    pub power: u32,
    pub s_plus: f64,
    pub s_minus: f64,
    pub p_plus: usize,
    pub p_minus: usize,
}

pub fn spectrum(g: &Graph, zero_tol: f64) -> Result<Spectrum> {
    if g.order() == 0 {
        return Err(Error::domain("spectrum needs at least one vertex"));
    }
    let values = symmetric_eigenvalues(&g.adjacency_f64())?;
    Ok(Spectrum { values, zero_tol })
}

/// `power` must be even and at least 2.
pub fn inertia_sums(spec: &Spectrum, power: u32) -> Result<InertiaSums> {
    if power < 2 || power % 2 != 0 {
        return Err(Error::domain(format!("power must be even and >= 2, got {power}")));
    }
    let e = power as i32;
    Ok(InertiaSums {
        power,
        s_plus: spec.positive().map(|x| x.powi(e)).sum(),
        s_minus: spec.negative().map(|x| x.powi(e)).sum(),
        p_plus: spec.positive().count(),
        p_minus: spec.negative().count(),
    })
}

/// Eigenvalues of a real symmetric matrix, in non-increasing order.
///
/// Householder tridiagonalization followed by implicit-shift QR
/// (`nalgebra::SymmetricEigen`).
pub fn symmetric_eigenvalues(matrix: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = matrix.len();
    for row in matrix {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    let m = DMatrix::from_fn(n, n, |i, j| matrix[i][j]);
    let eig = SymmetricEigen::try_new(m, f64::EPSILON, MAX_ITERATIONS)
        .ok_or(Error::NoConvergence { iterations: MAX_ITERATIONS })?;
    let mut d: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    d.sort_by(|x, y| y.total_cmp(x));
    Ok(d)
}

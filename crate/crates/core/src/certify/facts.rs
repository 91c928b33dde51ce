use std::cell::OnceCell;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::certify::certificate::{Inputs, Tolerances};
use crate::cycles::{odd_girth, OddGirth};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::canon::LABELER_MAX_N;
use crate::spectral::{closed_walks, spectrum, Spectrum};

/// Quantities shared by several certificates on the same graph.
pub(crate) struct Facts<'a> {
    pub g: &'a Graph,
    pub n: usize,
    pub m: usize,
    pub girth: OddGirth,
    pub inputs: Inputs,
    zero_tol: f64,
    spec: OnceCell<Spectrum>,
}

impl<'a> Facts<'a> {
    /// Fails for graphs beyond the exact-arithmetic limit; the graph must
    /// have at least one vertex.
    pub fn new(g: &'a Graph, tol: &Tolerances) -> Result<Self> {
        check_order(g)?;
        Ok(Facts {
            g,
            n: g.order(),
            m: g.size(),
            girth: odd_girth(g),
            inputs: Inputs::for_graph(g)?,
            zero_tol: tol.zero,
            spec: OnceCell::new(),
        })
    }

    /// The spectrum, computed on first use.
    pub fn spec(&self) -> Result<&Spectrum> {
        if let Some(s) = self.spec.get() {
            return Ok(s);
        }
        let s = spectrum(self.g, self.zero_tol)?;
        Ok(self.spec.get_or_init(|| s))
    }

    pub fn forbidden_free(&self, k: usize) -> bool {
        match self.girth {
            OddGirth::Bipartite => true,
            OddGirth::Finite(len) => len >= 2 * k + 3,
        }
    }

    pub fn lambda(&self, i: usize) -> Result<f64> {
        Ok(self.spec()?.values.get(i).copied().unwrap_or(0.0))
    }

    pub fn trace(&self, t: u32) -> Result<BigUint> {
        closed_walks(self.g, t)
    }
}

pub(crate) fn check_order(g: &Graph) -> Result<()> {
    if g.order() > LABELER_MAX_N {
        return Err(Error::TooLarge {
            n: g.order(),
            cap: LABELER_MAX_N,
        });
    }
    if g.order() == 0 {
        return Err(Error::domain("certificates need a graph with at least one vertex"));
    }
    Ok(())
}

pub(crate) fn big_to_f64(x: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

/// `(2 cos(pi / (k + 2)))^{2k}`, the `lambda_2` threshold raised to `2k`.
pub(crate) fn cos_term(k: usize) -> f64 {
    (2.0 * (std::f64::consts::PI / (k as f64 + 2.0)).cos()).powi(2 * k as i32)
}

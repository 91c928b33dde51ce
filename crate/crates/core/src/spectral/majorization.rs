use crate::error::{Error, Result};

fn check_sorted_nonneg(v: &[f64], name: &str) -> Result<()> {
    if let Some(i) = v.iter().position(|&x| !(x >= 0.0)) {
        return Err(Error::domain(format!("{name}[{i}] = {} is negative or NaN", v[i])));
    }
    if let Some(i) = v.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::domain(format!("{name} is not non-increasing at index {}", i + 1)));
    }
    Ok(())
}

/// Whether `s` is weakly majorized by `r`: every prefix sum of `r` dominates
/// the matching prefix sum of `s`. Both inputs must be non-negative,
/// non-increasing and of equal length (pad with zeros).
pub fn weakly_majorizes(r: &[f64], s: &[f64]) -> Result<bool> {
    if r.len() != s.len() {
        return Err(Error::domain(format!(
            "vectors must have equal length, got {} and {}",
            r.len(),
            s.len()
        )));
    }
    check_sorted_nonneg(r, "r")?;
    check_sorted_nonneg(s, "s")?;
    let (mut pr, mut ps) = (0.0, 0.0);
    for (a, b) in r.iter().zip(s) {
        pr += a;
        ps += b;
        if ps > pr {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(sum |v_i|^p)^(1/p)` for `p >= 1`.
pub fn p_norm(v: &[f64], p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::domain(format!("p-norm needs p >= 1, got {p}")));
    }
    Ok(v.iter().map(|x| x.abs().powf(p)).sum::<f64>().powf(1.0 / p))
}

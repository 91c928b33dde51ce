//! Characteristic polynomials of paths and of the `R_k(K_{s,t})` quotient.

use crate::error::{Error, Result};

/// `g_n(x) = det(xI - A(P_n))` by the recurrence `g_{n+1} = x g_n - g_{n-1}`
/// with `g_0 = 1`, `g_1 = x`.
pub fn path_charpoly_eval(n: usize, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, x);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn check_rk(k: usize, s: usize, t: usize) -> Result<()> {
    if k == 0 || s < 2 || t < 2 {
        return Err(Error::domain(format!(
            "R_k(K_{{s,t}}) needs k >= 1 and s, t >= 2, got k={k}, s={s}, t={t}"
        )));
    }
    Ok(())
}

/// Characteristic polynomial of the equitable quotient of `R_k(K_{s,t})`:
///
/// `(x^2 - (s-1)(t-1)) g_{2k+1} - (s+t-2) x g_{2k} - 2(s-1)(t-1) + (s-1)(t-1) g_{2k-1}`.
pub fn rk_quotient_charpoly_eval(k: usize, s: usize, t: usize, x: f64) -> Result<f64> {
    check_rk(k, s, t)?;
    let st = ((s - 1) * (t - 1)) as f64;
    let g_hi = path_charpoly_eval(2 * k + 1, x);
    let g_mid = path_charpoly_eval(2 * k, x);
    let g_lo = path_charpoly_eval(2 * k - 1, x);
    Ok((x * x - st) * g_hi - (s + t - 2) as f64 * x * g_mid - 2.0 * st + st * g_lo)
}

/// The quotient matrix over the blocks `[X - u, Y - v, u, u_1, ..., u_{2k-1}, v]`.
pub fn rk_quotient_matrix(k: usize, s: usize, t: usize) -> Result<Vec<Vec<f64>>> {
    check_rk(k, s, t)?;
    let size = 2 * k + 3;
    let mut q = vec![vec![0.0; size]; size];
    let (xs, ys, u, v) = (0, 1, 2, size - 1);
    q[xs][ys] = (t - 1) as f64;
    q[xs][v] = 1.0;
    q[ys][xs] = (s - 1) as f64;
    q[ys][u] = 1.0;
    q[u][ys] = (t - 1) as f64;
    q[v][xs] = (s - 1) as f64;
    // path u, u_1, ..., u_{2k-1}, v occupies indices 2..size
    for i in u..v {
        q[i][i + 1] = 1.0;
        q[i + 1][i] = 1.0;
    }
    Ok(q)
}

/// Largest real root of the quotient polynomial, which is the spectral
/// radius of `R_k(K_{s,t})`.
///
/// The root lies in `(2, 1 + max(s, t))`. A descending scan from the upper
/// end brackets the first sign change before bisection, so a second root
/// inside the interval cannot be mistaken for the largest one.
pub fn rk_spectral_radius(k: usize, s: usize, t: usize) -> Result<f64> {
    check_rk(k, s, t)?;
    let f = |x: f64| rk_quotient_charpoly_eval(k, s, t, x).expect("parameters checked");
    let lower = 2.0;
    let upper = 1.0 + s.max(t) as f64;
    debug_assert!(f(upper) > 0.0);

    const STEPS: usize = 4096;
    let h = (upper - lower) / STEPS as f64;
    let mut hi = upper;
    let mut lo = None;
    for i in 1..=STEPS {
        let x = upper - i as f64 * h;
        if f(x) <= 0.0 {
            lo = Some(x);
            break;
        }
        hi = x;
    }
    let mut lo = lo.ok_or_else(|| {
        Error::precondition(format!(
            "no sign change of the quotient polynomial in (2, {upper}] for k={k}, s={s}, t={t}"
        ))
    })?;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn path_polynomials() {
        assert_eq!(path_charpoly_eval(0, 3.0), 1.0);
        assert_eq!(path_charpoly_eval(1, 3.0), 3.0);
        assert_eq!(path_charpoly_eval(2, 3.0), 8.0);
        assert!(path_charpoly_eval(4, 2.0 * (PI / 5.0).cos()).abs() < 1e-12);
        for n in 1..=12 {
            for j in 1..=n {
                let root = 2.0 * (j as f64 * PI / (n + 1) as f64).cos();
                assert!(path_charpoly_eval(n, root).abs() < 1e-9, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn consecutive_path_polynomials_increase_past_two() {
        let x = 2.5;
        for n in 1..=20 {
            assert!(path_charpoly_eval(n + 1, x) - path_charpoly_eval(n, x) > 0.0);
        }
    }

    #[test]
    fn quotient_matrix_shape() {
        let q = rk_quotient_matrix(2, 3, 4).unwrap();
        assert_eq!(q.len(), 7);
        assert_eq!(q[0], vec![0.0, 3.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        assert_eq!(q[1], vec![2.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(q[2], vec![0.0, 3.0, 0.0, 1.0, 0.0, 0.0, 0.0]);
        assert_eq!(q[3], vec![0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0]);
        assert_eq!(q[5], vec![0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 1.0]);
        assert_eq!(q[6], vec![2.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
        assert!(rk_quotient_matrix(1, 1, 3).is_err());
    }

    #[test]
    fn radius_domain() {
        assert!(rk_spectral_radius(0, 2, 2).is_err());
        assert!(rk_spectral_radius(1, 2, 1).is_err());
        assert!(rk_spectral_radius(1, 2, 3).unwrap() > 2.0);
    }
}

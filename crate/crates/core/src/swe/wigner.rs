//! Wigner rotation functions d^n_{μm}(θ).
//!
//! The valid-index region `μ ≥ |m|` uses the Jacobi-polynomial product form;
//! other index pairs map into it through the d-function symmetries
//! `d_{μm} = (-1)^{μ-m} d_{mμ}` and `d_{μm} = d_{-m,-μ}`. At θ = 0 the
//! function is exactly the Kronecker delta.

use crate::error::{Result, SimError};

/// `d^n_{μm}(theta)`, real.
pub fn wigner_d(n: u32, mu: i32, m: i32, theta: f64) -> Result<f64> {
    let ni = n as i32;
    if mu.abs() > ni || m.abs() > ni {
        return Err(SimError::Numerical(format!(
            "wigner_d index out of range: n={n}, mu={mu}, m={m}"
        )));
    }
    Ok(d_rec(ni, mu, m, theta))
}

fn d_rec(n: i32, mu: i32, m: i32, theta: f64) -> f64 {
    if mu < m.abs() {
        return if -mu >= m.abs() {
            parity(mu - m) * d_rec(n, -mu, -m, theta)
        } else if m >= 0 {
            parity(mu - m) * d_rec(n, m, mu, theta)
        } else {
            d_rec(n, -m, -mu, theta)
        };
    }
    // μ ≥ |m|: exponents μ±m ≥ 0 and the Jacobi parameters are nonnegative.
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    factor_sqrt(n, mu, m)
        * c.powi(mu + m)
        * s.powi(mu - m)
        * jacobi((n - mu) as usize, (mu - m) as f64, (mu + m) as f64, theta.cos())
}

#[inline]
fn parity(k: i32) -> f64 {
    if k.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// sqrt((n+μ)!(n-μ)! / ((n+m)!(n-m)!)) for μ ≥ |m|, as a well-scaled
/// product of term ratios.
fn factor_sqrt(n: i32, mu: i32, m: i32) -> f64 {
    let mut r = 1.0;
    for k in 0..(mu - m) {
        r *= (n + m + 1 + k) as f64 / (n - mu + 1 + k) as f64;
    }
    r.sqrt()
}

/// Jacobi polynomial P_k^{(a,b)}(x) by the three-term recurrence.
fn jacobi(k: usize, a: f64, b: f64, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut p0 = 1.0;
    let mut p1 = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    for i in 2..=k {
        let i = i as f64;
        let c1 = 2.0 * i * (i + a + b) * (2.0 * i + a + b - 2.0);
        let c2 = (2.0 * i + a + b - 1.0)
            * ((2.0 * i + a + b) * (2.0 * i + a + b - 2.0) * x + a * a - b * b);
        let c3 = 2.0 * (i + a - 1.0) * (i + b - 1.0) * (2.0 * i + a + b);
        let p2 = (c2 * p1 - c3 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Cached rotation blocks `d^n_{μm}(theta)` for all `n ≤ n_max`.
///
/// Block `n` is a `(2n+1) × (2n+1)` matrix stored row-major with μ as the
/// row index and m as the column, both offset by `+n`.
#[derive(Debug, Clone)]
pub struct DBlocks {
    n_max: usize,
    blocks: Vec<Vec<f64>>,
}

impl DBlocks {
    pub fn new(n_max: usize, theta: f64) -> Self {
        let blocks = (0..=n_max)
            .map(|n| {
                let dim = 2 * n + 1;
                let mut block = vec![0.0; dim * dim];
                for mu in -(n as i32)..=(n as i32) {
                    for m in -(n as i32)..=(n as i32) {
                        block[(mu + n as i32) as usize * dim + (m + n as i32) as usize] =
                            d_rec(n as i32, mu, m, theta);
                    }
                }
                block
            })
            .collect();
        Self { n_max, blocks }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    #[inline]
    pub fn get(&self, n: usize, mu: i32, m: i32) -> f64 {
        let dim = 2 * n + 1;
        self.blocks[n][(mu + n as i32) as usize * dim + (m + n as i32) as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn theta_zero_is_exact_identity() {
        for n in 0..=10u32 {
            for mu in -(n as i32)..=(n as i32) {
                for m in -(n as i32)..=(n as i32) {
                    let want = if mu == m { 1.0 } else { 0.0 };
                    assert_eq!(wigner_d(n, mu, m, 0.0).unwrap(), want, "n={n} mu={mu} m={m}");
                }
            }
        }
    }

    #[test]
    fn n1_closed_forms() {
        for theta in [0.0, 0.3, 1.1, 2.6] {
            // Jacobi P_1^{(0,0)} route gives d^1_{00} = cos θ.
            assert_relative_eq!(wigner_d(1, 0, 0, theta).unwrap(), theta.cos(), epsilon = 1e-14);
            assert_relative_eq!(
                wigner_d(1, 1, 0, theta).unwrap(),
                theta.sin() / 2f64.sqrt(),
                epsilon = 1e-14
            );
            assert_relative_eq!(
                wigner_d(1, -1, 0, theta).unwrap(),
                -theta.sin() / 2f64.sqrt(),
                epsilon = 1e-14
            );
            assert_relative_eq!(
                wigner_d(1, 1, 1, theta).unwrap(),
                (1.0 + theta.cos()) / 2.0,
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn blocks_are_orthonormal() {
        // Σ_μ d_{μm} d_{μm'} = δ_{mm'}; spot-checked here at n=3, full sweep
        // in the acceptance suite.
        let theta = 0.7;
        let d = DBlocks::new(3, theta);
        for m in -3i32..=3 {
            for m2 in -3i32..=3 {
                let sum: f64 = (-3i32..=3).map(|mu| d.get(3, mu, m) * d.get(3, mu, m2)).sum();
                let want = if m == m2 { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(sum, want, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn blocks_agree_with_direct_evaluation() {
        let d = DBlocks::new(6, 1.9);
        for (n, mu, m) in [(6usize, -4i32, 5i32), (5, 2, -3), (4, 0, 4), (1, -1, 1)] {
            assert_relative_eq!(
                d.get(n, mu, m),
                wigner_d(n as u32, mu, m, 1.9).unwrap(),
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn index_range_is_enforced() {
        assert!(wigner_d(2, 3, 0, 0.5).is_err());
        assert!(wigner_d(2, 0, -3, 0.5).is_err());
    }
}

//! Fully normalized associated Legendre functions.
//!
//! `P̄_n^m` is normalized to unit L² norm on [-1, 1]
//! (`∫ P̄_n^m(x)² dx = 1`) and carries no Condon-Shortley phase; the sign
//! factor lives in the harmonic prefactor instead. With this choice every
//! spherical wave mode integrates to 4π over the sphere, so mode power and
//! sphere-integrated power agree up to that fixed constant.

use crate::error::{Result, SimError};

/// Values and θ-derivatives of `P̄_n^m(cos θ)` for all `0 ≤ m ≤ n ≤ n_max`
/// at a single polar angle.
#[derive(Debug, Clone)]
pub struct LegendreTable {
    n_max: usize,
    sin_theta: f64,
    values: Vec<f64>,
    derivs: Vec<f64>,
}

#[inline]
fn tri(n: usize, m: usize) -> usize {
    n * (n + 1) / 2 + m
}

impl LegendreTable {
    /// Evaluate the full table at polar angle `theta` (radians, not a pole).
    pub fn new(n_max: usize, theta: f64) -> Self {
        let x = theta.cos();
        let s = theta.sin();
        let len = tri(n_max, n_max) + 1;
        let mut values = vec![0.0; len];
        let mut derivs = vec![0.0; len];

        values[tri(0, 0)] = std::f64::consts::FRAC_1_SQRT_2;
        // Diagonal: P̄_m^m = sin θ · sqrt((2m+1)/(2m)) · P̄_{m-1}^{m-1}
        for m in 1..=n_max {
            values[tri(m, m)] =
                s * ((2 * m + 1) as f64 / (2 * m) as f64).sqrt() * values[tri(m - 1, m - 1)];
        }
        // First off-diagonal: P̄_{m+1}^m = sqrt(2m+3) · x · P̄_m^m
        for m in 0..n_max {
            values[tri(m + 1, m)] = ((2 * m + 3) as f64).sqrt() * x * values[tri(m, m)];
        }
        // Upward recurrence in n.
        for m in 0..=n_max {
            for n in (m + 2)..=n_max {
                let (nf, mf) = (n as f64, m as f64);
                let a = ((4.0 * nf * nf - 1.0) / (nf * nf - mf * mf)).sqrt();
                let b = (((nf - 1.0) * (nf - 1.0) - mf * mf) / (4.0 * (nf - 1.0) * (nf - 1.0) - 1.0))
                    .sqrt();
                values[tri(n, m)] = a * (x * values[tri(n - 1, m)] - b * values[tri(n - 2, m)]);
            }
        }
        // dP̄_n^m/dθ = (n x P̄_n^m - sqrt((2n+1)(n-m)(n+m)/(2n-1)) P̄_{n-1}^m) / sin θ
        for n in 0..=n_max {
            for m in 0..=n {
                let (nf, mf) = (n as f64, m as f64);
                let below = if n >= 1 && m <= n - 1 { values[tri(n - 1, m)] } else { 0.0 };
                let c = if n >= 1 {
                    ((2.0 * nf + 1.0) * (nf - mf) * (nf + mf) / (2.0 * nf - 1.0)).sqrt()
                } else {
                    0.0
                };
                derivs[tri(n, m)] = (nf * x * values[tri(n, m)] - c * below) / s;
            }
        }
        Self { n_max, sin_theta: s, values, derivs }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn sin_theta(&self) -> f64 {
        self.sin_theta
    }

    /// `P̄_n^m(cos θ)`.
    pub fn value(&self, n: usize, m: usize) -> f64 {
        self.values[tri(n, m)]
    }

    /// `d P̄_n^m(cos θ) / dθ`.
    pub fn deriv(&self, n: usize, m: usize) -> f64 {
        self.derivs[tri(n, m)]
    }
}

/// Fully normalized associated Legendre function `P̄_n^m(x)`.
pub fn legendre_norm(n: usize, m: usize, x: f64) -> Result<f64> {
    if m > n {
        return Err(SimError::Numerical(format!("legendre_norm: m={m} > n={n}")));
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(SimError::Numerical(format!("legendre_norm: |x|>1 (x={x})")));
    }
    Ok(LegendreTable::new(n, x.clamp(-1.0, 1.0).acos()).value(n, m))
}

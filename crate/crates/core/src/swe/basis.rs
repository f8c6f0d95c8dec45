//! Spherical wave basis functions and basis-matrix assembly.
//!
//! Far-field modes are indexed by `(s, m, n)` with `s ∈ {1, 2}` (TE/TM),
//! `1 ≤ n ≤ N`, `|m| ≤ n`, packed as `j = 2(n(n+1) + m - 1) + (s - 1)` for a
//! total of `J = 2N(N+2)` modes. The angular parts use the e^{+jωt} time
//! convention (azimuthal dependence e^{-jmφ}):
//!
//! ```text
//! f_V,1mn = k_mn (-j)^{n+1} (-jm P̄/sin θ)      f_H,1mn = k_mn (-j)^{n+1} (-dP̄/dθ)
//! f_V,2mn = k_mn (-j)^n   ( dP̄/dθ)            f_H,2mn = k_mn (-j)^n   (-jm P̄/sin θ)
//! k_mn    = sqrt(2/(n(n+1))) (-m/|m|)^m e^{-jmφ}     ((-m/|m|)^m := 1 for m = 0)
//! ```
//!
//! With the unit-L²-normalized `P̄` every mode has sphere-integrated power
//! 4π and distinct modes are orthogonal.

use crate::error::{Result, SimError};
use crate::geom::Direction;
use crate::pattern::PolarimetricGain;
use crate::swe::legendre::LegendreTable;
use num_complex::Complex64;

/// Number of modes for truncation `n_max`: `J = 2N(N+2)`.
pub fn mode_count(n_max: usize) -> usize {
    2 * n_max * (n_max + 2)
}

/// Packed index of mode `(s, m, n)`.
#[inline]
pub fn mode_index(s: u8, m: i32, n: usize) -> usize {
    debug_assert!(s == 1 || s == 2);
    debug_assert!(m.unsigned_abs() as usize <= n);
    let base = (n * (n + 1)) as isize + m as isize - 1;
    2 * base as usize + (s as usize - 1)
}

/// Iterate all `(s, m, n)` modes in packed-index order.
pub fn modes(n_max: usize) -> impl Iterator<Item = (u8, i32, usize)> {
    (1..=n_max).flat_map(|n| {
        (-(n as i32)..=(n as i32)).flat_map(move |m| [(1u8, m, n), (2u8, m, n)])
    })
}

#[inline]
fn minus_j_pow(k: usize) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    }
}

#[inline]
fn cs_phase(m: i32) -> f64 {
    if m > 0 && m % 2 != 0 {
        -1.0
    } else {
        1.0
    }
}

/// Single basis function (f_V, f_H) at a direction.
pub fn basis_functions(dir: &Direction, s: u8, m: i32, n: usize) -> Result<PolarimetricGain> {
    if !(s == 1 || s == 2) || m.unsigned_abs() as usize > n || n == 0 {
        return Err(SimError::Numerical(format!("basis_functions: bad mode (s={s}, m={m}, n={n})")));
    }
    if dir.is_pole() {
        return Err(SimError::DegeneratePole);
    }
    let table = LegendreTable::new(n, dir.theta());
    Ok(eval_mode(&table, dir.phi(), s, m, n))
}

#[inline]
fn eval_mode(table: &LegendreTable, phi: f64, s: u8, m: i32, n: usize) -> PolarimetricGain {
    let ma = m.unsigned_abs() as usize;
    let pbar = table.value(n, ma);
    let dpbar = table.deriv(n, ma);
    let norm = (2.0 / (n as f64 * (n as f64 + 1.0))).sqrt() * cs_phase(m);
    let phase = Complex64::from_polar(1.0, -(m as f64) * phi);
    let k = norm * phase;
    let m_term = Complex64::new(0.0, -(m as f64)) * (pbar / table.sin_theta());
    if s == 1 {
        let p = minus_j_pow(n + 1) * k;
        PolarimetricGain::new(p * m_term, p * (-dpbar))
    } else {
        let p = minus_j_pow(n) * k;
        PolarimetricGain::new(p * dpbar, p * m_term)
    }
}

/// All `J` basis values at one direction, packed-index order.
///
/// The Legendre table and the per-|m| azimuth phases are shared across
/// modes, so a full row costs O(N²).
pub fn basis_row(n_max: usize, dir: &Direction) -> Vec<PolarimetricGain> {
    let table = LegendreTable::new(n_max, dir.theta());
    basis_row_with_table(&table, n_max, dir.phi())
}

pub(crate) fn basis_row_with_table(
    table: &LegendreTable,
    n_max: usize,
    phi: f64,
) -> Vec<PolarimetricGain> {
    let mut out = Vec::with_capacity(mode_count(n_max));
    for n in 1..=n_max {
        let norm = (2.0 / (n as f64 * (n as f64 + 1.0))).sqrt();
        for m in -(n as i32)..=(n as i32) {
            let ma = m.unsigned_abs() as usize;
            let pbar = table.value(n, ma);
            let dpbar = table.deriv(n, ma);
            let k = norm * cs_phase(m) * Complex64::from_polar(1.0, -(m as f64) * phi);
            let m_term = Complex64::new(0.0, -(m as f64)) * (pbar / table.sin_theta());
            let p1 = minus_j_pow(n + 1) * k;
            out.push(PolarimetricGain::new(p1 * m_term, p1 * (-dpbar)));
            let p2 = minus_j_pow(n) * k;
            out.push(PolarimetricGain::new(p2 * dpbar, p2 * m_term));
        }
    }
    out
}

/// Dense basis matrix on a set of directions: `2L × J`, the first `L` rows
/// are the V components and the last `L` the H components.
#[derive(Debug, Clone)]
pub struct BasisMatrix {
    pub n_rows: usize,
    pub n_cols: usize,
    /// Row-major storage.
    pub values: Vec<Complex64>,
}

impl BasisMatrix {
    pub fn assemble(n_max: usize, dirs: &[Direction]) -> Result<Self> {
        let l = dirs.len();
        let j = mode_count(n_max);
        let mut values = vec![Complex64::new(0.0, 0.0); 2 * l * j];
        for (i, dir) in dirs.iter().enumerate() {
            if dir.is_pole() {
                return Err(SimError::DegeneratePole);
            }
            let row = basis_row(n_max, dir);
            for (col, gain) in row.iter().enumerate() {
                values[i * j + col] = gain.e_v;
                values[(l + i) * j + col] = gain.e_h;
            }
        }
        Ok(Self { n_rows: 2 * l, n_cols: j, values })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn packed_index_is_contiguous() {
        for n_max in [1usize, 3, 7] {
            let idx: Vec<usize> = modes(n_max).map(|(s, m, n)| mode_index(s, m, n)).collect();
            assert_eq!(idx.len(), mode_count(n_max));
            assert!(idx.iter().enumerate().all(|(i, &v)| i == v));
        }
    }

    #[test]
    fn m_zero_s1_has_no_v_component() {
        let d = Direction::new(1.1, 2.2);
        for n in 1..=5 {
            let g = basis_functions(&d, 1, 0, n).unwrap();
            assert_eq!(g.e_v, Complex64::new(0.0, 0.0));
            assert!(g.e_h.norm() > 0.0 || n % 2 == 0); // H carries the mode
        }
    }

    #[test]
    fn s1_s2_swap_roles_with_i_power_shift() {
        // f_{V,2mn}/f_{H,1mn} = f_{H,2mn}/f_{V,1mn} = -(-j)^{-1} = -j··· the
        // component pattern swaps with a single extra (-j) factor.
        let d = Direction::new(0.9, 0.4);
        for (m, n) in [(1i32, 1usize), (2, 3), (-2, 4)] {
            let a = basis_functions(&d, 1, m, n).unwrap();
            let b = basis_functions(&d, 2, m, n).unwrap();
            let j = Complex64::new(0.0, 1.0);
            // s=1 = (-j)^{n+1}(mterm, -d); s=2 = (-j)^n(d, mterm)
            assert_relative_eq!((b.e_h * -j - a.e_v).norm(), 0.0, epsilon = 1e-14);
            assert_relative_eq!((b.e_v * -j + a.e_h).norm(), 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn golden_values_n1_m1() {
        // Symbolic evaluation at θ=π/2, φ=0: f_{1,1,1} = (-j√3/2, 0),
        // f_{2,1,1} = (0, +√3/2).
        let d = Direction::new(FRAC_PI_2, 0.0);
        let root3_2 = 3f64.sqrt() / 2.0;
        let g1 = basis_functions(&d, 1, 1, 1).unwrap();
        assert_relative_eq!(g1.e_v.re, 0.0, epsilon = 1e-14);
        assert_relative_eq!(g1.e_v.im, -root3_2, epsilon = 1e-14);
        assert_relative_eq!(g1.e_h.norm(), 0.0, epsilon = 1e-14);
        let g2 = basis_functions(&d, 2, 1, 1).unwrap();
        assert_relative_eq!(g2.e_v.norm(), 0.0, epsilon = 1e-14);
        assert_relative_eq!(g2.e_h.re, root3_2, epsilon = 1e-14);
        assert_relative_eq!(g2.e_h.im, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn row_matches_single_mode_evaluation() {
        let d = Direction::new(2.0, 5.1);
        let row = basis_row(6, &d);
        for (s, m, n) in modes(6) {
            let g = basis_functions(&d, s, m, n).unwrap();
            let r = row[mode_index(s, m, n)];
            assert_relative_eq!((g.e_v - r.e_v).norm(), 0.0, epsilon = 1e-13);
            assert_relative_eq!((g.e_h - r.e_h).norm(), 0.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn pole_is_rejected() {
        let d = Direction::new(0.0, 0.0);
        assert!(basis_functions(&d, 1, 1, 1).is_err());
        assert!(BasisMatrix::assemble(2, &[Direction::new(PI, 0.3)]).is_err());
    }
}

//! Complex least squares via Householder QR with column pivoting.
//!
//! Small dense systems only (the basis matrices are at most a few thousand
//! rows by a few hundred columns). Pivoting orders columns by remaining
//! norm, which makes the R diagonal a usable rank/conditioning report.

use crate::error::{Result, SimError};
use num_complex::Complex64;

pub struct LstsqSolution {
    pub x: Vec<Complex64>,
    /// |r_00| / |r_kk| over the retained diagonal: a condition estimate.
    pub condition: f64,
    pub rank: usize,
    /// ‖Ax - b‖ / ‖b‖ (1 for b = 0).
    pub relative_residual: f64,
}

/// Solve min ‖Ax - b‖₂ for dense row-major `a` (`rows × cols`).
///
/// Fails with a condition diagnostic when the numerical rank is below
/// `cols`; `ridge` augments the system with √ridge·I rows instead.
pub fn solve_least_squares(
    a: &[Complex64],
    rows: usize,
    cols: usize,
    b: &[Complex64],
    ridge: Option<f64>,
) -> Result<LstsqSolution> {
    assert_eq!(a.len(), rows * cols);
    assert_eq!(b.len(), rows);
    if rows < cols {
        return Err(SimError::GridTooCoarse { n_modes: cols, rows, cols });
    }

    let (mut m, mut rhs, eff_rows) = if let Some(eps) = ridge {
        let mut m = vec![Complex64::new(0.0, 0.0); (rows + cols) * cols];
        m[..rows * cols].copy_from_slice(a);
        let s = eps.sqrt();
        for k in 0..cols {
            m[(rows + k) * cols + k] = Complex64::new(s, 0.0);
        }
        let mut rhs = b.to_vec();
        rhs.resize(rows + cols, Complex64::new(0.0, 0.0));
        (m, rhs, rows + cols)
    } else {
        (a.to_vec(), b.to_vec(), rows)
    };

    let b_norm = norm(&rhs);
    let mut perm: Vec<usize> = (0..cols).collect();

    for k in 0..cols {
        // Pivot: bring the largest remaining column to position k.
        let mut best = k;
        let mut best_norm = -1.0;
        for c in k..cols {
            let n: f64 = (k..eff_rows).map(|r| m[r * cols + c].norm_sqr()).sum();
            if n > best_norm {
                best_norm = n;
                best = c;
            }
        }
        if best != k {
            perm.swap(k, best);
            for r in 0..eff_rows {
                m.swap(r * cols + k, r * cols + best);
            }
        }

        // Householder reflector for column k.
        let alpha = best_norm.sqrt();
        if alpha == 0.0 {
            continue;
        }
        let x0 = m[k * cols + k];
        let phase = if x0.norm() > 0.0 { x0 / x0.norm() } else { Complex64::new(1.0, 0.0) };
        let mut v: Vec<Complex64> = (k..eff_rows).map(|r| m[r * cols + k]).collect();
        v[0] += phase * alpha;
        let vnorm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        let beta = 2.0 / vnorm2;
        for c in k..cols {
            let dot: Complex64 =
                v.iter().enumerate().map(|(i, &vi)| vi.conj() * m[(k + i) * cols + c]).sum();
            let f = beta * dot;
            for (i, &vi) in v.iter().enumerate() {
                m[(k + i) * cols + c] -= f * vi;
            }
        }
        let dot: Complex64 = v.iter().enumerate().map(|(i, &vi)| vi.conj() * rhs[k + i]).sum();
        let f = beta * dot;
        for (i, &vi) in v.iter().enumerate() {
            rhs[k + i] -= f * vi;
        }
    }

    let diag: Vec<f64> = (0..cols).map(|k| m[k * cols + k].norm()).collect();
    let dmax = diag.iter().cloned().fold(0.0, f64::max);
    let rank = diag.iter().filter(|&&d| d > dmax * 1e-12).count();
    let dmin = diag.iter().cloned().fold(f64::INFINITY, f64::min);
    let condition = if dmin > 0.0 { dmax / dmin } else { f64::INFINITY };
    if rank < cols {
        return Err(SimError::RankDeficient { cond: condition });
    }

    // Back substitution, then undo the permutation.
    let mut y = vec![Complex64::new(0.0, 0.0); cols];
    for k in (0..cols).rev() {
        let mut s = rhs[k];
        for c in (k + 1)..cols {
            s -= m[k * cols + c] * y[c];
        }
        y[k] = s / m[k * cols + k];
    }
    let mut x = vec![Complex64::new(0.0, 0.0); cols];
    for (k, &p) in perm.iter().enumerate() {
        x[p] = y[k];
    }

    // Residual against the original (un-augmented) system.
    let mut res2 = 0.0;
    for r in 0..rows {
        let mut ax = Complex64::new(0.0, 0.0);
        for c in 0..cols {
            ax += a[r * cols + c] * x[c];
        }
        res2 += (ax - b[r]).norm_sqr();
    }
    let relative_residual = if b_norm > 0.0 { res2.sqrt() / b_norm } else { 1.0 };

    Ok(LstsqSolution { x, condition, rank, relative_residual })
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn recovers_exact_solution() {
        // 4x2 full-rank system with known x.
        let a = vec![
            c(1.0, 0.0), c(0.0, 1.0),
            c(2.0, -1.0), c(1.0, 0.5),
            c(0.0, 0.0), c(3.0, 0.0),
            c(-1.0, 2.0), c(0.5, 0.0),
        ];
        let x_true = [c(0.7, -0.3), c(-1.2, 0.4)];
        let b: Vec<Complex64> = (0..4)
            .map(|r| a[r * 2] * x_true[0] + a[r * 2 + 1] * x_true[1])
            .collect();
        let sol = solve_least_squares(&a, 4, 2, &b, None).unwrap();
        assert!((sol.x[0] - x_true[0]).norm() < 1e-13);
        assert!((sol.x[1] - x_true[1]).norm() < 1e-13);
        assert!(sol.relative_residual < 1e-13);
        assert_eq!(sol.rank, 2);
    }

    #[test]
    fn overdetermined_least_squares_matches_normal_equations() {
        // Real diagonal-ish case solvable by hand: columns e1, e1+e2.
        let a = vec![
            c(1.0, 0.0), c(1.0, 0.0),
            c(0.0, 0.0), c(1.0, 0.0),
            c(0.0, 0.0), c(0.0, 0.0),
        ];
        let b = vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        let sol = solve_least_squares(&a, 3, 2, &b, None).unwrap();
        // Normal equations: [[1,1],[1,2]] x = [1,1] -> x = [1, 0]
        assert_relative_eq!(sol.x[0].re, 1.0, epsilon = 1e-12);
        assert_relative_eq!(sol.x[1].re, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn rank_deficiency_is_reported() {
        let a = vec![
            c(1.0, 0.0), c(2.0, 0.0),
            c(2.0, 0.0), c(4.0, 0.0),
            c(3.0, 0.0), c(6.0, 0.0),
        ];
        let b = vec![c(1.0, 0.0); 3];
        match solve_least_squares(&a, 3, 2, &b, None) {
            Err(crate::SimError::RankDeficient { cond }) => assert!(cond > 1e10),
            other => panic!("expected rank deficiency, got {other:?}"),
        }
        // Ridge makes it solvable.
        assert!(solve_least_squares(&a, 3, 2, &b, Some(1e-8)).is_ok());
    }

    #[test]
    fn underdetermined_is_rejected() {
        let a = vec![c(1.0, 0.0), c(2.0, 0.0)];
        let b = vec![c(1.0, 0.0)];
        assert!(solve_least_squares(&a, 1, 2, &b, None).is_err());
    }
}

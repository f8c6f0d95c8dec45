//! Polarimetric far-field radiation patterns on full-sphere grids.
//!
//! Gains are complex field amplitudes for the θ- (V) and φ- (H) polarized
//! components, linear scale. Grids are uniform in θ and φ with the θ rows
//! offset by half a step so no point falls on a coordinate pole.
//!
//! The on-disk format is a text table, one row per grid point
//! (`theta_deg, phi_deg, re_ev, im_ev, re_eh, im_eh`) preceded by a `#`
//! header carrying the frequency and grid size.

use crate::error::{Result, SimError};
use crate::geom::Direction;
use crate::units::db10;
use num_complex::Complex64;
use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;
use std::path::Path;

// ── Polarimetric gain ───────────────────────────────────────────────────────

/// Complex field gains of the two polarizations at one direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarimetricGain {
    /// θ-polarized (vertical) component.
    pub e_v: Complex64,
    /// φ-polarized (horizontal) component.
    pub e_h: Complex64,
}

impl PolarimetricGain {
    pub const ZERO: Self = Self { e_v: Complex64::new(0.0, 0.0), e_h: Complex64::new(0.0, 0.0) };

    pub fn new(e_v: Complex64, e_h: Complex64) -> Self {
        Self { e_v, e_h }
    }

    /// Total power gain |e_V|² + |e_H|², linear.
    pub fn total_power(&self) -> f64 {
        self.e_v.norm_sqr() + self.e_h.norm_sqr()
    }

    /// Total power gain in dBi.
    pub fn total_gain_db(&self) -> f64 {
        db10(self.total_power())
    }

    pub fn scaled(&self, amplitude: f64) -> Self {
        Self { e_v: self.e_v * amplitude, e_h: self.e_h * amplitude }
    }

    pub fn is_finite(&self) -> bool {
        self.e_v.re.is_finite()
            && self.e_v.im.is_finite()
            && self.e_h.re.is_finite()
            && self.e_h.im.is_finite()
    }
}

// ── Sphere grid ─────────────────────────────────────────────────────────────

/// Uniform full-sphere grid, θ-major storage, poles offset by half a θ step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SphereGrid {
    n_theta: usize,
    n_phi: usize,
}

impl SphereGrid {
    pub fn new(n_theta: usize, n_phi: usize) -> Self {
        assert!(n_theta >= 2 && n_phi >= 2, "degenerate sphere grid");
        Self { n_theta, n_phi }
    }

    /// Grid with the given angular step in degrees (180/step × 360/step).
    pub fn with_step_deg(step: f64) -> Self {
        let n_theta = (180.0 / step).round() as usize;
        let n_phi = (360.0 / step).round() as usize;
        Self::new(n_theta, n_phi)
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn n_phi(&self) -> usize {
        self.n_phi
    }

    pub fn len(&self) -> usize {
        self.n_theta * self.n_phi
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn theta_step(&self) -> f64 {
        PI / self.n_theta as f64
    }

    pub fn phi_step(&self) -> f64 {
        TAU / self.n_phi as f64
    }

    pub fn theta(&self, i: usize) -> f64 {
        (i as f64 + 0.5) * self.theta_step()
    }

    pub fn phi(&self, j: usize) -> f64 {
        j as f64 * self.phi_step()
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.n_phi + j
    }

    pub fn direction(&self, idx: usize) -> Direction {
        Direction::new(self.theta(idx / self.n_phi), self.phi(idx % self.n_phi))
    }

    pub fn directions(&self) -> impl Iterator<Item = Direction> + '_ {
        (0..self.len()).map(move |i| self.direction(i))
    }
}

// ── Radiation pattern ───────────────────────────────────────────────────────

/// A polarimetric far-field pattern sampled on a [`SphereGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct RadiationPattern {
    grid: SphereGrid,
    gains: Vec<PolarimetricGain>,
    frequency: f64,
}

impl RadiationPattern {
    pub fn new(grid: SphereGrid, gains: Vec<PolarimetricGain>, frequency: f64) -> Result<Self> {
        if gains.len() != grid.len() {
            return Err(SimError::PatternFormat(format!(
                "{} gain rows for a {}x{} grid",
                gains.len(),
                grid.n_theta(),
                grid.n_phi()
            )));
        }
        if !gains.iter().all(PolarimetricGain::is_finite) {
            return Err(SimError::PatternFormat("non-finite gain entry".into()));
        }
        Ok(Self { grid, gains, frequency })
    }

    /// Sample a closed-form pattern on a grid.
    pub fn from_fn(
        grid: SphereGrid,
        frequency: f64,
        f: impl Fn(&Direction) -> PolarimetricGain,
    ) -> Self {
        let gains = grid.directions().map(|d| f(&d)).collect();
        Self { grid, gains, frequency }
    }

    pub fn grid(&self) -> &SphereGrid {
        &self.grid
    }

    pub fn gains(&self) -> &[PolarimetricGain] {
        &self.gains
    }

    pub fn frequency(&self) -> f64 {
        self.frequency
    }

    pub fn gain_at_index(&self, i: usize, j: usize) -> PolarimetricGain {
        self.gains[self.grid.index(i, j)]
    }

    /// Largest total power gain over the grid, dBi.
    pub fn peak_total_gain_db(&self) -> f64 {
        db10(self.gains.iter().map(PolarimetricGain::total_power).fold(0.0, f64::max))
    }

    /// Bilinear interpolation at an arbitrary direction. Azimuth wraps;
    /// polar rows clamp at the half-step offset edges.
    pub fn interpolate(&self, dir: &Direction) -> PolarimetricGain {
        let g = &self.grid;
        let t = dir.theta() / g.theta_step() - 0.5;
        let (i0, i1, ft) = if t <= 0.0 {
            (0, 0, 0.0)
        } else if t >= (g.n_theta - 1) as f64 {
            (g.n_theta - 1, g.n_theta - 1, 0.0)
        } else {
            let i0 = t.floor() as usize;
            (i0, i0 + 1, t - i0 as f64)
        };
        let p = dir.phi() / g.phi_step();
        let j0 = (p.floor() as usize) % g.n_phi;
        let j1 = (j0 + 1) % g.n_phi;
        let fp = p - p.floor();

        let blend = |a: Complex64, b: Complex64, f: f64| a * (1.0 - f) + b * f;
        let at = |i: usize, j: usize| self.gains[g.index(i, j)];
        let (g00, g01, g10, g11) = (at(i0, j0), at(i0, j1), at(i1, j0), at(i1, j1));
        PolarimetricGain {
            e_v: blend(blend(g00.e_v, g01.e_v, fp), blend(g10.e_v, g11.e_v, fp), ft),
            e_h: blend(blend(g00.e_h, g01.e_h, fp), blend(g10.e_h, g11.e_h, fp), ft),
        }
    }

    // ── file format ─────────────────────────────────────────────────────

    pub fn to_file_string(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "# mmgain pattern frequency_hz={:.8e} n_theta={} n_phi={}",
            self.frequency,
            self.grid.n_theta(),
            self.grid.n_phi()
        );
        let _ = writeln!(s, "theta_deg,phi_deg,re_ev,im_ev,re_eh,im_eh");
        for i in 0..self.grid.n_theta() {
            for j in 0..self.grid.n_phi() {
                let gain = self.gain_at_index(i, j);
                let _ = writeln!(
                    s,
                    "{:.8e},{:.8e},{:.8e},{:.8e},{:.8e},{:.8e}",
                    self.grid.theta(i).to_degrees(),
                    self.grid.phi(j).to_degrees(),
                    gain.e_v.re,
                    gain.e_v.im,
                    gain.e_h.re,
                    gain.e_h.im,
                );
            }
        }
        s
    }

    pub fn write_file(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_file_string())?;
        Ok(())
    }

    pub fn from_file_string(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| SimError::PatternFormat("empty file".into()))?;
        if !header.starts_with('#') {
            return Err(SimError::PatternFormat("missing '#' header line".into()));
        }
        let mut frequency = None;
        let mut n_theta = None;
        let mut n_phi = None;
        for token in header.trim_start_matches('#').split_whitespace() {
            if let Some((k, v)) = token.split_once('=') {
                match k {
                    "frequency_hz" => frequency = v.parse::<f64>().ok(),
                    "n_theta" => n_theta = v.parse::<usize>().ok(),
                    "n_phi" => n_phi = v.parse::<usize>().ok(),
                    _ => {}
                }
            }
        }
        let frequency =
            frequency.ok_or_else(|| SimError::PatternFormat("header lacks frequency_hz".into()))?;
        let n_theta =
            n_theta.ok_or_else(|| SimError::PatternFormat("header lacks n_theta".into()))?;
        let n_phi = n_phi.ok_or_else(|| SimError::PatternFormat("header lacks n_phi".into()))?;
        let grid = SphereGrid::new(n_theta, n_phi);

        let mut gains = vec![PolarimetricGain::ZERO; grid.len()];
        let mut seen = 0usize;
        for (lineno, line) in lines.enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with("theta_deg") {
                continue;
            }
            let fields: Vec<f64> = line
                .split(',')
                .map(|f| f.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| SimError::PatternFormat(format!("line {}: {e}", lineno + 2)))?;
            if fields.len() != 6 {
                return Err(SimError::PatternFormat(format!(
                    "line {}: expected 6 fields, got {}",
                    lineno + 2,
                    fields.len()
                )));
            }
            if fields.iter().any(|v| !v.is_finite()) {
                return Err(SimError::PatternFormat(format!("line {}: non-finite value", lineno + 2)));
            }
            let i = (fields[0].to_radians() / grid.theta_step() - 0.5).round() as usize;
            let j = (fields[1].to_radians() / grid.phi_step()).round() as usize % n_phi;
            if i >= n_theta {
                return Err(SimError::PatternFormat(format!(
                    "line {}: theta {} off grid",
                    lineno + 2,
                    fields[0]
                )));
            }
            gains[grid.index(i, j)] = PolarimetricGain::new(
                Complex64::new(fields[2], fields[3]),
                Complex64::new(fields[4], fields[5]),
            );
            seen += 1;
        }
        if seen != grid.len() {
            return Err(SimError::PatternFormat(format!(
                "{} rows for a {}x{} grid",
                seen, n_theta, n_phi
            )));
        }
        RadiationPattern::new(grid, gains, frequency)
    }

    pub fn read_file(path: &Path) -> Result<Self> {
        Self::from_file_string(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn test_pattern() -> RadiationPattern {
        RadiationPattern::from_fn(SphereGrid::new(18, 36), 60e9, |d| {
            PolarimetricGain::new(
                Complex64::new(d.theta().sin(), 0.1 * d.phi().cos()),
                Complex64::new(0.3, -0.2 * d.theta().cos()),
            )
        })
    }

    #[test]
    fn grid_avoids_poles() {
        let g = SphereGrid::new(18, 36);
        assert!(g.theta(0) > 0.0);
        assert!(g.theta(17) < PI);
        assert_eq!(g.len(), 18 * 36);
    }

    #[test]
    fn file_round_trip() {
        let p = test_pattern();
        let q = RadiationPattern::from_file_string(&p.to_file_string()).unwrap();
        assert_eq!(p.grid(), q.grid());
        assert_relative_eq!(q.frequency(), 60e9);
        for (a, b) in p.gains().iter().zip(q.gains()) {
            assert!((a.e_v - b.e_v).norm() < 1e-7);
            assert!((a.e_h - b.e_h).norm() < 1e-7);
        }
    }

    #[test]
    fn malformed_files_are_rejected() {
        assert!(RadiationPattern::from_file_string("").is_err());
        assert!(RadiationPattern::from_file_string("no header\n1,2,3").is_err());
        let p = test_pattern();
        let mut text = p.to_file_string();
        text.truncate(text.len() - 40); // drop the last row
        assert!(RadiationPattern::from_file_string(&text).is_err());
        let bad = text.replace("60", "nan");
        assert!(RadiationPattern::from_file_string(&bad).is_err());
    }

    #[test]
    fn interpolation_is_exact_on_grid_points() {
        let p = test_pattern();
        for idx in [0, 5, 100, 647] {
            let d = p.grid().direction(idx);
            let g = p.interpolate(&d);
            assert!((g.e_v - p.gains()[idx].e_v).norm() < 1e-12);
            assert!((g.e_h - p.gains()[idx].e_h).norm() < 1e-12);
        }
    }

    #[test]
    fn interpolation_wraps_azimuth() {
        let p = test_pattern();
        let g = p.grid();
        let d = Direction::new(g.theta(3), TAU - 0.25 * g.phi_step());
        let gain = p.interpolate(&d);
        let a = p.gain_at_index(3, g.n_phi() - 1);
        let b = p.gain_at_index(3, 0);
        let want = a.e_v * 0.75 + b.e_v * 0.25;
        assert!((gain.e_v - want).norm() < 1e-12);
    }
}

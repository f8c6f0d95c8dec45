//! Directions, Euler orientations and frame mappings.
//!
//! A [`Direction`] is a point on the unit sphere with polar angle `theta`
//! measured from +z and azimuth `phi` from +x toward +y. Its polarization
//! basis is the usual spherical pair (θ̂, φ̂).
//!
//! An [`EulerOrientation`] `(phi0, theta0, chi0)` rotates the phone from its
//! base posture by successive rotations about z, then the new y, then the
//! newest z. The equivalent matrix in the fixed frame is
//! `A = Rz(phi0) · Ry(theta0) · Rz(chi0)`; columns of `A` are the phone axes
//! expressed in the global frame. A global direction maps into the phone
//! frame through `Aᵀ`.

use nalgebra::{Matrix3, Vector3};
use std::f64::consts::{PI, TAU};

/// Exact-pole directions are perturbed by this polar offset before any
/// operation that needs the (θ̂, φ̂) basis.
pub const POLE_PERTURBATION: f64 = 1e-9;

// ── Direction ───────────────────────────────────────────────────────────────

/// A unit direction in spherical coordinates, radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    theta: f64,
    phi: f64,
}

impl Direction {
    /// Build a direction, normalizing `theta` into [0, π] and `phi` into
    /// [0, 2π). Normalization is idempotent.
    pub fn new(theta: f64, phi: f64) -> Self {
        let mut theta = theta.rem_euclid(TAU);
        let mut phi = phi;
        if theta > PI {
            theta = TAU - theta;
            phi += PI;
        }
        Self { theta, phi: phi.rem_euclid(TAU) }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn theta_deg(&self) -> f64 {
        self.theta.to_degrees()
    }

    pub fn phi_deg(&self) -> f64 {
        self.phi.to_degrees()
    }

    /// True when the direction lies exactly on a coordinate pole, where the
    /// (θ̂, φ̂) basis degenerates.
    pub fn is_pole(&self) -> bool {
        self.theta == 0.0 || self.theta == PI
    }

    /// Nudge an exact-pole direction off the pole by [`POLE_PERTURBATION`].
    pub fn perturbed_off_pole(&self) -> Self {
        if self.theta == 0.0 {
            Self { theta: POLE_PERTURBATION, phi: self.phi }
        } else if self.theta == PI {
            Self { theta: PI - POLE_PERTURBATION, phi: self.phi }
        } else {
            *self
        }
    }

    /// Cartesian unit vector.
    pub fn unit_vector(&self) -> Vector3<f64> {
        let (st, ct) = (self.theta.sin(), self.theta.cos());
        let (sp, cp) = (self.phi.sin(), self.phi.cos());
        Vector3::new(st * cp, st * sp, ct)
    }

    /// Direction of the Cartesian vector `v` (need not be normalized).
    pub fn from_vector(v: &Vector3<f64>) -> Self {
        let r = v.norm();
        let theta = (v.z / r).clamp(-1.0, 1.0).acos();
        let phi = v.y.atan2(v.x);
        Self::new(theta, phi)
    }

    /// Polar basis vector θ̂ (increasing θ).
    pub fn theta_hat(&self) -> Vector3<f64> {
        let (st, ct) = (self.theta.sin(), self.theta.cos());
        let (sp, cp) = (self.phi.sin(), self.phi.cos());
        Vector3::new(ct * cp, ct * sp, -st)
    }

    /// Azimuthal basis vector φ̂ (increasing φ).
    pub fn phi_hat(&self) -> Vector3<f64> {
        Vector3::new(-self.phi.sin(), self.phi.cos(), 0.0)
    }

    /// Great-circle angle to another direction.
    pub fn angle_to(&self, other: &Direction) -> f64 {
        self.unit_vector().dot(&other.unit_vector()).clamp(-1.0, 1.0).acos()
    }
}

// ── Euler orientation ───────────────────────────────────────────────────────

/// Phone posture as z / y₁ / z₂ Euler angles, radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerOrientation {
    pub phi0: f64,
    pub theta0: f64,
    pub chi0: f64,
}

impl EulerOrientation {
    pub const IDENTITY: Self = Self { phi0: 0.0, theta0: 0.0, chi0: 0.0 };

    pub fn new(phi0: f64, theta0: f64, chi0: f64) -> Self {
        Self { phi0, theta0, chi0 }
    }

    pub fn from_degrees(phi0: f64, theta0: f64, chi0: f64) -> Self {
        Self::new(phi0.to_radians(), theta0.to_radians(), chi0.to_radians())
    }

    /// Rotation matrix `A = Rz(phi0) · Ry(theta0) · Rz(chi0)`.
    ///
    /// `A` maps phone-frame coordinates to global coordinates (active
    /// rotation of the phone); it is orthonormal with det +1.
    pub fn rotation_matrix(&self) -> Matrix3<f64> {
        rot_z(self.phi0) * rot_y(self.theta0) * rot_z(self.chi0)
    }

    /// The orientation whose rotation matrix is the inverse of this one.
    pub fn inverse(&self) -> Self {
        Self { phi0: -self.chi0, theta0: -self.theta0, chi0: -self.phi0 }
    }

    /// Phone display normal (+z of the phone frame) in global coordinates.
    pub fn display_normal(&self) -> Vector3<f64> {
        self.rotation_matrix() * Vector3::z()
    }
}

fn rot_z(a: f64) -> Matrix3<f64> {
    let (s, c) = a.sin_cos();
    Matrix3::new(c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0)
}

fn rot_y(a: f64) -> Matrix3<f64> {
    let (s, c) = a.sin_cos();
    Matrix3::new(c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c)
}

// ── Frame mapping ───────────────────────────────────────────────────────────

/// Result of mapping a global arrival direction into the phone frame.
#[derive(Debug, Clone, Copy)]
pub struct FrameMapping {
    /// The direction expressed in the phone frame.
    pub phone_dir: Direction,
    /// 2×2 rotation taking phone-frame (V, H) field components at
    /// `phone_dir` to global-frame (V, H) components at the original
    /// direction: `[e_V; e_H]_global = pol_rotation · [e_V; e_H]_phone`.
    pub pol_rotation: [[f64; 2]; 2],
    /// Set when the mapped direction fell on a pole and was perturbed by
    /// [`POLE_PERTURBATION`].
    pub degenerate_pole: bool,
}

/// Map a global direction and its polarization basis into the phone frame
/// for a phone at orientation `o`.
pub fn to_phone_frame(global: &Direction, o: &EulerOrientation) -> FrameMapping {
    let a = o.rotation_matrix();
    let global = if global.is_pole() { global.perturbed_off_pole() } else { *global };
    let u_phone = a.transpose() * global.unit_vector();
    let mut phone_dir = Direction::from_vector(&u_phone);
    let degenerate_pole = phone_dir.is_pole();
    if degenerate_pole {
        phone_dir = phone_dir.perturbed_off_pole();
    }

    // Rotate the phone-frame basis vectors into the global frame and project
    // onto the global basis at the original direction.
    let th_g = global.theta_hat();
    let ph_g = global.phi_hat();
    let th_p = a * phone_dir.theta_hat();
    let ph_p = a * phone_dir.phi_hat();
    let pol_rotation = [
        [th_g.dot(&th_p), th_g.dot(&ph_p)],
        [ph_g.dot(&th_p), ph_g.dot(&ph_p)],
    ];
    FrameMapping { phone_dir, pol_rotation, degenerate_pole }
}

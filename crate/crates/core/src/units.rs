//! Unit conventions and physical constants.
//!
//! Internally everything is SI and radians. Quantities cross into dB only at
//! the display/file boundary: power ratios via [`db10`], field amplitudes via
//! [`db20`].

/// Speed of light in vacuum, m/s.
pub const C_LIGHT: f64 = 299_792_458.0;

/// Free-space wavelength at `frequency` Hz, in metres.
#[inline]
pub fn wavelength(frequency: f64) -> f64 {
    C_LIGHT / frequency
}

/// Wavenumber 2π/λ at `frequency` Hz, in rad/m.
#[inline]
pub fn wavenumber(frequency: f64) -> f64 {
    2.0 * std::f64::consts::PI / wavelength(frequency)
}

/// Power ratio to dB.
#[inline]
pub fn db10(power: f64) -> f64 {
    10.0 * power.log10()
}

/// Field-amplitude ratio to dB.
#[inline]
pub fn db20(amplitude: f64) -> f64 {
    20.0 * amplitude.log10()
}

/// dB to linear power ratio.
#[inline]
pub fn from_db10(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// dB to linear field-amplitude ratio.
#[inline]
pub fn from_db20(db: f64) -> f64 {
    10f64.powf(db / 20.0)
}

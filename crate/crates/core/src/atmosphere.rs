//! International Standard Atmosphere, troposphere layer only.

use crate::error::{Error, Result};

/// Standard gravitational acceleration (m/s²).
pub const STANDARD_GRAVITY: f64 = 9.80665;
/// Specific gas constant for dry air (J/(kg·K)).
pub const GAS_CONSTANT_AIR: f64 = 287.053;

pub const SEA_LEVEL_TEMPERATURE_K: f64 = 288.15;
pub const SEA_LEVEL_DENSITY: f64 = 1.225;
/// Temperature lapse rate in the troposphere (K/m).
pub const LAPSE_RATE: f64 = 0.0065;
/// Upper edge of the troposphere (m).
pub const TROPOPAUSE_M: f64 = 11_000.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtmosphereState {
    /// Geopotential altitude (m).
    pub altitude_m: f64,
    /// Air density (kg/m³).
    pub density: f64,
    /// Static temperature (K).
    pub temperature_k: f64,
}

/// Full ISA state at a geopotential altitude between sea level and the tropopause.
pub fn isa_state(altitude_m: f64) -> Result<AtmosphereState> {
    if !(0.0..=TROPOPAUSE_M).contains(&altitude_m) {
        return Err(Error::Domain(format!(
            "altitude {altitude_m} m outside the troposphere model range [0, {TROPOPAUSE_M}] m"
        )));
    }
    let temperature_k = SEA_LEVEL_TEMPERATURE_K - LAPSE_RATE * altitude_m;
    let exponent = STANDARD_GRAVITY / (LAPSE_RATE * GAS_CONSTANT_AIR) - 1.0;
    let density = SEA_LEVEL_DENSITY * (temperature_k / SEA_LEVEL_TEMPERATURE_K).powf(exponent);
    Ok(AtmosphereState {
        altitude_m,
        density,
        temperature_k,
    })
}

/// Air density (kg/m³) at `altitude_m`.
pub fn air_density(altitude_m: f64) -> Result<f64> {
    isa_state(altitude_m).map(|s| s.density)
}

//! Terrestrial vehicle baselines and EVTOL crossover ranges.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VehicleKind {
    #[serde(rename = "EV")]
    Ev,
    #[serde(rename = "ICEV")]
    Icev,
}

/// Road vehicle with a range-independent duty cycle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TerrestrialVehicle {
    pub name: String,
    pub kind: VehicleKind,
    /// Per vehicle, per road mile.
    #[serde(rename = "road_consumption_Wh_per_mi")]
    pub road_consumption_wh_per_mi: f64,
    /// Road distance over point-to-point distance.
    pub circuity: f64,
    pub occupancy: f64,
    pub max_occupancy: u32,
}

impl TerrestrialVehicle {
    pub fn validate(&self) -> Result<()> {
        if !(self.road_consumption_wh_per_mi > 0.0 && self.road_consumption_wh_per_mi.is_finite()) {
            return Err(Error::param("road_consumption_Wh_per_mi", "must be > 0"));
        }
        if !(self.circuity >= 1.0 && self.circuity.is_finite()) {
            return Err(Error::param("circuity", "must be >= 1"));
        }
        if !(self.occupancy > 0.0 && self.occupancy <= f64::from(self.max_occupancy)) {
            return Err(Error::param("occupancy", "must lie in (0, max_occupancy]"));
        }
        Ok(())
    }

    /// Same vehicle carrying a different number of occupants.
    pub fn with_occupancy(&self, occupancy: f64) -> Result<TerrestrialVehicle> {
        let v = TerrestrialVehicle {
            occupancy,
            ..self.clone()
        };
        v.validate()?;
        Ok(v)
    }
}

/// Wh per point-to-point passenger-mile.
pub fn terrestrial_energy_per_passenger_mile(v: &TerrestrialVehicle) -> Result<f64> {
    v.validate()?;
    Ok(v.road_consumption_wh_per_mi * v.circuity / v.occupancy)
}

/// First range at which a decreasing energy curve reaches `baseline`,
/// interpolated linearly between the bracketing samples. `None` when the
/// curve stays above the baseline over its whole span.
pub fn crossover_range(curve: &[(f64, f64)], baseline: f64) -> Result<Option<f64>> {
    if curve.len() < 2 {
        return Err(Error::Data("crossover needs at least two curve points".into()));
    }
    if curve.iter().any(|(r, e)| !r.is_finite() || !e.is_finite()) || !baseline.is_finite() {
        return Err(Error::Data("curve and baseline must be finite".into()));
    }
    for w in curve.windows(2) {
        if w[0].0 >= w[1].0 {
            return Err(Error::Data(format!(
                "curve ranges not ascending at {} mi",
                w[1].0
            )));
        }
        if w[1].1 >= w[0].1 {
            return Err(Error::Data(format!(
                "curve not strictly decreasing at {} mi",
                w[1].0
            )));
        }
    }
    let Some(i) = curve.iter().position(|&(_, e)| e <= baseline) else {
        return Ok(None);
    };
    if i == 0 {
        return Ok(Some(curve[0].0));
    }
    let (r0, e0) = curve[i - 1];
    let (r1, e1) = curve[i];
    let r = r0 + (e0 - baseline) * (r1 - r0) / (e0 - e1);
    Ok(Some(r.clamp(r0, r1)))
}

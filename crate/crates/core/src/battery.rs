//! Battery pack requirements from a mission, and feasibility against
//! published pack data.

use std::fmt;
use std::str::FromStr;

use crate::atmosphere::air_density;
use crate::dataio::units::mps_to_mph;
use crate::error::{Error, Result};
use crate::mission::{AircraftSpec, MissionProfile};
use crate::powerplant::max_range_speed;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BatteryRequirement {
    pub battery_mass_kg: f64,
    pub specific_energy_wh_per_kg: f64,
    pub specific_power_w_per_kg: f64,
    pub ewf_used: f64,
    /// Fraction of the pack assumed failed when sizing for peak power.
    pub failure_fraction: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PackCategory {
    CurrentLiIon,
    NovelPrototypeLiIon,
    Advanced,
}

impl PackCategory {
    pub const ALL: [PackCategory; 3] = [
        PackCategory::CurrentLiIon,
        PackCategory::NovelPrototypeLiIon,
        PackCategory::Advanced,
    ];

    /// Dataset label, matched case-sensitively.
    pub fn label(self) -> &'static str {
        match self {
            PackCategory::CurrentLiIon => "Current Li-ion",
            PackCategory::NovelPrototypeLiIon => "Novel/prototype Li-ion",
            PackCategory::Advanced => "Advanced",
        }
    }
}

impl fmt::Display for PackCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for PackCategory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PackCategory::ALL
            .into_iter()
            .find(|c| c.label() == s)
            .ok_or_else(|| Error::Data(format!("unknown pack category \"{s}\"")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BatteryPackRecord {
    pub name: String,
    pub category: PackCategory,
    pub specific_energy_wh_per_kg: f64,
    pub specific_power_w_per_kg: f64,
}

impl BatteryPackRecord {
    pub fn meets(&self, req: &BatteryRequirement) -> bool {
        self.specific_energy_wh_per_kg >= req.specific_energy_wh_per_kg
            && self.specific_power_w_per_kg >= req.specific_power_w_per_kg
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CategoryVerdict {
    pub category: PackCategory,
    pub feasible: bool,
    /// Packs in this category meeting both requirements, in dataset order.
    pub dominating: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityReport {
    /// One verdict per category, in `PackCategory::ALL` order.
    pub verdicts: Vec<CategoryVerdict>,
}

impl FeasibilityReport {
    pub fn verdict(&self, category: PackCategory) -> &CategoryVerdict {
        self.verdicts
            .iter()
            .find(|v| v.category == category)
            .expect("report covers every category")
    }

    pub fn any_feasible(&self) -> bool {
        self.verdicts.iter().any(|v| v.feasible)
    }
}

/// Mass left for the battery once payload and empty mass are taken out of MTOM.
pub fn battery_mass(mtom_kg: f64, ewf: f64, payload_kg: f64) -> Result<f64> {
    if !(mtom_kg > 0.0 && mtom_kg.is_finite()) {
        return Err(Error::param("mtom_kg", "must be > 0"));
    }
    if !(ewf > 0.0 && ewf < 1.0) {
        return Err(Error::param("ewf", "must lie in (0, 1)"));
    }
    if !(payload_kg >= 0.0 && payload_kg.is_finite()) {
        return Err(Error::param("payload_kg", "must be >= 0"));
    }
    let mass = mtom_kg - mtom_kg * ewf - payload_kg;
    if mass <= 0.0 {
        return Err(Error::InfeasibleMassBudget { shortfall_kg: -mass });
    }
    Ok(mass)
}

/// Pack requirement for a mission flown at full payload with reserves.
pub fn size_battery(
    spec: &AircraftSpec,
    profile: &MissionProfile,
    ewf: f64,
    failure_fraction: f64,
) -> Result<BatteryRequirement> {
    if !profile.has_reserve() {
        return Err(Error::Contract(
            "battery sizing needs a mission profile built with reserves".into(),
        ));
    }
    if profile.aircraft != spec.name {
        return Err(Error::Contract(format!(
            "profile was built for `{}`, not `{}`",
            profile.aircraft, spec.name
        )));
    }
    if !(0.0..1.0).contains(&failure_fraction) {
        return Err(Error::param("failure_fraction", "must lie in [0, 1)"));
    }
    let mass = battery_mass(spec.mtom_kg, ewf, spec.payload_kg())?;
    let energy = profile.total_energy_wh + profile.reserve_energy_wh;
    Ok(BatteryRequirement {
        battery_mass_kg: mass,
        specific_energy_wh_per_kg: energy / mass,
        specific_power_w_per_kg: profile.peak_power_w / (mass * (1.0 - failure_fraction)),
        ewf_used: ewf,
        failure_fraction,
    })
}

/// Requirements over the Cartesian product of EWF values and failure
/// fractions, EWF-major.
pub fn ewf_sweep(
    spec: &AircraftSpec,
    profile: &MissionProfile,
    ewf_values: &[f64],
    failure_fractions: &[f64],
) -> Result<Vec<BatteryRequirement>> {
    let mut out = Vec::with_capacity(ewf_values.len() * failure_fractions.len());
    for &ewf in ewf_values {
        for &failure_fraction in failure_fractions {
            let req = size_battery(spec, profile, ewf, failure_fraction).map_err(|e| Error::SweepPoint {
                ewf,
                failure_fraction,
                source: Box::new(e),
            })?;
            out.push(req);
        }
    }
    Ok(out)
}

/// Per-category verdict: feasible iff some pack in the category meets or
/// exceeds both specific energy and specific power.
pub fn classify_feasibility(
    req: &BatteryRequirement,
    packs: &[BatteryPackRecord],
) -> Result<FeasibilityReport> {
    if packs.is_empty() {
        return Err(Error::Data("battery pack dataset is empty".into()));
    }
    let verdicts = PackCategory::ALL
        .into_iter()
        .map(|category| {
            let dominating: Vec<String> = packs
                .iter()
                .filter(|p| p.category == category && p.meets(req))
                .map(|p| p.name.clone())
                .collect();
            CategoryVerdict {
                category,
                feasible: !dominating.is_empty(),
                dominating,
            }
        })
        .collect();
    Ok(FeasibilityReport { verdicts })
}

/// Cruise speed used for battery sizing: the maximum-range speed of the drag
/// polar at cruise altitude when one is given, else the design cruise speed.
pub fn sizing_cruise_speed_mph(spec: &AircraftSpec) -> Result<f64> {
    match &spec.drag_polar {
        Some(polar) => {
            let rho = air_density(spec.cruise_altitude_m)?;
            Ok(mps_to_mph(max_range_speed(polar, spec.weight_n(), rho)?))
        }
        None => Ok(spec.design_cruise_speed_mph),
    }
}

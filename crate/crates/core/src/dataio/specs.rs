//! Spec documents: TOML with a `[defaults]` table, one `[[aircraft]]` table
//! per design and one `[[vehicles]]` table per road vehicle.
//!
//! ```toml
//! format_version = 1
//!
//! [defaults]
//! cruise_altitude_m = 300.0
//!
//! [[aircraft]]
//! name = "demo"
//! propulsion = "open_rotor"
//! mtom_kg = 1000.0
//! # ...
//! ```
//!
//! Every key is checked; unknown keys are rejected.

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::units::nautical_miles_to_miles;
use crate::compare::TerrestrialVehicle;
use crate::error::{Error, Result};
use crate::mission::AircraftSpec;
use crate::powerplant::{DragPolar, PropulsionKind, DEFAULT_INTERFERENCE_FACTOR};

pub const FORMAT_VERSION: u32 = 1;

const DEFAULT_CRUISE_ALTITUDE_M: f64 = 300.0;
const DEFAULT_HOVER_ALTITUDE_M: f64 = 15.0;
const DEFAULT_VERTICAL_CLIMB_RATE_MPS: f64 = 2.0;
const DEFAULT_WING_CLIMB_RATE_MPS: f64 = 5.0;
const DEFAULT_PAYLOAD_PER_SEAT_KG: f64 = 100.0;
const DEFAULT_HOVER_DWELL_S: f64 = 0.0;

/// Document-wide overrides for per-aircraft parameters left unset.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Defaults {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cruise_altitude_m: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hover_altitude_m: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertical_climb_rate_mps: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wing_climb_rate_mps: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub payload_per_seat_kg: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hover_dwell_s: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interference_factor: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpecDocument {
    pub format_version: u32,
    pub defaults: Defaults,
    pub aircraft: Vec<AircraftSpec>,
    pub vehicles: Vec<TerrestrialVehicle>,
}

impl SpecDocument {
    pub fn aircraft_named(&self, name: &str) -> Option<&AircraftSpec> {
        self.aircraft.iter().find(|a| a.name == name)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    format_version: u32,
    #[serde(default)]
    defaults: Defaults,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    aircraft: Vec<RawAircraft>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    vehicles: Vec<TerrestrialVehicle>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAircraft {
    name: String,
    propulsion: PropulsionKind,
    mtom_kg: f64,
    seats: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    payload_per_seat_kg: Option<f64>,
    disc_area_m2: f64,
    fom: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    interference_factor: Option<f64>,
    eta_vertical: f64,
    eta_fixed_wing: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lod_climb: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lod_cruise: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lod_descent: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    design_range_mi: Option<f64>,
    /// Input convenience; converted to miles on load.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    design_range_nmi: Option<f64>,
    design_cruise_speed_mph: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertical_climb_rate_mps: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    wing_climb_rate_mps: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hover_altitude_m: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cruise_altitude_m: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hover_dwell_s: Option<f64>,
    ewf: f64,
    // Tables serialise last.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    drag_polar: Option<DragPolar>,
}

impl RawAircraft {
    fn resolve(self, d: &Defaults) -> Result<AircraftSpec> {
        let design_range_mi = match (self.design_range_mi, self.design_range_nmi) {
            (Some(mi), None) => mi,
            (None, Some(nmi)) => nautical_miles_to_miles(nmi),
            (mi, _) => {
                return Err(Error::Validation {
                    spec: self.name,
                    field: "design_range_mi".into(),
                    reason: if mi.is_some() {
                        "give design_range_mi or design_range_nmi, not both".into()
                    } else {
                        "missing (set design_range_mi or design_range_nmi)".into()
                    },
                })
            }
        };
        let spec = AircraftSpec {
            propulsion: self.propulsion,
            mtom_kg: self.mtom_kg,
            seats: self.seats,
            payload_per_seat_kg: self
                .payload_per_seat_kg
                .or(d.payload_per_seat_kg)
                .unwrap_or(DEFAULT_PAYLOAD_PER_SEAT_KG),
            disc_area_m2: self.disc_area_m2,
            fom: self.fom,
            interference_factor: self
                .interference_factor
                .or(d.interference_factor)
                .unwrap_or(DEFAULT_INTERFERENCE_FACTOR),
            eta_vertical: self.eta_vertical,
            eta_fixed_wing: self.eta_fixed_wing,
            lod_climb: self.lod_climb,
            lod_cruise: self.lod_cruise,
            lod_descent: self.lod_descent,
            drag_polar: self.drag_polar,
            design_range_mi,
            design_cruise_speed_mph: self.design_cruise_speed_mph,
            vertical_climb_rate_mps: self
                .vertical_climb_rate_mps
                .or(d.vertical_climb_rate_mps)
                .unwrap_or(DEFAULT_VERTICAL_CLIMB_RATE_MPS),
            wing_climb_rate_mps: self
                .wing_climb_rate_mps
                .or(d.wing_climb_rate_mps)
                .unwrap_or(DEFAULT_WING_CLIMB_RATE_MPS),
            hover_altitude_m: self
                .hover_altitude_m
                .or(d.hover_altitude_m)
                .unwrap_or(DEFAULT_HOVER_ALTITUDE_M),
            cruise_altitude_m: self
                .cruise_altitude_m
                .or(d.cruise_altitude_m)
                .unwrap_or(DEFAULT_CRUISE_ALTITUDE_M),
            hover_dwell_s: self
                .hover_dwell_s
                .or(d.hover_dwell_s)
                .unwrap_or(DEFAULT_HOVER_DWELL_S),
            ewf: self.ewf,
            name: self.name,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn from_spec(a: &AircraftSpec) -> Self {
        RawAircraft {
            name: a.name.clone(),
            propulsion: a.propulsion,
            mtom_kg: a.mtom_kg,
            seats: a.seats,
            payload_per_seat_kg: Some(a.payload_per_seat_kg),
            disc_area_m2: a.disc_area_m2,
            fom: a.fom,
            interference_factor: Some(a.interference_factor),
            eta_vertical: a.eta_vertical,
            eta_fixed_wing: a.eta_fixed_wing,
            lod_climb: a.lod_climb,
            lod_cruise: a.lod_cruise,
            lod_descent: a.lod_descent,
            design_range_mi: Some(a.design_range_mi),
            design_range_nmi: None,
            design_cruise_speed_mph: a.design_cruise_speed_mph,
            vertical_climb_rate_mps: Some(a.vertical_climb_rate_mps),
            wing_climb_rate_mps: Some(a.wing_climb_rate_mps),
            hover_altitude_m: Some(a.hover_altitude_m),
            cruise_altitude_m: Some(a.cruise_altitude_m),
            hover_dwell_s: Some(a.hover_dwell_s),
            ewf: a.ewf,
            drag_polar: a.drag_polar,
        }
    }
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let offset = offset.min(text.len());
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rfind('\n').map_or(offset, |nl| offset - nl - 1) + 1;
    (line, column)
}

/// Parse and fully validate a spec document.
pub fn parse_specs(text: &str) -> Result<SpecDocument> {
    let raw: RawDocument = toml::from_str(text).map_err(|e| {
        let (line, column) = e.span().map_or((0, 0), |s| line_column(text, s.start));
        Error::Parse {
            line,
            column,
            message: e.message().to_owned(),
        }
    })?;
    if raw.format_version != FORMAT_VERSION {
        return Err(Error::Validation {
            spec: "document".into(),
            field: "format_version".into(),
            reason: format!("expected {FORMAT_VERSION}, found {}", raw.format_version),
        });
    }

    let mut seen = HashSet::new();
    for a in &raw.aircraft {
        if !seen.insert(a.name.as_str()) {
            return Err(Error::Duplicate {
                list: "aircraft",
                name: a.name.clone(),
            });
        }
    }
    let mut seen = HashSet::new();
    for v in &raw.vehicles {
        if !seen.insert(v.name.as_str()) {
            return Err(Error::Duplicate {
                list: "vehicle",
                name: v.name.clone(),
            });
        }
    }
    for v in &raw.vehicles {
        v.validate().map_err(|e| match e {
            Error::Parameter { field, reason } => Error::Validation {
                spec: v.name.clone(),
                field: field.into(),
                reason,
            },
            other => other,
        })?;
    }

    let defaults = raw.defaults;
    let aircraft = raw
        .aircraft
        .into_iter()
        .map(|a| a.resolve(&defaults))
        .collect::<Result<Vec<_>>>()?;
    Ok(SpecDocument {
        format_version: raw.format_version,
        defaults,
        aircraft,
        vehicles: raw.vehicles,
    })
}

pub fn load_specs(path: impl AsRef<Path>) -> Result<SpecDocument> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_specs(&text)
}

/// Serialise a document with every aircraft parameter written explicitly.
pub fn to_spec_string(doc: &SpecDocument) -> String {
    let raw = RawDocument {
        format_version: doc.format_version,
        defaults: doc.defaults.clone(),
        aircraft: doc.aircraft.iter().map(RawAircraft::from_spec).collect(),
        vehicles: doc.vehicles.clone(),
    };
    toml::to_string(&raw).expect("spec documents contain only TOML-representable values")
}

pub fn save_specs(doc: &SpecDocument, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, to_spec_string(doc)).map_err(|e| Error::io(path, e))
}

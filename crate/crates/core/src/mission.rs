//! Mission profiles: a fixed take-off/climb/cruise/descent/landing schedule
//! evaluated segment by segment, and the per-passenger-mile energy curves
//! derived from it.

use serde::{Deserialize, Serialize};

use crate::atmosphere::{air_density, STANDARD_GRAVITY, TROPOPAUSE_M};
use crate::dataio::units::{miles_to_m, mph_to_mps};
use crate::error::{Error, Result};
use crate::powerplant::{
    fixed_wing_power, lift_to_drag_at, min_power_speed, vertical_power, DragPolar, FixedWingParams,
    PropulsionKind, VerticalFlightParams,
};

/// Length of the reserve segment (30 minutes).
pub const RESERVE_DURATION_S: f64 = 1800.0;

/// One EVTOL design, fully resolved (every default already applied).
#[derive(Debug, Clone, PartialEq)]
pub struct AircraftSpec {
    pub name: String,
    pub propulsion: PropulsionKind,
    pub mtom_kg: f64,
    /// Passenger seats, pilot included.
    pub seats: u32,
    pub payload_per_seat_kg: f64,
    /// Total rotor (or fan) disc area.
    pub disc_area_m2: f64,
    pub fom: f64,
    pub interference_factor: f64,
    pub eta_vertical: f64,
    pub eta_fixed_wing: f64,
    pub lod_climb: Option<f64>,
    pub lod_cruise: Option<f64>,
    pub lod_descent: Option<f64>,
    pub drag_polar: Option<DragPolar>,
    pub design_range_mi: f64,
    pub design_cruise_speed_mph: f64,
    pub vertical_climb_rate_mps: f64,
    pub wing_climb_rate_mps: f64,
    /// Height at which vertical flight hands over to wing-borne flight.
    pub hover_altitude_m: f64,
    pub cruise_altitude_m: f64,
    /// Hover held at `hover_altitude_m` after take-off and again before landing.
    pub hover_dwell_s: f64,
    pub ewf: f64,
}

impl AircraftSpec {
    pub fn weight_n(&self) -> f64 {
        self.mtom_kg * STANDARD_GRAVITY
    }

    pub fn payload_kg(&self) -> f64 {
        f64::from(self.seats) * self.payload_per_seat_kg
    }

    pub fn disc_loading_kg_m2(&self) -> f64 {
        self.mtom_kg / self.disc_area_m2
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |field: &str, reason: &str| {
            Err(Error::Validation {
                spec: self.name.clone(),
                field: field.to_owned(),
                reason: reason.to_owned(),
            })
        };
        let unit = |x: f64| x > 0.0 && x <= 1.0;
        if self.name.trim().is_empty() {
            return fail("name", "must not be empty");
        }
        if !(self.mtom_kg > 0.0 && self.mtom_kg.is_finite()) {
            return fail("mtom_kg", "must be > 0");
        }
        if self.seats < 1 {
            return fail("seats", "must be >= 1");
        }
        if !(self.payload_per_seat_kg >= 0.0 && self.payload_per_seat_kg.is_finite()) {
            return fail("payload_per_seat_kg", "must be >= 0");
        }
        if !(self.disc_area_m2 > 0.0 && self.disc_area_m2.is_finite()) {
            return fail("disc_area_m2", "must be > 0");
        }
        if !unit(self.fom) {
            return fail("fom", "must lie in (0, 1]");
        }
        if !(self.interference_factor >= 1.0 && self.interference_factor.is_finite()) {
            return fail("interference_factor", "must be >= 1");
        }
        if !unit(self.eta_vertical) {
            return fail("eta_vertical", "must lie in (0, 1]");
        }
        if !unit(self.eta_fixed_wing) {
            return fail("eta_fixed_wing", "must lie in (0, 1]");
        }
        for (field, lod) in [
            ("lod_climb", self.lod_climb),
            ("lod_cruise", self.lod_cruise),
            ("lod_descent", self.lod_descent),
        ] {
            if let Some(v) = lod {
                if !(v > 0.0 && v.is_finite()) {
                    return fail(field, "must be > 0");
                }
            }
        }
        if let Some(polar) = &self.drag_polar {
            if let Err(Error::Parameter { field, reason }) = polar.validate() {
                return fail(&format!("drag_polar.{field}"), &reason);
            }
        }
        if self.lod_cruise.is_none() && self.drag_polar.is_none() {
            return fail("lod_cruise", "required when no drag_polar is given");
        }
        if !(self.design_range_mi > 0.0 && self.design_range_mi.is_finite()) {
            return fail("design_range_mi", "must be > 0");
        }
        if !(self.design_cruise_speed_mph > 0.0 && self.design_cruise_speed_mph.is_finite()) {
            return fail("design_cruise_speed_mph", "must be > 0");
        }
        if !(self.vertical_climb_rate_mps > 0.0 && self.vertical_climb_rate_mps.is_finite()) {
            return fail("vertical_climb_rate_mps", "must be > 0");
        }
        if !(self.wing_climb_rate_mps > 0.0 && self.wing_climb_rate_mps.is_finite()) {
            return fail("wing_climb_rate_mps", "must be > 0");
        }
        if !(self.hover_altitude_m > 0.0 && self.hover_altitude_m <= TROPOPAUSE_M) {
            return fail("hover_altitude_m", "must lie in (0, 11000] m");
        }
        if !(self.cruise_altitude_m >= self.hover_altitude_m && self.cruise_altitude_m <= TROPOPAUSE_M) {
            return fail("cruise_altitude_m", "must lie in [hover_altitude_m, 11000] m");
        }
        if !(self.hover_dwell_s >= 0.0 && self.hover_dwell_s.is_finite()) {
            return fail("hover_dwell_s", "must be >= 0");
        }
        if !(self.ewf > 0.0 && self.ewf < 1.0) {
            return fail("ewf", "must lie in (0, 1)");
        }
        let available = self.mtom_kg - self.mtom_kg * self.ewf;
        if self.payload_kg() >= available {
            return fail(
                "seats",
                &format!(
                    "payload {} kg leaves no battery mass (MTOM less empty mass is {available} kg)",
                    self.payload_kg()
                ),
            );
        }
        Ok(())
    }

    /// L/D for a wing-borne segment: a direct value wins, then the drag
    /// polar at the segment's flight condition, then the cruise value.
    fn segment_lift_to_drag(&self, direct: Option<f64>, speed_mps: f64, density: f64) -> Result<f64> {
        if let Some(lod) = direct {
            return Ok(lod);
        }
        match (&self.drag_polar, self.lod_cruise) {
            (Some(polar), _) => lift_to_drag_at(polar, speed_mps, self.weight_n(), density),
            (None, Some(lod)) => Ok(lod),
            (None, None) => Err(Error::Contract(format!(
                "aircraft `{}` has neither an L/D nor a drag polar",
                self.name
            ))),
        }
    }

    fn vertical(&self, climb_rate_mps: f64, density: f64) -> Result<f64> {
        vertical_power(
            self.propulsion,
            &VerticalFlightParams {
                weight_n: self.weight_n(),
                disc_area_m2: self.disc_area_m2,
                fom: self.fom,
                interference_factor: self.interference_factor,
                climb_rate_mps,
                density,
                efficiency: self.eta_vertical,
            },
        )
    }

    fn wing(&self, speed_mps: f64, vertical_speed_mps: f64, lod: f64) -> Result<f64> {
        fixed_wing_power(&FixedWingParams {
            weight_n: self.weight_n(),
            forward_speed_mps: speed_mps,
            vertical_speed_mps,
            lift_to_drag: lod,
            efficiency: self.eta_fixed_wing,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SegmentKind {
    VerticalClimb,
    Hover,
    WingClimb,
    Cruise,
    WingDescent,
    VerticalDescent,
    Reserve,
}

impl SegmentKind {
    pub fn label(self) -> &'static str {
        match self {
            SegmentKind::VerticalClimb => "vertical_climb",
            SegmentKind::Hover => "hover",
            SegmentKind::WingClimb => "wing_climb",
            SegmentKind::Cruise => "cruise",
            SegmentKind::WingDescent => "wing_descent",
            SegmentKind::VerticalDescent => "vertical_descent",
            SegmentKind::Reserve => "reserve",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MissionSegment {
    pub kind: SegmentKind,
    pub duration_s: f64,
    /// Ground distance covered.
    pub distance_m: f64,
    pub power_w: f64,
    pub energy_wh: f64,
}

impl MissionSegment {
    fn new(kind: SegmentKind, duration_s: f64, distance_m: f64, power_w: f64) -> Self {
        MissionSegment {
            kind,
            duration_s,
            distance_m,
            power_w,
            energy_wh: power_w * duration_s / 3600.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MissionProfile {
    pub aircraft: String,
    pub range_mi: f64,
    pub cruise_speed_mph: f64,
    pub segments: Vec<MissionSegment>,
    /// Trip energy, reserve excluded.
    pub total_energy_wh: f64,
    pub reserve_energy_wh: f64,
    pub peak_power_w: f64,
}

impl MissionProfile {
    pub fn segment(&self, kind: SegmentKind) -> Option<&MissionSegment> {
        self.segments.iter().find(|s| s.kind == kind)
    }

    pub fn has_reserve(&self) -> bool {
        self.segment(SegmentKind::Reserve).is_some()
    }

    pub fn ground_distance_m(&self) -> f64 {
        self.segments.iter().map(|s| s.distance_m).sum()
    }
}

/// Evaluate the mission schedule for `spec` over a point-to-point `range_mi`.
///
/// Segments, in order: vertical climb to the hover altitude, optional hover
/// dwell, wing-borne climb to cruise altitude, cruise, wing-borne descent,
/// optional hover dwell, vertical descent and, if requested, a reserve held
/// at cruise power. Zero-length segments are dropped. Air density for each
/// segment is taken at its mean altitude.
pub fn build_mission(
    spec: &AircraftSpec,
    range_mi: f64,
    cruise_speed_mph: f64,
    include_reserve: bool,
) -> Result<MissionProfile> {
    spec.validate()?;
    if !(range_mi > 0.0 && range_mi.is_finite()) {
        return Err(Error::param("range_mi", "must be > 0"));
    }
    if !(cruise_speed_mph > 0.0 && cruise_speed_mph.is_finite()) {
        return Err(Error::param("cruise_speed_mph", "must be > 0"));
    }
    let range_m = miles_to_m(range_mi);
    let cruise_speed = mph_to_mps(cruise_speed_mph);

    let rho_vertical = air_density(spec.hover_altitude_m / 2.0)?;
    let rho_hover = air_density(spec.hover_altitude_m)?;
    let rho_transit = air_density((spec.hover_altitude_m + spec.cruise_altitude_m) / 2.0)?;
    let rho_cruise = air_density(spec.cruise_altitude_m)?;

    let vertical_time = spec.hover_altitude_m / spec.vertical_climb_rate_mps;
    let vertical_climb_power = spec.vertical(spec.vertical_climb_rate_mps, rho_vertical)?;
    // Descent is charged the hover induced power with no descent credit.
    let vertical_descent_power = spec.vertical(0.0, rho_vertical)?;
    let hover_power = spec.vertical(0.0, rho_hover)?;

    let transit_speed = match &spec.drag_polar {
        Some(polar) => min_power_speed(polar, spec.weight_n(), rho_transit)?,
        None => mph_to_mps(spec.design_cruise_speed_mph),
    };
    let transit_time = (spec.cruise_altitude_m - spec.hover_altitude_m) / spec.wing_climb_rate_mps;
    let transit_distance = transit_speed * transit_time;
    let climb_lod = spec.segment_lift_to_drag(spec.lod_climb, transit_speed, rho_transit)?;
    let descent_lod = spec.segment_lift_to_drag(spec.lod_descent, transit_speed, rho_transit)?;
    let climb_power = spec.wing(transit_speed, spec.wing_climb_rate_mps, climb_lod)?;
    let descent_power = spec
        .wing(transit_speed, -spec.wing_climb_rate_mps, descent_lod)?
        .max(0.0);

    let cruise_lod = spec.segment_lift_to_drag(spec.lod_cruise, cruise_speed, rho_cruise)?;
    let cruise_power = spec.wing(cruise_speed, 0.0, cruise_lod)?;

    let transit_total = 2.0 * transit_distance;
    let mut cruise_distance = range_m - transit_total;
    if cruise_distance.abs() <= 1e-12 * range_m {
        cruise_distance = 0.0;
    }
    if cruise_distance < 0.0 {
        return Err(Error::InfeasibleMission {
            range_mi,
            min_range_mi: transit_total / miles_to_m(1.0),
        });
    }

    use SegmentKind::*;
    let mut segments = vec![
        MissionSegment::new(VerticalClimb, vertical_time, 0.0, vertical_climb_power),
        MissionSegment::new(Hover, spec.hover_dwell_s, 0.0, hover_power),
        MissionSegment::new(WingClimb, transit_time, transit_distance, climb_power),
        MissionSegment::new(
            Cruise,
            cruise_distance / cruise_speed,
            cruise_distance,
            cruise_power,
        ),
        MissionSegment::new(WingDescent, transit_time, transit_distance, descent_power),
        MissionSegment::new(Hover, spec.hover_dwell_s, 0.0, hover_power),
        MissionSegment::new(VerticalDescent, vertical_time, 0.0, vertical_descent_power),
    ];
    if include_reserve {
        segments.push(MissionSegment::new(
            Reserve,
            RESERVE_DURATION_S,
            0.0,
            cruise_power,
        ));
    }
    segments.retain(|s| s.duration_s > 0.0);

    let total_energy_wh = segments
        .iter()
        .filter(|s| s.kind != Reserve)
        .map(|s| s.energy_wh)
        .sum();
    let reserve_energy_wh = segments
        .iter()
        .filter(|s| s.kind == Reserve)
        .map(|s| s.energy_wh)
        .sum();
    let peak_power_w = segments.iter().map(|s| s.power_w).fold(0.0, f64::max);

    Ok(MissionProfile {
        aircraft: spec.name.clone(),
        range_mi,
        cruise_speed_mph,
        segments,
        total_energy_wh,
        reserve_energy_wh,
        peak_power_w,
    })
}

/// Trip energy (reserve excluded) per point-to-point passenger-mile.
///
/// Flight energy is evaluated at MTOM whatever the occupancy, so the
/// occupant count only divides the result.
pub fn energy_per_passenger_mile(
    spec: &AircraftSpec,
    range_mi: f64,
    cruise_speed_mph: f64,
    occupants: u32,
) -> Result<f64> {
    if occupants < 1 || occupants > spec.seats {
        return Err(Error::param(
            "occupants",
            format!("{occupants} outside 1..={} for `{}`", spec.seats, spec.name),
        ));
    }
    let profile = build_mission(spec, range_mi, cruise_speed_mph, false)?;
    Ok(profile.total_energy_wh / (range_mi * f64::from(occupants)))
}

/// Wh/passenger-mi at each range. Ranges must be strictly ascending; any
/// failing point fails the whole sweep.
pub fn range_sweep(
    spec: &AircraftSpec,
    ranges_mi: &[f64],
    cruise_speed_mph: f64,
    occupants: u32,
) -> Result<Vec<(f64, f64)>> {
    if ranges_mi.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Data("sweep ranges must be strictly ascending".into()));
    }
    ranges_mi
        .iter()
        .map(|&r| {
            Ok((
                r,
                energy_per_passenger_mile(spec, r, cruise_speed_mph, occupants)?,
            ))
        })
        .collect()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Synthetic open-rotor aircraft shared by the unit tests.
    pub(crate) fn synthetic() -> AircraftSpec {
        AircraftSpec {
            name: "synthetic".into(),
            propulsion: PropulsionKind::OpenRotor,
            mtom_kg: 1000.0,
            seats: 1,
            payload_per_seat_kg: 100.0,
            disc_area_m2: 20.0,
            fom: 0.7,
            interference_factor: 1.03,
            eta_vertical: 0.85,
            eta_fixed_wing: 0.9,
            lod_climb: Some(12.0),
            lod_cruise: Some(12.0),
            lod_descent: Some(12.0),
            drag_polar: None,
            design_range_mi: 50.0,
            design_cruise_speed_mph: 100.0,
            vertical_climb_rate_mps: 2.0,
            wing_climb_rate_mps: 5.0,
            hover_altitude_m: 15.0,
            cruise_altitude_m: 300.0,
            hover_dwell_s: 0.0,
            ewf: 0.5,
        }
    }

    #[test]
    fn synthetic_segments_match_hand_evaluation() {
        // Spreadsheet-style evaluation written out independently of the
        // builder: ISA densities, then each equation per segment.
        let isa =
            |h: f64| 1.225 * ((288.15 - 0.0065 * h) / 288.15f64).powf(9.80665 / (0.0065 * 287.053) - 1.0);
        let w = 1000.0 * 9.80665;
        let f = 1.03;
        let induced = |rho: f64| (f * w / 0.7) * (f * (w / 20.0) / (2.0 * rho)).sqrt();
        let p_vclimb = (induced(isa(7.5)) + w * 2.0 / 2.0) / 0.85;
        let p_vdesc = induced(isa(7.5)) / 0.85;
        let v = 100.0 * 0.44704;
        let p_climb = (w * 5.0 + w * v / 12.0) / 0.9;
        let p_desc = ((-w * 5.0 + w * v / 12.0) / 0.9).max(0.0);
        let p_cruise = (w * v / 12.0) / 0.9;
        let t_transit = 285.0 / 5.0;
        let d_cruise = 50.0 * 1609.344 - 2.0 * v * t_transit;
        let expected = [
            (SegmentKind::VerticalClimb, 7.5, p_vclimb),
            (SegmentKind::WingClimb, t_transit, p_climb),
            (SegmentKind::Cruise, d_cruise / v, p_cruise),
            (SegmentKind::WingDescent, t_transit, p_desc),
            (SegmentKind::VerticalDescent, 7.5, p_vdesc),
        ];

        let profile = build_mission(&synthetic(), 50.0, 100.0, false).unwrap();
        let kinds: Vec<_> = profile.segments.iter().map(|s| s.kind).collect();
        let expected_kinds: Vec<_> = expected.iter().map(|e| e.0).collect();
        assert_eq!(kinds, expected_kinds);
        for (seg, (_, t, p)) in profile.segments.iter().zip(expected) {
            assert!(((seg.duration_s - t) / t).abs() < 5e-3, "{seg:?}");
            assert!(((seg.power_w - p) / p.max(1.0)).abs() < 5e-3, "{seg:?}");
            let e = p * t / 3600.0;
            assert!((seg.energy_wh - e).abs() <= 5e-3 * e.max(1e-9), "{seg:?}");
        }
    }

    #[test]
    fn synthetic_profile_is_conservative() {
        let profile = build_mission(&synthetic(), 50.0, 100.0, true).unwrap();
        let trip: f64 = profile
            .segments
            .iter()
            .filter(|s| s.kind != SegmentKind::Reserve)
            .map(|s| s.power_w * s.duration_s / 3600.0)
            .sum();
        assert!(((profile.total_energy_wh - trip) / trip).abs() < 1e-12);
        let range_m = 50.0 * 1609.344;
        assert!(((profile.ground_distance_m() - range_m) / range_m).abs() < 1e-9);
        let vclimb = profile.segment(SegmentKind::VerticalClimb).unwrap();
        assert_eq!(profile.peak_power_w, vclimb.power_w);
        assert!(profile
            .segments
            .iter()
            .all(|s| s.power_w >= 0.0 && s.duration_s > 0.0));
    }

    #[test]
    fn reserve_adds_one_cruise_power_segment() {
        let without = build_mission(&synthetic(), 50.0, 100.0, false).unwrap();
        let with = build_mission(&synthetic(), 50.0, 100.0, true).unwrap();
        assert_eq!(with.segments.len(), without.segments.len() + 1);
        let reserve = with.segments.last().unwrap();
        assert_eq!(reserve.kind, SegmentKind::Reserve);
        assert_eq!(reserve.duration_s, 1800.0);
        assert_eq!(
            reserve.power_w,
            with.segment(SegmentKind::Cruise).unwrap().power_w
        );
        assert_eq!(with.total_energy_wh, without.total_energy_wh);
        assert_eq!(with.reserve_energy_wh, reserve.energy_wh);
        assert_eq!(without.reserve_energy_wh, 0.0);
    }

    #[test]
    fn cruise_dropped_at_minimum_range() {
        let spec = synthetic();
        let v = mph_to_mps(spec.design_cruise_speed_mph);
        let min_range = 2.0 * v * (285.0 / 5.0) / 1609.344;
        let profile = build_mission(&spec, min_range, 100.0, false).unwrap();
        assert!(profile.segment(SegmentKind::Cruise).is_none());
        assert_eq!(profile.segments.len(), 4);
    }

    #[test]
    fn too_short_range_reports_minimum() {
        match build_mission(&synthetic(), 1.0, 100.0, false) {
            Err(Error::InfeasibleMission {
                range_mi,
                min_range_mi,
            }) => {
                assert_eq!(range_mi, 1.0);
                assert!((min_range_mi - 2.0 * 44.704 * 57.0 / 1609.344).abs() < 1e-9);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn hover_dwell_adds_two_hover_segments() {
        let spec = AircraftSpec {
            hover_dwell_s: 30.0,
            ..synthetic()
        };
        let profile = build_mission(&spec, 50.0, 100.0, false).unwrap();
        let hovers: Vec<_> = profile
            .segments
            .iter()
            .enumerate()
            .filter(|(_, s)| s.kind == SegmentKind::Hover)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(hovers, vec![1, 5]);
    }

    #[test]
    fn drag_polar_sets_transit_speed() {
        let polar = DragPolar {
            zero_lift_drag_coeff: 0.03,
            induced_factor: 0.045,
            wing_area_m2: 12.0,
        };
        let spec = AircraftSpec {
            lod_climb: None,
            lod_descent: None,
            drag_polar: Some(polar),
            ..synthetic()
        };
        let profile = build_mission(&spec, 50.0, 100.0, false).unwrap();
        let climb = profile.segment(SegmentKind::WingClimb).unwrap();
        let rho = air_density(157.5).unwrap();
        let v_mp = min_power_speed(&polar, spec.weight_n(), rho).unwrap();
        assert!((climb.distance_m - v_mp * 57.0).abs() < 1e-6);
        // Cruise keeps the direct L/D.
        let cruise = profile.segment(SegmentKind::Cruise).unwrap();
        assert!((cruise.power_w - spec.weight_n() * 44.704 / 12.0 / 0.9).abs() < 1e-6);
    }

    #[test]
    fn occupancy_only_divides() {
        let spec = AircraftSpec {
            seats: 4,
            ..synthetic()
        };
        let one = energy_per_passenger_mile(&spec, 50.0, 100.0, 1).unwrap();
        let two = energy_per_passenger_mile(&spec, 50.0, 100.0, 2).unwrap();
        assert_eq!(one / two, 2.0);
        assert!(matches!(
            energy_per_passenger_mile(&spec, 50.0, 100.0, 5),
            Err(Error::Parameter {
                field: "occupants",
                ..
            })
        ));
        assert!(energy_per_passenger_mile(&spec, 50.0, 100.0, 0).is_err());
    }

    #[test]
    fn sweep_matches_scalar_calls() {
        let spec = synthetic();
        let ranges = [20.0, 40.0, 60.0, 80.0, 100.0];
        let curve = range_sweep(&spec, &ranges, 100.0, 1).unwrap();
        for (r, e) in &curve {
            let scalar = energy_per_passenger_mile(&spec, *r, 100.0, 1).unwrap();
            assert_eq!(e.to_bits(), scalar.to_bits());
        }
        assert!(curve.windows(2).all(|w| w[1].1 < w[0].1));
        let single = range_sweep(&spec, &[40.0], 100.0, 1).unwrap();
        assert_eq!(
            single[0].1,
            energy_per_passenger_mile(&spec, 40.0, 100.0, 1).unwrap()
        );
    }

    #[test]
    fn sweep_rejects_unsorted_and_infeasible() {
        let spec = synthetic();
        assert!(matches!(
            range_sweep(&spec, &[40.0, 20.0], 100.0, 1),
            Err(Error::Data(_))
        ));
        assert!(matches!(
            range_sweep(&spec, &[1.0, 20.0], 100.0, 1),
            Err(Error::InfeasibleMission { range_mi, .. }) if range_mi == 1.0
        ));
    }

    #[test]
    fn invalid_spec_names_field() {
        let spec = AircraftSpec {
            ewf: 1.2,
            ..synthetic()
        };
        match build_mission(&spec, 50.0, 100.0, false) {
            Err(Error::Validation { field, .. }) => assert_eq!(field, "ewf"),
            other => panic!("{other:?}"),
        }
        let spec = AircraftSpec {
            lod_cruise: None,
            ..synthetic()
        };
        assert!(spec.validate().is_err());
        let spec = AircraftSpec {
            seats: 5,
            ..synthetic()
        };
        assert!(spec.validate().is_err());
    }
}

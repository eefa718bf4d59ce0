//! Momentum-theory vertical flight power, fixed-wing segment power and the
//! parabolic drag polar used to pick minimum-power flight conditions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Fuselage interference correction applied to rotor thrust.
pub const DEFAULT_INTERFERENCE_FACTOR: f64 = 1.03;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PropulsionKind {
    OpenRotor,
    DuctedFan,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerticalFlightParams {
    pub weight_n: f64,
    pub disc_area_m2: f64,
    pub fom: f64,
    pub interference_factor: f64,
    /// Signed climb rate (m/s); zero is hover.
    pub climb_rate_mps: f64,
    pub density: f64,
    pub efficiency: f64,
}

impl VerticalFlightParams {
    pub fn validate(&self) -> Result<()> {
        check(self.weight_n >= 0.0, "weight_n", "must be >= 0")?;
        check(self.disc_area_m2 > 0.0, "disc_area_m2", "must be > 0")?;
        check(self.fom > 0.0 && self.fom <= 1.0, "fom", "must lie in (0, 1]")?;
        check(
            self.interference_factor >= 1.0,
            "interference_factor",
            "must be >= 1",
        )?;
        check(
            self.climb_rate_mps.is_finite(),
            "climb_rate_mps",
            "must be finite",
        )?;
        check(self.density > 0.0, "density", "must be > 0")?;
        check(
            self.efficiency > 0.0 && self.efficiency <= 1.0,
            "efficiency",
            "must lie in (0, 1]",
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedWingParams {
    pub weight_n: f64,
    /// Forward speed V (m/s).
    pub forward_speed_mps: f64,
    /// Signed vertical speed V_v (m/s); zero in cruise.
    pub vertical_speed_mps: f64,
    pub lift_to_drag: f64,
    /// Combined powertrain and propeller efficiency.
    pub efficiency: f64,
}

impl FixedWingParams {
    pub fn validate(&self) -> Result<()> {
        check(self.weight_n >= 0.0, "weight_n", "must be >= 0")?;
        check(self.forward_speed_mps >= 0.0, "forward_speed_mps", "must be >= 0")?;
        check(
            self.vertical_speed_mps.is_finite(),
            "vertical_speed_mps",
            "must be finite",
        )?;
        check(self.lift_to_drag > 0.0, "lift_to_drag", "must be > 0")?;
        check(
            self.efficiency > 0.0 && self.efficiency <= 1.0,
            "efficiency",
            "must lie in (0, 1]",
        )
    }
}

/// Parabolic drag polar C_D = C_D0 + k·C_L².
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DragPolar {
    pub zero_lift_drag_coeff: f64,
    pub induced_factor: f64,
    pub wing_area_m2: f64,
}

impl DragPolar {
    pub fn validate(&self) -> Result<()> {
        check(
            self.zero_lift_drag_coeff > 0.0,
            "zero_lift_drag_coeff",
            "must be > 0",
        )?;
        check(self.induced_factor > 0.0, "induced_factor", "must be > 0")?;
        check(self.wing_area_m2 > 0.0, "wing_area_m2", "must be > 0")
    }

    /// Level-flight power required at `speed_mps`, before powertrain losses.
    pub fn level_flight_power(&self, speed_mps: f64, weight_n: f64, density: f64) -> f64 {
        let s = self.wing_area_m2;
        let v = speed_mps;
        density * v.powi(3) * s * self.zero_lift_drag_coeff / 2.0
            + 2.0 * self.induced_factor * weight_n * weight_n / (density * v * s)
    }
}

fn check(ok: bool, field: &'static str, reason: &str) -> Result<()> {
    // `ok` is false for NaN comparisons too.
    if ok {
        Ok(())
    } else {
        Err(Error::param(field, reason))
    }
}

/// Electrical power drawn in vertical flight (W).
pub fn vertical_power(kind: PropulsionKind, p: &VerticalFlightParams) -> Result<f64> {
    p.validate()?;
    let w = p.weight_n;
    let f = p.interference_factor;
    let disc_loading = w / p.disc_area_m2;
    let induced = match kind {
        PropulsionKind::OpenRotor => (f * w / p.fom) * (f * disc_loading / (2.0 * p.density)).sqrt(),
        PropulsionKind::DuctedFan => (f * w / (2.0 * p.fom)) * (f * disc_loading / p.density).sqrt(),
    };
    Ok((induced + w * p.climb_rate_mps / 2.0) / p.efficiency)
}

/// Electrical power drawn in wing-borne flight (W). Negative when the
/// descent term outweighs drag; callers decide whether to floor it.
pub fn fixed_wing_power(p: &FixedWingParams) -> Result<f64> {
    p.validate()?;
    let w = p.weight_n;
    Ok((w * p.vertical_speed_mps + w * p.forward_speed_mps / p.lift_to_drag) / p.efficiency)
}

fn check_polar_inputs(polar: &DragPolar, weight_n: f64, density: f64) -> Result<()> {
    polar.validate()?;
    check(weight_n > 0.0, "weight_n", "must be > 0")?;
    check(density > 0.0, "density", "must be > 0")
}

/// Reference speed sqrt(2W/(ρS)) shared by the closed-form optimum speeds.
fn reference_speed(polar: &DragPolar, weight_n: f64, density: f64) -> f64 {
    (2.0 * weight_n / (density * polar.wing_area_m2)).sqrt()
}

/// Speed minimising level-flight power under the parabolic polar.
///
/// The closed form is cross-checked against a bracketed golden-section
/// minimisation; disagreement beyond 1e-6 relative is reported as an error.
pub fn min_power_speed(polar: &DragPolar, weight_n: f64, density: f64) -> Result<f64> {
    check_polar_inputs(polar, weight_n, density)?;
    let analytic = reference_speed(polar, weight_n, density)
        * (polar.induced_factor / (3.0 * polar.zero_lift_drag_coeff)).powf(0.25);
    let numeric = min_power_speed_numeric(polar, weight_n, density)?;
    if ((numeric - analytic) / analytic).abs() > 1e-6 {
        return Err(Error::Contract(format!(
            "minimum-power speed cross-check failed: analytic {analytic} m/s, numeric {numeric} m/s"
        )));
    }
    Ok(analytic)
}

/// Golden-section minimisation of level-flight power, bracketed around the
/// reference speed.
pub fn min_power_speed_numeric(polar: &DragPolar, weight_n: f64, density: f64) -> Result<f64> {
    check_polar_inputs(polar, weight_n, density)?;
    let v_ref = reference_speed(polar, weight_n, density);
    // (k/3C_D0)^(1/4) stays within [1e-3, 1e3] for any physical polar; widen
    // the bracket geometrically until the minimum is interior.
    let mut lo = v_ref * 1e-3;
    let mut hi = v_ref * 1e3;
    let power = |v: f64| polar.level_flight_power(v, weight_n, density);
    while power(lo) < power(lo * 1.01) {
        lo *= 1e-3;
    }
    while power(hi) < power(hi / 1.01) {
        hi *= 1e3;
    }
    Ok(golden_section(power, lo, hi, 1e-12))
}

/// Golden-section search for the minimum of a unimodal function on [lo, hi].
/// Stops when the bracket is narrower than `rel_tol` times its midpoint.
pub(crate) fn golden_section(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, rel_tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..500 {
        if hi - lo <= rel_tol * 0.5 * (hi + lo).abs() {
            break;
        }
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    0.5 * (lo + hi)
}

/// Maximum-L/D speed, which is also the maximum-range speed of an electric
/// aircraft: sqrt(2W/(ρS))·(k/C_D0)^(1/4).
pub fn max_range_speed(polar: &DragPolar, weight_n: f64, density: f64) -> Result<f64> {
    check_polar_inputs(polar, weight_n, density)?;
    Ok(reference_speed(polar, weight_n, density)
        * (polar.induced_factor / polar.zero_lift_drag_coeff).powf(0.25))
}

/// Lift-to-drag ratio of the polar at a given level-flight condition.
pub fn lift_to_drag_at(polar: &DragPolar, speed_mps: f64, weight_n: f64, density: f64) -> Result<f64> {
    check_polar_inputs(polar, weight_n, density)?;
    check(speed_mps > 0.0, "speed_mps", "must be > 0")?;
    let cl = 2.0 * weight_n / (density * speed_mps * speed_mps * polar.wing_area_m2);
    Ok(cl / (polar.zero_lift_drag_coeff + polar.induced_factor * cl * cl))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hover(w: f64) -> VerticalFlightParams {
        VerticalFlightParams {
            weight_n: w,
            disc_area_m2: 10.0,
            fom: 1.0,
            interference_factor: 1.0,
            climb_rate_mps: 0.0,
            density: 1.225,
            efficiency: 1.0,
        }
    }

    fn cruise() -> FixedWingParams {
        FixedWingParams {
            weight_n: 10_000.0,
            forward_speed_mps: 67.056,
            vertical_speed_mps: 0.0,
            lift_to_drag: 14.0,
            efficiency: 1.0,
        }
    }

    const POLAR: DragPolar = DragPolar {
        zero_lift_drag_coeff: 0.03,
        induced_factor: 0.045,
        wing_area_m2: 10.0,
    };

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn zero_weight_needs_no_power() {
        for kind in [PropulsionKind::OpenRotor, PropulsionKind::DuctedFan] {
            assert_eq!(vertical_power(kind, &hover(0.0)).unwrap(), 0.0);
        }
    }

    #[test]
    fn hover_oracle_values() {
        // Independent arithmetic evaluation of both equations.
        let open = vertical_power(PropulsionKind::OpenRotor, &hover(10_000.0)).unwrap();
        assert!(rel(open, 202_030.508_910_442_15) < 1e-12, "{open}");
        let ducted = vertical_power(PropulsionKind::DuctedFan, &hover(10_000.0)).unwrap();
        assert!(rel(ducted, 142_857.142_857_142_84) < 1e-12, "{ducted}");

        let p = VerticalFlightParams {
            interference_factor: 1.03,
            ..hover(10_000.0)
        };
        let with_f = vertical_power(PropulsionKind::OpenRotor, &p).unwrap();
        assert!(rel(with_f, 211_189.729_960_564_9) < 1e-12, "{with_f}");
    }

    #[test]
    fn climb_term_is_half_w_times_rate() {
        let base = vertical_power(PropulsionKind::OpenRotor, &hover(10_000.0)).unwrap();
        let p = VerticalFlightParams {
            climb_rate_mps: 3.0,
            ..hover(10_000.0)
        };
        let climbing = vertical_power(PropulsionKind::OpenRotor, &p).unwrap();
        assert!((climbing - base - 15_000.0).abs() < 1e-6);
    }

    #[test]
    fn vertical_errors_name_field() {
        let cases: [(VerticalFlightParams, &str); 6] = [
            (
                VerticalFlightParams {
                    weight_n: -1.0,
                    ..hover(1.0)
                },
                "weight_n",
            ),
            (
                VerticalFlightParams {
                    disc_area_m2: 0.0,
                    ..hover(1.0)
                },
                "disc_area_m2",
            ),
            (
                VerticalFlightParams {
                    fom: 1.1,
                    ..hover(1.0)
                },
                "fom",
            ),
            (
                VerticalFlightParams {
                    interference_factor: 0.9,
                    ..hover(1.0)
                },
                "interference_factor",
            ),
            (
                VerticalFlightParams {
                    density: 0.0,
                    ..hover(1.0)
                },
                "density",
            ),
            (
                VerticalFlightParams {
                    efficiency: 0.0,
                    ..hover(1.0)
                },
                "efficiency",
            ),
        ];
        for (p, name) in cases {
            match vertical_power(PropulsionKind::OpenRotor, &p) {
                Err(Error::Parameter { field, .. }) => assert_eq!(field, name),
                other => panic!("expected parameter error for {name}, got {other:?}"),
            }
        }
    }

    #[test]
    fn fixed_wing_oracle_values() {
        let still = FixedWingParams {
            forward_speed_mps: 0.0,
            ..cruise()
        };
        assert_eq!(fixed_wing_power(&still).unwrap(), 0.0);
        let p = fixed_wing_power(&cruise()).unwrap();
        assert!(rel(p, 47_897.142_857_142_855) < 1e-12);
        let climbing = FixedWingParams {
            vertical_speed_mps: 2.0,
            ..cruise()
        };
        let p = fixed_wing_power(&climbing).unwrap();
        assert!(rel(p, 67_897.142_857_142_86) < 1e-12);
    }

    #[test]
    fn fixed_wing_errors() {
        let bad = FixedWingParams {
            lift_to_drag: 0.0,
            ..cruise()
        };
        assert!(matches!(
            fixed_wing_power(&bad),
            Err(Error::Parameter {
                field: "lift_to_drag",
                ..
            })
        ));
        let bad = FixedWingParams {
            efficiency: 1.5,
            ..cruise()
        };
        assert!(fixed_wing_power(&bad).is_err());
    }

    #[test]
    fn min_power_speed_oracle() {
        // Bounded scalar minimisation of P(V) on (1, 200) gives 33.977346.
        let v = min_power_speed(&POLAR, 10_000.0, 1.225).unwrap();
        assert!((v - 33.977_346).abs() < 1e-5, "{v}");
        let doubled = min_power_speed(&POLAR, 20_000.0, 1.225).unwrap();
        assert!(rel(doubled, v * 2f64.sqrt()) < 1e-12);
    }

    #[test]
    fn min_power_speed_rejects_non_positive() {
        assert!(min_power_speed(&POLAR, 0.0, 1.225).is_err());
        assert!(min_power_speed(&POLAR, 1.0, 0.0).is_err());
        let bad = DragPolar {
            induced_factor: -0.1,
            ..POLAR
        };
        assert!(matches!(
            min_power_speed(&bad, 1.0, 1.0),
            Err(Error::Parameter {
                field: "induced_factor",
                ..
            })
        ));
    }

    #[test]
    fn lift_to_drag_oracle() {
        let v = min_power_speed(&POLAR, 10_000.0, 1.225).unwrap();
        let ld = lift_to_drag_at(&POLAR, v, 10_000.0, 1.225).unwrap();
        assert!((ld - 11.785_113).abs() < 1e-5, "{ld}");
        // At V_mp the ratio is sqrt(3)/2 of the polar's maximum.
        let max_ld = 1.0 / (2.0 * (0.045f64 * 0.03).sqrt());
        assert!(rel(ld, max_ld * 3f64.sqrt() / 2.0) < 1e-9);
    }

    #[test]
    fn lift_to_drag_without_induced_drag() {
        let polar = DragPolar {
            induced_factor: 1e-15,
            ..POLAR
        };
        let cl = 2.0 * 10_000.0 / (1.225 * 50.0 * 50.0 * 10.0);
        let ld = lift_to_drag_at(&polar, 50.0, 10_000.0, 1.225).unwrap();
        assert!(rel(ld, cl / 0.03) < 1e-9);
    }

    #[test]
    fn max_range_speed_maximises_lift_to_drag() {
        let v = max_range_speed(&POLAR, 10_000.0, 1.225).unwrap();
        let ld = lift_to_drag_at(&POLAR, v, 10_000.0, 1.225).unwrap();
        let max_ld = 1.0 / (2.0 * (0.045f64 * 0.03).sqrt());
        assert!(rel(ld, max_ld) < 1e-12);
    }

    fn polar_strategy() -> impl Strategy<Value = (DragPolar, f64, f64)> {
        (
            0.005..0.1f64,
            0.01..0.2f64,
            1.0..60.0f64,
            100.0..50_000.0f64,
            0.3..1.3f64,
        )
            .prop_map(|(cd0, k, s, w, rho)| {
                (
                    DragPolar {
                        zero_lift_drag_coeff: cd0,
                        induced_factor: k,
                        wing_area_m2: s,
                    },
                    w,
                    rho,
                )
            })
    }

    proptest! {
        #[test]
        fn ducted_over_open_hover_ratio(
            w in 1.0..50_000.0f64, a in 0.5..100.0f64, fom in 0.3..1.0f64,
            f in 1.0..1.2f64, rho in 0.3..1.3f64, eta in 0.3..1.0f64,
        ) {
            let p = VerticalFlightParams {
                weight_n: w, disc_area_m2: a, fom, interference_factor: f,
                climb_rate_mps: 0.0, density: rho, efficiency: eta,
            };
            let open = vertical_power(PropulsionKind::OpenRotor, &p).unwrap();
            let ducted = vertical_power(PropulsionKind::DuctedFan, &p).unwrap();
            prop_assert!(rel(ducted / open, std::f64::consts::FRAC_1_SQRT_2) < 1e-12);

            let wider = VerticalFlightParams { disc_area_m2: 2.0 * a, ..p };
            let wider = vertical_power(PropulsionKind::OpenRotor, &wider).unwrap();
            prop_assert!(rel(wider / open, std::f64::consts::FRAC_1_SQRT_2) < 1e-12);
        }

        #[test]
        fn hover_power_monotone(
            w in 1.0..50_000.0f64, a in 0.5..100.0f64, fom in 0.3..0.95f64,
            rho in 0.3..1.2f64, eta in 0.3..0.95f64,
        ) {
            let p = VerticalFlightParams {
                weight_n: w, disc_area_m2: a, fom, interference_factor: 1.03,
                climb_rate_mps: 0.0, density: rho, efficiency: eta,
            };
            let kind = PropulsionKind::OpenRotor;
            let base = vertical_power(kind, &p).unwrap();
            let up = |q: VerticalFlightParams| vertical_power(kind, &q).unwrap();
            let heavier = up(VerticalFlightParams { weight_n: w * 1.01, ..p });
            let better_rotor = up(VerticalFlightParams { fom: fom + 0.01, ..p });
            let denser = up(VerticalFlightParams { density: rho + 0.01, ..p });
            let efficient = up(VerticalFlightParams { efficiency: eta + 0.01, ..p });
            prop_assert!(heavier > base);
            prop_assert!(better_rotor < base);
            prop_assert!(denser < base);
            prop_assert!(efficient < base);
        }

        #[test]
        fn fixed_wing_linear_in_weight(
            w in 1.0..50_000.0f64, v in 0.0..120.0f64, vv in -10.0..10.0f64,
            ld in 1.0..30.0f64, eta in 0.3..1.0f64, scale in 0.1..10.0f64,
        ) {
            let p = FixedWingParams {
                weight_n: w, forward_speed_mps: v, vertical_speed_mps: vv,
                lift_to_drag: ld, efficiency: eta,
            };
            let base = fixed_wing_power(&p).unwrap();
            let scaled = fixed_wing_power(&FixedWingParams { weight_n: w * scale, ..p }).unwrap();
            prop_assert!((scaled - scale * base).abs() <= 1e-9 * (scale * base).abs().max(1.0));
            let level = fixed_wing_power(&FixedWingParams { vertical_speed_mps: 0.0, ..p }).unwrap();
            prop_assert!((base - level - w * vv / eta).abs() <= 1e-9 * base.abs().max(level.abs()).max(1.0));
        }

        #[test]
        fn min_power_speed_is_stationary((polar, w, rho) in polar_strategy()) {
            let v = min_power_speed(&polar, w, rho).unwrap();
            let h = v * 1e-5;
            let p = |s: f64| polar.level_flight_power(s, w, rho);
            let slope = (p(v + h) - p(v - h)) / (2.0 * h);
            prop_assert!((slope * v / p(v)).abs() < 1e-4);
        }

        #[test]
        fn max_lift_to_drag_speed_exceeds_min_power_speed((polar, w, rho) in polar_strategy()) {
            prop_assert!(max_range_speed(&polar, w, rho).unwrap() > min_power_speed(&polar, w, rho).unwrap());
        }
    }
}

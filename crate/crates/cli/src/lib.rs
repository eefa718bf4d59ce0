//! Subcommands behind the `evtol` binary. Each builds a [`ResultTable`] from
//! a [`RunConfig`]; `main` only parses flags and writes the table.

use std::io::Write;
use std::path::PathBuf;

use evtol_core::battery::{classify_feasibility, ewf_sweep, sizing_cruise_speed_mph, PackCategory};
use evtol_core::compare::{crossover_range, terrestrial_energy_per_passenger_mile, TerrestrialVehicle};
use evtol_core::dataio::{
    load_packs, load_specs, write_table, write_table_to, Cell, Column, ColumnKind, ResultTable, SpecDocument,
};
use evtol_core::mission::{build_mission, energy_per_passenger_mile, AircraftSpec};
use evtol_core::Error;

/// Exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_INFEASIBLE: i32 = 4;
pub const EXIT_IO: i32 = 5;

/// Lower end of the default range grid, miles.
pub const DEFAULT_GRID_START_MI: f64 = 10.0;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{aircraft}: {source}")]
    Aircraft {
        aircraft: String,
        #[source]
        source: Error,
    },
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Aircraft { source, .. } | CliError::Core(source) => core_exit_code(source),
        }
    }
}

fn core_exit_code(e: &Error) -> i32 {
    match e {
        Error::InfeasibleMission { .. } | Error::InfeasibleMassBudget { .. } => EXIT_INFEASIBLE,
        Error::Io { .. } => EXIT_IO,
        Error::SweepPoint { source, .. } => core_exit_code(source),
        _ => EXIT_INVALID,
    }
}

fn for_aircraft(a: &AircraftSpec) -> impl FnOnce(Error) -> CliError + '_ {
    move |source| CliError::Aircraft {
        aircraft: a.name.clone(),
        source,
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Simulate,
    Sweep,
    Battery,
    Compare,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeGrid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl RangeGrid {
    /// `R` for a single point or `START:STOP:STEP`.
    pub fn parse(s: &str) -> CliResult<RangeGrid> {
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Config(format!("range `{s}`: `{t}` is not a number")))
        };
        let grid = match s.split(':').collect::<Vec<_>>()[..] {
            [r] => {
                let r = num(r)?;
                RangeGrid {
                    start: r,
                    stop: r,
                    step: 1.0,
                }
            }
            [a, b, c] => RangeGrid {
                start: num(a)?,
                stop: num(b)?,
                step: num(c)?,
            },
            _ => {
                return Err(CliError::Config(format!(
                    "range `{s}` is neither R nor START:STOP:STEP"
                )))
            }
        };
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> CliResult<()> {
        if !(self.start > 0.0 && self.stop.is_finite() && self.start <= self.stop) {
            return Err(CliError::Config("range grid needs 0 < start <= stop".into()));
        }
        if !(self.step > 0.0 && self.step.is_finite()) {
            return Err(CliError::Config("range grid step must be > 0".into()));
        }
        Ok(())
    }

    pub fn is_point(&self) -> bool {
        self.start == self.stop
    }

    /// Grid points, computed as start + i·step so that no error accumulates.
    pub fn points(&self) -> Vec<f64> {
        let n = ((self.stop - self.start) / self.step * (1.0 + 1e-12)).floor() as usize;
        (0..=n).map(|i| self.start + i as f64 * self.step).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub spec_path: PathBuf,
    pub packs_path: Option<PathBuf>,
    /// Standard output when absent.
    pub output_path: Option<PathBuf>,
    pub aircraft_filter: Vec<String>,
    /// Default: 10 mi to each aircraft's design range, 1 mi step.
    pub range_grid_mi: Option<RangeGrid>,
    pub cruise_speed_mph: Option<f64>,
    pub occupants: Option<u32>,
    pub ewf_list: Vec<f64>,
    pub failure_list: Vec<f64>,
    pub reserve: bool,
    /// Require per-category pack verdicts in the battery table.
    pub verdicts: bool,
    /// Explicit Wh/passenger-mi baselines; replace the vehicles in the spec file.
    pub baselines: Vec<f64>,
    pub delimiter: u8,
}

impl RunConfig {
    pub fn new(spec_path: impl Into<PathBuf>) -> Self {
        RunConfig {
            spec_path: spec_path.into(),
            packs_path: None,
            output_path: None,
            aircraft_filter: Vec::new(),
            range_grid_mi: None,
            cruise_speed_mph: None,
            occupants: None,
            ewf_list: vec![0.45, 0.5, 0.55],
            failure_list: vec![0.0, 0.5],
            reserve: false,
            verdicts: false,
            baselines: Vec::new(),
            delimiter: b',',
        }
    }

    fn load(&self) -> CliResult<SpecDocument> {
        if let Some(g) = &self.range_grid_mi {
            g.validate()?;
        }
        if let Some(v) = self.cruise_speed_mph {
            if !(v > 0.0 && v.is_finite()) {
                return Err(CliError::Config("--speed must be > 0".into()));
            }
        }
        if self.occupants == Some(0) {
            return Err(CliError::Config("--occupants must be at least 1".into()));
        }
        Ok(load_specs(&self.spec_path)?)
    }

    /// Aircraft picked by the filter, in spec order. Unknown names are errors.
    fn selected<'a>(&self, doc: &'a SpecDocument) -> CliResult<Vec<&'a AircraftSpec>> {
        if self.aircraft_filter.is_empty() {
            return Ok(doc.aircraft.iter().collect());
        }
        for name in &self.aircraft_filter {
            if doc.aircraft_named(name).is_none() {
                let known: Vec<&str> = doc.aircraft.iter().map(|a| a.name.as_str()).collect();
                return Err(CliError::Config(format!(
                    "unknown aircraft `{name}` (known: {})",
                    known.join(", ")
                )));
            }
        }
        Ok(doc
            .aircraft
            .iter()
            .filter(|a| self.aircraft_filter.contains(&a.name))
            .collect())
    }

    fn speed_for(&self, a: &AircraftSpec) -> f64 {
        self.cruise_speed_mph.unwrap_or(a.design_cruise_speed_mph)
    }

    fn occupancies(&self, a: &AircraftSpec) -> CliResult<Vec<u32>> {
        match self.occupants {
            Some(n) if n > a.seats => Err(CliError::Config(format!(
                "--occupants {n} exceeds the {} seats of `{}`",
                a.seats, a.name
            ))),
            Some(n) => Ok(vec![n]),
            None if a.seats == 1 => Ok(vec![1]),
            None => Ok(vec![1, a.seats]),
        }
    }

    fn grid_for(&self, a: &AircraftSpec) -> Vec<f64> {
        match &self.range_grid_mi {
            Some(g) => g.points(),
            None => RangeGrid {
                start: DEFAULT_GRID_START_MI,
                stop: a.design_range_mi.max(DEFAULT_GRID_START_MI),
                step: 1.0,
            }
            .points(),
        }
    }
}

pub fn run(command: Command, cfg: &RunConfig) -> CliResult<ResultTable> {
    match command {
        Command::Simulate => cmd_simulate(cfg),
        Command::Sweep => cmd_sweep(cfg),
        Command::Battery => cmd_battery(cfg),
        Command::Compare => cmd_compare(cfg),
    }
}

/// Write to the configured file, or to `out` when none is set.
pub fn emit(table: &ResultTable, cfg: &RunConfig, out: impl Write) -> CliResult<()> {
    match &cfg.output_path {
        Some(path) => write_table(table, path, cfg.delimiter)?,
        None => write_table_to(table, out, cfg.delimiter)?,
    }
    Ok(())
}

fn energy_column(name: String) -> Column {
    Column::new(name, "Wh/passenger-mi", ColumnKind::EnergyPerLength)
}

/// Per-segment breakdown of one mission plus a totals row.
pub fn cmd_simulate(cfg: &RunConfig) -> CliResult<ResultTable> {
    let doc = cfg.load()?;
    let selected = cfg.selected(&doc)?;
    let a = match selected[..] {
        [a] => a,
        _ => {
            let names: Vec<&str> = selected.iter().map(|a| a.name.as_str()).collect();
            return Err(CliError::Config(format!(
                "simulate needs exactly one aircraft; selection matches: {}",
                names.join(", ")
            )));
        }
    };
    let range = match &cfg.range_grid_mi {
        None => a.design_range_mi,
        Some(g) if g.is_point() => g.start,
        Some(_) => {
            return Err(CliError::Config(
                "simulate takes a single range, not a grid".into(),
            ))
        }
    };
    let profile = build_mission(a, range, cfg.speed_for(a), cfg.reserve).map_err(for_aircraft(a))?;

    let mut table = ResultTable::new(vec![
        Column::identifier("segment"),
        Column::new("duration", "s", ColumnKind::Time),
        Column::new("distance", "m", ColumnKind::Length),
        Column::new("power", "W", ColumnKind::Power),
        Column::new("energy", "Wh", ColumnKind::Energy),
    ]);
    let (mut time, mut distance, mut energy) = (0.0, 0.0, 0.0);
    for s in &profile.segments {
        table.push_row(vec![
            s.kind.label().into(),
            s.duration_s.into(),
            s.distance_m.into(),
            s.power_w.into(),
            s.energy_wh.into(),
        ]);
        time += s.duration_s;
        distance += s.distance_m;
        energy += s.energy_wh;
    }
    table.push_row(vec![
        "total".into(),
        time.into(),
        distance.into(),
        profile.peak_power_w.into(),
        energy.into(),
    ]);
    Ok(table)
}

/// Wh/passenger-mi against range, one column per aircraft and occupancy,
/// then constant columns for each road vehicle.
pub fn cmd_sweep(cfg: &RunConfig) -> CliResult<ResultTable> {
    let doc = cfg.load()?;
    let selected = cfg.selected(&doc)?;
    let ranges = match &cfg.range_grid_mi {
        Some(g) => g.points(),
        None => {
            let stop = selected
                .iter()
                .map(|a| a.design_range_mi)
                .fold(DEFAULT_GRID_START_MI, f64::max);
            RangeGrid {
                start: DEFAULT_GRID_START_MI,
                stop,
                step: 1.0,
            }
            .points()
        }
    };

    let mut columns = vec![Column::new("range", "mi", ColumnKind::Length)];
    let mut curves: Vec<Vec<Cell>> = Vec::new();
    for a in &selected {
        let speed = cfg.speed_for(a);
        for occ in cfg.occupancies(a)? {
            columns.push(energy_column(format!("{} x{occ}", a.name)));
            let mut cells = Vec::with_capacity(ranges.len());
            for &r in &ranges {
                // Without an explicit grid, each curve stops at its design range.
                if cfg.range_grid_mi.is_none() && r > a.design_range_mi {
                    cells.push(Cell::Empty);
                    continue;
                }
                let e = energy_per_passenger_mile(a, r, speed, occ).map_err(for_aircraft(a))?;
                cells.push(e.into());
            }
            curves.push(cells);
        }
    }
    for (name, e) in vehicle_baselines(&doc.vehicles)? {
        columns.push(energy_column(name));
        curves.push(vec![Cell::Number(e); ranges.len()]);
    }

    let mut table = ResultTable::new(columns);
    for (i, &r) in ranges.iter().enumerate() {
        let mut row = vec![Cell::Number(r)];
        row.extend(curves.iter().map(|c| c[i].clone()));
        table.push_row(row);
    }
    Ok(table)
}

/// Each vehicle alone, at its expected occupancy and full.
fn vehicle_baselines(vehicles: &[TerrestrialVehicle]) -> CliResult<Vec<(String, f64)>> {
    let mut out = Vec::new();
    for v in vehicles {
        let mut occs = vec![1.0, v.occupancy, f64::from(v.max_occupancy)];
        occs.dedup();
        for occ in occs {
            let e = terrestrial_energy_per_passenger_mile(&v.with_occupancy(occ)?)?;
            out.push((format!("{} x{occ}", v.name), e));
        }
    }
    Ok(out)
}

/// Pack requirements per aircraft, EWF and failure fraction, flown at the
/// design range with reserves.
pub fn cmd_battery(cfg: &RunConfig) -> CliResult<ResultTable> {
    if cfg.verdicts && cfg.packs_path.is_none() {
        return Err(CliError::Config("--verdicts needs a pack file (--packs)".into()));
    }
    if cfg.ewf_list.is_empty() || cfg.failure_list.is_empty() {
        return Err(CliError::Config(
            "battery needs at least one --ewf and one --failure value".into(),
        ));
    }
    let doc = cfg.load()?;
    let selected = cfg.selected(&doc)?;
    let packs = cfg.packs_path.as_ref().map(load_packs).transpose()?;

    let mut columns = vec![
        Column::identifier("aircraft"),
        Column::new("range", "mi", ColumnKind::Length),
        Column::new("cruise_speed", "mph", ColumnKind::Speed),
        Column::new("ewf", "-", ColumnKind::Dimensionless),
        Column::new("failure_fraction", "-", ColumnKind::Dimensionless),
        Column::new("battery_mass", "kg", ColumnKind::Mass),
        Column::new("specific_energy", "Wh/kg", ColumnKind::EnergyPerMass),
        Column::new("specific_power", "W/kg", ColumnKind::PowerPerMass),
    ];
    if packs.is_some() {
        for cat in PackCategory::ALL {
            columns.push(Column::identifier(format!("{cat} feasible")));
            columns.push(Column::identifier(format!("{cat} packs")));
        }
    }
    let mut table = ResultTable::new(columns);

    for a in selected {
        let range = match &cfg.range_grid_mi {
            None => a.design_range_mi,
            Some(g) if g.is_point() => g.start,
            Some(_) => {
                return Err(CliError::Config(
                    "battery takes a single range, not a grid".into(),
                ))
            }
        };
        let speed = match cfg.cruise_speed_mph {
            Some(v) => v,
            None => sizing_cruise_speed_mph(a).map_err(for_aircraft(a))?,
        };
        let profile = build_mission(a, range, speed, true).map_err(for_aircraft(a))?;
        let reqs = ewf_sweep(a, &profile, &cfg.ewf_list, &cfg.failure_list).map_err(for_aircraft(a))?;
        for req in reqs {
            let mut row: Vec<Cell> = vec![
                a.name.as_str().into(),
                range.into(),
                speed.into(),
                req.ewf_used.into(),
                req.failure_fraction.into(),
                req.battery_mass_kg.into(),
                req.specific_energy_wh_per_kg.into(),
                req.specific_power_w_per_kg.into(),
            ];
            if let Some(packs) = &packs {
                let report = classify_feasibility(&req, packs)?;
                for v in &report.verdicts {
                    row.push(if v.feasible { "yes" } else { "no" }.into());
                    row.push(v.dominating.join("; ").into());
                }
            }
            table.push_row(row);
        }
    }
    Ok(table)
}

/// Crossover range of each aircraft curve against each baseline; an empty
/// cell means the curve never reaches the baseline on the grid.
pub fn cmd_compare(cfg: &RunConfig) -> CliResult<ResultTable> {
    let doc = cfg.load()?;
    let selected = cfg.selected(&doc)?;
    let baselines: Vec<(String, f64)> = if cfg.baselines.is_empty() {
        if doc.vehicles.is_empty() {
            return Err(CliError::Config(
                "compare needs a vehicle in the spec file or a --baseline".into(),
            ));
        }
        vehicle_baselines(&doc.vehicles)?
    } else {
        cfg.baselines.iter().map(|&b| (format!("{b}"), b)).collect()
    };
    if selected.is_empty() {
        return Err(CliError::Config("compare needs at least one aircraft".into()));
    }

    let mut table = ResultTable::new(vec![
        Column::identifier("aircraft"),
        Column::new("occupants", "-", ColumnKind::Dimensionless),
        Column::identifier("baseline"),
        energy_column("baseline_energy".into()),
        Column::new("crossover", "mi", ColumnKind::Length),
    ]);
    for a in selected {
        let grid = cfg.grid_for(a);
        if grid.len() < 2 {
            return Err(CliError::Config(format!(
                "range grid for `{}` has {} point(s); widen --range to span at least two",
                a.name,
                grid.len()
            )));
        }
        let speed = cfg.speed_for(a);
        for occ in cfg.occupancies(a)? {
            let curve = grid
                .iter()
                .map(|&r| Ok((r, energy_per_passenger_mile(a, r, speed, occ)?)))
                .collect::<Result<Vec<_>, Error>>()
                .map_err(for_aircraft(a))?;
            for (name, e) in &baselines {
                let x = crossover_range(&curve, *e)?;
                table.push_row(vec![
                    a.name.as_str().into(),
                    f64::from(occ).into(),
                    name.as_str().into(),
                    (*e).into(),
                    x.into(),
                ]);
            }
        }
    }
    Ok(table)
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use evtol_cli::{emit, run, CliError, Command, RangeGrid, RunConfig, EXIT_CONFIG};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Subcommand {
    /// Per-segment energy breakdown of one mission.
    Simulate,
    /// Wh/passenger-mi against range.
    Sweep,
    /// Battery specific energy and power requirements.
    Battery,
    /// Crossover ranges against road-vehicle baselines.
    Compare,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Delimiter {
    Comma,
    Tab,
}

/// Mission energy and battery requirements for electric VTOL aircraft.
///
/// Exit status: 0 success, 2 configuration error, 3 invalid or malformed
/// input, 4 infeasible mission or mass budget, 5 I/O error.
#[derive(Debug, Parser)]
#[command(name = "evtol", version)]
struct Args {
    command: Subcommand,
    /// Aircraft and vehicle spec file (TOML).
    #[arg(long)]
    spec: PathBuf,
    /// Battery pack dataset (CSV).
    #[arg(long)]
    packs: Option<PathBuf>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Aircraft name; repeat to select several.
    #[arg(long = "aircraft")]
    aircraft: Vec<String>,
    /// Range in miles: R or START:STOP:STEP. Default 10 to design range, step 1.
    #[arg(long)]
    range: Option<String>,
    /// Cruise speed override, mi/h.
    #[arg(long)]
    speed: Option<f64>,
    /// Occupant count; default is one and every seat.
    #[arg(long)]
    occupants: Option<u32>,
    /// Empty weight fractions, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [0.45, 0.5, 0.55])]
    ewf: Vec<f64>,
    /// Failed pack fractions, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [0.0, 0.5])]
    failure: Vec<f64>,
    /// Add a 30 min reserve segment (simulate, sweep energy excludes it).
    #[arg(long)]
    reserve: bool,
    /// Require per-category pack verdicts (needs --packs).
    #[arg(long)]
    verdicts: bool,
    /// Baseline Wh/passenger-mi for compare, comma separated; replaces the vehicles in the spec file.
    #[arg(long, value_delimiter = ',')]
    baseline: Vec<f64>,
    #[arg(long, value_enum, default_value_t = Delimiter::Comma)]
    delimiter: Delimiter,
}

fn config(args: Args) -> Result<(Command, RunConfig), CliError> {
    let command = match args.command {
        Subcommand::Simulate => Command::Simulate,
        Subcommand::Sweep => Command::Sweep,
        Subcommand::Battery => Command::Battery,
        Subcommand::Compare => Command::Compare,
    };
    let cfg = RunConfig {
        packs_path: args.packs,
        output_path: args.out,
        aircraft_filter: args.aircraft,
        range_grid_mi: args.range.as_deref().map(RangeGrid::parse).transpose()?,
        cruise_speed_mph: args.speed,
        occupants: args.occupants,
        ewf_list: args.ewf,
        failure_list: args.failure,
        reserve: args.reserve,
        verdicts: args.verdicts,
        baselines: args.baseline,
        delimiter: match args.delimiter {
            Delimiter::Comma => b',',
            Delimiter::Tab => b'\t',
        },
        ..RunConfig::new(args.spec)
    };
    Ok((command, cfg))
}

fn main() -> ExitCode {
    let result = config(Args::parse()).and_then(|(command, cfg)| {
        let table = run(command, &cfg)?;
        emit(&table, &cfg, std::io::stdout().lock())
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("evtol: {e}");
            let code = e.exit_code();
            ExitCode::from(u8::try_from(code).unwrap_or(EXIT_CONFIG as u8))
        }
    }
}

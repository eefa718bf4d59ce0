//! Battery pack dataset: comma-delimited with a fixed header row.

use std::io::Read;
use std::path::Path;

use crate::battery::{BatteryPackRecord, PackCategory};
use crate::error::{Error, Result};

pub const PACK_HEADER: [&str; 4] = [
    "name",
    "category",
    "specific_energy_Wh_per_kg",
    "specific_power_W_per_kg",
];

pub fn parse_packs(reader: impl Read) -> Result<Vec<BatteryPackRecord>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::None)
        .from_reader(reader);
    let header = rdr.headers().map_err(csv_error)?;
    if header.iter().ne(PACK_HEADER) {
        return Err(Error::Data(format!(
            "pack header must be `{}`, found `{}`",
            PACK_HEADER.join(","),
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut out = Vec::new();
    for (i, record) in rdr.records().enumerate() {
        // Row 1 is the header.
        let row = i + 2;
        let record = record.map_err(csv_error)?;
        let metric = |col: usize| -> Result<f64> {
            let raw = &record[col];
            let value: f64 = raw.trim().parse().map_err(|_| {
                Error::Data(format!(
                    "row {row}: `{}` is not a number: \"{raw}\"",
                    PACK_HEADER[col]
                ))
            })?;
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::Data(format!(
                    "row {row}: `{}` must be > 0",
                    PACK_HEADER[col]
                )));
            }
            Ok(value)
        };
        let category: PackCategory = record[1]
            .parse()
            .map_err(|e| Error::Data(format!("row {row}: {e}")))?;
        out.push(BatteryPackRecord {
            name: record[0].to_owned(),
            category,
            specific_energy_wh_per_kg: metric(2)?,
            specific_power_w_per_kg: metric(3)?,
        });
    }
    Ok(out)
}

pub fn load_packs(path: impl AsRef<Path>) -> Result<Vec<BatteryPackRecord>> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    parse_packs(std::io::BufReader::new(file))
}

pub fn write_packs(packs: &[BatteryPackRecord], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_path(path)
        .map_err(csv_error)?;
    w.write_record(PACK_HEADER).map_err(csv_error)?;
    for p in packs {
        w.write_record([
            p.name.clone(),
            p.category.label().to_owned(),
            p.specific_energy_wh_per_kg.to_string(),
            p.specific_power_w_per_kg.to_string(),
        ])
        .map_err(csv_error)?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

pub(super) fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io {
            path: "<csv stream>".into(),
            source: io,
        },
        other => Error::Data(format!("{other:?}")),
    }
}

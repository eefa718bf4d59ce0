//! Delimited result tables with `name(unit)` headers.

use std::io::{Read, Write};
use std::path::Path;

use super::packs::csv_error;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColumnKind {
    Identifier,
    Length,
    Time,
    Speed,
    Mass,
    Power,
    Energy,
    EnergyPerLength,
    EnergyPerMass,
    PowerPerMass,
    Dimensionless,
}

impl ColumnKind {
    fn is_numeric(self) -> bool {
        self != ColumnKind::Identifier
    }

    /// Best guess from a unit string; used when reading tables back.
    fn from_unit(unit: &str) -> ColumnKind {
        match unit {
            "-" => ColumnKind::Identifier,
            "mi" | "m" => ColumnKind::Length,
            "s" => ColumnKind::Time,
            "mph" | "m/s" => ColumnKind::Speed,
            "kg" => ColumnKind::Mass,
            "W" => ColumnKind::Power,
            "Wh" => ColumnKind::Energy,
            "Wh/passenger-mi" => ColumnKind::EnergyPerLength,
            "Wh/kg" => ColumnKind::EnergyPerMass,
            "W/kg" => ColumnKind::PowerPerMass,
            _ => ColumnKind::Dimensionless,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub name: String,
    pub unit: String,
    pub kind: ColumnKind,
}

impl Column {
    pub fn new(name: impl Into<String>, unit: impl Into<String>, kind: ColumnKind) -> Self {
        Column {
            name: name.into(),
            unit: unit.into(),
            kind,
        }
    }

    /// Text column, unit `-`.
    pub fn identifier(name: impl Into<String>) -> Self {
        Column::new(name, "-", ColumnKind::Identifier)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Number(f64),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Number(v)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Number)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ResultTable {
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Cell>>,
}

impl ResultTable {
    pub fn new(columns: Vec<Column>) -> Self {
        ResultTable {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        self.rows.push(row);
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c.name == name)
    }

    /// Numeric value at (row, column name), if present.
    pub fn number(&self, row: usize, column: &str) -> Option<f64> {
        match self.rows.get(row)?.get(self.column_index(column)?)? {
            Cell::Number(v) => Some(*v),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for c in &self.columns {
            if c.unit.is_empty() {
                return Err(Error::Data(format!("column `{}` has an empty unit", c.name)));
            }
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != self.columns.len() {
                return Err(Error::Data(format!(
                    "row {i} has {} cells, expected {}",
                    row.len(),
                    self.columns.len()
                )));
            }
            for (cell, col) in row.iter().zip(&self.columns) {
                match cell {
                    Cell::Number(v) if !v.is_finite() => {
                        return Err(Error::Data(format!(
                            "row {i}, column `{}`: non-finite value",
                            col.name
                        )))
                    }
                    Cell::Number(_) if !col.kind.is_numeric() => {
                        return Err(Error::Data(format!(
                            "row {i}: number in text column `{}`",
                            col.name
                        )))
                    }
                    Cell::Text(_) if col.kind.is_numeric() => {
                        return Err(Error::Data(format!(
                            "row {i}: text in numeric column `{}`",
                            col.name
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }
}

/// Render with 17 significant digits, positional where the exponent is modest.
pub(crate) fn format_number(v: f64) -> String {
    if v == 0.0 {
        return "0".to_owned();
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..=20).contains(&exp) {
        return sci;
    }
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    let point = exp + 1;
    let body = if point <= 0 {
        format!("0.{}{digits}", "0".repeat((-point) as usize))
    } else if point as usize >= digits.len() {
        format!("{digits}{}", "0".repeat(point as usize - digits.len()))
    } else {
        let (int, frac) = digits.split_at(point as usize);
        format!("{int}.{frac}")
    };
    format!("{sign}{body}")
}

pub fn write_table_to(table: &ResultTable, writer: impl Write, delimiter: u8) -> Result<()> {
    table.validate()?;
    let mut w = csv::WriterBuilder::new()
        .delimiter(delimiter)
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(writer);
    w.write_record(table.columns.iter().map(|c| format!("{}({})", c.name, c.unit)))
        .map_err(csv_error)?;
    for row in &table.rows {
        w.write_record(row.iter().map(|cell| match cell {
            Cell::Text(s) => s.clone(),
            Cell::Number(v) => format_number(*v),
            Cell::Empty => String::new(),
        }))
        .map_err(csv_error)?;
    }
    w.flush().map_err(|e| Error::Io {
        path: "<table output>".into(),
        source: e,
    })
}

pub fn write_table(table: &ResultTable, path: impl AsRef<Path>, delimiter: u8) -> Result<()> {
    let path = path.as_ref();
    table.validate()?;
    let file = std::fs::File::create(path).map_err(|e| Error::io(path, e))?;
    write_table_to(table, std::io::BufWriter::new(file), delimiter).map_err(|e| match e {
        Error::Io { source, .. } => Error::io(path, source),
        other => other,
    })
}

/// Read a table written by [`write_table`]. Column kinds are inferred from
/// the unit strings.
pub fn parse_table(reader: impl Read, delimiter: u8) -> Result<ResultTable> {
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .has_headers(true)
        .from_reader(reader);
    let columns = rdr
        .headers()
        .map_err(csv_error)?
        .iter()
        .map(|h| {
            let open = h
                .rfind('(')
                .filter(|_| h.ends_with(')'))
                .ok_or_else(|| Error::Data(format!("header cell `{h}` is not `name(unit)`")))?;
            let unit = &h[open + 1..h.len() - 1];
            Ok(Column::new(&h[..open], unit, ColumnKind::from_unit(unit)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut table = ResultTable::new(columns);
    for record in rdr.records() {
        let record = record.map_err(csv_error)?;
        let row = record
            .iter()
            .zip(&table.columns)
            .map(|(s, col)| {
                if s.is_empty() {
                    Ok(Cell::Empty)
                } else if col.kind.is_numeric() {
                    s.parse()
                        .map(Cell::Number)
                        .map_err(|_| Error::Data(format!("column `{}`: `{s}` is not a number", col.name)))
                } else {
                    Ok(Cell::Text(s.to_owned()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        table.push_row(row);
    }
    Ok(table)
}

pub fn read_table(path: impl AsRef<Path>, delimiter: u8) -> Result<ResultTable> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    parse_table(std::io::BufReader::new(file), delimiter)
}

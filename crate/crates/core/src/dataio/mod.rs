//! File formats: aircraft/vehicle spec documents, battery pack datasets and
//! delimited result tables. Unit conversions live in [`units`].

mod packs;
mod specs;
mod table;
pub mod units;

pub use packs::{load_packs, parse_packs, write_packs, PACK_HEADER};
pub use specs::{load_specs, parse_specs, save_specs, to_spec_string, Defaults, SpecDocument};
pub use table::{
    parse_table, read_table, write_table, write_table_to, Cell, Column, ColumnKind, ResultTable,
};

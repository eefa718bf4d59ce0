//! Mission energy and battery requirement models for electric vertical
//! take-off and landing (EVTOL) aircraft.
//!
//! [`mission::build_mission`] evaluates a take-off, climb, cruise, descent
//! and landing schedule with momentum-theory vertical power and fixed-wing
//! segment power ([`powerplant`]). [`battery`] turns a mission into pack
//! specific-energy and specific-power requirements and checks them against
//! pack datasets, and [`compare`] sets the resulting Wh/passenger-mile
//! curves against road vehicles.

pub mod atmosphere;
pub mod battery;
pub mod compare;
pub mod dataio;
pub mod error;
pub mod mission;
pub mod powerplant;

pub use error::{Error, Result};

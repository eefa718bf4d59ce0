pub const METERS_PER_MILE: f64 = 1609.344;
pub const METERS_PER_NAUTICAL_MILE: f64 = 1852.0;
pub const SECONDS_PER_HOUR: f64 = 3600.0;

pub fn miles_to_m(mi: f64) -> f64 {
    mi * METERS_PER_MILE
}

pub fn m_to_miles(m: f64) -> f64 {
    m / METERS_PER_MILE
}

pub fn nautical_miles_to_miles(nmi: f64) -> f64 {
    nmi * METERS_PER_NAUTICAL_MILE / METERS_PER_MILE
}

pub fn mph_to_mps(mph: f64) -> f64 {
    mph * METERS_PER_MILE / SECONDS_PER_HOUR
}

pub fn mps_to_mph(mps: f64) -> f64 {
    mps * SECONDS_PER_HOUR / METERS_PER_MILE
}

//! Float helpers routed through `libm` so the crate builds without `std`.

pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

pub fn floor(x: f64) -> f64 {
    libm::floor(x)
}

//! placeholder
pub mod eigen;

//! Dual-cutoff multidimensional poverty measurement over household survey
//! microdata, with household-level and individual-level measurement
//! schemes, exact rational arithmetic end to end, an independent
//! brute-force verification path, and a seeded synthetic data generator.

pub mod deprivation;
pub mod engine;
pub mod error;
pub mod microdata;
pub mod oracle;
pub mod rational;
pub mod report;
pub mod schema;
pub mod synthgen;

pub use error::{Error, Result};
pub use rational::Rational;

//! Harness library behind the `congruence` binary: seeded generators,
//! named fixtures, suite runners and report types.

pub mod fixtures;
pub mod fnspec;
pub mod report;
pub mod rng;
pub mod suites;

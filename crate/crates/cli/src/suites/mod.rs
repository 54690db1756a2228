//! Theorem-verification suites.

pub mod group;
pub mod natsuite;
pub mod table1;

pub use group::{verify_group_collapse, verify_ring_collapse, StructureError};
pub use natsuite::NatSuiteConfig;
pub use table1::{evaluate_table1, Table1Outcome};

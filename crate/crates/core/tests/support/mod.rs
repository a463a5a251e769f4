//! Fixtures shared by the integration suites of this crate and the CLI
//! acceptance target.
#![allow(dead_code)]

pub mod oracle;
pub mod random;
pub mod tables;

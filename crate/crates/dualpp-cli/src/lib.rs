//! Fixture I/O and command implementations behind the `dualpp` binary.

pub mod commands;
pub mod fixture;

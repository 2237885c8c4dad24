//! Verification runner, boost calculator and wave-function builder on top of
//! the `relspin` library. The binary in `main.rs` is a thin argument parser
//! over [`commands`].

pub mod commands;
pub mod config;
pub mod grid;
pub mod report;
pub mod suites;

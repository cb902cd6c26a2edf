//! Command-line front end for `magicdist-core`: input formats, JSON reports,
//! subcommand payloads and the parallel census driver.

pub mod commands;
pub mod input;
pub mod parallel;
pub mod report;

//! Command-line front end, file formats and reports for `mixsing-core`.

pub mod config;
pub mod error;
pub mod input;
pub mod parallel;
pub mod report;
pub mod run;
pub mod svg;

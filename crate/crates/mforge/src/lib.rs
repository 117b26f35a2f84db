//! File formats, JSON reports and the command line for `mforge-core`.

pub mod cli;
pub mod dot;
pub mod graph6;
pub mod parallel;
pub mod report;

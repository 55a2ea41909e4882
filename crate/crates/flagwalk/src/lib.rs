//! File formats, embedded fixtures, JSON reports and the command-line front
//! end for `flagwalk-core`.

pub mod cli;
pub mod fixtures;
pub mod mapfile;
pub mod report;

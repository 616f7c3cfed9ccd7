//! IO, file formats and the verification harness on top of `domforce-core`.

pub mod fixtures;
pub mod format;
pub mod report;
pub mod sample;
pub mod spec;
pub mod suites;

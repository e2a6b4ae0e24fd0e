//! The pieces behind the `forge` binary: the JSON manifest format, the
//! verification suites, report lines, and derived-structure builders.

pub mod build;
pub mod export;
pub mod manifest;
pub mod report;
pub mod verify;

//! Session parsing, execution and reporting for the `closure-lab` binary.

pub mod report;
pub mod run;
pub mod session;

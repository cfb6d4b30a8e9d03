//! Library side of the `qcong` binary: argument types, task runner and
//! report writers.

pub mod args;
pub mod identity;
pub mod report;
pub mod run;

pub use report::{exit_code, Format, Record};

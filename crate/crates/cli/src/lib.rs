//! Verification front end: runs the reproduction pipeline and compares it against
//! the printed objects.

pub mod checks;
pub mod report;

pub use checks::{hilbert, reproduce, verify_paper, GroupSpec, Inputs, ModuleSpec, Options};
pub use report::{CheckResult, ReportDocument, Status, Summary};

//! Verification suites, the invertibility scanner and matrix export for the
//! `mdz` command-line tool.

pub mod export;
pub mod range;
pub mod report;
pub mod scan;
pub mod suites;

pub use range::{Target, WeightRange};
pub use report::{CheckResult, Report, Totals};

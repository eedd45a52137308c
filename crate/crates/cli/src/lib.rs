//! Command-line front end and verification suites for `diagram-monoids`.

pub mod app;
pub mod golden;
pub mod report;
pub mod suites;

pub use app::{run, run_with};
pub use report::{Claim, VerificationReport};

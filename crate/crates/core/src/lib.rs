pub mod catalog;
pub mod check;
pub mod cli;
pub mod double;
pub mod error;
pub mod exact;
pub mod extension;
pub mod fh;
pub mod frobenius;
pub mod hopf;

pub use check::CheckResult;
pub use error::{Error, Result};

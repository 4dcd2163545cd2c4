//! JSON documents, reports and the `maxtorus` command line.

pub mod app;
pub mod document;
pub mod report;

pub use app::run;

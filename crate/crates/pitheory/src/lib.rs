//! Command-line front end for `pitheory-core`: group definition files,
//! cap configuration, report documents and a parallel corpus runner.

pub mod cli;
pub mod config;
pub mod groupfile;
pub mod inspect;
pub mod report;
pub mod runner;

pub use groupfile::{parse_directive, parse_group_file, parse_group_str, GroupSource, GroupSpecFile, ParseError};
pub use report::{ReportDocument, Summary};

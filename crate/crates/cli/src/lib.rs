//! Command-line front end: invariant suites, enumerations and ball queries,
//! each producing one JSON [`report::Report`].

pub mod cache;
pub mod commands;
pub mod report;
pub mod sampling;
pub mod suites;

//! Command line front end for the sphere-bundle toolkit: catalog lookup,
//! inline base descriptions, pipeline orchestration and table/JSON output.

pub mod app;
pub mod basefile;
pub mod dto;

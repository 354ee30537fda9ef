//! Library half of the `hopfchar` command line tool: the output document
//! and the subcommand implementations.

pub mod commands;
pub mod document;

pub use document::Document;

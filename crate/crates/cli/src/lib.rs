//! Command-line companion to the Maker-Breaker domination core: file
//! ingestion, JSON reports, the named check suite, the parallel census,
//! and the `mbd` subcommands.

pub mod census;
pub mod checks;
pub mod commands;
pub mod ingest;
pub mod report;

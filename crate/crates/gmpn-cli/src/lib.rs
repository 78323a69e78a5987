//! Command implementations behind the `gmpn` binary.
//!
//! Everything here is a thin orchestration layer over the `gmpn` library:
//! parse an element or group, run the requested computation, and render the
//! result as text, JSON, or DOT. The heavy logic lives in the library; the
//! scan engine in [`engine`] adds class reduction and parallel sweeps.

pub mod commands;
pub mod config;
pub mod engine;
pub mod exc;
pub mod report;

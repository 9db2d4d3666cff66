//! byzfl: a deterministic simulator for benchmarking Byzantine attacks and
//! robust defenses in federated learning.
//!
//! The crate simulates a FedAvg-family protocol over local clients: each
//! round the server broadcasts the model, clients run local optimization,
//! attacks corrupt data/gradients/updates through a two-tier callback
//! pipeline, a robust aggregation rule combines the updates, and the server
//! takes an optimizer step. Every random decision flows from keyed RNG
//! streams, so runs are bit-reproducible regardless of thread count.
//!
//! Entry points:
//! - [`harness::expand_grid`] / [`harness::run_experiment`] for declarative,
//!   grid-expanded experiments driven by JSON configs,
//! - [`protocol::run_trial`] for a single resolved trial,
//! - the aggregation rules in [`aggregators`] and the attacks in [`attacks`]
//!   for direct library use.
//!
//! See the `examples/` directory for runnable walkthroughs of each
//! capability; the `byzfl` binary exposes the same machinery as a CLI.

pub mod aggregators;
pub mod attacks;
pub mod data;
pub mod error;
pub mod harness;
pub mod models;
pub mod numcore;
pub mod protocol;

pub use error::{Error, Result};
pub use numcore::{ParamVector, RngStream};

//! Innovation-investment analytics for seaports.
//!
//! Three pieces fit together here:
//!
//! - [`metrics`] computes C-Port Vectors, the standardization-weighted,
//!   TRL-bucketed measure of a port's ICT innovation investment, along with
//!   the angle, share, and ranking operations built on them;
//! - [`ingest`] parses and validates portfolio files, standards ledgers,
//!   and weight files, and windows project records into snapshots;
//! - [`catalog`] embeds the C-Port service taxonomy as a queryable registry
//!   with readiness gap reporting.

pub mod catalog;
pub mod error;
pub mod ingest;
pub mod metrics;

pub use error::Error;

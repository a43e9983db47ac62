//! Exact combinatorics of `∏_{n>m} (1 - q^n)`.
//!
//! The crate implements the extended Franklin involution on partitions into
//! distinct parts greater than `m`, the `m`-landing staircase it is built
//! from, and exact truncated `q`-series arithmetic for the identities the
//! involution explains: the generalized pentagonal number theorem,
//! Sylvester's identity and the generating function of the fixed points.
//!
//! Modules:
//! - [`partition`]: partitions, Durfee squares, enumeration and counting.
//! - [`staircase`]: stairs, landings, `S_m(λ)` and diagram rendering.
//! - [`involution`]: `τ`, `σ`, the involution `I`, fixed points and audits.
//! - [`qseries`]: truncated series in `q` and `(z, q)` with big-integer coefficients.
//! - [`verify`]: cross-checks between closed forms, products and enumeration.
//! - [`cli`]: the `franklin` command-line front end.

pub mod cli;
pub mod error;
pub mod involution;
mod json;
pub mod partition;
pub mod qseries;
pub mod staircase;
pub mod verify;

pub use error::{Error, Result};
pub use involution::{involute, is_fixed_criterion, sigma, tau, InvolutionResult, MoveCase};
pub use partition::{base_partition, parse_partition, BoxPartition, DistinctPartition};
pub use qseries::{QSeries, ZQSeries};
pub use staircase::{staircase, Staircase};

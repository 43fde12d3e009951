//! Exact and statistical enumeration around the consecutive-2143 pattern.
//!
//! The crate answers one family of questions at desk scale: how rare do
//! consecutive occurrences of 2143 become across S_n and across involutions,
//! exactly where exact arithmetic is feasible and statistically beyond that.
//! It provides:
//!
//! * [`perm`] — permutations, involutions, blocks, streaming enumerators and
//!   exactly uniform samplers;
//! * [`patterns`] — consecutive and classical 2143 detection and the
//!   per-block window events;
//! * [`cells`] — RSK, left cells as recording-tableau fibers, and
//!   Kostant-negativity certificates;
//! * [`counting`] — pruned backtracking counters, the five case-family
//!   audits, exact Q_n statistics, and the on-disk count cache;
//! * [`asymptotics`] — big-integer involution/Motzkin tables and the
//!   floating diagnostics built from them;
//! * [`montecarlo`] — seeded, reproducible estimators with Wilson intervals.
//!
//! All counts are exact integers, all probabilities over finite families are
//! exact rationals, and every randomized path is deterministic given
//! (seed, worker count).

pub mod asymptotics;
pub mod cells;
pub mod counting;
pub mod error;
pub mod montecarlo;
pub mod patterns;
pub mod perm;
mod serde_util;

pub use error::{Error, Result};
pub use perm::{Block, Involution, Permutation};

// Re-exported so downstream users match the arithmetic types exactly.
pub use num_bigint::BigUint;
pub use num_rational::BigRational;

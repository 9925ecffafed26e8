//! Constructions, verifiers and exact solvers for multicolor Turán
//! problems: families of edge-disjoint monochromatic copies of a pattern
//! `F` that avoid a rainbow copy of a forbidden graph `G`.
//!
//! * [`graph`]: small exact graph primitives shared by everything else.
//! * [`constructions`]: generators returning colored hosts with packing
//!   certificates.
//! * [`verify`]: rainbow search, packing validation, pair statistics.
//! * [`packing`]: integral and fractional packing solvers and the
//!   exhaustive small-`n` oracle.

pub mod constructions;
pub mod error;
pub mod graph;
pub mod packing;
pub mod verify;

pub use error::{Error, Result};

//! Computations on finite sets of integers with small doubling `|2A|`.
//!
//! Sets are [`IntSet`]s; most structural routines expect the normal form
//! (minimum 0, gcd 1), carried by [`NormalSet`]. The doubling of a set of
//! size `k` is parametrized by a pair `(c, b)` and the volume formula
//! [`doubling::mu`]. On top of this sit additive dimension, stable
//! decompositions, the `D`/`D_x` growth operators, chains, and exhaustive
//! search oracles.

pub mod bits;
pub mod chains;
pub mod dimension;
pub mod doubling;
pub mod error;
pub mod operators;
pub mod record;
pub mod search;
pub mod set;
pub mod stable;

pub use error::{Error, Result};
pub use set::{IntSet, NormalSet};

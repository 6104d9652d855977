//! Exact index combinatorics for multiple zeta values, finite multiple
//! zeta(-star) values mod p, and floating-point symmetric multiple
//! zeta(-star) values.
//!
//! The crate has four layers:
//!
//! - [`index_algebra`]: indices, Q-linear combinations, Hoffman's dual, the
//!   phi-map, star expansion, and the F/G/H operator constructions;
//! - [`identity_checker`]: exact symbolic verification of the key lemma and
//!   its supporting counting lemmas over bounded parameter grids;
//! - [`fmzv_engine`]: multiple harmonic sums mod p and prime sweeps over the
//!   duality, Oyama, antipode, symmetric-sum, and weighted-sum identities;
//! - [`smzv_numeric`]: double-double truncated sums, symmetric value
//!   approximations, and rational reconstruction mod zeta(2).
//!
//! Sweeps run on the current rayon pool when the `parallel` feature (on by
//! default) is enabled, and sequentially otherwise; reports are byte-stable
//! either way.

pub mod error;
pub mod fmzv_engine;
pub mod identity_checker;
pub mod index_algebra;
pub mod parallel;
pub mod rational;
pub mod smzv_numeric;

pub use error::{Error, Result};
pub use index_algebra::{Index, IndexCombination, NonNegSeq};
pub use rational::Rational;

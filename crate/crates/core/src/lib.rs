//! Pairwise-sum witnesses in subsets of `{1, ..., 2n}`.
//!
//! Given `A ⊆ {1..2n}` and `k >= 3`, a *witness* is a tuple of `k` distinct
//! integers whose `k(k-1)/2` pairwise sums all lie in `A`. The crate offers
//! exhaustive witness search, explicit constructions that produce witnesses
//! whenever `A` is large enough, exact computation of the size thresholds
//! `g_k(n)` (integer witnesses) and `h_k(n)` (positive witnesses) for small
//! `n`, and the bound functions and constants that control the large-`n`
//! regime.

pub mod bounds;
pub mod cli;
pub mod constructive;
pub mod error;
pub mod extremal;
pub mod families;
pub mod search;
pub mod sidon;
pub mod sumset;

pub use error::{Error, Result};
pub use search::{
    candidate_universe, enumerate_witnesses, find_witness, find_witness_with, verify_witness,
    SearchOptions,
};
pub use sumset::{Certificate, Mode, Outcome, SumSet, Universe, Witness};

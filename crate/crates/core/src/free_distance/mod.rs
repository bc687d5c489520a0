//! Exact free distance.
//!
//! The primary method realizes a canonical encoder as a bank of shift
//! registers (one of length `nu_i` per input, `q^delta` states in total) and
//! runs a lowest-weight-first search for the lightest path that leaves the
//! zero state and returns to it. [`free_distance_bruteforce`] enumerates
//! bounded-degree information words directly and serves as an independent
//! oracle.

mod bruteforce;
mod trellis;

pub use bruteforce::{
    bruteforce_search_size, default_deg_bound, free_distance_bruteforce, max_feasible_deg_bound,
    BRUTEFORCE_LIMIT,
};
pub use trellis::{free_distance, SearchResult, StateSpace, STATE_LIMIT};

use thiserror::Error;

use crate::polymat::MatrixError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistanceError {
    #[error("encoder is not canonical (basic with full-rank high-order coefficients)")]
    NotCanonical,
    #[error("state space of {states} states exceeds the limit of {STATE_LIMIT}")]
    StateSpaceTooLarge { states: u128 },
    #[error("brute-force search over {size} information words exceeds the limit of {BRUTEFORCE_LIMIT}")]
    SearchSpaceTooLarge { size: u128 },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

//! Pattern matching with weighted edits.
//!
//! Given a pattern `P`, a text `T`, a normalized weight table `w` and a
//! threshold `k`, find every start `i` such that some fragment `T[i..j)` can
//! be edited into `P` at cost at most `k`. The fast path is [`solve_nk`];
//! [`sellers_starts`] and [`bf_occurrences`] are the reference matchers.
//!
//! Costs are exact scaled integers ([`Cost`]); decimal weights with up to six
//! fractional digits are represented without rounding.

pub mod alignment;
mod error;
pub mod ferns;
pub mod gen;
pub mod grid;
pub mod monge;
pub mod nk;
pub mod occurrences;
mod solver;
pub mod text;

pub use alignment::{optimal_alignment, weighted_edit_distance, weighted_edit_distance_capped, Alignment};
pub use error::{Error, Result};
pub use monge::CostMatrix;
pub use nk::{solve_banded, solve_nk, NkOptions};
pub use occurrences::{bf_occurrences, list_all_occs, min_end, sellers_starts, unweighted_occ, verify, OccReport};
pub use solver::Algo;
pub use text::{Alphabet, Cost, Sym, TextFragment, WeightTable, EPS, SCALE};

//! Characters, costs, weight tables and string primitives.

mod cost;
mod fragment;
mod lce;
mod period;
mod weights;

pub use cost::{Cost, SCALE};
pub use fragment::TextFragment;
pub use lce::{lce_rev_scan, lce_scan, LceIndex, Pillar};
pub use period::{ipm, period, Progression};
pub use weights::{Alphabet, Sym, WeightTable, EPS};

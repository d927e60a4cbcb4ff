//! Uniform dispatch over the occurrence solvers.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::nk::{solve_nk_with, DmvoPolicy, NkOptions};
use crate::occurrences::{sellers_starts, OccReport};
use crate::text::{Cost, Sym, WeightTable};

/// Which solver answers a query. All of them report the same starts and
/// minimum distances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algo {
    /// The `O(nm)` dynamic program.
    Sellers,
    /// The chunked band pipeline, every slice crossed directly.
    Banded,
    /// The chunked band pipeline with the distance-matrix oracle.
    Nk,
}

impl Algo {
    pub const ALL: [Algo; 3] = [Algo::Sellers, Algo::Banded, Algo::Nk];

    /// Runs the solver; `threads` follows [`NkOptions::threads`] and is
    /// ignored by [`Algo::Sellers`].
    pub fn run(self, p: &[Sym], t: &[Sym], k: Cost, w: &WeightTable, threads: usize) -> OccReport {
        let dmvo = match self {
            Algo::Sellers => return sellers_starts(p, t, k, w),
            Algo::Banded => DmvoPolicy::Never,
            Algo::Nk => DmvoPolicy::Adaptive,
        };
        let opts = NkOptions {
            dmvo,
            threads,
            ..NkOptions::default()
        };
        solve_nk_with(p, t, k, w, &opts)
    }

    pub fn name(self) -> &'static str {
        match self {
            Algo::Sellers => "sellers",
            Algo::Banded => "banded",
            Algo::Nk => "nk",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Algo, Error> {
        Algo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Range(format!("unknown algorithm `{s}` (expected sellers, banded or nk)")))
    }
}

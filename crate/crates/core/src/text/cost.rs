//! Exact scaled-integer costs.

use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use crate::error::Error;

/// Number of micro-units per unit of cost.
pub const SCALE: u64 = 1_000_000;

/// A non-negative edit cost stored as `cost × SCALE`.
///
/// Finite values stay below `2^62`; [`Cost::INF`] absorbs every sum.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cost(u64);

impl Cost {
    pub const ZERO: Cost = Cost(0);
    pub const INF: Cost = Cost(1 << 62);

    /// Builds a cost from raw micro-units, saturating at `INF`.
    #[inline]
    pub const fn from_micros(micros: u64) -> Cost {
        if micros >= Self::INF.0 {
            Self::INF
        } else {
            Cost(micros)
        }
    }

    /// `units × SCALE`.
    #[inline]
    pub const fn units(units: u64) -> Cost {
        Cost::from_micros(units.saturating_mul(SCALE))
    }

    #[inline]
    pub const fn micros(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn is_inf(self) -> bool {
        self.0 >= Self::INF.0
    }

    #[inline]
    pub const fn is_finite(self) -> bool {
        !self.is_inf()
    }

    /// Whole units contained in the cost, `⌊self / SCALE⌋`.
    #[inline]
    pub const fn whole_units(self) -> u64 {
        self.0 / SCALE
    }

    /// `self × n`, saturating.
    #[inline]
    pub fn times(self, n: u64) -> Cost {
        if self.is_inf() {
            return Self::INF;
        }
        Cost::from_micros(self.0.saturating_mul(n))
    }

    /// Signed difference `self − other` for finite operands.
    #[inline]
    pub fn signed_diff(self, other: Cost) -> i64 {
        self.0 as i64 - other.0 as i64
    }
}

impl Add for Cost {
    type Output = Cost;
    #[inline]
    fn add(self, rhs: Cost) -> Cost {
        // both operands are ≤ 2^62, so the raw sum cannot wrap
        let s = self.0 + rhs.0;
        if s >= Self::INF.0 {
            Self::INF
        } else {
            Cost(s)
        }
    }
}

impl AddAssign for Cost {
    #[inline]
    fn add_assign(&mut self, rhs: Cost) {
        *self = *self + rhs;
    }
}

impl std::iter::Sum for Cost {
    fn sum<I: Iterator<Item = Cost>>(iter: I) -> Cost {
        iter.fold(Cost::ZERO, |a, b| a + b)
    }
}

/// Prints the unscaled decimal with trailing zeros trimmed, or `inf`.
impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inf() {
            return f.write_str("inf");
        }
        let whole = self.0 / SCALE;
        let frac = self.0 % SCALE;
        if frac == 0 {
            return write!(f, "{whole}");
        }
        let digits = format!("{frac:06}");
        write!(f, "{whole}.{}", digits.trim_end_matches('0'))
    }
}

/// Parses a non-negative decimal with at most six fractional digits.
impl FromStr for Cost {
    type Err = Error;

    fn from_str(s: &str) -> Result<Cost, Error> {
        let bad = || Error::Parse {
            line: 0,
            msg: format!("invalid decimal `{s}`"),
        };
        let (int, frac) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        if !int.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        if frac.len() > 6 {
            return Err(Error::Parse {
                line: 0,
                msg: format!("`{s}` has more than 6 fractional digits"),
            });
        }
        let whole: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let mut micros_frac = 0u64;
        for (pos, b) in frac.bytes().enumerate() {
            micros_frac += u64::from(b - b'0') * 10u64.pow(5 - pos as u32);
        }
        let micros = whole
            .checked_mul(SCALE)
            .and_then(|v| v.checked_add(micros_frac))
            .filter(|&v| v < Cost::INF.0)
            .ok_or_else(bad)?;
        Ok(Cost(micros))
    }
}

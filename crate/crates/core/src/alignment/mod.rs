//! Alignments, weighted edit distance and self-edit distance.
//!
//! An alignment of `X[x..x')` onto `Y[y..y')` is a monotone lattice path in
//! the alignment graph: a vertical step `(p,t)→(p+1,t)` deletes `X[p]`, a
//! horizontal step `(p,t)→(p,t+1)` inserts `Y[t]`, and a diagonal step
//! matches or substitutes `X[p]` with `Y[t]`. Paths are stored in
//! breakpoint form: the non-match steps only, framed by the two endpoints.

mod distance;
mod lv;
mod selfed;

pub use distance::{
    levenshtein, optimal_alignment, weighted_edit_distance, weighted_edit_distance_capped, BandWindow,
};
pub use lv::{unweighted_alignment_lv, unweighted_alignment_lv_with};
pub use selfed::self_edit_distance;

use crate::error::{Error, Result};
use crate::text::{Cost, Sym, WeightTable, EPS};

/// One breakpoint: the vertex where a non-match step starts, with the
/// characters it consumes (`EPS` where none). Endpoints carry `(EPS, EPS)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Breakpoint {
    pub p: usize,
    pub t: usize,
    pub a: Sym,
    pub b: Sym,
}

/// Kind of step leaving a breakpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Delete,
    Insert,
    Substitute,
}

/// A lattice path in breakpoint form, with its cost.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alignment {
    breakpoints: Vec<Breakpoint>,
    cost: Cost,
}

impl Alignment {
    /// Compresses a path given vertex by vertex.
    ///
    /// Coordinates are absolute in `x` and `y`; `cost` is stored as given.
    pub fn from_path(path: &[(usize, usize)], x: &[Sym], y: &[Sym], cost: Cost) -> Result<Alignment> {
        let (&(p0, t0), &(p1, t1)) = match (path.first(), path.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err(Error::Shape("empty path".into())),
        };
        if p1 > x.len() || t1 > y.len() {
            return Err(Error::Shape("path leaves the grid".into()));
        }
        let mut bps = vec![Breakpoint { p: p0, t: t0, a: EPS, b: EPS }];
        for w in path.windows(2) {
            let ((p, t), (q, u)) = (w[0], w[1]);
            let bp = match (q.checked_sub(p), u.checked_sub(t)) {
                (Some(1), Some(0)) => Some(Breakpoint { p, t, a: x[p], b: EPS }),
                (Some(0), Some(1)) => Some(Breakpoint { p, t, a: EPS, b: y[t] }),
                (Some(1), Some(1)) if x[p] != y[t] => Some(Breakpoint { p, t, a: x[p], b: y[t] }),
                (Some(1), Some(1)) => None,
                _ => return Err(Error::Shape(format!("({p},{t}) → ({q},{u}) is not an edge"))),
            };
            bps.extend(bp);
        }
        bps.push(Breakpoint { p: p1, t: t1, a: EPS, b: EPS });
        Ok(Alignment { breakpoints: bps, cost })
    }

    /// Identity alignment of `x[l..r)` onto itself.
    pub fn identity(l: usize, r: usize) -> Alignment {
        let e = |i| Breakpoint { p: i, t: i, a: EPS, b: EPS };
        Alignment {
            breakpoints: vec![e(l), e(r)],
            cost: Cost::ZERO,
        }
    }

    pub(crate) fn from_breakpoints(breakpoints: Vec<Breakpoint>, cost: Cost) -> Alignment {
        Alignment { breakpoints, cost }
    }

    pub fn breakpoints(&self) -> &[Breakpoint] {
        &self.breakpoints
    }

    pub fn cost(&self) -> Cost {
        self.cost
    }

    /// Number of non-match steps.
    pub fn edits(&self) -> usize {
        self.breakpoints.len() - 2
    }

    /// Source fragment `[x, x')`.
    pub fn source(&self) -> (usize, usize) {
        (self.breakpoints[0].p, self.breakpoints.last().unwrap().p)
    }

    /// Target fragment `[y, y')`.
    pub fn target(&self) -> (usize, usize) {
        (self.breakpoints[0].t, self.breakpoints.last().unwrap().t)
    }

    /// Step kind leaving an inner breakpoint.
    pub fn step(bp: &Breakpoint) -> Step {
        match (bp.a, bp.b) {
            (_, EPS) => Step::Delete,
            (EPS, _) => Step::Insert,
            _ => Step::Substitute,
        }
    }

    /// Every vertex of the path, in order.
    pub fn expand(&self) -> Vec<(usize, usize)> {
        let bps = &self.breakpoints;
        let mut out = vec![(bps[0].p, bps[0].t)];
        for w in bps.windows(2) {
            let (prev, next) = (w[0], w[1]);
            let span = (next.p - prev.p).max(next.t - prev.t);
            for delta in (1..span).rev() {
                out.push((next.p - delta, next.t - delta));
            }
            if out.last() != Some(&(next.p, next.t)) {
                out.push((next.p, next.t));
            }
        }
        out
    }

    /// Checks that consecutive breakpoints are joined by one edit plus a
    /// diagonal run, and that endpoint characters are blank.
    pub fn validate(&self) -> Result<()> {
        let bps = &self.breakpoints;
        if bps.len() < 2 {
            return Err(Error::Shape("fewer than two breakpoints".into()));
        }
        let (first, last) = (bps[0], bps[bps.len() - 1]);
        if (first.a, first.b, last.a, last.b) != (EPS, EPS, EPS, EPS) {
            return Err(Error::Shape("endpoint breakpoints must be blank".into()));
        }
        for (idx, w) in bps.windows(2).enumerate() {
            let (prev, next) = (w[0], w[1]);
            let (dp, dt) = match (next.p.checked_sub(prev.p), next.t.checked_sub(prev.t)) {
                (Some(dp), Some(dt)) => (dp, dt),
                _ => return Err(Error::Shape("breakpoints are not monotone".into())),
            };
            let ok = if idx == 0 {
                dp == dt
            } else {
                match Self::step(&prev) {
                    Step::Delete => dp == dt + 1,
                    Step::Insert => dt == dp + 1,
                    Step::Substitute => dp == dt && dp >= 1 && prev.a != prev.b,
                }
            };
            if !ok {
                return Err(Error::Shape(format!(
                    "breakpoints ({},{}) and ({},{}) are inconsistent",
                    prev.p, prev.t, next.p, next.t
                )));
            }
        }
        Ok(())
    }
}

/// Sum of edge costs along the alignment of `x` onto a fragment of `y`.
pub fn alignment_cost(al: &Alignment, x: &[Sym], y: &[Sym], w: &WeightTable) -> Result<Cost> {
    let (x0, x1) = al.source();
    let (_, y1) = al.target();
    if x0 != 0 || x1 != x.len() || y1 > y.len() {
        return Err(Error::Shape(format!(
            "alignment covers [{x0},{x1}) but the source has length {}",
            x.len()
        )));
    }
    al.validate()?;
    let path = al.expand();
    let mut total = Cost::ZERO;
    for s in path.windows(2) {
        let ((p, t), (q, u)) = (s[0], s[1]);
        total += match (q - p, u - t) {
            (1, 0) => w.del(x[p]),
            (0, 1) => w.ins(y[t]),
            _ => w.w(x[p], y[t]),
        };
    }
    Ok(total)
}

/// Image `[ȳ, ȳ')` of the sub-fragment `[l, r)` of the source under `al`.
pub fn align_image(al: &Alignment, l: usize, r: usize) -> Result<(usize, usize)> {
    let (x0, x1) = al.source();
    if l > r || l < x0 || r > x1 {
        return Err(Error::Range(format!("[{l},{r}) is not inside [{x0},{x1})")));
    }
    let path = al.expand();
    let first_at = |row: usize| path.iter().find(|&&(p, _)| p == row).map(|&(_, t)| t).unwrap();
    let lo = first_at(l);
    let hi = if r == x1 { al.target().1 } else { first_at(r) };
    Ok((lo, hi))
}

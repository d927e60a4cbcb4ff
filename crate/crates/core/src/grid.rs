//! Explicit alignment grids and shortest-path search.
//!
//! The augmented alignment graph adds, for every forward edge, a back edge of
//! weight `W + 1`. Distances on it are computed with a binary-heap Dijkstra;
//! this is the exact (if slow) reference used by the fern routines and by the
//! oracles that check the band solver.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::text::{Cost, Sym, WeightTable};

/// The augmented alignment graph of `x` against `y`, with implicit edges.
pub struct AugmentedGrid<'a> {
    x: &'a [Sym],
    y: &'a [Sym],
    w: &'a WeightTable,
    back: Cost,
}

impl<'a> AugmentedGrid<'a> {
    pub fn new(x: &'a [Sym], y: &'a [Sym], w: &'a WeightTable) -> Self {
        AugmentedGrid { x, y, w, back: w.back_edge() }
    }

    pub fn cols(&self) -> usize {
        self.y.len() + 1
    }

    pub fn id(&self, p: usize, t: usize) -> usize {
        p * self.cols() + t
    }

    fn neighbors(&self, v: usize, mut f: impl FnMut(usize, Cost)) {
        let cols = self.cols();
        let (p, t) = (v / cols, v % cols);
        let (m, n) = (self.x.len(), self.y.len());
        if p < m {
            f(v + cols, self.w.del(self.x[p]));
        }
        if t < n {
            f(v + 1, self.w.ins(self.y[t]));
        }
        if p < m && t < n {
            f(v + cols + 1, self.w.w(self.x[p], self.y[t]));
        }
        if p > 0 {
            f(v - cols, self.back);
        }
        if t > 0 {
            f(v - 1, self.back);
        }
        if p > 0 && t > 0 {
            f(v - cols - 1, self.back);
        }
    }

    /// Distances from `(p, t)` to every vertex, indexed by [`AugmentedGrid::id`].
    pub fn distances_from(&self, p: usize, t: usize) -> Vec<Cost> {
        let total = (self.x.len() + 1) * self.cols();
        let mut dist = vec![Cost::INF; total];
        let src = self.id(p, t);
        dist[src] = Cost::ZERO;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((Cost::ZERO, src)));
        while let Some(Reverse((d, v))) = heap.pop() {
            if d > dist[v] {
                continue;
            }
            self.neighbors(v, |u, c| {
                let nd = d + c;
                if nd < dist[u] {
                    dist[u] = nd;
                    heap.push(Reverse((nd, u)));
                }
            });
        }
        dist
    }
}

/// An explicit subgraph of an augmented alignment graph.
#[derive(Default)]
pub struct SubGrid {
    ids: HashMap<(usize, usize), usize>,
    adj: Vec<Vec<(usize, Cost)>>,
}

impl SubGrid {
    pub fn new() -> SubGrid {
        SubGrid::default()
    }

    fn vertex(&mut self, v: (usize, usize)) -> usize {
        let next = self.ids.len();
        let id = *self.ids.entry(v).or_insert(next);
        if id == self.adj.len() {
            self.adj.push(Vec::new());
        }
        id
    }

    fn edge(&mut self, a: (usize, usize), b: (usize, usize), c: Cost) {
        let (ia, ib) = (self.vertex(a), self.vertex(b));
        if !self.adj[ia].iter().any(|&(u, _)| u == ib) {
            self.adj[ia].push((ib, c));
        }
    }

    /// Adds the rectangle `[p0, p1] × [t0, t1]` of the augmented graph of
    /// `x` against `y` with all its edges (forward and back).
    #[allow(clippy::too_many_arguments, clippy::needless_range_loop)]
    pub fn add_rect(&mut self, x: &[Sym], y: &[Sym], w: &WeightTable, p0: usize, p1: usize, t0: usize, t1: usize) {
        let back = w.back_edge();
        for p in p0..=p1 {
            for t in t0..=t1 {
                self.vertex((p, t));
                if p < p1 {
                    self.edge((p, t), (p + 1, t), w.del(x[p]));
                    self.edge((p + 1, t), (p, t), back);
                }
                if t < t1 {
                    self.edge((p, t), (p, t + 1), w.ins(y[t]));
                    self.edge((p, t + 1), (p, t), back);
                }
                if p < p1 && t < t1 {
                    self.edge((p, t), (p + 1, t + 1), w.w(x[p], y[t]));
                    self.edge((p + 1, t + 1), (p, t), back);
                }
            }
        }
    }

    /// Adds every vertex accepted by `keep` in the grid of `x` against `y`,
    /// with all augmented edges between kept vertices.
    #[allow(clippy::needless_range_loop)]
    pub fn add_induced(&mut self, x: &[Sym], y: &[Sym], w: &WeightTable, keep: impl Fn(usize, usize) -> bool) {
        let back = w.back_edge();
        let (m, n) = (x.len(), y.len());
        for p in 0..=m {
            for t in 0..=n {
                if !keep(p, t) {
                    continue;
                }
                self.vertex((p, t));
                if p < m && keep(p + 1, t) {
                    self.edge((p, t), (p + 1, t), w.del(x[p]));
                    self.edge((p + 1, t), (p, t), back);
                }
                if t < n && keep(p, t + 1) {
                    self.edge((p, t), (p, t + 1), w.ins(y[t]));
                    self.edge((p, t + 1), (p, t), back);
                }
                if p < m && t < n && keep(p + 1, t + 1) {
                    self.edge((p, t), (p + 1, t + 1), w.w(x[p], y[t]));
                    self.edge((p + 1, t + 1), (p, t), back);
                }
            }
        }
    }

    pub fn contains(&self, v: (usize, usize)) -> bool {
        self.ids.contains_key(&v)
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Distances from `src` to every vertex; absent vertices map to `INF`.
    pub fn distances_from(&self, src: (usize, usize)) -> HashMap<(usize, usize), Cost> {
        let mut dist = vec![Cost::INF; self.adj.len()];
        if let Some(&s) = self.ids.get(&src) {
            dist[s] = Cost::ZERO;
            let mut heap = BinaryHeap::new();
            heap.push(Reverse((Cost::ZERO, s)));
            while let Some(Reverse((d, v))) = heap.pop() {
                if d > dist[v] {
                    continue;
                }
                for &(u, c) in &self.adj[v] {
                    let nd = d + c;
                    if nd < dist[u] {
                        dist[u] = nd;
                        heap.push(Reverse((nd, u)));
                    }
                }
            }
        }
        self.ids.iter().map(|(&k, &id)| (k, dist[id])).collect()
    }

    /// Distance between two vertices (`INF` if either is absent or unreachable).
    pub fn distance(&self, a: (usize, usize), b: (usize, usize)) -> Cost {
        self.distances_from(a).get(&b).copied().unwrap_or(Cost::INF)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alignment::weighted_edit_distance;
    use crate::text::Alphabet;
    use proptest::prelude::*;

    #[test]
    fn forward_distances_are_edit_distances() {
        let sigma = Alphabet::new(['a', 'b']);
        let w = WeightTable::parse("a\tb\t3\nEPS\ta\t2\n", &sigma).unwrap();
        let x = sigma.encode("abba").unwrap();
        let y = sigma.encode("baab").unwrap();
        let g = AugmentedGrid::new(&x, &y, &w);
        let d = g.distances_from(0, 0);
        for p in 0..=4 {
            for t in 0..=4 {
                assert_eq!(d[g.id(p, t)], weighted_edit_distance(&x[..p], &y[..t], &w));
            }
        }
        let mut s = SubGrid::new();
        s.add_rect(&x, &y, &w, 0, 4, 0, 4);
        assert_eq!(s.distance((0, 0), (4, 4)), d[g.id(4, 4)]);
        assert_eq!(s.distance((4, 4), (0, 0)), w.back_edge().times(4));
    }

    proptest! {
        #[test]
        fn subgrid_of_whole_grid_agrees(
            x in prop::collection::vec(1u32..=2, 0..6),
            y in prop::collection::vec(1u32..=2, 0..6),
            src in (0usize..7, 0usize..7),
        ) {
            let w = WeightTable::unit(Alphabet::new(['a', 'b']));
            let (p, t) = (src.0 % (x.len() + 1), src.1 % (y.len() + 1));
            let g = AugmentedGrid::new(&x, &y, &w);
            let d = g.distances_from(p, t);
            let mut s = SubGrid::new();
            s.add_induced(&x, &y, &w, |_, _| true);
            let ds = s.distances_from((p, t));
            for q in 0..=x.len() {
                for u in 0..=y.len() {
                    prop_assert_eq!(ds[&(q, u)], d[g.id(q, u)]);
                }
            }
        }
    }
}

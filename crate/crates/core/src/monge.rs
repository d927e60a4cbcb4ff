//! Dense cost matrices, the Monge property and (min,+) products.
//!
//! A matrix is Monge when `A[i,j] + A[i+1,j+1] ≤ A[i,j+1] + A[i+1,j]` for all
//! adjacent index pairs. Row minima of such matrices are found by SMAWK in a
//! linear number of entry evaluations, which makes matrix–vector products
//! linear and matrix–matrix products `O(r(p+q))`.

use crate::error::{Error, Result};
use crate::text::Cost;

/// Row-major dense matrix of costs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CostMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Cost>,
    finite: bool,
}

impl CostMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Cost>) -> Result<CostMatrix> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(format!("{rows}×{cols} matrix has no cells")));
        }
        if data.len() != rows * cols {
            return Err(Error::Dimension {
                expected: rows * cols,
                found: data.len(),
            });
        }
        let finite = data.iter().all(|c| c.is_finite());
        Ok(CostMatrix { rows, cols, data, finite })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cost) -> CostMatrix {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let data: Vec<Cost> = (0..rows * cols).map(|x| f(x / cols, x % cols)).collect();
        let finite = data.iter().all(|c| c.is_finite());
        CostMatrix { rows, cols, data, finite }
    }

    /// Builds from rows of raw micro-units.
    pub fn from_micros(rows: &[Vec<u64>]) -> Result<CostMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        CostMatrix::new(r, c, rows.iter().flatten().map(|&v| Cost::from_micros(v)).collect())
    }

    /// Builds from rows of whole units.
    pub fn from_units(rows: &[Vec<u64>]) -> Result<CostMatrix> {
        let scaled: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&v| Cost::units(v).micros()).collect()).collect();
        CostMatrix::from_micros(&scaled)
    }

    pub fn filled(rows: usize, cols: usize, v: Cost) -> CostMatrix {
        CostMatrix::from_fn(rows, cols, |_, _| v)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Cost {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Cost] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[Cost] {
        &self.data
    }

    /// True when no entry is `INF`.
    pub fn is_finite(&self) -> bool {
        self.finite
    }

    /// The contiguous block `[r0, r1) × [c0, c1)`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Result<CostMatrix> {
        if r0 >= r1 || c0 >= c1 || r1 > self.rows || c1 > self.cols {
            return Err(Error::Range(format!(
                "[{r0},{r1})×[{c0},{c1}) is not a nonempty block of a {}×{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(CostMatrix::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j)))
    }

    /// Applies `f` to every entry.
    pub fn map(&self, mut f: impl FnMut(usize, usize, Cost) -> Cost) -> CostMatrix {
        CostMatrix::from_fn(self.rows, self.cols, |i, j| f(i, j, self.get(i, j)))
    }
}

/// Monge check over adjacent pairs, with `INF` absorbing.
pub fn is_monge(a: &CostMatrix) -> bool {
    (0..a.rows.saturating_sub(1)).all(|i| {
        (0..a.cols.saturating_sub(1)).all(|j| a.get(i, j) + a.get(i + 1, j + 1) <= a.get(i, j + 1) + a.get(i + 1, j))
    })
}

/// One nonzero cell of the density matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoreEntry {
    pub i: usize,
    pub j: usize,
    pub value: i64,
}

/// `dens[i][j] = A[i,j+1] + A[i+1,j] − A[i,j] − A[i+1,j+1]`, shape `(p−1)×(q−1)`.
pub fn density(a: &CostMatrix) -> Result<Vec<Vec<i64>>> {
    if !a.is_finite() {
        return Err(Error::Overflow("density of a matrix with infinite entries"));
    }
    let v = |i, j| i128::from(a.get(i, j).micros());
    (0..a.rows.saturating_sub(1))
        .map(|i| {
            (0..a.cols.saturating_sub(1))
                .map(|j| {
                    let d = v(i, j + 1) + v(i + 1, j) - v(i, j) - v(i + 1, j + 1);
                    i64::try_from(d).map_err(|_| Error::Overflow("density"))
                })
                .collect()
        })
        .collect()
}

/// Nonzero density cells in row-major order.
pub fn core(a: &CostMatrix) -> Result<Vec<CoreEntry>> {
    let dens = density(a)?;
    Ok(dens
        .iter()
        .enumerate()
        .flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(move |(j, &value)| CoreEntry { i, j, value })
        })
        .collect())
}

/// Core size δ(A).
pub fn delta(a: &CostMatrix) -> Result<usize> {
    Ok(core(a)?.len())
}

/// Leftmost row minima of the implicit totally monotone `rows × cols`
/// matrix `f`.
pub fn smawk<F: Fn(usize, usize) -> Cost>(rows: usize, cols: usize, f: F) -> Vec<usize> {
    let mut out = vec![0usize; rows];
    if rows == 0 || cols == 0 {
        return out;
    }
    let r: Vec<usize> = (0..rows).collect();
    let c: Vec<usize> = (0..cols).collect();
    smawk_rec(&r, &c, &f, &mut out);
    out
}

fn smawk_rec<F: Fn(usize, usize) -> Cost>(rows: &[usize], cols: &[usize], f: &F, out: &mut [usize]) {
    if rows.is_empty() {
        return;
    }
    // reduce to at most |rows| candidate columns
    let mut stack: Vec<usize> = Vec::with_capacity(rows.len());
    for &c in cols {
        while let Some(&top) = stack.last() {
            let r = rows[stack.len() - 1];
            if f(r, top) <= f(r, c) {
                break;
            }
            stack.pop();
        }
        if stack.len() < rows.len() {
            stack.push(c);
        }
    }
    let odd: Vec<usize> = rows.iter().skip(1).step_by(2).copied().collect();
    smawk_rec(&odd, &stack, f, out);
    // fill the even rows between the odd rows' minima
    let mut j = 0;
    for i in (0..rows.len()).step_by(2) {
        let r = rows[i];
        let stop = if i + 1 < rows.len() { out[rows[i + 1]] } else { *stack.last().unwrap() };
        let (mut best, mut best_v) = (stack[j], f(r, stack[j]));
        while stack[j] != stop {
            j += 1;
            let v = f(r, stack[j]);
            if v < best_v {
                best = stack[j];
                best_v = v;
            }
        }
        out[r] = best;
    }
}

/// Row minima of a Monge matrix; ties go to the smallest column.
pub fn smawk_row_minima(a: &CostMatrix) -> Vec<usize> {
    smawk(a.rows, a.cols, |i, j| a.get(i, j))
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::Dimension { expected, found });
    }
    Ok(())
}

/// `(A ⊕ v)[i] = min_j A[i,j] + v[j]` by exhaustive scan.
pub fn minplus_mat_vec_naive(a: &CostMatrix, v: &[Cost]) -> Result<Vec<Cost>> {
    check_len(a.cols, v.len())?;
    Ok((0..a.rows)
        .map(|i| a.row(i).iter().zip(v).map(|(&x, &y)| x + y).min().unwrap())
        .collect())
}

/// `A ⊕ v` for Monge `A` via SMAWK. Matrices with infinite entries take the
/// exhaustive path; infinite vector entries are skipped.
pub fn minplus_mat_vec(a: &CostMatrix, v: &[Cost]) -> Result<Vec<Cost>> {
    check_len(a.cols, v.len())?;
    if !a.is_finite() {
        return minplus_mat_vec_naive(a, v);
    }
    let live: Vec<usize> = (0..v.len()).filter(|&j| v[j].is_finite()).collect();
    if live.is_empty() {
        return Ok(vec![Cost::INF; a.rows]);
    }
    let f = |i: usize, jj: usize| a.get(i, live[jj]) + v[live[jj]];
    let arg = smawk(a.rows, live.len(), f);
    Ok(arg.iter().enumerate().map(|(i, &jj)| f(i, jj)).collect())
}

/// `C[i,j] = min_k A[i,k] + B[k,j]` by triple loop.
pub fn minplus_mat_mat_naive(a: &CostMatrix, b: &CostMatrix) -> Result<CostMatrix> {
    check_len(a.cols, b.rows)?;
    Ok(CostMatrix::from_fn(a.rows, b.cols, |i, j| {
        (0..a.cols).map(|k| a.get(i, k) + b.get(k, j)).min().unwrap()
    }))
}

/// `A ⊕ B` for Monge operands: one SMAWK pass per output column.
pub fn minplus_mat_mat(a: &CostMatrix, b: &CostMatrix) -> Result<CostMatrix> {
    check_len(a.cols, b.rows)?;
    if !a.is_finite() || !b.is_finite() {
        return minplus_mat_mat_naive(a, b);
    }
    let mut data = vec![Cost::ZERO; a.rows * b.cols];
    for j in 0..b.cols {
        let f = |i: usize, k: usize| a.get(i, k) + b.get(k, j);
        for (i, &k) in smawk(a.rows, a.cols, f).iter().enumerate() {
            data[i * b.cols + j] = f(i, k);
        }
    }
    CostMatrix::new(a.rows, b.cols, data)
}

/// `a ≡_k b`: equal, or both at least `k`.
#[inline]
pub fn k_equal(a: Cost, b: Cost, k: Cost) -> bool {
    a == b || a.min(b) >= k
}

/// Entrywise `≡_k`.
pub fn k_equivalent(a: &CostMatrix, b: &CostMatrix, k: Cost) -> Result<bool> {
    check_len(a.rows, b.rows)?;
    check_len(a.cols, b.cols)?;
    Ok(a.data.iter().zip(&b.data).all(|(&x, &y)| k_equal(x, y, k)))
}

/// Whether all horizontally and vertically adjacent entries differ by at most `beta`.
pub fn is_bounded_difference(a: &CostMatrix, beta: Cost) -> Result<bool> {
    if !a.is_finite() {
        return Err(Error::InfiniteEntry);
    }
    let b = beta.micros();
    let close = |x: Cost, y: Cost| x.micros().abs_diff(y.micros()) <= b;
    Ok((0..a.rows).all(|i| {
        (0..a.cols).all(|j| {
            (j + 1 >= a.cols || close(a.get(i, j), a.get(i, j + 1)))
                && (i + 1 >= a.rows || close(a.get(i, j), a.get(i + 1, j)))
        })
    }))
}

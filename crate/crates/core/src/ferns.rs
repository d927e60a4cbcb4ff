//! Boundary and restricted distance matrices, ferns and Δ-puzzles.
//!
//! For a puzzle piece `(Ṗ, Ṫ)` the `(Δ→∇)`-restricted matrix holds the
//! augmented-graph distances from `(0, i)`, `i ≤ Δ`, to `(|Ṗ|, |Ṫ|−∇+j)`,
//! `j ≤ ∇`. A `(Δ→∇, k)`-fern is any Monge matrix `k`-equivalent to it.
//! Pieces that overlap by `Δ` in both strings stitch into a longer pair, and
//! the restricted matrix of the stitched pair is `k`-equivalent to the
//! product of the pieces' leading, internal and trailing matrices as long as
//! `k ≤ ⌊Δ/2⌋ − tor`.

use crate::error::{Error, Result};
use crate::grid::AugmentedGrid;
use crate::monge::{is_monge, k_equivalent, minplus_mat_mat, CostMatrix};
use crate::text::{Cost, Sym, TextFragment, WeightTable};

/// Largest `|X| + |Y|` accepted by [`boundary_distance_matrix`].
pub const BOUNDARY_LIMIT: usize = 512;

/// A pair of strings `(Ṗ, Ṫ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PuzzlePiece {
    pub pat: TextFragment,
    pub txt: TextFragment,
}

impl PuzzlePiece {
    pub fn new(pat: Vec<Sym>, txt: Vec<Sym>) -> PuzzlePiece {
        PuzzlePiece {
            pat: TextFragment::from_vec(pat),
            txt: TextFragment::from_vec(txt),
        }
    }

    /// `|Ṫ| − |Ṗ|`.
    pub fn shift(&self) -> isize {
        self.txt.len() as isize - self.pat.len() as isize
    }

    pub fn tor(&self) -> usize {
        self.shift().unsigned_abs()
    }
}

/// Which part of the pattern a fern covers when pieces are stitched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Full,
    Leading,
    Internal,
    Trailing,
}

impl Role {
    /// Pattern window `[l, r)` kept by this role.
    pub fn trim(self, pat_len: usize, delta: usize) -> Result<(usize, usize)> {
        let (lo, hi) = (delta / 2, delta.div_ceil(2));
        let (l, drop_r) = match self {
            Role::Full => (0, 0),
            Role::Leading => (0, hi),
            Role::Internal => (lo, hi),
            Role::Trailing => (lo, 0),
        };
        if l + drop_r > pat_len {
            return Err(Error::Range(format!(
                "pattern of length {pat_len} is shorter than the {self:?} trim for Δ = {delta}"
            )));
        }
        Ok((l, pat_len - drop_r))
    }
}

/// A Monge matrix `k`-equivalent to a restricted distance matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fern {
    pub matrix: CostMatrix,
    pub delta_in: usize,
    pub delta_out: usize,
    pub k: Cost,
    pub role: Role,
}

/// Distances over the augmented graph from every input vertex `λ_a` to every
/// output vertex `ρ_b`.
///
/// Inputs run up the left column and then along the top row:
/// `λ_i = (|X|−i, 0)` for `i ≤ |X|`, then `(0, i−|X|)`. Outputs run along the
/// bottom row and then up the right column: `ρ_i = (|X|, i)` for `i ≤ |Y|`,
/// then `(|X|+|Y|−i, |Y|)`.
pub fn boundary_distance_matrix(x: &[Sym], y: &[Sym], w: &WeightTable) -> Result<CostMatrix> {
    let (m, n) = (x.len(), y.len());
    if m + n > BOUNDARY_LIMIT {
        return Err(Error::Size(format!("|X| + |Y| = {} exceeds {BOUNDARY_LIMIT}", m + n)));
    }
    let lambda = |i: usize| if i <= m { (m - i, 0) } else { (0, i - m) };
    let rho = |i: usize| if i <= n { (m, i) } else { (m + n - i, n) };
    let g = AugmentedGrid::new(x, y, w);
    let size = m + n + 1;
    let mut data = Vec::with_capacity(size * size);
    for a in 0..size {
        let (p, t) = lambda(a);
        let dist = g.distances_from(p, t);
        data.extend((0..size).map(|b| {
            let (q, u) = rho(b);
            dist[g.id(q, u)]
        }));
    }
    CostMatrix::new(size, size, data)
}

fn restricted(pat: &[Sym], txt: &[Sym], delta: usize, nabla: usize, w: &WeightTable) -> Result<CostMatrix> {
    let n = txt.len();
    if delta > n || nabla > n {
        return Err(Error::Range(format!("Δ = {delta}, ∇ = {nabla} must not exceed |Ṫ| = {n}")));
    }
    let g = AugmentedGrid::new(pat, txt, w);
    let mut data = Vec::with_capacity((delta + 1) * (nabla + 1));
    for i in 0..=delta {
        let dist = g.distances_from(0, i);
        data.extend((0..=nabla).map(|j| dist[g.id(pat.len(), n - nabla + j)]));
    }
    CostMatrix::new(delta + 1, nabla + 1, data)
}

/// The `(Δ→∇)`-restricted distance matrix of a piece.
pub fn restricted_distance_matrix(piece: &PuzzlePiece, delta: usize, nabla: usize, w: &WeightTable) -> Result<CostMatrix> {
    restricted(&piece.pat, &piece.txt, delta, nabla, w)
}

/// The `Δ→Δ` restricted matrix of the piece with its pattern trimmed for `role`.
pub fn role_matrix(piece: &PuzzlePiece, delta: usize, w: &WeightTable, role: Role) -> Result<CostMatrix> {
    if delta > piece.txt.len() {
        return Err(Error::Range(format!("Δ = {delta} exceeds |Ṫ| = {}", piece.txt.len())));
    }
    if piece.pat.len() < delta {
        return Err(Error::Range(format!("|Ṗ| = {} is shorter than Δ = {delta}", piece.pat.len())));
    }
    let (l, r) = role.trim(piece.pat.len(), delta)?;
    restricted(&piece.pat[l..r], &piece.txt, delta, delta, w)
}

/// Exact fern of a piece: the role matrix itself (or the restricted matrix for `Full`).
pub fn exact_fern(piece: &PuzzlePiece, delta: usize, nabla: usize, k: Cost, role: Role, w: &WeightTable) -> Result<Fern> {
    let matrix = match role {
        Role::Full => restricted_distance_matrix(piece, delta, nabla, w)?,
        _ if delta != nabla => return Err(Error::Range("role matrices are square (Δ = ∇)".into())),
        _ => role_matrix(piece, delta, w, role)?,
    };
    Ok(Fern {
        matrix,
        delta_in: delta,
        delta_out: nabla,
        k,
        role,
    })
}

/// Whether `matrix` is a `(Δ→∇, k)`-fern of the piece for `role`.
pub fn is_fern(
    matrix: &CostMatrix,
    piece: &PuzzlePiece,
    delta: usize,
    nabla: usize,
    k: Cost,
    role: Role,
    w: &WeightTable,
) -> Result<bool> {
    let exact = exact_fern(piece, delta, nabla, k, role, w)?.matrix;
    if (matrix.rows(), matrix.cols()) != (exact.rows(), exact.cols()) {
        return Ok(false);
    }
    Ok(is_monge(matrix) && k_equivalent(matrix, &exact, k)?)
}

/// Keeps rows `0..=Δ'` and the last `∇'+1` columns.
pub fn trim_fern(f: &Fern, delta: usize, nabla: usize, k: Cost) -> Result<Fern> {
    if delta > f.delta_in || nabla > f.delta_out || k > f.k {
        return Err(Error::Range(format!(
            "cannot trim a ({}→{}, {}) fern to ({delta}→{nabla}, {k})",
            f.delta_in, f.delta_out, f.k
        )));
    }
    let matrix = f
        .matrix
        .submatrix(0, delta + 1, f.delta_out - nabla, f.delta_out + 1)?;
    Ok(Fern {
        matrix,
        delta_in: delta,
        delta_out: nabla,
        k,
        role: f.role,
    })
}

fn check_overlap(a: &[Sym], b: &[Sym], delta: usize) -> Result<()> {
    if a.len() < delta || b.len() < delta {
        return Err(Error::Precondition(format!(
            "strings of lengths {} and {} cannot overlap by {delta}",
            a.len(),
            b.len()
        )));
    }
    Ok(())
}

/// Whether the length-Δ suffix of `a` equals the length-Δ prefix of `b`.
pub fn fits(a: &[Sym], b: &[Sym], delta: usize) -> Result<bool> {
    check_overlap(a, b, delta)?;
    Ok(a[a.len() - delta..] == b[..delta])
}

/// `a ⊙_Δ b = a · b[Δ..)`.
pub fn stitch_strings(a: &[Sym], b: &[Sym], delta: usize) -> Result<Vec<Sym>> {
    if !fits(a, b, delta)? {
        return Err(Error::Fit(format!("overlap of {delta} characters differs")));
    }
    Ok(a.iter().chain(&b[delta..]).copied().collect())
}

/// Stitches a whole sequence of pieces into one pair.
pub fn stitch_pieces(seq: &[PuzzlePiece], delta: usize) -> Result<(Vec<Sym>, Vec<Sym>)> {
    let first = seq.first().ok_or(Error::EmptyInput)?;
    let (mut p, mut t) = (first.pat.to_vec(), first.txt.to_vec());
    for piece in &seq[1..] {
        p = stitch_strings(&p, &piece.pat, delta)?;
        t = stitch_strings(&t, &piece.txt, delta)?;
    }
    Ok((p, t))
}

/// `Σ ||Ṫ_i| − |Ṗ_i||`.
pub fn torsion(seq: &[PuzzlePiece]) -> usize {
    seq.iter().map(PuzzlePiece::tor).sum()
}

/// Checks the stitching preconditions and returns the role of each piece.
pub fn puzzle_roles(seq: &[PuzzlePiece], delta: usize, k: Cost) -> Result<Vec<Role>> {
    if seq.len() < 2 {
        return Err(Error::Precondition("a puzzle needs at least two pieces".into()));
    }
    for (s, pair) in seq.windows(2).enumerate() {
        let ok = fits(&pair[0].pat, &pair[1].pat, delta)? && fits(&pair[0].txt, &pair[1].txt, delta)?;
        if !ok {
            return Err(Error::Fit(format!("piece {s} does not fit piece {}", s + 1)));
        }
    }
    let tor = torsion(seq);
    let budget = (delta / 2).checked_sub(tor);
    if budget.is_none_or(|b| k > Cost::units(b as u64)) {
        return Err(Error::Torsion(format!("k = {k}, Δ = {delta}, tor = {tor}")));
    }
    let z = seq.len();
    Ok((0..z)
        .map(|s| match s {
            0 => Role::Leading,
            _ if s + 1 == z => Role::Trailing,
            _ => Role::Internal,
        })
        .collect())
}

/// Product of the pieces' leading, internal and trailing matrices.
pub fn stitched_fern_product(seq: &[PuzzlePiece], delta: usize, k: Cost, w: &WeightTable) -> Result<CostMatrix> {
    let roles = puzzle_roles(seq, delta, k)?;
    let mut acc = role_matrix(&seq[0], delta, w, roles[0])?;
    for (piece, &role) in seq.iter().zip(&roles).skip(1) {
        acc = minplus_mat_mat(&acc, &role_matrix(piece, delta, w, role)?)?;
    }
    Ok(acc)
}

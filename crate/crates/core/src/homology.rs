//! Exact integer simplicial homology: chain complexes, Smith normal form,
//! reduced Betti numbers and torsion, plus an independent fraction-free
//! rational-rank path used to cross-check every rank the Smith route
//! produces.
//!
//! Homology is reduced throughout: the empty face participates as the unique
//! cell of dimension −1 and the lowest boundary matrix is the augmentation.
//! All arithmetic is exact — machine integers with overflow checks that
//! escalate to arbitrary precision, never floating point — because torsion
//! must be detected exactly (its presence falsifies any wedge-of-spheres
//! claim).

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::complex::ComplexRepr;
use crate::error::DevoidError;
use crate::face::Face;
use crate::morse::HomotopyDescriptor;
use crate::Result;

/// Default cap on the number of faces a chain complex may enumerate.
pub const DEFAULT_FACE_BUDGET: usize = 1 << 20;

/// Faces large enough that the ∂∘∂ = 0 self-check is skipped.
const BOUNDARY_CHECK_LIMIT: usize = 4096;

// ---------------------------------------------------------------------------
// chain complexes
// ---------------------------------------------------------------------------

/// Column-major sparse integer matrix; entries of boundary matrices are ±1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    pub rows: usize,
    pub cols: usize,
    /// `columns[j]` lists (row, value) pairs sorted by row.
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseIntMatrix {
    pub fn triplets(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                out.push((i, j, v));
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m[i][j] = v;
            }
        }
        m
    }
}

/// Ordered face lists per cardinality plus the boundary matrices between
/// consecutive cardinalities.
#[derive(Clone, Debug)]
pub struct ChainComplexData {
    /// `faces_by_card[k]` = sorted faces of cardinality k; index 0 holds ∅.
    faces_by_card: Vec<Vec<Face>>,
    /// `boundaries[d]` maps dimension-d chains (cardinality d+1) down one
    /// dimension; `boundaries[0]` is the augmentation onto ∅.
    boundaries: Vec<SparseIntMatrix>,
}

impl ChainComplexData {
    pub fn faces_by_cardinality(&self) -> &[Vec<Face>] {
        &self.faces_by_card
    }

    /// Boundary matrix out of dimension `d` (columns index the d-faces).
    pub fn boundary(&self, d: usize) -> Option<&SparseIntMatrix> {
        self.boundaries.get(d)
    }

    pub fn boundaries(&self) -> &[SparseIntMatrix] {
        &self.boundaries
    }

    pub fn total_faces(&self) -> usize {
        self.faces_by_card.iter().map(Vec::len).sum()
    }
}

/// Build the reduced chain complex of `c`: faces sorted per cardinality and
/// boundary matrices with signs (−1)^j over each face's ascending vertices.
/// For small instances ∂∘∂ = 0 is verified outright.
pub fn chain_complex(c: &ComplexRepr, budget_faces: usize) -> Result<ChainComplexData> {
    let faces = c.enumerate_faces(None)?;
    if faces.len() > budget_faces {
        return Err(DevoidError::BudgetExceeded(format!(
            "complex has {} faces, over the face budget {}",
            faces.len(),
            budget_faces
        )));
    }
    let top = faces.iter().map(|f| f.cardinality()).max();
    let Some(top) = top else {
        // Void complex: no faces, not even ∅; everything is empty.
        return Ok(ChainComplexData {
            faces_by_card: Vec::new(),
            boundaries: Vec::new(),
        });
    };
    let mut faces_by_card: Vec<Vec<Face>> = vec![Vec::new(); top + 1];
    for f in faces {
        faces_by_card[f.cardinality()].push(f);
    }
    for group in &mut faces_by_card {
        group.sort_unstable();
    }
    let index: Vec<HashMap<Face, usize>> = faces_by_card
        .iter()
        .map(|group| group.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();

    let mut boundaries = Vec::with_capacity(top);
    for k in 1..=top {
        let rows = faces_by_card[k - 1].len();
        let cols = faces_by_card[k].len();
        let mut columns = Vec::with_capacity(cols);
        for &sigma in &faces_by_card[k] {
            let mut col: Vec<(usize, i64)> = sigma
                .vertices()
                .enumerate()
                .map(|(j, v)| {
                    let tau = sigma.remove(v);
                    let row = index[k - 1][&tau];
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    (row, sign)
                })
                .collect();
            col.sort_unstable_by_key(|&(r, _)| r);
            columns.push(col);
        }
        boundaries.push(SparseIntMatrix {
            rows,
            cols,
            columns,
        });
    }

    let data = ChainComplexData {
        faces_by_card,
        boundaries,
    };
    if data.total_faces() <= BOUNDARY_CHECK_LIMIT {
        verify_boundary_squared(&data)?;
    }
    Ok(data)
}

fn verify_boundary_squared(data: &ChainComplexData) -> Result<()> {
    for d in 1..data.boundaries.len() {
        let upper = &data.boundaries[d];
        let lower = &data.boundaries[d - 1];
        for col in &upper.columns {
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &(mid, s) in col {
                for &(row, t) in &lower.columns[mid] {
                    *acc.entry(row).or_insert(0) += s * t;
                }
            }
            if acc.values().any(|&v| v != 0) {
                return Err(DevoidError::InternalInvariant(
                    "boundary composed with boundary is nonzero".into(),
                ));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

/// Integer arithmetic the elimination is generic over: a checked machine
/// layer that reports overflow, and an arbitrary-precision layer that never
/// fails.
trait ElimInt: Clone {
    fn from_i64(x: i64) -> Self;
    fn vanishes(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// Only meaningful on units: is the value +1?
    fn unit_is_positive(&self) -> bool;
    fn checked_mul(&self, o: &Self) -> Option<Self>;
    fn checked_sub(&self, o: &Self) -> Option<Self>;
    fn exact_div(&self, d: &Self) -> Self;
    fn abs_lt(&self, o: &Self) -> bool;
    fn to_bigint(&self) -> BigInt;
}

impl ElimInt for i128 {
    fn from_i64(x: i64) -> Self {
        x as i128
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn unit_is_positive(&self) -> bool {
        *self > 0
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        i128::checked_mul(*self, *o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        i128::checked_sub(*self, *o)
    }
    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }
    fn abs_lt(&self, o: &Self) -> bool {
        self.unsigned_abs() < o.unsigned_abs()
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ElimInt for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn unit_is_positive(&self) -> bool {
        self.is_positive()
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn exact_div(&self, d: &Self) -> Self {
        self / d
    }
    fn abs_lt(&self, o: &Self) -> bool {
        self.magnitude() < o.magnitude()
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Columns inspected per pivot selection round before settling.
const CANDIDATE_COLS: usize = 16;

/// Sparse unit-pivot phase of the Smith computation. Repeatedly picks an
/// entry of magnitude one — preferring pivots whose row and column are
/// sparse — and removes its row and column after the Schur update, which is
/// exactly the effect of clearing the pivot row and column with integer
/// column and row operations. Returns the number of unit pivots together
/// with the compacted remainder, or None when machine arithmetic overflowed
/// and the caller must escalate.
fn eliminate_units<I: ElimInt>(
    rows: usize,
    cols: usize,
    triplets: &[(usize, usize, i64)],
) -> Option<(usize, usize, usize, Vec<(usize, usize, BigInt)>)> {
    let mut col_entries: Vec<HashMap<usize, I>> = vec![HashMap::new(); cols];
    let mut row_cols: Vec<HashSet<usize>> = vec![HashSet::new(); rows];
    for &(r, c, v) in triplets {
        if v == 0 {
            continue;
        }
        col_entries[c].insert(r, I::from_i64(v));
        row_cols[r].insert(c);
    }
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();
    for (c, entries) in col_entries.iter().enumerate() {
        if !entries.is_empty() {
            heap.push(Reverse((entries.len(), c)));
        }
    }

    let mut units = 0usize;
    loop {
        // Select a unit pivot, scanning the sparsest columns first and
        // breaking cost ties deterministically.
        let mut inspected: Vec<(usize, usize)> = Vec::new();
        let mut best: Option<(u64, usize, usize)> = None;
        while let Some(Reverse((nnz, c))) = heap.pop() {
            if col_entries[c].len() != nnz || nnz == 0 {
                continue; // stale heap entry
            }
            inspected.push((nnz, c));
            for (&r, v) in &col_entries[c] {
                if v.is_unit() {
                    let cost = (nnz as u64 - 1) * (row_cols[r].len() as u64 - 1);
                    let key = (cost, r, c);
                    if best.map_or(true, |b| key < b) {
                        best = Some(key);
                    }
                }
            }
            if let Some(b) = best {
                if b.0 == 0 || inspected.len() >= CANDIDATE_COLS {
                    break;
                }
            }
        }
        for entry in inspected {
            heap.push(Reverse(entry));
        }
        let Some((_cost, pr, pc)) = best else { break };

        let pivot_positive = col_entries[pc][&pr].unit_is_positive();
        let pivot_col: Vec<(usize, I)> = col_entries[pc]
            .iter()
            .filter(|&(&r, _)| r != pr)
            .map(|(&r, v)| (r, v.clone()))
            .collect();
        let pivot_row: Vec<usize> = row_cols[pr].iter().copied().filter(|&c| c != pc).collect();
        let pivot_row_vals: Vec<(usize, I)> = pivot_row
            .iter()
            .map(|&c2| (c2, col_entries[c2][&pr].clone()))
            .collect();

        // Detach the pivot row and column.
        for &(r2, _) in &pivot_col {
            row_cols[r2].remove(&pc);
        }
        for &c2 in &pivot_row {
            col_entries[c2].remove(&pr);
        }
        col_entries[pc].clear();
        row_cols[pr].clear();
        units += 1;

        // Schur update: entry (r2, c2) loses a·b/ε.
        for (c2, b) in &pivot_row_vals {
            for (r2, a) in &pivot_col {
                let prod = a.checked_mul(b)?;
                let delta = if pivot_positive {
                    prod
                } else {
                    I::from_i64(0).checked_sub(&prod)?
                };
                let cur = col_entries[*c2]
                    .get(r2)
                    .cloned()
                    .unwrap_or_else(|| I::from_i64(0));
                let next = cur.checked_sub(&delta)?;
                if next.vanishes() {
                    if col_entries[*c2].remove(r2).is_some() {
                        row_cols[*r2].remove(c2);
                    }
                } else if col_entries[*c2].insert(*r2, next).is_none() {
                    row_cols[*r2].insert(*c2);
                }
            }
            if !col_entries[*c2].is_empty() {
                heap.push(Reverse((col_entries[*c2].len(), *c2)));
            }
        }
    }

    // Compact whatever is left into fresh indices.
    let live_rows: Vec<usize> = (0..rows).filter(|&r| !row_cols[r].is_empty()).collect();
    let live_cols: Vec<usize> = (0..cols).filter(|&c| !col_entries[c].is_empty()).collect();
    let row_index: HashMap<usize, usize> =
        live_rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let mut remainder = Vec::new();
    for (j, &c) in live_cols.iter().enumerate() {
        let mut entries: Vec<(usize, BigInt)> = col_entries[c]
            .iter()
            .map(|(&r, v)| (row_index[&r], v.to_bigint()))
            .collect();
        entries.sort_unstable_by_key(|&(r, _)| r);
        for (r, v) in entries {
            remainder.push((r, j, v));
        }
    }
    Some((units, live_rows.len(), live_cols.len(), remainder))
}

/// Textbook Smith normal form on a dense arbitrary-precision matrix:
/// smallest-magnitude pivoting, Euclidean row/column reduction, and a
/// divisibility sweep so the factors form a chain d_1 | d_2 | …
fn dense_snf_bigint(rows: usize, cols: usize, triplets: &[(usize, usize, BigInt)]) -> Vec<BigInt> {
    if rows == 0 || cols == 0 || triplets.is_empty() {
        return Vec::new();
    }
    let mut m = vec![vec![BigInt::zero(); cols]; rows];
    for (r, c, v) in triplets {
        m[*r][*c] = v.clone();
    }
    let mut factors = Vec::new();
    let mut t = 0usize;
    while t < rows.min(cols) {
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j].is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if m[i][j].magnitude() < m[pi][pj].magnitude() {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        if pj != t {
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
        }
        'reduce: loop {
            // Clear column t with row operations; a nonzero remainder is a
            // strictly smaller pivot, so swap it up and start over.
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = &m[i][t] / &m[t][t];
                if !q.is_zero() {
                    for j in t..cols {
                        let sub = &q * &m[t][j];
                        m[i][j] -= sub;
                    }
                }
                if !m[i][t].is_zero() {
                    m.swap(t, i);
                    continue 'reduce;
                }
            }
            // Clear row t with column operations (column t stays clear).
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = &m[t][j] / &m[t][t];
                if !q.is_zero() {
                    for i in t..rows {
                        let sub = &q * &m[i][t];
                        m[i][j] -= sub;
                    }
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    continue 'reduce;
                }
            }
            // Pivot row/column clear: force divisibility into the rest.
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if (&m[i][j] % &m[t][t]).is_zero() {
                        continue;
                    }
                    for jj in t..cols {
                        let add = m[i][jj].clone();
                        m[t][jj] += add;
                    }
                    continue 'reduce;
                }
            }
            break;
        }
        factors.push(m[t][t].abs());
        t += 1;
    }
    factors
}

fn invariant_factors_from_triplets(
    rows: usize,
    cols: usize,
    triplets: &[(usize, usize, i64)],
) -> Vec<BigInt> {
    let (units, rem_rows, rem_cols, remainder) = eliminate_units::<i128>(rows, cols, triplets)
        .unwrap_or_else(|| {
            eliminate_units::<BigInt>(rows, cols, triplets)
                .expect("arbitrary-precision elimination cannot overflow")
        });
    let mut factors = vec![BigInt::one(); units];
    factors.extend(dense_snf_bigint(rem_rows, rem_cols, &remainder));
    factors
}

/// Invariant factors d_1 | d_2 | … | d_r of an integer matrix (r = rank).
pub fn smith_normal_form(matrix: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut triplets = Vec::new();
    for (i, row) in matrix.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v != 0 {
                triplets.push((i, j, v));
            }
        }
    }
    invariant_factors_from_triplets(rows, cols, &triplets)
}

fn snf_of_sparse(m: &SparseIntMatrix) -> Vec<BigInt> {
    invariant_factors_from_triplets(m.rows, m.cols, &m.triplets())
}

// ---------------------------------------------------------------------------
// rational rank (independent second path)
// ---------------------------------------------------------------------------

/// Fraction-free (Bareiss) elimination with full pivoting; every division is
/// exact, so the rank is computed over the rationals without fractions.
fn bareiss_rank<I: ElimInt>(mut m: Vec<Vec<I>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = I::from_i64(1);
    let mut k = 0usize;
    while k < rows.min(cols) {
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if m[i][j].vanishes() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if m[i][j].abs_lt(&m[pi][pj]) {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(k, pi);
        if pj != k {
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
        }
        for i in k + 1..rows {
            for j in k + 1..cols {
                let t1 = m[k][k].checked_mul(&m[i][j])?;
                let t2 = m[i][k].checked_mul(&m[k][j])?;
                let num = t1.checked_sub(&t2)?;
                m[i][j] = num.exact_div(&prev);
            }
            m[i][k] = I::from_i64(0);
        }
        prev = m[k][k].clone();
        k += 1;
    }
    Some(k)
}

/// Rank of an integer matrix over the rationals, by fraction-free
/// elimination (machine words first, arbitrary precision on overflow).
pub fn rational_rank(matrix: &[Vec<i64>]) -> usize {
    let as_i128: Vec<Vec<i128>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| v as i128).collect())
        .collect();
    if let Some(rank) = bareiss_rank(as_i128) {
        return rank;
    }
    let as_big: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    bareiss_rank(as_big).expect("arbitrary-precision elimination cannot overflow")
}

// ---------------------------------------------------------------------------
// Betti profiles
// ---------------------------------------------------------------------------

/// Reduced Betti numbers and torsion invariant factors per dimension.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiProfile {
    /// b̃_d for every dimension −1 ..= top (zeros included).
    pub betti: BTreeMap<i64, u64>,
    /// Torsion invariant factors (> 1) of the homology in each dimension;
    /// only dimensions with torsion appear.
    pub torsion: BTreeMap<i64, Vec<BigInt>>,
}

impl BettiProfile {
    pub fn reduced_betti(&self, d: i64) -> u64 {
        self.betti.get(&d).copied().unwrap_or(0)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn all_betti_zero(&self) -> bool {
        self.betti.values().all(|&b| b == 0)
    }

    /// Largest dimension with nonzero reduced homology (Betti or torsion).
    pub fn top_nonzero_dim(&self) -> Option<i64> {
        let from_betti = self.betti.iter().filter(|(_, &b)| b > 0).map(|(&d, _)| d);
        let from_torsion = self.torsion.keys().copied();
        from_betti.chain(from_torsion).max()
    }

    /// Σ (−1)^d b̃_d — the reduced Euler characteristic.
    pub fn reduced_euler(&self) -> i64 {
        self.betti
            .iter()
            .map(|(&d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// JSON form `{"betti": {...}, "torsion": {...}, "chi": int}` with
    /// dimension keys as strings and torsion factors in decimal.
    pub fn to_json(&self) -> Value {
        let betti: BTreeMap<String, u64> = self
            .betti
            .iter()
            .map(|(d, b)| (d.to_string(), *b))
            .collect();
        let torsion: BTreeMap<String, Vec<String>> = self
            .torsion
            .iter()
            .map(|(d, fs)| (d.to_string(), fs.iter().map(BigInt::to_string).collect()))
            .collect();
        json!({"betti": betti, "torsion": torsion, "chi": self.reduced_euler()})
    }
}

/// Reduced Betti numbers and torsion of `c`, through the Smith route:
/// b̃_d = f_d − rank ∂_d − rank ∂_{d+1}, torsion from factors above one.
pub fn betti(c: &ComplexRepr, budget_faces: usize) -> Result<BettiProfile> {
    let data = chain_complex(c, budget_faces)?;
    let mut ranks = vec![0usize; data.boundaries.len()];
    let mut torsion: BTreeMap<i64, Vec<BigInt>> = BTreeMap::new();
    for (d, matrix) in data.boundaries.iter().enumerate() {
        let factors = snf_of_sparse(matrix);
        ranks[d] = factors.len();
        let nontrivial: Vec<BigInt> = factors.into_iter().filter(|f| !f.is_one()).collect();
        if !nontrivial.is_empty() {
            // boundaries[d] = ∂_d lands in dimension d − 1, whose homology
            // quotient it torsions.
            torsion.insert(d as i64 - 1, nontrivial);
        }
    }
    let mut betti = BTreeMap::new();
    for (k, group) in data.faces_by_card.iter().enumerate() {
        let f = group.len() as i64;
        let rank_out = if k >= 1 { ranks[k - 1] as i64 } else { 0 };
        let rank_in = if k < ranks.len() { ranks[k] as i64 } else { 0 };
        let b = f - rank_out - rank_in;
        if b < 0 {
            return Err(DevoidError::InternalInvariant(
                "negative Betti number from rank bookkeeping".into(),
            ));
        }
        betti.insert(k as i64 - 1, b as u64);
    }
    Ok(BettiProfile { betti, torsion })
}

/// Reduced Betti numbers through the independent rational-rank route
/// (fraction-free elimination on dense matrices; no torsion information).
/// Intended for cross-checks on moderately sized instances.
pub fn betti_via_rational_ranks(
    c: &ComplexRepr,
    budget_faces: usize,
) -> Result<BTreeMap<i64, u64>> {
    let data = chain_complex(c, budget_faces)?;
    for m in &data.boundaries {
        if m.rows.saturating_mul(m.cols) > (1 << 22) {
            return Err(DevoidError::TooLarge(
                "rational-rank cross-check densifies matrices; instance too large".into(),
            ));
        }
    }
    let ranks: Vec<usize> = data
        .boundaries
        .iter()
        .map(|m| rational_rank(&m.to_dense()))
        .collect();
    let mut betti = BTreeMap::new();
    for (k, group) in data.faces_by_card.iter().enumerate() {
        let f = group.len() as i64;
        let rank_out = if k >= 1 { ranks[k - 1] as i64 } else { 0 };
        let rank_in = if k < ranks.len() { ranks[k] as i64 } else { 0 };
        let b = f - rank_out - rank_in;
        if b < 0 {
            return Err(DevoidError::InternalInvariant(
                "negative Betti number from rational ranks".into(),
            ));
        }
        betti.insert(k as i64 - 1, b as u64);
    }
    Ok(betti)
}

// ---------------------------------------------------------------------------
// descriptor consistency
// ---------------------------------------------------------------------------

/// How a homology profile relates to a homotopy descriptor. Homology
/// matching is necessary, not sufficient, for homotopy equivalence, so a
/// positive answer reads "homology-consistent". Unknown CW descriptors make
/// no sphere claim, so any profile is vacuously acceptable (flagged).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DescriptorMatch {
    Consistent,
    Inconsistent,
    Vacuous,
}

pub fn descriptor_match(profile: &BettiProfile, d: &HomotopyDescriptor) -> DescriptorMatch {
    match d {
        HomotopyDescriptor::UnknownCW(_) => DescriptorMatch::Vacuous,
        HomotopyDescriptor::Contractible => {
            if profile.all_betti_zero() && profile.is_torsion_free() {
                DescriptorMatch::Consistent
            } else {
                DescriptorMatch::Inconsistent
            }
        }
        HomotopyDescriptor::WedgeOfSpheres(dims) => {
            if !profile.is_torsion_free() {
                return DescriptorMatch::Inconsistent;
            }
            let mut want: BTreeMap<i64, u64> = BTreeMap::new();
            for &d in dims {
                *want.entry(d).or_insert(0) += 1;
            }
            let dims_in_play: HashSet<i64> = profile
                .betti
                .keys()
                .copied()
                .chain(want.keys().copied())
                .collect();
            for d in dims_in_play {
                if profile.reduced_betti(d) != want.get(&d).copied().unwrap_or(0) {
                    return DescriptorMatch::Inconsistent;
                }
            }
            DescriptorMatch::Consistent
        }
    }
}

/// Boolean view of [`descriptor_match`]: vacuous counts as not-falsified.
pub fn matches_descriptor(profile: &BettiProfile, d: &HomotopyDescriptor) -> bool {
    descriptor_match(profile, d) != DescriptorMatch::Inconsistent
}

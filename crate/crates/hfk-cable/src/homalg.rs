//! Exact integer linear algebra: sparse matrices, Smith normal form, and
//! homology of chain complexes of finitely generated free abelian groups.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// Sparse integer matrix with arbitrary-precision entries.
///
/// Stored zeros are forbidden; duplicate positions are summed on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.entries.insert((i, i), BigInt::one());
        }
        m
    }

    pub fn from_triplets<I, T>(rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, T)>,
        T: Into<BigInt>,
    {
        let mut m = IntMatrix::zero(rows, cols);
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r}, {c}) outside {rows}x{cols} matrix");
            let v = v.into();
            if v.is_zero() {
                continue;
            }
            let cell = m.entries.entry((r, c)).or_insert_with(BigInt::zero);
            *cell += v;
            if cell.is_zero() {
                m.entries.remove(&(r, c));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols);
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|&(r, c)| r == c)
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.cols, self.rows);
        for (r, c, v) in self.triplets() {
            m.entries.insert((c, r), v.clone());
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        // row-major sweep: group other's entries by row once
        let mut other_rows: Vec<Vec<(usize, &BigInt)>> = vec![Vec::new(); other.rows];
        for (r, c, v) in other.triplets() {
            other_rows[r].push((c, v));
        }
        let mut out: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (r, k, v) in self.triplets() {
            for &(c, w) in &other_rows[k] {
                let cell = out.entry((r, c)).or_insert_with(BigInt::zero);
                *cell += v * w;
            }
        }
        out.retain(|_, v| !v.is_zero());
        IntMatrix { rows: self.rows, cols: other.cols, entries: out }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c)).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Finitely generated abelian group: free rank plus torsion invariant factors
/// d_1 | d_2 | ... | d_k with every d_i >= 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn zero() -> Self {
        AbelianGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Self {
        for w in torsion.windows(2) {
            assert!(
                w[1].mod_floor(&w[0]).is_zero(),
                "torsion coefficients must form a divisibility chain"
            );
        }
        assert!(
            torsion.iter().all(|d| *d >= BigInt::from(2)),
            "torsion coefficients must be at least 2"
        );
        AbelianGroup { free_rank, torsion }
    }

    /// Group presented by a diagonal relation matrix acting on `ambient_rank`
    /// free generators.  Unit diagonal entries kill a generator, zero entries
    /// leave one free, the rest contribute torsion.
    pub fn from_diagonal(ambient_rank: usize, diagonal: &[BigInt]) -> Self {
        let nonzero: Vec<&BigInt> = diagonal.iter().filter(|d| !d.is_zero()).collect();
        assert!(nonzero.len() <= ambient_rank, "more relations than generators");
        let torsion: Vec<BigInt> =
            nonzero.iter().filter(|d| d.abs() > BigInt::one()).map(|d| d.abs()).collect();
        AbelianGroup { free_rank: ambient_rank - nonzero.len(), torsion }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn has_torsion(&self) -> bool {
        !self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Abelian groups indexed by an integer (Maslov) grading; zero groups are not
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedGroup {
    groups: BTreeMap<i64, AbelianGroup>,
}

impl GradedGroup {
    pub fn new() -> Self {
        GradedGroup::default()
    }

    pub fn insert(&mut self, grading: i64, group: AbelianGroup) {
        if !group.is_zero() {
            assert!(
                self.groups.insert(grading, group).is_none(),
                "duplicate group at grading {grading}"
            );
        }
    }

    pub fn get(&self, grading: i64) -> Option<&AbelianGroup> {
        self.groups.get(&grading)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &AbelianGroup)> {
        self.groups.iter().map(|(&g, a)| (g, a))
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// Same groups with every grading shifted by `delta`.
    pub fn shifted(&self, delta: i64) -> GradedGroup {
        GradedGroup { groups: self.groups.iter().map(|(&g, a)| (g + delta, a.clone())).collect() }
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.values().any(|g| g.has_torsion())
    }
}

impl fmt::Display for GradedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.groups.iter().rev().map(|(g, a)| format!("({a})_{{{g}}}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("boundary shapes incompatible: outgoing is {out_rows}x{out_cols}, incoming is {in_rows}x{in_cols}")]
    DimensionMismatch { out_rows: usize, out_cols: usize, in_rows: usize, in_cols: usize },
    #[error("composite of consecutive boundaries is nonzero at ({row}, {col})")]
    CompositionNonzero { row: usize, col: usize },
}

/// Result of a Smith normal form computation: `u * m * v = d` with `d`
/// diagonal, consecutive diagonal entries dividing each other, and `u`, `v`
/// unimodular.  `v_inv` is the inverse of `v`, kept because homology
/// computations need the change of basis in both directions.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let mut calc = SnfCalc::new(m, true, true, true);
    calc.reduce();
    let (d, u, v, v_inv) = calc.finish();
    SmithNormalForm { d, u: u.unwrap(), v: v.unwrap(), v_inv: v_inv.unwrap() }
}

/// Diagonal of the Smith normal form without transform bookkeeping.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let mut calc = SnfCalc::new(m, false, false, false);
    calc.reduce();
    calc.finish().0.diagonal()
}

/// Homology at the middle group of `... -> A --boundary_in--> B --boundary_out--> C -> ...`,
/// i.e. ker(boundary_out) / im(boundary_in).
pub fn chain_homology(
    boundary_in: &IntMatrix,
    boundary_out: &IntMatrix,
) -> Result<AbelianGroup, HomologyError> {
    let mid = boundary_out.cols();
    if boundary_in.rows() != mid {
        return Err(HomologyError::DimensionMismatch {
            out_rows: boundary_out.rows(),
            out_cols: boundary_out.cols(),
            in_rows: boundary_in.rows(),
            in_cols: boundary_in.cols(),
        });
    }
    let composite = boundary_out.mul(boundary_in);
    if let Some((r, c, _)) = composite.triplets().next() {
        return Err(HomologyError::CompositionNonzero { row: r, col: c });
    }

    let snf = smith_normal_form(boundary_out);
    let rank_out = snf.d.diagonal().iter().filter(|d| !d.is_zero()).count();
    let kernel_rank = mid - rank_out;

    // columns rank_out.. of v span ker(boundary_out); express im(boundary_in)
    // in that basis and read off the cokernel
    let in_coords = snf.v_inv.mul(boundary_in);
    let mut relations = IntMatrix::zero(kernel_rank, boundary_in.cols());
    for (r, c, v) in in_coords.triplets() {
        debug_assert!(r >= rank_out, "image of boundary_in leaves the kernel");
        if r >= rank_out {
            relations.set(r - rank_out, c, v.clone());
        }
    }
    let diag = smith_diagonal(&relations);
    Ok(AbelianGroup::from_diagonal(kernel_rank, &diag))
}

// Row/column reduction engine.  Row operations are mirrored on `u`, column
// operations on `v` and (inverted) on `v_inv`, so that u * original * v is
// always the current target.
struct SnfCalc {
    nrows: usize,
    ncols: usize,
    m: Vec<BTreeMap<usize, BigInt>>,
    occupied: Vec<BTreeSet<usize>>, // rows with a nonzero entry, per column
    u: Option<Vec<BTreeMap<usize, BigInt>>>,
    v: Option<Vec<BTreeMap<usize, BigInt>>>,
    v_inv: Option<Vec<BTreeMap<usize, BigInt>>>,
}

fn identity_rows(n: usize) -> Vec<BTreeMap<usize, BigInt>> {
    (0..n).map(|i| BTreeMap::from([(i, BigInt::one())])).collect()
}

impl SnfCalc {
    fn new(m: &IntMatrix, with_u: bool, with_v: bool, with_v_inv: bool) -> Self {
        let mut rows: Vec<BTreeMap<usize, BigInt>> = vec![BTreeMap::new(); m.rows()];
        let mut occupied = vec![BTreeSet::new(); m.cols()];
        for (r, c, v) in m.triplets() {
            rows[r].insert(c, v.clone());
            occupied[c].insert(r);
        }
        SnfCalc {
            nrows: m.rows(),
            ncols: m.cols(),
            m: rows,
            occupied,
            u: with_u.then(|| identity_rows(m.rows())),
            v: with_v.then(|| identity_rows(m.cols())),
            v_inv: with_v_inv.then(|| identity_rows(m.cols())),
        }
    }

    fn finish(self) -> (IntMatrix, Option<IntMatrix>, Option<IntMatrix>, Option<IntMatrix>) {
        let pack = |rows: Vec<BTreeMap<usize, BigInt>>, nrows: usize, ncols: usize| {
            IntMatrix::from_triplets(
                nrows,
                ncols,
                rows.into_iter().enumerate().flat_map(|(r, row)| {
                    row.into_iter().map(move |(c, v)| (r, c, v))
                }),
            )
        };
        let d = pack(self.m, self.nrows, self.ncols);
        let u = self.u.map(|u| pack(u, self.nrows, self.nrows));
        let v = self.v.map(|v| pack(v, self.ncols, self.ncols));
        let v_inv = self.v_inv.map(|vi| pack(vi, self.ncols, self.ncols));
        (d, u, v, v_inv)
    }

    fn entry(&self, r: usize, c: usize) -> BigInt {
        self.m[r].get(&c).cloned().unwrap_or_else(BigInt::zero)
    }

    fn set_entry(&mut self, r: usize, c: usize, v: BigInt) {
        if v.is_zero() {
            if self.m[r].remove(&c).is_some() {
                self.occupied[c].remove(&r);
            }
        } else {
            self.m[r].insert(c, v);
            self.occupied[c].insert(r);
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let cols: Vec<usize> =
            self.m[i].keys().chain(self.m[j].keys()).copied().collect();
        self.m.swap(i, j);
        for c in cols {
            let has_i = self.m[i].contains_key(&c);
            let has_j = self.m[j].contains_key(&c);
            if has_i { self.occupied[c].insert(i); } else { self.occupied[c].remove(&i); }
            if has_j { self.occupied[c].insert(j); } else { self.occupied[c].remove(&j); }
        }
        if let Some(u) = &mut self.u {
            u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let rows: BTreeSet<usize> =
            self.occupied[i].iter().chain(self.occupied[j].iter()).copied().collect();
        for r in rows {
            let vi = self.m[r].remove(&i);
            let vj = self.m[r].remove(&j);
            if let Some(v) = vj {
                self.m[r].insert(i, v);
            }
            if let Some(v) = vi {
                self.m[r].insert(j, v);
            }
        }
        self.occupied.swap(i, j);
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                let vi = row.remove(&i);
                let vj = row.remove(&j);
                if let Some(x) = vj {
                    row.insert(i, x);
                }
                if let Some(x) = vi {
                    row.insert(j, x);
                }
            }
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap(i, j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for v in self.m[i].values_mut() {
            *v = -(v.clone());
        }
        if let Some(u) = &mut self.u {
            for v in u[i].values_mut() {
                *v = -(v.clone());
            }
        }
    }

    // rows (i, j) <- (x*row_i + y*row_j, z*row_i + w*row_j); xw - yz must be 1
    fn row_combine(&mut self, i: usize, j: usize, x: &BigInt, y: &BigInt, z: &BigInt, w: &BigInt) {
        debug_assert!((x * w - y * z).is_one(), "row transform must have determinant 1");
        let apply = |rows: &mut Vec<BTreeMap<usize, BigInt>>| {
            let row_i = rows[i].clone();
            let row_j = rows[j].clone();
            let cols: BTreeSet<usize> = row_i.keys().chain(row_j.keys()).copied().collect();
            let mut new_i = BTreeMap::new();
            let mut new_j = BTreeMap::new();
            for c in cols {
                let a = row_i.get(&c).cloned().unwrap_or_else(BigInt::zero);
                let b = row_j.get(&c).cloned().unwrap_or_else(BigInt::zero);
                let ni = x * &a + y * &b;
                let nj = z * &a + w * &b;
                if !ni.is_zero() {
                    new_i.insert(c, ni);
                }
                if !nj.is_zero() {
                    new_j.insert(c, nj);
                }
            }
            rows[i] = new_i;
            rows[j] = new_j;
        };
        let before: BTreeSet<usize> = self.m[i].keys().chain(self.m[j].keys()).copied().collect();
        apply(&mut self.m);
        for c in before {
            if self.m[i].contains_key(&c) { self.occupied[c].insert(i); } else { self.occupied[c].remove(&i); }
            if self.m[j].contains_key(&c) { self.occupied[c].insert(j); } else { self.occupied[c].remove(&j); }
        }
        if let Some(u) = &mut self.u {
            apply_unchecked(u, i, j, x, y, z, w);
        }
    }

    // cols (i, j) <- (x*col_i + y*col_j, z*col_i + w*col_j); xw - yz must be 1
    fn col_combine(&mut self, i: usize, j: usize, x: &BigInt, y: &BigInt, z: &BigInt, w: &BigInt) {
        debug_assert!((x * w - y * z).is_one(), "column transform must have determinant 1");
        let rows: BTreeSet<usize> =
            self.occupied[i].iter().chain(self.occupied[j].iter()).copied().collect();
        for r in rows {
            let a = self.entry(r, i);
            let b = self.entry(r, j);
            self.set_entry(r, i, x * &a + y * &b);
            self.set_entry(r, j, z * &a + w * &b);
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                let a = row.get(&i).cloned().unwrap_or_else(BigInt::zero);
                let b = row.get(&j).cloned().unwrap_or_else(BigInt::zero);
                let ni = x * &a + y * &b;
                let nj = z * &a + w * &b;
                if ni.is_zero() { row.remove(&i); } else { row.insert(i, ni); }
                if nj.is_zero() { row.remove(&j); } else { row.insert(j, nj); }
            }
        }
        if let Some(vi) = &mut self.v_inv {
            // inverse transform acts on rows: [[w, -z], [-y, x]]
            apply_unchecked(vi, i, j, w, &-z.clone(), &-y.clone(), x);
        }
    }

    fn reduce(&mut self) {
        let mut t = 0;
        while let Some((r, c)) = self.select_pivot(t) {
            self.swap_rows(t, r);
            self.swap_cols(t, c);
            self.eliminate(t);
            t += 1;
        }
        let rank = t;
        for i in 0..rank {
            if self.entry(i, i).is_negative() {
                self.negate_row(i);
            }
        }
        // enforce the divisibility chain
        for i in 0..rank {
            for j in i + 1..rank {
                self.fix_divisibility(i, j);
            }
        }
    }

    // pivot search over the submatrix at (t.., t..): prefer units, then small
    // magnitude, then low Markowitz fill
    fn select_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(bool, BigInt, usize, (usize, usize))> = None;
        for r in t..self.nrows {
            let active: Vec<(usize, &BigInt)> =
                self.m[r].range(t..).map(|(&c, v)| (c, v)).collect();
            let row_len = active.len();
            if row_len == 0 {
                continue;
            }
            for (c, v) in active {
                let col_len = self.occupied[c].range(t..).count();
                let cost = (row_len - 1) * (col_len - 1);
                let mag = v.abs();
                let unit = mag.is_one();
                if unit && cost == 0 {
                    return Some((r, c));
                }
                let candidate = (!unit, mag, cost, (r, c));
                let better = match &best {
                    None => true,
                    Some((bu, bm, bc, _)) => {
                        (&candidate.0, &candidate.1, &candidate.2) < (bu, bm, bc)
                    }
                };
                if better {
                    best = Some(candidate);
                }
            }
        }
        best.map(|(_, _, _, rc)| rc)
    }

    // clear row t and column t until only the pivot remains
    fn eliminate(&mut self, t: usize) {
        loop {
            log::trace!("eliminate at {t}, pivot {}", self.entry(t, t));
            self.clear_column(t);
            self.clear_row(t);
            let col_clean = self.occupied[t].iter().all(|&r| r == t);
            let row_clean = self.m[t].keys().all(|&c| c == t);
            if col_clean && row_clean {
                break;
            }
        }
    }

    fn clear_column(&mut self, t: usize) {
        loop {
            let others: Vec<usize> =
                self.occupied[t].iter().copied().filter(|&r| r != t).collect();
            if others.is_empty() {
                return;
            }
            for r in others {
                let a = self.entry(t, t);
                let b = self.entry(r, t);
                if b.is_zero() {
                    continue;
                }
                if (&b % &a).is_zero() {
                    let q = &b / &a;
                    self.row_combine(t, r, &BigInt::one(), &BigInt::zero(), &-q, &BigInt::one());
                } else {
                    let e = a.extended_gcd(&b);
                    let bg = &b / &e.gcd;
                    let ag = &a / &e.gcd;
                    self.row_combine(t, r, &e.x, &e.y, &-bg, &ag);
                }
            }
        }
    }

    fn clear_row(&mut self, t: usize) {
        loop {
            let others: Vec<usize> = self.m[t].keys().copied().filter(|&c| c != t).collect();
            if others.is_empty() {
                return;
            }
            for c in others {
                let a = self.entry(t, t);
                let b = self.entry(t, c);
                if b.is_zero() {
                    continue;
                }
                if (&b % &a).is_zero() {
                    let q = &b / &a;
                    self.col_combine(t, c, &BigInt::one(), &BigInt::zero(), &-q, &BigInt::one());
                } else {
                    let e = a.extended_gcd(&b);
                    let bg = &b / &e.gcd;
                    let ag = &a / &e.gcd;
                    self.col_combine(t, c, &e.x, &e.y, &-bg, &ag);
                }
            }
        }
    }

    //  [a 0]    [a b]    [g 0]
    //  [0 b] -> [0 b] -> [* ab/g] -> diagonal (g, lcm(a, b))
    fn fix_divisibility(&mut self, i: usize, j: usize) {
        let a = self.entry(i, i);
        let b = self.entry(j, j);
        if (&b % &a).is_zero() {
            return;
        }
        self.row_combine(i, j, &BigInt::one(), &BigInt::one(), &BigInt::zero(), &BigInt::one());
        let e = a.extended_gcd(&b);
        let bg = &b / &e.gcd;
        let ag = &a / &e.gcd;
        self.col_combine(i, j, &e.x, &e.y, &-bg, &ag);
        let leftover = self.entry(j, i);
        if !leftover.is_zero() {
            let q = &leftover / &e.gcd;
            self.row_combine(i, j, &BigInt::one(), &BigInt::zero(), &-q, &BigInt::one());
        }
        debug_assert!(!self.entry(i, i).is_negative() && !self.entry(j, j).is_negative());
    }
}

// 2x2 row transform without occupancy bookkeeping, for transform matrices
fn apply_unchecked(
    rows: &mut [BTreeMap<usize, BigInt>],
    i: usize,
    j: usize,
    x: &BigInt,
    y: &BigInt,
    z: &BigInt,
    w: &BigInt,
) {
    let row_i = rows[i].clone();
    let row_j = rows[j].clone();
    let cols: BTreeSet<usize> = row_i.keys().chain(row_j.keys()).copied().collect();
    let mut new_i = BTreeMap::new();
    let mut new_j = BTreeMap::new();
    for c in cols {
        let a = row_i.get(&c).cloned().unwrap_or_else(BigInt::zero);
        let b = row_j.get(&c).cloned().unwrap_or_else(BigInt::zero);
        let ni = x * &a + y * &b;
        let nj = z * &a + w * &b;
        if !ni.is_zero() {
            new_i.insert(c, ni);
        }
        if !nj.is_zero() {
            new_j.insert(c, nj);
        }
    }
    rows[i] = new_i;
    rows[j] = new_j;
}

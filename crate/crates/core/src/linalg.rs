//! Dense and sparse exact linear algebra over the rationals.

use std::collections::BTreeMap;
use std::ops::Bound;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;

/// Dense row-major matrix over `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn diagonal(entries: &[Q]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in entries.iter().enumerate() {
            m.data[i * n + i] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<Q> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = Q::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix: `v^T M`.
    pub fn vec_mul(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.rows, v.len(), "vector-matrix shape");
        let mut out = vec![Q::zero(); self.cols];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, a) in self.row(i).iter().enumerate() {
                if !a.is_zero() {
                    out[j] += x * a;
                }
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Self {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Nilpotency via repeated squaring: `M^(2^k)` for the first `2^k ≥ n`.
    pub fn is_nilpotent(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        if self.rows == 0 {
            return true;
        }
        let mut p = self.clone();
        let mut e = 1usize;
        while e < self.rows {
            if p.is_zero() {
                return true;
            }
            p = p.mul(&p);
            e *= 2;
        }
        p.is_zero()
    }

    /// Smallest `k ≥ 0` with `M^k = 0`, if at most `dim`.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let n = self.rows;
        let mut p = Matrix::identity(n);
        for k in 0..=n {
            if p.is_zero() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }

    pub fn rank(&self) -> usize {
        rank(&self.to_rows())
    }
}

/// Rank of a list of row vectors.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(dense_to_sparse(r));
    }
    ech.rank()
}

pub fn dense_to_sparse(v: &[Q]) -> BTreeMap<usize, Q> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &BTreeMap<usize, Q>, n: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    assert_eq!(a.len(), b.len(), "dot product shape");
    let mut acc = Q::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn axpy(acc: &mut [Q], c: &Q, x: &[Q]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += c * b;
        }
    }
}

pub fn kron_vec(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// Basis of the right kernel `{x : A x = 0}`, one vector per free column.
pub fn nullspace(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (rref, pivots) = rref(rows, ncols);
    let pivot_set: Vec<Option<usize>> = {
        let mut p = vec![None; ncols];
        for (r, &c) in pivots.iter().enumerate() {
            p[c] = Some(r);
        }
        p
    };
    let mut out = Vec::new();
    for free in 0..ncols {
        if pivot_set[free].is_some() {
            continue;
        }
        let mut x = vec![Q::zero(); ncols];
        x[free] = Q::one();
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = -rref[r][free].clone();
        }
        out.push(x);
    }
    out
}

/// Reduced row echelon form and the pivot column of each nonzero row.
pub fn rref(rows: &[Vec<Q>], ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut a: Vec<Vec<Q>> = rows.to_vec();
    let m = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r >= m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Indices of a maximal linearly independent subset of `vectors`, greedy in order.
pub fn independent_subset(vectors: &[Vec<Q>]) -> Vec<usize> {
    let mut ech = Echelon::new();
    let mut keep = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if ech.insert(dense_to_sparse(v)) {
            keep.push(i);
        }
    }
    keep
}

/// Coefficients `c` with `Σ c_i columns[i] = target`, if the target is in the span.
/// The columns are assumed linearly independent.
pub fn solve_in_span(columns: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let n = columns.len();
    let dim = target.len();
    // augmented system: rows are coordinates, columns are the given vectors plus target
    let rows: Vec<Vec<Q>> = (0..dim)
        .map(|i| {
            let mut r: Vec<Q> = columns.iter().map(|c| c[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let (rr, pivots) = rref(&rows, n + 1);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![Q::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rr[r][n].clone();
    }
    Some(x)
}

/// Incremental sparse row echelon form keyed by an ordered index type.
///
/// Every stored row has its pivot (smallest key) normalized to one.
#[derive(Clone, Debug, Default)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, BTreeMap<K, Q>>,
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Reduce `v` against the stored rows; the remainder is zero iff `v` is in the span.
    pub fn reduce(&self, mut v: BTreeMap<K, Q>) -> BTreeMap<K, Q> {
        let mut cursor: Option<K> = None;
        loop {
            let next = {
                let range = match &cursor {
                    None => v.range(..),
                    Some(k) => v.range((Bound::Excluded(k.clone()), Bound::Unbounded)),
                };
                range
                    .map(|(k, _)| k)
                    .find(|k| self.rows.contains_key(*k))
                    .cloned()
            };
            let Some(k) = next else { break };
            let f = v[&k].clone();
            for (key, x) in &self.rows[&k] {
                let entry = v.entry(key.clone()).or_insert_with(Q::zero);
                *entry -= &f * x;
                if entry.is_zero() {
                    v.remove(key);
                }
            }
            cursor = Some(k);
        }
        v
    }

    pub fn contains(&self, v: BTreeMap<K, Q>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Insert `v`; returns true when it enlarged the span.
    pub fn insert(&mut self, v: BTreeMap<K, Q>) -> bool {
        let mut r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, x)| (k.clone(), x.clone())) else {
            return false;
        };
        let inv = lead.recip();
        for x in r.values_mut() {
            *x *= &inv;
        }
        self.rows.insert(pivot, r);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = nullspace(&a.to_rows(), 3);
        assert_eq!(ns.len(), 1);
        assert!(is_zero_vec(&a.mul_vec(&ns[0])));
    }

    #[test]
    fn nilpotency() {
        let shift = m(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        assert!(shift.is_nilpotent());
        assert_eq!(shift.nilpotency_index(), Some(3));
        assert!(!m(&[&[1]]).is_nilpotent());
        assert!(Matrix::zeros(0, 0).is_nilpotent());
    }

    #[test]
    fn span_solve() {
        let cols = vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]];
        let x = solve_in_span(&cols, &[q(2), q(3), q(5)]).unwrap();
        assert_eq!(x, vec![q(2), q(3)]);
        assert!(solve_in_span(&cols, &[q(1), q(1), q(0)]).is_none());
    }

    #[test]
    fn echelon_membership() {
        let mut e: Echelon<usize> = Echelon::new();
        assert!(e.insert(dense_to_sparse(&[q(0), q(1), q(1)])));
        assert!(e.insert(dense_to_sparse(&[q(1), q(1), q(0)])));
        assert!(!e.insert(dense_to_sparse(&[q(1), q(2), q(1)])));
        assert!(e.contains(dense_to_sparse(&[q(2), q(3), q(1)])));
        assert!(!e.contains(dense_to_sparse(&[q(0), q(0), q(1)])));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn kronecker() {
        let a = m(&[&[0, 0], &[1, 0]]);
        let i = Matrix::identity(2);
        let k = a.kron(&i).add(&i.kron(&a));
        assert_eq!(k.nilpotency_index(), Some(3));
    }
}

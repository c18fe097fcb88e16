//! Brute-force reference computations, written independently of the
//! routines they check: dense matrices instead of vector iteration,
//! recursion instead of subset enumeration, explicit `sl2` matrices instead
//! of the weight-by-weight construction.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::grp::GroupWord;
use crate::linalg::{rank, Matrix};
use crate::rational::{pow_i, q, Q};
use crate::reps::{GeneratorKind, RepSpec};
use crate::words::{Letter, Word};

/// Shuffles by the recursion `au ш bv = a(u ш bv) + b(au ш v)`.
pub fn shuffle_multiset(w1: &Word, w2: &Word) -> BTreeMap<Word, u64> {
    fn go(a: &[Letter], b: &[Letter], memo: &mut BTreeMap<(usize, usize), BTreeMap<Vec<Letter>, u64>>) -> BTreeMap<Vec<Letter>, u64> {
        if a.is_empty() || b.is_empty() {
            let w: Vec<Letter> = a.iter().chain(b).copied().collect();
            return BTreeMap::from([(w, 1)]);
        }
        let key = (a.len(), b.len());
        if let Some(m) = memo.get(&key) {
            return m.clone();
        }
        let mut out: BTreeMap<Vec<Letter>, u64> = BTreeMap::new();
        for (rest, c) in go(&a[1..], b, memo) {
            let mut w = vec![a[0]];
            w.extend(rest);
            *out.entry(w).or_default() += c;
        }
        for (rest, c) in go(a, &b[1..], memo) {
            let mut w = vec![b[0]];
            w.extend(rest);
            *out.entry(w).or_default() += c;
        }
        memo.insert(key, out.clone());
        out
    }
    // suffix lengths identify subproblems for fixed w1, w2
    let mut memo = BTreeMap::new();
    go(w1.letters(), w2.letters(), &mut memo)
        .into_iter()
        .map(|(w, c)| (Word::new(w), c))
        .collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `(h1 ⊗ h2)(Δw)` by splitting `w` into complementary subwords.
pub fn coproduct_pairing(w: &Word, h1: &mut impl FnMut(&Word) -> Q, h2: &mut impl FnMut(&Word) -> Q) -> Q {
    let l = w.letters();
    let mut acc = Q::zero();
    for mask in 0u64..(1 << l.len()) {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, &x) in l.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a.push(x);
            } else {
                b.push(x);
            }
        }
        let va = h1(&Word::new(a));
        if va.is_zero() {
            continue;
        }
        acc += va * h2(&Word::new(b));
    }
    acc
}

/// `exp(t·N)` as a dense matrix.
pub fn dense_exp(n: &Matrix, t: &Q) -> Matrix {
    let dim = n.rows();
    let mut acc = Matrix::identity(dim);
    let mut term = Matrix::identity(dim);
    for k in 1..=dim {
        term = term.mul(n).scale(&(t / q(k as i64)));
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
    }
    acc
}

/// The matrix of a group word, as a product of dense factor matrices.
pub fn group_matrix(r: &RepSpec, g: &GroupWord) -> Matrix {
    let mut acc = Matrix::identity(r.dim());
    for f in &g.factors {
        let m = r.matrix(f.letter);
        let fm = match f.kind {
            GeneratorKind::LocallyNilpotent => dense_exp(m, &f.param),
            GeneratorKind::DiagonalizableInteger => Matrix::diagonal(
                &m.diagonal_entries()
                    .iter()
                    .map(|e| pow_i(&f.param, crate::rational::to_i64(e).expect("integer eigenvalue")))
                    .collect::<Vec<_>>(),
            ),
        };
        acc = acc.mul(&fm);
    }
    acc
}

pub fn eval_by_matrices(r: &RepSpec, phi: &[Q], v: &[Q], g: &GroupWord) -> Q {
    crate::linalg::dot(phi, &group_matrix(r, g).mul_vec(v))
}

/// `φ(M_{w1}⋯M_{wk} v)` with the word matrix multiplied out first.
pub fn eval_word_by_matrices(r: &RepSpec, phi: &[Q], v: &[Q], w: &Word) -> Q {
    let mut acc = Matrix::identity(r.dim());
    for &l in w.letters() {
        acc = acc.mul(r.matrix(l));
    }
    crate::linalg::dot(phi, &acc.mul_vec(v))
}

/// `L(m)` for `sl2` in the basis `v_j = f^j v_0 / j!`.
pub struct Sl2Irrep {
    pub m: usize,
    pub e: Matrix,
    pub f: Matrix,
    pub h: Matrix,
}

impl Sl2Irrep {
    pub fn new(m: usize) -> Self {
        let n = m + 1;
        let mut e = Matrix::zeros(n, n);
        let mut f = Matrix::zeros(n, n);
        let mut h = Matrix::zeros(n, n);
        for j in 0..n {
            h.set(j, j, q(m as i64 - 2 * j as i64));
            if j + 1 < n {
                // f v_j = (j+1) v_{j+1},  e v_{j+1} = (m − j) v_j
                f.set(j + 1, j, q(j as i64 + 1));
                e.set(j, j + 1, q((m - j) as i64));
            }
        }
        Sl2Irrep { m, e, f, h }
    }

    /// `⟨v_0^*, exp(b e) exp(a f) v_0⟩`.
    pub fn theta(&self, a: &Q, b: &Q) -> Q {
        let g = dense_exp(&self.e, b).mul(&dense_exp(&self.f, a));
        g.get(0, 0).clone()
    }

    /// `v ⊗ v` lies in the span of `(f⊗1 + 1⊗f)^k (v_0 ⊗ v_0)`.
    pub fn cone_member(&self, coords: &[Q]) -> bool {
        let n = self.m + 1;
        let id = Matrix::identity(n);
        let ff = self.f.kron(&id).add(&id.kron(&self.f));
        let mut cur = vec![Q::zero(); n * n];
        cur[0] = Q::one();
        let mut span = Vec::new();
        for _ in 0..=2 * self.m {
            span.push(cur.clone());
            cur = ff.mul_vec(&cur);
        }
        let vv = crate::linalg::kron_vec(coords, coords);
        let r0 = rank(&span);
        span.push(vv);
        rank(&span) == r0
    }
}

/// `dim L(aΛ1 + bΛ2)` for `A2`.
pub fn weyl_dim_a2(a: u64, b: u64) -> u64 {
    (a + 1) * (b + 1) * (a + b + 2) / 2
}

/// Sums of generators reachable from 0 without leaving `[−window, window]`.
pub fn monoid_bfs(gens: &BTreeSet<i64>, window: i64) -> BTreeSet<i64> {
    let mut seen = BTreeSet::from([0i64]);
    let mut stack = vec![0i64];
    while let Some(x) = stack.pop() {
        for &g in gens {
            let y = x + g;
            if y.abs() <= window && seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;

    #[test]
    fn shuffle_recursion() {
        let m = shuffle_multiset(&Word::from_indices(&[0, 0]), &Word::from_indices(&[0]));
        assert_eq!(m, BTreeMap::from([(Word::from_indices(&[0, 0, 0]), 3)]));
        assert_eq!(binomial(8, 4), 70);
    }

    #[test]
    fn sl2_oracle() {
        let l = Sl2Irrep::new(3);
        let (a, b) = (q_frac(1, 2), q(3));
        assert_eq!(l.theta(&a, &b), pow_i(&(q(1) + &a * &b), 3));
        // [e, f] = h
        assert_eq!(l.e.mul(&l.f).sub(&l.f.mul(&l.e)), l.h);
        assert!(l.cone_member(&[q(1), q(0), q(0), q(0)]));
        assert_eq!(weyl_dim_a2(1, 1), 8);
    }
}

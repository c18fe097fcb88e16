use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use num_traits::Zero;

use super::gcm::Gcm;
use crate::error::{Error, Result};
use crate::linalg::{independent_subset, rank, solve_in_span, Matrix};
use crate::rational::{q, Q};

pub const DEFAULT_DEPTH_CAP: usize = 24;
pub const DEFAULT_KM_DIM_CAP: usize = 4096;

/// Depth vector `k`: the weight `Λ − Σ k_i α_i`.
pub type Depth = Vec<u32>;

pub fn total_depth(k: &[u32]) -> usize {
    k.iter().map(|&x| x as usize).sum()
}

/// Chevalley generators `e_i`, `f_i`, `h_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chevalley {
    E(usize),
    F(usize),
    H(usize),
}

/// A vector of `L(Λ)` as per-weight coordinates in the module's bases.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KmVector {
    comps: BTreeMap<Depth, Vec<Q>>,
}

impl KmVector {
    pub fn zero() -> Self {
        KmVector::default()
    }

    pub fn single(k: Depth, coords: Vec<Q>) -> Self {
        let mut v = KmVector::zero();
        v.add_comp(k, &coords);
        v
    }

    pub fn add_comp(&mut self, k: Depth, coords: &[Q]) {
        if coords.iter().all(|c| c.is_zero()) {
            return;
        }
        match self.comps.get_mut(&k) {
            Some(x) => {
                for (a, b) in x.iter_mut().zip(coords) {
                    *a += b;
                }
                if x.iter().all(|c| c.is_zero()) {
                    self.comps.remove(&k);
                }
            }
            None => {
                self.comps.insert(k, coords.to_vec());
            }
        }
    }

    pub fn comps(&self) -> &BTreeMap<Depth, Vec<Q>> {
        &self.comps
    }

    pub fn component(&self, k: &[u32]) -> Option<&[Q]> {
        self.comps.get(k).map(|v| v.as_slice())
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn add(&self, other: &KmVector) -> KmVector {
        let mut out = self.clone();
        for (k, c) in &other.comps {
            out.add_comp(k.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &Q) -> KmVector {
        let mut out = KmVector::zero();
        for (k, x) in &self.comps {
            let y: Vec<Q> = x.iter().map(|a| a * c).collect();
            out.add_comp(k.clone(), &y);
        }
        out
    }

    pub fn max_depth(&self) -> usize {
        self.comps.keys().map(|k| total_depth(k)).max().unwrap_or(0)
    }

    /// Pairing in which the weight bases are dual to each other.
    pub fn pair(&self, other: &KmVector) -> Q {
        let mut acc = Q::zero();
        for (k, x) in &self.comps {
            if let Some(y) = other.comps.get(k) {
                acc += crate::linalg::dot(x, y);
            }
        }
        acc
    }
}

#[derive(Clone, Debug)]
struct WeightSpace {
    weight: Vec<i64>,
    dim: usize,
    /// `e_j : L_k → L_{k−α_j}`, present when `k_j > 0`.
    e_out: Vec<Option<Matrix>>,
    /// `f_i : L_{k−α_i} → L_k`, present when `k_i > 0`.
    f_in: Vec<Option<Matrix>>,
    /// Contravariant form on the chosen basis.
    gram: Matrix,
    candidates: usize,
    candidate_gram_rank: usize,
}

#[derive(Clone, Debug)]
struct Inner {
    depth: usize,
    /// Only nonzero weight spaces are stored.
    spaces: BTreeMap<Depth, WeightSpace>,
    /// A layer came out empty; the module is finite and fully built.
    exhausted: bool,
}

/// `L(Λ)` built weight by weight down to a depth, extended on demand.
///
/// At depth `k`, the spanning set is `{f_i b}` for `b` running over bases at
/// `k − α_i`. A combination is zero in `L(Λ)` exactly when every `e_j` kills
/// it, so the weight space is the image of the spanning set under
/// `⊕_j e_j`, computed from the layer above via `e_j f_i = f_i e_j + δ_ij h_i`.
#[derive(Debug)]
pub struct IrrTrunc {
    gcm: Arc<Gcm>,
    lambda: Vec<i64>,
    depth_cap: usize,
    dim_cap: usize,
    inner: RwLock<Inner>,
}

impl Clone for IrrTrunc {
    fn clone(&self) -> Self {
        IrrTrunc {
            gcm: self.gcm.clone(),
            lambda: self.lambda.clone(),
            depth_cap: self.depth_cap,
            dim_cap: self.dim_cap,
            inner: RwLock::new(self.read().clone()),
        }
    }
}

/// `L(Λ)` truncated at depth `n`.
pub fn build_irr_trunc(gcm: Arc<Gcm>, lambda: Vec<i64>, n: usize) -> Result<IrrTrunc> {
    IrrTrunc::with_caps(gcm, lambda, n, DEFAULT_DEPTH_CAP, DEFAULT_KM_DIM_CAP)
}

impl IrrTrunc {
    pub fn with_caps(gcm: Arc<Gcm>, lambda: Vec<i64>, n: usize, depth_cap: usize, dim_cap: usize) -> Result<Self> {
        if lambda.len() != gcm.rank() {
            return Err(Error::DimensionMismatch {
                expected: gcm.rank(),
                got: lambda.len(),
            });
        }
        if lambda.iter().any(|&x| x < 0) {
            return Err(Error::NotDominant(lambda));
        }
        let r = gcm.rank();
        let top = WeightSpace {
            weight: lambda.clone(),
            dim: 1,
            e_out: vec![None; r],
            f_in: vec![None; r],
            gram: Matrix::identity(1),
            candidates: 1,
            candidate_gram_rank: 1,
        };
        let m = IrrTrunc {
            gcm,
            lambda,
            depth_cap,
            dim_cap,
            inner: RwLock::new(Inner {
                depth: 0,
                spaces: BTreeMap::from([(vec![0; r], top)]),
                exhausted: false,
            }),
        };
        m.ensure_depth(n)?;
        Ok(m)
    }

    fn read(&self) -> std::sync::RwLockReadGuard<'_, Inner> {
        self.inner.read().unwrap_or_else(|e| e.into_inner())
    }

    pub fn gcm(&self) -> &Arc<Gcm> {
        &self.gcm
    }

    pub fn highest_weight(&self) -> &[i64] {
        &self.lambda
    }

    pub fn rank(&self) -> usize {
        self.gcm.rank()
    }

    pub fn depth(&self) -> usize {
        self.read().depth
    }

    pub fn depth_cap(&self) -> usize {
        self.depth_cap
    }

    /// True when the whole (finite-dimensional) module has been built.
    pub fn is_complete(&self) -> bool {
        self.read().exhausted
    }

    /// Build all weight spaces down to depth `n`.
    pub fn ensure_depth(&self, n: usize) -> Result<()> {
        if self.read().depth >= n {
            return Ok(());
        }
        if n > self.depth_cap {
            // a finite module needs no more layers once one comes out empty
            let inner = self.read();
            if inner.exhausted {
                return Ok(());
            }
            return Err(Error::DepthCap {
                required: n,
                cap: self.depth_cap,
            });
        }
        let mut inner = self.inner.write().unwrap_or_else(|e| e.into_inner());
        while inner.depth < n {
            if inner.exhausted {
                inner.depth = n;
                break;
            }
            let d = inner.depth + 1;
            self.build_layer(&mut inner, d)?;
            inner.depth = d;
        }
        Ok(())
    }

    fn build_layer(&self, inner: &mut Inner, d: usize) -> Result<()> {
        let r = self.rank();
        let mut targets: Vec<Depth> = Vec::new();
        for k in inner.spaces.keys().filter(|k| total_depth(k) == d - 1) {
            for i in 0..r {
                let mut t = k.clone();
                t[i] += 1;
                targets.push(t);
            }
        }
        targets.sort();
        targets.dedup();
        let mut total: usize = inner.spaces.values().map(|s| s.dim).sum();
        let mut built = BTreeMap::new();
        for k in targets {
            if let Some(ws) = self.build_space(&inner.spaces, &k)? {
                total += ws.dim;
                if total > self.dim_cap {
                    return Err(Error::SizeCap {
                        what: "irreducible module truncation",
                        size: total,
                        cap: self.dim_cap,
                    });
                }
                built.insert(k, ws);
            }
        }
        if built.is_empty() {
            inner.exhausted = true;
        }
        inner.spaces.extend(built);
        Ok(())
    }

    fn build_space(&self, spaces: &BTreeMap<Depth, WeightSpace>, k: &Depth) -> Result<Option<WeightSpace>> {
        let r = self.rank();
        let below = |j: usize| -> Option<Depth> {
            (k[j] > 0).then(|| {
                let mut t = k.clone();
                t[j] -= 1;
                t
            })
        };
        // blocks of the e-image: one per j, sized by dim L_{k−α_j}
        let block_dim: Vec<usize> = (0..r)
            .map(|j| below(j).and_then(|t| spaces.get(&t)).map_or(0, |s| s.dim))
            .collect();
        let offsets: Vec<usize> = block_dim
            .iter()
            .scan(0, |acc, &x| {
                let o = *acc;
                *acc += x;
                Some(o)
            })
            .collect();
        let width: usize = block_dim.iter().sum();

        // candidates f_i b with their e-images
        let mut cands: Vec<(usize, usize)> = Vec::new();
        let mut images: Vec<Vec<Q>> = Vec::new();
        for i in 0..r {
            let Some(src_k) = below(i) else { continue };
            let Some(src) = spaces.get(&src_k) else { continue };
            for b in 0..src.dim {
                let mut img = vec![Q::zero(); width];
                for j in 0..r {
                    if block_dim[j] == 0 {
                        continue;
                    }
                    let tgt_k = below(j).expect("block present");
                    let tgt = &spaces[&tgt_k];
                    // f_i (e_j b)
                    if let Some(ej) = &src.e_out[j] {
                        let ejb: Vec<Q> = (0..ej.rows()).map(|row| ej.get(row, b).clone()).collect();
                        if ejb.iter().any(|x| !x.is_zero()) {
                            let fi = tgt.f_in[i].as_ref().expect("f_i defined into a space with k_i > 0");
                            let y = fi.mul_vec(&ejb);
                            for (a, x) in img[offsets[j]..offsets[j] + block_dim[j]].iter_mut().zip(y) {
                                *a += x;
                            }
                        }
                    }
                    // δ_ij μ(h_i) b
                    if i == j {
                        img[offsets[j] + b] += q(src.weight[i]);
                    }
                }
                cands.push((i, b));
                images.push(img);
            }
        }
        let basis = independent_subset(&images);
        let dim = basis.len();
        if dim == 0 {
            return Ok(None);
        }
        let basis_images: Vec<Vec<Q>> = basis.iter().map(|&p| images[p].clone()).collect();

        let mut e_out: Vec<Option<Matrix>> = vec![None; r];
        for j in 0..r {
            if k[j] == 0 {
                continue;
            }
            let mut m = Matrix::zeros(block_dim[j], dim);
            for (col, img) in basis_images.iter().enumerate() {
                for row in 0..block_dim[j] {
                    m.set(row, col, img[offsets[j] + row].clone());
                }
            }
            e_out[j] = Some(m);
        }

        let mut f_in: Vec<Option<Matrix>> = vec![None; r];
        for i in 0..r {
            let Some(src_k) = below(i) else { continue };
            let src_dim = spaces.get(&src_k).map_or(0, |s| s.dim);
            let mut m = Matrix::zeros(dim, src_dim);
            for (c, &(ci, b)) in cands.iter().enumerate() {
                if ci != i {
                    continue;
                }
                let coords = solve_in_span(&basis_images, &images[c])
                    .expect("every candidate lies in the span of the chosen basis");
                for (row, x) in coords.into_iter().enumerate() {
                    m.set(row, b, x);
                }
            }
            f_in[i] = Some(m);
        }

        // ⟨f_i b, y⟩ = ⟨b, e_i y⟩
        let pair = |c: usize, img: &[Q]| -> Q {
            let (i, b) = cands[c];
            let src = &spaces[&below(i).expect("candidate source")];
            let block = &img[offsets[i]..offsets[i] + block_dim[i]];
            crate::linalg::dot(src.gram.row(b), block)
        };
        let mut gram = Matrix::zeros(dim, dim);
        for (p, &cp) in basis.iter().enumerate() {
            for (qq, img) in basis_images.iter().enumerate() {
                gram.set(p, qq, pair(cp, img));
            }
        }
        let cand_gram: Vec<Vec<Q>> = (0..cands.len())
            .map(|a| images.iter().map(|img| pair(a, img)).collect())
            .collect();

        Ok(Some(WeightSpace {
            weight: self.gcm.lower(&self.lambda, k),
            dim,
            e_out,
            f_in,
            gram,
            candidates: cands.len(),
            candidate_gram_rank: rank(&cand_gram),
        }))
    }

    fn check_in_truncation(&self, k: &[u32]) -> Result<()> {
        if k.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: k.len(),
            });
        }
        let inner = self.read();
        if total_depth(k) > inner.depth && !inner.exhausted {
            return Err(Error::OutOfTruncation(k.to_vec()));
        }
        Ok(())
    }

    /// Coordinates `λ(h_i)` of the weight at depth `k`.
    pub fn weight(&self, k: &[u32]) -> Vec<i64> {
        self.gcm.lower(&self.lambda, k)
    }

    /// `dim L(Λ)_λ` from the construction.
    pub fn dim_at(&self, k: &[u32]) -> Result<usize> {
        self.check_in_truncation(k)?;
        Ok(self.read().spaces.get(k).map_or(0, |s| s.dim))
    }

    /// Nonzero weight spaces built so far: `(depth, weight, dim)`.
    pub fn weights(&self) -> Vec<(Depth, Vec<i64>, usize)> {
        self.read()
            .spaces
            .iter()
            .map(|(k, s)| (k.clone(), s.weight.clone(), s.dim))
            .collect()
    }

    pub fn total_dim(&self) -> usize {
        self.read().spaces.values().map(|s| s.dim).sum()
    }

    /// Contravariant form on the basis at depth `k`, normalized by `⟨v_Λ, v_Λ⟩ = 1`.
    pub fn gram(&self, k: &[u32]) -> Result<Matrix> {
        self.check_in_truncation(k)?;
        Ok(self.read().spaces.get(k).map_or(Matrix::zeros(0, 0), |s| s.gram.clone()))
    }

    /// Number of spanning vectors `f_i b` at depth `k` and the rank of their Gram matrix.
    pub fn spanning_gram(&self, k: &[u32]) -> Result<(usize, usize)> {
        self.check_in_truncation(k)?;
        Ok(self
            .read()
            .spaces
            .get(k)
            .map_or((0, 0), |s| (s.candidates, s.candidate_gram_rank)))
    }

    pub fn highest_vector(&self) -> KmVector {
        KmVector::single(vec![0; self.rank()], vec![q(1)])
    }

    pub fn basis_vector(&self, k: &[u32], idx: usize) -> Result<KmVector> {
        let dim = self.dim_at(k)?;
        if idx >= dim {
            return Err(Error::Invalid(format!("basis index {idx} out of range for dimension {dim}")));
        }
        Ok(KmVector::single(k.to_vec(), crate::reps::unit(dim, idx)))
    }

    /// All basis vectors built so far, in weight order.
    pub fn basis(&self) -> Vec<KmVector> {
        let inner = self.read();
        inner
            .spaces
            .iter()
            .flat_map(|(k, s)| (0..s.dim).map(move |i| KmVector::single(k.clone(), crate::reps::unit(s.dim, i))))
            .collect()
    }

    fn check_vector(&self, v: &KmVector) -> Result<()> {
        let inner = self.read();
        for (k, x) in v.comps() {
            if k.len() != self.rank() {
                return Err(Error::DimensionMismatch {
                    expected: self.rank(),
                    got: k.len(),
                });
            }
            let dim = inner.spaces.get(k).map_or(0, |s| s.dim);
            if x.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: x.len(),
                });
            }
        }
        Ok(())
    }

    /// A Chevalley generator on a vector; fails if the image leaves the truncation.
    pub fn act(&self, gen: Chevalley, v: &KmVector) -> Result<KmVector> {
        self.act_inner(gen, v, false)
    }

    /// As [`IrrTrunc::act`], extending the truncation as needed (up to the cap).
    pub fn act_extending(&self, gen: Chevalley, v: &KmVector) -> Result<KmVector> {
        self.act_inner(gen, v, true)
    }

    fn act_inner(&self, gen: Chevalley, v: &KmVector, extend: bool) -> Result<KmVector> {
        self.check_vector(v)?;
        let r = self.rank();
        let idx = match gen {
            Chevalley::E(i) | Chevalley::F(i) | Chevalley::H(i) => i,
        };
        if idx >= r {
            return Err(Error::Invalid(format!("generator index {idx} out of range for rank {r}")));
        }
        if let Chevalley::F(_) = gen {
            let need = v.max_depth() + 1;
            if extend {
                self.ensure_depth(need)?;
            } else if let Some((k, _)) = v.comps().iter().find(|(k, _)| total_depth(k) + 1 > self.depth()) {
                if !self.is_complete() {
                    let mut t = k.clone();
                    t[idx] += 1;
                    return Err(Error::OutOfTruncation(t));
                }
            }
        }
        let inner = self.read();
        let mut out = KmVector::zero();
        for (k, x) in v.comps() {
            match gen {
                Chevalley::H(i) => {
                    let c = q(inner.spaces[k].weight[i]);
                    let y: Vec<Q> = x.iter().map(|a| a * &c).collect();
                    out.add_comp(k.clone(), &y);
                }
                Chevalley::E(j) => {
                    if let Some(m) = &inner.spaces[k].e_out[j] {
                        let mut t = k.clone();
                        t[j] -= 1;
                        if m.rows() > 0 {
                            out.add_comp(t, &m.mul_vec(x));
                        }
                    }
                }
                Chevalley::F(i) => {
                    let mut t = k.clone();
                    t[i] += 1;
                    if let Some(ts) = inner.spaces.get(&t) {
                        let m = ts.f_in[i].as_ref().expect("f_i into a space with k_i > 0");
                        out.add_comp(t, &m.mul_vec(x));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `f_i : L_{k−α_i} → L_k`, if both spaces are nonzero and built.
    pub(crate) fn f_matrix(&self, i: usize, k: &[u32]) -> Option<Matrix> {
        let inner = self.read();
        inner.spaces.get(k).and_then(|s| s.f_in[i].clone()).filter(|m| m.cols() > 0)
    }

    /// `h` acting on a weight vector by `λ(h)`, for a coweight given through
    /// its values on the simple roots and on `Λ`.
    pub fn coweight_value(&self, k: &[u32], alpha_values: &[i64], lambda_value: i64) -> i64 {
        lambda_value - k.iter().zip(alpha_values).map(|(&ki, &a)| ki as i64 * a).sum::<i64>()
    }
}

/// `dim L(Λ)_λ` as the rank of the contravariant form on the spanning set.
pub fn weight_multiplicity(m: &IrrTrunc, k: &[u32]) -> Result<usize> {
    m.spanning_gram(k).map(|(_, r)| r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kacmoody::gcm::validate_gcm;

    fn sl2() -> Arc<Gcm> {
        Arc::new(validate_gcm(vec![vec![2]]).unwrap())
    }

    #[test]
    fn sl2_strings() {
        for m in 0..=6i64 {
            let l = build_irr_trunc(sl2(), vec![m], m as usize + 2).unwrap();
            for d in 0..=(m as u32 + 2) {
                let expect = usize::from(d as i64 <= m);
                assert_eq!(l.dim_at(&[d]).unwrap(), expect, "m={m} depth {d}");
            }
            assert_eq!(l.total_dim(), m as usize + 1);
        }
    }

    #[test]
    fn chevalley_examples() {
        let l = build_irr_trunc(sl2(), vec![2], 4).unwrap();
        let v = l.highest_vector();
        let f1 = l.act(Chevalley::F(0), &v).unwrap();
        assert!(!f1.is_zero());
        let f3 = l.act(Chevalley::F(0), &l.act(Chevalley::F(0), &f1).unwrap()).unwrap();
        assert!(f3.is_zero());
        assert_eq!(l.act(Chevalley::H(0), &v).unwrap(), v.scale(&q(2)));
        assert!(l.act(Chevalley::E(0), &v).unwrap().is_zero());
        // [e, f] = h on f v
        let ef = l.act(Chevalley::E(0), &l.act(Chevalley::F(0), &f1).unwrap()).unwrap();
        let fe = l.act(Chevalley::F(0), &l.act(Chevalley::E(0), &f1).unwrap()).unwrap();
        let h = l.act(Chevalley::H(0), &f1).unwrap();
        assert_eq!(ef.add(&fe.scale(&q(-1))), h);
    }

    #[test]
    fn out_of_truncation() {
        let aff = Arc::new(validate_gcm(vec![vec![2, -2], vec![-2, 2]]).unwrap());
        let l = build_irr_trunc(aff, vec![1, 0], 1).unwrap();
        let v = l.basis_vector(&[1, 0], 0).unwrap();
        assert!(matches!(l.act(Chevalley::F(1), &v), Err(Error::OutOfTruncation(_))));
        assert!(l.act_extending(Chevalley::F(1), &v).is_ok());
        assert_eq!(l.depth(), 2);
        assert!(matches!(l.dim_at(&[5, 5]), Err(Error::OutOfTruncation(_))));
    }

    #[test]
    fn depth_zero() {
        let a2 = Arc::new(validate_gcm(vec![vec![2, -1], vec![-1, 2]]).unwrap());
        let l = build_irr_trunc(a2, vec![3, 1], 0).unwrap();
        assert_eq!(l.total_dim(), 1);
        assert!(build_irr_trunc(sl2(), vec![-1], 0).is_err());
    }

    #[test]
    fn depth_cap() {
        let aff = Arc::new(validate_gcm(vec![vec![2, -2], vec![-2, 2]]).unwrap());
        let l = IrrTrunc::with_caps(aff, vec![1, 0], 2, 3, 4096).unwrap();
        assert!(matches!(l.ensure_depth(4), Err(Error::DepthCap { required: 4, cap: 3 })));
        // finite modules stop growing and never hit the cap
        let l = IrrTrunc::with_caps(sl2(), vec![1], 3, 3, 4096).unwrap();
        assert!(l.is_complete());
        assert!(l.ensure_depth(10).is_ok());
    }
}

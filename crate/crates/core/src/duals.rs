//! Linear functionals on `U(g)`.
//!
//! Two representations are kept side by side: finitely supported
//! combinations of the delta functionals `φ_w` (the shuffle algebra), and
//! matrix coefficients `x ↦ φ(x·v)` of a finite-dimensional integrable
//! module. Finite support of a matrix coefficient is not decidable in
//! general, so [`in_shuffle_span`] works up to a length horizon.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{dense_to_sparse, dot, is_zero_vec, kron_vec, Echelon};
use crate::rational::{factorial, q, Q};
use crate::reps::{
    act_poly, make_vnj, submodule_generated, tensor, vnj_index, Covector, GeneratorKind, RepSpec,
    Vector, DEFAULT_DIM_CAP,
};
use crate::words::{shuffles, Alphabet, Letter, NcPoly, Word};

/// Default tuple length for regularity certificates.
pub const DEFAULT_REGULARITY_TUPLE_LEN: usize = 3;
/// Default number of lengths past `N` probed by [`in_shuffle_span`].
pub const DEFAULT_SHUFFLE_SLACK: usize = 5;

/// Finite combination `Σ c_w φ_w` with `φ_w(w') = δ_{w w'}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FiniteFunctional(NcPoly);

impl FiniteFunctional {
    pub fn zero() -> Self {
        FiniteFunctional(NcPoly::zero())
    }

    pub fn from_poly(p: NcPoly) -> Self {
        FiniteFunctional(p)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Q)>) -> Self {
        FiniteFunctional(NcPoly::from_terms(terms))
    }

    /// Coefficients as a polynomial: the coefficient of `w` is `h(w)`.
    pub fn as_poly(&self) -> &NcPoly {
        &self.0
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.0.terms()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn max_len(&self) -> usize {
        self.0.max_len()
    }

    pub fn eval(&self, x: &NcPoly) -> Q {
        let mut acc = Q::zero();
        for (w, c) in x.terms() {
            let hw = self.0.coeff(w);
            if !hw.is_zero() {
                acc += c * hw;
            }
        }
        acc
    }

    pub fn eval_word(&self, w: &Word) -> Q {
        self.0.coeff(w)
    }

    pub fn scale(&self, c: &Q) -> Self {
        FiniteFunctional(self.0.scale(c))
    }

    pub fn add(&self, other: &FiniteFunctional) -> Self {
        FiniteFunctional(&self.0 + &other.0)
    }
}

/// `φ_w`.
pub fn phi(w: Word) -> FiniteFunctional {
    FiniteFunctional(NcPoly::word(w))
}

/// Bilinear extension of `φ_{w1} φ_{w2} = Σ_{shuffles} φ_{w(I1,I2)}`.
pub fn shuffle_product(h1: &FiniteFunctional, h2: &FiniteFunctional) -> FiniteFunctional {
    let mut out = NcPoly::zero();
    for (w1, c1) in h1.terms() {
        for (w2, c2) in h2.terms() {
            let c = c1 * c2;
            for (w, mult) in shuffles(w1, w2) {
                out.add_term(w, &c * q(mult as i64));
            }
        }
    }
    FiniteFunctional(out)
}

/// Matrix coefficient `x ↦ φ(x·v)` of an integrable module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixCoefficient {
    rep: Arc<RepSpec>,
    phi: Covector,
    v: Vector,
}

impl MatrixCoefficient {
    pub fn new(rep: Arc<RepSpec>, phi: Covector, v: Vector) -> Result<Self> {
        rep.check_vector(&phi)?;
        rep.check_vector(&v)?;
        Ok(MatrixCoefficient { rep, phi, v })
    }

    pub fn rep(&self) -> &Arc<RepSpec> {
        &self.rep
    }

    pub fn covector(&self) -> &[Q] {
        &self.phi
    }

    pub fn vector(&self) -> &[Q] {
        &self.v
    }

    pub fn eval(&self, x: &NcPoly) -> Q {
        let xv = act_poly(&self.rep, x, &self.v).expect("dimensions checked at construction");
        dot(&self.phi, &xv)
    }

    pub fn eval_word(&self, w: &Word) -> Q {
        self.eval(&NcPoly::word(w.clone()))
    }

    pub fn with_vector(&self, v: Vector) -> Self {
        MatrixCoefficient {
            rep: self.rep.clone(),
            phi: self.phi.clone(),
            v,
        }
    }

    pub fn with_covector(&self, phi: Covector) -> Self {
        MatrixCoefficient {
            rep: self.rep.clone(),
            phi,
            v: self.v.clone(),
        }
    }
}

/// Realize a finite functional as a matrix coefficient on `V_N(J)`, with
/// `N` the longest word and `J` the letters used: `h(x)` is read off
/// `x·b_∅` in the basis `b_w`.
pub fn realize_finite(h: &FiniteFunctional, alphabet: Arc<Alphabet>) -> Result<MatrixCoefficient> {
    realize_finite_capped(h, alphabet, DEFAULT_DIM_CAP)
}

/// [`realize_finite`] with an explicit bound on `dim V_N(J)`.
pub fn realize_finite_capped(h: &FiniteFunctional, alphabet: Arc<Alphabet>, dim_cap: usize) -> Result<MatrixCoefficient> {
    let n = h.max_len();
    let j = h.0.support();
    let rep = make_vnj(alphabet, n, &j, dim_cap)?;
    let mut phi = rep.zero_vector();
    for (w, c) in h.terms() {
        let i = vnj_index(&rep, w).expect("every term word is a basis label");
        phi[i] = c.clone();
    }
    let v = rep.basis_vector(vnj_index(&rep, &Word::empty()).expect("b_1 exists"));
    MatrixCoefficient::new(Arc::new(rep), phi, v)
}

/// An element of `U(g)^*` in one of its two finite descriptions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Functional {
    Finite(FiniteFunctional),
    Matrix(MatrixCoefficient),
}

impl From<FiniteFunctional> for Functional {
    fn from(h: FiniteFunctional) -> Self {
        Functional::Finite(h)
    }
}

impl From<MatrixCoefficient> for Functional {
    fn from(h: MatrixCoefficient) -> Self {
        Functional::Matrix(h)
    }
}

impl Functional {
    pub fn zero() -> Self {
        Functional::Finite(FiniteFunctional::zero())
    }

    pub fn eval_word(&self, w: &Word) -> Q {
        match self {
            Functional::Finite(h) => h.eval_word(w),
            Functional::Matrix(h) => h.eval_word(w),
        }
    }

    /// The matrix-coefficient form, realizing finite functionals on `V_N(J)`.
    pub fn to_matrix(&self, alphabet: &Arc<Alphabet>) -> Result<MatrixCoefficient> {
        match self {
            Functional::Finite(h) => realize_finite(h, alphabet.clone()),
            Functional::Matrix(h) => Ok(h.clone()),
        }
    }
}

/// The pairing `h(x)`.
pub fn evaluate(h: &Functional, x: &NcPoly) -> Q {
    match h {
        Functional::Finite(f) => f.eval(x),
        Functional::Matrix(m) => m.eval(x),
    }
}

/// `x▷h : y ↦ h(yx)`.
pub fn right_translate(x: &NcPoly, h: &Functional) -> Functional {
    match h {
        Functional::Finite(f) => {
            let mut out = NcPoly::zero();
            for (u, cu) in x.terms() {
                for (w, cw) in f.terms() {
                    if let Some(rest) = w.strip_suffix(u) {
                        out.add_term(rest, cu * cw);
                    }
                }
            }
            Functional::Finite(FiniteFunctional(out))
        }
        Functional::Matrix(m) => {
            let xv = act_poly(&m.rep, x, &m.v).expect("dimensions checked at construction");
            Functional::Matrix(m.with_vector(xv))
        }
    }
}

/// `x◁h : y ↦ h(xy)`.
pub fn left_translate(x: &NcPoly, h: &Functional) -> Functional {
    match h {
        Functional::Finite(f) => {
            let mut out = NcPoly::zero();
            for (u, cu) in x.terms() {
                for (w, cw) in f.terms() {
                    if let Some(rest) = w.strip_prefix(u) {
                        out.add_term(rest, cu * cw);
                    }
                }
            }
            Functional::Finite(FiniteFunctional(out))
        }
        Functional::Matrix(m) => {
            // φ ∘ x_V, i.e. x acting on φ through the transposed (g^op) module
            let mut acc = vec![Q::zero(); m.rep.dim()];
            for (u, cu) in x.terms() {
                let mut row = m.phi.clone();
                for &l in u.letters() {
                    row = m.rep.matrix(l).vec_mul(&row);
                }
                crate::linalg::axpy(&mut acc, cu, &row);
            }
            Functional::Matrix(m.with_covector(acc))
        }
    }
}

/// Product dual to the coproduct: `(h1·h2)(x) = (h1⊗h2)(Δx)`.
///
/// Two finite functionals multiply by shuffles; two matrix coefficients
/// multiply on the tensor product module. A mixed pair first realizes the
/// finite factor on `V_N(J)`.
pub fn product(h1: &Functional, h2: &Functional) -> Result<Functional> {
    match (h1, h2) {
        (Functional::Finite(a), Functional::Finite(b)) => Ok(Functional::Finite(shuffle_product(a, b))),
        (Functional::Matrix(a), Functional::Matrix(b)) => Ok(Functional::Matrix(matrix_product(a, b)?)),
        (Functional::Finite(a), Functional::Matrix(b)) => {
            let a = realize_finite(a, b.rep.alphabet().clone())?;
            Ok(Functional::Matrix(matrix_product(&a, b)?))
        }
        (Functional::Matrix(a), Functional::Finite(b)) => {
            let b = realize_finite(b, a.rep.alphabet().clone())?;
            Ok(Functional::Matrix(matrix_product(a, &b)?))
        }
    }
}

fn matrix_product(a: &MatrixCoefficient, b: &MatrixCoefficient) -> Result<MatrixCoefficient> {
    let rep = tensor(&a.rep, &b.rep)?;
    MatrixCoefficient::new(Arc::new(rep), kron_vec(&a.phi, &b.phi), kron_vec(&a.v, &b.v))
}

/// Coefficients of `h∘ρ` along a tuple of one-parameter letters:
/// `h(y1⋯yp) = Σ_k c_k η1^{k1}(y1)⋯ηp^{kp}(yp)` with `η = τ` for locally
/// nilpotent letters (`k ∈ ℕ`) and `η = exp(τ)` for diagonalizable ones
/// (`k ∈ ℤ`, the eigenvalues met).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoExpansion {
    pub tuple: Vec<Letter>,
    pub kinds: Vec<GeneratorKind>,
    pub coeffs: BTreeMap<Vec<i64>, Q>,
}

impl RhoExpansion {
    pub fn coeff(&self, k: &[i64]) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    /// Largest `|k_i|` among nonzero coefficients, per position.
    pub fn bounds(&self) -> Vec<i64> {
        let mut b = vec![0i64; self.tuple.len()];
        for k in self.coeffs.keys() {
            for (bi, ki) in b.iter_mut().zip(k) {
                *bi = (*bi).max(ki.abs());
            }
        }
        b
    }

    /// Evaluate `h(e1^{n1}⋯ep^{np})` back from the coefficients.
    pub fn eval_powers(&self, n: &[u32]) -> Q {
        let mut acc = Q::zero();
        for (k, c) in &self.coeffs {
            let mut term = c.clone();
            for ((ki, ni), kind) in k.iter().zip(n).zip(&self.kinds) {
                let f = match kind {
                    // τ^k(e^n) = n! δ_kn
                    GeneratorKind::LocallyNilpotent => {
                        if *ki == *ni as i64 {
                            factorial(*ni)
                        } else {
                            Q::zero()
                        }
                    }
                    // exp(kτ)(e^n) = k^n
                    GeneratorKind::DiagonalizableInteger => crate::rational::pow_i(&q(*ki), *ni as i64),
                };
                term *= f;
                if term.is_zero() {
                    break;
                }
            }
            acc += term;
        }
        acc
    }
}

/// All `(k1..kp)` with `e1^{k1}⋯ep^{kp} = w` for the tuple `(e1..ep)`.
pub(crate) fn power_decompositions(w: &Word, tuple: &[Letter]) -> Vec<Vec<u32>> {
    fn go(rest: &[Letter], tuple: &[Letter], acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let Some((&e, more)) = tuple.split_first() else {
            if rest.is_empty() {
                out.push(acc.clone());
            }
            return;
        };
        let run = rest.iter().take_while(|&&l| l == e).count();
        for k in 0..=run {
            acc.push(k as u32);
            go(&rest[k..], more, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(w.letters(), tuple, &mut Vec::new(), &mut out);
    out
}

/// Develop `h∘ρ` along `tuple`, one position at a time from the right.
pub fn expand_rho(h: &Functional, tuple: &[Letter], alphabet: &Alphabet) -> Result<RhoExpansion> {
    let kinds: Vec<GeneratorKind> = tuple.iter().map(|&l| alphabet.kind(l)).collect();
    let mut coeffs: BTreeMap<Vec<i64>, Q> = BTreeMap::new();
    match h {
        Functional::Finite(f) => {
            for (w, c) in f.terms() {
                for ks in power_decompositions(w, tuple) {
                    if let Some(pos) = ks
                        .iter()
                        .zip(&kinds)
                        .position(|(&k, &kind)| k > 0 && kind == GeneratorKind::DiagonalizableInteger)
                    {
                        return Err(Error::Invalid(format!(
                            "finitely supported functional is not regular along diagonalizable letter `{}`",
                            alphabet.name(tuple[pos])
                        )));
                    }
                    let denom: Q = ks.iter().map(|&k| factorial(k)).product();
                    let key: Vec<i64> = ks.iter().map(|&k| k as i64).collect();
                    *coeffs.entry(key).or_insert_with(Q::zero) += c / denom;
                }
            }
        }
        Functional::Matrix(m) => {
            let dim = m.rep.dim();
            // states carry the indices chosen so far (rightmost positions) and the vector reached
            let mut states: Vec<(Vec<i64>, Vector)> = vec![(Vec::new(), m.v.clone())];
            for (&e, &kind) in tuple.iter().zip(&kinds).rev() {
                let mat = m.rep.matrix(e);
                let mut next = Vec::new();
                for (idx, u) in states {
                    match kind {
                        GeneratorKind::LocallyNilpotent => {
                            let mut cur = u;
                            let mut k: i64 = 0;
                            while !is_zero_vec(&cur) {
                                if k as usize > dim {
                                    return Err(Error::Invalid(format!(
                                        "expansion along `{}` does not terminate",
                                        alphabet.name(e)
                                    )));
                                }
                                let mut key = vec![k];
                                key.extend_from_slice(&idx);
                                let nxt = mat.mul_vec(&cur);
                                next.push((key, cur));
                                k += 1;
                                cur = nxt.into_iter().map(|x| x / q(k)).collect();
                            }
                        }
                        GeneratorKind::DiagonalizableInteger => {
                            if !mat.is_diagonal() {
                                return Err(Error::KindMismatch {
                                    letter: alphabet.name(e).to_string(),
                                    detail: "diagonalizable letter is not diagonal".into(),
                                });
                            }
                            let mut parts: BTreeMap<i64, Vector> = BTreeMap::new();
                            for (i, x) in u.iter().enumerate() {
                                if x.is_zero() {
                                    continue;
                                }
                                let ev = crate::rational::to_i64(mat.get(i, i)).ok_or_else(|| {
                                    Error::KindMismatch {
                                        letter: alphabet.name(e).to_string(),
                                        detail: "non-integer eigenvalue".into(),
                                    }
                                })?;
                                parts.entry(ev).or_insert_with(|| vec![Q::zero(); dim])[i] = x.clone();
                            }
                            for (ev, part) in parts {
                                let mut key = vec![ev];
                                key.extend_from_slice(&idx);
                                next.push((key, part));
                            }
                        }
                    }
                }
                states = next;
            }
            for (idx, u) in states {
                let c = dot(&m.phi, &u);
                if !c.is_zero() {
                    *coeffs.entry(idx).or_insert_with(Q::zero) += c;
                }
            }
        }
    }
    coeffs.retain(|_, c| !c.is_zero());
    Ok(RhoExpansion {
        tuple: tuple.to_vec(),
        kinds,
        coeffs,
    })
}

/// Regularity certificate: per-tuple index bounds for every tuple up to a length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityCertificate {
    pub regular: bool,
    pub max_tuple_len: usize,
    /// `(tuple, per-position max |k|)` for every tuple checked.
    pub bounds: Vec<(Vec<Letter>, Vec<i64>)>,
    /// First tuple along which the expansion failed, if any.
    pub failure: Option<Vec<Letter>>,
}

impl RegularityCertificate {
    pub fn max_bound(&self) -> i64 {
        self.bounds
            .iter()
            .flat_map(|(_, b)| b.iter().copied())
            .max()
            .unwrap_or(0)
    }
}

/// Check that `h∘ρ` has finitely many terms along every tuple of length at
/// most `max_tuple_len`. Finite and matrix-coefficient functionals on valid
/// modules always pass along locally nilpotent letters.
pub fn is_regular(h: &Functional, alphabet: &Alphabet, max_tuple_len: usize) -> RegularityCertificate {
    let mut bounds = Vec::new();
    let mut failure = None;
    'outer: for p in 1..=max_tuple_len {
        for w in alphabet.words_of_len(p) {
            let tuple = w.letters().to_vec();
            match expand_rho(h, &tuple, alphabet) {
                Ok(e) => bounds.push((tuple, e.bounds())),
                Err(_) => {
                    failure = Some(tuple);
                    break 'outer;
                }
            }
        }
    }
    RegularityCertificate {
        regular: failure.is_none(),
        max_tuple_len,
        bounds,
        failure,
    }
}

/// Whether `U(g)▷h` is a finite-dimensional integrable module; `dim` is
/// its exact dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FfrCertificate {
    pub member: bool,
    pub dim: usize,
}

/// Right-translation closure of `h`.
pub fn membership_ffr(h: &Functional) -> Result<FfrCertificate> {
    match h {
        Functional::Finite(f) => {
            let letters: BTreeSet<Letter> = f.as_poly().support();
            let mut ech: Echelon<Word> = Echelon::new();
            let mut queue = Vec::new();
            let start: BTreeMap<Word, Q> = f.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
            if ech.insert(start.clone()) {
                queue.push(start);
            }
            while let Some(g) = queue.pop() {
                for &l in &letters {
                    let suffix = Word::letter(l);
                    let t: BTreeMap<Word, Q> = g
                        .iter()
                        .filter_map(|(w, c)| w.strip_suffix(&suffix).map(|r| (r, c.clone())))
                        .collect();
                    if ech.insert(t.clone()) {
                        queue.push(t);
                    }
                }
            }
            Ok(FfrCertificate {
                member: true,
                dim: ech.rank(),
            })
        }
        Functional::Matrix(m) => {
            // U(g)▷h ≅ span{y ↦ φ(y u) : u ∈ U(g)v}; its dimension is the rank of
            // the pairing between the submodule of v and the g^op-submodule of φ
            let vs = submodule_generated(&m.rep, &m.v)?;
            let dual = crate::reps::dual_rep(&m.rep);
            let phis = submodule_generated(&dual, &m.phi)?;
            let pairing: Vec<Vec<Q>> = phis
                .iter()
                .map(|p| vs.iter().map(|u| dot(p, u)).collect())
                .collect();
            Ok(FfrCertificate {
                member: true,
                dim: crate::linalg::rank(&pairing),
            })
        }
    }
}

/// Outcome of the horizon-bounded shuffle-span test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleSpanVerdict {
    pub in_span: bool,
    /// A word beyond `N` on which `h` is nonzero, when one was found.
    pub witness: Option<Word>,
}

/// Semi-decision: does `h` vanish on every word of length in `(N, N+slack]`?
///
/// Finite functionals are decided exactly (all terms of length ≤ N).
/// Matrix coefficients are probed through the spans `{w·v : len(w) = L}`.
pub fn in_shuffle_span(h: &Functional, n: usize, slack: usize) -> ShuffleSpanVerdict {
    match h {
        Functional::Finite(f) => {
            let witness = f.terms().map(|(w, _)| w).find(|w| w.len() > n).cloned();
            ShuffleSpanVerdict {
                in_span: witness.is_none(),
                witness,
            }
        }
        Functional::Matrix(m) => {
            let rep = &m.rep;
            let letters: Vec<Letter> = rep.alphabet().letters().collect();
            let mut layer: Vec<(Word, Vector)> = vec![(Word::empty(), m.v.clone())];
            for len in 1..=n + slack {
                let mut ech: Echelon<usize> = Echelon::new();
                let mut next = Vec::new();
                for (w, u) in &layer {
                    for &l in &letters {
                        let x = rep.matrix(l).mul_vec(u);
                        if ech.insert(dense_to_sparse(&x)) {
                            next.push((Word::letter(l).concat(w), x));
                        }
                    }
                }
                layer = next;
                if len > n {
                    if let Some((w, _)) = layer.iter().find(|(_, u)| !dot(&m.phi, u).is_zero()) {
                        // a basis vector pairs nontrivially; some word in its span does too
                        return ShuffleSpanVerdict {
                            in_span: false,
                            witness: Some(w.clone()),
                        };
                    }
                }
                if layer.is_empty() {
                    break;
                }
            }
            ShuffleSpanVerdict {
                in_span: true,
                witness: None,
            }
        }
    }
}

/// `{1, e1, e1e2, …, w}`: all prefixes of `w`.
pub fn r_cut(w: &Word) -> Vec<Word> {
    w.prefixes()
}

/// Additive submonoid of `ℤ` generated by a finite set of integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMonoid {
    generators: BTreeSet<i64>,
}

impl ZMonoid {
    pub fn generated_by(gens: impl IntoIterator<Item = i64>) -> Self {
        ZMonoid {
            generators: gens.into_iter().filter(|&g| g != 0).collect(),
        }
    }

    pub fn generators(&self) -> &BTreeSet<i64> {
        &self.generators
    }

    fn gcd(&self) -> i64 {
        self.generators.iter().fold(0i64, |g, &x| g.gcd(&x))
    }

    /// True when the monoid is a subgroup `aℤ`.
    pub fn is_group(&self) -> bool {
        let pos = self.generators.iter().any(|&g| g > 0);
        let neg = self.generators.iter().any(|&g| g < 0);
        pos && neg || self.generators.is_empty()
    }

    pub fn contains(&self, n: i64) -> bool {
        if n == 0 {
            return true;
        }
        let g = self.gcd();
        if g == 0 || n % g != 0 {
            return false;
        }
        let pos = self.generators.iter().any(|&x| x > 0);
        let neg = self.generators.iter().any(|&x| x < 0);
        if pos && neg {
            return true;
        }
        if (n > 0 && !pos) || (n < 0 && !neg) {
            return false;
        }
        // one-signed: reduce to a numerical semigroup in units of g
        let gens: Vec<u64> = self
            .generators
            .iter()
            .map(|&x| (x / g).unsigned_abs())
            .collect();
        let target = (n / g).unsigned_abs();
        let lo = *gens.iter().min().expect("nonempty");
        let hi = *gens.iter().max().expect("nonempty");
        // Schur's bound on the Frobenius number
        if target > (lo.saturating_sub(1)).saturating_mul(hi.saturating_sub(1)) {
            return true;
        }
        let t = target as usize;
        let mut reach = vec![false; t + 1];
        reach[0] = true;
        for i in 1..=t {
            reach[i] = gens.iter().any(|&a| (a as usize) <= i && reach[i - a as usize]);
        }
        reach[t]
    }

    /// Members in `[lo, hi]`.
    pub fn elements_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).filter(|&n| self.contains(n)).collect()
    }
}

/// Monoid generated by the eigenvalues of `e` across `reps`.
pub fn z_monoid(e: Letter, reps: &[&RepSpec]) -> Result<ZMonoid> {
    let mut gens = BTreeSet::new();
    for r in reps {
        gens.extend(r.eigenvalues(e)?);
    }
    Ok(ZMonoid::generated_by(gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{make_chain, make_cycle_pair, Vector};
    use crate::rational::q;
    use crate::words::Alphabet;

    fn w(ix: &[u16]) -> Word {
        Word::from_indices(ix)
    }

    fn ab2() -> Arc<Alphabet> {
        Arc::new(Alphabet::free(2))
    }

    /// g_{ηb1} on the two-dimensional alternating module.
    fn g_eta_b1() -> Functional {
        let r = make_cycle_pair(ab2(), Letter(0), Letter(1)).unwrap();
        let b1: Vector = r.basis_vector(0);
        MatrixCoefficient::new(Arc::new(r), vec![q(1), q(1)], b1).unwrap().into()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(w(&[0])).eval_word(&w(&[0])), q(1));
        assert_eq!(phi(w(&[0])).eval_word(&w(&[1])), q(0));
        assert_eq!(phi(w(&[0, 1])).eval_word(&w(&[0, 1])), q(1));
    }

    #[test]
    fn shuffle_product_examples() {
        let s = shuffle_product(&phi(w(&[0])), &phi(w(&[1])));
        assert_eq!(s, FiniteFunctional::from_terms([(w(&[0, 1]), q(1)), (w(&[1, 0]), q(1))]));
        let s = shuffle_product(&phi(w(&[0])), &phi(w(&[0])));
        assert_eq!(s, FiniteFunctional::from_terms([(w(&[0, 0]), q(2))]));
        let h = FiniteFunctional::from_terms([(w(&[0, 1]), q(3)), (w(&[1]), q(-1))]);
        assert_eq!(shuffle_product(&phi(Word::empty()), &h), h);
    }

    #[test]
    fn evaluate_examples() {
        let g = g_eta_b1();
        assert_eq!(evaluate(&g, &NcPoly::word(w(&[0, 1]))), q(1));
        assert_eq!(evaluate(&g, &NcPoly::word(w(&[0]))), q(0));
        assert_eq!(evaluate(&g, &NcPoly::zero()), q(0));
        assert_eq!(evaluate(&phi(w(&[0])).into(), &NcPoly::zero()), q(0));
    }

    #[test]
    fn translation_examples() {
        let h: Functional = phi(w(&[0, 1])).into();
        let e1 = NcPoly::letter(Letter(0));
        let e2 = NcPoly::letter(Letter(1));
        assert_eq!(right_translate(&e2, &h), phi(w(&[0])).into());
        assert_eq!(right_translate(&e1, &h), FiniteFunctional::zero().into());
        assert_eq!(right_translate(&NcPoly::one(), &h), h);
        assert_eq!(left_translate(&e1, &h), phi(w(&[1])).into());
        assert_eq!(left_translate(&e2, &h), FiniteFunctional::zero().into());
        assert_eq!(left_translate(&NcPoly::one(), &h), h);
        let g = g_eta_b1();
        assert_eq!(right_translate(&NcPoly::one(), &g), g);
        assert_eq!(left_translate(&NcPoly::one(), &g), g);
    }

    #[test]
    fn matrix_translations_match_definitions() {
        let g = g_eta_b1();
        let x = NcPoly::from_terms([(w(&[1]), q(2)), (w(&[0, 1]), q(-1))]);
        let rt = right_translate(&x, &g);
        let lt = left_translate(&x, &g);
        for y in Alphabet::free(2).words_up_to(4) {
            let yp = NcPoly::word(y.clone());
            assert_eq!(evaluate(&rt, &yp), evaluate(&g, &yp.mul(&x)));
            assert_eq!(evaluate(&lt, &yp), evaluate(&g, &x.mul(&yp)));
        }
    }

    #[test]
    fn product_examples() {
        let p = product(&phi(w(&[0])).into(), &phi(w(&[1])).into()).unwrap();
        assert_eq!(p.eval_word(&w(&[0, 1])), q(1));
        assert_eq!(p.eval_word(&w(&[1, 0])), q(1));
        assert_eq!(p.eval_word(&w(&[0, 0])), q(0));
        let h: Functional = FiniteFunctional::from_terms([(w(&[1, 0]), q(5))]).into();
        assert_eq!(product(&h, &phi(Word::empty()).into()).unwrap(), h);
    }

    #[test]
    fn mixed_product_realizes_finite_side() {
        let g = g_eta_b1();
        let f: Functional = phi(w(&[1])).into();
        let p = product(&f, &g).unwrap();
        assert!(matches!(p, Functional::Matrix(_)));
        for x in Alphabet::free(2).words_up_to(4) {
            let d = NcPoly::word(x.clone()).coproduct().unwrap();
            let expect = d.contract(|a| f.eval_word(a), |b| g.eval_word(b));
            assert_eq!(p.eval_word(&x), expect, "word {x}");
        }
    }

    #[test]
    fn expand_rho_examples() {
        let a = Alphabet::free(2);
        let e = expand_rho(&phi(w(&[0, 1])).into(), &[Letter(0), Letter(1)], &a).unwrap();
        assert_eq!(e.coeffs, BTreeMap::from([(vec![1, 1], q(1))]));

        let e = expand_rho(&g_eta_b1(), &[Letter(1)], &a).unwrap();
        assert_eq!(e.coeffs, BTreeMap::from([(vec![0], q(1)), (vec![1], q(1))]));

        let e = expand_rho(&phi(Word::empty()).into(), &[Letter(1), Letter(0), Letter(1)], &a).unwrap();
        assert_eq!(e.coeffs, BTreeMap::from([(vec![0, 0, 0], q(1))]));
    }

    #[test]
    fn expand_rho_factorials() {
        let a = Alphabet::free(1);
        // h(e1 e1) = 1 gives c_2 = 1/2 along (e1), and c_{1,1} = 1 along (e1, e1)
        let h: Functional = phi(w(&[0, 0])).into();
        let e = expand_rho(&h, &[Letter(0)], &a).unwrap();
        assert_eq!(e.coeffs, BTreeMap::from([(vec![2], crate::rational::q_frac(1, 2))]));
        let e = expand_rho(&h, &[Letter(0), Letter(0)], &a).unwrap();
        assert_eq!(e.coeff(&[1, 1]), q(1));
        assert_eq!(e.coeff(&[2, 0]), crate::rational::q_frac(1, 2));
        assert_eq!(e.coeff(&[0, 2]), crate::rational::q_frac(1, 2));
    }

    #[test]
    fn expand_rho_diagonal_letter() {
        let ad = Arc::new(
            Alphabet::new(
                vec!["h".into(), "e".into()],
                vec![GeneratorKind::DiagonalizableInteger, GeneratorKind::LocallyNilpotent],
            )
            .unwrap(),
        );
        let hm = crate::linalg::Matrix::diagonal(&[q(1), q(-1)]);
        let mut em = crate::linalg::Matrix::zeros(2, 2);
        em.set(0, 1, q(1));
        let r = RepSpec::new(ad.clone(), 2, vec![hm, em]).unwrap();
        let m: Functional = MatrixCoefficient::new(Arc::new(r), vec![q(1), q(1)], vec![q(2), q(3)])
            .unwrap()
            .into();
        let e = expand_rho(&m, &[Letter(0)], &ad).unwrap();
        assert_eq!(e.coeffs, BTreeMap::from([(vec![-1], q(3)), (vec![1], q(2))]));
        // h(h^n) = 2·1^n + 3·(−1)^n
        for n in 0..5u32 {
            let expect = m.eval_word(&Word::new(vec![Letter(0); n as usize]));
            assert_eq!(e.eval_powers(&[n]), expect);
        }
        let finite: Functional = phi(Word::new(vec![Letter(0)])).into();
        assert!(expand_rho(&finite, &[Letter(0)], &ad).is_err());
        assert!(!is_regular(&finite, &ad, 1).regular);
        let finite_ok: Functional = phi(Word::new(vec![Letter(1)])).into();
        assert!(is_regular(&finite_ok, &ad, 2).regular);
    }

    #[test]
    fn is_regular_examples() {
        let a = Arc::new(Alphabet::free(2));
        assert!(is_regular(&phi(w(&[0, 1])).into(), &a, 3).regular);
        let v = make_vnj(a.clone(), 2, &BTreeSet::from([Letter(0), Letter(1)]), 4096).unwrap();
        let dim = v.dim();
        let phi_all: Vec<Q> = (0..dim).map(|i| q(i as i64 + 1)).collect();
        let m: Functional = MatrixCoefficient::new(Arc::new(v), phi_all, crate::reps::unit(dim, 0))
            .unwrap()
            .into();
        let cert = is_regular(&m, &a, 3);
        assert!(cert.regular);
        assert_eq!(cert.max_bound(), 2);
        assert!(is_regular(&Functional::zero(), &a, 3).regular);
    }

    #[test]
    fn membership_ffr_examples() {
        assert_eq!(
            membership_ffr(&phi(w(&[0, 1])).into()).unwrap(),
            FfrCertificate { member: true, dim: 3 }
        );
        let c = membership_ffr(&g_eta_b1()).unwrap();
        assert!(c.member && c.dim <= 3);
        assert_eq!(c.dim, 2);
        assert_eq!(membership_ffr(&phi(Word::empty()).into()).unwrap().dim, 1);
    }

    #[test]
    fn shuffle_span_examples() {
        assert!(in_shuffle_span(&phi(w(&[0, 1])).into(), 2, 5).in_span);
        assert!(in_shuffle_span(&Functional::zero(), 0, 5).in_span);
        let g = g_eta_b1();
        for n in 0..=20 {
            let v = in_shuffle_span(&g, n, DEFAULT_SHUFFLE_SLACK);
            assert!(!v.in_span, "N = {n}");
            let wit = v.witness.unwrap();
            assert!(wit.len() > n && wit.len() <= n + 2);
            assert_ne!(g.eval_word(&wit), q(0));
        }
        // the chain module's coefficients vanish past length 2
        let c = make_chain(ab2(), &[Letter(0), Letter(1)]).unwrap();
        let m: Functional = MatrixCoefficient::new(Arc::new(c), vec![q(1); 3], crate::reps::unit(3, 0))
            .unwrap()
            .into();
        assert!(in_shuffle_span(&m, 2, 5).in_span);
        assert!(!in_shuffle_span(&m, 1, 5).in_span);
    }

    #[test]
    fn r_cut_examples() {
        assert_eq!(r_cut(&w(&[0, 1])), vec![Word::empty(), w(&[0]), w(&[0, 1])]);
        assert_eq!(r_cut(&Word::empty()), vec![Word::empty()]);
        assert_eq!(r_cut(&w(&[0, 0, 1])).len(), 4);
    }

    #[test]
    fn z_monoid_examples() {
        let m = ZMonoid::generated_by([0, 2, 3]);
        assert_eq!(m.elements_in(-2, 7), vec![0, 2, 3, 4, 5, 6, 7]);
        assert!(!m.contains(1));
        let m = ZMonoid::generated_by([0]);
        assert_eq!(m.elements_in(-3, 3), vec![0]);
        let m = ZMonoid::generated_by([1, -1]);
        assert!(m.is_group());
        assert_eq!(m.elements_in(-3, 3), vec![-3, -2, -1, 0, 1, 2, 3]);
        let m = ZMonoid::generated_by([-4, -6]);
        assert_eq!(m.elements_in(-12, 0), vec![-12, -10, -8, -6, -4, 0]);
    }

    #[test]
    fn z_monoid_from_modules() {
        let ad = Arc::new(
            Alphabet::new(vec!["h".into()], vec![GeneratorKind::DiagonalizableInteger]).unwrap(),
        );
        let r1 = RepSpec::new(ad.clone(), 2, vec![crate::linalg::Matrix::diagonal(&[q(0), q(2)])]).unwrap();
        let r2 = RepSpec::new(ad.clone(), 1, vec![crate::linalg::Matrix::diagonal(&[q(3)])]).unwrap();
        let m = z_monoid(Letter(0), &[&r1, &r2]).unwrap();
        assert_eq!(m.elements_in(0, 6), vec![0, 2, 3, 4, 5, 6]);
        let nil = make_chain(Arc::new(Alphabet::free(1)), &[Letter(0)]).unwrap();
        assert!(z_monoid(Letter(0), &[&nil]).is_err());
    }
}

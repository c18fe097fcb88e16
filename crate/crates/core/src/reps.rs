//! Finite-dimensional integrable modules given by one exact matrix per letter.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{dense_to_sparse, is_zero_vec, Echelon, Matrix};
use crate::rational::{to_i64, Q};
use crate::words::{Alphabet, Letter, NcPoly, Word};

/// Default cap on the dimension of constructed modules.
pub const DEFAULT_DIM_CAP: usize = 4096;

pub type Vector = Vec<Q>;
pub type Covector = Vec<Q>;

/// How a generator integrates to a one-parameter subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorKind {
    /// Acts nilpotently; integrates to `exp(t e)`.
    #[serde(rename = "locally-nilpotent")]
    LocallyNilpotent,
    /// Acts diagonally with integer eigenvalues; integrates to `s^e`.
    #[serde(rename = "diagonalizable-integer")]
    DiagonalizableInteger,
}

impl GeneratorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GeneratorKind::LocallyNilpotent => "locally-nilpotent",
            GeneratorKind::DiagonalizableInteger => "diagonalizable-integer",
        }
    }
}

/// A module over the free Lie algebra on `alphabet`, one square matrix per letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSpec {
    alphabet: Arc<Alphabet>,
    dim: usize,
    action: Vec<Matrix>,
    labels: Option<Vec<String>>,
}

impl RepSpec {
    /// Shape-checked constructor; integrability is checked by [`validate_integrable`].
    pub fn new(alphabet: Arc<Alphabet>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != alphabet.len() {
            return Err(Error::DimensionMismatch {
                expected: alphabet.len(),
                got: action.len(),
            });
        }
        for m in &action {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: if m.rows() != dim { m.rows() } else { m.cols() },
                });
            }
        }
        Ok(RepSpec {
            alphabet,
            dim,
            action,
            labels: None,
        })
    }

    /// Like [`RepSpec::new`] but rejects non-integrable input.
    pub fn integrable(alphabet: Arc<Alphabet>, dim: usize, action: Vec<Matrix>) -> Result<Self> {
        let r = Self::new(alphabet, dim, action)?;
        let report = validate_integrable(&r);
        if !report.is_integrable() {
            return Err(Error::NotIntegrable(report.summary()));
        }
        Ok(r)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Trivial module: every letter acts by zero.
    pub fn trivial(alphabet: Arc<Alphabet>, dim: usize) -> Self {
        let action = vec![Matrix::zeros(dim, dim); alphabet.len()];
        RepSpec {
            alphabet,
            dim,
            action,
            labels: None,
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, l: Letter) -> &Matrix {
        &self.action[l.index()]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.action
    }

    pub fn kind(&self, l: Letter) -> GeneratorKind {
        self.alphabet.kind(l)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("b{i}"),
        }
    }

    /// Index of the basis vector with the given label.
    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit(self.dim, i)
    }

    pub fn zero_vector(&self) -> Vector {
        vec![Q::zero(); self.dim]
    }

    pub fn check_vector(&self, v: &[Q]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Integer eigenvalues of a diagonal letter, sorted and deduplicated.
    pub fn eigenvalues(&self, l: Letter) -> Result<Vec<i64>> {
        let m = self.matrix(l);
        if self.kind(l) != GeneratorKind::DiagonalizableInteger || !m.is_diagonal() {
            return Err(Error::KindMismatch {
                letter: self.alphabet.name(l).to_string(),
                detail: "expected a diagonal integer matrix".into(),
            });
        }
        let set: BTreeSet<i64> = m
            .diagonal_entries()
            .iter()
            .map(|x| {
                to_i64(x).ok_or_else(|| Error::KindMismatch {
                    letter: self.alphabet.name(l).to_string(),
                    detail: "non-integer eigenvalue".into(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(set.into_iter().collect())
    }

    /// Matrix of a word: `M_{x1} ⋯ M_{xk}`.
    pub fn word_matrix(&self, w: &Word) -> Matrix {
        w.letters()
            .iter()
            .fold(Matrix::identity(self.dim), |acc, &l| acc.mul(self.matrix(l)))
    }
}

pub fn unit(dim: usize, i: usize) -> Vector {
    let mut v = vec![Q::zero(); dim];
    v[i] = Q::one();
    v
}

/// One problem found by [`validate_integrable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub letter: String,
    pub kind: GeneratorKind,
    pub problem: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Eigenvalue sets of the diagonalizable letters that passed.
    pub eigenvalues: BTreeMap<String, Vec<i64>>,
}

impl ValidationReport {
    pub fn is_integrable(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        self.violations
            .iter()
            .map(|v| format!("{} ({}): {}", v.letter, v.kind.as_str(), v.problem))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Check every letter against its kind: nilpotent matrices for locally
/// nilpotent letters, diagonal integer matrices for diagonalizable letters.
pub fn validate_integrable(r: &RepSpec) -> ValidationReport {
    let mut report = ValidationReport::default();
    for l in r.alphabet.letters() {
        let m = r.matrix(l);
        let name = r.alphabet.name(l).to_string();
        let kind = r.kind(l);
        match kind {
            GeneratorKind::LocallyNilpotent => {
                if !m.is_nilpotent() {
                    report.violations.push(Violation {
                        letter: name,
                        kind,
                        problem: "matrix is not nilpotent".into(),
                    });
                }
            }
            GeneratorKind::DiagonalizableInteger => {
                if !m.is_diagonal() {
                    report.violations.push(Violation {
                        letter: name,
                        kind,
                        problem: "matrix is not diagonal in the module basis \
                                  (diagonalizable letters must be supplied diagonal)"
                            .into(),
                    });
                } else if let Some(x) = m.diagonal_entries().iter().find(|x| to_i64(x).is_none()) {
                    report.violations.push(Violation {
                        letter: name,
                        kind,
                        problem: format!("eigenvalue {x} is not an integer"),
                    });
                } else {
                    let ev = r.eigenvalues(l).expect("checked diagonal integer");
                    report.eigenvalues.insert(name, ev);
                }
            }
        }
    }
    report
}

/// `(x1 x2 ⋯ xk)·v = x1(x2(⋯(xk v)))`.
pub fn act_word(r: &RepSpec, w: &Word, v: &[Q]) -> Result<Vector> {
    r.check_vector(v)?;
    let mut out = v.to_vec();
    for &l in w.letters().iter().rev() {
        if is_zero_vec(&out) {
            break;
        }
        out = r.matrix(l).mul_vec(&out);
    }
    Ok(out)
}

pub fn act_poly(r: &RepSpec, x: &NcPoly, v: &[Q]) -> Result<Vector> {
    r.check_vector(v)?;
    let mut out = r.zero_vector();
    for (w, c) in x.terms() {
        let wv = act_word(r, w, v)?;
        crate::linalg::axpy(&mut out, c, &wv);
    }
    Ok(out)
}

/// Tensor product; each letter acts by `x⊗1 + 1⊗x`.
pub fn tensor(r1: &RepSpec, r2: &RepSpec) -> Result<RepSpec> {
    if r1.alphabet != r2.alphabet {
        // names may agree while kinds differ; report the first disagreement
        for (i, (k1, k2)) in r1.alphabet.kinds().iter().zip(r2.alphabet.kinds()).enumerate() {
            if k1 != k2 {
                return Err(Error::KindMismatch {
                    letter: r1.alphabet.names()[i].clone(),
                    detail: format!("{} vs {}", k1.as_str(), k2.as_str()),
                });
            }
        }
        return Err(Error::AlphabetMismatch(
            "tensor factors use different alphabets".into(),
        ));
    }
    let (i1, i2) = (Matrix::identity(r1.dim), Matrix::identity(r2.dim));
    let action = r1
        .action
        .iter()
        .zip(&r2.action)
        .map(|(a, b)| a.kron(&i2).add(&i1.kron(b)))
        .collect();
    let mut out = RepSpec::new(r1.alphabet.clone(), r1.dim * r2.dim, action)?;
    if r1.labels.is_some() || r2.labels.is_some() {
        let labels = (0..r1.dim)
            .flat_map(|i| (0..r2.dim).map(move |j| (i, j)))
            .map(|(i, j)| format!("{}⊗{}", r1.label(i), r2.label(j)))
            .collect();
        out.labels = Some(labels);
    }
    Ok(out)
}

/// Dual module for `g^op`: every matrix transposed.
pub fn dual_rep(r: &RepSpec) -> RepSpec {
    RepSpec {
        alphabet: r.alphabet.clone(),
        dim: r.dim,
        action: r.action.iter().map(Matrix::transpose).collect(),
        labels: r
            .labels
            .as_ref()
            .map(|ls| ls.iter().map(|l| format!("{l}*")).collect()),
    }
}

/// Basis of the smallest subspace containing `v` and closed under every
/// letter. Vectors are returned in breadth-first discovery order.
pub fn submodule_generated(r: &RepSpec, v: &[Q]) -> Result<Vec<Vector>> {
    r.check_vector(v)?;
    let mut ech: Echelon<usize> = Echelon::new();
    let mut basis = Vec::new();
    let mut queue = VecDeque::new();
    if ech.insert(dense_to_sparse(v)) {
        basis.push(v.to_vec());
        queue.push_back(v.to_vec());
    }
    while let Some(u) = queue.pop_front() {
        for m in &r.action {
            let w = m.mul_vec(&u);
            if ech.insert(dense_to_sparse(&w)) {
                basis.push(w.clone());
                queue.push_back(w);
            }
        }
    }
    Ok(basis)
}

/// `V_N(J)`: basis `b_w` for `len(w) ≤ N`, `supp(w) ⊆ J`; a letter `e ∈ J`
/// sends `b_w` to `b_{ew}` while the length stays within `N`.
pub fn make_vnj(
    alphabet: Arc<Alphabet>,
    n: usize,
    j: &BTreeSet<Letter>,
    dim_cap: usize,
) -> Result<RepSpec> {
    let k = j.len();
    let mut dim: usize = 0;
    let mut layer: usize = 1;
    for _ in 0..=n {
        dim = dim.saturating_add(layer);
        layer = layer.saturating_mul(k);
        if dim > dim_cap {
            return Err(Error::SizeCap {
                what: "V_N(J) dimension",
                size: dim,
                cap: dim_cap,
            });
        }
    }
    let jv: Vec<Letter> = j.iter().copied().collect();
    let mut basis: Vec<Word> = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..n {
        frontier = frontier
            .iter()
            .flat_map(|w| jv.iter().map(move |&l| w.concat(&Word::letter(l))))
            .collect();
        basis.extend(frontier.iter().cloned());
    }
    basis.sort();
    debug_assert_eq!(basis.len(), dim);
    let index: BTreeMap<Word, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut action = vec![Matrix::zeros(dim, dim); alphabet.len()];
    for &l in &jv {
        if alphabet.kind(l) != GeneratorKind::LocallyNilpotent {
            return Err(Error::KindMismatch {
                letter: alphabet.name(l).to_string(),
                detail: "V_N(J) needs locally nilpotent letters".into(),
            });
        }
        let m = &mut action[l.index()];
        for (col, w) in basis.iter().enumerate() {
            if w.len() < n {
                let row = index[&Word::letter(l).concat(w)];
                m.set(row, col, Q::one());
            }
        }
    }
    let labels = basis
        .iter()
        .map(|w| format!("b_{}", alphabet.format_word(w)))
        .collect();
    RepSpec::new(alphabet, dim, action)?.with_labels(labels)
}

/// Basis index of `b_w` in a module built by [`make_vnj`].
pub fn vnj_index(r: &RepSpec, w: &Word) -> Option<usize> {
    r.label_index(&format!("b_{}", r.alphabet().format_word(w)))
}

/// The chain module `V(e1 ⋯ ep)`: basis `b0..bp`, `e_i b_{i-1} = b_i`,
/// every other basis action zero.
pub fn make_chain(alphabet: Arc<Alphabet>, seq: &[Letter]) -> Result<RepSpec> {
    for (i, pair) in seq.windows(2).enumerate() {
        if pair[0] == pair[1] {
            return Err(Error::AdjacentRepeat(i + 1));
        }
    }
    let dim = seq.len() + 1;
    let mut action = vec![Matrix::zeros(dim, dim); alphabet.len()];
    for (i, &l) in seq.iter().enumerate() {
        if alphabet.kind(l) != GeneratorKind::LocallyNilpotent {
            return Err(Error::KindMismatch {
                letter: alphabet.name(l).to_string(),
                detail: "chain modules need locally nilpotent letters".into(),
            });
        }
        action[l.index()].set(i + 1, i, Q::one());
    }
    let labels = (0..dim).map(|i| format!("b{i}")).collect();
    RepSpec::new(alphabet, dim, action)?.with_labels(labels)
}

/// The two-dimensional module with basis `b1, b2`, `a b2 = b1`, `b b1 = b2`
/// and all other basis actions zero. Each letter squares to zero while the
/// alternating words never vanish on `b1`.
pub fn make_cycle_pair(alphabet: Arc<Alphabet>, a: Letter, b: Letter) -> Result<RepSpec> {
    if a == b {
        return Err(Error::AdjacentRepeat(1));
    }
    let mut action = vec![Matrix::zeros(2, 2); alphabet.len()];
    action[a.index()].set(0, 1, Q::one());
    action[b.index()].set(1, 0, Q::one());
    RepSpec::new(alphabet, 2, action)?.with_labels(vec!["b1".into(), "b2".into()])
}

/// Letters acting by a nonzero matrix.
pub fn support(r: &RepSpec) -> BTreeSet<Letter> {
    r.alphabet
        .letters()
        .filter(|&l| !r.matrix(l).is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;
    use crate::rational::q;

    fn ab2() -> Arc<Alphabet> {
        Arc::new(Alphabet::free(2))
    }

    fn chain12() -> RepSpec {
        make_chain(ab2(), &[Letter(0), Letter(1)]).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(validate_integrable(&chain12()).is_integrable());

        let a1 = Arc::new(Alphabet::free(1));
        let bad = RepSpec::new(a1, 1, vec![Matrix::identity(1)]).unwrap();
        let rep = validate_integrable(&bad);
        assert!(!rep.is_integrable());
        assert_eq!(rep.violations.len(), 1);

        let ad = Arc::new(
            Alphabet::new(vec!["h".into()], vec![GeneratorKind::DiagonalizableInteger]).unwrap(),
        );
        let d = RepSpec::new(ad.clone(), 2, vec![Matrix::diagonal(&[q(1), q(-1)])]).unwrap();
        let rep = validate_integrable(&d);
        assert!(rep.is_integrable());
        assert_eq!(rep.eigenvalues["h"], vec![-1, 1]);

        let nd = RepSpec::new(
            ad.clone(),
            2,
            vec![Matrix::from_rows(vec![vec![q(1), q(1)], vec![q(0), q(1)]]).unwrap()],
        )
        .unwrap();
        assert!(!validate_integrable(&nd).is_integrable());
        let frac = RepSpec::new(ad, 1, vec![Matrix::diagonal(&[crate::rational::q_frac(1, 2)])]).unwrap();
        assert!(!validate_integrable(&frac).is_integrable());
    }

    #[test]
    fn act_word_examples() {
        let r = chain12();
        let b0 = r.basis_vector(0);
        // word e2.e1: e1 first, then e2
        assert_eq!(act_word(&r, &Word::from_indices(&[1, 0]), &b0).unwrap(), r.basis_vector(2));
        assert_eq!(act_word(&r, &Word::from_indices(&[0, 1]), &b0).unwrap(), r.zero_vector());
        assert_eq!(act_word(&r, &Word::empty(), &b0).unwrap(), b0);
        assert!(act_word(&r, &Word::empty(), &[q(1)]).is_err());
    }

    #[test]
    fn act_poly_examples() {
        let r = chain12();
        let b0 = r.basis_vector(0);
        let x = crate::words::multibracket(&[Letter(0), Letter(1)]).unwrap();
        let mut expect = r.zero_vector();
        expect[2] = q(-1);
        assert_eq!(act_poly(&r, &x, &b0).unwrap(), expect);
        assert_eq!(act_poly(&r, &NcPoly::zero(), &b0).unwrap(), r.zero_vector());
        assert_eq!(act_poly(&r, &NcPoly::one(), &b0).unwrap(), b0);
    }

    #[test]
    fn tensor_examples() {
        let a1 = Arc::new(Alphabet::free(1));
        let v1 = make_chain(a1.clone(), &[Letter(0)]).unwrap();
        let t = tensor(&v1, &v1).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.matrix(Letter(0)).nilpotency_index(), Some(3));
        assert!(validate_integrable(&t).is_integrable());

        let triv = RepSpec::trivial(a1.clone(), 1);
        let t = tensor(&triv, &v1).unwrap();
        assert_eq!(t.matrices(), v1.matrices());

        let ad = Arc::new(
            Alphabet::new(vec!["h".into()], vec![GeneratorKind::DiagonalizableInteger]).unwrap(),
        );
        let d1 = RepSpec::new(ad.clone(), 1, vec![Matrix::diagonal(&[q(1)])]).unwrap();
        let d2 = RepSpec::new(ad, 1, vec![Matrix::diagonal(&[q(2)])]).unwrap();
        assert_eq!(tensor(&d1, &d2).unwrap().matrix(Letter(0)), &Matrix::diagonal(&[q(3)]));

        assert!(matches!(tensor(&v1, &d1), Err(Error::KindMismatch { .. })));
    }

    #[test]
    fn dual_examples() {
        let a1 = Arc::new(Alphabet::free(1));
        let v1 = make_chain(a1, &[Letter(0)]).unwrap();
        let d = dual_rep(&v1);
        assert_eq!(d.matrix(Letter(0)), &v1.matrix(Letter(0)).transpose());
        assert_eq!(d.matrix(Letter(0)).get(0, 1), &q(1));
        assert_eq!(dual_rep(&d).matrices(), v1.matrices());
    }

    #[test]
    fn submodule_examples() {
        let r = chain12();
        let s = submodule_generated(&r, &r.basis_vector(0)).unwrap();
        assert_eq!(s, vec![r.basis_vector(0), r.basis_vector(1), r.basis_vector(2)]);
        assert!(submodule_generated(&r, &r.zero_vector()).unwrap().is_empty());
        assert_eq!(submodule_generated(&r, &r.basis_vector(2)).unwrap(), vec![r.basis_vector(2)]);
    }

    #[test]
    fn vnj_examples() {
        let a = ab2();
        let v = make_vnj(a.clone(), 1, &BTreeSet::from([Letter(0)]), DEFAULT_DIM_CAP).unwrap();
        assert_eq!(v.dim(), 2);
        assert_eq!(v.matrix(Letter(0)).get(1, 0), &q(1));
        let v0 = make_vnj(a.clone(), 0, &BTreeSet::from([Letter(0)]), DEFAULT_DIM_CAP).unwrap();
        assert_eq!(v0.dim(), 1);
        assert!(support(&v0).is_empty());
        let v2 = make_vnj(a.clone(), 2, &BTreeSet::from([Letter(0), Letter(1)]), DEFAULT_DIM_CAP).unwrap();
        assert_eq!(v2.dim(), 7);
        assert!(validate_integrable(&v2).is_integrable());
        assert!(matches!(
            make_vnj(a, 12, &BTreeSet::from([Letter(0), Letter(1)]), DEFAULT_DIM_CAP),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn chain_examples() {
        let a = ab2();
        let c = make_chain(a.clone(), &[Letter(0)]).unwrap();
        assert_eq!(c.dim(), 2);
        let c3 = make_chain(a.clone(), &[Letter(0), Letter(1), Letter(0)]).unwrap();
        assert_eq!(c3.dim(), 4);
        let e1 = c3.matrix(Letter(0));
        assert_eq!(e1.get(1, 0), &q(1));
        assert_eq!(e1.get(3, 2), &q(1));
        assert_eq!(rank(&e1.to_rows()), 2);
        assert!(e1.mul(e1).is_zero());
        assert!(matches!(
            make_chain(a, &[Letter(0), Letter(0)]),
            Err(Error::AdjacentRepeat(1))
        ));
    }

    #[test]
    fn support_examples() {
        let a = ab2();
        assert_eq!(support(&chain12()), BTreeSet::from([Letter(0), Letter(1)]));
        assert!(support(&RepSpec::trivial(a.clone(), 3)).is_empty());
        let v = make_vnj(a, 2, &BTreeSet::from([Letter(0)]), DEFAULT_DIM_CAP).unwrap();
        assert_eq!(support(&v), BTreeSet::from([Letter(0)]));
    }

    #[test]
    fn cycle_pair_letters_square_to_zero() {
        let r = make_cycle_pair(ab2(), Letter(0), Letter(1)).unwrap();
        assert!(validate_integrable(&r).is_integrable());
        let b1 = r.basis_vector(0);
        assert_eq!(act_word(&r, &Word::from_indices(&[0, 1]), &b1).unwrap(), b1);
    }
}

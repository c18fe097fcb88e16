//! Group words in one-parameter factors and regular functions on them.
//!
//! A factor is `exp(t·e)` for a locally nilpotent letter or `s^e` for a
//! diagonalizable one. Words compose like functions: the rightmost factor
//! acts first.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::duals::{expand_rho, power_decompositions, realize_finite, Functional, MatrixCoefficient};
use crate::error::{Error, Result};
use crate::linalg::{dot, is_zero_vec};
use crate::poly::MPoly;
use crate::rational::{factorial, pow_i, q, to_i64, Q};
use crate::reps::{act_poly, make_chain, make_vnj, tensor, GeneratorKind, RepSpec, Vector, DEFAULT_DIM_CAP};
use crate::words::{Alphabet, Letter, NcPoly, Word};

/// `exp(t·e)` or `s^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneParamFactor {
    pub letter: Letter,
    pub param: Q,
    pub kind: GeneratorKind,
}

impl OneParamFactor {
    pub fn exp(letter: Letter, t: Q) -> Self {
        OneParamFactor {
            letter,
            param: t,
            kind: GeneratorKind::LocallyNilpotent,
        }
    }

    pub fn torus(letter: Letter, s: Q) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::ZeroTorusParam);
        }
        Ok(OneParamFactor {
            letter,
            param: s,
            kind: GeneratorKind::DiagonalizableInteger,
        })
    }

    /// The inverse factor: `exp(−t·e)` or `(1/s)^e`.
    pub fn inverse(&self) -> Self {
        let param = match self.kind {
            GeneratorKind::LocallyNilpotent => -self.param.clone(),
            GeneratorKind::DiagonalizableInteger => self.param.recip(),
        };
        OneParamFactor { param, ..self.clone() }
    }
}

/// Product of one-parameter factors, leftmost first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupWord {
    pub factors: Vec<OneParamFactor>,
}

impl GroupWord {
    pub fn new(factors: Vec<OneParamFactor>) -> Self {
        GroupWord { factors }
    }

    pub fn identity() -> Self {
        GroupWord::default()
    }

    /// `exp(t1 e1)⋯exp(tp ep)` for a tuple of nilpotent letters.
    pub fn exps(letters: &[Letter], params: &[Q]) -> Self {
        GroupWord::new(
            letters
                .iter()
                .zip(params)
                .map(|(&l, t)| OneParamFactor::exp(l, t.clone()))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The product `self · other`.
    pub fn then(&self, other: &GroupWord) -> GroupWord {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        GroupWord { factors }
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord::new(self.factors.iter().rev().map(|f| f.inverse()).collect())
    }

    /// No two adjacent factors share a letter.
    pub fn is_reduced(&self) -> bool {
        self.factors.windows(2).all(|p| p[0].letter != p[1].letter)
    }
}

/// Apply a single factor.
pub fn act_factor(r: &RepSpec, f: &OneParamFactor, v: &[Q]) -> Result<Vector> {
    r.check_vector(v)?;
    if f.letter.index() >= r.alphabet().len() {
        return Err(Error::UnknownLetter(format!("#{}", f.letter.index())));
    }
    let name = || r.alphabet().name(f.letter).to_string();
    if r.kind(f.letter) != f.kind {
        return Err(Error::KindMismatch {
            letter: name(),
            detail: format!("factor is {} but the module letter is {}", f.kind.as_str(), r.kind(f.letter).as_str()),
        });
    }
    let m = r.matrix(f.letter);
    match f.kind {
        GeneratorKind::LocallyNilpotent => {
            // Σ t^k e^k v / k!
            let mut acc = v.to_vec();
            let mut term = v.to_vec();
            for k in 1..=r.dim() + 1 {
                term = m.mul_vec(&term);
                if is_zero_vec(&term) {
                    return Ok(acc);
                }
                let c = &f.param / q(k as i64);
                for x in term.iter_mut() {
                    *x *= &c;
                }
                for (a, t) in acc.iter_mut().zip(&term) {
                    *a += t;
                }
            }
            Err(Error::Invalid(format!("exp series for `{}` does not terminate", name())))
        }
        GeneratorKind::DiagonalizableInteger => {
            if f.param.is_zero() {
                return Err(Error::ZeroTorusParam);
            }
            let mut out = v.to_vec();
            for (i, x) in out.iter_mut().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let ev = to_i64(m.get(i, i)).ok_or_else(|| Error::KindMismatch {
                    letter: name(),
                    detail: "non-integer eigenvalue".into(),
                })?;
                *x *= pow_i(&f.param, ev);
            }
            Ok(out)
        }
    }
}

/// `g·v`, rightmost factor first.
pub fn act_group(r: &RepSpec, g: &GroupWord, v: &[Q]) -> Result<Vector> {
    let mut cur = v.to_vec();
    r.check_vector(&cur)?;
    for f in g.factors.iter().rev() {
        cur = act_factor(r, f, &cur)?;
    }
    Ok(cur)
}

/// `g ↦ φ(g·v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularFunction {
    coeff: MatrixCoefficient,
}

impl RegularFunction {
    pub fn new(rep: Arc<RepSpec>, phi: Vec<Q>, v: Vec<Q>) -> Result<Self> {
        Ok(RegularFunction {
            coeff: MatrixCoefficient::new(rep, phi, v)?,
        })
    }

    pub fn from_coefficient(coeff: MatrixCoefficient) -> Self {
        RegularFunction { coeff }
    }

    pub fn coefficient(&self) -> &MatrixCoefficient {
        &self.coeff
    }

    pub fn rep(&self) -> &Arc<RepSpec> {
        self.coeff.rep()
    }

    pub fn eval(&self, g: &GroupWord) -> Result<Q> {
        let gv = act_group(self.coeff.rep(), g, self.coeff.vector())?;
        Ok(dot(self.coeff.covector(), &gv))
    }

    /// Pointwise product, realized on the tensor product module.
    pub fn mul(&self, other: &RegularFunction) -> Result<RegularFunction> {
        let rep = tensor(self.rep(), other.rep())?;
        let c = MatrixCoefficient::new(
            Arc::new(rep),
            crate::linalg::kron_vec(self.coeff.covector(), other.coeff.covector()),
            crate::linalg::kron_vec(self.coeff.vector(), other.coeff.vector()),
        )?;
        Ok(RegularFunction { coeff: c })
    }
}

pub fn eval_regular(f: &RegularFunction, g: &GroupWord) -> Result<Q> {
    f.eval(g)
}

/// `h(exp(t1e1)⋯exp(tpep)) = Σ_k h(e1^{k1}⋯ep^{kp}) t^k/k!`.
pub fn taylor_expand(h: &Functional, tuple: &[Letter], alphabet: &Alphabet) -> Result<MPoly> {
    if let Some(&l) = tuple
        .iter()
        .find(|&&l| alphabet.kind(l) == GeneratorKind::DiagonalizableInteger)
    {
        return Err(Error::KindMismatch {
            letter: alphabet.name(l).to_string(),
            detail: "Taylor expansion needs locally nilpotent letters; evaluate torus factors directly".into(),
        });
    }
    // along nilpotent letters the ρ-coefficients are exactly h(e^k)/k!
    let e = expand_rho(h, tuple, alphabet)?;
    let mut p = MPoly::zero(tuple.len());
    for (k, c) in e.coeffs {
        p.add_term(k.into_iter().map(|x| x as u32).collect(), c);
    }
    Ok(p)
}

/// `Φ(f)`: the functional `x ↦ (x▷f)(1)`, carried by the same module data.
pub fn phi_map(f: &RegularFunction) -> Functional {
    Functional::Matrix(f.coeff.clone())
}

/// `Ξ(h)`: the regular function `g ↦ h`-coefficient at `g`. Finite
/// functionals are first realized on `V_N(J)`.
pub fn xi_map(h: &Functional, alphabet: &Arc<Alphabet>) -> Result<RegularFunction> {
    Ok(RegularFunction {
        coeff: match h {
            Functional::Matrix(m) => m.clone(),
            Functional::Finite(f) => realize_finite(f, alphabet.clone())?,
        },
    })
}

/// `Φ(f)(w)` recovered from values of `f` alone: the coefficient of
/// `t1⋯tk` in `f(exp(t1 w1)⋯exp(tk wk))`, read off by exact interpolation on
/// the grid `{0..d}^k` where `d` bounds the degree in each variable.
pub fn phi_map_from_values(f: &RegularFunction, w: &Word) -> Result<Q> {
    let r = f.rep();
    let k = w.len();
    for &l in w.letters() {
        if r.kind(l) != GeneratorKind::LocallyNilpotent {
            return Err(Error::KindMismatch {
                letter: r.alphabet().name(l).to_string(),
                detail: "interpolation needs locally nilpotent letters".into(),
            });
        }
    }
    let d = r.dim().saturating_sub(1).max(1);
    // derivative at 0 of the Lagrange basis on nodes 0..d: weights for p'(0)
    let nodes: Vec<Q> = (0..=d).map(|i| q(i as i64)).collect();
    let weights: Vec<Q> = (0..=d)
        .map(|j| {
            // ℓ_j'(0) = Σ_{m≠j} Π_{i≠j,m} (0−x_i) / Π_{i≠j} (x_j−x_i)
            let denom: Q = (0..=d).filter(|&i| i != j).map(|i| &nodes[j] - &nodes[i]).product();
            let mut num = Q::zero();
            for m in (0..=d).filter(|&m| m != j) {
                let prod: Q = (0..=d).filter(|&i| i != j && i != m).map(|i| -nodes[i].clone()).product();
                num += prod;
            }
            num / denom
        })
        .collect();
    let mut acc = Q::zero();
    let mut idx = vec![0usize; k];
    loop {
        let wt: Q = idx.iter().map(|&i| weights[i].clone()).product();
        if !wt.is_zero() {
            let params: Vec<Q> = idx.iter().map(|&i| nodes[i].clone()).collect();
            acc += wt * f.eval(&GroupWord::exps(w.letters(), &params))?;
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(acc);
            }
            idx[pos] += 1;
            if idx[pos] <= d {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Coordinate function `f_w`: `Σ_{e1^{k1}⋯ep^{kp} = w} t^k/k!` on
/// `exp(t1e1)⋯exp(tpep)`.
pub fn f_w(w: &Word, g: &GroupWord) -> Result<Q> {
    if g.factors.iter().any(|f| f.kind != GeneratorKind::LocallyNilpotent) {
        return Err(Error::KindMismatch {
            letter: "torus".into(),
            detail: "f_w is defined on products of exp factors".into(),
        });
    }
    let tuple: Vec<Letter> = g.factors.iter().map(|f| f.letter).collect();
    let mut acc = Q::zero();
    for ks in power_decompositions(w, &tuple) {
        let mut t = Q::one();
        for (f, &k) in g.factors.iter().zip(&ks) {
            t *= pow_i(&f.param, k as i64) / factorial(k);
        }
        acc += t;
    }
    Ok(acc)
}

/// `e▷f : g ↦ d/dt f(g·κ_e(t))` at the identity parameter; `(rep, φ, e·v)`.
pub fn derive_right(e: Letter, f: &RegularFunction) -> Result<RegularFunction> {
    let m = f.rep().matrix(e);
    Ok(RegularFunction {
        coeff: f.coeff.with_vector(m.mul_vec(f.coeff.vector())),
    })
}

/// `e◁f : g ↦ d/dt f(κ_e(t)·g)`; `(rep, φ∘e, v)`.
pub fn derive_left(e: Letter, f: &RegularFunction) -> Result<RegularFunction> {
    let m = f.rep().matrix(e);
    Ok(RegularFunction {
        coeff: f.coeff.with_covector(m.vec_mul(f.coeff.covector())),
    })
}

/// A module and vector on which an element acts visibly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub rep: RepSpec,
    pub v: Vector,
    pub image: Vector,
}

/// `(V_N(J), b_∅, x·b_∅)`: `x·b_∅ = Σ c_w b_w` reproduces the coefficients of `x`.
pub fn faithfulness_witness(x: &NcPoly, alphabet: Arc<Alphabet>) -> Result<Witness> {
    faithfulness_witness_capped(x, alphabet, DEFAULT_DIM_CAP)
}

/// [`faithfulness_witness`] with an explicit bound on `dim V_N(J)`.
pub fn faithfulness_witness_capped(x: &NcPoly, alphabet: Arc<Alphabet>, dim_cap: usize) -> Result<Witness> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let j: BTreeSet<Letter> = x.support();
    let rep = make_vnj(alphabet, x.max_len(), &j, dim_cap)?;
    let v = rep.basis_vector(crate::reps::vnj_index(&rep, &Word::empty()).expect("b_1 exists"));
    let image = act_poly(&rep, x, &v)?;
    Ok(Witness { rep, v, image })
}

/// `(V(e1⋯ep), b0, g·b0)` for a reduced word of exp factors; the `b_p`
/// coordinate of the image is the product of the parameters.
pub fn group_faithfulness_witness(g: &GroupWord, alphabet: Arc<Alphabet>) -> Result<Witness> {
    if g.is_empty() {
        return Err(Error::NonReduced("empty group word".into()));
    }
    if let Some(i) = g.factors.windows(2).position(|p| p[0].letter == p[1].letter) {
        return Err(Error::NonReduced(format!("factors {} and {} share a letter", i, i + 1)));
    }
    if g.factors.iter().any(|f| f.param.is_zero()) {
        return Err(Error::NonReduced("zero parameter".into()));
    }
    if g.factors.iter().any(|f| f.kind != GeneratorKind::LocallyNilpotent) {
        return Err(Error::KindMismatch {
            letter: "torus".into(),
            detail: "the chain witness uses exp factors".into(),
        });
    }
    // the rightmost factor moves b0 first, so the chain follows the factors in reverse
    let seq: Vec<Letter> = g.factors.iter().rev().map(|f| f.letter).collect();
    let rep = make_chain(alphabet, &seq)?;
    let v = rep.basis_vector(0);
    let image = act_group(&rep, g, &v)?;
    Ok(Witness { rep, v, image })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duals::{evaluate, phi, product, right_translate};
    use crate::linalg::Matrix;
    use crate::rational::q_frac;
    use crate::reps::make_cycle_pair;

    fn ab(n: usize) -> Arc<Alphabet> {
        Arc::new(Alphabet::free(n))
    }

    fn w(ix: &[u16]) -> Word {
        Word::from_indices(ix)
    }

    fn theta_chain() -> RegularFunction {
        let r = make_chain(ab(2), &[Letter(0), Letter(1)]).unwrap();
        RegularFunction::new(Arc::new(r), vec![q(0), q(0), q(1)], vec![q(1), q(0), q(0)]).unwrap()
    }

    #[test]
    fn act_group_examples() {
        let r = make_chain(ab(2), &[Letter(0), Letter(1)]).unwrap();
        let (t1, t2) = (q(3), q_frac(2, 5));
        let g = GroupWord::new(vec![
            OneParamFactor::exp(Letter(1), t2.clone()),
            OneParamFactor::exp(Letter(0), t1.clone()),
        ]);
        let out = act_group(&r, &g, &r.basis_vector(0)).unwrap();
        assert_eq!(out, vec![q(1), t1.clone(), &t1 * &t2]);
        assert_eq!(act_group(&r, &GroupWord::identity(), &r.basis_vector(1)).unwrap(), r.basis_vector(1));

        let ad = Arc::new(Alphabet::new(vec!["h".into()], vec![GeneratorKind::DiagonalizableInteger]).unwrap());
        let d = RepSpec::new(ad, 1, vec![Matrix::diagonal(&[q(2)])]).unwrap();
        let g = GroupWord::new(vec![OneParamFactor::torus(Letter(0), q(3)).unwrap()]);
        assert_eq!(act_group(&d, &g, &[q(1)]).unwrap(), vec![q(9)]);
        assert!(OneParamFactor::torus(Letter(0), q(0)).is_err());
        let wrong = GroupWord::new(vec![OneParamFactor::exp(Letter(0), q(1))]);
        assert!(matches!(act_group(&d, &wrong, &[q(1)]), Err(Error::KindMismatch { .. })));
    }

    #[test]
    fn eval_regular_examples() {
        let f = theta_chain();
        let g = GroupWord::exps(&[Letter(1), Letter(0)], &[q(1), q(1)]);
        assert_eq!(eval_regular(&f, &g).unwrap(), q(1));
        let c = RegularFunction::new(f.rep().clone(), vec![q(2), q(0), q(0)], vec![q(3), q(0), q(0)]).unwrap();
        assert_eq!(c.eval(&GroupWord::identity()).unwrap(), q(6));
        // a factor whose letter acts by zero is the identity
        let r = make_chain(ab(3), &[Letter(0)]).unwrap();
        let h = RegularFunction::new(Arc::new(r), vec![q(1), q(1)], vec![q(1), q(0)]).unwrap();
        let g = GroupWord::exps(&[Letter(2)], &[q(7)]);
        assert_eq!(h.eval(&g).unwrap(), q(1));
    }

    #[test]
    fn taylor_examples() {
        let a = Alphabet::free(2);
        let p = taylor_expand(&phi(w(&[0, 1])).into(), &[Letter(0), Letter(1)], &a).unwrap();
        assert_eq!(p.to_string(), "t1*t2");
        let p = taylor_expand(&phi(Word::empty()).into(), &[Letter(0)], &a).unwrap();
        assert_eq!(p.to_string(), "1");
        let p = taylor_expand(&phi(w(&[0])).into(), &[Letter(0)], &a).unwrap();
        assert_eq!(p.to_string(), "t1");
    }

    #[test]
    fn taylor_matches_group_evaluation() {
        let r = make_cycle_pair(ab(2), Letter(0), Letter(1)).unwrap();
        let f = RegularFunction::new(Arc::new(r), vec![q(1), q(1)], vec![q(1), q(0)]).unwrap();
        let tuple = [Letter(1), Letter(0), Letter(1)];
        let p = taylor_expand(&phi_map(&f), &tuple, &Alphabet::free(2)).unwrap();
        for (a, b, c) in [(1, 2, 3), (-1, 5, 2), (0, 0, 0), (7, -3, 1)] {
            let params = [q(a), q_frac(b, 3), q(c)];
            let g = GroupWord::exps(&tuple, &params);
            assert_eq!(p.eval(&params), f.eval(&g).unwrap());
        }
    }

    #[test]
    fn phi_and_xi() {
        let f = theta_chain();
        let h = phi_map(&f);
        assert_eq!(evaluate(&h, &NcPoly::word(w(&[1, 0]))), q(1));
        assert_eq!(phi_map_from_values(&f, &w(&[1, 0])).unwrap(), q(1));
        assert_eq!(phi_map_from_values(&f, &w(&[0, 1])).unwrap(), q(0));
        let back = xi_map(&h, &ab(2)).unwrap();
        assert_eq!(back, f);
        let one = xi_map(&phi(Word::empty()).into(), &ab(2)).unwrap();
        assert_eq!(one.eval(&GroupWord::exps(&[Letter(0)], &[q(4)])).unwrap(), q(1));
        let e1 = xi_map(&phi(w(&[0])).into(), &ab(2)).unwrap();
        assert_eq!(e1.eval(&GroupWord::exps(&[Letter(0)], &[q(4)])).unwrap(), q(4));
    }

    #[test]
    fn phi_is_multiplicative() {
        let f1 = theta_chain();
        let r = make_cycle_pair(ab(2), Letter(0), Letter(1)).unwrap();
        let f2 = RegularFunction::new(Arc::new(r), vec![q(1), q(2)], vec![q(1), q(-1)]).unwrap();
        let lhs = phi_map(&f1.mul(&f2).unwrap());
        let rhs = product(&phi_map(&f1), &phi_map(&f2)).unwrap();
        for x in Alphabet::free(2).words_up_to(4) {
            assert_eq!(lhs.eval_word(&x), rhs.eval_word(&x));
        }
    }

    #[test]
    fn f_w_examples() {
        let (a, b) = (q(3), q_frac(-1, 2));
        let g = GroupWord::exps(&[Letter(0), Letter(1)], &[a.clone(), b.clone()]);
        assert_eq!(f_w(&w(&[0, 1]), &g).unwrap(), &a * &b);
        assert_eq!(f_w(&Word::empty(), &g).unwrap(), q(1));
        let g = GroupWord::exps(&[Letter(0)], std::slice::from_ref(&a));
        assert_eq!(f_w(&w(&[0, 0]), &g).unwrap(), &a * &a / q(2));
    }

    #[test]
    fn derivations() {
        let f = theta_chain();
        let d = derive_right(Letter(0), &f).unwrap();
        assert_eq!(d.eval(&GroupWord::exps(&[Letter(1)], &[q(1)])).unwrap(), q(1));
        let z = RegularFunction::new(
            Arc::new(make_chain(ab(3), &[Letter(0)]).unwrap()),
            vec![q(1), q(1)],
            vec![q(1), q(1)],
        )
        .unwrap();
        let dz = derive_right(Letter(2), &z).unwrap();
        assert_eq!(dz.eval(&GroupWord::exps(&[Letter(0)], &[q(5)])).unwrap(), q(0));
        // Φ intertwines derivations with right translation
        for e in [Letter(0), Letter(1)] {
            let lhs = phi_map(&derive_right(e, &f).unwrap());
            let rhs = right_translate(&NcPoly::letter(e), &phi_map(&f));
            for x in Alphabet::free(2).words_up_to(3) {
                assert_eq!(lhs.eval_word(&x), rhs.eval_word(&x));
            }
        }
        // (e◁f)(1) = f-coefficient at e
        let l = derive_left(Letter(1), &derive_left(Letter(0), &f).unwrap()).unwrap();
        assert_eq!(l.eval(&GroupWord::identity()).unwrap(), phi_map(&f).eval_word(&w(&[0, 1])));
    }

    #[test]
    fn witnesses() {
        let x = NcPoly::from_terms([(w(&[0, 1]), q(1)), (w(&[1, 0]), q(-1))]);
        let wit = faithfulness_witness(&x, ab(2)).unwrap();
        assert_eq!(wit.rep.dim(), 7);
        let nz: Vec<&Q> = wit.image.iter().filter(|c| !c.is_zero()).collect();
        assert_eq!(nz, vec![&q(1), &q(-1)]);
        let wit = faithfulness_witness(&NcPoly::one(), ab(2)).unwrap();
        assert_eq!(wit.image, wit.v);
        let wit = faithfulness_witness(&NcPoly::term(w(&[0]), q(3)), ab(2)).unwrap();
        assert_eq!(wit.image, vec![q(0), q(3)]);
        assert!(faithfulness_witness(&NcPoly::zero(), ab(2)).is_err());

        let g = GroupWord::exps(&[Letter(1), Letter(0)], &[q(2), q(3)]);
        let wit = group_faithfulness_witness(&g, ab(2)).unwrap();
        assert_eq!(wit.image[2], q(6));
        let g = GroupWord::exps(&[Letter(0)], &[q(1)]);
        assert_eq!(group_faithfulness_witness(&g, ab(2)).unwrap().image[1], q(1));
        let g = GroupWord::exps(&[Letter(0), Letter(1), Letter(0)], &[q(5), q(7), q(11)]);
        assert_eq!(group_faithfulness_witness(&g, ab(2)).unwrap().image[3], q(385));
        let bad = GroupWord::exps(&[Letter(0), Letter(0)], &[q(1), q(1)]);
        assert!(matches!(group_faithfulness_witness(&bad, ab(2)), Err(Error::NonReduced(_))));
    }

    #[test]
    fn one_parameter_laws() {
        let r = make_chain(ab(2), &[Letter(0), Letter(1), Letter(0)]).unwrap();
        let v = vec![q(1), q(2), q(-1), q(3)];
        let (s, t) = (q_frac(2, 3), q(-5));
        let split = GroupWord::exps(&[Letter(0), Letter(0)], &[s.clone(), t.clone()]);
        let joined = GroupWord::exps(&[Letter(0)], &[&s + &t]);
        assert_eq!(act_group(&r, &split, &v).unwrap(), act_group(&r, &joined, &v).unwrap());
        let g = GroupWord::exps(&[Letter(1), Letter(0)], &[s, t]);
        assert_eq!(act_group(&r, &g.then(&g.inverse()), &v).unwrap(), v);
    }
}

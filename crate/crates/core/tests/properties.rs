//! Randomized invariants of words, modules, functionals and group words.
//! Inputs come from the library's seeded generators; proptest drives the seeds.

use std::sync::Arc;

use proptest::prelude::*;
use rand::Rng;

use tannaka::check::{gen, oracles};
use tannaka::duals::{
    left_translate, phi, product, r_cut, realize_finite, right_translate, shuffle_product, FiniteFunctional, Functional,
};
use tannaka::grp::{
    act_group, derive_right, f_w, phi_map, taylor_expand, xi_map, GroupWord, OneParamFactor, RegularFunction,
};
use tannaka::linalg::{kron_vec, rank, Matrix};
use tannaka::rational::{q, Q};
use tannaka::reps::{
    act_word, dual_rep, make_chain, make_vnj, submodule_generated, tensor, validate_integrable, GeneratorKind, RepSpec,
    DEFAULT_DIM_CAP,
};
use tannaka::words::{shuffles, Alphabet, Letter, NcPoly, Word};

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 64,
        ..ProptestConfig::default()
    }
}

fn free(n: usize) -> Arc<Alphabet> {
    Arc::new(Alphabet::free(n))
}

/// `e1, e2` nilpotent and `h` diagonal with eigenvalues in `lo..=hi`.
fn mixed_rep(rng: &mut gen::Rng, dim: usize, lo: i64, hi: i64) -> RepSpec {
    let a = Arc::new(
        Alphabet::new(
            vec!["e1".into(), "e2".into(), "h".into()],
            vec![GeneratorKind::LocallyNilpotent, GeneratorKind::LocallyNilpotent, GeneratorKind::DiagonalizableInteger],
        )
        .unwrap(),
    );
    let nil = gen::nilpotent_rep(rng, free(2), dim);
    let d: Vec<Q> = (0..dim).map(|_| gen::small_int(rng, lo, hi)).collect();
    let mats = vec![nil.matrix(Letter(0)).clone(), nil.matrix(Letter(1)).clone(), Matrix::diagonal(&d)];
    RepSpec::integrable(a, dim, mats).unwrap()
}

fn mixed_group_word(rng: &mut gen::Rng, max_len: usize) -> GroupWord {
    let len = rng.gen_range(0..=max_len);
    GroupWord::new(
        (0..len)
            .map(|_| match rng.gen_range(0..3u16) {
                2 => OneParamFactor::torus(Letter(2), gen::nonzero_q(rng)).unwrap(),
                l => OneParamFactor::exp(Letter(l), gen::small_q(rng)),
            })
            .collect(),
    )
}

fn agree_on(h1: &Functional, h2: &Functional, words: &[Word]) -> bool {
    words.iter().all(|w| h1.eval_word(w) == h2.eval_word(w))
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn word_action_composes(seed in any::<u64>()) {
        let mut rng = gen::rng(seed, 0);
        let dim = rng.gen_range(1..=4);
        let r = gen::nilpotent_rep(&mut rng, free(2), dim);
        let (w1, w2) = (gen::word(&mut rng, 2, 4), gen::word(&mut rng, 2, 4));
        let v = gen::vector(&mut rng, dim);
        let lhs = act_word(&r, &w1.concat(&w2), &v).unwrap();
        let rhs = act_word(&r, &w1, &act_word(&r, &w2, &v).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_action_is_leibniz(seed in any::<u64>()) {
        let mut rng = gen::rng(seed, 0);
        let (d1, d2) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let r1 = gen::nilpotent_rep(&mut rng, free(2), d1);
        let r2 = gen::nilpotent_rep(&mut rng, free(2), d2);
        let t = tensor(&r1, &r2).unwrap();
        prop_assert!(validate_integrable(&t).is_integrable());
        let (v, w) = (gen::vector(&mut rng, d1), gen::vector(&mut rng, d2));
        for l in [Letter(0), Letter(1)] {
            let lhs = t.matrix(l).mul_vec(&kron_vec(&v, &w));
            let a = kron_vec(&r1.matrix(l).mul_vec(&v), &w);
            let b = kron_vec(&v, &r2.matrix(l).mul_vec(&w));
            let rhs: Vec<Q> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn generated_submodule_is_closed(seed in any::<u64>()) {
        let mut rng = gen::rng(seed, 0);
        let dim = rng.gen_range(1..=5);
        let r = gen::nilpotent_rep(&mut rng, free(3), dim);
        let v = gen::vector(&mut rng, dim);
        let basis = submodule_generated(&r, &v).unwrap();
        let k = rank(&basis);
        prop_assert_eq!(k, basis.len());
        for l in r.alphabet().letters() {
            for u in &basis {
                let mut ext = basis.clone();
                ext.push(r.matrix(l).mul_vec(u));
                prop_assert_eq!(rank(&ext), k);
            }
        }
    }

    #[test]
    fn shuffle_algebra_laws(seed in any::<u64>()) {
        let mut rng = gen::rng(seed, 0);
        let [x, y, z] = [(); 3].map(|_| gen::finite_functional(&mut rng, 2, 3, 4));
        prop_assert_eq!(shuffle_product(&x, &y), shuffle_product(&y, &x));
        prop_assert_eq!(
            shuffle_product(&shuffle_product(&x, &y), &z),
            shuffle_product(&x, &shuffle_product(&y, &z))
        );
        prop_assert_eq!(shuffle_product(&phi(Word::empty()), &x), x);
    }

    #[test]
    fn product_is_dual_to_coproduct(seed in any::<u64>()) {
        let mut rng = gen::rng(seed, 0);
        let a = free(2);
        let h1: Functional = gen::finite_functional(&mut rng, 2, 3, 3).into();
        let h2: Functional = gen::matrix_coefficient(&mut rng, a.clone(), 3).into();
        let p = product(&h1, &h2).unwrap();
        for w in a.words_up_to(5) {
            let want = NcPoly::word(w.clone()).coproduct().unwrap().contract(|u| h1.eval_word(u), |u| h2.eval_word(u));
            prop_assert_eq!(p.eval_word(&w), want);
        }
    }

    #[test]
    fn letters_translate_as_derivations(seed in any::<u64>()) {
        let mut rng = gen::rng(seed, 0);
        let a = free(2);
        let h1: Functional = gen::finite_functional(&mut rng, 2, 3, 3).into();
        let h2: Functional = gen::matrix_coefficient(&mut rng, a.clone(), 3).into();
        let e = NcPoly::letter(Letter(rng.gen_range(0..2)));
        let lhs = right_translate(&e, &product(&h1, &h2).unwrap());
        let r1 = product(&right_translate(&e, &h1), &h2).unwrap();
        let r2 = product(&h1, &right_translate(&e, &h2)).unwrap();
        for w in a.words_up_to(5) {
            prop_assert_eq!(lhs.eval_word(&w), r1.eval_word(&w) + r2.eval_word(&w));
        }
    }

    #[test]
    fn group_action_is_a_homomorphism(seed in any::<u64>()) {
        let mut rng = gen::rng(seed, 0);
        let dim = rng.gen_range(1..=4);
        let r = mixed_rep(&mut rng, dim, -2, 2);
        let (g1, g2) = (mixed_group_word(&mut rng, 4), mixed_group_word(&mut rng, 4));
        let v = gen::vector(&mut rng, dim);
        let lhs = act_group(&r, &g1.then(&g2), &v).unwrap();
        let rhs = act_group(&r, &g1, &act_group(&r, &g2, &v).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs, oracles::group_matrix(&r, &g1.then(&g2)).mul_vec(&v));
        let back = act_group(&r, &g1.inverse(), &act_group(&r, &g1, &v).unwrap()).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn one_parameter_subgroups(seed in any::<u64>()) {
        let mut rng = gen::rng(seed, 0);
        let dim = rng.gen_range(1..=4);
        let r = mixed_rep(&mut rng, dim, -3, 3);
        let v = gen::vector(&mut rng, dim);
        let (s, t) = (gen::nonzero_q(&mut rng), gen::nonzero_q(&mut rng));
        let e = Letter(rng.gen_range(0..2));
        let sum = GroupWord::new(vec![OneParamFactor::exp(e, &s + &t)]);
        let split = GroupWord::new(vec![OneParamFactor::exp(e, s.clone()), OneParamFactor::exp(e, t.clone())]);
        prop_assert_eq!(act_group(&r, &sum, &v).unwrap(), act_group(&r, &split, &v).unwrap());
        let h = Letter(2);
        let prod = GroupWord::new(vec![OneParamFactor::torus(h, &s * &t).unwrap()]);
        let split = GroupWord::new(vec![OneParamFactor::torus(h, s).unwrap(), OneParamFactor::torus(h, t).unwrap()]);
        prop_assert_eq!(act_group(&r, &prod, &v).unwrap(), act_group(&r, &split, &v).unwrap());
    }

    #[test]
    fn taylor_polynomial_matches_group_values(seed in any::<u64>()) {
        let mut rng = gen::rng(seed, 0);
        let a = free(2);
        let h: Functional = if rng.gen_bool(0.5) {
            gen::finite_functional(&mut rng, 2, 4, 4).into()
        } else {
            gen::matrix_coefficient(&mut rng, a.clone(), 4).into()
        };
        let p = rng.gen_range(1..=3);
        let tuple: Vec<Letter> = (0..p).map(|_| Letter(rng.gen_range(0..2))).collect();
        let point: Vec<Q> = (0..p).map(|_| gen::small_q(&mut rng)).collect();
        let t = taylor_expand(&h, &tuple, &a).unwrap();
        let f = xi_map(&h, &a).unwrap();
        prop_assert_eq!(t.eval(&point), f.eval(&GroupWord::exps(&tuple, &point)).unwrap());
    }

    #[test]
    fn phi_is_equivariant(seed in any::<u64>()) {
        let mut rng = gen::rng(seed, 0);
        let a = free(2);
        let m = gen::matrix_coefficient(&mut rng, a.clone(), 4);
        let f = RegularFunction::from_coefficient(m);
        let e = Letter(rng.gen_range(0..2));
        let lhs = phi_map(&derive_right(e, &f).unwrap());
        let rhs = right_translate(&NcPoly::letter(e), &phi_map(&f));
        prop_assert!(agree_on(&lhs, &rhs, &a.words_up_to(4)));
    }

    #[test]
    fn f_w_multiplies_by_shuffles(seed in any::<u64>()) {
        let mut rng = gen::rng(seed, 0);
        let (w1, w2) = (gen::word(&mut rng, 2, 3), gen::word(&mut rng, 2, 3));
        let g = gen::group_word(&mut rng, 2, 5);
        let lhs = f_w(&w1, &g).unwrap() * f_w(&w2, &g).unwrap();
        let mut rhs = Q::from_integer(0.into());
        for (u, c) in shuffles(&w1, &w2) {
            rhs += f_w(&u, &g).unwrap() * q(c as i64);
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn translations_commute(seed in any::<u64>()) {
        let mut rng = gen::rng(seed, 0);
        let a = free(2);
        let h: Functional = gen::matrix_coefficient(&mut rng, a.clone(), 4).into();
        let (x, y) = (gen::poly(&mut rng, 2, 3, 3), gen::poly(&mut rng, 2, 3, 3));
        let lhs = right_translate(&x, &left_translate(&y, &h));
        let rhs = left_translate(&y, &right_translate(&x, &h));
        prop_assert!(agree_on(&lhs, &rhs, &a.words_up_to(4)));
    }

    /// With `h` carrying eigenvalues of both signs, `g ↦ f(g⁻¹)` is the
    /// coefficient of the contragredient module and `Φ(f∘inv) = Φ(f)∘S`.
    #[test]
    fn inversion_and_antipode(seed in any::<u64>()) {
        let mut rng = gen::rng(seed, 0);
        let dim = rng.gen_range(2..=4);
        let mut r = mixed_rep(&mut rng, dim, -2, 2);
        while !{
            let e = r.eigenvalues(Letter(2)).unwrap();
            e.iter().any(|&x| x > 0) && e.iter().any(|&x| x < 0)
        } {
            r = mixed_rep(&mut rng, dim, -2, 2);
        }
        let neg_t: Vec<Matrix> = r.matrices().iter().map(|m| m.transpose().scale(&q(-1))).collect();
        let contra = Arc::new(RepSpec::integrable(r.alphabet().clone(), dim, neg_t).unwrap());
        let (phi_v, v) = (gen::vector(&mut rng, dim), gen::vector(&mut rng, dim));
        let f = RegularFunction::new(Arc::new(r.clone()), phi_v.clone(), v.clone()).unwrap();
        let f_inv = RegularFunction::new(contra, v, phi_v).unwrap();
        for _ in 0..10 {
            let g = mixed_group_word(&mut rng, 4);
            prop_assert_eq!(f_inv.eval(&g).unwrap(), f.eval(&g.inverse()).unwrap());
        }
        let (h, h_inv) = (phi_map(&f), phi_map(&f_inv));
        for w in r.alphabet().words_up_to(3) {
            let s = NcPoly::word(w.clone()).antipode();
            prop_assert_eq!(h_inv.eval_word(&w), tannaka::duals::evaluate(&h, &s));
        }
    }
}

#[test]
fn constructed_modules_are_integrable() {
    let a = free(3);
    let chain = make_chain(a.clone(), &[Letter(0), Letter(2), Letter(1)]).unwrap();
    let vnj = make_vnj(a.clone(), 3, &[Letter(0), Letter(1)].into(), DEFAULT_DIM_CAP).unwrap();
    for r in [&chain, &vnj, &dual_rep(&chain), &tensor(&chain, &vnj).unwrap()] {
        assert!(validate_integrable(r).is_integrable());
    }
}

#[test]
fn right_translates_of_delta_span_prefixes() {
    let a = free(2);
    for w in a.words_up_to(5) {
        let h: Functional = phi(w.clone()).into();
        let mut seen = std::collections::BTreeSet::new();
        for x in a.words_up_to(w.len()) {
            match right_translate(&NcPoly::word(x), &h) {
                Functional::Finite(f) if !f.is_zero() => {
                    let terms: Vec<_> = f.terms().collect();
                    assert_eq!(terms.len(), 1);
                    assert_eq!(terms[0].1, &q(1));
                    seen.insert(terms[0].0.clone());
                }
                Functional::Finite(_) => {}
                Functional::Matrix(_) => panic!("translate of a finite functional stays finite"),
            }
        }
        let cut: std::collections::BTreeSet<Word> = r_cut(&w).into_iter().collect();
        assert_eq!(seen, cut, "{w}");
    }
}

#[test]
fn realized_delta_functionals_agree() {
    let a = free(2);
    for w in a.words_up_to(4) {
        let h = phi(w.clone());
        let m: Functional = realize_finite(&h, a.clone()).unwrap().into();
        let f: Functional = FiniteFunctional::from_poly(h.as_poly().clone()).into();
        assert!(agree_on(&m, &f, &a.words_up_to(w.len() + 2)), "{w}");
    }
}

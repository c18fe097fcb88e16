//! Seeded property suites, one per invariant of the library, each checked
//! against an independent oracle from [`oracles`].
//!
//! Reports are deterministic for a given seed: they carry counts and the
//! first few failing cases, never timings.

pub mod gen;
pub mod oracles;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng as _;

use crate::duals::{
    in_shuffle_span, left_translate, product, right_translate, shuffle_product, z_monoid, evaluate, phi,
    Functional, MatrixCoefficient,
};
use crate::error::Result;
use crate::grp::{f_w, faithfulness_witness, group_faithfulness_witness, phi_map, phi_map_from_values, xi_map, RegularFunction};
use crate::kacmoody::{
    build_irr_trunc, freudenthal_table, kostant_cone_test, multibracket_rootvector, theta_eval, validate_gcm, weight_multiplicity,
    act_km_group, Chevalley, Coweight, IrrTrunc, KmFactor, KmGroupWord, KmVector,
};
use crate::rational::{factorial, pow_i, q, Q};
use crate::reps::{make_cycle_pair, vnj_index};
use crate::words::{multibracket, Alphabet, Letter, NcPoly, TensorNcPoly, Word};

use gen::Rng;

pub const DEFAULT_SEED: u64 = 20240601;

/// Suite names in criterion order.
pub const SUITES: [&str; 12] = [
    "shuffle",
    "hopf",
    "duality",
    "product",
    "translation",
    "counterexample",
    "faithfulness",
    "sl2",
    "a2",
    "affine",
    "cone",
    "z-monoid",
];

const KEEP_FAILURES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub criterion: usize,
    pub name: &'static str,
    pub checks: u64,
    pub failed: u64,
    /// The first few failing cases.
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(criterion: usize, name: &'static str) -> Self {
        SuiteReport {
            criterion,
            name,
            checks: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEEP_FAILURES {
                self.failures.push(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checks > 0
    }
}

/// Run one suite by name. An error inside a suite counts as a failure.
pub fn run_suite(name: &str, seed: u64) -> Option<SuiteReport> {
    let idx = SUITES.iter().position(|&s| s == name)?;
    let mut rep = SuiteReport::new(idx + 1, SUITES[idx]);
    let mut rng = gen::rng(seed, idx as u64 + 1);
    let res = match idx {
        0 => shuffle_suite(&mut rep, &mut rng),
        1 => hopf_suite(&mut rep),
        2 => duality_suite(&mut rep, &mut rng),
        3 => product_suite(&mut rep, &mut rng),
        4 => translation_suite(&mut rep, &mut rng),
        5 => counterexample_suite(&mut rep, &mut rng),
        6 => faithfulness_suite(&mut rep, &mut rng),
        7 => sl2_suite(&mut rep, &mut rng),
        8 => a2_suite(&mut rep),
        9 => affine_suite(&mut rep),
        10 => cone_suite(&mut rep, &mut rng),
        _ => z_monoid_suite(&mut rep, &mut rng),
    };
    if let Err(e) = res {
        rep.check(false, || format!("error: {e}"));
    }
    Some(rep)
}

pub fn run_all(seed: u64) -> Vec<SuiteReport> {
    SUITES.iter().filter_map(|s| run_suite(s, seed)).collect()
}

pub fn render(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "[{status}] {:>2} {:<15} {} checks, {} failed", r.criterion, r.name, r.checks, r.failed);
        for f in &r.failures {
            let _ = writeln!(out, "       {f}");
        }
    }
    out
}

fn shuffle_suite(rep: &mut SuiteReport, rng: &mut Rng) -> Result<()> {
    let a = Alphabet::free(2);
    for l1 in 0..=8 {
        for l2 in 0..=8 - l1 {
            for w1 in a.words_of_len(l1) {
                for w2 in a.words_of_len(l2) {
                    let s = crate::words::shuffles(&w1, &w2);
                    let total: u64 = s.values().sum();
                    rep.check(total == oracles::binomial((l1 + l2) as u64, l1 as u64), || {
                        format!("{w1} ш {w2}: {total} shuffles")
                    });
                    rep.check(s == oracles::shuffle_multiset(&w1, &w2), || format!("{w1} ш {w2} differs from recursion"));
                }
            }
        }
    }
    let one = phi(Word::empty());
    for _ in 0..200 {
        let [x, y, z] = [(); 3].map(|_| gen::finite_functional(rng, 2, 3, 3));
        rep.check(shuffle_product(&x, &y) == shuffle_product(&y, &x), || format!("commutativity {x:?} {y:?}"));
        rep.check(
            shuffle_product(&shuffle_product(&x, &y), &z) == shuffle_product(&x, &shuffle_product(&y, &z)),
            || format!("associativity {x:?} {y:?} {z:?}"),
        );
        rep.check(shuffle_product(&one, &x) == x, || format!("unit {x:?}"));
    }
    Ok(())
}

/// `Σ a·S(b)` over the terms of `t`.
fn antipode_right_multiply(t: &TensorNcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for ((a, b), c) in t.terms() {
        let p = NcPoly::word(a.clone()).mul(&NcPoly::word(b.clone()).antipode());
        out = &out + &p.scale(c);
    }
    out
}

fn hopf_suite(rep: &mut SuiteReport) -> Result<()> {
    let a = Alphabet::free(2);
    let words = a.words_up_to(4);
    let mut cop = Vec::with_capacity(words.len());
    for w in &words {
        cop.push(NcPoly::word(w.clone()).coproduct()?);
    }
    for (x, dx) in words.iter().zip(&cop) {
        for (y, dy) in words.iter().zip(&cop) {
            let dxy = NcPoly::word(x.concat(y)).coproduct()?;
            rep.check(dxy == dx.mul(dy), || format!("Δ({x}·{y}) ≠ Δ({x})Δ({y})"));
        }
        let eps = NcPoly::one().scale(&NcPoly::word(x.clone()).counit());
        rep.check(dx.antipode_left_multiply() == eps, || format!("m(S⊗id)Δ({x}) ≠ ε"));
        rep.check(antipode_right_multiply(dx) == eps, || format!("m(id⊗S)Δ({x}) ≠ ε"));
        let xp = NcPoly::word(x.clone());
        rep.check(xp.antipode().antipode() == xp, || format!("S² ≠ id at {x}"));
    }
    // brackets are primitive
    for len in 1..=4 {
        for w in a.words_of_len(len) {
            let b = multibracket(w.letters())?;
            rep.check(b.coproduct()? == TensorNcPoly::primitive(&b), || format!("bracket {w} not primitive"));
        }
    }
    // ⟨Δx, φ_u ⊗ φ_v⟩ = ⟨x, φ_u ш φ_v⟩
    let short = a.words_up_to(2);
    for u in &short {
        for v in &short {
            let s = shuffle_product(&phi(u.clone()), &phi(v.clone()));
            for (x, dx) in words.iter().zip(&cop) {
                if x.len() != u.len() + v.len() {
                    continue;
                }
                rep.check(dx.coeff(u, v) == s.eval_word(x), || format!("duality at {x}, {u}, {v}"));
            }
        }
    }
    Ok(())
}

fn duality_suite(rep: &mut SuiteReport, rng: &mut Rng) -> Result<()> {
    for trial in 0..50 {
        let nletters = rng.gen_range(1..=3);
        let alphabet = Arc::new(Alphabet::free(nletters));
        let dim = rng.gen_range(1..=5);
        let r = Arc::new(gen::nilpotent_rep(rng, alphabet.clone(), dim));
        let (phi_v, v) = (gen::vector(rng, dim), gen::vector(rng, dim));
        let f = RegularFunction::new(r.clone(), phi_v.clone(), v.clone())?;
        let h = phi_map(&f);
        let back = xi_map(&h, &alphabet)?;
        for _ in 0..100 {
            let g = gen::group_word(rng, nletters, 6);
            let want = oracles::eval_by_matrices(&r, &phi_v, &v, &g);
            let (got_f, got_back) = (f.eval(&g)?, back.eval(&g)?);
            rep.check(got_f == want && got_back == want, || format!("trial {trial}: Ξ(Φ(f)) ≠ f at {g:?}"));
        }
        let words = alphabet.words_up_to(5);
        for w in &words {
            let want = oracles::eval_word_by_matrices(&r, &phi_v, &v, w);
            rep.check(h.eval_word(w) == want, || format!("trial {trial}: Φ(f)({w}) ≠ φ(w·v)"));
        }
        // Φ read off group values alone
        let max_len = if trial < 5 { 3 } else { 2 };
        for w in alphabet.words_up_to(max_len) {
            let got = phi_map_from_values(&f, &w)?;
            rep.check(got == h.eval_word(&w), || format!("trial {trial}: interpolated Φ(f)({w})"));
        }
        // Φ(Ξ(h)) = h for a finitely supported h
        let hf: Functional = gen::finite_functional(rng, nletters, 4, 3).into();
        let round = phi_map(&xi_map(&hf, &alphabet)?);
        for w in &words {
            rep.check(round.eval_word(w) == hf.eval_word(w), || format!("trial {trial}: Φ(Ξ(h))({w}) ≠ h({w})"));
        }
        // f_w = Ξ(φ_w)
        if trial < 10 {
            let w = gen::word(rng, nletters, 3);
            let xw = xi_map(&phi(w.clone()).into(), &alphabet)?;
            for _ in 0..10 {
                let g = gen::group_word(rng, nletters, 4);
                rep.check(f_w(&w, &g)? == xw.eval(&g)?, || format!("f_{w} ≠ Ξ(φ_{w}) at {g:?}"));
            }
        }
    }
    Ok(())
}

fn random_functional(rng: &mut Rng, alphabet: &Arc<Alphabet>, finite: bool) -> Functional {
    if finite {
        gen::finite_functional(rng, alphabet.len(), 4, 4).into()
    } else {
        gen::matrix_coefficient(rng, alphabet.clone(), 4).into()
    }
}

fn product_suite(rep: &mut SuiteReport, rng: &mut Rng) -> Result<()> {
    let alphabet = Arc::new(Alphabet::free(2));
    let words = alphabet.words_up_to(6);
    for trial in 0..35 {
        // 0..10 matrix pairs, 10..30 finite pairs, then mixed
        let (f1, f2) = match trial {
            0..=9 => (false, false),
            10..=29 => (true, true),
            _ => (trial % 2 == 0, trial % 2 == 1),
        };
        let h1 = random_functional(rng, &alphabet, f1);
        let h2 = random_functional(rng, &alphabet, f2);
        let p = product(&h1, &h2)?;
        match (&h1, &h2, &p) {
            (Functional::Finite(a), Functional::Finite(b), _) => {
                rep.check(p == Functional::Finite(shuffle_product(a, b)), || format!("trial {trial}: product ≠ shuffle product"));
            }
            (Functional::Matrix(a), Functional::Matrix(b), Functional::Matrix(m)) => {
                rep.check(m.rep().dim() == a.rep().dim() * b.rep().dim(), || format!("trial {trial}: not the tensor module"));
            }
            _ => {}
        }
        for w in &words {
            let want = oracles::coproduct_pairing(w, &mut |u| h1.eval_word(u), &mut |u| h2.eval_word(u));
            rep.check(p.eval_word(w) == want, || format!("trial {trial}: (h1·h2)({w})"));
        }
    }
    Ok(())
}

fn translation_suite(rep: &mut SuiteReport, rng: &mut Rng) -> Result<()> {
    let alphabet = Arc::new(Alphabet::free(2));
    let words = alphabet.words_up_to(4);
    for trial in 0..100 {
        let h = random_functional(rng, &alphabet, trial % 2 == 0);
        let x = gen::poly(rng, 2, 3, 3);
        let y = gen::poly(rng, 2, 3, 3);
        let lhs = right_translate(&x, &left_translate(&y, &h));
        let rhs = left_translate(&y, &right_translate(&x, &h));
        for w in &words {
            rep.check(lhs.eval_word(w) == rhs.eval_word(w), || format!("trial {trial}: x▷(y◁h) ≠ y◁(x▷h) at {w}"));
        }
        let rx = right_translate(&x, &h);
        let ly = left_translate(&y, &h);
        for z in alphabet.words_up_to(3) {
            let zp = NcPoly::word(z.clone());
            rep.check(rx.eval_word(&z) == evaluate(&h, &zp.mul(&x)), || format!("trial {trial}: (x▷h)({z})"));
            rep.check(ly.eval_word(&z) == evaluate(&h, &y.mul(&zp)), || format!("trial {trial}: (y◁h)({z})"));
        }
    }
    Ok(())
}

/// Nonempty alternating words ending in `e2`, and the empty word.
fn alternating_ends_e2(w: &Word) -> bool {
    let l = w.letters();
    l.last().is_none_or(|&x| x == Letter(1)) && l.windows(2).all(|p| p[0] != p[1])
}

fn counterexample_suite(rep: &mut SuiteReport, rng: &mut Rng) -> Result<()> {
    let alphabet = Arc::new(Alphabet::free(2));
    let r = make_cycle_pair(alphabet.clone(), Letter(0), Letter(1))?;
    let b1 = r.basis_vector(0);
    let g: Functional = MatrixCoefficient::new(Arc::new(r), vec![q(1), q(1)], b1)?.into();
    for len in 1..=25usize {
        // e2, e1e2, e2e1e2, …
        let w = Word::new((0..len).map(|i| Letter(((len - i) % 2) as u16)).collect());
        rep.check(alternating_ends_e2(&w) && g.eval_word(&w) == q(1), || format!("g({w}) ≠ 1"));
    }
    let mut words = alphabet.words_up_to(12);
    words.extend((0..2000).map(|_| gen::word(rng, 2, 25)));
    for w in &words {
        let want = if alternating_ends_e2(w) { q(1) } else { q(0) };
        rep.check(g.eval_word(w) == want, || format!("g({w}) = {}", g.eval_word(w)));
    }
    for n in 0..=20 {
        let v = in_shuffle_span(&g, n, crate::duals::DEFAULT_SHUFFLE_SLACK);
        let ok = !v.in_span && v.witness.as_ref().is_some_and(|w| w.len() > n && !g.eval_word(w).is_zero());
        rep.check(ok, || format!("N = {n}: {v:?}"));
    }
    Ok(())
}

fn faithfulness_suite(rep: &mut SuiteReport, rng: &mut Rng) -> Result<()> {
    let alphabet = Arc::new(Alphabet::free(3));
    for trial in 0..100 {
        let x = gen::nonzero_poly(rng, 3, 5, 4);
        let w = faithfulness_witness(&x, alphabet.clone())?;
        rep.check(w.image.iter().any(|c| !c.is_zero()), || format!("trial {trial}: x·b = 0"));
        let all = x.terms().all(|(u, c)| vnj_index(&w.rep, u).is_some_and(|i| &w.image[i] == c));
        let nonzero = w.image.iter().filter(|c| !c.is_zero()).count();
        rep.check(all && nonzero == x.num_terms(), || format!("trial {trial}: image does not reproduce x"));
    }
    for trial in 0..100 {
        let len = rng.gen_range(1..=6);
        let g = gen::reduced_group_word(rng, 3, len);
        let w = group_faithfulness_witness(&g, alphabet.clone())?;
        rep.check(w.image != w.v, || format!("trial {trial}: g·b0 = b0"));
        let want = oracles::group_matrix(&w.rep, &g).mul_vec(&w.v);
        rep.check(w.image == want, || format!("trial {trial}: witness image ≠ dense product"));
        let top = g.factors.iter().fold(Q::one(), |acc, f| acc * &f.param);
        rep.check(w.image[len] == top, || format!("trial {trial}: top coefficient"));
    }
    Ok(())
}

fn sl2_suite(rep: &mut SuiteReport, rng: &mut Rng) -> Result<()> {
    let gcm = Arc::new(validate_gcm(vec![vec![2]])?);
    for m in 0..=6usize {
        let l = build_irr_trunc(gcm.clone(), vec![m as i64], m + 2)?;
        let table = freudenthal_table(&gcm, &[m as i64], &[m as u32 + 2])?;
        for d in 0..=m as u32 + 2 {
            let want = usize::from(d as usize <= m);
            rep.check(weight_multiplicity(&l, &[d])? == want && l.dim_at(&[d])? == want, || format!("L({m}) at depth {d}"));
            rep.check(table.get(&vec![d]).copied().unwrap_or(0) as usize == want, || format!("Freudenthal L({m}) at {d}"));
        }
        rep.check(l.total_dim() == m + 1, || format!("dim L({m}) = {}", l.total_dim()));
        let oracle = oracles::Sl2Irrep::new(m);
        for _ in 0..20 {
            let (a, b) = (gen::small_q(rng), gen::small_q(rng));
            let g = KmGroupWord::new(vec![KmFactor::exp_e(0, b.clone()), KmFactor::exp_f(0, a.clone())]);
            let got = theta_eval(&l, &g)?;
            let want = oracle.theta(&a, &b);
            rep.check(got == want && want == pow_i(&(q(1) + &a * &b), m as i64), || format!("θ_{m}({a}, {b}) = {got}"));
        }
    }
    Ok(())
}

/// Chevalley relations and Serre relations on every basis vector whose
/// images stay inside the built truncation.
fn check_relations(rep: &mut SuiteReport, l: &IrrTrunc, tag: &str) -> Result<()> {
    let g = l.gcm().clone();
    let r = l.rank();
    let limit = if l.is_complete() { usize::MAX } else { l.depth() };
    let neg = |v: &KmVector| v.scale(&q(-1));
    for v in l.basis() {
        let d = v.max_depth();
        for i in 0..r {
            for j in 0..r {
                if d < limit {
                    let ef = l.act(Chevalley::E(i), &l.act(Chevalley::F(j), &v)?)?;
                    let fe = l.act(Chevalley::F(j), &l.act(Chevalley::E(i), &v)?)?;
                    let want = if i == j { l.act(Chevalley::H(i), &v)? } else { KmVector::zero() };
                    rep.check(ef.add(&neg(&fe)).add(&neg(&want)).is_zero(), || format!("{tag}: [e{i},f{j}]"));
                    let fj = l.act(Chevalley::F(j), &v)?;
                    let hf = l.act(Chevalley::H(i), &fj)?.add(&neg(&l.act(Chevalley::F(j), &l.act(Chevalley::H(i), &v)?)?));
                    rep.check(hf.add(&fj.scale(&q(g.entry(i, j)))).is_zero(), || format!("{tag}: [h{i},f{j}]"));
                }
                let ej = l.act(Chevalley::E(j), &v)?;
                let he = l.act(Chevalley::H(i), &ej)?.add(&neg(&l.act(Chevalley::E(j), &l.act(Chevalley::H(i), &v)?)?));
                rep.check(he.add(&neg(&ej.scale(&q(g.entry(i, j))))).is_zero(), || format!("{tag}: [h{i},e{j}]"));
                if i == j {
                    continue;
                }
                // Σ_k (−1)^k C(n,k) x_i^{n−k} x_j x_i^k with n = 1 − a_ij
                let n = (1 - g.entry(i, j)) as usize;
                for lowering in [false, true] {
                    if lowering && d + n + 1 > limit {
                        continue;
                    }
                    let gi = if lowering { Chevalley::F(i) } else { Chevalley::E(i) };
                    let gj = if lowering { Chevalley::F(j) } else { Chevalley::E(j) };
                    let mut acc = KmVector::zero();
                    for k in 0..=n {
                        let mut u = v.clone();
                        for _ in 0..k {
                            u = l.act(gi, &u)?;
                        }
                        u = l.act(gj, &u)?;
                        for _ in 0..n - k {
                            u = l.act(gi, &u)?;
                        }
                        let c = oracles::binomial(n as u64, k as u64) as i64 * if k % 2 == 0 { 1 } else { -1 };
                        acc = acc.add(&u.scale(&q(c)));
                    }
                    rep.check(acc.is_zero(), || format!("{tag}: Serre ({i},{j}) lowering={lowering} at depth {d}"));
                }
            }
        }
    }
    // contravariant form: symmetric and nondegenerate on the quotient
    for (k, _, dim) in l.weights() {
        let gram = l.gram(&k)?;
        rep.check(gram.transpose() == gram && gram.rank() == dim, || format!("{tag}: Gram at {k:?}"));
        rep.check(weight_multiplicity(l, &k)? == dim, || format!("{tag}: Gram rank at {k:?}"));
    }
    Ok(())
}

fn a2_suite(rep: &mut SuiteReport) -> Result<()> {
    let gcm = Arc::new(validate_gcm(vec![vec![2, -1], vec![-1, 2]])?);
    for (a, b) in [(1u64, 0u64), (1, 1), (0, 1), (2, 0), (2, 1)] {
        let lambda = vec![a as i64, b as i64];
        let l = build_irr_trunc(gcm.clone(), lambda.clone(), 7)?;
        let mut dim = 0;
        for (k, _, _) in l.weights() {
            dim += weight_multiplicity(&l, &k)?;
        }
        let want = oracles::weyl_dim_a2(a, b) as usize;
        rep.check(l.is_complete() && dim == want, || format!("dim L({a},{b}) = {dim}, Weyl gives {want}"));
        let table = freudenthal_table(&gcm, &lambda, &[6, 6])?;
        for (k, m) in &table {
            rep.check(weight_multiplicity(&l, k)? == *m as usize, || format!("L({a},{b}) multiplicity at {k:?}"));
        }
        check_relations(rep, &l, &format!("L({a},{b})"))?;
    }
    for (i, j) in [(0usize, 1usize), (1, 0)] {
        let x = multibracket_rootvector(&gcm, &[i, j, j])?;
        let l = build_irr_trunc(gcm.clone(), vec![1, 1], 7)?;
        rep.check(x.acts_trivially(&l)?, || format!("[[e{i},e{j}],e{j}] acts nontrivially"));
    }
    Ok(())
}

fn affine_suite(rep: &mut SuiteReport) -> Result<()> {
    let gcm = Arc::new(validate_gcm(vec![vec![2, -2], vec![-2, 2]])?);
    let lambda = vec![1, 0];
    let l = build_irr_trunc(gcm.clone(), lambda.clone(), 5)?;
    let table = freudenthal_table(&gcm, &lambda, &[5, 5])?;
    for k0 in 0..=5u32 {
        for k1 in 0..=5 - k0 {
            let k = vec![k0, k1];
            let want = table.get(&k).copied().unwrap_or(0) as usize;
            let got = weight_multiplicity(&l, &k)?;
            rep.check(got == want && l.dim_at(&k)? == want, || format!("Λ0 at {k:?}: Gram rank {got}, Freudenthal {want}"));
        }
    }
    check_relations(rep, &l, "L(Λ0)")
}

fn cone_suite(rep: &mut SuiteReport, rng: &mut Rng) -> Result<()> {
    let gcm = Arc::new(validate_gcm(vec![vec![2]])?);
    for m in [1usize, 2] {
        let l = build_irr_trunc(gcm.clone(), vec![m as i64], m + 1)?;
        let oracle = oracles::Sl2Irrep::new(m);
        // f^j v_Λ = s_j b_j in the module's basis, and = j! v_j in the oracle's
        let mut s = Vec::new();
        let mut u = l.highest_vector();
        for j in 0..=m {
            s.push(u.component(&[j as u32]).map_or_else(Q::zero, |c| c[0].clone()));
            u = l.act(Chevalley::F(0), &u)?;
        }
        let to_oracle = |v: &KmVector| -> Vec<Q> {
            (0..=m)
                .map(|j| {
                    let c = v.component(&[j as u32]).map_or_else(Q::zero, |c| c[0].clone());
                    c * factorial(j as u32) / &s[j]
                })
                .collect()
        };
        let random_orbit_point = |rng: &mut Rng| -> Result<KmVector> {
            let n = rng.gen_range(1..=3);
            let fs = (0..n)
                .map(|_| match rng.gen_range(0..3) {
                    0 => Ok(KmFactor::exp_e(0, gen::small_q(rng))),
                    1 => Ok(KmFactor::exp_f(0, gen::small_q(rng))),
                    _ => KmFactor::torus(Coweight::Coroot(vec![1]), gen::nonzero_q(rng)),
                })
                .collect::<Result<Vec<_>>>()?;
            act_km_group(&l, &KmGroupWord::new(fs), &l.highest_vector())
        };
        for trial in 0..50 {
            let v = if trial % 2 == 0 {
                let mut v = KmVector::zero();
                for j in 0..=m {
                    v.add_comp(vec![j as u32], &[gen::small_int(rng, -2, 2)]);
                }
                v
            } else {
                let mut v = random_orbit_point(rng)?;
                if rng.gen_bool(0.5) {
                    let j = rng.gen_range(0..=m) as u32;
                    v = v.add(&KmVector::single(vec![j], vec![gen::nonzero_q(rng)]));
                }
                v
            };
            let got = kostant_cone_test(&l, &v)?;
            let want = oracle.cone_member(&to_oracle(&v));
            rep.check(got == want, || format!("m = {m}, trial {trial}: cone test {got}, oracle {want}"));
        }
        for trial in 0..20 {
            let v = random_orbit_point(rng)?;
            rep.check(kostant_cone_test(&l, &v)? && oracle.cone_member(&to_oracle(&v)), || {
                format!("m = {m}, orbit point {trial} rejected")
            });
        }
    }
    Ok(())
}

fn z_monoid_suite(rep: &mut SuiteReport, rng: &mut Rng) -> Result<()> {
    let alphabet = gen::torus_alphabet();
    for trial in 0..100 {
        let (lo, hi) = if rng.gen_bool(0.5) { (-5, 5) } else { (0, 6) };
        let n = rng.gen_range(1..=3);
        let reps: Vec<_> = (0..n)
            .map(|_| {
                let dim = rng.gen_range(1..=4);
                gen::diagonal_rep(rng, alphabet.clone(), dim, lo, hi)
            })
            .collect();
        let refs: Vec<_> = reps.iter().collect();
        let mz = z_monoid(Letter(0), &refs)?;
        let gens: BTreeSet<i64> = reps
            .iter()
            .flat_map(|r| r.matrix(Letter(0)).diagonal_entries())
            .map(|e| crate::rational::to_i64(&e).expect("integer"))
            .filter(|&e| e != 0)
            .collect();
        rep.check(mz.generators() == &gens, || format!("trial {trial}: generators {:?}", mz.generators()));
        rep.check(mz.contains(0), || format!("trial {trial}: 0 missing"));
        let members = mz.elements_in(-40, 40);
        let closed = members
            .iter()
            .all(|&a| members.iter().all(|&b| (a + b).abs() > 40 || mz.contains(a + b)));
        rep.check(closed, || format!("trial {trial}: not closed under addition"));
        let bfs = oracles::monoid_bfs(&gens, 200);
        for x in -30..=30 {
            rep.check(mz.contains(x) == bfs.contains(&x), || format!("trial {trial}: membership of {x} for {gens:?}"));
        }
    }
    Ok(())
}

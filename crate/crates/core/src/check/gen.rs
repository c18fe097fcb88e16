//! Seeded random inputs for the property suites.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::duals::{FiniteFunctional, MatrixCoefficient};
use crate::grp::{GroupWord, OneParamFactor};
use crate::linalg::Matrix;
use crate::rational::{q, q_frac, Q};
use crate::reps::{GeneratorKind, RepSpec};
use crate::words::{Alphabet, Letter, NcPoly, Word};

pub type Rng = ChaCha8Rng;

/// Independent stream `stream` of the generator seeded by `seed`.
pub fn rng(seed: u64, stream: u64) -> Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// `p/q` with `|p| ≤ 5`, `1 ≤ q ≤ 3`.
pub fn small_q(rng: &mut Rng) -> Q {
    q_frac(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

pub fn nonzero_q(rng: &mut Rng) -> Q {
    loop {
        let x = small_q(rng);
        if x != q(0) {
            return x;
        }
    }
}

pub fn small_int(rng: &mut Rng, lo: i64, hi: i64) -> Q {
    q(rng.gen_range(lo..=hi))
}

pub fn word_of_len(rng: &mut Rng, nletters: usize, len: usize) -> Word {
    Word::new((0..len).map(|_| Letter(rng.gen_range(0..nletters) as u16)).collect())
}

pub fn word(rng: &mut Rng, nletters: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    word_of_len(rng, nletters, len)
}

/// Up to `max_terms` terms; may come out zero.
pub fn poly(rng: &mut Rng, nletters: usize, max_terms: usize, max_len: usize) -> NcPoly {
    let n = rng.gen_range(1..=max_terms);
    NcPoly::from_terms((0..n).map(|_| (word(rng, nletters, max_len), nonzero_q(rng))).collect::<Vec<_>>())
}

pub fn nonzero_poly(rng: &mut Rng, nletters: usize, max_terms: usize, max_len: usize) -> NcPoly {
    loop {
        let p = poly(rng, nletters, max_terms, max_len);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn finite_functional(rng: &mut Rng, nletters: usize, max_terms: usize, max_len: usize) -> FiniteFunctional {
    FiniteFunctional::from_poly(poly(rng, nletters, max_terms, max_len))
}

pub fn vector(rng: &mut Rng, dim: usize) -> Vec<Q> {
    (0..dim).map(|_| small_int(rng, -3, 3)).collect()
}

/// Strictly upper-triangular matrices with small integer entries, written
/// in a shuffled basis so that they are not visibly triangular.
pub fn nilpotent_rep(rng: &mut Rng, alphabet: Arc<Alphabet>, dim: usize) -> RepSpec {
    let mut perm: Vec<usize> = (0..dim).collect();
    perm.shuffle(rng);
    let mats = alphabet
        .letters()
        .map(|_| {
            let mut m = Matrix::zeros(dim, dim);
            for i in 0..dim {
                for j in i + 1..dim {
                    if rng.gen_bool(0.6) {
                        m.set(perm[i], perm[j], small_int(rng, -2, 2));
                    }
                }
            }
            m
        })
        .collect();
    RepSpec::integrable(alphabet, dim, mats).expect("strictly triangular matrices are nilpotent")
}

pub fn matrix_coefficient(rng: &mut Rng, alphabet: Arc<Alphabet>, max_dim: usize) -> MatrixCoefficient {
    let dim = rng.gen_range(1..=max_dim);
    let r = nilpotent_rep(rng, alphabet, dim);
    let phi = vector(rng, dim);
    let v = vector(rng, dim);
    MatrixCoefficient::new(Arc::new(r), phi, v).expect("dimensions agree")
}

/// Up to `max_len` exp factors with small rational parameters.
pub fn group_word(rng: &mut Rng, nletters: usize, max_len: usize) -> GroupWord {
    let len = rng.gen_range(0..=max_len);
    GroupWord::new(
        (0..len)
            .map(|_| OneParamFactor::exp(Letter(rng.gen_range(0..nletters) as u16), small_q(rng)))
            .collect(),
    )
}

/// Exp factors, adjacent letters distinct, parameters nonzero.
pub fn reduced_group_word(rng: &mut Rng, nletters: usize, len: usize) -> GroupWord {
    assert!(nletters >= 2 || len <= 1);
    let mut factors: Vec<OneParamFactor> = Vec::with_capacity(len);
    for _ in 0..len {
        let l = loop {
            let l = Letter(rng.gen_range(0..nletters) as u16);
            if factors.last().is_none_or(|f| f.letter != l) {
                break l;
            }
        };
        factors.push(OneParamFactor::exp(l, nonzero_q(rng)));
    }
    GroupWord::new(factors)
}

/// A one-letter alphabet `h` of diagonalizable kind.
pub fn torus_alphabet() -> Arc<Alphabet> {
    Arc::new(Alphabet::new(vec!["h".into()], vec![GeneratorKind::DiagonalizableInteger]).expect("valid alphabet"))
}

/// Diagonal module with eigenvalues in `lo..=hi`.
pub fn diagonal_rep(rng: &mut Rng, alphabet: Arc<Alphabet>, dim: usize, lo: i64, hi: i64) -> RepSpec {
    let mats = alphabet
        .letters()
        .map(|_| Matrix::diagonal(&(0..dim).map(|_| small_int(rng, lo, hi)).collect::<Vec<_>>()))
        .collect();
    RepSpec::integrable(alphabet, dim, mats).expect("integer diagonal matrices")
}

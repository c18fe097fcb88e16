//! The free monoid on a finite alphabet and the enveloping algebra of the
//! free Lie algebra, realized as noncommutative polynomials with exact
//! rational coefficients.
//!
//! `U(g)` is the monoid algebra of words. Letters are primitive, so the
//! coproduct of a word is the sum over all ways to split its positions into
//! a subword and the complementary subword. The antipode reverses a word and
//! multiplies by `(-1)^length`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;
use crate::reps::GeneratorKind;

/// Words longer than this are rejected by [`NcPoly::coproduct`].
pub const MAX_COPRODUCT_LEN: usize = 30;

/// Index of a generator in its [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u16);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Letter names and their one-parameter kinds, fixed for a session.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
    kinds: Vec<GeneratorKind>,
}

impl Alphabet {
    pub fn new(names: Vec<String>, kinds: Vec<GeneratorKind>) -> Result<Self> {
        if names.len() != kinds.len() {
            return Err(Error::DimensionMismatch {
                expected: names.len(),
                got: kinds.len(),
            });
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n == "1" || n.contains('.') || n.contains(char::is_whitespace) {
                return Err(Error::parse("alphabet", format!("bad letter name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::parse("alphabet", format!("duplicate letter `{n}`")));
            }
        }
        if names.len() > u16::MAX as usize {
            return Err(Error::SizeCap {
                what: "alphabet",
                size: names.len(),
                cap: u16::MAX as usize,
            });
        }
        Ok(Alphabet { names, kinds })
    }

    /// Alphabet `e1, …, en` with every letter locally nilpotent.
    pub fn free(n: usize) -> Self {
        Self::nilpotent((1..=n).map(|i| format!("e{i}")).collect::<Vec<_>>())
            .expect("generated names are valid")
    }

    pub fn nilpotent<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let kinds = vec![GeneratorKind::LocallyNilpotent; names.len()];
        Self::new(names, kinds)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.names.len() as u16).map(Letter)
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn kind(&self, l: Letter) -> GeneratorKind {
        self.kinds[l.index()]
    }

    pub fn kinds(&self) -> &[GeneratorKind] {
        &self.kinds
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Letter(i as u16))
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    /// Parse `"e1.e2.e1"`; `"1"` and `""` are the empty word.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::empty());
        }
        s.split('.')
            .map(|n| self.letter(n.trim()))
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters()
            .iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(".")
    }

    /// All words of exactly `len` letters, in canonical order.
    pub fn words_of_len(&self, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .iter()
                .flat_map(|w| self.letters().map(move |l| w.concat(&Word::letter(l))))
                .collect();
        }
        out
    }

    /// All words of length at most `max_len`, in canonical order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        (0..=max_len).flat_map(|k| self.words_of_len(k)).collect()
    }
}

/// Element of the free monoid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    /// Word from raw letter indices.
    pub fn from_indices(ix: &[u16]) -> Self {
        Word(ix.iter().map(|&i| Letter(i)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn support(&self) -> std::collections::BTreeSet<Letter> {
        self.0.iter().copied().collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Subword at the positions set in `mask` (bit `i` is position `i`).
    pub fn subword(&self, mask: u64) -> Word {
        Word(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &l)| l)
                .collect(),
        )
    }

    pub fn strip_suffix(&self, suffix: &Word) -> Option<Word> {
        self.0
            .strip_suffix(suffix.0.as_slice())
            .map(|s| Word(s.to_vec()))
    }

    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0
            .strip_prefix(prefix.0.as_slice())
            .map(|s| Word(s.to_vec()))
    }

    /// All prefixes, from the empty word up to `self`.
    pub fn prefixes(&self) -> Vec<Word> {
        (0..=self.len()).map(|k| Word(self.0[..k].to_vec())).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| format!("e{}", l.0 + 1)).collect();
        f.write_str(&parts.join("."))
    }
}

/// Multiset of shuffles of `w1` and `w2`, as word ↦ multiplicity.
///
/// One entry per pair of complementary position sets `(I1, I2)` with
/// `|I1| = len(w1)`; the word at `I1` reads `w1` and at `I2` reads `w2`.
pub fn shuffles(w1: &Word, w2: &Word) -> BTreeMap<Word, u64> {
    fn go(a: &[Letter], b: &[Letter], prefix: &mut Vec<Letter>, out: &mut BTreeMap<Word, u64>) {
        match (a.split_first(), b.split_first()) {
            (None, _) | (_, None) => {
                let mut w = prefix.clone();
                w.extend_from_slice(a);
                w.extend_from_slice(b);
                *out.entry(Word(w)).or_insert(0) += 1;
            }
            (Some((x, ar)), Some((y, br))) => {
                prefix.push(*x);
                go(ar, b, prefix, out);
                prefix.pop();
                prefix.push(*y);
                go(a, br, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = BTreeMap::new();
    go(&w1.0, &w2.0, &mut Vec::new(), &mut out);
    out
}

/// Element of `U(g)`: a finite rational combination of words in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, Q>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, Q::one())
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(Word::letter(l))
    }

    pub fn term(w: Word, c: Q) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Q)>) -> Self {
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    /// Coefficient of the empty word.
    pub fn counit(&self) -> Q {
        self.coeff(&Word::empty())
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn support(&self) -> std::collections::BTreeSet<Letter> {
        self.terms.keys().flat_map(|w| w.letters().iter().copied()).collect()
    }

    pub fn scale(&self, c: &Q) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// `Δ(w) = Σ_I w|_I ⊗ w|_{I^c}` over position subsets, extended linearly.
    pub fn coproduct(&self) -> Result<TensorNcPoly> {
        let mut out = TensorNcPoly::zero();
        for (w, c) in &self.terms {
            let l = w.len();
            if l > MAX_COPRODUCT_LEN {
                return Err(Error::SizeCap {
                    what: "coproduct word length",
                    size: l,
                    cap: MAX_COPRODUCT_LEN,
                });
            }
            let full = (1u64 << l) - 1;
            for mask in 0..=full {
                out.add_term(w.subword(mask), w.subword(full ^ mask), c.clone());
            }
        }
        Ok(out)
    }

    /// `S(w) = (-1)^len(w) reverse(w)`.
    pub fn antipode(&self) -> NcPoly {
        NcPoly::from_terms(self.terms.iter().map(|(w, c)| {
            let c = if w.len() % 2 == 1 { -c.clone() } else { c.clone() };
            (w.reversed(), c)
        }))
    }

    pub fn commutator(&self, other: &NcPoly) -> NcPoly {
        &self.mul(other) - &other.mul(self)
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        self.scale(&-Q::one())
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        NcPoly::mul(self, rhs)
    }
}

/// Element of `U(g) ⊗ U(g)` in the word basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorNcPoly {
    terms: BTreeMap<(Word, Word), Q>,
}

impl TensorNcPoly {
    pub fn zero() -> Self {
        TensorNcPoly::default()
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &Word, b: &Word) -> Q {
        self.terms
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    /// Componentwise product `(a⊗b)(c⊗d) = ac ⊗ bd`.
    pub fn mul(&self, other: &TensorNcPoly) -> TensorNcPoly {
        let mut out = TensorNcPoly::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                out.add_term(a.concat(c), b.concat(d), x * y);
            }
        }
        out
    }

    pub fn add(&self, other: &TensorNcPoly) -> TensorNcPoly {
        let mut out = self.clone();
        for ((a, b), x) in &other.terms {
            out.add_term(a.clone(), b.clone(), x.clone());
        }
        out
    }

    /// Apply `f ⊗ g` then multiply: `Σ c f(a) g(b)`.
    pub fn contract<F, G>(&self, mut f: F, mut g: G) -> Q
    where
        F: FnMut(&Word) -> Q,
        G: FnMut(&Word) -> Q,
    {
        let mut acc = Q::zero();
        for ((a, b), c) in &self.terms {
            let fa = f(a);
            if fa.is_zero() {
                continue;
            }
            acc += c * fa * g(b);
        }
        acc
    }

    /// `m ∘ (S ⊗ id)`.
    pub fn antipode_left_multiply(&self) -> NcPoly {
        let mut out = NcPoly::zero();
        for ((a, b), c) in &self.terms {
            out = &out + &NcPoly::word(a.clone()).antipode().mul(&NcPoly::term(b.clone(), c.clone()));
        }
        out
    }

    /// `b⊗1 + 1⊗b`, the coproduct of a primitive element.
    pub fn primitive(b: &NcPoly) -> TensorNcPoly {
        let mut out = TensorNcPoly::zero();
        for (w, c) in b.terms() {
            out.add_term(w.clone(), Word::empty(), c.clone());
            out.add_term(Word::empty(), w.clone(), c.clone());
        }
        out
    }
}

/// Left-nested bracket `[⋯[[l1, l2], l3], …, lp]` expanded in `U(g)`.
pub fn multibracket(seq: &[Letter]) -> Result<NcPoly> {
    let (first, rest) = seq
        .split_first()
        .ok_or_else(|| Error::Invalid("multibracket needs at least one letter".into()))?;
    Ok(rest.iter().fold(NcPoly::letter(*first), |acc, &l| {
        acc.commutator(&NcPoly::letter(l))
    }))
}

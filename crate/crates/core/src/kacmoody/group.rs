use std::sync::Arc;

use num_traits::Zero;

use super::gcm::Gcm;
use super::irr::{Chevalley, IrrTrunc, KmVector};
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::rational::{pow_i, q, Q};
use crate::words::{multibracket, Letter, NcPoly};

/// `[⋯[e_{i1}, e_{i2}], …, e_{ip}]`, kept as a polynomial in the `e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootVector {
    seq: Vec<usize>,
    poly: NcPoly,
}

pub fn multibracket_rootvector(gcm: &Gcm, seq: &[usize]) -> Result<RootVector> {
    if seq.is_empty() {
        return Err(Error::Invalid("empty bracket sequence".into()));
    }
    if let Some(&i) = seq.iter().find(|&&i| i >= gcm.rank()) {
        return Err(Error::Invalid(format!("simple root index {i} out of range for rank {}", gcm.rank())));
    }
    let letters: Vec<Letter> = seq.iter().map(|&i| Letter(i as u16)).collect();
    Ok(RootVector {
        seq: seq.to_vec(),
        poly: multibracket(&letters)?,
    })
}

impl RootVector {
    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn poly(&self) -> &NcPoly {
        &self.poly
    }

    /// The bracket vanishes already in the free algebra, e.g. `[e_1, e_1]`.
    pub fn is_formally_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Expand through the `e_i` action, first letter outermost.
    pub fn apply(&self, m: &IrrTrunc, v: &KmVector) -> Result<KmVector> {
        let mut out = KmVector::zero();
        for (w, c) in self.poly.terms() {
            let mut cur = v.clone();
            for l in w.letters().iter().rev() {
                cur = m.act(Chevalley::E(l.index()), &cur)?;
                if cur.is_zero() {
                    break;
                }
            }
            out = out.add(&cur.scale(c));
        }
        Ok(out)
    }

    /// True when the vector kills every basis vector built so far.
    pub fn acts_trivially(&self, m: &IrrTrunc) -> Result<bool> {
        for b in m.basis() {
            if !self.apply(m, &b)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// An integral coweight `h` for torus factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coweight {
    /// `Σ c_i h_i`.
    Coroot(Vec<i64>),
    /// The `i`-th extra coweight of the Cartan datum, taken to vanish on `Λ`.
    Extra(usize),
}

/// Generator exponentiated by an `exp` factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExpGenerator {
    E(usize),
    F(usize),
    Root(RootVector),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KmFactor {
    Exp { gen: ExpGenerator, t: Q },
    Torus { h: Coweight, s: Q },
}

impl KmFactor {
    pub fn exp_e(i: usize, t: Q) -> Self {
        KmFactor::Exp { gen: ExpGenerator::E(i), t }
    }

    pub fn exp_f(i: usize, t: Q) -> Self {
        KmFactor::Exp { gen: ExpGenerator::F(i), t }
    }

    pub fn exp_root(x: RootVector, t: Q) -> Self {
        KmFactor::Exp { gen: ExpGenerator::Root(x), t }
    }

    pub fn torus(h: Coweight, s: Q) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::ZeroTorusParam);
        }
        Ok(KmFactor::Torus { h, s })
    }
}

/// Product of factors, leftmost acting last.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KmGroupWord {
    pub factors: Vec<KmFactor>,
}

impl KmGroupWord {
    pub fn new(factors: Vec<KmFactor>) -> Self {
        KmGroupWord { factors }
    }

    pub fn identity() -> Self {
        KmGroupWord::default()
    }

    pub fn then(&self, other: &KmGroupWord) -> KmGroupWord {
        let mut f = self.factors.clone();
        f.extend(other.factors.iter().cloned());
        KmGroupWord { factors: f }
    }
}

fn coweight_value(m: &IrrTrunc, h: &Coweight, k: &[u32]) -> Result<i64> {
    match h {
        Coweight::Coroot(c) => {
            if c.len() != m.rank() {
                return Err(Error::DimensionMismatch {
                    expected: m.rank(),
                    got: c.len(),
                });
            }
            Ok(m.weight(k).iter().zip(c).map(|(a, b)| a * b).sum())
        }
        Coweight::Extra(i) => {
            let cw = m
                .gcm()
                .coweights()
                .get(*i)
                .ok_or_else(|| Error::Invalid(format!("no extra coweight with index {i}")))?;
            Ok(m.coweight_value(k, cw, 0))
        }
    }
}

/// A single factor on a vector. `exp` of lowering operators extends the
/// truncation as needed, up to its depth cap.
pub fn exp_action(m: &IrrTrunc, factor: &KmFactor, v: &KmVector) -> Result<KmVector> {
    match factor {
        KmFactor::Torus { h, s } => {
            if s.is_zero() {
                return Err(Error::ZeroTorusParam);
            }
            let mut out = KmVector::zero();
            for (k, x) in v.comps() {
                let c = pow_i(s, coweight_value(m, h, k)?);
                let y: Vec<Q> = x.iter().map(|a| a * &c).collect();
                out.add_comp(k.clone(), &y);
            }
            Ok(out)
        }
        KmFactor::Exp { gen, t } => {
            let mut acc = v.clone();
            let mut term = v.clone();
            let mut k = 1i64;
            loop {
                term = match gen {
                    ExpGenerator::E(i) => m.act(Chevalley::E(*i), &term)?,
                    ExpGenerator::F(i) => m.act_extending(Chevalley::F(*i), &term)?,
                    ExpGenerator::Root(x) => x.apply(m, &term)?,
                };
                if term.is_zero() {
                    return Ok(acc);
                }
                term = term.scale(&(t / q(k)));
                acc = acc.add(&term);
                k += 1;
            }
        }
    }
}

pub fn act_km_group(m: &IrrTrunc, g: &KmGroupWord, v: &KmVector) -> Result<KmVector> {
    let mut cur = v.clone();
    for f in g.factors.iter().rev() {
        cur = exp_action(m, f, &cur)?;
    }
    Ok(cur)
}

/// `θ_Λ(g) = φ_Λ(g·v_Λ)`.
pub fn theta_eval(m: &IrrTrunc, g: &KmGroupWord) -> Result<Q> {
    let out = act_km_group(m, g, &m.highest_vector())?;
    Ok(out
        .component(&vec![0; m.rank()])
        .map_or_else(Q::zero, |c| c[0].clone()))
}

/// Matrix coefficient `g ↦ φ(g·v)` on a truncated `L(Λ)`.
#[derive(Clone, Debug)]
pub struct KmCoefficient {
    pub module: Arc<IrrTrunc>,
    pub phi: KmVector,
    pub v: KmVector,
}

impl KmCoefficient {
    pub fn eval(&self, g: &KmGroupWord) -> Result<Q> {
        Ok(self.phi.pair(&act_km_group(&self.module, g, &self.v)?))
    }
}

/// Rank of `[f_j(g_k)]`.
pub fn peter_weyl_rank(coeffs: &[KmCoefficient], samples: &[KmGroupWord]) -> Result<usize> {
    let rows: Vec<Vec<Q>> = coeffs
        .iter()
        .map(|c| samples.iter().map(|g| c.eval(g)).collect::<Result<Vec<Q>>>())
        .collect::<Result<_>>()?;
    Ok(rank(&rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kacmoody::gcm::validate_gcm;
    use crate::kacmoody::irr::build_irr_trunc;
    use crate::rational::q_frac;

    fn sl2(m: i64) -> IrrTrunc {
        build_irr_trunc(Arc::new(validate_gcm(vec![vec![2]]).unwrap()), vec![m], m as usize + 1).unwrap()
    }

    #[test]
    fn exp_examples() {
        let l = sl2(1);
        let v = l.highest_vector();
        let t = q_frac(3, 7);
        let out = exp_action(&l, &KmFactor::exp_f(0, t.clone()), &v).unwrap();
        let fv = l.act(Chevalley::F(0), &v).unwrap();
        assert_eq!(out, v.add(&fv.scale(&t)));
        let tor = KmFactor::torus(Coweight::Coroot(vec![1]), q(5)).unwrap();
        assert_eq!(exp_action(&l, &tor, &fv).unwrap(), fv.scale(&q_frac(1, 5)));
        assert_eq!(exp_action(&l, &KmFactor::exp_e(0, q(0)), &fv).unwrap(), fv);
        assert!(KmFactor::torus(Coweight::Coroot(vec![1]), q(0)).is_err());
    }

    #[test]
    fn theta_examples() {
        for m in 0..=4 {
            let l = sl2(m);
            assert_eq!(theta_eval(&l, &KmGroupWord::identity()).unwrap(), q(1));
            let (a, b) = (q_frac(2, 3), q(-4));
            let g = KmGroupWord::new(vec![KmFactor::exp_e(0, b.clone()), KmFactor::exp_f(0, a.clone())]);
            assert_eq!(theta_eval(&l, &g).unwrap(), pow_i(&(q(1) + &a * &b), m));
            let g = KmGroupWord::new(vec![KmFactor::exp_f(0, a)]);
            assert_eq!(theta_eval(&l, &g).unwrap(), q(1));
        }
    }

    #[test]
    fn root_vectors() {
        let a2 = Arc::new(validate_gcm(vec![vec![2, -1], vec![-1, 2]]).unwrap());
        let l = build_irr_trunc(a2.clone(), vec![1, 1], 6).unwrap();
        let x12 = multibracket_rootvector(&a2, &[0, 1]).unwrap();
        assert!(!x12.acts_trivially(&l).unwrap());
        let x11 = multibracket_rootvector(&a2, &[0, 0]).unwrap();
        assert!(x11.is_formally_zero());
        assert!(x11.acts_trivially(&l).unwrap());
        // Serre: [[e1,e2],e2] vanishes in g though not in the free algebra
        let s = multibracket_rootvector(&a2, &[0, 1, 1]).unwrap();
        assert!(!s.is_formally_zero());
        assert!(s.acts_trivially(&l).unwrap());
        let x1 = multibracket_rootvector(&a2, &[0]).unwrap();
        let v = l.basis_vector(&[1, 0], 0).unwrap();
        assert_eq!(x1.apply(&l, &v).unwrap(), l.act(Chevalley::E(0), &v).unwrap());
    }

    #[test]
    fn peter_weyl_small() {
        let l1 = Arc::new(sl2(1));
        let v = l1.highest_vector();
        let c = KmCoefficient {
            module: l1.clone(),
            phi: v.clone(),
            v: v.clone(),
        };
        let samples: Vec<KmGroupWord> = (1..5)
            .map(|i| KmGroupWord::new(vec![KmFactor::exp_e(0, q(i)), KmFactor::exp_f(0, q(i + 1))]))
            .collect();
        assert_eq!(peter_weyl_rank(std::slice::from_ref(&c), &samples).unwrap(), 1);
        assert_eq!(peter_weyl_rank(&[c.clone(), c], &samples).unwrap(), 1);
    }
}

//! JSON forms of the library's values.
//!
//! Rationals are `"p/q"` strings, words are `.`-joined letter names with
//! `"1"` for the empty word, and polynomials are arrays of
//! `{word, coeff}` in canonical order.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::duals::{FiniteFunctional, Functional, MatrixCoefficient, RhoExpansion};
use crate::error::{Error, Result};
use crate::grp::{GroupWord, OneParamFactor};
use crate::kacmoody::{Coweight, Gcm, KmFactor, KmGroupWord, KmVector};
use crate::linalg::Matrix;
use crate::rational::{serde_q, serde_q_mat, serde_q_vec, Q};
use crate::reps::{GeneratorKind, RepSpec};
use crate::words::{Alphabet, NcPoly, TensorNcPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub word: String,
    #[serde(with = "serde_q")]
    pub coeff: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorTermJson {
    pub left: String,
    pub right: String,
    #[serde(with = "serde_q")]
    pub coeff: Q,
}

pub fn poly_to_json(a: &Alphabet, p: &NcPoly) -> Vec<TermJson> {
    p.terms()
        .map(|(w, c)| TermJson {
            word: a.format_word(w),
            coeff: c.clone(),
        })
        .collect()
}

pub fn poly_from_json(a: &Alphabet, terms: &[TermJson]) -> Result<NcPoly> {
    let mut p = NcPoly::zero();
    for t in terms {
        p.add_term(a.parse_word(&t.word)?, t.coeff.clone());
    }
    Ok(p)
}

pub fn tensor_to_json(a: &Alphabet, t: &TensorNcPoly) -> Vec<TensorTermJson> {
    t.terms()
        .map(|((l, r), c)| TensorTermJson {
            left: a.format_word(l),
            right: a.format_word(r),
            coeff: c.clone(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LetterJson {
    pub name: String,
    pub kind: GeneratorKind,
    #[serde(with = "serde_q_mat")]
    pub matrix: Vec<Vec<Q>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepJson {
    pub dim: usize,
    pub letters: Vec<LetterJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

pub fn rep_to_json(r: &RepSpec) -> RepJson {
    let a = r.alphabet();
    RepJson {
        dim: r.dim(),
        letters: a
            .letters()
            .map(|l| LetterJson {
                name: a.name(l).to_string(),
                kind: a.kind(l),
                matrix: r.matrix(l).to_rows(),
            })
            .collect(),
        labels: r.labels().map(|l| l.to_vec()),
    }
}

/// Parse and validate a module; non-integrable input is rejected.
pub fn rep_from_json(j: &RepJson) -> Result<RepSpec> {
    let names = j.letters.iter().map(|l| l.name.clone()).collect();
    let kinds = j.letters.iter().map(|l| l.kind).collect();
    let alphabet = Arc::new(Alphabet::new(names, kinds)?);
    let mut mats = Vec::with_capacity(j.letters.len());
    for l in &j.letters {
        let m = if l.matrix.is_empty() && j.dim == 0 {
            Matrix::zeros(0, 0)
        } else {
            Matrix::from_rows(l.matrix.clone()).map_err(|e| Error::parse(format!("letters.{}.matrix", l.name), e.to_string()))?
        };
        mats.push(m);
    }
    let r = RepSpec::integrable(alphabet, j.dim, mats)?;
    match &j.labels {
        Some(labels) => r.with_labels(labels.clone()),
        None => Ok(r),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum FunctionalJson {
    #[serde(rename = "finite")]
    Finite { terms: Vec<TermJson> },
    #[serde(rename = "matrix-coefficient")]
    Matrix {
        rep: RepJson,
        #[serde(with = "serde_q_vec")]
        phi: Vec<Q>,
        #[serde(with = "serde_q_vec")]
        v: Vec<Q>,
    },
}

pub fn functional_to_json(a: &Alphabet, h: &Functional) -> FunctionalJson {
    match h {
        Functional::Finite(f) => FunctionalJson::Finite {
            terms: poly_to_json(a, f.as_poly()),
        },
        Functional::Matrix(m) => FunctionalJson::Matrix {
            rep: rep_to_json(m.rep()),
            phi: m.covector().to_vec(),
            v: m.vector().to_vec(),
        },
    }
}

/// Finite functionals are read against `a`; matrix coefficients carry their own alphabet.
pub fn functional_from_json(a: &Alphabet, j: &FunctionalJson) -> Result<Functional> {
    Ok(match j {
        FunctionalJson::Finite { terms } => Functional::Finite(FiniteFunctional::from_poly(poly_from_json(a, terms)?)),
        FunctionalJson::Matrix { rep, phi, v } => {
            let r = rep_from_json(rep)?;
            Functional::Matrix(MatrixCoefficient::new(Arc::new(r), phi.clone(), v.clone())?)
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RhoCoeffJson {
    pub k: Vec<i64>,
    #[serde(with = "serde_q")]
    pub c: Q,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RhoExpansionJson {
    pub tuple: Vec<String>,
    pub coeffs: Vec<RhoCoeffJson>,
}

pub fn rho_to_json(a: &Alphabet, e: &RhoExpansion) -> RhoExpansionJson {
    RhoExpansionJson {
        tuple: e.tuple.iter().map(|&l| a.name(l).to_string()).collect(),
        coeffs: e
            .coeffs
            .iter()
            .map(|(k, c)| RhoCoeffJson { k: k.clone(), c: c.clone() })
            .collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorKindJson {
    #[serde(rename = "exp")]
    Exp,
    #[serde(rename = "torus")]
    Torus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorJson {
    pub letter: String,
    pub kind: FactorKindJson,
    #[serde(with = "serde_q")]
    pub param: Q,
}

pub fn group_word_to_json(a: &Alphabet, g: &GroupWord) -> Vec<FactorJson> {
    g.factors
        .iter()
        .map(|f| FactorJson {
            letter: a.name(f.letter).to_string(),
            kind: match f.kind {
                GeneratorKind::LocallyNilpotent => FactorKindJson::Exp,
                GeneratorKind::DiagonalizableInteger => FactorKindJson::Torus,
            },
            param: f.param.clone(),
        })
        .collect()
}

pub fn group_word_from_json(a: &Alphabet, fs: &[FactorJson]) -> Result<GroupWord> {
    let mut out = Vec::with_capacity(fs.len());
    for f in fs {
        let l = a.letter(&f.letter)?;
        out.push(match f.kind {
            FactorKindJson::Exp => OneParamFactor::exp(l, f.param.clone()),
            FactorKindJson::Torus => OneParamFactor::torus(l, f.param.clone())?,
        });
    }
    Ok(GroupWord::new(out))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GcmJson {
    pub matrix: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coweights: Option<Vec<Vec<i64>>>,
}

pub fn gcm_from_json(j: &GcmJson) -> Result<Gcm> {
    let g = Gcm::new(j.matrix.clone())?;
    match &j.coweights {
        Some(c) => g.with_coweights(c.clone()),
        None => Ok(g),
    }
}

pub fn gcm_to_json(g: &Gcm) -> GcmJson {
    GcmJson {
        matrix: g.matrix().to_vec(),
        coweights: (!g.coweights().is_empty()).then(|| g.coweights().to_vec()),
    }
}

/// Kac-Moody factor; simple-root indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum KmFactorJson {
    #[serde(rename = "exp-e")]
    ExpE {
        index: usize,
        #[serde(with = "serde_q")]
        param: Q,
    },
    #[serde(rename = "exp-f")]
    ExpF {
        index: usize,
        #[serde(with = "serde_q")]
        param: Q,
    },
    #[serde(rename = "exp-root")]
    ExpRoot {
        seq: Vec<usize>,
        #[serde(with = "serde_q")]
        param: Q,
    },
    #[serde(rename = "torus")]
    Torus {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coroot: Option<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        extra: Option<usize>,
        #[serde(with = "serde_q")]
        param: Q,
    },
}

fn zero_based(i: usize, field: &str) -> Result<usize> {
    i.checked_sub(1)
        .ok_or_else(|| Error::parse(field, "simple-root indices start at 1"))
}

pub fn km_group_from_json(g: &Gcm, fs: &[KmFactorJson]) -> Result<KmGroupWord> {
    let mut out = Vec::with_capacity(fs.len());
    for f in fs {
        out.push(match f {
            KmFactorJson::ExpE { index, param } => KmFactor::exp_e(zero_based(*index, "index")?, param.clone()),
            KmFactorJson::ExpF { index, param } => KmFactor::exp_f(zero_based(*index, "index")?, param.clone()),
            KmFactorJson::ExpRoot { seq, param } => {
                let s: Vec<usize> = seq.iter().map(|&i| zero_based(i, "seq")).collect::<Result<_>>()?;
                KmFactor::exp_root(crate::kacmoody::multibracket_rootvector(g, &s)?, param.clone())
            }
            KmFactorJson::Torus { coroot, extra, param } => {
                let h = match (coroot, extra) {
                    (Some(c), None) => Coweight::Coroot(c.clone()),
                    (None, Some(i)) => Coweight::Extra(*i),
                    _ => return Err(Error::parse("torus", "give exactly one of `coroot` or `extra`")),
                };
                KmFactor::torus(h, param.clone())?
            }
        });
    }
    Ok(KmGroupWord::new(out))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KmComponentJson {
    pub depth: Vec<u32>,
    #[serde(with = "serde_q_vec")]
    pub coords: Vec<Q>,
}

pub fn km_vector_to_json(v: &KmVector) -> Vec<KmComponentJson> {
    v.comps()
        .iter()
        .map(|(k, c)| KmComponentJson {
            depth: k.clone(),
            coords: c.clone(),
        })
        .collect()
}

pub fn km_vector_from_json(cs: &[KmComponentJson]) -> KmVector {
    let mut v = KmVector::zero();
    for c in cs {
        v.add_comp(c.depth.clone(), &c.coords);
    }
    v
}

/// Parse a JSON value, naming the expected schema on failure.
pub fn from_json_str<T: serde::de::DeserializeOwned>(what: &str, s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::parse(what, e.to_string()))
}

/// Render a rational map of words for display.
pub fn word_values(a: &Alphabet, vals: &BTreeMap<crate::words::Word, Q>) -> Vec<TermJson> {
    vals.iter()
        .map(|(w, c)| TermJson {
            word: a.format_word(w),
            coeff: c.clone(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duals::phi;
    use crate::rational::{q, q_frac};
    use crate::reps::make_chain;
    use crate::words::{Letter, Word};

    fn roundtrip<T: Serialize + serde::de::DeserializeOwned + PartialEq + std::fmt::Debug>(x: &T) {
        let s = serde_json::to_string(x).unwrap();
        let y: T = serde_json::from_str(&s).unwrap();
        assert_eq!(&y, x);
    }

    #[test]
    fn poly_json() {
        let a = Alphabet::free(2);
        let p = NcPoly::from_terms([(Word::from_indices(&[0, 1]), q_frac(-3, 2)), (Word::empty(), q(1))]);
        let j = poly_to_json(&a, &p);
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"[{"word":"1","coeff":"1"},{"word":"e1.e2","coeff":"-3/2"}]"#
        );
        assert_eq!(poly_from_json(&a, &j).unwrap(), p);
        roundtrip(&j);
    }

    #[test]
    fn rep_and_functional_json() {
        let a = Arc::new(Alphabet::free(2));
        let r = make_chain(a.clone(), &[Letter(0), Letter(1)]).unwrap();
        let j = rep_to_json(&r);
        roundtrip(&j);
        assert_eq!(rep_from_json(&j).unwrap(), r);
        let m: Functional = MatrixCoefficient::new(Arc::new(r), vec![q(1); 3], vec![q(1), q(0), q(0)])
            .unwrap()
            .into();
        let fj = functional_to_json(&a, &m);
        roundtrip(&fj);
        assert_eq!(functional_from_json(&a, &fj).unwrap(), m);
        let f: Functional = phi(Word::from_indices(&[1])).into();
        let fj = functional_to_json(&a, &f);
        assert!(serde_json::to_string(&fj).unwrap().starts_with(r#"{"kind":"finite""#));
        assert_eq!(functional_from_json(&a, &fj).unwrap(), f);
    }

    #[test]
    fn rejects_bad_input() {
        let bad = r#"{"dim":1,"letters":[{"name":"e1","kind":"locally-nilpotent","matrix":[["1"]]}]}"#;
        let j: RepJson = from_json_str("rep", bad).unwrap();
        assert!(matches!(rep_from_json(&j), Err(Error::NotIntegrable(_))));
        let err = from_json_str::<RepJson>("rep", r#"{"letters":[]}"#).unwrap_err();
        assert!(err.to_string().contains("dim"));
    }

    #[test]
    fn group_json() {
        let a = Alphabet::free(2);
        let g = GroupWord::exps(&[Letter(1), Letter(0)], &[q(2), q_frac(1, 3)]);
        let j = group_word_to_json(&a, &g);
        roundtrip(&j);
        assert_eq!(group_word_from_json(&a, &j).unwrap(), g);
        let s = r#"[{"kind":"exp-e","index":1,"param":"2"},{"kind":"torus","coroot":[1],"param":"3"}]"#;
        let fs: Vec<KmFactorJson> = from_json_str("km group", s).unwrap();
        let gcm = Gcm::new(vec![vec![2]]).unwrap();
        assert_eq!(km_group_from_json(&gcm, &fs).unwrap().factors.len(), 2);
        let bad: Vec<KmFactorJson> = from_json_str("km group", r#"[{"kind":"exp-f","index":0,"param":"1"}]"#).unwrap();
        assert!(km_group_from_json(&gcm, &bad).is_err());
    }
}

//! Weight multiplicities by Freudenthal's recursion, independent of the
//! module construction. Root multiplicities come from Peterson's recursion,
//! so the oracle needs only the Cartan matrix and its symmetrizer.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::gcm::Gcm;
use crate::error::{Error, Result};
use crate::rational::{q, to_i64, Q};

/// All `β ∈ ℕ^n` with `β ≤ bound` componentwise, in graded order.
fn box_points(bound: &[u32]) -> Vec<Vec<u32>> {
    let mut pts = vec![Vec::new()];
    for &b in bound {
        pts = pts
            .into_iter()
            .flat_map(|p| {
                (0..=b).map(move |x| {
                    let mut p = p.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    pts.sort_by_key(|p| (p.iter().sum::<u32>(), p.clone()));
    pts
}

fn as_i64(b: &[u32]) -> Vec<i64> {
    b.iter().map(|&x| x as i64).collect()
}

/// Multiplicities of positive roots `α ≤ bound`, via
/// `(β|β−2ρ) c_β = Σ_{β'+β''=β} (β'|β'') c_{β'} c_{β''}` and
/// `c_β = Σ_{n≥1} mult(β/n)/n`.
pub fn root_multiplicities(gcm: &Gcm, bound: &[u32]) -> Result<BTreeMap<Vec<u32>, u64>> {
    let n = gcm.rank();
    let d = gcm.symmetrizer();
    let pts = box_points(bound);
    let mut c: BTreeMap<Vec<u32>, Q> = BTreeMap::new();
    let mut mult: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for beta in pts.iter().filter(|b| b.iter().any(|&x| x > 0)) {
        let bi = as_i64(beta);
        // Σ_{n≥2} mult(β/n)/n, the part of c_β coming from proper divisors
        let g = beta.iter().fold(0u32, |g, &x| num_integer::gcd(g, x));
        let mut from_divisors = Q::zero();
        for k in (2..=g).filter(|k| g % k == 0) {
            let sub: Vec<u32> = beta.iter().map(|&x| x / k).collect();
            if let Some(&m) = mult.get(&sub) {
                from_divisors += q(m as i64) / q(k as i64);
            }
        }
        if bi.iter().sum::<i64>() == 1 {
            c.insert(beta.clone(), Q::one());
            mult.insert(beta.clone(), 1);
            continue;
        }
        let rho_term: i64 = (0..n).map(|i| 2 * bi[i] * d[i]).sum();
        let coeff = gcm.form(&bi, &bi) - rho_term;
        let mut rhs = Q::zero();
        for (b1, c1) in &c {
            if b1.iter().zip(beta).any(|(x, y)| x > y) {
                continue;
            }
            let b2: Vec<u32> = beta.iter().zip(b1).map(|(y, x)| y - x).collect();
            if b2.iter().all(|&x| x == 0) {
                continue;
            }
            if let Some(c2) = c.get(&b2) {
                rhs += c1 * c2 * q(gcm.form(&as_i64(b1), &as_i64(&b2)));
            }
        }
        let cb = if coeff == 0 {
            // only non-roots reach here, and the recursion must balance
            if !rhs.is_zero() {
                return Err(Error::Invalid(format!("Peterson recursion degenerate at {beta:?}")));
            }
            from_divisors
        } else {
            let cb = rhs / q(coeff);
            let m = &cb - &from_divisors;
            let m = to_i64(&m).filter(|&x| x >= 0).ok_or_else(|| {
                Error::Invalid(format!("non-integral root multiplicity at {beta:?}"))
            })?;
            if m > 0 {
                mult.insert(beta.clone(), m as u64);
            }
            cb
        };
        if !cb.is_zero() {
            c.insert(beta.clone(), cb);
        }
    }
    Ok(mult)
}

/// `dim L(Λ)_{Λ−β}` for every `β ≤ bound`, by
/// `(|Λ+ρ|² − |λ+ρ|²) m_λ = 2 Σ_{α>0} mult(α) Σ_{j≥1} (λ+jα|α) m_{λ+jα}`.
pub fn freudenthal_table(gcm: &Gcm, lambda: &[i64], bound: &[u32]) -> Result<BTreeMap<Vec<u32>, u64>> {
    let n = gcm.rank();
    let d = gcm.symmetrizer();
    if lambda.iter().any(|&x| x < 0) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    let roots = root_multiplicities(gcm, bound)?;
    let mut m: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for beta in box_points(bound) {
        let bi = as_i64(&beta);
        if bi.iter().all(|&x| x == 0) {
            m.insert(beta, 1);
            continue;
        }
        // 2(Λ+ρ|β) − (β|β)
        let lam_rho: i64 = (0..n).map(|i| bi[i] * d[i] * (lambda[i] + 1)).sum();
        let coeff = 2 * lam_rho - gcm.form(&bi, &bi);
        let mut rhs: i64 = 0;
        for (alpha, &mult) in &roots {
            let ai = as_i64(alpha);
            let mut j = 1i64;
            loop {
                // λ + jα = Λ − (β − jα)
                let rest: Vec<i64> = bi.iter().zip(&ai).map(|(b, a)| b - j * a).collect();
                if rest.iter().any(|&x| x < 0) {
                    break;
                }
                let rest_u: Vec<u32> = rest.iter().map(|&x| x as u32).collect();
                if let Some(&mr) = m.get(&rest_u) {
                    // (λ+jα|α) = (Λ|α) − (β−jα|α)
                    let pairing = gcm.weight_form(lambda, &ai) - gcm.form(&rest, &ai);
                    rhs += 2 * mult as i64 * pairing * mr as i64;
                }
                j += 1;
            }
        }
        if coeff == 0 {
            if rhs != 0 {
                return Err(Error::Invalid(format!("Freudenthal recursion degenerate at {beta:?}")));
            }
            continue;
        }
        if rhs % coeff != 0 || rhs / coeff < 0 {
            return Err(Error::Invalid(format!("non-integral multiplicity at {beta:?}")));
        }
        let v = (rhs / coeff) as u64;
        if v > 0 {
            m.insert(beta, v);
        }
    }
    Ok(m)
}

/// `dim L(Λ)_{Λ−β}` for a single `β`.
pub fn freudenthal_oracle(gcm: &Gcm, lambda: &[i64], beta: &[u32]) -> Result<u64> {
    Ok(freudenthal_table(gcm, lambda, beta)?.get(beta).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kacmoody::gcm::validate_gcm;

    #[test]
    fn finite_root_systems() {
        let a2 = validate_gcm(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        let r = root_multiplicities(&a2, &[3, 3]).unwrap();
        assert_eq!(r.keys().cloned().collect::<Vec<_>>(), vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        let g2 = validate_gcm(vec![vec![2, -1], vec![-3, 2]]).unwrap();
        assert_eq!(root_multiplicities(&g2, &[4, 4]).unwrap().len(), 6);
        let b2 = validate_gcm(vec![vec![2, -2], vec![-1, 2]]).unwrap();
        assert_eq!(root_multiplicities(&b2, &[3, 3]).unwrap().len(), 4);
    }

    #[test]
    fn affine_imaginary_roots() {
        let aff = validate_gcm(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        let r = root_multiplicities(&aff, &[3, 3]).unwrap();
        for k in 1..=3u32 {
            assert_eq!(r.get(&vec![k, k]), Some(&1), "kδ");
        }
        assert_eq!(r.get(&vec![2, 1]), Some(&1));
        assert_eq!(r.get(&vec![2, 0]), None);
    }

    #[test]
    fn classical_multiplicities() {
        let sl2 = validate_gcm(vec![vec![2]]).unwrap();
        let t = freudenthal_table(&sl2, &[4], &[6]).unwrap();
        assert_eq!((0..=6).map(|k| t.get(&vec![k]).copied().unwrap_or(0)).collect::<Vec<_>>(), vec![1, 1, 1, 1, 1, 0, 0]);
        let a2 = validate_gcm(vec![vec![2, -1], vec![-1, 2]]).unwrap();
        assert_eq!(freudenthal_oracle(&a2, &[1, 1], &[1, 1]).unwrap(), 2);
        let total: u64 = freudenthal_table(&a2, &[1, 1], &[4, 4]).unwrap().values().sum();
        assert_eq!(total, 8);
    }
}

use std::collections::BTreeMap;

use num_traits::Zero;

use super::irr::{total_depth, Depth, IrrTrunc, KmVector};
use crate::error::Result;
use crate::linalg::{Echelon, Matrix};
use crate::rational::{q, Q};

/// Coordinate of a tensor `Σ X_ab b_a ⊗ b_b` at weight pair `(k1, k2)`.
type TensorKey = (Depth, Depth, usize, usize);
type TensorVec = BTreeMap<TensorKey, Q>;

fn add_into(out: &mut TensorVec, key: TensorKey, c: Q) {
    if c.is_zero() {
        return;
    }
    let slot = out.entry(key.clone()).or_insert_with(Q::zero);
    *slot += c;
    if slot.is_zero() {
        out.remove(&key);
    }
}

fn raise(k: &[u32], i: usize) -> Depth {
    let mut t = k.to_vec();
    t[i] += 1;
    t
}

/// `f_i ⊗ 1 + 1 ⊗ f_i`.
fn f_on_tensor(m: &IrrTrunc, i: usize, x: &TensorVec, cache: &mut BTreeMap<(usize, Depth), Option<Matrix>>) -> TensorVec {
    let mut f = |k: &Depth| -> Option<Matrix> {
        cache
            .entry((i, k.clone()))
            .or_insert_with(|| m.f_matrix(i, k))
            .clone()
    };
    let mut out = TensorVec::new();
    for ((k1, k2, a, b), c) in x {
        let t1 = raise(k1, i);
        if let Some(fm) = f(&t1) {
            for row in 0..fm.rows() {
                add_into(&mut out, (t1.clone(), k2.clone(), row, *b), fm.get(row, *a) * c);
            }
        }
        let t2 = raise(k2, i);
        if let Some(fm) = f(&t2) {
            for row in 0..fm.rows() {
                add_into(&mut out, (k1.clone(), t2.clone(), *a, row), fm.get(row, *b) * c);
            }
        }
    }
    out
}

/// The Cartan component `L_high = U(n⁻)(v_Λ ⊗ v_Λ) ≅ L(2Λ)` inside
/// `L(Λ) ⊗ L(Λ)`, weight by weight down to a total depth.
pub struct CartanComponent {
    spaces: BTreeMap<Depth, Echelon<TensorKey>>,
}

impl CartanComponent {
    pub fn build(m: &IrrTrunc, max_depth: usize) -> Result<Self> {
        m.ensure_depth(max_depth)?;
        let r = m.rank();
        let zero: Depth = vec![0; r];
        let mut top = Echelon::new();
        let hv: TensorVec = BTreeMap::from([((zero.clone(), zero.clone(), 0, 0), q(1))]);
        top.insert(hv.clone());
        let mut spaces = BTreeMap::from([(zero.clone(), top)]);
        // basis vectors per weight, kept to apply f_i to the next layer
        let mut layer: BTreeMap<Depth, Vec<TensorVec>> = BTreeMap::from([(zero, vec![hv])]);
        let mut cache = BTreeMap::new();
        for _ in 0..max_depth {
            let mut next: BTreeMap<Depth, Vec<TensorVec>> = BTreeMap::new();
            for (k, vecs) in &layer {
                for i in 0..r {
                    let t = raise(k, i);
                    for v in vecs {
                        let img = f_on_tensor(m, i, v, &mut cache);
                        let ech = spaces.entry(t.clone()).or_insert_with(Echelon::new);
                        if ech.insert(img.clone()) {
                            next.entry(t.clone()).or_default().push(img);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layer = next;
        }
        Ok(CartanComponent { spaces })
    }

    pub fn dim_at(&self, k: &[u32]) -> usize {
        self.spaces.get(k).map_or(0, |e| e.rank())
    }

    fn contains(&self, k: &[u32], x: &TensorVec) -> bool {
        if x.is_empty() {
            return true;
        }
        self.spaces.get(k).is_some_and(|e| e.contains(x.clone()))
    }
}

/// `v ∈ V_Λ`, i.e. `v ⊗ v` lies in the Cartan component `L(2Λ)`.
pub fn kostant_cone_test(m: &IrrTrunc, v: &KmVector) -> Result<bool> {
    let max = 2 * v.max_depth();
    let high = CartanComponent::build(m, max)?;
    // v ⊗ v grouped by total weight
    let mut sq: BTreeMap<Depth, TensorVec> = BTreeMap::new();
    for (k1, x1) in v.comps() {
        for (k2, x2) in v.comps() {
            let t: Depth = k1.iter().zip(k2).map(|(a, b)| a + b).collect();
            let entry = sq.entry(t).or_default();
            for (a, ca) in x1.iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                for (b, cb) in x2.iter().enumerate() {
                    add_into(entry, (k1.clone(), k2.clone(), a, b), ca * cb);
                }
            }
        }
    }
    debug_assert!(sq.keys().all(|k| total_depth(k) <= max));
    Ok(sq.iter().all(|(k, x)| high.contains(k, x)))
}

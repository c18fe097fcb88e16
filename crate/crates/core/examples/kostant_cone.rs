//! The Kostant cone of L(2) for sl2: v ⊗ v must lie in the Cartan component L(4).

use std::sync::Arc;

use tannaka::kacmoody::{act_km_group, build_irr_trunc, kostant_cone_test, validate_gcm, CartanComponent, KmFactor, KmGroupWord};
use tannaka::rational::{q, q_frac};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sl2 = Arc::new(validate_gcm(vec![vec![2]])?);
    let l = build_irr_trunc(sl2, vec![2], 3)?;
    let c = CartanComponent::build(&l, 4)?;
    println!("Cartan component dims: {:?}", (0..=4u32).map(|d| c.dim_at(&[d])).collect::<Vec<_>>());

    let v0 = l.highest_vector();
    let v2 = l.basis_vector(&[2], 0)?;
    println!("v0 + v2 in cone: {}", kostant_cone_test(&l, &v0.add(&v2))?);
    assert!(!kostant_cone_test(&l, &v0.add(&v2))?);

    let g = KmGroupWord::new(vec![KmFactor::exp_e(0, q(2)), KmFactor::exp_f(0, q_frac(-1, 3))]);
    let p = act_km_group(&l, &g, &v0)?;
    println!("g·v0 in cone: {}", kostant_cone_test(&l, &p)?);
    assert!(kostant_cone_test(&l, &p)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

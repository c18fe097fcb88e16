//! Weight multiplicities of the basic module of affine sl2 from Gram ranks,
//! next to Freudenthal's formula; and A2 dimensions against Weyl's.

use std::sync::Arc;

use tannaka::kacmoody::{build_irr_trunc, freudenthal_table, validate_gcm, weight_multiplicity};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let aff = Arc::new(validate_gcm(vec![vec![2, -2], vec![-2, 2]])?);
    let l = build_irr_trunc(aff.clone(), vec![1, 0], 6)?;
    let oracle = freudenthal_table(&aff, &[1, 0], &[6, 6])?;
    println!("Λ0 − k0 α0 − k1 α1 : Gram rank / Freudenthal");
    for (k, w, _) in l.weights() {
        let m = weight_multiplicity(&l, &k)?;
        let f = oracle.get(&k).copied().unwrap_or(0) as usize;
        println!("  k = {k:?}, λ = {w:?}: {m} / {f}");
        assert_eq!(m, f);
    }

    let a2 = Arc::new(validate_gcm(vec![vec![2, -1], vec![-1, 2]])?);
    for lambda in [vec![1, 0], vec![1, 1], vec![2, 1]] {
        let l = build_irr_trunc(a2.clone(), lambda.clone(), 8)?;
        println!("dim L{lambda:?} = {}", l.total_dim());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

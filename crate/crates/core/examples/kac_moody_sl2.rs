//! L(m) for sl2 built from the Cartan matrix, and its highest-weight
//! coefficient θ(exp(b e) exp(a f)) = (1 + ab)^m.

use std::sync::Arc;

use tannaka::kacmoody::{build_irr_trunc, theta_eval, validate_gcm, KmFactor, KmGroupWord};
use tannaka::rational::{pow_i, q, q_frac};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sl2 = Arc::new(validate_gcm(vec![vec![2]])?);
    for m in 0..=4 {
        let l = build_irr_trunc(sl2.clone(), vec![m], m as usize + 2)?;
        let (a, b) = (q_frac(2, 3), q(-3));
        let g = KmGroupWord::new(vec![KmFactor::exp_e(0, b.clone()), KmFactor::exp_f(0, a.clone())]);
        let theta = theta_eval(&l, &g)?;
        println!("dim L({m}) = {}, θ = {theta}", l.total_dim());
        assert_eq!(theta, pow_i(&(q(1) + a * b), m));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

//! Regular functions on the free group and functionals on U(g): Taylor
//! polynomials, Φ, Ξ, and Φ recovered from group values alone.

use std::sync::Arc;

use tannaka::duals::{phi, Functional};
use tannaka::grp::{phi_map, phi_map_from_values, taylor_expand, xi_map, GroupWord, RegularFunction};
use tannaka::rational::{q, q_frac};
use tannaka::reps::make_chain;
use tannaka::words::{Alphabet, Letter};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = Arc::new(Alphabet::free(2));
    let (e1, e2) = (Letter(0), Letter(1));

    let h: Functional = phi(a.parse_word("e1.e2")?).into();
    let t = taylor_expand(&h, &[e1, e2], &a)?;
    println!("Taylor polynomial of φ_e1e2 along (e1, e2): {t}");

    // Ξ(φ_w) evaluated on exp(s e1) exp(t e2) is the Taylor polynomial at (s, t)
    let f = xi_map(&h, &a)?;
    let g = GroupWord::exps(&[e1, e2], &[q(3), q_frac(1, 2)]);
    println!("Ξ(φ_e1e2)(exp(3e1)exp(e2/2)) = {}", f.eval(&g)?);
    assert_eq!(f.eval(&g)?, t.eval(&[q(3), q_frac(1, 2)]));

    let chain = Arc::new(make_chain(a.clone(), &[e1, e2, e1])?);
    let rf = RegularFunction::new(chain.clone(), chain.basis_vector(3), chain.basis_vector(0))?;
    let w = a.parse_word("e1.e2.e1")?;
    let direct = phi_map(&rf).eval_word(&w);
    let interpolated = phi_map_from_values(&rf, &w)?;
    println!("Φ(f)(e1e2e1) = {direct}, from group values: {interpolated}");
    assert_eq!(direct, interpolated);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

//! Integrable modules: validation, tensor products, duals and the eigenvalue monoid.

use std::sync::Arc;

use tannaka::duals::z_monoid;
use tannaka::linalg::Matrix;
use tannaka::rational::{format_q, q, Q};
use tannaka::reps::{act_word, dual_rep, make_chain, tensor, validate_integrable, GeneratorKind, RepSpec};
use tannaka::words::{Alphabet, Letter};

fn show(v: &[Q]) -> String {
    v.iter().map(format_q).collect::<Vec<_>>().join(" ")
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = Arc::new(Alphabet::free(2));
    let chain = make_chain(a.clone(), &[Letter(0), Letter(1)])?;
    let top = act_word(&chain, &a.parse_word("e2.e1")?, &chain.basis_vector(0))?;
    println!("e2·e1·b0 = {}", show(&top));
    assert_eq!(top, chain.basis_vector(2));

    let sq = tensor(&chain, &chain)?;
    let dual = dual_rep(&chain);
    println!("dim V⊗V = {}, dual still integrable: {}", sq.dim(), validate_integrable(&dual).is_integrable());

    // a non-nilpotent matrix for a nilpotent letter is rejected
    let bad = RepSpec::integrable(a.clone(), 1, vec![Matrix::identity(1), Matrix::zeros(1, 1)]);
    println!("identity for e1: {}", bad.unwrap_err());

    let h = Arc::new(Alphabet::new(vec!["h".into()], vec![GeneratorKind::DiagonalizableInteger])?);
    let r1 = RepSpec::integrable(h.clone(), 2, vec![Matrix::diagonal(&[q(0), q(2)])])?;
    let r2 = RepSpec::integrable(h, 1, vec![Matrix::diagonal(&[q(3)])])?;
    let m = z_monoid(Letter(0), &[&r1, &r2])?;
    println!("Z_h ∩ [0, 10] = {:?}", m.elements_in(0, 10));
    assert_eq!(m.elements_in(0, 7), vec![0, 2, 3, 4, 5, 6, 7]);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

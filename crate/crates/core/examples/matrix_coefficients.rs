//! Functionals on U(g): finite ones, matrix coefficients, products,
//! translations and the finiteness certificates.

use std::sync::Arc;

use tannaka::duals::{expand_rho, is_regular, membership_ffr, phi, product, right_translate, Functional, MatrixCoefficient};
use tannaka::rational::q;
use tannaka::reps::make_chain;
use tannaka::words::{Alphabet, Letter, NcPoly};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = Arc::new(Alphabet::free(2));
    let chain = Arc::new(make_chain(a.clone(), &[Letter(0), Letter(1)])?);
    // ⟨b2^*, x·b0⟩ reads the coefficient of e2e1 in x
    let g: Functional = MatrixCoefficient::new(chain.clone(), chain.basis_vector(2), chain.basis_vector(0))?.into();
    let e2e1 = a.parse_word("e2.e1")?;
    assert_eq!(g.eval_word(&e2e1), q(1));

    let f: Functional = phi(a.parse_word("e1")?).into();
    let p = product(&g, &f)?;
    println!("(g·φ_e1)(e2e1e1) = {}", p.eval_word(&a.parse_word("e2.e1.e1")?));

    // e1 ▷ φ_{e2e1} = φ_{e2}
    let t = right_translate(&NcPoly::letter(Letter(0)), &phi(e2e1.clone()).into());
    println!("e1 ▷ φ_e2e1 = φ_e2: {}", t == Functional::from(phi(a.parse_word("e2")?)));

    let cert = membership_ffr(&g)?;
    println!("right-translation closure of g has dimension {}", cert.dim);
    let reg = is_regular(&g, &a, 2);
    println!("regular along all tuples of length ≤ 2: {}, max exponent {}", reg.regular, reg.max_bound());

    let rho = expand_rho(&g, &[Letter(1), Letter(0)], &a)?;
    for (k, c) in &rho.coeffs {
        println!("c{k:?} = {c}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

//! A regular functional that is not in the span of finitely supported ones
//! on any bounded horizon: the matrix coefficient of the two-dimensional
//! alternating module.

use std::sync::Arc;

use tannaka::duals::{in_shuffle_span, Functional, MatrixCoefficient, DEFAULT_SHUFFLE_SLACK};
use tannaka::rational::q;
use tannaka::reps::make_cycle_pair;
use tannaka::words::{Alphabet, Letter};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = Arc::new(Alphabet::free(2));
    let r = make_cycle_pair(a.clone(), Letter(0), Letter(1))?;
    let b1 = r.basis_vector(0);
    let g: Functional = MatrixCoefficient::new(Arc::new(r), vec![q(1), q(1)], b1)?.into();
    for w in ["e2", "e1.e2", "e2.e1.e2", "e1.e1", "e2.e1"] {
        println!("g({w}) = {}", g.eval_word(&a.parse_word(w)?));
    }
    for n in [0, 5, 20] {
        let v = in_shuffle_span(&g, n, DEFAULT_SHUFFLE_SLACK);
        println!("N = {n}: in span {}, witness {}", v.in_span, a.format_word(v.witness.as_ref().unwrap()));
        assert!(!v.in_span);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

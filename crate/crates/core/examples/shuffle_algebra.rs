//! Words, the shuffle product, and the Hopf structure of U(g) for a free Lie algebra.

use tannaka::duals::{phi, shuffle_product};
use tannaka::rational::q;
use tannaka::words::{multibracket, shuffles, Alphabet, Letter, NcPoly, TensorNcPoly};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = Alphabet::free(2);
    let (e1e2, e1) = (a.parse_word("e1.e2")?, a.parse_word("e1")?);

    // e1e2 ш e1 = 2·e1e1e2 + e1e2e1
    for (w, c) in shuffles(&e1e2, &e1) {
        println!("{c} × {}", a.format_word(&w));
    }
    let s = shuffle_product(&phi(e1e2.clone()), &phi(e1.clone()));
    assert_eq!(s.eval_word(&a.parse_word("e1.e1.e2")?), q(2));

    // Δ(e1e2) = 1⊗e1e2 + e1⊗e2 + e2⊗e1 + e1e2⊗1
    let x = NcPoly::word(e1e2);
    let dx = x.coproduct()?;
    for ((l, r), c) in dx.terms() {
        println!("Δ: {c} · {} ⊗ {}", a.format_word(l), a.format_word(r));
    }
    assert_eq!(dx.terms().count(), 4);
    println!("S(e1e2) = {:?}", x.antipode().terms().map(|(w, c)| (a.format_word(w), c.to_string())).collect::<Vec<_>>());
    assert_eq!(dx.antipode_left_multiply(), NcPoly::zero());

    // brackets are primitive
    let b = multibracket(&[Letter(0), Letter(1), Letter(1)])?;
    assert_eq!(b.coproduct()?, TensorNcPoly::primitive(&b));
    println!("[[e1,e2],e2] has {} terms and is primitive", b.num_terms());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

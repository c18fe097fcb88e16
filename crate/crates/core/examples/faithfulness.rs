//! Finite-dimensional modules separate elements of U(g) and of the free group.

use std::sync::Arc;

use tannaka::grp::{faithfulness_witness, group_faithfulness_witness, GroupWord};
use tannaka::rational::{format_q, q, Q};
use tannaka::reps::vnj_index;
use tannaka::words::{Alphabet, Letter, NcPoly};

fn show(v: &[Q]) -> String {
    v.iter().map(format_q).collect::<Vec<_>>().join(" ")
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = Arc::new(Alphabet::free(2));
    let x = NcPoly::from_terms([(a.parse_word("e1.e2")?, q(1)), (a.parse_word("e2.e1")?, q(-1))]);
    let w = faithfulness_witness(&x, a.clone())?;
    println!("[e1,e2] acts on V_2 (dim {}) with image {}", w.rep.dim(), show(&w.image));
    assert_eq!(w.image[vnj_index(&w.rep, &a.parse_word("e2.e1")?).unwrap()], q(-1));

    let g = GroupWord::exps(&[Letter(0), Letter(1), Letter(0)], &[q(5), q(7), q(11)]);
    let w = group_faithfulness_witness(&g, a)?;
    println!("g·b0 = {}", show(&w.image));
    assert_eq!(w.image[3], q(385));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}

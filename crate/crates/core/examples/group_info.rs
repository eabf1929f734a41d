//! The symmetric group S_3 acting on its reflection representation over F_7:
//! fixed spaces, eigenframes and which pairs of elements can multiply.

use hochschild::groups::{GroupData, DEFAULT_BOUND};
use hochschild::linalg::Matrix;
use hochschild::scalars::PrimeField;

fn main() -> hochschild::error::Result<()> {
    let f = PrimeField::new(7)?;
    // transposition and 3-cycle on the sum-zero plane of F_7^3
    let s = Matrix::from_rows(f, &[vec![0, 1], vec![1, 0]]);
    let r = Matrix::from_rows(f, &[vec![0, -1], vec![1, -1]]);
    let grp = GroupData::generate(f, &[s, r], DEFAULT_BOUND)?;
    println!("|G| = {} acting on F_{}^{}", grp.order(), f.modulus(), grp.dim());
    for g in 0..grp.order() {
        let fr = grp.frame(g);
        let eig: Vec<String> = fr.eigenvalues().iter().map(|e| e.to_string()).collect();
        println!(
            "g{g}: {:?} order {} codim {} eigenvalues [{}]",
            grp.element(g).to_signed_rows(),
            grp.element_order(g),
            grp.codim(g),
            eig.join(", ")
        );
    }
    println!("products allowed by the complement condition (row g, column h):");
    for g in 0..grp.order() {
        let row: String = (0..grp.order()).map(|h| if grp.intersection_condition(g, h) { '#' } else { '.' }).collect();
        println!("  g{g} {row}");
    }
    Ok(())
}

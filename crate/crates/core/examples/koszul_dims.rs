//! Twisted Koszul complexes: cohomology computed by linear algebra against
//! the dimension predicted from fixed-space data.

use hochschild::groups::{GroupData, DEFAULT_BOUND};
use hochschild::linalg::Matrix;
use hochschild::oracle::{closed_form_dim, KoszulComplex};
use hochschild::scalars::PrimeField;

fn main() -> hochschild::error::Result<()> {
    let f = PrimeField::new(7)?;
    // Z/3 acting by diag(2, 4) together with -Id generates Z/6
    let gens = [Matrix::from_rows(f, &[vec![2, 0], vec![0, 4]]), Matrix::from_rows(f, &[vec![-1, 0], vec![0, -1]])];
    let grp = GroupData::generate(f, &gens, DEFAULT_BOUND)?;
    println!("q  D  element  koszul  predicted");
    for g in 0..grp.order() {
        let k = KoszulComplex::new(&grp, g);
        for q in 0..=grp.dim() {
            for d in 0..=2 {
                let got = k.cohomology_dim(q, d)?;
                let want = closed_form_dim(&grp, g, q, d);
                assert!(k.square_vanishes(q, d));
                println!("{q}  {d}  g{g:<6} {got:<7} {want}{}", if got == want { "" } else { "  MISMATCH" });
            }
        }
    }
    Ok(())
}

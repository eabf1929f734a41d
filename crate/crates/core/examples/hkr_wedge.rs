//! With a trivial group the product is the wedge of polyvector fields. The
//! example also evaluates an explicit cochain representative.

use hochschild::groups::{GroupData, DEFAULT_BOUND};
use hochschild::hhalgebra::{HHClass, HHRing};
use hochschild::linalg::Matrix;
use hochschild::multilinear::Multivector;
use hochschild::oracle;
use hochschild::polyring::Polynomial;
use hochschild::scalars::PrimeField;

fn main() -> hochschild::error::Result<()> {
    let f = PrimeField::new(7)?;
    let grp = GroupData::generate(f, &[Matrix::identity(f, 3)], DEFAULT_BOUND)?;
    let ring = HHRing::new(&grp);
    let x = |i| Polynomial::var(f, 3, i);

    // x_2 ∂_1 and x_1 ∂_2 ∧ ∂_3
    let mut a = HHClass::zero(1);
    a.add_raw(0, 0b001, &x(1));
    let mut b = HHClass::zero(2);
    b.add_raw(0, 0b110, &x(0));
    let ab = ring.product(&a, &b)?;
    for (_, comp) in ab.components() {
        for (mask, p) in comp {
            println!("a * b: tangent {mask:#b} coefficient {p}");
        }
    }
    println!("matches the cochain product: {}", ab == oracle::oracle_product(&grp, &a, &b)?);

    // ∂_1 ∧ ∂_2 as a 2-cochain, evaluated on a pair of vectors
    let xi = Multivector::basis(f, 3, &[0, 1]);
    let c = oracle::hkr_cochain(&grp, 0, &xi, &Polynomial::one(f, 3))?;
    let v = |a: i64, b: i64, c: i64| vec![f.elem(a), f.elem(b), f.elem(c)];
    let val = c.evaluate(&[v(1, 2, 0), v(3, 1, 5)])?;
    println!("(∂_1∧∂_2)((1,2,0), (3,1,5)) = {val} (with the 1/2! normalization)");
    Ok(())
}

//! The coordinate swap on F_7^2: multiply a class supported at the swap by a
//! vector field, once with the closed form and once through explicit cochains.

use hochschild::groups::{GroupData, DEFAULT_BOUND};
use hochschild::hhalgebra::{HHClass, HHRing};
use hochschild::linalg::Matrix;
use hochschild::oracle;
use hochschild::polyring::Polynomial;
use hochschild::scalars::PrimeField;

fn show(name: &str, c: &HHClass) {
    println!("{name} (degree {}):", c.degree());
    for (g, comp) in c.components() {
        for (mask, f) in comp {
            println!("  g{g} tangent {mask:#b}: {f}");
        }
    }
}

fn main() -> hochschild::error::Result<()> {
    let f = PrimeField::new(7)?;
    let grp = GroupData::generate(f, &[Matrix::from_rows(f, &[vec![0, 1], vec![1, 0]])], DEFAULT_BOUND)?;
    let ring = HHRing::new(&grp);

    // alpha: the normal volume at the swap; gamma: d/dx_1 at the identity
    let mut alpha = HHClass::zero(1);
    alpha.add_raw(1, 0, &Polynomial::one(f, 1));
    let mut gamma = HHClass::zero(1);
    gamma.add_raw(0, 0b01, &Polynomial::one(f, 2));
    show("alpha", &alpha);
    show("gamma", &gamma);

    let (closed, stats) = ring.product_with_stats(&alpha, &gamma)?;
    let cochain = oracle::oracle_product(&grp, &alpha, &gamma)?;
    show("alpha * gamma", &closed);
    println!("component pairs {}, skipped {}", stats.component_pairs, stats.vanishing_component_pairs);
    println!("closed form agrees with cochains: {}", closed == cochain);
    println!("alpha * alpha = 0: {}", ring.product(&alpha, &alpha)?.is_zero());
    Ok(())
}

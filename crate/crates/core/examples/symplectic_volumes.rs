//! Symplectic normal volumes for the Klein four-group on F_7^4, under both
//! normalizations of the top power of the form.

use hochschild::groups::{GroupData, DEFAULT_BOUND};
use hochschild::hhalgebra::{HHClass, HHRing};
use hochschild::linalg::Matrix;
use hochschild::polyring::Polynomial;
use hochschild::scalars::PrimeField;
use hochschild::symplectic::{sympl_product, trivialize, SymplecticCtx, SymplecticHHClass, VolumeNormalization};

fn main() -> hochschild::error::Result<()> {
    let f = PrimeField::new(7)?;
    let a = Matrix::from_rows(f, &[vec![-1, 0, 0, 0], vec![0, -1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
    let b = Matrix::from_rows(f, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, -1, 0], vec![0, 0, 0, -1]]);
    let omega = Matrix::from_rows(f, &[vec![0, 1, 0, 0], vec![-1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, -1, 0]]);
    let grp = GroupData::generate(f, &[a, b], DEFAULT_BOUND)?;
    let ring = HHRing::new(&grp);

    for norm in [VolumeNormalization::Pfaffian, VolumeNormalization::UndividedPower] {
        let ctx = SymplecticCtx::with_normalization(&grp, omega.clone(), norm)?;
        println!("{}:", norm.name());
        for g in 0..grp.order() {
            println!("  g{g} codim {} scale {}", grp.codim(g), ctx.volume_scale(g));
        }
        let mut bad = 0;
        for g in 0..grp.order() {
            for h in 0..grp.order() {
                if grp.intersection_condition(g, h) && !ctx.is_multiplicative_on(g, h)? {
                    println!("  s_g∧s_h != s_gh for g{g}, h{h}");
                    bad += 1;
                }
            }
        }
        println!("  non-multiplicative pairs: {bad}");
    }

    // with Pfaffian volumes the symplectic product matches the plain one
    let ctx = SymplecticCtx::new(&grp, omega)?;
    let at = |g: usize| {
        let mut c = HHClass::zero(grp.codim(g));
        c.add_raw(g, 0, &Polynomial::one(f, grp.dim() - grp.codim(g)));
        SymplecticHHClass(c)
    };
    let (x, y) = (at(1), at(2));
    let lhs = trivialize(&ctx, &sympl_product(&ring, &ctx, &x, &y)?);
    let rhs = ring.product(&trivialize(&ctx, &x), &trivialize(&ctx, &y))?;
    println!("trivialization intertwines the products: {}", lhs == rhs);
    Ok(())
}

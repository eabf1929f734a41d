//! Invariants of the conjugation action: random classes are averaged over the
//! group and the ring laws are checked on the result.

use hochschild::groups::{GroupData, DEFAULT_BOUND};
use hochschild::hhalgebra::HHRing;
use hochschild::linalg::Matrix;
use hochschild::scalars::PrimeField;
use hochschild::verify::random_class;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hochschild::error::Result<()> {
    let f = PrimeField::new(7)?;
    let s = Matrix::from_rows(f, &[vec![0, 1], vec![1, 0]]);
    let r = Matrix::from_rows(f, &[vec![0, -1], vec![1, -1]]);
    let grp = GroupData::generate(f, &[s, r], DEFAULT_BOUND)?;
    let ring = HHRing::new(&grp);
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let (mut comm, mut assoc, mut nonzero) = (0, 0, 0);
    let trials = 50;
    for t in 0..trials {
        let (i, j, k) = (t % 2, (t / 2) % 3, 0);
        let a = ring.invariant_project(&random_class(&mut rng, &grp, i, 2));
        let b = ring.invariant_project(&random_class(&mut rng, &grp, j, 2));
        let c = ring.invariant_project(&random_class(&mut rng, &grp, k, 2));
        assert!(ring.is_invariant(&a) && ring.invariant_project(&a) == a);
        let ab = ring.product(&a, &b)?;
        if ab == ring.product(&b, &a)?.scale(f.one().sign(i * j)) {
            comm += 1;
        }
        let abc = ring.product(&ab, &c)?;
        if abc == ring.product(&a, &ring.product(&b, &c)?)? {
            assoc += 1;
        }
        nonzero += usize::from(!abc.is_zero());
    }
    println!("S_3 on F_7^2, {trials} invariant triples ({nonzero} with nonzero product)");
    println!("graded commutative: {comm}/{trials}");
    println!("associative:        {assoc}/{trials}");
    Ok(())
}

//! Property tests over random subgroups of signed permutation groups.

use hochschild::groups::{GroupData, DEFAULT_BOUND};
use hochschild::hhalgebra::HHRing;
use hochschild::linalg::Matrix;
use hochschild::oracle;
use hochschild::scalars::PrimeField;
use hochschild::verify::{random_class, random_component};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Signed permutation matrix sending `e_c` to `signs[c] e_{images[c]}`.
fn signed_perm(field: PrimeField, images: &[usize], signs: &[i64]) -> Matrix {
    let n = images.len();
    Matrix::from_fn(field, n, n, |r, c| if images[c] == r { field.elem(signs[c]) } else { field.zero() })
}

/// Generators of the hyperoctahedral group in dimension `n` (F_17 for n = 2,
/// F_97 for n = 3, so that p exceeds the order and has the needed roots).
fn pool(n: usize) -> (PrimeField, Vec<Matrix>) {
    let field = PrimeField::new(if n == 2 { 17 } else { 97 }).unwrap();
    let mut gens = Vec::new();
    if n == 2 {
        gens.push(signed_perm(field, &[1, 0], &[1, 1]));
        gens.push(signed_perm(field, &[0, 1], &[-1, 1]));
        gens.push(signed_perm(field, &[1, 0], &[1, -1]));
        gens.push(signed_perm(field, &[0, 1], &[-1, -1]));
    } else {
        gens.push(signed_perm(field, &[1, 0, 2], &[1, 1, 1]));
        gens.push(signed_perm(field, &[1, 2, 0], &[1, 1, 1]));
        gens.push(signed_perm(field, &[0, 1, 2], &[-1, 1, 1]));
        gens.push(signed_perm(field, &[0, 1, 2], &[-1, -1, -1]));
        gens.push(signed_perm(field, &[2, 0, 1], &[1, -1, 1]));
    }
    (field, gens)
}

fn arb_group() -> impl Strategy<Value = GroupData> {
    (2usize..=3, prop::collection::vec(any::<bool>(), 5)).prop_map(|(n, pick)| {
        let (field, all) = pool(n);
        let mut gens: Vec<Matrix> = all.iter().zip(&pick).filter(|(_, &k)| k).map(|(g, _)| g.clone()).collect();
        if gens.is_empty() {
            gens.push(all[0].clone());
        }
        GroupData::generate(field, &gens, DEFAULT_BOUND).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tables_form_a_group(grp in arb_group(), seed in any::<u64>()) {
        let n = grp.order();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        use rand::Rng;
        for _ in 0..50 {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            prop_assert_eq!(grp.multiply(grp.multiply(a, b), c), grp.multiply(a, grp.multiply(b, c)));
        }
        let id = Matrix::identity(grp.field(), grp.dim());
        prop_assert_eq!((0..n).filter(|&g| grp.element(g) == &id).count(), 1);
        for a in 0..n {
            let mut row: Vec<usize> = (0..n).map(|b| grp.multiply(a, b)).collect();
            row.sort();
            prop_assert_eq!(row, (0..n).collect::<Vec<_>>());
        }
        for g in 0..n {
            prop_assert_eq!(grp.multiply(g, grp.inverse(g)), 0);
            prop_assert_eq!(n % grp.element_order(g), 0);
        }
    }

    #[test]
    fn symmetrizers_and_frames(grp in arb_group()) {
        let dim = grp.dim();
        for g in 0..grp.order() {
            let pi = &grp.data(g).symmetrizer;
            let m = grp.element(g);
            prop_assert_eq!(&(pi * pi), pi);
            prop_assert_eq!(&(m * pi), pi);
            prop_assert_eq!(pi.rank() + grp.codim(g), dim);
            let fr = grp.frame(g);
            let diag = Matrix::diagonal(grp.field(), fr.eigenvalues());
            prop_assert_eq!(&(&(fr.inverse() * m) * fr.basis()), &diag);
        }
    }

    #[test]
    fn fixed_space_of_product_is_intersection(grp in arb_group()) {
        for g in 0..grp.order() {
            for h in 0..grp.order() {
                if grp.intersection_condition(g, h) {
                    let u = grp.multiply(g, h);
                    let meet = grp.data(g).fixed.intersection(&grp.data(h).fixed);
                    prop_assert_eq!(&meet, &grp.data(u).fixed);
                    prop_assert_eq!(grp.codim(g) + grp.codim(h), grp.codim(u));
                }
            }
        }
    }

    #[test]
    fn ring_laws(grp in arb_group(), seed in any::<u64>(), i in 0usize..=3, j in 0usize..=3, k in 0usize..=3) {
        let ring = HHRing::new(&grp);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (i, j, k) = (i.min(grp.dim()), j.min(grp.dim()), k.min(grp.dim()));
        let a = random_class(&mut rng, &grp, i, 2);
        let b = random_class(&mut rng, &grp, j, 2);
        let c = random_class(&mut rng, &grp, k, 2);
        let ab = ring.product(&a, &b).unwrap();
        prop_assert_eq!(ab.degree(), i + j);
        prop_assert_eq!(&ring.product(&ring.unit(), &a).unwrap(), &a);
        prop_assert_eq!(&ring.product(&a, &ring.unit()).unwrap(), &a);
        use rand::Rng;
        let h = rng.gen_range(0..grp.order());
        prop_assert_eq!(
            ring.conjugation_action(h, &ab),
            ring.product(&ring.conjugation_action(h, &a), &ring.conjugation_action(h, &b)).unwrap()
        );
        let (pa, pb, pc) = (ring.invariant_project(&a), ring.invariant_project(&b), ring.invariant_project(&c));
        prop_assert!(ring.is_invariant(&pa));
        prop_assert_eq!(&ring.invariant_project(&pa), &pa);
        let sign = grp.field().one().sign(i * j);
        prop_assert_eq!(ring.product(&pa, &pb).unwrap(), ring.product(&pb, &pa).unwrap().scale(sign));
        prop_assert_eq!(
            ring.product(&ring.product(&pa, &pb).unwrap(), &pc).unwrap(),
            ring.product(&pa, &ring.product(&pb, &pc).unwrap()).unwrap()
        );
    }

    #[test]
    fn conjugation_composes(grp in arb_group(), seed in any::<u64>(), i in 0usize..=3) {
        let ring = HHRing::new(&grp);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_class(&mut rng, &grp, i.min(grp.dim()), 2);
        use rand::Rng;
        let (g, h) = (rng.gen_range(0..grp.order()), rng.gen_range(0..grp.order()));
        prop_assert_eq!(
            ring.conjugation_action(g, &ring.conjugation_action(h, &a)),
            ring.conjugation_action(grp.multiply(g, h), &a)
        );
    }

    #[test]
    fn overlapping_complements_vanish_in_the_oracle(grp in arb_group(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        use rand::Rng;
        let pairs: Vec<(usize, usize)> = (0..grp.order())
            .flat_map(|g| (0..grp.order()).map(move |h| (g, h)))
            .filter(|&(g, h)| !grp.intersection_condition(g, h))
            .collect();
        prop_assume!(!pairs.is_empty());
        let (g, h) = pairs[rng.gen_range(0..pairs.len())];
        let n = grp.dim();
        let (i, j) = (rng.gen_range(grp.codim(g)..=n), rng.gen_range(grp.codim(h)..=n));
        let a = random_component(&mut rng, &grp, g, i, 2).unwrap();
        let b = random_component(&mut rng, &grp, h, j, 2).unwrap();
        prop_assert!(oracle::oracle_product(&grp, &a, &b).unwrap().is_zero());
        prop_assert!(HHRing::new(&grp).product(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn closed_form_matches_oracle(grp in arb_group(), seed in any::<u64>(), i in 0usize..=2, j in 0usize..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_class(&mut rng, &grp, i, 2);
        let b = random_class(&mut rng, &grp, j, 2);
        prop_assert_eq!(HHRing::new(&grp).product(&a, &b).unwrap(), oracle::oracle_product(&grp, &a, &b).unwrap());
    }
}

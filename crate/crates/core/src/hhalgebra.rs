//! Hochschild cohomology of `k[G] ⋉ k[V]` on fixed-point data.
//!
//! A homogeneous class of degree `i` is a sum over group elements `g` of
//! terms in `Λ^{i-d_g} V^g ⊗ Λ^{d_g} (V^g)^∨ ⊗ k[V^g]`, written in the
//! eigenframe of `g`. The normal factor is one-dimensional, so it is folded
//! into the coefficient polynomial against the frame volume
//! `w_1 ∧ … ∧ w_{d_g}`; a class is then a map `g → (tangent mask → polynomial)`.
//!
//! The product of a term at `g` (degree `i`) with a term at `h` (degree `j`)
//! vanishes unless `(V^g)^∨ ∩ (V^h)^∨ = 0`; otherwise it is the term at
//! `u = gh` with tangent `π^u ξ¹ ∧ π^u ν¹`, normal `ξ² ∧ ν²`, coefficient
//! `(f e)|_{V^u}` and sign `(-1)^{d_g (j - d_h)}`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::groups::GroupData;
use crate::linalg::Matrix;
use crate::multilinear::{Mask, Multivector};
use crate::polyring::Polynomial;
use crate::scalars::Scalar;

/// Tangent basis mask (in the `V^g` frame) → coefficient polynomial on `V^g`.
pub type Component = BTreeMap<Mask, Polynomial>;

/// One term `ξ¹ ⊗ ξ² ⊗ f` at a group element, in that element's eigenframe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HHTerm {
    pub g: usize,
    /// Over the `V^g` frame, degree `i - d_g`.
    pub tangent: Multivector,
    /// Over the `(V^g)^∨` frame, degree `d_g`.
    pub normal: Multivector,
    /// Polynomial in `dim V^g` variables.
    pub coeff: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HHClass {
    degree: usize,
    components: BTreeMap<usize, Component>,
}

impl HHClass {
    pub fn zero(degree: usize) -> Self {
        Self { degree, components: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Group elements carrying a nonzero component.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.components.keys().copied()
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &Component)> + '_ {
        self.components.iter().map(|(&g, c)| (g, c))
    }

    pub fn component(&self, g: usize) -> Option<&Component> {
        self.components.get(&g)
    }

    pub fn num_terms(&self) -> usize {
        self.components.values().flat_map(|c| c.values()).map(Polynomial::len).sum()
    }

    /// Adds `f` to the coefficient of the tangent basis element `mask` at `g`.
    /// No shape validation; see [`HHRing::validate`].
    pub fn add_raw(&mut self, g: usize, mask: Mask, f: &Polynomial) {
        if f.is_zero() {
            return;
        }
        let comp = self.components.entry(g).or_default();
        let merged = match comp.get(&mask) {
            Some(old) => old + f,
            None => f.clone(),
        };
        if merged.is_zero() {
            comp.remove(&mask);
            if comp.is_empty() {
                self.components.remove(&g);
            }
        } else {
            comp.insert(mask, merged);
        }
    }

    pub fn add(&self, other: &HHClass) -> Result<HHClass> {
        if self.degree != other.degree {
            return Err(Error::DegreeInhomogeneous(format!("adding degree {} to degree {}", other.degree, self.degree)));
        }
        let mut out = self.clone();
        for (g, comp) in other.components() {
            for (&mask, f) in comp {
                out.add_raw(g, mask, f);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HHClass) -> Result<HHClass> {
        let neg = other.scale_by(|f| -f);
        self.add(&neg)
    }

    pub fn scale(&self, s: Scalar) -> HHClass {
        self.scale_by(|f| f.scale(s))
    }

    fn scale_by(&self, op: impl Fn(&Polynomial) -> Polynomial) -> HHClass {
        let mut out = HHClass::zero(self.degree);
        for (g, comp) in self.components() {
            for (&mask, f) in comp {
                out.add_raw(g, mask, &op(f));
            }
        }
        out
    }
}

/// Counters collected while multiplying, per pair of group-element components.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProductStats {
    pub component_pairs: usize,
    pub term_pairs: usize,
    /// Pairs skipped because the complements of `g` and `h` overlap.
    pub vanishing_component_pairs: usize,
    pub vanishing_term_pairs: usize,
    /// The `(g, h)` pairs that were skipped.
    pub vanishing: Vec<(usize, usize)>,
}

/// Precomputed linear data for multiplying components at `g` and `h`.
#[derive(Clone, Debug)]
struct PairData {
    target: usize,
    support: bool,
    /// `r_u × r_g`: V^g-frame vector ↦ V^u-frame coordinates of its π^u image.
    tangent_g: Matrix,
    tangent_h: Matrix,
    /// `w^g_vol ∧ w^h_vol` in units of `w^u_vol`.
    normal_scale: Scalar,
    /// `r_g × r_u`: restriction of functions on V^g to V^u.
    restrict_g: Matrix,
    restrict_h: Matrix,
}

/// Linear data for conjugating a component at `g` by `h`.
#[derive(Clone, Debug)]
struct ConjData {
    target: usize,
    tangent: Matrix,
    normal_scale: Scalar,
    /// `r_g × r_{g'}`: pullback of functions along `h^{-1}: V^{g'} → V^g`.
    coeff: Matrix,
}

/// The ring `⊕_g H^*(k[V], k[V] g)` with the closed-form product, plus the
/// conjugation action whose invariants form `HH^*(k[G] ⋉ k[V])`.
pub struct HHRing<'a> {
    group: &'a GroupData,
    pairs: Vec<OnceLock<Result<PairData>>>,
    conj: Vec<OnceLock<ConjData>>,
}

impl<'a> HHRing<'a> {
    pub fn new(group: &'a GroupData) -> Self {
        let n = group.order();
        Self { group, pairs: (0..n * n).map(|_| OnceLock::new()).collect(), conj: (0..n * n).map(|_| OnceLock::new()).collect() }
    }

    pub fn group(&self) -> &'a GroupData {
        self.group
    }

    /// Constant function 1 at the identity, degree 0.
    pub fn unit(&self) -> HHClass {
        let mut out = HHClass::zero(0);
        out.add_raw(0, 0, &Polynomial::one(self.group.field(), self.group.dim()));
        out
    }

    /// Builds a class from explicit terms, validating shapes.
    pub fn class_from_terms(&self, degree: usize, terms: &[HHTerm]) -> Result<HHClass> {
        let mut out = HHClass::zero(degree);
        for t in terms {
            self.add_term(&mut out, t)?;
        }
        Ok(out)
    }

    pub fn add_term(&self, class: &mut HHClass, t: &HHTerm) -> Result<()> {
        let g = t.g;
        if g >= self.group.order() {
            return Err(Error::OutOfRange(format!("group element {g}")));
        }
        let d = self.group.codim(g);
        let r = self.group.dim() - d;
        if class.degree < d || t.tangent.degree() != class.degree - d {
            return Err(Error::DegreeInhomogeneous(format!(
                "term at element {g} has tangent degree {} but the class has degree {} and d_g = {d}",
                t.tangent.degree(),
                class.degree
            )));
        }
        if t.tangent.dim() != r {
            return Err(Error::DimensionMismatch { expected: r, got: t.tangent.dim() });
        }
        if t.normal.dim() != d || t.normal.degree() != d {
            return Err(Error::DimensionMismatch { expected: d, got: t.normal.degree() });
        }
        if t.coeff.nvars() != r {
            return Err(Error::ArityMismatch { expected: r, got: t.coeff.nvars() });
        }
        let top = if d == 0 { 0 } else { (1u64 << d) - 1 };
        let nc = t.normal.coefficient(top);
        for (mask, c) in t.tangent.terms() {
            class.add_raw(g, mask, &t.coeff.scale(c * nc));
        }
        Ok(())
    }

    /// Normal-form terms: one per `(g, tangent basis element)`, with the
    /// normal factor set to the frame volume.
    pub fn terms(&self, a: &HHClass) -> Vec<HHTerm> {
        let field = self.group.field();
        let mut out = Vec::new();
        for (g, comp) in a.components() {
            let d = self.group.codim(g);
            let r = self.group.dim() - d;
            for (&mask, f) in comp {
                out.push(HHTerm {
                    g,
                    tangent: Multivector::basis_mask(field, r, mask),
                    normal: Multivector::volume(field, d),
                    coeff: f.clone(),
                });
            }
        }
        out
    }

    /// Checks that every component fits the geometry of its group element.
    pub fn validate(&self, a: &HHClass) -> Result<()> {
        for (g, comp) in a.components() {
            if g >= self.group.order() {
                return Err(Error::ContextMismatch(format!("element {g} outside a group of order {}", self.group.order())));
            }
            let d = self.group.codim(g);
            let r = self.group.dim() - d;
            for (&mask, f) in comp {
                if a.degree < d || mask.count_ones() as usize != a.degree - d || mask >> r != 0 {
                    return Err(Error::ContextMismatch(format!("tangent mask {mask:#b} invalid at element {g}")));
                }
                if f.nvars() != r || f.field() != self.group.field() {
                    return Err(Error::ContextMismatch(format!("coefficient at element {g} has the wrong arity or field")));
                }
            }
        }
        Ok(())
    }

    fn pair(&self, g: usize, h: usize) -> Result<&PairData> {
        let n = self.group.order();
        self.pairs[g * n + h].get_or_init(|| self.compute_pair(g, h)).as_ref().map_err(Clone::clone)
    }

    fn compute_pair(&self, g: usize, h: usize) -> Result<PairData> {
        let grp = self.group;
        let field = grp.field();
        let u = grp.multiply(g, h);
        let (fg, fh, fu) = (grp.frame(g), grp.frame(h), grp.frame(u));
        let pi_u = &grp.data(u).symmetrizer;
        let support = grp.intersection_condition(g, h);
        let project = |fr: &crate::linalg::Eigenframe| &(&fu.tangent_coordinates() * pi_u) * &fr.tangent_basis();
        let restrict = |fr: &crate::linalg::Eigenframe| &fr.tangent_coordinates() * &fu.tangent_basis();
        let normal_scale = if support {
            if fg.codim() + fh.codim() != fu.codim() {
                return Err(Error::CodimensionDefect { g, h });
            }
            let vg = Multivector::volume(field, fg.codim()).map_components(&fg.normal_basis())?;
            let vh = Multivector::volume(field, fh.codim()).map_components(&fh.normal_basis())?;
            let joint = vg.wedge(&vh)?.coordinates_in(&fu.normal_basis())?;
            joint.coefficient(if fu.codim() == 0 { 0 } else { (1u64 << fu.codim()) - 1 })
        } else {
            field.zero()
        };
        Ok(PairData {
            target: u,
            support,
            tangent_g: project(fg),
            tangent_h: project(fh),
            normal_scale,
            restrict_g: restrict(fg),
            restrict_h: restrict(fh),
        })
    }

    /// Product of the component `a` at `g` with `b` at `h`
    /// (class degree `j`). `None` when the pair vanishes by the support rule.
    fn multiply_components(
        &self,
        (g, a): (usize, &Component),
        (h, b, j): (usize, &Component, usize),
        with_normal: bool,
    ) -> Result<Option<(usize, Component)>> {
        let pd = self.pair(g, h)?;
        if !pd.support {
            return Ok(None);
        }
        let field = self.group.field();
        let (dg, dh) = (self.group.codim(g), self.group.codim(h));
        let mut scale = field.one().sign(dg * (j - dh));
        if with_normal {
            scale *= pd.normal_scale;
        }
        let (rg, rh) = (self.group.dim() - dg, self.group.dim() - dh);
        let a_img: Vec<(Multivector, Polynomial)> = a
            .iter()
            .map(|(&m, f)| Ok((Multivector::basis_mask(field, rg, m).map_components(&pd.tangent_g)?, f.substitute_linear(&pd.restrict_g)?)))
            .collect::<Result<_>>()?;
        let b_img: Vec<(Multivector, Polynomial)> = b
            .iter()
            .map(|(&m, f)| Ok((Multivector::basis_mask(field, rh, m).map_components(&pd.tangent_h)?, f.substitute_linear(&pd.restrict_h)?)))
            .collect::<Result<_>>()?;
        let mut out = Component::new();
        for (ta, fa) in &a_img {
            for (tb, fb) in &b_img {
                let t = ta.wedge(tb)?;
                if t.is_zero() {
                    continue;
                }
                let f = fa * fb;
                for (mask, c) in t.terms() {
                    let add = f.scale(c * scale);
                    let merged = match out.get(&mask) {
                        Some(old) => old + &add,
                        None => add,
                    };
                    if merged.is_zero() {
                        out.remove(&mask);
                    } else {
                        out.insert(mask, merged);
                    }
                }
            }
        }
        Ok(Some((pd.target, out)))
    }

    pub fn product(&self, a: &HHClass, b: &HHClass) -> Result<HHClass> {
        Ok(self.product_with_stats(a, b)?.0)
    }

    pub fn product_with_stats(&self, a: &HHClass, b: &HHClass) -> Result<(HHClass, ProductStats)> {
        self.product_impl(a, b, true)
    }

    /// Product without the normal factor, shared with the symplectic layer.
    pub(crate) fn tangent_product(&self, a: &HHClass, b: &HHClass) -> Result<HHClass> {
        Ok(self.product_impl(a, b, false)?.0)
    }

    fn product_impl(&self, a: &HHClass, b: &HHClass, with_normal: bool) -> Result<(HHClass, ProductStats)> {
        self.validate(a)?;
        self.validate(b)?;
        let (i, j) = (a.degree, b.degree);
        let mut out = HHClass::zero(i + j);
        let mut stats = ProductStats::default();
        for (g, ca) in a.components() {
            for (h, cb) in b.components() {
                let pairs: usize = ca.values().map(Polynomial::len).sum::<usize>() * cb.values().map(Polynomial::len).sum::<usize>();
                stats.component_pairs += 1;
                stats.term_pairs += pairs;
                match self.multiply_components((g, ca), (h, cb, j), with_normal)? {
                    None => {
                        stats.vanishing_component_pairs += 1;
                        stats.vanishing_term_pairs += pairs;
                        stats.vanishing.push((g, h));
                    }
                    Some((u, comp)) => {
                        for (mask, f) in &comp {
                            out.add_raw(u, *mask, f);
                        }
                    }
                }
            }
        }
        Ok((out, stats))
    }

    fn conj_data(&self, h: usize, g: usize) -> &ConjData {
        let n = self.group.order();
        self.conj[h * n + g].get_or_init(|| {
            let grp = self.group;
            let field = grp.field();
            let target = grp.conjugate(h, g);
            let hm = grp.element(h);
            let h_inv = grp.element(grp.inverse(h));
            let (fg, ft) = (grp.frame(g), grp.frame(target));
            let tangent = &(&ft.tangent_coordinates() * hm) * &fg.tangent_basis();
            let coeff = &(&fg.tangent_coordinates() * h_inv) * &ft.tangent_basis();
            let moved = Multivector::volume(field, fg.codim())
                .map_components(&(hm * &fg.normal_basis()))
                .and_then(|v| v.coordinates_in(&ft.normal_basis()))
                .expect("h maps (V^g)^∨ onto (V^{hgh^-1})^∨");
            let top = if ft.codim() == 0 { 0 } else { (1u64 << ft.codim()) - 1 };
            ConjData { target, tangent, normal_scale: moved.coefficient(top), coeff }
        })
    }

    /// The action of `h` induced by `b ↦ h b h^{-1}` on the crossed product:
    /// a term at `g` moves to `h g h^{-1}` with its multivectors pushed
    /// forward by `h` and its coefficient `f ↦ f ∘ h^{-1}`.
    pub fn conjugation_action(&self, h: usize, a: &HHClass) -> HHClass {
        let field = self.group.field();
        let mut out = HHClass::zero(a.degree);
        for (g, comp) in a.components() {
            let cd = self.conj_data(h, g);
            let r = self.group.dim() - self.group.codim(g);
            for (&mask, f) in comp {
                let t = Multivector::basis_mask(field, r, mask).map_components(&cd.tangent).expect("frame dimensions agree");
                let f2 = f.substitute_linear(&cd.coeff).expect("frame dimensions agree").scale(cd.normal_scale);
                for (m2, c) in t.terms() {
                    out.add_raw(cd.target, m2, &f2.scale(c));
                }
            }
        }
        out
    }

    /// `(1/|G|) Σ_h h · a`.
    pub fn invariant_project(&self, a: &HHClass) -> HHClass {
        let field = self.group.field();
        let inv = field.elem(self.group.order() as i64).inverse().expect("p does not divide |G|");
        let mut acc = HHClass::zero(a.degree);
        for h in 0..self.group.order() {
            acc = acc.add(&self.conjugation_action(h, a)).expect("same degree");
        }
        acc.scale(inv)
    }

    pub fn is_invariant(&self, a: &HHClass) -> bool {
        (0..self.group.order()).all(|h| &self.conjugation_action(h, a) == a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::DEFAULT_BOUND;
    use crate::scalars::PrimeField;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn group(gens: &[Vec<Vec<i64>>]) -> GroupData {
        let f = f7();
        let gens: Vec<Matrix> = gens.iter().map(|g| Matrix::from_rows(f, g)).collect();
        GroupData::generate(f, &gens, DEFAULT_BOUND).unwrap()
    }

    fn term(grp: &GroupData, g: usize, tangent: &[usize], coeff: Polynomial) -> HHTerm {
        let f = grp.field();
        let d = grp.codim(g);
        HHTerm { g, tangent: Multivector::basis(f, grp.dim() - d, tangent), normal: Multivector::volume(f, d), coeff }
    }

    #[test]
    fn minus_identity_square_vanishes() {
        let grp = group(&[vec![vec![-1, 0], vec![0, -1]]]);
        let ring = HHRing::new(&grp);
        let a = ring.class_from_terms(2, &[term(&grp, 1, &[], Polynomial::one(f7(), 0))]).unwrap();
        let (prod, stats) = ring.product_with_stats(&a, &a).unwrap();
        assert!(prod.is_zero());
        assert_eq!(prod.degree(), 4);
        assert_eq!(stats.vanishing, vec![(1, 1)]);
    }

    #[test]
    fn swap_example() {
        let f = f7();
        let grp = group(&[vec![vec![0, 1], vec![1, 0]]]);
        let ring = HHRing::new(&grp);
        let s = 1;
        assert_eq!(grp.codim(s), 1);
        let alpha = ring.class_from_terms(1, &[term(&grp, s, &[], Polynomial::one(f, 1))]).unwrap();
        let gamma = ring.class_from_terms(1, &[term(&grp, 0, &[0], Polynomial::one(f, 2))]).unwrap();
        let half = f.elem(2).inverse().unwrap();
        let expected = ring.class_from_terms(2, &[term(&grp, s, &[0], Polynomial::constant(f, 1, -half))]).unwrap();
        assert_eq!(ring.product(&alpha, &gamma).unwrap(), expected);
        assert_eq!(ring.product(&gamma, &alpha).unwrap(), expected.scale(-f.one()));
    }

    #[test]
    fn unit_is_two_sided() {
        let f = f7();
        let grp = group(&[vec![vec![0, 1], vec![1, 0]]]);
        let ring = HHRing::new(&grp);
        let one = ring.unit();
        assert_eq!(one.degree(), 0);
        assert_eq!(ring.product(&one, &one).unwrap(), one);
        let x = Polynomial::var(f, 2, 1);
        let a = ring.class_from_terms(2, &[term(&grp, 0, &[0, 1], x.clone()), term(&grp, 1, &[0], Polynomial::var(f, 1, 0))]).unwrap();
        assert_eq!(ring.product(&one, &a).unwrap(), a);
        assert_eq!(ring.product(&a, &one).unwrap(), a);
    }

    #[test]
    fn conjugation_examples() {
        let f = f7();
        let grp = group(&[vec![vec![0, 1], vec![1, 0]]]);
        let ring = HHRing::new(&grp);
        let v1 = ring.class_from_terms(1, &[term(&grp, 0, &[0], Polynomial::one(f, 2))]).unwrap();
        let v2 = ring.class_from_terms(1, &[term(&grp, 0, &[1], Polynomial::one(f, 2))]).unwrap();
        assert_eq!(ring.conjugation_action(0, &v1), v1);
        assert_eq!(ring.conjugation_action(1, &v1), v2);

        let alpha = ring.class_from_terms(1, &[term(&grp, 1, &[], Polynomial::one(f, 1))]).unwrap();
        let orbit = alpha.add(&ring.conjugation_action(1, &alpha)).unwrap();
        assert_eq!(ring.conjugation_action(1, &orbit), orbit);
        assert!(ring.is_invariant(&orbit));
    }

    #[test]
    fn projection_examples() {
        let f = f7();
        let grp = group(&[vec![vec![-1, 0], vec![0, -1]]]);
        let ring = HHRing::new(&grp);
        let v1 = ring.class_from_terms(1, &[term(&grp, 0, &[0], Polynomial::one(f, 2))]).unwrap();
        assert!(ring.invariant_project(&v1).is_zero());
        assert_eq!(ring.invariant_project(&ring.unit()), ring.unit());
        let v12 = ring.class_from_terms(2, &[term(&grp, 0, &[0, 1], Polynomial::one(f, 2))]).unwrap();
        assert_eq!(ring.invariant_project(&v12), v12);
        let p = ring.invariant_project(&ring.class_from_terms(1, &[term(&grp, 0, &[0], Polynomial::var(f, 2, 1))]).unwrap());
        assert_eq!(ring.invariant_project(&p), p);
    }

    #[test]
    fn term_validation() {
        let f = f7();
        let grp = group(&[vec![vec![0, 1], vec![1, 0]]]);
        let ring = HHRing::new(&grp);
        // degree 0 class cannot live at the swap (d = 1)
        let bad = ring.class_from_terms(0, &[term(&grp, 1, &[], Polynomial::one(f, 1))]);
        assert!(matches!(bad, Err(Error::DegreeInhomogeneous(_))));
        let wrong_arity = HHTerm { coeff: Polynomial::one(f, 2), ..term(&grp, 1, &[], Polynomial::one(f, 1)) };
        assert!(matches!(ring.class_from_terms(1, &[wrong_arity]), Err(Error::ArityMismatch { .. })));
        let mut alien = HHClass::zero(1);
        alien.add_raw(5, 0, &Polynomial::one(f, 1));
        assert!(matches!(ring.product(&alien, &ring.unit()), Err(Error::ContextMismatch(_))));
    }
}

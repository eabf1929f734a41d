//! Symplectic actions: the canonical normal volumes `s_g` and the product
//! on tangent multivector fields obtained by trivializing the normal factor.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::GroupData;
use crate::hhalgebra::{HHClass, HHRing};
use crate::linalg::Matrix;
use crate::multilinear::{Mask, Multivector};
use crate::scalars::Scalar;

/// How `s_g` is normalized against `ω|_{(V^g)^∨}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VolumeNormalization {
    /// `⟨s_g, ω^{∧k} / k!⟩ = 1`, i.e. `s_g` is dual to the Pfaffian volume.
    Pfaffian,
    /// `⟨s_g, ω^{∧k}⟩ = 1`. Not multiplicative once two factors have
    /// codimension at least 2.
    UndividedPower,
}

impl VolumeNormalization {
    pub fn name(self) -> &'static str {
        match self {
            Self::Pfaffian => "pfaffian",
            Self::UndividedPower => "undivided-power",
        }
    }
}

/// The standard form `[[0, I], [-I, 0]]` on `F_p^n`, `n` even.
pub fn standard_omega(field: crate::scalars::PrimeField, n: usize) -> Result<Matrix> {
    if !n.is_multiple_of(2) {
        return Err(Error::NotSymplectic(format!("dimension {n} is odd")));
    }
    let k = n / 2;
    Ok(Matrix::from_fn(field, n, n, |r, c| {
        if c == r + k {
            field.one()
        } else if r == c + k {
            -field.one()
        } else {
            field.zero()
        }
    }))
}

fn top(d: usize) -> Mask {
    if d == 0 {
        0
    } else {
        (1 << d) - 1
    }
}

#[derive(Clone, Debug)]
pub struct SymplecticCtx<'a> {
    group: &'a GroupData,
    omega: Matrix,
    normalization: VolumeNormalization,
    /// `s_g = sigma[g] · w_1 ∧ … ∧ w_d` in the `(V^g)^∨` frame.
    sigma: Vec<Scalar>,
}

impl<'a> SymplecticCtx<'a> {
    pub fn new(group: &'a GroupData, omega: Matrix) -> Result<Self> {
        Self::with_normalization(group, omega, VolumeNormalization::Pfaffian)
    }

    pub fn with_normalization(group: &'a GroupData, omega: Matrix, normalization: VolumeNormalization) -> Result<Self> {
        let n = group.dim();
        if omega.rows() != n || omega.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, got: omega.rows() });
        }
        if !n.is_multiple_of(2) {
            return Err(Error::NotSymplectic(format!("dimension {n} is odd")));
        }
        if omega.transpose() != omega.scale(-group.field().one()) {
            return Err(Error::NotSymplectic("omega is not antisymmetric".into()));
        }
        if omega.determinant().is_zero() {
            return Err(Error::NotSymplectic("omega is degenerate".into()));
        }
        for (g, m) in group.elements().iter().enumerate() {
            if &(&m.transpose() * &omega) * m != omega {
                return Err(Error::NotSymplectic(format!("element {g} does not preserve omega")));
            }
        }
        let mut ctx = Self { group, omega, normalization, sigma: Vec::new() };
        ctx.sigma = (0..group.order()).map(|g| ctx.compute_sigma(g)).collect::<Result<_>>()?;
        Ok(ctx)
    }

    fn compute_sigma(&self, g: usize) -> Result<Scalar> {
        let field = self.group.field();
        let d = self.group.codim(g);
        if !d.is_multiple_of(2) {
            return Err(Error::NotSymplecticOnComplement(g));
        }
        let nb = self.group.frame(g).normal_basis();
        let gram = &(&nb.transpose() * &self.omega) * &nb;
        // ω| in the dual frame of (V^g)^∨
        let mut form = Multivector::zero(field, d, 2);
        for a in 0..d {
            for b in a + 1..d {
                form.add_term(1 << a | 1 << b, gram[(a, b)]);
            }
        }
        let k = d / 2;
        let mut power = Multivector::one(field, d);
        for _ in 0..k {
            power = power.wedge(&form)?;
        }
        let mut c = power.coefficient(top(d));
        if self.normalization == VolumeNormalization::Pfaffian {
            c *= field.inverse_factorial(k)?;
        }
        // the determinant pairing of the two frame volumes is 1
        c.inverse().map_err(|_| Error::NotSymplecticOnComplement(g))
    }

    pub fn group(&self) -> &'a GroupData {
        self.group
    }

    pub fn omega(&self) -> &Matrix {
        &self.omega
    }

    pub fn normalization(&self) -> VolumeNormalization {
        self.normalization
    }

    /// `s_g` over the `(V^g)^∨` frame.
    pub fn normal_volume(&self, g: usize) -> Multivector {
        Multivector::volume(self.group.field(), self.group.codim(g)).scale(self.sigma[g])
    }

    /// Coefficient of `s_g` against the frame volume.
    pub fn volume_scale(&self, g: usize) -> Scalar {
        self.sigma[g]
    }

    /// `s_g ∧ s_h` expressed over the `(V^{gh})^∨` frame.
    pub fn wedge_volumes(&self, g: usize, h: usize) -> Result<Multivector> {
        let grp = self.group;
        let u = grp.multiply(g, h);
        let sg = self.normal_volume(g).map_components(&grp.frame(g).normal_basis())?;
        let sh = self.normal_volume(h).map_components(&grp.frame(h).normal_basis())?;
        sg.wedge(&sh)?.coordinates_in(&grp.frame(u).normal_basis())
    }

    /// Whether `s_{gh} = s_g ∧ s_h` for a pair satisfying the support condition.
    pub fn is_multiplicative_on(&self, g: usize, h: usize) -> Result<bool> {
        let u = self.group.multiply(g, h);
        Ok(self.wedge_volumes(g, h)? == self.normal_volume(u))
    }
}

/// A class of tangent multivector fields: per `g`, elements of
/// `Λ^{i - d_g} V^g ⊗ k[V^g]`, with no normal factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticHHClass(pub HHClass);

impl SymplecticHHClass {
    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn inner(&self) -> &HHClass {
        &self.0
    }
}

pub fn sympl_product(
    ring: &HHRing<'_>,
    ctx: &SymplecticCtx<'_>,
    a: &SymplecticHHClass,
    b: &SymplecticHHClass,
) -> Result<SymplecticHHClass> {
    if !std::ptr::eq(ring.group(), ctx.group()) {
        return Err(Error::ContextMismatch("ring and symplectic context use different groups".into()));
    }
    Ok(SymplecticHHClass(ring.tangent_product(&a.0, &b.0)?))
}

/// `ξ ⊗ f` at `g` ↦ `ξ ⊗ s_g ⊗ f`.
pub fn trivialize(ctx: &SymplecticCtx<'_>, a: &SymplecticHHClass) -> HHClass {
    let mut out = HHClass::zero(a.degree());
    for (g, comp) in a.0.components() {
        let s = ctx.volume_scale(g);
        for (&mask, f) in comp {
            out.add_raw(g, mask, &f.scale(s));
        }
    }
    out
}

/// Inverse of [`trivialize`].
pub fn untrivialize(ctx: &SymplecticCtx<'_>, a: &HHClass) -> SymplecticHHClass {
    let mut out = HHClass::zero(a.degree());
    for (g, comp) in a.components() {
        let s = ctx.volume_scale(g).inverse().expect("s_g is nonzero");
        for (&mask, f) in comp {
            out.add_raw(g, mask, &f.scale(s));
        }
    }
    SymplecticHHClass(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::DEFAULT_BOUND;
    use crate::polyring::Polynomial;
    use crate::scalars::PrimeField;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn group(gens: &[Vec<Vec<i64>>]) -> GroupData {
        let gens: Vec<Matrix> = gens.iter().map(|g| Matrix::from_rows(f7(), g)).collect();
        GroupData::generate(f7(), &gens, DEFAULT_BOUND).unwrap()
    }

    #[test]
    fn minus_identity_volume() {
        let grp = group(&[vec![vec![-1, 0], vec![0, -1]]]);
        let omega = standard_omega(f7(), 2).unwrap();
        let ctx = SymplecticCtx::new(&grp, omega.clone()).unwrap();
        assert_eq!(ctx.normal_volume(0), Multivector::one(f7(), 0));
        // frame of -Id is the standard basis; ω(e1, e2) = 1, so s = e1 ∧ e2
        let nb = grp.frame(1).normal_basis();
        let c = (&(&nb.transpose() * &omega) * &nb)[(0, 1)];
        assert_eq!(ctx.volume_scale(1), c.inverse().unwrap());
        let undivided = SymplecticCtx::with_normalization(&grp, omega, VolumeNormalization::UndividedPower).unwrap();
        assert_eq!(undivided.volume_scale(1), ctx.volume_scale(1));
    }

    #[test]
    fn rejects_non_symplectic_data() {
        let field = f7();
        let grp = group(&[vec![vec![2, 0], vec![0, 2]]]);
        let omega = standard_omega(field, 2).unwrap();
        assert!(matches!(SymplecticCtx::new(&grp, omega), Err(Error::NotSymplectic(_))));
        let grp = group(&[vec![vec![-1, 0], vec![0, -1]]]);
        let sym = Matrix::from_rows(field, &[vec![0, 1], vec![1, 0]]);
        assert!(matches!(SymplecticCtx::new(&grp, sym), Err(Error::NotSymplectic(_))));
        assert!(standard_omega(field, 3).is_err());
    }

    #[test]
    fn z3_products() {
        let grp = group(&[vec![vec![2, 0], vec![0, 4]]]);
        let field = f7();
        let ring = HHRing::new(&grp);
        let ctx = SymplecticCtx::new(&grp, standard_omega(field, 2).unwrap()).unwrap();
        let g = grp.index_of(&Matrix::from_rows(field, &[vec![2, 0], vec![0, 4]])).unwrap();
        let g_inv = grp.inverse(g);
        let at = |x: usize| {
            let mut c = HHClass::zero(2);
            c.add_raw(x, 0, &Polynomial::one(field, 0));
            SymplecticHHClass(c)
        };
        assert!(sympl_product(&ring, &ctx, &at(g), &at(g_inv)).unwrap().inner().is_zero());
        let unit = SymplecticHHClass(ring.unit());
        assert_eq!(sympl_product(&ring, &ctx, &at(g), &unit).unwrap(), at(g));
        assert_eq!(sympl_product(&ring, &ctx, &unit, &at(g)).unwrap(), at(g));
        for x in 0..3 {
            for y in 0..3 {
                if grp.intersection_condition(x, y) {
                    assert!(ctx.is_multiplicative_on(x, y).unwrap());
                }
            }
        }
    }

    fn klein_four() -> (GroupData, Matrix) {
        let grp = group(&[
            vec![vec![-1, 0, 0, 0], vec![0, -1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]],
            vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, -1, 0], vec![0, 0, 0, -1]],
        ]);
        let omega = Matrix::from_rows(f7(), &[vec![0, 1, 0, 0], vec![-1, 0, 0, 0], vec![0, 0, 0, 1], vec![0, 0, -1, 0]]);
        (grp, omega)
    }

    #[test]
    fn pfaffian_volumes_are_multiplicative() {
        let (grp, omega) = klein_four();
        let ctx = SymplecticCtx::new(&grp, omega).unwrap();
        let mut checked = 0;
        for g in 0..4 {
            for h in 0..4 {
                if grp.intersection_condition(g, h) {
                    assert!(ctx.is_multiplicative_on(g, h).unwrap(), "{g} {h}");
                    checked += 1;
                }
            }
        }
        // identity pairs plus the two mixed pairs of involutions
        assert_eq!(checked, 9);
    }

    #[test]
    fn undivided_powers_miss_by_one_half() {
        let (grp, omega) = klein_four();
        let ctx = SymplecticCtx::with_normalization(&grp, omega, VolumeNormalization::UndividedPower).unwrap();
        let field = f7();
        let (g, h) = (1..4)
            .flat_map(|g| (1..4).map(move |h| (g, h)))
            .find(|&(g, h)| g != h && grp.codim(g) == 2 && grp.codim(h) == 2 && grp.intersection_condition(g, h))
            .unwrap();
        let u = grp.multiply(g, h);
        assert_eq!(grp.codim(u), 4);
        assert!(!ctx.is_multiplicative_on(g, h).unwrap());
        let half = field.elem(2).inverse().unwrap();
        assert_eq!(ctx.wedge_volumes(g, h).unwrap().scale(half), ctx.normal_volume(u));
    }

    #[test]
    fn trivialization_intertwines_products() {
        let (grp, omega) = klein_four();
        let field = f7();
        let ring = HHRing::new(&grp);
        let ctx = SymplecticCtx::new(&grp, omega).unwrap();
        let mut a = HHClass::zero(2);
        let mut b = HHClass::zero(2);
        for g in 1..4 {
            if grp.codim(g) == 2 {
                a.add_raw(g, 0, &(&Polynomial::var(field, 2, 0) + &Polynomial::one(field, 2)));
                b.add_raw(g, 0, &(&Polynomial::var(field, 2, 1) + &Polynomial::constant(field, 2, field.elem(3))));
            }
        }
        let (a, b) = (SymplecticHHClass(a), SymplecticHHClass(b));
        let lhs = trivialize(&ctx, &sympl_product(&ring, &ctx, &a, &b).unwrap());
        let rhs = ring.product(&trivialize(&ctx, &a), &trivialize(&ctx, &b)).unwrap();
        assert!(!rhs.is_zero());
        assert_eq!(lhs, rhs);
        assert_eq!(untrivialize(&ctx, &trivialize(&ctx, &a)), a);
    }
}

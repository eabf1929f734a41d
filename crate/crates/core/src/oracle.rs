//! Independent checks for the closed-form ring structure.
//!
//! * [`KoszulComplex`] builds `Λ^* V ⊗ k[V] g` with the differential
//!   `ξ ⊗ a ↦ Σ_i v_i ∧ ξ ⊗ (x_i - x_i^g) a` in standard coordinates and
//!   computes its cohomology by elimination.
//! * [`Cochain`] tables hold the values of Hochschild cochains on tuples of
//!   linear coordinate functions. The antisymmetrization map
//!   [`hkr_cochain`], the cup product [`mu_product`] and the read-off
//!   [`read_off`] compose into [`oracle_product`], which never consults the
//!   support rule or the symmetrizers used by [`crate::hhalgebra`].

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::groups::GroupData;
use crate::hhalgebra::{HHClass, HHTerm};
use crate::linalg::Matrix;
use crate::multilinear::{mask_indices, merge_sign, subsets, Mask, Multivector};
use crate::polyring::{monomials_of_degree, Monomial, Polynomial};
use crate::scalars::Scalar;

/// Sign of a permutation given as images of `0..n`.
pub fn permutation_sign(perm: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim Λ^{q-d} V^g ⊗ Λ^d (V^g)^∨ ⊗ k[V^g]_D`.
pub fn closed_form_dim(group: &GroupData, g: usize, q: usize, poly_degree: u32) -> usize {
    let d = group.codim(g);
    let r = group.dim() - d;
    if q < d {
        return 0;
    }
    binomial(r, q - d) * monomials_of_degree(r, poly_degree).len()
}

/// The Koszul complex computing `H^*(k[V], k[V] g)`, bigraded by exterior
/// degree and polynomial degree. The differential has bidegree `(1, 1)`.
pub struct KoszulComplex<'a> {
    group: &'a GroupData,
    g: usize,
    /// `x_i - x_i^g` as linear forms.
    twists: Vec<Polynomial>,
}

impl<'a> KoszulComplex<'a> {
    pub fn new(group: &'a GroupData, g: usize) -> Self {
        let n = group.dim();
        let field = group.field();
        let g_inv = group.element(group.inverse(g));
        let twists = (0..n)
            .map(|i| {
                let x = Polynomial::var(field, n, i);
                // x_i^g = x_i ∘ g^{-1}
                let xg = Polynomial::linear(field, g_inv.row(i));
                &x - &xg
            })
            .collect();
        Self { group, g, twists }
    }

    pub fn element(&self) -> usize {
        self.g
    }

    /// Basis of `Λ^q V ⊗ k[V]_D`: masks ascending, then monomials graded-lex.
    pub fn basis(&self, q: usize, poly_degree: u32) -> Vec<(Mask, Monomial)> {
        let n = self.group.dim();
        let monos = monomials_of_degree(n, poly_degree);
        subsets(n, q).into_iter().flat_map(|m| monos.iter().map(move |mono| (m, mono.clone()))).collect()
    }

    /// Matrix of `d: (q, D) → (q + 1, D + 1)`, columns indexed by the source basis.
    pub fn differential(&self, q: usize, poly_degree: u32) -> Matrix {
        let field = self.group.field();
        let src = self.basis(q, poly_degree);
        let dst = self.basis(q + 1, poly_degree + 1);
        let index: BTreeMap<(Mask, Monomial), usize> = dst.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let mut m = Matrix::zeros(field, dst.len(), src.len());
        for (col, (mask, mono)) in src.iter().enumerate() {
            let a = Polynomial::monomial(field, mono.clone(), field.one());
            for (i, twist) in self.twists.iter().enumerate() {
                let Some(neg) = merge_sign(1 << i, *mask) else { continue };
                let sign = if neg { -field.one() } else { field.one() };
                let image = twist * &a;
                for (mo, c) in image.terms() {
                    let row = index[&(mask | 1 << i, mo.clone())];
                    m[(row, col)] += sign * c;
                }
            }
        }
        m
    }

    pub fn cohomology_dim(&self, q: usize, poly_degree: u32) -> Result<usize> {
        let n = self.group.dim();
        if q > n {
            return Err(Error::OutOfRange(format!("exterior degree {q} exceeds dim V = {n}")));
        }
        let d_out = self.differential(q, poly_degree);
        let kernel = d_out.cols() - d_out.rank();
        let image = if q > 0 && poly_degree > 0 { self.differential(q - 1, poly_degree - 1).rank() } else { 0 };
        Ok(kernel - image)
    }

    /// Whether `d ∘ d = 0` at `(q, D) → (q + 2, D + 2)`.
    pub fn square_vanishes(&self, q: usize, poly_degree: u32) -> bool {
        let first = self.differential(q, poly_degree);
        let second = self.differential(q + 1, poly_degree + 1);
        (&second * &first).is_zero()
    }
}

/// A Hochschild cochain `A^{⊗i} → A g` tabulated on tuples of the standard
/// coordinate functions `x_1, …, x_n`. Absent tuples evaluate to zero; the
/// value on arbitrary linear forms follows by multilinearity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    arity: usize,
    target: usize,
    nvars: usize,
    table: BTreeMap<Vec<usize>, Polynomial>,
}

impl Cochain {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &Polynomial)> + '_ {
        self.table.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Value on coordinate functions `x_{l_1}, …, x_{l_i}`.
    pub fn value(&self, tuple: &[usize]) -> Option<Polynomial> {
        if tuple.len() != self.arity || tuple.iter().any(|&l| l >= self.nvars) {
            return None;
        }
        let field = self.table.values().next().map(Polynomial::field);
        Some(match self.table.get(tuple) {
            Some(p) => p.clone(),
            None => Polynomial::zero(field?, self.nvars),
        })
    }

    /// Value on linear forms given by their coefficient vectors.
    pub fn evaluate(&self, args: &[Vec<Scalar>]) -> Result<Polynomial> {
        if args.len() != self.arity || args.iter().any(|a| a.len() != self.nvars) {
            return Err(Error::IncompleteTable);
        }
        let mut acc: Option<Polynomial> = None;
        for (tuple, p) in &self.table {
            let c = tuple.iter().zip(args).fold(p.field().one(), |c, (&l, a)| c * a[l]);
            if c.is_zero() {
                continue;
            }
            let term = p.scale(c);
            acc = Some(match acc {
                Some(a) => &a + &term,
                None => term,
            });
        }
        match acc {
            Some(p) => Ok(p),
            None => Ok(Polynomial::zero(self.table.values().next().map(Polynomial::field).ok_or(Error::IncompleteTable)?, self.nvars)),
        }
    }

    fn insert(&mut self, tuple: Vec<usize>, p: Polynomial) {
        if p.is_zero() {
            return;
        }
        let merged = match self.table.remove(&tuple) {
            Some(old) => &old + &p,
            None => p,
        };
        if !merged.is_zero() {
            self.table.insert(tuple, merged);
        }
    }
}

/// The antisymmetrization cochain of `ξ ⊗ f` with target `g`:
/// `(y_1, …, y_i) ↦ (1/i!) Σ_σ sgn(σ) Π_k ⟨ξ_k, y_σ(k)⟩ · f`,
/// extended linearly over the basis terms of `ξ`.
///
/// `xi` is in standard coordinates of `V`; `f` is a function on `V`.
pub fn hkr_cochain(group: &GroupData, g: usize, xi: &Multivector, f: &Polynomial) -> Result<Cochain> {
    let n = group.dim();
    let field = group.field();
    if xi.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, got: xi.dim() });
    }
    if f.nvars() != n {
        return Err(Error::ArityMismatch { expected: n, got: f.nvars() });
    }
    let i = xi.degree();
    let inv_fact = field.inverse_factorial(i)?;
    let perms: Vec<(Vec<usize>, bool)> = (0..i)
        .permutations(i)
        .map(|p| {
            let s = permutation_sign(&p);
            (p, s)
        })
        .collect();
    let mut out = Cochain { arity: i, target: g, nvars: n, table: BTreeMap::new() };
    for tuple in std::iter::repeat_n(0..n, i).multi_cartesian_product() {
        let mut value = field.zero();
        for (mask, c) in xi.terms() {
            let factors = mask_indices(mask);
            for (sigma, odd) in &perms {
                // Π_k ⟨v_{s_k}, x_{l_σ(k)}⟩ is 1 iff s_k = l_σ(k) for all k
                if factors.iter().enumerate().all(|(k, &s)| tuple[sigma[k]] == s) {
                    value += if *odd { -c } else { c };
                }
            }
        }
        if !value.is_zero() {
            out.insert(tuple, f.scale(value * inv_fact));
        }
    }
    if i == 0 {
        // the empty tuple carries the constant value f
        out.table.clear();
        out.insert(vec![], f.clone());
    }
    Ok(out)
}

/// `μ(Φ g ⊗ Ψ h)(a_1, …, a_{i+j}) = Φ(a_1, …, a_i) · Ψ(a_{i+1}, …)^g · gh`,
/// with `(·)^g` the action on the output value forced by `g a = a^g g`.
pub fn mu_product(group: &GroupData, phi: &Cochain, psi: &Cochain) -> Result<Cochain> {
    if phi.nvars != psi.nvars || phi.nvars != group.dim() {
        return Err(Error::ContextMismatch("cochains tabulated on different spaces".into()));
    }
    let g = phi.target;
    let gm = group.element(g);
    let acted: Vec<(&Vec<usize>, Polynomial)> = psi.table.iter().map(|(k, p)| Ok((k, p.act(gm)?))).collect::<Result<_>>()?;
    let mut out = Cochain { arity: phi.arity + psi.arity, target: group.multiply(g, psi.target), nvars: phi.nvars, table: BTreeMap::new() };
    for (k1, p1) in &phi.table {
        for (k2, p2) in &acted {
            let mut key = k1.clone();
            key.extend_from_slice(k2);
            out.insert(key, p1 * p2);
        }
    }
    Ok(out)
}

/// Reads a cochain with target `u` back into `Λ V^u ⊗ Λ^{d_u} (V^u)^∨ ⊗ k[V^u]`.
///
/// For every increasing tangent multi-index `M` of the `u`-eigenframe, the
/// cochain is evaluated on the dual coordinates `(y_M, y_{normal})`,
/// antisymmetrized over all argument orders, and restricted to `V^u`.
pub fn read_off(group: &GroupData, c: &Cochain) -> Result<HHClass> {
    if c.nvars != group.dim() {
        return Err(Error::IncompleteTable);
    }
    let u = c.target;
    let frame = group.frame(u);
    let n = group.dim();
    let (d, r) = (frame.codim(), frame.fixed_dim());
    let m = c.arity;
    let mut out = HHClass::zero(m);
    if m < d {
        return Ok(out);
    }
    let dual: Vec<Vec<Scalar>> = frame.inverse().row_vectors();
    let perms: Vec<(Vec<usize>, bool)> = (0..m)
        .permutations(m)
        .map(|p| {
            let s = permutation_sign(&p);
            (p, s)
        })
        .collect();
    let restrict = frame.tangent_basis();
    for mask in subsets(r, m - d) {
        let slots: Vec<usize> = mask_indices(mask).into_iter().chain(r..n).collect();
        let mut acc = Polynomial::zero(group.field(), n);
        for (sigma, odd) in &perms {
            let args: Vec<Vec<Scalar>> = sigma.iter().map(|&s| dual[slots[s]].clone()).collect();
            let v = c.evaluate(&args)?;
            acc = if *odd { &acc - &v } else { &acc + &v };
        }
        out.add_raw(u, mask, &acc.restrict_to_subspace(&restrict)?);
    }
    Ok(out)
}

/// The natural inclusion of a term at `g` into `Λ^i V ⊗ k[V]`: `ξ¹ ∧ ξ²` in
/// standard coordinates, and `f` extended to `V` along the eigen-splitting.
pub fn include_term(group: &GroupData, t: &HHTerm) -> Result<(Multivector, Polynomial)> {
    let frame = group.frame(t.g);
    let tangent = t.tangent.map_components(&frame.tangent_basis())?;
    let normal = t.normal.map_components(&frame.normal_basis())?;
    let coeff = t.coeff.substitute_linear(&frame.tangent_coordinates())?;
    Ok((tangent.wedge(&normal)?, coeff))
}

/// `ψ_{i+j, gh} ∘ μ ∘ (φ_{i,g} ⊗ φ_{j,h})` for a single pair of terms.
pub fn oracle_term_product(group: &GroupData, a: &HHTerm, i: usize, b: &HHTerm, j: usize) -> Result<HHClass> {
    group.field().inverse_factorial(i + j)?;
    let (xi, f) = include_term(group, a)?;
    let (nu, e) = include_term(group, b)?;
    let phi = hkr_cochain(group, a.g, &xi, &f)?;
    let psi = hkr_cochain(group, b.g, &nu, &e)?;
    let prod = mu_product(group, &phi, &psi)?;
    debug_assert_eq!(prod.arity(), i + j);
    read_off(group, &prod)
}

/// Cochain-level product of two homogeneous classes, term by term.
pub fn oracle_product(group: &GroupData, a: &HHClass, b: &HHClass) -> Result<HHClass> {
    let (i, j) = (a.degree(), b.degree());
    group.field().inverse_factorial(i + j)?;
    let ring = crate::hhalgebra::HHRing::new(group);
    ring.validate(a)?;
    ring.validate(b)?;
    let mut out = HHClass::zero(i + j);
    for ta in ring.terms(a) {
        for tb in ring.terms(b) {
            out = out.add(&oracle_term_product(group, &ta, i, &tb, j)?)?;
        }
    }
    Ok(out)
}

//! Sparse multivariate polynomials over F_p with linear substitutions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{PrimeField, Scalar};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of total degree `d` in `nvars` variables, ascending.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(d);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            rec(nvars, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(vec![]));
        }
        return out;
    }
    rec(nvars, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: PrimeField,
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        Self { field, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: PrimeField, nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(field, nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(field: PrimeField, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    /// The coordinate function `x_{i+1}` (zero-based `i`).
    pub fn var(field: PrimeField, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(field, Monomial(e), field.one())
    }

    pub fn monomial(field: PrimeField, m: Monomial, c: Scalar) -> Self {
        let mut p = Self::zero(field, m.nvars());
        p.add_term(m, c);
        p
    }

    /// Linear form `Σ coeffs[i] x_i`.
    pub fn linear(field: PrimeField, coeffs: &[Scalar]) -> Self {
        let mut p = Self::zero(field, coeffs.len());
        for (i, &c) in coeffs.iter().enumerate() {
            p = &p + &Self::var(field, coeffs.len(), i).scale(c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        assert_eq!(m.nvars(), self.nvars, "monomial arity");
        if c.is_zero() {
            return;
        }
        let key = m.clone();
        let entry = self.terms.entry(m).or_insert(self.field.zero());
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Scalar)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).copied().unwrap_or(self.field.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn scale(&self, s: Scalar) -> Polynomial {
        let mut out = Self::zero(self.field, self.nvars);
        if s.is_zero() {
            return out;
        }
        for (m, c) in self.terms() {
            out.terms.insert(m.clone(), c * s);
        }
        out
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: other.nvars });
        }
        let mut out = Self::zero(self.field, self.nvars);
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: other.nvars });
        }
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        (0..e).fold(Self::one(self.field, self.nvars), |acc, _| &acc * self)
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars);
        self.terms().fold(self.field.zero(), |acc, (m, c)| acc + m.0.iter().zip(point).fold(c, |t, (&e, &x)| t * x.pow(e as u64)))
    }

    /// `f ∘ M` for an `nvars × k` matrix `M`: every `x_i` is replaced by the
    /// linear form `Σ_j M[i][j] y_j` in `k` new variables.
    pub fn substitute_linear(&self, m: &Matrix) -> Result<Polynomial> {
        if m.rows() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, got: m.rows() });
        }
        let k = m.cols();
        let forms: Vec<Polynomial> = (0..self.nvars).map(|i| Polynomial::linear(self.field, m.row(i))).collect();
        let mut power_cache: BTreeMap<(usize, u32), Polynomial> = BTreeMap::new();
        let mut out = Self::zero(self.field, k);
        for (mono, c) in self.terms() {
            let mut acc = Self::constant(self.field, k, c);
            for (i, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = power_cache.entry((i, e)).or_insert_with(|| forms[i].pow(e));
                acc = &acc * pw;
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// Pullback along the parametrization `t ↦ B t` of a subspace whose basis
    /// vectors are the columns of `basis`.
    pub fn restrict_to_subspace(&self, basis: &Matrix) -> Result<Polynomial> {
        self.substitute_linear(basis)
    }

    /// The left action `f^g = f ∘ g^{-1}`.
    pub fn act(&self, g: &Matrix) -> Result<Polynomial> {
        self.substitute_linear(&g.inverse()?)
    }

    /// Text form such as `3*x1^2*x2 + 5`, highest terms first, residues in `[0, p)`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let vars: Vec<String> =
                    m.0.iter()
                        .enumerate()
                        .filter(|(_, &e)| e > 0)
                        .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                        .collect();
                match (vars.is_empty(), c.is_one()) {
                    (true, _) => c.to_string(),
                    (false, true) => vars.join("*"),
                    (false, false) => format!("{}*{}", c, vars.join("*")),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial arity mismatch")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &rhs.scale(-self.field.one())
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(-self.field.one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(f(), n, i)
    }

    #[test]
    fn multiplication_examples() {
        let one = Polynomial::one(f(), 2);
        let x1 = x(2, 0);
        let x2 = x(2, 1);
        assert_eq!(&x1 * &one, x1);
        let x1x2 = Polynomial::monomial(f(), Monomial(vec![1, 1]), f().one());
        assert_eq!(&x1 * &x2, x1x2);
        let sq = (&x1 + &x2).pow(2);
        assert_eq!(sq.coefficient(&Monomial(vec![2, 0])), f().one());
        assert_eq!(sq.coefficient(&Monomial(vec![1, 1])), f().elem(2));
        assert_eq!(sq.coefficient(&Monomial(vec![0, 2])), f().one());
        assert_eq!(sq.len(), 3);
        assert_eq!(x1.try_mul(&x(3, 0)), Err(Error::ArityMismatch { expected: 2, got: 3 }));
    }

    #[test]
    fn substitution_examples() {
        let field = f();
        let x1 = x(2, 0);
        assert_eq!(x1.substitute_linear(&Matrix::identity(field, 2)).unwrap(), x1);
        let neg = Matrix::from_rows(field, &[vec![-1, 0], vec![0, -1]]);
        assert_eq!(x1.act(&neg).unwrap(), -&x1);
        let z = field.elem(2); // primitive cube root mod 7
        let g = Matrix::diagonal(field, &[z, z * z]);
        let x1x2 = &x1 * &x(2, 1);
        assert_eq!(x1x2.substitute_linear(&g).unwrap(), x1x2);
        assert_eq!(x1x2.act(&g).unwrap(), x1x2);
    }

    #[test]
    fn restriction_examples() {
        let field = f();
        let diag = Matrix::from_rows(field, &[vec![1], vec![1]]);
        let c = Polynomial::constant(field, 2, field.elem(4));
        assert_eq!(c.restrict_to_subspace(&diag).unwrap(), Polynomial::constant(field, 1, field.elem(4)));
        let diff = &x(2, 0) - &x(2, 1);
        assert!(diff.restrict_to_subspace(&diag).unwrap().is_zero());
        let prod = &x(2, 0) * &x(2, 1);
        assert_eq!(prod.restrict_to_subspace(&diag).unwrap(), x(1, 0).pow(2));
    }

    #[test]
    fn rendering() {
        let field = f();
        let p = &(&x(2, 0).pow(2) * &x(2, 1)).scale(field.elem(3)) + &Polynomial::constant(field, 2, field.elem(5));
        assert_eq!(p.render(), "3*x1^2*x2 + 5");
        assert_eq!(Polynomial::zero(field, 2).render(), "0");
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert!(monomials_of_degree(0, 1).is_empty());
        assert_eq!(monomials_of_degree(2, 4).len(), 5);
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..3, n), 0i64..7), 0..5).prop_map(move |ts| {
            let mut p = Polynomial::zero(f(), n);
            for (e, c) in ts {
                p.add_term(Monomial(e), f().elem(c));
            }
            p
        })
    }

    fn arb_invertible(n: usize) -> impl Strategy<Value = Matrix> {
        prop::collection::vec(0i64..7, n * n)
            .prop_map(move |v| Matrix::from_fn(f(), n, n, |r, c| f().elem(v[r * n + c])))
            .prop_filter("invertible", |m| !m.determinant().is_zero())
    }

    proptest! {
        #[test]
        fn substitution_is_ring_homomorphism(a in arb_poly(3), b in arb_poly(3), m in arb_invertible(3)) {
            let sa = a.substitute_linear(&m).unwrap();
            let sb = b.substitute_linear(&m).unwrap();
            prop_assert_eq!((&a + &b).substitute_linear(&m).unwrap(), &sa + &sb);
            prop_assert_eq!((&a * &b).substitute_linear(&m).unwrap(), &sa * &sb);
        }

        #[test]
        fn action_composes(a in arb_poly(2), g in arb_invertible(2), h in arb_invertible(2)) {
            // (f^h)^g = f^{gh} for the left action f^g = f ∘ g^{-1}
            let lhs = a.act(&h).unwrap().act(&g).unwrap();
            prop_assert_eq!(lhs, a.act(&(&g * &h)).unwrap());
        }

        #[test]
        fn restriction_inverts_inclusion(a in arb_poly(2), m in arb_invertible(3)) {
            // lift a from the span of the first two columns of m, then restrict back
            let basis = m.select_columns(0..2);
            let coords = m.inverse().unwrap().select_rows(0..2);
            let lifted = a.substitute_linear(&coords).unwrap();
            prop_assert_eq!(lifted.restrict_to_subspace(&basis).unwrap(), a);
        }
    }
}

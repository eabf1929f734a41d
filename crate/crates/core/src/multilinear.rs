//! Homogeneous elements of the exterior algebra of a based space.
//!
//! Basis multivectors `e_{i1} ∧ … ∧ e_{ik}` with `i1 < … < ik` are encoded as
//! bitmasks; the sign of a wedge is the parity of the inversions produced by
//! merging two index sets.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{PrimeField, Scalar};

pub type Mask = u64;

/// Indices set in `mask`, ascending.
pub fn mask_indices(mask: Mask) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

pub fn mask_of(indices: &[usize]) -> Mask {
    indices.iter().fold(0, |m, &i| m | 1 << i)
}

/// Sign of `e_a ∧ e_b` relative to `e_{a ∪ b}`; `None` when they overlap.
pub fn merge_sign(a: Mask, b: Mask) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    // inversions: pairs (i in a, j in b) with i > j
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (a >> j).count_ones();
        rest &= rest - 1;
    }
    Some(inversions % 2 == 1)
}

/// All masks of `k` elements drawn from `0..n`, in increasing numeric order.
pub fn subsets(n: usize, k: usize) -> Vec<Mask> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(mask_of(&idx));
        let mut i = k;
        loop {
            if i == 0 {
                out.sort_unstable();
                return out;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multivector {
    field: PrimeField,
    dim: usize,
    degree: usize,
    terms: BTreeMap<Mask, Scalar>,
}

impl Multivector {
    pub fn zero(field: PrimeField, dim: usize, degree: usize) -> Self {
        Self { field, dim, degree, terms: BTreeMap::new() }
    }

    /// The scalar `c` as a degree-0 multivector.
    pub fn scalar(field: PrimeField, dim: usize, c: Scalar) -> Self {
        Self::zero(field, dim, 0).with_term(0, c)
    }

    pub fn one(field: PrimeField, dim: usize) -> Self {
        Self::scalar(field, dim, field.one())
    }

    /// `e_{i1} ∧ … ∧ e_{ik}` for strictly increasing indices.
    pub fn basis(field: PrimeField, dim: usize, indices: &[usize]) -> Self {
        assert!(indices.windows(2).all(|w| w[0] < w[1]), "indices must increase");
        assert!(indices.iter().all(|&i| i < dim));
        Self::basis_mask(field, dim, mask_of(indices))
    }

    pub fn basis_mask(field: PrimeField, dim: usize, mask: Mask) -> Self {
        Self::zero(field, dim, mask.count_ones() as usize).with_term(mask, field.one())
    }

    /// Degree-1 multivector with the given coordinates.
    pub fn vector(field: PrimeField, coords: &[Scalar]) -> Self {
        let mut out = Self::zero(field, coords.len(), 1);
        for (i, &c) in coords.iter().enumerate() {
            out.add_term(1 << i, c);
        }
        out
    }

    /// Top-degree basis element `e_0 ∧ … ∧ e_{dim-1}`.
    pub fn volume(field: PrimeField, dim: usize) -> Self {
        Self::basis_mask(field, dim, (1u64 << dim) - 1)
    }

    fn with_term(mut self, mask: Mask, c: Scalar) -> Self {
        self.add_term(mask, c);
        self
    }

    /// Adds `c · e_mask`. The mask must match the degree.
    pub fn add_term(&mut self, mask: Mask, c: Scalar) {
        assert_eq!(mask.count_ones() as usize, self.degree, "inhomogeneous term");
        assert!(mask >> self.dim == 0, "index outside ambient dimension");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert(self.field.zero());
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, Scalar)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn coefficient(&self, mask: Mask) -> Scalar {
        self.terms.get(&mask).copied().unwrap_or(self.field.zero())
    }

    pub fn scale(&self, s: Scalar) -> Multivector {
        let mut out = Self::zero(self.field, self.dim, self.degree);
        for (m, c) in self.terms() {
            out.add_term(m, c * s);
        }
        out
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeInhomogeneous(format!("{} vs {}", self.degree, other.degree)));
        }
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn wedge(&self, other: &Multivector) -> Result<Multivector> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        let mut out = Self::zero(self.field, self.dim, self.degree + other.degree);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                if let Some(neg) = merge_sign(a, b) {
                    let c = ca * cb;
                    out.add_term(a | b, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Applies `Λ^k M` for an `m × dim` matrix `M`; the result lives in
    /// `m`-space. On decomposables this is the wedge of the images.
    pub fn map_components(&self, m: &Matrix) -> Result<Multivector> {
        if m.cols() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: m.cols() });
        }
        let images: Vec<Multivector> = (0..m.cols()).map(|c| Multivector::vector(self.field, &m.column(c))).collect();
        let mut out = Self::zero(self.field, m.rows(), self.degree);
        for (mask, c) in self.terms() {
            let mut acc = Multivector::scalar(self.field, m.rows(), c);
            for i in mask_indices(mask) {
                acc = acc.wedge(&images[i])?;
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    /// Re-expresses `self`, given in coordinates of `old_frame` (columns are
    /// the frame vectors in a common ambient space), in coordinates of
    /// `new_frame`.
    pub fn reframe(&self, old_frame: &Matrix, new_frame: &Matrix) -> Result<Multivector> {
        if old_frame.rows() != new_frame.rows() {
            return Err(Error::DimensionMismatch { expected: old_frame.rows(), got: new_frame.rows() });
        }
        let ambient = self.map_components(old_frame)?;
        ambient.coordinates_in(new_frame)
    }

    /// Coordinates of an ambient multivector with respect to the frame whose
    /// vectors are the (independent) columns of `frame`.
    pub fn coordinates_in(&self, frame: &Matrix) -> Result<Multivector> {
        let left = left_inverse(frame)?;
        let coords = self.map_components(&left)?;
        if &coords.map_components(frame)? != self {
            return Err(Error::NotInSpan);
        }
        Ok(coords)
    }
}

/// A left inverse `L` of a matrix with independent columns (`L F = Id`),
/// obtained by completing the columns to a basis.
pub fn left_inverse(frame: &Matrix) -> Result<Matrix> {
    let field = frame.field();
    let (n, k) = (frame.rows(), frame.cols());
    if frame.rank() != k {
        return Err(Error::NotInSpan);
    }
    let mut full = frame.clone();
    for i in 0..n {
        if full.cols() == n {
            break;
        }
        let mut e = Matrix::zeros(field, n, 1);
        e[(i, 0)] = field.one();
        let candidate = full.hstack(&e);
        if candidate.rank() == candidate.cols() {
            full = candidate;
        }
    }
    Ok(full.inverse()?.select_rows(0..k))
}

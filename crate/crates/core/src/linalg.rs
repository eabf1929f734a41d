//! Dense exact linear algebra over F_p.
//!
//! Gaussian elimination is the only engine: rank, kernels, inverses and
//! canonical subspaces all go through [`Matrix::rref`]. Vectors are columns;
//! subspaces are stored as the rows of a reduced row-echelon matrix.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::scalars::{FieldCtx, PrimeField, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: PrimeField,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(field: PrimeField, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, field, data }
    }

    /// Integer entries, reduced mod p. Panics on ragged input.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self::from_fn(field, rows.len(), cols, |r, c| field.elem(rows[r][c]))
    }

    pub fn from_scalar_rows(field: PrimeField, rows: &[Vec<Scalar>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_fn(field, rows.len(), cols, |r, c| rows[r][c])
    }

    /// Matrix whose columns are the given vectors, living in `dim`-space.
    pub fn from_columns(field: PrimeField, dim: usize, columns: &[Vec<Scalar>]) -> Self {
        Self::from_fn(field, dim, columns.len(), |r, c| columns[c][r])
    }

    pub fn diagonal(field: PrimeField, entries: &[Scalar]) -> Self {
        let mut m = Self::zeros(field, entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    /// Signed integer rendering, row-major, for reports.
    pub fn to_signed_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).iter().map(Scalar::signed).collect()).collect()
    }

    pub fn to_residue_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).iter().map(Scalar::value).collect()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn scale(&self, s: Scalar) -> Matrix {
        Matrix { data: self.data.iter().map(|&x| x * s).collect(), ..self.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|r| self.row(r).iter().zip(v).fold(self.field.zero(), |acc, (&a, &b)| acc + a * b)).collect()
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Columns `range` as a new matrix.
    pub fn select_columns(&self, cols: std::ops::Range<usize>) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |r, c| self[(r, cols.start + c)])
    }

    pub fn select_rows(&self, rows: std::ops::Range<usize>) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |r, c| self[(rows.start + r, c)])
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(
            self.field,
            self.rows,
            self.cols + other.cols,
            |r, c| {
                if c < self.cols {
                    self[(r, c)]
                } else {
                    other[(r, c - self.cols)]
                }
            },
        )
    }

    /// `[self; other]`
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, field: self.field, data }
    }

    /// Reduced row-echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(piv) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, piv);
            let inv = m[(row, col)].inverse().expect("pivot is nonzero");
            for c in col..m.cols {
                m[(row, c)] *= inv;
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)];
                    for c in col..m.cols {
                        let sub = factor * m[(row, c)];
                        m[(r, c)] -= sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : M v = 0}`, one vector per free column,
    /// ordered by free column index.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(i, f)];
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows, got: self.cols });
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::NotInvertible(self.field.modulus()));
        }
        Ok(r.select_columns(n..2 * n))
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square());
        let mut m = self.clone();
        let mut det = self.field.one();
        for col in 0..m.cols {
            let Some(piv) = (col..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                return self.field.zero();
            };
            if piv != col {
                m.swap_rows(piv, col);
                det = -det;
            }
            let p = m[(col, col)];
            det *= p;
            let inv = p.inverse().expect("pivot is nonzero");
            for r in col + 1..m.rows {
                let factor = m[(r, col)] * inv;
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let sub = factor * m[(col, c)];
                    m[(r, c)] -= sub;
                }
            }
        }
        det
    }

    /// Solve `self * X = rhs` when a solution exists; `None` otherwise.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x[(pc, c)] = r[(i, self.cols + c)];
            }
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    out[(r, c)] += a * rhs[(k, c)];
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect(), ..self.clone() }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix { data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a - b).collect(), ..self.clone() }
    }
}

impl PartialOrd for Matrix {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Matrix {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.rows, self.cols, &self.data).cmp(&(other.rows, other.cols, &other.data))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_residue_rows())
    }
}

/// A linear subspace of F_p^n, canonically represented by the rows of its
/// reduced row-echelon basis. Two subspaces are equal iff their
/// representations are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(field: PrimeField, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient_dim);
        }
        let m = Matrix::from_scalar_rows(field, vectors);
        let (r, pivots) = m.rref();
        Self { ambient_dim, basis: r.select_rows(0..pivots.len()) }
    }

    pub fn zero(field: PrimeField, ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Matrix::zeros(field, 0, ambient_dim) }
    }

    pub fn full(field: PrimeField, ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Matrix::identity(field, ambient_dim) }
    }

    /// Column space of `m`.
    pub fn image(m: &Matrix) -> Self {
        Self::span(m.field(), m.rows(), &m.column_vectors())
    }

    /// Right kernel of `m`.
    pub fn kernel(m: &Matrix) -> Self {
        Self::span(m.field(), m.cols(), &m.kernel())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Echelon basis vectors.
    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let m = self.basis.vstack(&Matrix::from_scalar_rows(self.basis.field(), &[v.to_vec()]));
        m.rank() == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis();
        vs.extend(other.basis());
        Subspace::span(self.basis.field(), self.ambient_dim, &vs)
    }

    /// Intersection via the kernel of `[A^T | -B^T]`.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let field = self.basis.field();
        let (a, b) = (self.basis.transpose(), other.basis.transpose());
        let stacked = a.hstack(&b.scale(-field.one()));
        let vecs: Vec<Vec<Scalar>> = stacked.kernel().into_iter().map(|k| a.apply(&k[..self.dim()])).collect();
        Subspace::span(field, self.ambient_dim, &vecs)
    }
}

/// Multiplicative order of an invertible square matrix, searching up to `bound`.
pub fn matrix_order(g: &Matrix, bound: usize) -> Option<usize> {
    let id = Matrix::identity(g.field(), g.rows());
    let mut acc = g.clone();
    for k in 1..=bound {
        if acc == id {
            return Some(k);
        }
        acc = &acc * g;
    }
    None
}

/// The averaging operator `(1/k) Σ_{i=1}^{k} g^i`.
pub fn symmetrizer(g: &Matrix, order: usize) -> Result<Matrix> {
    let field = g.field();
    let id = Matrix::identity(field, g.rows());
    if g.pow(order as u64) != id {
        return Err(Error::OrderMismatch { order });
    }
    let inv_k = field.elem(order as i64).inverse()?;
    let mut acc = Matrix::zeros(field, g.rows(), g.cols());
    let mut power = id;
    for _ in 0..order {
        power = &power * g;
        acc = &acc + &power;
    }
    Ok(acc.scale(inv_k))
}

/// Eigenvalue-1 eigenspace `V^g`.
pub fn fixed_space(g: &Matrix) -> Subspace {
    let id = Matrix::identity(g.field(), g.rows());
    Subspace::kernel(&(g - &id))
}

/// `(V^g)^∨`, the kernel of the symmetrizer.
pub fn semiinvariant_space(g: &Matrix, order: usize) -> Result<Subspace> {
    Ok(Subspace::kernel(&symmetrizer(g, order)?))
}

/// Whether `(V^g)^∨ ∩ (V^h)^∨ = {0}`, by the rank of the concatenated bases.
pub fn intersection_condition(g: &Matrix, g_order: usize, h: &Matrix, h_order: usize) -> Result<bool> {
    let wg = semiinvariant_space(g, g_order)?;
    let wh = semiinvariant_space(h, h_order)?;
    Ok(complements_meet_trivially(&wg, &wh))
}

pub fn complements_meet_trivially(wg: &Subspace, wh: &Subspace) -> bool {
    let stacked = wg.basis_matrix().vstack(wh.basis_matrix());
    stacked.rank() == wg.dim() + wh.dim()
}

/// Ordered eigenbasis of a finite-order matrix: the fixed space first, then
/// the `zeta^j` eigenspaces for `j = 1..N-1`, each in echelon order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenframe {
    /// Columns are the frame vectors.
    basis: Matrix,
    inverse: Matrix,
    eigenvalues: Vec<Scalar>,
    fixed_dim: usize,
}

impl Eigenframe {
    pub fn new(g: &Matrix, ctx: &FieldCtx) -> Result<Self> {
        let field = ctx.field();
        let n = g.rows();
        let order = matrix_order(g, ctx.exponent() as usize).ok_or(Error::OrderMismatch { order: ctx.exponent() as usize })?;
        if !ctx.exponent().is_multiple_of(order as u64) {
            return Err(Error::OrderMismatch { order });
        }
        let inv_k = field.elem(order as i64).inverse()?;
        let powers: Vec<Matrix> = (1..=order as u64).map(|i| g.pow(i)).collect();
        let mut columns = Vec::with_capacity(n);
        let mut eigenvalues = Vec::with_capacity(n);
        let mut fixed_dim = 0;
        for j in 0..ctx.exponent() {
            let lambda = ctx.zeta().pow(j);
            if lambda.pow(order as u64) != field.one() {
                continue;
            }
            // P_λ = (1/k) Σ λ^{-i} g^i projects onto the λ-eigenspace
            let lambda_inv = lambda.inverse()?;
            let mut proj = Matrix::zeros(field, n, n);
            for (i, gp) in powers.iter().enumerate() {
                proj = &proj + &gp.scale(lambda_inv.pow(i as u64 + 1));
            }
            let space = Subspace::image(&proj.scale(inv_k));
            if j == 0 {
                fixed_dim = space.dim();
            }
            for v in space.basis() {
                columns.push(v);
                eigenvalues.push(lambda);
            }
        }
        if columns.len() != n {
            return Err(Error::NonDiagonalizable(ctx.p()));
        }
        let basis = Matrix::from_columns(field, n, &columns);
        let inverse = basis.inverse().map_err(|_| Error::NonDiagonalizable(ctx.p()))?;
        Ok(Self { basis, inverse, eigenvalues, fixed_dim })
    }

    /// Change-of-basis matrix (frame vectors as columns).
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Rows are the dual coordinate functionals of the frame.
    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    pub fn eigenvalues(&self) -> &[Scalar] {
        &self.eigenvalues
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn fixed_dim(&self) -> usize {
        self.fixed_dim
    }

    pub fn codim(&self) -> usize {
        self.dim() - self.fixed_dim
    }

    /// n × dim V^g, the fixed part of the frame.
    pub fn tangent_basis(&self) -> Matrix {
        self.basis.select_columns(0..self.fixed_dim)
    }

    /// n × d_g, the eigenvectors with eigenvalue ≠ 1.
    pub fn normal_basis(&self) -> Matrix {
        self.basis.select_columns(self.fixed_dim..self.dim())
    }

    /// dim V^g × n: coordinates along the fixed part (kills the normal part).
    pub fn tangent_coordinates(&self) -> Matrix {
        self.inverse.select_rows(0..self.fixed_dim)
    }

    pub fn normal_coordinates(&self) -> Matrix {
        self.inverse.select_rows(self.fixed_dim..self.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn m(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_rows(f7(), rows)
    }

    fn half() -> Scalar {
        f7().elem(2).inverse().unwrap()
    }

    #[test]
    fn symmetrizer_examples() {
        let id = Matrix::identity(f7(), 3);
        assert_eq!(symmetrizer(&id, 1).unwrap(), id);
        let neg = m(&[vec![-1, 0], vec![0, -1]]);
        assert!(symmetrizer(&neg, 2).unwrap().is_zero());
        let swap = m(&[vec![0, 1], vec![1, 0]]);
        let pi = symmetrizer(&swap, 2).unwrap();
        assert!(pi.to_residue_rows().iter().flatten().all(|&x| x == half().value()));
        assert_eq!(symmetrizer(&swap, 3), Err(Error::OrderMismatch { order: 3 }));
    }

    #[test]
    fn fixed_and_semiinvariant_spaces() {
        let f = f7();
        assert_eq!(fixed_space(&Matrix::identity(f, 3)), Subspace::full(f, 3));
        let neg = m(&[vec![-1, 0], vec![0, -1]]);
        assert_eq!(fixed_space(&neg).dim(), 0);
        assert_eq!(semiinvariant_space(&neg, 2).unwrap(), Subspace::full(f, 2));
        let swap = m(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(fixed_space(&swap), Subspace::span(f, 2, &[vec![f.one(), f.one()]]));
        let w = semiinvariant_space(&swap, 2).unwrap();
        assert_eq!(w, Subspace::span(f, 2, &[vec![f.one(), -f.one()]]));
        assert_eq!(semiinvariant_space(&Matrix::identity(f, 2), 1).unwrap().dim(), 0);
    }

    #[test]
    fn eigenframes() {
        let f = f7();
        let ctx = FieldCtx::new(7, 6).unwrap();
        let id = Matrix::identity(f, 2);
        let fr = Eigenframe::new(&id, &ctx).unwrap();
        assert_eq!(fr.basis(), &id);
        assert!(fr.eigenvalues().iter().all(Scalar::is_one));

        let zeta = ctx.root_of_unity(3).unwrap();
        let d = Matrix::diagonal(f, &[f.one(), zeta]);
        let fr = Eigenframe::new(&d, &ctx).unwrap();
        assert_eq!(fr.basis(), &id);
        assert_eq!(fr.eigenvalues(), &[f.one(), zeta]);

        let swap = m(&[vec![0, 1], vec![1, 0]]);
        let fr = Eigenframe::new(&swap, &ctx).unwrap();
        assert_eq!(fr.basis(), &m(&[vec![1, 1], vec![1, -1]]));
        assert_eq!(fr.eigenvalues(), &[f.one(), -f.one()]);
        assert_eq!(fr.codim(), 1);
    }

    #[test]
    fn eigenframe_diagonalizes() {
        let f = f7();
        let ctx = FieldCtx::new(7, 6).unwrap();
        let gens = [
            m(&[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]),
            m(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]),
            m(&[vec![0, -1, 0], vec![1, -1, 0], vec![0, 0, -1]]),
        ];
        for g in gens {
            let fr = Eigenframe::new(&g, &ctx).unwrap();
            let conj = &(fr.inverse() * &g) * fr.basis();
            assert_eq!(conj, Matrix::diagonal(f, fr.eigenvalues()));
        }
    }

    #[test]
    fn intersection_condition_examples() {
        let f = f7();
        let id = Matrix::identity(f, 2);
        let neg = m(&[vec![-1, 0], vec![0, -1]]);
        let swap = m(&[vec![0, 1], vec![1, 0]]);
        assert!(intersection_condition(&id, 1, &id, 1).unwrap());
        assert!(!intersection_condition(&neg, 2, &neg, 2).unwrap());
        assert!(intersection_condition(&swap, 2, &id, 1).unwrap());
    }

    #[test]
    fn kernel_inverse_solve() {
        let a = m(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        for v in a.kernel() {
            assert!(a.apply(&v).iter().all(Scalar::is_zero));
        }
        assert_eq!(a.inverse(), Err(Error::NotInvertible(7)));
        assert!(a.determinant().is_zero());
        let b = m(&[vec![2, 1], vec![1, 1]]);
        let bi = b.inverse().unwrap();
        assert_eq!(&b * &bi, Matrix::identity(f7(), 2));
        assert_eq!(b.determinant(), f7().one());
        let x = b.solve(&Matrix::identity(f7(), 2)).unwrap();
        assert_eq!(x, bi);
    }

    #[test]
    fn subspace_intersection() {
        let f = f7();
        let one = f.one();
        let zero = f.zero();
        let a = Subspace::span(f, 3, &[vec![one, zero, zero], vec![zero, one, zero]]);
        let b = Subspace::span(f, 3, &[vec![zero, one, zero], vec![zero, zero, one]]);
        assert_eq!(a.intersection(&b), Subspace::span(f, 3, &[vec![zero, one, zero]]));
        assert_eq!(a.sum(&b), Subspace::full(f, 3));
    }
}

//! Finite matrix groups: closure from generators, multiplication and inverse
//! tables, and the cached eigenstructure of every element.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{self, Eigenframe, Matrix, Subspace};
use crate::scalars::{lcm, FieldCtx, PrimeField};

pub const DEFAULT_BOUND: usize = 256;

/// Per-element geometry: the eigenframe, `V^g`, `(V^g)^∨`, `d_g` and `π^g`.
#[derive(Clone, Debug)]
pub struct ElementData {
    pub frame: Eigenframe,
    pub fixed: Subspace,
    pub semiinvariant: Subspace,
    pub symmetrizer: Matrix,
}

impl ElementData {
    pub fn codim(&self) -> usize {
        self.semiinvariant.dim()
    }

    pub fn fixed_dim(&self) -> usize {
        self.fixed.dim()
    }
}

#[derive(Clone, Debug)]
pub struct GroupData {
    ctx: FieldCtx,
    dim: usize,
    elements: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    orders: Vec<usize>,
    data: Vec<ElementData>,
}

impl GroupData {
    /// Breadth-first closure of `generators`. Each new layer of the search is
    /// sorted by entries, so element indices do not depend on hashing.
    pub fn generate(field: PrimeField, generators: &[Matrix], bound: usize) -> Result<Self> {
        let dim = generators.first().map_or(0, Matrix::rows);
        if generators.is_empty() {
            return Err(Error::Invalid("at least one generator is required".into()));
        }
        for g in generators {
            if !g.is_square() || g.rows() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: g.rows().max(g.cols()) });
            }
            g.inverse()?;
        }
        let id = Matrix::identity(field, dim);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut layer = Vec::new();
            for &i in &frontier {
                for gen in generators {
                    let prod = &elements[i] * gen;
                    if !index.contains_key(&prod) && !layer.contains(&prod) {
                        layer.push(prod);
                    }
                }
            }
            layer.sort();
            frontier.clear();
            for m in layer {
                if elements.len() == bound {
                    return Err(Error::BoundExceeded(bound));
                }
                index.insert(m.clone(), elements.len());
                frontier.push(elements.len());
                elements.push(m);
            }
        }

        let n = elements.len();
        let mult: Vec<Vec<usize>> = elements.iter().map(|a| elements.iter().map(|b| index[&(a * b)]).collect()).collect();
        let inverse: Vec<usize> = (0..n).map(|a| (0..n).find(|&b| mult[a][b] == 0).expect("finite group")).collect();
        let orders: Vec<usize> = (0..n)
            .map(|a| {
                let (mut k, mut x) = (1, a);
                while x != 0 {
                    x = mult[x][a];
                    k += 1;
                }
                k
            })
            .collect();

        let p = field.modulus();
        if p <= n as u64 || p <= dim as u64 {
            return Err(Error::CharacteristicTooSmall { p, dim, order: n });
        }
        let exponent = orders.iter().fold(1u64, |acc, &o| lcm(acc, o as u64));
        let ctx = FieldCtx::new(p, exponent)?;
        let data = elements
            .iter()
            .zip(&orders)
            .map(|(g, &k)| {
                Ok(ElementData {
                    frame: Eigenframe::new(g, &ctx)?,
                    fixed: linalg::fixed_space(g),
                    semiinvariant: linalg::semiinvariant_space(g, k)?,
                    symmetrizer: linalg::symmetrizer(g, k)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;

        Ok(Self { ctx, dim, elements, index, mult, inverse, orders, data })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn field(&self) -> PrimeField {
        self.ctx.field()
    }

    /// Dimension of the representation space V.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn element(&self, g: usize) -> &Matrix {
        &self.elements[g]
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn multiply(&self, g: usize, h: usize) -> usize {
        self.mult[g][h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn element_order(&self, g: usize) -> usize {
        self.orders[g]
    }

    pub fn data(&self, g: usize) -> &ElementData {
        &self.data[g]
    }

    pub fn codim(&self, g: usize) -> usize {
        self.data[g].codim()
    }

    pub fn frame(&self, g: usize) -> &Eigenframe {
        &self.data[g].frame
    }

    /// Index of `h g h^{-1}`.
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mult[self.mult[h][g]][self.inverse[h]]
    }

    pub fn intersection_condition(&self, g: usize, h: usize) -> bool {
        linalg::complements_meet_trivially(&self.data[g].semiinvariant, &self.data[h].semiinvariant)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn perm(images: [usize; 3]) -> Matrix {
        let f = f7();
        Matrix::from_fn(f, 3, 3, |r, c| if images[c] == r { f.one() } else { f.zero() })
    }

    fn s3() -> GroupData {
        GroupData::generate(f7(), &[perm([1, 0, 2]), perm([1, 2, 0])], DEFAULT_BOUND).unwrap()
    }

    #[test]
    fn small_groups() {
        let f = f7();
        let neg = Matrix::from_rows(f, &[vec![-1, 0], vec![0, -1]]);
        let g = GroupData::generate(f, &[neg], DEFAULT_BOUND).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!((g.element_order(0), g.element_order(1)), (1, 2));
        assert_eq!(g.codim(1), 2);

        let swap = Matrix::from_rows(f, &[vec![0, 1], vec![1, 0]]);
        let g = GroupData::generate(f, &[swap], DEFAULT_BOUND).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.ctx().exponent(), 2);
    }

    #[test]
    fn symmetric_group_closure() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.ctx().exponent(), 6);
        let mut codims: Vec<(usize, usize)> = (0..6).map(|i| (g.element_order(i), g.codim(i))).collect();
        codims.sort();
        assert_eq!(codims, vec![(1, 0), (2, 1), (2, 1), (2, 1), (3, 2), (3, 2)]);
    }

    #[test]
    fn conjugation_in_s3() {
        let g = s3();
        let t = g.index_of(&perm([1, 0, 2])).unwrap();
        let c = g.index_of(&perm([1, 2, 0])).unwrap();
        let c_inv = g.index_of(&perm([2, 0, 1])).unwrap();
        // (12)(123)(12) = (132) as permutation matrices
        assert_eq!(g.conjugate(t, c), c_inv);
        assert_eq!(g.conjugate(0, c), c);
        assert_eq!(g.conjugate(t, 0), 0);
    }

    #[test]
    fn tables_form_a_group() {
        let g = s3();
        let n = g.order();
        for a in 0..n {
            assert_eq!(g.multiply(a, g.inverse(a)), 0);
            assert_eq!(g.multiply(0, a), a);
            assert_eq!(n % g.element_order(a), 0);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c)));
                }
            }
        }
    }

    #[test]
    fn element_caches_are_consistent() {
        let g = s3();
        for i in 0..g.order() {
            let d = g.data(i);
            let m = g.element(i);
            for v in d.fixed.basis() {
                assert_eq!(m.apply(&v), v);
            }
            let pi = &d.symmetrizer;
            assert_eq!(&(pi * pi), pi);
            assert_eq!(&(m * pi), pi);
            assert_eq!(pi.rank() + d.codim(), g.dim());
            assert_eq!(d.fixed.sum(&d.semiinvariant).dim(), g.dim());
        }
    }

    #[test]
    fn generation_errors() {
        let f = f7();
        let sing = Matrix::from_rows(f, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(GroupData::generate(f, &[sing], 16).unwrap_err(), Error::NotInvertible(7));
        let shear = Matrix::from_rows(f, &[vec![1, 1], vec![0, 1]]);
        // order 7 = p: too large for the characteristic
        assert!(matches!(GroupData::generate(f, std::slice::from_ref(&shear), 16), Err(Error::CharacteristicTooSmall { .. })));
        assert_eq!(GroupData::generate(f, &[shear], 3).unwrap_err(), Error::BoundExceeded(3));
        let f3 = PrimeField::new(3).unwrap();
        let cyc = Matrix::from_fn(f3, 3, 3, |r, c| if (c + 1) % 3 == r { f3.one() } else { f3.zero() });
        assert!(matches!(GroupData::generate(f3, &[cyc], 16), Err(Error::CharacteristicTooSmall { .. })));
    }
}

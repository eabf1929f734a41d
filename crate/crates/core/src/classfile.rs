//! JSON encoding of classes.
//!
//! Every term is written in the eigenframe of its group element: tangent
//! multivectors as `[indices, coeff]` pairs over the `V^g` frame, the normal
//! factor as a multiple of the frame volume, and the polynomial as
//! `[exponents, coeff]` pairs on `V^g` coordinates. Frames can be attached
//! so a reader can check them without rebuilding the group.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::GroupData;
use crate::hhalgebra::{HHClass, HHRing, HHTerm};
use crate::multilinear::{mask_indices, merge_sign, Mask, Multivector};
use crate::polyring::{Monomial, Polynomial};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFile {
    pub schema_version: u32,
    pub p: u64,
    pub degree: usize,
    pub terms: Vec<TermRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub frames: Vec<FrameRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub g_index: usize,
    pub tangent: Vec<(Vec<usize>, i64)>,
    #[serde(default = "one")]
    pub normal: i64,
    pub poly: Vec<(Vec<u32>, i64)>,
}

fn one() -> i64 {
    1
}

/// The eigenframe of one element; vectors are listed as columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameRecord {
    pub g_index: usize,
    pub tangent_basis: Vec<Vec<u64>>,
    pub normal_basis: Vec<Vec<u64>>,
    pub eigenvalues: Vec<u64>,
}

pub fn frame_record(group: &GroupData, g: usize) -> FrameRecord {
    let fr = group.frame(g);
    let residues = |cols: Vec<Vec<crate::scalars::Scalar>>| -> Vec<Vec<u64>> {
        cols.into_iter().map(|c| c.into_iter().map(|s| s.value()).collect()).collect()
    };
    FrameRecord {
        g_index: g,
        tangent_basis: residues(fr.tangent_basis().column_vectors()),
        normal_basis: residues(fr.normal_basis().column_vectors()),
        eigenvalues: fr.eigenvalues().iter().map(|s| s.value()).collect(),
    }
}

impl ClassFile {
    pub fn from_class(group: &GroupData, class: &HHClass, with_frames: bool) -> Self {
        let mut terms = Vec::new();
        for (g, comp) in class.components() {
            for (&mask, f) in comp {
                terms.push(TermRecord {
                    g_index: g,
                    tangent: vec![(mask_indices(mask), 1)],
                    normal: 1,
                    poly: f.terms().map(|(m, c)| (m.0.clone(), c.value() as i64)).collect(),
                });
            }
        }
        let frames = if with_frames { class.support().map(|g| frame_record(group, g)).collect() } else { Vec::new() };
        Self { schema_version: SCHEMA_VERSION, p: group.field().modulus(), degree: class.degree(), terms, frames }
    }

    pub fn to_class(&self, group: &GroupData) -> Result<HHClass> {
        let field = group.field();
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Invalid(format!("unsupported schema_version {}", self.schema_version)));
        }
        if self.p != field.modulus() {
            return Err(Error::ContextMismatch(format!("class is over F_{} but the group is over F_{}", self.p, field.modulus())));
        }
        for fr in &self.frames {
            if fr.g_index >= group.order() || frame_record(group, fr.g_index) != *fr {
                return Err(Error::ContextMismatch(format!("recorded frame of element {} does not match", fr.g_index)));
            }
        }
        let ring = HHRing::new(group);
        let mut out = HHClass::zero(self.degree);
        for (k, t) in self.terms.iter().enumerate() {
            let g = t.g_index;
            if g >= group.order() {
                return Err(Error::OutOfRange(format!("terms[{k}].g_index = {g}, group order {}", group.order())));
            }
            let d = group.codim(g);
            let r = group.dim() - d;
            let tdeg = self.degree.checked_sub(d).ok_or_else(|| {
                Error::DegreeInhomogeneous(format!("terms[{k}]: degree {} below the codimension {d} of element {g}", self.degree))
            })?;
            let mut tangent = Multivector::zero(field, r, tdeg);
            for (idx, c) in &t.tangent {
                if idx.len() != tdeg {
                    return Err(Error::DegreeInhomogeneous(format!(
                        "terms[{k}]: tangent {idx:?} has degree {} but degree {tdeg} is required at element {g}",
                        idx.len()
                    )));
                }
                let (mask, negative) =
                    signed_mask(idx, r).ok_or_else(|| Error::Invalid(format!("terms[{k}]: bad tangent indices {idx:?}")))?;
                let c = field.elem(*c);
                tangent.add_term(mask, if negative { -c } else { c });
            }
            let mut coeff = Polynomial::zero(field, r);
            for (exps, c) in &t.poly {
                if exps.len() != r {
                    return Err(Error::ArityMismatch { expected: r, got: exps.len() });
                }
                coeff.add_term(Monomial(exps.clone()), field.elem(*c));
            }
            let normal = Multivector::volume(field, d).scale(field.elem(t.normal));
            ring.add_term(&mut out, &HHTerm { g, tangent, normal, coeff })?;
        }
        Ok(out)
    }
}

/// Mask of a list of distinct indices `< dim`, with the sign of sorting it.
fn signed_mask(indices: &[usize], dim: usize) -> Option<(Mask, bool)> {
    let mut mask = 0;
    let mut negative = false;
    for &i in indices.iter().rev() {
        if i >= dim {
            return None;
        }
        negative ^= merge_sign(1 << i, mask)?;
        mask |= 1 << i;
    }
    Some((mask, negative))
}

pub fn to_json(file: &ClassFile) -> String {
    serde_json::to_string_pretty(file).expect("class files serialize")
}

pub fn from_json(text: &str) -> Result<ClassFile> {
    serde_json::from_str(text).map_err(|e| Error::Invalid(format!("class file: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::DEFAULT_BOUND;
    use crate::linalg::Matrix;
    use crate::scalars::PrimeField;

    fn swap() -> GroupData {
        let f = PrimeField::new(7).unwrap();
        GroupData::generate(f, &[Matrix::from_rows(f, &[vec![0, 1], vec![1, 0]])], DEFAULT_BOUND).unwrap()
    }

    #[test]
    fn round_trip() {
        let grp = swap();
        let field = grp.field();
        let mut c = HHClass::zero(1);
        c.add_raw(0, 0b10, &(&Polynomial::var(field, 2, 0) + &Polynomial::constant(field, 2, field.elem(-2))));
        c.add_raw(1, 0, &Polynomial::var(field, 1, 0));
        for frames in [false, true] {
            let file = ClassFile::from_class(&grp, &c, frames);
            let back = from_json(&to_json(&file)).unwrap();
            assert_eq!(back, file);
            assert_eq!(back.to_class(&grp).unwrap(), c);
        }
    }

    #[test]
    fn unsorted_tangent_indices_carry_a_sign() {
        let grp = swap();
        let text = r#"{"schema_version":1,"p":7,"degree":2,
            "terms":[{"g_index":0,"tangent":[[[1,0],1]],"poly":[[[0,0],1]]}]}"#;
        let c = from_json(text).unwrap().to_class(&grp).unwrap();
        assert_eq!(c.component(0).unwrap()[&0b11], Polynomial::constant(grp.field(), 2, grp.field().elem(-1)));
    }

    #[test]
    fn rejects_bad_files() {
        let grp = swap();
        let wrong_p = r#"{"schema_version":1,"p":11,"degree":0,"terms":[]}"#;
        assert!(matches!(from_json(wrong_p).unwrap().to_class(&grp), Err(Error::ContextMismatch(_))));
        let bad_degree = r#"{"schema_version":1,"p":7,"degree":0,"terms":[{"g_index":1,"tangent":[[[],1]],"poly":[]}]}"#;
        assert!(matches!(from_json(bad_degree).unwrap().to_class(&grp), Err(Error::DegreeInhomogeneous(_))));
        let mixed = r#"{"schema_version":1,"p":7,"degree":1,"terms":[{"g_index":0,"tangent":[[[0,1],1]],"poly":[]}]}"#;
        assert!(matches!(from_json(mixed).unwrap().to_class(&grp), Err(Error::DegreeInhomogeneous(_))));
        assert!(from_json("{").is_err());
    }
}

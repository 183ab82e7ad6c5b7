//! Sparse multivariate polynomials, used to certify that a linear family of
//! matrices contains no invertible member.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::Matrix;
use crate::field::{FieldSpec, Scalar};

type Monomial = Vec<u16>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvPoly {
    field: FieldSpec,
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MvPoly {
    pub fn zero(field: FieldSpec, nvars: usize) -> Self {
        MvPoly {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: FieldSpec, nvars: usize) -> Self {
        let mut p = Self::zero(field, nvars);
        p.terms.insert(vec![0; nvars], field.one());
        p
    }

    /// The linear form `sum c_k t_k`.
    pub fn linear(field: FieldSpec, coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(field, n);
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut m = vec![0; n];
                m[k] = 1;
                p.terms.insert(m, c.clone());
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> usize {
        self.terms.keys().map(|m| m[var] as usize).max().unwrap_or(0)
    }

    pub fn add_assign_scaled(&mut self, c: &Scalar, o: &MvPoly) {
        for (m, x) in &o.terms {
            let v = c * x;
            match self.terms.get_mut(m) {
                Some(y) => {
                    *y = &*y + &v;
                    if y.is_zero() {
                        self.terms.remove(m);
                    }
                }
                None => {
                    if !v.is_zero() {
                        self.terms.insert(m.clone(), v);
                    }
                }
            }
        }
    }

    pub fn mul(&self, o: &MvPoly) -> MvPoly {
        let mut out = MvPoly::zero(self.field, self.nvars);
        for (m1, a) in &self.terms {
            for (m2, b) in &o.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(x, y)| x + y).collect();
                let v = a * b;
                let e = out.terms.entry(m).or_insert_with(|| self.field.zero());
                *e = &*e + &v;
            }
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                if e > 0 {
                    t = &t * &x.pow(e as u64);
                }
            }
            acc = &acc + &t;
        }
        acc
    }
}

/// Determinant of `sum_k t_k M_k` as a polynomial in the `t_k`, by
/// expansion over column subsets. `None` when the matrix is too large.
pub fn symbolic_det(field: FieldSpec, mats: &[Matrix]) -> Option<MvPoly> {
    let t = mats.len();
    let n = mats.first().map_or(0, Matrix::rows);
    if n > 20 {
        return None;
    }
    // entry (i, j) as a linear form
    let entries: Vec<Vec<MvPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c: Vec<Scalar> = mats.iter().map(|m| m.get(i, j)).collect();
                    MvPoly::linear(field, &c)
                })
                .collect()
        })
        .collect();
    let mut layer: BTreeMap<u32, MvPoly> = BTreeMap::new();
    layer.insert(0, MvPoly::one(field, t));
    for row in entries.iter() {
        let mut next: BTreeMap<u32, MvPoly> = BTreeMap::new();
        for (&mask, p) in &layer {
            for (j, e) in row.iter().enumerate() {
                if mask & (1 << j) != 0 || e.is_zero() {
                    continue;
                }
                let above = (mask >> (j + 1)).count_ones();
                let sign = if above % 2 == 0 {
                    field.one()
                } else {
                    -field.one()
                };
                let term = p.mul(e);
                next.entry(mask | (1 << j))
                    .or_insert_with(|| MvPoly::zero(field, t))
                    .add_assign_scaled(&sign, &term);
            }
        }
        next.retain(|_, p| !p.is_zero());
        if next.is_empty() {
            return Some(MvPoly::zero(field, t));
        }
        layer = next;
    }
    Some(
        layer
            .remove(&(((1u64 << n) - 1) as u32))
            .unwrap_or_else(|| MvPoly::zero(field, t)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_det_matches_numeric() {
        let k = FieldSpec::rationals();
        let a = Matrix::from_i64(k, &[&[1, 2, 0], &[0, 1, 3], &[4, 0, 1]]);
        let b = Matrix::from_i64(k, &[&[0, 1, 1], &[2, 0, 0], &[1, 1, 5]]);
        let d = symbolic_det(k, &[a.clone(), b.clone()]).unwrap();
        for (x, y) in [(1, 0), (0, 1), (2, -3), (5, 7)] {
            let (x, y) = (k.from_i64(x), k.from_i64(y));
            let m = a.scale(&x).add(&b.scale(&y));
            assert_eq!(d.eval(&[x, y]), m.det());
        }
        assert_eq!(d.total_degree(), 3);
    }

    #[test]
    fn singular_family_has_zero_det() {
        let k = FieldSpec::rationals();
        // common kernel vector e_2
        let a = Matrix::from_i64(k, &[&[1, 0], &[0, 0]]);
        let b = Matrix::from_i64(k, &[&[0, 0], &[1, 0]]);
        assert!(symbolic_det(k, &[a, b]).unwrap().is_zero());
    }
}

//! Incremental reduced row echelon form over sparse rows.

use alloc::vec;
use alloc::vec::Vec;

use super::{axpy_sparse, SparseVec};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// A reduced row echelon basis that accepts rows one at a time.
///
/// Every stored row has a leading 1 in its pivot column and zeros in every
/// other pivot column, so reducing a vector is a single pass.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldSpec,
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(field: FieldSpec, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Reduce a dense vector in place against the stored rows.
    pub fn reduce_dense(&self, v: &mut [Scalar]) {
        debug_assert_eq!(v.len(), self.ncols);
        for row in &self.rows {
            let p = row[0].0;
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (j, x) in row {
                v[*j] = &v[*j] - &(&c * x);
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce_dense(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Insert a sparse row; returns its pivot when it was independent.
    pub fn insert_sparse(&mut self, v: &SparseVec) -> Option<usize> {
        if v.is_empty() {
            return None;
        }
        let mut dense = vec![self.field.zero(); self.ncols];
        for (j, x) in v {
            dense[*j] = x.clone();
        }
        self.insert_dense(dense)
    }

    pub fn insert_dense(&mut self, mut v: Vec<Scalar>) -> Option<usize> {
        self.reduce_dense(&mut v);
        let p = v.iter().position(|x| !x.is_zero())?;
        let inv = v[p].inv().unwrap();
        let row: SparseVec = v
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, &x * &inv))
            .collect();
        for other in self.rows.iter_mut() {
            if let Ok(k) = other.binary_search_by_key(&p, |e| e.0) {
                let c = -&other[k].1;
                *other = axpy_sparse(other, &c, &row);
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(row);
        Some(p)
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|&j| self.pivot_row[j].is_some())
            .collect()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|&j| self.pivot_row[j].is_none())
            .collect()
    }

    /// The row whose pivot is `col`.
    pub fn row_for_pivot(&self, col: usize) -> Option<&SparseVec> {
        self.pivot_row[col].map(|i| &self.rows[i])
    }

    /// Rows sorted by pivot.
    pub fn sorted_rows(&self) -> Vec<SparseVec> {
        self.pivots()
            .into_iter()
            .map(|p| self.row_for_pivot(p).unwrap().clone())
            .collect()
    }

    pub fn into_subspace(self) -> Subspace {
        let rows = self.sorted_rows();
        Subspace {
            field: self.field,
            ambient: self.ncols,
            rows,
        }
    }

    /// Null space of the row system, in canonical form.
    pub fn null_space(&self) -> Subspace {
        let mut ech = Echelon::new(self.field, self.ncols);
        for f in self.free_columns() {
            let mut v: SparseVec = Vec::new();
            for p in self.pivots() {
                let row = self.row_for_pivot(p).unwrap();
                if let Ok(k) = row.binary_search_by_key(&f, |e| e.0) {
                    v.push((p, -&row[k].1));
                }
            }
            v.push((f, self.field.one()));
            v.sort_by_key(|e| e.0);
            ech.insert_sparse(&v);
        }
        ech.into_subspace()
    }
}

/// A subspace of `k^n`, stored as its reduced row echelon basis.
///
/// The representation is canonical: equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let rows = (0..ambient).map(|i| vec![(i, field.one())]).collect();
        Subspace {
            field,
            ambient,
            rows,
        }
    }

    pub fn span<'a, I>(field: FieldSpec, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a [Scalar]>,
    {
        let mut ech = Echelon::new(field, ambient);
        for v in vectors {
            ech.insert_dense(v.to_vec());
        }
        ech.into_subspace()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    pub fn basis_sparse(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        self.rows
            .iter()
            .map(|r| super::densify(self.field, self.ambient, r))
            .collect()
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_matrix(&self) -> super::Matrix {
        super::Matrix::from_columns(self.field, self.ambient, &self.basis())
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.field, self.ambient);
        for r in &self.rows {
            e.insert_sparse(r);
        }
        e
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coordinates in the echelon basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.rows.iter().map(|r| v[r[0].0].clone()).collect();
        let mut w = v.to_vec();
        for (c, r) in coords.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (j, x) in r {
                w[*j] = &w[*j] - &(c * x);
            }
        }
        if w.iter().all(Scalar::is_zero) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut e = self.echelon();
        for r in &other.rows {
            e.insert_sparse(r);
        }
        e.into_subspace()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis().iter().all(|v| other.contains(v))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // v = sum a_i u_i = sum b_j w_j  <=>  (a, -b) in the kernel of [U | W]
        let u = self.basis();
        let w = other.basis();
        let cols: Vec<Vec<Scalar>> = u
            .iter()
            .cloned()
            .chain(w.iter().map(|x| x.iter().map(|s| -s).collect()))
            .collect();
        let m = super::Matrix::from_columns(self.field, self.ambient, &cols);
        let ker = m.kernel();
        let vecs: Vec<Vec<Scalar>> = ker
            .basis()
            .iter()
            .map(|c| {
                let mut acc = vec![self.field.zero(); self.ambient];
                for (i, ui) in u.iter().enumerate() {
                    if c[i].is_zero() {
                        continue;
                    }
                    for (k, x) in ui.iter().enumerate() {
                        acc[k] = &acc[k] + &(&c[i] * x);
                    }
                }
                acc
            })
            .collect();
        Subspace::span(self.field, self.ambient, vecs.iter().map(|v| v.as_slice()))
    }
}

/// The quotient `k^n / W` with the canonical complement spanned by the
/// non-pivot coordinate vectors of `W`.
#[derive(Clone, Debug)]
pub struct Quotient {
    sub: Echelon,
    free: Vec<usize>,
}

impl Quotient {
    pub fn new(sub: &Subspace) -> Self {
        let ech = sub.echelon();
        let free = ech.free_columns();
        Quotient { sub: ech, free }
    }

    pub fn from_echelon(sub: Echelon) -> Self {
        let free = sub.free_columns();
        Quotient { sub, free }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn ambient(&self) -> usize {
        self.sub.ncols()
    }

    pub fn relations(&self) -> &Echelon {
        &self.sub
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        self.sub.reduce_dense(&mut w);
        self.free.iter().map(|&j| w[j].clone()).collect()
    }

    /// `dim x ambient` matrix of the projection.
    pub fn projection_matrix(&self) -> super::Matrix {
        let field = self.sub.field();
        let n = self.ambient();
        let mut triples = Vec::new();
        for (qi, &f) in self.free.iter().enumerate() {
            triples.push((qi, f, field.one()));
        }
        // a pivot coordinate e_p maps to -(row_p restricted to free columns)
        for p in self.sub.pivots() {
            let row = self.sub.row_for_pivot(p).unwrap();
            for (j, x) in row.iter().skip(1) {
                if let Ok(qi) = self.free.binary_search(j) {
                    triples.push((qi, p, -x));
                }
            }
        }
        super::Matrix::from_triples(field, self.dim(), n, triples)
    }

    /// `ambient x dim` matrix of the section sending a quotient basis vector
    /// to its coordinate vector.
    pub fn section_matrix(&self) -> super::Matrix {
        let field = self.sub.field();
        let triples = self
            .free
            .iter()
            .enumerate()
            .map(|(qi, &f)| (f, qi, field.one()));
        super::Matrix::from_triples(field, self.ambient(), self.dim(), triples)
    }
}

/// Coordinates with respect to an arbitrary list of independent vectors.
#[derive(Clone, Debug)]
pub struct BasisCoordinates {
    field: FieldSpec,
    basis: Vec<Vec<Scalar>>,
    rows: Vec<usize>,
    inverse: super::Matrix,
}

impl BasisCoordinates {
    pub fn new(field: FieldSpec, ambient: usize, basis: Vec<Vec<Scalar>>) -> Result<Self> {
        // rows of B chosen where the transpose has its pivots
        let mut ech = Echelon::new(field, ambient);
        for v in &basis {
            if ech.insert_dense(v.clone()).is_none() {
                return Err(Error::dim("basis vectors are dependent"));
            }
        }
        let rows = ech.pivots();
        let t = basis.len();
        let sub = super::Matrix::from_fn(field, t, t, |i, j| basis[j][rows[i]].clone());
        let inverse = sub.inverse().ok_or(Error::dim("singular basis"))?;
        Ok(BasisCoordinates {
            field,
            basis,
            rows,
            inverse,
        })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Coordinates of `v`; `None` when `v` is not in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let picked: Vec<Scalar> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inverse.mul_vec(&picked);
        let mut w = v.to_vec();
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (k, x) in b.iter().enumerate() {
                w[k] = &w[k] - &(ci * x);
            }
        }
        if w.iter().all(Scalar::is_zero) {
            Some(c)
        } else {
            None
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
}

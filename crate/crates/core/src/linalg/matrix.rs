use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{sparsify, Echelon, SparseVec, Subspace};
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug)]
enum Store {
    Dense(Vec<Scalar>),
    Sparse(Vec<SparseVec>),
}

/// A matrix over an exact field acting on column vectors.
///
/// Rows are stored sparsely unless more than a quarter of the entries are
/// nonzero, in which case the matrix is kept dense.
#[derive(Clone, Debug)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    store: Store,
}

pub enum RowIter<'a> {
    Dense(core::iter::Enumerate<core::slice::Iter<'a, Scalar>>),
    Sparse(core::slice::Iter<'a, (usize, Scalar)>),
}

impl<'a> Iterator for RowIter<'a> {
    type Item = (usize, &'a Scalar);

    fn next(&mut self) -> Option<Self::Item> {
        match self {
            RowIter::Dense(it) => it.find(|(_, x)| !x.is_zero()),
            RowIter::Sparse(it) => it.next().map(|(j, x)| (*j, x)),
        }
    }
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            store: Store::Sparse(vec![Vec::new(); rows]),
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Self::scalar(field, n, &field.one())
    }

    pub fn scalar(field: FieldSpec, n: usize, c: &Scalar) -> Self {
        let rows = if c.is_zero() {
            vec![Vec::new(); n]
        } else {
            (0..n).map(|i| vec![(i, c.clone())]).collect()
        };
        Matrix {
            field,
            rows: n,
            cols: n,
            store: Store::Sparse(rows),
        }
    }

    pub fn from_sparse_rows(field: FieldSpec, cols: usize, rows: Vec<SparseVec>) -> Self {
        let mut m = Matrix {
            field,
            rows: rows.len(),
            cols,
            store: Store::Sparse(rows),
        };
        m.settle();
        m
    }

    /// Accumulates repeated positions.
    pub fn from_triples<I>(field: FieldSpec, rows: usize, cols: usize, triples: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut acc: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); rows];
        for (i, j, x) in triples {
            assert!(i < rows && j < cols, "triple out of range");
            acc[i].push((j, x));
        }
        let rows_out = acc
            .into_iter()
            .map(|mut r| {
                r.sort_by_key(|e| e.0);
                let mut out: SparseVec = Vec::with_capacity(r.len());
                for (j, x) in r {
                    match out.last_mut() {
                        Some(last) if last.0 == j => last.1 = &last.1 + &x,
                        _ => out.push((j, x)),
                    }
                }
                out.retain(|e| !e.1.is_zero());
                out
            })
            .collect();
        Self::from_sparse_rows(field, cols, rows_out)
    }

    pub fn from_fn<F>(field: FieldSpec, rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Scalar,
    {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::from_dense(field, rows, cols, data)
    }

    /// Row-major dense data.
    pub fn from_dense(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols);
        let mut m = Matrix {
            field,
            rows,
            cols,
            store: Store::Dense(data),
        };
        m.settle();
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Vec<Scalar>]) -> Self {
        Self::from_sparse_rows(field, cols, rows.iter().map(|r| sparsify(r)).collect())
    }

    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let triples = columns.iter().enumerate().flat_map(|(j, c)| {
            c.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(move |(i, x)| (i, j, x.clone()))
        });
        Self::from_triples(field, rows, columns.len(), triples)
    }

    /// Build from small integers; convenient for tests and corpus tables.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(field, rows.len(), cols, |i, j| field.from_i64(rows[i][j]))
    }

    fn nnz(&self) -> usize {
        match &self.store {
            Store::Dense(d) => d.iter().filter(|x| !x.is_zero()).count(),
            Store::Sparse(r) => r.iter().map(Vec::len).sum(),
        }
    }

    fn settle(&mut self) {
        let dense = 4 * self.nnz() > self.rows * self.cols;
        match (&self.store, dense) {
            (Store::Sparse(rows), true) => {
                let mut data = vec![self.field.zero(); self.rows * self.cols];
                for (i, r) in rows.iter().enumerate() {
                    for (j, x) in r {
                        data[i * self.cols + j] = x.clone();
                    }
                }
                self.store = Store::Dense(data);
            }
            (Store::Dense(d), false) => {
                let rows = (0..self.rows).map(|i| sparsify(&d[i * self.cols..(i + 1) * self.cols])).collect();
                self.store = Store::Sparse(rows);
            }
            _ => {}
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match &self.store {
            Store::Dense(d) => d[i * self.cols + j].clone(),
            Store::Sparse(r) => match r[i].binary_search_by_key(&j, |e| e.0) {
                Ok(k) => r[i][k].1.clone(),
                Err(_) => self.field.zero(),
            },
        }
    }

    /// Nonzero entries of row `i`.
    pub fn row(&self, i: usize) -> RowIter<'_> {
        match &self.store {
            Store::Dense(d) => {
                RowIter::Dense(d[i * self.cols..(i + 1) * self.cols].iter().enumerate())
            }
            Store::Sparse(r) => RowIter::Sparse(r[i].iter()),
        }
    }

    pub fn row_sparse(&self, i: usize) -> SparseVec {
        self.row(i).map(|(j, x)| (j, x.clone())).collect()
    }

    pub fn row_dense(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.cols];
        for (j, x) in self.row(i) {
            v[j] = x.clone();
        }
        v
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        let t = self.transpose();
        (0..self.cols).map(|j| t.row_dense(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row_dense(i)).collect()
    }

    /// Row-major entries, zeros included.
    pub fn entries(&self) -> Vec<Scalar> {
        (0..self.rows).flat_map(|i| self.row_dense(i)).collect()
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn triples(&self) -> Vec<(usize, usize, Scalar)> {
        (0..self.rows)
            .flat_map(|i| self.row(i).map(move |(j, x)| (i, j, x.clone())))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        (0..self.rows).all(|i| self.row(i).next().is_none())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                let mut it = self.row(i);
                matches!(it.next(), Some((j, x)) if j == i && x.is_one()) && it.next().is_none()
            })
    }

    pub fn transpose(&self) -> Matrix {
        let triples = self.triples().into_iter().map(|(i, j, x)| (j, i, x));
        Matrix::from_triples(self.field, self.cols, self.rows, triples)
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut out = Vec::with_capacity(self.rows);
        let mut acc = vec![self.field.zero(); o.cols];
        let mut touched = vec![false; o.cols];
        let mut idx = Vec::new();
        for i in 0..self.rows {
            for (k, a) in self.row(i) {
                for (j, b) in o.row(k) {
                    if !touched[j] {
                        touched[j] = true;
                        idx.push(j);
                    }
                    acc[j] = &acc[j] + &(a * b);
                }
            }
            idx.sort_unstable();
            let mut r = SparseVec::with_capacity(idx.len());
            for &j in &idx {
                let v = core::mem::replace(&mut acc[j], self.field.zero());
                touched[j] = false;
                if !v.is_zero() {
                    r.push((j, v));
                }
            }
            idx.clear();
            out.push(r);
        }
        Matrix::from_sparse_rows(self.field, o.cols, out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in self.row(i) {
                    if !v[j].is_zero() {
                        acc = &acc + &(x * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Row vector times matrix: `v^T A`.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.rows, v.len(), "vector-matrix shape");
        let mut acc = vec![self.field.zero(); self.cols];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, x) in self.row(i) {
                acc[j] = &acc[j] + &(c * x);
            }
        }
        acc
    }

    fn zip_with<F: Fn(&Scalar, &Scalar) -> Scalar>(&self, o: &Matrix, f: F) -> Matrix {
        assert!(self.rows == o.rows && self.cols == o.cols, "matrix shape");
        let zero = self.field.zero();
        let rows = (0..self.rows)
            .map(|i| {
                let a = self.row_sparse(i);
                let b = o.row_sparse(i);
                let (mut p, mut q) = (0, 0);
                let mut r = SparseVec::new();
                while p < a.len() || q < b.len() {
                    let (j, v) = if q == b.len() || (p < a.len() && a[p].0 < b[q].0) {
                        p += 1;
                        (a[p - 1].0, f(&a[p - 1].1, &zero))
                    } else if p == a.len() || b[q].0 < a[p].0 {
                        q += 1;
                        (b[q - 1].0, f(&zero, &b[q - 1].1))
                    } else {
                        p += 1;
                        q += 1;
                        (a[p - 1].0, f(&a[p - 1].1, &b[q - 1].1))
                    };
                    if !v.is_zero() {
                        r.push((j, v));
                    }
                }
                r
            })
            .collect();
        Matrix::from_sparse_rows(self.field, self.cols, rows)
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        self.zip_with(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        self.zip_with(o, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.field, self.rows, self.cols);
        }
        let rows = (0..self.rows)
            .map(|i| self.row(i).map(|(j, x)| (j, c * x)).collect())
            .collect();
        Matrix::from_sparse_rows(self.field, self.cols, rows)
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-self.field.one())
    }

    /// `self + c*o`.
    pub fn add_scaled(&self, c: &Scalar, o: &Matrix) -> Matrix {
        if c.is_zero() {
            return self.clone();
        }
        self.zip_with(o, |a, b| a + &(c * b))
    }

    /// Linear combination `sum c_i M_i` of equally shaped matrices.
    pub fn combination(field: FieldSpec, rows: usize, cols: usize, terms: &[(&Scalar, &Matrix)]) -> Matrix {
        let triples = terms.iter().filter(|(c, _)| !c.is_zero()).flat_map(|(c, m)| {
            m.triples().into_iter().map(move |(i, j, x)| (i, j, *c * &x))
        });
        Matrix::from_triples(field, rows, cols, triples)
    }

    pub fn kron(&self, o: &Matrix) -> Matrix {
        let (r2, c2) = (o.rows, o.cols);
        let b = o.triples();
        let triples = self.triples().into_iter().flat_map(|(i, j, x)| {
            b.iter()
                .map(move |(k, l, y)| (i * r2 + k, j * c2 + l, &x * y))
                .collect::<Vec<_>>()
        });
        Matrix::from_triples(self.field, self.rows * r2, self.cols * c2, triples)
    }

    pub fn hstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.rows, o.rows, "hstack shape");
        let c = self.cols;
        let triples = self
            .triples()
            .into_iter()
            .chain(o.triples().into_iter().map(|(i, j, x)| (i, j + c, x)));
        Matrix::from_triples(self.field, self.rows, self.cols + o.cols, triples)
    }

    pub fn vstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.cols, "vstack shape");
        let r = self.rows;
        let triples = self
            .triples()
            .into_iter()
            .chain(o.triples().into_iter().map(|(i, j, x)| (i + r, j, x)));
        Matrix::from_triples(self.field, self.rows + o.rows, self.cols, triples)
    }

    pub fn vstack_all(field: FieldSpec, cols: usize, blocks: &[Matrix]) -> Matrix {
        let mut rows = Vec::new();
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack shape");
            for i in 0..b.rows {
                rows.push(b.row_sparse(i));
            }
        }
        Matrix::from_sparse_rows(field, cols, rows)
    }

    pub fn hstack_all(field: FieldSpec, rows: usize, blocks: &[Matrix]) -> Matrix {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut triples = Vec::new();
        let mut c0 = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack shape");
            triples.extend(b.triples().into_iter().map(|(i, j, x)| (i, j + c0, x)));
            c0 += b.cols;
        }
        Matrix::from_triples(field, rows, cols, triples)
    }

    pub fn block_diag(field: FieldSpec, blocks: &[Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut triples = Vec::new();
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            triples.extend(b.triples().into_iter().map(|(i, j, x)| (i + r0, j + c0, x)));
            r0 += b.rows;
            c0 += b.cols;
        }
        Matrix::from_triples(field, rows, cols, triples)
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]))
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_sparse_rows(self.field, self.cols, rows.iter().map(|&i| self.row_sparse(i)).collect())
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        self.transpose().select_rows(cols).transpose()
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            acc = &acc + &self.get(i, i);
        }
        acc
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn row_echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.field, self.cols);
        for i in 0..self.rows {
            let r = self.row_sparse(i);
            e.insert_sparse(&r);
        }
        e
    }

    pub fn rank(&self) -> usize {
        if self.rows > self.cols {
            self.transpose().row_echelon().rank()
        } else {
            self.row_echelon().rank()
        }
    }

    pub fn kernel(&self) -> Subspace {
        self.row_echelon().null_space()
    }

    /// Column space as a subspace of `k^rows`.
    pub fn image(&self) -> Subspace {
        self.transpose().row_echelon().into_subspace()
    }

    pub fn row_space(&self) -> Subspace {
        self.row_echelon().into_subspace()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Matrix::identity(self.field, n));
        let ech = aug.row_echelon();
        let piv = ech.pivots();
        if piv.len() < n || piv[n - 1] >= n {
            return None;
        }
        let rows = (0..n)
            .map(|i| {
                ech.row_for_pivot(i)
                    .unwrap()
                    .iter()
                    .filter(|(j, _)| *j >= n)
                    .map(|(j, x)| (j - n, x.clone()))
                    .collect()
            })
            .collect();
        Some(Matrix::from_sparse_rows(self.field, n, rows))
    }

    /// A matrix `L` with `L * self = I`, when `self` has full column rank.
    pub fn left_inverse(&self) -> Option<Matrix> {
        let t = self.transpose();
        let ech = t.row_echelon();
        if ech.rank() < self.cols {
            return None;
        }
        let rows = ech.pivots();
        let sq = self.select_rows(&rows);
        let inv = sq.inverse()?;
        // place the inverse on the chosen rows
        let triples = inv
            .triples()
            .into_iter()
            .map(|(i, j, x)| (i, rows[j], x));
        Some(Matrix::from_triples(self.field, self.cols, self.rows, triples))
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = self.field.one();
        for c in 0..n {
            let pivot = (c..n)
                .filter(|&r| !a[r][c].is_zero())
                .min_by_key(|&r| a[r][c].height());
            let Some(p) = pivot else {
                return self.field.zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det = &det * &a[c][c];
            let inv = a[c][c].inv().unwrap();
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = &a[r][c] * &inv;
                for k in c..n {
                    if !a[c][k].is_zero() {
                        a[r][k] = &a[r][k] - &(&f * &a[c][k]);
                    }
                }
            }
        }
        det
    }

    /// Smallest `k >= 1` with `self^k = I`, searched up to `bound`.
    pub fn order(&self, bound: u64) -> Option<u64> {
        let id = Matrix::identity(self.field, self.rows);
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc == id {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }
}

impl PartialEq for Matrix {
    fn eq(&self, o: &Matrix) -> bool {
        self.rows == o.rows
            && self.cols == o.cols
            && (0..self.rows).all(|i| self.row(i).eq(o.row(i)))
    }
}

impl Eq for Matrix {}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_shapes_keep_their_rows() {
        let q = FieldSpec::rationals();
        let a = Matrix::from_dense(q, 3, 0, Vec::new());
        let b = Matrix::zeros(q, 0, 2);
        let p = a.mul(&b);
        assert_eq!((p.rows(), p.cols()), (3, 2));
        assert!(p.is_zero());
        assert_eq!(a.row(2).count(), 0);
        assert_eq!(Matrix::identity(q, 0).inverse().unwrap().rows(), 0);
    }

    #[test]
    fn determinant_and_order() {
        let q = FieldSpec::rationals();
        let m = Matrix::from_i64(q, &[&[0, -1], &[1, 0]]);
        assert_eq!(m.det(), q.one());
        assert_eq!(m.order(10), Some(4));
        assert_eq!(Matrix::from_i64(q, &[&[1, 1], &[0, 1]]).order(50), None);
    }
}

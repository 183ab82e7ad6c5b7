//! Exact linear algebra over `Q` and `F_p`.

mod echelon;
mod matrix;
pub mod mvpoly;
pub mod poly;
pub mod search;

pub use echelon::{BasisCoordinates, Echelon, Quotient, Subspace};
pub use matrix::Matrix;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// A sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// `a + c*b` for sparse vectors.
pub fn axpy_sparse(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn densify(field: FieldSpec, n: usize, v: &SparseVec) -> Vec<Scalar> {
    let mut out = vec![field.zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn sparsify(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn zero_vec(field: FieldSpec, n: usize) -> Vec<Scalar> {
    vec![field.zero(); n]
}

pub fn unit_vec(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += c * v`.
pub fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(c * x);
        }
    }
}

pub fn dot(field: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

/// Canonical basis of `{v : Av = 0}`.
pub fn kernel_basis(a: &Matrix) -> Subspace {
    a.kernel()
}

/// All solutions of `Av = b`: a particular solution and the kernel.
pub fn solve_affine(a: &Matrix, b: &[Scalar]) -> Result<(Vec<Scalar>, Subspace)> {
    if b.len() != a.rows() {
        return Err(Error::dim("right-hand side length"));
    }
    let field = a.field();
    let n = a.cols();
    let mut ech = Echelon::new(field, n + 1);
    for i in 0..a.rows() {
        let mut row: SparseVec = a.row(i).map(|(j, x)| (j, x.clone())).collect();
        if !b[i].is_zero() {
            row.push((n, b[i].clone()));
        }
        ech.insert_sparse(&row);
    }
    if ech.is_pivot(n) {
        return Err(Error::NoSolution);
    }
    let mut x = zero_vec(field, n);
    for p in ech.pivots() {
        let row = ech.row_for_pivot(p).unwrap();
        if let Some((_, v)) = row.last().filter(|e| e.0 == n) {
            x[p] = v.clone();
        }
    }
    Ok((x, a.kernel()))
}

/// Kronecker product with the left factor's index major.
pub fn kronecker(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one_matrix() {
        let q = FieldSpec::rationals();
        let a = Matrix::from_i64(q, &[&[1, 1], &[2, 2]]);
        let expected = Subspace::span(q, 2, [vec![q.one(), q.from_i64(-1)].as_slice()]);
        assert_eq!(a.kernel(), expected);
    }

    #[test]
    fn affine_solve_over_f3_matches_enumeration() {
        let f = FieldSpec::prime(3).unwrap();
        let a = Matrix::from_i64(f, &[&[1, 1]]);
        let (x, k) = solve_affine(&a, &[f.from_i64(2)]).unwrap();
        assert_eq!(x, vec![f.from_i64(2), f.zero()]);
        assert_eq!(k, Subspace::span(f, 2, [vec![f.one(), f.from_i64(-1)].as_slice()]));
        let all: Vec<Scalar> = f.elements().unwrap().collect();
        let mut count = 0;
        for u in &all {
            for v in &all {
                if (u + v) == f.from_i64(2) {
                    count += 1;
                    let d = vec![u - &x[0], v - &x[1]];
                    assert!(k.contains(&d));
                }
            }
        }
        assert_eq!(count, 3);
    }

    #[test]
    fn inconsistent_system_has_no_solution() {
        let q = FieldSpec::rationals();
        let a = Matrix::from_i64(q, &[&[1, 1], &[1, 1]]);
        assert!(matches!(solve_affine(&a, &[q.one(), q.zero()]), Err(Error::NoSolution)));
    }

    #[test]
    fn kronecker_with_identity_repeats_blocks() {
        let q = FieldSpec::rationals();
        let b = Matrix::from_i64(q, &[&[0, 1], &[0, 0]]);
        let k = kronecker(&Matrix::identity(q, 2), &b);
        let expected = Matrix::from_i64(q, &[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]);
        assert_eq!(k, expected);
    }
}

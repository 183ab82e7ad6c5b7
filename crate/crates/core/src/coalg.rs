//! Finite-dimensional coalgebras and their convolution algebras.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Decomposition};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::{densify, is_zero_vec, unit_vec, zero_vec, Matrix, SparseVec, Subspace};

/// A coalgebra with basis `e_0..e_{n-1}`.
///
/// `delta[c]` holds the coefficients of `e_a (x) e_b` in `Δ(e_c)` at tensor
/// index `a * n + b`.
#[derive(Clone, Debug)]
pub struct Coalgebra {
    field: FieldSpec,
    dim: usize,
    delta: Vec<SparseVec>,
    eps: Vec<Scalar>,
    dual: Algebra,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
    generators: Vec<Vec<Scalar>>,
}

impl Coalgebra {
    /// Validate raw structure constants.
    pub fn new(field: FieldSpec, dim: usize, delta: Vec<SparseVec>, eps: Vec<Scalar>) -> Result<Self> {
        if delta.len() != dim || eps.len() != dim {
            return Err(Error::dim("comultiplication or counit has the wrong length"));
        }
        if delta.iter().flatten().any(|(i, _)| *i >= dim * dim) {
            return Err(Error::dim("tensor index out of range"));
        }
        let c = Self::assemble(field, dim, delta, eps);
        c.check_coassociative()?;
        c.check_counit()?;
        Ok(c)
    }

    /// Build from `(c, a, b, value)`: the coefficient of `e_a (x) e_b` in `Δ(e_c)`.
    pub fn from_triples<I>(field: FieldSpec, dim: usize, triples: I, eps: Vec<Scalar>) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let mut raw: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); dim];
        for (c, a, b, x) in triples {
            if c >= dim || a >= dim || b >= dim {
                return Err(Error::dim("comultiplication index out of range"));
            }
            raw[c].push((0, a * dim + b, x));
        }
        let delta = raw
            .into_iter()
            .map(|r| {
                let m = Matrix::from_triples(field, 1, dim * dim, r);
                m.row_sparse(0)
            })
            .collect();
        Self::new(field, dim, delta, eps)
    }

    fn assemble(field: FieldSpec, dim: usize, delta: Vec<SparseVec>, eps: Vec<Scalar>) -> Self {
        let n = dim;
        // e^a e^b = sum_c Δ_c(a, b) e^c
        let mut table: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n * n];
        for (c, d) in delta.iter().enumerate() {
            for (t, x) in d {
                table[*t].push((0, c, x.clone()));
            }
        }
        let table = table
            .into_iter()
            .map(|r| Matrix::from_triples(field, 1, n, r).row_sparse(0))
            .collect();
        let dual = Algebra::new(field, n, table, eps.clone());
        // f ⇀ c = c_1 f(c_2):  L_a[j][c] = Δ_c(j, a)
        // c ↼ f = f(c_1) c_2:  R_a[k][c] = Δ_c(a, k)
        let mut lt: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n];
        let mut rt: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n];
        for (c, d) in delta.iter().enumerate() {
            for (t, x) in d {
                let (a, b) = (t / n, t % n);
                lt[b].push((a, c, x.clone()));
                rt[a].push((b, c, x.clone()));
            }
        }
        let left = lt.into_iter().map(|t| Matrix::from_triples(field, n, n, t)).collect();
        let right = rt.into_iter().map(|t| Matrix::from_triples(field, n, n, t)).collect();
        let mut c = Coalgebra {
            field,
            dim,
            delta,
            eps,
            dual,
            left,
            right,
            generators: Vec::new(),
        };
        c.generators = c.algebra_generators();
        c
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn delta(&self, c: usize) -> &SparseVec {
        &self.delta[c]
    }

    /// `Δ` as an `n^2 x n` matrix.
    pub fn delta_matrix(&self) -> Matrix {
        Matrix::from_columns(
            self.field,
            self.dim * self.dim,
            &self.delta.iter().map(|d| densify(self.field, self.dim * self.dim, d)).collect::<Vec<_>>(),
        )
    }

    pub fn eps(&self) -> &[Scalar] {
        &self.eps
    }

    /// The convolution algebra `C*` in the dual basis.
    pub fn dual_algebra(&self) -> &Algebra {
        &self.dual
    }

    /// `f ⇀ c = c_1 f(c_2)` for `f = e^a`.
    pub fn left_action(&self, a: usize) -> &Matrix {
        &self.left[a]
    }

    /// `c ↼ f = f(c_1) c_2` for `f = e^a`.
    pub fn right_action(&self, a: usize) -> &Matrix {
        &self.right[a]
    }

    pub fn left_action_of(&self, f: &[Scalar]) -> Matrix {
        combine(self.field, self.dim, self.dim, f, &self.left)
    }

    pub fn right_action_of(&self, f: &[Scalar]) -> Matrix {
        combine(self.field, self.dim, self.dim, f, &self.right)
    }

    /// Elements generating `C*` as an algebra.
    pub fn generators(&self) -> &[Vec<Scalar>] {
        &self.generators
    }

    /// Coefficient of `e_a (x) e_b` in `Δ(e_c)`.
    pub fn coeff(&self, c: usize, a: usize, b: usize) -> Scalar {
        let t = a * self.dim + b;
        match self.delta[c].binary_search_by_key(&t, |e| e.0) {
            Ok(k) => self.delta[c][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    /// `Δ` applied to a vector.
    pub fn comultiply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(self.field, self.dim * self.dim);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (t, y) in &self.delta[c] {
                out[*t] = &out[*t] + &(x * y);
            }
        }
        out
    }

    fn check_coassociative(&self) -> Result<()> {
        let n = self.dim;
        for c in 0..n {
            let mut lhs: Vec<(usize, usize, Scalar)> = Vec::new();
            let mut rhs: Vec<(usize, usize, Scalar)> = Vec::new();
            for (t, x) in &self.delta[c] {
                let (a, b) = (t / n, t % n);
                for (s, y) in &self.delta[a] {
                    lhs.push((0, s * n + b, x * y));
                }
                for (s, y) in &self.delta[b] {
                    rhs.push((0, a * n * n + s, x * y));
                }
            }
            let l = Matrix::from_triples(self.field, 1, n * n * n, lhs);
            let r = Matrix::from_triples(self.field, 1, n * n * n, rhs);
            if l != r {
                return Err(Error::validation("coassociativity", &[c]));
            }
        }
        Ok(())
    }

    fn check_counit(&self) -> Result<()> {
        let n = self.dim;
        // (id ⊗ ε)Δ first, then (ε ⊗ id)Δ
        for side in 0..2 {
            for c in 0..n {
                let mut v = zero_vec(self.field, n);
                for (t, x) in &self.delta[c] {
                    let (a, b) = (t / n, t % n);
                    let (keep, drop) = if side == 0 { (a, b) } else { (b, a) };
                    v[keep] = &v[keep] + &(x * &self.eps[drop]);
                }
                if v != unit_vec(self.field, n, c) {
                    return Err(Error::validation("counit", &[c]));
                }
            }
        }
        Ok(())
    }

    /// The co-opposite coalgebra, `Δ^cop(c) = c_2 ⊗ c_1`.
    pub fn cop(&self) -> Coalgebra {
        let n = self.dim;
        let delta = self
            .delta
            .iter()
            .map(|d| {
                let t = d.iter().map(|(t, x)| (0, (t % n) * n + t / n, x.clone()));
                Matrix::from_triples(self.field, 1, n * n, t).row_sparse(0)
            })
            .collect();
        Self::assemble(self.field, n, delta, self.eps.clone())
    }

    /// Grouplike elements among the basis vectors.
    pub fn is_grouplike(&self, v: &[Scalar]) -> bool {
        let n = self.dim;
        let d = self.comultiply(v);
        let mut ok = crate::linalg::dot(self.field, &self.eps, v).is_one();
        for a in 0..n {
            for b in 0..n {
                if d[a * n + b] != &v[a] * &v[b] {
                    ok = false;
                }
            }
        }
        ok && !is_zero_vec(v)
    }

    /// Whether `phi` (acting on column vectors) is a coalgebra map `C -> C`.
    pub fn is_coalgebra_map(&self, phi: &Matrix) -> bool {
        let n = self.dim;
        let eps_ok = (0..n).all(|c| crate::linalg::dot(self.field, &self.eps, &phi.column(c)) == self.eps[c]);
        if !eps_ok {
            return false;
        }
        let pp = phi.kron(phi);
        (0..n).all(|c| {
            let lhs = self.comultiply(&phi.column(c));
            let rhs = pp.mul_vec(&densify(self.field, n * n, &self.delta[c]));
            lhs == rhs
        })
    }

    pub fn decompose_dual(&self) -> Result<Decomposition> {
        self.dual.decompose()
    }

    fn algebra_generators(&self) -> Vec<Vec<Scalar>> {
        let n = self.dim;
        let mut gens: Vec<Vec<Scalar>> = Vec::new();
        let mut closure = Subspace::span(self.field, n, [self.eps.as_slice()]);
        for a in 0..n {
            let ea = unit_vec(self.field, n, a);
            if closure.contains(&ea) {
                continue;
            }
            gens.push(ea);
            // close up under multiplication by the generators
            loop {
                let mut ext = closure.clone();
                let basis = closure.basis();
                let mut vecs = Vec::new();
                for g in &gens {
                    for v in &basis {
                        vecs.push(self.dual.mul(g, v));
                    }
                }
                ext = ext.sum(&Subspace::span(self.field, n, vecs.iter().map(|v| v.as_slice())));
                if ext.dim() == closure.dim() {
                    break;
                }
                closure = ext;
            }
        }
        gens
    }
}

pub(crate) fn combine(field: FieldSpec, rows: usize, cols: usize, f: &[Scalar], mats: &[Matrix]) -> Matrix {
    let terms: Vec<(&Scalar, &Matrix)> = f.iter().zip(mats).filter(|(c, _)| !c.is_zero()).collect();
    Matrix::combination(field, rows, cols, &terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix_coalgebra(field: FieldSpec, m: usize) -> Coalgebra {
        let n = m * m;
        let mut t = Vec::new();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    t.push((i * m + j, i * m + k, k * m + j, field.one()));
                }
            }
        }
        let eps = (0..n).map(|c| if c / m == c % m { field.one() } else { field.zero() }).collect();
        Coalgebra::from_triples(field, n, t, eps).unwrap()
    }

    #[test]
    fn matrix_coalgebra_dual_is_matrix_algebra() {
        let k = FieldSpec::rationals();
        let c = matrix_coalgebra(k, 2);
        let a = c.dual_algebra();
        a.check().unwrap();
        assert!(!a.is_commutative());
        let d = a.decompose().unwrap();
        assert_eq!(d.multiplicities(), vec![2]);
    }

    #[test]
    fn broken_counit_names_e12() {
        let k = FieldSpec::rationals();
        let c = matrix_coalgebra(k, 2);
        let mut eps = c.eps().to_vec();
        eps[1] = k.one();
        let err = Coalgebra::new(k, 4, (0..4).map(|i| c.delta(i).clone()).collect(), eps).unwrap_err();
        assert_eq!(err, Error::validation("counit", &[1]));
    }

    #[test]
    fn cop_dual_is_opposite() {
        let k = FieldSpec::rationals();
        let c = matrix_coalgebra(k, 2);
        let op = c.dual_algebra().opposite();
        let copd = c.cop();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(op.basis_product(a, b), copd.dual_algebra().basis_product(a, b));
            }
        }
    }
}

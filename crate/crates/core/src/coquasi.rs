//! Coquasi-bialgebras: axioms, convolution inverse of the associator,
//! preantipodes, coquasi-antipodes, right duals of left comodules and the
//! cointegral-based classification.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::classify::classify;
use crate::coalg::Coalgebra;
use crate::comod::{Comodule, Side, Structure};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::hopf::{check_comultiplicative, HopfAlgebra};
use crate::linalg::{add_scaled, densify, solve_affine, unit_vec, zero_vec, Matrix, SparseVec, Subspace};

#[derive(Clone, Debug)]
pub struct CoquasiBialgebra {
    coalgebra: Arc<Coalgebra>,
    algebra: Algebra,
    omega: Vec<Scalar>,
    omega_inv: Vec<Scalar>,
}

/// Solution of the preantipode equations.
#[derive(Clone, Debug)]
pub struct Preantipode {
    pub matrix: Matrix,
    /// Dimension of the solution space of the (affine) system.
    pub solution_dim: usize,
}

/// Items of the cointegral characterization plus the dimension criterion.
#[derive(Clone, Debug)]
pub struct CoquasiReport {
    pub left_cointegrals: usize,
    pub right_cointegrals: usize,
    pub projective_exists: bool,
    pub rational_part_nonzero: bool,
    pub quasi_frobenius: bool,
    /// `(dim X, dim ^∨∨X)` for each simple left comodule.
    pub simple_dims: Vec<(usize, usize)>,
    pub dimension_criterion: bool,
    pub co_frobenius: bool,
    pub preantipode_dim: usize,
}

impl CoquasiReport {
    pub fn items_consistent(&self) -> bool {
        let nonzero = self.left_cointegrals > 0;
        nonzero == (self.right_cointegrals > 0)
            && nonzero == self.projective_exists
            && nonzero == self.rational_part_nonzero
            && nonzero == self.quasi_frobenius
    }

    /// A QF instance failing the dimension criterion.
    pub fn open_question_instance(&self) -> bool {
        self.quasi_frobenius && !self.dimension_criterion
    }
}

/// The `k`-fold coproduct of a basis element as `(indices, coefficient)`.
pub fn iterated_coproduct(c: &Coalgebra, h: usize, k: usize) -> Vec<(Vec<usize>, Scalar)> {
    let mut terms = vec![(vec![h], c.field().one())];
    for _ in 1..k {
        let mut next = Vec::new();
        for (idx, x) in terms {
            let last = *idx.last().unwrap();
            for (t, y) in c.delta(last) {
                let mut v = idx.clone();
                *v.last_mut().unwrap() = t / c.dim();
                v.push(t % c.dim());
                next.push((v, &x * y));
            }
        }
        terms = next;
    }
    terms
}

fn digits(mut t: usize, n: usize, k: usize) -> Vec<usize> {
    let mut d = vec![0; k];
    for i in (0..k).rev() {
        d[i] = t % n;
        t /= n;
    }
    d
}

/// Terms of `Δ` on `H^{⊗k}`: for tensor index `t`, pairs `(t₁, t₂, coeff)`.
fn tensor_coproduct(c: &Coalgebra, k: usize, t: usize) -> Vec<(usize, usize, Scalar)> {
    let n = c.dim();
    let mut terms = vec![(0usize, 0usize, c.field().one())];
    for d in digits(t, n, k) {
        let mut next = Vec::new();
        for (l, r, x) in &terms {
            for (s, y) in c.delta(d) {
                next.push((l * n + s / n, r * n + s % n, x * y));
            }
        }
        terms = next;
    }
    terms
}

/// Convolution of two functionals on `H^{⊗k}`.
pub fn convolve(c: &Coalgebra, k: usize, f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
    let field = c.field();
    (0..f.len())
        .map(|t| {
            let mut acc = field.zero();
            for (l, r, x) in tensor_coproduct(c, k, t) {
                if !f[l].is_zero() && !g[r].is_zero() {
                    acc = &acc + &(&x * &(&f[l] * &g[r]));
                }
            }
            acc
        })
        .collect()
}

/// `ε^{⊗k}`.
fn counit_power(c: &Coalgebra, k: usize) -> Vec<Scalar> {
    let n = c.dim();
    (0..n.pow(k as u32))
        .map(|t| {
            digits(t, n, k)
                .iter()
                .fold(c.field().one(), |acc, &d| &acc * &c.eps()[d])
        })
        .collect()
}

impl CoquasiBialgebra {
    /// Validate all axioms; `omega` is indexed `a n² + b n + c`.
    pub fn new(coalgebra: Arc<Coalgebra>, mult: Vec<SparseVec>, unit: Vec<Scalar>, omega: Vec<Scalar>) -> Result<Self> {
        let field = coalgebra.field();
        let n = coalgebra.dim();
        if mult.len() != n * n || unit.len() != n || omega.len() != n * n * n {
            return Err(Error::dim("coquasi structure shape"));
        }
        let algebra = Algebra::new(field, n, mult, unit);
        for b in 0..n {
            let e = unit_vec(field, n, b);
            if algebra.mul(algebra.unit(), &e) != e || algebra.mul(&e, algebra.unit()) != e {
                return Err(Error::validation("unit", &[b]));
            }
        }
        if !coalgebra.is_grouplike(algebra.unit()) {
            return Err(Error::validation("unit grouplike", &[]));
        }
        check_comultiplicative(&coalgebra, &algebra)?;
        let omega_inv = convolution_inverse(&coalgebra, 3, &omega)?;
        let h = CoquasiBialgebra {
            coalgebra,
            algebra,
            omega,
            omega_inv,
        };
        h.check_normalization()?;
        h.check_quasi_associativity()?;
        h.check_cocycle()?;
        Ok(h)
    }

    pub fn from_triples<I>(coalgebra: Arc<Coalgebra>, mult: I, unit: Vec<Scalar>, omega: Vec<Scalar>) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let table = crate::hopf::mult_table(&coalgebra, mult)?;
        CoquasiBialgebra::new(coalgebra, table, unit, omega)
    }

    /// A Hopf algebra with the trivial associator `ε ⊗ ε ⊗ ε`.
    pub fn from_hopf(h: &HopfAlgebra) -> Result<Self> {
        let c = h.coalgebra().clone();
        let omega = counit_power(&c, 3);
        let n = c.dim();
        let table = (0..n * n).map(|k| h.algebra().basis_product(k / n, k % n).clone()).collect();
        CoquasiBialgebra::new(c, table, h.unit().to_vec(), omega)
    }

    pub fn coalgebra(&self) -> &Arc<Coalgebra> {
        &self.coalgebra
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn unit(&self) -> &[Scalar] {
        self.algebra.unit()
    }

    pub fn omega(&self) -> &[Scalar] {
        &self.omega
    }

    pub fn omega_inverse(&self) -> &[Scalar] {
        &self.omega_inv
    }

    fn n(&self) -> usize {
        self.coalgebra.dim()
    }

    /// `ω(x, y, z)` for vectors.
    fn omega_eval(&self, w: &[Scalar], x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Scalar {
        let n = self.n();
        let field = self.coalgebra.field();
        let mut acc = field.zero();
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let xy = xa * yb;
                for (c, zc) in z.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    acc = &acc + &(&(&xy * zc) * &w[(a * n + b) * n + c]);
                }
            }
        }
        acc
    }

    fn e(&self, i: usize) -> Vec<Scalar> {
        unit_vec(self.coalgebra.field(), self.n(), i)
    }

    fn check_normalization(&self) -> Result<()> {
        let n = self.n();
        for x in 0..n {
            for z in 0..n {
                let v = self.omega_eval(&self.omega, &self.e(x), self.unit(), &self.e(z));
                if v != &self.coalgebra.eps()[x] * &self.coalgebra.eps()[z] {
                    return Err(Error::validation("associator normalization", &[x, z]));
                }
            }
        }
        Ok(())
    }

    fn check_quasi_associativity(&self) -> Result<()> {
        let n = self.n();
        let field = self.coalgebra.field();
        let a = &self.algebra;
        for t in 0..n * n * n {
            let mut lhs = zero_vec(field, n);
            let mut rhs = zero_vec(field, n);
            for (l, r, x) in tensor_coproduct(&self.coalgebra, 3, t) {
                let dl = digits(l, n, 3);
                let dr = digits(r, n, 3);
                let wl = &x * &self.omega[r];
                if !wl.is_zero() {
                    let yz = a.mul(&self.e(dl[1]), &self.e(dl[2]));
                    add_scaled(&mut lhs, &wl, &a.mul(&self.e(dl[0]), &yz));
                }
                let wr = &x * &self.omega[l];
                if !wr.is_zero() {
                    let xy = a.mul(&self.e(dr[0]), &self.e(dr[1]));
                    add_scaled(&mut rhs, &wr, &a.mul(&xy, &self.e(dr[2])));
                }
            }
            if lhs != rhs {
                return Err(Error::validation("quasi-associativity", &digits(t, n, 3)));
            }
        }
        Ok(())
    }

    fn check_cocycle(&self) -> Result<()> {
        let n = self.n();
        let field = self.coalgebra.field();
        let a = &self.algebra;
        let eps = self.coalgebra.eps();
        let n4 = n.pow(4);
        let lift = |f: &dyn Fn(&[usize]) -> Scalar| -> Vec<Scalar> { (0..n4).map(|t| f(&digits(t, n, 4))).collect() };
        let w = &self.omega;
        let prod = |x: usize, y: usize| densify(field, n, a.basis_product(x, y));
        let a1 = lift(&|d| self.omega_eval(w, &self.e(d[0]), &self.e(d[1]), &prod(d[2], d[3])));
        let b1 = lift(&|d| self.omega_eval(w, &prod(d[0], d[1]), &self.e(d[2]), &self.e(d[3])));
        let e1 = lift(&|d| &eps[d[0]] * &w[(d[1] * n + d[2]) * n + d[3]]);
        let f1 = lift(&|d| self.omega_eval(w, &self.e(d[0]), &prod(d[1], d[2]), &self.e(d[3])));
        let g1 = lift(&|d| &w[(d[0] * n + d[1]) * n + d[2]] * &eps[d[3]]);
        let c = &self.coalgebra;
        let lhs = convolve(c, 4, &a1, &b1);
        let rhs = convolve(c, 4, &convolve(c, 4, &e1, &f1), &g1);
        if let Some(t) = (0..n4).find(|&t| lhs[t] != rhs[t]) {
            return Err(Error::validation("cocycle", &digits(t, n, 4)));
        }
        Ok(())
    }

    /// Solve the three preantipode equations; `None` when the affine system is
    /// inconsistent.
    pub fn preantipode(&self) -> Option<Preantipode> {
        let n = self.n();
        let field = self.coalgebra.field();
        let c = &self.coalgebra;
        let a = &self.algebra;
        let var = |k: usize, j: usize| k * n + j;
        let mut triples: Vec<(usize, usize, Scalar)> = Vec::new();
        let mut rhs: Vec<Scalar> = Vec::new();
        let mut row = 0usize;
        // S(h₁)₍₁₎ h₂ ⊗ S(h₁)₍₂₎ - 1 ⊗ S(h) = 0 and S(h₂)₍₁₎ ⊗ h₁ S(h₂)₍₂₎ - S(h) ⊗ 1 = 0
        for h in 0..n {
            let mut first: Vec<(usize, usize, Scalar)> = Vec::new();
            let mut second: Vec<(usize, usize, Scalar)> = Vec::new();
            for (t, x) in c.delta(h) {
                let (h1, h2) = (t / n, t % n);
                for k in 0..n {
                    for (s, y) in c.delta(k) {
                        let (p, q) = (s / n, s % n);
                        let xy = x * y;
                        for (r, z) in a.basis_product(p, h2) {
                            first.push((r * n + q, var(k, h1), &xy * z));
                        }
                        for (r, z) in a.basis_product(h1, q) {
                            second.push((p * n + r, var(k, h2), &xy * z));
                        }
                    }
                }
            }
            for k in 0..n {
                for (b, u) in self.unit().iter().enumerate().filter(|(_, u)| !u.is_zero()) {
                    first.push((b * n + k, var(k, h), -u.clone()));
                    second.push((k * n + b, var(k, h), -u.clone()));
                }
            }
            for (r, v, x) in first {
                triples.push((row + r, v, x));
            }
            row += n * n;
            for (r, v, x) in second {
                triples.push((row + r, v, x));
            }
            row += n * n;
            rhs.extend(core::iter::repeat_n(field.zero(), 2 * n * n));
        }
        // ω(h₁ ⊗ S(h₂) ⊗ h₃) = ε(h)
        for h in 0..n {
            for (idx, x) in iterated_coproduct(c, h, 3) {
                for k in 0..n {
                    let w = &self.omega[(idx[0] * n + k) * n + idx[2]];
                    if !w.is_zero() {
                        triples.push((row, var(k, idx[1]), &x * w));
                    }
                }
            }
            rhs.push(c.eps()[h].clone());
            row += 1;
        }
        let sys = Matrix::from_triples(field, row, n * n, triples);
        let (sol, kernel) = solve_affine(&sys, &rhs).ok()?;
        Some(Preantipode {
            matrix: Matrix::from_dense(field, n, n, sol),
            solution_dim: kernel.dim(),
        })
    }

    /// Check the four coquasi-antipode equations; the error names the first
    /// failing equation and basis element.
    pub fn check_coquasi_antipode(&self, s: &Matrix, alpha: &[Scalar], beta: &[Scalar]) -> Result<()> {
        let n = self.n();
        let field = self.coalgebra.field();
        let c = &self.coalgebra;
        let a = &self.algebra;
        let one = self.unit().to_vec();
        for h in 0..n {
            let mut lhs = zero_vec(field, n);
            for (d, x) in iterated_coproduct(c, h, 3) {
                let coef = &x * &beta[d[1]];
                if !coef.is_zero() {
                    add_scaled(&mut lhs, &coef, &a.mul(&self.e(d[0]), &s.column(d[2])));
                }
            }
            let mut expect = zero_vec(field, n);
            add_scaled(&mut expect, &beta[h], &one);
            if lhs != expect {
                return Err(Error::validation("coquasi-antipode beta", &[h]));
            }
            let mut lhs = zero_vec(field, n);
            for (d, x) in iterated_coproduct(c, h, 3) {
                let coef = &x * &alpha[d[1]];
                if !coef.is_zero() {
                    add_scaled(&mut lhs, &coef, &a.mul(&s.column(d[0]), &self.e(d[2])));
                }
            }
            let mut expect = zero_vec(field, n);
            add_scaled(&mut expect, &alpha[h], &one);
            if lhs != expect {
                return Err(Error::validation("coquasi-antipode alpha", &[h]));
            }
        }
        for h in 0..n {
            let terms = iterated_coproduct(c, h, 5);
            let mut v3 = field.zero();
            let mut v4 = field.zero();
            for (d, x) in &terms {
                let mid = {
                    let coef = x * &(&beta[d[1]] * &alpha[d[3]]);
                    let mut m = zero_vec(field, n);
                    add_scaled(&mut m, &coef, &s.column(d[2]));
                    m
                };
                v3 = &v3 + &self.omega_eval(&self.omega, &self.e(d[0]), &mid, &self.e(d[4]));
                let coef = x * &(&alpha[d[1]] * &beta[d[3]]);
                if !coef.is_zero() {
                    let mut m = zero_vec(field, n);
                    add_scaled(&mut m, &coef, &self.e(d[2]));
                    v4 = &v4 + &self.omega_eval(&self.omega_inv, &s.column(d[0]), &m, &s.column(d[4]));
                }
            }
            if v3 != c.eps()[h] {
                return Err(Error::validation("coquasi-antipode omega", &[h]));
            }
            if v4 != c.eps()[h] {
                return Err(Error::validation("coquasi-antipode omega inverse", &[h]));
            }
        }
        Ok(())
    }

    /// `^∨X = (X* ⊗ H)^{co H}` for a left comodule `X`, with the right
    /// coaction `f ⊗ h ↦ f₀ ⊗ h₁ ⊗ f₁ h₂` and the left coaction on the `H` factor.
    pub fn right_dual(&self, x: &Comodule) -> Result<Comodule> {
        if x.side() != Side::Left {
            return Err(Error::dim("left comodule expected"));
        }
        if self.preantipode().is_none() {
            return Err(Error::NoPreantipode);
        }
        let n = self.n();
        let d = x.dim();
        let field = self.coalgebra.field();
        let c = &self.coalgebra;
        let mut triples = Vec::new();
        for i in 0..d {
            for h in 0..n {
                let col = i * n + h;
                for (t, s) in c.delta(h) {
                    let (h1, h2) = (t / n, t % n);
                    for a in 0..n {
                        let at = x.action(a);
                        for (j, y) in at.row(i) {
                            // (A_aᵀ e^i)_j = A_a[i][j]
                            for (k, z) in self.algebra.basis_product(a, h2) {
                                triples.push(((j * n + h1) * n + k, col, &(s * y) * z));
                            }
                        }
                    }
                }
                for (b, u) in self.unit().iter().enumerate().filter(|(_, u)| !u.is_zero()) {
                    triples.push(((i * n + h) * n + b, col, -u.clone()));
                }
            }
        }
        let phi = Matrix::from_triples(field, d * n * n, d * n, triples);
        let coinv = phi.kernel();
        let reg = Comodule::regular(c.clone(), Side::Left);
        let id = Matrix::identity(field, d);
        let actions = (0..n).map(|a| crate::linalg::kronecker(&id, reg.action(a))).collect();
        let big = Comodule::from_parts_unchecked(c.clone(), Side::Left, d * n, actions);
        let (sub, _) = big.sub(&coinv)?;
        Ok(sub)
    }

    /// Left or right cointegrals.
    pub fn cointegrals(&self, left: bool) -> Subspace {
        crate::hopf::cointegral_space(&self.coalgebra, self.unit(), left)
    }

    pub fn classification(&self) -> Result<CoquasiReport> {
        let pre = self.preantipode().ok_or(Error::NoPreantipode)?;
        let cop = Arc::new(self.coalgebra.cop());
        let st = Structure::new(cop)?;
        let mut simple_dims = Vec::new();
        for s in st.simples() {
            let left = Comodule::from_parts_unchecked(self.coalgebra.clone(), Side::Left, s.dim(), s.actions().to_vec());
            let dd = self.right_dual(&self.right_dual(&left)?)?;
            simple_dims.push((s.dim(), dd.dim()));
        }
        let report = classify(&self.coalgebra, None)?;
        let dimension_criterion = simple_dims.iter().all(|(a, b)| a == b);
        let quasi_frobenius = report.quasi_frobenius;
        Ok(CoquasiReport {
            left_cointegrals: self.cointegrals(true).dim(),
            right_cointegrals: self.cointegrals(false).dim(),
            projective_exists: st.projectives().iter().any(|p| p.dim() > 0),
            rational_part_nonzero: self.coalgebra.dim() > 0,
            quasi_frobenius,
            simple_dims,
            dimension_criterion,
            co_frobenius: quasi_frobenius && dimension_criterion,
            preantipode_dim: pre.solution_dim,
        })
    }
}

/// `ψ` with `ω ∗ ψ = ε^{⊗k} = ψ ∗ ω`.
pub fn convolution_inverse(c: &Coalgebra, k: usize, omega: &[Scalar]) -> Result<Vec<Scalar>> {
    let field = c.field();
    let len = omega.len();
    let mut triples = Vec::new();
    for t in 0..len {
        for (l, r, x) in tensor_coproduct(c, k, t) {
            if !omega[l].is_zero() {
                triples.push((t, r, &x * &omega[l]));
            }
        }
    }
    let sys = Matrix::from_triples(field, len, len, triples);
    let target = counit_power(c, k);
    let (psi, _) = solve_affine(&sys, &target).map_err(|_| Error::NotConvolutionInvertible)?;
    if convolve(c, k, &psi, omega) != target {
        return Err(Error::NotConvolutionInvertible);
    }
    Ok(psi)
}

/// The dual of a left comodule over a Hopf algebra on `X*`, with
/// `f₋₁ ⟨f₀, x⟩ = s(x₋₁) ⟨f, x₀⟩`.
pub fn hopf_left_dual(h: &HopfAlgebra, x: &Comodule) -> Comodule {
    let n = h.dim();
    let s = h.antipode();
    let actions = (0..n)
        .map(|a| {
            let row: Vec<Scalar> = (0..n).map(|b| s.get(a, b).clone()).collect();
            x.action_of(&row).transpose()
        })
        .collect();
    Comodule::from_parts_unchecked(h.coalgebra().clone(), Side::Left, x.dim(), actions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{self, Group};
    use crate::field::FieldSpec;

    fn kz2_with(c: i64) -> Result<CoquasiBialgebra> {
        let q = FieldSpec::rationals();
        let h = corpus::group_algebra(q, Group::Cyclic(2)).unwrap();
        let mut omega = vec![q.one(); 8];
        omega[7] = q.from_i64(c);
        let table = (0..4).map(|k| h.algebra().basis_product(k / 2, k % 2).clone()).collect();
        CoquasiBialgebra::new(h.coalgebra().clone(), table, h.unit().to_vec(), omega)
    }

    #[test]
    fn nontrivial_associator_on_kz2_validates() {
        let h = kz2_with(-1).unwrap();
        let q = FieldSpec::rationals();
        assert_eq!(h.omega()[7], q.from_i64(-1));
        assert_eq!(h.omega_inverse()[7], q.from_i64(-1));
    }

    #[test]
    fn non_cocycle_is_rejected_with_witness() {
        match kz2_with(2) {
            Err(Error::Validation { axiom, witness }) => {
                assert_eq!(axiom, "cocycle");
                assert_eq!(witness.len(), 4);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn hopf_preantipode_is_the_antipode() {
        let q = FieldSpec::rationals();
        for h in [corpus::sweedler(q).unwrap(), corpus::group_algebra(q, Group::Cyclic(3)).unwrap()] {
            let cq = CoquasiBialgebra::from_hopf(&h).unwrap();
            let pre = cq.preantipode().unwrap();
            assert_eq!(&pre.matrix, h.antipode());
            assert_eq!(pre.solution_dim, 0);
            let eps = h.coalgebra().eps().to_vec();
            assert!(cq.check_coquasi_antipode(h.antipode(), &eps, &eps).is_ok());
        }
    }

    #[test]
    fn kz2_preantipode_and_antipode_signs() {
        let q = FieldSpec::rationals();
        let h = kz2_with(-1).unwrap();
        let pre = h.preantipode().unwrap();
        assert!(pre.solution_dim <= 1);
        let s = Matrix::identity(q, 2);
        let good_alpha = vec![q.one(), q.from_i64(-1)];
        let ones = vec![q.one(), q.one()];
        assert!(h.check_coquasi_antipode(&s, &good_alpha, &ones).is_ok());
        match h.check_coquasi_antipode(&s, &ones, &ones) {
            Err(Error::Validation { axiom, witness }) => {
                assert_eq!(axiom, "coquasi-antipode omega");
                assert_eq!(witness, vec![1]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn idempotent_monoid_has_no_preantipode() {
        let q = FieldSpec::rationals();
        let c = Coalgebra::from_triples(q, 2, (0..2).map(|a| (a, a, a, q.one())), vec![q.one(); 2]).unwrap();
        let table = [(0, 0), (1, 1), (1, 1), (1, 1)]
            .iter()
            .map(|&(k, _)| vec![(k, q.one())])
            .collect();
        let h = CoquasiBialgebra::new(Arc::new(c), table, unit_vec(q, 2, 0), vec![q.one(); 8]).unwrap();
        assert!(h.preantipode().is_none());
        let x = Comodule::regular(h.coalgebra().clone(), Side::Left);
        assert!(matches!(h.right_dual(&x), Err(Error::NoPreantipode)));
    }

    #[test]
    fn kz2_duals_and_report() {
        let h = kz2_with(-1).unwrap();
        assert_eq!(h.cointegrals(true).dim(), 1);
        assert_eq!(h.cointegrals(false).dim(), 1);
        for g in 0..2 {
            let line = Comodule::grouplike(h.coalgebra().clone(), Side::Left, &unit_vec(h.coalgebra().field(), 2, g)).unwrap();
            let d = h.right_dual(&line).unwrap();
            assert_eq!(d.dim(), 1);
            assert!(d.is_isomorphic(&line).unwrap());
        }
        let report = h.classification().unwrap();
        assert!(report.items_consistent() && report.dimension_criterion && report.co_frobenius);
        assert!(!report.open_question_instance());
    }

    #[test]
    fn trivial_dual_of_unit_is_unit() {
        let q = FieldSpec::rationals();
        let h = corpus::sweedler(q).unwrap();
        let cq = CoquasiBialgebra::from_hopf(&h).unwrap();
        let k = Comodule::grouplike(h.coalgebra().clone(), Side::Left, h.unit()).unwrap();
        assert!(cq.right_dual(&k).unwrap().is_isomorphic(&k).unwrap());
    }

    #[test]
    fn convolution_inverse_round_trip() {
        let h = kz2_with(-1).unwrap();
        let c = h.coalgebra();
        let id = convolve(c, 3, h.omega(), h.omega_inverse());
        assert_eq!(id, counit_power(c, 3));
    }
}

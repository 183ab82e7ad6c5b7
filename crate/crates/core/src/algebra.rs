//! Finite-dimensional associative algebras given by structure constants:
//! Jacobson radical, splitting of the semisimple quotient, and lifting of
//! primitive idempotents.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::poly::{minimal_polynomial, Poly};
use crate::linalg::{
    add_scaled, is_zero_vec, solve_affine, unit_vec, zero_vec, BasisCoordinates, Matrix, Quotient,
    SparseVec, Subspace,
};

/// An associative unital algebra with basis `e_0..e_{n-1}`.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    // table[a * dim + b] = e_a e_b
    table: Vec<SparseVec>,
    unit: Vec<Scalar>,
}

/// A complete set of primitive orthogonal idempotents with their
/// isomorphism classes.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub radical: Subspace,
    pub idempotents: Vec<Vec<Scalar>>,
    /// Class of each idempotent: `A e_i` and `A e_j` are isomorphic iff the
    /// classes agree.
    pub classes: Vec<usize>,
}

impl Decomposition {
    pub fn num_classes(&self) -> usize {
        self.classes.iter().max().map_or(0, |m| m + 1)
    }

    /// Number of idempotents in each class; equal to the dimension of the
    /// corresponding simple module.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.num_classes()];
        for &c in &self.classes {
            m[c] += 1;
        }
        m
    }

    /// First idempotent of each class.
    pub fn representatives(&self) -> Vec<usize> {
        (0..self.num_classes())
            .map(|c| self.classes.iter().position(|&x| x == c).unwrap())
            .collect()
    }
}

impl Algebra {
    pub fn new(field: FieldSpec, dim: usize, table: Vec<SparseVec>, unit: Vec<Scalar>) -> Self {
        assert_eq!(table.len(), dim * dim);
        Algebra {
            field,
            dim,
            table,
            unit,
        }
    }

    /// The algebra spanned by `basis`, which must be closed under products
    /// and contain the identity matrix in its span.
    pub fn from_matrices(field: FieldSpec, basis: &[Matrix]) -> Result<Self> {
        let dim = basis.len();
        let flat: Vec<Vec<Scalar>> = basis.iter().map(Matrix::entries).collect();
        let size = flat.first().map_or(0, Vec::len);
        let coords = BasisCoordinates::new(field, size, flat)?;
        let mut table = Vec::with_capacity(dim * dim);
        for a in basis {
            for b in basis {
                let p = a.mul(b).entries();
                let c = coords
                    .coordinates(&p)
                    .ok_or_else(|| Error::dim("matrix span is not closed under products"))?;
                table.push(crate::linalg::sparsify(&c));
            }
        }
        let n = basis.first().map_or(0, Matrix::rows);
        let unit = coords
            .coordinates(&Matrix::identity(field, n).entries())
            .ok_or_else(|| Error::dim("matrix span does not contain the identity"))?;
        Ok(Algebra::new(field, dim, table, unit))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_product(&self, a: usize, b: usize) -> &SparseVec {
        &self.table[a * self.dim + b]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(self.field, self.dim);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let c = xa * yb;
                for (k, v) in &self.table[a * self.dim + b] {
                    out[*k] = &out[*k] + &(&c * v);
                }
            }
        }
        out
    }

    /// Matrix of `y -> x y`.
    pub fn left_mul(&self, x: &[Scalar]) -> Matrix {
        let mut triples = Vec::new();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for b in 0..self.dim {
                for (k, v) in &self.table[a * self.dim + b] {
                    triples.push((*k, b, xa * v));
                }
            }
        }
        Matrix::from_triples(self.field, self.dim, self.dim, triples)
    }

    /// Matrix of `x -> x y`.
    pub fn right_mul(&self, y: &[Scalar]) -> Matrix {
        let mut triples = Vec::new();
        for (b, yb) in y.iter().enumerate() {
            if yb.is_zero() {
                continue;
            }
            for a in 0..self.dim {
                for (k, v) in &self.table[a * self.dim + b] {
                    triples.push((*k, a, yb * v));
                }
            }
        }
        Matrix::from_triples(self.field, self.dim, self.dim, triples)
    }

    pub fn opposite(&self) -> Algebra {
        let n = self.dim;
        let table = (0..n * n)
            .map(|i| self.table[(i % n) * n + i / n].clone())
            .collect();
        Algebra::new(self.field, n, table, self.unit.clone())
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|a| (0..a).all(|b| self.basis_product(a, b) == self.basis_product(b, a)))
    }

    /// Associativity and unit laws on basis elements.
    pub fn check(&self) -> Result<()> {
        let n = self.dim;
        for a in 0..n {
            let ea = unit_vec(self.field, n, a);
            if self.mul(&self.unit, &ea) != ea || self.mul(&ea, &self.unit) != ea {
                return Err(Error::validation("unit", &[a]));
            }
            for b in 0..n {
                let ab = crate::linalg::densify(self.field, n, self.basis_product(a, b));
                for c in 0..n {
                    let ec = unit_vec(self.field, n, c);
                    let bc = crate::linalg::densify(self.field, n, self.basis_product(b, c));
                    if self.mul(&ab, &ec) != self.mul(&ea, &bc) {
                        return Err(Error::validation("associativity", &[a, b, c]));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn center(&self) -> Subspace {
        // x e_b - e_b x = 0 for every b, linear in the coordinates of x
        let n = self.dim;
        let blocks: Vec<Matrix> = (0..n)
            .map(|b| {
                let eb = unit_vec(self.field, n, b);
                self.right_mul(&eb).sub(&self.left_mul(&eb))
            })
            .collect();
        Matrix::vstack_all(self.field, n, &blocks).kernel()
    }

    /// Span of `{x y : x in X, y in Y}`.
    pub fn product_space(&self, x: &Subspace, y: &Subspace) -> Subspace {
        let yb = y.basis();
        let prods: Vec<Vec<Scalar>> = x
            .basis()
            .iter()
            .flat_map(|u| yb.iter().map(|v| self.mul(u, v)).collect::<Vec<_>>())
            .collect();
        Subspace::span(self.field, self.dim, prods.iter().map(|v| v.as_slice()))
    }

    /// The Jacobson radical.
    pub fn radical(&self) -> Result<Subspace> {
        let p = self.field.characteristic();
        let j = if p == 0 || p > self.dim as u64 {
            self.trace_form_radical()
        } else {
            self.modular_radical(p)?
        };
        self.verify_radical_candidate(&j)?;
        Ok(j)
    }

    fn trace_form_radical(&self) -> Subspace {
        let n = self.dim;
        let traces: Vec<Scalar> = (0..n)
            .map(|c| self.left_mul(&unit_vec(self.field, n, c)).trace())
            .collect();
        // G[i][j] = tr(L_{e_i e_j}); J is the left kernel
        let g = Matrix::from_fn(self.field, n, n, |i, j| {
            let mut acc = self.field.zero();
            for (k, v) in self.basis_product(i, j) {
                acc = &acc + &(v * &traces[*k]);
            }
            acc
        });
        g.transpose().kernel()
    }

    /// Radical over `F_p` with `p <= dim`, from generalized traces of
    /// integer lifts of the left regular representation.
    fn modular_radical(&self, p: u64) -> Result<Subspace> {
        let n = self.dim;
        let mut levels = 0u32;
        while (p as u128).pow(levels + 1) <= n as u128 {
            levels += 1;
        }
        let mut ideal = Subspace::full(self.field, n);
        for i in 0..=levels {
            let modulus = (p as u128).pow(i + 1);
            let pi = (p as u128).pow(i);
            let basis = ideal.basis();
            if basis.is_empty() {
                break;
            }
            // rows: b ranges over A; columns: the basis of the previous ideal
            let mut rows = Vec::with_capacity(n);
            for b in 0..n {
                let eb = unit_vec(self.field, n, b);
                let mut row = Vec::with_capacity(basis.len());
                for v in &basis {
                    let prod = self.mul(v, &eb);
                    let t = lifted_trace_power(&self.left_mul(&prod), pi, modulus);
                    if !t.is_multiple_of(pi) {
                        return Err(Error::SmallCharacteristic);
                    }
                    row.push(self.field.from_i64(((t / pi) % p as u128) as i64));
                }
                rows.push(row);
            }
            let sys = Matrix::from_rows(self.field, basis.len(), &rows);
            let ker = sys.kernel();
            let vecs: Vec<Vec<Scalar>> = ker
                .basis()
                .iter()
                .map(|c| {
                    let mut acc = zero_vec(self.field, n);
                    for (ci, v) in c.iter().zip(&basis) {
                        add_scaled(&mut acc, ci, v);
                    }
                    acc
                })
                .collect();
            ideal = Subspace::span(self.field, n, vecs.iter().map(|v| v.as_slice()));
        }
        Ok(ideal)
    }

    fn verify_radical_candidate(&self, j: &Subspace) -> Result<()> {
        let full = Subspace::full(self.field, self.dim);
        let fail = || Error::SmallCharacteristic;
        if !self.product_space(&full, j).is_subspace_of(j) || !self.product_space(j, &full).is_subspace_of(j) {
            return Err(fail());
        }
        let mut power = j.clone();
        for _ in 0..=self.dim {
            if power.dim() == 0 {
                return Ok(());
            }
            power = self.product_space(&power, j);
        }
        Err(fail())
    }

    /// Primitive orthogonal idempotents summing to 1, grouped into
    /// isomorphism classes of the projective modules `A e`.
    pub fn decompose(&self) -> Result<Decomposition> {
        let radical = self.radical()?;
        if self.dim == 0 {
            return Ok(Decomposition {
                radical,
                idempotents: Vec::new(),
                classes: Vec::new(),
            });
        }
        let quotient = Quotient::new(&radical);
        let section = quotient.section_matrix();
        let lift = |v: &[Scalar]| section.mul_vec(v);
        let bdim = quotient.dim();
        // structure constants of A/J
        let mut table = Vec::with_capacity(bdim * bdim);
        let sec_cols: Vec<Vec<Scalar>> = (0..bdim).map(|i| lift(&unit_vec(self.field, bdim, i))).collect();
        for a in 0..bdim {
            for b in 0..bdim {
                let prod = self.mul(&sec_cols[a], &sec_cols[b]);
                table.push(crate::linalg::sparsify(&quotient.project(&prod)));
            }
        }
        let semisimple = Algebra::new(self.field, bdim, table, quotient.project(&self.unit));
        let mut prims = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        split(&semisimple, semisimple.unit.clone(), &mut prims, &mut rng)?;
        let classes = class_labels(&semisimple, &prims);
        let mult = {
            let mut m = vec![0usize; classes.iter().max().map_or(0, |x| x + 1)];
            for &c in &classes {
                m[c] += 1;
            }
            m
        };
        if mult.iter().map(|m| m * m).sum::<usize>() != bdim {
            return Err(Error::SmallCharacteristic);
        }
        // lift sequentially so that each lift is orthogonal to the previous
        let mut idempotents: Vec<Vec<Scalar>> = Vec::with_capacity(prims.len());
        let mut rest = self.unit.clone();
        for (i, e) in prims.iter().enumerate() {
            if i + 1 == prims.len() {
                idempotents.push(rest.clone());
                break;
            }
            let x = lift(e);
            let mut f = self.mul(&self.mul(&rest, &x), &rest);
            loop {
                let f2 = self.mul(&f, &f);
                if f2 == f {
                    break;
                }
                let f3 = self.mul(&f2, &f);
                let mut next = zero_vec(self.field, self.dim);
                add_scaled(&mut next, &self.field.from_i64(3), &f2);
                add_scaled(&mut next, &self.field.from_i64(-2), &f3);
                f = next;
            }
            for (r, v) in rest.iter_mut().zip(&f) {
                *r = &*r - v;
            }
            idempotents.push(f);
        }
        Ok(Decomposition {
            radical,
            idempotents,
            classes,
        })
    }
}

/// `Tr(L^{p^i}) mod p^{i+1}` for the entrywise lift of `L` to `0..p`.
fn lifted_trace_power(l: &Matrix, exponent: u128, modulus: u128) -> u128 {
    let n = l.rows();
    let mut base: Vec<u128> = l
        .entries()
        .iter()
        .map(|x| x.residue().unwrap() as u128 % modulus)
        .collect();
    let mut acc: Vec<u128> = (0..n * n).map(|k| if k % (n + 1) == 0 { 1 } else { 0 }).collect();
    let mul = |a: &[u128], b: &[u128]| -> Vec<u128> {
        let mut c = vec![0u128; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    c[i * n + j] = (c[i * n + j] + x * b[k * n + j]) % modulus;
                }
            }
        }
        c
    };
    let mut e = exponent;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    (0..n).fold(0u128, |t, i| (t + acc[i * n + i]) % modulus)
}

/// The corner `g B g` as a subspace of `B`.
fn corner(b: &Algebra, g: &[Scalar]) -> Subspace {
    let vecs: Vec<Vec<Scalar>> = (0..b.dim)
        .map(|i| b.mul(&b.mul(g, &unit_vec(b.field, b.dim, i)), g))
        .collect();
    Subspace::span(b.field, b.dim, vecs.iter().map(|v| v.as_slice()))
}

fn min_poly_in(b: &Algebra, g: &[Scalar], x: &[Scalar]) -> Poly {
    minimal_polynomial(b.field, g, |v| b.mul(x, v))
}

/// Evaluate a polynomial at `x` inside the corner with unit `g`.
fn poly_at(b: &Algebra, g: &[Scalar], f: &Poly, x: &[Scalar]) -> Vec<Scalar> {
    let mut acc = zero_vec(b.field, b.dim);
    for c in f.coeffs().iter().rev() {
        acc = b.mul(&acc, x);
        add_scaled(&mut acc, c, g);
    }
    acc
}

/// Refine the idempotent `g` of the semisimple algebra `b` into primitive
/// idempotents, appended to `out`.
fn split(b: &Algebra, g: Vec<Scalar>, out: &mut Vec<Vec<Scalar>>, rng: &mut ChaCha8Rng) -> Result<()> {
    let d = corner(b, &g);
    if d.dim() <= 1 {
        out.push(g);
        return Ok(());
    }
    let line = Subspace::span(b.field, b.dim, [g.as_slice()]);
    let dbasis = d.basis();
    // center of the corner
    let eqs: Vec<Matrix> = dbasis
        .iter()
        .map(|y| {
            let cols: Vec<Vec<Scalar>> = dbasis
                .iter()
                .map(|x| {
                    let mut v = b.mul(x, y);
                    add_scaled(&mut v, &-b.field.one(), &b.mul(y, x));
                    v
                })
                .collect();
            Matrix::from_columns(b.field, b.dim, &cols)
        })
        .collect();
    let zc = Matrix::vstack_all(b.field, dbasis.len(), &eqs).kernel();
    if zc.dim() > 1 {
        for c in zc.basis() {
            let mut z = zero_vec(b.field, b.dim);
            for (ci, v) in c.iter().zip(&dbasis) {
                add_scaled(&mut z, ci, v);
            }
            if line.contains(&z) {
                continue;
            }
            let m = min_poly_in(b, &g, &z);
            let roots = m.roots()?;
            if roots.len() < m.degree().unwrap_or(0) {
                // a commutative semisimple algebra splits iff its minimal
                // polynomials split
                return Err(Error::NonSplitSimple);
            }
            let lambda = &roots[0];
            let mut f = Poly::constant(b.field, b.field.one());
            for mu in &roots[1..] {
                let inv = (lambda - mu).inv().unwrap();
                let factor = Poly::new(b.field, vec![&-mu * &inv, inv]);
                f = f.mul(&factor);
            }
            let e = poly_at(b, &g, &f, &z);
            let mut rest = g.clone();
            add_scaled(&mut rest, &-b.field.one(), &e);
            split(b, e, out, rng)?;
            return split(b, rest, out, rng);
        }
    }
    // simple corner: look for a zero divisor
    let n = d.dim();
    if !is_square(n) {
        return Err(Error::NonSplitSimple);
    }
    let mut candidates: Vec<Vec<Scalar>> = dbasis.clone();
    for x in &dbasis {
        for y in &dbasis {
            candidates.push(b.mul(x, y));
        }
    }
    let tries = candidates.len() + 256;
    for t in 0..tries {
        let x = if t < candidates.len() {
            candidates[t].clone()
        } else {
            let mut v = zero_vec(b.field, b.dim);
            for basis_vec in &dbasis {
                let c = match b.field.order() {
                    Some(p) => b.field.from_i64(rng.gen_range(0..p) as i64),
                    None => b.field.from_i64(rng.gen_range(-3..=3)),
                };
                add_scaled(&mut v, &c, basis_vec);
            }
            v
        };
        if line.contains(&x) {
            continue;
        }
        let m = min_poly_in(b, &g, &x);
        let roots = match m.roots() {
            Ok(r) => r,
            Err(Error::Inconclusive(_)) => continue,
            Err(e) => return Err(e),
        };
        let Some(lambda) = roots.first() else { continue };
        let mut y = x.clone();
        add_scaled(&mut y, &-lambda, &g);
        let f = right_unit_of_left_ideal(b, &dbasis, &y)?;
        let mut rest = g.clone();
        add_scaled(&mut rest, &-b.field.one(), &f);
        split(b, f, out, rng)?;
        return split(b, rest, out, rng);
    }
    Err(Error::NonSplitSimple)
}

fn is_square(n: usize) -> bool {
    n.isqrt() * n.isqrt() == n
}

/// An idempotent generating the left ideal `D y` of a semisimple corner.
fn right_unit_of_left_ideal(b: &Algebra, dbasis: &[Vec<Scalar>], y: &[Scalar]) -> Result<Vec<Scalar>> {
    let gens: Vec<Vec<Scalar>> = dbasis.iter().map(|x| b.mul(x, y)).collect();
    let ideal = Subspace::span(b.field, b.dim, gens.iter().map(|v| v.as_slice()));
    let l = ideal.basis();
    // f = sum c_i l_i with l_j f = l_j for all j
    let r = l.len();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs = Vec::new();
    for lj in &l {
        let prods: Vec<Vec<Scalar>> = l.iter().map(|li| b.mul(lj, li)).collect();
        for k in 0..b.dim {
            rows.push(prods.iter().map(|p| p[k].clone()).collect());
            rhs.push(lj[k].clone());
        }
    }
    let sys = Matrix::from_rows(b.field, r, &rows);
    let (c, _) = solve_affine(&sys, &rhs).map_err(|_| Error::NonSplitSimple)?;
    let mut f = zero_vec(b.field, b.dim);
    for (ci, li) in c.iter().zip(&l) {
        add_scaled(&mut f, ci, li);
    }
    if is_zero_vec(&f) {
        return Err(Error::NonSplitSimple);
    }
    Ok(f)
}

/// `e_i ~ e_j` iff `e_i B e_j != 0` in the semisimple algebra `B`.
fn class_labels(b: &Algebra, prims: &[Vec<Scalar>]) -> Vec<usize> {
    let mut labels: Vec<Option<usize>> = vec![None; prims.len()];
    let mut next = 0;
    for i in 0..prims.len() {
        if labels[i].is_some() {
            continue;
        }
        labels[i] = Some(next);
        for j in i + 1..prims.len() {
            if labels[j].is_none() && !corner_between(b, &prims[i], &prims[j]) {
                labels[j] = Some(next);
            }
        }
        next += 1;
    }
    labels.into_iter().map(Option::unwrap).collect()
}

/// True when `e B f = 0`.
fn corner_between(b: &Algebra, e: &[Scalar], f: &[Scalar]) -> bool {
    (0..b.dim).all(|k| is_zero_vec(&b.mul(&b.mul(e, &unit_vec(b.field, b.dim, k)), f)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix_algebra(field: FieldSpec, m: usize) -> Algebra {
        let n = m * m;
        let mut table = vec![Vec::new(); n * n];
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    table[(i * m + j) * n + j * m + k] = vec![(i * m + k, field.one())];
                }
            }
        }
        let mut unit = zero_vec(field, n);
        for i in 0..m {
            unit[i * m + i] = field.one();
        }
        Algebra::new(field, n, table, unit)
    }

    /// k[x]/(x^2)
    fn dual_numbers(field: FieldSpec) -> Algebra {
        let table = vec![
            vec![(0, field.one())],
            vec![(1, field.one())],
            vec![(1, field.one())],
            vec![],
        ];
        Algebra::new(field, 2, table, vec![field.one(), field.zero()])
    }

    #[test]
    fn matrix_algebra_is_simple_with_one_class() {
        for field in [FieldSpec::rationals(), FieldSpec::prime(2).unwrap(), FieldSpec::prime(3).unwrap()] {
            let a = matrix_algebra(field, 3);
            a.check().unwrap();
            let d = a.decompose().unwrap();
            assert_eq!(d.radical.dim(), 0);
            assert_eq!(d.idempotents.len(), 3);
            assert_eq!(d.multiplicities(), vec![3]);
        }
    }

    #[test]
    fn dual_numbers_radical() {
        for field in [FieldSpec::rationals(), FieldSpec::prime(2).unwrap()] {
            let a = dual_numbers(field);
            let j = a.radical().unwrap();
            assert_eq!(j.basis(), vec![vec![field.zero(), field.one()]]);
            let d = a.decompose().unwrap();
            assert_eq!(d.idempotents, vec![a.unit().to_vec()]);
        }
    }

    #[test]
    fn group_algebra_in_its_characteristic_is_local() {
        // F_2[Z_2] = F_2[x]/(x+1)^2
        let k = FieldSpec::prime(2).unwrap();
        let table = vec![
            vec![(0, k.one())],
            vec![(1, k.one())],
            vec![(1, k.one())],
            vec![(0, k.one())],
        ];
        let a = Algebra::new(k, 2, table, vec![k.one(), k.zero()]);
        assert_eq!(a.radical().unwrap().dim(), 1);
        // over Q it splits into two characters
        let q = FieldSpec::rationals();
        let table = vec![
            vec![(0, q.one())],
            vec![(1, q.one())],
            vec![(1, q.one())],
            vec![(0, q.one())],
        ];
        let b = Algebra::new(q, 2, table, vec![q.one(), q.zero()]);
        let d = b.decompose().unwrap();
        assert_eq!(d.idempotents.len(), 2);
        assert_eq!(d.num_classes(), 2);
    }

    #[test]
    fn gaussian_rationals_do_not_split() {
        // Q[i]
        let q = FieldSpec::rationals();
        let table = vec![
            vec![(0, q.one())],
            vec![(1, q.one())],
            vec![(1, q.one())],
            vec![(0, -q.one())],
        ];
        let a = Algebra::new(q, 2, table, vec![q.one(), q.zero()]);
        assert_eq!(a.decompose().unwrap_err(), Error::NonSplitSimple);
    }
}

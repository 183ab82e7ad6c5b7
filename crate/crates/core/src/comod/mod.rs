//! Comodules over a finite-dimensional coalgebra.
//!
//! A comodule is stored through the action of the dual basis of `C*`: for a
//! right comodule `f ⇀ m = m_0 f(m_1)`, for a left comodule
//! `m ↼ f = f(m_{-1}) m_0`. At finite dimension the two descriptions carry
//! the same information as the coaction.

mod structure;

pub use structure::{Structure, Summand};

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::coalg::{combine, Coalgebra};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::search::{find_invertible, Search};
use crate::linalg::{Echelon, Matrix, Quotient, SparseVec, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Comodule {
    parent: Arc<Coalgebra>,
    side: Side,
    dim: usize,
    actions: Vec<Matrix>,
}

/// A morphism of comodules, verified on construction.
#[derive(Clone, Debug)]
pub struct ComoduleMap {
    pub source: Comodule,
    pub target: Comodule,
    pub matrix: Matrix,
}

impl ComoduleMap {
    pub fn new(source: &Comodule, target: &Comodule, matrix: Matrix) -> Result<Self> {
        if !source.is_morphism(&matrix, target) {
            return Err(Error::validation("comodule map", &[]));
        }
        Ok(ComoduleMap {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }
}

impl Comodule {
    /// Reconstruct a comodule from a module over `C*` given by the action
    /// matrices of the dual basis.
    pub fn from_module(parent: Arc<Coalgebra>, side: Side, actions: Vec<Matrix>) -> Result<Self> {
        let dim = actions.first().map_or(0, Matrix::rows);
        let m = Comodule {
            parent,
            side,
            dim,
            actions,
        };
        m.check().map_err(|(axiom, w)| Error::NotRational(alloc::format!("{} at {:?}", axiom, w)))?;
        Ok(m)
    }

    /// Build from `(i, j, a, value)`: for a right comodule the coefficient of
    /// `m_j ⊗ e_a` in `ρ(m_i)`; for a left comodule that of `e_a ⊗ m_j`.
    pub fn from_coaction<I>(parent: Arc<Coalgebra>, side: Side, dim: usize, rho: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let n = parent.dim();
        let mut per: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n];
        for (i, j, a, x) in rho {
            if i >= dim || j >= dim || a >= n {
                return Err(Error::dim("coaction index out of range"));
            }
            per[a].push((j, i, x));
        }
        let field = parent.field();
        let actions = per.into_iter().map(|t| Matrix::from_triples(field, dim, dim, t)).collect();
        let m = Comodule {
            parent,
            side,
            dim,
            actions,
        };
        m.check().map_err(|(axiom, w)| Error::validation(axiom, &w))?;
        Ok(m)
    }

    pub(crate) fn from_parts_unchecked(parent: Arc<Coalgebra>, side: Side, dim: usize, actions: Vec<Matrix>) -> Self {
        debug_assert!(actions.iter().all(|a| a.rows() == dim));
        Comodule {
            parent,
            side,
            dim,
            actions,
        }
    }

    /// `C` with coaction `Δ`, on the given side.
    pub fn regular(parent: Arc<Coalgebra>, side: Side) -> Self {
        let n = parent.dim();
        let actions = (0..n)
            .map(|a| match side {
                Side::Right => parent.left_action(a).clone(),
                Side::Left => parent.right_action(a).clone(),
            })
            .collect();
        Comodule {
            parent,
            side,
            dim: n,
            actions,
        }
    }

    /// `C*` as a left (right) module over itself, i.e. the rational dual.
    pub fn dual_regular(parent: Arc<Coalgebra>, side: Side) -> Self {
        let n = parent.dim();
        let field = parent.field();
        let actions = (0..n)
            .map(|a| {
                let ea = crate::linalg::unit_vec(field, n, a);
                match side {
                    Side::Right => parent.dual_algebra().left_mul(&ea),
                    Side::Left => parent.dual_algebra().right_mul(&ea),
                }
            })
            .collect();
        Comodule {
            parent,
            side,
            dim: n,
            actions,
        }
    }

    /// The one-dimensional comodule `1 ↦ 1 ⊗ g` for a grouplike `g`.
    pub fn grouplike(parent: Arc<Coalgebra>, side: Side, g: &[Scalar]) -> Result<Self> {
        if !parent.is_grouplike(g) {
            return Err(Error::validation("grouplike", &[]));
        }
        let field = parent.field();
        let actions = g.iter().map(|x| Matrix::scalar(field, 1, x)).collect();
        Ok(Comodule {
            parent,
            side,
            dim: 1,
            actions,
        })
    }

    pub fn zero(parent: Arc<Coalgebra>, side: Side) -> Self {
        let field = parent.field();
        let actions = (0..parent.dim()).map(|_| Matrix::zeros(field, 0, 0)).collect();
        Comodule {
            parent,
            side,
            dim: 0,
            actions,
        }
    }

    fn check(&self) -> core::result::Result<(), (&'static str, Vec<usize>)> {
        let c = &*self.parent;
        let n = c.dim();
        let field = c.field();
        if self.actions.len() != n || self.actions.iter().any(|a| a.rows() != self.dim || a.cols() != self.dim) {
            return Err(("coaction shape", Vec::new()));
        }
        let unit = combine(field, self.dim, self.dim, c.eps(), &self.actions);
        if !unit.is_identity() {
            let bad = (0..self.dim)
                .find(|&i| unit.column(i) != crate::linalg::unit_vec(field, self.dim, i))
                .unwrap_or(0);
            return Err(("coaction counit", vec![bad]));
        }
        let table = c.dual_algebra();
        for a in 0..n {
            for b in 0..n {
                let prod = match self.side {
                    Side::Right => self.actions[a].mul(&self.actions[b]),
                    Side::Left => self.actions[b].mul(&self.actions[a]),
                };
                let terms: Vec<(&Scalar, &Matrix)> = table
                    .basis_product(a, b)
                    .iter()
                    .map(|(k, x)| (x, &self.actions[*k]))
                    .collect();
                let expect = Matrix::combination(field, self.dim, self.dim, &terms);
                if prod != expect {
                    return Err(("coaction coassociativity", vec![a, b]));
                }
            }
        }
        Ok(())
    }

    pub fn parent(&self) -> &Arc<Coalgebra> {
        &self.parent
    }

    pub fn field(&self) -> FieldSpec {
        self.parent.field()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Action of the dual basis vector `e^a`.
    pub fn action(&self, a: usize) -> &Matrix {
        &self.actions[a]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    pub fn action_of(&self, f: &[Scalar]) -> Matrix {
        combine(self.field(), self.dim, self.dim, f, &self.actions)
    }

    /// The coaction as a matrix `M -> M ⊗ C` (right) or `M -> C ⊗ M` (left).
    pub fn rho(&self) -> Matrix {
        let n = self.parent.dim();
        let m = self.dim;
        let mut t = Vec::new();
        for (a, act) in self.actions.iter().enumerate() {
            for (j, i, x) in act.triples() {
                let row = match self.side {
                    Side::Right => j * n + a,
                    Side::Left => a * m + j,
                };
                t.push((row, i, x));
            }
        }
        Matrix::from_triples(self.field(), m * n, m, t)
    }

    /// `(i, j, a, value)` entries of the coaction, as accepted by
    /// [`Comodule::from_coaction`].
    pub fn coaction_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (a, act) in self.actions.iter().enumerate() {
            for (j, i, x) in act.triples() {
                out.push((i, j, a, x));
            }
        }
        out.sort_by_key(|e| (e.0, e.1, e.2));
        out
    }

    fn same_category(&self, o: &Comodule) -> bool {
        self.side == o.side && (Arc::ptr_eq(&self.parent, &o.parent) || self.parent.dim() == o.parent.dim())
    }

    pub fn is_morphism(&self, t: &Matrix, target: &Comodule) -> bool {
        t.rows() == target.dim
            && t.cols() == self.dim
            && self
                .actions
                .iter()
                .zip(&target.actions)
                .all(|(a, b)| t.mul(a) == b.mul(t))
    }

    /// A basis of `Hom^C(self, target)`.
    pub fn hom(&self, target: &Comodule) -> Vec<Matrix> {
        assert!(self.same_category(target), "hom between different categories");
        let (dm, dn) = (self.dim, target.dim);
        let field = self.field();
        if dm == 0 || dn == 0 {
            return Vec::new();
        }
        let mut ech = Echelon::new(field, dn * dm);
        for f in self.parent.generators() {
            let a = self.action_of(f);
            let b = target.action_of(f);
            let at = a.transpose();
            // (T A - B T)[i][k]
            for i in 0..dn {
                let brow: Vec<(usize, Scalar)> = b.row(i).map(|(l, x)| (l, x.clone())).collect();
                for k in 0..dm {
                    let mut row: Vec<(usize, usize, Scalar)> = Vec::new();
                    for (j, x) in at.row(k) {
                        row.push((0, i * dm + j, x.clone()));
                    }
                    for (l, x) in &brow {
                        row.push((0, l * dm + k, -x));
                    }
                    if row.is_empty() {
                        continue;
                    }
                    let r: SparseVec = Matrix::from_triples(field, 1, dn * dm, row).row_sparse(0);
                    ech.insert_sparse(&r);
                    if ech.rank() == dn * dm {
                        return Vec::new();
                    }
                }
            }
        }
        ech.null_space()
            .basis()
            .into_iter()
            .map(|v| Matrix::from_dense(field, dn, dm, v))
            .collect()
    }

    pub fn end(&self) -> Vec<Matrix> {
        self.hom(self)
    }

    /// The dual comodule on the opposite side.
    pub fn dual(&self) -> Comodule {
        Comodule {
            parent: self.parent.clone(),
            side: self.side.flip(),
            dim: self.dim,
            actions: self.actions.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Subcomodule on an invariant subspace, with its inclusion.
    pub fn sub(&self, w: &Subspace) -> Result<(Comodule, Matrix)> {
        let basis = w.basis();
        let field = self.field();
        let inc = Matrix::from_columns(field, self.dim, &basis);
        let mut actions = Vec::with_capacity(self.actions.len());
        for a in &self.actions {
            let cols: Result<Vec<Vec<Scalar>>> = basis
                .iter()
                .map(|v| w.coordinates(&a.mul_vec(v)).ok_or_else(|| Error::validation("invariant subspace", &[])))
                .collect();
            actions.push(Matrix::from_columns(field, basis.len(), &cols?));
        }
        Ok((Comodule::from_parts_unchecked(self.parent.clone(), self.side, basis.len(), actions), inc))
    }

    /// Quotient by an invariant subspace, with projection and a linear section.
    pub fn quotient(&self, w: &Subspace) -> Result<(Comodule, Matrix, Matrix)> {
        let q = Quotient::new(w);
        let proj = q.projection_matrix();
        let sec = q.section_matrix();
        let mut actions = Vec::with_capacity(self.actions.len());
        for a in &self.actions {
            actions.push(proj.mul(a).mul(&sec));
        }
        for v in w.basis() {
            for a in &self.actions {
                if !w.contains(&a.mul_vec(&v)) {
                    return Err(Error::validation("invariant subspace", &[]));
                }
            }
        }
        Ok((
            Comodule::from_parts_unchecked(self.parent.clone(), self.side, q.dim(), actions),
            proj,
            sec,
        ))
    }

    /// Image of a morphism `t: self -> target`, as a subcomodule of `target`.
    pub fn image_of(&self, t: &Matrix, target: &Comodule) -> Result<(Comodule, Matrix)> {
        target.sub(&t.image())
    }

    pub fn direct_sum(parts: &[&Comodule]) -> Comodule {
        let first = parts[0];
        let field = first.field();
        let n = first.parent.dim();
        let actions = (0..n)
            .map(|a| {
                let blocks: Vec<Matrix> = parts.iter().map(|m| m.actions[a].clone()).collect();
                Matrix::block_diag(field, &blocks)
            })
            .collect();
        let dim = parts.iter().map(|m| m.dim).sum();
        Comodule::from_parts_unchecked(first.parent.clone(), first.side, dim, actions)
    }

    /// Twist by a coalgebra automorphism `φ`: coaction `(id ⊗ φ)ρ`.
    pub fn twist(&self, phi: &Matrix) -> Comodule {
        let n = self.parent.dim();
        let field = self.field();
        let actions = (0..n)
            .map(|a| {
                let row: Vec<Scalar> = phi.row_dense(a);
                combine(field, self.dim, self.dim, &row, &self.actions)
            })
            .collect();
        Comodule::from_parts_unchecked(self.parent.clone(), self.side, self.dim, actions)
    }

    /// Change of basis: the comodule transported along an invertible `p`
    /// (new coordinates `p * old`).
    pub fn transport(&self, p: &Matrix) -> Result<Comodule> {
        let inv = p.inverse().ok_or_else(|| Error::dim("transport along a singular matrix"))?;
        let actions = self.actions.iter().map(|a| p.mul(a).mul(&inv)).collect();
        Ok(Comodule::from_parts_unchecked(self.parent.clone(), self.side, self.dim, actions))
    }

    /// Search for an isomorphism `self -> other`.
    pub fn iso(&self, other: &Comodule) -> Search<Matrix> {
        if self.dim != other.dim || self.side != other.side {
            return Search::Absent;
        }
        if self.dim == 0 {
            return Search::Found(Matrix::zeros(self.field(), 0, 0));
        }
        let h = self.hom(other);
        if h.is_empty() {
            return Search::Absent;
        }
        // isomorphic objects have equally large Hom spaces in both directions
        let end = self.end();
        if h.len() != end.len() || other.hom(self).len() != end.len() || other.end().len() != end.len() {
            return Search::Absent;
        }
        let family: Vec<Vec<Matrix>> = h.iter().map(|m| vec![m.clone()]).collect();
        find_invertible(self.field(), &family, 0x150).map(|c| {
            let terms: Vec<(&Scalar, &Matrix)> = c.iter().zip(&h).collect();
            Matrix::combination(self.field(), other.dim, self.dim, &terms)
        })
    }

    /// Isomorphism test that reports an exhausted search as an error.
    pub fn is_isomorphic(&self, other: &Comodule) -> Result<bool> {
        match self.iso(other) {
            Search::Found(_) => Ok(true),
            Search::Absent => Ok(false),
            Search::Inconclusive => Err(Error::Inconclusive("isomorphism search".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vec;

    fn kz2(field: FieldSpec) -> Arc<Coalgebra> {
        let t = vec![(0, 0, 0, field.one()), (1, 1, 1, field.one())];
        Arc::new(Coalgebra::from_triples(field, 2, t, vec![field.one(), field.one()]).unwrap())
    }

    #[test]
    fn trivial_hom_is_one_dimensional() {
        let k = FieldSpec::rationals();
        let c = kz2(k);
        let triv = Comodule::grouplike(c.clone(), Side::Right, &unit_vec(k, 2, 0)).unwrap();
        assert_eq!(triv.end().len(), 1);
        let sign = Comodule::grouplike(c, Side::Right, &unit_vec(k, 2, 1)).unwrap();
        assert!(triv.hom(&sign).is_empty());
        assert_eq!(triv.iso(&sign), Search::Absent);
    }

    #[test]
    fn regular_comodule_roundtrips_through_coaction() {
        let k = FieldSpec::rationals();
        let c = kz2(k);
        let r = Comodule::regular(c.clone(), Side::Right);
        let again = Comodule::from_coaction(c, Side::Right, 2, r.coaction_entries()).unwrap();
        assert_eq!(r.actions(), again.actions());
    }

    #[test]
    fn broken_coaction_is_rejected() {
        let k = FieldSpec::rationals();
        let c = kz2(k);
        // 1 -> 1 ⊗ (g0 + g1) is not a coaction
        let rho = vec![(0, 0, 0, k.one()), (0, 0, 1, k.one())];
        assert!(Comodule::from_coaction(c, Side::Right, 1, rho).is_err());
    }
}

//! The pairing `Hom^C(M, ν^r P) × Hom^C(P, M) -> k` for projective `P`.
//!
//! With a dual basis `{p_k, φ_k}` of `P` over `C*` the pairing is
//! `β(f, g) = Σ_k ⟨φ_k(p), c⟩` summed over `(f ∘ g)(p_k) = Σ c ⊗ p`.

use alloc::vec::Vec;

use super::nakayama_right;
use crate::comod::{Comodule, Side};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{solve_affine, Matrix};

#[derive(Clone, Debug)]
pub struct CalabiYauPairing {
    pub matrix: Matrix,
    /// Basis of `Hom(M, ν^r P)`.
    pub left: Vec<Matrix>,
    /// Basis of `Hom(P, M)`.
    pub right: Vec<Matrix>,
}

impl CalabiYauPairing {
    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.is_square() && self.matrix.is_invertible()
    }
}

/// Dual basis of `P` over `C*`: `φ_k: P -> C*` with `p = Σ_k φ_k(p) ⇀ e_k`.
pub fn dual_basis(p: &Comodule) -> Result<Vec<Matrix>> {
    let field = p.field();
    let d = p.dim();
    let regular = Comodule::dual_regular(p.parent().clone(), Side::Right);
    let homs = p.hom(&regular);
    let h = homs.len();
    // acts[l][j] = action of φ_l(e_j) on P
    let acts: Vec<Vec<Matrix>> = homs
        .iter()
        .map(|phi| (0..d).map(|j| p.action_of(&phi.column(j))).collect())
        .collect();
    let mut triples = Vec::new();
    for j in 0..d {
        for (l, act) in acts.iter().enumerate() {
            for (r, k, x) in act[j].triples() {
                triples.push((j * d + r, k * h + l, x));
            }
        }
    }
    let sys = Matrix::from_triples(field, d * d, d * h, triples);
    let rhs = Matrix::identity(field, d).entries();
    let (sol, _) = solve_affine(&sys, &rhs).map_err(|_| Error::NotProjective)?;
    Ok((0..d)
        .map(|k| {
            let terms: Vec<(&Scalar, &Matrix)> = (0..h).map(|l| (&sol[k * h + l], &homs[l])).collect();
            Matrix::combination(field, p.parent().dim(), d, &terms)
        })
        .collect())
}

pub fn calabi_yau_pairing(p: &Comodule, m: &Comodule) -> Result<CalabiYauPairing> {
    let field = p.field();
    let d = p.dim();
    let phis = dual_basis(p)?;
    let rp = nakayama_right(p)?;
    let z = Matrix::from_fn(field, d, rp.structure.cols(), |k, idx| {
        phis[k].get(idx / d, idx % d).clone()
    });
    let kmat = z.mul(&rp.costructure);
    let left = m.hom(&rp.output);
    let right = p.hom(m);
    let rows: Vec<Vec<Scalar>> = left
        .iter()
        .map(|f| {
            let kf = kmat.mul(f);
            right.iter().map(|g| kf.mul(g).trace()).collect()
        })
        .collect();
    let matrix = Matrix::from_rows(field, right.len(), &rows);
    Ok(CalabiYauPairing { matrix, left, right })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comod::Structure;
    use crate::corpus;
    use crate::field::FieldSpec;

    #[test]
    fn pairing_is_perfect_or_trivial_on_simples() {
        let h = corpus::sweedler(FieldSpec::rationals()).unwrap();
        let st = Structure::new(h.coalgebra().clone()).unwrap();
        for (i, p) in st.projectives().iter().enumerate() {
            for m in st.simples() {
                let cy = calabi_yau_pairing(p, m).unwrap();
                let em = m.action_of(st.idempotent(i)).rank();
                assert_eq!(cy.right.len(), em);
                assert_eq!(cy.left.len(), em);
                assert!(cy.is_nondegenerate());
            }
        }
    }

    #[test]
    fn dual_basis_reconstructs_projective() {
        let h = corpus::sweedler(FieldSpec::rationals()).unwrap();
        let st = Structure::new(h.coalgebra().clone()).unwrap();
        let p = &st.projectives()[0];
        let phis = dual_basis(p).unwrap();
        let regular = Comodule::dual_regular(p.parent().clone(), Side::Right);
        for phi in &phis {
            assert!(p.is_morphism(phi, &regular));
        }
        assert!(matches!(dual_basis(&st.simples()[0]), Err(Error::NotProjective)));
    }
}

//! Simples, projective covers, injective hulls and decompositions of right
//! comodules, all read off from the primitive idempotents of `C*`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{Comodule, Side};
use crate::algebra::{Algebra, Decomposition};
use crate::coalg::Coalgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::search::Search;
use crate::linalg::{add_scaled, zero_vec, Matrix, Subspace};

/// Structure data of the right comodule category of a coalgebra.
#[derive(Clone, Debug)]
pub struct Structure {
    coalgebra: Arc<Coalgebra>,
    decomposition: Decomposition,
    radical_powers: Vec<Subspace>,
    reps: Vec<Vec<Scalar>>,
    simples: Vec<Comodule>,
    projectives: Vec<Comodule>,
    injectives: Vec<Comodule>,
}

/// A direct summand with its split inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Comodule,
    pub inclusion: Matrix,
    pub projection: Matrix,
}

impl Structure {
    pub fn new(coalgebra: Arc<Coalgebra>) -> Result<Self> {
        let a = coalgebra.dual_algebra();
        let decomposition = a.decompose()?;
        let mut radical_powers = vec![decomposition.radical.clone()];
        loop {
            let last = radical_powers.last().unwrap();
            if last.dim() == 0 {
                break;
            }
            let next = a.product_space(last, &decomposition.radical);
            radical_powers.push(next);
        }
        let reps: Vec<Vec<Scalar>> = decomposition
            .representatives()
            .into_iter()
            .map(|i| decomposition.idempotents[i].clone())
            .collect();
        let regular_dual = Comodule::dual_regular(coalgebra.clone(), Side::Right);
        let regular = Comodule::regular(coalgebra.clone(), Side::Right);
        let mut simples = Vec::new();
        let mut projectives = Vec::new();
        let mut injectives = Vec::new();
        for e in &reps {
            // P = C* e, S = P / J P, E = C ↼ e
            let p_space = a.right_mul(e).image();
            let (p, _) = regular_dual.sub(&p_space)?;
            let jp = submodule_by(&p, &decomposition.radical.basis());
            let (s, _, _) = p.quotient(&jp)?;
            let e_space = coalgebra.right_action_of(e).image();
            let (inj, _) = regular.sub(&e_space)?;
            simples.push(s);
            projectives.push(p);
            injectives.push(inj);
        }
        Ok(Structure {
            coalgebra,
            decomposition,
            radical_powers,
            reps,
            simples,
            projectives,
            injectives,
        })
    }

    pub fn coalgebra(&self) -> &Arc<Coalgebra> {
        &self.coalgebra
    }

    pub fn decomposition(&self) -> &Decomposition {
        &self.decomposition
    }

    pub fn dual_algebra(&self) -> &Algebra {
        self.coalgebra.dual_algebra()
    }

    /// Basis of the Jacobson radical of `C*`.
    pub fn radical(&self) -> &Subspace {
        &self.decomposition.radical
    }

    pub fn is_cosemisimple(&self) -> bool {
        self.decomposition.radical.dim() == 0
    }

    pub fn num_simples(&self) -> usize {
        self.simples.len()
    }

    pub fn simples(&self) -> &[Comodule] {
        &self.simples
    }

    pub fn simple_dims(&self) -> Vec<usize> {
        self.simples.iter().map(Comodule::dim).collect()
    }

    /// `P(S_i) = C* e_i`.
    pub fn projectives(&self) -> &[Comodule] {
        &self.projectives
    }

    /// `E(S_i) = C e_i`.
    pub fn injectives(&self) -> &[Comodule] {
        &self.injectives
    }

    /// The primitive idempotent representing the class of `S_i`.
    pub fn idempotent(&self, i: usize) -> &[Scalar] {
        &self.reps[i]
    }

    /// `J M`.
    pub fn radical_of(&self, m: &Comodule) -> Subspace {
        submodule_by(m, &self.decomposition.radical.basis())
    }

    /// `soc M = {m : J m = 0}`.
    pub fn socle_space(&self, m: &Comodule) -> Subspace {
        self.annihilated_by(m, &self.decomposition.radical)
    }

    fn annihilated_by(&self, m: &Comodule, ideal: &Subspace) -> Subspace {
        let blocks: Vec<Matrix> = ideal.basis().iter().map(|j| m.action_of(j)).collect();
        if blocks.is_empty() {
            return Subspace::full(m.field(), m.dim());
        }
        Matrix::vstack_all(m.field(), m.dim(), &blocks).kernel()
    }

    pub fn socle(&self, m: &Comodule) -> Result<(Comodule, Matrix)> {
        m.sub(&self.socle_space(m))
    }

    /// `M / J M` with its projection.
    pub fn top(&self, m: &Comodule) -> Result<(Comodule, Matrix)> {
        let (t, proj, _) = m.quotient(&self.radical_of(m))?;
        Ok((t, proj))
    }

    /// Multiplicity of each simple in a semisimple comodule.
    pub fn semisimple_multiplicities(&self, x: &Comodule) -> Vec<usize> {
        self.reps.iter().map(|e| x.action_of(e).rank()).collect()
    }

    pub fn socle_multiplicities(&self, m: &Comodule) -> Result<Vec<usize>> {
        Ok(self.semisimple_multiplicities(&self.socle(m)?.0))
    }

    pub fn top_multiplicities(&self, m: &Comodule) -> Result<Vec<usize>> {
        Ok(self.semisimple_multiplicities(&self.top(m)?.0))
    }

    /// Index of the simple isomorphic to `s`, which must be simple.
    pub fn simple_index(&self, s: &Comodule) -> Option<usize> {
        let mult = self.semisimple_multiplicities(s);
        let total: usize = mult.iter().sum();
        if total != 1 || s.dim() != self.simples[mult.iter().position(|&x| x == 1)?].dim() {
            return None;
        }
        mult.iter().position(|&x| x == 1)
    }

    /// Whether `s` has no proper nonzero subcomodule.
    pub fn is_simple(&self, s: &Comodule) -> bool {
        s.dim() > 0 && self.radical_of(s).dim() == 0 && self.simple_index(s).is_some()
    }

    /// `E(S)` with an embedding `S -> E(S)`.
    pub fn injective_hull(&self, s: &Comodule) -> Result<(usize, Comodule, Matrix)> {
        let i = self.simple_index(s).ok_or(Error::validation("simple", &[]))?;
        let e = self.injectives[i].clone();
        let h = s.hom(&e);
        let emb = h.into_iter().next().ok_or(Error::IsoNotFound("socle embedding".into()))?;
        Ok((i, e, emb))
    }

    /// `P(S)` with a surjection `P(S) -> S`.
    pub fn projective_cover(&self, s: &Comodule) -> Result<(usize, Comodule, Matrix)> {
        let i = self.simple_index(s).ok_or(Error::validation("simple", &[]))?;
        let p = self.projectives[i].clone();
        let h = p.hom(s);
        let surj = h.into_iter().next().ok_or(Error::IsoNotFound("top projection".into()))?;
        Ok((i, p, surj))
    }

    /// Projective iff `M ≅ ⊕ P(S_i)^{m_i}` with `m_i` the top multiplicities;
    /// since the projective cover surjects, dimensions decide.
    pub fn is_projective(&self, m: &Comodule) -> Result<(bool, Option<Matrix>)> {
        let mult = self.top_multiplicities(m)?;
        let parts: Vec<&Comodule> = mult
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| core::iter::repeat_n(&self.projectives[i], k))
            .collect();
        self.compare_with_sum(m, &parts)
    }

    pub fn is_injective(&self, m: &Comodule) -> Result<(bool, Option<Matrix>)> {
        let mult = self.socle_multiplicities(m)?;
        let parts: Vec<&Comodule> = mult
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| core::iter::repeat_n(&self.injectives[i], k))
            .collect();
        self.compare_with_sum(m, &parts)
    }

    fn compare_with_sum(&self, m: &Comodule, parts: &[&Comodule]) -> Result<(bool, Option<Matrix>)> {
        let d: usize = parts.iter().map(|p| p.dim()).sum();
        if d != m.dim() || parts.is_empty() {
            return Ok((m.dim() == 0, None));
        }
        let sum = Comodule::direct_sum(parts);
        match m.iso(&sum) {
            Search::Found(t) => Ok((true, Some(t))),
            Search::Absent => Err(Error::IsoNotFound("projective cover of equal dimension".into())),
            Search::Inconclusive => Err(Error::Inconclusive("projectivity witness".into())),
        }
    }

    /// Decomposition into indecomposable summands through the primitive
    /// idempotents of `End(M)`.
    pub fn decompose(&self, m: &Comodule) -> Result<Vec<Summand>> {
        decompose_comodule(m)
    }

    /// Indecomposables of dimension at most `bound`: the quotients
    /// `P_i / J^k P_i` and the socle layers of `E_i`, up to isomorphism.
    /// Complete when every indecomposable is uniserial.
    pub fn indecomposables(&self, bound: usize) -> Result<Vec<Comodule>> {
        let mut found: Vec<Comodule> = Vec::new();
        let mut candidates: Vec<Comodule> = Vec::new();
        for p in &self.projectives {
            for jk in &self.radical_powers {
                let w = submodule_by(p, &jk.basis());
                let (q, _, _) = p.quotient(&w)?;
                candidates.push(q);
            }
            candidates.push(p.clone());
        }
        for e in &self.injectives {
            for jk in &self.radical_powers {
                let (s, _) = e.sub(&self.annihilated_by(e, jk))?;
                candidates.push(s);
            }
        }
        candidates.retain(|c| c.dim() > 0 && c.dim() <= bound);
        candidates.sort_by_key(Comodule::dim);
        for c in candidates {
            let mut seen = false;
            for f in &found {
                if f.dim() == c.dim() && f.is_isomorphic(&c)? {
                    seen = true;
                    break;
                }
            }
            if !seen {
                found.push(c);
            }
        }
        Ok(found)
    }
}

/// Span of `{f ⇀ m}` over the given elements `f` of `C*`.
pub(crate) fn submodule_by(m: &Comodule, elems: &[Vec<Scalar>]) -> Subspace {
    let mut vecs = Vec::new();
    for f in elems {
        let a = m.action_of(f);
        vecs.extend(a.columns());
    }
    Subspace::span(m.field(), m.dim(), vecs.iter().map(|v| v.as_slice()))
}

pub(crate) fn decompose_comodule(m: &Comodule) -> Result<Vec<Summand>> {
    let field = m.field();
    if m.dim() == 0 {
        return Ok(Vec::new());
    }
    let end = m.end();
    if end.len() == 1 {
        return Ok(vec![Summand {
            module: m.clone(),
            inclusion: Matrix::identity(field, m.dim()),
            projection: Matrix::identity(field, m.dim()),
        }]);
    }
    let alg = Algebra::from_matrices(field, &end)?;
    let dec = alg.decompose()?;
    let mut out = Vec::new();
    for c in &dec.idempotents {
        let mut flat = zero_vec(field, m.dim() * m.dim());
        for (ci, t) in c.iter().zip(&end) {
            add_scaled(&mut flat, ci, &t.entries());
        }
        let e = Matrix::from_dense(field, m.dim(), m.dim(), flat);
        let (sub, inc) = m.sub(&e.image())?;
        let left = inc.left_inverse().ok_or(Error::dim("summand inclusion"))?;
        out.push(Summand {
            module: sub,
            inclusion: inc,
            projection: left.mul(&e),
        });
    }
    Ok(out)
}

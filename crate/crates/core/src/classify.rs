//! Cosemisimple, quasi-Frobenius, co-Frobenius and symmetric coalgebras,
//! each decided along two independent routes.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::coalg::Coalgebra;
use crate::comod::{Comodule, Structure};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::search::{find_invertible, Search};
use crate::linalg::{add_scaled, Matrix};
use crate::nakayama::{nakayama_left, nakayama_right, natural_iso, Compose, Identity, NaturalIsoWitness, NuLeft, NuRight};

const SEED: u64 = 0xC1A5;

/// A bilinear form `β(c, d) = cᵀ B d` on `C`.
#[derive(Clone, Debug, PartialEq)]
pub struct BalancedPairing {
    pub beta: Matrix,
    pub nondegenerate: bool,
    pub symmetric: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NakayamaAutomorphism {
    pub nu: Matrix,
}

/// Why a coalgebra fails to be quasi-Frobenius or co-Frobenius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// `ν^r(S_i) = 0`.
    NotFaithful { simple: usize },
    /// `ν^r` does not keep the given monomorphism into `E(S_i)` or `P(S_i)` injective.
    NotExact { simple: usize, rank: usize, expected: usize },
    /// `dim ν^l(S_i) ≠ dim S_i`.
    DimensionMismatch { simple: usize, dim: usize, image: usize },
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub cosemisimple: bool,
    pub quasi_frobenius: bool,
    pub co_frobenius: bool,
    pub symmetric: bool,
    pub simple_dims: Vec<usize>,
    /// `P(S_i) ≅ E(S_{π(i)})`.
    pub permutation: Option<Vec<usize>>,
    pub pairing: Option<BalancedPairing>,
    pub automorphism: Option<NakayamaAutomorphism>,
    pub symmetric_pairing: Option<BalancedPairing>,
    pub coinner: Option<Vec<Scalar>>,
    pub equivalence: Option<NaturalIsoWitness>,
    pub counterexample: Option<Counterexample>,
    pub left_image_dims: Vec<usize>,
}

/// Basis of the balanced forms: `R_fᵀ B = B L_f` for the generators `f` of `C*`.
pub fn balanced_forms(c: &Coalgebra, symmetric: bool) -> Vec<Matrix> {
    let field = c.field();
    let n = c.dim();
    let mut triples: Vec<(usize, usize, Scalar)> = Vec::new();
    let mut row = 0;
    for f in c.generators() {
        let r = c.right_action_of(f);
        let l = c.left_action_of(f);
        // (Rᵀ B)[i][j] = Σ_k R[k][i] B[k][j];  (B L)[i][j] = Σ_k B[i][k] L[k][j]
        for i in 0..n {
            for j in 0..n {
                for (k, x) in r.column(i).into_iter().enumerate() {
                    if !x.is_zero() {
                        triples.push((row + i * n + j, k * n + j, x));
                    }
                }
                for (k, x) in l.column(j).into_iter().enumerate() {
                    if !x.is_zero() {
                        triples.push((row + i * n + j, i * n + k, -x));
                    }
                }
            }
        }
        row += n * n;
    }
    if symmetric {
        for i in 0..n {
            for j in (i + 1)..n {
                triples.push((row, i * n + j, field.one()));
                triples.push((row, j * n + i, -field.one()));
                row += 1;
            }
        }
    }
    let sys = Matrix::from_triples(field, row, n * n, triples);
    sys.kernel()
        .basis()
        .into_iter()
        .map(|v| Matrix::from_dense(field, n, n, v))
        .collect()
}

fn pairing_search(c: &Coalgebra, symmetric: bool) -> Result<Option<BalancedPairing>> {
    let field = c.field();
    let forms = balanced_forms(c, symmetric);
    if forms.is_empty() {
        return Ok(None);
    }
    if let Some(beta) = sparse_invertible(&forms) {
        let symmetric = beta == beta.transpose();
        return Ok(Some(BalancedPairing {
            beta,
            nondegenerate: true,
            symmetric,
        }));
    }
    let family: Vec<Vec<Matrix>> = forms.iter().map(|b| vec![b.clone()]).collect();
    match find_invertible(field, &family, SEED) {
        Search::Found(coef) => {
            let terms: Vec<(&Scalar, &Matrix)> = coef.iter().zip(&forms).collect();
            let beta = Matrix::combination(field, c.dim(), c.dim(), &terms);
            let symmetric = beta == beta.transpose();
            Ok(Some(BalancedPairing {
                beta,
                nondegenerate: true,
                symmetric,
            }))
        }
        Search::Absent => Ok(None),
        Search::Inconclusive => Err(Error::Inconclusive("pairing search".into())),
    }
}

/// Sums of at most three basis forms, tried in order of size. These give
/// pairings with small Nakayama automorphisms where a random combination
/// would twist by an inner automorphism of infinite order.
fn sparse_invertible(forms: &[Matrix]) -> Option<Matrix> {
    let t = forms.len();
    let mut stack: Vec<Vec<usize>> = (0..t).map(|i| vec![i]).collect();
    for _ in 0..3 {
        for subset in &stack {
            let mut b = forms[subset[0]].clone();
            for &i in &subset[1..] {
                b = b.add(&forms[i]);
            }
            if b.is_invertible() {
                return Some(b);
            }
        }
        stack = stack
            .iter()
            .flat_map(|s| (s[s.len() - 1] + 1..t).map(move |j| [s.as_slice(), &[j]].concat()))
            .collect();
        if stack.len() > 4096 {
            break;
        }
    }
    None
}

/// A nondegenerate balanced pairing, or `None` when none exists.
pub fn frobenius_pairing(c: &Coalgebra) -> Result<Option<BalancedPairing>> {
    pairing_search(c, false)
}

/// A nondegenerate symmetric balanced pairing, or `None`.
pub fn symmetric_pairing(c: &Coalgebra) -> Result<Option<BalancedPairing>> {
    pairing_search(c, true)
}

/// `ν` with `β(y, x) = β(ν(x), y)`, i.e. `N = (Bᵀ)^{-1} B`, verified to be a
/// coalgebra automorphism.
pub fn nakayama_automorphism(c: &Coalgebra, p: &BalancedPairing) -> Result<NakayamaAutomorphism> {
    let bt = p.beta.transpose().inverse().ok_or(Error::dim("degenerate pairing"))?;
    let nu = bt.mul(&p.beta);
    if !c.is_coalgebra_map(&nu) || !nu.is_invertible() {
        return Err(Error::validation("Nakayama automorphism", &[]));
    }
    Ok(NakayamaAutomorphism { nu })
}

/// `α` with `α ⇀ c = ν(c) ↼ α` and `α` convolution invertible.
pub fn coinner(c: &Coalgebra, nu: &Matrix) -> Result<Option<Vec<Scalar>>> {
    let field = c.field();
    let n = c.dim();
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|a| c.left_action(a).sub(&c.right_action(a).mul(nu)).entries())
        .collect();
    let sys = Matrix::from_columns(field, n * n, &cols);
    let sols = sys.kernel().basis();
    if sols.is_empty() {
        return Ok(None);
    }
    let alg = c.dual_algebra();
    let family: Vec<Vec<Matrix>> = sols.iter().map(|s| vec![alg.left_mul(s)]).collect();
    match find_invertible(field, &family, SEED) {
        Search::Found(coef) => {
            let mut alpha = vec![field.zero(); n];
            for (x, s) in coef.iter().zip(&sols) {
                add_scaled(&mut alpha, x, s);
            }
            Ok(Some(alpha))
        }
        Search::Absent => Ok(None),
        Search::Inconclusive => Err(Error::Inconclusive("coinner search".into())),
    }
}

/// The iso `ν^r(M) -> M^{(ν)}`, `c ⊗ m ↦ β(c, -) ⇀ m`, verified.
pub fn twist_iso(p: &BalancedPairing, nu: &NakayamaAutomorphism, m: &Comodule) -> Result<Matrix> {
    let img = nakayama_right(m)?;
    let field = m.field();
    let n = m.parent().dim();
    let d = m.dim();
    let acts: Vec<Matrix> = (0..n)
        .map(|c| {
            let row: Vec<Scalar> = (0..n).map(|k| p.beta.get(c, k).clone()).collect();
            m.action_of(&row)
        })
        .collect();
    let lifted = Matrix::from_fn(field, d, n * d, |r, k| acts[k / d].get(r, k % d).clone());
    let phi = lifted.mul(&img.costructure);
    let target = m.twist(&nu.nu);
    if !img.output.is_morphism(&phi, &target) || !phi.is_invertible() {
        return Err(Error::IsoNotFound("twist formula".into()));
    }
    Ok(phi)
}

/// `π` with `P(S_i) ≅ E(S_{π(i)})`, if every projective indecomposable is injective.
pub fn nakayama_permutation(st: &Structure) -> Result<Option<Vec<usize>>> {
    let mut perm = Vec::new();
    for p in st.projectives() {
        let mut hit = None;
        for (j, e) in st.injectives().iter().enumerate() {
            if e.dim() == p.dim() && p.is_isomorphic(e)? {
                hit = Some(j);
                break;
            }
        }
        match hit {
            Some(j) => perm.push(j),
            None => return Ok(None),
        }
    }
    let mut seen = vec![false; perm.len()];
    for &j in &perm {
        if core::mem::replace(&mut seen[j], true) {
            return Ok(None);
        }
    }
    Ok(Some(perm))
}

/// Look for a simple killed by `ν^r` or a monomorphism it does not preserve.
pub fn exactness_failure(st: &Structure) -> Result<Option<Counterexample>> {
    for (i, s) in st.simples().iter().enumerate() {
        let rs = nakayama_right(s)?;
        if rs.output.dim() == 0 {
            return Ok(Some(Counterexample::NotFaithful { simple: i }));
        }
    }
    for (i, s) in st.simples().iter().enumerate() {
        let (_, e, emb) = st.injective_hull(s)?;
        let (sub, inc) = st.projectives()[i].sub(&st.radical_of(&st.projectives()[i]))?;
        for (src, tgt, map) in [(s.clone(), e, emb), (sub, st.projectives()[i].clone(), inc)] {
            let a = nakayama_right(&src)?;
            let b = nakayama_right(&tgt)?;
            let f = a.map_to(&b, &map);
            let rank = f.rank();
            if rank != a.output.dim() {
                return Ok(Some(Counterexample::NotExact {
                    simple: i,
                    rank,
                    expected: a.output.dim(),
                }));
            }
        }
    }
    Ok(None)
}

fn agree(name: &str, a: bool, b: bool) -> Result<bool> {
    if a != b {
        return Err(Error::RouteDisagreement(String::from(name)));
    }
    Ok(a)
}

/// Classify `C`, checking the natural-isomorphism route on indecomposables of
/// dimension at most `bound` (default `dim C`).
pub fn classify(c: &Arc<Coalgebra>, bound: Option<usize>) -> Result<Classification> {
    let st = Structure::new(c.clone())?;
    classify_with(&st, bound)
}

pub fn classify_with(st: &Structure, bound: Option<usize>) -> Result<Classification> {
    let c = st.coalgebra();
    let cosemisimple = st.is_cosemisimple();
    let bound = bound.unwrap_or(c.dim());

    let permutation = nakayama_permutation(st)?;
    let objects = st.indecomposables(bound)?;
    let composite = Compose(vec![Box::new(NuRight), Box::new(NuLeft)]);
    let equivalence = match natural_iso(&composite, &Identity, &objects, SEED)? {
        Search::Found(w) => Some(w),
        Search::Absent => None,
        Search::Inconclusive => return Err(Error::Inconclusive("ν^l ν^r ≅ id".into())),
    };
    let quasi_frobenius = agree("quasiFrobenius", permutation.is_some(), equivalence.is_some())?;

    let left_image_dims: Vec<usize> = st
        .simples()
        .iter()
        .map(|s| nakayama_left(s).map(|img| img.output.dim()))
        .collect::<Result<_>>()?;
    let pairing = frobenius_pairing(c)?;
    let dims_kept = left_image_dims.iter().zip(st.simples()).all(|(d, s)| *d == s.dim());
    let co_frobenius = agree("coFrobenius", pairing.is_some(), quasi_frobenius && dims_kept)?;

    let automorphism = pairing.as_ref().map(|p| nakayama_automorphism(c, p)).transpose()?;
    let symmetric_pairing = symmetric_pairing(c)?;
    let coinner = match &automorphism {
        Some(nu) => coinner(c, &nu.nu)?,
        None => None,
    };
    let symmetric = agree("symmetric", symmetric_pairing.is_some(), coinner.is_some())?;

    if cosemisimple && !symmetric || symmetric && !co_frobenius || co_frobenius && !quasi_frobenius {
        return Err(Error::RouteDisagreement("implications".into()));
    }
    let counterexample = if !quasi_frobenius {
        exactness_failure(st)?
    } else if !co_frobenius {
        left_image_dims
            .iter()
            .zip(st.simples())
            .position(|(d, s)| *d != s.dim())
            .map(|i| Counterexample::DimensionMismatch {
                simple: i,
                dim: st.simples()[i].dim(),
                image: left_image_dims[i],
            })
    } else {
        None
    };
    Ok(Classification {
        cosemisimple,
        quasi_frobenius,
        co_frobenius,
        symmetric,
        simple_dims: st.simple_dims(),
        permutation,
        pairing,
        automorphism,
        symmetric_pairing,
        coinner,
        equivalence,
        counterexample,
        left_image_dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::field::FieldSpec;

    fn a2_path() -> Arc<Coalgebra> {
        let q = FieldSpec::rationals();
        let t = [(0, 0, 0), (1, 1, 1), (2, 0, 2), (2, 2, 1)].map(|(c, a, b)| (c, a, b, q.one()));
        Arc::new(Coalgebra::from_triples(q, 3, t, vec![q.one(), q.one(), q.zero()]).unwrap())
    }

    fn balanced_on_all_of_dual(c: &Coalgebra, b: &Matrix) -> bool {
        (0..c.dim()).all(|f| c.right_action(f).transpose().mul(b) == b.mul(c.left_action(f)))
    }

    #[test]
    fn matrix_coalgebra_is_symmetric() {
        let c = Arc::new(corpus::matrix(FieldSpec::rationals(), 2).unwrap());
        let cl = classify(&c, None).unwrap();
        assert!(cl.cosemisimple && cl.quasi_frobenius && cl.co_frobenius && cl.symmetric);
        assert!(cl.coinner.is_some());
        let sym = cl.symmetric_pairing.unwrap();
        assert!(balanced_on_all_of_dual(&c, &sym.beta));
        assert!(nakayama_automorphism(&c, &sym).unwrap().nu.is_identity());
    }

    #[test]
    fn sweedler_is_co_frobenius_but_not_symmetric() {
        let h = corpus::sweedler(FieldSpec::rationals()).unwrap();
        let c = h.coalgebra();
        let cl = classify(c, None).unwrap();
        assert!(!cl.cosemisimple && cl.quasi_frobenius && cl.co_frobenius && !cl.symmetric);
        let p = cl.pairing.unwrap();
        assert!(p.nondegenerate && balanced_on_all_of_dual(c, &p.beta));
        let nu = cl.automorphism.unwrap().nu;
        assert!(!nu.is_identity());
        assert!(nu.order(16).is_some());
        assert_eq!(p.beta, p.beta.transpose().mul(&nu));
        assert!(coinner(c, &nu).unwrap().is_none());
        assert!(symmetric_pairing(c).unwrap().is_none());
    }

    #[test]
    fn taft_nakayama_automorphism_is_a_coalgebra_map() {
        let f = FieldSpec::prime(7).unwrap();
        let h = corpus::taft(f, 3, &f.from_i64(2)).unwrap();
        let c = h.coalgebra();
        let p = frobenius_pairing(c).unwrap().unwrap();
        let nu = nakayama_automorphism(c, &p).unwrap();
        assert!(c.is_coalgebra_map(&nu.nu));
        let reg = Comodule::regular(c.clone(), crate::comod::Side::Right);
        assert!(twist_iso(&p, &nu, &reg).is_ok());
    }

    #[test]
    fn serial_coalgebra_fails_only_the_dimension_criterion() {
        let c = Arc::new(corpus::serial_qf(FieldSpec::rationals(), &[1, 2]).unwrap());
        let cl = classify(&c, None).unwrap();
        assert!(cl.quasi_frobenius && !cl.co_frobenius && !cl.symmetric);
        assert!(frobenius_pairing(&c).unwrap().is_none());
        let perm = cl.permutation.unwrap();
        assert!(perm.iter().enumerate().all(|(i, &j)| cl.simple_dims[i] != cl.simple_dims[j]));
        assert!(matches!(cl.counterexample, Some(Counterexample::DimensionMismatch { .. })));
    }

    #[test]
    fn three_block_serial_coalgebra_permutes_cyclically() {
        let c = Arc::new(corpus::serial_qf(FieldSpec::rationals(), &[1, 2, 1]).unwrap());
        let st = Structure::new(c).unwrap();
        let perm = nakayama_permutation(&st).unwrap().unwrap();
        assert!(perm.iter().enumerate().all(|(i, &j)| i != j));
        assert_eq!(perm[perm[perm[0]]], 0);
    }

    #[test]
    fn path_coalgebra_of_a2_is_not_quasi_frobenius() {
        let cl = classify(&a2_path(), None).unwrap();
        assert!(!cl.quasi_frobenius && !cl.co_frobenius && !cl.symmetric);
        assert!(cl.permutation.is_none());
        assert!(cl.counterexample.is_some());
    }

    #[test]
    fn identity_is_coinner_with_counit() {
        let c = Arc::new(corpus::matrix(FieldSpec::rationals(), 2).unwrap());
        let id = Matrix::identity(c.field(), 4);
        let alpha = coinner(&c, &id).unwrap().unwrap();
        let lhs: Vec<Matrix> = (0..4).map(|a| c.left_action(a).clone()).collect();
        let mut acc = Matrix::zeros(c.field(), 4, 4);
        for (a, x) in alpha.iter().enumerate() {
            acc = acc.add(&lhs[a].sub(c.right_action(a)).scale(x));
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn cosemisimple_permutation_is_identity() {
        let h = corpus::group_algebra(FieldSpec::rationals(), corpus::Group::Cyclic(3)).unwrap();
        let st = Structure::new(h.coalgebra().clone()).unwrap();
        assert_eq!(nakayama_permutation(&st).unwrap().unwrap(), vec![0, 1, 2]);
    }
}

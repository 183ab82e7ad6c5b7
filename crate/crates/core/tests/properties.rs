use std::sync::Arc;

use proptest::prelude::*;

use nakayama_core::classify::classify;
use nakayama_core::comod::{Comodule, Side, Structure};
use nakayama_core::corpus::random_coalgebra;
use nakayama_core::linalg::solve_affine;
use nakayama_core::nakayama::{check_adjunction, coend_stabilized, cohom, nakayama_left, nakayama_right};
use nakayama_core::{FieldSpec, Matrix};

fn structure(seed: u64, dim: usize) -> Structure {
    Structure::new(Arc::new(random_coalgebra(seed, dim).unwrap())).unwrap()
}

fn objects(st: &Structure) -> Vec<Comodule> {
    let mut v = st.indecomposables(4).unwrap();
    v.push(Comodule::regular(st.coalgebra().clone(), Side::Right));
    v
}

fn small_matrix(p: Option<u64>) -> impl Strategy<Value = Matrix> {
    (1usize..5, 1usize..5).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
            let field = p.map_or(FieldSpec::rationals(), |p| FieldSpec::prime(p).unwrap());
            Matrix::from_fn(field, r, c, |i, j| field.from_i64(v[i * c + j]))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity(m in small_matrix(None)) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), m.cols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn affine_solutions_solve(m in small_matrix(Some(5)), x in proptest::collection::vec(0i64..5, 4)) {
        let f = m.field();
        let x: Vec<_> = (0..m.cols()).map(|i| f.from_i64(x[i])).collect();
        let b = m.mul_vec(&x);
        let (y, k) = solve_affine(&m, &b).unwrap();
        prop_assert_eq!(m.mul_vec(&y), b);
        let d: Vec<_> = x.iter().zip(&y).map(|(a, b)| a - b).collect();
        prop_assert!(k.contains(&d));
    }

    #[test]
    fn inverse_is_two_sided(m in small_matrix(None)) {
        if let Some(inv) = m.inverse() {
            prop_assert!(m.mul(&inv).is_identity() && inv.mul(&m).is_identity());
        } else {
            prop_assert!(!m.is_square() || m.rank() < m.rows());
        }
    }

    #[test]
    fn random_coalgebras_are_deterministic(seed in 0u64..1000, dim in 1usize..=8) {
        let a = random_coalgebra(seed, dim).unwrap();
        let b = random_coalgebra(seed, dim).unwrap();
        prop_assert_eq!(a.delta_matrix(), b.delta_matrix());
        prop_assert_eq!(a.eps(), b.eps());
    }

    #[test]
    fn cohom_is_dual_to_hom(seed in 0u64..500, dim in 1usize..=6) {
        let st = structure(seed, dim);
        let objs = objects(&st);
        for x in &objs {
            for y in &objs {
                let ch = cohom(x, y).unwrap();
                let homs = y.hom(x);
                prop_assert_eq!(ch.dim, homs.len());
                let pairing = ch.pairing(&homs);
                prop_assert!(pairing.rows() == 0 || pairing.is_invertible());
            }
        }
    }

    #[test]
    fn adjunction_holds(seed in 0u64..500, dim in 1usize..=6) {
        let st = structure(seed, dim);
        let objs = objects(&st);
        for m in &objs {
            for n in &objs {
                prop_assert!(check_adjunction(m, n).unwrap().holds());
            }
        }
    }

    #[test]
    fn coend_agrees_with_nakayama(seed in 0u64..500, dim in 1usize..=6) {
        let st = structure(seed, dim);
        for m in objects(&st) {
            let co = coend_stabilized(&st, &m).unwrap();
            prop_assert!(co.object.is_isomorphic(&nakayama_right(&m).unwrap().output).unwrap());
        }
    }

    #[test]
    fn nakayama_exactness_on_socle_sequences(seed in 0u64..500, dim in 1usize..=6) {
        let st = structure(seed, dim);
        for m in objects(&st) {
            let (a, inc) = m.sub(&st.socle_space(&m)).unwrap();
            let (q, proj, _) = m.quotient(&st.socle_space(&m)).unwrap();
            let (ra, rm, rq) = (nakayama_right(&a).unwrap(), nakayama_right(&m).unwrap(), nakayama_right(&q).unwrap());
            let fi = ra.map_to(&rm, &inc);
            let fp = rm.map_to(&rq, &proj);
            prop_assert_eq!(fp.rank(), rq.output.dim());
            prop_assert_eq!(fi.image(), fp.kernel());
            let (la, lm, lq) = (nakayama_left(&a).unwrap(), nakayama_left(&m).unwrap(), nakayama_left(&q).unwrap());
            let gi = la.map_to(&lm, &inc);
            let gp = lm.map_to(&lq, &proj);
            prop_assert_eq!(gi.rank(), la.output.dim());
            prop_assert_eq!(gi.image(), gp.kernel());
        }
    }

    #[test]
    fn classification_routes_agree(seed in 0u64..500, dim in 1usize..=6) {
        let c = Arc::new(random_coalgebra(seed, dim).unwrap());
        let cl = classify(&c, None).unwrap();
        prop_assert!(!cl.symmetric || cl.co_frobenius);
        prop_assert!(!cl.co_frobenius || cl.quasi_frobenius);
        prop_assert_eq!(cl.quasi_frobenius, cl.counterexample.is_none() || !cl.co_frobenius && cl.permutation.is_some());
    }
}

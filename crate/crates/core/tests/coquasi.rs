use std::sync::Arc;

use nakayama_core::comod::{Comodule, Side, Structure};
use nakayama_core::coquasi::{hopf_left_dual, CoquasiBialgebra};
use nakayama_core::corpus::{build, cyclic_coquasi, CorpusSpec};
use nakayama_core::FieldSpec;

#[test]
fn trivial_associator_reproduces_hopf_duals() {
    for name in ["sweedler", "group:n=3", "taft:n=3,q=2,p=7"] {
        let h = build(&CorpusSpec::parse(name).unwrap()).unwrap().hopf().unwrap().clone();
        let cq = CoquasiBialgebra::from_hopf(&h).unwrap();
        let st = Structure::new(Arc::new(h.coalgebra().cop())).unwrap();
        for m in st.indecomposables(3).unwrap() {
            let x = Comodule::from_module(h.coalgebra().clone(), Side::Left, m.actions().to_vec()).unwrap();
            let d = cq.right_dual(&x).unwrap();
            assert_eq!(d.dim(), x.dim());
            assert!(d.is_isomorphic(&hopf_left_dual(&h, &x)).unwrap(), "{name}");
        }
        let report = cq.classification().unwrap();
        assert!(report.items_consistent() && report.co_frobenius, "{name}");
        assert_eq!((report.left_cointegrals, report.right_cointegrals), (1, 1));
    }
}

#[test]
fn cyclic_associators_over_f7() {
    let f = FieldSpec::prime(7).unwrap();
    for e in 0..3 {
        let h = cyclic_coquasi(f, 3, e).unwrap();
        let pre = h.preantipode().unwrap();
        assert!(pre.solution_dim <= 1);
        let report = h.classification().unwrap();
        assert!(report.dimension_criterion && report.items_consistent());
        assert_eq!(report.left_cointegrals, 1);
    }
}

use nakayama_core::comod::Structure;
use nakayama_core::corpus::{build, CorpusSpec};
use nakayama_core::hopf::HopfAlgebra;
use nakayama_core::nakayama::{natural_iso, Identity, NuRight, Twist};

fn hopf(name: &str) -> HopfAlgebra {
    build(&CorpusSpec::parse(name).unwrap()).unwrap().hopf().unwrap().clone()
}

#[test]
fn radford_on_sweedler_and_taft() {
    for (name, bound, count) in [("sweedler", 4, 4), ("taft:n=3,q=2,p=7", 3, 9)] {
        let h = hopf(name);
        let st = Structure::new(h.coalgebra().clone()).unwrap();
        let objs = st.indecomposables(bound).unwrap();
        assert_eq!(objs.len(), count);
        let w = h.radford(&objs, 7).unwrap().found().unwrap();
        assert!(w.verify());
        assert!(!w.generators.is_empty());
        assert_eq!(h.hull_cover(&st).unwrap().len(), st.num_simples());
    }
}

#[test]
fn taft_antipode_fourth_power_is_not_trivial_but_twist_is_inner() {
    let h = hopf("taft:n=3,q=2,p=7");
    let s = h.antipode();
    let s4 = s.mul(s).mul(s).mul(s);
    assert!(!s4.is_identity());
    let st = Structure::new(h.coalgebra().clone()).unwrap();
    let objs = st.indecomposables(3).unwrap();
    assert!(natural_iso(&Twist(s4), &Identity, &objs, 0).unwrap().found().is_some());
}

#[test]
fn nakayama_is_not_identity_on_non_unimodular_examples() {
    for name in ["sweedler", "taft:n=2,q=2,p=3", "taft:n=3,q=2,p=7"] {
        let h = hopf(name);
        assert!(!h.is_unimodular().unwrap());
        let st = Structure::new(h.coalgebra().clone()).unwrap();
        let objs = st.indecomposables(2).unwrap();
        assert!(natural_iso(&NuRight, &Identity, &objs, 0).unwrap().found().is_none(), "{name}");
    }
}

#[test]
fn unimodular_group_algebras() {
    for n in 1..=5 {
        let h = hopf(&format!("group:n={n}"));
        assert!(h.is_unimodular().unwrap());
        assert_eq!(h.cointegrals(true), h.cointegrals(false));
    }
    let f = hopf("function-hopf:group=symmetric,n=3");
    assert!(f.is_unimodular().unwrap());
}

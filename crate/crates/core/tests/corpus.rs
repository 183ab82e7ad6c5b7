use nakayama_core::classify::classify;
use nakayama_core::comod::Structure;
use nakayama_core::corpus::{build, standard, Built, CorpusSpec, Family, Group};
use nakayama_core::nakayama::{nakayama_left, nakayama_right};

fn expected_flags(f: &Family) -> (bool, bool, bool, bool) {
    match f {
        Family::Matrix { .. } | Family::Group { .. } => (true, true, true, true),
        Family::Sweedler | Family::Taft { .. } => (false, true, true, false),
        Family::SerialQf { .. } => (false, true, false, false),
        _ => unreachable!(),
    }
}

#[test]
fn standard_corpus_classifies_as_expected() {
    for spec in standard() {
        let cl = classify(build(&spec).unwrap().coalgebra(), None).unwrap();
        let got = (cl.cosemisimple, cl.quasi_frobenius, cl.co_frobenius, cl.symmetric);
        assert_eq!(got, expected_flags(&spec.family), "{}", spec.name());
    }
}

#[test]
fn projectives_and_injectives_correspond() {
    for spec in standard() {
        let st = Structure::new(build(&spec).unwrap().coalgebra().clone()).unwrap();
        for s in st.simples() {
            let (_, p, _) = st.projective_cover(s).unwrap();
            let (_, e, _) = st.injective_hull(s).unwrap();
            assert!(nakayama_right(&p).unwrap().output.is_isomorphic(&e).unwrap(), "{}", spec.name());
            assert!(nakayama_left(&e).unwrap().output.is_isomorphic(&p).unwrap(), "{}", spec.name());
        }
    }
}

#[test]
fn serial_projective_cover_matches_hull_of_other_dimension() {
    let spec = CorpusSpec::parse("serial-qf:dims=1-2").unwrap();
    let st = Structure::new(build(&spec).unwrap().coalgebra().clone()).unwrap();
    let dims = st.simple_dims();
    for (i, p) in st.projectives().iter().enumerate() {
        let j = st.injectives().iter().position(|e| e.is_isomorphic(p).unwrap()).unwrap();
        assert_ne!(dims[i], dims[j]);
    }
}

#[test]
fn families_build_the_expected_kinds() {
    let kinds = [
        ("matrix:n=2", 4, false),
        ("group:n=4", 4, true),
        ("function-hopf:group=symmetric,n=3", 6, true),
        ("sweedler", 4, true),
        ("taft:n=3,q=2,p=7", 9, true),
        ("random:seed=0,dim=4", 4, false),
    ];
    for (name, dim, hopf) in kinds {
        let b = build(&CorpusSpec::parse(name).unwrap()).unwrap();
        assert_eq!(b.coalgebra().dim(), dim, "{name}");
        assert_eq!(b.hopf().is_some(), hopf, "{name}");
    }
    let cq = build(&CorpusSpec::parse("cyclic-coquasi:n=2,e=1").unwrap()).unwrap();
    assert!(matches!(cq, Built::Coquasi(_)));
    assert!(build(&CorpusSpec::parse("serial-qf:dims=1-1").unwrap()).is_err());
    assert!(build(&CorpusSpec::parse("taft:n=3,q=3,p=7").unwrap()).is_err());
    assert!(build(&CorpusSpec::parse("group:n=3,p=4").unwrap()).is_err());
    assert!(build(&CorpusSpec::new(Family::Group { group: Group::Symmetric(5) })).is_err());
}

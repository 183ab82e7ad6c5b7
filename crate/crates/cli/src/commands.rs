//! The subcommands. Each returns an [`Outcome`]; `Err` means unusable input.

use std::sync::Arc;

use nakayama_core::classify::{classify, coinner, frobenius_pairing, nakayama_automorphism, symmetric_pairing, twist_iso, Counterexample};
use nakayama_core::comod::{Comodule, Side, Structure};
use nakayama_core::corpus::{build, standard, Built, CorpusSpec, Family, Group};
use nakayama_core::linalg::search::Search;
use nakayama_core::nakayama::{check_adjunction, coend_stabilized, nakayama_left, nakayama_right, Direction};
use nakayama_core::Error;
use serde_json::{json, Value};

use crate::format::{coaction_json, matrix_json, side_name, vector_json, Loaded, PresentationFile};
use crate::report::{Outcome, Status};

pub type CmdResult = Result<Outcome, String>;

/// Run `f`, mapping core errors through [`Outcome::from_error`].
fn guarded(f: impl FnOnce() -> nakayama_core::Result<Outcome>) -> CmdResult {
    f().or_else(Outcome::from_error)
}

fn search_json<T>(s: &Search<T>) -> Value {
    match s {
        Search::Found(_) => json!(true),
        Search::Absent => json!(false),
        Search::Inconclusive => Value::Null,
    }
}

fn comodule_json(m: &Comodule) -> Value {
    json!({ "side": side_name(m.side()), "dim": m.dim(), "rho": coaction_json(m) })
}

pub fn validate(l: &Loaded) -> CmdResult {
    let comodules: Vec<Value> = l
        .comodules
        .iter()
        .map(|(n, m)| json!({ "name": n, "side": side_name(m.side()), "dim": m.dim() }))
        .collect();
    let mut axioms = vec!["coassociativity", "counit"];
    match l.kind() {
        "hopf" => axioms.extend(["associativity", "unit", "multiplicativity", "antipode"]),
        "coquasi" => axioms.extend(["quasi-associativity", "unit", "multiplicativity", "cocycle"]),
        _ => {}
    }
    if !l.comodules.is_empty() {
        axioms.push("comodule");
    }
    Ok(Outcome::ok(json!({
        "kind": l.kind(),
        "dim": l.coalgebra.dim(),
        "axioms": axioms,
        "comodules": comodules,
    })))
}

fn counterexample_json(c: &Counterexample) -> Value {
    match c {
        Counterexample::NotFaithful { simple } => json!({ "kind": "notFaithful", "simple": simple }),
        Counterexample::NotExact { simple, rank, expected } => {
            json!({ "kind": "notExact", "simple": simple, "rank": rank, "expected": expected })
        }
        Counterexample::DimensionMismatch { simple, dim, image } => {
            json!({ "kind": "dimensionMismatch", "simple": simple, "dim": dim, "image": image })
        }
    }
}

pub fn classify_cmd(l: &Loaded, bound: Option<usize>) -> CmdResult {
    guarded(|| {
        let cl = classify(&l.coalgebra, bound)?;
        Ok(Outcome::ok(json!({
            "cosemisimple": cl.cosemisimple,
            "quasiFrobenius": cl.quasi_frobenius,
            "coFrobenius": cl.co_frobenius,
            "symmetric": cl.symmetric,
            "simpleDims": cl.simple_dims,
            "permutation": cl.permutation,
            "leftImageDims": cl.left_image_dims,
            "nakayamaAutomorphism": cl.automorphism.as_ref().map(|a| matrix_json(&a.nu)),
            "coinner": cl.coinner.as_ref().map(|v| vector_json(v)),
            "counterexample": cl.counterexample.as_ref().map(counterexample_json),
        })))
    })
}

pub fn nakayama(l: &Loaded, name: &str, direction: Direction) -> CmdResult {
    let m = l.comodule(name).ok_or_else(|| format!("no comodule named {name:?}"))?;
    if m.side() != Side::Right {
        return Err(format!("comodule {name:?} must be a right comodule"));
    }
    guarded(|| {
        let img = match direction {
            Direction::Right => nakayama_right(&m)?,
            Direction::Left => nakayama_left(&m)?,
        };
        let iso = img.output.iso(&m);
        let mut results = json!({
            "direction": if direction == Direction::Right { "right" } else { "left" },
            "input": { "name": name, "dim": m.dim() },
            "output": comodule_json(&img.output),
            "structure": matrix_json(&img.structure),
            "costructure": matrix_json(&img.costructure),
            "isomorphicToInput": search_json(&iso),
        });
        if let Search::Found(t) = &iso {
            results["isomorphism"] = matrix_json(t);
        }
        Ok(match iso {
            Search::Inconclusive => Outcome::inconclusive(results),
            _ => Outcome::ok(results),
        })
    })
}

pub fn pairing(l: &Loaded) -> CmdResult {
    guarded(|| {
        let c = &l.coalgebra;
        let Some(p) = frobenius_pairing(c)? else {
            return Ok(Outcome::ok(json!({ "pairing": null, "nakayamaAutomorphism": null })));
        };
        let nu = nakayama_automorphism(c, &p)?;
        let sym = symmetric_pairing(c)?;
        Ok(Outcome::ok(json!({
            "pairing": { "matrix": matrix_json(&p.beta), "symmetric": p.symmetric },
            "nakayamaAutomorphism": {
                "matrix": matrix_json(&nu.nu),
                "order": nu.nu.order(64),
                "coinner": coinner(c, &nu.nu)?.as_deref().map(vector_json),
            },
            "symmetricPairing": sym.as_ref().map(|s| matrix_json(&s.beta)),
        })))
    })
}

pub fn integrals(l: &Loaded, left: bool) -> CmdResult {
    let space = match (&l.hopf, &l.coquasi) {
        (Some(h), _) => h.cointegrals(left),
        (None, Some(q)) => q.cointegrals(left),
        _ => return Err("cointegrals need a Hopf or coquasi structure (mult block)".into()),
    };
    guarded(|| {
        let mut results = json!({
            "side": if left { "l" } else { "r" },
            "dim": space.dim(),
            "basis": space.basis().iter().map(|v| vector_json(v)).collect::<Vec<_>>(),
        });
        if let Some(h) = &l.hopf {
            let g = h.modular_element()?;
            results["modularElement"] = vector_json(&g);
            results["unimodular"] = json!(h.is_unimodular()?);
        }
        Ok(Outcome::ok(results))
    })
}

pub fn radford(l: &Loaded, max_dim: usize) -> CmdResult {
    let h = l.hopf.as_ref().ok_or("radford needs a Hopf algebra (mult, unit and antipode blocks)")?;
    guarded(|| {
        let st = Structure::new(h.coalgebra().clone())?;
        let objects = st.indecomposables(max_dim)?;
        let search = h.radford(&objects, 4)?;
        let hc = h.hull_cover(&st)?;
        let mut results = json!({
            "maxDim": max_dim,
            "modularElement": vector_json(&h.modular_element()?),
            "objects": objects.iter().map(|m| m.dim()).collect::<Vec<_>>(),
            "isomorphic": search_json(&search),
            "hullCover": hc.iter().map(|(i, j, _)| json!({ "simple": i, "cover": j })).collect::<Vec<_>>(),
        });
        Ok(match search {
            Search::Found(w) => {
                let verified = w.verify();
                results["components"] = Value::Array(w.components.iter().map(matrix_json).collect());
                results["generators"] = json!(w.generators.len());
                results["verified"] = json!(verified);
                if verified {
                    Outcome::ok(results)
                } else {
                    Outcome::violated(results, json!({ "naturality": "witness failed re-check" }))
                }
            }
            Search::Absent => Outcome::violated(results, json!({ "objects": objects.iter().map(|m| m.dim()).collect::<Vec<_>>() })),
            Search::Inconclusive => Outcome::inconclusive(results),
        })
    })
}

pub fn coquasi(l: &Loaded) -> CmdResult {
    let q = l.coquasi.as_ref().ok_or("coquasi needs a mult block")?;
    guarded(|| {
        let Some(pre) = q.preantipode() else {
            return Ok(Outcome::ok(json!({ "preantipode": null })));
        };
        let r = q.classification()?;
        let results = json!({
            "preantipode": { "matrix": matrix_json(&pre.matrix), "solutionDim": pre.solution_dim },
            "leftCointegrals": r.left_cointegrals,
            "rightCointegrals": r.right_cointegrals,
            "projectiveExists": r.projective_exists,
            "rationalPartNonzero": r.rational_part_nonzero,
            "quasiFrobenius": r.quasi_frobenius,
            "simpleDims": r.simple_dims.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
            "dimensionCriterion": r.dimension_criterion,
            "coFrobenius": r.co_frobenius,
            "itemsConsistent": r.items_consistent(),
        });
        Ok(if r.items_consistent() {
            Outcome::ok(results)
        } else {
            let w = json!({ "left": r.left_cointegrals, "right": r.right_cointegrals });
            Outcome::violated(results, w)
        })
    })
}

pub fn emit(spec: &str) -> Result<String, String> {
    let spec = CorpusSpec::parse(spec).map_err(|e| e.to_string())?;
    let built = build(&spec).map_err(|e| e.to_string())?;
    Ok(PresentationFile::from_built(&built).map_err(|e| e.to_string())?.to_json())
}

/// Parse `A..B`.
pub fn seed_range(s: &str) -> Result<std::ops::Range<u64>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("seed range {s:?} is not A..B"))?;
    let a: u64 = a.trim().parse().map_err(|_| format!("bad seed {a:?}"))?;
    let b: u64 = b.trim().parse().map_err(|_| format!("bad seed {b:?}"))?;
    if a > b {
        return Err(format!("empty seed range {s:?}"));
    }
    Ok(a..b)
}

pub const FAMILIES: [&str; 9] = [
    "matrix",
    "group",
    "function-hopf",
    "sweedler",
    "taft",
    "serial-qf",
    "cyclic-coquasi",
    "random",
    "all",
];

/// The instances `verify-suite` runs, in order.
pub fn suite_instances(family: Option<&str>, seeds: std::ops::Range<u64>) -> Result<Vec<CorpusSpec>, String> {
    let family = family.unwrap_or("all");
    if !FAMILIES.contains(&family) {
        return Err(format!("unknown family {family:?}; expected one of {}", FAMILIES.join(", ")));
    }
    let mut specs = standard();
    specs.push(CorpusSpec::new(Family::FunctionHopf { group: Group::Symmetric(3) }));
    specs.push(CorpusSpec::new(Family::SerialQf { dims: vec![1, 2, 1] }));
    specs.push(CorpusSpec::new(Family::CyclicCoquasi { n: 2, exponent: 1 }));
    for seed in seeds {
        specs.push(CorpusSpec::new(Family::Random { seed, dim: 1 + (seed as usize % 6) }));
    }
    Ok(specs
        .into_iter()
        .filter(|s| family == "all" || s.name().split(':').next() == Some(family))
        .collect())
}

fn iso_holds(a: &Comodule, b: &Comodule) -> nakayama_core::Result<Option<bool>> {
    Ok(match a.iso(b) {
        Search::Found(t) => Some(a.is_morphism(&t, b) && t.is_invertible()),
        Search::Absent => Some(false),
        Search::Inconclusive => None,
    })
}

fn suite_checks(built: &Built) -> nakayama_core::Result<Vec<(&'static str, Option<bool>)>> {
    let c: Arc<_> = built.coalgebra().clone();
    let st = Structure::new(c.clone())?;
    let mut out = Vec::new();

    let mut pi = Some(true);
    for s in st.simples() {
        let (_, p, _) = st.projective_cover(s)?;
        let (_, e, _) = st.injective_hull(s)?;
        for r in [iso_holds(&nakayama_right(&p)?.output, &e)?, iso_holds(&nakayama_left(&e)?.output, &p)?] {
            pi = match (pi, r) {
                (Some(false), _) | (_, Some(false)) => Some(false),
                (None, _) | (_, None) => None,
                _ => Some(true),
            };
        }
    }
    out.push(("projectiveInjective", pi));

    let mut objects = vec![Comodule::regular(c.clone(), Side::Right)];
    objects.extend(st.simples().iter().cloned());
    let mut co = Some(true);
    for m in &objects {
        let r = iso_holds(&coend_stabilized(&st, m)?.object, &nakayama_right(m)?.output)?;
        if r != Some(true) {
            co = r;
            break;
        }
    }
    out.push(("coend", co));

    let small: Vec<&Comodule> = objects.iter().filter(|m| m.dim() <= 6).collect();
    let mut adj = true;
    for m in &small {
        for n in &small {
            adj &= check_adjunction(m, n)?.holds();
        }
    }
    out.push(("adjunction", Some(adj)));

    let routes = match classify(&c, None) {
        Ok(_) => Some(true),
        Err(Error::RouteDisagreement(_)) => Some(false),
        Err(Error::Inconclusive(_)) => None,
        Err(e) => return Err(e),
    };
    out.push(("classification", routes));

    if let Some(p) = frobenius_pairing(&c)? {
        let nu = nakayama_automorphism(&c, &p)?;
        let mut ok = true;
        for m in st.indecomposables(c.dim())? {
            ok &= twist_iso(&p, &nu, &m).is_ok();
        }
        out.push(("twistFormula", Some(ok)));
    }

    if let Some(h) = built.hopf() {
        let one = h.cointegrals(true).dim() == 1 && h.cointegrals(false).dim() == 1;
        out.push(("cointegrals", Some(one)));
        let unimodular = h.is_unimodular()?;
        out.push(("modular", Some(unimodular == (h.cointegrals(true) == h.cointegrals(false)))));
        out.push(("hullCover", Some(h.hull_cover(&st).is_ok_and(|v| v.len() == st.num_simples()))));
    }
    if let Built::Coquasi(q) = built {
        let ok = q.preantipode().is_some() && q.classification()?.items_consistent();
        out.push(("coquasi", Some(ok)));
    }
    Ok(out)
}

pub fn verify_suite(specs: &[CorpusSpec]) -> CmdResult {
    let mut instances = Vec::new();
    let mut failures = Vec::new();
    let mut status = Status::Ok;
    for spec in specs {
        let name = spec.name();
        let checks = build(spec).and_then(|b| suite_checks(&b));
        let entry = match checks {
            Ok(checks) => {
                let mut obj = serde_json::Map::new();
                for (k, v) in checks {
                    match v {
                        Some(false) => {
                            failures.push(json!({ "instance": name, "check": k }));
                            status = status.max(Status::Violated);
                        }
                        None => status = status.max(Status::Inconclusive),
                        Some(true) => {}
                    }
                    obj.insert(k.into(), json!(v));
                }
                json!({ "instance": name, "checks": obj })
            }
            Err(e) => {
                match Outcome::from_error(e.clone()) {
                    Ok(o) if o.status == Status::Inconclusive => status = status.max(Status::Inconclusive),
                    _ => {
                        failures.push(json!({ "instance": name, "error": e.to_string() }));
                        status = status.max(Status::Violated);
                    }
                }
                json!({ "instance": name, "error": e.to_string() })
            }
        };
        instances.push(entry);
    }
    let results = json!({
        "instances": instances,
        "total": specs.len(),
        "failed": failures.len(),
    });
    Ok(match status {
        Status::Violated => Outcome::violated(results, Value::Array(failures)),
        Status::Inconclusive => Outcome::inconclusive(results),
        Status::Ok => Outcome::ok(results),
    })
}

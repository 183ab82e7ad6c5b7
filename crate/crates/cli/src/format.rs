//! The JSON presentation file: one coalgebra, optionally with a
//! multiplication, antipode or associator, plus named comodules.
//!
//! Coefficients are JSON integers or exact strings such as `"-3/7"`. Sparse
//! entries list indices first, then the numerator and an optional denominator.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use nakayama_core::coalg::Coalgebra;
use nakayama_core::comod::{Comodule, Side, Structure};
use nakayama_core::coquasi::CoquasiBialgebra;
use nakayama_core::corpus::Built;
use nakayama_core::hopf::HopfAlgebra;
use nakayama_core::{Error, FieldSpec, Matrix, Scalar};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FieldJson {
    /// `"rationals"` or `"prime"`.
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ComoduleJson {
    pub name: String,
    /// `"right"` or `"left"`.
    pub side: String,
    pub dim: usize,
    /// `[i, j, a, num, den?]`: coefficient of `m_j ⊗ e_a` (right) or
    /// `e_a ⊗ m_j` (left) in `ρ(m_i)`.
    pub rho: Vec<Vec<Value>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub schema: u32,
    pub field: FieldJson,
    pub dim: usize,
    /// `[i, j, k, num, den?]`: coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
    pub delta: Vec<Vec<Value>>,
    pub eps: Vec<Value>,
    /// `[i, j, k, num, den?]`: coefficient of `e_k` in `e_i e_j`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Vec<Value>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Value>>,
    /// `[i, j, num, den?]`: coefficient of `e_i` in `S(e_j)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Vec<Value>>>,
    /// `[a, b, c, num, den?]`: `ω(e_a, e_b, e_c)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<Vec<Value>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub comodules: Vec<ComoduleJson>,
}

/// What went wrong while reading a file.
#[derive(Debug)]
pub enum LoadError {
    /// Malformed input; exit code 3.
    Input(String),
    /// Well-formed input violating an axiom, with the offending
    /// coefficients when they are cheap to list.
    Core(Error, Option<Value>),
}

impl From<Error> for LoadError {
    fn from(e: Error) -> Self {
        match e {
            Error::Validation { .. } => LoadError::Core(e, None),
            other => LoadError::Input(other.to_string()),
        }
    }
}

type Triple = (usize, usize, usize, Scalar);

/// Entries `[a, b, c, lhs, rhs]` where `(Δ⊗id)Δ(e_i)` and `(id⊗Δ)Δ(e_i)` differ.
pub fn coassociativity_defect(field: FieldSpec, delta: &[Triple], i: usize) -> Value {
    let mut lhs: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
    let mut rhs = lhs.clone();
    for (_, p, q, x) in delta.iter().filter(|t| t.0 == i) {
        for (_, a, b, y) in delta.iter().filter(|t| t.0 == *p) {
            let e = lhs.entry((*a, *b, *q)).or_insert_with(|| field.zero());
            *e = &*e + &(x * y);
        }
        for (_, b, c, y) in delta.iter().filter(|t| t.0 == *q) {
            let e = rhs.entry((*p, *b, *c)).or_insert_with(|| field.zero());
            *e = &*e + &(x * y);
        }
    }
    let keys: BTreeSet<_> = lhs.keys().chain(rhs.keys()).copied().collect();
    let zero = field.zero();
    Value::Array(
        keys.into_iter()
            .filter_map(|k| {
                let (l, r) = (lhs.get(&k).unwrap_or(&zero), rhs.get(&k).unwrap_or(&zero));
                (l != r).then(|| json!([k.0, k.1, k.2, scalar_json(l), scalar_json(r)]))
            })
            .collect(),
    )
}

/// Entries `[j, (ε⊗id)Δ(e_i)_j, (id⊗ε)Δ(e_i)_j]` where either side differs from `δ_ij`.
pub fn counit_defect(field: FieldSpec, delta: &[Triple], eps: &[Scalar], i: usize) -> Value {
    let n = eps.len();
    let (mut l, mut r) = (vec![field.zero(); n], vec![field.zero(); n]);
    for (_, p, q, x) in delta.iter().filter(|t| t.0 == i) {
        l[*q] = &l[*q] + &(x * &eps[*p]);
        r[*p] = &r[*p] + &(x * &eps[*q]);
    }
    Value::Array(
        (0..n)
            .filter(|&j| {
                let d = if j == i { field.one() } else { field.zero() };
                l[j] != d || r[j] != d
            })
            .map(|j| json!([j, scalar_json(&l[j]), scalar_json(&r[j])]))
            .collect(),
    )
}

#[derive(Clone, Debug)]
pub struct Loaded {
    pub coalgebra: Arc<Coalgebra>,
    pub hopf: Option<HopfAlgebra>,
    pub coquasi: Option<CoquasiBialgebra>,
    pub comodules: Vec<(String, Comodule)>,
}

impl Loaded {
    pub fn kind(&self) -> &'static str {
        match (&self.hopf, &self.coquasi) {
            (Some(_), _) => "hopf",
            (None, Some(_)) => "coquasi",
            _ => "coalgebra",
        }
    }

    /// A comodule from the file, or one of `regular`, `regular-left`,
    /// `dual-regular` and (for Hopf algebras) `trivial`.
    pub fn comodule(&self, name: &str) -> Option<Comodule> {
        if let Some((_, m)) = self.comodules.iter().find(|(n, _)| n == name) {
            return Some(m.clone());
        }
        let c = self.coalgebra.clone();
        match name {
            "regular" => Some(Comodule::regular(c, Side::Right)),
            "regular-left" => Some(Comodule::regular(c, Side::Left)),
            "dual-regular" => Some(Comodule::dual_regular(c, Side::Right)),
            "trivial" => self.hopf.as_ref().map(|h| h.trivial()),
            _ => None,
        }
    }
}

fn input(msg: impl Into<String>) -> LoadError {
    LoadError::Input(msg.into())
}

pub fn field_of(f: &FieldJson) -> Result<FieldSpec, LoadError> {
    match (f.kind.as_str(), f.p) {
        ("rationals", None) => Ok(FieldSpec::rationals()),
        ("prime", Some(p)) => FieldSpec::prime(p).map_err(|_| input(format!("{p} is not a prime"))),
        _ => Err(input("field must be {\"kind\": \"rationals\"} or {\"kind\": \"prime\", \"p\": P}")),
    }
}

fn field_json(field: FieldSpec) -> FieldJson {
    if field.is_rationals() {
        FieldJson { kind: "rationals".into(), p: None }
    } else {
        FieldJson { kind: "prime".into(), p: Some(field.characteristic()) }
    }
}

fn scalar_of(field: FieldSpec, v: &Value) -> Result<Scalar, LoadError> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(field.from_i64(i)),
            None => Err(input(format!("coefficient {n} is not an integer; use a string like \"1/2\""))),
        },
        Value::String(s) => field.parse(s).map_err(|e| input(e.to_string())),
        other => Err(input(format!("bad coefficient {other}"))),
    }
}

/// A scalar as a JSON integer when it is one, otherwise as an exact string.
pub fn scalar_json(x: &Scalar) -> Value {
    let s = x.to_exact_string();
    match s.parse::<i64>() {
        Ok(i) => Value::from(i),
        Err(_) => Value::String(s),
    }
}

fn index(v: &Value, bound: usize, what: &str) -> Result<usize, LoadError> {
    let i = v
        .as_u64()
        .ok_or_else(|| input(format!("{what}: index {v} is not a nonnegative integer")))? as usize;
    if i >= bound {
        return Err(input(format!("{what}: index {i} out of range (< {bound})")));
    }
    Ok(i)
}

/// Split `[idx.., num, den?]` into indices and a scalar.
fn entry(field: FieldSpec, row: &[Value], arity: usize, bound: usize, what: &str) -> Result<(Vec<usize>, Scalar), LoadError> {
    if row.len() != arity + 1 && row.len() != arity + 2 {
        return Err(input(format!("{what}: entry {row:?} must have {} or {} items", arity + 1, arity + 2)));
    }
    let idx = row[..arity]
        .iter()
        .map(|v| index(v, bound, what))
        .collect::<Result<Vec<_>, _>>()?;
    let num = scalar_of(field, &row[arity])?;
    let x = match row.get(arity + 1) {
        None => num,
        Some(d) => {
            let den = scalar_of(field, d)?;
            let inv = den.inv().ok_or_else(|| input(format!("{what}: zero denominator")))?;
            &num * &inv
        }
    };
    Ok((idx, x))
}

fn entries(field: FieldSpec, rows: &[Vec<Value>], arity: usize, bound: usize, what: &str) -> Result<Vec<(Vec<usize>, Scalar)>, LoadError> {
    rows.iter().map(|r| entry(field, r, arity, bound, what)).collect()
}

fn vector(field: FieldSpec, v: &[Value], n: usize, what: &str) -> Result<Vec<Scalar>, LoadError> {
    if v.len() != n {
        return Err(input(format!("{what} must have {n} entries, found {}", v.len())));
    }
    v.iter().map(|x| scalar_of(field, x)).collect()
}

fn sparse_row(idx: &[usize], x: &Scalar) -> Vec<Value> {
    let mut row: Vec<Value> = idx.iter().map(|&i| Value::from(i)).collect();
    row.push(scalar_json(x));
    row
}

/// Rows of exact coefficients.
pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row_dense(i).iter().map(scalar_json).collect()))
            .collect(),
    )
}

pub fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_json).collect())
}

pub fn coaction_json(m: &Comodule) -> Vec<Vec<Value>> {
    m.coaction_entries()
        .iter()
        .map(|(i, j, a, x)| sparse_row(&[*i, *j, *a], x))
        .collect()
}

pub fn side_name(s: Side) -> &'static str {
    match s {
        Side::Right => "right",
        Side::Left => "left",
    }
}

impl PresentationFile {
    pub fn parse(text: &str) -> Result<Self, LoadError> {
        let f: PresentationFile = serde_json::from_str(text)
            .map_err(|e| input(format!("line {} column {}: {e}", e.line(), e.column())))?;
        if f.schema != SCHEMA {
            return Err(input(format!("unsupported schema {}", f.schema)));
        }
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        crate::json::render(&serde_json::to_value(self).expect("serializable"))
    }

    pub fn load(&self) -> Result<Loaded, LoadError> {
        let field = field_of(&self.field)?;
        let n = self.dim;
        if n == 0 {
            return Err(input("dim must be positive"));
        }
        let delta: Vec<Triple> = entries(field, &self.delta, 3, n, "delta")?
            .into_iter()
            .map(|(i, x)| (i[0], i[1], i[2], x))
            .collect();
        let eps = vector(field, &self.eps, n, "eps")?;
        let c = match Coalgebra::from_triples(field, n, delta.iter().cloned(), eps.clone()) {
            Ok(c) => Arc::new(c),
            Err(Error::Validation { axiom, witness }) => {
                let detail = match (axiom.as_str(), witness.first()) {
                    ("coassociativity", Some(&i)) => Some(coassociativity_defect(field, &delta, i)),
                    ("counit", Some(&i)) => Some(counit_defect(field, &delta, &eps, i)),
                    _ => None,
                };
                return Err(LoadError::Core(Error::Validation { axiom, witness }, detail));
            }
            Err(e) => return Err(e.into()),
        };
        let mut hopf = None;
        let mut coquasi = None;
        if let Some(mult) = &self.mult {
            let mult: Vec<(usize, usize, usize, Scalar)> = entries(field, mult, 3, n, "mult")?
                .into_iter()
                .map(|(i, x)| (i[0], i[1], i[2], x))
                .collect();
            let unit = vector(field, self.unit.as_deref().ok_or_else(|| input("mult requires unit"))?, n, "unit")?;
            match (&self.antipode, &self.omega) {
                (_, Some(omega)) => {
                    let mut w = vec![field.zero(); n * n * n];
                    for (i, x) in entries(field, omega, 3, n, "omega")? {
                        w[(i[0] * n + i[1]) * n + i[2]] = x;
                    }
                    coquasi = Some(CoquasiBialgebra::from_triples(c.clone(), mult, unit, w)?);
                }
                (Some(s), None) => {
                    let t = entries(field, s, 2, n, "antipode")?;
                    let s = Matrix::from_triples(field, n, n, t.into_iter().map(|(i, x)| (i[0], i[1], x)));
                    let h = HopfAlgebra::from_triples(c.clone(), mult, unit, s)?;
                    coquasi = Some(CoquasiBialgebra::from_hopf(&h)?);
                    hopf = Some(h);
                }
                (None, None) => {
                    let mut w = vec![field.zero(); n * n * n];
                    for (k, x) in w.iter_mut().enumerate() {
                        let (a, b, d) = (k / (n * n), (k / n) % n, k % n);
                        *x = &(&c.eps()[a] * &c.eps()[b]) * &c.eps()[d];
                    }
                    coquasi = Some(CoquasiBialgebra::from_triples(c.clone(), mult, unit, w)?);
                }
            }
        } else if self.unit.is_some() || self.antipode.is_some() || self.omega.is_some() {
            return Err(input("unit, antipode and omega require mult"));
        }
        let mut comodules = Vec::new();
        for m in &self.comodules {
            let side = match m.side.as_str() {
                "right" => Side::Right,
                "left" => Side::Left,
                s => return Err(input(format!("comodule {}: side {s:?}", m.name))),
            };
            let what = format!("comodule {}", m.name);
            let mut rho = Vec::new();
            for row in &m.rho {
                let (i, x) = entry(field, row, 3, usize::MAX, &what)?;
                if i[0] >= m.dim || i[1] >= m.dim || i[2] >= n {
                    return Err(input(format!("{what}: entry {row:?} out of range")));
                }
                rho.push((i[0], i[1], i[2], x));
            }
            let cm = Comodule::from_coaction(c.clone(), side, m.dim, rho).map_err(|e| match e {
                Error::Validation { axiom, witness } => LoadError::Core(
                    Error::Validation {
                        axiom: format!("{what}: {axiom}"),
                        witness,
                    },
                    None,
                ),
                other => input(format!("{what}: {other}")),
            })?;
            comodules.push((m.name.clone(), cm));
        }
        Ok(Loaded {
            coalgebra: c,
            hopf,
            coquasi,
            comodules,
        })
    }

    /// The file for a built corpus object, with its simple right comodules
    /// named `S0`, `S1`, ...
    pub fn from_built(b: &Built) -> Result<Self, Error> {
        let c = b.coalgebra();
        let n = c.dim();
        let mut delta = Vec::new();
        for i in 0..n {
            for (t, x) in c.delta(i) {
                delta.push(sparse_row(&[i, t / n, t % n], x));
            }
        }
        let algebra = match b {
            Built::Coalgebra(_) => None,
            Built::Hopf(h) => Some((h.algebra(), h.unit())),
            Built::Coquasi(h) => Some((h.algebra(), h.unit())),
        };
        let mult = algebra.map(|(a, _)| {
            let mut rows = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    for (k, x) in a.basis_product(i, j) {
                        rows.push(sparse_row(&[i, j, *k], x));
                    }
                }
            }
            rows
        });
        let antipode = b.hopf().map(|h| {
            h.antipode()
                .triples()
                .iter()
                .map(|(i, j, x)| sparse_row(&[*i, *j], x))
                .collect()
        });
        let omega = match b {
            Built::Coquasi(h) => Some(
                h.omega()
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| sparse_row(&[k / (n * n), (k / n) % n, k % n], x))
                    .collect(),
            ),
            _ => None,
        };
        let st = Structure::new(c.clone())?;
        let comodules = st
            .simples()
            .iter()
            .enumerate()
            .map(|(i, s)| ComoduleJson {
                name: format!("S{i}"),
                side: "right".into(),
                dim: s.dim(),
                rho: coaction_json(s),
            })
            .collect();
        Ok(PresentationFile {
            schema: SCHEMA,
            field: field_json(c.field()),
            dim: n,
            delta,
            eps: c.eps().iter().map(scalar_json).collect(),
            mult,
            unit: algebra.map(|(_, u)| u.iter().map(scalar_json).collect()),
            antipode,
            omega,
            comodules,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nakayama_core::corpus::{build, standard, CorpusSpec, Family};

    fn rebuilt(l: &Loaded) -> Built {
        match (&l.hopf, &l.coquasi) {
            (Some(h), _) => Built::Hopf(h.clone()),
            (None, Some(q)) => Built::Coquasi(q.clone()),
            _ => Built::Coalgebra(l.coalgebra.clone()),
        }
    }

    #[test]
    fn corpus_round_trips() {
        let mut specs = standard();
        specs.push(CorpusSpec::new(Family::CyclicCoquasi { n: 2, exponent: 1 }));
        specs.push(CorpusSpec::new(Family::Random { seed: 3, dim: 5 }));
        for spec in specs {
            let built = build(&spec).unwrap();
            let file = PresentationFile::from_built(&built).unwrap();
            let text = file.to_json();
            let parsed = PresentationFile::parse(&text).unwrap();
            assert_eq!(parsed, file, "{}", spec.name());
            let loaded = parsed.load().unwrap();
            assert_eq!(loaded.coalgebra.delta_matrix(), built.coalgebra().delta_matrix());
            if let Some(h) = built.hopf() {
                assert_eq!(loaded.hopf.as_ref().unwrap().antipode(), h.antipode());
            }
            assert_eq!(PresentationFile::from_built(&rebuilt(&loaded)).unwrap().to_json(), text);
            assert_eq!(loaded.comodules.len(), Structure::new(built.coalgebra().clone()).unwrap().num_simples());
        }
    }

    #[test]
    fn coefficients_are_exact() {
        let q = FieldSpec::rationals();
        assert_eq!(scalar_json(&q.parse("-3/7").unwrap()), Value::from("-3/7"));
        assert_eq!(scalar_json(&q.from_i64(-4)), Value::from(-4));
        let big = q.parse("123456789012345678901234567890").unwrap();
        assert_eq!(scalar_json(&big), Value::from("123456789012345678901234567890"));
        let row = [json!(0), json!("1/2"), json!(3)];
        let (idx, x) = entry(q, &row, 1, 1, "t").unwrap();
        assert_eq!((idx, x), (vec![0], q.parse("1/6").unwrap()));
        assert!(matches!(entry(q, &[json!(0), json!(1), json!(0)], 1, 1, "t"), Err(LoadError::Input(_))));
        assert!(matches!(entry(q, &[json!(1), json!(1)], 1, 1, "t"), Err(LoadError::Input(_))));
        assert!(matches!(scalar_of(q, &json!(0.5)), Err(LoadError::Input(_))));
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(scalar_json(&f7.from_i64(-1)), Value::from(6));
        assert_eq!(scalar_of(f7, &json!("1/2")).unwrap(), f7.from_i64(4));
    }

    #[test]
    fn counit_defect_lists_bad_coordinates() {
        let q = FieldSpec::rationals();
        let one = q.one();
        let delta = vec![(0, 0, 0, one.clone()), (1, 0, 1, one.clone())];
        let eps = vec![one.clone(), q.zero()];
        let text = json!({ "schema": 1, "field": { "kind": "rationals" }, "dim": 2,
            "delta": [[0, 0, 0, 1], [1, 0, 1, 1]], "eps": [1, 0] });
        let err = PresentationFile::parse(&text.to_string()).unwrap().load().unwrap_err();
        let LoadError::Core(Error::Validation { axiom, witness }, Some(d)) = err else {
            panic!("expected a counit violation");
        };
        assert_eq!((axiom.as_str(), witness), ("counit", vec![1]));
        assert_eq!(d, counit_defect(q, &delta, &eps, 1));
        assert_eq!(d, json!([[1, 1, 0]]));
    }

    #[test]
    fn field_and_schema_errors() {
        assert!(field_of(&FieldJson { kind: "prime".into(), p: Some(8) }).is_err());
        assert!(field_of(&FieldJson { kind: "rationals".into(), p: Some(5) }).is_err());
        let bad = r#"{"schema": 2, "field": {"kind": "rationals"}, "dim": 1, "delta": [[0,0,0,1]], "eps": [1]}"#;
        assert!(matches!(PresentationFile::parse(bad), Err(LoadError::Input(_))));
        let extra = r#"{"schema": 1, "field": {"kind": "rationals"}, "dim": 1, "delta": [[0,0,0,1]], "eps": [1], "x": 0}"#;
        assert!(matches!(PresentationFile::parse(extra), Err(LoadError::Input(_))));
    }
}

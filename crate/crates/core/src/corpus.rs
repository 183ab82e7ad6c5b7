//! Deterministic example families and a seeded random coalgebra generator.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::coalg::Coalgebra;
use crate::coquasi::CoquasiBialgebra;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::hopf::HopfAlgebra;
use crate::linalg::{sparsify, unit_vec, zero_vec, Matrix, SparseVec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Matrix { n: usize },
    Group { group: Group },
    FunctionHopf { group: Group },
    Sweedler,
    Taft { n: usize, q: u64 },
    SerialQf { dims: Vec<usize> },
    CyclicCoquasi { n: usize, exponent: usize },
    Random { seed: u64, dim: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    Cyclic(usize),
    Symmetric(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub family: Family,
    /// `None` for the rationals.
    pub p: Option<u64>,
}

#[derive(Clone, Debug)]
pub enum Built {
    Coalgebra(Arc<Coalgebra>),
    Hopf(HopfAlgebra),
    Coquasi(CoquasiBialgebra),
}

impl Built {
    pub fn coalgebra(&self) -> &Arc<Coalgebra> {
        match self {
            Built::Coalgebra(c) => c,
            Built::Hopf(h) => h.coalgebra(),
            Built::Coquasi(h) => h.coalgebra(),
        }
    }

    pub fn hopf(&self) -> Option<&HopfAlgebra> {
        match self {
            Built::Hopf(h) => Some(h),
            _ => None,
        }
    }
}

fn invalid(msg: &str) -> Error {
    Error::InvalidSpec(msg.into())
}

impl CorpusSpec {
    pub fn new(family: Family) -> Self {
        CorpusSpec { family, p: None }
    }

    pub fn over(family: Family, p: u64) -> Self {
        CorpusSpec { family, p: Some(p) }
    }

    pub fn field(&self) -> Result<FieldSpec> {
        match self.p {
            None => Ok(FieldSpec::rationals()),
            Some(p) => FieldSpec::prime(p).map_err(|_| invalid("p must be prime")),
        }
    }

    /// Parse `family[:key=value,...]`, e.g. `taft:n=3,p=7,q=2` or
    /// `serial-qf:dims=1-2`.
    pub fn parse(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut kv: Vec<(&str, &str)> = Vec::new();
        for part in rest.split(',').filter(|x| !x.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| invalid(part))?;
            kv.push((k.trim(), v.trim()));
        }
        let get = |k: &str| kv.iter().find(|(key, _)| *key == k).map(|(_, v)| *v);
        let num = |k: &str| -> Result<Option<u64>> {
            get(k).map(|v| v.parse::<u64>().map_err(|_| invalid(k))).transpose()
        };
        let need = |k: &str| -> Result<usize> { num(k)?.map(|v| v as usize).ok_or_else(|| invalid(k)) };
        let group = || -> Result<Group> {
            let n = need("n")?;
            match get("group").unwrap_or("cyclic") {
                "cyclic" => Ok(Group::Cyclic(n)),
                "symmetric" => Ok(Group::Symmetric(n)),
                g => Err(invalid(g)),
            }
        };
        let family = match name {
            "matrix" => Family::Matrix { n: need("n")? },
            "group" => Family::Group { group: group()? },
            "function-hopf" => Family::FunctionHopf { group: group()? },
            "sweedler" => Family::Sweedler,
            "taft" => Family::Taft {
                n: need("n")?,
                q: num("q")?.ok_or_else(|| invalid("q"))?,
            },
            "serial-qf" => {
                let dims = get("dims")
                    .ok_or_else(|| invalid("dims"))?
                    .split('-')
                    .map(|d| d.parse::<usize>().map_err(|_| invalid(d)))
                    .collect::<Result<Vec<_>>>()?;
                Family::SerialQf { dims }
            }
            "cyclic-coquasi" => Family::CyclicCoquasi {
                n: need("n")?,
                exponent: num("e")?.unwrap_or(1) as usize,
            },
            "random" => Family::Random {
                seed: num("seed")?.unwrap_or(0),
                dim: need("dim")?,
            },
            other => return Err(invalid(other)),
        };
        Ok(CorpusSpec { family, p: num("p")? })
    }

    /// Canonical text form, inverse to [`CorpusSpec::parse`].
    pub fn name(&self) -> String {
        let group = |g: &Group| match g {
            Group::Cyclic(n) => format!("n={n}"),
            Group::Symmetric(n) => format!("group=symmetric,n={n}"),
        };
        let mut s = match &self.family {
            Family::Matrix { n } => format!("matrix:n={n}"),
            Family::Group { group: g } => format!("group:{}", group(g)),
            Family::FunctionHopf { group: g } => format!("function-hopf:{}", group(g)),
            Family::Sweedler => "sweedler".to_string(),
            Family::Taft { n, q } => format!("taft:n={n},q={q}"),
            Family::SerialQf { dims } => {
                let d: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
                format!("serial-qf:dims={}", d.join("-"))
            }
            Family::CyclicCoquasi { n, exponent } => format!("cyclic-coquasi:n={n},e={exponent}"),
            Family::Random { seed, dim } => format!("random:seed={seed},dim={dim}"),
        };
        if let Some(p) = self.p {
            s.push_str(if s.contains(':') { "," } else { ":" });
            s.push_str(&format!("p={p}"));
        }
        s
    }
}

pub fn build(spec: &CorpusSpec) -> Result<Built> {
    let field = spec.field()?;
    Ok(match &spec.family {
        Family::Matrix { n } => Built::Coalgebra(Arc::new(matrix(field, *n)?)),
        Family::Group { group } => Built::Hopf(group_algebra(field, *group)?),
        Family::FunctionHopf { group } => Built::Hopf(function_hopf(field, *group)?),
        Family::Sweedler => Built::Hopf(sweedler(field)?),
        Family::Taft { n, q } => Built::Hopf(taft(field, *n, &field.from_i64(*q as i64))?),
        Family::SerialQf { dims } => Built::Coalgebra(Arc::new(serial_qf(field, dims)?)),
        Family::CyclicCoquasi { n, exponent } => Built::Coquasi(cyclic_coquasi(field, *n, *exponent)?),
        Family::Random { seed, dim } => {
            if spec.p.is_some() {
                return Err(invalid("random coalgebras are built over the rationals"));
            }
            Built::Coalgebra(Arc::new(random_coalgebra(*seed, *dim)?))
        }
    })
}

/// The specs every acceptance check runs over.
pub fn standard() -> Vec<CorpusSpec> {
    let mut v = Vec::new();
    for n in 1..=3 {
        v.push(CorpusSpec::new(Family::Matrix { n }));
    }
    for n in 1..=5 {
        v.push(CorpusSpec::new(Family::Group { group: Group::Cyclic(n) }));
    }
    v.push(CorpusSpec::new(Family::Sweedler));
    v.push(CorpusSpec::over(Family::Taft { n: 2, q: 2 }, 3));
    v.push(CorpusSpec::over(Family::Taft { n: 3, q: 2 }, 7));
    v.push(CorpusSpec::new(Family::SerialQf { dims: vec![1, 2] }));
    v
}

/// `M^c_n`: `Δ(e_ij) = Σ_k e_ik ⊗ e_kj`, `ε(e_ij) = δ_ij`.
pub fn matrix(field: FieldSpec, n: usize) -> Result<Coalgebra> {
    if n == 0 {
        return Err(invalid("matrix coalgebra needs n >= 1"));
    }
    let dim = n * n;
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                triples.push((i * n + j, i * n + k, k * n + j, field.one()));
            }
        }
    }
    let eps = (0..dim).map(|c| if c / n == c % n { field.one() } else { field.zero() }).collect();
    Coalgebra::from_triples(field, dim, triples, eps)
}

struct GroupTable {
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q: Vec<usize> = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn group_table(g: Group) -> Result<GroupTable> {
    match g {
        Group::Cyclic(n) => {
            if n == 0 {
                return Err(invalid("group order must be positive"));
            }
            Ok(GroupTable {
                mul: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
                inv: (0..n).map(|a| (n - a) % n).collect(),
            })
        }
        Group::Symmetric(n) => {
            if n == 0 || n > 4 {
                return Err(invalid("symmetric group degree must be in 1..=4"));
            }
            let perms = permutations(n);
            let pos = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
            let mul = perms
                .iter()
                .map(|a| perms.iter().map(|b| pos(&b.iter().map(|&i| a[i]).collect())).collect())
                .collect();
            let inv = perms
                .iter()
                .map(|a| {
                    let mut r = vec![0; n];
                    for (i, &x) in a.iter().enumerate() {
                        r[x] = i;
                    }
                    pos(&r)
                })
                .collect();
            Ok(GroupTable { mul, inv })
        }
    }
}

fn table_from_fn(field: FieldSpec, n: usize, f: impl Fn(usize, usize) -> Vec<(usize, Scalar)>) -> Vec<SparseVec> {
    let mut out = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let mut v = zero_vec(field, n);
            for (k, x) in f(a, b) {
                v[k] = &v[k] + &x;
            }
            out.push(sparsify(&v));
        }
    }
    out
}

/// `kG` with grouplike basis.
pub fn group_algebra(field: FieldSpec, g: Group) -> Result<HopfAlgebra> {
    let t = group_table(g)?;
    let n = t.inv.len();
    let c = Coalgebra::from_triples(
        field,
        n,
        (0..n).map(|a| (a, a, a, field.one())),
        vec![field.one(); n],
    )?;
    let mult = table_from_fn(field, n, |a, b| vec![(t.mul[a][b], field.one())]);
    let s = Matrix::from_triples(field, n, n, (0..n).map(|a| (t.inv[a], a, field.one())));
    HopfAlgebra::new(Arc::new(c), mult, unit_vec(field, n, 0), s)
}

/// `k^G` with basis `δ_g`.
pub fn function_hopf(field: FieldSpec, g: Group) -> Result<HopfAlgebra> {
    let t = group_table(g)?;
    let n = t.inv.len();
    let mut triples = Vec::new();
    for a in 0..n {
        for b in 0..n {
            triples.push((t.mul[a][b], a, b, field.one()));
        }
    }
    let c = Coalgebra::from_triples(field, n, triples, unit_vec(field, n, 0))?;
    let mult = table_from_fn(field, n, |a, b| if a == b { vec![(a, field.one())] } else { Vec::new() });
    let s = Matrix::from_triples(field, n, n, (0..n).map(|a| (t.inv[a], a, field.one())));
    HopfAlgebra::new(Arc::new(c), mult, vec![field.one(); n], s)
}

/// Sweedler's four-dimensional Hopf algebra: the Taft algebra with `n = 2`, `q = -1`.
pub fn sweedler(field: FieldSpec) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(invalid("sweedler needs characteristic other than 2"));
    }
    taft(field, 2, &field.from_i64(-1))
}

/// Tensor product multiplication on `H ⊗ H` for dense vectors of length `n²`.
fn tensor_mul(a: &Algebra, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let field = a.field();
    let n = a.dim();
    let mut out = zero_vec(field, n * n);
    for (i, x) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in v.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            let xy = x * y;
            for (p, s) in a.basis_product(i / n, j / n) {
                for (q, t) in a.basis_product(i % n, j % n) {
                    out[p * n + q] = &out[p * n + q] + &(&xy * &(s * t));
                }
            }
        }
    }
    out
}

/// The Taft algebra `T_{n²}`: basis `g^i x^j` at index `i n + j`, with
/// `g^n = 1`, `x^n = 0`, `x g = q g x`, `Δ(g) = g ⊗ g`, `Δ(x) = x ⊗ 1 + g ⊗ x`.
pub fn taft(field: FieldSpec, n: usize, q: &Scalar) -> Result<HopfAlgebra> {
    if n < 2 {
        return Err(invalid("taft needs n >= 2"));
    }
    let one = field.one();
    if q.pow(n as u64) != one || (1..n).any(|k| q.pow(k as u64) == one) {
        return Err(invalid("q must be a primitive n-th root of unity"));
    }
    let dim = n * n;
    let idx = |i: usize, j: usize| (i % n) * n + j;
    let mult = table_from_fn(field, dim, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j + l >= n {
            Vec::new()
        } else {
            vec![(idx(i + k, j + l), q.pow((j * k) as u64))]
        }
    });
    let alg = Algebra::new(field, dim, mult.clone(), unit_vec(field, dim, 0));
    let g = unit_vec(field, dim, idx(1, 0));
    let x = unit_vec(field, dim, idx(0, 1));
    let e = |v: usize| unit_vec(field, dim, v);
    let tensor = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
        let mut t = zero_vec(field, dim * dim);
        for (i, a) in u.iter().enumerate() {
            for (j, b) in v.iter().enumerate() {
                t[i * dim + j] = a * b;
            }
        }
        t
    };
    let dg = tensor(&g, &g);
    let mut dx = tensor(&x, &e(0));
    let gx = tensor(&g, &x);
    for (k, v) in gx.iter().enumerate() {
        dx[k] = &dx[k] + v;
    }
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut d = tensor(&e(0), &e(0));
            for _ in 0..i {
                d = tensor_mul(&alg, &d, &dg);
            }
            for _ in 0..j {
                d = tensor_mul(&alg, &d, &dx);
            }
            for (t, v) in d.into_iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                triples.push((idx(i, j), t / dim, t % dim, v));
            }
        }
    }
    let eps = (0..dim).map(|a| if a % n == 0 { one.clone() } else { field.zero() }).collect();
    let c = Coalgebra::from_triples(field, dim, triples, eps)?;
    let sg = unit_vec(field, dim, idx(n - 1, 0));
    let sx: Vec<Scalar> = alg.mul(&sg, &x).iter().map(|v| -v).collect();
    let cols: Vec<Vec<Scalar>> = (0..dim)
        .map(|a| {
            let (i, j) = (a / n, a % n);
            let mut v = e(0);
            for _ in 0..j {
                v = alg.mul(&v, &sx);
            }
            for _ in 0..i {
                v = alg.mul(&v, &sg);
            }
            v
        })
        .collect();
    let s = Matrix::from_columns(field, dim, &cols);
    HopfAlgebra::new(Arc::new(c), mult, unit_vec(field, dim, 0), s)
}

/// The coalgebra dual to a finite-dimensional algebra: `Δ(a^k) = Σ c^k_{ij} a^i ⊗ a^j`
/// where `a_i a_j = Σ_k c^k_{ij} a_k`.
pub fn dual_of_algebra(a: &Algebra) -> Result<Coalgebra> {
    let n = a.dim();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, x) in a.basis_product(i, j) {
                triples.push((*k, i, j, x.clone()));
            }
        }
    }
    Coalgebra::from_triples(a.field(), n, triples, a.unit().to_vec())
}

/// The dual of a basic-free self-injective Nakayama algebra with radical
/// square zero whose simples have the given dimensions, arranged cyclically.
/// Its dual algebra consists of block matrices over `k[t]/t²` with constant
/// diagonal blocks `M_{d_i}(k)` and blocks `t·M_{d_{i+1} × d_i}(k)`.
pub fn serial_qf(field: FieldSpec, dims: &[usize]) -> Result<Coalgebra> {
    if dims.len() < 2 || dims.contains(&0) {
        return Err(invalid("serial-qf needs at least two positive block sizes"));
    }
    if dims.iter().all(|&d| d == dims[0]) {
        return Err(invalid("serial-qf needs two distinct block sizes"));
    }
    let r = dims.len();
    let offsets: Vec<usize> = dims
        .iter()
        .scan(0, |acc, &d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    // (t-degree, row, column)
    let mut basis: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..r {
        for p in 0..dims[i] {
            for q in 0..dims[i] {
                basis.push((0, offsets[i] + p, offsets[i] + q));
            }
        }
    }
    for i in 0..r {
        let j = (i + 1) % r;
        for p in 0..dims[j] {
            for q in 0..dims[i] {
                basis.push((1, offsets[j] + p, offsets[i] + q));
            }
        }
    }
    let n = basis.len();
    let find = |e: (usize, usize, usize)| basis.iter().position(|&b| b == e);
    let mut table = Vec::with_capacity(n * n);
    for a in &basis {
        for b in &basis {
            let mut v = zero_vec(field, n);
            if a.2 == b.1 && a.0 + b.0 <= 1 {
                let k = find((a.0 + b.0, a.1, b.2)).ok_or_else(|| invalid("serial-qf closure"))?;
                v[k] = field.one();
            }
            table.push(sparsify(&v));
        }
    }
    let mut unit = zero_vec(field, n);
    for (k, b) in basis.iter().enumerate() {
        if b.0 == 0 && b.1 == b.2 {
            unit[k] = field.one();
        }
    }
    let alg = Algebra::new(field, n, table, unit);
    alg.check()?;
    dual_of_algebra(&alg)
}

/// The path subcoalgebra spanned by a subpath-closed set of paths in a random
/// quiver, i.e. the dual of a random monomial quotient of a path algebra.
pub fn random_coalgebra(seed: u64, dim: usize) -> Result<Coalgebra> {
    if dim == 0 || dim > 8 {
        return Err(invalid("random coalgebra dimension must be in 1..=8"));
    }
    let field = FieldSpec::rationals();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertices = rng.gen_range(1..=dim.min(3));
    // arrows as (source, target)
    let mut arrows: Vec<(usize, usize)> = Vec::new();
    // paths: (source, arrows); vertices have no arrows
    let mut paths: Vec<(usize, Vec<usize>)> = (0..vertices).map(|v| (v, Vec::new())).collect();
    let end = |arrows: &[(usize, usize)], p: &(usize, Vec<usize>)| p.1.last().map_or(p.0, |&a| arrows[a].1);
    while paths.len() < dim {
        let mut candidates: Vec<(usize, Vec<usize>)> = Vec::new();
        for p in paths.iter().filter(|p| !p.1.is_empty()) {
            for (a, arrow) in arrows.iter().enumerate() {
                if arrow.0 != end(&arrows, p) {
                    continue;
                }
                let mut q = p.1.clone();
                q.push(a);
                let suffix = q[1..].to_vec();
                let suffix_src = arrows[suffix[0]].0;
                let closed = paths.iter().any(|x| x.0 == suffix_src && x.1 == suffix);
                if closed && !paths.iter().any(|x| x.0 == p.0 && x.1 == q) {
                    candidates.push((p.0, q));
                }
            }
        }
        if candidates.is_empty() || rng.gen_bool(0.5) {
            let s = rng.gen_range(0..vertices);
            let t = rng.gen_range(0..vertices);
            arrows.push((s, t));
            paths.push((s, vec![arrows.len() - 1]));
        } else {
            let k = rng.gen_range(0..candidates.len());
            paths.push(candidates.swap_remove(k));
        }
    }
    let pos = |src: usize, arr: &[usize]| paths.iter().position(|x| x.0 == src && x.1 == arr).unwrap();
    let mut triples = Vec::new();
    for (c, (src, arr)) in paths.iter().enumerate() {
        let k = arr.len();
        for i in 0..=k {
            let left = pos(*src, &arr[..i]);
            let rsrc = if i == 0 { *src } else { arrows[arr[i - 1]].1 };
            let right = pos(rsrc, &arr[i..]);
            triples.push((c, left, right, field.one()));
        }
    }
    let eps = paths
        .iter()
        .map(|p| if p.1.is_empty() { field.one() } else { field.zero() })
        .collect();
    Coalgebra::from_triples(field, dim, triples, eps)
}

/// An element of exact multiplicative order `n`.
fn root_of_unity(field: FieldSpec, n: usize) -> Result<Scalar> {
    if n == 1 {
        return Ok(field.one());
    }
    let one = field.one();
    let is_primitive = |z: &Scalar| z.pow(n as u64) == one && (1..n).all(|k| z.pow(k as u64) != one);
    match field.order() {
        None => {
            let z = field.from_i64(-1);
            if n == 2 {
                Ok(z)
            } else {
                Err(invalid("the rationals only contain roots of unity of order at most 2"))
            }
        }
        Some(p) => (2..p)
            .map(|v| field.from_i64(v as i64))
            .find(is_primitive)
            .ok_or_else(|| invalid("no primitive root of unity of this order")),
    }
}

/// `kZ_n` with associator `ω(g^a, g^b, g^c) = ζ^{e a ⌊(b + c) / n⌋}`.
pub fn cyclic_coquasi(field: FieldSpec, n: usize, exponent: usize) -> Result<CoquasiBialgebra> {
    let h = group_algebra(field, Group::Cyclic(n))?;
    let zeta = root_of_unity(field, n)?;
    let mut omega = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let carry = (b + c) / n;
                omega.push(zeta.pow((exponent * a * carry) as u64));
            }
        }
    }
    let table = (0..n * n).map(|k| h.algebra().basis_product(k / n, k % n).clone()).collect();
    CoquasiBialgebra::new(h.coalgebra().clone(), table, h.unit().to_vec(), omega)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comod::Structure;

    #[test]
    fn spec_names_roundtrip() {
        let mut specs = standard();
        specs.push(CorpusSpec::new(Family::Random { seed: 3, dim: 5 }));
        specs.push(CorpusSpec::new(Family::CyclicCoquasi { n: 2, exponent: 1 }));
        specs.push(CorpusSpec::new(Family::FunctionHopf { group: Group::Symmetric(3) }));
        for s in specs {
            assert_eq!(CorpusSpec::parse(&s.name()).unwrap(), s);
        }
        assert!(CorpusSpec::parse("nonsense").is_err());
        assert!(CorpusSpec::parse("taft:n=3").is_err());
    }

    #[test]
    fn sweedler_antipode_has_order_four() {
        let h = sweedler(FieldSpec::rationals()).unwrap();
        assert_eq!(h.dim(), 4);
        assert_eq!(h.antipode().order(8), Some(4));
    }

    #[test]
    fn taft_nine_over_f7() {
        let f = FieldSpec::prime(7).unwrap();
        let h = taft(f, 3, &f.from_i64(2)).unwrap();
        assert_eq!(h.dim(), 9);
        assert_eq!(h.antipode().order(12), Some(6));
        assert!(taft(f, 3, &f.from_i64(3)).is_err());
        assert!(taft(FieldSpec::rationals(), 3, &FieldSpec::rationals().one()).is_err());
    }

    #[test]
    fn serial_qf_preconditions() {
        let q = FieldSpec::rationals();
        assert_eq!(serial_qf(q, &[1, 2]).unwrap().dim(), 9);
        assert!(matches!(serial_qf(q, &[1, 1]), Err(Error::InvalidSpec(_))));
        assert!(serial_qf(q, &[2]).is_err());
    }

    #[test]
    fn random_is_deterministic_and_valid() {
        for seed in 0..20 {
            for dim in 1..=6 {
                let a = random_coalgebra(seed, dim).unwrap();
                let b = random_coalgebra(seed, dim).unwrap();
                assert_eq!(a.dim(), dim);
                assert_eq!(a.delta_matrix(), b.delta_matrix());
            }
        }
        let one = random_coalgebra(11, 1).unwrap();
        assert_eq!(one.eps(), &[FieldSpec::rationals().one()][..]);
        assert!(random_coalgebra(0, 9).is_err());
    }

    #[test]
    fn function_algebra_on_s3_is_cosemisimple_with_simples_of_dim_one_and_two() {
        let h = function_hopf(FieldSpec::rationals(), Group::Symmetric(3)).unwrap();
        let st = Structure::new(h.coalgebra().clone()).unwrap();
        let mut dims = st.simple_dims();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 2]);
        assert!(st.is_cosemisimple());
    }

    #[test]
    fn cyclic_coquasi_needs_roots_of_unity() {
        assert!(cyclic_coquasi(FieldSpec::rationals(), 3, 1).is_err());
        assert!(cyclic_coquasi(FieldSpec::prime(7).unwrap(), 3, 1).is_ok());
    }
}

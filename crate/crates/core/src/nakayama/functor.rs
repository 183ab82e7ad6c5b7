//! Endofunctors of the right comodule category and a solver for natural
//! isomorphisms between two of them on a finite set of objects.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::comod::Comodule;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::search::{find_invertible, Search};
use crate::linalg::Matrix;

/// A functor applied to one object, keeping whatever data its action on
/// morphisms needs.
#[derive(Clone, Debug)]
pub struct Applied {
    pub input: Comodule,
    pub object: Comodule,
    pub maps: Vec<Matrix>,
    pub inner: Vec<Applied>,
}

impl Applied {
    pub fn plain(input: &Comodule, object: Comodule) -> Self {
        Applied {
            input: input.clone(),
            object,
            maps: Vec::new(),
            inner: Vec::new(),
        }
    }
}

pub trait Functor {
    fn name(&self) -> String;
    fn apply(&self, m: &Comodule) -> Result<Applied>;
    /// `F(f): F(src) -> F(tgt)` for a morphism `f: src.input -> tgt.input`.
    fn map(&self, src: &Applied, tgt: &Applied, f: &Matrix) -> Result<Matrix>;
}

pub struct Identity;

impl Functor for Identity {
    fn name(&self) -> String {
        "id".into()
    }

    fn apply(&self, m: &Comodule) -> Result<Applied> {
        Ok(Applied::plain(m, m.clone()))
    }

    fn map(&self, _: &Applied, _: &Applied, f: &Matrix) -> Result<Matrix> {
        Ok(f.clone())
    }
}

/// Twist by a coalgebra automorphism.
pub struct Twist(pub Matrix);

impl Functor for Twist {
    fn name(&self) -> String {
        "twist".into()
    }

    fn apply(&self, m: &Comodule) -> Result<Applied> {
        Ok(Applied::plain(m, m.twist(&self.0)))
    }

    fn map(&self, _: &Applied, _: &Applied, f: &Matrix) -> Result<Matrix> {
        Ok(f.clone())
    }
}

/// Apply the functors from first to last.
pub struct Compose(pub Vec<Box<dyn Functor>>);

impl Functor for Compose {
    fn name(&self) -> String {
        let names: Vec<String> = self.0.iter().rev().map(|f| f.name()).collect();
        names.join(" . ")
    }

    fn apply(&self, m: &Comodule) -> Result<Applied> {
        let mut inner = Vec::with_capacity(self.0.len());
        let mut cur = m.clone();
        for f in &self.0 {
            let a = f.apply(&cur)?;
            cur = a.object.clone();
            inner.push(a);
        }
        Ok(Applied {
            input: m.clone(),
            object: cur,
            maps: Vec::new(),
            inner,
        })
    }

    fn map(&self, src: &Applied, tgt: &Applied, f: &Matrix) -> Result<Matrix> {
        let mut g = f.clone();
        for (k, func) in self.0.iter().enumerate() {
            g = func.map(&src.inner[k], &tgt.inner[k], &g)?;
        }
        Ok(g)
    }
}

/// A natural isomorphism presented on finitely many objects.
#[derive(Clone, Debug)]
pub struct NaturalIsoWitness {
    pub objects: Vec<Comodule>,
    pub sources: Vec<Comodule>,
    pub targets: Vec<Comodule>,
    pub components: Vec<Matrix>,
    /// `(i, j, f, F(f), G(f))` for generator morphisms `f: X_i -> X_j`.
    pub generators: Vec<(usize, usize, Matrix, Matrix, Matrix)>,
}

impl NaturalIsoWitness {
    /// Re-check every component and every naturality square.
    pub fn verify(&self) -> bool {
        let comps = self.components.iter().enumerate().all(|(i, eta)| {
            self.sources[i].is_morphism(eta, &self.targets[i]) && eta.is_invertible()
        });
        comps
            && self.generators.iter().all(|(i, j, _, ff, gf)| {
                gf.mul(&self.components[*i]) == self.components[*j].mul(ff)
            })
    }
}

/// Search for a natural isomorphism `F => G` on the given objects, with
/// naturality imposed on bases of all Hom spaces between them.
pub fn natural_iso(
    f: &dyn Functor,
    g: &dyn Functor,
    objects: &[Comodule],
    seed: u64,
) -> Result<Search<NaturalIsoWitness>> {
    let fa: Vec<Applied> = objects.iter().map(|x| f.apply(x)).collect::<Result<_>>()?;
    let ga: Vec<Applied> = objects.iter().map(|x| g.apply(x)).collect::<Result<_>>()?;
    let mut homs: Vec<Vec<Matrix>> = Vec::with_capacity(objects.len());
    for (a, b) in fa.iter().zip(&ga) {
        if a.object.dim() != b.object.dim() {
            return Ok(Search::Absent);
        }
        let h = a.object.hom(&b.object);
        if h.is_empty() && a.object.dim() > 0 {
            return Ok(Search::Absent);
        }
        homs.push(h);
    }
    let offsets: Vec<usize> = homs
        .iter()
        .scan(0, |acc, h| {
            let o = *acc;
            *acc += h.len();
            Some(o)
        })
        .collect();
    let nvars: usize = homs.iter().map(Vec::len).sum();
    let field = objects
        .first()
        .map(Comodule::field)
        .ok_or_else(|| Error::dim("natural isomorphism on no objects"))?;

    let mut generators = Vec::new();
    let mut triples: Vec<(usize, usize, Scalar)> = Vec::new();
    let mut row0 = 0usize;
    for i in 0..objects.len() {
        for j in 0..objects.len() {
            for h in objects[i].hom(&objects[j]) {
                let ff = f.map(&fa[i], &fa[j], &h)?;
                let gf = g.map(&ga[i], &ga[j], &h)?;
                let (r, c) = (gf.rows(), ff.cols());
                // G(h) η_i - η_j F(h) = 0
                for (k, hk) in homs[i].iter().enumerate() {
                    for (a, b, x) in gf.mul(hk).triples() {
                        triples.push((row0 + a * c + b, offsets[i] + k, x));
                    }
                }
                for (k, hk) in homs[j].iter().enumerate() {
                    for (a, b, x) in hk.mul(&ff).triples() {
                        triples.push((row0 + a * c + b, offsets[j] + k, -x));
                    }
                }
                row0 += r * c;
                generators.push((i, j, h, ff, gf));
            }
        }
    }
    let sys = Matrix::from_triples(field, row0, nvars, triples);
    let sols = sys.kernel().basis();
    if sols.is_empty() {
        return Ok(if objects.iter().zip(&fa).all(|(_, a)| a.object.dim() == 0) {
            Search::Found(NaturalIsoWitness {
                objects: objects.to_vec(),
                sources: fa.iter().map(|a| a.object.clone()).collect(),
                targets: ga.iter().map(|a| a.object.clone()).collect(),
                components: fa.iter().map(|_| Matrix::zeros(field, 0, 0)).collect(),
                generators,
            })
        } else {
            Search::Absent
        });
    }
    let component = |sol: &[Scalar], i: usize| -> Matrix {
        let terms: Vec<(&Scalar, &Matrix)> = homs[i]
            .iter()
            .enumerate()
            .map(|(k, h)| (&sol[offsets[i] + k], h))
            .collect();
        let d = fa[i].object.dim();
        Matrix::combination(field, d, d, &terms)
    };
    let family: Vec<Vec<Matrix>> = sols
        .iter()
        .map(|s| (0..objects.len()).map(|i| component(s, i)).collect())
        .collect();
    let found = find_invertible(field, &family, seed);
    Ok(found.map(|c| {
        let mut sol = vec![field.zero(); nvars];
        for (ci, s) in c.iter().zip(&sols) {
            crate::linalg::add_scaled(&mut sol, ci, s);
        }
        NaturalIsoWitness {
            objects: objects.to_vec(),
            sources: fa.iter().map(|a| a.object.clone()).collect(),
            targets: ga.iter().map(|a| a.object.clone()).collect(),
            components: (0..objects.len()).map(|i| component(&sol, i)).collect(),
            generators,
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comod::Structure;
    use crate::corpus;
    use crate::field::FieldSpec;
    use crate::linalg::Matrix;
    use crate::nakayama::NuRight;

    fn sweedler_objects() -> Vec<Comodule> {
        let h = corpus::sweedler(FieldSpec::rationals()).unwrap();
        Structure::new(h.coalgebra().clone()).unwrap().indecomposables(4).unwrap()
    }

    #[test]
    fn identity_twist_is_naturally_identity() {
        let objs = sweedler_objects();
        let id = Matrix::identity(FieldSpec::rationals(), 4);
        let w = natural_iso(&Twist(id), &Identity, &objs, 0).unwrap().found().unwrap();
        assert!(w.verify());
        assert_eq!(w.components.len(), objs.len());
    }

    #[test]
    fn nakayama_of_sweedler_is_not_identity() {
        let objs = sweedler_objects();
        assert!(matches!(natural_iso(&NuRight, &Identity, &objs, 0).unwrap(), Search::Absent));
    }

    #[test]
    fn compose_applies_in_order() {
        let objs = sweedler_objects();
        let composite = Compose(vec![Box::new(Identity), Box::new(NuRight)]);
        let w = natural_iso(&composite, &NuRight, &objs, 0).unwrap().found().unwrap();
        assert!(w.verify());
    }

    #[test]
    fn tampered_witness_fails_verification() {
        let objs = sweedler_objects();
        let mut w = natural_iso(&Identity, &Identity, &objs, 0).unwrap().found().unwrap();
        let i = objs.iter().position(|o| o.dim() == 2).unwrap();
        let f = FieldSpec::rationals();
        w.components[i] = Matrix::from_i64(f, &[&[1, 0], &[0, 2]]);
        assert!(!w.verify());
    }
}

//! Search a linear family of (block) matrices for an invertible member.
//!
//! Random sampling finds invertible members quickly; absence is certified
//! either by a symbolic determinant that vanishes identically or, over a
//! small prime field, by exhausting every coefficient vector.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::mvpoly::symbolic_det;
use super::Matrix;
use crate::field::{FieldSpec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    /// Certified: no member of the family is invertible.
    Absent,
    /// The budget ran out before a certificate was found.
    Inconclusive,
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn map<U, F: FnOnce(T) -> U>(self, f: F) -> Search<U> {
        match self {
            Search::Found(t) => Search::Found(f(t)),
            Search::Absent => Search::Absent,
            Search::Inconclusive => Search::Inconclusive,
        }
    }
}

const SAMPLES: usize = 64;
const BUDGET: usize = 200_000;

/// `family[k]` lists the blocks of the `k`-th generator; all generators have
/// the same block shapes. Returns coefficients `c` such that every block of
/// `sum c_k family[k]` is invertible.
pub fn find_invertible(field: FieldSpec, family: &[Vec<Matrix>], seed: u64) -> Search<Vec<Scalar>> {
    let t = family.len();
    let Some(first) = family.first() else {
        return Search::Absent;
    };
    if first.iter().any(|b| !b.is_square()) {
        return Search::Absent;
    }
    if first.iter().all(|b| b.rows() == 0) {
        let mut c = vec![field.zero(); t];
        c[0] = field.one();
        return Search::Found(c);
    }
    let nblocks = first.len();
    let combine = |c: &[Scalar]| -> bool {
        (0..nblocks).all(|b| {
            let terms: Vec<(&Scalar, &Matrix)> =
                c.iter().zip(family.iter().map(|g| &g[b])).collect();
            let m = Matrix::combination(field, first[b].rows(), first[b].cols(), &terms);
            m.is_invertible()
        })
    };
    for k in 0..t {
        let mut c = vec![field.zero(); t];
        c[k] = field.one();
        if combine(&c) {
            return Search::Found(c);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLES {
        let c: Vec<Scalar> = (0..t).map(|_| random_scalar(field, &mut rng)).collect();
        if combine(&c) {
            return Search::Found(c);
        }
    }
    // small prime fields: exhaust the whole family when it is affordable
    if let Some(p) = field.order() {
        if p.checked_pow(t as u32).is_some_and(|n| n <= BUDGET as u64) {
            let mut c = vec![0u64; t];
            loop {
                let v: Vec<Scalar> = c.iter().map(|&x| field.from_i64(x as i64)).collect();
                if combine(&v) {
                    return Search::Found(v);
                }
                if !advance(&mut c, p) {
                    return Search::Absent;
                }
            }
        }
    }
    let mut dets = Vec::new();
    for b in 0..nblocks {
        if first[b].rows() == 0 {
            continue;
        }
        let mats: Vec<Matrix> = family.iter().map(|g| g[b].clone()).collect();
        match symbolic_det(field, &mats) {
            None => return Search::Inconclusive,
            Some(d) if d.is_zero() => return Search::Absent,
            Some(d) => dets.push(d),
        }
    }
    // a grid with more points per axis than the degree in that variable
    // must contain a non-root of the product
    let bound: Vec<u64> = (0..t)
        .map(|k| dets.iter().map(|d| d.degree_in(k) as u64).sum::<u64>() + 1)
        .collect();
    let limit: Vec<u64> = match field.order() {
        Some(p) => bound.iter().map(|&b| b.min(p)).collect(),
        None => bound,
    };
    let mut c = vec![0u64; t];
    for _ in 0..BUDGET {
        let v: Vec<Scalar> = c.iter().map(|&x| field.from_i64(x as i64)).collect();
        if dets.iter().all(|d| !d.eval(&v).is_zero()) {
            return Search::Found(v);
        }
        if !advance_mixed(&mut c, &limit) {
            // a full grid cannot be exhausted; a truncated one proves nothing
            return Search::Inconclusive;
        }
    }
    Search::Inconclusive
}

fn advance(c: &mut [u64], p: u64) -> bool {
    for x in c.iter_mut() {
        *x += 1;
        if *x < p {
            return true;
        }
        *x = 0;
    }
    false
}

fn advance_mixed(c: &mut [u64], limit: &[u64]) -> bool {
    for (x, &l) in c.iter_mut().zip(limit) {
        *x += 1;
        if *x < l {
            return true;
        }
        *x = 0;
    }
    false
}

pub fn random_scalar(field: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match field.order() {
        Some(p) => field.from_i64(rng.gen_range(0..p) as i64),
        None => field.from_i64(rng.gen_range(-50..=50)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_invertible_in_span() {
        let k = FieldSpec::rationals();
        let a = Matrix::from_i64(k, &[&[1, 0], &[0, 0]]);
        let b = Matrix::from_i64(k, &[&[0, 0], &[0, 1]]);
        let c = find_invertible(k, &[vec![a.clone()], vec![b.clone()]], 1).found().unwrap();
        let m = a.scale(&c[0]).add(&b.scale(&c[1]));
        assert!(m.is_invertible());
    }

    #[test]
    fn certifies_absence_over_q() {
        let k = FieldSpec::rationals();
        let a = Matrix::from_i64(k, &[&[1, 0], &[0, 0]]);
        let b = Matrix::from_i64(k, &[&[0, 0], &[1, 0]]);
        assert_eq!(find_invertible(k, &[vec![a], vec![b]], 1), Search::Absent);
    }

    #[test]
    fn exhausts_small_prime_field() {
        // x*I + y*[[0,1],[1,0]] is singular iff x^2 = y^2; over F_2 always
        let k = FieldSpec::prime(2).unwrap();
        let i = Matrix::identity(k, 2);
        let s = Matrix::from_i64(k, &[&[0, 1], &[1, 0]]);
        let sum = i.add(&s);
        assert_eq!(find_invertible(k, &[vec![sum]], 3), Search::Absent);
        assert!(matches!(find_invertible(k, &[vec![i], vec![s]], 3), Search::Found(_)));
    }
}

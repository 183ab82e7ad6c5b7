//! Univariate polynomials and their roots in the base field.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BasisCoordinates, Echelon};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Coefficients from the constant term upward, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly::new(field, Vec::new())
    }

    pub fn x(field: FieldSpec) -> Self {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    pub fn constant(field: FieldSpec, c: Scalar) -> Self {
        Poly::new(field, vec![c])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.inv().unwrap();
                Poly::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = self.field.zero();
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
            .collect();
        Poly::new(self.field, c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = self.field.zero();
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) - o.coeffs.get(i).unwrap_or(&z))
            .collect();
        Poly::new(self.field, c)
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.field);
        }
        let mut c = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, c)
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.coeffs[dd].inv().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(self.field), self.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let f = &r[i] * &inv;
            for (k, c) in d.coeffs.iter().enumerate() {
                r[i - dd + k] = &r[i - dd + k] - &(&f * c);
            }
            q[i - dd] = f;
        }
        r.truncate(dd);
        (Poly::new(self.field, q), Poly::new(self.field, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut acc = Poly::constant(self.field, self.field.one()).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Distinct roots lying in the base field, in increasing order.
    pub fn roots(&self) -> Result<Vec<Scalar>> {
        if self.is_zero() {
            return Err(Error::dim("roots of the zero polynomial"));
        }
        let mut roots = match self.field.order() {
            None => rational_roots(self)?,
            Some(p) if p <= 1 << 16 => self
                .field
                .elements()
                .unwrap()
                .filter(|x| self.eval(x).is_zero())
                .collect(),
            Some(p) => prime_field_roots(self, p),
        };
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        roots.dedup();
        Ok(roots)
    }
}

/// Minimal polynomial of the element `one` under repeated application of
/// `step` (a linear map on `k^dim`), found from the first dependency among
/// its iterates.
pub fn minimal_polynomial<F>(field: FieldSpec, one: &[Scalar], mut step: F) -> Poly
where
    F: FnMut(&[Scalar]) -> Vec<Scalar>,
{
    let n = one.len();
    let mut powers: Vec<Vec<Scalar>> = vec![one.to_vec()];
    let mut ech = Echelon::new(field, n);
    ech.insert_dense(one.to_vec());
    loop {
        let next = step(powers.last().unwrap());
        if ech.contains(&next) {
            let coords = BasisCoordinates::new(field, n, powers.clone())
                .expect("iterates are independent")
                .coordinates(&next)
                .expect("vector lies in the span");
            let mut c: Vec<Scalar> = coords.into_iter().map(|x| -x).collect();
            c.push(field.one());
            return Poly::new(field, c);
        }
        ech.insert_dense(next.clone());
        powers.push(next);
    }
}

fn rational_roots(f: &Poly) -> Result<Vec<Scalar>> {
    let field = f.field;
    // clear denominators
    let mut lcm = BigInt::one();
    for c in &f.coeffs {
        lcm = lcm.lcm(&c.to_ratio().1);
    }
    let mut ints: Vec<BigInt> = f
        .coeffs
        .iter()
        .map(|c| {
            let (n, d) = c.to_ratio();
            n * (&lcm / d)
        })
        .collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(field.zero());
        ints.drain(..low);
    }
    if ints.len() <= 1 {
        return Ok(roots);
    }
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    let us = divisors(&a0)?;
    let vs = divisors(&an)?;
    let g = Poly::new(
        field,
        ints.iter()
            .map(|c| field.from_ratio(c, &BigInt::one()).unwrap())
            .collect(),
    );
    for v in &vs {
        for u in &us {
            if !u.gcd(v).is_one() {
                continue;
            }
            for s in [u.clone(), -u.clone()] {
                let r = field.from_ratio(&s, v)?;
                if g.eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    Ok(roots)
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let Some(mut m) = n.to_u64() else {
        return Err(Error::Inconclusive("rational root candidates too large to factor".into()));
    };
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if d > 1 << 22 {
            return Err(Error::Inconclusive("rational root candidates too large to factor".into()));
        }
        if m % d == 0 {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            primes.push((d, e));
        }
        d += 1;
    }
    if m > 1 {
        primes.push((m, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for x in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(x * &pk);
                pk *= p;
            }
        }
        out = next;
    }
    Ok(out)
}

fn prime_field_roots(f: &Poly, p: u64) -> Vec<Scalar> {
    let field = f.field;
    let x = Poly::x(field);
    // the product of (x - a) over the roots a
    let split = f.gcd(&x.pow_mod(p, f).sub(&x));
    let mut rng = ChaCha8Rng::seed_from_u64(p);
    let mut out = Vec::new();
    let mut stack = vec![split];
    while let Some(g) = stack.pop() {
        match g.degree() {
            None | Some(0) => {}
            Some(1) => out.push(-&g.monic().coeffs[0]),
            Some(_) => loop {
                let a = field.from_i64(rng.gen_range(0..p as i64));
                let shifted = x.add(&Poly::constant(field, a));
                let h = shifted
                    .pow_mod((p - 1) / 2, &g)
                    .sub(&Poly::constant(field, field.one()));
                let d = g.gcd(&h);
                let dd = d.degree().unwrap_or(0);
                if dd > 0 && Some(dd) < g.degree() {
                    let (q, _) = g.div_rem(&d);
                    stack.push(d);
                    stack.push(q);
                    break;
                }
            },
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> Poly {
        let f = FieldSpec::rationals();
        Poly::new(f, c.iter().map(|&x| f.from_i64(x)).collect())
    }

    #[test]
    fn rational_roots_of_product() {
        // (2x - 1)(x + 3) x = 2x^3 + 5x^2 - 3x
        let f = q(&[0, -3, 5, 2]);
        let r = f.roots().unwrap();
        let k = FieldSpec::rationals();
        assert_eq!(r, vec![k.from_i64(-3), k.from_i64(0), k.parse("1/2").unwrap()]);
    }

    #[test]
    fn irreducible_quadratic_has_no_rational_roots() {
        assert!(q(&[-2, 0, 1]).roots().unwrap().is_empty());
    }

    #[test]
    fn large_prime_roots_match_evaluation() {
        let k = FieldSpec::prime(1_000_003).unwrap();
        let roots = [5i64, 77, 123_456];
        let mut f = Poly::constant(k, k.one());
        for r in roots {
            f = f.mul(&Poly::new(k, vec![k.from_i64(-r), k.one()]));
        }
        // times an irreducible-ish factor without roots we do not know about
        let g = f.mul(&Poly::new(k, vec![k.one(), k.zero(), k.one()]));
        let found = g.roots().unwrap();
        for r in roots {
            assert!(found.contains(&k.from_i64(r)));
        }
        for x in &found {
            assert!(g.eval(x).is_zero());
        }
    }

    #[test]
    fn minimal_polynomial_of_nilpotent_shift() {
        let k = FieldSpec::rationals();
        // x acting on k[x]/x^3 by multiplication, starting from 1
        let one = vec![k.one(), k.zero(), k.zero()];
        let m = minimal_polynomial(k, &one, |v| vec![k.zero(), v[0].clone(), v[1].clone()]);
        assert_eq!(m, q(&[0, 0, 0, 1]));
    }
}

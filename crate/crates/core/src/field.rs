//! Exact scalars: the rationals and prime fields.
//!
//! Rationals take a machine-word fast path and fall back to big integers on
//! overflow. Prime-field elements carry their modulus so that arithmetic never
//! needs a context argument; mixing elements of different fields is a logic
//! error and panics.

use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which kind of base field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

/// The base field `k`: either `Q` or `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    kind: FieldKind,
    characteristic: u64,
}

impl FieldSpec {
    pub const fn rationals() -> Self {
        FieldSpec {
            kind: FieldKind::Rationals,
            characteristic: 0,
        }
    }

    /// `F_p`. The modulus must be a prime below `2^32`.
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..(1 << 32)).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(p));
        }
        Ok(FieldSpec {
            kind: FieldKind::PrimeField,
            characteristic: p,
        })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn is_rationals(&self) -> bool {
        self.kind == FieldKind::Rationals
    }

    /// Number of elements, `None` for `Q`.
    pub fn order(&self) -> Option<u64> {
        match self.kind {
            FieldKind::Rationals => None,
            FieldKind::PrimeField => Some(self.characteristic),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self.kind {
            FieldKind::Rationals => Scalar::Q(Rational::Small(n, 1)),
            FieldKind::PrimeField => {
                let p = self.characteristic;
                let v = n.rem_euclid(p as i64) as u64;
                Scalar::F(Fp { v, p })
            }
        }
    }

    /// The element `num / den`. Fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        match self.kind {
            FieldKind::Rationals => Ok(Scalar::Q(Rational::from_big(BigRational::new(
                num.clone(),
                den.clone(),
            )))),
            FieldKind::PrimeField => {
                let p = BigInt::from(self.characteristic);
                let n = num.mod_floor(&p).to_u64().unwrap_or(0);
                let d = den.mod_floor(&p).to_u64().unwrap_or(0);
                if d == 0 {
                    return Err(Error::Parse(alloc::format!(
                        "denominator {} vanishes mod {}",
                        den,
                        self.characteristic
                    )));
                }
                let p = self.characteristic;
                Ok(Scalar::F(Fp { v: n, p }) * Scalar::F(Fp { v: d, p }).inv().unwrap())
            }
        }
    }

    /// Parse `"a"` or `"a/b"` with integer `a`, `b`.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = n
            .parse()
            .map_err(|_| Error::Parse(alloc::format!("bad coefficient {:?}", s)))?;
        let den: BigInt = d
            .parse()
            .map_err(|_| Error::Parse(alloc::format!("bad coefficient {:?}", s)))?;
        self.from_ratio(&num, &den)
    }

    /// Every element of a prime field, in the order `0, 1, ..., p - 1`.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar> + '_> {
        self.order().map(|p| (0..p).map(move |v| Scalar::F(Fp { v, p })))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::PrimeField => write!(f, "F_{}", self.characteristic),
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A rational number, kept reduced with a positive denominator.
#[derive(Clone, Debug)]
pub enum Rational {
    Small(i64, i64),
    Big(BigRational),
}

impl Rational {
    fn from_i128(n: i128, d: i128) -> Rational {
        debug_assert!(d != 0);
        let g = gcd_i128(n, d);
        let (mut n, mut d) = (n / g, d / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational::Small(n, d),
            _ => Rational::Big(BigRational::new(BigInt::from(n), BigInt::from(d))),
        }
    }

    fn from_big(r: BigRational) -> Rational {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational::Small(n, d),
            _ => Rational::Big(r),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rational::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rational::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rational::Small(n, _) => BigInt::from(*n),
            Rational::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rational::Small(_, d) => BigInt::from(*d),
            Rational::Big(r) => r.denom().clone(),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Rational::Small(n, _) => *n == 0,
            Rational::Big(r) => r.is_zero(),
        }
    }

    fn add(&self, o: &Rational) -> Rational {
        match (self, o) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Rational::from_i128(a + c, b)
                } else {
                    Rational::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Rational::from_big(self.to_big() + o.to_big()),
        }
    }

    fn neg(&self) -> Rational {
        match self {
            Rational::Small(n, d) if *n != i64::MIN => Rational::Small(-n, *d),
            _ => Rational::from_big(-self.to_big()),
        }
    }

    fn mul(&self, o: &Rational) -> Rational {
        match (self, o) {
            (Rational::Small(a, b), Rational::Small(c, d)) => {
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * o.to_big()),
        }
    }

    fn inv(&self) -> Option<Rational> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Rational::Small(n, d) => Rational::from_i128(*d as i128, *n as i128),
            Rational::Big(r) => Rational::from_big(r.recip()),
        })
    }
}

impl PartialEq for Rational {
    fn eq(&self, o: &Rational) -> bool {
        match (self, o) {
            (Rational::Small(a, b), Rational::Small(c, d)) => a == c && b == d,
            _ => self.to_big() == o.to_big(),
        }
    }
}

impl Eq for Rational {}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Small(n, 1) => write!(f, "{}", n),
            Rational::Small(n, d) => write!(f, "{}/{}", n, d),
            Rational::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Rational::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    if a == 0 {
        1
    } else {
        a as i128
    }
}

/// An element of `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.v
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp { v: 1 % self.p, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    fn mul(self, o: Fp) -> Fp {
        Fp {
            v: ((self.v as u128 * o.v as u128) % self.p as u128) as u64,
            p: self.p,
        }
    }
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Q(Rational),
    F(Fp),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::F(x) => x.v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(Rational::Small(1, 1)) => true,
            Scalar::Q(Rational::Small(..)) => false,
            Scalar::Q(Rational::Big(r)) => r.is_one(),
            Scalar::F(x) => x.v == 1,
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::rationals(),
            Scalar::F(x) => FieldSpec {
                kind: FieldKind::PrimeField,
                characteristic: x.p,
            },
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(r) => r.inv().map(Scalar::Q),
            Scalar::F(x) => {
                if x.v == 0 {
                    None
                } else {
                    Some(Scalar::F(x.pow(x.p - 2)))
                }
            }
        }
    }

    pub fn pow(&self, e: u64) -> Scalar {
        let mut acc = self.field().one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Numerator and denominator; for `F_p` the canonical representative over 1.
    pub fn to_ratio(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Q(r) => (r.numer(), r.denom()),
            Scalar::F(x) => (BigInt::from(x.v), BigInt::one()),
        }
    }

    /// Integer value of the canonical representative in `0..p`.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::F(x) => Some(x.v),
            Scalar::Q(_) => None,
        }
    }

    pub fn to_exact_string(&self) -> String {
        self.to_string()
    }

    /// Absolute size of a rational (used only to prefer small pivots).
    pub(crate) fn height(&self) -> u64 {
        match self {
            Scalar::Q(Rational::Small(n, d)) => n.unsigned_abs().saturating_add(*d as u64),
            Scalar::Q(Rational::Big(r)) => {
                (r.numer().abs().bits() + r.denom().bits()).saturating_mul(1 << 20)
            }
            Scalar::F(_) => 0,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => write!(f, "{}", r),
            Scalar::F(x) => write!(f, "{}", x.v),
        }
    }
}

impl PartialOrd for Scalar {
    /// Only meaningful for rationals; prime-field elements compare by residue.
    fn partial_cmp(&self, o: &Scalar) -> Option<Ordering> {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => a.to_big().partial_cmp(&b.to_big()),
            (Scalar::F(a), Scalar::F(b)) if a.p == b.p => a.v.partial_cmp(&b.v),
            _ => None,
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.add(b)),
            (Scalar::F(a), Scalar::F(b)) => {
                assert_eq!(a.p, b.p, "mixed prime fields");
                let s = a.v + b.v;
                Scalar::F(Fp {
                    v: if s >= a.p { s - a.p } else { s },
                    p: a.p,
                })
            }
            _ => panic!("mixed fields"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a.mul(b)),
            (Scalar::F(a), Scalar::F(b)) => {
                assert_eq!(a.p, b.p, "mixed prime fields");
                Scalar::F(a.mul(*b))
            }
            _ => panic!("mixed fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(a.neg()),
            Scalar::F(a) => Scalar::F(Fp {
                v: if a.v == 0 { 0 } else { a.p - a.v },
                p: a.p,
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        &self + &o
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        &self - &o
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        &self * &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_fast_path_overflows_into_big() {
        let q = FieldSpec::rationals();
        let big = q.from_i64(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Scalar::Q(Rational::Big(_))));
        let back = &sq * &big.inv().unwrap();
        assert_eq!(back, big);
        assert!(matches!(back, Scalar::Q(Rational::Small(..))));
    }

    #[test]
    fn parse_and_print() {
        let q = FieldSpec::rationals();
        let x = q.parse("-6/14").unwrap();
        assert_eq!(x.to_string(), "-3/7");
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.parse("1/2").unwrap().to_string(), "4");
        assert!(f7.parse("1/7").is_err());
        assert!(q.parse("0.5").is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f = FieldSpec::prime(13).unwrap();
        for x in f.elements().unwrap().skip(1) {
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        assert!(FieldSpec::prime(12).is_err());
    }
}

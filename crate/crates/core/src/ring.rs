//! Commutative Bézout domains of stable range 1.5.
//!
//! A domain is a value implementing [`Domain`]; its elements are plain data
//! and every operation goes through the ring object, so the same generic
//! code runs over [`Integers`] and [`PolysOverFp`].

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Candidates examined by [`Domain::stable_lift`] before giving up.
pub const STABLE_LIFT_BOUND: u64 = 1_000_000;

/// A commutative ring with identity, given as an object that owns the
/// arithmetic for its element type.
pub trait CommRing {
    type Elem: Clone + Eq + Hash + Debug + Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Image of an integer under the unique ring map from Z.
    fn from_i64(&self, n: i64) -> Self::Elem {
        let mut acc = self.zero();
        let mut base = self.one();
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        if n < 0 {
            self.neg(&acc)
        } else {
            acc
        }
    }

    fn product<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.one(), |acc, x| self.mul(&acc, x))
    }
}

/// A Euclidean (hence Bézout, stable range 1.5) domain with the extra
/// structure the solvers need: canonical associates, a total enumeration
/// order and enumeration of residue classes.
pub trait Domain: CommRing + Clone + Debug + PartialEq + Send + Sync {
    /// Euclidean division with the canonical remainder: `0 <= r < |b|`
    /// for integers, `deg r < deg b` for polynomials.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> Result<(Self::Elem, Self::Elem)>;

    /// Splits `a` as `assoc * unit` with `assoc` the canonical associate.
    fn canonical(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// Inverse of a unit of the domain, `None` for non-units.
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Compares Euclidean sizes (absolute value, degree).
    fn norm_cmp(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;

    /// The `k`-th element of the fixed enumeration of the domain.
    fn enumerate(&self, k: &BigUint) -> Self::Elem;

    /// Position of `a` in the enumeration; inverse of [`Domain::enumerate`].
    fn index(&self, a: &Self::Elem) -> BigUint;

    fn enum_cmp(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        self.index(a).cmp(&self.index(b))
    }

    /// Number of residue classes modulo a nonzero `m`, if it fits in a u64.
    fn residue_count(&self, m: &Self::Elem) -> Option<u64>;

    /// The `k`-th canonical residue modulo `m` in enumeration order,
    /// for `k < residue_count(m)`.
    fn nth_residue(&self, m: &Self::Elem, k: u64) -> Self::Elem;

    /// A uniformly drawn canonical residue modulo `m`.
    fn random_residue<G: Rng + ?Sized>(&self, m: &Self::Elem, rng: &mut G) -> Self::Elem;

    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    /// Short human readable name of the domain.
    fn name(&self) -> String;

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.unit_inverse(a).is_some()
    }

    /// Extended gcd: `(g, u, v)` with `g = a*u + b*v` and `g` canonical.
    fn egcd(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem, Self::Elem) {
        if self.is_zero(a) && self.is_zero(b) {
            return (self.zero(), self.zero(), self.zero());
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !self.is_zero(&r1) {
            let (q, r) = self.div_rem(&r0, &r1).expect("nonzero divisor");
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let (g, unit) = self.canonical(&r0);
        let inv = self.unit_inverse(&unit).expect("canonical unit part is a unit");
        (g, self.mul(&s0, &inv), self.mul(&t0, &inv))
    }

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.egcd(a, b).0
    }

    fn gcd_all<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |g, x| self.gcd(&g, x))
    }

    /// True iff `a | b`.
    fn divides(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        if self.is_zero(a) {
            return self.is_zero(b);
        }
        self.is_zero(&self.div_rem(b, a).expect("nonzero divisor").1)
    }

    /// The quotient `a / b` when `b` divides `a` exactly.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        if self.is_zero(b) {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.div_rem(a, b)?;
        if self.is_zero(&r) {
            Ok(q)
        } else {
            Err(Error::NotDivisible {
                dividend: a.to_string(),
                divisor: b.to_string(),
            })
        }
    }

    fn associated(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.canonical(a).0 == self.canonical(b).0
    }

    /// The first `r` in enumeration order with `gcd(a + b*r, c) = 1`.
    ///
    /// Requires `gcd(a, b, c) = 1` and `c != 0`.
    fn stable_lift(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Result<Self::Elem> {
        if self.is_zero(c) {
            return Err(Error::PreconditionViolated("stable lift needs c != 0".into()));
        }
        if !self.is_one(&self.gcd(&self.gcd(a, b), c)) {
            return Err(Error::PreconditionViolated(format!(
                "gcd({a}, {b}, {c}) is not 1"
            )));
        }
        for k in 0..STABLE_LIFT_BOUND {
            let r = self.enumerate(&BigUint::from(k));
            let candidate = self.add(a, &self.mul(b, &r));
            if self.is_one(&self.gcd(&candidate, c)) {
                return Ok(r);
            }
        }
        Err(Error::SearchExhausted(STABLE_LIFT_BOUND))
    }
}

/// Runtime selection of a domain instantiation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingCtx {
    Integers,
    PolynomialsOverFp { p: u32 },
}

impl FromStr for RingCtx {
    type Err = Error;

    /// Accepts `int` or `fpx:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "int" | "z" | "Z" | "integers" => Ok(RingCtx::Integers),
            _ => {
                let p = s
                    .strip_prefix("fpx:")
                    .ok_or_else(|| Error::Parse(format!("unknown ring `{s}`; use `int` or `fpx:<p>`")))?;
                let p: u32 = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad prime `{p}`")))?;
                PolysOverFp::new(p)?;
                Ok(RingCtx::PolynomialsOverFp { p })
            }
        }
    }
}

impl Display for RingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingCtx::Integers => write!(f, "int"),
            RingCtx::PolynomialsOverFp { p } => write!(f, "fpx:{p}"),
        }
    }
}

/// The ring of integers with arbitrary precision elements.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Integers;

impl CommRing for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigInt) -> bool {
        a.is_one()
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
}

impl Domain for Integers {
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt)> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let r = a.mod_floor(&b.abs());
        let q = (a - &r) / b;
        Ok((q, r))
    }

    fn canonical(&self, a: &BigInt) -> (BigInt, BigInt) {
        if a.is_negative() {
            (-a, BigInt::from(-1))
        } else {
            (a.clone(), BigInt::one())
        }
    }

    fn unit_inverse(&self, a: &BigInt) -> Option<BigInt> {
        if a.abs().is_one() {
            Some(a.clone())
        } else {
            None
        }
    }

    fn norm_cmp(&self, a: &BigInt, b: &BigInt) -> Ordering {
        a.abs().cmp(&b.abs())
    }

    /// 0, 1, -1, 2, -2, ...
    fn enumerate(&self, k: &BigUint) -> BigInt {
        let (half, odd) = k.div_rem(&BigUint::from(2u8));
        if odd.is_zero() {
            -BigInt::from(half)
        } else {
            BigInt::from(half + 1u8)
        }
    }

    fn index(&self, a: &BigInt) -> BigUint {
        let mag = a.magnitude() * 2u8;
        match a.sign() {
            Sign::Plus => mag - 1u8,
            _ => mag,
        }
    }

    fn enum_cmp(&self, a: &BigInt, b: &BigInt) -> Ordering {
        a.magnitude()
            .cmp(b.magnitude())
            .then_with(|| a.is_negative().cmp(&b.is_negative()))
    }

    fn residue_count(&self, m: &BigInt) -> Option<u64> {
        m.magnitude().to_u64()
    }

    fn nth_residue(&self, _m: &BigInt, k: u64) -> BigInt {
        BigInt::from(k)
    }

    fn random_residue<G: Rng + ?Sized>(&self, m: &BigInt, rng: &mut G) -> BigInt {
        let bound = m.magnitude();
        match bound.to_u64() {
            Some(b) => BigInt::from(rng.gen_range(0..b)),
            None => {
                let words = bound.bits() as usize / 32 + 2;
                let digits: Vec<u32> = (0..words).map(|_| rng.gen()).collect();
                BigInt::from(BigUint::new(digits) % bound)
            }
        }
    }

    fn parse_elem(&self, s: &str) -> Result<BigInt> {
        BigInt::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad integer `{s}`")))
    }

    fn name(&self) -> String {
        "Z".into()
    }
}

/// A polynomial over F_p: ascending coefficients, no trailing zeros.
/// The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<u32>);

impl Poly {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros. Coefficients must already be reduced.
    pub fn from_coeffs(mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<u32> {
        self.0.last().copied()
    }
}

impl Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "[0]");
        }
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Univariate polynomials over the prime field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolysOverFp {
    p: u32,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PolysOverFp {
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p as u64) {
            Ok(PolysOverFp { p })
        } else {
            Err(Error::NotPrime(p as u64))
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Builds a polynomial from arbitrary integer coefficients (ascending).
    pub fn poly(&self, coeffs: &[i64]) -> Poly {
        let p = self.p as i64;
        Poly::from_coeffs(coeffs.iter().map(|c| c.rem_euclid(p) as u32).collect())
    }

    /// The monomial `c * x^k`.
    pub fn monomial(&self, c: u32, k: usize) -> Poly {
        let mut v = vec![0; k + 1];
        v[k] = c % self.p;
        Poly::from_coeffs(v)
    }

    fn inv_mod_p(&self, c: u32) -> u32 {
        debug_assert!(c % self.p != 0);
        let p = self.p as u64;
        let mut result = 1u64;
        let mut base = c as u64 % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        result as u32
    }

    fn scale(&self, a: &Poly, c: u32) -> Poly {
        let p = self.p as u64;
        Poly::from_coeffs(a.0.iter().map(|&x| (x as u64 * c as u64 % p) as u32).collect())
    }

    fn digits(&self, mut k: BigUint) -> Poly {
        let p = BigUint::from(self.p);
        let mut coeffs = Vec::new();
        while !k.is_zero() {
            let (q, r) = k.div_rem(&p);
            coeffs.push(r.to_u32().expect("digit below p"));
            k = q;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl CommRing for PolysOverFp {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::default()
    }
    fn one(&self) -> Poly {
        Poly(vec![1])
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.0.len().max(b.0.len());
        let p = self.p as u64;
        let coeffs = (0..n)
            .map(|i| {
                let x = *a.0.get(i).unwrap_or(&0) as u64;
                let y = *b.0.get(i).unwrap_or(&0) as u64;
                ((x + y) % p) as u32
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }
    fn neg(&self, a: &Poly) -> Poly {
        Poly::from_coeffs(
            a.0.iter()
                .map(|&c| if c == 0 { 0 } else { self.p - c })
                .collect(),
        )
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::default();
        }
        let p = self.p as u64;
        let mut out = vec![0u64; a.0.len() + b.0.len() - 1];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p;
            }
        }
        Poly::from_coeffs(out.into_iter().map(|c| c as u32).collect())
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, n: i64) -> Poly {
        self.poly(&[n])
    }
}

impl Domain for PolysOverFp {
    fn div_rem(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let p = self.p as u64;
        let lead_inv = self.inv_mod_p(b.leading().unwrap()) as u64;
        let mut rem: Vec<u64> = a.0.iter().map(|&c| c as u64).collect();
        if rem.len() <= db {
            return Ok((Poly::default(), a.clone()));
        }
        let mut quot = vec![0u64; rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = rem[k + db] * lead_inv % p;
            if c == 0 {
                continue;
            }
            quot[k] = c;
            for (j, &bj) in b.0.iter().enumerate() {
                let sub = c * bj as u64 % p;
                rem[k + j] = (rem[k + j] + p - sub) % p;
            }
        }
        rem.truncate(db);
        Ok((
            Poly::from_coeffs(quot.into_iter().map(|c| c as u32).collect()),
            Poly::from_coeffs(rem.into_iter().map(|c| c as u32).collect()),
        ))
    }

    fn canonical(&self, a: &Poly) -> (Poly, Poly) {
        match a.leading() {
            None => (Poly::default(), self.one()),
            Some(lc) => (self.scale(a, self.inv_mod_p(lc)), Poly(vec![lc])),
        }
    }

    fn unit_inverse(&self, a: &Poly) -> Option<Poly> {
        match a.0.as_slice() {
            [c] => Some(Poly(vec![self.inv_mod_p(*c)])),
            _ => None,
        }
    }

    fn norm_cmp(&self, a: &Poly, b: &Poly) -> Ordering {
        a.0.len().cmp(&b.0.len())
    }

    /// Base-p digits of `k`, least significant digit first: ordered by
    /// degree, then by coefficients read from the top down.
    fn enumerate(&self, k: &BigUint) -> Poly {
        self.digits(k.clone())
    }

    fn index(&self, a: &Poly) -> BigUint {
        let p = BigUint::from(self.p);
        a.0.iter()
            .rev()
            .fold(BigUint::zero(), |acc, &c| acc * &p + c)
    }

    fn enum_cmp(&self, a: &Poly, b: &Poly) -> Ordering {
        a.0.len()
            .cmp(&b.0.len())
            .then_with(|| a.0.iter().rev().cmp(b.0.iter().rev()))
    }

    fn residue_count(&self, m: &Poly) -> Option<u64> {
        let d = m.degree()? as u32;
        (self.p as u64).checked_pow(d)
    }

    fn nth_residue(&self, _m: &Poly, k: u64) -> Poly {
        self.digits(BigUint::from(k))
    }

    fn random_residue<G: Rng + ?Sized>(&self, m: &Poly, rng: &mut G) -> Poly {
        let d = m.degree().unwrap_or(0);
        Poly::from_coeffs((0..d).map(|_| rng.gen_range(0..self.p)).collect())
    }

    /// Accepts `[c0,c1,...]` (ascending, any integers) or a bare integer
    /// constant.
    fn parse_elem(&self, s: &str) -> Result<Poly> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad polynomial `{s}`; expected [c0,c1,...]"));
        let inner = match s.strip_prefix('[') {
            Some(rest) => rest.strip_suffix(']').ok_or_else(bad)?,
            None => s,
        };
        let coeffs = inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                BigInt::from_str(t)
                    .map(|c| c.mod_floor(&BigInt::from(self.p)).to_u32().expect("reduced"))
                    .map_err(|_| bad())
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }

    fn name(&self) -> String {
        format!("F_{}[x]", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn egcd_examples() {
        let (g, u, v) = Integers.egcd(&z(4), &z(36));
        assert_eq!(g, z(4));
        assert_eq!(z(4) * u + z(36) * v, z(4));

        assert_eq!(Integers.egcd(&z(0), &z(0)), (z(0), z(0), z(0)));

        // x^2 + 1 = (x + 1)^2 over F_2
        let f2 = PolysOverFp::new(2).unwrap();
        let a = f2.poly(&[1, 0, 1]);
        let b = f2.poly(&[1, 1]);
        let (g, u, v) = f2.egcd(&a, &b);
        assert_eq!(g, b);
        assert_eq!(f2.add(&f2.mul(&a, &u), &f2.mul(&b, &v)), g);
    }

    #[test]
    fn egcd_normalizes_sign() {
        let (g, u, v) = Integers.egcd(&z(-6), &z(-4));
        assert_eq!(g, z(2));
        assert_eq!(z(-6) * u + z(-4) * v, z(2));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(Integers.exact_div(&z(36), &z(4)), Ok(z(9)));
        assert_eq!(Integers.exact_div(&z(-17), &z(1)), Ok(z(-17)));
        assert!(matches!(
            Integers.exact_div(&z(7), &z(2)),
            Err(Error::NotDivisible { .. })
        ));
        assert_eq!(Integers.exact_div(&z(7), &z(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(Integers.canonical(&z(-6)), (z(6), z(-1)));
        assert_eq!(Integers.canonical(&z(0)), (z(0), z(1)));
        let f3 = PolysOverFp::new(3).unwrap();
        assert_eq!(
            f3.canonical(&f3.poly(&[2, 2])),
            (f3.poly(&[1, 1]), f3.poly(&[2]))
        );
        assert_eq!(f3.canonical(&f3.zero()), (f3.zero(), f3.one()));
    }

    #[test]
    fn stable_lift_examples() {
        assert_eq!(Integers.stable_lift(&z(3), &z(4), &z(10)), Ok(z(0)));
        assert_eq!(Integers.stable_lift(&z(2), &z(3), &z(10)), Ok(z(-1)));
        // (0 + 1*r, 12) = 1: first in order 0, 1, ... is 1
        assert_eq!(Integers.stable_lift(&z(0), &z(1), &z(12)), Ok(z(1)));
        assert!(matches!(
            Integers.stable_lift(&z(2), &z(4), &z(10)),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            Integers.stable_lift(&z(1), &z(1), &z(0)),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(Integers.enumerate(&BigUint::from(0u8)), z(0));
        assert_eq!(Integers.enumerate(&BigUint::from(3u8)), z(2));
        let f2 = PolysOverFp::new(2).unwrap();
        let order: Vec<Poly> = (0u8..5).map(|k| f2.enumerate(&BigUint::from(k))).collect();
        assert_eq!(
            order,
            vec![
                f2.poly(&[]),
                f2.poly(&[1]),
                f2.poly(&[0, 1]),
                f2.poly(&[1, 1]),
                f2.poly(&[0, 0, 1]),
            ]
        );
    }

    #[test]
    fn enumerate_is_injective_on_prefix() {
        use std::collections::HashSet;
        let ints: HashSet<BigInt> = (0u32..10_000)
            .map(|k| Integers.enumerate(&BigUint::from(k)))
            .collect();
        assert_eq!(ints.len(), 10_000);
        let f3 = PolysOverFp::new(3).unwrap();
        let polys: HashSet<Poly> = (0u32..10_000)
            .map(|k| f3.enumerate(&BigUint::from(k)))
            .collect();
        assert_eq!(polys.len(), 10_000);
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert_eq!(PolysOverFp::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PolysOverFp::new(1), Err(Error::NotPrime(1)));
        assert!("fpx:6".parse::<RingCtx>().is_err());
        assert_eq!("fpx:5".parse::<RingCtx>(), Ok(RingCtx::PolynomialsOverFp { p: 5 }));
        assert_eq!("int".parse::<RingCtx>(), Ok(RingCtx::Integers));
    }

    #[test]
    fn poly_division_oracle() {
        // x^3 = x * (x^2 + 1) + x over F_2
        let f2 = PolysOverFp::new(2).unwrap();
        let (q, r) = f2.div_rem(&f2.poly(&[0, 0, 0, 1]), &f2.poly(&[1, 0, 1])).unwrap();
        assert_eq!(q, f2.poly(&[0, 1]));
        assert_eq!(r, f2.poly(&[0, 1]));
    }

    #[test]
    fn parse_display_roundtrip() {
        let f5 = PolysOverFp::new(5).unwrap();
        let a = f5.parse_elem("[1, -1, 7, 0]").unwrap();
        assert_eq!(a, f5.poly(&[1, 4, 2]));
        assert_eq!(f5.parse_elem(&a.to_string()).unwrap(), a);
        assert_eq!(f5.parse_elem("[0]").unwrap(), f5.zero());
        assert_eq!(Integers.parse_elem("-123456789012345678901234567890").unwrap().to_string(),
            "-123456789012345678901234567890");
    }

    fn small_poly(p: u32) -> impl Strategy<Value = Poly> {
        prop::collection::vec(0..p, 0..6).prop_map(Poly::from_coeffs)
    }

    proptest! {
        #[test]
        fn int_egcd_bezout(a in -10_000i64..10_000, b in -10_000i64..10_000) {
            let (g, u, v) = Integers.egcd(&z(a), &z(b));
            prop_assert_eq!(z(a) * &u + z(b) * &v, g.clone());
            prop_assert!(Integers.divides(&g, &z(a)) && Integers.divides(&g, &z(b)));
            prop_assert!(!g.is_negative());
        }

        #[test]
        fn poly_egcd_bezout(a in small_poly(3), b in small_poly(3)) {
            let f3 = PolysOverFp::new(3).unwrap();
            let (g, u, v) = f3.egcd(&a, &b);
            prop_assert_eq!(f3.add(&f3.mul(&a, &u), &f3.mul(&b, &v)), g.clone());
            prop_assert!(f3.divides(&g, &a) && f3.divides(&g, &b));
            prop_assert!(g.is_zero() || g.leading() == Some(1));
        }

        #[test]
        fn canonical_is_idempotent(a in -1000i64..1000, q in small_poly(5)) {
            let (c, u) = Integers.canonical(&z(a));
            prop_assert_eq!(&c * &u, z(a));
            prop_assert!(Integers.is_one(&Integers.canonical(&c).1));
            let f5 = PolysOverFp::new(5).unwrap();
            let (c, u) = f5.canonical(&q);
            prop_assert_eq!(f5.mul(&c, &u), q.clone());
            prop_assert!(f5.is_unit(&u));
            prop_assert!(f5.is_one(&f5.canonical(&c).1));
        }

        #[test]
        fn index_inverts_enumerate(k in 0u64..1_000_000) {
            let f3 = PolysOverFp::new(3).unwrap();
            let k = BigUint::from(k);
            prop_assert_eq!(Integers.index(&Integers.enumerate(&k)), k.clone());
            prop_assert_eq!(f3.index(&f3.enumerate(&k)), k);
        }

        #[test]
        fn enum_cmp_matches_index(a in -500i64..500, b in -500i64..500, x in small_poly(2), y in small_poly(2)) {
            prop_assert_eq!(Integers.enum_cmp(&z(a), &z(b)), Integers.index(&z(a)).cmp(&Integers.index(&z(b))));
            let f2 = PolysOverFp::new(2).unwrap();
            prop_assert_eq!(f2.enum_cmp(&x, &y), f2.index(&x).cmp(&f2.index(&y)));
        }

        #[test]
        fn stable_lift_output_is_coprime(a in -200i64..200, b in -200i64..200, c in 1i64..200) {
            let g = Integers.gcd(&Integers.gcd(&z(a), &z(b)), &z(c));
            prop_assume!(g.is_one());
            let r = Integers.stable_lift(&z(a), &z(b), &z(c)).unwrap();
            prop_assert!(Integers.gcd(&(z(a) + z(b) * r), &z(c)).is_one());
        }

        #[test]
        fn poly_div_rem_reconstructs(a in small_poly(7), b in small_poly(7)) {
            let f7 = PolysOverFp::new(7).unwrap();
            prop_assume!(!b.is_zero());
            let (q, r) = f7.div_rem(&a, &b).unwrap();
            prop_assert_eq!(f7.add(&f7.mul(&q, &b), &r), a);
            prop_assert!(r.degree().map_or(true, |d| d < b.degree().unwrap()));
        }
    }
}

//! The quotient ring R_m = R/mR and its structural predicates.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{CommRing, Domain, Integers};

#[derive(Debug)]
struct ModulusInner<D: Domain> {
    domain: D,
    m: D::Elem,
}

/// A nonzero non-unit `m` of a domain, standing for the ring R_m.
///
/// Cheap to clone; residues keep a handle to the modulus they live in.
/// The stored generator is the canonical associate of the input.
pub struct Modulus<D: Domain> {
    inner: Arc<ModulusInner<D>>,
}

impl<D: Domain> Clone for Modulus<D> {
    fn clone(&self) -> Self {
        Modulus {
            inner: Arc::clone(&self.inner),
        }
    }
}

impl<D: Domain> PartialEq for Modulus<D> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.domain == other.inner.domain && self.inner.m == other.inner.m)
    }
}

impl<D: Domain> Eq for Modulus<D> {}

impl<D: Domain> Debug for Modulus<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/({})", self.inner.domain.name(), self.inner.m)
    }
}

impl<D: Domain> Modulus<D> {
    pub fn new(domain: D, m: D::Elem) -> Result<Self> {
        if domain.is_zero(&m) || domain.is_unit(&m) {
            return Err(Error::InvalidModulus(m.to_string()));
        }
        let (m, _) = domain.canonical(&m);
        Ok(Modulus {
            inner: Arc::new(ModulusInner { domain, m }),
        })
    }

    pub fn domain(&self) -> &D {
        &self.inner.domain
    }

    /// The canonical generator `m`.
    pub fn value(&self) -> &D::Elem {
        &self.inner.m
    }

    /// The image of `a` under R -> R_m.
    pub fn reduce(&self, a: &D::Elem) -> Residue<D> {
        let (_, rep) = self
            .domain()
            .div_rem(a, self.value())
            .expect("modulus is nonzero");
        Residue {
            rep,
            modulus: self.clone(),
        }
    }

    pub fn residue_i64(&self, n: i64) -> Residue<D> {
        self.reduce(&self.domain().from_i64(n))
    }

    pub fn parse_residue(&self, s: &str) -> Result<Residue<D>> {
        Ok(self.reduce(&self.domain().parse_elem(s)?))
    }

    /// Number of elements of R_m, if it fits in a u64.
    pub fn cardinality(&self) -> Option<u64> {
        self.domain().residue_count(self.value())
    }

    /// All elements of R_m in enumeration order.
    pub fn elements(&self, bound: u64) -> Result<Vec<Residue<D>>> {
        let count = self.checked_cardinality(bound)?;
        Ok((0..count)
            .map(|k| Residue {
                rep: self.domain().nth_residue(self.value(), k),
                modulus: self.clone(),
            })
            .collect())
    }

    /// All units of R_m in enumeration order.
    pub fn units(&self, bound: u64) -> Result<Vec<Residue<D>>> {
        Ok(self
            .elements(bound)?
            .into_iter()
            .filter(Residue::is_unit)
            .collect())
    }

    fn checked_cardinality(&self, bound: u64) -> Result<u64> {
        match self.cardinality() {
            Some(c) if c <= bound => Ok(c),
            other => Err(Error::TooLarge {
                what: format!("R/({})", self.value()),
                size: other.map_or("more than 2^64".into(), |c| c.to_string()),
                bound,
            }),
        }
    }

    fn check(&self, x: &Residue<D>) -> Result<()> {
        if *self == x.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch)
        }
    }
}

impl Modulus<Integers> {
    /// Shorthand for Z_m.
    pub fn integer(m: i64) -> Result<Self> {
        Modulus::new(Integers, m.into())
    }
}

impl<D: Domain> CommRing for Modulus<D> {
    type Elem = Residue<D>;

    fn zero(&self) -> Residue<D> {
        self.reduce(&self.domain().zero())
    }
    fn one(&self) -> Residue<D> {
        self.reduce(&self.domain().one())
    }
    fn add(&self, a: &Residue<D>, b: &Residue<D>) -> Residue<D> {
        debug_assert!(a.modulus == *self && b.modulus == *self);
        self.reduce(&self.domain().add(&a.rep, &b.rep))
    }
    fn sub(&self, a: &Residue<D>, b: &Residue<D>) -> Residue<D> {
        debug_assert!(a.modulus == *self && b.modulus == *self);
        self.reduce(&self.domain().sub(&a.rep, &b.rep))
    }
    fn mul(&self, a: &Residue<D>, b: &Residue<D>) -> Residue<D> {
        debug_assert!(a.modulus == *self && b.modulus == *self);
        self.reduce(&self.domain().mul(&a.rep, &b.rep))
    }
    fn neg(&self, a: &Residue<D>) -> Residue<D> {
        self.reduce(&self.domain().neg(&a.rep))
    }
    fn is_zero(&self, a: &Residue<D>) -> bool {
        a.is_zero()
    }
    fn from_i64(&self, n: i64) -> Residue<D> {
        self.residue_i64(n)
    }
}

/// An element of R_m, held as its canonical representative.
pub struct Residue<D: Domain> {
    rep: D::Elem,
    modulus: Modulus<D>,
}

impl<D: Domain> Clone for Residue<D> {
    fn clone(&self) -> Self {
        Residue {
            rep: self.rep.clone(),
            modulus: self.modulus.clone(),
        }
    }
}

impl<D: Domain> PartialEq for Residue<D> {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep && self.modulus == other.modulus
    }
}

impl<D: Domain> Eq for Residue<D> {}

impl<D: Domain> Hash for Residue<D> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rep.hash(state);
    }
}

impl<D: Domain> Debug for Residue<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.rep, self.modulus.value())
    }
}

impl<D: Domain> Display for Residue<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(&self.rep, f)
    }
}

impl<D: Domain> Residue<D> {
    /// Canonical representative in R.
    pub fn rep(&self) -> &D::Elem {
        &self.rep
    }

    pub fn modulus(&self) -> &Modulus<D> {
        &self.modulus
    }

    fn domain(&self) -> &D {
        self.modulus.domain()
    }

    pub fn is_zero(&self) -> bool {
        self.domain().is_zero(&self.rep)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.modulus.check(other)?;
        Ok(self.modulus.add(self, other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.modulus.check(other)?;
        Ok(self.modulus.sub(self, other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.modulus.check(other)?;
        Ok(self.modulus.mul(self, other))
    }

    /// `(rep, m)`, the canonical gcd with the modulus. It does not depend
    /// on the coset representative.
    pub fn mu(&self) -> D::Elem {
        self.domain().gcd(&self.rep, self.modulus.value())
    }

    pub fn is_unit(&self) -> bool {
        self.domain().is_one(&self.mu())
    }

    pub fn invert(&self) -> Result<Self> {
        let (g, u, _) = self.domain().egcd(&self.rep, self.modulus.value());
        if !self.domain().is_one(&g) {
            return Err(Error::NotAUnit(self.to_string()));
        }
        Ok(self.modulus.reduce(&u))
    }

    /// The unit `e` with `self = reduce(mu) * e`.
    ///
    /// Built from a Bézout relation `a1*u + m1*v = 1` for `a = mu*a1`,
    /// `m = mu*m1`: the lift `u + r0*m1` is coprime to `m`, and
    /// `a*(u + r0*m1) = mu (mod m)`. Zero maps to 1.
    pub fn unit_part(&self) -> Self {
        if self.is_zero() {
            return self.modulus.one();
        }
        let d = self.domain();
        let m = self.modulus.value();
        let mu = self.mu();
        let a1 = d.exact_div(&self.rep, &mu).expect("mu divides rep");
        let m1 = d.exact_div(m, &mu).expect("mu divides m");
        let (_, u, _) = d.egcd(&a1, &m1);
        let r0 = d
            .stable_lift(&u, &m1, m)
            .expect("stable range 1.5 gives a coprime lift");
        let lifted = d.add(&u, &d.mul(&r0, &m1));
        self.modulus
            .reduce(&lifted)
            .invert()
            .expect("lift is coprime to m")
    }

    /// True iff `y = self * t` for some `t`.
    pub fn divides(&self, y: &Self) -> Result<bool> {
        self.modulus.check(y)?;
        Ok(self.domain().divides(&self.mu(), &y.rep))
    }

    /// Associates in R_m: equal gcd with the modulus.
    pub fn associates(&self, y: &Self) -> Result<bool> {
        self.modulus.check(y)?;
        Ok(self.mu() == y.mu())
    }

    /// A unit `e` with `self * e = y`, or `None` when the two are not associates.
    pub fn associate_unit(&self, y: &Self) -> Result<Option<Self>> {
        if !self.associates(y)? {
            return Ok(None);
        }
        let e = &self.unit_part().invert()? * &y.unit_part();
        debug_assert_eq!(&(self * &e), y);
        Ok(Some(e))
    }

    /// Generator `m / mu` of the annihilator ideal.
    pub fn annihilator(&self) -> Self {
        let d = self.domain();
        let alpha = d
            .exact_div(self.modulus.value(), &self.mu())
            .expect("mu divides m");
        self.modulus.reduce(&alpha)
    }

    /// Order on R_m induced by the domain enumeration of representatives.
    pub fn enum_cmp(&self, other: &Self) -> Ordering {
        self.domain().enum_cmp(&self.rep, &other.rep)
    }
}

macro_rules! residue_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics if the moduli differ; use the `try_` method to get an error.
        impl<'a, D: Domain> $trait<&'a Residue<D>> for &'a Residue<D> {
            type Output = Residue<D>;
            fn $method(self, rhs: &'a Residue<D>) -> Residue<D> {
                self.$checked(rhs).expect("residues with a common modulus")
            }
        }
    };
}

residue_binop!(Add, add, try_add);
residue_binop!(Sub, sub, try_sub);
residue_binop!(Mul, mul, try_mul);

impl<D: Domain> Neg for &Residue<D> {
    type Output = Residue<D>;
    fn neg(self) -> Residue<D> {
        self.modulus.neg(self)
    }
}

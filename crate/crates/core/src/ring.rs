//! The ring-adapter contract shared by every engine in this crate.
//!
//! An adapter is a stateless value describing how to do exact arithmetic on
//! some element type. Engines are written against [`Ring`] (and [`GcdRing`]
//! where a gcd is needed), so the same code certifies identities over the
//! integers and over integer polynomials.

use std::fmt::Debug;

/// Exact commutative ring arithmetic with a partial exact division and a
/// canonical associate per class.
pub trait Ring {
    type Elem: Clone + Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn equals(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.equals(a, &self.zero())
    }

    /// `Some(c)` with `b * c == a` when `b` is nonzero and divides `a`;
    /// `None` otherwise (including `b == 0`).
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// The canonical representative of the associate class of `a`.
    fn normalize(&self, a: &Self::Elem) -> Self::Elem;

    fn divides(&self, d: &Self::Elem, a: &Self::Elem) -> bool {
        if self.is_zero(d) {
            self.is_zero(a)
        } else {
            self.exact_div(a, d).is_some()
        }
    }

    fn is_normalized(&self, a: &Self::Elem) -> bool {
        self.equals(&self.normalize(a), a)
    }

    fn associates(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.equals(&self.normalize(a), &self.normalize(b))
    }

    /// The unit `e` with `e * a == normalize(a)`; one for zero.
    fn normalizing_unit(&self, a: &Self::Elem) -> Self::Elem {
        if self.is_zero(a) {
            return self.one();
        }
        self.exact_div(&self.normalize(a), a)
            .expect("normalize must return an associate")
    }

    /// Inverse of a unit.
    fn unit_inverse(&self, e: &Self::Elem) -> Self::Elem {
        self.exact_div(&self.one(), e).expect("not a unit")
    }

    fn sum<I>(&self, terms: I) -> Self::Elem
    where
        I: IntoIterator<Item = Self::Elem>,
    {
        terms
            .into_iter()
            .fold(self.zero(), |acc, t| self.add(&acc, &t))
    }

    fn product<'a, I>(&self, factors: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        factors
            .into_iter()
            .fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// `Σ coeffs[i] * elems[i]`; the shorter slice bounds the sum.
    fn dot(&self, coeffs: &[Self::Elem], elems: &[Self::Elem]) -> Self::Elem {
        self.sum(coeffs.iter().zip(elems).map(|(c, e)| self.mul(c, e)))
    }
}

/// A ring where every pair of elements has a computable gcd.
pub trait GcdRing: Ring {
    /// Normalized greatest common divisor; `gcd(a, 0) == normalize(a)`.
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn gcd_all<'a, I>(&self, elems: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        elems
            .into_iter()
            .fold(self.zero(), |acc, e| self.gcd(&acc, e))
    }
}

/// `u * a + v * b == g` where `g` is the normalized gcd of `a` and `b`.
#[derive(Debug, Clone, PartialEq)]
pub struct BezoutPair<E> {
    pub a: E,
    pub b: E,
    pub g: E,
    pub u: E,
    pub v: E,
}

impl<E: Clone> BezoutPair<E> {
    /// The same witness with the roles of `a` and `b` exchanged.
    pub fn swapped(&self) -> Self {
        BezoutPair {
            a: self.b.clone(),
            b: self.a.clone(),
            g: self.g.clone(),
            u: self.v.clone(),
            v: self.u.clone(),
        }
    }

    pub fn combination<R: Ring<Elem = E>>(&self, ring: &R) -> E {
        ring.add(&ring.mul(&self.u, &self.a), &ring.mul(&self.v, &self.b))
    }

    /// Rescales by a unit so that `g` becomes the normalized associate.
    pub fn normalized<R: Ring<Elem = E>>(&self, ring: &R) -> Self {
        let unit = ring.normalizing_unit(&self.g);
        BezoutPair {
            a: self.a.clone(),
            b: self.b.clone(),
            g: ring.mul(&unit, &self.g),
            u: ring.mul(&unit, &self.u),
            v: ring.mul(&unit, &self.v),
        }
    }
}

/// True iff the identity holds, `g` divides both elements and `g` is
/// normalized.
pub fn verify_bezout<R: Ring>(pair: &BezoutPair<R::Elem>, ring: &R) -> bool {
    ring.equals(&pair.combination(ring), &pair.g)
        && ring.divides(&pair.g, &pair.a)
        && ring.divides(&pair.g, &pair.b)
        && ring.is_normalized(&pair.g)
}

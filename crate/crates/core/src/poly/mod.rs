//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients, and the `Z[x]` ring adapter.

mod binomial;
mod gcd;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{GcdRing, Ring};

pub use binomial::binomial_bezout;
pub use gcd::{gcd, pseudo_rem};

/// A polynomial in `Z[x]`, coefficients in ascending degree order.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyZ {
    coeffs: Vec<BigInt>,
}

impl PolyZ {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyZ { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().copied().map(BigInt::from).collect())
    }

    pub fn zero() -> Self {
        PolyZ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        PolyZ { coeffs }
    }

    /// `x^k`.
    pub fn x_pow(k: usize) -> Self {
        Self::monomial(BigInt::one(), k)
    }

    /// `1 - x^n`. For `n == 0` this is the zero polynomial.
    pub fn one_minus_x_pow(n: usize) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::one();
        coeffs[n] = -BigInt::one();
        PolyZ { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PolyZ {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        PolyZ { coeffs }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / (±content)`, with the sign chosen so the leading coefficient
    /// is positive.
    pub fn primitive_part(&self) -> Self {
        let Some(lc) = self.leading_coeff() else {
            return Self::zero();
        };
        let mut c = self.content();
        if lc.is_negative() {
            c = -c;
        }
        PolyZ {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// The associate with positive leading coefficient.
    pub fn normalize(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if lc.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Exact quotient in `Z[x]`: `Ok(Some(c))` with `divisor * c == self`,
    /// `Ok(None)` when `divisor` does not divide `self` over the integers.
    pub fn exact_div(&self, divisor: &PolyZ) -> Result<Option<PolyZ>> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let Some(nd) = self.degree() else {
            return Ok(Some(Self::zero()));
        };
        if nd < dd {
            return Ok(None);
        }
        let lc = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return Ok(None);
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    rem[k + i] -= &q * c;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        Ok(Some(PolyZ::new(quot)))
    }
}

impl fmt::Debug for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyZ({self})")
    }
}

/// Descending-degree rendering, e.g. `x^2 - x + 1`.
impl fmt::Display for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}x", if show_mag { "*" } else { "" })?,
                _ => write!(f, "{}x^{k}", if show_mag { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl Add for &PolyZ {
    type Output = PolyZ;

    fn add(self, rhs: &PolyZ) -> PolyZ {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        PolyZ::new(coeffs)
    }
}

impl Sub for &PolyZ {
    type Output = PolyZ;

    fn sub(self, rhs: &PolyZ) -> PolyZ {
        self + &(-rhs)
    }
}

impl Neg for &PolyZ {
    type Output = PolyZ;

    fn neg(self) -> PolyZ {
        PolyZ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &PolyZ {
    type Output = PolyZ;

    fn mul(self, rhs: &PolyZ) -> PolyZ {
        if self.is_zero() || rhs.is_zero() {
            return PolyZ::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        PolyZ::new(coeffs)
    }
}

/// Adapter for `Z[x]`. Units are ±1; the normalized associate has a
/// positive leading coefficient.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct IntPolys;

impl Ring for IntPolys {
    type Elem = PolyZ;

    fn zero(&self) -> PolyZ {
        PolyZ::zero()
    }

    fn one(&self) -> PolyZ {
        PolyZ::one()
    }

    fn add(&self, a: &PolyZ, b: &PolyZ) -> PolyZ {
        a + b
    }

    fn mul(&self, a: &PolyZ, b: &PolyZ) -> PolyZ {
        a * b
    }

    fn neg(&self, a: &PolyZ) -> PolyZ {
        -a
    }

    fn sub(&self, a: &PolyZ, b: &PolyZ) -> PolyZ {
        a - b
    }

    fn is_zero(&self, a: &PolyZ) -> bool {
        a.is_zero()
    }

    fn exact_div(&self, a: &PolyZ, b: &PolyZ) -> Option<PolyZ> {
        a.exact_div(b).ok().flatten()
    }

    fn normalize(&self, a: &PolyZ) -> PolyZ {
        a.normalize()
    }
}

impl GcdRing for IntPolys {
    fn gcd(&self, a: &PolyZ, b: &PolyZ) -> PolyZ {
        gcd(a, b)
    }
}

//! The family `p_i = (1 - x^D) / (1 - x^{d_i}) = 1 + x^{d_i} + … + x^{D-d_i}`
//! for divisors `d_i` of `D`.
//!
//! Pairwise witnesses come from the binomial Bézout identity: with
//! `C = (1 - x^D) / ((1 - x^{d_i})(1 - x^{d_j}))` we have `p_i = C*(1 - x^{d_j})`
//! and `p_j = C*(1 - x^{d_i})`, so `α*(1 - x^{d_i}) + β*(1 - x^{d_j}) = 1 - x^g`
//! turns into `β*p_i + α*p_j = C*(1 - x^g)`, which is the gcd.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::combine::{combine_n, CombinationCertificate};
use crate::error::{Error, Result};
use crate::poly::{binomial_bezout, IntPolys, PolyZ};
use crate::products::{sum_of_products, PrincipalSumWitness, SumProductsCertificate};
use crate::ring::{BezoutPair, GcdRing};

/// Largest `D` accepted from the command line.
pub const MAX_DEGREE: usize = 10_000;

/// A top exponent `D` and a list of its divisors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorInstance {
    #[serde(rename = "D")]
    pub degree: usize,
    pub divisors: Vec<usize>,
}

impl DivisorInstance {
    pub fn new(degree: usize, divisors: Vec<usize>) -> Result<Self> {
        let instance = DivisorInstance { degree, divisors };
        instance.validate()?;
        Ok(instance)
    }

    pub fn validate(&self) -> Result<()> {
        if self.degree == 0 {
            return Err(Error::invalid("D must be positive"));
        }
        if self.divisors.is_empty() {
            return Err(Error::invalid("at least one divisor is required"));
        }
        for &d in &self.divisors {
            if d == 0 || !self.degree.is_multiple_of(d) {
                return Err(Error::invalid(format!(
                    "{d} does not divide {}",
                    self.degree
                )));
            }
        }
        Ok(())
    }

    pub fn polynomials(&self) -> Vec<PolyZ> {
        self.divisors
            .iter()
            .map(|&d| geometric(d, self.degree))
            .collect()
    }

    fn subset(&self, indices: &[usize]) -> DivisorInstance {
        DivisorInstance {
            degree: self.degree,
            divisors: indices.iter().map(|&i| self.divisors[i]).collect(),
        }
    }
}

fn check_divides(d: usize, degree: usize) -> Result<()> {
    if d == 0 || degree == 0 || !degree.is_multiple_of(d) {
        return Err(Error::invalid(format!("{d} does not divide {degree}")));
    }
    Ok(())
}

fn geometric(d: usize, degree: usize) -> PolyZ {
    let mut coeffs = vec![BigInt::default(); degree - d + 1];
    for k in (0..=degree - d).step_by(d) {
        coeffs[k] = BigInt::one();
    }
    PolyZ::new(coeffs)
}

/// `1 + x^d + x^{2d} + … + x^{D-d}`.
pub fn build_p(d: usize, degree: usize) -> Result<PolyZ> {
    check_divides(d, degree)?;
    Ok(geometric(d, degree))
}

/// Witness for `(p_i, p_j)` with the gcd in normalized form.
pub fn pairwise_witness(di: usize, dj: usize, degree: usize) -> Result<BezoutPair<PolyZ>> {
    check_divides(di, degree)?;
    check_divides(dj, degree)?;
    let (pi, pj) = (geometric(di, degree), geometric(dj, degree));
    if di == dj {
        return Ok(BezoutPair {
            g: pi.normalize(),
            u: PolyZ::one(),
            v: PolyZ::zero(),
            a: pi,
            b: pj,
        });
    }
    let (alpha, beta) = binomial_bezout(di, dj)?;
    let g = di.gcd(&dj);
    let gcd = (&pi * &PolyZ::one_minus_x_pow(g))
        .exact_div(&PolyZ::one_minus_x_pow(dj))?
        .ok_or(Error::DivisionFailed("pairwise gcd"))?;
    let pair = BezoutPair {
        a: pi,
        b: pj,
        g: gcd,
        u: beta,
        v: alpha,
    };
    Ok(pair.normalized(&IntPolys))
}

/// A full combination certificate for the instance.
pub fn theorem0_certificate(instance: &DivisorInstance) -> Result<CombinationCertificate<PolyZ>> {
    instance.validate()?;
    let elements = instance.polynomials();
    let divisors = &instance.divisors;
    combine_n(&IntPolys, &elements, |i, j| {
        pairwise_witness(divisors[i], divisors[j], instance.degree)
    })
}

/// gcd of the family computed two independent ways, which must agree:
/// folding the remainder-sequence gcd, and `(1 - x^D) / lcm(1 - x^{d_i})`
/// with the lcm from inclusion–exclusion over the divisor gcds.
pub fn gcd_oracle(instance: &DivisorInstance) -> Result<PolyZ> {
    instance.validate()?;
    let folded = IntPolys.gcd_all(&instance.polynomials());
    let via_lcm = gcd_via_binomial_lcm(instance)?;
    if folded != via_lcm {
        return Err(Error::OracleDisagreement(format!(
            "remainder sequence gave {folded}, binomial lcm gave {via_lcm}"
        )));
    }
    Ok(folded)
}

/// `lcm(1 - x^{d_1}, …, 1 - x^{d_n})` is the alternating product of
/// `1 - x^{gcd(d_S)}` over nonempty subsets `S`: odd sizes in the numerator,
/// even sizes in the denominator. For two divisors this is
/// `(1 - x^a)(1 - x^b) / (1 - x^gcd(a, b))`.
fn gcd_via_binomial_lcm(instance: &DivisorInstance) -> Result<PolyZ> {
    let mut distinct = instance.divisors.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let n = distinct.len();
    if n > 20 {
        return Err(Error::invalid(
            "too many distinct divisors for the lcm route",
        ));
    }
    let mut numerator = PolyZ::one();
    let mut denominator = PolyZ::one();
    for mask in 1u32..(1 << n) {
        let g = (0..n)
            .filter(|&k| mask & (1 << k) != 0)
            .fold(0, |acc, k| acc.gcd(&distinct[k]));
        let binomial = PolyZ::one_minus_x_pow(g);
        if mask.count_ones() % 2 == 1 {
            numerator = &numerator * &binomial;
        } else {
            denominator = &denominator * &binomial;
        }
    }
    let lcm = numerator
        .exact_div(&denominator)?
        .ok_or(Error::DivisionFailed("binomial lcm"))?;
    let gcd = PolyZ::one_minus_x_pow(instance.degree)
        .exact_div(&lcm)?
        .ok_or(Error::DivisionFailed("quotient by the binomial lcm"))?;
    Ok(gcd.normalize())
}

/// Generator of the sum of `(n-1)`-fold products of the family, with
/// subset witnesses taken from [`theorem0_certificate`] on each subset.
pub fn theorem0_products(instance: &DivisorInstance) -> Result<SumProductsCertificate<PolyZ>> {
    instance.validate()?;
    let elements = instance.polynomials();
    let cache: RefCell<HashMap<Vec<usize>, PrincipalSumWitness<PolyZ>>> = RefCell::default();
    sum_of_products(&IntPolys, &elements, |subset| {
        if let Some(w) = cache.borrow().get(subset) {
            return Ok(w.clone());
        }
        let cert = theorem0_certificate(&instance.subset(subset))?;
        let multipliers = cert
            .elements
            .iter()
            .map(|p| {
                p.exact_div(&cert.gcd)?
                    .ok_or(Error::DivisionFailed("subset multiplier"))
            })
            .collect::<Result<Vec<_>>>()?;
        let w = PrincipalSumWitness {
            generators: cert.elements,
            generator: cert.gcd,
            combination: cert.coefficients,
            multipliers,
        };
        cache.borrow_mut().insert(subset.to_vec(), w.clone());
        Ok(w)
    })
}

use crate::error::{Error, Result};

use super::PolyZ;

/// Coefficients `(u, v)` in `Z[x]` with
/// `u*(1 - x^a) + v*(1 - x^b) == 1 - x^gcd(a, b)`.
///
/// Runs Euclid on the exponents by subtraction. Each step rewrites the
/// larger binomial as `1 - x^m = (1 - x^(m-n)) + x^(m-n)*(1 - x^n)`, so the
/// remainder binomial is `(1 - x^m) - x^(m-n)*(1 - x^n)` and both running
/// coefficient pairs stay in `Z[x]`. The loop stops as soon as one exponent
/// divides the other, since that binomial already is the gcd.
pub fn binomial_bezout(a: usize, b: usize) -> Result<(PolyZ, PolyZ)> {
    if a == 0 || b == 0 {
        return Err(Error::invalid(format!(
            "binomial exponents must be positive, got ({a}, {b})"
        )));
    }
    // 1 - x^r0 = s0*(1 - x^a) + t0*(1 - x^b), likewise for r1
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut t0) = (PolyZ::one(), PolyZ::zero());
    let (mut s1, mut t1) = (PolyZ::zero(), PolyZ::one());
    loop {
        if r1 % r0 == 0 {
            return Ok((s0, t0));
        }
        if r0 % r1 == 0 {
            return Ok((s1, t1));
        }
        if r0 > r1 {
            let k = r0 - r1;
            s0 = &s0 - &s1.shift(k);
            t0 = &t0 - &t1.shift(k);
            r0 = k;
        } else {
            let k = r1 - r0;
            s1 = &s1 - &s0.shift(k);
            t1 = &t1 - &t0.shift(k);
            r1 = k;
        }
    }
}

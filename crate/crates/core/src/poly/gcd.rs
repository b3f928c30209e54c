use num_integer::Integer;
use num_traits::Zero;

use super::PolyZ;

/// Pseudo-remainder of `a` by nonzero `b`: the remainder of
/// `lc(b)^k * a` by `b` for some `k`, computed without leaving `Z[x]`.
pub fn pseudo_rem(a: &PolyZ, b: &PolyZ) -> PolyZ {
    let db = b.degree().expect("pseudo-remainder by zero");
    let lb = b.leading_coeff().unwrap();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.leading_coeff().unwrap().clone();
        // lc(b)*r - lc(r)*x^(dr-db)*b cancels the leading term
        let mut coeffs: Vec<_> = r.coeffs.iter().map(|c| c * lb).collect();
        for (i, c) in b.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[dr - db + i] -= &lr * c;
            }
        }
        r = PolyZ::new(coeffs);
    }
    r
}

/// Greatest common divisor in `Z[x]`: gcd of contents times the gcd of the
/// primitive parts, the latter from a primitive remainder sequence. The
/// result has positive leading coefficient.
pub fn gcd(p: &PolyZ, q: &PolyZ) -> PolyZ {
    if q.is_zero() {
        return p.normalize();
    }
    if p.is_zero() {
        return q.normalize();
    }
    let content = p.content().gcd(&q.content());
    let (mut a, mut b) = (p.primitive_part(), q.primitive_part());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = r.primitive_part();
    }
    a.primitive_part().scale(&content)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> PolyZ {
        PolyZ::from_i64s(c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&p(&[-1, 0, 1]), &p(&[-1, 0, 0, 1])), p(&[-1, 1]));
        assert_eq!(gcd(&p(&[2, 2]), &p(&[-4, 0, 4])), p(&[2, 2]));
        let q = p(&[3, 0, -6]);
        assert_eq!(gcd(&q, &PolyZ::zero()), q.normalize());
        assert_eq!(gcd(&PolyZ::zero(), &q), q.normalize());
        assert!(gcd(&PolyZ::zero(), &PolyZ::zero()).is_zero());
    }

    #[test]
    fn gcd_of_binomials_uses_normalized_sign() {
        let a = PolyZ::one_minus_x_pow(2);
        let b = PolyZ::one_minus_x_pow(3);
        assert_eq!(gcd(&a, &b), p(&[-1, 1]));
    }

    #[test]
    fn gcd_of_constants_is_integer_gcd() {
        assert_eq!(gcd(&p(&[-12]), &p(&[18])), p(&[6]));
        assert_eq!(gcd(&p(&[4, 6]), &p(&[3])), p(&[1]));
    }

    #[test]
    fn coprime_gives_one() {
        assert_eq!(gcd(&p(&[1, 1]), &p(&[1, 0, 1])), PolyZ::one());
    }

    #[test]
    fn pseudo_rem_is_in_the_ideal() {
        // prem(a, b) must be zero when b divides a
        let b = p(&[1, 2, 3]);
        let a = &b * &p(&[5, -1, 7]);
        assert!(pseudo_rem(&a, &b).is_zero());
        // and the leading power of lc(b) clears denominators
        let r = pseudo_rem(&p(&[0, 0, 1]), &p(&[1, 2]));
        assert_eq!(r, PolyZ::constant(BigInt::from(1)));
    }
}

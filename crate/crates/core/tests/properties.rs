use gcdcert::ring::{GcdRing, Ring};
use gcdcert::{
    combine_n, ext_gcd, gcd_oracle, int_subset_witness, int_sum_of_products, intersect_principal,
    pairwise_witness, theorem0_certificate, theorem0_products, verify_bezout, verify_certificate,
    verify_sum_products, DivisorInstance, IntPolys, Integers, LemmaWitness, PolyZ,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn int() -> impl Strategy<Value = BigInt> {
    (-1_000_000_000i64..=1_000_000_000).prop_map(BigInt::from)
}

fn nonzero_int(bound: i64) -> impl Strategy<Value = BigInt> {
    (1..=bound, any::<bool>()).prop_map(|(v, neg)| BigInt::from(if neg { -v } else { v }))
}

fn poly() -> impl Strategy<Value = PolyZ> {
    prop::collection::vec(-20i64..=20, 0..6).prop_map(|c| PolyZ::from_i64s(&c))
}

fn nonzero_poly() -> impl Strategy<Value = PolyZ> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

macro_rules! ring_axioms {
    ($name:ident, $ring:expr, $elem:expr) => {
        mod $name {
            use super::*;

            proptest! {
                #[test]
                fn associativity(a in $elem, b in $elem, c in $elem) {
                    let r = $ring;
                    prop_assert_eq!(r.add(&r.add(&a, &b), &c), r.add(&a, &r.add(&b, &c)));
                    prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
                }

                #[test]
                fn commutativity(a in $elem, b in $elem) {
                    let r = $ring;
                    prop_assert_eq!(r.add(&a, &b), r.add(&b, &a));
                    prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
                }

                #[test]
                fn distributivity(a in $elem, b in $elem, c in $elem) {
                    let r = $ring;
                    prop_assert_eq!(r.mul(&a, &r.add(&b, &c)), r.add(&r.mul(&a, &b), &r.mul(&a, &c)));
                }

                #[test]
                fn identities_and_inverse(a in $elem) {
                    let r = $ring;
                    prop_assert_eq!(r.add(&a, &r.zero()), a.clone());
                    prop_assert_eq!(r.mul(&a, &r.one()), a.clone());
                    prop_assert!(r.is_zero(&r.add(&a, &r.neg(&a))));
                }

                #[test]
                fn exact_div_inverts_mul(a in $elem, b in $elem) {
                    let r = $ring;
                    prop_assume!(!r.is_zero(&b));
                    prop_assert_eq!(r.exact_div(&r.mul(&a, &b), &b), Some(a));
                }

                #[test]
                fn normalize_is_idempotent_and_associate_stable(a in $elem) {
                    let r = $ring;
                    let n = r.normalize(&a);
                    prop_assert_eq!(r.normalize(&n), n.clone());
                    prop_assert_eq!(r.normalize(&r.neg(&a)), n);
                }

                #[test]
                fn gcd_divides_and_is_normalized(a in $elem, b in $elem) {
                    let r = $ring;
                    let g = r.gcd(&a, &b);
                    prop_assert!(r.divides(&g, &a) && r.divides(&g, &b));
                    prop_assert!(r.is_normalized(&g));
                    prop_assert_eq!(r.gcd(&a, &r.zero()), r.normalize(&a));
                }
            }
        }
    };
}

ring_axioms!(integer_ring, Integers, int());
ring_axioms!(polynomial_ring, IntPolys, poly());

proptest! {
    #[test]
    fn ext_gcd_is_a_bezout_witness(a in int(), b in int()) {
        let w = ext_gcd(&a, &b);
        prop_assert!(verify_bezout(&w, &Integers));
        prop_assert!(!w.g.is_negative());
        prop_assert_eq!(w.g.is_zero(), a.is_zero() && b.is_zero());
    }

    #[test]
    fn ext_gcd_against_trial_division(a in -100_000i64..100_000, b in -100_000i64..100_000) {
        let g = ext_gcd(&BigInt::from(a), &BigInt::from(b)).g;
        for k in 1..=1000i64 {
            if a % k == 0 && b % k == 0 {
                prop_assert!(g.is_multiple_of(&BigInt::from(k)));
            }
        }
    }

    #[test]
    fn poly_gcd_scales_with_content(p in poly(), q in poly(), c in nonzero_int(50)) {
        let lhs = IntPolys.gcd(&p.scale(&c), &q.scale(&c));
        prop_assert_eq!(lhs, IntPolys.gcd(&p, &q).scale(&c.abs()));
    }

    #[test]
    fn poly_gcd_commutes_with_evaluation(common in poly(), p in poly(), q in poly(), x in -30i64..=30) {
        let (p, q) = (&common * &p, &common * &q);
        let g = IntPolys.gcd(&p, &q);
        let x = BigInt::from(x);
        let at = p.eval(&x).gcd(&q.eval(&x));
        let gx = g.eval(&x);
        if gx.is_zero() {
            prop_assert!(at.is_zero());
        } else {
            prop_assert!(at.is_multiple_of(&gx));
        }
    }

    #[test]
    fn poly_gcd_recovers_planted_factor(f in nonzero_poly(), p in nonzero_poly(), q in nonzero_poly()) {
        let g = IntPolys.gcd(&(&f * &p), &(&f * &q));
        prop_assert!(IntPolys.divides(&f, &g));
    }

    #[test]
    fn combine_n_certifies_random_tuples(p in prop::collection::vec(nonzero_int(1_000_000), 1..=8)) {
        let cert = combine_n(&Integers, &p, |i, j| Ok(ext_gcd(&p[i], &p[j]))).unwrap();
        prop_assert!(verify_certificate(&cert, &Integers));
    }

    #[test]
    fn combine_n_scale_invariance(p in prop::collection::vec(nonzero_int(10_000), 2..=6), c in nonzero_int(1000)) {
        let scaled: Vec<BigInt> = p.iter().map(|x| x * &c).collect();
        let base = combine_n(&Integers, &p, |i, j| Ok(ext_gcd(&p[i], &p[j]))).unwrap();
        let cert = combine_n(&Integers, &scaled, |i, j| Ok(ext_gcd(&scaled[i], &scaled[j]))).unwrap();
        prop_assert_eq!(cert.gcd, base.gcd * c.abs());
    }

    #[test]
    fn combine_n_gcd_is_permutation_invariant(
        p in prop::collection::vec(nonzero_int(100_000), 2..=7),
        seed in any::<u64>(),
    ) {
        let mut shuffled = p.clone();
        let len = shuffled.len();
        shuffled.rotate_left((seed as usize) % len);
        shuffled.swap(0, (seed as usize / 7) % len);
        let a = combine_n(&Integers, &p, |i, j| Ok(ext_gcd(&p[i], &p[j]))).unwrap();
        let b = combine_n(&Integers, &shuffled, |i, j| Ok(ext_gcd(&shuffled[i], &shuffled[j]))).unwrap();
        prop_assert_eq!(&a.gcd, &b.gcd);
        prop_assert!(verify_certificate(&b, &Integers));
    }

    #[test]
    fn intersection_is_lcm(a in nonzero_int(1_000_000), b in nonzero_int(1_000_000)) {
        let w = ext_gcd(&a, &b);
        let lemma = LemmaWitness {
            p: &a / &w.g,
            q: &b / &w.g,
            a: a.clone(),
            b: b.clone(),
            d: w.g,
            u: w.u,
            v: w.v,
        };
        let m = intersect_principal(&Integers, &lemma).unwrap();
        prop_assert_eq!(m.abs(), a.lcm(&b));
        prop_assert_eq!(&m * &lemma.d, &a * &b);
    }

    #[test]
    fn sum_of_products_generator(p in prop::collection::vec(1i64..=10_000, 2..=6)) {
        let p: Vec<BigInt> = p.into_iter().map(BigInt::from).collect();
        let cert = int_sum_of_products(&p).unwrap();
        prop_assert!(verify_sum_products(&cert, &Integers));
        let total: BigInt = p.iter().product();
        let lcm = p.iter().fold(BigInt::one(), |acc, x| acc.lcm(x));
        prop_assert_eq!(cert.generator().clone(), total / lcm);
        // an independent fold over the products lands on the same ideal
        let folded = int_subset_witness(&cert.products).unwrap();
        prop_assert!(Integers.associates(&folded.generator, cert.generator()));
    }

    #[test]
    fn sum_of_products_with_signs_and_zeros(p in prop::collection::vec(-50i64..=50, 2..=5)) {
        let p: Vec<BigInt> = p.into_iter().map(BigInt::from).collect();
        let cert = int_sum_of_products(&p).unwrap();
        prop_assert!(verify_sum_products(&cert, &Integers));
        let folded = int_subset_witness(&cert.products).unwrap();
        prop_assert!(Integers.associates(&folded.generator, cert.generator()));
    }
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[test]
fn binomial_family_pairs_verify_against_prs() {
    for degree in [8, 18, 42] {
        let divs = divisors(degree);
        for &a in &divs {
            for &b in &divs {
                let w = pairwise_witness(a, b, degree).unwrap();
                assert!(verify_bezout(&w, &IntPolys), "({a}, {b}, {degree})");
                assert!(IntPolys.associates(&w.g, &IntPolys.gcd(&w.a, &w.b)));
            }
        }
    }
}

#[test]
fn binomial_family_certificates_match_oracle() {
    for degree in [8, 18, 20, 42] {
        let divs = divisors(degree);
        for mask in 1u32..(1 << divs.len()) {
            if mask.count_ones() > 4 {
                continue;
            }
            let subset: Vec<usize> = (0..divs.len())
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| divs[k])
                .collect();
            let instance = DivisorInstance::new(degree, subset).unwrap();
            let cert = theorem0_certificate(&instance).unwrap();
            assert!(verify_certificate(&cert, &IntPolys), "{instance:?}");
            assert_eq!(cert.gcd, gcd_oracle(&instance).unwrap(), "{instance:?}");
        }
    }
}

#[test]
fn binomial_family_products_verify() {
    for (degree, divs) in [
        (6, vec![1, 2, 3]),
        (12, vec![2, 3, 4]),
        (12, vec![1, 4, 6, 12]),
        (30, vec![2, 3, 5]),
        (24, vec![3, 4, 6, 8, 12]),
    ] {
        let instance = DivisorInstance::new(degree, divs).unwrap();
        let cert = theorem0_products(&instance).unwrap();
        assert!(verify_sum_products(&cert, &IntPolys), "{instance:?}");
        for prod in &cert.products {
            assert!(IntPolys.divides(cert.generator(), prod));
        }
        // the same ideal through a plain gcd fold over the products
        let folded = IntPolys.gcd_all(&cert.products);
        assert!(
            IntPolys.associates(&folded, cert.generator()),
            "{instance:?}"
        );
    }
}

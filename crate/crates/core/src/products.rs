//! Principal-ideal intersections and the generator of the sum of all
//! `(n-1)`-fold products `S(p_1, …, p_n)`.
//!
//! Everything is threaded with explicit witnesses: a generator `g` comes
//! with coefficients expressing it from the products and with multipliers
//! expressing every product as a multiple of `g`.
//!
//! For `n >= 3` the generator is `f*m`, where `f` generates `(p_1, p_2)` and
//! `m` generates the intersection of `S(p_1, p_3, …)` and `S(p_2, p_3, …)`.
//! The intersection needs a generator of the sum of those two ideals; that
//! sum equals `S(f, p_3, …)`, which is certified recursively.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::int::{ext_gcd, Integers};
use crate::ring::Ring;

/// Witness that `<a> + <b> = <d>`: `d == a*u + b*v`, `a == p*d`, `b == q*d`.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaWitness<E> {
    pub a: E,
    pub b: E,
    pub d: E,
    pub u: E,
    pub v: E,
    pub p: E,
    pub q: E,
}

impl<E: Clone> LemmaWitness<E> {
    pub fn verify<R: Ring<Elem = E>>(&self, ring: &R) -> bool {
        let combo = ring.add(&ring.mul(&self.a, &self.u), &ring.mul(&self.b, &self.v));
        ring.equals(&combo, &self.d)
            && ring.equals(&ring.mul(&self.p, &self.d), &self.a)
            && ring.equals(&ring.mul(&self.q, &self.d), &self.b)
    }
}

/// Generator `m = p*q*d` of `<a> ∩ <b>`. It satisfies `m*d == a*b`.
pub fn intersect_principal<R: Ring>(ring: &R, w: &LemmaWitness<R::Elem>) -> Result<R::Elem> {
    if !w.verify(ring) {
        return Err(Error::bad_witness("principal intersection"));
    }
    Ok(ring.product([&w.p, &w.q, &w.d]))
}

/// Two-sided witness that `<generators> = <generator>`.
#[derive(Debug, Clone, PartialEq)]
pub struct PrincipalSumWitness<E> {
    pub generators: Vec<E>,
    pub generator: E,
    pub combination: Vec<E>,
    pub multipliers: Vec<E>,
}

impl<E: Clone> PrincipalSumWitness<E> {
    pub fn verify<R: Ring<Elem = E>>(&self, ring: &R) -> bool {
        let k = self.generators.len();
        k == self.combination.len()
            && k == self.multipliers.len()
            && ring.equals(
                &ring.dot(&self.combination, &self.generators),
                &self.generator,
            )
            && self
                .generators
                .iter()
                .zip(&self.multipliers)
                .all(|(a, m)| ring.equals(&ring.mul(m, &self.generator), a))
    }
}

/// The generator of `S(inputs)` with its witness over the products
/// `products[i] = Π_{j≠i} inputs[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SumProductsCertificate<E> {
    pub inputs: Vec<E>,
    pub products: Vec<E>,
    pub witness: PrincipalSumWitness<E>,
}

impl<E> SumProductsCertificate<E> {
    pub fn generator(&self) -> &E {
        &self.witness.generator
    }
}

/// All `n` products omitting one factor each.
pub fn omitted_products<R: Ring>(ring: &R, inputs: &[R::Elem]) -> Vec<R::Elem> {
    (0..inputs.len())
        .map(|i| {
            ring.product(
                inputs
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, p)| p),
            )
        })
        .collect()
}

/// Subset witnesses are requested with strictly ascending indices and must
/// list their generators in the same order.
type SubsetProvider<'a, E> = dyn Fn(&[usize]) -> Result<PrincipalSumWitness<E>> + 'a;

/// Certifies that `S(inputs)` is principal. `subset_witness(H)` must return
/// a witness that the elements indexed by `H` generate a principal ideal.
pub fn sum_of_products<R, F>(
    ring: &R,
    inputs: &[R::Elem],
    subset_witness: F,
) -> Result<SumProductsCertificate<R::Elem>>
where
    R: Ring,
    F: Fn(&[usize]) -> Result<PrincipalSumWitness<R::Elem>>,
{
    if inputs.len() < 2 {
        return Err(Error::invalid(
            "sum of products needs at least two elements",
        ));
    }
    let node = sop_rec(ring, inputs, &subset_witness)?;
    let products = omitted_products(ring, inputs);
    Ok(SumProductsCertificate {
        inputs: inputs.to_vec(),
        witness: PrincipalSumWitness {
            generators: products.clone(),
            generator: node.generator,
            combination: node.combination,
            multipliers: node.multipliers,
        },
        products,
    })
}

/// Generator of `S(elems)` with coefficients and multipliers indexed like
/// the omitted products.
struct Node<E> {
    generator: E,
    combination: Vec<E>,
    multipliers: Vec<E>,
}

fn fetch_subset<R: Ring>(
    ring: &R,
    elems: &[R::Elem],
    provider: &SubsetProvider<'_, R::Elem>,
    subset: &[usize],
) -> Result<PrincipalSumWitness<R::Elem>> {
    let w = provider(subset)?;
    let matches = w.generators.len() == subset.len()
        && subset
            .iter()
            .zip(&w.generators)
            .all(|(&i, g)| ring.equals(&elems[i], g));
    if !matches || !w.verify(ring) {
        return Err(Error::bad_witness(format!("subset {subset:?}")));
    }
    Ok(w)
}

fn normalized<R: Ring>(ring: &R, node: Node<R::Elem>) -> Node<R::Elem> {
    let unit = ring.normalizing_unit(&node.generator);
    let inverse = ring.unit_inverse(&unit);
    Node {
        generator: ring.mul(&unit, &node.generator),
        combination: node
            .combination
            .iter()
            .map(|c| ring.mul(&unit, c))
            .collect(),
        multipliers: node
            .multipliers
            .iter()
            .map(|m| ring.mul(&inverse, m))
            .collect(),
    }
}

fn sop_rec<R: Ring>(
    ring: &R,
    elems: &[R::Elem],
    provider: &SubsetProvider<'_, R::Elem>,
) -> Result<Node<R::Elem>> {
    let n = elems.len();
    let pair = fetch_subset(ring, elems, provider, &[0, 1])?;
    if n == 2 {
        // the products are (p2, p1)
        let [c1, c2]: [R::Elem; 2] = pair.combination.try_into().unwrap();
        let [m1, m2]: [R::Elem; 2] = pair.multipliers.try_into().unwrap();
        return Ok(normalized(
            ring,
            Node {
                generator: pair.generator,
                combination: vec![c2, c1],
                multipliers: vec![m2, m1],
            },
        ));
    }

    // f = c1*p1 + c2*p2, p1 = mu1*f, p2 = mu2*f
    let f = pair.generator.clone();
    let (c1, c2) = (&pair.combination[0], &pair.combination[1]);
    let (mu1, mu2) = (&pair.multipliers[0], &pair.multipliers[1]);
    let rest = &elems[2..];

    let with_head = |head: &R::Elem| {
        let mut list = Vec::with_capacity(n - 1);
        list.push(head.clone());
        list.extend_from_slice(rest);
        list
    };
    let shift_rest = |subset: &[usize]| subset.iter().map(|&k| k + 1).collect::<Vec<_>>();
    let via_head = |head: usize| {
        move |subset: &[usize]| {
            let mapped: Vec<usize> = subset
                .iter()
                .map(|&k| if k == 0 { head } else { k + 1 })
                .collect();
            provider(&mapped)
        }
    };
    // a subset containing f stands for the subset containing both p1 and p2
    let via_f = |subset: &[usize]| -> Result<PrincipalSumWitness<R::Elem>> {
        if subset.first() != Some(&0) {
            return provider(&shift_rest(subset));
        }
        let mut mapped = vec![0, 1];
        mapped.extend(shift_rest(&subset[1..]));
        let w = fetch_subset(ring, elems, provider, &mapped)?;
        let mut generators = vec![f.clone()];
        generators.extend_from_slice(&w.generators[2..]);
        let mut combination = vec![ring.add(
            &ring.mul(&w.combination[0], mu1),
            &ring.mul(&w.combination[1], mu2),
        )];
        combination.extend_from_slice(&w.combination[2..]);
        let mut multipliers = vec![ring.add(
            &ring.mul(c1, &w.multipliers[0]),
            &ring.mul(c2, &w.multipliers[1]),
        )];
        multipliers.extend_from_slice(&w.multipliers[2..]);
        Ok(PrincipalSumWitness {
            generators,
            generator: w.generator,
            combination,
            multipliers,
        })
    };

    // index 0 omits the head, index k >= 1 omits rest[k-1]
    let s1 = sop_rec(ring, &with_head(&elems[0]), &via_head(0))?;
    let s2 = sop_rec(ring, &with_head(&elems[1]), &via_head(1))?;
    let sf = sop_rec(ring, &with_head(&f), &via_f)?;

    // s_F = u*s1 + v*s2: the common product goes to s1, and f*(sub-product)
    // splits as c1*(p1*sub-product) + c2*(p2*sub-product).
    let mut u = ring.mul(&sf.combination[0], &s1.multipliers[0]);
    let mut v = ring.zero();
    for k in 1..n - 1 {
        u = ring.add(
            &u,
            &ring.product([&sf.combination[k], c1, &s1.multipliers[k]]),
        );
        v = ring.add(
            &v,
            &ring.product([&sf.combination[k], c2, &s2.multipliers[k]]),
        );
    }
    // s1 = p*s_F and s2 = q*s_F, through p1*(sub-product) = mu1*f*(sub-product)
    let cofactor = |s: &Node<R::Elem>, mu: &R::Elem| {
        let mut acc = ring.mul(&s.combination[0], &sf.multipliers[0]);
        for k in 1..n - 1 {
            acc = ring.add(
                &acc,
                &ring.product([&s.combination[k], mu, &sf.multipliers[k]]),
            );
        }
        acc
    };
    let lemma = LemmaWitness {
        a: s1.generator.clone(),
        b: s2.generator.clone(),
        d: sf.generator.clone(),
        u,
        v,
        p: cofactor(&s1, mu1),
        q: cofactor(&s2, mu2),
    };
    let m = intersect_principal(ring, &lemma)?;
    let generator = ring.mul(&f, &m);

    // w = a*s = b*t lies in <m> with w = m*(t*u + v*s)
    let in_intersection =
        |s: &R::Elem, t: &R::Elem| ring.add(&ring.mul(t, &lemma.u), &ring.mul(&lemma.v, s));
    let x0 = in_intersection(&s1.multipliers[0], &s2.multipliers[0]);
    let mut multipliers = vec![ring.mul(mu2, &x0), ring.mul(mu1, &x0)];
    for k in 1..n - 1 {
        multipliers.push(in_intersection(
            &ring.mul(mu2, &s1.multipliers[k]),
            &ring.mul(mu1, &s2.multipliers[k]),
        ));
    }

    // g = c1*p1*m + c2*p2*m with m = p*s2 = q*s1
    let left = ring.mul(c1, &lemma.p);
    let right = ring.mul(c2, &lemma.q);
    let mut combination = vec![
        ring.mul(&right, &s1.combination[0]),
        ring.mul(&left, &s2.combination[0]),
    ];
    for k in 1..n - 1 {
        combination.push(ring.add(
            &ring.mul(&left, &s2.combination[k]),
            &ring.mul(&right, &s1.combination[k]),
        ));
    }

    Ok(normalized(
        ring,
        Node {
            generator,
            combination,
            multipliers,
        },
    ))
}

/// Which invariant of a [`SumProductsCertificate`] failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductsFailure {
    LengthMismatch,
    WrongProduct { index: usize },
    CombinationIdentity,
    Multiplier { index: usize },
}

impl std::fmt::Display for ProductsFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProductsFailure::LengthMismatch => write!(f, "array lengths differ"),
            ProductsFailure::WrongProduct { index } => write!(f, "product {index} is incorrect"),
            ProductsFailure::CombinationIdentity => write!(f, "combination identity"),
            ProductsFailure::Multiplier { index } => {
                write!(f, "multiplier {index} does not reproduce its product")
            }
        }
    }
}

pub fn check_sum_products<R: Ring>(
    cert: &SumProductsCertificate<R::Elem>,
    ring: &R,
) -> Vec<ProductsFailure> {
    let n = cert.inputs.len();
    let w = &cert.witness;
    if n < 2
        || cert.products.len() != n
        || w.combination.len() != n
        || w.multipliers.len() != n
        || w.generators.len() != n
    {
        return vec![ProductsFailure::LengthMismatch];
    }
    let mut failures = Vec::new();
    let expected = omitted_products(ring, &cert.inputs);
    for (index, (have, want)) in cert.products.iter().zip(&expected).enumerate() {
        if !ring.equals(have, want) || !ring.equals(&w.generators[index], want) {
            failures.push(ProductsFailure::WrongProduct { index });
        }
    }
    if !ring.equals(&ring.dot(&w.combination, &cert.products), &w.generator) {
        failures.push(ProductsFailure::CombinationIdentity);
    }
    for (index, (m, prod)) in w.multipliers.iter().zip(&cert.products).enumerate() {
        if !ring.equals(&ring.mul(m, &w.generator), prod) {
            failures.push(ProductsFailure::Multiplier { index });
        }
    }
    failures
}

pub fn verify_sum_products<R: Ring>(cert: &SumProductsCertificate<R::Elem>, ring: &R) -> bool {
    check_sum_products(cert, ring).is_empty()
}

/// Over the integers every ideal is principal: the generator is the gcd,
/// the combination comes from folding extended Euclid, and the multipliers
/// are the cofactors (all zero when the generator is zero).
pub fn int_subset_witness(values: &[BigInt]) -> Result<PrincipalSumWitness<BigInt>> {
    if values.is_empty() {
        return Err(Error::invalid("empty subset"));
    }
    let mut generator = Integers.zero();
    let mut combination: Vec<BigInt> = Vec::with_capacity(values.len());
    for a in values {
        let step = ext_gcd(&generator, a);
        for c in &mut combination {
            *c *= &step.u;
        }
        combination.push(step.v);
        generator = step.g;
    }
    let multipliers = values
        .iter()
        .map(|a| Integers.exact_div(a, &generator).unwrap_or_default())
        .collect();
    Ok(PrincipalSumWitness {
        generators: values.to_vec(),
        generator,
        combination,
        multipliers,
    })
}

/// Certificate for integer inputs with subset witnesses from
/// [`int_subset_witness`].
pub fn int_sum_of_products(inputs: &[BigInt]) -> Result<SumProductsCertificate<BigInt>> {
    let cache: RefCell<HashMap<Vec<usize>, PrincipalSumWitness<BigInt>>> = RefCell::default();
    sum_of_products(&Integers, inputs, |subset| {
        if let Some(w) = cache.borrow().get(subset) {
            return Ok(w.clone());
        }
        let values: Vec<BigInt> = subset.iter().map(|&i| inputs[i].clone()).collect();
        let w = int_subset_witness(&values)?;
        cache.borrow_mut().insert(subset.to_vec(), w.clone());
        Ok(w)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{IntPolys, PolyZ};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().copied().map(BigInt::from).collect()
    }

    fn lemma(v: [i64; 7]) -> LemmaWitness<BigInt> {
        let [a, b, d, u, v, p, q] = v.map(BigInt::from);
        LemmaWitness {
            a,
            b,
            d,
            u,
            v,
            p,
            q,
        }
    }

    #[test]
    fn intersect_examples() {
        let w = lemma([4, 6, 2, -1, 1, 2, 3]);
        let m = intersect_principal(&Integers, &w).unwrap();
        assert_eq!(m, BigInt::from(12));
        assert_eq!(&m * &w.d, &w.a * &w.b);

        let m = intersect_principal(&Integers, &lemma([5, 0, 5, 1, 0, 1, 0])).unwrap();
        assert_eq!(m, BigInt::from(0));
    }

    #[test]
    fn intersect_polynomial_example() {
        let p = PolyZ::from_i64s;
        let w = LemmaWitness {
            a: PolyZ::one_minus_x_pow(2),
            b: PolyZ::one_minus_x_pow(3),
            d: PolyZ::one_minus_x_pow(1),
            u: p(&[0, -1]),
            v: p(&[1]),
            p: p(&[1, 1]),
            q: p(&[1, 1, 1]),
        };
        let m = intersect_principal(&IntPolys, &w).unwrap();
        assert_eq!(m, p(&[1, 1, 0, -1, -1]));
        assert_eq!(&m * &w.d, &w.a * &w.b);
    }

    #[test]
    fn intersect_rejects_bad_witness() {
        assert!(matches!(
            intersect_principal(&Integers, &lemma([4, 6, 2, 1, 1, 2, 3])),
            Err(Error::InvalidWitness { .. })
        ));
        assert!(intersect_principal(&Integers, &lemma([4, 6, 2, -1, 1, 2, 4])).is_err());
    }

    #[test]
    fn int_subset_witness_examples() {
        let w = int_subset_witness(&ints(&[4, 6])).unwrap();
        assert_eq!(w.generator, BigInt::from(2));
        assert_eq!(w.combination, ints(&[-1, 1]));
        assert_eq!(w.multipliers, ints(&[2, 3]));

        let w = int_subset_witness(&ints(&[5])).unwrap();
        assert_eq!(
            (w.generator, w.combination, w.multipliers),
            (BigInt::from(5), ints(&[1]), ints(&[1]))
        );

        let w = int_subset_witness(&ints(&[0, 0])).unwrap();
        assert_eq!(w.generator, BigInt::from(0));
        assert_eq!(w.multipliers, ints(&[0, 0]));
        assert!(w.verify(&Integers));

        let w = int_subset_witness(&ints(&[-9, 12, 0])).unwrap();
        assert_eq!(w.generator, BigInt::from(3));
        assert!(w.verify(&Integers));
    }

    #[test]
    fn sum_of_products_examples() {
        for (inputs, expected) in [
            (&[2, 3, 5][..], 1),
            (&[4, 6, 10], 4),
            (&[6, 10, 15], 30),
            (&[2, 3], 1),
        ] {
            let cert = int_sum_of_products(&ints(inputs)).unwrap();
            assert_eq!(cert.generator(), &BigInt::from(expected), "{inputs:?}");
            assert!(verify_sum_products(&cert, &Integers));
        }
        let cert = int_sum_of_products(&ints(&[4, 6, 10])).unwrap();
        assert_eq!(cert.products, ints(&[60, 40, 24]));
    }

    #[test]
    fn sum_of_products_with_zero_input() {
        let cert = int_sum_of_products(&ints(&[0, 6, 10])).unwrap();
        assert_eq!(cert.generator(), &BigInt::from(60));
        assert!(verify_sum_products(&cert, &Integers));

        let cert = int_sum_of_products(&ints(&[0, 0, 7, 3])).unwrap();
        assert_eq!(cert.generator(), &BigInt::from(0));
        assert!(verify_sum_products(&cert, &Integers));
    }

    #[test]
    fn sum_of_products_longer_and_negative() {
        let cert = int_sum_of_products(&ints(&[12, -18, 20, 45, 7, 30])).unwrap();
        assert!(verify_sum_products(&cert, &Integers));
        assert!(cert.generator() > &BigInt::from(0));
    }

    #[test]
    fn sum_of_products_errors() {
        assert!(matches!(
            int_sum_of_products(&ints(&[3])),
            Err(Error::InvalidInput(_))
        ));
        let bad = |_: &[usize]| {
            Ok(PrincipalSumWitness {
                generators: ints(&[1, 2]),
                generator: BigInt::from(1),
                combination: ints(&[1, 0]),
                multipliers: ints(&[1, 2]),
            })
        };
        assert!(matches!(
            sum_of_products(&Integers, &ints(&[4, 6]), bad),
            Err(Error::InvalidWitness { .. })
        ));
    }

    #[test]
    fn check_reports_tampering() {
        let cert = int_sum_of_products(&ints(&[4, 6, 10])).unwrap();
        let mut bad = cert.clone();
        bad.witness.multipliers[1] += 1;
        assert_eq!(
            check_sum_products(&bad, &Integers),
            vec![ProductsFailure::Multiplier { index: 1 }]
        );
        let mut bad = cert.clone();
        bad.witness.generator *= 2;
        assert!(check_sum_products(&bad, &Integers).contains(&ProductsFailure::CombinationIdentity));
        let mut bad = cert;
        bad.products[0] += 1;
        assert!(check_sum_products(&bad, &Integers)
            .contains(&ProductsFailure::WrongProduct { index: 0 }));
    }
}

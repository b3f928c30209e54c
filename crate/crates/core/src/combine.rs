//! Expressing the gcd of several elements of a UFD as a linear combination
//! of them, given a Bézout witness for every pair.
//!
//! Three elements are handled in closed form. Write `d` for the overall gcd
//! and `d*e_k` for the gcd of the two elements other than `p_k`. The `e_k`
//! are pairwise coprime, so `p_i = d*e_j*e_k*f_i` for `{i, j, k} = {1, 2, 3}`,
//! and each pairwise witness reduces to
//! `u_ij*e_j*f_i + u_ji*e_i*f_j == 1`. Multiplying two of those together
//! gives
//!
//! ```text
//! w1 = u12*u13*f1,  w2 = u21*u23*f2,  w3 = u12*u31*f1 + u21*u32*f2
//! ```
//!
//! with `w1*p1 + w2*p2 + w3*p3 == d`. Longer lists merge their last two
//! elements into their gcd `g` and recurse; the witness for a pair
//! `(p_i, g)` comes from the three-element case on `(p_i, p_{n-1}, p_n)`.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ring::{BezoutPair, GcdRing, Ring};

/// `Σ coefficients[i] * elements[i] == gcd`, with `gcd` normalized and
/// dividing every element.
#[derive(Debug, Clone, PartialEq)]
pub struct CombinationCertificate<E> {
    pub elements: Vec<E>,
    pub gcd: E,
    pub coefficients: Vec<E>,
}

/// Intermediate quantities of the three-element construction.
/// Index `k` of `e` and `f` refers to element `k` (zero-based).
#[derive(Debug, Clone, PartialEq)]
pub struct Combine3Trace<E> {
    pub d: E,
    pub e: [E; 3],
    pub f: [E; 3],
}

/// The six pairwise coefficients for three elements. `u12` multiplies
/// `p1` and `u21` multiplies `p2` in the witness for the pair `(p1, p2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseCoefficients<E> {
    pub u12: E,
    pub u21: E,
    pub u13: E,
    pub u31: E,
    pub u23: E,
    pub u32: E,
}

impl<E: Clone> PairwiseCoefficients<E> {
    /// From witnesses for `(p1, p2)`, `(p1, p3)` and `(p2, p3)`, in that order.
    pub fn from_pairs(w12: &BezoutPair<E>, w13: &BezoutPair<E>, w23: &BezoutPair<E>) -> Self {
        PairwiseCoefficients {
            u12: w12.u.clone(),
            u21: w12.v.clone(),
            u13: w13.u.clone(),
            u31: w13.v.clone(),
            u23: w23.u.clone(),
            u32: w23.v.clone(),
        }
    }

    /// `(coefficient on p_i, coefficient on p_j)` for zero-based `i != j`.
    pub fn pair(&self, i: usize, j: usize) -> (&E, &E) {
        match (i, j) {
            (0, 1) => (&self.u12, &self.u21),
            (1, 0) => (&self.u21, &self.u12),
            (0, 2) => (&self.u13, &self.u31),
            (2, 0) => (&self.u31, &self.u13),
            (1, 2) => (&self.u23, &self.u32),
            (2, 1) => (&self.u32, &self.u23),
            _ => panic!("no pair ({i}, {j}) among three elements"),
        }
    }
}

impl<E: Clone + PartialEq> Combine3Trace<E> {
    /// Checks `p_i = d*e_j*e_k*f_i`, pairwise coprimality of the `e_k`,
    /// and `u_{i,i+1}*e_{i+1}*f_i + u_{i+1,i}*e_i*f_{i+1} == 1` for each
    /// cyclic `i`.
    pub fn verify<R: GcdRing<Elem = E>>(
        &self,
        ring: &R,
        elements: &[E; 3],
        u: &PairwiseCoefficients<E>,
    ) -> bool {
        let one = ring.one();
        (0..3).all(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let factored = ring.product([&self.d, &self.e[j], &self.e[k], &self.f[i]]);
            let (uij, uji) = u.pair(i, j);
            let reduced = ring.add(
                &ring.product([uij, &self.e[j], &self.f[i]]),
                &ring.product([uji, &self.e[i], &self.f[j]]),
            );
            ring.equals(&factored, &elements[i])
                && ring.equals(&ring.normalize(&ring.gcd(&self.e[i], &self.e[j])), &one)
                && ring.equals(&reduced, &one)
        })
    }
}

fn exact<R: Ring>(ring: &R, a: &R::Elem, b: &R::Elem, what: &'static str) -> Result<R::Elem> {
    ring.exact_div(a, b).ok_or(Error::DivisionFailed(what))
}

/// Certificate for two elements from their witness. The witness may use any
/// associate of the gcd; it is rescaled to the normalized one.
pub fn combine2<R: GcdRing>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
    w: &BezoutPair<R::Elem>,
) -> Result<CombinationCertificate<R::Elem>> {
    let w = checked_pair(ring, w, a, b, "pair (1, 2)")?;
    Ok(CombinationCertificate {
        elements: vec![a.clone(), b.clone()],
        gcd: w.g,
        coefficients: vec![w.u, w.v],
    })
}

/// Validates a witness against its pair and rescales it to the normalized
/// gcd.
fn checked_pair<R: GcdRing>(
    ring: &R,
    w: &BezoutPair<R::Elem>,
    a: &R::Elem,
    b: &R::Elem,
    context: &str,
) -> Result<BezoutPair<R::Elem>> {
    if !ring.equals(&w.a, a) || !ring.equals(&w.b, b) {
        return Err(Error::bad_witness(format!("{context}: elements differ")));
    }
    let value = w.combination(ring);
    if !ring.equals(&value, &w.g) || !ring.associates(&value, &ring.gcd(a, b)) {
        return Err(Error::bad_witness(context));
    }
    Ok(w.normalized(ring))
}

/// The closed-form three-element combination. Each pairwise witness must
/// evaluate to an associate of the pair's gcd, and no element may be zero.
pub fn combine3<R: GcdRing>(
    ring: &R,
    elements: &[R::Elem; 3],
    u: &PairwiseCoefficients<R::Elem>,
) -> Result<(CombinationCertificate<R::Elem>, Combine3Trace<R::Elem>)> {
    if let Some(index) = elements.iter().position(|p| ring.is_zero(p)) {
        return Err(Error::ZeroElement { index });
    }
    let p3 = &elements[2];

    // witness values, indexed by the element they leave out
    let mut values = Vec::with_capacity(3);
    let mut pair_gcd = ring.zero();
    for (i, j) in [(1, 2), (0, 2), (0, 1)] {
        let (ui, uj) = u.pair(i, j);
        let value = ring.add(&ring.mul(ui, &elements[i]), &ring.mul(uj, &elements[j]));
        pair_gcd = ring.gcd(&elements[i], &elements[j]);
        if !ring.associates(&value, &pair_gcd) {
            return Err(Error::bad_witness(format!("pair ({}, {})", i + 1, j + 1)));
        }
        values.push(value);
    }

    // pair_gcd is gcd(p1, p2) after the loop
    let d = ring.normalize(&ring.gcd(&pair_gcd, p3));
    let e = [
        exact(ring, &values[0], &d, "e1")?,
        exact(ring, &values[1], &d, "e2")?,
        exact(ring, &values[2], &d, "e3")?,
    ];
    let cofactor = |i: usize| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        exact(ring, &elements[i], &ring.product([&d, &e[j], &e[k]]), "f")
    };
    let f = [cofactor(0)?, cofactor(1)?, cofactor(2)?];

    let w1 = ring.product([&u.u12, &u.u13, &f[0]]);
    let w2 = ring.product([&u.u21, &u.u23, &f[1]]);
    let w3 = ring.add(
        &ring.product([&u.u12, &u.u31, &f[0]]),
        &ring.product([&u.u21, &u.u32, &f[1]]),
    );

    let cert = CombinationCertificate {
        elements: elements.to_vec(),
        gcd: d.clone(),
        coefficients: vec![w1, w2, w3],
    };
    Ok((cert, Combine3Trace { d, e, f }))
}

type Provider<'a, E> = dyn Fn(usize, usize) -> Result<BezoutPair<E>> + 'a;

/// Certificate for any number of nonzero elements. `witness(i, j)` must
/// return a witness for `(elements[i], elements[j])`; it is only called
/// with `i < j`.
pub fn combine_n<R, F>(
    ring: &R,
    elements: &[R::Elem],
    witness: F,
) -> Result<CombinationCertificate<R::Elem>>
where
    R: GcdRing,
    F: Fn(usize, usize) -> Result<BezoutPair<R::Elem>>,
{
    if elements.is_empty() {
        return Err(Error::invalid("at least one element is required"));
    }
    if let Some(index) = elements.iter().position(|p| ring.is_zero(p)) {
        return Err(Error::ZeroElement { index });
    }
    combine_rec(ring, elements, &witness)
}

fn fetch<R: GcdRing>(
    ring: &R,
    elements: &[R::Elem],
    witness: &Provider<'_, R::Elem>,
    i: usize,
    j: usize,
) -> Result<BezoutPair<R::Elem>> {
    let w = witness(i, j)?;
    let context = || format!("pair ({}, {})", i + 1, j + 1);
    // the gcd check happens where the witness is consumed
    if !ring.equals(&w.a, &elements[i]) || !ring.equals(&w.b, &elements[j]) {
        return Err(Error::bad_witness(format!(
            "{}: elements differ",
            context()
        )));
    }
    if !ring.equals(&w.combination(ring), &w.g) || ring.is_zero(&w.g) {
        return Err(Error::bad_witness(context()));
    }
    Ok(w.normalized(ring))
}

fn combine_rec<R: GcdRing>(
    ring: &R,
    elements: &[R::Elem],
    witness: &Provider<'_, R::Elem>,
) -> Result<CombinationCertificate<R::Elem>> {
    match elements {
        [p] => Ok(CombinationCertificate {
            elements: vec![p.clone()],
            gcd: ring.normalize(p),
            coefficients: vec![ring.normalizing_unit(p)],
        }),
        [a, b] => combine2(ring, a, b, &fetch(ring, elements, witness, 0, 1)?),
        [p1, p2, p3] => {
            let u = PairwiseCoefficients::from_pairs(
                &fetch(ring, elements, witness, 0, 1)?,
                &fetch(ring, elements, witness, 0, 2)?,
                &fetch(ring, elements, witness, 1, 2)?,
            );
            let triple = [p1.clone(), p2.clone(), p3.clone()];
            combine3(ring, &triple, &u).map(|(cert, _)| cert)
        }
        _ => {
            let n = elements.len();
            let (a, b) = (n - 2, n - 1);
            let merged = checked_pair(
                ring,
                &witness(a, b)?,
                &elements[a],
                &elements[b],
                &format!("pair ({}, {})", a + 1, b + 1),
            )?;
            let g = merged.g.clone();
            let s = exact(ring, &elements[a], &g, "cofactor of merged element")?;
            let t = exact(ring, &elements[b], &g, "cofactor of merged element")?;

            let mut reduced = elements[..a].to_vec();
            reduced.push(g.clone());

            let cache: RefCell<HashMap<usize, BezoutPair<R::Elem>>> = RefCell::default();
            // witness for (p_i, g), built from the three-element case
            let with_merged = |i: usize| -> Result<BezoutPair<R::Elem>> {
                if let Some(w) = cache.borrow().get(&i) {
                    return Ok(w.clone());
                }
                let u = PairwiseCoefficients::from_pairs(
                    &fetch(ring, elements, witness, i, a)?,
                    &fetch(ring, elements, witness, i, b)?,
                    &merged,
                );
                let triple = [
                    elements[i].clone(),
                    elements[a].clone(),
                    elements[b].clone(),
                ];
                let (cert, _) = combine3(ring, &triple, &u)?;
                let [w1, w2, w3]: [R::Elem; 3] = cert.coefficients.try_into().unwrap();
                let pair = BezoutPair {
                    a: elements[i].clone(),
                    b: g.clone(),
                    g: cert.gcd,
                    u: w1,
                    v: ring.add(&ring.mul(&w2, &s), &ring.mul(&w3, &t)),
                };
                cache.borrow_mut().insert(i, pair.clone());
                Ok(pair)
            };
            let inner = |i: usize, j: usize| -> Result<BezoutPair<R::Elem>> {
                match (i == a, j == a) {
                    (false, false) => witness(i, j),
                    (false, true) => with_merged(i),
                    (true, false) => with_merged(j).map(|w| w.swapped()),
                    (true, true) => Err(Error::MissingWitness { i, j }),
                }
            };

            let sub = combine_rec(ring, &reduced, &inner)?;
            let mut coefficients = sub.coefficients;
            let on_merged = coefficients.pop().expect("nonempty");
            coefficients.push(ring.mul(&on_merged, &merged.u));
            coefficients.push(ring.mul(&on_merged, &merged.v));
            Ok(CombinationCertificate {
                elements: elements.to_vec(),
                gcd: sub.gcd,
                coefficients,
            })
        }
    }
}

/// Which certificate invariant failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateFailure {
    LengthMismatch,
    CombinationIdentity,
    NotADivisor { index: usize },
    NotNormalized,
    GcdMismatch,
}

impl std::fmt::Display for CertificateFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CertificateFailure::LengthMismatch => {
                write!(f, "coefficient count differs from element count")
            }
            CertificateFailure::CombinationIdentity => write!(f, "combination identity"),
            CertificateFailure::NotADivisor { index } => {
                write!(f, "gcd does not divide element {index}")
            }
            CertificateFailure::NotNormalized => write!(f, "gcd is not normalized"),
            CertificateFailure::GcdMismatch => write!(f, "gcd differs from recomputed gcd"),
        }
    }
}

/// Every invariant the certificate violates; empty when it is valid.
pub fn check_certificate<R: GcdRing>(
    cert: &CombinationCertificate<R::Elem>,
    ring: &R,
) -> Vec<CertificateFailure> {
    let mut failures = Vec::new();
    if cert.elements.len() != cert.coefficients.len() || cert.elements.is_empty() {
        failures.push(CertificateFailure::LengthMismatch);
    } else if !ring.equals(&ring.dot(&cert.coefficients, &cert.elements), &cert.gcd) {
        failures.push(CertificateFailure::CombinationIdentity);
    }
    for (index, p) in cert.elements.iter().enumerate() {
        if !ring.divides(&cert.gcd, p) {
            failures.push(CertificateFailure::NotADivisor { index });
        }
    }
    if !ring.is_normalized(&cert.gcd) {
        failures.push(CertificateFailure::NotNormalized);
    }
    if !ring.associates(&ring.gcd_all(&cert.elements), &cert.gcd) {
        failures.push(CertificateFailure::GcdMismatch);
    }
    failures
}

pub fn verify_certificate<R: GcdRing>(cert: &CombinationCertificate<R::Elem>, ring: &R) -> bool {
    check_certificate(cert, ring).is_empty()
}

//! Witness certificates for gcd linear combinations and principal-ideal
//! products, over the integers and over `Z[x]`.
//!
//! * [`combine`] writes `gcd(p_1, …, p_n)` as `Σ w_i p_i` in a UFD, given a
//!   Bézout witness for every pair.
//! * [`products`] builds generators of principal-ideal intersections and of
//!   the sum of all `(n-1)`-fold products of principal ideals.
//! * [`cyclo`] applies both to the family `(1 - x^D) / (1 - x^d_i)` in
//!   `Z[x]`, where pairwise witnesses come from binomial Bézout identities.
//!
//! Every result is a plain data certificate that the matching `check_*`
//! function re-verifies with exact arithmetic alone.

pub mod cli;
pub mod combine;
pub mod cyclo;
pub mod error;
pub mod int;
pub mod poly;
pub mod products;
pub mod ring;
pub mod wire;

pub use combine::{
    check_certificate, combine2, combine3, combine_n, verify_certificate, CertificateFailure,
    CombinationCertificate, Combine3Trace, PairwiseCoefficients,
};
pub use cyclo::{
    build_p, gcd_oracle, pairwise_witness, theorem0_certificate, theorem0_products, DivisorInstance,
};
pub use error::{Error, Result};
pub use int::{ext_gcd, Integers};
pub use poly::{binomial_bezout, IntPolys, PolyZ};
pub use products::{
    check_sum_products, int_subset_witness, int_sum_of_products, intersect_principal,
    sum_of_products, verify_sum_products, LemmaWitness, PrincipalSumWitness, ProductsFailure,
    SumProductsCertificate,
};
pub use ring::{verify_bezout, BezoutPair, GcdRing, Ring};

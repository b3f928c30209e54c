//! JSON forms of elements and certificates.
//!
//! Integers are decimal strings everywhere. A polynomial is
//! `{"coeffs": ["c0", "c1", …]}` in ascending degree with no trailing
//! zeros. Certificates carry a `"ring"` tag (`"int"` or `"polyz"`).

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::combine::CombinationCertificate;
use crate::poly::PolyZ;
use crate::products::{PrincipalSumWitness, SumProductsCertificate};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed JSON: {0}")]
pub struct WireError(pub String);

fn malformed(msg: impl Into<String>) -> WireError {
    WireError(msg.into())
}

pub trait WireElement: Sized {
    /// The `"ring"` tag for certificates over this element type.
    const RING: &'static str;

    fn to_wire(&self) -> Value;
    fn from_wire(value: &Value) -> Result<Self, WireError>;
}

fn parse_decimal(value: &Value) -> Result<BigInt, WireError> {
    let s = value
        .as_str()
        .ok_or_else(|| malformed(format!("expected a decimal string, got {value}")))?;
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed(format!("not a decimal integer: {s:?}")));
    }
    BigInt::from_str(s).map_err(|e| malformed(e.to_string()))
}

impl WireElement for BigInt {
    const RING: &'static str = "int";

    fn to_wire(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_wire(value: &Value) -> Result<Self, WireError> {
        parse_decimal(value)
    }
}

impl WireElement for PolyZ {
    const RING: &'static str = "polyz";

    fn to_wire(&self) -> Value {
        let coeffs: Vec<Value> = self.coeffs().iter().map(BigInt::to_wire).collect();
        json!({ "coeffs": coeffs })
    }

    fn from_wire(value: &Value) -> Result<Self, WireError> {
        let coeffs = value
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| malformed("polynomial needs a \"coeffs\" array"))?
            .iter()
            .map(parse_decimal)
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.last().is_some_and(|c| c == &BigInt::default()) {
            return Err(malformed("polynomial has trailing zero coefficients"));
        }
        Ok(PolyZ::new(coeffs))
    }
}

pub fn elements_to_wire<E: WireElement>(elems: &[E]) -> Value {
    Value::Array(elems.iter().map(E::to_wire).collect())
}

pub fn elements_from_wire<E: WireElement>(value: &Value) -> Result<Vec<E>, WireError> {
    value
        .as_array()
        .ok_or_else(|| malformed(format!("expected an array, got {value}")))?
        .iter()
        .map(E::from_wire)
        .collect()
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value, WireError> {
    obj.get(key)
        .ok_or_else(|| malformed(format!("missing field \"{key}\"")))
}

fn object(value: &Value) -> Result<&Map<String, Value>, WireError> {
    value
        .as_object()
        .ok_or_else(|| malformed("expected a JSON object"))
}

/// The `"ring"` tag of a JSON document.
pub fn ring_tag(value: &Value) -> Result<&str, WireError> {
    field(object(value)?, "ring")?
        .as_str()
        .ok_or_else(|| malformed("\"ring\" must be a string"))
}

fn expect_ring<E: WireElement>(obj: &Map<String, Value>) -> Result<(), WireError> {
    match field(obj, "ring")?.as_str() {
        Some(tag) if tag == E::RING => Ok(()),
        other => Err(malformed(format!(
            "expected ring \"{}\", got {other:?}",
            E::RING
        ))),
    }
}

pub fn combination_to_json<E: WireElement>(cert: &CombinationCertificate<E>) -> Value {
    json!({
        "ring": E::RING,
        "elements": elements_to_wire(&cert.elements),
        "gcd": cert.gcd.to_wire(),
        "coefficients": elements_to_wire(&cert.coefficients),
    })
}

pub fn combination_from_json<E: WireElement>(
    value: &Value,
) -> Result<CombinationCertificate<E>, WireError> {
    let obj = object(value)?;
    expect_ring::<E>(obj)?;
    Ok(CombinationCertificate {
        elements: elements_from_wire(field(obj, "elements")?)?,
        gcd: E::from_wire(field(obj, "gcd")?)?,
        coefficients: elements_from_wire(field(obj, "coefficients")?)?,
    })
}

pub fn products_to_json<E: WireElement>(cert: &SumProductsCertificate<E>) -> Value {
    json!({
        "ring": E::RING,
        "inputs": elements_to_wire(&cert.inputs),
        "products": elements_to_wire(&cert.products),
        "generator": cert.witness.generator.to_wire(),
        "combination": elements_to_wire(&cert.witness.combination),
        "multipliers": elements_to_wire(&cert.witness.multipliers),
    })
}

pub fn products_from_json<E: WireElement + Clone>(
    value: &Value,
) -> Result<SumProductsCertificate<E>, WireError> {
    let obj = object(value)?;
    expect_ring::<E>(obj)?;
    let products: Vec<E> = elements_from_wire(field(obj, "products")?)?;
    Ok(SumProductsCertificate {
        inputs: elements_from_wire(field(obj, "inputs")?)?,
        witness: PrincipalSumWitness {
            generators: products.clone(),
            generator: E::from_wire(field(obj, "generator")?)?,
            combination: elements_from_wire(field(obj, "combination")?)?,
            multipliers: elements_from_wire(field(obj, "multipliers")?)?,
        },
        products,
    })
}

/// Which certificate schema a document follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    Combination,
    SumProducts,
}

pub fn certificate_kind(value: &Value) -> Result<CertificateKind, WireError> {
    let obj = object(value)?;
    match (
        obj.contains_key("coefficients"),
        obj.contains_key("products"),
    ) {
        (true, false) => Ok(CertificateKind::Combination),
        (false, true) => Ok(CertificateKind::SumProducts),
        _ => Err(malformed("not a recognized certificate")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int::Integers;
    use crate::products::int_sum_of_products;

    #[test]
    fn polynomial_form() {
        let p = PolyZ::from_i64s(&[1, -1, 1]);
        assert_eq!(p.to_wire(), json!({"coeffs": ["1", "-1", "1"]}));
        assert_eq!(PolyZ::zero().to_wire(), json!({"coeffs": []}));
        assert_eq!(
            PolyZ::from_wire(&json!({"coeffs": ["1", "-1", "1"]})).unwrap(),
            p
        );
        assert!(PolyZ::from_wire(&json!({"coeffs": ["1", "0"]})).is_err());
        assert!(PolyZ::from_wire(&json!({"coeffs": [1, 2]})).is_err());
        assert!(PolyZ::from_wire(&json!([1, 2])).is_err());
    }

    #[test]
    fn integer_form_is_lossless() {
        let big = BigInt::from_str("-123456789012345678901234567890").unwrap();
        assert_eq!(big.to_wire(), json!("-123456789012345678901234567890"));
        assert_eq!(BigInt::from_wire(&big.to_wire()).unwrap(), big);
        for bad in [json!("12a"), json!(""), json!("-"), json!("+3"), json!(12)] {
            assert!(BigInt::from_wire(&bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn combination_schema() {
        let cert = CombinationCertificate {
            elements: vec![BigInt::from(6), BigInt::from(10)],
            gcd: BigInt::from(2),
            coefficients: vec![BigInt::from(2), BigInt::from(-1)],
        };
        let value = combination_to_json(&cert);
        assert_eq!(
            value,
            json!({"ring": "int", "elements": ["6", "10"], "gcd": "2", "coefficients": ["2", "-1"]})
        );
        assert_eq!(
            certificate_kind(&value).unwrap(),
            CertificateKind::Combination
        );
        assert_eq!(combination_from_json::<BigInt>(&value).unwrap(), cert);
        assert!(combination_from_json::<PolyZ>(&value).is_err());
    }

    #[test]
    fn products_schema_round_trip() {
        let cert = int_sum_of_products(&[4, 6, 10].map(BigInt::from)).unwrap();
        let value = products_to_json(&cert);
        assert_eq!(
            certificate_kind(&value).unwrap(),
            CertificateKind::SumProducts
        );
        assert_eq!(value["products"], json!(["60", "40", "24"]));
        let back = products_from_json::<BigInt>(&value).unwrap();
        assert_eq!(back, cert);
        assert!(crate::products::verify_sum_products(&back, &Integers));
    }
}

//! JSON encoding of rationals as `{"num": "...", "den": "..."}`.

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::Rational;

#[derive(Serialize, Deserialize)]
struct Repr {
    num: String,
    den: String,
}

fn to_repr(r: &Rational) -> Repr {
    Repr {
        num: r.numer().to_string(),
        den: r.denom().to_string(),
    }
}

fn from_repr<E: serde::de::Error>(r: Repr) -> Result<Rational, E> {
    let num: BigInt = r
        .num
        .parse()
        .map_err(|_| E::custom(format!("bad numerator {:?}", r.num)))?;
    let den: BigInt = r
        .den
        .parse()
        .map_err(|_| E::custom(format!("bad denominator {:?}", r.den)))?;
    if den <= BigInt::from(0) {
        return Err(E::custom("denominator must be positive"));
    }
    let value = Rational::new(num, den);
    if value.numer().to_string() != r.num || value.denom().to_string() != r.den {
        return Err(E::custom("rational is not in lowest terms"));
    }
    Ok(value)
}

pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    to_repr(r).serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    from_repr(Repr::deserialize(d)?)
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(to_repr).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<Repr>::deserialize(d)?
            .into_iter()
            .map(from_repr)
            .collect()
    }
}

pub mod option {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(to_repr).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<Repr>::deserialize(d)?.map(from_repr).transpose()
    }
}

/// Canonical JSON value for a rational.
pub fn to_json(r: &Rational) -> serde_json::Value {
    serde_json::to_value(to_repr(r)).expect("plain strings")
}

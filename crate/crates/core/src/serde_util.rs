//! JSON encodings for arbitrary-precision values.
//!
//! Integers are written as JSON numbers when they fit in an `i64` and as
//! decimal strings otherwise; rationals are written as `"p/q"` strings (or a
//! plain integer when the denominator is one).

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::Rational;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Text(String),
}

fn int_to_repr(x: &BigInt) -> IntRepr {
    match x.to_i64() {
        Some(v) => IntRepr::Small(v),
        None => IntRepr::Text(x.to_string()),
    }
}

fn repr_to_int<E: serde::de::Error>(r: IntRepr) -> Result<BigInt, E> {
    match r {
        IntRepr::Small(v) => Ok(BigInt::from(v)),
        IntRepr::Text(s) => s.parse().map_err(E::custom),
    }
}

pub fn rational_to_string(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q == BigInt::from(0) {
                return None;
            }
            Some(Rational::new(p.trim().parse().ok()?, q))
        }
        None => Some(Rational::from_integer(s.trim().parse().ok()?)),
    }
}

pub mod bigint {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        int_to_repr(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        repr_to_int(IntRepr::deserialize(d)?)
    }
}

pub mod bigint_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(int_to_repr).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<IntRepr>::deserialize(d)?.into_iter().map(repr_to_int).collect()
    }
}

pub mod bigint_matrix {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|r| r.iter().map(int_to_repr).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        Vec::<Vec<IntRepr>>::deserialize(d)?
            .into_iter()
            .map(|r| r.into_iter().map(repr_to_int).collect())
            .collect()
    }
}

pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        rational_to_string(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).ok_or_else(|| D::Error::custom(format!("bad rational '{text}'")))
    }
}

pub mod rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(rational_to_string).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .into_iter()
            .map(|t| parse_rational(&t).ok_or_else(|| D::Error::custom(format!("bad rational '{t}'"))))
            .collect()
    }
}

pub mod rational_matrix {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|r| r.iter().map(rational_to_string).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        Vec::<Vec<String>>::deserialize(d)?
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|t| parse_rational(&t).ok_or_else(|| D::Error::custom(format!("bad rational '{t}'"))))
                    .collect()
            })
            .collect()
    }
}

pub mod bigint_matrices {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Vec<Vec<BigInt>>], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|m| {
                m.iter()
                    .map(|r| r.iter().map(int_to_repr).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Vec<BigInt>>>, D::Error> {
        Vec::<Vec<Vec<IntRepr>>>::deserialize(d)?
            .into_iter()
            .map(|m| {
                m.into_iter()
                    .map(|r| r.into_iter().map(repr_to_int).collect())
                    .collect()
            })
            .collect()
    }
}

pub mod rational_matrices {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Vec<Vec<Rational>>], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|m| {
                m.iter()
                    .map(|r| r.iter().map(rational_to_string).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Vec<Rational>>>, D::Error> {
        Vec::<Vec<Vec<String>>>::deserialize(d)?
            .into_iter()
            .map(|m| {
                m.into_iter()
                    .map(|r| {
                        r.into_iter()
                            .map(|t| parse_rational(&t).ok_or_else(|| D::Error::custom(format!("bad rational '{t}'"))))
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }
}

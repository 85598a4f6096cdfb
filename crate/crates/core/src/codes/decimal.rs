//! Serde helpers writing factorial-range residues as decimal strings and
//! accepting either strings or plain JSON integers on input.

use num_bigint::BigUint;
use serde::{de, Deserialize, Deserializer, Serializer};

#[derive(Deserialize)]
#[serde(untagged)]
enum Repr {
    Int(u64),
    Text(String),
}

fn parse<E: de::Error>(r: Repr) -> Result<BigUint, E> {
    match r {
        Repr::Int(v) => Ok(BigUint::from(v)),
        Repr::Text(s) => s
            .trim()
            .parse::<BigUint>()
            .map_err(|_| E::custom(format!("'{}' is not a nonnegative decimal integer", s))),
    }
}

pub fn serialize<S: Serializer>(v: &BigUint, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&v.to_string())
}

pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigUint, D::Error> {
    parse(Repr::deserialize(de)?)
}

pub mod pair {
    use super::*;
    use serde::ser::SerializeTuple;

    pub fn serialize<S: Serializer>(v: &[BigUint; 2], ser: S) -> Result<S::Ok, S::Error> {
        let mut t = ser.serialize_tuple(2)?;
        t.serialize_element(&v[0].to_string())?;
        t.serialize_element(&v[1].to_string())?;
        t.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<[BigUint; 2], D::Error> {
        let [a, b] = <[Repr; 2]>::deserialize(de)?;
        Ok([parse(a)?, parse(b)?])
    }
}

pub mod list {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[BigUint], ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<Repr>::deserialize(de)?.into_iter().map(parse).collect()
    }
}

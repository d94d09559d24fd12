//! Serde adapters writing rationals as `"p/q"` strings.

use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

use super::{parse_rational, Rational};

pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let s = String::deserialize(d)?;
    parse_rational(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))
}

pub mod opt {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.collect_str(r),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| parse_rational(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
            .transpose()
    }
}

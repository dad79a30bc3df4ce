//! Exact numbers travel through JSON as strings (`"-7/3"`), never floats.

macro_rules! string_codec {
    ($name:ident, $ty:ty) => {
        pub mod $name {
            use serde::{de, Deserialize, Deserializer, Serializer};

            pub fn serialize<S: Serializer>(v: &$ty, s: S) -> Result<S::Ok, S::Error> {
                s.serialize_str(&v.to_string())
            }

            pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<$ty, D::Error> {
                let s = String::deserialize(d)?;
                s.parse::<$ty>()
                    .map_err(|_| de::Error::custom(format!("invalid exact number {s:?}")))
            }
        }
    };
}

string_codec!(bigint_str, num_bigint::BigInt);
string_codec!(rat_str, crate::Rat);

pub mod opt_bigint_str {
    use num_bigint::BigInt;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_some(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(|_| de::Error::custom(format!("invalid integer {s:?}"))))
            .transpose()
    }
}

pub mod opt_rat_str {
    use crate::Rat;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_some(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rat>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(|_| de::Error::custom(format!("invalid rational {s:?}"))))
            .transpose()
    }
}

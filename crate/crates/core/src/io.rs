//! JSON encodings shared by the library and the command-line front end.

/// Big integers as JSON numbers when they fit in 64 bits, strings otherwise.
pub mod bigint {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    pub(crate) enum Repr {
        Int(i64),
        Str(String),
    }

    impl Repr {
        pub(crate) fn of(n: &BigInt) -> Repr {
            n.to_i64().map_or_else(|| Repr::Str(n.to_string()), Repr::Int)
        }

        pub(crate) fn value<E: de::Error>(self) -> Result<BigInt, E> {
            match self {
                Repr::Int(i) => Ok(i.into()),
                Repr::Str(s) => s.parse().map_err(|_| E::custom(format!("not an integer: {s:?}"))),
            }
        }
    }

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        Repr::of(n).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        Repr::deserialize(d)?.value()
    }
}

pub mod bigint_vec {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::bigint::Repr;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(Repr::of).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Repr>::deserialize(d)?.into_iter().map(Repr::value).collect()
    }
}

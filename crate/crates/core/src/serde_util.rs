//! Serde adapters: big integers as decimal strings, rationals as "p/q"
//! strings, so JSON output never loses precision to f64 coercion.

pub mod biguint_decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(value: &BigUint, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(de)?;
        BigUint::from_str(&s).map_err(serde::de::Error::custom)
    }
}

pub mod bigrational_string {
    use num_rational::BigRational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(value: &BigRational, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(value)
    }
}

pub mod bigrational_vec_string {
    use num_rational::BigRational;
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(values: &[BigRational], ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&v.to_string())?;
        }
        seq.end()
    }
}

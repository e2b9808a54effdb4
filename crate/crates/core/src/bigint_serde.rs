//! JSON-friendly serialization of exact integers: a plain number when the
//! value fits in `i64`, a decimal string otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::SerializeSeq;
use serde::Serializer;

pub fn int<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
    match value.to_i64() {
        Some(v) => serializer.serialize_i64(v),
        None => serializer.collect_str(value),
    }
}

pub fn vec<S: Serializer>(values: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&Wrapped(v))?;
    }
    seq.end()
}

pub fn option<S: Serializer>(value: &Option<BigInt>, serializer: S) -> Result<S::Ok, S::Error> {
    match value {
        Some(v) => int(v, serializer),
        None => serializer.serialize_none(),
    }
}

struct Wrapped<'a>(&'a BigInt);

impl serde::Serialize for Wrapped<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        int(self.0, serializer)
    }
}

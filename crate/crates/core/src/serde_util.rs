use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::Serializer;

/// Integers that fit in an `i64` become JSON numbers, anything larger a decimal string.
pub(crate) fn bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match i64::try_from(x) {
            Ok(small) => seq.serialize_element(&small)?,
            Err(_) => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

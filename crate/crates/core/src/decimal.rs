//! Big integers travel as decimal strings in every serialized report.

use num_bigint::BigUint;
use serde::Serializer;

pub(crate) fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_str_radix(10))
}

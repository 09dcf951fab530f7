//! Serialization helpers shared by the JSON reports: rationals as `"p/q"`
//! strings (integers without `/1`).

use num_rational::BigRational;
use serde::Serializer;

pub fn ser_rational<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn ser_rationals<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

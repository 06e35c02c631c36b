//! Canonical number formatting for machine-readable output.
//!
//! Every float is rounded to 12 significant digits before serialisation so
//! that identical runs produce byte-identical JSON.

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::Serializer;

/// Rounds to 12 significant digits; maps `-0.0` to `0.0`.
pub fn round12(v: f64) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return if v == 0.0 { 0.0 } else { v };
    }
    let r: f64 = format!("{v:.11e}").parse().expect("float");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn ser12<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round12(*v))
}

pub fn ser_opt12<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_f64(round12(*v)),
        None => s.serialize_none(),
    }
}

pub fn ser_vec12<S: Serializer>(v: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&round12(*x))?;
    }
    seq.end()
}

pub fn ser_map12<S: Serializer>(v: &BTreeMap<usize, f64>, s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(v.len()))?;
    for (k, x) in v {
        map.serialize_entry(k, &round12(*x))?;
    }
    map.end()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round12(2.0000000000001), 2.0);
        assert_eq!(round12(-0.0), 0.0);
        assert_eq!(round12(1e-20), 1e-20);
        assert_eq!(round12(0.1 + 0.2), 0.3);
        assert_eq!(round12(123456789.0123456), 123456789.012);
        assert!(round12(f64::NAN).is_nan());
    }
}

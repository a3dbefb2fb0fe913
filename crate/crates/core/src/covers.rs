//! Homology of finite cyclic covers: `H_1(X(K)_n) ≅ Z^{b1} ⊕ G` with
//! `|G| = |Π_{ζ^n = 1} Δ(ζ)|` when no n-th root of unity is a zero of Δ.

use rug::Integer;
use serde::Serialize;

use crate::algebra::cyclotomic::{cyclotomic_zero_exists, roots_of_unity_zero_count};
use crate::algebra::resultant::resultant_with_cyclic;
use crate::error::{Error, Result};
use crate::knot::KnotRecord;
use crate::numerics::CertifiedReal;

pub const DEFAULT_GROWTH_CAP: u64 = 2000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverHomologySummary {
    pub n: u64,
    pub b1: u64,
    /// `|G|`, or 0 when G is infinite.
    #[serde(serialize_with = "serialize_integer")]
    pub torsion_order: Integer,
}

fn serialize_integer<S: serde::Serializer>(v: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `|Res(Δ, tⁿ - 1)|`; 0 iff some n-th root of unity is a zero of Δ.
pub fn torsion_order(k: &KnotRecord, n: u64) -> Integer {
    assert!(n >= 1, "cover degree must be positive");
    resultant_with_cyclic(k.alexander(), n as usize).abs()
}

/// `1 +` the number of n-th roots of unity that are zeros of Δ, with
/// multiplicity.
pub fn b1_of_cover(k: &KnotRecord, n: u64) -> u64 {
    assert!(n >= 1, "cover degree must be positive");
    1 + roots_of_unity_zero_count(k.alexander(), n)
}

/// No root of unity is a zero of Δ.
pub fn admissible(k: &KnotRecord) -> bool {
    !cyclotomic_zero_exists(k.alexander())
}

pub fn cover_summary(k: &KnotRecord, n: u64) -> CoverHomologySummary {
    CoverHomologySummary { n, b1: b1_of_cover(k, n), torsion_order: torsion_order(k, n) }
}

#[derive(Clone, Debug)]
pub struct GrowthPoint {
    pub k: u64,
    pub torsion_order: Integer,
    /// `(1/k) ln |G_k|`
    pub value: CertifiedReal,
}

/// `(1/k) ln |Tor H_1(X(K)_k)|` for `k = 1..=k_max`, which tends to τ(K).
pub fn growth_sequence(knot: &KnotRecord, k_max: u64) -> Result<Vec<GrowthPoint>> {
    growth_sequence_with_cap(knot, k_max, DEFAULT_GROWTH_CAP)
}

pub fn growth_sequence_with_cap(knot: &KnotRecord, k_max: u64, cap: u64) -> Result<Vec<GrowthPoint>> {
    if k_max > cap {
        return Err(Error::InvalidArgument(format!("k_max {k_max} exceeds the cap of {cap}")));
    }
    (1..=k_max).map(|k| growth_point(knot, k)).collect()
}

pub fn growth_point(knot: &KnotRecord, k: u64) -> Result<GrowthPoint> {
    let t = torsion_order(knot, k);
    if t == 0 {
        return Err(Error::NotAdmissible { k });
    }
    Ok(GrowthPoint { k, value: log_over(&t, k), torsion_order: t })
}

fn log_over(t: &Integer, k: u64) -> CertifiedReal {
    if *t == 1 {
        return CertifiedReal::exact_zero();
    }
    let prec = t.significant_bits() + 64;
    let l = CertifiedReal::from_int(t, prec).ln().expect("torsion order is positive");
    l.div(&CertifiedReal::from_int(&Integer::from(k), prec)).unwrap()
}

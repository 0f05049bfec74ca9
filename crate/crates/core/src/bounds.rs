//! Closed-form copersistence bounds, evaluated exactly.
//!
//! Both bounds contain square roots, so a bound is held as the exact integer
//! square of its value together with the integer ceiling of the root. All
//! comparisons happen on the squares; no floating point is involved.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Pow, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::{IdealStats, MonomialIdeal};

/// Which quantity a [`BoundValue`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// `d(rs+s+d) (√r)^(r+1) (√2 d)^((r+1)(s-1))`
    Sigma1,
    /// `(√(d²+1))^(rs) (√r)^(r+2) (rs+r+2)`
    Sigma2,
    /// Hadamard estimate of the largest subdeterminant of a system.
    Hadamard,
    /// Largest subdeterminant times `(ν+1)`.
    DegreeBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundLabel {
    pub kind: BoundKind,
    /// `(d, s, r)` for the closed-form bounds.
    pub params: Option<(u64, u64, u64)>,
}

/// A non-negative real `σ` held as `σ²` plus `⌈σ⌉`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundValue {
    #[serde(serialize_with = "decimal")]
    pub squared: BigUint,
    #[serde(serialize_with = "decimal")]
    pub ceil: BigUint,
    pub label: BoundLabel,
}

pub(crate) fn decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

impl BoundValue {
    pub fn from_squared(squared: BigUint, label: BoundLabel) -> Self {
        let ceil = ceil_sqrt(&squared);
        BoundValue {
            squared,
            ceil,
            label,
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ceil = {}, squared = {}", self.ceil, self.squared)
    }
}

/// Smallest `k` with `k² >= n`.
pub fn ceil_sqrt(n: &BigUint) -> BigUint {
    let k = n.sqrt();
    if &k * &k == *n {
        k
    } else {
        k + 1u32
    }
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn check_sr(s: u64, r: u64) -> Result<()> {
    if s == 0 || r == 0 {
        return Err(Error::InvalidParameter(format!(
            "bounds need s >= 1 and r >= 1, got s = {s}, r = {r}"
        )));
    }
    Ok(())
}

/// The bound `σ₁(d, s, r)`, squared:
/// `d² (rs+s+d)² r^(r+1) (2d²)^((r+1)(s-1))`.
pub fn sigma1(d: u64, s: u64, r: u64) -> Result<BoundValue> {
    check_sr(s, r)?;
    let d2 = big(d) * big(d);
    let linear = big(r * s + s + d);
    let squared = &d2
        * &linear
        * &linear
        * Pow::pow(big(r), r + 1)
        * Pow::pow(big(2) * &d2, (r + 1) * (s - 1));
    Ok(BoundValue::from_squared(
        squared,
        BoundLabel {
            kind: BoundKind::Sigma1,
            params: Some((d, s, r)),
        },
    ))
}

/// The bound `σ₂(d, s, r)`, squared: `(d²+1)^(rs) r^(r+2) (rs+r+2)²`.
pub fn sigma2(d: u64, s: u64, r: u64) -> Result<BoundValue> {
    check_sr(s, r)?;
    let linear = big(r * s + r + 2);
    let squared =
        Pow::pow(big(d) * big(d) + 1u32, r * s) * Pow::pow(big(r), r + 2) * &linear * &linear;
    Ok(BoundValue::from_squared(
        squared,
        BoundLabel {
            kind: BoundKind::Sigma2,
            params: Some((d, s, r)),
        },
    ))
}

fn rational(n: BigUint) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `q(d)² = 2d² / (d²+1)`.
pub fn q_squared(d: u64) -> BigRational {
    let d2 = big(d) * big(d);
    BigRational::new((big(2) * &d2).into(), (d2 + 1u32).into())
}

/// `φ(r)² = q(2)^(2r²) / (2r)`.
pub fn phi_squared(r: u64) -> BigRational {
    Pow::pow(q_squared(2), r * r) / rational(big(2 * r))
}

/// Exact comparison of `σ₁` and `σ₂` at one parameter triple, with the
/// intermediate term `q(d)^(rs) σ₂ / √(2r)` of the comparison chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub sigma1: BoundValue,
    pub sigma2: BoundValue,
    /// Ordering of `σ₁` relative to `σ₂`.
    pub ordering: Ordering,
    pub q_squared: BigRational,
    /// `q(d)^(2rs) σ₂² / (2r)`.
    pub middle_squared: BigRational,
}

impl Comparison {
    /// `σ₂² < middle² <= σ₁²`.
    pub fn chain_holds(&self) -> bool {
        let s2 = rational(self.sigma2.squared.clone());
        let s1 = rational(self.sigma1.squared.clone());
        s2 < self.middle_squared && self.middle_squared <= s1
    }

    /// `σ₁² / σ₂²`.
    pub fn squared_ratio(&self) -> BigRational {
        squared_ratio(&self.sigma1, &self.sigma2)
    }
}

pub fn squared_ratio(num: &BoundValue, den: &BoundValue) -> BigRational {
    if den.squared.is_zero() {
        return BigRational::zero();
    }
    BigRational::new(num.squared.clone().into(), den.squared.clone().into())
}

pub fn compare(d: u64, s: u64, r: u64) -> Result<Comparison> {
    let s1 = sigma1(d, s, r)?;
    let s2 = sigma2(d, s, r)?;
    let q2 = q_squared(d);
    let middle = Pow::pow(q2.clone(), r * s) * rational(s2.squared.clone()) / rational(big(2 * r));
    Ok(Comparison {
        ordering: s1.squared.cmp(&s2.squared),
        sigma1: s1,
        sigma2: s2,
        q_squared: q2,
        middle_squared: middle,
    })
}

/// Both bounds for one ideal, at its raw and at its reduced parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub stats: IdealStats,
    /// `(d, s, r)`.
    pub raw_params: (u64, u64, u64),
    /// `(d_red, s, min(r, s))`.
    pub reduced_params: (u64, u64, u64),
    pub sigma1_raw: BoundValue,
    pub sigma2_raw: BoundValue,
    pub sigma1_reduced: BoundValue,
    pub sigma2_reduced: BoundValue,
    /// `σ₁² / σ₂²` at the reduced parameters.
    pub ratio_reduced: BigRational,
    /// `σ₁² / σ₂²` at the raw parameters.
    pub ratio_raw: BigRational,
    pub notes: Vec<String>,
}

pub fn bound_report(ideal: &MonomialIdeal) -> Result<BoundReport> {
    let stats = ideal.stats()?;
    let s = stats.s as u64;
    let r = stats.r as u64;
    let raw_params = (stats.d, s, r);
    let reduced_params = (stats.d_red, s, r.min(s));

    let sigma1_raw = sigma1(raw_params.0, s, r)?;
    let sigma2_raw = sigma2(raw_params.0, s, r)?;
    let sigma1_reduced = sigma1(reduced_params.0, s, reduced_params.2)?;
    let sigma2_reduced = sigma2(reduced_params.0, s, reduced_params.2)?;

    let mut notes = Vec::new();
    if s == 1 {
        notes.push(
            "principal ideal: every power has the associated primes (X_i) for the variables \
             dividing the generator, so the copersistence index is 1"
                .to_string(),
        );
    }
    if s < r {
        notes.push(format!(
            "s = {s} < r = {r}: the maximal ideal is associated to no power"
        ));
    }

    Ok(BoundReport {
        ratio_reduced: squared_ratio(&sigma1_reduced, &sigma2_reduced),
        ratio_raw: squared_ratio(&sigma1_raw, &sigma2_raw),
        stats,
        raw_params,
        reduced_params,
        sigma1_raw,
        sigma2_raw,
        sigma1_reduced,
        sigma2_reduced,
        notes,
    })
}

/// `true` when `ratio > bound` as exact rationals.
pub fn exceeds(ratio: &BigRational, bound: u64) -> bool {
    *ratio > BigRational::from_integer(bound.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Num, One};
    use proptest::prelude::*;

    fn n(s: &str) -> BigUint {
        BigUint::from_str_radix(s, 10).unwrap()
    }

    #[test]
    fn sigma1_example_value() {
        let b = sigma1(5, 5, 3).unwrap();
        let expected = big(25) * big(625) * big(81) * Pow::pow(big(50), 16u32);
        assert_eq!(b.squared, expected);
        // (r+1)(s-1) = 16 is even, so σ₁ = 1125 · 50^8 exactly
        let exact = big(1125) * Pow::pow(big(50), 8u32);
        assert_eq!(b.ceil, exact);
        assert!(b.ceil > n("40000000000000000"));
    }

    #[test]
    fn unit_parameters() {
        let b = sigma1(1, 1, 1).unwrap();
        assert_eq!((b.squared.clone(), b.ceil.clone()), (big(9), big(3)));
        let b = sigma2(1, 1, 1).unwrap();
        assert_eq!((b.squared.clone(), b.ceil.clone()), (big(32), big(6)));
    }

    #[test]
    fn example_ratio_exceeds_thousand() {
        let c = compare(5, 5, 3).unwrap();
        assert!(c.sigma1.squared > big(1_000_000) * &c.sigma2.squared);
        assert_eq!(c.ordering, Ordering::Greater);
        assert!(exceeds(&c.squared_ratio(), 1_000_000));
    }

    #[test]
    fn sigma1_grows_with_d() {
        assert!(sigma1(5, 5, 3).unwrap().squared < sigma1(6, 5, 3).unwrap().squared);
    }

    #[test]
    fn sigma2_monotone_on_grid() {
        for d in 1..=8 {
            for s in 1..=8 {
                for r in 1..=8 {
                    let here = sigma2(d, s, r).unwrap().squared;
                    assert!(here <= sigma2(d + 1, s, r).unwrap().squared);
                    assert!(here <= sigma2(d, s + 1, r).unwrap().squared);
                    assert!(here <= sigma2(d, s, r + 1).unwrap().squared);
                }
            }
        }
    }

    #[test]
    fn q_and_phi_values() {
        assert_eq!(q_squared(2), BigRational::new(8.into(), 5.into()));
        let q10 = Pow::pow(q_squared(2), 5u32);
        assert_eq!(q10, BigRational::new(32768.into(), 3125.into()));
        assert!(q10 > BigRational::from_integer(10.into()));
        let phi2 = BigRational::new(64.into(), 50.into());
        assert_eq!(phi_squared(2), &phi2 * &phi2);
        assert!(phi2 > BigRational::one());
    }

    #[test]
    fn rejects_degenerate_parameters() {
        assert!(sigma1(1, 0, 1).is_err());
        assert!(sigma2(1, 1, 0).is_err());
    }

    #[test]
    fn reports() {
        let i = MonomialIdeal::from_exponents(
            3,
            &[&[4, 0, 0], &[3, 1, 0], &[2, 2, 1], &[1, 3, 0], &[0, 4, 0]],
        )
        .unwrap();
        let rep = bound_report(&i).unwrap();
        assert_eq!(rep.reduced_params, (5, 5, 3));
        assert_eq!(rep.raw_params, (5, 5, 3));
        assert!(exceeds(&rep.ratio_reduced, 1_000_000));

        let j = MonomialIdeal::from_exponents(2, &[&[2, 1], &[1, 2]]).unwrap();
        assert_eq!(bound_report(&j).unwrap().reduced_params, (1, 2, 2));

        let p = MonomialIdeal::from_exponents(3, &[&[1, 2, 0]]).unwrap();
        let rep = bound_report(&p).unwrap();
        assert_eq!(rep.reduced_params, (0, 1, 1));
        assert!(!rep.notes.is_empty());
    }

    proptest! {
        #[test]
        fn ceil_is_exact_root_ceiling(x in any::<u128>()) {
            let sq = BigUint::from(x);
            let c = ceil_sqrt(&sq);
            prop_assert!(&c * &c >= sq);
            if !c.is_zero() {
                let below = &c - 1u32;
                prop_assert!(&below * &below < sq);
            }
        }
    }
}

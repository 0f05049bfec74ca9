//! Monomials without coefficients, stored as exponent vectors.
//!
//! Divisibility is the componentwise order on exponents, so greatest common
//! divisors and least common multiples are componentwise minima and maxima.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};

/// Exponent of a single variable.
pub type Exp = u32;

/// A monomial `X_1^{e_1} ... X_r^{e_r}` identified with its exponent vector.
///
/// Arithmetic is checked: sums that leave the `u32` range report
/// [`Error::Overflow`] instead of wrapping.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExponentVector(Vec<Exp>);

impl ExponentVector {
    pub fn new(entries: Vec<Exp>) -> Self {
        ExponentVector(entries)
    }

    /// The monomial `1` in `r` variables.
    pub fn zero(r: usize) -> Self {
        ExponentVector(vec![0; r])
    }

    /// The variable `X_i` (zero-based index).
    pub fn unit(r: usize, i: usize) -> Result<Self> {
        if i >= r {
            return Err(Error::IndexOutOfRange { index: i, vars: r });
        }
        let mut v = vec![0; r];
        v[i] = 1;
        Ok(ExponentVector(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Exp] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Exp> {
        self.0
    }

    pub fn get(&self, i: usize) -> Exp {
        self.0[i]
    }

    /// Total degree (sum of entries).
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// True for the monomial `1`.
    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Indices of the variables that divide this monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// `Some(i)` if the monomial is a pure power `X_i^k` with `k >= 1`.
    pub fn pure_power_variable(&self) -> Option<usize> {
        let mut support = self.support();
        let first = support.next()?;
        support.next().is_none().then_some(first)
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &ExponentVector) -> Result<bool> {
        check_dim(self.len(), other.len())?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn gcd(&self, other: &ExponentVector) -> Result<ExponentVector> {
        check_dim(self.len(), other.len())?;
        Ok(self.zip_with(other, |a, b| a.min(b)))
    }

    pub fn lcm(&self, other: &ExponentVector) -> Result<ExponentVector> {
        check_dim(self.len(), other.len())?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &ExponentVector) -> ExponentVector {
        self.zip_with(other, |a, b| a.max(b))
    }

    pub fn mul(&self, other: &ExponentVector) -> Result<ExponentVector> {
        check_dim(self.len(), other.len())?;
        self.mul_unchecked(other)
    }

    pub(crate) fn mul_unchecked(&self, other: &ExponentVector) -> Result<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// `self / divisor`, defined only when `divisor` divides `self`.
    pub fn div_exact(&self, divisor: &ExponentVector) -> Result<ExponentVector> {
        check_dim(self.len(), divisor.len())?;
        if !divisor.divides_unchecked(self) {
            return Err(Error::NotDivisible);
        }
        Ok(self.zip_with(divisor, |a, b| a - b))
    }

    /// `lcm(self, u) / u`, the generator contributed to `(self) : u`.
    pub(crate) fn quotient_unchecked(&self, u: &ExponentVector) -> ExponentVector {
        self.zip_with(u, |a, b| a.saturating_sub(b))
    }

    /// Scale every exponent by `k`.
    pub fn scale(&self, k: Exp) -> Result<ExponentVector> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Keep only the coordinates listed in `coords`, in that order.
    pub fn restrict(&self, coords: &[usize]) -> ExponentVector {
        ExponentVector(coords.iter().map(|&i| self.0[i]).collect())
    }

    /// Copy with coordinate `j` replaced by `value`.
    pub fn with_entry(&self, j: usize, value: Exp) -> ExponentVector {
        let mut v = self.0.clone();
        v[j] = value;
        ExponentVector(v)
    }

    fn zip_with(&self, other: &ExponentVector, f: impl Fn(Exp, Exp) -> Exp) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }
}

impl From<Vec<Exp>> for ExponentVector {
    fn from(v: Vec<Exp>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[Exp; N]> for ExponentVector {
    fn from(v: [Exp; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev<const N: usize>(v: [Exp; N]) -> ExponentVector {
        ExponentVector::from(v)
    }

    #[test]
    fn divisibility() {
        assert!(ev([1, 1, 0]).divides(&ev([2, 1, 3])).unwrap());
        assert!(ev([0, 0, 0, 0]).divides(&ev([5, 0, 2, 9])).unwrap());
        assert!(!ev([2, 0]).divides(&ev([1, 5])).unwrap());
        assert_eq!(
            ev([1, 0]).divides(&ev([1, 0, 0])),
            Err(Error::Dimension {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn gcd_lcm_div() {
        assert_eq!(ev([2, 1]).gcd(&ev([1, 3])).unwrap(), ev([1, 1]));
        assert_eq!(ev([2, 1]).lcm(&ev([1, 3])).unwrap(), ev([2, 3]));
        assert_eq!(ev([3, 2]).div_exact(&ev([1, 2])).unwrap(), ev([2, 0]));
        assert_eq!(ev([3, 2]).div_exact(&ev([1, 3])), Err(Error::NotDivisible));
        assert_eq!(ev([1, 2]).mul(&ev([3, 0])).unwrap(), ev([4, 2]));
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(ev([u32::MAX]).mul(&ev([1])), Err(Error::Overflow));
    }

    #[test]
    fn pure_powers() {
        assert_eq!(ev([0, 3, 0]).pure_power_variable(), Some(1));
        assert_eq!(ev([1, 3, 0]).pure_power_variable(), None);
        assert_eq!(ev([0, 0]).pure_power_variable(), None);
    }

    fn vec3() -> impl Strategy<Value = ExponentVector> {
        proptest::collection::vec(0u32..20, 3).prop_map(ExponentVector::new)
    }

    proptest! {
        #[test]
        fn mul_undoes_div(u in vec3(), w in vec3()) {
            let v = u.mul(&w).unwrap();
            prop_assert!(u.divides(&v).unwrap());
            prop_assert_eq!(u.mul(&v.div_exact(&u).unwrap()).unwrap(), v);
        }

        #[test]
        fn gcd_lcm_bracket(u in vec3(), v in vec3()) {
            prop_assert!(u.gcd(&v).unwrap().divides(&u).unwrap());
            prop_assert!(u.divides(&u.lcm(&v).unwrap()).unwrap());
        }

        #[test]
        fn mul_commutative_associative(u in vec3(), v in vec3(), w in vec3()) {
            prop_assert_eq!(u.mul(&v).unwrap(), v.mul(&u).unwrap());
            prop_assert_eq!(
                u.mul(&v).unwrap().mul(&w).unwrap(),
                u.mul(&v.mul(&w).unwrap()).unwrap()
            );
        }
    }
}

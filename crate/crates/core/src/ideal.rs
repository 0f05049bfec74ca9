//! Monomial ideals held by their minimal generating sets.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::assoc::PrimeSupport;
use crate::error::{check_dim, Error, Result};
use crate::monomial::ExponentVector;

/// A monomial ideal in `K[X_1, ..., X_r]`.
///
/// The generator list is always the minimal generating set, sorted
/// lexicographically, so two ideals are equal exactly when their structs
/// compare equal. The unit ideal is `{1}`; the zero ideal has no generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonomialIdeal {
    r: usize,
    gens: Vec<ExponentVector>,
}

/// Size parameters of a proper nonzero ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealStats {
    pub r: usize,
    /// Number of minimal generators.
    pub s: usize,
    /// Maximal total degree of a minimal generator.
    pub d: u64,
    /// `d` minus the degree of the gcd of all minimal generators.
    pub d_red: u64,
    /// Variables dividing at least one minimal generator.
    pub support: PrimeSupport,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `raw`, dropping redundant generators.
    pub fn new<I>(r: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        let raw: Vec<ExponentVector> = raw.into_iter().collect();
        for g in &raw {
            check_dim(r, g.len())?;
        }
        Ok(Self::from_raw_unchecked(r, raw))
    }

    /// Convenience constructor from plain exponent lists.
    pub fn from_exponents(r: usize, raw: &[&[u32]]) -> Result<Self> {
        Self::new(r, raw.iter().map(|v| ExponentVector::new(v.to_vec())))
    }

    pub(crate) fn from_raw_unchecked(r: usize, raw: Vec<ExponentVector>) -> Self {
        MonomialIdeal {
            r,
            gens: minimal_elements(raw),
        }
    }

    pub fn unit(r: usize) -> Self {
        MonomialIdeal {
            r,
            gens: vec![ExponentVector::zero(r)],
        }
    }

    pub fn zero(r: usize) -> Self {
        MonomialIdeal {
            r,
            gens: Vec::new(),
        }
    }

    /// The maximal monomial ideal `(X_1, ..., X_r)`.
    pub fn maximal(r: usize) -> Self {
        let gens = (0..r)
            .map(|i| ExponentVector::unit(r, i).expect("index in range"))
            .collect();
        Self::from_raw_unchecked(r, gens)
    }

    pub fn nvars(&self) -> usize {
        self.r
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub(crate) fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    /// Is the monomial `u` an element of the ideal?
    pub fn contains(&self, u: &ExponentVector) -> Result<bool> {
        check_dim(self.r, u.len())?;
        Ok(self.contains_unchecked(u))
    }

    pub(crate) fn contains_unchecked(&self, u: &ExponentVector) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(u))
    }

    /// Ideal inclusion, tested generator by generator.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.r, other.r)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.r, other.r)?;
        let mut raw = BTreeSet::new();
        for g in &self.gens {
            for h in &other.gens {
                raw.insert(g.mul_unchecked(h)?);
            }
        }
        Ok(Self::from_raw_unchecked(self.r, raw.into_iter().collect()))
    }

    /// `I^n` by repeated squaring; `I^0` is the unit ideal.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        let mut result = MonomialIdeal::unit(self.r);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.product(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base)?;
            }
        }
        Ok(result)
    }

    /// `I^n` by enumerating every product of `n` generators before
    /// minimalizing once. Slow; kept as an independent check on [`power`](Self::power).
    pub fn power_by_expansion(&self, n: u32) -> Result<MonomialIdeal> {
        let mut layer: BTreeSet<ExponentVector> = BTreeSet::new();
        layer.insert(ExponentVector::zero(self.r));
        for _ in 0..n {
            let mut next = BTreeSet::new();
            for p in &layer {
                for g in &self.gens {
                    next.insert(p.mul_unchecked(g)?);
                }
            }
            layer = next;
        }
        Ok(Self::from_raw_unchecked(
            self.r,
            layer.into_iter().collect(),
        ))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.r, other.r)?;
        let mut raw = BTreeSet::new();
        for g in &self.gens {
            for h in &other.gens {
                raw.insert(g.lcm_unchecked(h));
            }
        }
        Ok(Self::from_raw_unchecked(self.r, raw.into_iter().collect()))
    }

    /// `I : u` for a monomial `u`.
    pub fn colon_monomial(&self, u: &ExponentVector) -> Result<MonomialIdeal> {
        check_dim(self.r, u.len())?;
        Ok(self.colon_monomial_unchecked(u))
    }

    pub(crate) fn colon_monomial_unchecked(&self, u: &ExponentVector) -> MonomialIdeal {
        let raw = self.gens.iter().map(|g| g.quotient_unchecked(u)).collect();
        Self::from_raw_unchecked(self.r, raw)
    }

    /// `I : J`, the intersection of `I : u` over the generators `u` of `J`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.r, other.r)?;
        let mut gens = other.gens.iter();
        let first = gens.next().ok_or(Error::ZeroIdeal)?;
        let mut acc = self.colon_monomial_unchecked(first);
        for u in gens {
            acc = acc.intersect(&self.colon_monomial_unchecked(u))?;
        }
        Ok(acc)
    }

    /// `I : X_j^∞` (zero-based `j`): the variable `X_j` is replaced by 1.
    pub fn saturate_variable(&self, j: usize) -> Result<MonomialIdeal> {
        if j >= self.r {
            return Err(Error::IndexOutOfRange {
                index: j,
                vars: self.r,
            });
        }
        let raw = self.gens.iter().map(|g| g.with_entry(j, 0)).collect();
        Ok(Self::from_raw_unchecked(self.r, raw))
    }

    /// `I : m^∞` as the intersection of the single-variable saturations.
    pub fn saturation(&self) -> MonomialIdeal {
        let mut parts = (0..self.r).map(|j| self.saturate_variable(j).expect("index in range"));
        let Some(first) = parts.next() else {
            return self.clone();
        };
        parts.fold(first, |acc, p| acc.intersect(&p).expect("same ring"))
    }

    /// Greatest common divisor `X^t` of all generators, and `I : X^t`.
    pub fn gcd_reduce(&self) -> Result<(MonomialIdeal, ExponentVector)> {
        let (first, rest) = self.gens.split_first().ok_or(Error::ZeroIdeal)?;
        let t = rest
            .iter()
            .fold(first.clone(), |acc, g| acc.gcd(g).expect("same ring"));
        let raw = self
            .gens
            .iter()
            .map(|g| g.div_exact(&t).expect("gcd divides every generator"))
            .collect();
        Ok((Self::from_raw_unchecked(self.r, raw), t))
    }

    /// Variables dividing at least one minimal generator.
    pub fn support(&self) -> PrimeSupport {
        let members: BTreeSet<usize> = self.gens.iter().flat_map(|g| g.support()).collect();
        PrimeSupport::new_unchecked(members.into_iter().collect())
    }

    /// Primary test for monomial ideals: every variable that divides some
    /// minimal generator must occur as a pure-power generator.
    pub fn is_primary(&self) -> Result<bool> {
        self.require_proper_nonzero()?;
        let pure: BTreeSet<usize> = self
            .gens
            .iter()
            .filter_map(|g| g.pure_power_variable())
            .collect();
        Ok(self.support().members().iter().all(|j| pure.contains(j)))
    }

    /// Maximal total degree of a minimal generator.
    pub fn max_degree(&self) -> u64 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn stats(&self) -> Result<IdealStats> {
        self.require_proper_nonzero()?;
        let (reduced, _) = self.gcd_reduce()?;
        Ok(IdealStats {
            r: self.r,
            s: self.gens.len(),
            d: self.max_degree(),
            d_red: reduced.max_degree(),
            support: self.support(),
        })
    }

    /// Largest exponent of each variable over the minimal generators.
    pub fn max_exponents(&self) -> ExponentVector {
        let mut m = vec![0; self.r];
        for g in &self.gens {
            for (slot, &e) in m.iter_mut().zip(g.entries()) {
                *slot = (*slot).max(e);
            }
        }
        ExponentVector::new(m)
    }
}

/// Divisibility-minimal elements of `raw`, deduplicated and sorted.
fn minimal_elements(mut raw: Vec<ExponentVector>) -> Vec<ExponentVector> {
    raw.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    raw.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(raw.len());
    for g in raw {
        // a proper divisor has strictly smaller degree, so it is already in `kept`
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal(r={}, {:?})", self.r, self.gens)
    }
}

//! Associated primes of monomial ideals.
//!
//! Every associated prime of a monomial ideal is generated by a subset of
//! the variables. The prime `p(M)` is associated to `I` exactly when the
//! maximal ideal is associated to the localization of `I` at `p(M)`, and the
//! maximal ideal is associated to an ideal `J` exactly when `J : m != J`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::ExponentVector;

/// A set `M` of variable indices (zero-based), naming the prime
/// `p(M) = (X_i | i in M)`.
///
/// Supports order by size first, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeSupport(Vec<usize>);

impl PrimeSupport {
    /// Sorts and deduplicates; every member must be below `r`.
    pub fn new(r: usize, mut members: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = members.iter().find(|&&i| i >= r) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                vars: r,
            });
        }
        members.sort_unstable();
        members.dedup();
        Ok(PrimeSupport(members))
    }

    pub(crate) fn new_unchecked(members: Vec<usize>) -> Self {
        PrimeSupport(members)
    }

    /// All variables of an `r`-variable ring, i.e. the maximal ideal.
    pub fn full(r: usize) -> Self {
        PrimeSupport((0..r).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &PrimeSupport) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }

    /// The prime `p(M)` as a monomial ideal in `r` variables.
    pub fn prime_ideal(&self, r: usize) -> Result<MonomialIdeal> {
        let gens = self
            .0
            .iter()
            .map(|&i| ExponentVector::unit(r, i))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(r, gens)
    }

    /// Renders as `(x1,x3)` using the given variable names.
    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<&str> = self.0.iter().map(|&i| names[i].as_str()).collect();
        format!("({})", parts.join(","))
    }
}

impl Ord for PrimeSupport {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PrimeSupport {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        write!(f, ")")
    }
}

/// Serialized with one-based variable numbers.
impl Serialize for PrimeSupport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(|i| i + 1))
    }
}

/// The associated primes of one ideal, in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct AssSet(BTreeSet<PrimeSupport>);

impl AssSet {
    pub fn new() -> Self {
        AssSet(BTreeSet::new())
    }

    pub fn insert(&mut self, p: PrimeSupport) -> bool {
        self.0.insert(p)
    }

    pub fn contains(&self, p: &PrimeSupport) -> bool {
        self.0.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &PrimeSupport> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset_of(&self, other: &AssSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Copy without the height-one primes `(X_i)`.
    pub fn without_singletons(&self) -> AssSet {
        AssSet(self.0.iter().filter(|p| p.len() > 1).cloned().collect())
    }

    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.0.iter().map(|p| p.render(names)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl FromIterator<PrimeSupport> for AssSet {
    fn from_iter<T: IntoIterator<Item = PrimeSupport>>(iter: T) -> Self {
        AssSet(iter.into_iter().collect())
    }
}

impl fmt::Debug for AssSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for AssSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Image of `I` in the localization at `p(M)`: variables outside `M` become
/// units, so their exponents are dropped. The result lives in `|M|` variables.
pub fn localize(ideal: &MonomialIdeal, support: &PrimeSupport) -> Result<MonomialIdeal> {
    ideal.require_proper_nonzero()?;
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    let r = ideal.nvars();
    if let Some(&bad) = support.members().iter().find(|&&i| i >= r) {
        return Err(Error::IndexOutOfRange {
            index: bad,
            vars: r,
        });
    }
    let raw = ideal
        .generators()
        .iter()
        .map(|g| g.restrict(support.members()))
        .collect();
    Ok(MonomialIdeal::from_raw_unchecked(support.len(), raw))
}

/// Is the maximal ideal `(X_1, ..., X_r)` associated to `I`?
pub fn max_ideal_associated(ideal: &MonomialIdeal) -> Result<bool> {
    ideal.require_proper_nonzero()?;
    let r = ideal.nvars();
    // fewer generators than variables: m is never associated
    if ideal.num_generators() < r {
        return Ok(false);
    }
    // a variable dividing no generator cannot belong to an associated prime
    if ideal.support().len() < r {
        return Ok(false);
    }
    let colon = ideal.colon_ideal(&MonomialIdeal::maximal(r))?;
    Ok(&colon != ideal)
}

/// All associated primes of `I`.
///
/// Candidates are the subsets of the support of `I` with at most
/// `min(r, s)` elements, visited by size and then lexicographically.
pub fn ass(ideal: &MonomialIdeal) -> Result<AssSet> {
    ideal.require_proper_nonzero()?;
    let support = ideal.support();
    let max_size = ideal.nvars().min(ideal.num_generators());
    let mut out = AssSet::new();
    for size in 1..=max_size.min(support.len()) {
        for subset in combinations(support.members(), size) {
            let m = PrimeSupport::new_unchecked(subset);
            let local = localize(ideal, &m)?;
            if local.is_unit() {
                continue;
            }
            if max_ideal_associated(&local)? {
                out.insert(m);
            }
        }
    }
    Ok(out)
}

/// Subsets of `items` of the given size, lexicographic in positions.
pub(crate) fn combinations(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..size).collect();
    if size > items.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let mut k = size;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if idx[k] < items.len() - size + k {
                break;
            }
            if k == 0 {
                return out;
            }
        }
        idx[k] += 1;
        for j in k + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Default limit on the number of candidate exponents tried by
/// [`search_witness`].
pub const DEFAULT_WITNESS_BUDGET: u64 = 2_000_000;

/// Outcome of a bounded search for `a` with `I : X^a = p(M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessSearch {
    Found(ExponentVector),
    /// The whole candidate box was searched without success.
    Exhausted,
    /// The candidate box is larger than the budget; the result is unknown.
    BudgetExceeded,
}

/// Result of [`find_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Found(ExponentVector),
    NotAssociated,
    /// `p(M)` is associated but the bounded search found no witness.
    Unknown,
}

impl Witness {
    pub fn found(&self) -> Option<&ExponentVector> {
        match self {
            Witness::Found(a) => Some(a),
            _ => None,
        }
    }
}

/// Searches `a` with `I : X^a = p(M)` in order of total degree.
///
/// Candidates range over `0 <= a_i <= D_i`, where `D_i` is the largest
/// exponent of `X_i` among the generators. The box is complete: if
/// `a + e_i` lies in `I` and `a_i >= D_i` then already `a` lies in `I`, and
/// exponents of variables outside `M` can be lowered to `D_i` without
/// changing the colon.
pub fn search_witness(
    ideal: &MonomialIdeal,
    support: &PrimeSupport,
    budget: u64,
) -> Result<WitnessSearch> {
    ideal.require_proper_nonzero()?;
    let r = ideal.nvars();
    let target = support.prime_ideal(r)?;
    let bounds = ideal.max_exponents();
    let box_size = bounds
        .entries()
        .iter()
        .try_fold(1u64, |acc, &d| acc.checked_mul(u64::from(d) + 1));
    if box_size.is_none_or(|n| n > budget) {
        return Ok(WitnessSearch::BudgetExceeded);
    }
    let mut candidates = Vec::new();
    let mut current = vec![0u32; r];
    loop {
        candidates.push(ExponentVector::new(current.clone()));
        let mut k = 0;
        while k < r && current[k] == bounds.get(k) {
            current[k] = 0;
            k += 1;
        }
        if k == r {
            break;
        }
        current[k] += 1;
    }
    candidates.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    for a in candidates {
        if ideal.contains_unchecked(&a) {
            continue;
        }
        if ideal.colon_monomial_unchecked(&a) == target {
            return Ok(WitnessSearch::Found(a));
        }
    }
    Ok(WitnessSearch::Exhausted)
}

/// A monomial `X^a` with `I : X^a = p(M)`, if one exists.
pub fn find_witness(ideal: &MonomialIdeal, support: &PrimeSupport) -> Result<Witness> {
    find_witness_with_budget(ideal, support, DEFAULT_WITNESS_BUDGET)
}

pub fn find_witness_with_budget(
    ideal: &MonomialIdeal,
    support: &PrimeSupport,
    budget: u64,
) -> Result<Witness> {
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    match search_witness(ideal, support, budget)? {
        WitnessSearch::Found(a) => Ok(Witness::Found(a)),
        WitnessSearch::Exhausted => Ok(Witness::NotAssociated),
        WitnessSearch::BudgetExceeded => {
            if ass(ideal)?.contains(support) {
                Ok(Witness::Unknown)
            } else {
                Ok(Witness::NotAssociated)
            }
        }
    }
}

//! The sequence `Ass(R/I^n)` for `n = 1, 2, ...` and its observed indices.
//!
//! Everything here is empirical: a finite prefix of the sequence can refute
//! a candidate index but never certify it. Each index therefore carries a
//! `confirmed` flag saying whether the observed tail behind it is at least
//! as long as the confirmation window.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::assoc::{ass, AssSet, PrimeSupport};
use crate::error::{check_dim, Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::ExponentVector;

pub const DEFAULT_MAX_POWER: u32 = 12;
pub const DEFAULT_CONFIRMATION_WINDOW: usize = 4;

/// `Ass(R/I^n)` for `n = 1..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssProfile {
    pub ideal: MonomialIdeal,
    pub n_max: u32,
    /// Entry `k` holds `Ass(R/I^(k+1))`.
    pub sequence: Vec<AssSet>,
}

impl AssProfile {
    /// `Ass(R/I^n)` for one-based `n`.
    pub fn at(&self, n: u32) -> Option<&AssSet> {
        (n >= 1)
            .then(|| self.sequence.get(n as usize - 1))
            .flatten()
    }

    /// Every prime occurring anywhere in the profile.
    pub fn all_primes(&self) -> BTreeSet<PrimeSupport> {
        self.sequence
            .iter()
            .flat_map(|a| a.iter().cloned())
            .collect()
    }
}

/// An index read off a finite prefix of the sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ObservedIndex {
    pub value: u32,
    /// The observed tail starting at `value` spans at least the
    /// confirmation window.
    pub confirmed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    /// Smallest `n` from which the sequence is constant.
    pub stab: ObservedIndex,
    /// Smallest `n` from which the sequence is non-decreasing.
    pub pers: ObservedIndex,
    /// Smallest `n` from which the sequence is non-increasing.
    pub copers: ObservedIndex,
    /// Per prime `p(M)`: smallest `N` such that, among the observed powers,
    /// once `p(M)` is absent at some `n >= N` it stays absent. This is an
    /// observation, not a certified value.
    pub per_prime_cpi: BTreeMap<PrimeSupport, u32>,
    pub window: usize,
}

/// Computes `Ass(R/I^n)` for `n = 1..=n_max`, building the powers
/// incrementally.
pub fn ass_sequence(ideal: &MonomialIdeal, n_max: u32) -> Result<AssProfile> {
    ideal.require_proper_nonzero()?;
    if n_max < 1 {
        return Err(Error::InvalidParameter("n_max must be at least 1".into()));
    }
    let mut sequence = Vec::with_capacity(n_max as usize);
    let mut current = ideal.clone();
    for n in 1..=n_max {
        if n > 1 {
            current = current.product(ideal)?;
        }
        sequence.push(ass(&current)?);
    }
    Ok(AssProfile {
        ideal: ideal.clone(),
        n_max,
        sequence,
    })
}

/// Smallest one-based `n` such that `holds(seq[k], seq[k+1])` for every
/// `k >= n` inside the observed range.
fn tail_start(seq: &[AssSet], holds: impl Fn(&AssSet, &AssSet) -> bool) -> u32 {
    let mut start = seq.len();
    while start > 1 && holds(&seq[start - 2], &seq[start - 1]) {
        start -= 1;
    }
    start.max(1) as u32
}

pub fn indices(profile: &AssProfile) -> IndexReport {
    indices_with_window(profile, DEFAULT_CONFIRMATION_WINDOW)
}

pub fn indices_with_window(profile: &AssProfile, window: usize) -> IndexReport {
    let seq = &profile.sequence;
    let len = seq.len() as u32;
    let observe = |value: u32| ObservedIndex {
        value,
        confirmed: (len + 1 - value) as usize >= window,
    };
    let stab = observe(tail_start(seq, |a, b| a == b));
    let pers = observe(tail_start(seq, |a, b| a.is_subset_of(b)));
    let copers = observe(tail_start(seq, |a, b| b.is_subset_of(a)));

    let per_prime_cpi = profile
        .all_primes()
        .into_iter()
        .map(|p| {
            // last one-based n where p is absent at n and present at n + 1
            let last_return = (1..len)
                .rev()
                .find(|&n| !seq[n as usize - 1].contains(&p) && seq[n as usize].contains(&p));
            let cpi = last_return.map_or(1, |n| n + 1);
            (p, cpi)
        })
        .collect();

    IndexReport {
        stab,
        pers,
        copers,
        per_prime_cpi,
        window,
    }
}

/// Is `X^u` in `I^n`? Decided by a search for exponents `alpha` with
/// `sum(alpha) = n` and `sum(alpha_j a_j) <= u`, without forming `I^n`.
pub fn member_of_power(ideal: &MonomialIdeal, u: &ExponentVector, n: u32) -> Result<bool> {
    check_dim(ideal.nvars(), u.len())?;
    let gens: Vec<Vec<u64>> = ideal
        .generators()
        .iter()
        .map(|g| g.entries().iter().map(|&e| u64::from(e)).collect())
        .collect();
    let mut budget: Vec<u64> = u.entries().iter().map(|&e| u64::from(e)).collect();
    Ok(fits_n_generators(&gens, &mut budget, u64::from(n)))
}

/// Can `count` generators (with repetition) be multiplied together inside
/// `budget`? Any multiset of more than `count` generators contains one of
/// exactly `count`, so exact counts suffice.
pub(crate) fn fits_n_generators(gens: &[Vec<u64>], budget: &mut [u64], count: u64) -> bool {
    if count == 0 {
        return true;
    }
    let Some(min_deg) = gens.iter().map(|g| g.iter().sum::<u64>()).min() else {
        return false;
    };
    if budget.iter().sum::<u64>() < count.saturating_mul(min_deg) {
        return false;
    }
    search(gens, budget, count)
}

fn search(gens: &[Vec<u64>], budget: &mut [u64], count: u64) -> bool {
    if count == 0 {
        return true;
    }
    let Some((g, rest)) = gens.split_first() else {
        return false;
    };
    let most = g
        .iter()
        .zip(budget.iter())
        .filter(|(&e, _)| e > 0)
        .map(|(&e, &b)| b / e)
        .min()
        .unwrap_or(count)
        .min(count);
    if rest.is_empty() {
        return most == count;
    }
    for k in (0..=most).rev() {
        for (b, &e) in budget.iter_mut().zip(g) {
            *b -= k * e;
        }
        let ok = search(rest, budget, count - k);
        for (b, &e) in budget.iter_mut().zip(g) {
            *b += k * e;
        }
        if ok {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(r: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(r, gens).unwrap()
    }

    fn sup(r: usize, m: &[usize]) -> PrimeSupport {
        PrimeSupport::new(r, m.to_vec()).unwrap()
    }

    fn set(ps: &[PrimeSupport]) -> AssSet {
        ps.iter().cloned().collect()
    }

    fn example() -> MonomialIdeal {
        ideal(
            3,
            &[&[4, 0, 0], &[3, 1, 0], &[2, 2, 1], &[1, 3, 0], &[0, 4, 0]],
        )
    }

    fn profile_of(seq: Vec<AssSet>) -> AssProfile {
        AssProfile {
            ideal: MonomialIdeal::maximal(2),
            n_max: seq.len() as u32,
            sequence: seq,
        }
    }

    #[test]
    fn sequences() {
        let p = ass_sequence(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]]), 5).unwrap();
        let expected = set(&[sup(3, &[1]), sup(3, &[0, 2])]);
        assert!(p.sequence.iter().all(|a| *a == expected));

        let p = ass_sequence(&example(), 6).unwrap();
        let primary = set(&[sup(3, &[0, 1])]);
        for n in 2..=6 {
            assert_eq!(p.at(n).unwrap(), &primary, "n = {n}");
        }
        assert_ne!(p.at(1).unwrap(), &primary);

        let p = ass_sequence(&ideal(2, &[&[2, 1]]), 3).unwrap();
        let expected = set(&[sup(2, &[0]), sup(2, &[1])]);
        assert!(p.sequence.iter().all(|a| *a == expected));

        assert!(ass_sequence(&example(), 0).is_err());
    }

    #[test]
    fn example_indices() {
        let rep = indices(&ass_sequence(&example(), 6).unwrap());
        assert!(rep.stab.value <= 2);
        assert!(rep.copers.value <= 2);
        assert!(rep.stab.confirmed);
    }

    #[test]
    fn constant_profile_indices() {
        let a = set(&[sup(2, &[0])]);
        let rep = indices(&profile_of(vec![a.clone(); 6]));
        for idx in [rep.stab, rep.pers, rep.copers] {
            assert_eq!(
                idx,
                ObservedIndex {
                    value: 1,
                    confirmed: true
                }
            );
        }
    }

    #[test]
    fn one_growth_step() {
        let small = set(&[sup(2, &[0])]);
        let big = set(&[sup(2, &[0]), sup(2, &[1])]);
        let rep = indices(&profile_of(vec![
            small,
            big.clone(),
            big.clone(),
            big.clone(),
            big,
        ]));
        assert_eq!(rep.pers.value, 1);
        assert_eq!(rep.copers.value, 2);
        assert_eq!(rep.stab.value, 2);
        assert_eq!(rep.per_prime_cpi[&sup(2, &[1])], 2);
        assert_eq!(rep.per_prime_cpi[&sup(2, &[0])], 1);
    }

    #[test]
    fn short_tails_are_unconfirmed() {
        let a = set(&[sup(2, &[0])]);
        let b = set(&[sup(2, &[1])]);
        let rep = indices(&profile_of(vec![a.clone(), b.clone(), a.clone(), b]));
        assert_eq!(rep.stab.value, 4);
        assert!(!rep.stab.confirmed);
        assert_eq!(rep.per_prime_cpi[&sup(2, &[1])], 4);
        assert_eq!(rep.per_prime_cpi[&sup(2, &[0])], 3);
    }

    #[test]
    fn membership_without_expansion() {
        let i = example();
        assert!(member_of_power(&i, &ExponentVector::from([7, 1, 0]), 2).unwrap());
        assert!(!member_of_power(&i, &ExponentVector::from([7, 0, 0]), 2).unwrap());
        assert!(member_of_power(&i, &ExponentVector::from([0, 0, 0]), 0).unwrap());
        // degree 11 < 3 * 4
        assert!(!member_of_power(&i, &ExponentVector::from([6, 5, 0]), 3).unwrap());
        assert!(member_of_power(&MonomialIdeal::unit(2), &ExponentVector::zero(2), 7).unwrap());
        assert!(
            !member_of_power(&MonomialIdeal::zero(2), &ExponentVector::from([9, 9]), 1).unwrap()
        );
        assert!(member_of_power(&i, &ExponentVector::zero(2), 1).is_err());
    }
}

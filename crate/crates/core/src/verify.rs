//! Cross-checks between independent routes to the same answer: the
//! equivalent characterizations of `m ∈ Ass(R/I^n)`, and the inequality
//! systems against direct ideal arithmetic.

use crate::assoc::{find_witness, max_ideal_associated, PrimeSupport, Witness};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::linsys::{build_colon_system, build_power_system, build_sat_system, Solver, SystemKind};
use crate::monomial::ExponentVector;

/// The routes to "`m` is associated to `I^n`", evaluated side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Characterization {
    pub n: u32,
    /// Localization test on `I^n`.
    pub associated: bool,
    pub witness: Witness,
    /// `I^n : m != I^n`
    pub colon_differs: bool,
    /// `sat(I^n) != I^n`
    pub sat_differs: bool,
    /// `sat(I^n) ∩ I^(n-1) != I^n`
    pub sat_meet_differs: bool,
}

impl Characterization {
    /// All routes give the same answer. An unfinished witness search only
    /// counts against agreement if the other routes say "not associated".
    pub fn agrees(&self) -> bool {
        let witness_ok = match self.witness {
            Witness::Found(_) => self.associated,
            Witness::NotAssociated => !self.associated,
            Witness::Unknown => self.associated,
        };
        witness_ok
            && self.colon_differs == self.associated
            && self.sat_differs == self.associated
            && self.sat_meet_differs == self.associated
    }
}

pub fn characterize(ideal: &MonomialIdeal, n: u32) -> Result<Characterization> {
    let r = ideal.nvars();
    let pow = ideal.power(n)?;
    let prev = ideal.power(n - 1)?;
    let m = MonomialIdeal::maximal(r);
    let sat = pow.saturation();
    let witness = if r == 0 {
        Witness::NotAssociated
    } else {
        find_witness(&pow, &PrimeSupport::full(r))?
    };
    Ok(Characterization {
        n,
        associated: max_ideal_associated(&pow)?,
        witness,
        colon_differs: pow.colon_ideal(&m)? != pow,
        sat_differs: sat != pow,
        sat_meet_differs: sat.intersect(&prev)? != pow,
    })
}

/// A point where a system and the ideal it encodes disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemMismatch {
    pub kind: SystemKind,
    pub n: u32,
    pub h: ExponentVector,
    pub system: bool,
    pub ideal: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SystemCheck {
    pub points: u64,
    pub mismatches: Vec<SystemMismatch>,
}

impl SystemCheck {
    fn merge(&mut self, other: SystemCheck) {
        self.points += other.points;
        self.mismatches.extend(other.mismatches);
    }
}

/// Side length of the checked box: `h` ranges over `[0, 2nd]^r`.
pub fn box_side(ideal: &MonomialIdeal, n: u32) -> u32 {
    let d = u32::try_from(ideal.max_degree()).unwrap_or(u32::MAX);
    d.saturating_mul(n).saturating_mul(2)
}

/// Calls `f` on every point of `[0, side]^r`.
pub fn for_each_point(r: usize, side: u32, mut f: impl FnMut(&ExponentVector)) {
    let mut cur = vec![0u32; r];
    loop {
        f(&ExponentVector::new(cur.clone()));
        let mut k = 0;
        while k < r && cur[k] == side {
            cur[k] = 0;
            k += 1;
        }
        if k == r {
            return;
        }
        cur[k] += 1;
    }
}

fn compare<F>(
    solver: &Solver,
    ideal: &MonomialIdeal,
    n: u32,
    side: u32,
    oracle: F,
) -> Result<SystemCheck>
where
    F: Fn(&ExponentVector) -> bool,
{
    let mut out = SystemCheck::default();
    let mut err = None;
    for_each_point(ideal.nvars(), side, |h| {
        if err.is_some() {
            return;
        }
        out.points += 1;
        match solver.feasible(h, n) {
            Ok(system) => {
                let want = oracle(h);
                if system != want {
                    out.mismatches.push(SystemMismatch {
                        kind: solver.system().kind(),
                        n,
                        h: h.clone(),
                        system,
                        ideal: want,
                    });
                }
            }
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Power system against `I^n`, colon system against `I^n : m`.
pub fn check_power_and_colon(ideal: &MonomialIdeal, n: u32) -> Result<SystemCheck> {
    let side = box_side(ideal, n);
    let pow = ideal.power(n)?;
    let colon = pow.colon_ideal(&MonomialIdeal::maximal(ideal.nvars()))?;

    let power_sys = build_power_system(ideal)?;
    let mut out = compare(&Solver::new(&power_sys), ideal, n, side, |h| {
        pow.contains_unchecked(h)
    })?;
    let colon_sys = build_colon_system(ideal)?;
    out.merge(compare(&Solver::new(&colon_sys), ideal, n, side, |h| {
        colon.contains_unchecked(h)
    })?);
    Ok(out)
}

/// Scales `N = 1, 2, 4, ...` tried for the saturation system; the last one
/// is at least `n` times the largest exponent, where `I^n : X_i^N` has
/// reached `I^n : X_i^∞`.
pub fn sat_scales(ideal: &MonomialIdeal, n: u32) -> Vec<u32> {
    let top = ideal
        .max_exponents()
        .entries()
        .iter()
        .copied()
        .max()
        .unwrap_or(0)
        .saturating_mul(n)
        .max(1);
    let mut out = vec![1];
    while *out.last().expect("nonempty") < top {
        out.push(out.last().expect("nonempty") * 2);
    }
    out
}

/// Saturation system with scale `N` against `∩_i I^n : X_i^N`, for each `N`
/// in [`sat_scales`], and at the largest scale also against `sat(I^n)`.
pub fn check_sat(ideal: &MonomialIdeal, n: u32) -> Result<SystemCheck> {
    let r = ideal.nvars();
    let side = box_side(ideal, n);
    let pow = ideal.power(n)?;
    let scales = sat_scales(ideal, n);
    let mut out = SystemCheck::default();
    for &scale in &scales {
        let powers = MonomialIdeal::new(
            r,
            (0..r).map(|i| ExponentVector::zero(r).with_entry(i, scale)),
        )?;
        let target = pow.colon_ideal(&powers)?;
        if scale == *scales.last().expect("nonempty") && target != pow.saturation() {
            // the largest scale should already give the saturation
            out.mismatches.push(SystemMismatch {
                kind: SystemKind::Sat(scale),
                n,
                h: ExponentVector::zero(r),
                system: false,
                ideal: true,
            });
        }
        let sys = build_sat_system(ideal, scale)?;
        out.merge(compare(&Solver::new(&sys), ideal, n, side, |h| {
            target.contains_unchecked(h)
        })?);
    }
    Ok(out)
}

/// Everything [`verify`] found.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub characterizations: Vec<Characterization>,
    pub systems: SystemCheck,
}

impl VerifyReport {
    pub fn disagreements(&self) -> impl Iterator<Item = &Characterization> {
        self.characterizations.iter().filter(|c| !c.agrees())
    }

    pub fn is_clean(&self) -> bool {
        self.disagreements().next().is_none() && self.systems.mismatches.is_empty()
    }
}

/// Runs every check for `1 <= n <= max_n`.
pub fn verify(ideal: &MonomialIdeal, max_n: u32) -> Result<VerifyReport> {
    ideal.require_proper_nonzero()?;
    let mut report = VerifyReport::default();
    for n in 1..=max_n {
        report.characterizations.push(characterize(ideal, n)?);
        report.systems.merge(check_power_and_colon(ideal, n)?);
        report.systems.merge(check_sat(ideal, n)?);
    }
    Ok(report)
}

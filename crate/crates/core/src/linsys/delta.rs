//! Largest absolute subdeterminant of the augmented matrix `(B | c)`, exact
//! or via Hadamard's inequality, and the resulting degree bound
//! `Δ (ν + 1)`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Signed, Zero};
use serde::Serialize;

use crate::bounds::{BoundKind, BoundLabel, BoundValue};

use super::{IneqSystem, SystemKind};

pub const DEFAULT_ORDER_CAP: usize = 6;
pub const DEFAULT_MINOR_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DeltaLimits {
    /// Largest minor order examined.
    pub order_cap: usize,
    /// Largest number of minors evaluated.
    pub minor_budget: u64,
}

impl Default for DeltaLimits {
    fn default() -> Self {
        DeltaLimits {
            order_cap: DEFAULT_ORDER_CAP,
            minor_budget: DEFAULT_MINOR_BUDGET,
        }
    }
}

/// Outcome of [`delta_exact`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaResult {
    /// Largest `|det|` over the minors examined (1 for an all-zero matrix).
    #[serde(serialize_with = "crate::bounds::decimal")]
    pub value: BigUint,
    /// Every square submatrix was examined.
    pub complete: bool,
    /// Largest order fully examined.
    pub order_reached: usize,
    pub minors_evaluated: u64,
    /// The matrix `(B | c)` is zero; `Δ` is taken as 1.
    pub degenerate: bool,
}

/// Exhaustive maximum of `|det|` over square submatrices of `(B | c)` of
/// order at most `limits.order_cap`.
///
/// The stored rows are only `B`; the implied `-I` rows of the full system
/// do not change the maximum as long as `(B | c)` is nonzero.
pub fn delta_exact(sys: &IneqSystem, limits: DeltaLimits) -> DeltaResult {
    let m = sys.m();
    let cols = sys.nu() + 1;
    let matrix: Vec<Vec<i64>> = (0..m)
        .map(|i| {
            let mut row = sys.rows()[i].clone();
            row.push(sys.rhs()[i]);
            row
        })
        .collect();
    let full_order = m.min(cols);
    let degenerate = matrix.iter().flatten().all(|&x| x == 0);

    let mut best = BigUint::zero();
    let mut evaluated = 0u64;
    let mut order_reached = 0;
    let mut out_of_budget = false;

    'orders: for order in 1..=full_order.min(limits.order_cap) {
        let row_sets = subsets(m, order);
        let col_sets = subsets(cols, order);
        for rs in &row_sets {
            for cs in &col_sets {
                if evaluated >= limits.minor_budget {
                    out_of_budget = true;
                    break 'orders;
                }
                evaluated += 1;
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| BigInt::from(matrix[i][j])).collect())
                    .collect();
                let det = bareiss_determinant(sub).abs();
                let det = det.magnitude();
                if *det > best {
                    best = det.clone();
                }
            }
        }
        order_reached = order;
    }

    if degenerate {
        best = BigUint::one();
    }
    DeltaResult {
        value: best,
        complete: !out_of_budget && order_reached == full_order,
        order_reached,
        minors_evaluated: evaluated,
        degenerate,
    }
}

/// Determinant by fraction-free elimination; every division is exact.
pub(crate) fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// All `size`-element subsets of `0..n` in lexicographic order.
fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..n).collect();
    crate::assoc::combinations(&all, size)
}

fn squared_norm(col: &[i64]) -> BigUint {
    col.iter()
        .map(|&x| BigUint::from(x.unsigned_abs()) * x.unsigned_abs())
        .sum()
}

/// Upper bound on `Δ(B | c)` from Hadamard's inequality, as a squared value.
///
/// For the colon and saturation systems the estimate follows the column
/// structure: each `alpha` column holds a generator `a_j` and one `-1`, so
/// its squared norm is at most `d² + 1`; the `h` and `n` columns have squared
/// norm `r`, and `c` has squared norm `N² r`. This gives
/// `(d²+1)^(rs) r^(r+1) N² r`. Other systems use the product of the
/// `min(m, ν+1)` largest squared column norms, with zero columns counted as 1.
pub fn hadamard_bound(sys: &IneqSystem) -> BoundValue {
    let label = BoundLabel {
        kind: BoundKind::Hadamard,
        params: None,
    };
    let cols = sys.nu() + 1;
    let squared = match sys.kind() {
        SystemKind::Colon | SystemKind::Sat(_) => {
            let d = (0..sys.k())
                .map(|j| {
                    sys.rows()
                        .iter()
                        .map(|row| row[j].max(0) as u64)
                        .sum::<u64>()
                })
                .max()
                .unwrap_or(0);
            let alpha = Pow::pow(BigUint::from(d) * d + 1u32, sys.k());
            (sys.k()..cols)
                .map(|j| squared_norm(&sys.augmented_column(j)).max(BigUint::one()))
                .fold(alpha, |acc, x| acc * x)
        }
        SystemKind::Power => {
            let mut norms: Vec<BigUint> = (0..cols)
                .map(|j| squared_norm(&sys.augmented_column(j)).max(BigUint::one()))
                .collect();
            norms.sort_unstable_by(|a, b| b.cmp(a));
            norms
                .into_iter()
                .take(sys.m().min(cols))
                .fold(BigUint::one(), |acc, x| acc * x)
        }
    };
    BoundValue::from_squared(squared, label)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaSource {
    Exact,
    Hadamard,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeBound {
    /// `Δ (ν + 1)`, squared.
    pub value: BoundValue,
    pub source: DeltaSource,
}

/// Degree bound `Δ(A | b) (ν + 1)` for the generators of the solution
/// module. With `limits`, the exact `Δ` is used when its enumeration
/// completes; otherwise the Hadamard estimate stands in.
pub fn theorem1_bound(sys: &IneqSystem, limits: Option<DeltaLimits>) -> DegreeBound {
    let factor = BigUint::from(sys.nu() + 1);
    let label = BoundLabel {
        kind: BoundKind::DegreeBound,
        params: None,
    };
    if let Some(limits) = limits {
        let delta = delta_exact(sys, limits);
        if delta.complete {
            let v = delta.value * &factor;
            return DegreeBound {
                value: BoundValue::from_squared(&v * &v, label),
                source: DeltaSource::Exact,
            };
        }
    }
    let h = hadamard_bound(sys);
    DegreeBound {
        value: BoundValue::from_squared(h.squared * &factor * &factor, label),
        source: DeltaSource::Hadamard,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::sigma2;
    use crate::ideal::MonomialIdeal;
    use crate::linsys::{build_colon_system, IneqSystem, SystemKind};

    fn diag23() -> IneqSystem {
        // k = 0, r = 1: columns (h, n), c = 0
        IneqSystem::new(
            SystemKind::Power,
            0,
            1,
            vec![vec![2, 0], vec![0, 3]],
            vec![0, 0],
        )
        .unwrap()
    }

    fn example() -> MonomialIdeal {
        MonomialIdeal::from_exponents(
            3,
            &[&[4, 0, 0], &[3, 1, 0], &[2, 2, 1], &[1, 3, 0], &[0, 4, 0]],
        )
        .unwrap()
    }

    #[test]
    fn bareiss_small() {
        let m = |v: Vec<Vec<i64>>| {
            v.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect::<Vec<Vec<BigInt>>>()
        };
        assert_eq!(
            bareiss_determinant(m(vec![vec![2, 0], vec![0, 3]])),
            6.into()
        );
        assert_eq!(
            bareiss_determinant(m(vec![vec![0, 1], vec![1, 0]])),
            (-1).into()
        );
        assert_eq!(
            bareiss_determinant(m(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]])),
            (-3).into()
        );
        assert_eq!(
            bareiss_determinant(m(vec![vec![1, 2], vec![2, 4]])),
            0.into()
        );
    }

    #[test]
    fn diagonal_delta() {
        let d = delta_exact(&diag23(), DeltaLimits::default());
        assert_eq!(d.value, BigUint::from(6u32));
        assert!(d.complete);
        let h = hadamard_bound(&diag23());
        assert_eq!(h.squared, BigUint::from(36u32));
        assert_eq!(h.ceil, BigUint::from(6u32));
        let t = theorem1_bound(&diag23(), Some(DeltaLimits::default()));
        assert_eq!(t.value.ceil, BigUint::from(18u32));
        assert_eq!(t.source, DeltaSource::Exact);
    }

    #[test]
    fn zero_matrix_is_degenerate() {
        let z = IneqSystem::new(SystemKind::Power, 0, 1, vec![vec![0, 0]], vec![0]).unwrap();
        let d = delta_exact(&z, DeltaLimits::default());
        assert!(d.degenerate);
        assert_eq!(d.value, BigUint::one());
    }

    #[test]
    fn order_cap_reports_partial() {
        let sys = build_colon_system(&MonomialIdeal::maximal(2)).unwrap();
        let d = delta_exact(
            &sys,
            DeltaLimits {
                order_cap: 2,
                minor_budget: DEFAULT_MINOR_BUDGET,
            },
        );
        assert!(!d.complete);
        assert_eq!(d.order_reached, 2);
        let full = delta_exact(&sys, DeltaLimits::default());
        assert!(full.complete);
        assert!(full.value >= d.value);
    }

    #[test]
    fn colon_hadamard_matches_parameters() {
        let sys = build_colon_system(&example()).unwrap();
        let h = hadamard_bound(&sys);
        let expected = Pow::pow(BigUint::from(26u32), 15u32) * Pow::pow(BigUint::from(3u32), 5u32);
        assert_eq!(h.squared, expected);
        let t = theorem1_bound(&sys, None);
        assert_eq!(t.source, DeltaSource::Hadamard);
        assert_eq!(t.value.squared, sigma2(5, 5, 3).unwrap().squared);
    }
}

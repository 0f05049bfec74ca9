//! Systems of linear inequalities `B x <= c, x >= 0` whose solutions encode
//! membership in `I^n`, `I^n : m` and `sat(I^n)`.
//!
//! The unknowns are split into blocks `x = (alpha, h, n)` of widths
//! `(k, r, 1)`. For a given exponent vector `h` and power `n` the system is
//! feasible iff some non-negative integer `alpha` completes a solution.
//! The non-negativity rows `-I x <= 0` are implied and never stored.

mod delta;
mod solve;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

pub use delta::{
    delta_exact, hadamard_bound, theorem1_bound, DegreeBound, DeltaLimits, DeltaResult,
    DeltaSource, DEFAULT_MINOR_BUDGET, DEFAULT_ORDER_CAP,
};
pub use solve::{feasible, Solver};

/// What the solutions of a system describe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SystemKind {
    /// Homogeneous system: `X^h in I^n`.
    Power,
    /// One block per variable with right-hand side `e_i`: `X^h in I^n : m`.
    Colon,
    /// The colon system with right-hand side scaled by `N`:
    /// `X^h X_i^N in I^n` for every `i`.
    Sat(u32),
}

impl SystemKind {
    pub fn tag(&self) -> &'static str {
        match self {
            SystemKind::Power => "power",
            SystemKind::Colon => "colon",
            SystemKind::Sat(_) => "sat",
        }
    }
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemKind::Sat(n) => write!(f, "sat({n})"),
            other => f.write_str(other.tag()),
        }
    }
}

/// `B x <= c` with column blocks `(B_alpha | B_h | B_n)` of widths `(k, r, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IneqSystem {
    kind: SystemKind,
    k: usize,
    r: usize,
    /// Row-major `m x nu` matrix `B`.
    rows: Vec<Vec<i64>>,
    c: Vec<i64>,
}

impl IneqSystem {
    /// Validates block widths and the sign of `c`.
    pub fn new(
        kind: SystemKind,
        k: usize,
        r: usize,
        rows: Vec<Vec<i64>>,
        c: Vec<i64>,
    ) -> Result<Self> {
        let nu = k + r + 1;
        if rows.len() != c.len() {
            return Err(Error::InvalidParameter(format!(
                "{} rows but right-hand side of length {}",
                rows.len(),
                c.len()
            )));
        }
        if let Some(bad) = rows.iter().find(|row| row.len() != nu) {
            return Err(Error::InvalidParameter(format!(
                "row of length {} in a system with nu = {nu}",
                bad.len()
            )));
        }
        if c.iter().any(|&x| x < 0) {
            return Err(Error::InvalidParameter(
                "right-hand side must be non-negative".into(),
            ));
        }
        if let SystemKind::Sat(0) = kind {
            return Err(Error::InvalidParameter(
                "scaling factor N must be at least 1".into(),
            ));
        }
        Ok(IneqSystem {
            kind,
            k,
            r,
            rows,
            c,
        })
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    /// Number of rows of `B`.
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns `nu = k + r + 1`.
    pub fn nu(&self) -> usize {
        self.k + self.r + 1
    }

    /// Width of the `alpha` block.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Width of the `h` block (number of ring variables).
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn rhs(&self) -> &[i64] {
        &self.c
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.rows[row][col]
    }

    /// Column `col` of the augmented matrix `(B | c)`; `col == nu` is `c`.
    pub fn augmented_column(&self, col: usize) -> Vec<i64> {
        if col == self.nu() {
            self.c.clone()
        } else {
            self.rows.iter().map(|row| row[col]).collect()
        }
    }

    /// Serializes in the text dump format: a header `kind m nu k r [N]`,
    /// then `m` rows of `nu` integers, then one line with the `m` entries of `c`.
    pub fn to_dump(&self) -> String {
        let mut out = format!(
            "{} {} {} {} {}",
            self.kind.tag(),
            self.m(),
            self.nu(),
            self.k,
            self.r
        );
        if let SystemKind::Sat(n) = self.kind {
            out.push_str(&format!(" {n}"));
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&join(row));
            out.push('\n');
        }
        out.push_str(&join(&self.c));
        out.push('\n');
        out
    }

    /// Parses the format written by [`to_dump`](Self::to_dump).
    pub fn from_dump(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (hline, header) = lines.next().ok_or_else(|| dump_err(0, "empty input"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let number = |i: usize| -> Result<usize> {
            fields
                .get(i)
                .ok_or_else(|| dump_err(hline, "header needs `kind m nu k r [N]`"))?
                .parse()
                .map_err(|_| dump_err(hline, "header field is not a number"))
        };
        let (m, nu, k, r) = (number(1)?, number(2)?, number(3)?, number(4)?);
        let kind = match fields[0] {
            "power" => SystemKind::Power,
            "colon" => SystemKind::Colon,
            "sat" => SystemKind::Sat(number(5)? as u32),
            other => return Err(dump_err(hline, &format!("unknown system kind `{other}`"))),
        };
        let expected_fields = if matches!(kind, SystemKind::Sat(_)) {
            6
        } else {
            5
        };
        if fields.len() != expected_fields {
            return Err(dump_err(hline, "wrong number of header fields"));
        }
        if k + r + 1 != nu {
            return Err(dump_err(hline, "nu must equal k + r + 1"));
        }
        let mut rows = Vec::with_capacity(m);
        for _ in 0..m {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| dump_err(hline, "missing matrix row"))?;
            let row = parse_ints(ln, line)?;
            if row.len() != nu {
                return Err(dump_err(ln, &format!("expected {nu} entries")));
            }
            rows.push(row);
        }
        let (ln, line) = lines
            .next()
            .ok_or_else(|| dump_err(hline, "missing right-hand side"))?;
        let c = parse_ints(ln, line)?;
        if c.len() != m {
            return Err(dump_err(
                ln,
                &format!("expected {m} right-hand side entries"),
            ));
        }
        if let Some((ln, _)) = lines.next() {
            return Err(dump_err(ln, "trailing data"));
        }
        IneqSystem::new(kind, k, r, rows, c)
    }
}

impl FromStr for IneqSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IneqSystem::from_dump(s)
    }
}

fn join(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_ints(line_no: usize, line: &str) -> Result<Vec<i64>> {
    line.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| dump_err(line_no, &format!("bad integer `{t}`")))
        })
        .collect()
}

fn dump_err(line_index: usize, message: &str) -> Error {
    Error::Parse {
        position: line_index + 1,
        message: message.to_string(),
    }
}

fn generator_columns(ideal: &MonomialIdeal) -> Result<Vec<Vec<i64>>> {
    ideal.require_proper_nonzero()?;
    Ok(ideal
        .generators()
        .iter()
        .map(|g| g.entries().iter().map(|&e| i64::from(e)).collect())
        .collect())
}

/// Homogeneous system for `X^h in I^n`: rows `sum_j alpha_j a_j - h <= 0`
/// and `n - sum_j alpha_j <= 0`.
pub fn build_power_system(ideal: &MonomialIdeal) -> Result<IneqSystem> {
    let gens = generator_columns(ideal)?;
    let (r, s) = (ideal.nvars(), gens.len());
    let nu = s + r + 1;
    let mut rows = Vec::with_capacity(r + 1);
    for j in 0..r {
        let mut row = vec![0; nu];
        for (l, a) in gens.iter().enumerate() {
            row[l] = a[j];
        }
        row[s + j] = -1;
        rows.push(row);
    }
    let mut count = vec![-1; s];
    count.extend(std::iter::repeat_n(0, r));
    count.push(1);
    rows.push(count);
    IneqSystem::new(SystemKind::Power, s, r, rows, vec![0; r + 1])
}

/// System for `X^h in I^n : m`: one block of `r + 1` rows per variable
/// `i`, each with its own `alpha` columns and right-hand side `(e_i, 0)`.
pub fn build_colon_system(ideal: &MonomialIdeal) -> Result<IneqSystem> {
    build_blocked(ideal, SystemKind::Colon, 1)
}

/// The colon system with right-hand side multiplied by `n_scale`.
pub fn build_sat_system(ideal: &MonomialIdeal, n_scale: u32) -> Result<IneqSystem> {
    if n_scale < 1 {
        return Err(Error::InvalidParameter(
            "scaling factor N must be at least 1".into(),
        ));
    }
    build_blocked(ideal, SystemKind::Sat(n_scale), i64::from(n_scale))
}

fn build_blocked(ideal: &MonomialIdeal, kind: SystemKind, scale: i64) -> Result<IneqSystem> {
    let gens = generator_columns(ideal)?;
    let (r, s) = (ideal.nvars(), gens.len());
    let k = r * s;
    let nu = k + r + 1;
    let mut rows = Vec::with_capacity((r + 1) * r);
    let mut c = Vec::with_capacity((r + 1) * r);
    for block in 0..r {
        let alpha0 = block * s;
        for j in 0..r {
            let mut row = vec![0; nu];
            for (l, a) in gens.iter().enumerate() {
                row[alpha0 + l] = a[j];
            }
            row[k + j] = -1;
            rows.push(row);
            c.push(if j == block { scale } else { 0 });
        }
        let mut count = vec![0; nu];
        for l in 0..s {
            count[alpha0 + l] = -1;
        }
        count[nu - 1] = 1;
        rows.push(count);
        c.push(0);
    }
    IneqSystem::new(kind, k, r, rows, c)
}

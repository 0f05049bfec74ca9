use crate::error::{check_dim, Result};
use crate::monomial::ExponentVector;

use super::IneqSystem;

/// Is there a non-negative integer `alpha` with `B (alpha, h, n) <= c`?
///
/// One-shot form of [`Solver::feasible`].
pub fn feasible(sys: &IneqSystem, h: &ExponentVector, n: u32) -> Result<bool> {
    Solver::new(sys).feasible(h, n)
}

/// Feasibility oracle for a fixed system, answering many `(h, n)` queries.
///
/// Rows are grouped into independent components by the `alpha` columns they
/// touch (for the colon and saturation systems these are the `r` blocks), and
/// each component is settled by a depth-first search with row-wise bounds.
///
/// Each `alpha` entry is searched in `0..=n + max(c)`. For the block shapes
/// built here this loses nothing: inside a block, the generator rows only
/// have non-negative `alpha` coefficients and the count row demands
/// `sum(alpha) >= n`, so any solution can be lowered to one with
/// `sum(alpha) = n`.
pub struct Solver<'a> {
    sys: &'a IneqSystem,
    parts: Vec<(Vec<usize>, Option<Block>)>,
    max_c: i64,
}

impl<'a> Solver<'a> {
    pub fn new(sys: &'a IneqSystem) -> Self {
        let parts = components(sys)
            .into_iter()
            .map(|comp| {
                let block = (!comp.cols.is_empty()).then(|| Block::new(sys, &comp));
                (comp.rows, block)
            })
            .collect();
        Solver {
            sys,
            parts,
            max_c: sys.rhs().iter().copied().max().unwrap_or(0),
        }
    }

    pub fn system(&self) -> &IneqSystem {
        self.sys
    }

    pub fn feasible(&self, h: &ExponentVector, n: u32) -> Result<bool> {
        let sys = self.sys;
        check_dim(sys.r(), h.len())?;
        let k = sys.k();
        let limit = i64::from(n) + self.max_c;

        // right-hand side left over for the alpha part
        let residual: Vec<i64> = sys
            .rows()
            .iter()
            .zip(sys.rhs())
            .map(|(row, &c)| {
                let h_part: i64 = row[k..k + sys.r()]
                    .iter()
                    .zip(h.entries())
                    .map(|(&b, &e)| b * i64::from(e))
                    .sum();
                c - h_part - row[k + sys.r()] * i64::from(n)
            })
            .collect();

        for (rows, block) in &self.parts {
            let mut res: Vec<i64> = rows.iter().map(|&i| residual[i]).collect();
            let ok = match block {
                None => res.iter().all(|&r| r >= 0),
                Some(block) => block.search(0, &mut res, limit),
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

struct Component {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

/// Connected components of the bipartite row/alpha-column incidence.
fn components(sys: &IneqSystem) -> Vec<Component> {
    let k = sys.k();
    let m = sys.m();
    // union-find over alpha columns; rows without alpha entries stand alone
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for row in sys.rows() {
        let mut first = None;
        for (col, &b) in row[..k].iter().enumerate() {
            if b == 0 {
                continue;
            }
            match first {
                None => first = Some(col),
                Some(f) => {
                    let (a, b) = (find(&mut parent, f), find(&mut parent, col));
                    parent[a] = b;
                }
            }
        }
    }
    let mut out: Vec<Component> = Vec::new();
    let mut root_slot = vec![usize::MAX; k];
    for col in 0..k {
        let root = find(&mut parent, col);
        if root_slot[root] == usize::MAX {
            root_slot[root] = out.len();
            out.push(Component {
                rows: Vec::new(),
                cols: Vec::new(),
            });
        }
        out[root_slot[root]].cols.push(col);
    }
    for i in 0..m {
        let row = &sys.rows()[i];
        match row[..k].iter().position(|&b| b != 0) {
            Some(col) => {
                let root = find(&mut parent, col);
                out[root_slot[root]].rows.push(i);
            }
            None => out.push(Component {
                rows: vec![i],
                cols: Vec::new(),
            }),
        }
    }
    out
}

/// One independent component: a dense coefficient table plus, for each
/// search depth, which rows only have non-negative coefficients left.
struct Block {
    /// `coef[row][pos]` for the component's rows and columns.
    coef: Vec<Vec<i64>>,
    /// `capacity[pos][row]`: coefficients at positions `>= pos` are all `>= 0`.
    capacity: Vec<Vec<bool>>,
}

impl Block {
    fn new(sys: &IneqSystem, comp: &Component) -> Self {
        let coef: Vec<Vec<i64>> = comp
            .rows
            .iter()
            .map(|&i| comp.cols.iter().map(|&j| sys.entry(i, j)).collect())
            .collect();
        let width = comp.cols.len();
        let capacity = (0..=width)
            .map(|pos| {
                coef.iter()
                    .map(|row| row[pos..].iter().all(|&b| b >= 0))
                    .collect()
            })
            .collect();
        Block { coef, capacity }
    }

    /// Largest value column `pos` can take under the capacity rows.
    fn cap(&self, pos: usize, from: usize, res: &[i64], limit: i64) -> i64 {
        let mut cap = limit;
        for (i, (row, &r)) in self.coef.iter().zip(res).enumerate() {
            let b = row[pos];
            if b > 0 && self.capacity[from][i] {
                cap = cap.min(r.div_euclid(b));
            }
        }
        cap
    }

    fn search(&self, pos: usize, res: &mut [i64], limit: i64) -> bool {
        let width = self.coef.first().map_or(0, |r| r.len());
        if pos == width {
            return res.iter().all(|&r| r >= 0);
        }
        // prune: every row must be satisfiable using the per-column caps
        let caps: Vec<i64> = (pos..width).map(|p| self.cap(p, pos, res, limit)).collect();
        if caps.iter().any(|&c| c < 0) {
            return false;
        }
        for (row, &r) in self.coef.iter().zip(res.iter()) {
            let best: i64 = row[pos..]
                .iter()
                .zip(&caps)
                .map(|(&b, &c)| if b < 0 { b * c } else { 0 })
                .sum();
            if r - best < 0 {
                return false;
            }
        }
        for v in (0..=caps[0]).rev() {
            for (row, r) in self.coef.iter().zip(res.iter_mut()) {
                *r -= row[pos] * v;
            }
            let ok = self.search(pos + 1, res, limit);
            for (row, r) in self.coef.iter().zip(res.iter_mut()) {
                *r += row[pos] * v;
            }
            if ok {
                return true;
            }
        }
        false
    }
}

//! Partitions, skew shapes and column-interval diagrams.
//!
//! French convention everywhere: row 1 is the bottom row, a cell is
//! `(row, col)` with both coordinates starting at 1, and a partition's
//! `i`-th part is the length of row `i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::Monomial;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Reverse lexicographic order: `(n)` comes first among partitions of `n`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.0.cmp(&self.0)
    }
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `r` (0 outside the shape).
    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 {
            0
        } else {
            self.0.get(r - 1).copied().unwrap_or(0)
        }
    }

    /// Height of column `c`.
    pub fn col_len(&self, c: usize) -> usize {
        self.0.iter().take_while(|&&p| p >= c).count()
    }

    pub fn contains(&self, u: Cell) -> bool {
        u.row >= 1 && u.col >= 1 && self.row_len(u.row) >= u.col
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
            .collect()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|c| self.col_len(c)).collect())
    }

    pub fn arm(&self, u: Cell) -> Result<usize> {
        self.check(u)?;
        Ok(self.row_len(u.row) - u.col)
    }

    pub fn leg(&self, u: Cell) -> Result<usize> {
        self.check(u)?;
        Ok(self.col_len(u.col) - u.row)
    }

    fn check(&self, u: Cell) -> Result<()> {
        if self.contains(u) {
            Ok(())
        } else {
            Err(Error::CellNotInShape {
                row: u.row,
                col: u.col,
            })
        }
    }

    /// `T_μ = ∏ t^{i-1} q^{j-1}` over cells `(i,j)`.
    pub fn t_mu(&self) -> Monomial {
        let (mut qe, mut te) = (0i32, 0i32);
        for u in self.cells() {
            qe += u.col as i32 - 1;
            te += u.row as i32 - 1;
        }
        Monomial::q_t(qe, te)
    }

    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(format!("{self} vs {other}")));
        }
        let (mut a, mut b) = (0, 0);
        for k in 0..self.len().max(other.len()) {
            a += self.0.get(k).copied().unwrap_or(0);
            b += other.0.get(k).copied().unwrap_or(0);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_diagram(&self) -> Diagram {
        Diagram::new(self.conjugate().0.iter().map(|&h| (1, h)).collect())
    }

    /// Cells whose removal leaves a partition, bottom row first.
    pub fn removable_corners(&self) -> Vec<Cell> {
        let mut out: Vec<Cell> = (0..self.len())
            .filter(|&i| i + 1 == self.len() || self.0[i] > self.0[i + 1])
            .map(|i| Cell::new(i + 1, self.0[i]))
            .collect();
        out.sort();
        out
    }

    pub fn remove_cell(&self, u: Cell) -> Result<Partition> {
        if !self.removable_corners().contains(&u) {
            return Err(Error::CellNotInShape {
                row: u.row,
                col: u.col,
            });
        }
        let mut parts = self.0.clone();
        parts[u.row - 1] -= 1;
        Partition::new(parts)
    }

    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn num_syt(&self) -> u128 {
        let mut num: u128 = (1..=self.size() as u128).product();
        let mut hooks: u128 = 1;
        for u in self.cells() {
            hooks *= (self.row_len(u.row) - u.col + self.col_len(u.col) - u.row + 1) as u128;
        }
        num /= hooks;
        num
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, optionally parenthesized: `3,3,1`.
    fn from_str(s: &str) -> Result<Partition> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        if body.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let p: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad part {tok:?} in {s:?}")))?;
            if p == 0 {
                return Err(Error::InvalidInput(format!("zero part in {s:?}")));
            }
            parts.push(p);
        }
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if inner.len() > outer.len() || inner.parts().iter().zip(outer.parts()).any(|(i, o)| i > o)
        {
            return Err(Error::InvalidInput(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(p: Partition) -> Self {
        SkewShape {
            outer: p,
            inner: Partition::empty(),
        }
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.outer
            .cells()
            .into_iter()
            .filter(|&u| !self.inner.contains(u))
            .collect()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// A diagram given column by column as row intervals `[lo, hi]`.
///
/// An interval with `hi = lo - 1` is an empty column; such columns arise when
/// a height-one column loses its only cell.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Diagram {
    cols: Vec<(usize, usize)>,
}

impl Diagram {
    pub fn new(cols: Vec<(usize, usize)>) -> Self {
        debug_assert!(cols.iter().all(|&(lo, hi)| lo >= 1 && hi + 1 >= lo));
        Diagram { cols }
    }

    pub fn columns(&self) -> &[(usize, usize)] {
        &self.cols
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    /// Number of cells in column `c` (1-based).
    pub fn height(&self, c: usize) -> usize {
        let (lo, hi) = self.cols[c - 1];
        hi + 1 - lo
    }

    pub fn size(&self) -> usize {
        (1..=self.cols.len()).map(|c| self.height(c)).sum()
    }

    pub fn contains(&self, u: Cell) -> bool {
        u.col >= 1
            && u.col <= self.cols.len()
            && (self.cols[u.col - 1].0..=self.cols[u.col - 1].1).contains(&u.row)
    }

    /// Bottom cells are the lowest cell of each column.
    pub fn is_bottom(&self, u: Cell) -> bool {
        self.contains(u) && self.cols[u.col - 1].0 == u.row
    }

    /// Cells sorted column by column, bottom to top.
    pub fn cells(&self) -> Vec<Cell> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, &(lo, hi))| (lo..=hi).map(move |r| Cell::new(r, c + 1)))
            .collect()
    }

    pub fn max_row(&self) -> usize {
        self.cols.iter().map(|&(_, hi)| hi).max().unwrap_or(0)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .cols
            .iter()
            .map(|(a, b)| format!("[{a},{b}]"))
            .collect();
        write!(f, "[{}]", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{mono, Var};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn arm_and_leg() {
        let mu = p("5,4,3,1");
        assert_eq!(mu.arm(Cell::new(2, 1)).unwrap(), 3);
        assert_eq!(mu.leg(Cell::new(2, 1)).unwrap(), 2);
        assert_eq!(p("1").arm(Cell::new(1, 1)).unwrap(), 0);
        assert_eq!(p("3,2").arm(Cell::new(1, 2)).unwrap(), 1);
        assert_eq!(p("3,2").leg(Cell::new(1, 2)).unwrap(), 1);
        assert!(matches!(
            p("3,2").arm(Cell::new(2, 3)),
            Err(Error::CellNotInShape { .. })
        ));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("5,4,3,1").conjugate(), p("4,3,3,2,1"));
        assert_eq!(p("1,1,1,1").conjugate(), p("4"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for n in 0..=10 {
            for mu in partitions_of(n) {
                assert_eq!(mu.conjugate().conjugate(), mu);
            }
        }
    }

    #[test]
    fn t_mu_values() {
        assert!(p("1").t_mu().is_one());
        assert_eq!(p("2,1").t_mu(), mono("q*t"));
        assert_eq!(p("2,1,1").t_mu().div(&p("2,2").t_mu()), mono("q^-1*t"));
        for n in 1..=8 {
            for mu in partitions_of(n) {
                let swapped = mu.t_mu().map_vars(|v| match v {
                    Var::Q => Var::T,
                    Var::T => Var::Q,
                    w => w,
                });
                assert_eq!(swapped, mu.conjugate().t_mu());
            }
        }
    }

    #[test]
    fn dominance() {
        assert!(p("2,2").dominance_leq(&p("3,1")).unwrap());
        assert!(p("3,1").dominance_leq(&p("3,1")).unwrap());
        assert!(!p("3,1").dominance_leq(&p("2,2")).unwrap());
        assert!(p("3").dominance_leq(&p("2,1,1")).is_err());
    }

    #[test]
    fn diagrams_and_corners() {
        assert_eq!(
            p("5,4,3,1").to_diagram().columns(),
            &[(1, 4), (1, 3), (1, 3), (1, 2), (1, 1)]
        );
        assert_eq!(p("1").to_diagram().columns(), &[(1, 1)]);
        assert_eq!(
            p("3,3,1").removable_corners(),
            vec![Cell::new(2, 3), Cell::new(3, 1)]
        );
    }

    #[test]
    fn corner_columns_are_strict() {
        // Removable corners sit at the top of columns that are strictly taller
        // than the next column.
        for n in 1..=8 {
            for nu in partitions_of(n) {
                let heights = nu.conjugate();
                for u in nu.removable_corners() {
                    let a = heights.parts()[u.col - 1];
                    let next = heights.parts().get(u.col).copied().unwrap_or(0);
                    assert!(a > next && a == u.row, "{nu} {u:?}");
                }
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions_of(3), vec![p("3"), p("2,1"), p("1,1,1")]);
        assert!(partitions_of(4).windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("0".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        assert_eq!(p("(3,1)"), p("3,1"));
    }

    #[test]
    fn syt_counts() {
        assert_eq!(p("2,1").num_syt(), 2);
        assert_eq!(p("3,2").num_syt(), 5);
        for n in 1..=7 {
            let total: u128 = partitions_of(n).iter().map(|l| l.num_syt().pow(2)).sum();
            assert_eq!(total, (1..=n as u128).product());
        }
    }
}

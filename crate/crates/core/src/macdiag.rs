//! Filled diagrams and the generalized modified Macdonald polynomial.
//!
//! A filled diagram carries a monomial on every cell that is not the bottom
//! cell of its column. For a word `w` read into the diagram in reading order
//! (rows top to bottom, left to right inside a row), `stat = inv · maj` where
//! `inv` counts attacking inversions and `maj` multiplies the fillings of the
//! cells holding a larger letter than the cell directly below.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::polyring::{q, Monomial, Var};
use crate::qsymsym::{QBasis, QSym};
use crate::shapes::{Cell, Diagram, Partition};
use crate::words::{ides_fast, par_fold_permutations};

pub const DEFAULT_MAX_CELLS: usize = 9;

/// Enumeration cap on `|D|`, from `MACINT_MAX_CELLS` when set.
pub fn max_cells() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("MACINT_MAX_CELLS")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_MAX_CELLS)
    })
}

/// Cells of `d` in reading order.
pub fn reading_order(d: &Diagram) -> Vec<Cell> {
    let mut out = Vec::with_capacity(d.size());
    for r in (1..=d.max_row()).rev() {
        for c in 1..=d.num_cols() {
            let u = Cell::new(r, c);
            if d.contains(u) {
                out.push(u);
            }
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FilledDiagram {
    pub shape: Diagram,
    pub filling: BTreeMap<Cell, Monomial>,
}

impl FilledDiagram {
    /// Checks that `filling` covers exactly the non-bottom cells.
    pub fn new(shape: Diagram, filling: BTreeMap<Cell, Monomial>) -> Result<Self> {
        for u in shape.cells() {
            if !shape.is_bottom(u) && !filling.contains_key(&u) {
                return Err(Error::InvalidInput(format!("cell {u:?} has no filling")));
            }
        }
        for u in filling.keys() {
            if !shape.contains(*u) || shape.is_bottom(*u) {
                return Err(Error::InvalidInput(format!(
                    "cell {u:?} cannot carry a filling"
                )));
            }
        }
        Ok(FilledDiagram { shape, filling })
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn f(&self, row: usize, col: usize) -> Option<&Monomial> {
        self.filling.get(&Cell::new(row, col))
    }

    pub fn f_req(&self, row: usize, col: usize) -> Result<Monomial> {
        self.f(row, col).cloned().ok_or_else(|| {
            Error::InternalInvariantViolation(format!("no filling at ({row},{col})"))
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let cols: Vec<[usize; 2]> = self.shape.columns().iter().map(|&(a, b)| [a, b]).collect();
        let filling: Vec<serde_json::Value> = self
            .filling
            .iter()
            .map(|(u, m)| serde_json::json!({"cell": [u.row, u.col], "mono": m.to_string()}))
            .collect();
        serde_json::json!({"columns": cols, "filling": filling})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |what: &str| Error::InvalidInput(format!("filled diagram JSON: {what}"));
        let cols = v["columns"]
            .as_array()
            .ok_or_else(|| bad("missing columns"))?;
        let mut intervals = Vec::new();
        for c in cols {
            let a = c[0].as_u64().ok_or_else(|| bad("column bound"))? as usize;
            let b = c[1].as_u64().ok_or_else(|| bad("column bound"))? as usize;
            if a == 0 || b + 1 < a {
                return Err(bad("column interval"));
            }
            intervals.push((a, b));
        }
        let mut filling = BTreeMap::new();
        if let Some(items) = v["filling"].as_array() {
            for it in items {
                let row = it["cell"][0].as_u64().ok_or_else(|| bad("cell"))? as usize;
                let col = it["cell"][1].as_u64().ok_or_else(|| bad("cell"))? as usize;
                let m: Monomial = it["mono"].as_str().ok_or_else(|| bad("mono"))?.parse()?;
                filling.insert(Cell::new(row, col), m);
            }
        }
        FilledDiagram::new(Diagram::new(intervals), filling)
    }
}

/// `(μ, f^st_μ)` with `f(u) = q^{-arm(u)} t^{leg(u)+1}`.
pub fn standard_filling(mu: &Partition) -> FilledDiagram {
    let shape = mu.to_diagram();
    let filling = mu
        .cells()
        .into_iter()
        .filter(|u| u.row > 1)
        .map(|u| {
            let arm = mu.arm(u).expect("cell of mu") as i32;
            let leg = mu.leg(u).expect("cell of mu") as i32;
            (u, Monomial::q_t(-arm, leg + 1))
        })
        .collect();
    FilledDiagram { shape, filling }
}

/// Precomputed positions for fast evaluation of `stat` on many words.
#[derive(Clone, Debug)]
pub struct StatPlan {
    pub n: usize,
    inv_pairs: Vec<(u8, u8)>,
    /// `(position, position below, filling index)`.
    desc: Vec<(u8, u8, u8)>,
    fillings: Vec<Monomial>,
}

impl StatPlan {
    pub fn new(df: &FilledDiagram) -> Self {
        let order = reading_order(&df.shape);
        let pos: HashMap<Cell, u8> = order
            .iter()
            .enumerate()
            .map(|(i, &u)| (u, i as u8))
            .collect();
        let mut inv_pairs = Vec::new();
        for (i, &u) in order.iter().enumerate() {
            for &v in &order[i + 1..] {
                let same_row = u.row == v.row;
                let attacking_below = u.row == v.row + 1 && u.col > v.col;
                if same_row || attacking_below {
                    inv_pairs.push((pos[&u], pos[&v]));
                }
            }
        }
        let mut desc = Vec::new();
        let mut fillings = Vec::new();
        for &u in &order {
            if let Some(m) = df.filling.get(&u) {
                let below = Cell::new(u.row - 1, u.col);
                desc.push((pos[&u], pos[&below], fillings.len() as u8));
                fillings.push(m.clone());
            }
        }
        StatPlan {
            n: order.len(),
            inv_pairs,
            desc,
            fillings,
        }
    }

    /// `(number of inversions, bitmask of descent cells)`.
    #[inline]
    pub fn key(&self, w: &[u8]) -> (u8, u32) {
        let mut inv = 0u8;
        for &(a, b) in &self.inv_pairs {
            inv += u8::from(w[a as usize] > w[b as usize]);
        }
        let mut mask = 0u32;
        for &(a, b, k) in &self.desc {
            if w[a as usize] > w[b as usize] {
                mask |= 1 << k;
            }
        }
        (inv, mask)
    }

    pub fn monomial(&self, inv: u8, mask: u32) -> Monomial {
        let mut m = Monomial::pow(Var::Q, inv as i32);
        for (k, f) in self.fillings.iter().enumerate() {
            if mask >> k & 1 == 1 {
                m = m.mul(f);
            }
        }
        m
    }

    pub fn stat(&self, w: &[u8]) -> Monomial {
        let (inv, mask) = self.key(w);
        self.monomial(inv, mask)
    }
}

pub fn inv_d(d: &Diagram, w: &[u8]) -> Result<Monomial> {
    check_len(d.size(), w)?;
    let df = FilledDiagram {
        shape: d.clone(),
        filling: BTreeMap::new(),
    };
    let plan = StatPlan::new(&df);
    Ok(Monomial::pow(Var::Q, plan.key(w).0 as i32))
}

pub fn maj_df(df: &FilledDiagram, w: &[u8]) -> Result<Monomial> {
    check_len(df.size(), w)?;
    let plan = StatPlan::new(df);
    Ok(plan.monomial(0, plan.key(w).1))
}

pub fn stat(df: &FilledDiagram, w: &[u8]) -> Result<Monomial> {
    check_len(df.size(), w)?;
    Ok(StatPlan::new(df).stat(w))
}

fn check_len(n: usize, w: &[u8]) -> Result<()> {
    if n == w.len() {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            expected: n,
            got: w.len(),
        })
    }
}

/// `Σ stat(w) F_{iDes(w)}` over the `w ∈ S_n` accepted by `keep`.
pub fn weighted_f_sum(
    df: &FilledDiagram,
    keep: impl Fn(&[u8]) -> bool + Sync + Send,
) -> Result<QSym> {
    let n = df.size();
    if n > max_cells() {
        return Err(Error::SizeCapExceeded {
            size: n,
            cap: max_cells(),
        });
    }
    let plan = StatPlan::new(df);
    let counts = par_fold_permutations(
        n,
        HashMap::<(u32, u8, u32), u64>::new,
        |acc, w| {
            if keep(w) {
                let (inv, mask) = plan.key(w);
                *acc.entry((ides_fast(w), inv, mask)).or_insert(0) += 1;
            }
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    );
    let mut by_subset: BTreeMap<u32, crate::polyring::LaurentPoly> = BTreeMap::new();
    for ((s, inv, mask), c) in counts {
        by_subset
            .entry(s)
            .or_default()
            .add_count(plan.monomial(inv, mask), c);
    }
    let mut out = QSym::zero(n, QBasis::F);
    for (s, c) in by_subset {
        out.add_term(s, &c);
    }
    Ok(out)
}

/// `H̃_{(D,f)} = Σ_{w ∈ S_n} stat(w) F_{iDes(w)}`.
pub fn hhl_polynomial(df: &FilledDiagram) -> Result<QSym> {
    weighted_f_sum(df, |_| true)
}

/// `H̃_μ` from the standard filling.
pub fn h_mu(mu: &Partition) -> Result<QSym> {
    hhl_polynomial(&standard_filling(mu))
}

/// Moves the leftmost column to the far right, one row higher.
pub fn cycling(df: &FilledDiagram) -> FilledDiagram {
    let cols = df.shape.columns();
    let l = cols.len();
    let mut new_cols: Vec<(usize, usize)> = cols[1..].to_vec();
    new_cols.push((cols[0].0 + 1, cols[0].1 + 1));
    let filling = df
        .filling
        .iter()
        .map(|(u, m)| {
            let v = if u.col == 1 {
                Cell::new(u.row + 1, l)
            } else {
                Cell::new(u.row, u.col - 1)
            };
            (v, m.clone())
        })
        .collect();
    FilledDiagram {
        shape: Diagram::new(new_cols),
        filling,
    }
}

/// Heights `(n, m)` of columns `j, j+1`, both required to start in row 1.
fn pair_heights(df: &FilledDiagram, j: usize) -> Result<(usize, usize)> {
    let cols = df.shape.columns();
    if j == 0 || j >= cols.len() {
        return Err(Error::ShapeMismatch(format!("no column pair at {j}")));
    }
    let ((lo1, _), (lo2, _)) = (cols[j - 1], cols[j]);
    let (n, m) = (df.shape.height(j), df.shape.height(j + 1));
    if lo1 != 1 || lo2 != 1 || n <= m {
        return Err(Error::ShapeMismatch(format!(
            "columns {j},{} are {:?},{:?}",
            j + 1,
            cols[j - 1],
            cols[j]
        )));
    }
    Ok((n, m))
}

/// Condition `f(i,1) = q^{-1} f(m+1,1) f(i,2)` for `1 < i ≤ m` on columns `j, j+1`.
pub fn in_v(df: &FilledDiagram, j: usize) -> Result<bool> {
    let (_, m) = pair_heights(df, j)?;
    if m < 2 {
        return Ok(true);
    }
    let top = df.f_req(m + 1, j)?.div(&q());
    for i in 2..=m {
        if df.f_req(i, j)? != top.mul(&df.f_req(i, j + 1)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The column exchange `S_j`.
pub fn column_exchange(df: &FilledDiagram, j: usize) -> Result<FilledDiagram> {
    let (n, m) = pair_heights(df, j)?;
    if !in_v(df, j)? {
        return Err(Error::NotInV(j, j + 1));
    }
    let mut cols = df.shape.columns().to_vec();
    cols[j - 1] = (1, m);
    cols[j] = (1, n);
    let mut filling: BTreeMap<Cell, Monomial> = df
        .filling
        .iter()
        .filter(|(u, _)| u.col != j && u.col != j + 1)
        .map(|(u, f)| (*u, f.clone()))
        .collect();
    for i in 2..=m {
        filling.insert(Cell::new(i, j), df.f_req(i, j + 1)?);
    }
    for i in 2..=n {
        let f = df.f_req(i, j)?;
        let f = if i == m + 1 { f.div(&q()) } else { f };
        filling.insert(Cell::new(i, j + 1), f);
    }
    Ok(FilledDiagram {
        shape: Diagram::new(cols),
        filling,
    })
}

/// Heights `(n, m)` for a pair `[1,n], [2,m]` at columns `j, j+1`.
fn bar_pair_heights(df: &FilledDiagram, j: usize) -> Result<(usize, usize)> {
    let cols = df.shape.columns();
    if j == 0 || j >= cols.len() {
        return Err(Error::ShapeMismatch(format!("no column pair at {j}")));
    }
    let ((lo1, n), (lo2, m)) = (cols[j - 1], cols[j]);
    if lo1 != 1 || lo2 != 2 || n <= m || m == 0 {
        return Err(Error::ShapeMismatch(format!(
            "columns {j},{} are {:?},{:?}",
            j + 1,
            cols[j - 1],
            cols[j]
        )));
    }
    Ok((n, m))
}

/// Conditions `q^{-1} f(m+1,1) = α` and `f(i,1) = α f(i,2)` for `2 < i ≤ m`.
pub fn in_bar_v(df: &FilledDiagram, j: usize, alpha: &Monomial) -> Result<bool> {
    let (_, m) = bar_pair_heights(df, j)?;
    if df.f_req(m + 1, j)?.div(&q()) != *alpha {
        return Ok(false);
    }
    for i in 3..=m {
        if df.f_req(i, j)? != alpha.mul(&df.f_req(i, j + 1)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The bottomless column exchange `S̄_j`; `α` is read off as `q^{-1} f(m+1, j)`.
pub fn bar_column_exchange(df: &FilledDiagram, j: usize) -> Result<FilledDiagram> {
    let (n, m) = bar_pair_heights(df, j)?;
    let alpha = df.f_req(m + 1, j)?.div(&q());
    if !in_bar_v(df, j, &alpha)? {
        return Err(Error::NotInBarV(j, j + 1));
    }
    let mut cols = df.shape.columns().to_vec();
    cols[j - 1] = (1, m);
    cols[j] = (2, n);
    let mut filling: BTreeMap<Cell, Monomial> = df
        .filling
        .iter()
        .filter(|(u, _)| u.col != j && u.col != j + 1)
        .map(|(u, f)| (*u, f.clone()))
        .collect();
    for i in (m + 2)..=n {
        filling.insert(Cell::new(i, j + 1), df.f_req(i, j)?);
    }
    if m + 1 > 2 {
        filling.insert(Cell::new(m + 1, j + 1), alpha.clone());
    }
    for i in 3..=m {
        let f = df.f_req(i, j)?;
        filling.insert(Cell::new(i, j + 1), f.clone());
        filling.insert(Cell::new(i, j), f.div(&alpha));
    }
    if m >= 2 {
        filling.insert(Cell::new(2, j), df.f_req(2, j)?.div(&alpha));
    }
    Ok(FilledDiagram {
        shape: Diagram::new(cols),
        filling,
    })
}

/// Which side of the deformation to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    /// `μ`: the top cell of column `j` is removed.
    Mu,
    /// `λ`: the top cell of column `i` is removed.
    Lambda,
}

/// Column heights of `ν` (its conjugate).
pub fn column_heights(nu: &Partition) -> Vec<usize> {
    nu.conjugate().parts().to_vec()
}

/// Columns whose top cell is removable.
pub fn corner_columns(nu: &Partition) -> Vec<usize> {
    let a = column_heights(nu);
    (1..=a.len())
        .filter(|&c| a[c - 1] > a.get(c).copied().unwrap_or(0))
        .collect()
}

/// All pairs `i < j` of corner columns.
pub fn corner_pairs(nu: &Partition) -> Vec<(usize, usize)> {
    let cs = corner_columns(nu);
    let mut out = Vec::new();
    for (k, &i) in cs.iter().enumerate() {
        for &j in &cs[k + 1..] {
            out.push((i, j));
        }
    }
    out
}

fn check_corners(nu: &Partition, i: usize, j: usize) -> Result<()> {
    let cs = corner_columns(nu);
    if i >= j || !cs.contains(&i) || !cs.contains(&j) {
        return Err(Error::InvalidCorners {
            nu: nu.to_string(),
            i,
            j,
        });
    }
    Ok(())
}

/// `(λ, μ)`: `ν` minus the top of column `i`, resp. column `j`.
pub fn pair_from_corners(nu: &Partition, i: usize, j: usize) -> Result<(Partition, Partition)> {
    check_corners(nu, i, j)?;
    let a = column_heights(nu);
    let lam = nu.remove_cell(Cell::new(a[i - 1], i))?;
    let mu = nu.remove_cell(Cell::new(a[j - 1], j))?;
    Ok((lam, mu))
}

/// Recovers `(ν, i, j)` from two partitions that differ by moving one cell.
pub fn corners_from_pair(lam: &Partition, mu: &Partition) -> Result<(Partition, usize, usize)> {
    if lam == mu || lam.size() != mu.size() {
        return Err(Error::InvalidPair(format!("{lam} and {mu}")));
    }
    let len = lam.len().max(mu.len());
    let parts: Vec<usize> = (1..=len)
        .map(|r| lam.row_len(r).max(mu.row_len(r)))
        .collect();
    let nu = Partition::new(parts)?;
    if nu.size() != lam.size() + 1 {
        return Err(Error::InvalidPair(format!(
            "{lam} and {mu} have no common cover"
        )));
    }
    let (lc, mc) = (nu.conjugate(), (lam.conjugate(), mu.conjugate()));
    let col_of = |p: &Partition| -> usize {
        (1..=lc.len())
            .find(|&c| p.col_len(c) != nu.col_len(c))
            .expect("differs")
    };
    let _ = mc;
    let (ci, cj) = (col_of(lam), col_of(mu));
    if ci < cj {
        Ok((nu, ci, cj))
    } else {
        Ok((nu, cj, ci))
    }
}

fn apply_exchange(df: FilledDiagram, j: usize) -> Result<FilledDiagram> {
    match in_v(&df, j) {
        Ok(true) => column_exchange(&df, j),
        _ => Err(Error::InternalInvariantViolation(format!(
            "S_{j} applied outside its domain on {}",
            df.shape
        ))),
    }
}

/// The deformation `𝔇_{λ,μ}` applied to the standard filling of `μ` or `λ`.
///
/// Returns the intermediate diagrams too: `steps[k]` is the diagram after the
/// `k`-th operator, and the last entry is the deformed diagram.
pub fn deform_steps(nu: &Partition, i: usize, j: usize, side: Side) -> Result<Vec<FilledDiagram>> {
    check_corners(nu, i, j)?;
    let (lam, mu) = pair_from_corners(nu, i, j)?;
    let l = column_heights(nu).len();
    // Keep a column of height 0 in place when a height-one column loses its cell.
    let base = |p: &Partition| -> FilledDiagram {
        let mut df = standard_filling(p);
        let mut cols = df.shape.columns().to_vec();
        cols.resize(l, (1, 0));
        df.shape = Diagram::new(cols);
        df
    };
    let (start, ops): (FilledDiagram, Vec<usize>) = match side {
        Side::Mu => (base(&mu), (1..j).rev().chain(i + 1..l).collect()),
        Side::Lambda => (base(&lam), (j..l).chain((1..i).rev()).collect()),
    };
    let mut steps = vec![start];
    for op in ops {
        let next = apply_exchange(steps.last().expect("nonempty").clone(), op)?;
        steps.push(next);
    }
    let last = cycling(steps.last().expect("nonempty"));
    steps.push(last);
    Ok(steps)
}

pub fn deform(nu: &Partition, i: usize, j: usize, side: Side) -> Result<FilledDiagram> {
    Ok(deform_steps(nu, i, j, side)?.pop().expect("nonempty"))
}

/// `α = T_μ / T_λ`.
pub fn alpha_of(lam: &Partition, mu: &Partition) -> Monomial {
    mu.t_mu().div(&lam.t_mu())
}

/// Checks `𝔇(λ) = S̄_{ℓ-1}(𝔇(μ))` with the last two columns of `𝔇(μ)` in
/// `V̄(a_i, a_j; T_μ/T_λ)`.
pub fn check_deformation_pair(nu: &Partition, i: usize, j: usize) -> Result<bool> {
    let (lam, mu) = pair_from_corners(nu, i, j)?;
    let dm = deform(nu, i, j, Side::Mu)?;
    let dl = deform(nu, i, j, Side::Lambda)?;
    let l = dm.shape.num_cols();
    Ok(in_bar_v(&dm, l - 1, &alpha_of(&lam, &mu))? && bar_column_exchange(&dm, l - 1)? == dl)
}

/// `I_{λ,μ} = (T_λ H̃_μ − T_μ H̃_λ) / (T_λ − T_μ)`.
pub fn intersection_divided_difference(lam: &Partition, mu: &Partition) -> Result<QSym> {
    corners_from_pair(lam, mu)?;
    let (tl, tm) = (lam.t_mu(), mu.t_mu());
    let num = h_mu(mu)?.scale_mono(&tl).sub(&h_mu(lam)?.scale_mono(&tm));
    let den = crate::polyring::LaurentPoly::from(tl) - crate::polyring::LaurentPoly::from(tm);
    num.divide_exact(&den)
}

/// A random filled diagram with between 2 and `max_cells` cells: up to four
/// columns starting in rows 1 to 3, fillings `q^a t^b α^c` with small exponents.
pub fn random_filled(rng: &mut impl rand::Rng, max_cells: usize) -> FilledDiagram {
    loop {
        let ncols = rng.gen_range(1..=4);
        let mut cols = Vec::new();
        for _ in 0..ncols {
            let lo = rng.gen_range(1..=3);
            let h = rng.gen_range(1..=3);
            cols.push((lo, lo + h - 1));
        }
        let d = Diagram::new(cols);
        if d.size() > max_cells || d.size() < 2 {
            continue;
        }
        let filling = d
            .cells()
            .into_iter()
            .filter(|&u| !d.is_bottom(u))
            .map(|u| {
                let m = Monomial::q_t(rng.gen_range(-2..3), rng.gen_range(0..3))
                    .mul(&crate::polyring::alpha().powi(rng.gen_range(0..2)));
                (u, m)
            })
            .collect();
        return FilledDiagram::new(d, filling).unwrap();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{mono, poly};
    use crate::qsymsym::{f_to_m, h_lambda_expansion, qsym_to_sym};
    use crate::shapes::partitions_of;
    use crate::words::{parse_word, permutations, vec_to_subset};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn fd(cols: Vec<(usize, usize)>, fill: &[((usize, usize), &str)]) -> FilledDiagram {
        let filling = fill
            .iter()
            .map(|&((r, c), m)| (Cell::new(r, c), mono(m)))
            .collect();
        FilledDiagram::new(Diagram::new(cols), filling).unwrap()
    }

    /// The six-cell diagram `[[1,3],[2,3],[2,2]]`.
    fn six_cell() -> FilledDiagram {
        fd(
            vec![(1, 3), (2, 3), (2, 2)],
            &[((2, 1), "q^3*t"), ((3, 1), "q^2"), ((3, 2), "t")],
        )
    }

    #[test]
    fn reading_orders() {
        let d = Diagram::new(vec![(1, 3), (2, 3), (2, 2)]);
        let order = reading_order(&d);
        let expect = [(3, 1), (3, 2), (2, 1), (2, 2), (2, 3), (1, 1)];
        assert_eq!(
            order,
            expect
                .iter()
                .map(|&(r, c)| Cell::new(r, c))
                .collect::<Vec<_>>()
        );
        let col = Diagram::new(vec![(1, 4)]);
        assert_eq!(reading_order(&col)[0], Cell::new(4, 1));
        let sq = reading_order(&p("2,2").to_diagram());
        assert_eq!(
            sq,
            vec![
                Cell::new(2, 1),
                Cell::new(2, 2),
                Cell::new(1, 1),
                Cell::new(1, 2)
            ]
        );
    }

    #[test]
    fn stat_worked_example() {
        let df = six_cell();
        let w = parse_word("254316").unwrap();
        assert_eq!(inv_d(&df.shape, &w).unwrap(), mono("q^4"));
        assert_eq!(maj_df(&df, &w).unwrap(), mono("t"));
        assert_eq!(stat(&df, &w).unwrap(), mono("q^4*t"));
        assert!(stat(&df, &parse_word("12").unwrap()).is_err());
    }

    /// Three cells: a single cell `[2,2]` and a column `[1,2]` filled with `α`.
    fn three_cell() -> FilledDiagram {
        fd(vec![(2, 2), (1, 2)], &[((2, 2), "alpha")])
    }

    #[test]
    fn three_cell_example() {
        let df = three_cell();
        let h = hhl_polynomial(&df).unwrap();
        let mut expect = QSym::zero(3, QBasis::F);
        expect.add_term(0, &poly("1"));
        expect.add_term(vec_to_subset(&[1]), &poly("q + alpha"));
        expect.add_term(vec_to_subset(&[2]), &poly("q + alpha"));
        expect.add_term(vec_to_subset(&[1, 2]), &poly("q*alpha"));
        assert_eq!(h, expect);
        let rows: Vec<(Monomial, Monomial)> = permutations(3)
            .iter()
            .map(|w| (inv_d(&df.shape, w).unwrap(), maj_df(&df, w).unwrap()))
            .collect();
        let expect_rows = [
            ("1", "1"),
            ("1", "alpha"),
            ("q", "1"),
            ("1", "alpha"),
            ("q", "1"),
            ("q", "alpha"),
        ];
        for (got, (i, m)) in rows.iter().zip(expect_rows) {
            assert_eq!(got, &(mono(i), mono(m)));
        }
    }

    #[test]
    fn small_hhl() {
        let one = fd(vec![(1, 1)], &[]);
        let h = hhl_polynomial(&one).unwrap();
        assert_eq!(h.to_string(), "F_{} : 1");
        assert_eq!(h_mu(&p("1,1")).unwrap().to_string(), "F_{} : 1, F_{1} : t");
    }

    #[test]
    fn standard_fillings() {
        let f = standard_filling(&p("3,3,2,1"));
        assert_eq!(f.f(4, 1), Some(&mono("t")));
        assert_eq!(f.f(3, 1), Some(&mono("q^-1*t^2")));
        assert_eq!(f.f(2, 1), Some(&mono("q^-2*t^3")));
        let f = standard_filling(&p("1,1"));
        assert_eq!(f.f(2, 1), Some(&mono("t")));
        let f = standard_filling(&p("2,2"));
        assert_eq!(f.f(2, 1), Some(&mono("q^-1*t")));
        assert_eq!(f.f(2, 2), Some(&mono("t")));
    }

    #[test]
    fn exchange_worked_example() {
        let f0 = standard_filling(&p("3,3,2,1"));
        let f1 = column_exchange(&f0, 1).unwrap();
        assert_eq!(f1.shape.columns(), &[(1, 3), (1, 4), (1, 2)]);
        let e1 = fd(
            vec![(1, 3), (1, 4), (1, 2)],
            &[
                ((3, 1), "t"),
                ((2, 1), "q^-1*t^2"),
                ((4, 2), "q^-1*t"),
                ((3, 2), "q^-1*t^2"),
                ((2, 2), "q^-2*t^3"),
                ((2, 3), "t"),
            ],
        );
        assert_eq!(f1, e1);
        let f2 = column_exchange(&f1, 2).unwrap();
        let e2 = fd(
            vec![(1, 3), (1, 2), (1, 4)],
            &[
                ((3, 1), "t"),
                ((2, 1), "q^-1*t^2"),
                ((2, 2), "t"),
                ((4, 3), "q^-1*t"),
                ((3, 3), "q^-2*t^2"),
                ((2, 3), "q^-2*t^3"),
            ],
        );
        assert_eq!(f2, e2);
        let h0 = hhl_polynomial(&f0).unwrap();
        assert_eq!(hhl_polynomial(&f1).unwrap(), h0);
        assert_eq!(hhl_polynomial(&f2).unwrap(), h0);
    }

    #[test]
    fn v_predicates() {
        // Generic two-column element of V(4,3).
        let generic = fd(
            vec![(1, 4), (1, 3)],
            &[
                ((4, 1), "q*alpha"),
                ((3, 1), "alpha*a_1"),
                ((2, 1), "alpha*a_2"),
                ((3, 2), "a_1"),
                ((2, 2), "a_2"),
            ],
        );
        assert!(in_v(&generic, 1).unwrap());
        let m1 = fd(vec![(1, 3), (1, 1)], &[((2, 1), "q^5"), ((3, 1), "t^2")]);
        assert!(in_v(&m1, 1).unwrap());
        let sq = standard_filling(&p("2,2"));
        assert!(matches!(in_v(&sq, 1), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn cycling_examples() {
        let col = fd(vec![(1, 3)], &[((2, 1), "q"), ((3, 1), "t")]);
        let c = cycling(&col);
        assert_eq!(c.shape.columns(), &[(2, 4)]);
        assert_eq!(c.f(3, 1), Some(&mono("q")));
        assert_eq!(c.f(4, 1), Some(&mono("t")));
        // Two columns a/b over c/d style: the left column moves right and up.
        let df = fd(
            vec![(1, 3), (1, 2)],
            &[((2, 1), "a_2"), ((3, 1), "a_1"), ((2, 2), "b_1")],
        );
        let c = cycling(&df);
        assert_eq!(c.shape.columns(), &[(1, 2), (2, 4)]);
        assert_eq!(c.f(2, 1), Some(&mono("b_1")));
        assert_eq!(c.f(3, 2), Some(&mono("a_2")));
        assert_eq!(c.f(4, 2), Some(&mono("a_1")));
        assert_eq!(hhl_polynomial(&c).unwrap(), hhl_polynomial(&df).unwrap());
    }

    #[test]
    fn cycling_invariance_random() {
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..40 {
            let df = random_filled(&mut rng, 7);
            assert_eq!(
                hhl_polynomial(&cycling(&df)).unwrap(),
                hhl_polynomial(&df).unwrap(),
                "{}",
                df.shape
            );
        }
    }

    #[test]
    fn deformation_worked_example() {
        // μ removes the top of column 4 of ν, λ the top of column 2.
        let nu = p("5,4,3,2");
        let (lam, mu) = pair_from_corners(&nu, 2, 4).unwrap();
        assert_eq!(
            mu.to_diagram().columns(),
            &[(1, 4), (1, 4), (1, 3), (1, 1), (1, 1)]
        );
        assert_eq!(
            lam.to_diagram().columns(),
            &[(1, 4), (1, 3), (1, 3), (1, 2), (1, 1)]
        );
        assert_eq!(alpha_of(&lam, &mu), mono("q^-2*t^2"));
        let dm = deform(&nu, 2, 4, Side::Mu).unwrap();
        let dl = deform(&nu, 2, 4, Side::Lambda).unwrap();
        assert_eq!(
            dm.shape.columns(),
            &[(1, 4), (1, 3), (1, 1), (1, 4), (2, 2)]
        );
        assert_eq!(
            dl.shape.columns(),
            &[(1, 4), (1, 3), (1, 1), (1, 2), (2, 4)]
        );
        for c in 1..=3 {
            for r in 2..=4 {
                assert_eq!(dm.f(r, c), dl.f(r, c));
            }
        }
        let expect_m = fd(
            vec![(1, 4), (1, 3), (1, 1), (1, 4), (2, 2)],
            &[
                ((4, 1), "q^-1*t"),
                ((3, 1), "q^-2*t^2"),
                ((2, 1), "q^-3*t^3"),
                ((3, 2), "t"),
                ((2, 2), "q^-1*t^2"),
                ((4, 4), "q^-1*t"),
                ((3, 4), "q^-1*t^2"),
                ((2, 4), "q^-3*t^3"),
            ],
        );
        assert_eq!(dm, expect_m);
        let expect_l = fd(
            vec![(1, 4), (1, 3), (1, 1), (1, 2), (2, 4)],
            &[
                ((4, 1), "q^-1*t"),
                ((3, 1), "q^-2*t^2"),
                ((2, 1), "q^-3*t^3"),
                ((3, 2), "t"),
                ((2, 2), "q^-1*t^2"),
                ((2, 4), "q^-1*t"),
                ((4, 5), "q^-1*t"),
                ((3, 5), "q^-2*t^2"),
            ],
        );
        assert_eq!(dl, expect_l);
        assert!(check_deformation_pair(&nu, 2, 4).unwrap());
    }

    #[test]
    fn deformation_sweep() {
        for n in 2..=7 {
            for nu in partitions_of(n) {
                for (i, j) in corner_pairs(&nu) {
                    assert!(check_deformation_pair(&nu, i, j).unwrap(), "{nu} {i} {j}");
                }
            }
        }
        assert!(matches!(
            deform(&p("2,2"), 1, 2, Side::Mu),
            Err(Error::InvalidCorners { .. })
        ));
    }

    #[test]
    fn intersections_small() {
        let i2 = intersection_divided_difference(&p("2"), &p("1,1")).unwrap();
        let m = qsym_to_sym(&f_to_m(&i2.at_ones())).unwrap();
        assert_eq!(m, h_lambda_expansion(&p("2")));
        assert!(matches!(
            intersection_divided_difference(&p("2,1"), &p("2,1")),
            Err(Error::InvalidPair(_))
        ));
        assert_eq!(
            corners_from_pair(&p("2,1,1"), &p("2,2")).unwrap(),
            (p("2,2,1"), 1, 2)
        );
    }

    #[test]
    fn hhl_at_one_is_h1n() {
        for n in 1..=6 {
            let h1n = h_lambda_expansion(&Partition::new(vec![1; n]).unwrap());
            for mu in partitions_of(n) {
                let h = h_mu(&mu).unwrap().at_ones();
                assert_eq!(qsym_to_sym(&f_to_m(&h)).unwrap(), h1n, "{mu}");
            }
        }
    }
}

//! LLT polynomials of tuples of skew shapes.
//!
//! A cell `(row, col)` of a component has content `row - col`, so a column
//! `[lo, hi]` of a filled diagram becomes a ribbon whose contents are its row
//! indices. The reading order visits contents from largest to smallest and,
//! within one content, components from first to last (then columns left to
//! right). With these conventions
//! `H̃_{(D,f)} = Σ_S f(S) LLT_{R_D(S)}` holds on the nose, which the tests
//! check against the HHL sum.
//!
//! Components are stored as explicit cell sets with `i32` coordinates so that
//! ribbons, skew shapes and attachments share one representation.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::macdiag::{
    alpha_of, column_heights, deform, h_mu, in_bar_v, max_cells, pair_from_corners, FilledDiagram,
    Side,
};
use crate::polyring::{q, Binding, LaurentPoly, Monomial, Var};
use crate::qsymsym::{f_to_m, qsym_mul_m, to_schur, QBasis, QSym, SBasis, Sym};
use crate::shapes::{Cell, Diagram, Partition, SkewShape};

/// The ribbon `R_I(S)`: contents `I = [lo, hi]` and descents `S ⊆ (lo, hi]`.
///
/// A content `c ∈ S` sits directly above the cell of content `c - 1`;
/// otherwise it sits directly to its left.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ribbon {
    pub lo: i32,
    pub hi: i32,
    pub descents: BTreeSet<i32>,
}

impl Ribbon {
    pub fn new(lo: i32, hi: i32, descents: impl IntoIterator<Item = i32>) -> Result<Self> {
        let descents: BTreeSet<i32> = descents.into_iter().collect();
        if hi < lo {
            return Err(Error::InvalidInput(format!(
                "empty ribbon interval [{lo},{hi}]"
            )));
        }
        if let Some(d) = descents.iter().find(|&&d| d <= lo || d > hi) {
            return Err(Error::InvalidInput(format!(
                "descent {d} outside ({lo},{hi}]"
            )));
        }
        Ok(Ribbon { lo, hi, descents })
    }

    /// The cell `C_a`.
    pub fn cell(a: i32) -> Self {
        Ribbon {
            lo: a,
            hi: a,
            descents: BTreeSet::new(),
        }
    }

    pub fn horizontal(lo: i32, hi: i32) -> Self {
        Ribbon {
            lo,
            hi,
            descents: BTreeSet::new(),
        }
    }

    pub fn vertical(lo: i32, hi: i32) -> Self {
        Ribbon {
            lo,
            hi,
            descents: (lo + 1..=hi).collect(),
        }
    }

    pub fn size(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    /// Cells in content order, lowest content first.
    pub fn cells(&self) -> Vec<(i32, i32)> {
        let mut cur = (self.lo, 0);
        let mut out = vec![cur];
        for c in self.lo + 1..=self.hi {
            cur = if self.descents.contains(&c) {
                (cur.0 + 1, cur.1)
            } else {
                (cur.0, cur.1 - 1)
            };
            out.push(cur);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({ "interval": [self.lo, self.hi], "descents": self.descents.iter().collect::<Vec<_>>() })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("bad ribbon {v}"));
        let iv = v
            .get("interval")
            .and_then(Value::as_array)
            .ok_or_else(bad)?;
        if iv.len() != 2 {
            return Err(bad());
        }
        let num = |x: &Value| x.as_i64().map(|k| k as i32).ok_or_else(bad);
        let (lo, hi) = (num(&iv[0])?, num(&iv[1])?);
        let ds = match v.get("descents") {
            None => Vec::new(),
            Some(d) => d
                .as_array()
                .ok_or_else(bad)?
                .iter()
                .map(num)
                .collect::<Result<Vec<_>>>()?,
        };
        Ribbon::new(lo, hi, ds)
    }
}

impl fmt::Display for Ribbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.descents.iter().map(i32::to_string).collect();
        write!(f, "R[{},{}]{{{}}}", self.lo, self.hi, ds.join(","))
    }
}

/// One component of an LLT tuple: a nonempty skew shape placed in the plane.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Component {
    cells: Vec<(i32, i32)>,
}

/// Order-convex in the product order, i.e. a skew shape.
fn is_skew(cells: &BTreeSet<(i32, i32)>) -> bool {
    for &a in cells {
        for &b in cells {
            if a.0 <= b.0 && a.1 <= b.1 {
                for r in a.0..=b.0 {
                    for c in a.1..=b.1 {
                        if !cells.contains(&(r, c)) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

impl Component {
    pub fn from_cells(cells: impl IntoIterator<Item = (i32, i32)>) -> Result<Self> {
        let set: BTreeSet<(i32, i32)> = cells.into_iter().collect();
        if set.is_empty() || !is_skew(&set) {
            return Err(Error::InvalidInput(format!(
                "{set:?} is not a nonempty skew shape"
            )));
        }
        Ok(Component::normalized(set.into_iter().collect()))
    }

    /// Slides along the diagonal so that the leftmost column is 0; contents are unchanged.
    fn normalized(mut cells: Vec<(i32, i32)>) -> Component {
        let d = cells.iter().map(|u| u.1).min().unwrap_or(0);
        for u in &mut cells {
            *u = (u.0 - d, u.1 - d);
        }
        cells.sort_unstable();
        Component { cells }
    }

    /// `outer/inner` with every content raised by `offset`.
    pub fn skew(shape: &SkewShape, offset: i32) -> Result<Self> {
        Component::from_cells(
            shape
                .cells()
                .into_iter()
                .map(|u| (u.row as i32 + offset, u.col as i32)),
        )
    }

    pub fn cells(&self) -> &[(i32, i32)] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn contents(&self) -> impl Iterator<Item = i32> + '_ {
        self.cells.iter().map(|&(r, c)| r - c)
    }

    /// Moves every cell `k` rows up, raising contents by `k`.
    pub fn shifted(&self, k: i32) -> Component {
        Component {
            cells: self.cells.iter().map(|&(r, c)| (r + k, c)).collect(),
        }
    }

    /// The component as a ribbon, if it is one.
    pub fn as_ribbon(&self) -> Option<Ribbon> {
        let lo = self.contents().min()?;
        let hi = self.contents().max()?;
        if (hi - lo + 1) as usize != self.size() {
            return None;
        }
        let mut by_content: BTreeMap<i32, (i32, i32)> = BTreeMap::new();
        for &u in &self.cells {
            by_content.insert(u.0 - u.1, u);
        }
        let mut descents = BTreeSet::new();
        for c in lo + 1..=hi {
            let (a, b) = (by_content[&(c - 1)], by_content[&c]);
            if b == (a.0 + 1, a.1) {
                descents.insert(c);
            } else if b != (a.0, a.1 - 1) {
                return None;
            }
        }
        Some(Ribbon { lo, hi, descents })
    }

    /// The shape as `(outer/inner, offset)` with contents `row - col + offset`.
    pub fn to_skew(&self) -> SkewShape {
        let r0 = self.cells.iter().map(|u| u.0).min().expect("nonempty") - 1;
        let c0 = self.cells.iter().map(|u| u.1).min().expect("nonempty") - 1;
        let rows = (self.cells.iter().map(|u| u.0).max().expect("nonempty") - r0) as usize;
        let mut outer = vec![0usize; rows];
        let mut inner = vec![usize::MAX; rows];
        for &(r, c) in &self.cells {
            let (r, c) = ((r - r0) as usize - 1, (c - c0) as usize);
            outer[r] = outer[r].max(c);
            inner[r] = inner[r].min(c - 1);
        }
        for r in (0..rows).rev() {
            if outer[r] == 0 {
                let v = if r + 1 < rows { outer[r + 1] } else { 0 };
                outer[r] = v;
                inner[r] = v;
            }
        }
        SkewShape {
            outer: Partition::new(outer).expect("skew rows decrease"),
            inner: Partition::new(inner).expect("skew rows decrease"),
        }
    }

    /// Content offset matching [`Component::to_skew`].
    pub fn skew_offset(&self) -> i32 {
        let r0 = self.cells.iter().map(|u| u.0).min().expect("nonempty") - 1;
        let c0 = self.cells.iter().map(|u| u.1).min().expect("nonempty") - 1;
        r0 - c0
    }

    /// Grows the component from its unique cell of content `from` through
    /// contents `from+1, …, to`, going up at the contents in `ups` and left
    /// otherwise.
    pub fn extend(&self, from: i32, to: i32, ups: &BTreeSet<i32>) -> Result<Component> {
        let mut at: Vec<&(i32, i32)> = self.cells.iter().filter(|u| u.0 - u.1 == from).collect();
        if at.len() != 1 {
            return Err(Error::InvalidInput(format!(
                "content {from} is not a single cell"
            )));
        }
        let mut cur = *at.pop().expect("one cell");
        let mut cells = self.cells.clone();
        for c in from + 1..=to {
            cur = if ups.contains(&c) {
                (cur.0 + 1, cur.1)
            } else {
                (cur.0, cur.1 - 1)
            };
            cells.push(cur);
        }
        Component::from_cells(cells)
    }

    pub fn to_json(&self) -> Value {
        match self.as_ribbon() {
            Some(r) => r.to_json(),
            None => {
                json!({ "cells": self.cells.iter().map(|&(r, c)| json!([r, c])).collect::<Vec<_>>() })
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        if v.get("interval").is_some() {
            return Ok(Component::from(&Ribbon::from_json(v)?));
        }
        let bad = || Error::Parse(format!("bad component {v}"));
        let cells = v.get("cells").and_then(Value::as_array).ok_or_else(bad)?;
        let cells = cells
            .iter()
            .map(|p| match p.as_array().map(|a| a.as_slice()) {
                Some([r, c]) => match (r.as_i64(), c.as_i64()) {
                    (Some(r), Some(c)) => Ok((r as i32, c as i32)),
                    _ => Err(bad()),
                },
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()?;
        Component::from_cells(cells)
    }
}

impl From<&Ribbon> for Component {
    fn from(r: &Ribbon) -> Self {
        Component::normalized(r.cells())
    }
}

impl From<Ribbon> for Component {
    fn from(r: Ribbon) -> Self {
        Component::from(&r)
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_ribbon() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "{}@{}", self.to_skew(), self.skew_offset()),
        }
    }
}

/// An ordered tuple of components.
pub type LltTuple = Vec<Component>;

pub fn ribbon_tuple(rs: &[Ribbon]) -> LltTuple {
    rs.iter().map(Component::from).collect()
}

pub fn tuple_to_json(t: &[Component]) -> Value {
    Value::Array(t.iter().map(Component::to_json).collect())
}

pub fn tuple_from_json(v: &Value) -> Result<LltTuple> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("expected a JSON array, got {v}")))?
        .iter()
        .map(Component::from_json)
        .collect()
}

pub fn format_tuple(t: &[Component]) -> String {
    let parts: Vec<String> = t.iter().map(Component::to_string).collect();
    format!("({})", parts.join(", "))
}

struct Plan {
    preds: Vec<u32>,
    inv_mask: Vec<u32>,
    rpos: Vec<u8>,
}

impl Plan {
    fn new(t: &[Component]) -> Plan {
        let flat: Vec<(usize, (i32, i32))> = t
            .iter()
            .enumerate()
            .flat_map(|(k, comp)| comp.cells.iter().map(move |&u| (k, u)))
            .collect();
        let n = flat.len();
        let content = |u: (i32, i32)| u.0 - u.1;
        let mut preds = vec![0u32; n];
        let mut inv_mask = vec![0u32; n];
        for (x, &(kx, ux)) in flat.iter().enumerate() {
            for (y, &(ky, uy)) in flat.iter().enumerate() {
                if kx == ky && (uy == (ux.0, ux.1 - 1) || uy == (ux.0 - 1, ux.1)) {
                    preds[x] |= 1 << y;
                }
                let (cx, cy) = (content(ux), content(uy));
                if (kx < ky && cx == cy) || (kx > ky && cx == cy + 1) {
                    inv_mask[x] |= 1 << y;
                }
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (-content(flat[x].1), flat[x].0, flat[x].1 .1));
        let mut rpos = vec![0u8; n];
        for (p, &x) in order.iter().enumerate() {
            rpos[x] = p as u8;
        }
        Plan {
            preds,
            inv_mask,
            rpos,
        }
    }

    fn walk(
        &self,
        assigned: u32,
        last: usize,
        inv: u32,
        ides: u32,
        k: usize,
        acc: &mut HashMap<(u32, u32), u64>,
    ) {
        let n = self.preds.len();
        if k == n {
            *acc.entry((inv, ides)).or_insert(0) += 1;
            return;
        }
        for x in 0..n {
            if assigned >> x & 1 == 1 || self.preds[x] & !assigned != 0 {
                continue;
            }
            let inv2 = inv + (self.inv_mask[x] & assigned).count_ones();
            let ides2 = if k > 0 && self.rpos[x] < self.rpos[last] {
                ides | 1 << (k - 1)
            } else {
                ides
            };
            self.walk(assigned | 1 << x, x, inv2, ides2, k + 1, acc);
        }
    }
}

/// `LLT_t[X;q] = Σ_T q^{inv(T)} F_{iDes(rw(T))}` over standard fillings of `t`.
pub fn llt_polynomial(t: &[Component]) -> Result<QSym> {
    let n: usize = t.iter().map(Component::size).sum();
    let cap = max_cells().max(8);
    if n > cap {
        return Err(Error::SizeCapExceeded { size: n, cap });
    }
    let plan = Plan::new(t);
    let mut acc = HashMap::new();
    plan.walk(0, 0, 0, 0, 0, &mut acc);
    let mut out = QSym::zero(n, QBasis::F);
    for ((inv, ides), c) in acc {
        let mut coeff = LaurentPoly::zero();
        coeff.add_count(Monomial::pow(Var::Q, inv as i32), c);
        out.add_term(ides, &coeff);
    }
    Ok(out)
}

/// `Σ c · LLT_t` over a list of terms.
pub fn llt_combination(terms: &[(LaurentPoly, LltTuple)]) -> Result<QSym> {
    let parts: Vec<QSym> = terms
        .par_iter()
        .map(|(c, t)| Ok(llt_polynomial(t)?.scale(c)))
        .collect::<Result<Vec<_>>>()?;
    let n = terms
        .first()
        .map_or(0, |(_, t)| t.iter().map(Component::size).sum());
    let mut out = QSym::zero(n, QBasis::F);
    for p in parts {
        if p.n != n {
            return Err(Error::SizeMismatch(format!(
                "LLT terms of sizes {n} and {}",
                p.n
            )));
        }
        out = out.add(&p);
    }
    Ok(out)
}

/// `R_D(S)`: one ribbon per nonempty column, with descents at the rows of `S`.
pub fn ribbons_from_diagram(d: &Diagram, s: &BTreeSet<Cell>) -> Result<Vec<Ribbon>> {
    for &u in s {
        if !d.contains(u) {
            return Err(Error::CellNotInShape {
                row: u.row,
                col: u.col,
            });
        }
        if d.is_bottom(u) {
            return Err(Error::BottomCellInS);
        }
    }
    let mut out = Vec::new();
    for (c, &(lo, hi)) in d.columns().iter().enumerate() {
        if hi < lo {
            continue;
        }
        let ds = s.iter().filter(|u| u.col == c + 1).map(|u| u.row as i32);
        out.push(Ribbon::new(lo as i32, hi as i32, ds)?);
    }
    Ok(out)
}

/// All `(f(S), R_D(S))` for `S` ranging over sets of non-bottom cells.
pub fn macdonald_to_llt(df: &FilledDiagram) -> Result<Vec<(Monomial, Vec<Ribbon>)>> {
    let free: Vec<(&Cell, &Monomial)> = df.filling.iter().collect();
    if free.len() >= 31 {
        return Err(Error::SizeCapExceeded {
            size: df.size(),
            cap: 31,
        });
    }
    (0u32..1 << free.len())
        .map(|mask| {
            let mut s = BTreeSet::new();
            let mut coeff = Monomial::one();
            for (k, (u, f)) in free.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    s.insert(**u);
                    coeff = coeff.mul(f);
                }
            }
            Ok((coeff, ribbons_from_diagram(&df.shape, &s)?))
        })
        .collect()
}

/// `Σ_S f(S) LLT_{R_D(S)}`.
pub fn llt_expansion_sum(df: &FilledDiagram) -> Result<QSym> {
    let terms: Vec<(LaurentPoly, LltTuple)> = macdonald_to_llt(df)?
        .into_iter()
        .map(|(m, rs)| (LaurentPoly::from(m), ribbon_tuple(&rs)))
        .collect();
    let mut out = llt_combination(&terms)?;
    out.n = df.size();
    Ok(out)
}

/// Outcome of a bounded LLT-equivalence test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Equal after every attachment within the budget; this is a necessary
    /// condition for equivalence, not a proof.
    PassBounded {
        budget: usize,
        attachments: usize,
    },
    Fail {
        attachment: LltTuple,
    },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::PassBounded { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::PassBounded {
                budget,
                attachments,
            } => {
                write!(
                    f,
                    "PASS(bounded: budget {budget}, {attachments} attachments)"
                )
            }
            Verdict::Fail { attachment } => {
                write!(f, "FAIL with attachment {}", format_tuple(attachment))
            }
        }
    }
}

/// Skew shapes of at most `k` cells in a `k × k` box, normalized to touch row 0 and column 0.
fn small_shapes(k: usize) -> Vec<Component> {
    let b = k.max(1) as i32;
    let boxc: Vec<(i32, i32)> = (0..b).flat_map(|r| (0..b).map(move |c| (r, c))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    fn rec(
        boxc: &[(i32, i32)],
        start: usize,
        k: usize,
        pick: &mut Vec<(i32, i32)>,
        seen: &mut BTreeSet<Vec<(i32, i32)>>,
        out: &mut Vec<Component>,
    ) {
        if !pick.is_empty() {
            let (r0, c0) = (
                pick.iter().map(|u| u.0).min().unwrap(),
                pick.iter().map(|u| u.1).min().unwrap(),
            );
            let mut norm: Vec<(i32, i32)> = pick.iter().map(|&(r, c)| (r - r0, c - c0)).collect();
            norm.sort_unstable();
            if seen.insert(norm.clone()) {
                if let Ok(comp) = Component::from_cells(norm) {
                    out.push(comp);
                }
            }
        }
        if pick.len() == k {
            return;
        }
        for i in start..boxc.len() {
            pick.push(boxc[i]);
            rec(boxc, i + 1, k, pick, seen, out);
            pick.pop();
        }
    }
    rec(&boxc, 0, k, &mut pick, &mut seen, &mut out);
    out
}

/// Every tuple of components with at most `budget` cells in total and all
/// contents inside `[lo, hi]`, including the empty tuple.
pub fn attachments(budget: usize, lo: i32, hi: i32) -> Vec<LltTuple> {
    let mut placed: Vec<Component> = Vec::new();
    for s in small_shapes(budget) {
        let (cmin, cmax) = (s.contents().min().unwrap(), s.contents().max().unwrap());
        for k in lo - cmin..=hi - cmax {
            placed.push(s.shifted(k));
        }
    }
    let mut out: Vec<LltTuple> = vec![Vec::new()];
    let mut frontier: Vec<(LltTuple, usize)> = vec![(Vec::new(), 0)];
    while let Some((t, used)) = frontier.pop() {
        for c in &placed {
            if used + c.size() <= budget {
                let mut t2 = t.clone();
                t2.push(c.clone());
                out.push(t2.clone());
                frontier.push((t2, used + c.size()));
            }
        }
    }
    out
}

fn with_attachment(
    terms: &[(LaurentPoly, LltTuple)],
    a: &[Component],
) -> Vec<(LaurentPoly, LltTuple)> {
    terms
        .iter()
        .map(|(c, t)| (c.clone(), t.iter().chain(a).cloned().collect()))
        .collect()
}

/// Compares `Σ lhs` and `Σ rhs` after appending every attachment with at most
/// `budget` cells whose contents lie within one of the contents used.
pub fn equivalence_test(
    lhs: &[(LaurentPoly, LltTuple)],
    rhs: &[(LaurentPoly, LltTuple)],
    budget: usize,
) -> Result<Verdict> {
    let all = lhs
        .iter()
        .chain(rhs)
        .flat_map(|(_, t)| t.iter().flat_map(|c| c.contents().collect::<Vec<_>>()));
    let (lo, hi) = all.fold((i32::MAX, i32::MIN), |(a, b), c| (a.min(c), b.max(c)));
    let (lo, hi) = if lo > hi { (0, 0) } else { (lo - 1, hi + 1) };
    let atts = attachments(budget, lo, hi);
    let results: Vec<Option<LltTuple>> = atts
        .par_iter()
        .map(|a| {
            let l = llt_combination(&with_attachment(lhs, a))?;
            let r = llt_combination(&with_attachment(rhs, a))?;
            Ok(if l == r { None } else { Some(a.clone()) })
        })
        .collect::<Result<Vec<_>>>()?;
    match results.into_iter().flatten().next() {
        Some(attachment) => Ok(Verdict::Fail { attachment }),
        None => Ok(Verdict::PassBounded {
            budget,
            attachments: atts.len(),
        }),
    }
}

/// A named equivalence `lhs ≡ rhs`.
#[derive(Clone, Debug)]
pub struct EquivalenceRule {
    pub name: &'static str,
    pub lhs: Vec<(LaurentPoly, LltTuple)>,
    pub rhs: Vec<(LaurentPoly, LltTuple)>,
}

fn term(c: Monomial, t: Vec<Component>) -> (LaurentPoly, LltTuple) {
    (LaurentPoly::from(c), t)
}

/// The 2×2 square `(2,2,2)/(2)` with contents `1, 2, 2, 3`.
pub fn square() -> Component {
    Component::from_cells([(2, 1), (2, 0), (3, 1), (3, 0)]).expect("square")
}

/// `(C_1, C_2) ≡ q(V) + (H)` for the vertical and horizontal strips of contents `1, 2`.
pub fn two_cell_rule() -> EquivalenceRule {
    let c = |a| Component::from(Ribbon::cell(a));
    EquivalenceRule {
        name: "(C1,C2) = q(V) + (H)",
        lhs: vec![term(Monomial::one(), vec![c(1), c(2)])],
        rhs: vec![
            term(q(), vec![Ribbon::vertical(1, 2).into()]),
            term(Monomial::one(), vec![Ribbon::horizontal(1, 2).into()]),
        ],
    }
}

/// The four rewrite rules for three consecutive contents.
pub fn three_content_rules() -> Vec<EquivalenceRule> {
    let r = |ds: &[i32]| -> Component {
        Ribbon::new(1, 3, ds.iter().copied())
            .expect("ribbon")
            .into()
    };
    let c2 = || Component::from(Ribbon::cell(2));
    let (v1, v2) = (
        || Component::from(Ribbon::vertical(1, 2)),
        || Component::from(Ribbon::vertical(2, 3)),
    );
    let (h1, h2) = (
        || Component::from(Ribbon::horizontal(1, 2)),
        || Component::from(Ribbon::horizontal(2, 3)),
    );
    let one = Monomial::one;
    vec![
        EquivalenceRule {
            name: "(R{3},C2) = q(S) + q^-1(H1,V2)",
            lhs: vec![term(one(), vec![r(&[3]), c2()])],
            rhs: vec![term(q(), vec![square()]), term(q().inv(), vec![h1(), v2()])],
        },
        EquivalenceRule {
            name: "(R{2},C2) = q(S) + (V1,H2)",
            lhs: vec![term(one(), vec![r(&[2]), c2()])],
            rhs: vec![term(q(), vec![square()]), term(one(), vec![v1(), h2()])],
        },
        EquivalenceRule {
            name: "(H1,H2) = q^2(S) + (R{},C2)",
            lhs: vec![term(one(), vec![h1(), h2()])],
            rhs: vec![
                term(q().powi(2), vec![square()]),
                term(one(), vec![r(&[]), c2()]),
            ],
        },
        EquivalenceRule {
            name: "(V1,V2) = q(S) + q(R{2,3},C2)",
            lhs: vec![term(one(), vec![v1(), v2()])],
            rhs: vec![term(q(), vec![square()]), term(q(), vec![r(&[2, 3]), c2()])],
        },
    ]
}

/// A positive LLT expansion of `I_{λ,μ}` where `(λ, μ)` come from removing
/// the tops of columns `i < j` of `ν`, valid when column `j` has height at
/// most 2.
///
/// Every term is `coefficient · LLT_tuple` with a Laurent monomial
/// coefficient, and the terms sum to `I_{λ,μ}` exactly.
pub fn positive_llt_decomposition(
    nu: &Partition,
    i: usize,
    j: usize,
) -> Result<Vec<(Monomial, LltTuple)>> {
    let (lam, mu) = pair_from_corners(nu, i, j)?;
    let a = column_heights(nu);
    let (n, m) = (a[i - 1] as i32, a[j - 1] as i32);
    if m > 2 {
        return Err(Error::RowConditionViolated {
            lam: lam.to_string(),
            mu: mu.to_string(),
        });
    }
    let df = deform(nu, i, j, Side::Mu)?;
    let l = df.shape.num_cols();
    let alpha = alpha_of(&lam, &mu);
    if !in_bar_v(&df, l - 1, &alpha)? {
        return Err(Error::InternalInvariantViolation(format!(
            "deformed diagram of {nu} is not bottomless"
        )));
    }
    let f = |r: i32| df.f_req(r as usize, l - 1);
    let local: Vec<(Monomial, LltTuple)> = if m == 1 {
        vec![(Monomial::one(), vec![Ribbon::horizontal(1, 2).into()])]
    } else {
        let beta = f(2)?.div(&alpha);
        vec![
            (
                Monomial::one(),
                vec![Ribbon::horizontal(1, 3).into(), Ribbon::cell(2).into()],
            ),
            (
                alpha.clone(),
                vec![
                    Ribbon::horizontal(1, 2).into(),
                    Ribbon::vertical(2, 3).into(),
                ],
            ),
            (q().mul(&alpha).mul(&beta), vec![square()]),
        ]
    };

    let prefix_diagram = Diagram::new(df.shape.columns()[..l - 2].to_vec());
    let prefix_cells: Vec<(&Cell, &Monomial)> =
        df.filling.iter().filter(|(u, _)| u.col < l - 1).collect();
    let tail: Vec<i32> = (m + 2..=n).collect();

    let mut out = Vec::new();
    for smask in 0u32..1 << prefix_cells.len() {
        let mut s = BTreeSet::new();
        let mut fs = Monomial::one();
        for (k, (u, w)) in prefix_cells.iter().enumerate() {
            if smask >> k & 1 == 1 {
                s.insert(**u);
                fs = fs.mul(w);
            }
        }
        let prefix = ribbon_tuple(&ribbons_from_diagram(&prefix_diagram, &s)?);
        for tmask in 0u32..1 << tail.len() {
            let mut ups = BTreeSet::new();
            let mut ft = Monomial::one();
            for (k, &r) in tail.iter().enumerate() {
                if tmask >> k & 1 == 1 {
                    ups.insert(r);
                    ft = ft.mul(&f(r)?);
                }
            }
            for (c, loc) in &local {
                let mut t = prefix.clone();
                for comp in loc {
                    if comp.contents().any(|x| x == m + 1) {
                        t.push(comp.extend(m + 1, n, &ups)?);
                    } else {
                        t.push(comp.clone());
                    }
                }
                out.push((fs.mul(&ft).mul(c), t));
            }
        }
    }
    Ok(out)
}

/// Sum of a decomposition.
pub fn decomposition_sum(terms: &[(Monomial, LltTuple)]) -> Result<QSym> {
    let terms: Vec<(LaurentPoly, LltTuple)> = terms
        .iter()
        .map(|(m, t)| (LaurentPoly::from(m.clone()), t.clone()))
        .collect();
    llt_combination(&terms)
}

/// The coefficient of `t^k` in every Schur coefficient.
pub fn t_coefficient(s: &Sym, k: i32) -> Sym {
    let mut out = Sym::zero(s.n, s.basis);
    for (lam, c) in &s.coeffs {
        let mut slice = LaurentPoly::zero();
        for (m, v) in c.terms() {
            if m.exp(Var::T) == k {
                let rest = Monomial::from_pairs(
                    m.exponents().iter().copied().filter(|&(x, _)| x != Var::T),
                );
                slice.add_term(rest, v.clone());
            }
        }
        out.add_term(lam, &slice);
    }
    out
}

/// `s_λ` as a Schur-basis element with coefficient `c`.
pub fn schur_term(lam: &Partition, c: &LaurentPoly) -> Sym {
    let mut s = Sym::zero(lam.size(), SBasis::S);
    s.add_term(lam, c);
    s
}

/// Schur expansion of `I_{λ,μ}` with `v` set to 1.
pub fn intersection_at_one(lam: &Partition, mu: &Partition, v: Var) -> Result<Sym> {
    let i = crate::macdiag::intersection_divided_difference(lam, mu)?;
    to_schur(&i.specialize(&[(v, Binding::Int(1))])?)
}

/// Checks `H̃_ν[X;q,1] = Π_i H̃_{(ν_i)}[X;q,1]`.
pub fn t_one_factorization_holds(nu: &Partition) -> Result<bool> {
    let t1 = [(Var::T, Binding::Int(1))];
    let whole = f_to_m(&h_mu(nu)?.specialize(&t1)?);
    let mut prod = QSym::zero(0, QBasis::M);
    prod.add_term(0, &LaurentPoly::one());
    for &r in nu.parts() {
        let row = f_to_m(&h_mu(&Partition::new(vec![r])?)?.specialize(&t1)?);
        prod = qsym_mul_m(&prod, &row);
    }
    Ok(whole == prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macdiag::{
        corner_pairs, deform_steps, hhl_polynomial, intersection_divided_difference,
    };
    use crate::polyring::poly;
    use crate::qsymsym::{schur_positive, skew_schur_m};
    use crate::shapes::partitions_of;
    use rand::SeedableRng;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn f_of(n: usize, terms: &[(&[usize], &str)]) -> QSym {
        let mut out = QSym::zero(n, QBasis::F);
        for (s, c) in terms {
            out.add_term(crate::words::vec_to_subset(s), &poly(c));
        }
        out
    }

    #[test]
    fn small_examples() {
        let c = |a| Component::from(Ribbon::cell(a));
        assert_eq!(llt_polynomial(&[c(4)]).unwrap(), f_of(1, &[(&[], "1")]));
        assert_eq!(
            llt_polynomial(&[c(1), c(2)]).unwrap(),
            f_of(2, &[(&[], "1"), (&[1], "q")])
        );
        assert_eq!(
            llt_polynomial(&[Ribbon::horizontal(1, 2).into()]).unwrap(),
            f_of(2, &[(&[], "1")])
        );
        assert_eq!(
            llt_polynomial(&[Ribbon::vertical(1, 2).into()]).unwrap(),
            f_of(2, &[(&[1], "1")])
        );
    }

    #[test]
    fn ribbon_round_trips() {
        let r = Ribbon::new(1, 4, [2, 4]).unwrap();
        let comp = Component::from(&r);
        assert_eq!(comp.as_ribbon(), Some(r.clone()));
        assert_eq!(Ribbon::from_json(&r.to_json()).unwrap(), r);
        let t = vec![comp, square()];
        assert_eq!(tuple_from_json(&tuple_to_json(&t)).unwrap(), t);
        assert!(Ribbon::new(1, 3, [1]).is_err());
        let sq = square();
        assert_eq!(sq.to_skew().to_string(), "(2,2)");
        assert_eq!(
            Component::skew(&sq.to_skew(), sq.skew_offset()).unwrap(),
            sq
        );
    }

    #[test]
    fn diagram_to_ribbons() {
        let d = Diagram::new(vec![(1, 3), (2, 2)]);
        let s: BTreeSet<Cell> = [Cell::new(3, 1)].into();
        let rs = ribbons_from_diagram(&d, &s).unwrap();
        assert_eq!(rs, vec![Ribbon::new(1, 3, [3]).unwrap(), Ribbon::cell(2)]);
        let bad: BTreeSet<Cell> = [Cell::new(1, 1)].into();
        assert_eq!(ribbons_from_diagram(&d, &bad), Err(Error::BottomCellInS));
    }

    #[test]
    fn one_column_of_two() {
        let df = crate::macdiag::standard_filling(&p("1,1"));
        let terms = macdonald_to_llt(&df).unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(
            llt_expansion_sum(&df).unwrap(),
            f_of(2, &[(&[], "1"), (&[1], "t")])
        );
    }

    #[test]
    fn expansion_matches_hhl_on_random_diagrams() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..30 {
            let df = crate::macdiag::random_filled(&mut rng, 6);
            assert_eq!(
                llt_expansion_sum(&df).unwrap(),
                hhl_polynomial(&df).unwrap(),
                "{}",
                df.shape
            );
        }
    }

    #[test]
    fn expansion_matches_hhl_on_deformations() {
        for n in 2..=5 {
            for nu in partitions_of(n + 1) {
                for (i, j) in corner_pairs(&nu) {
                    for side in [Side::Mu, Side::Lambda] {
                        for df in deform_steps(&nu, i, j, side).unwrap() {
                            assert_eq!(
                                llt_expansion_sum(&df).unwrap(),
                                hhl_polynomial(&df).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn q_one_is_a_product_of_skew_schur_functions() {
        let shapes = [
            Component::from(Ribbon::new(1, 3, [2]).unwrap()),
            square(),
            Component::from(Ribbon::cell(2)),
            Component::from(Ribbon::vertical(0, 1)),
        ];
        for a in &shapes {
            for b in &shapes {
                if a.size() + b.size() > 5 {
                    continue;
                }
                let at1 = llt_polynomial(&[a.clone(), b.clone()])
                    .unwrap()
                    .specialize(&[(Var::Q, Binding::Int(1))])
                    .unwrap();
                let sa = skew_schur_m(&a.to_skew().outer, &a.to_skew().inner);
                let sb = skew_schur_m(&b.to_skew().outer, &b.to_skew().inner);
                let prod = qsym_mul_m(
                    &crate::qsymsym::sym_to_qsym(&sa),
                    &crate::qsymsym::sym_to_qsym(&sb),
                );
                assert_eq!(f_to_m(&at1), prod);
            }
        }
    }

    #[test]
    fn small_llts_are_schur_positive() {
        for t in attachments(3, 0, 2).into_iter().filter(|t| !t.is_empty()) {
            let mut t = t;
            t.push(square());
            let s = to_schur(&llt_polynomial(&t).unwrap()).unwrap();
            assert!(schur_positive(&s).0, "{}", format_tuple(&t));
        }
    }

    #[test]
    fn two_cell_rule_passes() {
        let r = two_cell_rule();
        let v = equivalence_test(&r.lhs, &r.rhs, 3).unwrap();
        assert!(v.passed(), "{v}");
    }

    #[test]
    fn three_content_rules_pass() {
        for r in three_content_rules() {
            let v = equivalence_test(&r.lhs, &r.rhs, 3).unwrap();
            assert!(v.passed(), "{}: {v}", r.name);
        }
    }

    #[test]
    fn unequal_pair_fails() {
        let c = vec![Component::from(Ribbon::cell(1))];
        let v = equivalence_test(&[(poly("1"), c.clone())], &[(poly("2"), c)], 1).unwrap();
        assert!(matches!(v, Verdict::Fail { .. }));
    }

    #[test]
    fn decomposition_sums_to_intersection() {
        for n in 2..=6 {
            for nu in partitions_of(n + 1) {
                for (i, j) in corner_pairs(&nu) {
                    let (lam, mu) = pair_from_corners(&nu, i, j).unwrap();
                    match positive_llt_decomposition(&nu, i, j) {
                        Ok(terms) => {
                            let sum = decomposition_sum(&terms).unwrap();
                            assert_eq!(
                                sum,
                                intersection_divided_difference(&lam, &mu).unwrap(),
                                "{nu} {i} {j}"
                            );
                        }
                        Err(Error::RowConditionViolated { .. }) => {
                            assert!(column_heights(&nu)[j - 1] > 2)
                        }
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn out_of_range_pair_is_rejected_with_its_t5_slice() {
        let (lam, mu) = (p("2,2,1,1"), p("2,2,2"));
        let (nu, i, j) = crate::macdiag::corners_from_pair(&lam, &mu).unwrap();
        assert!(matches!(
            positive_llt_decomposition(&nu, i, j),
            Err(Error::RowConditionViolated { .. })
        ));
        let s = to_schur(&intersection_divided_difference(&lam, &mu).unwrap()).unwrap();
        let want = schur_term(&p("3,2,1"), &poly("1")).add(&schur_term(&p("2,2,1,1"), &poly("q")));
        assert_eq!(t_coefficient(&s, 5), want);
    }

    #[test]
    fn t_one_factorization() {
        for n in 1..=5 {
            for nu in partitions_of(n) {
                assert!(t_one_factorization_holds(&nu).unwrap(), "{nu}");
            }
        }
    }

    #[test]
    fn specializations_are_schur_positive() {
        for n in 2..=5 {
            for nu in partitions_of(n + 1) {
                for (i, j) in corner_pairs(&nu) {
                    let (lam, mu) = pair_from_corners(&nu, i, j).unwrap();
                    for v in [Var::T, Var::Q] {
                        assert!(schur_positive(&intersection_at_one(&lam, &mu, v).unwrap()).0);
                    }
                }
            }
        }
    }
}

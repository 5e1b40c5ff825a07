//! Combinatorial `(q,t)`-Kostka polynomials for hooks and two-column shapes.
//!
//! Hooks `μ = (n-k, 1^k)` are handled by Assaf's maps `A_k` applied to
//! super-standard words, by a closed descent formula, and by the HHL
//! pipeline, so the three can be compared. Two-column shapes
//! `μ = (2^m, 1^{n-2m})` are handled by weighted paths in the strong cover
//! graph of `p^{-1}(2^n)` (3-cores), with a creation-operator recursion as an
//! independent check. Only 2-Schur coefficients are computed; the 2-Schur
//! functions themselves never are.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::macdiag::h_mu;
use crate::polyring::{LaurentPoly, Monomial, Var};
use crate::qsymsym::{to_schur, SBasis, Sym};
use crate::shapes::{partitions_of, Partition};
use crate::words::superstandard_words;

/// `(n-k, 1^k)`.
pub fn hook(n: usize, k: usize) -> Result<Partition> {
    if n == 0 || k >= n {
        return Err(Error::BadParams(format!(
            "no hook (n-k,1^k) with n={n}, k={k}"
        )));
    }
    let mut parts = vec![n - k];
    parts.extend(std::iter::repeat_n(1, k));
    Partition::new(parts)
}

/// `k` for the hook `(n-k, 1^k)`.
pub fn hook_leg(mu: &Partition) -> Result<usize> {
    if mu.is_empty() || !mu.is_hook() {
        return Err(Error::NotAHook(mu.to_string()));
    }
    Ok(mu.len() - 1)
}

/// The blocks of `Γ_x(u)`: a new block starts at every letter on the same
/// side of `x` as `u_1`.
pub fn gamma_blocks(x: u8, u: &[u8]) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = Vec::new();
    let Some(&first) = u.first() else { return out };
    let low = first < x;
    for &y in u {
        if (y < x) == low || out.is_empty() {
            out.push(vec![y]);
        } else {
            out.last_mut().expect("nonempty").push(y);
        }
    }
    out
}

/// `γ_x`: each block of `Γ_x` has its first letter moved to its end.
pub fn gamma(x: u8, u: &[u8]) -> Vec<u8> {
    gamma_blocks(x, u)
        .into_iter()
        .flat_map(|mut b| {
            b.rotate_left(1);
            b
        })
        .collect()
}

/// `A_k(w) = w_1⋯w_k γ_{w_k}(w_{k+1}⋯w_n)`.
pub fn assaf_a(k: usize, w: &[u8]) -> Result<Vec<u8>> {
    if k == 0 || k > w.len() {
        return Err(Error::BadParams(format!(
            "A_{k} on a word of length {}",
            w.len()
        )));
    }
    let mut out = w[..k].to_vec();
    out.extend(gamma(w[k - 1], &w[k..]));
    Ok(out)
}

/// `A_μ = A_{k+1} ⋯ A_{n-1}` for `μ = (n-k, 1^k)`; `A_{n-1}` acts first.
pub fn assaf_a_mu(mu: &Partition, w: &[u8]) -> Result<Vec<u8>> {
    let k = hook_leg(mu)?;
    let n = mu.size();
    if w.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: w.len(),
        });
    }
    let mut cur = w.to_vec();
    for j in (k + 1..n).rev() {
        cur = assaf_a(j, &cur)?;
    }
    Ok(cur)
}

fn descents(w: &[u8]) -> impl Iterator<Item = usize> + '_ {
    (1..w.len()).filter(|&i| w[i - 1] > w[i])
}

/// Ordinary major index.
pub fn maj(w: &[u8]) -> usize {
    descents(w).sum()
}

/// Ordinary inversion number.
pub fn inv(w: &[u8]) -> usize {
    (0..w.len())
        .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
        .sum()
}

/// `stat` on the standard filling of `(n-k, 1^k)`: `q^{inv(w_{k+1..n})} t^{maj(w_{1..k+1})}`.
pub fn hook_stat(k: usize, w: &[u8]) -> Monomial {
    Monomial::q_t(inv(&w[k..]) as i32, maj(&w[..=k]) as i32)
}

fn schur_from_words(n: usize, coeff: impl Fn(&[u8]) -> Result<Monomial>) -> Result<Sym> {
    let mut out = Sym::zero(n, SBasis::S);
    for lam in partitions_of(n) {
        let mut c = LaurentPoly::zero();
        for w in superstandard_words(&lam) {
            c.add_term(coeff(&w)?, BigInt::from(1));
        }
        out.add_term(&lam, &c);
    }
    Ok(out)
}

/// Schur expansion of `H̃_μ` for a hook through Assaf's maps.
pub fn hook_kostka_assaf(mu: &Partition) -> Result<Sym> {
    let k = hook_leg(mu)?;
    schur_from_words(mu.size(), |w| Ok(hook_stat(k, &assaf_a_mu(mu, w)?)))
}

/// How to read the closed hook formula.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HookReading {
    /// `t^{maj(w|[k])} ∏_{i∈des(w), k≤i} q^{n-i}/t^i`.
    Single,
    /// As `Single`, with the `t^{maj(w|[k])}` factor repeated once per descent `i < k`.
    Repeated,
    /// `∏_{i∈des(w), i≤k} t^i ∏_{i∈des(w), i>k} q^{n-i}`; agrees with the other routes.
    Corrected,
}

impl HookReading {
    pub const ALL: [HookReading; 3] = [
        HookReading::Single,
        HookReading::Repeated,
        HookReading::Corrected,
    ];
}

impl fmt::Display for HookReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HookReading::Single => "single",
            HookReading::Repeated => "repeated",
            HookReading::Corrected => "corrected",
        })
    }
}

impl FromStr for HookReading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "single" => Ok(HookReading::Single),
            "repeated" => Ok(HookReading::Repeated),
            "corrected" => Ok(HookReading::Corrected),
            _ => Err(Error::Parse(format!("unknown hook reading {s:?}"))),
        }
    }
}

/// The coefficient the closed formula attaches to one super-standard word.
pub fn hook_word_coefficient(n: usize, k: usize, w: &[u8], reading: HookReading) -> Monomial {
    let (mut qe, mut te) = (0i32, 0i32);
    match reading {
        HookReading::Corrected => {
            for i in descents(w) {
                if i <= k {
                    te += i as i32;
                } else {
                    qe += (n - i) as i32;
                }
            }
        }
        HookReading::Single | HookReading::Repeated => {
            let head: Vec<usize> = descents(w).filter(|&i| i < k).collect();
            let maj_k: usize = head.iter().sum();
            te += match reading {
                HookReading::Single => maj_k as i32,
                _ => (maj_k * head.len()) as i32,
            };
            for i in descents(w).filter(|&i| i >= k.max(1)) {
                qe += (n - i) as i32;
                te -= i as i32;
            }
        }
    }
    Monomial::q_t(qe, te)
}

/// Schur expansion of `H̃_μ` for a hook from the closed descent formula.
pub fn hook_kostka_direct(mu: &Partition, reading: HookReading) -> Result<Sym> {
    let k = hook_leg(mu)?;
    let n = mu.size();
    schur_from_words(n, |w| Ok(hook_word_coefficient(n, k, w, reading)))
}

/// Schur expansion of `H̃_μ` through the HHL sum; works for any `μ`.
pub fn kostka_hhl(mu: &Partition) -> Result<Sym> {
    to_schur(&h_mu(mu)?)
}

/// `Σ_λ K_{λ,μ}(1,1) · #SYT(λ)`.
pub fn mass(s: &Sym) -> BigInt {
    s.coeffs
        .iter()
        .map(|(lam, c)| c.eval_all_ones() * BigInt::from(lam.num_syt()))
        .sum()
}

/// One row of the hook table: a super-standard word and its coefficient
/// for each hook `(1^n), (2,1^{n-2}), …, (n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookRow {
    pub lambda: Partition,
    pub word: Vec<u8>,
    pub entries: Vec<Monomial>,
}

/// Hooks of size `n` from the single column to the single row.
pub fn hooks_by_arm(n: usize) -> Result<Vec<Partition>> {
    (0..n).rev().map(|k| hook(n, k)).collect()
}

pub fn hook_table(n: usize) -> Result<Vec<HookRow>> {
    let hooks = hooks_by_arm(n)?;
    let mut rows = Vec::new();
    for lam in partitions_of(n) {
        for w in superstandard_words(&lam) {
            let entries = hooks
                .iter()
                .map(|mu| {
                    Ok(hook_word_coefficient(
                        n,
                        hook_leg(mu)?,
                        &w,
                        HookReading::Corrected,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(HookRow {
                lambda: lam.clone(),
                word: w,
                entries,
            });
        }
    }
    Ok(rows)
}

/// For `μ = (n-k, 1^k)` and `μ⁺ = (n-k+1, 1^{k-1})`, every word's coefficient
/// either stays put or trades `t^k` for `q^{n-k}`.
pub fn hook_butler_consistent(n: usize, k: usize) -> Result<bool> {
    if k == 0 || k >= n {
        return Err(Error::BadParams(format!(
            "need 1 ≤ k < n, got k={k}, n={n}"
        )));
    }
    let swap = Monomial::q_t((n - k) as i32, -(k as i32));
    for lam in partitions_of(n) {
        for w in superstandard_words(&lam) {
            let a = hook_word_coefficient(n, k, &w, HookReading::Corrected);
            let b = hook_word_coefficient(n, k - 1, &w, HookReading::Corrected);
            if b != a && b != a.mul(&swap) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One step of a two-column path, from level `height` to level `height - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathStep {
    pub height: usize,
    pub left: bool,
    pub spin: usize,
}

/// A path from `(2^n)` down `n` levels of the strong cover graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoColumnPath {
    pub n: usize,
    pub steps: Vec<PathStep>,
    pub end: Partition,
}

impl TwoColumnPath {
    pub fn weight(&self) -> usize {
        self.steps.iter().map(|s| s.spin).sum()
    }

    /// `L_m(P)`: heights `≥ n - 2m` of left steps.
    pub fn left_heights(&self, m: usize) -> BTreeSet<usize> {
        let floor = self.n.saturating_sub(2 * m);
        self.steps
            .iter()
            .filter(|s| s.left && s.height >= floor)
            .map(|s| s.height)
            .collect()
    }

    /// `t^{w(P)} ∏_{i∈L_m(P)} q t^{-i}`.
    pub fn coefficient(&self, m: usize) -> Monomial {
        let l = self.left_heights(m);
        let te = self.weight() as i32 - l.iter().sum::<usize>() as i32;
        Monomial::q_t(l.len() as i32, te)
    }
}

/// `(2^a, 1^b)`.
pub fn two_bounded(a: usize, b: usize) -> Partition {
    let mut parts = vec![2; a];
    parts.extend(std::iter::repeat_n(1, b));
    Partition::new(parts).expect("weakly decreasing")
}

/// All paths of `G(n)`. Below `(2^n)` the shape after `j` steps is
/// `(2^{n-j+m}, 1^{j-2m})`; steps leaving an odd `j` may raise `m`.
pub fn two_column_paths(n: usize) -> Vec<TwoColumnPath> {
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<PathStep>)> = vec![(0, Vec::new())];
    while let Some((m, steps)) = stack.pop() {
        let j = steps.len();
        if j == n {
            out.push(TwoColumnPath {
                n,
                steps,
                end: two_bounded(m, n - 2 * m),
            });
            continue;
        }
        let height = n - j;
        let mut right = steps.clone();
        right.push(PathStep {
            height,
            left: false,
            spin: m,
        });
        stack.push((m, right));
        if j % 2 == 1 && m < j.div_ceil(2) {
            let mut left = steps;
            left.push(PathStep {
                height,
                left: true,
                spin: j.div_ceil(2),
            });
            stack.push((m + 1, left));
        }
    }
    out.sort_by(|a, b| {
        a.end
            .cmp(&b.end)
            .then(b.weight().cmp(&a.weight()))
            .then(a.steps.len().cmp(&b.steps.len()))
    });
    out
}

fn check_two_column(n: usize, m: usize) -> Result<()> {
    if 2 * m > n {
        return Err(Error::BadParams(format!(
            "two-column shape needs n ≥ 2m, got n={n}, m={m}"
        )));
    }
    Ok(())
}

/// 2-Schur coefficients of `ω H̃_{(2^m, 1^{n-2m})}` from weighted paths.
pub fn two_column_kostka(n: usize, m: usize) -> Result<BTreeMap<Partition, LaurentPoly>> {
    check_two_column(n, m)?;
    let mut out: BTreeMap<Partition, LaurentPoly> = BTreeMap::new();
    for p in two_column_paths(n) {
        *out.entry(p.end.clone()).or_default() += &LaurentPoly::from(p.coefficient(m));
    }
    Ok(out)
}

/// The same coefficients built from the one-column case of size `n - 2m` by
/// `m` applications of the creation operator `q B_2 + B_{1,1}`, where
/// `B_2 s_{(2^a,1^b)} = s_{(2^{a+1},1^b)}` and `B_{1,1} s_{(2^a,1^b)} = t^a s_{(2^a,1^{b+2})}`.
pub fn two_column_recursion_oracle(n: usize, m: usize) -> Result<BTreeMap<Partition, LaurentPoly>> {
    check_two_column(n, m)?;
    let base_n = n - 2 * m;
    let mut cur: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
    for p in two_column_paths(base_n) {
        let (a, b) = two_bounded_parts(&p.end);
        *cur.entry((a, b)).or_default() += &LaurentPoly::from(Monomial::q_t(0, p.weight() as i32));
    }
    if base_n == 0 {
        cur.insert((0, 0), LaurentPoly::one());
    }
    for _ in 0..m {
        let mut next: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
        for (&(a, b), c) in &cur {
            *next.entry((a + 1, b)).or_default() += &c.mul_mono(&Monomial::var(Var::Q));
            *next.entry((a, b + 2)).or_default() += &c.mul_mono(&Monomial::q_t(0, a as i32));
        }
        cur = next;
    }
    Ok(cur
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((a, b), c)| (two_bounded(a, b), c))
        .collect())
}

fn two_bounded_parts(p: &Partition) -> (usize, usize) {
    let a = p.parts().iter().filter(|&&x| x == 2).count();
    (a, p.len() - a)
}

/// A row of the two-column table: a path and its coefficient for each
/// `μ = (1^n), (2,1^{n-2}), …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoColumnRow {
    pub path: TwoColumnPath,
    pub entries: Vec<Monomial>,
}

pub fn two_column_table(n: usize) -> Vec<TwoColumnRow> {
    two_column_paths(n)
        .into_iter()
        .map(|path| {
            let entries = (0..=n / 2).map(|m| path.coefficient(m)).collect();
            TwoColumnRow { path, entries }
        })
        .collect()
}

/// Hook lengths of every cell, row by row.
fn hook_lengths(kappa: &[usize]) -> Vec<Vec<usize>> {
    let conj = Partition::new(kappa.to_vec())
        .map(|p| p.conjugate())
        .unwrap_or_default();
    kappa
        .iter()
        .enumerate()
        .map(|(r, &len)| {
            (0..len)
                .map(|c| (len - c - 1) + (conj.parts()[c] - r - 1) + 1)
                .collect()
        })
        .collect()
}

pub fn is_three_core(kappa: &Partition) -> bool {
    hook_lengths(kappa.parts())
        .iter()
        .flatten()
        .all(|&h| h != 3)
}

/// `p`: row `r` of the image counts the cells of row `r` with hook length below 3.
pub fn core_bijection(kappa: &Partition) -> Result<Partition> {
    if !is_three_core(kappa) {
        return Err(Error::NotACore(kappa.to_string()));
    }
    let parts = hook_lengths(kappa.parts())
        .iter()
        .map(|row| row.iter().filter(|&&h| h < 3).count())
        .collect();
    Partition::new(parts)
}

/// `p^{-1}`: rows are placed from the shortest up, each shifted right as
/// little as possible so that its own cells have hook length at most 2.
pub fn core_from_bounded(lam: &Partition) -> Result<Partition> {
    if lam.parts().first().is_some_and(|&x| x > 2) {
        return Err(Error::BadParams(format!("{lam} is not 2-bounded")));
    }
    let mut rows: Vec<usize> = Vec::new();
    for &len in lam.parts().iter().rev() {
        let leg = |c: usize| rows.iter().filter(|&&r| r >= c).count();
        let mut s = 0;
        while (1..=len).any(|i| (len - i) + leg(s + i) + 1 > 2) {
            s += 1;
        }
        rows.push(s + len);
    }
    rows.reverse();
    Partition::new(rows)
}

/// A strong marked cover `τ ⇒^r κ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongCover {
    pub inner: Partition,
    pub mark: usize,
    pub spin: usize,
}

fn skew_components(outer: &Partition, inner: &Partition) -> Vec<Vec<(usize, usize)>> {
    let cells: BTreeSet<(usize, usize)> = outer
        .cells()
        .into_iter()
        .filter(|&u| !inner.contains(u))
        .map(|u| (u.row, u.col))
        .collect();
    let mut seen = BTreeSet::new();
    let mut comps = Vec::new();
    for &start in &cells {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some((r, c)) = stack.pop() {
            comp.push((r, c));
            for nb in [
                (r + 1, c),
                (r.wrapping_sub(1), c),
                (r, c + 1),
                (r, c.wrapping_sub(1)),
            ] {
                if cells.contains(&nb) && seen.insert(nb) {
                    stack.push(nb);
                }
            }
        }
        comps.push(comp);
    }
    comps
}

/// All strong marked covers into the 3-core `κ`, one per component of `κ/τ`,
/// with spin `c(h-1) + N`.
pub fn strong_covers(kappa: &Partition) -> Result<Vec<StrongCover>> {
    let size = core_bijection(kappa)?.size();
    if size == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for a in 0..=(size - 1) / 2 {
        let tau = core_from_bounded(&two_bounded(a, size - 1 - 2 * a))?;
        if tau.len() > kappa.len() || tau.parts().iter().zip(kappa.parts()).any(|(x, y)| x > y) {
            continue;
        }
        let comps = skew_components(kappa, &tau);
        let heights: BTreeSet<usize> = comps
            .iter()
            .map(|cm| {
                let rows: BTreeSet<usize> = cm.iter().map(|u| u.0).collect();
                rows.len()
            })
            .collect();
        let h = *heights.iter().next().expect("nonempty skew");
        let c = comps.len();
        let tops: Vec<usize> = comps
            .iter()
            .map(|cm| cm.iter().map(|u| u.0).min().expect("nonempty"))
            .collect();
        for &r in &tops {
            let below = tops.iter().filter(|&&x| x > r).count();
            out.push(StrongCover {
                inner: tau.clone(),
                mark: r,
                spin: c * (h - 1) + below,
            });
        }
    }
    Ok(out)
}

/// Vertical strong marked tableaux `κ^{(0)} ⇒^1 ⋯ ⇒^n p^{-1}(2^n)` as
/// `(inside, spin)` pairs, enumerated through the covers themselves.
pub fn vsmt_of_column(n: usize) -> Result<Vec<(Partition, usize)>> {
    let mut out = Vec::new();
    let mut stack = vec![(core_from_bounded(&two_bounded(n, 0))?, n, 0usize)];
    while let Some((kappa, mark, spin)) = stack.pop() {
        if mark == 0 {
            out.push((core_bijection(&kappa)?, spin));
            continue;
        }
        for cov in strong_covers(&kappa)? {
            if cov.mark == mark {
                stack.push((cov.inner, mark - 1, spin + cov.spin));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    Ok(out)
}

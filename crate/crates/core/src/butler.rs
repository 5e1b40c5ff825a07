//! Butler permutations.
//!
//! A permutation `w` of length `n` is turned into a directed perfect matching
//! `α_1(w), α_2(w), …` on `{0, …, n+1}` (`n` even) or `{0, …, n}` (`n` odd).
//! Reading arcs from the right end of `w`, the first noncrossing consecutive
//! pair decides membership through the nesting of the pair and the direction
//! of its first arc. Exactly half of `S_n` is Butler.

use crate::error::{Error, Result};
use crate::macdiag::{
    alpha_of, corners_from_pair, deform, max_cells, pair_from_corners, weighted_f_sum,
    FilledDiagram, Side, StatPlan,
};
use crate::polyring::{LaurentPoly, Monomial};
use crate::qsymsym::{QBasis, QSym, SBasis, Sym};
use crate::shapes::{Cell, Partition};
use crate::words::{
    ides_fast, multiset_permutations, permutations, restrict_positions, standardize, sub_positions,
};

/// A directed arc `from → to`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Arc {
    pub from: u8,
    pub to: u8,
}

impl Arc {
    fn lo(self) -> u8 {
        self.from.min(self.to)
    }

    fn hi(self) -> u8 {
        self.from.max(self.to)
    }

    pub fn is_forward(self) -> bool {
        self.from < self.to
    }

    /// `self` lies strictly inside `other`.
    pub fn nested_by(self, other: Arc) -> bool {
        other.lo() < self.lo() && self.hi() < other.hi()
    }

    pub fn crosses(self, other: Arc) -> bool {
        let (a, b, c, d) = (self.lo(), self.hi(), other.lo(), other.hi());
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }
}

/// Position pairs `(p, p')` (1-based, `0` standing for the letter `0` and
/// `n+1` for the letter `n+1`) of the arcs `α_1, α_2, …`.
fn arc_positions(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    if n.is_multiple_of(2) {
        if n > 0 {
            out.push((n, n + 1));
        }
        for i in 2..=n / 2 {
            let p = n - 2 * (i - 1);
            out.push((p, p + 1));
        }
    } else {
        for i in 1..=(n - 1) / 2 {
            let p = n - 2 * (i - 1) - 1;
            out.push((p, p + 1));
        }
    }
    out.push((0, 1));
    out
}

pub fn matching(w: &[u8]) -> Vec<Arc> {
    let n = w.len();
    let letter = |p: usize| -> u8 {
        if p == 0 {
            0
        } else if p == n + 1 {
            (n + 1) as u8
        } else {
            w[p - 1]
        }
    };
    arc_positions(n)
        .into_iter()
        .map(|(a, b)| Arc {
            from: letter(a),
            to: letter(b),
        })
        .collect()
}

/// `k(w)` as a 1-based arc index, and whether a noncrossing pair was found.
fn k_of(arcs: &[Arc]) -> (usize, bool) {
    for k in 1..arcs.len() {
        if !arcs[k - 1].crosses(arcs[k]) {
            return (k, true);
        }
    }
    (arcs.len() - 1, false)
}

pub fn is_butler(w: &[u8]) -> bool {
    if w.len() < 2 {
        return true;
    }
    let arcs = matching(w);
    let (k, found) = k_of(&arcs);
    let ak = arcs[k - 1];
    if !found {
        return !ak.is_forward();
    }
    if arcs[k].nested_by(ak) {
        !ak.is_forward()
    } else {
        ak.is_forward()
    }
}

/// `𝔅_n` in lexicographic order.
pub fn butler_permutations(n: usize) -> Vec<Vec<u8>> {
    permutations(n)
        .into_iter()
        .filter(|w| is_butler(w))
        .collect()
}

/// For `w` with `α_1(w)`, `α_2(w)` crossing, the permutation obtained by
/// reversing `α_{k(w)}(w)`; `None` when the first pair does not cross.
pub fn crossing_flip(w: &[u8]) -> Option<Vec<u8>> {
    let n = w.len();
    let arcs = matching(w);
    if arcs.len() < 2 || !arcs[0].crosses(arcs[1]) {
        return None;
    }
    let (k, _) = k_of(&arcs);
    let (a, b) = arc_positions(n)[k - 1];
    if a == 0 || b > n {
        return None;
    }
    let mut out = w.to_vec();
    out.swap(a - 1, b - 1);
    Some(out)
}

/// Outcome of the recursive membership test for one permutation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RecursionReport {
    /// `1` for odd length, `2` for even length.
    pub clause: u8,
    pub is_butler: bool,
    pub prefix_is_butler: bool,
}

impl RecursionReport {
    pub fn holds(&self) -> bool {
        self.is_butler == self.prefix_is_butler
    }
}

/// Compares `w ∈ 𝔅` with `std(w_1 ⋯ w_{2k-1}) ∈ 𝔅`, where `2k-1` is the
/// largest odd number below `|w| - 1` (odd length) or `|w|` (even length).
pub fn butler_recursion_check(w: &[u8]) -> Result<RecursionReport> {
    let n = w.len();
    let arcs = matching(w);
    if n < 4 {
        return Err(Error::HypothesisFails(format!("{w:?} is shorter than 4")));
    }
    if !arcs[0].crosses(arcs[1]) {
        return Err(Error::HypothesisFails(format!(
            "first two arcs of {w:?} do not cross"
        )));
    }
    let (clause, keep) = if n % 2 == 1 { (1, n - 2) } else { (2, n - 1) };
    Ok(RecursionReport {
        clause,
        is_butler: is_butler(w),
        prefix_is_butler: is_butler(&standardize(&w[..keep])),
    })
}

/// `I_n = Σ_{w ∈ 𝔅_n} F_{iDes(w)}`.
pub fn i_n(n: usize) -> Result<QSym> {
    if n < 2 {
        return Err(Error::BadParams(format!("I_n needs n >= 2, got {n}")));
    }
    let mut out = QSym::zero(n, QBasis::F);
    for w in butler_permutations(n) {
        out.add_term(ides_fast(&w), &LaurentPoly::one());
    }
    Ok(out)
}

/// Data attached to a corner pair `(i, j)` of `ν`.
#[derive(Clone, Debug)]
pub struct ButlerContext {
    pub nu: Partition,
    pub i: usize,
    pub j: usize,
    pub lambda: Partition,
    pub mu: Partition,
    /// Column heights of `ν`.
    pub a: Vec<usize>,
    /// `𝔇_{λ,μ}(μ, f^st_μ)`.
    pub deformed: FilledDiagram,
    pub alpha: Monomial,
    /// 1-based window `[a_i - a_j, a_i + a_j - 1]` inside the last-two-columns subword.
    pub window: (usize, usize),
    /// Absolute reading positions of the window cells.
    window_positions: Vec<usize>,
}

impl ButlerContext {
    pub fn size(&self) -> usize {
        self.deformed.size()
    }

    /// `w ∈ 𝔅_{λ,μ}`.
    pub fn contains(&self, w: &[u8]) -> bool {
        is_butler(&standardize(&restrict_positions(w, &self.window_positions)))
    }

    pub fn stat(&self, w: &[u8]) -> Result<Monomial> {
        crate::macdiag::stat(&self.deformed, w)
    }
}

pub fn butler_context(nu: &Partition, i: usize, j: usize) -> Result<ButlerContext> {
    let (lambda, mu) = pair_from_corners(nu, i, j)?;
    let a = crate::macdiag::column_heights(nu);
    let deformed = deform(nu, i, j, Side::Mu)?;
    let l = deformed.shape.num_cols();
    let last_two: Vec<Cell> = deformed
        .shape
        .cells()
        .into_iter()
        .filter(|u| u.col + 1 >= l)
        .collect();
    let positions = sub_positions(&deformed.shape, &last_two)?;
    let (n, m) = (a[i - 1], a[j - 1]);
    let window = (n - m, n + m - 1);
    if positions.len() != n + m - 1 {
        return Err(Error::InternalInvariantViolation(format!(
            "last two columns hold {} cells, expected {}",
            positions.len(),
            n + m - 1
        )));
    }
    let window_positions = positions[window.0 - 1..window.1].to_vec();
    Ok(ButlerContext {
        alpha: alpha_of(&lambda, &mu),
        nu: nu.clone(),
        i,
        j,
        lambda,
        mu,
        a,
        deformed,
        window,
        window_positions,
    })
}

/// Context for an unordered pair of partitions.
pub fn context_for_pair(lam: &Partition, mu: &Partition) -> Result<ButlerContext> {
    let (nu, i, j) = corners_from_pair(lam, mu)?;
    butler_context(&nu, i, j)
}

/// `Σ_{w ∈ 𝔅_{λ,μ}} stat_{λ,μ}(w) F_{iDes(w)}`.
pub fn intersection_butler(lam: &Partition, mu: &Partition) -> Result<QSym> {
    let ctx = context_for_pair(lam, mu)?;
    weighted_f_sum(&ctx.deformed, |w| ctx.contains(w))
}

/// `|𝔅_{λ,μ}|`.
pub fn butler_set_size(ctx: &ButlerContext) -> Result<u64> {
    let n = ctx.size();
    if n > max_cells() {
        return Err(Error::SizeCapExceeded {
            size: n,
            cap: max_cells(),
        });
    }
    Ok(crate::words::par_fold_permutations(
        n,
        || 0u64,
        |acc, w| *acc += u64::from(ctx.contains(w)),
        |a, b| a + b,
    ))
}

/// Words of weight `ε` whose standardization lies in `𝔅_{λ,μ}`.
pub fn butler_words(ctx: &ButlerContext, epsilon: &Partition) -> Result<Vec<Vec<u8>>> {
    if epsilon.size() != ctx.size() {
        return Err(Error::SizeMismatch(format!(
            "weight {epsilon} has size {}, diagram has {}",
            epsilon.size(),
            ctx.size()
        )));
    }
    let letters: Vec<u8> = epsilon
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(k, &c)| std::iter::repeat_n((k + 1) as u8, c))
        .collect();
    Ok(multiset_permutations(&letters)
        .into_iter()
        .filter(|w| ctx.contains(&standardize(w)))
        .collect())
}

/// `I_{λ,μ} = Σ_ε Σ_{w ∈ 𝔅^ε_{λ,μ}} stat_{λ,μ}(w) m_ε`.
pub fn intersection_m_expansion(lam: &Partition, mu: &Partition) -> Result<Sym> {
    let ctx = context_for_pair(lam, mu)?;
    let n = ctx.size();
    if n > max_cells() {
        return Err(Error::SizeCapExceeded {
            size: n,
            cap: max_cells(),
        });
    }
    let plan = StatPlan::new(&ctx.deformed);
    let mut out = Sym::zero(n, SBasis::M);
    for eps in crate::shapes::partitions_of(n) {
        let mut c = LaurentPoly::zero();
        for w in butler_words(&ctx, &eps)? {
            c.add_count(plan.stat(&w), 1);
        }
        out.add_term(&eps, &c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macdiag::{corner_pairs, intersection_divided_difference};
    use crate::qsymsym::{f_to_m, h_lambda_expansion, qsym_to_sym};
    use crate::shapes::partitions_of;
    use crate::words::{format_word, parse_word};

    fn w(s: &str) -> Vec<u8> {
        parse_word(s).unwrap()
    }

    fn arcs(v: &[(u8, u8)]) -> Vec<Arc> {
        v.iter().map(|&(from, to)| Arc { from, to }).collect()
    }

    #[test]
    fn matchings() {
        assert_eq!(matching(&w("12")), arcs(&[(2, 3), (0, 1)]));
        assert_eq!(matching(&w("1")), arcs(&[(0, 1)]));
        assert_eq!(matching(&w("2413")), arcs(&[(3, 5), (4, 1), (0, 2)]));
        assert_eq!(matching(&w("3214")), arcs(&[(4, 5), (2, 1), (0, 3)]));
        assert_eq!(matching(&w("1423")), arcs(&[(3, 5), (4, 2), (0, 1)]));
        assert_eq!(matching(&w("31524")), arcs(&[(2, 4), (1, 5), (0, 3)]));
    }

    #[test]
    fn membership_examples() {
        assert!(is_butler(&w("2413")));
        assert!(is_butler(&w("3214")));
        assert!(!is_butler(&w("1423")));
        let b2: Vec<String> = butler_permutations(2)
            .iter()
            .map(|v| format_word(v))
            .collect();
        assert_eq!(b2, ["12"]);
        let b3: Vec<String> = butler_permutations(3)
            .iter()
            .map(|v| format_word(v))
            .collect();
        assert_eq!(b3, ["123", "231", "312"]);
        let b4: Vec<String> = butler_permutations(4)
            .iter()
            .map(|v| format_word(v))
            .collect();
        assert_eq!(
            b4,
            [
                "1234", "1243", "1324", "2134", "2314", "2413", "3124", "3214", "3412", "4123",
                "4132", "4213"
            ]
        );
    }

    #[test]
    fn half_of_all_permutations() {
        let mut fact = 1usize;
        for n in 2..=8 {
            fact *= n;
            assert_eq!(butler_permutations(n).len(), fact / 2, "n = {n}");
        }
    }

    #[test]
    fn i_n_is_h21() {
        assert!(i_n(1).is_err());
        assert_eq!(i_n(2).unwrap().to_string(), "F_{} : 1");
        assert_eq!(
            i_n(3).unwrap().to_string(),
            "F_{} : 1, F_{1} : 1, F_{2} : 1"
        );
        for n in 2..=8 {
            let mut parts = vec![2];
            parts.extend(std::iter::repeat_n(1, n - 2));
            let expect = h_lambda_expansion(&Partition::new(parts).unwrap());
            assert_eq!(
                qsym_to_sym(&f_to_m(&i_n(n).unwrap())).unwrap(),
                expect,
                "n = {n}"
            );
        }
    }

    #[test]
    fn recursion_lemma() {
        assert!(butler_recursion_check(&w("2413")).unwrap().holds());
        assert!(matches!(
            butler_recursion_check(&w("3214")),
            Err(Error::HypothesisFails(_))
        ));
        for n in 4..=8 {
            for v in permutations(n) {
                if let Ok(r) = butler_recursion_check(&v) {
                    assert!(r.holds(), "{}", format_word(&v));
                    assert_eq!(r.clause, if n % 2 == 1 { 1 } else { 2 });
                }
            }
        }
    }

    #[test]
    fn crossing_flip_involution() {
        for n in 3..=7 {
            for v in permutations(n) {
                let Some(v2) = crossing_flip(&v) else {
                    continue;
                };
                assert_ne!(is_butler(&v), is_butler(&v2), "{}", format_word(&v));
                assert_eq!(crossing_flip(&v2).as_deref(), Some(&v[..]));
                assert_eq!(ides_fast(&v), ides_fast(&v2));
            }
        }
    }

    #[test]
    fn worked_example_window() {
        let ctx = butler_context(&"5,4,3,2".parse().unwrap(), 2, 4).unwrap();
        assert_eq!(ctx.window, (2, 5));
        assert_eq!(ctx.window.1 + 1 - ctx.window.0, 2 * ctx.a[ctx.j - 1]);
        assert_eq!(ctx.alpha, crate::polyring::mono("q^-2*t^2"));
    }

    #[test]
    fn butler_formula_matches_divided_difference() {
        for n in 2..=6 {
            for nu in partitions_of(n + 1) {
                for (i, j) in corner_pairs(&nu) {
                    let ctx = butler_context(&nu, i, j).unwrap();
                    let lhs = intersection_butler(&ctx.lambda, &ctx.mu).unwrap();
                    let rhs = intersection_divided_difference(&ctx.lambda, &ctx.mu).unwrap();
                    assert_eq!(lhs, rhs, "{nu} {i} {j}");
                    let fact: u64 = (1..=n as u64).product();
                    assert_eq!(butler_set_size(&ctx).unwrap(), fact / 2);
                }
            }
        }
    }

    #[test]
    fn m_expansion_two_routes() {
        for n in 2..=5 {
            for nu in partitions_of(n + 1) {
                for (i, j) in corner_pairs(&nu) {
                    let ctx = butler_context(&nu, i, j).unwrap();
                    let f = intersection_butler(&ctx.lambda, &ctx.mu).unwrap();
                    let m = intersection_m_expansion(&ctx.lambda, &ctx.mu).unwrap();
                    assert_eq!(qsym_to_sym(&f_to_m(&f)).unwrap(), m, "{nu} {i} {j}");
                    let top = Partition::new(vec![n]).unwrap();
                    assert_eq!(m.coeff(&top), LaurentPoly::one());
                }
            }
        }
        let ctx = butler_context(&"2,1".parse().unwrap(), 1, 2).unwrap();
        assert!(matches!(
            butler_words(&ctx, &"3".parse().unwrap()),
            Err(Error::SizeMismatch(_))
        ));
    }
}

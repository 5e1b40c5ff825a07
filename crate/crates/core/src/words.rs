//! Words, permutations and their statistics.
//!
//! Letters are 1-based `u8` values. Positions are 1-based in documentation,
//! 0-based in slices. Subsets of `[n-1]` are `u32` bitmasks with bit `i-1`
//! standing for `i`.

use crate::error::{Error, Result};
use crate::shapes::{Cell, Diagram, Partition};

/// Rearranges `w` into the next permutation in lexicographic order.
/// Returns `false` (leaving `w` sorted ascending) after the last one.
pub fn next_permutation(w: &mut [u8]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        w.reverse();
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

pub fn identity(n: usize) -> Vec<u8> {
    (1..=n as u8).collect()
}

/// All permutations of `[n]` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut w = identity(n);
    let mut out = Vec::new();
    loop {
        out.push(w.clone());
        if !next_permutation(&mut w) {
            return out;
        }
    }
}

/// Distinct rearrangements of `letters`, lexicographic.
pub fn multiset_permutations(letters: &[u8]) -> Vec<Vec<u8>> {
    let mut w = letters.to_vec();
    w.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(w.clone());
        if !next_permutation(&mut w) {
            return out;
        }
    }
}

/// Folds `f` over all of `S_n` in parallel, one task per two-letter prefix.
pub fn par_fold_permutations<A, I, F, R>(n: usize, init: I, f: F, reduce: R) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &[u8]) + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    use rayon::prelude::*;
    if n < 3 {
        let mut acc = init();
        for w in permutations(n) {
            f(&mut acc, &w);
        }
        return acc;
    }
    let prefixes: Vec<(u8, u8)> = (1..=n as u8)
        .flat_map(|a| (1..=n as u8).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    prefixes
        .into_par_iter()
        .map(|(a, b)| {
            let mut acc = init();
            let mut w: Vec<u8> = vec![a, b];
            w.extend((1..=n as u8).filter(|&x| x != a && x != b));
            loop {
                f(&mut acc, &w);
                if !next_permutation(&mut w[2..]) {
                    break;
                }
            }
            acc
        })
        .reduce(&init, &reduce)
}

pub fn is_permutation(w: &[u8]) -> bool {
    let mut seen = vec![false; w.len() + 1];
    w.iter().all(|&x| {
        let x = x as usize;
        (1..=w.len()).contains(&x) && !std::mem::replace(&mut seen[x], true)
    })
}

pub fn inverse(w: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; w.len()];
    for (i, &x) in w.iter().enumerate() {
        inv[x as usize - 1] = (i + 1) as u8;
    }
    inv
}

pub fn des(w: &[u8]) -> u32 {
    let mut mask = 0;
    for i in 1..w.len() {
        if w[i - 1] > w[i] {
            mask |= 1 << (i - 1);
        }
    }
    mask
}

/// `iDes(w)` without the permutation check. `i ∈ iDes(w)` iff `i+1` occurs
/// to the left of `i`.
pub fn ides_fast(w: &[u8]) -> u32 {
    let mut pos = [0u8; 32];
    for (i, &x) in w.iter().enumerate() {
        pos[x as usize] = i as u8;
    }
    let mut mask = 0;
    for i in 1..w.len() {
        if pos[i] > pos[i + 1] {
            mask |= 1 << (i - 1);
        }
    }
    mask
}

pub fn ides(w: &[u8]) -> Result<u32> {
    if !is_permutation(w) {
        return Err(Error::NotAPermutation(w.to_vec()));
    }
    Ok(ides_fast(w))
}

/// `iDes(w) ∖ {w_n}` when `w_n = w_{n-1} - 1`, else `iDes(w)`.
pub fn ides_bar(w: &[u8]) -> Result<u32> {
    let mut mask = ides(w)?;
    let n = w.len();
    if n >= 2 && w[n - 1] + 1 == w[n - 2] {
        mask &= !(1 << (w[n - 1] - 1));
    }
    Ok(mask)
}

/// Renders a bitmask subset as `{a,b,…}`.
pub fn subset_to_vec(mask: u32) -> Vec<usize> {
    (0..32)
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

pub fn vec_to_subset(elems: &[usize]) -> u32 {
    elems.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

/// Standardization: order-preserving relabeling with ties broken left to right.
pub fn standardize(w: &[u8]) -> Vec<u8> {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by_key(|&i| (w[i], i));
    let mut out = vec![0u8; w.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = (rank + 1) as u8;
    }
    out
}

/// De-standardization: the values `1..n` are cut into blocks at the inverse
/// descents, and each value is replaced by the index of its block.
pub fn destandardize(w: &[u8]) -> Result<Vec<u8>> {
    let d = ides(w)?;
    let n = w.len();
    let mut block = vec![0u8; n + 1];
    let mut b = 1u8;
    for (v, slot) in block.iter_mut().enumerate().skip(1) {
        if v > 1 && d >> (v - 2) & 1 == 1 {
            b += 1;
        }
        *slot = b;
    }
    Ok(w.iter().map(|&x| block[x as usize]).collect())
}

/// Every suffix has at least as many `i`'s as `(i+1)`'s.
pub fn is_yamanouchi(word: &[u8]) -> bool {
    let mut counts = [0usize; 256];
    for &x in word.iter().rev() {
        counts[x as usize] += 1;
        if x > 1 && counts[x as usize] > counts[x as usize - 1] {
            return false;
        }
        if x == 0 {
            return false;
        }
    }
    true
}

/// Content of a word as a partition-like vector: `out[i-1] = #i`.
pub fn weight(word: &[u8]) -> Vec<usize> {
    let max = word.iter().copied().max().unwrap_or(0) as usize;
    let mut out = vec![0; max];
    for &x in word {
        out[x as usize - 1] += 1;
    }
    out
}

pub fn is_superstandard(w: &[u8]) -> bool {
    destandardize(w).map(|d| is_yamanouchi(&d)).unwrap_or(false)
}

/// `SS(λ)`: permutations whose de-standardization is Yamanouchi of weight `λ`.
pub fn superstandard_words(lambda: &Partition) -> Vec<Vec<u8>> {
    let letters: Vec<u8> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| std::iter::repeat_n((i + 1) as u8, p))
        .collect();
    let mut out: Vec<Vec<u8>> = multiset_permutations(&letters)
        .into_iter()
        .filter(|y| is_yamanouchi(y))
        .filter_map(|y| {
            let w = standardize(&y);
            (destandardize(&w).ok()? == y).then_some(w)
        })
        .collect();
    out.sort();
    out
}

/// The subword of `w` at 1-based `positions`.
pub fn restrict_positions(w: &[u8], positions: &[usize]) -> Vec<u8> {
    positions.iter().map(|&p| w[p - 1]).collect()
}

/// `w↓^D_E`: the subword at the reading-order positions of the cells of `E`.
pub fn restrict(w: &[u8], d: &Diagram, e: &[Cell]) -> Result<Vec<u8>> {
    Ok(restrict_positions(w, &sub_positions(d, e)?))
}

/// Sorted reading-order positions of the cells of `e` inside `d`.
pub fn sub_positions(d: &Diagram, e: &[Cell]) -> Result<Vec<usize>> {
    let order = crate::macdiag::reading_order(d);
    let mut pos = Vec::with_capacity(e.len());
    for u in e {
        let p = order
            .iter()
            .position(|v| v == u)
            .ok_or(Error::NotASubdiagram)?;
        pos.push(p + 1);
    }
    pos.sort_unstable();
    Ok(pos)
}

/// Applies `phi` to the pattern of `w` at `positions`, leaving other letters.
pub fn lift_positions(phi: impl Fn(&[u8]) -> Vec<u8>, positions: &[usize], w: &[u8]) -> Vec<u8> {
    let sub = restrict_positions(w, positions);
    let mut sorted = sub.clone();
    sorted.sort_unstable();
    let image = phi(&standardize(&sub));
    let mut out = w.to_vec();
    for (k, &p) in positions.iter().enumerate() {
        out[p - 1] = sorted[image[k] as usize - 1];
    }
    out
}

/// `φ↑^D_E(w)`.
pub fn lift(phi: impl Fn(&[u8]) -> Vec<u8>, d: &Diagram, e: &[Cell], w: &[u8]) -> Result<Vec<u8>> {
    if w.len() != d.size() {
        return Err(Error::LengthMismatch {
            expected: d.size(),
            got: w.len(),
        });
    }
    Ok(lift_positions(phi, &sub_positions(d, e)?, w))
}

/// Which clauses of the inverse-descent lemma apply to `(w, σ)` and whether
/// each holds. `None` marks a clause whose hypothesis is not met.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdesLemmaReport {
    pub clause: [[Option<bool>; 3]; 2],
}

impl IdesLemmaReport {
    pub fn holds(&self) -> bool {
        self.clause.iter().flatten().all(|c| c.unwrap_or(true))
    }

    pub fn applicable(&self) -> usize {
        self.clause.iter().flatten().filter(|c| c.is_some()).count()
    }
}

/// Evaluates the six clauses for `w ∈ S_n` and `σ ∈ S_{n-2}` with
/// `{σ_{n-3}, σ_{n-2}} = {n-3, n-2}`.
pub fn check_ides_lemma(w: &[u8], sigma: &[u8]) -> Result<IdesLemmaReport> {
    let n = w.len();
    if n < 4 || sigma.len() != n - 2 || !is_permutation(sigma) || !is_permutation(w) {
        return Err(Error::PreconditionViolated("need |σ| = |w| - 2 ≥ 2".into()));
    }
    let (s1, s2) = (sigma[n - 4] as usize, sigma[n - 3] as usize);
    if !((s1 == n - 3 && s2 == n - 2) || (s1 == n - 2 && s2 == n - 3)) {
        return Err(Error::PreconditionViolated(
            "σ must end in {n-3, n-2}".into(),
        ));
    }
    let head = &w[..n - 2];
    let permuted: Vec<u8> = sigma.iter().map(|&s| w[s as usize - 1]).collect();
    let mut w1 = permuted.clone();
    w1.extend([w[n - 2], w[n - 1]]);
    let mut w2 = permuted.clone();
    w2.extend([w[n - 1], w[n - 2]]);
    let (sh, sp) = (standardize(head), standardize(&permuted));
    let hyp1 = ides(&sh)? == ides(&sp)?;
    let hyp2 = ides_bar(&sh)? == ides_bar(&sp)? && w[n - 3].abs_diff(w[n - 4]) > 1;
    let far = w[n - 1].abs_diff(w[n - 2]) > 1;
    let a = ides(w)? == ides(&w1)?;
    let b = ides_bar(w)? == ides_bar(&w2)?;
    let c = ides(w)? == ides(&w2)?;
    let eval = |hyp: bool| {
        [
            hyp.then_some(a),
            hyp.then_some(b),
            (hyp && far).then_some(c),
        ]
    };
    Ok(IdesLemmaReport {
        clause: [eval(hyp1), eval(hyp2)],
    })
}

/// Parses `2413` or `2,4,1,3`.
pub fn parse_word(s: &str) -> Result<Vec<u8>> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("bad word {s:?}"));
    if s.contains(',') {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u8>()
                    .ok()
                    .filter(|&x| x > 0)
                    .ok_or_else(bad)
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d > 0)
                    .map(|d| d as u8)
                    .ok_or_else(bad)
            })
            .collect()
    }
}

/// Formats a word as a digit string when all letters are single digits.
pub fn format_word(w: &[u8]) -> String {
    if w.iter().all(|&x| x < 10) {
        w.iter().map(|x| x.to_string()).collect()
    } else {
        w.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<u8> {
        parse_word(s).unwrap()
    }

    #[test]
    fn descent_sets() {
        assert_eq!(subset_to_vec(ides(&w("14532")).unwrap()), vec![2, 3]);
        assert_eq!(subset_to_vec(ides_bar(&w("14532")).unwrap()), vec![3]);
        assert_eq!(ides(&identity(6)).unwrap(), 0);
        assert_eq!(subset_to_vec(des(&w("254316"))), vec![2, 3, 4]);
        assert!(matches!(ides(&w("1123")), Err(Error::NotAPermutation(_))));
    }

    #[test]
    fn standardization() {
        assert_eq!(standardize(&w("3155")), w("2134"));
        assert_eq!(standardize(&w("2579")), w("1234"));
        assert_eq!(destandardize(&w("41523")).unwrap(), w("21211"));
        assert_eq!(destandardize(&identity(5)).unwrap(), w("11111"));
        assert_eq!(destandardize(&w("321")).unwrap(), w("321"));
        for n in 1..=7 {
            for p in permutations(n) {
                assert_eq!(standardize(&destandardize(&p).unwrap()), p);
            }
        }
    }

    #[test]
    fn superstandard() {
        assert!(is_superstandard(&w("41523")));
        assert_eq!(weight(&destandardize(&w("41523")).unwrap()), vec![3, 2]);
        assert_eq!(superstandard_words(&"4".parse().unwrap()), vec![w("1234")]);
        assert_eq!(
            superstandard_words(&"2,2".parse().unwrap()),
            vec![w("3142"), w("3412")]
        );
        // |SS(λ)| = #SYT(λ).
        for n in 1..=7 {
            for lam in crate::shapes::partitions_of(n) {
                assert_eq!(
                    superstandard_words(&lam).len() as u128,
                    lam.num_syt(),
                    "{lam}"
                );
            }
        }
    }

    #[test]
    fn lift_example() {
        // E is the set of cells at reading positions 3, 5, 7, 8.
        let d = Diagram::new(vec![(1, 3), (1, 3), (1, 3)]);
        let order = crate::macdiag::reading_order(&d);
        let e: Vec<Cell> = [3, 5, 7, 8].iter().map(|&p| order[p - 1]).collect();
        let phi = |v: &[u8]| {
            let table = [(w("1234"), w("3124"))];
            table
                .iter()
                .find(|(a, _)| a == v)
                .map_or(v.to_vec(), |(_, b)| b.clone())
        };
        assert_eq!(restrict(&identity(9), &d, &e).unwrap(), w("3578"));
        assert_eq!(lift(phi, &d, &e, &identity(9)).unwrap(), w("127436589"));
        assert_eq!(
            lift(|v: &[u8]| v.to_vec(), &d, &e, &w("918273645")).unwrap(),
            w("918273645")
        );
        assert_eq!(restrict(&identity(9), &d, &[]).unwrap(), Vec::<u8>::new());
        assert_eq!(restrict(&identity(9), &d, &d.cells()).unwrap(), identity(9));
        assert!(restrict(&identity(9), &d, &[Cell::new(5, 1)]).is_err());
    }

    #[test]
    fn lift_then_restrict() {
        let rev = |v: &[u8]| v.iter().rev().copied().collect::<Vec<u8>>();
        let positions = [2usize, 3, 5];
        for p in permutations(6) {
            let lifted = lift_positions(rev, &positions, &p);
            let sub = restrict_positions(&p, &positions);
            let expect = {
                let mut sorted = sub.clone();
                sorted.sort_unstable();
                rev(&standardize(&sub))
                    .iter()
                    .map(|&i| sorted[i as usize - 1])
                    .collect::<Vec<_>>()
            };
            assert_eq!(restrict_positions(&lifted, &positions), expect);
            for i in [1usize, 4, 6] {
                assert_eq!(lifted[i - 1], p[i - 1]);
            }
        }
    }

    #[test]
    fn ides_lemma_exhaustive() {
        for n in 4..=7 {
            let sigmas: Vec<Vec<u8>> = permutations(n - 2)
                .into_iter()
                .filter(|s| {
                    let k = s.len();
                    let tail = [s[k - 2] as usize, s[k - 1] as usize];
                    tail.contains(&(n - 3)) && tail.contains(&(n - 2))
                })
                .collect();
            let mut applicable = 0;
            for p in permutations(n) {
                for s in &sigmas {
                    let r = check_ides_lemma(&p, s).unwrap();
                    assert!(r.holds(), "{p:?} {s:?} {r:?}");
                    applicable += r.applicable();
                }
            }
            assert!(applicable > 0);
        }
        let r = check_ides_lemma(&w("2143"), &w("12")).unwrap();
        assert!(r.clause[0][0].is_some());
        assert!(check_ides_lemma(&w("2143"), &w("21")).is_ok());
        assert!(check_ides_lemma(&w("21435"), &w("231")).is_err());
    }

    #[test]
    fn counting() {
        assert_eq!(permutations(5).len(), 120);
        assert_eq!(multiset_permutations(&[1, 1, 2]).len(), 3);
        assert!(is_yamanouchi(&w("21211")));
        assert!(!is_yamanouchi(&w("12")));
    }
}

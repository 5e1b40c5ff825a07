//! Quasisymmetric and symmetric functions with Laurent polynomial coefficients.
//!
//! Quasisymmetric elements are indexed by subsets of `[n-1]` (bitmasks, which
//! iterate in colex order); symmetric elements by partitions of `n` (which
//! iterate in reverse lexicographic order).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::polyring::{Binding, LaurentPoly, Monomial};
use crate::shapes::{partitions_of, Partition};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum QBasis {
    F,
    M,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSym {
    pub n: usize,
    pub basis: QBasis,
    pub coeffs: BTreeMap<u32, LaurentPoly>,
}

pub fn full_mask(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        (1u32 << (n - 1)) - 1
    }
}

/// Composition of `n` attached to a subset of `[n-1]`.
pub fn subset_to_composition(n: usize, mask: u32) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut last = 0;
    for i in 1..n {
        if mask >> (i - 1) & 1 == 1 {
            parts.push(i - last);
            last = i;
        }
    }
    if n > 0 {
        parts.push(n - last);
    }
    parts
}

pub fn composition_to_subset(parts: &[usize]) -> u32 {
    let mut mask = 0;
    let mut acc = 0;
    for &p in &parts[..parts.len().saturating_sub(1)] {
        acc += p;
        mask |= 1 << (acc - 1);
    }
    mask
}

fn format_subset(mask: u32) -> String {
    let v: Vec<String> = crate::words::subset_to_vec(mask)
        .iter()
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", v.join(","))
}

impl QSym {
    pub fn zero(n: usize, basis: QBasis) -> Self {
        QSym {
            n,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, s: u32, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(s).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&s);
        }
    }

    pub fn coeff(&self, s: u32) -> LaurentPoly {
        self.coeffs.get(&s).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &QSym) -> QSym {
        assert_eq!((self.n, self.basis), (other.n, other.basis));
        let mut out = self.clone();
        for (s, c) in &other.coeffs {
            out.add_term(*s, c);
        }
        out
    }

    pub fn sub(&self, other: &QSym) -> QSym {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    pub fn scale(&self, c: &LaurentPoly) -> QSym {
        let mut out = QSym::zero(self.n, self.basis);
        for (s, v) in &self.coeffs {
            out.add_term(*s, &(v * c));
        }
        out
    }

    pub fn scale_mono(&self, m: &Monomial) -> QSym {
        QSym {
            n: self.n,
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .map(|(s, c)| (*s, c.mul_mono(m)))
                .collect(),
        }
    }

    /// Coefficientwise exact division.
    pub fn divide_exact(&self, den: &LaurentPoly) -> Result<QSym> {
        let mut out = QSym::zero(self.n, self.basis);
        for (s, c) in &self.coeffs {
            out.add_term(*s, &c.divide_exact(den)?);
        }
        Ok(out)
    }

    pub fn specialize(&self, bindings: &[(crate::polyring::Var, Binding)]) -> Result<QSym> {
        let mut out = QSym::zero(self.n, self.basis);
        for (s, c) in &self.coeffs {
            out.add_term(*s, &c.specialize(bindings)?);
        }
        Ok(out)
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> QSym {
        let mut out = QSym::zero(self.n, self.basis);
        for (s, c) in &self.coeffs {
            out.add_term(*s, &f(c));
        }
        out
    }

    /// Every coefficient evaluated with all variables set to 1.
    pub fn at_ones(&self) -> QSym {
        self.map_coeffs(|c| {
            let mut p = LaurentPoly::zero();
            p.add_term(Monomial::one(), c.eval_all_ones());
            p
        })
    }

    /// Total number of terms counted with multiplicity at all variables 1.
    pub fn mass(&self) -> BigInt {
        self.coeffs.values().map(|c| c.eval_all_ones()).sum()
    }

    /// `{"basis": "F", "degree": n, "terms": [{"index": [1,3], "coeff": "q + t"}, …]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let basis = match self.basis {
            QBasis::F => "F",
            QBasis::M => "M",
        };
        let terms: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(s, c)| serde_json::json!({"index": crate::words::subset_to_vec(*s), "coeff": c.to_string()}))
            .collect();
        serde_json::json!({"basis": basis, "degree": self.n, "terms": terms})
    }
}

impl fmt::Display for QSym {
    /// `F_{1,2} : q + t, …` with subsets in colex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.basis {
            QBasis::F => "F",
            QBasis::M => "M",
        };
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let items: Vec<String> = self
            .coeffs
            .iter()
            .map(|(s, c)| {
                let inner = format_subset(*s);
                format!("{name}_{} : {c}", &inner[..])
            })
            .collect();
        write!(f, "{}", items.join(", "))
    }
}

/// `[M_T] = Σ_{S ⊆ T} [F_S]`.
pub fn f_to_m(f: &QSym) -> QSym {
    assert_eq!(f.basis, QBasis::F);
    let full = full_mask(f.n);
    let mut out = QSym::zero(f.n, QBasis::M);
    for (&s, c) in &f.coeffs {
        let free = full & !s;
        let mut sub = free;
        loop {
            out.add_term(s | sub, c);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }
    out
}

/// Inverse of [`f_to_m`]: `[F_T] = Σ_{S ⊆ T} (-1)^{|T∖S|} [M_S]`.
pub fn m_to_f(m: &QSym) -> QSym {
    assert_eq!(m.basis, QBasis::M);
    let full = full_mask(m.n);
    let mut out = QSym::zero(m.n, QBasis::F);
    for (&s, c) in &m.coeffs {
        let neg = c.scale(&BigInt::from(-1));
        let free = full & !s;
        let mut sub = free;
        loop {
            let sign_neg = sub.count_ones() % 2 == 1;
            out.add_term(s | sub, if sign_neg { &neg } else { c });
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SBasis {
    M,
    H,
    E,
    S,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sym {
    pub n: usize,
    pub basis: SBasis,
    pub coeffs: BTreeMap<Partition, LaurentPoly>,
}

impl Sym {
    pub fn zero(n: usize, basis: SBasis) -> Self {
        Sym {
            n,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis_element(lambda: Partition, basis: SBasis) -> Self {
        let mut out = Sym::zero(lambda.size(), basis);
        out.coeffs.insert(lambda, LaurentPoly::one());
        out
    }

    pub fn add_term(&mut self, lambda: &Partition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(lambda.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(lambda);
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> LaurentPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Sym) -> Sym {
        assert_eq!((self.n, self.basis), (other.n, other.basis));
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(l, c);
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Sym {
        let mut out = Sym::zero(self.n, self.basis);
        for (l, c) in &self.coeffs {
            out.add_term(l, &f(c));
        }
        out
    }

    pub fn specialize(&self, bindings: &[(crate::polyring::Var, Binding)]) -> Result<Sym> {
        let mut out = Sym::zero(self.n, self.basis);
        for (l, c) in &self.coeffs {
            out.add_term(l, &c.specialize(bindings)?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let basis = match self.basis {
            SBasis::M => "m",
            SBasis::H => "h",
            SBasis::E => "e",
            SBasis::S => "s",
        };
        let terms: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|(l, c)| serde_json::json!({"index": l.parts(), "coeff": c.to_string()}))
            .collect();
        serde_json::json!({"basis": basis, "degree": self.n, "terms": terms})
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.basis {
            SBasis::M => "m",
            SBasis::H => "h",
            SBasis::E => "e",
            SBasis::S => "s",
        };
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let items: Vec<String> = self
            .coeffs
            .iter()
            .map(|(l, c)| format!("{name}_{l} : {c}"))
            .collect();
        write!(f, "{}", items.join(", "))
    }
}

/// Converts an M-expansion to the m-basis after checking symmetry.
pub fn qsym_to_sym(f: &QSym) -> Result<Sym> {
    assert_eq!(f.basis, QBasis::M);
    let n = f.n;
    let mut out = Sym::zero(n, SBasis::M);
    let mut seen: HashMap<Partition, (Vec<usize>, LaurentPoly)> = HashMap::new();
    for s in 0..=full_mask(n) {
        if n == 0 && s > 0 {
            break;
        }
        let comp = subset_to_composition(n, s);
        let lam = Partition::from_unsorted(comp.clone());
        let c = f.coeff(s);
        match seen.get(&lam) {
            None => {
                seen.insert(lam.clone(), (comp, c.clone()));
                out.add_term(&lam, &c);
            }
            Some((first, c0)) if *c0 != c => {
                return Err(Error::NotSymmetric {
                    left: first.clone(),
                    left_coeff: c0.to_string(),
                    right: comp,
                    right_coeff: c.to_string(),
                });
            }
            Some(_) => {}
        }
    }
    Ok(out)
}

/// `m_λ = Σ M_α` over the distinct rearrangements `α` of `λ`.
pub fn sym_to_qsym(f: &Sym) -> QSym {
    assert_eq!(f.basis, SBasis::M);
    let mut out = QSym::zero(f.n, QBasis::M);
    for (lam, c) in &f.coeffs {
        let letters: Vec<u8> = lam.parts().iter().map(|&p| p as u8).collect();
        for comp in crate::words::multiset_permutations(&letters) {
            let comp: Vec<usize> = comp.iter().map(|&x| x as usize).collect();
            out.add_term(composition_to_subset(&comp), c);
        }
    }
    out
}

static KOSTKA: LazyLock<Mutex<HashMap<(Partition, Partition), u64>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Number of semistandard tableaux of skew shape `outer/inner` with content
/// `content` (entries `1, 2, …` placed as successive horizontal strips).
pub fn skew_kostka(outer: &Partition, inner: &Partition, content: &[usize]) -> u64 {
    fn strips(
        cur: &[usize],
        outer: &[usize],
        k: usize,
        r: usize,
        next: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if r == outer.len() {
            if k == 0 {
                out.push(next.clone());
            }
            return;
        }
        let lo = cur[r];
        let cap = if r == 0 {
            outer[0]
        } else {
            outer[r].min(cur[r - 1])
        };
        if cap < lo {
            return;
        }
        for add in 0..=(cap - lo).min(k) {
            next.push(lo + add);
            strips(cur, outer, k - add, r + 1, next, out);
            next.pop();
        }
    }
    fn rec(
        cur: Vec<usize>,
        outer: &[usize],
        content: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), u64>,
    ) -> u64 {
        if content.is_empty() {
            return u64::from(cur.as_slice() == outer);
        }
        let key = (cur.clone(), content.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut options = Vec::new();
        strips(&cur, outer, content[0], 0, &mut Vec::new(), &mut options);
        let total = options
            .into_iter()
            .map(|nxt| rec(nxt, outer, &content[1..], memo))
            .sum();
        memo.insert(key, total);
        total
    }
    if content.iter().sum::<usize>() + inner.size() != outer.size() {
        return 0;
    }
    let outer_v = outer.parts().to_vec();
    let mut cur = inner.parts().to_vec();
    cur.resize(outer_v.len(), 0);
    if inner.len() > outer.len() {
        return 0;
    }
    rec(cur, &outer_v, content, &mut HashMap::new())
}

/// Kostka number `K_{λ,μ}`, memoized.
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> u64 {
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = KOSTKA.lock().unwrap().get(&key) {
        return v;
    }
    let v = skew_kostka(lambda, &Partition::empty(), mu.parts());
    KOSTKA.lock().unwrap().insert(key, v);
    v
}

/// Schur expansion of an m-expansion by back-substitution in reverse
/// lexicographic order (which refines dominance).
pub fn m_to_s(f: &Sym) -> Sym {
    assert_eq!(f.basis, SBasis::M);
    let mut rem = f.coeffs.clone();
    let mut out = Sym::zero(f.n, SBasis::S);
    for lam in partitions_of(f.n) {
        let c = match rem.get(&lam) {
            Some(c) if !c.is_zero() => c.clone(),
            _ => continue,
        };
        for mu in partitions_of(f.n) {
            if mu < lam {
                continue;
            }
            let k = kostka_number(&lam, &mu);
            if k != 0 {
                let e = rem.entry(mu).or_default();
                *e -= &c.scale(&BigInt::from(k));
            }
        }
        out.add_term(&lam, &c);
    }
    debug_assert!(rem.values().all(|c| c.is_zero()));
    out
}

pub fn s_to_m(f: &Sym) -> Sym {
    assert_eq!(f.basis, SBasis::S);
    let mut out = Sym::zero(f.n, SBasis::M);
    for (lam, c) in &f.coeffs {
        for mu in partitions_of(f.n) {
            let k = kostka_number(lam, &mu);
            if k != 0 {
                out.add_term(&mu, &c.scale(&BigInt::from(k)));
            }
        }
    }
    out
}

/// F-expansion to Schur expansion, verifying symmetry on the way.
pub fn to_schur(f: &QSym) -> Result<Sym> {
    Ok(m_to_s(&qsym_to_sym(&f_to_m(f))?))
}

/// Schur expansion back to the F basis.
pub fn schur_to_f(s: &Sym) -> QSym {
    m_to_f(&sym_to_qsym(&s_to_m(s)))
}

/// A negative `(λ, monomial, coefficient)` term, if any.
pub type PositivityWitness = (Partition, Monomial, BigInt);

pub fn schur_positive(f: &Sym) -> (bool, Option<PositivityWitness>) {
    assert_eq!(f.basis, SBasis::S);
    for (lam, c) in &f.coeffs {
        if let Some((m, v)) = c.terms().find(|(_, v)| v.is_negative()) {
            return (false, Some((lam.clone(), m.clone(), v.clone())));
        }
    }
    (true, None)
}

/// Number of nonnegative integer matrices with the given row and column sums.
fn count_matrices(rows: &[usize], cols: &[usize]) -> u64 {
    fn rec(
        rows: &[usize],
        cols: &mut Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), u64>,
    ) -> u64 {
        let Some((&r, rest)) = rows.split_first() else {
            return u64::from(cols.iter().all(|&c| c == 0));
        };
        let key = (rows.len(), cols.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        fn distribute(
            k: usize,
            r: usize,
            rest: &[usize],
            cols: &mut Vec<usize>,
            memo: &mut HashMap<(usize, Vec<usize>), u64>,
        ) -> u64 {
            if k == cols.len() {
                return if r == 0 { rec(rest, cols, memo) } else { 0 };
            }
            let mut total = 0;
            for x in 0..=r.min(cols[k]) {
                cols[k] -= x;
                total += distribute(k + 1, r - x, rest, cols, memo);
                cols[k] += x;
            }
            total
        }
        let v = distribute(0, r, rest, cols, memo);
        memo.insert(key, v);
        v
    }
    rec(rows, &mut cols.to_vec(), &mut HashMap::new())
}

/// `h_λ` in the m-basis: `[m_μ] h_λ` counts matrices with row sums `λ` and
/// column sums `μ`.
pub fn h_lambda_expansion(lambda: &Partition) -> Sym {
    let n = lambda.size();
    let mut out = Sym::zero(n, SBasis::M);
    for mu in partitions_of(n) {
        let c = count_matrices(lambda.parts(), mu.parts());
        out.add_term(&mu, &LaurentPoly::constant(c as i64));
    }
    out
}

/// `ω` on the F basis: `F_S ↦ F_{S*}` with `S* = {n - i : i ∈ [n-1] ∖ S}`.
pub fn omega_on_f(f: &QSym) -> QSym {
    assert_eq!(f.basis, QBasis::F);
    let n = f.n;
    let mut out = QSym::zero(n, QBasis::F);
    for (&s, c) in &f.coeffs {
        let mut star = 0u32;
        for i in 1..n {
            if s >> (i - 1) & 1 == 0 {
                star |= 1 << (n - i - 1);
            }
        }
        out.add_term(star, c);
    }
    out
}

/// Quasi-shuffles of two compositions.
fn quasi_shuffles(a: &[usize], b: &[usize]) -> Vec<Vec<usize>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for (head, ra, rb) in [
        (a[0], &a[1..], b),
        (b[0], a, &b[1..]),
        (a[0] + b[0], &a[1..], &b[1..]),
    ] {
        for mut tail in quasi_shuffles(ra, rb) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Product of two M-expansions.
pub fn qsym_mul_m(x: &QSym, y: &QSym) -> QSym {
    assert_eq!((x.basis, y.basis), (QBasis::M, QBasis::M));
    let n = x.n + y.n;
    let mut out = QSym::zero(n, QBasis::M);
    for (&s, c) in &x.coeffs {
        let a = subset_to_composition(x.n, s);
        for (&t, d) in &y.coeffs {
            let b = subset_to_composition(y.n, t);
            let cd = c * d;
            for comp in quasi_shuffles(&a, &b) {
                out.add_term(composition_to_subset(&comp), &cd);
            }
        }
    }
    out
}

/// Skew Schur function `s_{outer/inner}` in the m-basis, from skew Kostka numbers.
pub fn skew_schur_m(outer: &Partition, inner: &Partition) -> Sym {
    let n = outer.size() - inner.size();
    let mut out = Sym::zero(n, SBasis::M);
    for mu in partitions_of(n) {
        let k = skew_kostka(outer, inner, mu.parts());
        out.add_term(&mu, &LaurentPoly::constant(k as i64));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::poly;
    use crate::words::vec_to_subset;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn fsym(n: usize, terms: &[(&[usize], &str)]) -> QSym {
        let mut f = QSym::zero(n, QBasis::F);
        for (s, c) in terms {
            f.add_term(vec_to_subset(s), &poly(c));
        }
        f
    }

    #[test]
    fn f_to_m_examples() {
        let m = f_to_m(&fsym(2, &[(&[], "1")]));
        assert_eq!(m.coeffs.len(), 2);
        let m = f_to_m(&fsym(3, &[(&[1], "1"), (&[2], "1")]));
        assert_eq!(m.coeff(vec_to_subset(&[1])), poly("1"));
        assert_eq!(m.coeff(vec_to_subset(&[2])), poly("1"));
        assert_eq!(m.coeff(vec_to_subset(&[1, 2])), poly("2"));
        let h = fsym(
            3,
            &[
                (&[], "1"),
                (&[1], "q + alpha"),
                (&[2], "q + alpha"),
                (&[1, 2], "q*alpha"),
            ],
        );
        let m = f_to_m(&h);
        assert_eq!(m.coeff(0), poly("1"));
        assert_eq!(m.coeff(1), poly("1 + q + alpha"));
        assert_eq!(m.coeff(2), poly("1 + q + alpha"));
        assert_eq!(m.coeff(3), poly("1 + 2*q + 2*alpha + q*alpha"));
        assert_eq!(m_to_f(&m), h);
    }

    #[test]
    fn symmetry_detection() {
        let mut all = QSym::zero(3, QBasis::M);
        for s in 0..4 {
            all.add_term(s, &poly("1"));
        }
        let sym = qsym_to_sym(&all).unwrap();
        assert_eq!(sym.coeffs.len(), 3);
        assert!(sym.coeffs.values().all(|c| *c == poly("1")));
        let mut lone = QSym::zero(3, QBasis::M);
        lone.add_term(1, &poly("1"));
        assert!(matches!(
            qsym_to_sym(&lone),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn schur_conversions() {
        let mut m = Sym::zero(3, SBasis::M);
        m.add_term(&p("2,1"), &poly("1"));
        m.add_term(&p("1,1,1"), &poly("2"));
        assert_eq!(m_to_s(&m), Sym::basis_element(p("2,1"), SBasis::S));
        let h11 = h_lambda_expansion(&p("1,1"));
        let s = m_to_s(&h11);
        assert_eq!(s.coeff(&p("2")), poly("1"));
        assert_eq!(s.coeff(&p("1,1")), poly("1"));
        for n in 1..=7 {
            for lam in partitions_of(n) {
                let e = Sym::basis_element(lam.clone(), SBasis::S);
                assert_eq!(m_to_s(&s_to_m(&e)), e);
            }
        }
    }

    #[test]
    fn random_round_trip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 1..=8 {
            let mut e = Sym::zero(n, SBasis::S);
            for lam in partitions_of(n) {
                if rng.gen_bool(0.5) {
                    let c = LaurentPoly::constant(rng.gen_range(-3..4))
                        .mul_mono(&Monomial::q_t(rng.gen_range(-2..3), rng.gen_range(0..3)));
                    e.add_term(&lam, &c);
                }
            }
            assert_eq!(m_to_s(&s_to_m(&e)), e);
        }
    }

    #[test]
    fn positivity() {
        let mut f = Sym::zero(2, SBasis::S);
        f.add_term(&p("2"), &poly("1"));
        f.add_term(&p("1,1"), &poly("q"));
        assert!(schur_positive(&f).0);
        let mut g = Sym::zero(2, SBasis::S);
        g.add_term(&p("2"), &poly("1"));
        g.add_term(&p("1,1"), &poly("-1"));
        let (ok, wit) = schur_positive(&g);
        assert!(!ok);
        let (lam, m, c) = wit.unwrap();
        assert_eq!((lam, m.is_one(), c), (p("1,1"), true, BigInt::from(-1)));
    }

    #[test]
    fn h_expansions() {
        assert_eq!(
            h_lambda_expansion(&p("1")),
            Sym::basis_element(p("1"), SBasis::M)
        );
        let h2 = h_lambda_expansion(&p("2"));
        assert_eq!(h2.coeff(&p("2")), poly("1"));
        assert_eq!(h2.coeff(&p("1,1")), poly("1"));
        let h = h_lambda_expansion(&p("2,1,1"));
        // [m_{1111}] h_{211} = 4!/2!.
        assert_eq!(h.coeff(&p("1,1,1,1")), poly("12"));
        assert_eq!(h.coeff(&p("4")), poly("1"));
        assert_eq!(h.coeff(&p("3,1")), poly("3"));
    }

    #[test]
    fn omega_checks() {
        let f = fsym(3, &[(&[], "1")]);
        assert_eq!(omega_on_f(&f), fsym(3, &[(&[1, 2], "1")]));
        for n in 1..=7 {
            for s in 0..=full_mask(n) {
                let mut x = QSym::zero(n, QBasis::F);
                x.add_term(s, &poly("1"));
                assert_eq!(omega_on_f(&omega_on_f(&x)), x);
            }
        }
        for n in 1..=6 {
            for lam in partitions_of(n) {
                let s = schur_to_f(&Sym::basis_element(lam.clone(), SBasis::S));
                let w = to_schur(&omega_on_f(&s)).unwrap();
                assert_eq!(w, Sym::basis_element(lam.conjugate(), SBasis::S), "{lam}");
            }
        }
    }

    #[test]
    fn pieri_for_fundamentals() {
        // Σ_{w : std(w|_A) = v} F_{iDes(w)} = h_1^k F_{iDes(v)} for A ⊆ [k+m].
        use crate::words::{ides_fast, permutations, restrict_positions, standardize};
        for m in 1..=4usize {
            for k in 0..=3usize {
                let n = k + m;
                let h1 = {
                    let mut x = QSym::zero(1, QBasis::M);
                    x.add_term(0, &poly("1"));
                    x
                };
                let all = permutations(n);
                for a_mask in 0u32..(1 << n) {
                    if a_mask.count_ones() as usize != m {
                        continue;
                    }
                    let positions: Vec<usize> = (0..n)
                        .filter(|i| a_mask >> i & 1 == 1)
                        .map(|i| i + 1)
                        .collect();
                    let mut lhs: HashMap<Vec<u8>, QSym> = HashMap::new();
                    for w in &all {
                        lhs.entry(standardize(&restrict_positions(w, &positions)))
                            .or_insert_with(|| QSym::zero(n, QBasis::F))
                            .add_term(ides_fast(w), &poly("1"));
                    }
                    for v in permutations(m) {
                        let mut rhs = {
                            let mut x = QSym::zero(m, QBasis::F);
                            x.add_term(ides_fast(&v), &poly("1"));
                            f_to_m(&x)
                        };
                        for _ in 0..k {
                            rhs = qsym_mul_m(&rhs, &h1);
                        }
                        assert_eq!(f_to_m(&lhs[&v]), rhs, "A={positions:?} v={v:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn skew_schur_products() {
        // s_1 * s_1 = s_2 + s_11
        let s1 = sym_to_qsym(&skew_schur_m(&p("1"), &Partition::empty()));
        let prod = qsym_to_sym(&qsym_mul_m(&s1, &s1)).unwrap();
        let s = m_to_s(&prod);
        assert_eq!(s.coeff(&p("2")), poly("1"));
        assert_eq!(s.coeff(&p("1,1")), poly("1"));
        // s_{21/1} = s_1^2
        assert_eq!(m_to_s(&skew_schur_m(&p("2,1"), &p("1"))), s);
    }
}

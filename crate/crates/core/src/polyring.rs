//! Exact Laurent monomials and integer Laurent polynomials.
//!
//! The variable alphabet is the fixed ordered registry
//! `q < t < alpha < beta < a_1 < a_2 < … < b_1 < b_2 < …`; the derived
//! ordering of [`Var`] is the registry order. Monomials compare in graded
//! lexicographic order, which is a group order on exponent vectors and
//! therefore compatible with multiplication.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    Q,
    T,
    Alpha,
    Beta,
    /// Generic filling symbol `a_i`.
    A(u8),
    /// Generic filling symbol `b_i`.
    B(u8),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Q => write!(f, "q"),
            Var::T => write!(f, "t"),
            Var::Alpha => write!(f, "alpha"),
            Var::Beta => write!(f, "beta"),
            Var::A(i) => write!(f, "a_{i}"),
            Var::B(i) => write!(f, "b_{i}"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        let indexed = |rest: &str| -> Result<u8> {
            let rest = rest.strip_prefix('_').unwrap_or(rest);
            rest.parse::<u8>()
                .ok()
                .filter(|&i| i > 0)
                .ok_or_else(|| Error::Parse(format!("bad variable index in {s:?}")))
        };
        match s {
            "q" => Ok(Var::Q),
            "t" => Ok(Var::T),
            "alpha" | "α" => Ok(Var::Alpha),
            "beta" | "β" => Ok(Var::Beta),
            _ if s.starts_with('a') => Ok(Var::A(indexed(&s[1..])?)),
            _ if s.starts_with('b') => Ok(Var::B(indexed(&s[1..])?)),
            _ => Err(Error::Parse(format!("unknown variable {s:?}"))),
        }
    }
}

/// A Laurent monomial: sorted `(variable, exponent)` pairs, no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Var, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn pow(v: Var, e: i32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn q_t(qe: i32, te: i32) -> Self {
        Monomial::pow(Var::Q, qe).mul(&Monomial::pow(Var::T, te))
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, i32)>) -> Self {
        let mut acc: BTreeMap<Var, i32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_insert(0) += e;
        }
        Monomial(acc.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, e)| e)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    pub fn powi(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// Renames variables; colliding images have their exponents added.
    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, e)), None) => return e.cmp(&0),
                (None, Some(&(_, e))) => return 0.cmp(&e),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Monomial> {
        let s = s.trim();
        if s == "1" {
            return Ok(Monomial::one());
        }
        let mut pairs = Vec::new();
        for factor in s.split('*') {
            let factor = factor.trim();
            let (name, e) = match factor.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .trim_start_matches('(')
                        .trim_end_matches(')')
                        .parse::<i32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            pairs.push((name.parse::<Var>()?, e));
        }
        Ok(Monomial::from_pairs(pairs))
    }
}

/// Value substituted for a variable by [`LaurentPoly::specialize`].
#[derive(Clone, Debug)]
pub enum Binding {
    Int(i64),
    Mono(Monomial),
}

/// A Laurent polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::from_mono(Monomial::one())
    }

    pub fn constant(c: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(Monomial::one(), BigInt::from(c));
        p
    }

    pub fn from_mono(m: Monomial) -> Self {
        let mut p = LaurentPoly::zero();
        p.terms.insert(m, BigInt::one());
        p
    }

    pub fn var(v: Var) -> Self {
        LaurentPoly::from_mono(Monomial::var(v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_count(&mut self, m: Monomial, c: u64) {
        self.add_term(m, BigInt::from(c));
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn mul_mono(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// The single monomial of a one-term polynomial with coefficient 1.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.map_vars(&f), c.clone());
        }
        out
    }

    /// Exchanges `q` and `t`.
    pub fn swap_qt(&self) -> LaurentPoly {
        self.map_vars(|v| match v {
            Var::Q => Var::T,
            Var::T => Var::Q,
            w => w,
        })
    }

    /// Exact quotient `self / den`, or `NotDivisible`.
    ///
    /// Leading-term division in the graded lex order. Exponents of any
    /// quotient term of `x` are confined to
    /// `[min_x(num) - min_x(den), max_x(num) - max_x(den)]`, which bounds the
    /// loop when no exact quotient exists.
    pub fn divide_exact(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        let (lead_m, lead_c) = den
            .leading()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or_else(|| Error::NotDivisible("division by zero".into()))?;
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let num_range = self.exponent_ranges();
        let den_range = den.exponent_ranges();
        let bounds: BTreeMap<Var, (i32, i32)> = num_range
            .keys()
            .chain(den_range.keys())
            .map(|&v| {
                let (nl, nh) = num_range.get(&v).copied().unwrap_or((0, 0));
                let (dl, dh) = den_range.get(&v).copied().unwrap_or((0, 0));
                (v, (nl - dl, nh - dh))
            })
            .collect();
        let fail = || Error::NotDivisible(format!("({self}) / ({den})"));
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(&lead_m);
            let in_bounds = bounds.iter().all(|(&v, &(lo, hi))| {
                let e = qm.exp(v);
                lo <= e && e <= hi
            }) && qm.exponents().iter().all(|(v, _)| bounds.contains_key(v));
            if !in_bounds || !(c % &lead_c).is_zero() {
                return Err(fail());
            }
            let qc = c / &lead_c;
            rem = &rem - &den.mul_mono(&qm).scale(&qc);
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    fn exponent_ranges(&self) -> BTreeMap<Var, (i32, i32)> {
        let vars: std::collections::BTreeSet<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.exponents().iter().map(|&(v, _)| v))
            .collect();
        vars.into_iter()
            .map(|v| {
                let es = self.terms.keys().map(|m| m.exp(v));
                let lo = es.clone().min().unwrap_or(0);
                let hi = es.max().unwrap_or(0);
                (v, (lo, hi))
            })
            .collect()
    }

    /// Substitutes integers or monomials for variables.
    pub fn specialize(&self, bindings: &[(Var, Binding)]) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mono = Monomial::one();
            for &(v, e) in m.exponents() {
                match bindings.iter().find(|(w, _)| *w == v) {
                    None => mono = mono.mul(&Monomial::pow(v, e)),
                    Some((_, Binding::Mono(b))) => mono = mono.mul(&b.powi(e)),
                    Some((_, Binding::Int(k))) => {
                        let k = *k;
                        if e < 0 && k == 0 {
                            return Err(Error::ZeroToNegativePower(v.to_string()));
                        }
                        if e < 0 && k.abs() != 1 {
                            return Err(Error::NonIntegralSubstitution(v.to_string()));
                        }
                        coeff *= num_traits::pow(BigInt::from(k), e.unsigned_abs() as usize);
                    }
                }
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }

    /// Value at `q = t = … = 1` of every variable.
    pub fn eval_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn to_i64_constant(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                if m.is_one() {
                    c.to_i64()
                } else {
                    None
                }
            }
            _ => None,
        }
    }
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        LaurentPoly::from_mono(m)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts `term (('+'|'-') term)*` with `term := [int] ['*'] [mono]`.
    fn from_str(s: &str) -> Result<LaurentPoly> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = LaurentPoly::zero();
        let bytes: Vec<char> = compact.chars().collect();
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (idx, &ch) in bytes.iter().enumerate() {
            let after_caret = idx > 0 && bytes[idx - 1] == '^';
            let at_term_start = cur.is_empty();
            if (ch == '+' || ch == '-') && !after_caret {
                if at_term_start {
                    if ch == '-' {
                        neg = !neg;
                    }
                    continue;
                }
                pieces.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
                continue;
            }
            cur.push(ch);
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        pieces.push((neg, cur));
        for (neg, term) in pieces {
            let digits: String = term.chars().take_while(|c| c.is_ascii_digit()).collect();
            let rest = term[digits.len()..].trim_start_matches('*');
            let coeff = if digits.is_empty() {
                BigInt::one()
            } else {
                digits
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?
            };
            let mono = if rest.is_empty() {
                Monomial::one()
            } else {
                rest.parse::<Monomial>()?
            };
            out.add_term(mono, if neg { -coeff } else { coeff });
        }
        Ok(out)
    }
}

pub fn q() -> Monomial {
    Monomial::var(Var::Q)
}

pub fn t() -> Monomial {
    Monomial::var(Var::T)
}

pub fn alpha() -> Monomial {
    Monomial::var(Var::Alpha)
}

pub fn beta() -> Monomial {
    Monomial::var(Var::Beta)
}

pub fn a(i: usize) -> Monomial {
    Monomial::var(Var::A(i as u8))
}

pub fn b(i: usize) -> Monomial {
    Monomial::var(Var::B(i as u8))
}

/// Parses a polynomial, panicking on malformed input. For literals in tests.
pub fn poly(s: &str) -> LaurentPoly {
    s.parse()
        .unwrap_or_else(|e| panic!("bad polynomial {s:?}: {e}"))
}

/// Parses a monomial, panicking on malformed input.
pub fn mono(s: &str) -> Monomial {
    s.parse()
        .unwrap_or_else(|e| panic!("bad monomial {s:?}: {e}"))
}

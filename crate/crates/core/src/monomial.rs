//! Monomials, monomial ideals, and the coinvariant algebra `S/nS` of a
//! diagonal abelian action, where `n` is the ideal of positive-degree
//! invariants.
//!
//! Every monomial is a weight vector for a diagonal action, so the invariant
//! ideal is monomial and the coinvariant algebra has a canonical monomial
//! basis. No Groebner machinery is needed anywhere.
//!
//! Canonical order: graded lexicographic with `x1 > x2 > ... > xn`. Listings
//! are ascending in this order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group_rep::{ActionData, Character, Weighted};
use crate::linalg::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    /// The variable `x_{i+1}` (zero-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| {
            Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    /// All monomials of total degree `d` in `nvars` variables, ascending.
    pub fn of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(prefix: &mut Vec<u32>, left: usize, d: u32, out: &mut Vec<Monomial>) {
            if left == 1 {
                prefix.push(d);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for a in 0..=d {
                prefix.push(a);
                rec(prefix, left - 1, d - a, out);
                prefix.pop();
            }
        }
        let mut out = vec![];
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial(vec![]));
            }
            return out;
        }
        rec(&mut vec![], nvars, d, &mut out);
        out
    }

    pub fn parse(nvars: usize, text: &str) -> Result<Monomial> {
        let p = Polynomial::parse(nvars, text)?;
        match p.terms.iter().next() {
            Some((m, c)) if p.terms.len() == 1 && c.is_one() => Ok(m.clone()),
            _ => Err(Error::parse(0, format!("'{}' is not a monomial", text.trim()))),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| match a {
                1 => format!("x{}", i + 1),
                a => format!("x{}^{a}", i + 1),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Weighted for Monomial {
    fn weight(&self, action: &ActionData) -> Result<Character> {
        action.weight_of_monomial(&self.0)
    }
}

/// A monomial ideal, kept as its sorted antichain of minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::arg(format!(
                "generator {g} has {} variables, expected {nvars}",
                g.nvars()
            )));
        }
        Ok(Self {
            nvars,
            gens: minimalize(gens),
        })
    }

    pub fn parse(nvars: usize, text: &str) -> Result<Self> {
        let gens = split_top_level(text)
            .into_iter()
            .map(|(at, g)| {
                Monomial::parse(nvars, g).map_err(|e| shift_parse(e, at))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(nvars, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Sorted antichain of the divisibility-minimal elements.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = vec![];
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Splits a comma separated list, returning byte offsets with each piece.
pub(crate) fn split_top_level(text: &str) -> Vec<(usize, &str)> {
    let mut out = vec![];
    let mut start = 0;
    for (i, c) in text.char_indices() {
        if c == ',' {
            out.push((start, &text[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &text[start..]));
    out
}

pub(crate) fn shift_parse(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        e => e,
    }
}

/// A polynomial with rational coefficients, stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.is_one())
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        let e = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Parses sums of terms such as `x1^2 - 3/2*x1*x2 + 1`. Variables are
    /// `x1, x2, ...`; for up to three variables `x, y, z` are accepted too.
    pub fn parse(nvars: usize, text: &str) -> Result<Polynomial> {
        let mut p = Polynomial::zero(nvars);
        let mut sign_neg = false;
        let mut start = 0;
        let mut saw_term = false;
        let bytes = text.as_bytes();
        let mut pieces: Vec<(usize, bool, &str)> = vec![];
        for (i, &b) in bytes.iter().enumerate() {
            if b == b'+' || b == b'-' {
                let prev = text[..i].trim_end();
                let after_op = prev.ends_with('^') || prev.ends_with('/') || prev.ends_with('*');
                if after_op {
                    continue;
                }
                if text[start..i].trim().is_empty() {
                    if b == b'-' {
                        sign_neg = !sign_neg;
                    }
                } else {
                    pieces.push((start, sign_neg, &text[start..i]));
                    saw_term = true;
                    sign_neg = b == b'-';
                }
                start = i + 1;
            }
        }
        if text[start..].trim().is_empty() {
            return Err(Error::parse(
                start,
                if saw_term { "dangling sign" } else { "empty polynomial" },
            ));
        }
        pieces.push((start, sign_neg, &text[start..]));
        for (at, neg, raw) in pieces {
            let (m, c) = parse_term(nvars, raw, at)?;
            p.add_term(m, if neg { -c } else { c });
        }
        Ok(p)
    }
}

fn parse_term(nvars: usize, raw: &str, at: usize) -> Result<(Monomial, Rational)> {
    let mut exps = vec![0u32; nvars];
    let mut coef = Rational::one();
    let mut offset = at;
    for factor in raw.split('*') {
        let lead = factor.len() - factor.trim_start().len();
        let pos = offset + lead;
        let f = factor.trim();
        offset += factor.len() + 1;
        if f.is_empty() {
            return Err(Error::parse(pos, "empty factor"));
        }
        let first = f.chars().next().unwrap_or(' ');
        if first.is_ascii_digit() {
            coef *= parse_rational_token(f, pos)?;
            continue;
        }
        let (name, power) = match f.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(pos, format!("bad exponent in '{f}'")))?;
                (n.trim(), e)
            }
            None => (f, 1),
        };
        let idx = variable_index(name, nvars).ok_or_else(|| {
            Error::parse(pos, format!("unknown variable '{name}' for {nvars} variables"))
        })?;
        exps[idx] += power;
    }
    Ok((Monomial(exps), coef))
}

fn parse_rational_token(s: &str, pos: usize) -> Result<Rational> {
    let bad = || Error::parse(pos, format!("bad number '{s}'"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: num_bigint::BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::parse(pos, "zero denominator"));
    }
    Ok(Rational::new(n, d))
}

fn variable_index(name: &str, nvars: usize) -> Option<usize> {
    let idx = match name {
        "x" if nvars <= 3 => 0,
        "y" if nvars <= 3 => 1,
        "z" if nvars <= 3 => 2,
        _ => name.strip_prefix('x')?.parse::<usize>().ok()?.checked_sub(1)?,
    };
    (idx < nvars).then_some(idx)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mag = c.abs();
            let body = match (m.is_one(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => m.to_string(),
                (false, false) => format!("{mag}*{m}"),
            };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl Weighted for Polynomial {
    fn weight(&self, action: &ActionData) -> Result<Character> {
        let mut w: Option<Character> = None;
        for m in self.terms.keys() {
            let c = action.weight_of_monomial(m.exponents())?;
            match &w {
                None => w = Some(c),
                Some(prev) if *prev != c => {
                    return Err(Error::arg(format!("{self} mixes characters {prev} and {c}")))
                }
                _ => {}
            }
        }
        w.ok_or_else(|| Error::arg("the zero vector has no weight"))
    }
}

/// Minimal monomial generators of the ideal generated by positive-degree
/// invariants. Minimal generators have degree at most `|G|`: in a longer
/// invariant word two partial weight sums repeat, exposing a shorter
/// invariant factor.
pub fn invariant_generators(action: &ActionData) -> Vec<Monomial> {
    let n = action.num_variables();
    let bound = action.group().order() as u32;
    let mut gens: Vec<Monomial> = vec![];
    for d in 1..=bound {
        for m in Monomial::of_degree(n, d) {
            if gens.iter().any(|g| g.divides(&m)) {
                continue;
            }
            if action
                .weight_of_monomial(m.exponents())
                .is_ok_and(|w| w.is_trivial())
            {
                gens.push(m);
            }
        }
    }
    gens.sort();
    gens
}

/// Upper bound on the coinvariant basis size before giving up.
pub const COINVARIANT_CAP: usize = 250_000;

/// The finite-dimensional algebra `S/nS` with its monomial basis.
#[derive(Clone, Debug)]
pub struct CoinvariantAlgebra {
    action: ActionData,
    invariant_gens: Vec<Monomial>,
    basis: Vec<Monomial>,
    weights: Vec<Character>,
    index: HashMap<Monomial, usize>,
    // dim x dim, row-major
    mult: Vec<Option<usize>>,
}

impl CoinvariantAlgebra {
    pub fn new(action: &ActionData) -> Result<Self> {
        let invariant_gens = invariant_generators(action);
        let ideal = MonomialIdeal::new(action.num_variables(), invariant_gens.clone())?;
        let basis = match quotient_staircase(&ideal, COINVARIANT_CAP) {
            Staircase::Finite(b) => b,
            Staircase::Infinite => {
                return Err(Error::Internal(format!(
                    "coinvariant basis exceeds {COINVARIANT_CAP} monomials for generators {ideal}"
                )))
            }
        };
        let weights = basis
            .iter()
            .map(|m| m.weight(action))
            .collect::<Result<Vec<_>>>()?;
        let index: HashMap<Monomial, usize> =
            basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let dim = basis.len();
        let mut mult = vec![None; dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let p = index.get(&basis[i].mul(&basis[j])).copied();
                mult[i * dim + j] = p;
                mult[j * dim + i] = p;
            }
        }
        Ok(Self {
            action: action.clone(),
            invariant_gens,
            basis,
            weights,
            index,
            mult,
        })
    }

    pub fn action(&self) -> &ActionData {
        &self.action
    }

    pub fn invariant_gens(&self) -> &[Monomial] {
        &self.invariant_gens
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn weights(&self) -> &[Character] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> &Character {
        &self.weights[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Index of `basis[i] * basis[j]`, or `None` when the product vanishes.
    pub fn mult(&self, i: usize, j: usize) -> Option<usize> {
        self.mult[i * self.dim() + j]
    }

    /// Basis index of the monomial `m * basis[i]`, if it survives.
    pub fn mul_monomial(&self, m: &Monomial, i: usize) -> Option<usize> {
        self.index_of(&m.mul(&self.basis[i]))
    }

    /// Multiplies a coordinate vector by the monomial `m`.
    pub fn mul_monomial_vec<F: crate::linalg::Field>(&self, m: &Monomial, v: &[F], ctx: &F::Ctx) -> Vec<F> {
        let mut out = vec![F::zero_in(ctx); self.dim()];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero_elem() {
                continue;
            }
            if let Some(k) = self.mul_monomial(m, i) {
                out[k] = out[k].add(c);
            }
        }
        out
    }

    /// Indices of the basis elements of each character.
    pub fn components(&self) -> BTreeMap<Character, Vec<usize>> {
        let mut out: BTreeMap<Character, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.weights.iter().enumerate() {
            out.entry(w.clone()).or_default().push(i);
        }
        out
    }

    /// Coordinates of a polynomial's image in `S/nS`.
    pub fn coordinates(&self, p: &Polynomial) -> Result<Vec<Rational>> {
        if p.nvars() != self.action.num_variables() {
            return Err(Error::arg("polynomial has the wrong number of variables"));
        }
        let mut v = vec![Rational::zero(); self.dim()];
        for (m, c) in p.terms() {
            if let Some(i) = self.index_of(m) {
                v[i] += c;
            }
        }
        Ok(v)
    }
}

pub fn coinvariant_algebra(action: &ActionData) -> Result<CoinvariantAlgebra> {
    CoinvariantAlgebra::new(action)
}

/// The relation `left * e_i - right * e_j` between generators `i < j`, where
/// `left = lcm / g_i` and `right = lcm / g_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaylorRelation {
    pub i: usize,
    pub j: usize,
    pub left: Monomial,
    pub right: Monomial,
}

pub fn taylor_syzygies(ideal: &MonomialIdeal) -> Vec<TaylorRelation> {
    let g = ideal.gens();
    let mut out = vec![];
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let l = g[i].lcm(&g[j]);
            out.push(TaylorRelation {
                i,
                j,
                left: l.div(&g[i]).expect("g_i divides lcm"),
                right: l.div(&g[j]).expect("g_j divides lcm"),
            });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Staircase {
    Finite(Vec<Monomial>),
    Infinite,
}

/// Monomials outside the ideal, ascending, or `Infinite` once more than
/// `cap` have been found.
pub fn quotient_staircase(ideal: &MonomialIdeal, cap: usize) -> Staircase {
    let n = ideal.nvars();
    let one = Monomial::one(n);
    if ideal.contains(&one) {
        return Staircase::Finite(vec![]);
    }
    let mut out = vec![one.clone()];
    let mut layer = BTreeSet::from([one]);
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for m in &layer {
            for i in 0..n {
                let p = m.mul_var(i);
                if !ideal.contains(&p) {
                    next.insert(p);
                }
            }
        }
        out.extend(next.iter().cloned());
        if out.len() > cap {
            return Staircase::Infinite;
        }
        layer = next;
    }
    Staircase::Finite(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_rep::isotypical_split;
    use crate::linalg::rat;

    fn mono(n: usize, s: &str) -> Monomial {
        Monomial::parse(n, s).unwrap()
    }

    fn monos(n: usize, s: &[&str]) -> Vec<Monomial> {
        s.iter().map(|t| mono(n, t)).collect()
    }

    #[test]
    fn ordering_is_graded_lex() {
        let v = monos(2, &["x^2", "1", "y", "x*y", "x", "y^2"]);
        let mut s = v.clone();
        s.sort();
        assert_eq!(s, monos(2, &["1", "y", "x", "y^2", "x*y", "x^2"]));
    }

    #[test]
    fn monomial_text() {
        assert_eq!(mono(3, "x1^2*x3").to_string(), "x1^2*x3");
        assert_eq!(mono(2, "1").to_string(), "1");
        assert_eq!(mono(2, "y*x*y"), Monomial::new(vec![1, 2]));
        assert!(Monomial::parse(2, "x3").is_err());
        assert!(Monomial::parse(2, "2*x").is_err());
        assert!(matches!(
            Monomial::parse(2, "x^q"),
            Err(Error::Parse { pos: 0, .. })
        ));
    }

    #[test]
    fn polynomial_text() {
        let p = Polynomial::parse(2, "x^2 - 3/2*x*y + 1").unwrap();
        assert_eq!(p.to_string(), "x1^2 - 3/2*x1*x2 + 1");
        assert_eq!(Polynomial::parse(2, &p.to_string()).unwrap(), p);
        assert!(Polynomial::parse(2, "x +").is_err());
        assert!(Polynomial::parse(2, "x + x - 2*x").unwrap().is_zero());
    }

    #[test]
    fn invariant_generator_examples() {
        let a = ActionData::cyclic(2, &[1, 1]).unwrap();
        assert_eq!(invariant_generators(&a), monos(2, &["y^2", "x*y", "x^2"]));
        let b = ActionData::cyclic(3, &[1, 2]).unwrap();
        assert_eq!(invariant_generators(&b), monos(2, &["x*y", "y^3", "x^3"]));
        let t = ActionData::cyclic(1, &[0]).unwrap();
        assert_eq!(invariant_generators(&t), vec![Monomial::var(1, 0)]);
    }

    #[test]
    fn coinvariant_examples() {
        let a = coinvariant_algebra(&ActionData::cyclic(2, &[1, 1]).unwrap()).unwrap();
        assert_eq!(a.basis(), monos(2, &["1", "y", "x"]).as_slice());
        let b = coinvariant_algebra(&ActionData::cyclic(3, &[1, 2]).unwrap()).unwrap();
        assert_eq!(b.dim(), 5);
        assert_eq!(b.basis(), monos(2, &["1", "y", "x", "y^2", "x^2"]).as_slice());
        let x = b.index_of(&mono(2, "x")).unwrap();
        let x2 = b.index_of(&mono(2, "x^2")).unwrap();
        let y = b.index_of(&mono(2, "y")).unwrap();
        assert_eq!(b.mult(x, x), Some(x2));
        assert_eq!(b.mult(x, y), None);
        assert_eq!(b.mult(x2, x), None);
        for r in 2..=7u32 {
            let c = coinvariant_algebra(&ActionData::cyclic(r, &[1, r as i64 - 1]).unwrap()).unwrap();
            assert_eq!(c.dim(), 2 * r as usize - 1);
        }
    }

    #[test]
    fn coinvariant_polynomial_coordinates() {
        let b = coinvariant_algebra(&ActionData::cyclic(3, &[1, 2]).unwrap()).unwrap();
        let p = Polynomial::parse(2, "x*y + 2*x - y^2 + x^3").unwrap();
        let v = b.coordinates(&p).unwrap();
        assert_eq!(v, vec![rat(0), rat(0), rat(2), rat(-1), rat(0)]);
    }

    #[test]
    fn isotypical_split_examples() {
        let a = ActionData::cyclic(2, &[1, 1]).unwrap();
        let parts = isotypical_split(&a, &monos(2, &["1", "x", "y"])).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[&a.group().zero()], monos(2, &["1"]));
        assert_eq!(parts[&a.group().reduce(&[1]).unwrap()], monos(2, &["x", "y"]));

        let b = ActionData::cyclic(3, &[1, 2]).unwrap();
        let basis = monos(2, &["1", "x", "x^2", "y", "y^2"]);
        let parts = isotypical_split(&b, &basis).unwrap();
        let ch = |k| b.group().reduce(&[k]).unwrap();
        assert_eq!(parts[&ch(0)], monos(2, &["1"]));
        assert_eq!(parts[&ch(1)], monos(2, &["x", "y^2"]));
        assert_eq!(parts[&ch(2)], monos(2, &["x^2", "y"]));
        for (c, part) in &parts {
            let again = isotypical_split(&b, part).unwrap();
            assert_eq!(again.len(), 1);
            assert_eq!(&again[c], part);
        }

        assert!(isotypical_split::<Monomial>(&b, &[]).unwrap().is_empty());
        let mixed = Polynomial::parse(2, "x + y").unwrap();
        assert!(matches!(isotypical_split(&b, &[mixed]), Err(Error::Argument(_))));
        let pure = Polynomial::parse(2, "x + 2*y^2").unwrap();
        assert_eq!(isotypical_split(&b, &[pure]).unwrap().len(), 1);
    }

    #[test]
    fn taylor_examples() {
        let i1 = MonomialIdeal::parse(2, "x").unwrap();
        assert!(taylor_syzygies(&i1).is_empty());
        let i2 = MonomialIdeal::parse(2, "x,y").unwrap();
        let s = taylor_syzygies(&i2);
        // gens sorted as (y, x): relation x*e_y - y*e_x
        assert_eq!(s.len(), 1);
        assert_eq!(i2.gens(), monos(2, &["y", "x"]).as_slice());
        assert_eq!((s[0].left.clone(), s[0].right.clone()), (mono(2, "x"), mono(2, "y")));
        let i3 = MonomialIdeal::parse(2, "x^2,x*y,y^2").unwrap();
        let s = taylor_syzygies(&i3);
        assert_eq!(s.len(), 3);
        for r in &s {
            let g = i3.gens();
            assert_eq!(r.left.mul(&g[r.i]), r.right.mul(&g[r.j]));
        }
        // (y^2, xy): lcm xy^2 → x*e_{y^2} - y*e_{xy}
        assert_eq!((s[0].left.clone(), s[0].right.clone()), (mono(2, "x"), mono(2, "y")));
    }

    #[test]
    fn staircase_examples() {
        let i = MonomialIdeal::parse(2, "x,y").unwrap();
        assert_eq!(quotient_staircase(&i, 100), Staircase::Finite(monos(2, &["1"])));
        let i = MonomialIdeal::parse(2, "y,x^2").unwrap();
        assert_eq!(quotient_staircase(&i, 100), Staircase::Finite(monos(2, &["1", "x"])));
        let i = MonomialIdeal::parse(2, "x").unwrap();
        assert_eq!(quotient_staircase(&i, 8), Staircase::Infinite);
        let i = MonomialIdeal::parse(2, "1").unwrap();
        assert_eq!(quotient_staircase(&i, 8), Staircase::Finite(vec![]));
    }

    #[test]
    fn ideal_minimalizes() {
        let i = MonomialIdeal::parse(2, "x^2*y, x, y^3, x").unwrap();
        assert_eq!(i.gens(), monos(2, &["x", "y^3"]).as_slice());
        assert!(i.contains(&mono(2, "x*y")));
        assert!(!i.contains(&mono(2, "y^2")));
    }
}

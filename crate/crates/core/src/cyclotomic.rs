//! Exact arithmetic in the cyclotomic fields `Q(zeta_m)`.
//!
//! An element is stored as its residue modulo the `m`-th cyclotomic
//! polynomial, i.e. as `phi(m)` rational coefficients in the power basis
//! `1, z, ..., z^(phi(m)-1)`. The representation is unique, so equality is
//! coefficientwise.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group_rep::{Character, FiniteAbelianGroup};
use crate::linalg::{Field, Rational};

type Poly = Vec<Rational>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Poly {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Poly, Poly) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = &r[r.len() - 1] * &lead_inv;
        for (i, y) in b.iter().enumerate() {
            r[shift + i] -= &c * y;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<Poly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Poly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `m`-th cyclotomic polynomial, from `x^m - 1 = prod_{d | m} Phi_d`.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Poly> {
    assert!(m >= 1, "cyclotomic polynomial of index 0");
    if let Some(p) = phi_cache().lock().expect("cache lock").get(&m) {
        return p.clone();
    }
    let mut num = vec![Rational::zero(); m as usize + 1];
    num[0] = -Rational::one();
    num[m as usize] = Rational::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let (q, r) = poly_divrem(&num, &cyclotomic_polynomial(d));
        debug_assert!(r.is_empty());
        num = q;
    }
    let p = Arc::new(num);
    phi_cache()
        .lock()
        .expect("cache lock")
        .insert(m, p.clone());
    p
}

pub fn totient(m: u32) -> usize {
    (1..=m).filter(|k| k.gcd(&m) == 1).count()
}

/// Residue of `p` modulo the monic polynomial `phi`, padded to `deg(phi)`.
fn reduce_mod(p: &[Rational], phi: &[Rational]) -> Poly {
    let n = phi.len() - 1;
    let mut r = p.to_vec();
    for d in (n..r.len()).rev() {
        if r[d].is_zero() {
            continue;
        }
        let c = r[d].clone();
        for (i, y) in phi.iter().enumerate() {
            r[d - n + i] -= &c * y;
        }
    }
    r.resize(n, Rational::zero());
    r
}

/// An element of `Q(zeta_m)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl CyclotomicNumber {
    fn check_conductor(m: u32) -> Result<()> {
        if m == 0 {
            return Err(Error::arg("conductor must be at least 1"));
        }
        Ok(())
    }

    /// Reduces an arbitrary polynomial in `z` into `Q(zeta_m)`.
    pub fn from_poly(m: u32, poly: &[Rational]) -> Result<Self> {
        Self::check_conductor(m)?;
        let phi = cyclotomic_polynomial(m);
        Ok(Self {
            conductor: m,
            coeffs: reduce_mod(poly, &phi),
        })
    }

    pub fn from_rational(m: u32, q: Rational) -> Result<Self> {
        Self::from_poly(m, &[q])
    }

    pub fn rational(q: Rational) -> Self {
        Self {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn zero(m: u32) -> Result<Self> {
        Self::from_rational(m, Rational::zero())
    }

    pub fn one(m: u32) -> Result<Self> {
        Self::from_rational(m, Rational::one())
    }

    /// `zeta_m^k`; negative `k` allowed.
    pub fn zeta_pow(m: u32, k: i64) -> Result<Self> {
        Self::check_conductor(m)?;
        let e = k.rem_euclid(m as i64) as usize;
        let mut p = vec![Rational::zero(); e + 1];
        p[e] = Rational::one();
        Self::from_poly(m, &p)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn same_conductor(&self, other: &Self) -> Result<()> {
        if self.conductor != other.conductor {
            return Err(Error::arg(format!(
                "conductor mismatch: {} vs {}",
                self.conductor, other.conductor
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_conductor(other)?;
        Ok(Self {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_conductor(other)?;
        Ok(Self {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_conductor(other)?;
        let phi = cyclotomic_polynomial(self.conductor);
        Ok(Self {
            conductor: self.conductor,
            coeffs: reduce_mod(&poly_mul(&self.coeffs, &other.coeffs), &phi),
        })
    }

    pub fn negate(&self) -> Self {
        Self {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// `Phi_m`, which is irreducible.
    pub fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi = cyclotomic_polynomial(self.conductor);
        let mut a = self.coeffs.clone();
        trim(&mut a);
        // Invariant: s * self == r0 and t * self == r1 modulo phi.
        let (mut r0, mut r1): (Poly, Poly) = (phi.to_vec(), a);
        let (mut s0, mut s1): (Poly, Poly) = (vec![], vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        let c = r1[0].recip();
        let inv: Poly = s1.iter().map(|x| x * &c).collect();
        Ok(Self {
            conductor: self.conductor,
            coeffs: reduce_mod(&inv, &phi),
        })
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.try_inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.conductor)?;
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&sq)?;
            }
            sq = sq.try_mul(&sq)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Same complex number viewed in `Q(zeta_{m'})`, via `zeta_m = zeta_{m'}^{m'/m}`.
    pub fn embed_to_conductor(&self, target: u32) -> Result<Self> {
        Self::check_conductor(target)?;
        if !target.is_multiple_of(self.conductor) {
            return Err(Error::arg(format!(
                "conductor {} does not divide {target}",
                self.conductor
            )));
        }
        let step = (target / self.conductor) as usize;
        let mut p = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            p[i * step] = c.clone();
        }
        Self::from_poly(target, &p)
    }

    /// Parses `cyclo(m): <poly in z>` or a bare rational (conductor 1).
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed_start = text.len() - text.trim_start().len();
        let t = text.trim();
        if let Some(rest) = t.strip_prefix("cyclo(") {
            let close = rest
                .find(')')
                .ok_or_else(|| Error::parse(trimmed_start + 6, "missing ')' after conductor"))?;
            let m: u32 = rest[..close].trim().parse().map_err(|_| {
                Error::parse(trimmed_start + 6, format!("bad conductor '{}'", &rest[..close]))
            })?;
            if m == 0 {
                return Err(Error::parse(trimmed_start + 6, "conductor must be at least 1"));
            }
            let after = &rest[close + 1..];
            let body = after.trim_start().strip_prefix(':').ok_or_else(|| {
                Error::parse(trimmed_start + 7 + close, "expected ':' after conductor tag")
            })?;
            let offset = trimmed_start + 6 + close + 1 + (after.len() - body.len());
            let poly = parse_poly(body, offset)?;
            Self::from_poly(m, &poly)
        } else {
            let poly = parse_poly(t, trimmed_start)?;
            if poly.len() > 1 {
                return Err(Error::parse(
                    trimmed_start,
                    "powers of z need a conductor tag, e.g. 'cyclo(4): z'",
                ));
            }
            Ok(Self::rational(poly.into_iter().next().unwrap_or_else(Rational::zero)))
        }
    }
}

fn parse_rational(s: &str, pos: usize) -> Result<Rational> {
    let bad = || Error::parse(pos, format!("bad rational '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::parse(pos, "zero denominator"));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

/// Parses a sum of terms `c`, `c*z`, `c*z^k`, `z^k`, `-z`, ...
fn parse_poly(s: &str, offset: usize) -> Result<Poly> {
    let mut terms: Vec<(usize, bool, &str)> = vec![];
    let mut start = 0;
    let mut negative = false;
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if (b == b'+' || b == b'-') && !s[start..i].trim().is_empty() {
            terms.push((start, negative, &s[start..i]));
            negative = b == b'-';
            start = i + 1;
        } else if (b == b'+' || b == b'-') && s[start..i].trim().is_empty() {
            if b == b'-' {
                negative = !negative;
            }
            start = i + 1;
        }
    }
    if s[start..].trim().is_empty() {
        if !terms.is_empty() || start > 0 {
            return Err(Error::parse(offset + start, "dangling sign"));
        }
        return Err(Error::parse(offset, "empty number"));
    }
    terms.push((start, negative, &s[start..]));

    let mut poly: Poly = vec![];
    for (at, neg, raw) in terms {
        let pos = offset + at + (raw.len() - raw.trim_start().len());
        let term = raw.trim();
        let (coef, exp) = match term.find('z') {
            None => (parse_rational(term, pos)?, 0usize),
            Some(zi) => {
                let head = term[..zi].trim().trim_end_matches('*').trim();
                let coef = if head.is_empty() {
                    Rational::one()
                } else {
                    parse_rational(head, pos)?
                };
                let tail = term[zi + 1..].trim();
                let exp = if tail.is_empty() {
                    1
                } else {
                    let e = tail.strip_prefix('^').ok_or_else(|| {
                        Error::parse(pos + zi + 1, format!("unexpected '{tail}' after z"))
                    })?;
                    e.trim().parse::<usize>().map_err(|_| {
                        Error::parse(pos + zi + 1, format!("bad exponent '{e}'"))
                    })?
                };
                (coef, exp)
            }
        };
        if poly.len() <= exp {
            poly.resize(exp + 1, Rational::zero());
        }
        if neg {
            poly[exp] -= coef;
        } else {
            poly[exp] += coef;
        }
    }
    Ok(poly)
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (i, mag.is_one()) {
                (0, _) => mag.to_string(),
                (1, true) => "z".to_string(),
                (1, false) => format!("{mag}*z"),
                (_, true) => format!("z^{i}"),
                (_, false) => format!("{mag}*z^{i}"),
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        if self.conductor == 1 {
            write!(f, "{out}")
        } else {
            write!(f, "cyclo({}): {out}", self.conductor)
        }
    }
}

impl Field for CyclotomicNumber {
    type Ctx = u32;

    fn zero_in(m: &u32) -> Self {
        Self::zero(*m).expect("valid conductor")
    }
    fn one_in(m: &u32) -> Self {
        Self::one(*m).expect("valid conductor")
    }
    fn is_zero_elem(&self) -> bool {
        CyclotomicNumber::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("operands share a conductor")
    }
    fn sub(&self, other: &Self) -> Self {
        self.try_sub(other).expect("operands share a conductor")
    }
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("operands share a conductor")
    }
    fn neg(&self) -> Self {
        self.negate()
    }
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }
}

/// `<g, chi> = prod_i zeta_{d_i}^{g_i c_i}`, in conductor `exponent(G)`.
pub fn character_value(
    group: &FiniteAbelianGroup,
    g: &Character,
    chi: &Character,
) -> Result<CyclotomicNumber> {
    if !group.contains(g) || !group.contains(chi) {
        return Err(Error::arg("element or character not in the group"));
    }
    let l = group.exponent() as i64;
    let k: i64 = group
        .divisors()
        .iter()
        .zip(g.components().iter().zip(chi.components()))
        .map(|(&d, (&a, &b))| (a as i64 * b as i64 % d as i64) * (l / d as i64))
        .sum();
    CyclotomicNumber::zeta_pow(l as u32, k)
}

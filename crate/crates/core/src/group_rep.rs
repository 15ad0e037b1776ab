//! Finite abelian groups given by elementary divisors, their characters, and
//! diagonal actions on affine space described by per-variable weights.
//!
//! A finite abelian group is self-dual once a basis is fixed, so characters
//! and group elements share one representation: a tuple of residues
//! `(c_1, ..., c_k)` with `0 <= c_i < d_i`. The pairing between an element
//! `g` and a character `chi` is `prod_i zeta_{d_i}^{g_i * c_i}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    divisors: Vec<u32>,
}

impl FiniteAbelianGroup {
    pub fn new(divisors: Vec<u32>) -> Result<Self> {
        if let Some(d) = divisors.iter().find(|&&d| d < 2) {
            return Err(Error::arg(format!(
                "elementary divisor {d} is not at least 2"
            )));
        }
        Ok(Self { divisors })
    }

    pub fn trivial() -> Self {
        Self { divisors: vec![] }
    }

    /// `Z/r`; `r = 1` gives the trivial group.
    pub fn cyclic(r: u32) -> Result<Self> {
        match r {
            0 => Err(Error::arg("cyclic group of order 0")),
            1 => Ok(Self::trivial()),
            r => Self::new(vec![r]),
        }
    }

    pub fn divisors(&self) -> &[u32] {
        &self.divisors
    }

    pub fn rank(&self) -> usize {
        self.divisors.len()
    }

    pub fn order(&self) -> usize {
        self.divisors.iter().map(|&d| d as usize).product()
    }

    /// Least common multiple of the elementary divisors (1 for the trivial group).
    pub fn exponent(&self) -> u32 {
        self.divisors.iter().fold(1u32, |acc, &d| acc.lcm(&d))
    }

    pub fn zero(&self) -> Character {
        Character(vec![0; self.rank()])
    }

    /// Reduces an integer tuple componentwise into a character.
    pub fn reduce(&self, raw: &[i64]) -> Result<Character> {
        if raw.len() != self.rank() {
            return Err(Error::arg(format!(
                "tuple of length {} for a group of rank {}",
                raw.len(),
                self.rank()
            )));
        }
        Ok(Character(
            raw.iter()
                .zip(&self.divisors)
                .map(|(&c, &d)| c.rem_euclid(d as i64) as u32)
                .collect(),
        ))
    }

    pub fn add(&self, a: &Character, b: &Character) -> Character {
        Character(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.divisors)
                .map(|((&x, &y), &d)| (x + y) % d)
                .collect(),
        )
    }

    pub fn neg(&self, a: &Character) -> Character {
        Character(
            a.0.iter()
                .zip(&self.divisors)
                .map(|(&x, &d)| (d - x) % d)
                .collect(),
        )
    }

    pub fn scale(&self, a: &Character, k: u64) -> Character {
        Character(
            a.0.iter()
                .zip(&self.divisors)
                .map(|(&x, &d)| ((x as u64 * (k % d as u64)) % d as u64) as u32)
                .collect(),
        )
    }

    /// All elements (equivalently all characters) in lexicographic order.
    pub fn elements(&self) -> Vec<Character> {
        let mut out = vec![Character(vec![])];
        for &d in &self.divisors {
            out = out
                .into_iter()
                .flat_map(|c| {
                    (0..d).map(move |i| {
                        let mut v = c.0.clone();
                        v.push(i);
                        Character(v)
                    })
                })
                .collect();
        }
        out
    }

    pub fn contains(&self, c: &Character) -> bool {
        c.0.len() == self.rank() && c.0.iter().zip(&self.divisors).all(|(&x, &d)| x < d)
    }

    /// Subgroup generated by `gens`, as a sorted set.
    pub fn span(&self, gens: &[Character]) -> BTreeSet<Character> {
        let mut seen = BTreeSet::from([self.zero()]);
        let mut frontier = vec![self.zero()];
        while let Some(c) = frontier.pop() {
            for g in gens {
                let next = self.add(&c, g);
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        seen
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.divisors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.divisors.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// A character of a finite abelian group, stored reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character(Vec<u32>);

impl Character {
    pub fn components(&self) -> &[u32] {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.as_slice() {
            [] => write!(f, "0"),
            [c] => write!(f, "{c}"),
            cs => {
                let parts: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// Cyclic groups serialize a character as a bare integer, products as an array.
impl Serialize for Character {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.as_slice() {
            [] => s.serialize_u32(0),
            [c] => s.serialize_u32(*c),
            cs => cs.serialize(s),
        }
    }
}

/// A diagonal action of a finite abelian group on `n` variables: `g . x_i =
/// <g, w_i> x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ActionData {
    group: FiniteAbelianGroup,
    weights: Vec<Character>,
}

impl ActionData {
    pub fn new(group: FiniteAbelianGroup, weights: Vec<Vec<i64>>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::arg("an action needs at least one variable"));
        }
        let weights = weights
            .iter()
            .map(|w| group.reduce(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { group, weights })
    }

    /// `Z/r` acting with weights `a_1, ..., a_n`.
    pub fn cyclic(r: u32, weights: &[i64]) -> Result<Self> {
        let group = FiniteAbelianGroup::cyclic(r)?;
        let ws = weights
            .iter()
            .map(|&a| if group.rank() == 0 { vec![] } else { vec![a] })
            .collect();
        Self::new(group, ws)
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn num_variables(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Character] {
        &self.weights
    }

    pub fn determinant(&self) -> Character {
        self.weights
            .iter()
            .fold(self.group.zero(), |acc, w| self.group.add(&acc, w))
    }

    pub fn is_special_linear(&self) -> bool {
        self.determinant().is_trivial()
    }

    /// The weights generate the whole character group.
    pub fn is_faithful(&self) -> bool {
        self.group.span(&self.weights).len() == self.group.order()
    }

    /// `sum_i a_i w_i`.
    pub fn weight_of_monomial(&self, exponents: &[u32]) -> Result<Character> {
        if exponents.len() != self.num_variables() {
            return Err(Error::arg(format!(
                "exponent tuple of length {} for {} variables",
                exponents.len(),
                self.num_variables()
            )));
        }
        Ok(exponents
            .iter()
            .zip(&self.weights)
            .fold(self.group.zero(), |acc, (&a, w)| {
                self.group.add(&acc, &self.group.scale(w, a as u64))
            }))
    }
}

/// Something that lives in a single isotypical component.
pub trait Weighted {
    fn weight(&self, action: &ActionData) -> Result<Character>;
}

/// The regular representation of an abelian group: every character once.
pub fn regular_rep_multiset(group: &FiniteAbelianGroup) -> Vec<Character> {
    group.elements()
}

/// Partitions `basis` by character. Input order is kept inside each part.
pub fn isotypical_split<T: Weighted + Clone>(
    action: &ActionData,
    basis: &[T],
) -> Result<BTreeMap<Character, Vec<T>>> {
    let mut parts: BTreeMap<Character, Vec<T>> = BTreeMap::new();
    for b in basis {
        parts.entry(b.weight(action)?).or_default().push(b.clone());
    }
    Ok(parts)
}

pub fn multiplicities<'a>(chars: impl IntoIterator<Item = &'a Character>) -> BTreeMap<Character, usize> {
    let mut m = BTreeMap::new();
    for c in chars {
        *m.entry(c.clone()).or_insert(0) += 1;
    }
    m
}

pub fn is_regular_representation(group: &FiniteAbelianGroup, chars: &[Character]) -> bool {
    let mut sorted = chars.to_vec();
    sorted.sort();
    sorted == regular_rep_multiset(group)
}

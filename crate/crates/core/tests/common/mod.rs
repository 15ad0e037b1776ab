//! Independent oracles and the shared test corpus.
//!
//! The oracles deliberately avoid the library's own enumeration, staircase
//! and hom machinery: they work on raw exponent tuples and brute force.
//! Exact rank computations reuse the rational matrix type, which is tested
//! on its own.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use ghilb_kit::group_rep::{ActionData, Character, FiniteAbelianGroup};
use ghilb_kit::linalg::{rat, Echelon, Matrix, Rational};
use num_traits::Zero;

pub type Exps = Vec<u32>;

pub fn sl_cyclic(r: u32) -> ActionData {
    ActionData::cyclic(r, &[1, r as i64 - 1]).unwrap()
}

/// Weight of an exponent tuple computed from scratch: sum of e_i * w_i
/// reduced by the elementary divisors.
pub fn weight(action: &ActionData, e: &[u32]) -> Vec<u32> {
    let divs = action.group().divisors();
    let mut acc = vec![0u64; divs.len()];
    for (ei, w) in e.iter().zip(action.weights()) {
        for (k, c) in w.components().iter().enumerate() {
            acc[k] = (acc[k] + *ei as u64 * *c as u64) % divs[k] as u64;
        }
    }
    acc.into_iter().map(|x| x as u32).collect()
}

fn is_invariant(action: &ActionData, e: &[u32]) -> bool {
    weight(action, e).iter().all(|&c| c == 0)
}

fn all_tuples(n: usize, bound: u32) -> Vec<Exps> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=bound).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

fn divisors_of(e: &[u32]) -> Vec<Exps> {
    let mut out = vec![vec![]];
    for &k in e {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=k).map(move |j| {
                    let mut t = t.clone();
                    t.push(j);
                    t
                })
            })
            .collect();
    }
    out
}

/// Monomials with no invariant divisor of positive degree: the basis of the
/// coinvariant algebra, as raw exponent tuples. Each x_i^|G| is invariant,
/// so exponents stay below |G|.
pub fn coinvariant_basis_oracle(action: &ActionData) -> BTreeSet<Exps> {
    let n = action.num_variables();
    let g = action.group().order() as u32;
    all_tuples(n, g.saturating_sub(1))
        .into_iter()
        .filter(|e| {
            divisors_of(e)
                .iter()
                .all(|d| d.iter().all(|&k| k == 0) || !is_invariant(action, d))
        })
        .collect()
}

fn is_down_closed(set: &BTreeSet<Exps>) -> bool {
    set.iter().all(|e| {
        (0..e.len()).all(|i| {
            if e[i] == 0 {
                return true;
            }
            let mut p = e.clone();
            p[i] -= 1;
            set.contains(&p)
        })
    })
}

/// All downward-closed subsets of the coinvariant basis with |G| elements
/// whose weights are pairwise distinct, by brute force over subsets.
pub fn cluster_staircases_oracle(action: &ActionData) -> BTreeSet<BTreeSet<Exps>> {
    let basis: Vec<Exps> = coinvariant_basis_oracle(action).into_iter().collect();
    let k = action.group().order();
    let mut out = BTreeSet::new();
    let mut chosen = vec![];
    subsets(&basis, 0, k, &mut chosen, &mut |pick: &[usize]| {
        let set: BTreeSet<Exps> = pick.iter().map(|&i| basis[i].clone()).collect();
        let ws: BTreeSet<Vec<u32>> = set.iter().map(|e| weight(action, e)).collect();
        if ws.len() == k && is_down_closed(&set) {
            out.insert(set);
        }
    });
    out
}

fn subsets(items: &[Exps], from: usize, k: usize, chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for i in from..items.len() {
        if items.len() - i < k - chosen.len() {
            break;
        }
        chosen.push(i);
        subsets(items, i + 1, k, chosen, f);
        chosen.pop();
    }
}

/// Outer corners of a finite staircase: minimal generators of its ideal.
pub fn corners(stair: &BTreeSet<Exps>) -> Vec<Exps> {
    let n = stair.iter().next().map(|e| e.len()).unwrap_or(0);
    let mut out = BTreeSet::new();
    for s in stair {
        for i in 0..n {
            let mut m = s.clone();
            m[i] += 1;
            if stair.contains(&m) {
                continue;
            }
            let ok = (0..n).all(|j| {
                if m[j] == 0 {
                    return true;
                }
                let mut p = m.clone();
                p[j] -= 1;
                stair.contains(&p)
            });
            if ok {
                out.insert(m);
            }
        }
    }
    out.into_iter().collect()
}

fn add(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[u32], b: &[u32]) -> Option<Exps> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_sub(*y))
        .collect()
}

/// `dim Hom^G_S(I, S/I)` for the monomial ideal with staircase `stair`.
///
/// Unknowns: weight-compatible images of the corners. Constraints: for
/// every monomial `w` (up to a degree bound) divisible by two corners
/// `g, h`, `(w/g) phi(g) = (w/h) phi(h)` in `S/I`. No lcm shortcut.
pub fn tangent_dim_oracle(action: &ActionData, stair: &BTreeSet<Exps>) -> usize {
    let gens = corners(stair);
    let stair_v: Vec<Exps> = stair.iter().cloned().collect();
    let mut unknowns = vec![];
    for (a, g) in gens.iter().enumerate() {
        for (b, s) in stair_v.iter().enumerate() {
            if weight(action, g) == weight(action, s) {
                unknowns.push((a, b));
            }
        }
    }
    let slot: BTreeMap<(usize, usize), usize> = unknowns.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let n = action.num_variables();
    let bound: u32 = gens.iter().map(|g| g.iter().sum::<u32>()).max().unwrap_or(0) * 2;
    let mut rows: Vec<Vec<Rational>> = vec![];
    for w in all_tuples(n, bound) {
        if w.iter().sum::<u32>() > bound {
            continue;
        }
        for a in 0..gens.len() {
            for b in a + 1..gens.len() {
                let (Some(u), Some(v)) = (sub(&w, &gens[a]), sub(&w, &gens[b])) else {
                    continue;
                };
                // coefficient of each staircase monomial t in u phi(g_a) - v phi(g_b)
                let mut eq: BTreeMap<Exps, Vec<Rational>> = BTreeMap::new();
                for (side, mult, sign) in [(a, &u, 1i64), (b, &v, -1)] {
                    for (bi, s) in stair_v.iter().enumerate() {
                        let Some(&k) = slot.get(&(side, bi)) else { continue };
                        let t = add(s, mult);
                        if stair.contains(&t) {
                            eq.entry(t).or_insert_with(|| vec![Rational::zero(); unknowns.len()])[k] += rat(sign);
                        }
                    }
                }
                rows.extend(eq.into_values());
            }
        }
    }
    kernel_dim(unknowns.len(), rows)
}

/// `dim Hom^G_{S/nS}(J, (S/nS)/J)` for the monomial ideal `J` of the
/// coinvariant algebra complementary to `stair`.
///
/// Unknowns: images of the minimal generators of `J` (monomials of `J` not
/// a variable multiple of another). Constraints, for monomials `u` in a box
/// just past the coinvariant basis: `u g = 0` in `S/nS` forces
/// `u phi(g) = 0`, and `u g = v h` nonzero forces `u phi(g) = v phi(h)`.
pub fn relative_tangent_dim_oracle(action: &ActionData, stair: &BTreeSet<Exps>) -> usize {
    let basis = coinvariant_basis_oracle(action);
    let n = action.num_variables();
    let ideal: BTreeSet<Exps> = basis.difference(stair).cloned().collect();
    let gens: Vec<Exps> = ideal
        .iter()
        .filter(|m| {
            (0..n).all(|i| {
                if m[i] == 0 {
                    return true;
                }
                let mut p = (*m).clone();
                p[i] -= 1;
                !ideal.contains(&p)
            })
        })
        .cloned()
        .collect();
    let stair_v: Vec<Exps> = stair.iter().cloned().collect();
    let mut unknowns = vec![];
    for (a, g) in gens.iter().enumerate() {
        for (b, s) in stair_v.iter().enumerate() {
            if weight(action, g) == weight(action, s) {
                unknowns.push((a, b));
            }
        }
    }
    let slot: BTreeMap<(usize, usize), usize> = unknowns.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let top = basis.iter().flat_map(|e| e.iter().copied()).max().unwrap_or(0) + 1;
    let image = |side: usize, u: &[u32], sign: i64, eq: &mut BTreeMap<Exps, Vec<Rational>>| {
        for (bi, s) in stair_v.iter().enumerate() {
            let Some(&k) = slot.get(&(side, bi)) else { continue };
            let t = add(s, u);
            if stair.contains(&t) {
                eq.entry(t).or_insert_with(|| vec![Rational::zero(); unknowns.len()])[k] += rat(sign);
            }
        }
    };
    let mut rows = vec![];
    let us = all_tuples(n, top);
    for a in 0..gens.len() {
        for u in &us {
            let w = add(&gens[a], u);
            if !basis.contains(&w) {
                let mut eq = BTreeMap::new();
                image(a, u, 1, &mut eq);
                rows.extend(eq.into_values());
                continue;
            }
            for b in a + 1..gens.len() {
                let Some(v) = sub(&w, &gens[b]) else { continue };
                let mut eq = BTreeMap::new();
                image(a, u, 1, &mut eq);
                image(b, &v, -1, &mut eq);
                rows.extend(eq.into_values());
            }
        }
    }
    kernel_dim(unknowns.len(), rows)
}

fn kernel_dim(cols: usize, rows: Vec<Vec<Rational>>) -> usize {
    if rows.is_empty() {
        return cols;
    }
    cols - Matrix::from_rows(cols, (), rows).unwrap().rank()
}

/// Weight oracle for the stratification representation of a monomial
/// ideal of the coinvariant algebra: characters of its minimal generators.
pub fn strat_characters_oracle(action: &ActionData, stair: &BTreeSet<Exps>) -> Vec<Vec<u32>> {
    let basis = coinvariant_basis_oracle(action);
    let n = action.num_variables();
    let ideal: BTreeSet<Exps> = basis.difference(stair).cloned().collect();
    let mut out: Vec<Vec<u32>> = ideal
        .iter()
        .filter(|m| {
            (0..n).all(|i| {
                if m[i] == 0 {
                    return true;
                }
                let mut p = (*m).clone();
                p[i] -= 1;
                !ideal.contains(&p)
            })
        })
        .map(|m| weight(action, m))
        .collect();
    out.sort();
    out
}

/// Faithful two-variable actions of abelian groups of order at most
/// `max_order`, one per orbit under group automorphisms and swapping the
/// variables.
pub fn two_variable_corpus(max_order: usize) -> Vec<ActionData> {
    let mut groups: Vec<Vec<u32>> = (2..=max_order as u32).map(|r| vec![r]).collect();
    for d1 in 2..=max_order as u32 {
        for d2 in (d1..=max_order as u32).step_by(d1 as usize) {
            if (d1 * d2) as usize <= max_order {
                groups.push(vec![d1, d2]);
            }
        }
    }
    let mut out = vec![];
    for divs in groups {
        let g = FiniteAbelianGroup::new(divs).unwrap();
        let els = g.elements();
        let auts = automorphisms(&g);
        let mut seen = BTreeSet::new();
        for a in &els {
            for b in &els {
                let canon = auts
                    .iter()
                    .flat_map(|f| {
                        let (fa, fb) = (f(a), f(b));
                        [(fa.clone(), fb.clone()), (fb, fa)]
                    })
                    .min()
                    .unwrap();
                if !seen.insert(canon.clone()) {
                    continue;
                }
                let ws = [&canon.0, &canon.1]
                    .iter()
                    .map(|c| c.components().iter().map(|&x| x as i64).collect())
                    .collect();
                let act = ActionData::new(g.clone(), ws).unwrap();
                if act.is_faithful() {
                    out.push(act);
                }
            }
        }
    }
    out
}

type Aut = Box<dyn Fn(&Character) -> Character>;

/// Automorphisms of a group of rank at most 2, as images of the standard
/// generators.
fn automorphisms(g: &FiniteAbelianGroup) -> Vec<Aut> {
    let els = g.elements();
    let rank = g.rank();
    let divs = g.divisors().to_vec();
    let mut out: Vec<Aut> = vec![];
    let images: Vec<Vec<Character>> = match rank {
        1 => els.iter().map(|e| vec![e.clone()]).collect(),
        2 => els
            .iter()
            .flat_map(|e1| els.iter().map(move |e2| vec![e1.clone(), e2.clone()]))
            .collect(),
        _ => vec![vec![]],
    };
    for img in images {
        // e_k has order divs[k]; its image must be killed by divs[k]
        if img.iter().zip(&divs).any(|(c, &d)| !g.scale(c, d as u64).is_trivial()) {
            continue;
        }
        let g2 = g.clone();
        let img2 = img.clone();
        let f = move |c: &Character| {
            let mut acc = g2.zero();
            for (k, &x) in c.components().iter().enumerate() {
                acc = g2.add(&acc, &g2.scale(&img2[k], x as u64));
            }
            acc
        };
        let hit: BTreeSet<Character> = els.iter().map(&f).collect();
        if hit.len() == els.len() {
            out.push(Box::new(f));
        }
    }
    out
}

/// The non-monomial point of the fiber on the curve joining the clusters
/// with staircases `{1,..,x^a, y,..,y^(r-1-a)}` and its neighbour, for
/// `Z/r` with weights `(1, r-1)`: the character `a+1` component of the
/// ideal becomes `span{t x^(a+1) - s y^(r-1-a)}`.
pub fn chain_point(coinv: &ghilb_kit::monomial::CoinvariantAlgebra, a: u32, t: i64, s: i64) -> Echelon<Rational> {
    let r = coinv.action().group().order() as u32;
    assert!(a + 2 <= r);
    let idx = |e: Exps| {
        coinv
            .index_of(&ghilb_kit::monomial::Monomial::new(e))
            .expect("coinvariant basis monomial")
    };
    let mut rows = vec![];
    let unit = |i: usize| {
        let mut v = vec![Rational::zero(); coinv.dim()];
        v[i] = rat(1);
        v
    };
    for k in a + 2..r {
        rows.push(unit(idx(vec![k, 0])));
    }
    for k in r - a..r {
        rows.push(unit(idx(vec![0, k])));
    }
    let mut v = vec![Rational::zero(); coinv.dim()];
    v[idx(vec![a + 1, 0])] = rat(t);
    v[idx(vec![0, r - 1 - a])] = rat(-s);
    rows.push(v);
    Echelon::span(coinv.dim(), (), rows).unwrap()
}

pub fn staircase_set(stair: &[ghilb_kit::monomial::Monomial]) -> BTreeSet<Exps> {
    stair.iter().map(|m| m.exponents().to_vec()).collect()
}

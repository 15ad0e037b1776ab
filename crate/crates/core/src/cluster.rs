//! G-clusters: ideals whose quotient is the regular representation.
//!
//! Three kinds of ideal are handled. Monomial ideals of `S` are checked on
//! their staircase. Subspaces of the coinvariant algebra `S/nS` describe
//! clusters over the origin of the quotient; they are given by a row span
//! over the monomial basis. Orbit ideals are vanishing ideals of a single
//! group orbit, built by evaluation, with coordinates in a cyclotomic field.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::cyclotomic::{character_value, CyclotomicNumber};
use crate::error::{Error, Result};
use crate::group_rep::{
    is_regular_representation, multiplicities, ActionData, Character, FiniteAbelianGroup,
};
use crate::linalg::{Echelon, Field, Matrix, Rational};
use crate::monomial::{quotient_staircase, CoinvariantAlgebra, Monomial, MonomialIdeal, Staircase};

/// Default staircase cap: `4 |G|`.
pub fn default_cap(group: &FiniteAbelianGroup) -> usize {
    4 * group.order()
}

#[derive(Clone, Debug, PartialEq)]
pub enum ClusterIdeal {
    Monomial(MonomialIdeal),
    /// Row span inside `S/nS`, in the coinvariant monomial basis.
    Subspace(Echelon<Rational>),
    Orbit(OrbitIdeal),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterReport {
    pub is_cluster: bool,
    /// `None` when the quotient is not finite.
    pub quotient_dim: Option<usize>,
    /// Characters of the quotient basis, sorted.
    pub characters: Vec<Character>,
    pub reason: Option<String>,
}

impl ClusterReport {
    fn failed(reason: impl Into<String>) -> Self {
        Self {
            is_cluster: false,
            quotient_dim: None,
            characters: vec![],
            reason: Some(reason.into()),
        }
    }
}

/// A verified G-cluster together with a monomial basis of its quotient.
#[derive(Clone, Debug, PartialEq)]
pub struct GCluster {
    ideal: ClusterIdeal,
    quotient_basis: Vec<Monomial>,
    characters: Vec<Character>,
}

impl GCluster {
    /// Verifies `ideal` and wraps it, or hands back the failing report.
    pub fn new(
        coinv: &CoinvariantAlgebra,
        ideal: ClusterIdeal,
        cap: usize,
    ) -> Result<std::result::Result<Self, ClusterReport>> {
        let (report, basis) = check(coinv, &ideal, cap)?;
        if !report.is_cluster {
            return Ok(Err(report));
        }
        let basis = basis.expect("verified clusters have a finite quotient");
        let action = coinv.action();
        let characters = basis
            .iter()
            .map(|m| action.weight_of_monomial(m.exponents()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ok(Self {
            ideal,
            quotient_basis: basis,
            characters,
        }))
    }

    pub fn ideal(&self) -> &ClusterIdeal {
        &self.ideal
    }

    pub fn monomial_ideal(&self) -> Option<&MonomialIdeal> {
        match &self.ideal {
            ClusterIdeal::Monomial(i) => Some(i),
            _ => None,
        }
    }

    /// Staircase for monomial ideals, the complement monomials for
    /// subspaces, the standard monomials for orbit ideals.
    pub fn quotient_basis(&self) -> &[Monomial] {
        &self.quotient_basis
    }

    pub fn quotient_dim(&self) -> usize {
        self.quotient_basis.len()
    }

    /// Characters in quotient-basis order.
    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn report(&self) -> ClusterReport {
        let mut chars = self.characters.clone();
        chars.sort();
        ClusterReport {
            is_cluster: true,
            quotient_dim: Some(self.quotient_dim()),
            characters: chars,
            reason: None,
        }
    }
}

/// Checks the cluster conditions in order: finiteness, ideal closure and
/// G-stability (subspaces only), dimension, characters.
pub fn verify_cluster(
    coinv: &CoinvariantAlgebra,
    ideal: &ClusterIdeal,
    cap: usize,
) -> Result<ClusterReport> {
    Ok(check(coinv, ideal, cap)?.0)
}

fn check(
    coinv: &CoinvariantAlgebra,
    ideal: &ClusterIdeal,
    cap: usize,
) -> Result<(ClusterReport, Option<Vec<Monomial>>)> {
    let action = coinv.action();
    let basis = match ideal {
        ClusterIdeal::Monomial(i) => {
            if i.nvars() != action.num_variables() {
                return Err(Error::arg(format!(
                    "ideal in {} variables for an action on {}",
                    i.nvars(),
                    action.num_variables()
                )));
            }
            match quotient_staircase(i, cap) {
                Staircase::Finite(b) => b,
                Staircase::Infinite => {
                    return Ok((ClusterReport::failed("quotient not finite"), None))
                }
            }
        }
        ClusterIdeal::Subspace(e) => {
            if !is_ideal_echelon(coinv, e)? {
                return Ok((
                    ClusterReport::failed("subspace is not an ideal of the coinvariant algebra"),
                    None,
                ));
            }
            if !is_homogeneous(coinv, e) {
                return Ok((ClusterReport::failed("subspace is not G-stable"), None));
            }
            e.free_columns()
                .into_iter()
                .map(|c| coinv.basis()[c].clone())
                .collect()
        }
        ClusterIdeal::Orbit(o) => o.standard.clone(),
    };
    let mut chars = basis
        .iter()
        .map(|m| action.weight_of_monomial(m.exponents()))
        .collect::<Result<Vec<_>>>()?;
    chars.sort();
    let order = action.group().order();
    let mut report = ClusterReport {
        is_cluster: false,
        quotient_dim: Some(basis.len()),
        characters: chars,
        reason: None,
    };
    if basis.len() != order {
        report.reason = Some(format!("dimension {} ≠ {order}", basis.len()));
    } else if !is_regular_representation(action.group(), &report.characters) {
        let bad = multiplicities(&report.characters)
            .into_iter()
            .find(|(_, k)| *k != 1)
            .map(|(c, k)| format!("character {c} appears {k} times"))
            .unwrap_or_default();
        report.reason = Some(format!("not the regular representation: {bad}"));
    } else {
        report.is_cluster = true;
    }
    Ok((report, Some(basis)))
}

/// Echelon rows are weight-homogeneous iff the span is G-stable.
fn is_homogeneous<F: Field>(coinv: &CoinvariantAlgebra, e: &Echelon<F>) -> bool {
    e.rows().iter().all(|row| {
        let mut w: Option<&Character> = None;
        row.iter().enumerate().filter(|(_, x)| !x.is_zero_elem()).all(|(i, _)| {
            let c = coinv.weight(i);
            *w.get_or_insert(c) == c
        })
    })
}

/// Whether the row span of `rows` is an ideal of `S/nS`. The algebra is
/// generated by the variables, so closure under multiplication by each
/// variable is equivalent to closure under every basis monomial.
pub fn is_ideal_subspace<F: Field>(coinv: &CoinvariantAlgebra, rows: &Matrix<F>) -> Result<bool> {
    if rows.cols() != coinv.dim() {
        return Err(Error::arg(format!(
            "subspace has {} columns but the coinvariant algebra has dimension {}",
            rows.cols(),
            coinv.dim()
        )));
    }
    is_ideal_echelon(coinv, &rows.rref())
}

pub(crate) fn is_ideal_echelon<F: Field>(coinv: &CoinvariantAlgebra, e: &Echelon<F>) -> Result<bool> {
    if e.cols() != coinv.dim() {
        return Err(Error::arg(format!(
            "subspace has {} columns but the coinvariant algebra has dimension {}",
            e.cols(),
            coinv.dim()
        )));
    }
    let n = coinv.action().num_variables();
    for i in 0..n {
        let x = Monomial::var(n, i);
        for row in e.rows() {
            if !e.contains(&coinv.mul_monomial_vec(&x, row, e.ctx())) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The image in `S/nS` of an ideal containing `nS`: the span of the basis
/// monomials that lie in it.
pub fn monomial_ideal_to_subspace(coinv: &CoinvariantAlgebra, ideal: &MonomialIdeal) -> Echelon<Rational> {
    let d = coinv.dim();
    let rows = coinv
        .basis()
        .iter()
        .enumerate()
        .filter(|(_, m)| ideal.contains(m))
        .map(|(i, _)| {
            let mut v = vec![Rational::zero(); d];
            v[i] = Rational::from_integer(1.into());
            v
        })
        .collect();
    Echelon::span(d, (), rows).expect("unit rows")
}

/// Torus-fixed G-clusters over the origin: monomial ideals containing `nS`
/// whose staircase is an order ideal of the coinvariant basis meeting every
/// character exactly once. Sorted by generator list.
pub fn enumerate_torus_fixed_clusters(coinv: &CoinvariantAlgebra) -> Vec<GCluster> {
    let action = coinv.action();
    let group = action.group();
    let all_chars = group.elements();
    let char_index: HashMap<&Character, usize> =
        all_chars.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let basis = coinv.basis();
    let n = action.num_variables();
    let wchar: Vec<usize> = coinv.weights().iter().map(|w| char_index[w]).collect();

    // divisors[k]: basis indices of basis[k] / x_i
    let divisors: Vec<Vec<usize>> = basis
        .iter()
        .map(|m| {
            (0..n)
                .filter_map(|i| {
                    let x = Monomial::var(n, i);
                    m.div(&x).map(|q| coinv.index_of(&q).expect("order ideal"))
                })
                .collect()
        })
        .collect();
    // suffix[k][c]: monomials of character c at positions >= k
    let mut suffix = vec![vec![0usize; all_chars.len()]; basis.len() + 1];
    for k in (0..basis.len()).rev() {
        suffix[k] = suffix[k + 1].clone();
        suffix[k][wchar[k]] += 1;
    }

    struct Search<'a> {
        wchar: &'a [usize],
        divisors: &'a [Vec<usize>],
        suffix: &'a [Vec<usize>],
        included: Vec<bool>,
        used: Vec<bool>,
        remaining: usize,
        found: Vec<Vec<usize>>,
    }

    impl Search<'_> {
        fn run(&mut self, k: usize) {
            if self.remaining == 0 {
                let chosen = (0..self.included.len()).filter(|&i| self.included[i]).collect();
                self.found.push(chosen);
                return;
            }
            if k == self.wchar.len() {
                return;
            }
            let feasible = self
                .used
                .iter()
                .enumerate()
                .all(|(c, &u)| u || self.suffix[k][c] > 0);
            if !feasible {
                return;
            }
            let c = self.wchar[k];
            if !self.used[c] && self.divisors[k].iter().all(|&d| self.included[d]) {
                self.included[k] = true;
                self.used[c] = true;
                self.remaining -= 1;
                self.run(k + 1);
                self.remaining += 1;
                self.used[c] = false;
                self.included[k] = false;
            }
            self.run(k + 1);
        }
    }

    let mut search = Search {
        wchar: &wchar,
        divisors: &divisors,
        suffix: &suffix,
        included: vec![false; basis.len()],
        used: vec![false; all_chars.len()],
        remaining: all_chars.len(),
        found: vec![],
    };
    search.run(0);

    let mut out: Vec<GCluster> = search
        .found
        .into_iter()
        .map(|chosen| {
            let staircase: Vec<Monomial> = chosen.iter().map(|&i| basis[i].clone()).collect();
            let mut in_stair = vec![false; basis.len()];
            for &i in &chosen {
                in_stair[i] = true;
            }
            let mut gens = coinv.invariant_gens().to_vec();
            gens.extend(
                basis
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !in_stair[*i])
                    .map(|(_, m)| m.clone()),
            );
            let ideal = MonomialIdeal::new(n, gens).expect("consistent variable count");
            let characters = chosen.iter().map(|&i| coinv.weight(i).clone()).collect();
            GCluster {
                ideal: ClusterIdeal::Monomial(ideal),
                quotient_basis: staircase,
                characters,
            }
        })
        .collect();
    out.sort_by(|a, b| a.monomial_ideal().cmp(&b.monomial_ideal()));
    out
}

/// A point of the quotient: the values of the invariant generators, in
/// their canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPoint {
    pub values: Vec<CyclotomicNumber>,
}

impl QuotientPoint {
    pub fn is_origin(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Checks every binomial relation `prod f^a = prod f^b` among the
    /// invariant generators with at most `max_len` factors per side.
    pub fn satisfies_relations(&self, gens: &[Monomial], max_len: usize) -> Result<bool> {
        let Some(first) = self.values.first() else {
            return Ok(true);
        };
        let m = self
            .values
            .iter()
            .map(|v| v.conductor())
            .fold(first.conductor(), num_integer::lcm);
        let vals = self
            .values
            .iter()
            .map(|v| v.embed_to_conductor(m))
            .collect::<Result<Vec<_>>>()?;
        let nvars = gens.first().map_or(0, |g| g.nvars());
        let mut seen: HashMap<Monomial, CyclotomicNumber> = HashMap::new();
        let mut ok = true;
        // multisets as non-decreasing index sequences
        fn walk(
            start: usize,
            left: usize,
            mono: Monomial,
            val: CyclotomicNumber,
            gens: &[Monomial],
            vals: &[CyclotomicNumber],
            seen: &mut HashMap<Monomial, CyclotomicNumber>,
            ok: &mut bool,
        ) {
            match seen.get(&mono) {
                Some(v) if *v != val => *ok = false,
                Some(_) => {}
                None => {
                    seen.insert(mono.clone(), val.clone());
                }
            }
            if left == 0 {
                return;
            }
            for k in start..gens.len() {
                walk(k, left - 1, mono.mul(&gens[k]), val.mul(&vals[k]), gens, vals, seen, ok);
            }
        }
        walk(
            0,
            max_len,
            Monomial::one(nvars),
            CyclotomicNumber::one(m)?,
            gens,
            &vals,
            &mut seen,
            &mut ok,
        );
        Ok(ok)
    }
}

/// The image of a cluster under the map to the quotient: each invariant
/// generator is congruent to a scalar modulo the cluster ideal.
pub fn tau_support(coinv: &CoinvariantAlgebra, cluster: &GCluster) -> Result<QuotientPoint> {
    let gens = coinv.invariant_gens();
    match &cluster.ideal {
        ClusterIdeal::Monomial(i) => {
            let values = gens
                .iter()
                .map(|f| {
                    if i.contains(f) {
                        Ok(CyclotomicNumber::rational(Rational::zero()))
                    } else {
                        Err(Error::Integrity(format!(
                            "invariant {f} is not congruent to a scalar modulo {i}"
                        )))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(QuotientPoint { values })
        }
        ClusterIdeal::Subspace(e) => {
            // Invariant generators vanish in S/nS; the quotient must still
            // keep the constants.
            let unit = coinv
                .index_of(&Monomial::one(coinv.action().num_variables()))
                .ok_or_else(|| Error::Integrity("coinvariant algebra is zero".into()))?;
            let mut one = vec![Rational::zero(); coinv.dim()];
            one[unit] = Rational::from_integer(1.into());
            if e.contains(&one) {
                return Err(Error::Integrity("the unit ideal is not a cluster".into()));
            }
            Ok(QuotientPoint {
                values: vec![CyclotomicNumber::rational(Rational::zero()); gens.len()],
            })
        }
        ClusterIdeal::Orbit(o) => {
            let values = gens
                .iter()
                .map(|f| o.scalar_residue(f))
                .collect::<Result<Vec<_>>>()?;
            Ok(QuotientPoint { values })
        }
    }
}

/// Evaluates a monomial at a point with cyclotomic coordinates.
pub fn evaluate_monomial(m: &Monomial, point: &[CyclotomicNumber], conductor: u32) -> Result<CyclotomicNumber> {
    m.exponents()
        .iter()
        .zip(point)
        .try_fold(CyclotomicNumber::one(conductor)?, |acc, (&a, p)| {
            acc.try_mul(&p.pow(a as i64)?)
        })
}

/// The vanishing ideal of a finite orbit, described by its points and a set
/// of standard monomials (graded-lex ascending) whose evaluations form a
/// basis of the functions on the orbit.
#[derive(Clone, Debug, PartialEq)]
pub struct OrbitIdeal {
    conductor: u32,
    point: Vec<CyclotomicNumber>,
    orbit: Vec<Vec<CyclotomicNumber>>,
    standard: Vec<Monomial>,
    degree_bound: u32,
}

impl OrbitIdeal {
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn point(&self) -> &[CyclotomicNumber] {
        &self.point
    }

    pub fn orbit(&self) -> &[Vec<CyclotomicNumber>] {
        &self.orbit
    }

    pub fn standard_monomials(&self) -> &[Monomial] {
        &self.standard
    }

    /// Degree at which the evaluation rank was certified stable.
    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    fn eval_vector(&self, m: &Monomial) -> Result<Vec<CyclotomicNumber>> {
        self.orbit
            .iter()
            .map(|p| evaluate_monomial(m, p, self.conductor))
            .collect()
    }

    fn standard_matrix(&self) -> Result<Matrix<CyclotomicNumber>> {
        let cols = self
            .standard
            .iter()
            .map(|m| self.eval_vector(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_rows(self.orbit.len(), self.conductor, cols)?.transpose())
    }

    /// Coordinates of the residue of `m` in the standard monomial basis.
    pub fn normal_form(&self, m: &Monomial) -> Result<Vec<CyclotomicNumber>> {
        let rhs = self.eval_vector(m)?;
        self.standard_matrix()?
            .solve(&rhs)?
            .ok_or_else(|| Error::Internal("standard monomials do not span the orbit functions".into()))
    }

    fn scalar_residue(&self, f: &Monomial) -> Result<CyclotomicNumber> {
        let nf = self.normal_form(f)?;
        let unit = self.standard.iter().position(|m| m.is_one());
        for (k, c) in nf.iter().enumerate() {
            if Some(k) != unit && !c.is_zero() {
                return Err(Error::Integrity(format!(
                    "invariant {f} is not congruent to a scalar modulo the orbit ideal"
                )));
            }
        }
        match unit {
            Some(u) => Ok(nf[u].clone()),
            None => CyclotomicNumber::zero(self.conductor),
        }
    }

    /// Reduced generators `m - NF(m)` at the outer corners of the standard
    /// staircase, as text.
    pub fn generator_strings(&self) -> Result<Vec<String>> {
        let n = self.point.len();
        let mut corners: Vec<Monomial> = vec![];
        for s in &self.standard {
            for i in 0..n {
                let m = s.mul_var(i);
                if self.standard.contains(&m) || corners.contains(&m) {
                    continue;
                }
                let is_corner = (0..n).all(|j| match m.div(&Monomial::var(n, j)) {
                    Some(q) => self.standard.contains(&q),
                    None => true,
                });
                if is_corner {
                    corners.push(m);
                }
            }
        }
        corners.sort();
        corners
            .iter()
            .map(|m| {
                let nf = self.normal_form(m)?;
                let mut s = m.to_string();
                for (c, b) in nf.iter().zip(&self.standard).rev() {
                    if c.is_zero() {
                        continue;
                    }
                    // m - sum c_b b, printed with signs folded in for rational c
                    let (sign, coeff) = match c.to_rational() {
                        Some(q) => {
                            let sign = if q < Rational::zero() { "+" } else { "-" };
                            let a = num_traits::Signed::abs(&q);
                            let text = if a.is_one() && !b.is_one() {
                                String::new()
                            } else if a.is_integer() {
                                a.to_string()
                            } else {
                                format!("({a})")
                            };
                            (sign, text)
                        }
                        None => ("-", format!("({c})")),
                    };
                    match (coeff.is_empty(), b.is_one()) {
                        (true, _) => s.push_str(&format!(" {sign} {b}")),
                        (false, true) => s.push_str(&format!(" {sign} {coeff}")),
                        (false, false) => s.push_str(&format!(" {sign} {coeff}*{b}")),
                    }
                }
                Ok(s)
            })
            .collect()
    }
}

/// Orbit cluster plus both freeness certificates.
#[derive(Clone, Debug)]
pub struct OrbitCluster {
    pub ideal: OrbitIdeal,
    pub report: ClusterReport,
    pub cluster: Option<GCluster>,
    pub orbit_size: usize,
    pub stabilizer: Vec<Character>,
    pub free_by_orbit: bool,
    /// Trace of each group element on the quotient, in element order.
    pub traces: Vec<(Character, CyclotomicNumber)>,
    pub free_by_trace: bool,
}

/// Image of `point` under the group element `g`.
pub fn act_on_point(
    action: &ActionData,
    g: &Character,
    point: &[CyclotomicNumber],
    conductor: u32,
) -> Result<Vec<CyclotomicNumber>> {
    action
        .weights()
        .iter()
        .zip(point)
        .map(|(w, p)| {
            character_value(action.group(), g, w)?
                .embed_to_conductor(conductor)?
                .try_mul(p)
        })
        .collect()
}

/// Builds the ideal of the orbit of `point` by evaluation and reports
/// whether the orbit is free, by orbit size and independently by traces.
pub fn orbit_cluster(coinv: &CoinvariantAlgebra, point: &[CyclotomicNumber]) -> Result<OrbitCluster> {
    orbit_cluster_with_limit(coinv, point, u32::MAX)
}

/// As [`orbit_cluster`], failing if the evaluation degree would exceed
/// `max_degree` before the rank stabilizes.
pub fn orbit_cluster_with_limit(
    coinv: &CoinvariantAlgebra,
    point: &[CyclotomicNumber],
    max_degree: u32,
) -> Result<OrbitCluster> {
    let action = coinv.action();
    let group = action.group();
    let n = action.num_variables();
    if point.len() != n {
        return Err(Error::arg(format!(
            "point has {} coordinates for {n} variables",
            point.len()
        )));
    }
    let conductor = point
        .iter()
        .map(|p| p.conductor())
        .fold(group.exponent(), num_integer::lcm);
    let point = point
        .iter()
        .map(|p| p.embed_to_conductor(conductor))
        .collect::<Result<Vec<_>>>()?;

    let mut orbit: Vec<Vec<CyclotomicNumber>> = vec![];
    let mut stabilizer = vec![];
    for g in group.elements() {
        let q = act_on_point(action, &g, &point, conductor)?;
        if q == point {
            stabilizer.push(g.clone());
        }
        if !orbit.contains(&q) {
            orbit.push(q);
        }
    }

    let mut ideal = OrbitIdeal {
        conductor,
        point: point.clone(),
        orbit,
        standard: vec![],
        degree_bound: 0,
    };

    // Greedy standard monomials in ascending order; the rank is certified
    // once one further degree adds nothing.
    let mut degree = (group.order() as u32).saturating_sub(1).min(max_degree);
    loop {
        let mut span = Echelon::<CyclotomicNumber>::zero_space(ideal.orbit.len(), conductor);
        let mut standard = vec![];
        let mut rank_at = vec![];
        for d in 0..=degree + 1 {
            for m in Monomial::of_degree(n, d) {
                let v = ideal.eval_vector(&m)?;
                if !span.contains(&v) {
                    span = span.join(&Echelon::span(ideal.orbit.len(), conductor, vec![v])?);
                    standard.push(m);
                }
            }
            rank_at.push(standard.len());
        }
        let r = rank_at.len();
        if rank_at[r - 1] == rank_at[r - 2] {
            ideal.standard = standard
                .into_iter()
                .filter(|m| m.degree() <= degree)
                .collect();
            ideal.degree_bound = degree;
            break;
        }
        if degree >= max_degree {
            return Err(Error::arg(format!(
                "evaluation rank did not stabilize by degree {max_degree}"
            )));
        }
        degree = degree.saturating_mul(2).max(1).min(max_degree);
    }

    let mut traces = vec![];
    for g in group.elements() {
        let t = ideal.standard.iter().try_fold(
            CyclotomicNumber::zero(group.exponent())?,
            |acc, m| -> Result<_> {
                let w = action.weight_of_monomial(m.exponents())?;
                acc.try_add(&character_value(group, &g, &w)?)
            },
        )?;
        traces.push((g, t));
    }
    let free_by_trace = traces
        .iter()
        .all(|(g, t)| g.is_trivial() || t.is_zero());
    let orbit_size = ideal.orbit.len();
    let free_by_orbit = orbit_size == group.order();

    let wrapped = ClusterIdeal::Orbit(ideal.clone());
    let (mut report, _) = check(coinv, &wrapped, usize::MAX)?;
    if !free_by_orbit && report.is_cluster {
        return Err(Error::Internal("non-free orbit passed the cluster check".into()));
    }
    if let (false, None) = (report.is_cluster, &report.reason) {
        report.reason = Some("orbit is not free".into());
    }
    let cluster = GCluster::new(coinv, wrapped, usize::MAX)?.ok();
    Ok(OrbitCluster {
        ideal,
        report,
        cluster,
        orbit_size,
        stabilizer,
        free_by_orbit,
        traces,
        free_by_trace,
    })
}

/// Groups a report's characters by multiplicity, for diagnostics.
pub fn character_counts(report: &ClusterReport) -> BTreeMap<Character, usize> {
    multiplicities(&report.characters)
}

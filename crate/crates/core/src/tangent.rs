//! Equivariant tangent data at G-clusters over the origin.
//!
//! * [`tangent_space`]: `Hom^G_S(I, S/I)` for a monomial cluster `I`, from
//!   the Taylor relations among the minimal generators.
//! * [`relative_tangent_space`]: `Hom^G_{S/nS}(J, (S/nS)/J)` for an ideal `J`
//!   of the coinvariant algebra, as weight-preserving linear maps on a basis
//!   of `J` that commute with every variable.
//! * [`stratification_rep`]: the representation `J / mJ` on minimal
//!   generators.
//! * [`eq8_map`]: restriction of relative tangent vectors to generators,
//!   `Hom^G_{S/nS}(J, (S/nS)/J) -> Hom^G(J/mJ, (S/nS)/J)`.
//!
//! All computations are over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::cluster::{enumerate_torus_fixed_clusters, is_ideal_echelon, monomial_ideal_to_subspace};
use crate::error::{Error, Result};
use crate::group_rep::{multiplicities, ActionData, Character};
use crate::linalg::{Echelon, Matrix, Rational, RationalMatrix};
use crate::monomial::{
    quotient_staircase, taylor_syzygies, CoinvariantAlgebra, Monomial, MonomialIdeal, Polynomial,
    Staircase,
};

/// One side of a hom space: labelled, weight-homogeneous basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    pub labels: Vec<String>,
    pub weights: Vec<Character>,
}

impl GradedBasis {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// A basis of equivariant homomorphisms, each a matrix from source basis
/// (rows) to target coordinates (columns).
#[derive(Clone, Debug)]
pub struct EquivariantHomSpace {
    pub source: GradedBasis,
    pub target: GradedBasis,
    pub hom_basis: Vec<RationalMatrix>,
}

impl EquivariantHomSpace {
    pub fn dimension(&self) -> usize {
        self.hom_basis.len()
    }

    /// Every nonzero entry links a source and target of equal weight.
    pub fn is_weight_preserving(&self) -> bool {
        self.hom_basis.iter().all(|m| {
            (0..m.rows()).all(|r| {
                (0..m.cols()).all(|c| {
                    m.get(r, c).is_zero() || self.source.weights[r] == self.target.weights[c]
                })
            })
        })
    }
}

fn unit_rat() -> Rational {
    Rational::one()
}

/// Weight-compatible unknowns `(source index, target index)`.
fn compatible_pairs(source: &[Character], target: &[Character]) -> Vec<(usize, usize)> {
    let mut out = vec![];
    for (s, ws) in source.iter().enumerate() {
        for (t, wt) in target.iter().enumerate() {
            if ws == wt {
                out.push((s, t));
            }
        }
    }
    out
}

fn kernel_to_homs(
    constraints: Vec<Vec<Rational>>,
    unknowns: &[(usize, usize)],
    rows: usize,
    cols: usize,
) -> Vec<RationalMatrix> {
    let m = Matrix::from_rows(unknowns.len(), (), constraints).expect("uniform constraint rows");
    m.kernel_basis()
        .into_iter()
        .map(|v| {
            let mut h = RationalMatrix::zeros(rows, cols, ());
            for (x, &(s, t)) in v.into_iter().zip(unknowns) {
                h.set(s, t, x);
            }
            h
        })
        .collect()
}

/// `Hom^G_S(I, S/I)` for a monomial ideal of finite colength.
///
/// Unknowns are the images of the minimal generators in the staircase
/// basis, restricted to matching weights. A multiple `u * s` of a staircase
/// monomial is either in the staircase or zero in `S/I`, so each Taylor
/// relation gives linear equations coefficientwise.
pub fn tangent_space(action: &ActionData, ideal: &MonomialIdeal, cap: usize) -> Result<EquivariantHomSpace> {
    let stair = match quotient_staircase(ideal, cap) {
        Staircase::Finite(s) => s,
        Staircase::Infinite => return Err(Error::arg("quotient not finite")),
    };
    let index: BTreeMap<&Monomial, usize> = stair.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let gens = ideal.gens();
    let weight = |m: &Monomial| action.weight_of_monomial(m.exponents());
    let source = GradedBasis {
        labels: gens.iter().map(|g| g.to_string()).collect(),
        weights: gens.iter().map(weight).collect::<Result<_>>()?,
    };
    let target = GradedBasis {
        labels: stair.iter().map(|m| m.to_string()).collect(),
        weights: stair.iter().map(weight).collect::<Result<_>>()?,
    };
    let unknowns = compatible_pairs(&source.weights, &target.weights);
    let slot: BTreeMap<(usize, usize), usize> =
        unknowns.iter().enumerate().map(|(k, &p)| (p, k)).collect();

    let mut constraints = vec![];
    for rel in taylor_syzygies(ideal) {
        // coefficient of each staircase target in left*phi(g_i) - right*phi(g_j)
        let mut rows: BTreeMap<usize, Vec<Rational>> = BTreeMap::new();
        for (gen, mult, sign) in [(rel.i, &rel.left, 1i64), (rel.j, &rel.right, -1i64)] {
            for (s, m) in stair.iter().enumerate() {
                let Some(&k) = slot.get(&(gen, s)) else { continue };
                if let Some(&t) = index.get(&mult.mul(m)) {
                    let row = rows
                        .entry(t)
                        .or_insert_with(|| vec![Rational::zero(); unknowns.len()]);
                    row[k] += Rational::from_integer(sign.into());
                }
            }
        }
        constraints.extend(rows.into_values());
    }
    let hom_basis = kernel_to_homs(constraints, &unknowns, gens.len(), stair.len());
    Ok(EquivariantHomSpace {
        source,
        target,
        hom_basis,
    })
}

/// An ideal of the coinvariant algebra, with the data shared by the
/// relative computations.
struct CoinvIdeal<'a> {
    coinv: &'a CoinvariantAlgebra,
    space: &'a Echelon<Rational>,
    /// weights of the echelon rows (which are homogeneous)
    row_weights: Vec<Character>,
    /// free columns: a monomial basis of the quotient
    free: Vec<usize>,
}

impl<'a> CoinvIdeal<'a> {
    fn new(coinv: &'a CoinvariantAlgebra, space: &'a Echelon<Rational>) -> Result<Self> {
        if !is_ideal_echelon(coinv, space)? {
            return Err(Error::arg("subspace is not an ideal of the coinvariant algebra"));
        }
        let row_weights = space
            .rows()
            .iter()
            .map(|row| row_weight(coinv, row))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            coinv,
            space,
            row_weights,
            free: space.free_columns(),
        })
    }

    /// Quotient coordinates (on the free columns) of a vector of `S/nS`.
    fn project(&self, v: &[Rational]) -> Vec<Rational> {
        let r = self.space.reduce(v);
        self.free.iter().map(|&c| r[c].clone()).collect()
    }

    fn free_weights(&self) -> Vec<Character> {
        self.free.iter().map(|&c| self.coinv.weight(c).clone()).collect()
    }

    fn label(&self, v: &[Rational]) -> String {
        let n = self.coinv.action().num_variables();
        Polynomial::from_terms(
            n,
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (self.coinv.basis()[i].clone(), c.clone())),
        )
        .to_string()
    }

    /// `m J` spanned by variable multiples of the basis.
    fn maximal_times(&self) -> Echelon<Rational> {
        let n = self.coinv.action().num_variables();
        let mut vecs = vec![];
        for i in 0..n {
            let x = Monomial::var(n, i);
            for row in self.space.rows() {
                vecs.push(self.coinv.mul_monomial_vec(&x, row, &()));
            }
        }
        Echelon::span(self.coinv.dim(), (), vecs).expect("uniform rows")
    }
}

fn row_weight(coinv: &CoinvariantAlgebra, row: &[Rational]) -> Result<Character> {
    let mut w: Option<&Character> = None;
    for (i, x) in row.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let c = coinv.weight(i);
        match w {
            None => w = Some(c),
            Some(p) if p != c => return Err(Error::arg("subspace is not G-stable")),
            _ => {}
        }
    }
    w.cloned().ok_or_else(|| Error::Internal("zero echelon row".into()))
}

/// `Hom^G_{S/nS}(J, (S/nS)/J)`: weight-preserving linear maps `phi` on the
/// echelon basis of `J` with `phi(x_i v) = x_i phi(v)` for every variable
/// and basis vector.
pub fn relative_tangent_space(
    coinv: &CoinvariantAlgebra,
    space: &Echelon<Rational>,
) -> Result<EquivariantHomSpace> {
    let j = CoinvIdeal::new(coinv, space)?;
    relative_tangent_inner(&j)
}

fn relative_tangent_inner(j: &CoinvIdeal<'_>) -> Result<EquivariantHomSpace> {
    let coinv = j.coinv;
    let n = coinv.action().num_variables();
    let rows = j.space.rows();
    let target_w = j.free_weights();
    let unknowns = compatible_pairs(&j.row_weights, &target_w);
    let slot: BTreeMap<(usize, usize), usize> =
        unknowns.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let nf = j.free.len();

    // x_i * e_q projected to the quotient, for each variable and free column
    let mut var_on_quotient = vec![];
    for i in 0..n {
        let x = Monomial::var(n, i);
        let cols: Vec<Vec<Rational>> = j
            .free
            .iter()
            .map(|&c| {
                let mut e = vec![Rational::zero(); coinv.dim()];
                e[c] = unit_rat();
                j.project(&coinv.mul_monomial_vec(&x, &e, &()))
            })
            .collect();
        var_on_quotient.push(cols);
    }

    let mut constraints = vec![];
    for (i, xq) in var_on_quotient.iter().enumerate() {
        let x = Monomial::var(n, i);
        for (r, row) in rows.iter().enumerate() {
            let prod = coinv.mul_monomial_vec(&x, row, &());
            let coords = j
                .space
                .coordinates(&prod)
                .ok_or_else(|| Error::Internal("ideal not closed".into()))?;
            // sum_s coords[s] phi(v_s) - x_i phi(v_r) = 0, per quotient coordinate
            let mut eqs = vec![vec![Rational::zero(); unknowns.len()]; nf];
            for (s, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (q, eq) in eqs.iter_mut().enumerate() {
                    if let Some(&k) = slot.get(&(s, q)) {
                        eq[k] += c;
                    }
                }
            }
            for (q, col) in xq.iter().enumerate() {
                let Some(&k) = slot.get(&(r, q)) else { continue };
                for (t, a) in col.iter().enumerate() {
                    if !a.is_zero() {
                        eqs[t][k] -= a;
                    }
                }
            }
            constraints.extend(eqs.into_iter().filter(|e| e.iter().any(|x| !x.is_zero())));
        }
    }
    let hom_basis = kernel_to_homs(constraints, &unknowns, rows.len(), nf);
    Ok(EquivariantHomSpace {
        source: GradedBasis {
            labels: rows.iter().map(|r| j.label(r)).collect(),
            weights: j.row_weights.clone(),
        },
        target: GradedBasis {
            labels: j.free.iter().map(|&c| coinv.basis()[c].to_string()).collect(),
            weights: target_w,
        },
        hom_basis,
    })
}

/// The representation `J / mJ`, with generators lifted canonically: echelon
/// rows of `J` taken in order whenever they are independent modulo `mJ`.
#[derive(Clone, Debug, PartialEq)]
pub struct StratRep {
    pub generators: Vec<Vec<Rational>>,
    pub labels: Vec<String>,
    /// Characters of the generators, in generator order.
    pub characters: Vec<Character>,
}

impl StratRep {
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn sorted_characters(&self) -> Vec<Character> {
        let mut c = self.characters.clone();
        c.sort();
        c
    }
}

pub fn stratification_rep(coinv: &CoinvariantAlgebra, space: &Echelon<Rational>) -> Result<StratRep> {
    let j = CoinvIdeal::new(coinv, space)?;
    Ok(strat_inner(&j))
}

fn strat_inner(j: &CoinvIdeal<'_>) -> StratRep {
    let mut acc = j.maximal_times();
    let mut out = StratRep {
        generators: vec![],
        labels: vec![],
        characters: vec![],
    };
    for (row, w) in j.space.rows().iter().zip(&j.row_weights) {
        if acc.contains(row) {
            continue;
        }
        acc = acc.join(&Echelon::span(acc.cols(), (), vec![row.clone()]).expect("row length"));
        out.labels.push(j.label(row));
        out.generators.push(row.clone());
        out.characters.push(w.clone());
    }
    out
}

#[derive(Clone, Debug)]
pub struct Eq8Report {
    /// target coordinates x relative tangent basis
    pub matrix: RationalMatrix,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub injective: bool,
    pub isomorphism: bool,
}

/// Restriction of relative tangent vectors to the minimal generators.
pub fn eq8_map(coinv: &CoinvariantAlgebra, space: &Echelon<Rational>) -> Result<Eq8Report> {
    let j = CoinvIdeal::new(coinv, space)?;
    let rel = relative_tangent_inner(&j)?;
    let strat = strat_inner(&j);
    Ok(eq8_from_parts(&j, &rel, &strat))
}

fn eq8_from_parts(j: &CoinvIdeal<'_>, rel: &EquivariantHomSpace, strat: &StratRep) -> Eq8Report {
    let target_w = j.free_weights();
    let coords: Vec<(usize, usize)> = compatible_pairs(&strat.characters, &target_w);
    let gen_coords: Vec<Vec<Rational>> = strat
        .generators
        .iter()
        .map(|g| j.space.coordinates(g).expect("generators lie in the ideal"))
        .collect();
    let mut matrix = RationalMatrix::zeros(coords.len(), rel.dimension(), ());
    for (col, h) in rel.hom_basis.iter().enumerate() {
        for (row, &(k, q)) in coords.iter().enumerate() {
            let v = gen_coords[k]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .fold(Rational::zero(), |acc, (r, c)| acc + c * h.get(r, q));
            matrix.set(row, col, v);
        }
    }
    let rank = matrix.rank();
    let source_dim = rel.dimension();
    let target_dim = coords.len();
    Eq8Report {
        matrix,
        source_dim,
        target_dim,
        rank,
        injective: rank == source_dim,
        isomorphism: rank == source_dim && rank == target_dim,
    }
}

/// Everything computed at one torus-fixed cluster.
#[derive(Clone, Debug)]
pub struct ClusterSummary {
    pub ideal: MonomialIdeal,
    pub staircase: Vec<Monomial>,
    pub tangent_dim: usize,
    pub relative_tangent_dim: usize,
    pub strat: StratRep,
    pub eq8: Eq8Report,
}

pub fn summarize_cluster(
    coinv: &CoinvariantAlgebra,
    ideal: &MonomialIdeal,
    staircase: &[Monomial],
    cap: usize,
) -> Result<ClusterSummary> {
    let tangent = tangent_space(coinv.action(), ideal, cap)?;
    let space = monomial_ideal_to_subspace(coinv, ideal);
    let j = CoinvIdeal::new(coinv, &space)?;
    let rel = relative_tangent_inner(&j)?;
    let strat = strat_inner(&j);
    let eq8 = eq8_from_parts(&j, &rel, &strat);
    Ok(ClusterSummary {
        ideal: ideal.clone(),
        staircase: staircase.to_vec(),
        tangent_dim: tangent.dimension(),
        relative_tangent_dim: rel.dimension(),
        strat,
        eq8,
    })
}

/// Summaries for every torus-fixed cluster, in enumeration order.
pub fn sweep(coinv: &CoinvariantAlgebra, cap: usize) -> Result<Vec<ClusterSummary>> {
    enumerate_torus_fixed_clusters(coinv)
        .iter()
        .map(|c| {
            let ideal = c.monomial_ideal().expect("torus-fixed clusters are monomial");
            summarize_cluster(coinv, ideal, c.quotient_basis(), cap)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct McKayTable {
    /// Per cluster (enumeration order): the stratification characters.
    pub clusters: Vec<(MonomialIdeal, Vec<Character>)>,
    /// Each nontrivial character with the clusters whose stratification
    /// representation contains it.
    pub incidence: BTreeMap<Character, Vec<usize>>,
    pub all_covered: bool,
}

pub fn mckay_table(coinv: &CoinvariantAlgebra) -> Result<McKayTable> {
    let clusters = enumerate_torus_fixed_clusters(coinv)
        .iter()
        .map(|c| {
            let ideal = c.monomial_ideal().expect("monomial").clone();
            let space = monomial_ideal_to_subspace(coinv, &ideal);
            let strat = stratification_rep(coinv, &space)?;
            Ok((ideal, strat.sorted_characters()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(incidence_table(coinv.action(), clusters))
}

pub fn incidence_table(action: &ActionData, clusters: Vec<(MonomialIdeal, Vec<Character>)>) -> McKayTable {
    let mut incidence: BTreeMap<Character, Vec<usize>> = action
        .group()
        .elements()
        .into_iter()
        .filter(|c| !c.is_trivial())
        .map(|c| (c, vec![]))
        .collect();
    for (k, (_, chars)) in clusters.iter().enumerate() {
        for c in multiplicities(chars).keys() {
            if let Some(v) = incidence.get_mut(c) {
                v.push(k);
            }
        }
    }
    let all_covered = incidence.values().all(|v| !v.is_empty());
    McKayTable {
        clusters,
        incidence,
        all_covered,
    }
}

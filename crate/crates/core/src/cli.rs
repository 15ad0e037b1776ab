//! The `ghilb` command line: action-spec parsing, subcommand dispatch and
//! deterministic JSON / TSV reports.
//!
//! Exit status: 0 on success, 1 on a domain failure (the input is not a
//! cluster, a check fails), 2 on a usage error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cluster::{
    default_cap, enumerate_torus_fixed_clusters, monomial_ideal_to_subspace, orbit_cluster_with_limit,
    tau_support, verify_cluster, ClusterIdeal, ClusterReport, GCluster,
};
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::group_rep::{ActionData, Character, FiniteAbelianGroup};
use crate::linalg::{Echelon, Rational};
use crate::monomial::{
    coinvariant_algebra, shift_parse, split_top_level, CoinvariantAlgebra, MonomialIdeal, Polynomial,
};
use crate::tangent::{
    eq8_map, relative_tangent_space, stratification_rep, sweep, tangent_space, incidence_table, EquivariantHomSpace,
};

/// Parses `cyclic:r:a1,...,an` or `d1xd2x...xdk ; w1 | ... | wn`.
pub fn parse_action_spec(text: &str) -> Result<ActionData> {
    let lead = text.len() - text.trim_start().len();
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("cyclic:") {
        let base = lead + 7;
        let (r, ws) = rest
            .split_once(':')
            .ok_or_else(|| Error::parse(base, "expected 'cyclic:r:a1,...,an'"))?;
        let r: u32 = r
            .trim()
            .parse()
            .map_err(|_| Error::parse(base, format!("bad modulus '{r}'")))?;
        if r == 0 {
            return Err(Error::parse(base, "zero modulus"));
        }
        let wbase = base + rest.find(':').unwrap_or(0) + 1;
        let weights = parse_int_list(ws, wbase)?;
        if weights.is_empty() {
            return Err(Error::parse(wbase, "at least one weight is required"));
        }
        return ActionData::cyclic(r, &weights).map_err(|e| Error::parse(wbase, e.to_string()));
    }
    let (group_part, weight_part) = t
        .split_once(';')
        .ok_or_else(|| Error::parse(lead, "expected 'cyclic:r:a1,...' or 'd1x...xdk ; w1 | ... | wn'"))?;
    let mut divisors = vec![];
    let mut at = lead;
    for piece in group_part.split('x') {
        let d: u32 = piece
            .trim()
            .parse()
            .map_err(|_| Error::parse(at, format!("bad elementary divisor '{}'", piece.trim())))?;
        if d == 0 {
            return Err(Error::parse(at, "zero modulus"));
        }
        divisors.push(d);
        at += piece.len() + 1;
    }
    let group = if divisors == [1] {
        FiniteAbelianGroup::trivial()
    } else {
        FiniteAbelianGroup::new(divisors).map_err(|e| Error::parse(lead, e.to_string()))?
    };
    let mut at = lead + group_part.len() + 1;
    let mut weights = vec![];
    for w in weight_part.split('|') {
        let tuple = if group.rank() == 0 && matches!(w.trim(), "" | "0" | "()") {
            vec![]
        } else {
            parse_int_list(w.trim().trim_start_matches('(').trim_end_matches(')'), at)?
        };
        if tuple.len() != group.rank() {
            return Err(Error::parse(
                at,
                format!(
                    "weight '{}' has {} components for a group of rank {}",
                    w.trim(),
                    tuple.len(),
                    group.rank()
                ),
            ));
        }
        weights.push(tuple);
        at += w.len() + 1;
    }
    ActionData::new(group, weights).map_err(|e| Error::parse(lead, e.to_string()))
}

fn parse_int_list(s: &str, at: usize) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    let mut out = vec![];
    let mut pos = at;
    for piece in s.split(',') {
        out.push(
            piece
                .trim()
                .parse()
                .map_err(|_| Error::parse(pos, format!("bad integer '{}'", piece.trim())))?,
        );
        pos += piece.len() + 1;
    }
    Ok(out)
}

/// Canonical text form of an action; `parse_action_spec` inverts it.
pub fn print_action_spec(action: &ActionData) -> String {
    let g = action.group();
    if g.rank() <= 1 {
        let r = g.divisors().first().copied().unwrap_or(1);
        let ws: Vec<String> = action
            .weights()
            .iter()
            .map(|w| w.components().first().copied().unwrap_or(0).to_string())
            .collect();
        return format!("cyclic:{r}:{}", ws.join(","));
    }
    let ws: Vec<String> = action
        .weights()
        .iter()
        .map(|w| {
            w.components()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    format!("{g} ; {}", ws.join(" | "))
}

#[derive(Parser, Debug)]
#[command(name = "ghilb", version, about = "G-Hilbert scheme computations for diagonal abelian actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CommandKind {
    Coinv,
    Clusters,
    Verify,
    Tau,
    Orbit,
    Tangent,
    FiberTangent,
    Stratify,
    Eq8Check,
    Mckay,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariant generators and the coinvariant algebra.
    Coinv(Args),
    /// Torus-fixed G-clusters over the origin.
    Clusters(Args),
    /// Check whether an ideal is a G-cluster.
    Verify(Args),
    /// Image of a cluster in the quotient (from --ideal or --point).
    Tau(Args),
    /// Orbit cluster of a point.
    Orbit(Args),
    /// Equivariant tangent space at a monomial cluster.
    Tangent(Args),
    /// Tangent space of the fiber over the origin.
    FiberTangent(Args),
    /// Stratification representation J/mJ.
    Stratify(Args),
    /// Restriction map from the fiber tangent space to generators.
    Eq8Check(Args),
    /// Full sweep over torus-fixed clusters with McKay incidence.
    Mckay(Args),
}

#[derive(clap::Args, Debug, Clone)]
struct Args {
    /// `cyclic:r:a1,...,an` or `d1x...xdk ; w1 | ... | wn`
    action: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Comma separated generators, e.g. "x^2,x*y,y^2".
    #[arg(long)]
    ideal: Option<String>,
    /// Read --ideal as spanning vectors of a subspace of the coinvariant
    /// algebra instead of ideal generators.
    #[arg(long)]
    subspace: bool,
    /// Comma separated coordinates, each a rational or `cyclo(m): <poly in z>`.
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
    /// Staircase cap (default 4|G|).
    #[arg(long)]
    cap: Option<usize>,
    /// Largest evaluation degree tried for orbit ideals (default: unbounded doubling).
    #[arg(long)]
    max_orbit_degree: Option<u32>,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Tsv,
}

impl Command {
    fn split(self) -> (CommandKind, Args) {
        match self {
            Command::Coinv(a) => (CommandKind::Coinv, a),
            Command::Clusters(a) => (CommandKind::Clusters, a),
            Command::Verify(a) => (CommandKind::Verify, a),
            Command::Tau(a) => (CommandKind::Tau, a),
            Command::Orbit(a) => (CommandKind::Orbit, a),
            Command::Tangent(a) => (CommandKind::Tangent, a),
            Command::FiberTangent(a) => (CommandKind::FiberTangent, a),
            Command::Stratify(a) => (CommandKind::Stratify, a),
            Command::Eq8Check(a) => (CommandKind::Eq8Check, a),
            Command::Mckay(a) => (CommandKind::Mckay, a),
        }
    }
}

/// A finished report: text to print and the exit status.
struct Outcome {
    text: String,
    status: i32,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Argument(_) => Failure::Usage(e.to_string()),
            e => Failure::Domain(e.to_string()),
        }
    }
}

/// Runs the CLI on `argv` (including the program name). Returns the exit
/// status; the report goes to `stdout` (or `--out`), diagnostics to `stderr`.
pub fn run(argv: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return 2;
            }
            let _ = write!(stdout, "{e}");
            return 0;
        }
    };
    let (kind, args) = cli.command.split();
    let result = dispatch(kind, &args);
    match result {
        Ok(outcome) => {
            let written = match &args.out {
                Some(path) => std::fs::write(path, &outcome.text),
                None => stdout.write_all(outcome.text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: cannot write report: {e}");
                return 1;
            }
            outcome.status
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "usage error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn dispatch(kind: CommandKind, args: &Args) -> std::result::Result<Outcome, Failure> {
    let action = parse_action_spec(&args.action)?;
    if args.cap == Some(0) {
        return Err(Failure::Usage("--cap must be positive".into()));
    }
    if args.max_orbit_degree == Some(0) {
        return Err(Failure::Usage("--max-orbit-degree must be positive".into()));
    }
    let coinv = coinvariant_algebra(&action)?;
    let cap = args.cap.unwrap_or_else(|| default_cap(action.group()));
    let ctx = Ctx {
        coinv: &coinv,
        cap,
        args,
    };
    match kind {
        CommandKind::Coinv => ctx.coinv_report(),
        CommandKind::Clusters => ctx.clusters(),
        CommandKind::Verify => ctx.verify(),
        CommandKind::Tau => ctx.tau(),
        CommandKind::Orbit => ctx.orbit(),
        CommandKind::Tangent => ctx.tangent(),
        CommandKind::FiberTangent => ctx.fiber_tangent(),
        CommandKind::Stratify => ctx.stratify(),
        CommandKind::Eq8Check => ctx.eq8_check(),
        CommandKind::Mckay => ctx.mckay(),
    }
}

struct Ctx<'a> {
    coinv: &'a CoinvariantAlgebra,
    cap: usize,
    args: &'a Args,
}

/// Parsed `--ideal`: a monomial ideal of S or a subspace of S/nS.
enum IdealInput {
    Monomial(MonomialIdeal),
    Subspace { space: Echelon<Rational>, labels: Vec<String> },
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn chars_text(cs: &[Character]) -> String {
    cs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct ClusterJson {
    generators: Vec<String>,
    staircase: Vec<String>,
    characters: Vec<Character>,
    tau: Vec<String>,
    is_cluster: bool,
    reason: Option<String>,
}

#[derive(Serialize)]
struct HomJson {
    dimension: usize,
    source: Vec<String>,
    target: Vec<String>,
    /// each basis element as `source -> image` strings
    basis: Vec<Vec<String>>,
}

fn hom_json(h: &EquivariantHomSpace) -> HomJson {
    let basis = h
        .hom_basis
        .iter()
        .map(|m| {
            (0..m.rows())
                .map(|r| {
                    let terms: Vec<String> = (0..m.cols())
                        .filter(|&c| !num_traits::Zero::is_zero(m.get(r, c)))
                        .map(|c| format!("{}*{}", m.get(r, c), h.target.labels[c]))
                        .collect();
                    let image = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                    format!("{} -> {image}", h.source.labels[r])
                })
                .collect()
        })
        .collect();
    HomJson {
        dimension: h.dimension(),
        source: h.source.labels.clone(),
        target: h.target.labels.clone(),
        basis,
    }
}

impl Ctx<'_> {
    fn action(&self) -> &ActionData {
        self.coinv.action()
    }

    fn nvars(&self) -> usize {
        self.action().num_variables()
    }

    fn ideal_input(&self) -> std::result::Result<IdealInput, Failure> {
        let text = self
            .args
            .ideal
            .as_deref()
            .ok_or_else(|| Failure::Usage("this command needs --ideal".into()))?;
        let polys = split_top_level(text)
            .into_iter()
            .map(|(at, g)| Polynomial::parse(self.nvars(), g).map_err(|e| shift_parse(e, at)))
            .collect::<Result<Vec<_>>>()?;
        if !self.args.subspace && polys.iter().all(|p| p.is_monomial()) {
            let gens = polys
                .iter()
                .map(|p| p.terms().keys().next().expect("monomial").clone())
                .collect();
            return Ok(IdealInput::Monomial(MonomialIdeal::new(self.nvars(), gens)?));
        }
        let rows = polys
            .iter()
            .map(|p| self.coinv.coordinates(p))
            .collect::<Result<Vec<_>>>()?;
        let space = Echelon::span(self.coinv.dim(), (), rows)?;
        let labels = polys.iter().map(|p| p.to_string()).collect();
        Ok(IdealInput::Subspace { space, labels })
    }

    /// The image of the input in S/nS, for the fiber commands.
    fn fiber_subspace(&self) -> std::result::Result<Echelon<Rational>, Failure> {
        Ok(match self.ideal_input()? {
            IdealInput::Monomial(i) => monomial_ideal_to_subspace(self.coinv, &i),
            IdealInput::Subspace { space, .. } => space,
        })
    }

    fn point(&self) -> std::result::Result<Vec<CyclotomicNumber>, Failure> {
        let text = self
            .args
            .point
            .as_deref()
            .ok_or_else(|| Failure::Usage("this command needs --point".into()))?;
        Ok(split_top_level(text)
            .into_iter()
            .map(|(at, c)| CyclotomicNumber::parse(c).map_err(|e| shift_parse(e, at)))
            .collect::<Result<Vec<_>>>()?)
    }

    fn cluster_json(&self, gens: Vec<String>, report: &ClusterReport, cluster: Option<&GCluster>) -> Result<ClusterJson> {
        let (staircase, tau) = match cluster {
            Some(c) => (
                c.quotient_basis().iter().map(|m| m.to_string()).collect(),
                tau_support(self.coinv, c)?
                    .values
                    .iter()
                    .map(|v| v.to_string())
                    .collect(),
            ),
            None => (vec![], vec![]),
        };
        Ok(ClusterJson {
            generators: gens,
            staircase,
            characters: report.characters.clone(),
            tau,
            is_cluster: report.is_cluster,
            reason: report.reason.clone(),
        })
    }

    fn emit_clusters(&self, rows: &[ClusterJson]) -> String {
        match self.args.format {
            Format::Json => to_json(&rows),
            Format::Tsv => {
                let mut s = String::from("index\tgenerators\tstaircase\tcharacters\ttau\tis_cluster\treason\n");
                for (k, r) in rows.iter().enumerate() {
                    let _ = writeln!(
                        s,
                        "{k}\t{}\t{}\t{}\t{}\t{}\t{}",
                        r.generators.join(", "),
                        r.staircase.join(", "),
                        chars_text(&r.characters),
                        r.tau.join(", "),
                        r.is_cluster,
                        r.reason.as_deref().unwrap_or("")
                    );
                }
                s
            }
        }
    }

    fn coinv_report(&self) -> std::result::Result<Outcome, Failure> {
        #[derive(Serialize)]
        struct CoinvJson {
            action: String,
            order: usize,
            faithful: bool,
            special_linear: bool,
            invariant_generators: Vec<String>,
            dimension: usize,
            basis: Vec<String>,
            characters: Vec<Character>,
        }
        let c = self.coinv;
        let j = CoinvJson {
            action: print_action_spec(self.action()),
            order: self.action().group().order(),
            faithful: self.action().is_faithful(),
            special_linear: self.action().is_special_linear(),
            invariant_generators: c.invariant_gens().iter().map(|m| m.to_string()).collect(),
            dimension: c.dim(),
            basis: c.basis().iter().map(|m| m.to_string()).collect(),
            characters: c.weights().to_vec(),
        };
        let text = match self.args.format {
            Format::Json => to_json(&j),
            Format::Tsv => {
                let mut s = String::from("monomial\tcharacter\n");
                for (m, w) in j.basis.iter().zip(&j.characters) {
                    let _ = writeln!(s, "{m}\t{w}");
                }
                s
            }
        };
        Ok(Outcome { text, status: 0 })
    }

    fn clusters(&self) -> std::result::Result<Outcome, Failure> {
        let rows = enumerate_torus_fixed_clusters(self.coinv)
            .iter()
            .map(|c| {
                let gens = c
                    .monomial_ideal()
                    .expect("monomial")
                    .gens()
                    .iter()
                    .map(|g| g.to_string())
                    .collect();
                self.cluster_json(gens, &c.report(), Some(c))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Outcome {
            text: self.emit_clusters(&rows),
            status: 0,
        })
    }

    fn checked_input(&self) -> std::result::Result<(Vec<String>, ClusterReport, Option<GCluster>), Failure> {
        let (gens, ideal) = match self.ideal_input()? {
            IdealInput::Monomial(i) => (
                i.gens().iter().map(|g| g.to_string()).collect(),
                ClusterIdeal::Monomial(i),
            ),
            IdealInput::Subspace { space, labels } => (labels, ClusterIdeal::Subspace(space)),
        };
        let report = verify_cluster(self.coinv, &ideal, self.cap)?;
        let cluster = GCluster::new(self.coinv, ideal, self.cap)?.ok();
        Ok((gens, report, cluster))
    }

    fn verify(&self) -> std::result::Result<Outcome, Failure> {
        let (gens, report, cluster) = self.checked_input()?;
        let row = self.cluster_json(gens, &report, cluster.as_ref())?;
        Ok(Outcome {
            text: match self.args.format {
                Format::Json => to_json(&row),
                Format::Tsv => self.emit_clusters(std::slice::from_ref(&row)),
            },
            status: if report.is_cluster { 0 } else { 1 },
        })
    }

    fn tau(&self) -> std::result::Result<Outcome, Failure> {
        #[derive(Serialize)]
        struct TauJson {
            invariant_generators: Vec<String>,
            tau: Option<Vec<String>>,
            is_cluster: bool,
            reason: Option<String>,
        }
        let (report, cluster) = if self.args.point.is_some() {
            let o = orbit_cluster_with_limit(self.coinv, &self.point()?, self.orbit_limit())?;
            (o.report, o.cluster)
        } else {
            let (_, r, c) = self.checked_input()?;
            (r, c)
        };
        let tau = match &cluster {
            Some(c) => Some(
                tau_support(self.coinv, c)?
                    .values
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>(),
            ),
            None => None,
        };
        let j = TauJson {
            invariant_generators: self.coinv.invariant_gens().iter().map(|m| m.to_string()).collect(),
            tau,
            is_cluster: report.is_cluster,
            reason: report.reason.clone(),
        };
        let text = match self.args.format {
            Format::Json => to_json(&j),
            Format::Tsv => {
                let mut s = String::from("invariant\tvalue\n");
                for (k, g) in j.invariant_generators.iter().enumerate() {
                    let v = j.tau.as_ref().map(|t| t[k].as_str()).unwrap_or("");
                    let _ = writeln!(s, "{g}\t{v}");
                }
                s
            }
        };
        Ok(Outcome {
            text,
            status: if report.is_cluster { 0 } else { 1 },
        })
    }

    fn orbit_limit(&self) -> u32 {
        self.args.max_orbit_degree.unwrap_or(u32::MAX)
    }

    fn orbit(&self) -> std::result::Result<Outcome, Failure> {
        #[derive(Serialize)]
        struct OrbitJson {
            point: Vec<String>,
            conductor: u32,
            orbit: Vec<Vec<String>>,
            orbit_size: usize,
            stabilizer: Vec<Character>,
            free_by_orbit: bool,
            free_by_trace: bool,
            traces: BTreeMap<String, String>,
            degree_bound: u32,
            #[serde(flatten)]
            cluster: ClusterJson,
        }
        let o = orbit_cluster_with_limit(self.coinv, &self.point()?, self.orbit_limit())?;
        let strs = |v: &[CyclotomicNumber]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        let mut cluster = self.cluster_json(o.ideal.generator_strings()?, &o.report, o.cluster.as_ref())?;
        if cluster.staircase.is_empty() {
            cluster.staircase = o.ideal.standard_monomials().iter().map(|m| m.to_string()).collect();
        }
        let j = OrbitJson {
            point: strs(o.ideal.point()),
            conductor: o.ideal.conductor(),
            orbit: o.ideal.orbit().iter().map(|p| strs(p)).collect(),
            orbit_size: o.orbit_size,
            stabilizer: o.stabilizer.clone(),
            free_by_orbit: o.free_by_orbit,
            free_by_trace: o.free_by_trace,
            traces: o.traces.iter().map(|(g, t)| (g.to_string(), t.to_string())).collect(),
            degree_bound: o.ideal.degree_bound(),
            cluster,
        };
        let text = match self.args.format {
            Format::Json => to_json(&j),
            Format::Tsv => {
                let mut s = String::from("orbit_point\tcoordinates\n");
                for (k, p) in j.orbit.iter().enumerate() {
                    let _ = writeln!(s, "{k}\t{}", p.join(", "));
                }
                let _ = writeln!(s, "# free_by_orbit={} free_by_trace={} is_cluster={}", j.free_by_orbit, j.free_by_trace, j.cluster.is_cluster);
                s
            }
        };
        Ok(Outcome {
            text,
            status: if o.report.is_cluster { 0 } else { 1 },
        })
    }

    fn tangent(&self) -> std::result::Result<Outcome, Failure> {
        let IdealInput::Monomial(ideal) = self.ideal_input()? else {
            return Err(Failure::Usage("tangent needs a monomial ideal".into()));
        };
        let h = tangent_space(self.action(), &ideal, self.cap)?;
        Ok(Outcome {
            text: self.emit_hom("tangent_dim", &h),
            status: 0,
        })
    }

    fn fiber_tangent(&self) -> std::result::Result<Outcome, Failure> {
        let space = self.fiber_subspace()?;
        let h = relative_tangent_space(self.coinv, &space)?;
        Ok(Outcome {
            text: self.emit_hom("relative_tangent_dim", &h),
            status: 0,
        })
    }

    fn emit_hom(&self, key: &str, h: &EquivariantHomSpace) -> String {
        match self.args.format {
            Format::Json => {
                let mut m = serde_json::Map::new();
                m.insert(key.into(), h.dimension().into());
                m.insert("hom".into(), serde_json::to_value(hom_json(h)).expect("serializable"));
                to_json(&m)
            }
            Format::Tsv => {
                let mut s = format!("{key}\t{}\n", h.dimension());
                for (k, b) in hom_json(h).basis.iter().enumerate() {
                    let _ = writeln!(s, "{k}\t{}", b.join("; "));
                }
                s
            }
        }
    }

    fn stratify(&self) -> std::result::Result<Outcome, Failure> {
        #[derive(Serialize)]
        struct StratJson {
            generators: Vec<String>,
            characters: Vec<Character>,
        }
        let s = stratification_rep(self.coinv, &self.fiber_subspace()?)?;
        let j = StratJson {
            generators: s.labels.clone(),
            characters: s.characters.clone(),
        };
        let text = match self.args.format {
            Format::Json => to_json(&j),
            Format::Tsv => {
                let mut out = String::from("generator\tcharacter\n");
                for (g, c) in j.generators.iter().zip(&j.characters) {
                    let _ = writeln!(out, "{g}\t{c}");
                }
                out
            }
        };
        Ok(Outcome { text, status: 0 })
    }

    fn eq8_check(&self) -> std::result::Result<Outcome, Failure> {
        #[derive(Serialize)]
        struct Eq8Json {
            ideal: String,
            source_dim: usize,
            target_dim: usize,
            rank: usize,
            injective: bool,
            isomorphism: bool,
        }
        let rows: Vec<Eq8Json> = if self.args.ideal.is_some() {
            let space = self.fiber_subspace()?;
            let e = eq8_map(self.coinv, &space)?;
            vec![Eq8Json {
                ideal: self.args.ideal.clone().unwrap_or_default(),
                source_dim: e.source_dim,
                target_dim: e.target_dim,
                rank: e.rank,
                injective: e.injective,
                isomorphism: e.isomorphism,
            }]
        } else {
            sweep(self.coinv, self.cap)?
                .into_iter()
                .map(|s| Eq8Json {
                    ideal: s.ideal.to_string(),
                    source_dim: s.eq8.source_dim,
                    target_dim: s.eq8.target_dim,
                    rank: s.eq8.rank,
                    injective: s.eq8.injective,
                    isomorphism: s.eq8.isomorphism,
                })
                .collect()
        };
        let ok = rows.iter().all(|r| r.injective);
        let text = match self.args.format {
            Format::Json => to_json(&rows),
            Format::Tsv => {
                let mut s = String::from("ideal\tsource_dim\ttarget_dim\trank\tinjective\tisomorphism\n");
                for r in &rows {
                    let _ = writeln!(
                        s,
                        "{}\t{}\t{}\t{}\t{}\t{}",
                        r.ideal, r.source_dim, r.target_dim, r.rank, r.injective, r.isomorphism
                    );
                }
                s
            }
        };
        Ok(Outcome {
            text,
            status: if ok { 0 } else { 1 },
        })
    }

    fn mckay(&self) -> std::result::Result<Outcome, Failure> {
        #[derive(Serialize)]
        struct Eq8Flags {
            injective: bool,
            isomorphism: bool,
        }
        #[derive(Serialize)]
        struct Row {
            generators: Vec<String>,
            staircase: Vec<String>,
            tangent_dim: usize,
            relative_tangent_dim: usize,
            strat_characters: Vec<Character>,
            eq8: Eq8Flags,
        }
        #[derive(Serialize)]
        struct McKayJson {
            action: String,
            clusters: Vec<Row>,
            incidence: BTreeMap<String, Vec<usize>>,
            all_covered: bool,
        }
        let summaries = sweep(self.coinv, self.cap)?;
        let table = incidence_table(
            self.action(),
            summaries
                .iter()
                .map(|s| (s.ideal.clone(), s.strat.sorted_characters()))
                .collect(),
        );
        let rows: Vec<Row> = summaries
            .iter()
            .map(|s| Row {
                generators: s.ideal.gens().iter().map(|g| g.to_string()).collect(),
                staircase: s.staircase.iter().map(|m| m.to_string()).collect(),
                tangent_dim: s.tangent_dim,
                relative_tangent_dim: s.relative_tangent_dim,
                strat_characters: s.strat.sorted_characters(),
                eq8: Eq8Flags {
                    injective: s.eq8.injective,
                    isomorphism: s.eq8.isomorphism,
                },
            })
            .collect();
        let j = McKayJson {
            action: print_action_spec(self.action()),
            clusters: rows,
            incidence: table
                .incidence
                .iter()
                .map(|(c, v)| (c.to_string(), v.clone()))
                .collect(),
            all_covered: table.all_covered,
        };
        let text = match self.args.format {
            Format::Json => to_json(&j),
            Format::Tsv => {
                let mut s = String::from(
                    "index\tgenerators\ttangent_dim\trelative_tangent_dim\tstrat_characters\tinjective\tisomorphism\n",
                );
                for (k, r) in j.clusters.iter().enumerate() {
                    let _ = writeln!(
                        s,
                        "{k}\t{}\t{}\t{}\t{}\t{}\t{}",
                        r.generators.join(", "),
                        r.tangent_dim,
                        r.relative_tangent_dim,
                        chars_text(&r.strat_characters),
                        r.eq8.injective,
                        r.eq8.isomorphism
                    );
                }
                for (c, v) in &j.incidence {
                    let idx: Vec<String> = v.iter().map(|i| i.to_string()).collect();
                    let _ = writeln!(s, "# character {c}: clusters {}", idx.join(" "));
                }
                s
            }
        };
        Ok(Outcome { text, status: 0 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_spec_examples() {
        let a = parse_action_spec("cyclic:3:1,2").unwrap();
        assert_eq!(a.group().order(), 3);
        assert_eq!(a.num_variables(), 2);
        let b = parse_action_spec("2x2 ; 1,0 | 0,1").unwrap();
        assert_eq!(b.group().divisors(), &[2, 2]);
        assert_eq!(b.weights()[1].components(), &[0, 1]);
        assert!(matches!(parse_action_spec("cyclic:0:1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_action_spec("2x2 ; 1 | 0,1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_action_spec("2x0 ; 1,0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_action_spec("cyclic:3:"), Err(Error::Parse { .. })));
        assert!(matches!(parse_action_spec("nonsense"), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn canonical_printing() {
        for (input, canon) in [
            ("cyclic:3:1,2", "cyclic:3:1,2"),
            ("cyclic:3:4,-1", "cyclic:3:1,2"),
            ("3 ; 1 | 2", "cyclic:3:1,2"),
            ("2x2 ; 1,0 | 0,1", "2x2 ; 1,0 | 0,1"),
            (" 2x4;3,5|0,1 ", "2x4 ; 1,1 | 0,1"),
            ("cyclic:1:0,0", "cyclic:1:0,0"),
            ("1 ; 0 | 0", "cyclic:1:0,0"),
        ] {
            let a = parse_action_spec(input).unwrap();
            assert_eq!(print_action_spec(&a), canon, "{input}");
            assert_eq!(parse_action_spec(canon).unwrap(), a);
        }
    }
}

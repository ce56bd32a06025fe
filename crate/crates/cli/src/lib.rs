//! Command-line verbs over JSON documents. Every verb prints one report
//! `{"status", "payload", "witnesses"?}` and exits 0 (ok), 1 (property
//! violation) or 2 (input error).

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homometry::classify2d::{self, ClassificationReport, SearchConfig};
use homometry::constructions::{self, Certificate, GeneralizedVariant, HomometricPair};
use homometry::json::{LatticeDoc, PointSetDoc, RationalRepr, TilingDoc};
use homometry::linalg::rational_to_string;
use homometry::tiling::{self, ConditionReport, ConditionWitness, Tiling};
use homometry::{pointset, Error, Lattice, PointSet, Rational, Vector};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "homometry", version, about = "Exact covariograms, lattice tilings and thin directions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// JSON document: a file path, inline JSON, or `-` for standard input.
    input: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Covariogram of `{"points": [...]}`.
    Covariogram(Input),
    /// Whether `{"K": set, "L": set}` are homometric.
    Homometric(Input),
    /// Whether `{"K": set, "L": set}` differ only by translation or reflection.
    TriviallyHomometric(Input),
    /// Whether `{"points": [...], "lattice"?: {...}}` is lattice-convex.
    LatticeConvex(Input),
    /// The direct sum of `{"S": set, "T": set}`.
    DirectSum(Input),
    /// The thin-direction set `W(T, L)` of a tiling `{"M", "L", "T"}`.
    Wset(Input),
    /// Width along `direction`, or lattice width, of `{"points", "direction"?, "lattice"?}`.
    Width(Input),
    /// Verifies a tiling `{"M", "L", "T"}`.
    VerifyTiling(Input),
    /// Conditions (a), (b), (c) for `{"tiling": {...}, "S": set}`.
    CheckAbc(Input),
    /// All distinct slab tiles `T_q` of an integer basis `{"basis": [...]}`.
    EnumTiles(Input),
    /// The planar classification search.
    Classify2d(ClassifyArgs),
    /// Generates an explicit example.
    GenExample {
        #[command(subcommand)]
        kind: Example,
    },
    /// Irregular examples with machine-checked properties.
    IrregularCatalog,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    /// Inclusive determinant range `A:B`.
    #[arg(long, default_value = "7:18")]
    det_range: String,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    report: ReportFormat,
    /// Also search lattices giving `{0..k} × {0,1}` three thin directions.
    #[arg(long)]
    include_centrally_symmetric: bool,
    /// Also list the width-one family `{0..k} × {0} ∪ {0..l} × {1}`.
    #[arg(long)]
    include_width_one: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Example {
    /// Planar family with parameter `k`; `--s` supplies `S` as a point set document.
    Planar {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        s: Option<String>,
    },
    /// Generalized family in dimension `d`; `--truncated N:M` selects the truncated box.
    Generalized {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        truncated: Option<String>,
    },
    /// `[0,1] × P` over the parabola polygon with `2N+1` vertices.
    Parabola {
        #[arg(long)]
        n: i64,
    },
    /// `(Z, nZ, {0..n-1})` with `S = {0, n, .., (len-1) n}`.
    Interval {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        len: i64,
    },
    /// Tiling where (b) holds but (a) fails.
    CounterexampleAb {
        #[arg(long, default_value_t = 3)]
        d: usize,
    },
    /// Tiling where (c) holds but (b) fails.
    CounterexampleBc {
        #[arg(long, default_value_t = 3)]
        d: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Violation,
    Error,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violation => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub status: Status,
    pub payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Value>,
}

impl Report {
    fn ok(payload: Value) -> Self {
        Report { status: Status::Ok, payload, witnesses: None }
    }

    fn verdict(holds: bool, payload: Value, witnesses: Option<Value>) -> Self {
        Report { status: if holds { Status::Ok } else { Status::Violation }, payload, witnesses }
    }
}

enum CliError {
    Schema { path: String, message: String },
    Input(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl CliError {
    fn report(&self) -> Report {
        let payload = match self {
            CliError::Schema { path, message } => json!({"kind": "schema", "path": path, "message": message}),
            CliError::Input(message) => json!({"kind": "input", "message": message}),
            CliError::Domain(e) => json!({"kind": "domain", "message": e.to_string()}),
        };
        Report { status: Status::Error, payload, witnesses: None }
    }
}

/// Exit code and the text written to standard output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    Outcome { code: 0, output: e.to_string() }
                }
                _ => render(&CliError::Input(e.to_string()).report()),
            };
        }
    };
    if let Command::Classify2d(args) = &cli.command {
        if args.report == ReportFormat::Text {
            return match classify(args) {
                Ok(r) => Outcome { code: 0, output: classification_text(&r) },
                Err(e) => render(&e.report()),
            };
        }
    }
    match dispatch(cli.command, stdin) {
        Ok(report) => render(&report),
        Err(e) => render(&e.report()),
    }
}

fn render(report: &Report) -> Outcome {
    let mut output = serde_json::to_string_pretty(report).expect("reports serialize");
    output.push('\n');
    Outcome { code: report.status.code(), output }
}

fn read_input(input: &Input, stdin: &mut dyn Read) -> Result<String, CliError> {
    match input.input.as_deref() {
        None | Some("-") => {
            let mut text = String::new();
            stdin.read_to_string(&mut text).map_err(|e| CliError::Input(format!("reading standard input: {e}")))?;
            Ok(text)
        }
        Some(s) if s.trim_start().starts_with(['{', '[']) => Ok(s.to_string()),
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("reading {path}: {e}"))),
    }
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| CliError::Schema { path: e.path().to_string(), message: e.inner().to_string() })
}

fn load<T: DeserializeOwned>(input: &Input, stdin: &mut dyn Read) -> Result<T, CliError> {
    parse(&read_input(input, stdin)?)
}

fn rat(x: &Rational) -> Value {
    serde_json::to_value(RationalRepr(x.clone())).expect("rationals serialize")
}

fn vec_json(v: &Vector) -> Value {
    serde_json::to_value(v).expect("vectors serialize")
}

fn points_json(k: &PointSet) -> Value {
    Value::Array(k.iter().map(vec_json).collect())
}

fn tiling_json(t: &Tiling) -> Value {
    serde_json::to_value(TilingDoc::from(t)).expect("tilings serialize")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairDoc {
    #[serde(rename = "K")]
    k: PointSetDoc,
    #[serde(rename = "L")]
    l: PointSetDoc,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConvexDoc {
    points: Vec<Vector>,
    lattice: Option<LatticeDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SumDoc {
    #[serde(rename = "S")]
    s: PointSetDoc,
    #[serde(rename = "T")]
    t: PointSetDoc,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WidthDoc {
    points: Vec<Vector>,
    direction: Option<Vector>,
    lattice: Option<LatticeDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AbcDoc {
    tiling: TilingDoc,
    #[serde(rename = "S")]
    s: PointSetDoc,
}

fn lattice_or_integer(doc: Option<LatticeDoc>, d: usize) -> Result<Lattice, CliError> {
    let l = match doc {
        Some(doc) => doc.to_lattice()?,
        None => Lattice::integer(d),
    };
    if l.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: l.dim() }.into());
    }
    Ok(l)
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Result<Report, CliError> {
    match command {
        Command::Covariogram(input) => {
            let k = load::<PointSetDoc>(&input, stdin)?.to_point_set()?;
            let g = pointset::covariogram(&k)?;
            let entries: Vec<Value> = g.entries().iter().map(|(u, n)| json!({"u": vec_json(u), "value": n})).collect();
            Ok(Report::ok(json!({"size": k.len(), "support_size": g.support_size(), "entries": entries})))
        }
        Command::Homometric(input) => {
            let doc: PairDoc = load(&input, stdin)?;
            let (k, l) = (doc.k.to_point_set()?, doc.l.to_point_set()?);
            let holds = pointset::homometric(&k, &l)?;
            let witness = if holds { None } else { Some(covariogram_difference(&k, &l)?) };
            Ok(Report::verdict(holds, json!({"homometric": holds}), witness))
        }
        Command::TriviallyHomometric(input) => {
            let doc: PairDoc = load(&input, stdin)?;
            let (k, l) = (doc.k.to_point_set()?, doc.l.to_point_set()?);
            let trivial = pointset::trivially_homometric(&k, &l)?;
            let homometric = pointset::homometric(&k, &l)?;
            Ok(Report::verdict(trivial, json!({"trivially_homometric": trivial, "homometric": homometric}), None))
        }
        Command::LatticeConvex(input) => {
            let doc: ConvexDoc = load(&input, stdin)?;
            let k = PointSet::new(doc.points)?;
            let l = lattice_or_integer(doc.lattice, k.dim())?;
            let gap = pointset::lattice_convexity_gap(&k, &l)?;
            let witness = gap.as_ref().map(|g| json!({"gap": vec_json(g)}));
            Ok(Report::verdict(gap.is_none(), json!({"lattice_convex": gap.is_none()}), witness))
        }
        Command::DirectSum(input) => {
            let doc: SumDoc = load(&input, stdin)?;
            let (s, t) = (doc.s.to_point_set()?, doc.t.to_point_set()?);
            if s.dim() != t.dim() {
                return Err(Error::DimensionMismatch { expected: s.dim(), found: t.dim() }.into());
            }
            match pointset::direct_sum(&s, &t) {
                Ok(sum) => Ok(Report::ok(json!({"direct": true, "sum": points_json(&sum)}))),
                Err(Error::NotDirect(_)) => {
                    let witness = double_decomposition(&s, &t);
                    Ok(Report::verdict(false, json!({"direct": false}), Some(witness)))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Wset(input) => {
            let t = load::<TilingDoc>(&input, stdin)?.to_tiling()?;
            let w = tiling::w_set(t.t(), t.l())?;
            let vectors: Vec<Value> = w.widths.iter().map(|(u, x)| json!({"u": vec_json(u), "width": rat(x)})).collect();
            Ok(Report::ok(json!({"count": w.len(), "vectors": vectors})))
        }
        Command::Width(input) => {
            let doc: WidthDoc = load(&input, stdin)?;
            let k = PointSet::new(doc.points)?;
            match doc.direction {
                Some(u) => {
                    if u.dim() != k.dim() {
                        return Err(Error::DimensionMismatch { expected: k.dim(), found: u.dim() }.into());
                    }
                    Ok(Report::ok(json!({"width": rat(&tiling::width(&k, &u))})))
                }
                None => {
                    let l = lattice_or_integer(doc.lattice, k.dim())?;
                    let (w, u) = tiling::lattice_width_of_set(&k, &l)?;
                    Ok(Report::ok(json!({"lattice_width": rat(&w), "direction": vec_json(&u)})))
                }
            }
        }
        Command::VerifyTiling(input) => {
            let doc: TilingDoc = load(&input, stdin)?;
            match doc.to_tiling() {
                Ok(t) => Ok(Report::ok(json!({"verified": true, "det": rat(&t.l().det()), "tile_size": t.t().len()}))),
                Err(e @ (Error::NotATiling(_) | Error::NotLatticeConvex(_) | Error::NotASublattice(_) | Error::NotInLattice(_))) => {
                    let witness = match &e {
                        Error::NotLatticeConvex(g) => json!({"reason": e.to_string(), "gap": vec_json(g)}),
                        Error::NotASublattice(v) | Error::NotInLattice(v) => json!({"reason": e.to_string(), "vector": vec_json(v)}),
                        _ => json!({"reason": e.to_string()}),
                    };
                    Ok(Report::verdict(false, json!({"verified": false}), Some(witness)))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::CheckAbc(input) => {
            let doc: AbcDoc = load(&input, stdin)?;
            let t = doc.tiling.to_tiling()?;
            let s = doc.s.to_point_set()?;
            Ok(abc_report(&s, &t)?)
        }
        Command::EnumTiles(input) => {
            let doc: LatticeDoc = load(&input, stdin)?;
            let basis = doc.to_lattice()?.basis().clone();
            let sys = tiling::TqSystem::new(&basis)?;
            let tiles = tiling::enumerate_tiles_tq(&basis)?;
            let list: Vec<Value> = tiles.iter().map(|t| json!({"q": t.q, "points": points_json(&t.tile)})).collect();
            Ok(Report::ok(json!({"det": sys.det, "contents": sys.contents, "candidates": sys.candidate_count(), "tiles": list})))
        }
        Command::Classify2d(args) => Ok(Report::ok(classification_json(&classify(&args)?))),
        Command::GenExample { kind } => gen_example(kind),
        Command::IrregularCatalog => {
            let list: Vec<Value> = constructions::irregular_examples()?
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "S": points_json(&e.s),
                        "T": points_json(&e.t),
                        "direct": e.direct,
                        "sum": e.sum.as_ref().map(points_json),
                        "sum_lattice_convex": e.sum_lattice_convex,
                        "mirrored_sum_lattice_convex": e.mirrored_sum_lattice_convex,
                        "S_lattice_convex_for_some_lattice": e.s_intrinsically_convex,
                        "T_lattice_convex_for_some_lattice": e.t_intrinsically_convex,
                        "homometric": e.homometric,
                        "nontrivial": e.nontrivial,
                    })
                })
                .collect();
            Ok(Report::ok(json!({"examples": list})))
        }
    }
}

fn covariogram_difference(k: &PointSet, l: &PointSet) -> Result<Value, CliError> {
    let (gk, gl) = (pointset::covariogram(k)?, pointset::covariogram(l)?);
    let keys: BTreeSet<&Vector> = gk.entries().keys().chain(gl.entries().keys()).collect();
    let u = keys.into_iter().find(|u| gk.value(u) != gl.value(u));
    Ok(match u {
        Some(u) => json!({"u": vec_json(u), "K": gk.value(u), "L": gl.value(u)}),
        None => json!({"reason": "dimensions differ"}),
    })
}

fn double_decomposition(s: &PointSet, t: &PointSet) -> Value {
    let mut seen: Vec<(Vector, Vector, Vector)> = Vec::new();
    for a in s.iter() {
        for b in t.iter() {
            let x = a + b;
            if let Some((_, a0, b0)) = seen.iter().find(|(y, _, _)| *y == x) {
                return json!({"point": vec_json(&x), "decompositions": [[vec_json(a0), vec_json(b0)], [vec_json(a), vec_json(b)]]});
            }
            seen.push((x, a.clone(), b.clone()));
        }
    }
    Value::Null
}

fn witness_json(r: &ConditionReport) -> Value {
    match &r.witness {
        None => Value::Null,
        Some(ConditionWitness::ConvexityGap(g)) => json!({"kind": "convexity_gap", "point": vec_json(g)}),
        Some(ConditionWitness::ThickFacetNormal { normal, width }) => {
            json!({"kind": "facet_normal_not_in_W", "normal": vec_json(normal), "width": rat(width)})
        }
    }
}

fn abc_report(s: &PointSet, t: &Tiling) -> Result<Report, CliError> {
    let r = tiling::check_abc(s, t)?;
    let payload = json!({"a": r.a.holds, "b": r.b.holds, "c": r.c.as_ref().map(|c| c.holds)});
    let witnesses = json!({"a": witness_json(&r.a), "b": witness_json(&r.b), "c": r.c.as_ref().map(witness_json)});
    Ok(Report { status: Status::Ok, payload, witnesses: Some(witnesses) })
}

fn parse_range(s: &str) -> Result<(u64, u64), CliError> {
    let bad = || CliError::Input(format!("expected A:B with positive integers, got {s:?}"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    Ok((a, b))
}

fn classify(args: &ClassifyArgs) -> Result<ClassificationReport, CliError> {
    let (det_min, det_max) = parse_range(&args.det_range)?;
    let config = SearchConfig {
        det_min,
        det_max,
        include_centrally_symmetric: args.include_centrally_symmetric,
        include_width_one_case: args.include_width_one,
        workers: args.workers,
    };
    Ok(classify2d::classify(&config)?)
}

fn base_json(b: &classify2d::Base) -> Value {
    json!({"l": b.l, "h": b.h, "s": b.s})
}

fn classification_json(r: &ClassificationReport) -> Value {
    let bases: Vec<Value> = r
        .bases
        .iter()
        .map(|b| {
            json!({
                "det": b.det,
                "base": base_json(&b.base),
                "delta_width": rat(&b.delta_width),
                "q_tried": b.stats.q_tried,
                "dimension_rejections": b.stats.dimension_rejections,
                "diagonal_rejections": b.stats.diagonal_rejections,
                "width_rejections": b.stats.width_rejections,
                "survivors": b.stats.survivors,
            })
        })
        .collect();
    let classes: Vec<Value> = r
        .classes
        .iter()
        .map(|c| {
            json!({
                "representative": points_json(&c.representative),
                "base": base_json(&c.base),
                "q": c.q,
                "diagonal_width": rat(&c.diagonal_width),
                "lattice_width": rat(&c.lattice_width),
                "centrally_symmetric": c.centrally_symmetric,
                "members": c.members.iter().map(|m| json!({"base": base_json(&m.base), "q": m.q})).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut out = json!({
        "det_range": [r.config.det_min, r.config.det_max],
        "q_tried": r.totals.q_tried,
        "survivors": r.totals.survivors,
        "noncentrally_symmetric_classes": r.noncentral_classes().count(),
        "centrally_symmetric_classes": r.central_classes().count(),
        "classes": classes,
        "bases": bases,
    });
    if r.config.include_centrally_symmetric {
        out["three_direction_lattices"] = r
            .three_direction_lattices
            .iter()
            .map(|x| json!({"k": x.k, "T": points_json(&x.tile), "L": LatticeDoc::from(&x.lattice).basis, "W": x.w}))
            .collect();
    }
    if r.config.include_width_one_case {
        out["width_one_family"] =
            r.width_one_family.iter().map(|x| json!({"k": x.k, "l": x.l, "T": points_json(&x.tile)})).collect();
    }
    out
}

fn points_text(k: &PointSet) -> String {
    k.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

fn classification_text(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "determinants {}..{}", r.config.det_min, r.config.det_max);
    for b in &r.bases {
        let st = &b.stats;
        let _ = writeln!(
            s,
            "  det {:>2}  base (l,h,s) = ({},{},{})  w(delta) = {}  q tried {:>4}  dim rej {:>4}  diag rej {:>4}  width rej {:>4}  survivors {}",
            b.det,
            b.base.l,
            b.base.h,
            b.base.s,
            rational_to_string(&b.delta_width),
            st.q_tried,
            st.dimension_rejections,
            st.diagonal_rejections,
            st.width_rejections,
            st.survivors
        );
    }
    let _ = writeln!(s, "q tried {}, survivors {}", r.totals.q_tried, r.totals.survivors);
    let _ = writeln!(
        s,
        "classes: {} noncentrally symmetric, {} centrally symmetric",
        r.noncentral_classes().count(),
        r.central_classes().count()
    );
    for c in &r.classes {
        let _ = writeln!(
            s,
            "  class {}  {} members  centrally symmetric: {}",
            points_text(&c.representative),
            c.members.len(),
            c.centrally_symmetric
        );
    }
    for x in &r.three_direction_lattices {
        let basis: Vec<String> = x.lattice.basis_vectors().iter().map(|v| v.to_string()).collect();
        let _ = writeln!(s, "  k = {}: lattice {} gives |W| = {}", x.k, basis.join(" "), x.w.len());
    }
    for x in &r.width_one_family {
        let _ = writeln!(s, "  width one k = {} l = {}: {}", x.k, x.l, points_text(&x.tile));
    }
    s
}

fn pair_json(p: &HomometricPair) -> Value {
    json!({
        "tiling": tiling_json(&p.tiling),
        "S": points_json(&p.s),
        "sum": points_json(&p.sum),
        "mirrored_sum": points_json(&p.mirrored_sum),
        "homometric": p.is_homometric(),
        "nontrivial": p.nontrivial,
    })
}

fn certificate_report(c: &Certificate) -> Result<Report, CliError> {
    let abc = abc_report(&c.s, &c.tiling)?;
    let payload = json!({"tiling": tiling_json(&c.tiling), "S": points_json(&c.s), "abc": abc.payload});
    Ok(Report { status: Status::Ok, payload, witnesses: abc.witnesses })
}

fn gen_example(kind: Example) -> Result<Report, CliError> {
    match kind {
        Example::Planar { k, s } => {
            let s = match s {
                Some(text) => Some(load::<PointSetDoc>(&Input { input: Some(text) }, &mut std::io::empty())?.to_point_set()?),
                None => None,
            };
            Ok(Report::ok(pair_json(&constructions::planar_family(k, s)?)))
        }
        Example::Generalized { d, k, truncated } => {
            let variant = match truncated {
                None => GeneralizedVariant::Simplex,
                Some(r) => {
                    let (n, m) = parse_range(&r)?;
                    GeneralizedVariant::TruncatedBox { n: n as i64, m: m as i64 }
                }
            };
            Ok(Report::ok(pair_json(&constructions::generalized_family(d, k, variant)?)))
        }
        Example::Parabola { n } => {
            let p = constructions::parabola_construction(n, None)?;
            let mut payload = pair_json(&p);
            payload["facets"] = json!(p.s.hull()?.facets().len());
            Ok(Report::ok(payload))
        }
        Example::Interval { n, len } => Ok(Report::ok(pair_json(&constructions::interval_pair(n, len)?))),
        Example::CounterexampleAb { d } => certificate_report(&constructions::counterexample_ab(d)?),
        Example::CounterexampleBc { d } => certificate_report(&constructions::counterexample_bc(d)?),
    }
}

//! JSON command-line front end.
//!
//! Every subcommand reads one input document (a file path, or standard input
//! with `--json`) and prints one JSON value. Objects are emitted with sorted
//! keys and exact numbers are strings, so output is byte-stable.
//!
//! Exit codes: `0` success, `1` domain error (the output is
//! `{"error": {"kind", "message"}}`), `2` malformed input. `fixtures` exits
//! `1` when any claim fails.
//!
//! Input document (all fields optional unless a subcommand needs them):
//!
//! ```json
//! {
//!   "r": 2, "d": 0, "genus": 3,
//!   "points": [{"label": "x", "weights": ["0", "1/3"]}],
//!   "symmetries": [{"perm": ["x"], "multiplicity": 1}],
//!   "target": {"d": 0, "points": [...]},
//!   "pattern": "10",
//!   "transform": {"perm": ["x"], "sign": -1, "tdeg": 1, "hecke": [1]},
//!   "transforms": [...],
//!   "matrix": [["1", "2"], ["2", "4"]],
//!   "a": [[{"1": "1"}, "0"], ["0", "1"]], "b": ...
//! }
//! ```
//!
//! A permutation lists, for each point in order, the label (or 0-based
//! index) of the point it is sent to. A matrix entry is a rational string or
//! an object mapping exponents of `z` to rational strings. Patterns are
//! `|`-separated 0/1 rows (`"10|01"`) or nested arrays.

use std::collections::BTreeMap;
use std::io::Read;

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::autgroup::{automorphism_group, concentrated_orders, iso_transforms, CurveData};
use crate::chamber::{m_bounds, m_vec, walls_crossed};
use crate::error::Error;
use crate::fixtures;
use crate::local_matrix::{
    hecke_conjugation_check, is_inner, is_pure_tensor, mp_matrix, rank1_factor, xi_matrix, Laurent,
    LaurentMatrix,
};
use crate::rational::{fmt_q, parse_q};
use crate::transform::{apply_to_degree, apply_to_weights, compose, inverse, NumTransform, Sign};
use crate::weights::{
    concentration_threshold, dim_nonreduced_stratum, dims, genus_bounds, is_concentrated,
    is_generic, normalize, owt, pdeg, s_min, wall_value, ParabolicType, WeightSystem,
};

/// Command-line arguments.
#[derive(Parser, Debug)]
#[command(
    name = "parmod",
    version,
    about = "Exact chamber, transformation and automorphism computations for full-flag parabolic weight systems"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input document path.
    #[arg(global = true)]
    input: Option<std::path::PathBuf>,
    /// Read the input document from standard input.
    #[arg(long, global = true)]
    json: bool,
    /// `l` for the (l, m)-stability and codimension bounds.
    #[arg(long, global = true, default_value_t = 1)]
    l: u64,
    /// `m` for the (l, m)-stability bound.
    #[arg(long, global = true, default_value_t = 0)]
    m: u64,
    /// `k` for the (l, m)-stability bound.
    #[arg(long, global = true, default_value_t = 1)]
    k: u64,
    /// Matrix size for `matrix-xi`; number of points for `dims`/`orders`
    /// when no input document is given.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Rank when no input document is given.
    #[arg(long, global = true)]
    r: Option<usize>,
    /// Genus when the input document has none.
    #[arg(long, global = true)]
    g: Option<u32>,
    /// Truncation precision for `matrix-mp` without `b`.
    #[arg(long, global = true, default_value_t = 8)]
    precision: i64,
    /// `walls`: list every integer wall, not only the relevant ones.
    #[arg(long, global = true)]
    all: bool,
    /// `dims`: also report the stratum `N^d` for this `d`.
    #[arg(long, global = true)]
    sub_degree: Option<i64>,
    /// `orders`: order of `Aut(X, D)`.
    #[arg(long, global = true, default_value_t = 1)]
    aut_order: u64,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Canonical translation representative (first weight 0 at every point).
    Normalize,
    /// owt, pdeg, s_min and the wall value for `pattern`.
    Owt,
    /// The chamber invariant M̄(r, α, d).
    Invariant,
    /// Whether `points` and `target.points` share a numerical chamber at `d`.
    SameChamber,
    /// Walls separating `points` from `target.points`.
    Walls,
    /// Strict genericity, with a witness wall.
    Generic,
    /// Concentration test.
    Concentrated,
    /// Moduli and Hitchin-base dimensions.
    Dims,
    /// Genus thresholds.
    Bounds,
    /// Apply `transform` to the weights and degree.
    Transform,
    /// Normal form of the composite of `transforms` (rightmost applied first).
    Compose,
    /// Normal form of the inverse of `transform`.
    Inverse,
    /// Numerical automorphism classes.
    Aut,
    /// Numerical isomorphisms from (d, points) to (target.d, target.points).
    Iso,
    /// Group orders in the concentrated chamber.
    Orders,
    /// The exponent matrix Ξ of size n² × n².
    MatrixXi,
    /// Rank-one factorization of `matrix`.
    MatrixRank1,
    /// Parabolic conjugation matrix of (a, b), or the Hecke check of `a`.
    MatrixMp,
    /// Evaluate the worked example families.
    Fixtures,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct InputDoc {
    r: Option<usize>,
    d: Option<i64>,
    #[serde(default)]
    points: Vec<PointIn>,
    genus: Option<u32>,
    symmetries: Option<Vec<SymIn>>,
    target: Option<TargetIn>,
    pattern: Option<PatternIn>,
    transform: Option<TransformIn>,
    transforms: Option<Vec<TransformIn>>,
    matrix: Option<Vec<Vec<EntryIn>>>,
    a: Option<Vec<Vec<EntryIn>>>,
    b: Option<Vec<Vec<EntryIn>>>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct PointIn {
    label: String,
    weights: Vec<String>,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct SymIn {
    perm: Vec<PointRef>,
    multiplicity: u64,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct TargetIn {
    d: Option<i64>,
    points: Vec<PointIn>,
}

#[derive(Deserialize, Debug)]
#[serde(untagged)]
enum PatternIn {
    Code(String),
    Rows(Vec<Vec<u8>>),
}

#[derive(Deserialize, Debug)]
#[serde(untagged)]
enum PointRef {
    Index(usize),
    Label(String),
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct TransformIn {
    perm: Option<Vec<PointRef>>,
    sign: i64,
    #[serde(default)]
    tdeg: i64,
    hecke: Option<Vec<i64>>,
}

#[derive(Deserialize, Debug)]
#[serde(untagged)]
enum EntryIn {
    Scalar(String),
    Terms(BTreeMap<String, String>),
}

/// Failure of one invocation.
enum Failure {
    /// Malformed input (exit 2).
    Input(String),
    /// Domain error (exit 1).
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(m) => Failure::Input(m),
            other => Failure::Domain(other),
        }
    }
}

type Out = std::result::Result<Value, Failure>;

fn malformed(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

impl InputDoc {
    fn rank(&self, cli: &Cli) -> std::result::Result<usize, Failure> {
        self.r
            .or(cli.r)
            .ok_or_else(|| malformed("missing field `r`"))
    }

    fn degree(&self) -> std::result::Result<i64, Failure> {
        self.d.ok_or_else(|| malformed("missing field `d`"))
    }

    fn weights(&self, cli: &Cli) -> std::result::Result<WeightSystem, Failure> {
        if self.points.is_empty() {
            return Err(malformed("missing or empty field `points`"));
        }
        weights_from(self.rank(cli)?, &self.points)
    }

    fn labels(&self) -> Vec<String> {
        self.points.iter().map(|p| p.label.clone()).collect()
    }

    fn target(&self, cli: &Cli) -> std::result::Result<(Option<i64>, WeightSystem), Failure> {
        let t = self
            .target
            .as_ref()
            .ok_or_else(|| malformed("missing field `target`"))?;
        Ok((t.d, weights_from(self.rank(cli)?, &t.points)?))
    }

    fn curve(&self, cli: &Cli, n: usize) -> std::result::Result<CurveData, Failure> {
        let genus = self.genus.or(cli.g).unwrap_or(0);
        match &self.symmetries {
            None => Ok(CurveData::trivial(n, genus)),
            Some(syms) => {
                let labels = self.labels();
                let syms = syms
                    .iter()
                    .map(|s| Ok((resolve_perm(&s.perm, &labels)?, s.multiplicity)))
                    .collect::<std::result::Result<Vec<_>, Failure>>()?;
                Ok(CurveData::new(genus, syms)?)
            }
        }
    }

    fn pattern(&self) -> std::result::Result<Option<ParabolicType>, Failure> {
        self.pattern
            .as_ref()
            .map(|p| match p {
                PatternIn::Code(c) => ParabolicType::from_code(c).map_err(Failure::from),
                PatternIn::Rows(rows) => ParabolicType::new(rows.clone()).map_err(Failure::from),
            })
            .transpose()
    }
}

fn weights_from(r: usize, points: &[PointIn]) -> std::result::Result<WeightSystem, Failure> {
    let labels = points.iter().map(|p| p.label.clone()).collect();
    let weights = points
        .iter()
        .map(|p| {
            p.weights
                .iter()
                .map(|s| parse_q(s))
                .collect::<crate::Result<Vec<_>>>()
        })
        .collect::<crate::Result<Vec<_>>>()?;
    Ok(WeightSystem::new(r, labels, weights)?)
}

fn resolve_perm(perm: &[PointRef], labels: &[String]) -> std::result::Result<Vec<usize>, Failure> {
    perm.iter()
        .map(|p| match p {
            PointRef::Index(i) => Ok(*i),
            PointRef::Label(l) => labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| malformed(format!("unknown point label `{l}`"))),
        })
        .collect()
}

fn transform_from(
    t: &TransformIn,
    labels: &[String],
    n: usize,
) -> std::result::Result<NumTransform, Failure> {
    let perm = match &t.perm {
        Some(p) => resolve_perm(p, labels)?,
        None => (0..n).collect(),
    };
    let hecke = t.hecke.clone().unwrap_or_else(|| vec![0; perm.len()]);
    Ok(NumTransform::new(
        perm,
        Sign::from_value(t.sign)?,
        t.tdeg,
        hecke,
    ))
}

fn transform_n(doc: &InputDoc, ts: &[&TransformIn]) -> usize {
    if !doc.points.is_empty() {
        return doc.points.len();
    }
    ts.iter()
        .find_map(|t| {
            t.perm
                .as_ref()
                .map(Vec::len)
                .or(t.hecke.as_ref().map(Vec::len))
        })
        .unwrap_or(1)
}

fn entry_from(e: &EntryIn) -> std::result::Result<Laurent, Failure> {
    match e {
        EntryIn::Scalar(s) => Ok(Laurent::constant(parse_q(s)?)),
        EntryIn::Terms(map) => {
            let terms = map
                .iter()
                .map(|(k, v)| {
                    let e: i64 = k
                        .trim()
                        .parse()
                        .map_err(|_| malformed(format!("bad exponent `{k}`")))?;
                    Ok((e, parse_q(v)?))
                })
                .collect::<std::result::Result<Vec<_>, Failure>>()?;
            Ok(Laurent::from_terms(terms))
        }
    }
}

fn matrix_from(rows: &[Vec<EntryIn>], name: &str) -> std::result::Result<LaurentMatrix, Failure> {
    if rows.is_empty() {
        return Err(malformed(format!("matrix `{name}` is empty")));
    }
    let rows = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(entry_from)
                .collect::<std::result::Result<Vec<_>, Failure>>()
        })
        .collect::<std::result::Result<Vec<_>, Failure>>()?;
    LaurentMatrix::new(rows).map_err(|e| malformed(format!("matrix `{name}`: {e}")))
}

fn laurent_json(p: &Laurent) -> Value {
    match p.as_constant() {
        Some(c) => Value::String(fmt_q(&c)),
        None => Value::Object(
            p.terms()
                .map(|(e, c)| (e.to_string(), Value::String(fmt_q(c))))
                .collect(),
        ),
    }
}

fn matrix_json(m: &LaurentMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| laurent_json(m.get(i, j))).collect()))
            .collect(),
    )
}

fn weights_json(w: &WeightSystem) -> Value {
    Value::Array(
        w.labels()
            .iter()
            .zip(w.weights())
            .map(|(l, t)| json!({"label": l, "weights": t.iter().map(fmt_q).collect::<Vec<_>>()}))
            .collect(),
    )
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn read_doc(cli: &Cli, needs_input: bool) -> std::result::Result<InputDoc, Failure> {
    let text = if cli.json {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| malformed(format!("stdin: {e}")))?;
        s
    } else if let Some(path) = &cli.input {
        std::fs::read_to_string(path).map_err(|e| malformed(format!("{}: {e}", path.display())))?
    } else if needs_input {
        return Err(malformed("no input: pass a file path or --json"));
    } else {
        return Ok(InputDoc::default());
    };
    serde_json::from_str(&text).map_err(|e| malformed(format!("input document: {e}")))
}

fn dispatch(cli: &Cli) -> Out {
    use Command::*;
    let needs_input = !matches!(cli.command, Dims | Orders | MatrixXi | Fixtures);
    let doc = read_doc(cli, needs_input)?;
    match cli.command {
        Normalize => Ok(json!({"points": weights_json(&normalize(&doc.weights(cli)?))})),
        Owt => {
            let w = doc.weights(cli)?;
            let t = doc
                .pattern()?
                .ok_or_else(|| malformed("missing field `pattern`"))?;
            let mut out = json!({
                "owt": fmt_q(&owt(&w, &t)?),
                "subrank": t.subrank(),
                "type": t.code(),
            });
            if let Some(d) = doc.d {
                out["pdeg"] = json!(fmt_q(&pdeg(d, &w)));
            }
            if t.is_admissible() {
                out["s_min"] = json!(fmt_q(&s_min(&w, &t)?));
                out["wall_value"] = json!(fmt_q(&wall_value(&w, &t)?));
            }
            Ok(out)
        }
        Invariant => {
            let (r, w, d) = (doc.rank(cli)?, doc.weights(cli)?, doc.degree()?);
            let inv = m_vec(r, &w, d)?;
            let (lo, hi) = m_bounds(r, w.n(), d);
            Ok(json!({
                "r": r, "n": w.n(), "d": d,
                "invariant": to_value(&inv)["values"].clone(),
                "bounds": {"min_exclusive": fmt_q(&lo), "max": fmt_q(&hi)},
            }))
        }
        SameChamber => {
            let (r, w, d) = (doc.rank(cli)?, doc.weights(cli)?, doc.degree()?);
            let (_, w2) = doc.target(cli)?;
            let (v1, v2) = (m_vec(r, &w, d)?, m_vec(r, &w2, d)?);
            let differing: Vec<Value> = v1
                .values
                .iter()
                .zip(&v2.values)
                .filter(|(a, b)| a.1 != b.1)
                .map(|((t, m1), (_, m2))| json!({"type": t.code(), "M": m1.to_string(), "M_target": m2.to_string()}))
                .collect();
            let walls = match walls_crossed(r, &w, &w2, d, true) {
                Ok(ws) => to_value(&ws),
                Err(Error::OnWall(_)) => Value::Null,
                Err(e) => return Err(e.into()),
            };
            Ok(json!({"same": differing.is_empty(), "differing": differing, "walls": walls}))
        }
        Walls => {
            let (r, w, d) = (doc.rank(cli)?, doc.weights(cli)?, doc.degree()?);
            let (_, w2) = doc.target(cli)?;
            Ok(
                json!({"walls": to_value(&walls_crossed(r, &w, &w2, d, !cli.all)?), "relevant_only": !cli.all}),
            )
        }
        Generic => Ok(to_value(&is_generic(&doc.weights(cli)?))),
        Concentrated => {
            let w = doc.weights(cli)?;
            let spreads: Vec<String> = w
                .weights()
                .iter()
                .map(|t| fmt_q(&(&t[t.len() - 1] - &t[0])))
                .collect();
            Ok(json!({
                "concentrated": is_concentrated(&w),
                "threshold": fmt_q(&concentration_threshold(&w)),
                "spreads": spreads,
            }))
        }
        Dims => {
            let g = doc
                .genus
                .or(cli.g)
                .ok_or_else(|| malformed("missing genus (field `genus` or --g)"))?;
            let n = if doc.points.is_empty() {
                cli.n.ok_or_else(|| malformed("missing --n"))?
            } else {
                doc.points.len()
            };
            let r = doc.rank(cli)?;
            let (g, n, r) = (g as i64, n as i64, r as i64);
            let mut out = to_value(&dims(g, n, r)?);
            if let Some(sd) = cli.sub_degree {
                out["dim_stratum"] = json!(dim_nonreduced_stratum(g, n, r, sd)?);
            }
            Ok(out)
        }
        Bounds => {
            let w = doc.weights(cli)?;
            let w2 = doc
                .target
                .as_ref()
                .map(|_| doc.target(cli))
                .transpose()?
                .map(|(_, w2)| w2);
            let t = doc.pattern()?;
            Ok(to_value(&genus_bounds(
                &w,
                w2.as_ref(),
                t.as_ref(),
                cli.l,
                cli.m,
                cli.k,
            )?))
        }
        Transform => {
            let (r, w, d) = (doc.rank(cli)?, doc.weights(cli)?, doc.degree()?);
            let t = doc
                .transform
                .as_ref()
                .ok_or_else(|| malformed("missing field `transform`"))?;
            let t = transform_from(t, &doc.labels(), w.n())?;
            let image = apply_to_weights(&t, &w)?;
            Ok(
                json!({"points": weights_json(&image), "d": apply_to_degree(&t, d, r), "transform": to_value(&t)}),
            )
        }
        Compose => {
            let r = doc.rank(cli)?;
            let ts = doc
                .transforms
                .as_ref()
                .ok_or_else(|| malformed("missing field `transforms`"))?;
            if ts.is_empty() {
                return Err(malformed("`transforms` is empty"));
            }
            let n = transform_n(&doc, &ts.iter().collect::<Vec<_>>());
            let labels = doc.labels();
            let mut acc = NumTransform::identity(n);
            for t in ts {
                acc = compose(&acc, &transform_from(t, &labels, n)?, r)?;
            }
            Ok(json!({"transform": to_value(&acc)}))
        }
        Inverse => {
            let r = doc.rank(cli)?;
            let t = doc
                .transform
                .as_ref()
                .ok_or_else(|| malformed("missing field `transform`"))?;
            let n = transform_n(&doc, &[t]);
            let t = transform_from(t, &doc.labels(), n)?;
            Ok(json!({"transform": to_value(&inverse(&t, r)?)}))
        }
        Aut => {
            let (r, w, d) = (doc.rank(cli)?, doc.weights(cli)?, doc.degree()?);
            let curve = doc.curve(cli, w.n())?;
            Ok(to_value(&automorphism_group(
                r,
                w.n(),
                d,
                curve.genus(),
                &w,
                &curve,
            )?))
        }
        Iso => {
            let (r, w, d) = (doc.rank(cli)?, doc.weights(cli)?, doc.degree()?);
            let (d2, w2) = doc.target(cli)?;
            let d2 = d2.ok_or_else(|| malformed("missing field `target.d`"))?;
            let perms: Vec<Vec<usize>> = match &doc.symmetries {
                None => vec![(0..w.n()).collect()],
                Some(syms) => syms
                    .iter()
                    .map(|s| resolve_perm(&s.perm, &doc.labels()))
                    .collect::<std::result::Result<_, _>>()?,
            };
            let ts = iso_transforms(r, w.n(), d, &w, d2, &w2, &perms)?;
            Ok(json!({"transforms": to_value(&ts), "isomorphic": !ts.is_empty()}))
        }
        Orders => {
            let g = doc
                .genus
                .or(cli.g)
                .ok_or_else(|| malformed("missing genus (field `genus` or --g)"))?;
            let n = if doc.points.is_empty() {
                cli.n.ok_or_else(|| malformed("missing --n"))?
            } else {
                doc.points.len()
            };
            Ok(to_value(&concentrated_orders(
                g,
                doc.rank(cli)?,
                n,
                cli.aut_order,
            )?))
        }
        MatrixXi => {
            let n = cli.n.ok_or_else(|| malformed("missing --n"))?;
            Ok(json!({"n": n, "xi": xi_matrix(n)?}))
        }
        MatrixRank1 => {
            let m = matrix_from(
                doc.matrix
                    .as_ref()
                    .ok_or_else(|| malformed("missing field `matrix`"))?,
                "matrix",
            )?;
            Ok(match rank1_factor(&m) {
                Some((c, r)) => {
                    json!({"rank_at_most_one": true, "column": matrix_json(&c), "row": matrix_json(&r)})
                }
                None => json!({"rank_at_most_one": false, "column": null, "row": null}),
            })
        }
        MatrixMp => {
            let a = matrix_from(
                doc.a
                    .as_ref()
                    .ok_or_else(|| malformed("missing field `a`"))?,
                "a",
            )?;
            match &doc.b {
                Some(b) => {
                    let b = matrix_from(b, "b")?;
                    let mp = mp_matrix(&a, &b)?;
                    Ok(json!({
                        "mp": matrix_json(&mp),
                        "integral": mp.is_integral(),
                        "pure_tensor": is_pure_tensor(&mp)?,
                        "inner": is_inner(&mp)?.is_some(),
                    }))
                }
                None => {
                    let rep = hecke_conjugation_check(&a, cli.precision)?;
                    let mut out = to_value(&rep);
                    out["mp_truncated"] = matrix_json(&rep.truncated);
                    Ok(out)
                }
            }
        }
        Fixtures => {
            let claims = fixtures::run();
            let failed = claims.iter().filter(|c| !c.passed).count();
            Ok(
                json!({"claims": to_value(&claims), "passed": claims.len() - failed, "failed": failed}),
            )
        }
    }
}

/// Run with explicit arguments; returns the exit code and the text written to
/// standard output.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let pretty = |v: &Value| serde_json::to_string_pretty(v).expect("JSON values print") + "\n";
    match dispatch(&cli) {
        Ok(v) => {
            let failed = cli.command == Command::Fixtures && v["failed"] != json!(0);
            (i32::from(failed), pretty(&v))
        }
        Err(Failure::Domain(e)) => (
            1,
            pretty(&json!({"error": {"kind": e.kind(), "message": e.to_string()}})),
        ),
        Err(Failure::Input(m)) => (
            2,
            pretty(&json!({"error": {"kind": "malformed_input", "message": m}})),
        ),
    }
}

/// Entry point of the `parmod` binary.
pub fn main() -> i32 {
    let (code, out) = run(std::env::args_os());
    if code == 2 && !out.trim_start().starts_with('{') {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    code
}

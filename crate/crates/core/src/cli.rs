//! Command-line front end. `run` parses arguments, computes, and returns the
//! rendered document with an exit code: 0 on success, 1 on domain errors
//! (with a JSON error object), 2 on usage errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bgg::{bgg_resolution, dual_la_resolution, euler_check, parabolic_bgg_resolution};
use crate::cache::{CacheStatus, WindowCache};
use crate::drinfeld::{
    binomial_cohomology, filtration_report, verify_local_cohomology, weight_table, LineBundleSpec, DEFAULT_WINDOW,
};
use crate::error::{Error, Result};
use crate::labels::{irreducibility_test, jh_series, SmoothLabel};
use crate::linalg;
use crate::relations::{self, probes};
use crate::roots::{LieAlgebra, LieElement, RootSystem, RootSystemDoc, Weight, Q};
use crate::verma::{build_window, default_depth, jh_verma_bruteforce, JhOptions, ORDERING_TAG};
use crate::weyl::{ParabolicSubset, WeylGroup};
use crate::SCHEMA_VERSION;

#[derive(Parser, Debug)]
#[command(name = "lieo", version, about = "Exact computations with root systems, Verma modules and their constituents")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Directory for cached Verma windows (defaults to $LIEO_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args, Debug)]
struct TypeArgs {
    /// Cartan type such as A2, B3, G2, or GL (with --gl-dim) / GL3.
    #[arg(long = "type")]
    cartan_type: String,
    #[arg(long)]
    gl_dim: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Positive roots, Cartan matrix and Chevalley structure constants.
    Rootsys(TypeArgs),
    /// Weyl group data, minimal coset representatives and dot orbits.
    Weyl {
        #[command(flatten)]
        ty: TypeArgs,
        /// 1-based simple roots of a standard parabolic ("" = Borel).
        #[arg(long)]
        parabolic: Option<String>,
        /// Weight whose dot orbit is listed.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Weight-space dimensions of M(lambda) and L(lambda) on a window.
    Verma {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, alias = "verma-weight", allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        depth: Option<usize>,
        /// Also compute the Jordan-Hölder factors of M(lambda).
        #[arg(long)]
        jh: bool,
    },
    /// (Parabolic) BGG resolution, its dual induced labels and Euler check.
    Bgg {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        parabolic: Option<String>,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Constituents of F^G_P(M(lambda), V).
    Jh {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value = "")]
        parabolic: String,
        #[arg(long, alias = "weight", allow_hyphen_values = true)]
        verma_weight: String,
        /// trivial | steinberg | opaque:NAME[:irr]
        #[arg(long, default_value = "trivial")]
        smooth: String,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, default_value_t = 5)]
        prime: u64,
    },
    /// Line bundles on the Drinfeld half space: Bott data and filtration.
    Drinfeld {
        #[arg(long)]
        d: usize,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        /// Window height for the local cohomology checks.
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: usize,
    },
    /// Checks of the relations behind the irreducibility criterion.
    #[command(subcommand)]
    Audit(AuditCommand),
}

#[derive(Subcommand, Debug)]
enum AuditCommand {
    /// Decompositions n gamma = sum nu_i beta_i and the inequality n <= sum nu.
    Abcd {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        n: u32,
        /// Root in simple-root coordinates; all positive roots if omitted.
        #[arg(long)]
        gamma: Option<String>,
    },
    /// p-adic audit of the relation for y_gamma^n v+ in L(lambda).
    Coeff {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 5)]
        prime: u64,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Free-algebra expansions, the height-one formula, the bracket formula
    /// and the structure constants of iterated brackets.
    Identities {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 4)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        prime: u64,
    },
    /// Local finiteness of Lie algebra elements on L(lambda).
    Locfin {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// e.g. y2, x1+y[1,1], 2*h1; all simple generators if omitted.
        #[arg(long)]
        element: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Injectivity of a lowering element on L(lambda).
    Inject {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        element: String,
        #[arg(long)]
        depth: Option<usize>,
    },
}

/// Result of a CLI invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A rendered command result.
struct Report {
    command: &'static str,
    result: Value,
    tables: Vec<(String, Table)>,
    warnings: Vec<String>,
}

#[derive(Default)]
struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(headers: &[&str]) -> Self {
        Table {
            headers: headers.iter().map(ToString::to_string).collect(),
            rows: Vec::new(),
        }
    }

    fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    fn render(&self, out: &mut String) {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String], out: &mut String| {
            let parts: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            let _ = writeln!(out, "{}", parts.join("  ").trim_end());
        };
        line(&self.headers, out);
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        line(&rule, out);
        for r in &self.rows {
            line(r, out);
        }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn json_document(command: &str, result: &Value) -> String {
    let doc = json!({ "schema": SCHEMA_VERSION, "command": command, "result": result });
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

fn error_document(e: &Error) -> String {
    let doc = json!({
        "schema": SCHEMA_VERSION,
        "error": { "kind": e.kind(), "message": e.to_string() },
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let stdout = match cli.format {
                Format::Json => json_document(report.command, &report.result),
                Format::Table => {
                    let mut s = String::new();
                    for (i, (title, t)) in report.tables.iter().enumerate() {
                        if i > 0 {
                            s.push('\n');
                        }
                        let _ = writeln!(s, "{title}");
                        t.render(&mut s);
                    }
                    s
                }
            };
            let stderr: String = report.warnings.iter().map(|w| format!("warning: {w}\n")).collect();
            Outcome { code: 0, stdout, stderr }
        }
        Err(e) => Outcome {
            code: 1,
            stdout: error_document(&e),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn root_system(ty: &TypeArgs) -> Result<RootSystem> {
    let t = ty.cartan_type.trim();
    let name = match (t.eq_ignore_ascii_case("gl"), ty.gl_dim) {
        (true, Some(n)) => format!("GL{n}"),
        (true, None) => return Err(Error::InvalidCartanType("GL needs --gl-dim".into())),
        (false, None) => t.to_string(),
        (false, Some(_)) => {
            return Err(Error::InvalidCartanType(format!("--gl-dim given with type {t}")));
        }
    };
    RootSystem::from_type_str(&name)
}

fn algebra(ty: &TypeArgs) -> Result<Arc<LieAlgebra>> {
    Ok(Arc::new(LieAlgebra::new(root_system(ty)?)?))
}

fn weight(rs: &RootSystem, s: &str) -> Result<Weight> {
    rs.weight(Weight::parse_coords(s)?)
}

fn int_tuple(s: &str) -> Result<Vec<i64>> {
    s.trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']'])
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer {t:?}"))))
        .collect()
}

fn parabolic(rs: &RootSystem, s: Option<&str>) -> Result<ParabolicSubset> {
    s.map_or_else(|| Ok(ParabolicSubset::borel(rs)), |s| ParabolicSubset::parse(rs, s))
}

fn smooth_label(rs: &RootSystem, p: &ParabolicSubset, s: &str) -> Result<SmoothLabel> {
    let s = s.trim();
    match s {
        "trivial" => Ok(SmoothLabel::Trivial),
        "steinberg" => Ok(SmoothLabel::GenSteinberg {
            ambient: p.clone(),
            lower: ParabolicSubset::borel(rs),
        }),
        _ => match s.strip_prefix("opaque:") {
            Some(rest) => {
                let (name, irr) = match rest.strip_suffix(":irr") {
                    Some(n) => (n, true),
                    None => (rest, false),
                };
                if name.is_empty() {
                    return Err(Error::Parse("opaque label needs a name".into()));
                }
                Ok(SmoothLabel::opaque(name, irr))
            }
            None => Err(Error::Parse(format!("unknown smooth label {s:?}"))),
        },
    }
}

/// Parses `x1`, `y2`, `h1` (1-based simple indices), `x[1,1]` / `y[1,1]`
/// (roots in simple-root coordinates), optional `c*` prefixes, joined by `+`.
pub fn parse_element(alg: &LieAlgebra, s: &str) -> Result<LieElement> {
    let rs = alg.root_system();
    let mut out = LieElement::new();
    let bad = |t: &str| Error::Parse(format!("bad Lie algebra element {t:?}"));
    for term in s.split('+').map(str::trim) {
        let (coeff, gen) = match term.split_once('*') {
            Some((c, g)) => (
                Weight::parse_coords(c)?
                    .first()
                    .copied()
                    .ok_or_else(|| bad(term))?,
                g.trim(),
            ),
            None => (Q::from(1), term),
        };
        let kind = gen.chars().next().ok_or_else(|| bad(term))?;
        let rest = &gen[1..];
        let g = if rest.starts_with('[') {
            let root = int_tuple(rest)?;
            let k = rs.positive_index(&root).ok_or_else(|| Error::NotARoot(root.clone()))?;
            match kind {
                'x' => alg.x(k),
                'y' => alg.y(k),
                _ => return Err(bad(term)),
            }
        } else {
            let i: usize = rest.parse().map_err(|_| bad(term))?;
            if i == 0 || i > rs.rank() {
                return Err(Error::OutOfRange(format!("simple index {i}")));
            }
            match kind {
                'x' => alg.x(rs.simple_index(i - 1)),
                'y' => alg.y(rs.simple_index(i - 1)),
                'h' => alg.h(i - 1),
                _ => return Err(bad(term)),
            }
        };
        *out.entry(g).or_insert_with(|| Q::from(0)) += coeff;
    }
    out.retain(|_, c| *c != Q::from(0));
    Ok(out)
}

fn one_based(word: &[usize]) -> Vec<usize> {
    word.iter().map(|i| i + 1).collect()
}

fn fmt_vec<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Rootsys(ty) => rootsys(ty),
        Command::Weyl { ty, parabolic, weight } => weyl(ty, parabolic.as_deref(), weight.as_deref()),
        Command::Verma { ty, weight, depth, jh } => verma(cli, ty, weight, *depth, *jh),
        Command::Bgg { ty, weight, parabolic, depth } => bgg(ty, weight, parabolic.as_deref(), *depth),
        Command::Jh { ty, parabolic, verma_weight, smooth, depth, prime } => {
            jh(ty, parabolic, verma_weight, smooth, *depth, *prime)
        }
        Command::Drinfeld { d, r, s, window } => drinfeld(*d, *r, *s, *window),
        Command::Audit(a) => audit(a),
    }
}

fn rootsys(ty: &TypeArgs) -> Result<Report> {
    let alg = LieAlgebra::new(root_system(ty)?)?;
    let doc = RootSystemDoc::new(&alg);
    let rs = alg.root_system();
    let mut roots = Table::new(&["index", "root", "height"]);
    for (k, r) in rs.positive_roots().iter().enumerate() {
        roots.row(vec![(k + 1).to_string(), fmt_vec(r), r.iter().sum::<i64>().to_string()]);
    }
    let mut cartan = Table::new(&["i", "row"]);
    for (i, row) in rs.cartan_matrix().iter().enumerate() {
        cartan.row(vec![(i + 1).to_string(), fmt_vec(row)]);
    }
    Ok(Report {
        command: "rootsys",
        result: to_value(&doc),
        tables: vec![
            (format!("{} positive roots", rs.cartan_type()), roots),
            ("Cartan matrix <alpha_i, alpha_j^vee>".into(), cartan),
        ],
        warnings: Vec::new(),
    })
}

fn weyl(ty: &TypeArgs, parabolic_arg: Option<&str>, weight_arg: Option<&str>) -> Result<Report> {
    let rs = root_system(ty)?;
    let w = WeylGroup::new(&rs)?;
    let mut result = json!({
        "type": rs.cartan_type().to_string(),
        "order": w.order(),
        "length_counts": w.length_counts(),
        "longest": one_based(&w.longest().word),
    });
    let mut summary = Table::new(&["type", "order", "longest", "length counts"]);
    summary.row(vec![
        rs.cartan_type().to_string(),
        w.order().to_string(),
        w.longest().word_string(),
        fmt_vec(&w.length_counts()),
    ]);
    let mut tables = vec![("Weyl group".to_string(), summary)];
    if let Some(p) = parabolic_arg {
        let p = ParabolicSubset::parse(&rs, p)?;
        let cosets = w.min_coset_reps(&p.subset)?;
        let mut t = Table::new(&["word", "length"]);
        for r in &cosets.reps {
            t.row(vec![r.word_string(), r.length().to_string()]);
        }
        result["parabolic"] = to_value(&p);
        result["coset_reps"] = cosets.reps.iter().map(|r| json!(one_based(&r.word))).collect();
        result["max_coset_rep"] = json!(one_based(&cosets.max_rep.word));
        tables.push((format!("minimal coset representatives for {}", p.label(rs.rank())), t));
    }
    if let Some(s) = weight_arg {
        let lam = weight(&rs, s)?;
        let mut orbit = Vec::new();
        let mut t = Table::new(&["word", "w.lambda"]);
        for e in w.elements() {
            let mu = e.dot(&rs, &lam)?;
            t.row(vec![e.word_string(), mu.to_string()]);
            orbit.push(json!({ "word": one_based(&e.word), "weight": to_value(&mu) }));
        }
        result["lambda"] = to_value(&lam);
        result["dot_orbit"] = Value::Array(orbit);
        tables.push((format!("dot orbit of {lam}"), t));
    }
    Ok(Report { command: "weyl", result, tables, warnings: Vec::new() })
}

fn verma(cli: &Cli, ty: &TypeArgs, weight_arg: &str, depth: Option<usize>, with_jh: bool) -> Result<Report> {
    let alg = algebra(ty)?;
    let rs = alg.root_system();
    let lam = weight(rs, weight_arg)?;
    let depth = depth.unwrap_or_else(|| default_depth(rs.rank()));
    let mut warnings = Vec::new();
    let window = match WindowCache::resolve(cli.cache_dir.as_deref())? {
        Some(cache) => {
            let (w, status) = cache.get_or_build(&alg, &lam, depth)?;
            if let CacheStatus::Recomputed(why) = status {
                warnings.push(format!("cache entry rebuilt: {why}"));
            }
            w
        }
        None => build_window(Arc::clone(&alg), &lam, depth)?,
    };
    let mut levels = Vec::new();
    let mut t = Table::new(&["drop", "weight", "dim M", "dim L"]);
    for (drop, basis) in &window.spaces {
        let gram = &window.grams[drop];
        let simple = linalg::rank(gram);
        let mu = rs.sub_roots(&lam, drop)?;
        t.row(vec![fmt_vec(drop), mu.to_string(), basis.len().to_string(), simple.to_string()]);
        levels.push(json!({
            "drop": drop,
            "weight": to_value(&mu),
            "verma_dim": basis.len(),
            "simple_dim": simple,
        }));
    }
    let mut result = json!({
        "type": rs.cartan_type().to_string(),
        "lambda": to_value(&lam),
        "depth": depth,
        "ordering": ORDERING_TAG,
        "levels": levels,
    });
    let mut tables = vec![(format!("M{lam} and L{lam} to depth {depth}"), t)];
    if with_jh {
        let factors = jh_verma_bruteforce(Arc::clone(&alg), &lam, depth, JhOptions::default())?;
        let mut jt = Table::new(&["weight", "drop", "multiplicity"]);
        for f in &factors {
            jt.row(vec![f.weight.to_string(), fmt_vec(&f.drop), f.multiplicity.to_string()]);
        }
        result["jh_factors"] = to_value(&factors);
        tables.push(("Jordan-Hölder factors".into(), jt));
    }
    Ok(Report { command: "verma", result, tables, warnings })
}

fn bgg(ty: &TypeArgs, weight_arg: &str, parabolic_arg: Option<&str>, depth: Option<usize>) -> Result<Report> {
    let rs = root_system(ty)?;
    let lam = weight(&rs, weight_arg)?;
    let w = WeylGroup::new(&rs)?;
    let p = parabolic(&rs, parabolic_arg)?;
    let res = if p.is_empty() {
        bgg_resolution(&w, &lam)?
    } else {
        parabolic_bgg_resolution(&w, &p, &lam)?
    };
    let dual = dual_la_resolution(&rs, &res);
    let depth = depth.unwrap_or_else(|| default_depth(rs.rank()));
    let euler = euler_check(&rs, &res, depth)?;
    let mut t = Table::new(&["degree", "word", "weight"]);
    for term in &res.terms {
        for s in &term.summands {
            t.row(vec![term.degree.to_string(), fmt_vec(&s.word), s.weight.to_string()]);
        }
    }
    let mut lines = Table::new(&["sequence"]);
    lines.row(vec![res.display_line()]);
    lines.row(vec![dual.display_line()]);
    lines.row(vec![format!("euler check to depth {depth}: {}", if euler.passed { "passed" } else { "FAILED" })]);
    let warnings = res.duplicates.iter().map(|d| format!("weight {d} occurs more than once")).collect();
    Ok(Report {
        command: "bgg",
        result: json!({
            "resolution": to_value(&res),
            "display": res.display_line(),
            "dual": to_value(&dual),
            "dual_display": dual.display_line(),
            "euler": to_value(&euler),
        }),
        tables: vec![("resolution".into(), t), ("summary".into(), lines)],
        warnings,
    })
}

fn jh(
    ty: &TypeArgs,
    parabolic_arg: &str,
    weight_arg: &str,
    smooth: &str,
    depth: Option<usize>,
    prime: u64,
) -> Result<Report> {
    let alg = algebra(ty)?;
    let rs = alg.root_system();
    let lam = weight(rs, weight_arg)?;
    let p = ParabolicSubset::parse(rs, parabolic_arg)?;
    let v = smooth_label(rs, &p, smooth)?;
    let depth = depth.unwrap_or_else(|| default_depth(rs.rank()));
    let factors: Vec<Weight> = jh_verma_bruteforce(Arc::clone(&alg), &lam, depth, JhOptions::default())?
        .into_iter()
        .flat_map(|f| std::iter::repeat(f.weight).take(f.multiplicity.max(0) as usize))
        .collect();
    let series = jh_series(rs, &factors, &v, &p)?;
    let mut verdicts = Vec::new();
    let mut warnings = Vec::new();
    for mu in &factors {
        let rep = irreducibility_test(rs, mu, &v, &p, prime)?;
        for w in &rep.warnings {
            if !warnings.contains(w) {
                warnings.push(w.clone());
            }
        }
        verdicts.push(json!({ "mu": to_value(mu), "report": to_value(&rep) }));
    }
    let mut t = Table::new(&["#", "constituent", "multiplicity"]);
    for c in &series.constituents {
        t.row(vec![
            format!("{}.{}", c.index.0 + 1, c.index.1 + 1),
            c.text.clone(),
            c.multiplicity.to_string(),
        ]);
    }
    Ok(Report {
        command: "jh",
        result: json!({
            "type": rs.cartan_type().to_string(),
            "lambda": to_value(&lam),
            "depth": depth,
            "series": to_value(&series),
            "constituent_count": series.constituents.len(),
            "irreducibility": verdicts,
        }),
        tables: vec![(
            format!("constituents of F^G_{}(M{lam}, {smooth})", p.label(rs.rank())),
            t,
        )],
        warnings,
    })
}

fn drinfeld(d: usize, r: i64, s: i64, window: usize) -> Result<Report> {
    let spec = LineBundleSpec::new(d, r, s)?;
    let filtration = filtration_report(&spec)?;
    let table = weight_table(&spec)?;
    let mut local = Vec::new();
    for i in 1..=d {
        local.push(verify_local_cohomology(&spec, i, window)?);
    }
    let mut wt = Table::new(&["i", "w_i.lambda", "dominant"]);
    for (i, w) in table.weights.iter().enumerate() {
        wt.row(vec![i.to_string(), w.to_string(), table.dominant[i].to_string()]);
    }
    let mut bt = Table::new(&["degenerate", "i0", "h_dim", "cohomology"]);
    bt.row(vec![
        filtration.bott.degenerate.to_string(),
        filtration.bott.i0.to_string(),
        filtration.bott.h_dim.to_string(),
        fmt_vec(&filtration.cohomology),
    ]);
    let mut ct = Table::new(&["j", "constituent", "verdict"]);
    for piece in &filtration.pieces {
        if let Some(st) = &piece.steinberg {
            ct.row(vec![piece.j.to_string(), st.text.clone(), st.verdict.to_string()]);
        }
        ct.row(vec![
            piece.j.to_string(),
            piece.induction.text.clone(),
            piece.induction.verdict.to_string(),
        ]);
    }
    if let Some(b) = &filtration.bottom_text {
        ct.row(vec!["H^0".into(), b.clone(), "-".into()]);
    }
    let mut lt = Table::new(&["i", "mu", "maximal vector", "passed"]);
    for rep in &local {
        lt.row(vec![
            rep.i.to_string(),
            rep.mu.to_string(),
            fmt_vec(&rep.maximal_vector),
            rep.passed().to_string(),
        ]);
    }
    let mut warnings: Vec<String> = Vec::new();
    for piece in &filtration.pieces {
        for w in &piece.induction.warnings {
            if !warnings.contains(w) {
                warnings.push(w.clone());
            }
        }
    }
    let binomial: Vec<u64> = (0..=d).map(|k| binomial_cohomology(&spec).get(&k).copied().unwrap_or(0)).collect();
    Ok(Report {
        command: "drinfeld",
        result: json!({
            "spec": to_value(&spec),
            "i0": filtration.bott.i0,
            "h_dim": filtration.bott.h_dim,
            "degenerate": filtration.bott.degenerate,
            "weights": to_value(&table.weights),
            "dominant": table.dominant,
            "filtration": to_value(&filtration),
            "binomial_cohomology": binomial,
            "local_cohomology": local.iter().map(|r| {
                let mut v = to_value(r);
                v["passed"] = json!(r.passed());
                v
            }).collect::<Vec<_>>(),
        }),
        tables: vec![
            (format!("w_i.lambda for (d,r,s) = ({d},{r},{s})"), wt),
            ("Bott".into(), bt),
            ("filtration constituents".into(), ct),
            (format!("local cohomology, window {window}"), lt),
        ],
        warnings,
    })
}

fn audit(cmd: &AuditCommand) -> Result<Report> {
    match cmd {
        AuditCommand::Abcd { ty, n, gamma } => {
            let rs = root_system(ty)?;
            let sets = match gamma {
                Some(g) => vec![relations::decomposition_enumerate(&rs, &int_tuple(g)?, *n)?],
                None => rs
                    .positive_roots()
                    .iter()
                    .map(|g| relations::decomposition_enumerate(&rs, g, *n))
                    .collect::<Result<Vec<_>>>()?,
            };
            let mut t = Table::new(&["gamma", "n", "solutions", "min sum", "holds"]);
            for d in &sets {
                t.row(vec![
                    fmt_vec(&d.gamma),
                    d.n.to_string(),
                    d.solutions.len().to_string(),
                    d.min_sum.to_string(),
                    d.holds.to_string(),
                ]);
            }
            let counterexamples: Vec<Value> = sets
                .iter()
                .filter(|d| !d.holds)
                .map(|d| {
                    json!({
                        "gamma": d.gamma,
                        "n": d.n,
                        "min_sum": d.min_sum,
                        "violations": d.violations.iter().map(|nu| {
                            nu.iter().enumerate().filter(|(_, &e)| e > 0)
                                .map(|(k, &e)| json!({ "root": d.roots[k], "multiplicity": e }))
                                .collect::<Vec<_>>()
                        }).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(Report {
                command: "audit abcd",
                result: json!({
                    "type": rs.cartan_type().to_string(),
                    "n": n,
                    "holds": counterexamples.is_empty(),
                    "counterexamples": counterexamples,
                    "instances": to_value(&sets),
                }),
                tables: vec![(format!("n gamma = sum nu_i beta_i in {}", rs.cartan_type()), t)],
                warnings: Vec::new(),
            })
        }
        AuditCommand::Coeff { ty, weight: w, gamma, n, prime, depth } => {
            let alg = algebra(ty)?;
            let rs = alg.root_system();
            let lam = weight(rs, w)?;
            let gamma = int_tuple(gamma)?;
            let depth = depth.unwrap_or((gamma.iter().sum::<i64>().max(0) as usize) * *n as usize);
            let rep = relations::relation_coefficient_audit(&alg, &lam, &gamma, *n, *prime, depth)?;
            let mut t = Table::new(&["gamma", "n", "p", "dim", "relations", "verdict", "certificate"]);
            t.row(vec![
                fmt_vec(&rep.gamma),
                rep.n.to_string(),
                rep.p.to_string(),
                rep.monomials.len().to_string(),
                rep.solution_space_dim.to_string(),
                rep.verdict.to_string(),
                match (&rep.witness, &rep.counter_witness) {
                    (Some(w), _) => format!("functional, v_p = {}", w.target_valuation),
                    (None, Some(_)) => "relation with p | c_J".into(),
                    _ => "-".into(),
                },
            ]);
            let warnings = rep.warnings.clone();
            Ok(Report {
                command: "audit coeff",
                result: to_value(&rep),
                tables: vec![(format!("relation audit for y_gamma^n v+ in L{lam}"), t)],
                warnings,
            })
        }
        AuditCommand::Identities { ty, n, seed, prime } => {
            let alg = algebra(ty)?;
            let rs = alg.root_system();
            let heightone = relations::heightone_check(&alg, *n)?;
            let lemma = relations::lemma1b_random(&alg, (*n).min(4), 3, *seed)?;
            let footnote = relations::footnote_constants(&alg, *prime);
            let mut free = Vec::new();
            for k in 0..=4 {
                for m in 1..=3 {
                    free.push(json!({
                        "k": k, "n": m,
                        "holds": relations::commutator_expansion_check(k, m, *seed),
                    }));
                }
            }
            let free_ok = free.iter().all(|f| f["holds"] == json!(true));
            let mut t = Table::new(&["identity", "cases", "holds"]);
            t.row(vec!["commutator expansion".into(), free.len().to_string(), free_ok.to_string()]);
            t.row(vec![heightone.name.clone(), heightone.cases.to_string(), heightone.holds.to_string()]);
            t.row(vec![lemma.name.clone(), lemma.cases.to_string(), lemma.holds.to_string()]);
            let mut ft = Table::new(&["gamma", "alpha", "k0", "result", "k0! c", "c", "unit"]);
            for f in &footnote {
                ft.row(vec![
                    fmt_vec(&f.gamma),
                    fmt_vec(&f.alpha),
                    f.k0.to_string(),
                    fmt_vec(&f.result_root),
                    f.coefficient.to_string(),
                    f.c.to_string(),
                    f.unit.to_string(),
                ]);
            }
            Ok(Report {
                command: "audit identities",
                result: json!({
                    "type": rs.cartan_type().to_string(),
                    "commutator_expansion": free,
                    "heightone": to_value(&heightone),
                    "lemma1b": to_value(&lemma),
                    "ad_power_constants": to_value(&footnote),
                }),
                tables: vec![("identities".into(), t), ("ad(x_alpha)^k0 y_gamma".into(), ft)],
                warnings: Vec::new(),
            })
        }
        AuditCommand::Locfin { ty, weight: w, element, n, depth } => {
            let alg = algebra(ty)?;
            let rs = alg.root_system();
            let lam = weight(rs, w)?;
            let elements: Vec<LieElement> = match element {
                Some(e) => vec![parse_element(&alg, e)?],
                None => probes::chevalley_generators(&alg)
                    .into_iter()
                    .map(|g| alg.basis_element(g))
                    .collect(),
            };
            let mut out = Vec::new();
            let mut t = Table::new(&["element", "N", "dims", "locally finite", "in p_I", "agrees"]);
            for x in &elements {
                let (n0, d0) = if x.len() == 1 {
                    probes::probe_parameters(&alg, &lam, *x.keys().next().expect("non-empty"))?
                } else {
                    (4, 4 * rs.positive_roots().iter().map(|r| r.iter().sum::<i64>()).max().unwrap_or(1) as usize)
                };
                let n = n.unwrap_or(n0);
                let depth = depth.unwrap_or(d0.max(n));
                let p = relations::locally_finite_probe(&alg, &lam, x, n, depth)?;
                t.row(vec![
                    p.element.clone(),
                    p.n.to_string(),
                    fmt_vec(&p.dims),
                    p.locally_finite.to_string(),
                    p.predicted.to_string(),
                    p.agrees.to_string(),
                ]);
                out.push(p);
            }
            Ok(Report {
                command: "audit locfin",
                result: json!({
                    "type": rs.cartan_type().to_string(),
                    "lambda": to_value(&lam),
                    "levi": relations::levi_subset(rs, &lam)?.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    "probes": to_value(&out),
                    "all_agree": out.iter().all(|p| p.agrees),
                }),
                tables: vec![(format!("local finiteness on L{lam}"), t)],
                warnings: Vec::new(),
            })
        }
        AuditCommand::Inject { ty, weight: w, element, depth } => {
            let alg = algebra(ty)?;
            let rs = alg.root_system();
            let lam = weight(rs, w)?;
            let y = parse_element(&alg, element)?;
            let depth = depth.unwrap_or_else(|| default_depth(rs.rank()));
            let p = relations::injectivity_probe(&alg, &lam, &y, depth)?;
            let mut t = Table::new(&["drop", "dim L", "rank"]);
            for l in &p.levels {
                t.row(vec![fmt_vec(&l.drop), l.source_dim.to_string(), l.rank.to_string()]);
            }
            let mut warnings = Vec::new();
            if !p.hypothesis {
                warnings.push("element is not supported outside the Levi root system of lambda".into());
            }
            Ok(Report {
                command: "audit inject",
                result: to_value(&p),
                tables: vec![(format!("{} on L{lam}: injective = {}", p.element, p.injective), t)],
                warnings,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(args: &[&str]) -> Value {
        let mut argv = vec!["lieo"];
        argv.extend_from_slice(args);
        let out = run(argv);
        assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
        serde_json::from_str(&out.stdout).unwrap()
    }

    #[test]
    fn element_parsing() {
        let alg = LieAlgebra::from_type_str("A2").unwrap();
        let e = parse_element(&alg, "x1 + 2*y[1,1] + h2").unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(e[&alg.y(2)], Q::from(2));
        assert!(parse_element(&alg, "z1").is_err());
        assert!(parse_element(&alg, "y[2,1]").is_err());
        assert!(parse_element(&alg, "x3").is_err());
    }

    #[test]
    fn documented_invocations() {
        let v = ok(&["jh", "--type", "A1", "--parabolic", "", "--verma-weight", "0", "--smooth", "trivial"]);
        assert_eq!(v["result"]["constituent_count"], 3);
        let v = ok(&["drinfeld", "--d", "1", "--r", "0", "--s", "0"]);
        assert_eq!(v["result"]["i0"], 0);
        assert_eq!(v["result"]["h_dim"], 1);
        let v = ok(&["audit", "abcd", "--type", "G2", "--n", "3"]);
        let ce = v["result"]["counterexamples"].as_array().unwrap();
        assert!(ce.iter().any(|c| c["gamma"] == json!([2, 1]) && c["min_sum"] == 2));
        assert_eq!(v["schema"], 1);
    }

    #[test]
    fn usage_and_domain_errors() {
        assert_eq!(run(["lieo", "rootsys", "--type", "A2", "--bogus"]).code, 2);
        assert_eq!(run(["lieo"]).code, 2);
        let out = run(["lieo", "rootsys", "--type", "Q7"]);
        assert_eq!(out.code, 1);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["error"]["kind"], "invalid_cartan_type");
        assert_eq!(run(["lieo", "--help"]).code, 0);
    }
}

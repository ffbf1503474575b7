//! Command-line front end. Exit codes: 0 success, 1 a verifier failed or a
//! violation was found, 2 usage or input error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bounds::{bounds_report, BoundsReport};
use crate::dompoly::{
    avd, domination_polynomial, fmt_rational, poly_closed_form, rational_to_f64, Cap, DomPolynomial, Rational,
    DEFAULT_CAP,
};
use crate::domstruct::{
    check_a1_n1, check_critical_characterization, complement_complex_profile, verify_a2_pv, verify_edge_identity,
    verify_edge_removal, verify_sum_critical,
};
use crate::error::Error;
use crate::experiments::{
    density_sequence, figure5_regression, graph6_items, histogram, labelled_items, monotonicity_search,
    random_experiment, scan, tree_items, tree_suite, Histogram, ScanItem, ScanRecord, LABELLED_MAX,
};
use crate::graph::{labelled_graphs, Family, Graph};
use crate::graph6::from_graph6;
use crate::recurrence::{navd_sequence, tribonacci_limit};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "domavd", version, about = "Domination polynomials and average dominating-set size")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Largest component order for exhaustive enumeration.
    #[arg(long, global = true, env = "DOMAVD_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for scans (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

/// A graph given as graph6, a named family, or an edge list.
#[derive(Debug, Args)]
struct GraphArgs {
    /// graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// complete, empty, star, path or cycle.
    #[arg(long)]
    family: Option<Family>,
    /// Order for --family, or for --edges when it has isolated tail vertices.
    #[arg(long)]
    n: Option<usize>,
    /// Edge list such as "0-1,1-2".
    #[arg(long)]
    edges: Option<String>,
}

#[derive(Debug, Args)]
struct SourceArgs {
    /// graph6 file, or '-' for standard input.
    #[arg(long)]
    input: Option<PathBuf>,
    /// All labelled graphs of this order.
    #[arg(long)]
    labelled: Option<usize>,
    /// All labelled trees of this order.
    #[arg(long)]
    trees: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Domination polynomial.
    Poly(GraphArgs),
    /// Exact average dominating-set size.
    Avd(GraphArgs),
    /// Every applicable bound against the exact average.
    Bounds(GraphArgs),
    /// Counting identities on one graph or on all labelled graphs of an order.
    Verify {
        #[command(flatten)]
        graph: GraphArgs,
        /// Check every labelled graph of this order instead.
        #[arg(long)]
        exhaustive: Option<usize>,
    },
    /// One record per graph, with the 2n/3 check and every bound.
    Scan(SourceArgs),
    /// Histogram of the normalized average over a source of one order.
    Hist(SourceArgs),
    /// Star minimality, domination-number and coefficient checks on every labelled tree up to an order.
    Trees {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Limit of the normalized average for paths and cycles.
    Limit,
    /// Exact normalized averages along the path or cycle family.
    Sequence {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n_max: usize,
    },
    /// Graph whose normalized average approaches a/b.
    Density {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        k: u64,
    },
    /// Normalized averages of seeded G(n, p) samples.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
    /// Regression on the six-vertex example with a triangle and three leaves.
    Figure5,
    /// Searches for a vertex lowering and an edge raising the average.
    Monotonic {
        #[command(flatten)]
        graph: GraphArgs,
        /// Check every labelled graph of this order with at least one edge.
        #[arg(long)]
        exhaustive: Option<usize>,
    },
}

/// Failure that ends a command early.
enum Fail {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Self {
        Fail::Io(e)
    }
}

type Outcome = std::result::Result<i32, Fail>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let scans = matches!(
        cli.command,
        Command::Scan(_)
            | Command::Hist(_)
            | Command::Trees { .. }
            | Command::Verify { exhaustive: Some(_), .. }
            | Command::Monotonic { exhaustive: Some(_), .. }
    );
    let threads = if scans { cli.threads } else { 1 };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let ctx = Ctx { format: cli.format, cap: Cap(cli.cap), seed: cli.seed };
    match pool.install(|| ctx.dispatch(cli.command, out, err)) {
        Ok(code) => code,
        Err(Fail::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Fail::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn parse_edges(text: &str, n: Option<usize>) -> std::result::Result<Graph, Fail> {
    let mut edges = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let bad = || Fail::Usage(Error::EdgeList(part.to_string()).to_string());
        let (u, v) = part.split_once('-').ok_or_else(bad)?;
        let u: usize = u.trim().parse().map_err(|_| bad())?;
        let v: usize = v.trim().parse().map_err(|_| bad())?;
        edges.push((u, v));
    }
    let implied = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = n.unwrap_or(implied);
    if n == 0 {
        return Err(Fail::Usage(Error::EdgeList("no vertices".into()).to_string()));
    }
    Ok(Graph::from_edges(n, edges)?)
}

impl GraphArgs {
    fn given(&self) -> bool {
        self.g6.is_some() || self.family.is_some() || self.edges.is_some()
    }

    /// The graph and, for family input, its kind and order.
    fn graph(&self) -> std::result::Result<(Graph, Option<(Family, usize)>), Fail> {
        match (&self.g6, self.family, &self.edges) {
            (Some(s), None, None) => {
                if self.n.is_some() {
                    return Err(Fail::Usage("--n does not combine with --g6".into()));
                }
                Ok((from_graph6(s).map_err(Error::from)?, None))
            }
            (None, Some(kind), None) => {
                let n = self.n.ok_or_else(|| Fail::Usage("--family needs --n".into()))?;
                Ok((Graph::family(kind, n)?, Some((kind, n))))
            }
            (None, None, Some(e)) => Ok((parse_edges(e, self.n)?, None)),
            _ => Err(Fail::Usage("give exactly one of --g6, --family, --edges".into())),
        }
    }

    /// Family input as `(kind, n)`, which never needs a materialized graph.
    fn family_input(&self) -> Option<(Family, usize)> {
        match (&self.g6, self.family, &self.edges, self.n) {
            (None, Some(kind), None, Some(n)) => Some((kind, n)),
            _ => None,
        }
    }

    /// Closed forms for families so large members stay within reach.
    fn polynomial(&self, cap: Cap) -> std::result::Result<DomPolynomial, Fail> {
        match self.family_input() {
            Some((kind, n)) => Ok(poly_closed_form(kind, n)?),
            None => Ok(domination_polynomial(&self.graph()?.0, cap)?),
        }
    }

    fn avd(&self, cap: Cap) -> std::result::Result<(usize, Rational), Fail> {
        if let Some((_, n)) = self.family_input() {
            return Ok((n, self.polynomial(cap)?.log_derivative_at_one().expect("V dominates")));
        }
        let (g, _) = self.graph()?;
        Ok((g.order(), avd(&g, cap)?))
    }
}

impl SourceArgs {
    fn items(&self) -> std::result::Result<Box<dyn Iterator<Item = io::Result<ScanItem>>>, Fail> {
        match (&self.input, self.labelled, self.trees) {
            (Some(path), None, None) => {
                if path.as_os_str() == "-" {
                    Ok(Box::new(graph6_items(BufReader::new(io::stdin()))))
                } else {
                    let file = File::open(path).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
                    Ok(Box::new(graph6_items(BufReader::new(file))))
                }
            }
            (None, Some(n), None) => Ok(Box::new(labelled_items(n)?)),
            (None, None, Some(n)) => Ok(Box::new(tree_items(n)?)),
            _ => Err(Fail::Usage("give exactly one of --input, --labelled, --trees".into())),
        }
    }
}

fn csv_json_big(p: &DomPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::Number(c.to_string().parse().expect("integer literal"))).collect())
}

struct Ctx {
    format: Format,
    cap: Cap,
    seed: u64,
}

impl Ctx {
    fn dispatch(&self, command: Command, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Outcome {
        match command {
            Command::Poly(g) => self.poly(&g, out),
            Command::Avd(g) => self.avd(&g, out),
            Command::Bounds(g) => self.bounds(&g, out),
            Command::Verify { graph, exhaustive } => self.verify(&graph, exhaustive, out),
            Command::Scan(src) => self.scan(&src, out, err),
            Command::Hist(src) => self.hist(&src, out, err),
            Command::Trees { n_max } => self.trees(n_max, out),
            Command::Limit => self.limit(out),
            Command::Sequence { family, n_max } => self.sequence(family, n_max, out),
            Command::Density { a, b, k } => self.density(a, b, k, out),
            Command::Random { n, p, trials } => self.random(n, p, trials, out),
            Command::Figure5 => self.figure5(out),
            Command::Monotonic { graph, exhaustive } => self.monotonic(&graph, exhaustive, out),
        }
    }

    fn poly(&self, g: &GraphArgs, out: &mut (dyn Write + Send)) -> Outcome {
        let p = g.polynomial(self.cap)?;
        match self.format {
            Format::Pretty => writeln!(out, "{p}")?,
            Format::Csv => {
                writeln!(out, "k,d_k")?;
                for (k, c) in p.coeffs().iter().enumerate() {
                    writeln!(out, "{k},{c}")?;
                }
            }
            Format::Json => writeln!(out, "{}", json!({ "poly": p.to_string(), "coeffs": csv_json_big(&p) }))?,
        }
        Ok(EXIT_OK)
    }

    fn avd(&self, g: &GraphArgs, out: &mut (dyn Write + Send)) -> Outcome {
        let (n, a) = g.avd(self.cap)?;
        let navd = &a / BigInt::from(n);
        match self.format {
            Format::Pretty => writeln!(out, "{}", fmt_rational(&a))?,
            Format::Csv => writeln!(out, "n,avd,navd\n{n},{},{}", fmt_rational(&a), fmt_rational(&navd))?,
            Format::Json => writeln!(
                out,
                "{}",
                json!({ "n": n, "avd": fmt_rational(&a), "navd": fmt_rational(&navd), "avd_f64": rational_to_f64(&a) })
            )?,
        }
        Ok(EXIT_OK)
    }

    fn bounds(&self, g: &GraphArgs, out: &mut (dyn Write + Send)) -> Outcome {
        let (graph, _) = g.graph()?;
        let r = bounds_report(&graph, self.cap)?;
        match self.format {
            Format::Pretty => write_bounds_pretty(&r, out)?,
            Format::Csv => writeln!(out, "{}\n{}", BoundsReport::CSV_HEADER, r.to_csv_row())?,
            Format::Json => writeln!(out, "{}", r.to_json())?,
        }
        Ok(if r.violations.is_empty() { EXIT_OK } else { EXIT_VIOLATION })
    }

    fn verify(&self, g: &GraphArgs, exhaustive: Option<usize>, out: &mut (dyn Write + Send)) -> Outcome {
        let graphs: Vec<Graph> = match exhaustive {
            Some(_) if g.given() => return Err(Fail::Usage("--exhaustive does not combine with a graph".into())),
            Some(n) if n == 0 || n > LABELLED_MAX => {
                return Err(Error::EnumerationLimit { what: "labelled graph", n, max: LABELLED_MAX }.into())
            }
            Some(n) => labelled_graphs(n).collect(),
            None => vec![g.graph()?.0],
        };
        let cap = self.cap;
        let results: Vec<Vec<(String, String, String, bool)>> =
            graphs.par_iter().map(|g| identity_rows(g, cap)).collect::<Result<_, Error>>()?;
        let mut failures = 0usize;
        if self.format == Format::Csv {
            writeln!(out, "graph,check,lhs,rhs,ok")?;
        }
        for (g, rows) in graphs.iter().zip(&results) {
            let id = crate::graph6::to_graph6(g);
            for (name, lhs, rhs, ok) in rows {
                failures += usize::from(!ok);
                let single = exhaustive.is_none();
                match self.format {
                    Format::Pretty if single || !ok => {
                        let mark = if *ok { "ok  " } else { "FAIL" };
                        writeln!(out, "{mark} {id} {name}: {lhs} = {rhs}")?
                    }
                    Format::Pretty => {}
                    Format::Csv => writeln!(out, "{id},{name},{lhs},{rhs},{ok}")?,
                    Format::Json => writeln!(
                        out,
                        "{}",
                        json!({ "graph": id, "check": name, "lhs": lhs, "rhs": rhs, "ok": ok })
                    )?,
                }
            }
        }
        if self.format == Format::Pretty && exhaustive.is_some() {
            writeln!(out, "{} graphs, {} failures", graphs.len(), failures)?;
        }
        Ok(if failures == 0 { EXIT_OK } else { EXIT_VIOLATION })
    }

    fn scan(&self, src: &SourceArgs, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Outcome {
        let items = src.items()?;
        match self.format {
            Format::Csv => writeln!(out, "{}", ScanRecord::CSV_HEADER)?,
            Format::Pretty => writeln!(out, "id n m avd navd 2n/3")?,
            Format::Json => {}
        }
        let format = self.format;
        let summary = scan(items, self.cap, |r| match format {
            Format::Csv => writeln!(out, "{}", r.to_csv_row()),
            Format::Json => writeln!(out, "{}", r.to_json()),
            Format::Pretty => writeln!(
                out,
                "{} {} {} {} {} {}",
                r.id,
                r.n,
                r.m,
                fmt_rational(&r.avd),
                fmt_rational(&r.navd),
                if r.conjecture_2n3_ok { "ok" } else { "VIOLATION" }
            ),
        })?;
        report_summary(summary.records, &summary.skipped, &summary.violations, err)?;
        Ok(if summary.violations.is_empty() { EXIT_OK } else { EXIT_VIOLATION })
    }

    fn hist(&self, src: &SourceArgs, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Outcome {
        let mut records = Vec::new();
        let summary = scan(src.items()?, self.cap, |r| {
            records.push(r.clone());
            Ok(())
        })?;
        report_summary(summary.records, &summary.skipped, &summary.violations, err)?;
        let Some(n) = records.first().map(|r| r.n) else {
            return Err(Fail::Usage("no graphs to bin".into()));
        };
        let h: Histogram = histogram(&records, n)?;
        match self.format {
            Format::Json => writeln!(out, "{}", h.to_json())?,
            _ => {
                writeln!(out, "{}", Histogram::CSV_HEADER)?;
                for row in h.to_csv_rows() {
                    writeln!(out, "{row}")?;
                }
            }
        }
        Ok(if summary.violations.is_empty() { EXIT_OK } else { EXIT_VIOLATION })
    }

    fn trees(&self, n_max: usize, out: &mut (dyn Write + Send)) -> Outcome {
        let reports = tree_suite(n_max, self.cap)?;
        let opt = |r: &Option<Rational>| r.as_ref().map(fmt_rational).unwrap_or_default();
        if self.format == Format::Csv {
            writeln!(out, "n,trees,avd_star,min_nonstar_avd,star_unique,gamma_sum_equalities,gamma_ratio_equalities,violations")?;
        }
        for r in &reports {
            match self.format {
                Format::Csv => writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.n,
                    r.trees,
                    fmt_rational(&r.avd_star),
                    opt(&r.min_nonstar_avd),
                    r.star_unique_minimizer(),
                    r.gamma_sum_equalities,
                    r.gamma_ratio_equalities,
                    r.violations.len()
                )?,
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({
                        "n": r.n,
                        "trees": r.trees,
                        "avd_star": fmt_rational(&r.avd_star),
                        "min_nonstar_avd": r.min_nonstar_avd.as_ref().map(fmt_rational),
                        "star_unique": r.star_unique_minimizer(),
                        "gamma_sum_equalities": r.gamma_sum_equalities,
                        "gamma_ratio_equalities": r.gamma_ratio_equalities,
                        "violations": r.violations,
                    })
                )?,
                Format::Pretty => {
                    writeln!(
                        out,
                        "n={} trees={} star avd={} least other={} star unique={} equalities: sum={} ratio={}",
                        r.n,
                        r.trees,
                        fmt_rational(&r.avd_star),
                        opt(&r.min_nonstar_avd),
                        r.star_unique_minimizer(),
                        r.gamma_sum_equalities,
                        r.gamma_ratio_equalities
                    )?;
                    for v in &r.violations {
                        writeln!(out, "  VIOLATION {v}")?;
                    }
                }
            }
        }
        Ok(if reports.iter().all(|r| r.ok()) { EXIT_OK } else { EXIT_VIOLATION })
    }

    fn limit(&self, out: &mut (dyn Write + Send)) -> Outcome {
        let lim = tribonacci_limit();
        let lambda2 = (1.0 / lim.lambda1).sqrt();
        match self.format {
            Format::Pretty => {
                writeln!(out, "lambda1 = {:.12}", lim.lambda1)?;
                writeln!(out, "lambda1' = {:.12}", lim.lambda1_prime)?;
                writeln!(out, "|lambda2| = {lambda2:.12}")?;
                writeln!(out, "r = {:.12}", lim.r)?;
            }
            Format::Csv => writeln!(
                out,
                "lambda1,lambda1_prime,lambda2_abs,r\n{:.15},{:.15},{:.15},{:.15}",
                lim.lambda1, lim.lambda1_prime, lambda2, lim.r
            )?,
            Format::Json => writeln!(
                out,
                "{}",
                json!({ "lambda1": lim.lambda1, "lambda1_prime": lim.lambda1_prime, "lambda2_abs": lambda2, "r": lim.r })
            )?,
        }
        Ok(EXIT_OK)
    }

    fn sequence(&self, family: Family, n_max: usize, out: &mut (dyn Write + Send)) -> Outcome {
        let seq = navd_sequence(family, n_max)?;
        if self.format != Format::Json {
            writeln!(out, "n,navd,navd_f64")?;
        }
        for (n, v) in seq {
            match self.format {
                Format::Json => writeln!(out, "{}", json!({ "n": n, "navd": fmt_rational(&v), "navd_f64": rational_to_f64(&v) }))?,
                _ => writeln!(out, "{n},{},{}", fmt_rational(&v), rational_to_f64(&v))?,
            }
        }
        Ok(EXIT_OK)
    }

    fn density(&self, a: u64, b: u64, k: u64, out: &mut (dyn Write + Send)) -> Outcome {
        let d = density_sequence(a, b, k)?;
        let gap = rational_to_f64(&(&d.navd - d.target()));
        match self.format {
            Format::Pretty => writeln!(
                out,
                "{} x K_{k} + {} x empty({k}), n = {}\nnavd = {} ({})\ntarget - navd = {:e}",
                d.complete_copies,
                d.empty_copies,
                d.order(),
                fmt_rational(&d.navd),
                rational_to_f64(&d.navd),
                -gap
            )?,
            Format::Csv => writeln!(
                out,
                "a,b,k,complete_copies,empty_copies,n,navd,navd_f64\n{a},{b},{k},{},{},{},{},{}",
                d.complete_copies,
                d.empty_copies,
                d.order(),
                fmt_rational(&d.navd),
                rational_to_f64(&d.navd)
            )?,
            Format::Json => writeln!(
                out,
                "{}",
                json!({
                    "a": a, "b": b, "k": k,
                    "complete_copies": d.complete_copies,
                    "empty_copies": d.empty_copies,
                    "n": d.order(),
                    "navd": fmt_rational(&d.navd),
                    "navd_f64": rational_to_f64(&d.navd),
                })
            )?,
        }
        Ok(EXIT_OK)
    }

    fn random(&self, n: usize, p: f64, trials: usize, out: &mut (dyn Write + Send)) -> Outcome {
        let s = random_experiment(n, p, trials, self.seed, self.cap)?;
        match self.format {
            Format::Json => writeln!(out, "{}", s.to_json())?,
            Format::Csv => {
                writeln!(out, "trial,delta,navd,navd_f64")?;
                for (i, t) in s.trials.iter().enumerate() {
                    writeln!(out, "{i},{},{},{}", t.delta, fmt_rational(&t.navd), rational_to_f64(&t.navd))?;
                }
            }
            Format::Pretty => writeln!(
                out,
                "n={n} p={p} trials={trials} seed={}\nmean navd = {:.6}\nmin navd = {:.6}\nmax navd = {:.6}\n2^delta >= n^2 in {} of {} trials ({:.3})",
                self.seed,
                rational_to_f64(&s.mean_navd),
                rational_to_f64(&s.min_navd),
                rational_to_f64(&s.max_navd),
                s.cor_applicable,
                s.trials.len(),
                s.cor_fraction()
            )?,
        }
        Ok(EXIT_OK)
    }

    fn figure5(&self, out: &mut (dyn Write + Send)) -> Outcome {
        let r = figure5_regression();
        match self.format {
            Format::Json => writeln!(
                out,
                "{}",
                json!({
                    "poly": r.poly.to_string(),
                    "avd": fmt_rational(&r.avd),
                    "vertex_deletions": r.vertex_deletions.iter().map(|(v, a)| json!({"v": v + 1, "avd": fmt_rational(a)})).collect::<Vec<_>>(),
                    "edge_deletions": r.edge_deletions.iter().map(|((u, v), a)| json!({"u": u + 1, "v": v + 1, "avd": fmt_rational(a)})).collect::<Vec<_>>(),
                    "checks": r.checks.iter().map(|c| json!({"label": c.label, "expected": fmt_rational(&c.expected), "got": fmt_rational(&c.got), "ok": c.ok()})).collect::<Vec<_>>(),
                    "discrepancies": r.discrepancies,
                    "ok": r.ok(),
                })
            )?,
            Format::Csv => {
                writeln!(out, "deleted,avd")?;
                for (v, a) in &r.vertex_deletions {
                    writeln!(out, "v{},{}", v + 1, fmt_rational(a))?;
                }
                for ((u, v), a) in &r.edge_deletions {
                    writeln!(out, "v{}v{},{}", u + 1, v + 1, fmt_rational(a))?;
                }
            }
            Format::Pretty => {
                writeln!(out, "D(G,x) = {}", r.poly)?;
                writeln!(out, "avd(G) = {}", fmt_rational(&r.avd))?;
                for (v, a) in &r.vertex_deletions {
                    writeln!(out, "avd(G-v{}) = {}", v + 1, fmt_rational(a))?;
                }
                for ((u, v), a) in &r.edge_deletions {
                    writeln!(out, "avd(G-v{}v{}) = {}", u + 1, v + 1, fmt_rational(a))?;
                }
                for c in &r.checks {
                    let mark = if c.ok() { "ok  " } else { "FAIL" };
                    writeln!(out, "{mark} {} = {}", c.label, fmt_rational(&c.expected))?;
                }
                for d in &r.discrepancies {
                    writeln!(out, "note {d}")?;
                }
            }
        }
        Ok(if r.ok() { EXIT_OK } else { EXIT_VIOLATION })
    }

    fn monotonic(&self, g: &GraphArgs, exhaustive: Option<usize>, out: &mut (dyn Write + Send)) -> Outcome {
        let graphs: Vec<Graph> = match exhaustive {
            Some(_) if g.given() => return Err(Fail::Usage("--exhaustive does not combine with a graph".into())),
            Some(n) if !(2..=LABELLED_MAX).contains(&n) => {
                return Err(Error::EnumerationLimit { what: "labelled graph", n, max: LABELLED_MAX }.into())
            }
            Some(n) => labelled_graphs(n).filter(|g| g.size() > 0).collect(),
            None => vec![g.graph()?.0],
        };
        let cap = self.cap;
        let results = graphs.par_iter().map(|g| monotonicity_search(g, cap)).collect::<Result<Vec<_>, Error>>()?;
        let mut counterexamples = 0usize;
        if self.format == Format::Csv {
            writeln!(out, "id,avd,vertex,avd_minus_vertex,edge,avd_minus_edge")?;
        }
        for (g, m) in graphs.iter().zip(&results) {
            let id = crate::graph6::to_graph6(g);
            counterexamples += usize::from(!m.holds());
            let vertex = m.vertex.as_ref().map(|(v, a)| (v.to_string(), fmt_rational(a)));
            let edge = m.edge.as_ref().map(|((u, v), a)| (format!("{u}-{v}"), fmt_rational(a)));
            match self.format {
                Format::Pretty if exhaustive.is_none() || !m.holds() => {
                    writeln!(out, "{id} avd = {}", fmt_rational(&m.avd))?;
                    match &vertex {
                        Some((v, a)) => writeln!(out, "vertex {v}: avd(G-v) = {a}")?,
                        None => writeln!(out, "no vertex lowers avd")?,
                    }
                    match &edge {
                        Some((e, a)) => writeln!(out, "edge {e}: avd(G-e) = {a}")?,
                        None => writeln!(out, "no edge raises avd")?,
                    }
                }
                Format::Pretty => {}
                Format::Csv => {
                    let (v, va) = vertex.unwrap_or_default();
                    let (e, ea) = edge.unwrap_or_default();
                    writeln!(out, "{id},{},{v},{va},{e},{ea}", fmt_rational(&m.avd))?
                }
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({ "id": id, "avd": fmt_rational(&m.avd), "vertex": vertex, "edge": edge, "holds": m.holds() })
                )?,
            }
        }
        if self.format == Format::Pretty && exhaustive.is_some() {
            writeln!(out, "{} graphs, {} counterexamples", graphs.len(), counterexamples)?;
        }
        Ok(if counterexamples == 0 { EXIT_OK } else { EXIT_VIOLATION })
    }
}

fn identity_rows(g: &Graph, cap: Cap) -> Result<Vec<(String, String, String, bool)>, Error> {
    let mut rows = Vec::new();
    let mut push = |name: String, c: crate::domstruct::IdentityCheck| {
        let ok = c.ok();
        rows.push((name, c.lhs.to_string(), c.rhs.to_string(), ok));
    };
    push("sum_critical".into(), verify_sum_critical(g, cap)?);
    push("edge_identity".into(), verify_edge_identity(g, cap)?);
    for (u, v) in g.edges() {
        push(format!("edge_removal[{u}-{v}]"), verify_edge_removal(g, u, v, cap)?);
    }
    push("a2_pv".into(), verify_a2_pv(g, cap)?);
    let bad = check_a1_n1(g, cap)?;
    rows.push(("a1_le_n1".into(), bad.map_or("none".into(), |s| format!("{s:?}")), "none".into(), bad.is_none()));
    let crit = check_critical_characterization(g, cap)?;
    rows.push(("critical_private".into(), crit.to_string(), "true".into(), crit));
    let prof = complement_complex_profile(g, cap)?;
    rows.push(("complement_complex".into(), fmt_rational(&prof.av), format!("<= {}/2", g.order()), prof.holds));
    Ok(rows)
}

fn write_bounds_pretty(r: &BoundsReport, out: &mut (dyn Write + Send)) -> io::Result<()> {
    let opt = |x: &Option<Rational>| x.as_ref().map_or("n/a".to_string(), fmt_rational);
    writeln!(out, "n = {}, delta = {}, nu = {}", r.n, r.delta, r.nu)?;
    writeln!(out, "avd = {}", fmt_rational(&r.avd))?;
    writeln!(out, "lower (K_n) = {}{}", fmt_rational(&r.lower_kn), if r.lower_tight { " (tight)" } else { "" })?;
    writeln!(out, "upper (min degree) = {}", opt(&r.upper_mindeg))?;
    writeln!(out, "upper (3n/4) = {}", opt(&r.upper_34))?;
    writeln!(out, "upper (degree sum) = {}", opt(&r.upper_degsum))?;
    writeln!(out, "upper (n/2 plus delta term) = {}{}", opt(&r.upper_cor), if r.cor_half { ", <= (n+1)/2" } else { "" })?;
    writeln!(out, "upper (quasi-regularizable) = {}", opt(&r.upper_quasi))?;
    writeln!(out, "upper (matching) = {}", fmt_rational(&r.upper_matching))?;
    for v in &r.violations {
        writeln!(out, "VIOLATION {v}")?;
    }
    Ok(())
}

fn report_summary(records: usize, skipped: &[(usize, String)], violations: &[String], err: &mut (dyn Write + Send)) -> io::Result<()> {
    for (line, reason) in skipped {
        writeln!(err, "skipped line {line}: {reason}")?;
    }
    for v in violations {
        writeln!(err, "violation {v}")?;
    }
    writeln!(err, "{records} records, {} skipped, {} violations", skipped.len(), violations.len())
}

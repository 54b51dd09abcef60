mod config;
mod report;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use spinlow::brauer::{self, FragmentKind};
use spinlow::degrees::{generic_degree, unipotent_characters};
use spinlow::finitegeom::{self, Method, OrbitClass, QuadSpace};
use spinlow::gapscan::{self, Bound, QPolicy};
use spinlow::qpoly::to_i128;
use spinlow::verify::{self, Status, Suite, VerifyOptions};
use spinlow::{Error, Family, FamilyTag, QPoly, Symbol};

use config::Config;
use report::{Format, Report};

/// Exact checks of low-dimensional character degrees of finite spin groups.
#[derive(Debug, Parser)]
#[command(name = "spinlow", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Worker threads for batch checks (output does not depend on it).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// TOML file with budgets and ranges.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Unipotent character labels of a family.
    Symbols {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: u32,
    },
    /// Generic degree of one symbol, or of every unipotent character.
    Degree {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        symbol: Option<Symbol>,
    },
    /// Scan all unipotent characters against a degree bound.
    GapScan {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: u32,
        /// Largest q evaluated directly; domination is used beyond it.
        #[arg(long)]
        qmax: Option<u64>,
        /// Bound name; defaults to the unipotent bound of the family.
        #[arg(long)]
        bound: Option<Bound>,
    },
    /// Audit a table of smallest characters at one q.
    Audit {
        /// A, B, 2.3, 2.6, 2.7 or a bound name.
        #[arg(long)]
        theorem: Bound,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
    },
    /// Brute-force counts over the quadratic space of the unipotent radical.
    Geom {
        #[command(subcommand)]
        what: GeomCommand,
    },
    /// Modular degree lists and decomposition fragments.
    Brauer {
        #[command(subcommand)]
        what: BrauerCommand,
    },
    /// Batch verification suites.
    Verify {
        /// `all`, a suite name or its number.
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long)]
        max_n: Option<u32>,
    },
}

#[derive(Debug, clap::Args)]
struct GeomArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    q: u64,
    #[arg(long, value_parser = parse_method, default_value = "stratified")]
    method: Method,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum GeomCommand {
    /// Vector counts by class.
    Orbits(GeomArgs),
    /// Trace of a long root element on each class of characters.
    Trace {
        #[command(flatten)]
        args: GeomArgs,
        #[arg(long)]
        orbit: Option<OrbitClass>,
    },
    /// Vector counts on the fixed space of a root element.
    Fixcounts(GeomArgs),
}

#[derive(Debug, Subcommand)]
enum BrauerCommand {
    /// Degrees listed by the Brauer character gap theorem.
    List {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        ell: u64,
    },
    /// A decomposition-matrix fragment.
    Tables {
        /// Bn or Dminus.
        #[arg(long)]
        which: FragmentKind,
        #[arg(long)]
        n: u32,
    },
    /// Check every guarded list of a grid.
    Verify {
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long, value_delimiter = ',')]
        q: Option<Vec<u64>>,
        #[arg(long, value_delimiter = ',')]
        ell: Option<Vec<u64>>,
    },
}

fn parse_method(s: &str) -> Result<Method, String> {
    match s {
        "naive" => Ok(Method::Naive),
        "stratified" => Ok(Method::Stratified),
        _ => Err(format!("unknown method {s:?} (naive or stratified)")),
    }
}

enum Failure {
    Usage(String),
    Budget(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            Error::Parse(_)
            | Error::BadInput(_)
            | Error::OutOfRange(_)
            | Error::WrongDefectParity { .. }
            | Error::BadPair(_) => Failure::Usage(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

type Outcome = Result<Report, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            let mut out = io::stdout().lock();
            if let Err(e) = report.render(cli.format, &mut out).and_then(|_| out.flush()) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(if report.passed { 0 } else { 1 })
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Other(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let config = match &cli.config {
        Some(p) => Config::load(p).map_err(Failure::Usage)?,
        None => Config::default(),
    };
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global().map_err(|e| Failure::Usage(e.to_string()))?;
    }
    match &cli.command {
        Command::Symbols { family, n } => symbols(*family, *n),
        Command::Degree { family, n, symbol } => degree(*family, *n, symbol.as_ref()),
        Command::GapScan { family, n, qmax, bound } => gap_scan(*family, *n, qmax.or(config.qmax), *bound),
        Command::Audit { theorem, n, q } => audit(*theorem, *n, *q),
        Command::Geom { what } => geom(what, &config),
        Command::Brauer { what } => match what {
            BrauerCommand::List { family, n, q, ell } => brauer_list(*family, *n, *q, *ell),
            BrauerCommand::Tables { which, n } => brauer_tables(*which, *n),
            BrauerCommand::Verify { max_n, q, ell } => brauer_verify(
                max_n.or(config.max_n).unwrap_or(12),
                q.clone().or(config.brauer_q.clone()).unwrap_or(brauer::GRID_Q.to_vec()),
                ell.clone().or(config.brauer_ell.clone()).unwrap_or(brauer::GRID_ELL.to_vec()),
            ),
        },
        Command::Verify { suite, max_n } => verify_suites(suite, max_n.or(config.max_n), &config),
    }
}

fn symbols(family: Family, n: u32) -> Outcome {
    let tag = FamilyTag::new(family, n);
    let mut r = Report::new("symbols").param("family", family.to_string()).param("n", n);
    for c in unipotent_characters(tag)? {
        let s = &c.label.symbol;
        r.push(json!({
            "label": c.label.to_string(),
            "symbol": s.to_string(),
            "defect": s.defect(),
            "degenerate": s.is_degenerate(),
            "a_value": c.a_value(),
        }));
    }
    Ok(r)
}

fn degree_row(label: String, symbol: &Symbol, degree: &QPoly) -> serde_json::Value {
    json!({
        "label": label,
        "symbol": symbol.to_string(),
        "degree": degree,
        "a_value": degree.q_valuation().ok(),
    })
}

fn degree(family: Family, n: u32, symbol: Option<&Symbol>) -> Outcome {
    let tag = FamilyTag::new(family, n);
    let mut r = Report::new("degree").param("family", family.to_string()).param("n", n);
    match symbol {
        Some(s) => {
            r = r.param("symbol", s.to_string());
            let canonical = s.canonical(family)?;
            let d = generic_degree(&canonical, tag)?;
            r.push(degree_row(canonical.to_string(), &canonical, &d));
        }
        None => {
            for c in unipotent_characters(tag)? {
                r.push(degree_row(c.label.to_string(), &c.label.symbol, &c.degree));
            }
        }
    }
    Ok(r)
}

fn gap_scan(family: Family, n: u32, qmax: Option<u64>, bound: Option<Bound>) -> Outcome {
    let bound = bound.unwrap_or(if family == Family::BC { Bound::UnipotentBC } else { Bound::UnipotentD });
    let policy = qmax.map_or_else(QPolicy::default, QPolicy::up_to);
    let tag = FamilyTag::new(family, n);
    let scan = gapscan::scan_unipotent(tag, bound, &policy)?;
    let mut r = Report::new("gap-scan")
        .param("family", family.to_string())
        .param("n", n)
        .param("bound", bound.to_string())
        .param("policy", &policy);
    let anchor = format!("{} for {tag}", bound.anchor());
    for m in &scan.mismatches {
        r.fail(&anchor, format!("q={}: missing {:?}, extra {:?}", at_q(m.q), m.missing, m.extra));
    }
    for l in &scan.inconclusive {
        r.fail(&anchor, format!("{l}: domination inconclusive"));
    }
    for l in &scan.spot_check_failures {
        r.fail(&anchor, format!("{l}: spot check disagrees"));
    }
    for m in &scan.overlisted {
        r.notes.push(format!("listed but above the bound at q={}: {}", at_q(m.q), m.missing.join(", ")));
    }
    for row in &scan.below {
        r.push(row);
    }
    Ok(r)
}

fn at_q(q: Option<u64>) -> String {
    q.map_or_else(|| "beyond threshold".to_string(), |q| q.to_string())
}

fn audit(bound: Bound, n: u32, q: u64) -> Outcome {
    let reports = gapscan::audit_theorem(bound, n, q)?;
    let mut r = Report::new("audit").param("theorem", bound.to_string()).param("n", n).param("q", q);
    for a in &reports {
        let anchor = format!("{} for {}", bound.anchor(), a.family);
        for l in &a.unlisted_unipotent {
            r.fail(&anchor, format!("{l} is below the bound but not listed"));
        }
        for l in &a.bad_multiplicities {
            r.fail(&anchor, format!("{l}: multiplicity is not a non-negative integer"));
        }
        for l in &a.listed_unipotent_above {
            r.notes.push(format!("{}: {l} listed but not below the bound at q={q}", a.family));
        }
        for e in &a.exceptions {
            r.notes.push(format!("{}: {}", e.family, e.detail));
        }
        if !a.passed() && r.passed {
            r.fail(&anchor, "audit failed");
        }
        r.parameters.insert(format!("bound_value_{}", a.family), json!(a.bound_value.to_string()));
        for e in &a.entries {
            r.push(json!({
                "family": a.family.to_string(),
                "label": e.label,
                "degree": e.degree.to_string(),
                "multiplicity": e.multiplicity,
                "count": e.count,
                "status": e.status,
            }));
        }
    }
    Ok(r)
}

fn class_key(c: OrbitClass) -> &'static str {
    match c {
        OrbitClass::Singular => "singular",
        OrbitClass::Square => "plus",
        OrbitClass::Nonsquare => "minus",
    }
}

fn geom(cmd: &GeomCommand, config: &Config) -> Outcome {
    let (name, args) = match cmd {
        GeomCommand::Orbits(a) => ("geom orbits", a),
        GeomCommand::Trace { args, .. } => ("geom trace", args),
        GeomCommand::Fixcounts(a) => ("geom fixcounts", a),
    };
    let budget = args.budget.or(config.budget).map_or(finitegeom::DEFAULT_BUDGET, u128::from);
    let space = QuadSpace::standard(args.family, args.n, args.q)?;
    let forms = finitegeom::closed_forms(args.family, args.n)?;
    let q = args.q as i64;
    let expect = |p: &QPoly| to_i128(&p.eval_int(q)).expect("closed forms are integral at prime powers");
    let mut r = Report::new(name)
        .param("family", args.family.to_string())
        .param("n", args.n)
        .param("q", args.q)
        .param("method", args.method);
    let anchor = format!("{} for {} n={} q={}", name.trim_start_matches("geom "), args.family, args.n, args.q);
    let compare = |r: &mut Report, class: OrbitClass, got: i128, want: i128| {
        if got != want {
            r.fail(&anchor, format!("{}: counted {got}, closed form {want}", class_key(class)));
        }
    };
    match cmd {
        GeomCommand::Orbits(_) => {
            let h = finitegeom::value_histogram(&space, args.method, budget)?;
            let mut row = serde_json::Map::new();
            for (i, c) in OrbitClass::all().into_iter().enumerate() {
                row.insert(class_key(c).into(), json!(h.counts.get(c)));
                compare(&mut r, c, h.counts.get(c).into(), expect(&forms.orbit_sizes[i]));
            }
            r.push(row);
        }
        GeomCommand::Trace { orbit, .. } => {
            for (i, c) in OrbitClass::all().into_iter().enumerate() {
                if orbit.is_some_and(|o| o != c) {
                    continue;
                }
                let t = finitegeom::trace_on_root_element(&space, c, args.method, budget)?;
                compare(&mut r, c, t, expect(&forms.root_traces[i]));
                r.push(json!({"orbit": class_key(c), "trace": t}));
            }
        }
        GeomCommand::Fixcounts(_) => {
            let f = finitegeom::fixed_space_counts(&space, None, budget)?;
            let mut row = serde_json::Map::new();
            for (i, c) in OrbitClass::all().into_iter().enumerate() {
                row.insert(class_key(c).into(), json!(f.counts.get(c)));
                if let Some(fc) = &forms.fixed_counts {
                    compare(&mut r, c, f.counts.get(c).into(), expect(&fc[i]));
                }
            }
            row.insert("subspace_dim".into(), json!(f.subspace_dim));
            r.push(row);
        }
    }
    Ok(r)
}

fn brauer_list(family: Family, n: u32, q: u64, ell: u64) -> Outcome {
    let mut r =
        Report::new("brauer list").param("family", family.to_string()).param("n", n).param("q", q).param("ell", ell);
    let guard = brauer::hypothesis_guard(family, n, q, ell);
    if !guard.passed {
        for f in guard.failures() {
            r.fail("hypotheses of the Brauer character gap theorem", f);
        }
        return Ok(r);
    }
    let list = brauer::brauer_degree_list(family, n, q, ell)?;
    r = r.param("bound", list.bound.to_string()).param("bound_value", list.bound_value.to_string());
    for e in &list.entries {
        if !e.below_bound {
            r.fail(
                format!("{} degree list", list.bound.anchor()),
                format!("{} = {} is not below the bound", e.label, e.degree),
            );
        }
        r.push(json!({
            "label": e.label,
            "formula": e.formula,
            "complex_degree": e.complex_degree.to_string(),
            "kappa": e.provenance,
            "degree": e.degree.to_string(),
            "below_bound": e.below_bound,
        }));
    }
    Ok(r)
}

fn brauer_tables(kind: FragmentKind, n: u32) -> Outcome {
    let t = brauer::decomposition_table(kind, n)?;
    let mut r = Report::new("brauer tables").param("which", kind.to_string()).param("n", n).param("k", t.k);
    let anchor = format!("decomposition fragment {kind}");
    if !t.is_unitriangular() {
        r.fail(&anchor, "not unitriangular");
    }
    for a in brauer::check_a_values(&t)? {
        if !a.passed {
            r.fail(&anchor, format!("{}: a-value {} but q-valuation {}", a.label, a.a_value, a.valuation));
        }
    }
    if let Some(series) = &t.column_series {
        r.notes.push(format!("column series: {}", series.join(" ")));
    }
    for row in &t.rows {
        let mut m = serde_json::Map::new();
        m.insert("label".into(), json!(row.label));
        m.insert("a_value".into(), json!(row.a_value));
        m.insert("degree".into(), json!(row.degree));
        for (j, e) in row.entries.iter().enumerate() {
            m.insert(format!("c{}", j + 1), json!(e));
        }
        r.push(m);
    }
    Ok(r)
}

fn brauer_verify(max_n: u32, qs: Vec<u64>, ells: Vec<u64>) -> Outcome {
    let grid = brauer::verify_grid(max_n, &qs, &ells);
    let mut r = Report::new("brauer verify").param("max_n", max_n).param("q", &qs).param("ell", &ells);
    for f in &grid.failures {
        r.fail("Brauer character gap theorem degree list", f);
    }
    r.push(&grid);
    Ok(r)
}

fn verify_suites(which: &str, max_n: Option<u32>, config: &Config) -> Outcome {
    let mut opts = max_n.map_or_else(VerifyOptions::default, VerifyOptions::with_max_n);
    if let Some(b) = config.budget {
        opts.geom_budget = b.into();
    }
    if let Some(qmax) = config.qmax {
        opts.policy = QPolicy::up_to(qmax);
    }
    if let Some(q) = &config.brauer_q {
        opts.brauer_q = q.clone();
    }
    if let Some(e) = &config.brauer_ell {
        opts.brauer_ell = e.clone();
    }
    let suites: Vec<Suite> = if which == "all" { Suite::all().to_vec() } else { vec![which.parse()?] };
    let mut r =
        Report::new("verify").param("suite", which).param("max_n", opts.max_n).param("gap_ranks", opts.gap_ranks);
    for s in suites {
        let rep = verify::run_suite(s, &opts)?;
        for f in &rep.failures {
            r.fail(&f.anchor, &f.detail);
        }
        for d in &rep.deviations {
            r.notes.push(format!("{}: {d}", rep.suite));
        }
        if rep.status == Status::Fail && rep.failures.is_empty() {
            r.fail(rep.title, "no checks ran");
        }
        r.push(json!({
            "number": rep.number,
            "suite": rep.suite,
            "title": rep.title,
            "status": rep.status,
            "checks": rep.checks,
            "failures": rep.failures.len(),
            "deviations": rep.deviations.len(),
        }));
    }
    Ok(r)
}

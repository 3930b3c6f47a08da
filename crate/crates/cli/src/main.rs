//! `irreg`: exact irregularity measures, enumeration and verification.
//!
//! Exit codes: 0 pass, 1 violations, 2 input error, 3 capability error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use irreg_core::enumeration::{
    enumerate_with, EnumerationOptions, EnumerationSpec, EnumeratorRegistry,
};
use irreg_core::formats::{parse_graphs, to_edge_list, to_graph6};
use irreg_core::generators;
use irreg_core::measures::{bound_report, Agreement, BoundRegistry, Profile};
use irreg_core::rational::{self, pretty};
use irreg_core::spectral::{main_eigenvalues, spectral_radius_estimate, two_walk_fit, TwoWalkFit};
use irreg_core::verifier::{
    extremal_search_with, max_deviation_split_k, reports_to_csv, run_suite_with, ExtremalResult,
    GraphPopulation, Maximizer, RunOptions, SuiteRegistry, VerificationReport,
};
use irreg_core::{Error, Graph};

#[derive(Parser)]
#[command(
    name = "irreg",
    version,
    about = "Exact graph irregularity measures and their bounds"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Directory for cached enumerations.
    #[arg(long, global = true, env = "IRREG_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Also write the JSON report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Leave elapsed times out of reports.
    #[arg(long, global = true)]
    no_timings: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
    Graph6,
    Edges,
}

#[derive(Subcommand)]
enum Command {
    /// Measures, classification and bounds for each input graph.
    Compute {
        /// graph6 lines or an edge list; stdin when absent or `-`.
        input: Option<PathBuf>,
        /// Inline graph6 string instead of a file.
        #[arg(long, conflicts_with = "input")]
        graph: Option<String>,
    },
    /// Print a member of a named family.
    Gen {
        /// path, cycle, star, complete, wheel, cs, multipartite, friendship, named
        family: String,
        params: Vec<String>,
    },
    /// Stream one graph per isomorphism class.
    Enum {
        #[command(flatten)]
        spec: SpecArgs,
        /// Vertex count.
        #[arg(long)]
        n: usize,
        /// Edge count.
        #[arg(long)]
        m: Option<usize>,
        /// Print the class count only.
        #[arg(long)]
        count: bool,
        #[arg(long)]
        strategy: Option<String>,
    },
    /// Run verification suites over an enumerated or supplied population.
    Verify {
        /// Suite id; repeat for several.
        #[arg(long, default_value = "all")]
        suite: Vec<String>,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Check the graphs in this file instead of enumerating.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Scan small graphs for counterexamples to the open inequalities.
    Conjectures {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Scan disconnected graphs too.
        #[arg(long)]
        include_disconnected: bool,
    },
    /// Maximizers of S and Var among connected graphs with n vertices and m edges.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Best k for S(CS(n, k)) against the divisibility rule.
    SplitK {
        #[arg(long)]
        n: usize,
    },
    /// List suites, bounds and enumerators.
    Suites,
}

#[derive(Args, Clone, Copy)]
struct SpecArgs {
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    irregular: bool,
    #[arg(long, conflicts_with = "unicyclic")]
    trees: bool,
    #[arg(long)]
    unicyclic: bool,
}

impl SpecArgs {
    fn spec(self, n: usize, m: Option<usize>) -> EnumerationSpec {
        let mut spec = if self.trees {
            EnumerationSpec::trees(n)
        } else if self.unicyclic {
            EnumerationSpec::unicyclic(n)
        } else if self.connected {
            EnumerationSpec::connected(n)
        } else {
            EnumerationSpec::all(n)
        };
        if m.is_some() {
            spec.m = m;
        }
        if self.irregular {
            spec = spec.irregular();
        }
        spec
    }

    fn first_n(self) -> usize {
        if self.trees {
            2
        } else if self.unicyclic {
            3
        } else {
            1
        }
    }

    fn label(self, max_n: usize) -> String {
        let kind = match (self.trees, self.unicyclic, self.connected) {
            (true, ..) => "trees",
            (_, true, _) => "unicyclic graphs",
            (.., true) => "connected graphs",
            _ => "all graphs",
        };
        let irr = if self.irregular { "irregular " } else { "" };
        format!("{irr}{kind}, {} <= n <= {max_n}", self.first_n())
    }
}

enum Failure {
    Violations,
    /// Downstream reader went away, e.g. `| head`.
    ClosedPipe,
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            return Failure::ClosedPipe;
        }
        Failure::Io(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) | Err(Failure::ClosedPipe) => ExitCode::SUCCESS,
        Err(Failure::Violations) => ExitCode::from(1),
        Err(Failure::Core(e)) => {
            eprintln!("irreg: {e}");
            ExitCode::from(match e {
                Error::Capability(_) => 3,
                _ => 2,
            })
        }
        Err(Failure::Io(msg)) => {
            eprintln!("irreg: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let g = &cli.global;
    match cli.command {
        Command::Compute { input, graph } => compute(g, input, graph),
        Command::Gen { family, params } => gen(g, &family, &params),
        Command::Enum {
            spec,
            n,
            m,
            count,
            strategy,
        } => enumerate(g, spec.spec(n, m), count, strategy),
        Command::Verify {
            suite,
            spec,
            max_n,
            input,
        } => verify(g, &suite, spec, max_n, input),
        Command::Conjectures {
            max_n,
            include_disconnected,
        } => conjectures(g, max_n, include_disconnected),
        Command::Extremal { n, m } => extremal(g, n, m),
        Command::SplitK { n } => split_k(g, n),
        Command::Suites => list(),
    }
}

fn enum_options(g: &Global, strategy: Option<String>) -> EnumerationOptions {
    EnumerationOptions {
        strategy,
        workers: g.workers,
        cache_dir: g.cache_dir.clone(),
    }
}

fn read_input(input: Option<PathBuf>, inline: Option<String>) -> Result<Vec<Graph>, Failure> {
    let text = match (inline, input) {
        (Some(s), _) => s,
        (None, Some(p)) if p.as_os_str() != "-" => fs::read_to_string(&p)
            .map_err(|e| Failure::Core(Error::Input(format!("{}: {e}", p.display()))))?,
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(parse_graphs(&text)?)
}

fn write_out(g: &Global, body: &str) -> Outcome {
    if let Some(path) = &g.out {
        fs::write(path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn compute(g: &Global, input: Option<PathBuf>, inline: Option<String>) -> Outcome {
    let graphs = read_input(input, inline)?;
    let mut stdout = io::stdout().lock();
    let mut records = Vec::new();
    for (i, graph) in graphs.iter().enumerate() {
        let p = Profile::new(graph);
        let fit = two_walk_fit(graph).ok();
        let radius = spectral_radius_estimate(graph).ok();
        let bounds = bound_report(graph);
        if g.format == Format::Json || g.out.is_some() {
            records.push(json!({
                "graph6": to_graph6(graph),
                "n": p.n(),
                "m": p.m(),
                "degree_stats": p.stats,
                "classification": p.class,
                "measures": p.measures,
                "bounds": bounds,
                "two_walk": fit,
                "spectral_radius": radius,
            }));
        }
        if g.format == Format::Json {
            continue;
        }
        if i > 0 {
            writeln!(stdout)?;
        }
        let s = &p.stats;
        writeln!(stdout, "graph: {}", to_graph6(graph))?;
        writeln!(stdout, "n={} m={}", p.n(), p.m())?;
        writeln!(stdout, "degrees: {}", s.sequence_string())?;
        let ds: Vec<String> = s.degree_set.iter().map(|d| d.to_string()).collect();
        writeln!(stdout, "Ds: {{{}}}", ds.join(", "))?;
        let counts: Vec<String> = s
            .histogram
            .iter()
            .map(|(d, c)| format!("N_{d}={c}"))
            .collect();
        writeln!(stdout, "{}", counts.join(" "))?;
        writeln!(stdout, "q={}", s.universal_count)?;
        if let Some(c) = p.class.cyclomatic {
            writeln!(stdout, "c={c}")?;
        }
        writeln!(stdout, "2m/n={}", pretty(&s.average_degree))?;
        let ms = &p.measures;
        writeln!(stdout, "M1={}", pretty(&ms.m1))?;
        if p.class.is_regular {
            writeln!(stdout, "regular; S=0; Omega: undefined")?;
        } else {
            writeln!(stdout, "S={}", pretty(&ms.s))?;
        }
        writeln!(stdout, "Var={}", pretty(&ms.var))?;
        writeln!(stdout, "IRD={}", pretty(&ms.ird))?;
        writeln!(stdout, "IRR={}", pretty(&ms.irr))?;
        if let Some(o) = &ms.omega {
            writeln!(stdout, "Omega={}", pretty(o))?;
        }
        writeln!(stdout, "class: {}", describe(&p))?;
        match fit {
            Some(TwoWalkFit::Linear(t)) => {
                write!(stdout, "two_walk: a={} b={}", t.a, t.b)?;
                if let Ok((l, m)) = main_eigenvalues(t) {
                    write!(stdout, "; main eigenvalues {l:.9}, {m:.9}")?;
                }
                writeln!(stdout)?;
            }
            Some(TwoWalkFit::NonIntegral { a, b }) => {
                writeln!(stdout, "two_walk: non-integral a={a} b={b}")?
            }
            Some(TwoWalkFit::NegativeDiscriminant(t)) => {
                writeln!(stdout, "two_walk: a={} b={} (a^2+4b < 0)", t.a, t.b)?
            }
            Some(TwoWalkFit::NotLinear) => writeln!(stdout, "two_walk: not linear")?,
            None => {}
        }
        if let Some(r) = radius {
            writeln!(stdout, "spectral_radius~{r:.9}")?;
        }
        writeln!(stdout, "bounds:")?;
        for b in bounds.iter().filter(|b| b.applicable()) {
            let side = |v: &Option<irreg_core::Rational>| {
                v.as_ref().map(pretty).unwrap_or_else(|| "-".into())
            };
            let eq = match (b.is_equality, b.agreement) {
                (true, Agreement::ConditionViolated) => " equality (not predicted)",
                (false, Agreement::ConditionViolated) => " strict (equality predicted)",
                (true, _) => " equality",
                _ => "",
            };
            let verdict = if b.holds { "ok" } else { "FAILS" };
            writeln!(
                stdout,
                "  {:<24} {} {} {}  {verdict}{eq}",
                b.bound_id,
                side(&b.lhs),
                b.relation.symbol(),
                side(&b.rhs)
            )?;
        }
    }
    let body = if records.len() == 1 {
        serde_json::to_string_pretty(&records[0])
    } else {
        serde_json::to_string_pretty(&records)
    }
    .expect("records serialise");
    if g.format == Format::Json {
        writeln!(stdout, "{body}")?;
    }
    write_out(g, &body)
}

fn describe(p: &Profile) -> String {
    let c = &p.class;
    let mut tags = vec![if c.is_connected {
        "connected"
    } else {
        "disconnected"
    }
    .to_string()];
    if c.is_regular {
        tags.push("regular".into());
    } else if c.is_balanced_bidegreed {
        tags.push("balanced bidegreed".into());
    } else if c.is_bidegreed {
        tags.push("bidegreed".into());
    } else {
        tags.push(format!("{} degrees", c.degree_class));
    }
    if c.is_tree {
        tags.push("tree".into());
    }
    if c.is_unicyclic {
        tags.push("unicyclic".into());
    }
    if c.is_dominating {
        tags.push("dominating".into());
    }
    if let Some(k) = c.is_complete_split {
        tags.push(format!("CS({},{k})", p.n()));
    }
    tags.join(", ")
}

fn number(params: &[String], i: usize, what: &str) -> Result<usize, Failure> {
    let raw = params
        .get(i)
        .ok_or_else(|| Error::Input(format!("missing parameter <{what}>")))?;
    raw.parse().map_err(|_| {
        Failure::Core(Error::Input(format!(
            "<{what}> must be a non-negative integer, got `{raw}`"
        )))
    })
}

fn gen(g: &Global, family: &str, params: &[String]) -> Outcome {
    let graph = match family {
        "path" => generators::path(number(params, 0, "n")?)?,
        "cycle" => generators::cycle(number(params, 0, "n")?)?,
        "star" => generators::star(number(params, 0, "n")?)?,
        "complete" => generators::complete(number(params, 0, "n")?)?,
        "wheel" => generators::wheel(number(params, 0, "n")?)?,
        "cs" => generators::complete_split(number(params, 0, "n")?, number(params, 1, "k")?)?,
        "multipartite" => {
            let parts = (0..params.len().max(1))
                .map(|i| number(params, i, "part"))
                .collect::<Result<Vec<_>, _>>()?;
            generators::complete_multipartite(&parts)?
        }
        "friendship" => generators::friendship(number(params, 0, "k")?)?,
        "named" => generators::named(params.first().map(String::as_str).unwrap_or(""))?,
        other => {
            return Err(Error::Input(format!(
                "unknown family `{other}` (known: path, cycle, star, complete, wheel, cs, multipartite, friendship, named)"
            ))
            .into())
        }
    };
    let text = match g.format {
        Format::Edges => to_edge_list(&graph),
        Format::Json => serde_json::to_string(&json!({
            "n": graph.n(),
            "edges": graph.edges(),
            "graph6": to_graph6(&graph),
        }))
        .expect("serialise"),
        _ => to_graph6(&graph),
    };
    println!("{}", text.trim_end());
    Ok(())
}

fn enumerate(g: &Global, spec: EnumerationSpec, count: bool, strategy: Option<String>) -> Outcome {
    let graphs = enumerate_with(&spec, &enum_options(g, strategy))?;
    let mut stdout = io::BufWriter::new(io::stdout().lock());
    if count {
        writeln!(stdout, "{}", graphs.len())?;
        return Ok(());
    }
    for graph in &graphs {
        match g.format {
            Format::Edges => writeln!(stdout, "{}", to_edge_list(graph))?,
            _ => writeln!(stdout, "{}", to_graph6(graph))?,
        }
    }
    Ok(())
}

fn run_options(g: &Global) -> RunOptions {
    RunOptions {
        workers: g.workers,
        include_timings: !g.no_timings,
    }
}

fn verify(
    g: &Global,
    suites: &[String],
    spec: SpecArgs,
    max_n: usize,
    input: Option<PathBuf>,
) -> Outcome {
    let pop = match input {
        Some(path) => {
            let label = path.display().to_string();
            GraphPopulation::from_graphs(label, read_input(Some(path), None)?)
        }
        None => {
            let opts = enum_options(g, None);
            let specs: Vec<_> = (spec.first_n()..=max_n)
                .map(|n| spec.spec(n, None))
                .collect();
            GraphPopulation::enumerate(spec.label(max_n), &specs, &opts)?
        }
    };
    let reports = suites
        .iter()
        .map(|s| run_suite_with(&pop, s, &run_options(g)))
        .collect::<Result<Vec<_>, _>>()?;
    emit_reports(g, &reports, false)
}

fn conjectures(g: &Global, max_n: usize, include_disconnected: bool) -> Outcome {
    let opts = enum_options(g, None);
    let pop = if include_disconnected {
        GraphPopulation::all_up_to(max_n, &opts)?
    } else {
        GraphPopulation::connected_up_to(max_n, &opts)?
    };
    let reports = ["deviation-conjecture", "omega-conjecture"]
        .iter()
        .map(|s| run_suite_with(&pop, s, &run_options(g)))
        .collect::<Result<Vec<_>, _>>()?;
    emit_reports(g, &reports, true)
}

fn emit_reports(g: &Global, reports: &[VerificationReport], list_equalities: bool) -> Outcome {
    let json = if reports.len() == 1 {
        reports[0].to_json()
    } else {
        serde_json::to_string_pretty(reports).expect("reports serialise")
    };
    let mut stdout = io::stdout().lock();
    match g.format {
        Format::Json => writeln!(stdout, "{json}")?,
        Format::Csv => write!(stdout, "{}", reports_to_csv(reports)?)?,
        _ => {
            for r in reports {
                writeln!(
                    stdout,
                    "{}: {} {} ({}), {} checks, {} violations, {} findings, {} equality cases: {}",
                    r.suite_id,
                    r.graphs_checked,
                    r.counting,
                    r.population,
                    r.checks,
                    r.violations.len(),
                    r.findings.len(),
                    r.equality_cases.len(),
                    if r.passed { "PASS" } else { "FAIL" }
                )?;
                for v in &r.violations {
                    let side = |x: &Option<irreg_core::Rational>| {
                        x.as_ref().map(pretty).unwrap_or_else(|| "-".into())
                    };
                    writeln!(
                        stdout,
                        "  violation {} {} lhs={} rhs={} {}",
                        v.check_id,
                        v.code,
                        side(&v.lhs),
                        side(&v.rhs),
                        v.detail
                    )?;
                }
                for (id, count) in r.findings_by_check() {
                    writeln!(stdout, "  findings {id}: {count}")?;
                }
                if list_equalities {
                    for e in &r.equality_cases {
                        writeln!(
                            stdout,
                            "  equality {} {} {}",
                            e.check_id, e.code, e.degree_sequence
                        )?;
                    }
                }
                if let Some(ms) = r.elapsed_ms {
                    writeln!(stdout, "  elapsed {ms} ms")?;
                }
            }
        }
    }
    write_out(g, &json)?;
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(Failure::Violations)
    }
}

fn maximizer_label(n: usize, m: &Maximizer) -> String {
    match m.complete_split {
        Some(k) => format!("CS({n},{k})"),
        None => m.code.clone(),
    }
}

fn extremal(g: &Global, n: usize, m: usize) -> Outcome {
    let opts = enum_options(g, None);
    let r: ExtremalResult = extremal_search_with(n, m, &opts)?;
    let json = serde_json::to_string_pretty(&r).expect("result serialises");
    let mut stdout = io::stdout().lock();
    if g.format == Format::Json {
        writeln!(stdout, "{json}")?;
    } else {
        writeln!(
            stdout,
            "n={n} m={m}: {} {}, {} irregular",
            r.classes, r.counting, r.irregular_classes
        )?;
        let census: Vec<String> = r
            .universal_census
            .iter()
            .map(|(q, c)| format!("q={q}: {c}"))
            .collect();
        writeln!(
            stdout,
            "universal vertices: {}",
            if census.is_empty() {
                "none".into()
            } else {
                census.join(", ")
            }
        )?;
        for (name, value, list) in [
            ("S", &r.max_s, &r.max_s_graphs),
            ("Var", &r.max_var, &r.max_var_graphs),
        ] {
            writeln!(stdout, "max {name} = {}", pretty(value))?;
            for x in list {
                writeln!(
                    stdout,
                    "  {} {} M1={} S={} Var={}",
                    maximizer_label(n, x),
                    x.degree_sequence,
                    rational::exact(&x.m1),
                    pretty(&x.s),
                    pretty(&x.var)
                )?;
            }
        }
        let names: Vec<String> = r
            .max_s_graphs
            .iter()
            .map(|x| maximizer_label(n, x))
            .collect();
        writeln!(
            stdout,
            "coincide: {}; maximizer: {}",
            r.coincide,
            names.join(", ")
        )?;
    }
    write_out(g, &json)
}

fn split_k(g: &Global, n: usize) -> Outcome {
    let c = max_deviation_split_k(n)?;
    if g.format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&c).expect("serialise"));
    } else {
        println!(
            "n={n}: rule k={:?}, argmax k={:?}, max S={}; agrees: {}",
            c.rule,
            c.argmax,
            pretty(&c.max_s),
            c.agrees
        );
    }
    Ok(())
}

fn list() -> Outcome {
    let mut stdout = io::stdout().lock();
    writeln!(stdout, "suites:")?;
    for s in SuiteRegistry::standard().iter() {
        writeln!(stdout, "  {:<28} {}", s.id(), s.description())?;
    }
    writeln!(stdout, "bounds:")?;
    for b in BoundRegistry::standard().iter() {
        writeln!(stdout, "  {:<28} {}", b.id(), b.statement())?;
    }
    writeln!(stdout, "enumerators:")?;
    for e in EnumeratorRegistry::standard().iter() {
        writeln!(
            stdout,
            "  {:<28} {} graphs, n <= {}: {}",
            e.name(),
            e.population(),
            e.max_n(),
            e.description()
        )?;
    }
    Ok(())
}

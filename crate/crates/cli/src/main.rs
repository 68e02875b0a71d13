use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use kcactus::classify::{block_kinds, EndpointRule};
use kcactus::construct::{extremal_recipes, max_edges, max_edges_two_connected, realize_recipe, realize_recipe_all};
use kcactus::cycles::CycleOracle;
use kcactus::decompose::{blocks, ear_decomposition, is_two_connected};
use kcactus::graph::canonical_form;
use kcactus::verify::{
    enumerate_graphs, exit_code, recheck_report, Census, Claim, RunPlan, VerificationReport, Verifier,
};
use kcactus::{parse_graph6, write_graph6, Graph};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "kcactus", version, about = "Exact tools for k-cacti over graph6 streams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Largest order the cycle oracle will accept.
    #[arg(long, global = true, default_value_t = kcactus::cycles::DEFAULT_CAP)]
    cap: usize,
    /// Whether θ' ears may end at a branch vertex of the base.
    #[arg(long, global = true, value_enum, default_value_t = Rule::Relaxed)]
    theta_prime_endpoints: Rule,
    /// Report malformed input lines and continue instead of stopping.
    #[arg(long, global = true)]
    lenient: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    Strict,
    Relaxed,
}

impl From<Rule> for EndpointRule {
    fn from(r: Rule) -> Self {
        match r {
            Rule::Strict => EndpointRule::Strict,
            Rule::Relaxed => EndpointRule::Relaxed,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Cycle counts, block kinds and k-cactus membership per graph.
    Classify {
        /// graph6 file; standard input when absent.
        path: Option<PathBuf>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: Option<u64>,
    },
    /// Blocks, cut vertices and, for 2-connected graphs, an ear decomposition.
    Decompose { path: Option<PathBuf> },
    /// Maximum size of a (2-connected) k-cactus of order n.
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        two_connected: bool,
    },
    /// Extremal k-cacti of order n.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Every extremal graph of the recipes up to isomorphism.
        #[arg(long)]
        all: bool,
    },
    /// One graph per isomorphism class of order n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
    /// Run the exhaustive claim checks and print one JSON report per line.
    Verify {
        #[arg(long, default_value_t = kcactus::verify::ENUM_MAX_ORDER)]
        max_n: usize,
        /// Values of k, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3, 4])]
        k: Vec<usize>,
        /// Largest k for the 2-connected claim.
        #[arg(long, default_value_t = 6)]
        k_max: usize,
        /// Claims to run, comma separated; all when absent.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
        /// graph6 stream to check instead of the built-in enumeration; `-` for
        /// standard input.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Zero the timing fields so repeated runs are byte-identical.
        #[arg(long)]
        deterministic: bool,
        /// Re-check the witnesses of previously written reports instead.
        #[arg(long, conflicts_with = "input")]
        recheck: Option<PathBuf>,
    },
}

fn open(path: Option<&PathBuf>) -> Result<Box<dyn BufRead>> {
    Ok(match path {
        Some(p) if p.as_os_str() != "-" => Box::new(BufReader::new(
            File::open(p).with_context(|| format!("cannot open {}", p.display()))?,
        )),
        _ => Box::new(BufReader::new(io::stdin())),
    })
}

/// Applies `f` to each graph of the stream in order. Bad lines and per-graph
/// errors are fatal unless `lenient`, in which case they go to stderr.
fn for_each_graph(input: Box<dyn BufRead>, lenient: bool, mut f: impl FnMut(&str, Graph) -> Result<()>) -> Result<()> {
    for (i, line) in input.lines().enumerate() {
        let line = line.context("reading input")?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let outcome = parse_graph6(text).map_err(anyhow::Error::from).and_then(|g| f(text, g));
        if let Err(e) = outcome {
            let msg = format!("line {}: {e:#}", i + 1);
            if lenient {
                eprintln!("warning: {msg}, skipped");
            } else {
                bail!(msg);
            }
        }
    }
    Ok(())
}

fn emit(out: &mut impl Write, value: &Value) -> Result<()> {
    writeln!(out, "{value}")?;
    Ok(())
}

fn classify(common: &Common, path: Option<PathBuf>, k: Option<u64>) -> Result<()> {
    let format = common.format.unwrap_or(Format::Json);
    if format == Format::Graph6 && k.is_none() {
        bail!("--format graph6 prints the k-cacti of the stream and needs --k");
    }
    let oracle = CycleOracle::with_cap(common.cap);
    let rule = common.theta_prime_endpoints.into();
    let mut out = BufWriter::new(io::stdout().lock());
    for_each_graph(open(path.as_ref())?, common.lenient, |text, g| {
        let profile = oracle.edge_cycle_profile(&g)?;
        let connected = g.is_connected();
        let kinds = if connected { Some(block_kinds(&g, rule)?) } else { None };
        let k_cactus = k.map(|k| connected && profile.cactus_number() <= k);
        let structural = match (k, &kinds) {
            (Some(k @ 1..=4), Some(kinds)) => Some(kinds.iter().all(|b| b.allowed_in(k as usize))),
            _ => None,
        };
        match format {
            Format::Graph6 => {
                if k_cactus == Some(true) {
                    writeln!(out, "{text}")?;
                }
            }
            Format::Json => emit(
                &mut out,
                &json!({
                    "graph6": text,
                    "order": g.order(),
                    "size": g.size(),
                    "connected": connected,
                    "cactus_number": profile.cactus_number(),
                    "edge_cycles": profile.counts().iter()
                        .map(|(e, c)| json!({"edge": e.to_string(), "cycles": c}))
                        .collect::<Vec<_>>(),
                    "blocks": kinds,
                    "k": k,
                    "k_cactus": k_cactus,
                    "structural_k_cactus": structural,
                }),
            )?,
            Format::Table => {
                let kinds = kinds
                    .map(|ks| ks.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" "))
                    .unwrap_or_else(|| "disconnected".into());
                let member = |b: Option<bool>| b.map_or("-".to_string(), |b| b.to_string());
                writeln!(
                    out,
                    "{text}\tn={}\tm={}\tcactus_number={}\tk_cactus={}\tstructural={}\t{kinds}",
                    g.order(),
                    g.size(),
                    profile.cactus_number(),
                    member(k_cactus),
                    member(structural),
                )?;
            }
        }
        Ok(())
    })?;
    out.flush()?;
    Ok(())
}

fn decompose(common: &Common, path: Option<PathBuf>) -> Result<()> {
    let format = common.format.unwrap_or(Format::Json);
    if format == Format::Graph6 {
        bail!("decompose supports --format json or table");
    }
    let mut out = BufWriter::new(io::stdout().lock());
    for_each_graph(open(path.as_ref())?, common.lenient, |text, g| {
        let d = blocks(&g)?;
        let ears = if is_two_connected(&g) {
            Some(ear_decomposition(&g)?)
        } else {
            None
        };
        match format {
            Format::Table => {
                let bl: Vec<String> = d
                    .blocks
                    .iter()
                    .map(|b| {
                        format!(
                            "{{{}}}",
                            b.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
                        )
                    })
                    .collect();
                write!(
                    out,
                    "{text}\tblocks={}\tcut_vertices={:?}",
                    bl.join(" "),
                    d.cut_vertices
                )?;
                if let Some(e) = &ears {
                    write!(out, "\tcycle={:?}\tears={:?}", e.cycle, e.ears)?;
                }
                writeln!(out)?;
            }
            _ => emit(
                &mut out,
                &json!({
                    "graph6": text,
                    "blocks": d.blocks.iter().map(|b| json!({
                        "vertices": b.vertices,
                        "edges": b.edges.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                    "cut_vertices": d.cut_vertices,
                    "ear_decomposition": ears,
                }),
            )?,
        }
        Ok(())
    })?;
    out.flush()?;
    Ok(())
}

fn bound(common: &Common, n: usize, k: usize, two_connected: bool) -> Result<()> {
    let format = common.format.unwrap_or(Format::Table);
    if two_connected {
        let b = max_edges_two_connected(n, k)?;
        match format {
            Format::Json => println!("{}", serde_json::to_string(&b)?),
            _ => println!("{}", b.bound),
        }
    } else {
        if !(1..=4).contains(&k) {
            bail!("bound needs k in 1..=4 without --two-connected, got {k}");
        }
        let m = max_edges(n, k)?;
        match format {
            Format::Json => println!("{}", json!({"n": n, "k": k, "bound": m})),
            _ => println!("{m}"),
        }
    }
    Ok(())
}

fn generate(common: &Common, n: usize, k: usize, all: bool) -> Result<()> {
    let format = common.format.unwrap_or(Format::Graph6);
    let recipes = extremal_recipes(n, k)?;
    let mut out = BufWriter::new(io::stdout().lock());
    if !all {
        let r = recipes
            .first()
            .ok_or_else(|| anyhow!("no extremal recipe for n={n}, k={k}"))?;
        let g = realize_recipe(r)?;
        match format {
            Format::Json => emit(
                &mut out,
                &json!({"recipe": r.to_string(), "item": r.item, "graph6": write_graph6(&g)}),
            )?,
            Format::Table => writeln!(out, "{}\t{}\tn={}\tm={}", write_graph6(&g), r, g.order(), g.size())?,
            Format::Graph6 => writeln!(out, "{}", write_graph6(&g))?,
        }
    } else {
        let mut seen = BTreeSet::new();
        for r in &recipes {
            let graphs: Vec<String> = realize_recipe_all(r)?
                .iter()
                .map(|g| Ok(canonical_form(g)?.as_str().to_owned()))
                .collect::<Result<_>>()?;
            match format {
                Format::Json => emit(
                    &mut out,
                    &json!({
                        "recipe": r.to_string(),
                        "item": r.item,
                        "revision": r.revision.as_ref().map(|rev| rev.note),
                        "graph6": graphs,
                    }),
                )?,
                _ => {
                    for s in graphs {
                        if seen.insert(s.clone()) {
                            match format {
                                Format::Table => writeln!(out, "{s}\t{r}")?,
                                _ => writeln!(out, "{s}")?,
                            }
                        }
                    }
                }
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn enumerate(common: &Common, n: usize, connected: bool) -> Result<()> {
    let format = common.format.unwrap_or(Format::Graph6);
    let mut out = BufWriter::new(io::stdout().lock());
    for g in enumerate_graphs(n, connected)? {
        let s = write_graph6(&g);
        match format {
            Format::Json => emit(&mut out, &json!({"graph6": s, "order": g.order(), "size": g.size()}))?,
            Format::Table => writeln!(out, "{s}\tn={}\tm={}", g.order(), g.size())?,
            Format::Graph6 => writeln!(out, "{s}")?,
        }
    }
    out.flush()?;
    Ok(())
}

fn print_reports(format: Format, reports: &[VerificationReport]) -> Result<()> {
    let mut out = BufWriter::new(io::stdout().lock());
    for r in reports {
        match format {
            Format::Table => {
                let k = r.params.k.map_or("-".to_string(), |k| k.to_string());
                writeln!(
                    out,
                    "{:<22} n={:<2} k={:<2} {:<18} examined={:<6} mismatches={} elapsed={:.3}s",
                    r.claim.to_string(),
                    r.params.n,
                    k,
                    r.verdict.to_string(),
                    r.graphs_examined,
                    r.mismatches.len(),
                    r.elapsed_s
                )?;
            }
            _ => writeln!(out, "{}", r.to_json())?,
        }
    }
    out.flush()?;
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify(
    common: &Common,
    max_n: usize,
    ks: Vec<usize>,
    k_max: usize,
    claims: Vec<String>,
    input: Option<PathBuf>,
    deterministic: bool,
    recheck: Option<PathBuf>,
) -> Result<u8> {
    let format = common.format.unwrap_or(Format::Json);
    if format == Format::Graph6 {
        bail!("verify supports --format json or table");
    }
    let oracle = CycleOracle::with_cap(common.cap);
    let rule: EndpointRule = common.theta_prime_endpoints.into();
    if let Some(path) = recheck {
        let mut problems = 0;
        for (i, line) in open(Some(&path))?.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let report: VerificationReport =
                serde_json::from_str(&line).with_context(|| format!("line {}: not a report", i + 1))?;
            for p in recheck_report(&report, &oracle, rule)? {
                problems += 1;
                println!("line {} ({} n={}): {p}", i + 1, report.claim, report.params.n);
            }
        }
        println!("{problems} problem(s)");
        return Ok(if problems == 0 { 0 } else { 2 });
    }
    let claims = if claims.is_empty() {
        Claim::ALL.to_vec()
    } else {
        claims
            .iter()
            .map(|c| c.parse::<Claim>())
            .collect::<kcactus::Result<_>>()?
    };
    for &k in &ks {
        if !(1..=4).contains(&k) {
            bail!("verify needs k in 1..=4, got {k}");
        }
    }
    let census = match input {
        Some(path) => {
            let mut graphs = Vec::new();
            for_each_graph(open(Some(&path))?, common.lenient, |_, g| {
                graphs.push(g);
                Ok(())
            })?;
            Census::from_graphs(graphs, &oracle)?
        }
        None => Census::enumerate(max_n, &oracle)?,
    };
    let plan = RunPlan {
        max_n,
        ks,
        two_connected_k_max: k_max,
        claims,
    };
    let mut reports = Verifier::new(&census, oracle, rule).run(&plan)?;
    if deterministic {
        reports = reports.into_iter().map(VerificationReport::without_timing).collect();
    }
    print_reports(format, &reports)?;
    Ok(exit_code(&reports) as u8)
}

fn run(cli: Cli) -> Result<u8> {
    let common = &cli.common;
    match cli.command {
        Command::Classify { path, k } => classify(common, path, k)?,
        Command::Decompose { path } => decompose(common, path)?,
        Command::Bound { n, k, two_connected } => bound(common, n, k, two_connected)?,
        Command::Generate { n, k, all } => generate(common, n, k, all)?,
        Command::Enumerate { n, connected } => enumerate(common, n, connected)?,
        Command::Verify {
            max_n,
            k,
            k_max,
            claims,
            input,
            deterministic,
            recheck,
        } => {
            return verify(common, max_n, k, k_max, claims, input, deterministic, recheck);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version go to stdout and are not errors
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

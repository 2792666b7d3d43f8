//! Command-line front end: build complexes from graph families or files,
//! run matching trees, apply homotopy-preserving reductions, compute
//! homology, and run the verification suites.
//!
//! The canonical payload (stdout, or `--out FILE`) is byte-identical across
//! runs with the same arguments; timings and progress notes go to stderr.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use devoid::complex::ComplexRepr;
use devoid::devoid::{devoid_complex, dominance_complex, independence_complex, DevoidSpec};
use devoid::error::DevoidError;
use devoid::face::Face;
use devoid::graph::{
    complete, cycle, path, random_chordal, random_forest, random_tree, star, Multigraph,
    PatternGraph,
};
use devoid::homology::betti;
use devoid::morse::{
    assemble_matching, complementation, fold_reduce, nonface_split, run_tree, split_reduce,
    verify_acyclic, verify_matching, ContractibilityCertificate, PivotStrategy, ScriptedPlan,
};
use devoid::verify::{
    all_pass, render_jsonl, render_table, render_timings, run_suite, RecordStatus, SuiteConfig,
    SuiteName,
};

#[derive(Parser)]
#[command(
    name = "devoid",
    version,
    about = "Homotopy types of pattern-avoidance, independence and dominance complexes"
)]
struct Cli {
    /// Payload format on stdout (or --out FILE).
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Face budget for enumeration, homology and matching verification.
    #[arg(long = "budget-faces", global = true, default_value_t = 1 << 20)]
    budget_faces: usize,
    /// Node budget for matching-tree runs.
    #[arg(long = "budget-nodes", global = true, default_value_t = 1_000_000)]
    budget_nodes: usize,
    /// Seed for randomized graph families and suites.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Write the payload to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Builder {
    /// Faces are vertex sets whose induced subgraph avoids every forbidden
    /// pattern.
    Devoid,
    /// Independence complex (faces are independent sets).
    Ind,
    /// Dominance complex (faces are complements of dominating sets).
    Dom,
}

#[derive(Args)]
struct SourceArgs {
    /// Which complex to build from the graph.
    #[arg(long = "complex", value_enum, default_value_t = Builder::Devoid)]
    builder: Builder,
    /// Graph family spec `family:n`: path:8, cycle:9, star:4, complete:5,
    /// tree:10, forest:10, chordal:12 (random families use --seed).
    #[arg(long)]
    graph: Option<String>,
    /// Forbidden patterns for the pattern-avoidance builder, comma
    /// separated: p2, p3, ... (paths), c2, c3, ... (cycles), k2 (an edge).
    #[arg(long, default_value = "p3")]
    pattern: String,
    /// Edge density for random chordal graphs.
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    /// Complex JSON file ({"n": .., "facets": [[..]]} or
    /// {"n": .., "min_nonfaces": [[..]]}), instead of --graph.
    #[arg(long, conflicts_with = "graph")]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a complex and print it (canonical JSON or a table summary).
    Build {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Run a matching tree and print the resulting report.
    Morse {
        #[command(flatten)]
        source: SourceArgs,
        /// greedy | scripted:<file> | path:<k> | cycle:<k> | simplicial | leaf
        #[arg(long, default_value = "greedy")]
        strategy: String,
    },
    /// Apply a homotopy-preserving reduction.
    Reduce {
        #[command(flatten)]
        source: SourceArgs,
        /// fold | split:<u>,<v> | complement:<a>,<b>,... |
        /// surgery:<nonface>[/<coface>/...] (vertex lists comma separated)
        #[arg(long, default_value = "fold")]
        op: String,
    },
    /// Compute reduced integer homology (Betti numbers and torsion).
    Homology {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Run a verification suite; exits nonzero if any record fails.
    Verify {
        /// paths | cycles | dom-chordal | dom-forest | forest-p3 | figures
        suite: String,
        /// Forbidden-path length for the paths/cycles suites.
        #[arg(long)]
        k: Option<usize>,
        /// Smallest host size.
        #[arg(long = "n-min")]
        n_min: Option<usize>,
        /// Largest host size.
        #[arg(long = "n-max")]
        n_max: Option<usize>,
        /// Number of random instances for the randomized suites.
        #[arg(long)]
        instances: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let started = Instant::now();
    let (payload, exit) = match &cli.command {
        Command::Build { source } => {
            let (c, _) = resolve_source(source, &cli)?;
            let payload = match cli.format {
                Format::Json => {
                    let mut s = c.to_json_string();
                    s.push('\n');
                    s
                }
                Format::Table => build_table(&c),
            };
            (payload, ExitCode::SUCCESS)
        }
        Command::Morse { source, strategy } => {
            let (c, g) = resolve_source(source, &cli)?;
            let strategy = parse_strategy(strategy, g.as_ref())?;
            let (tree, report) = run_tree(&c, &strategy, cli.budget_nodes)?;
            match assemble_matching(&c, &tree, cli.budget_faces) {
                Ok(matching) => {
                    let paired = verify_matching(&c, &matching, cli.budget_faces)?;
                    let acyclic = verify_acyclic(&c, &matching, cli.budget_faces)?;
                    if !(paired && acyclic) {
                        return Err(DevoidError::InternalInvariant(
                            "assembled matching failed verification".into(),
                        )
                        .into());
                    }
                    eprintln!("matching verified: {} pairs, acyclic", matching.len());
                }
                Err(e @ (DevoidError::BudgetExceeded(_) | DevoidError::TooLarge(_))) => {
                    eprintln!("matching verification skipped: {e}");
                }
                Err(e) => return Err(e.into()),
            }
            let payload = match cli.format {
                Format::Json => pretty(&report.to_json()),
                Format::Table => morse_table(&report),
            };
            (payload, ExitCode::SUCCESS)
        }
        Command::Reduce { source, op } => {
            let (c, _) = resolve_source(source, &cli)?;
            let payload = run_reduce(&c, op, cli.format, cli.budget_faces)?;
            (payload, ExitCode::SUCCESS)
        }
        Command::Homology { source } => {
            let (c, _) = resolve_source(source, &cli)?;
            let profile = betti(&c, cli.budget_faces)?;
            let payload = match cli.format {
                Format::Json => pretty(&profile.to_json()),
                Format::Table => homology_table(&profile),
            };
            (payload, ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            k,
            n_min,
            n_max,
            instances,
        } => {
            let name = SuiteName::parse(suite)?;
            let cfg = SuiteConfig {
                k: k.unwrap_or(3),
                n_min: *n_min,
                n_max: *n_max,
                instances: *instances,
                seed: cli.seed,
                face_budget: cli.budget_faces,
                node_budget: cli.budget_nodes,
            };
            let records = run_suite(name, &cfg)?;
            let payload = match cli.format {
                Format::Json => render_jsonl(&records),
                Format::Table => render_table(&records),
            };
            eprint!("{}", render_timings(&records));
            let passed = records
                .iter()
                .filter(|r| r.status == RecordStatus::Pass)
                .count();
            let failed = records
                .iter()
                .filter(|r| r.status == RecordStatus::Fail)
                .count();
            let skipped = records
                .iter()
                .filter(|r| r.status == RecordStatus::Skipped)
                .count();
            eprintln!("{passed} pass, {failed} fail, {skipped} skipped");
            let exit = if all_pass(&records) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
            (payload, exit)
        }
    };
    emit(&payload, &cli.out)?;
    eprintln!("completed in {} ms", started.elapsed().as_millis());
    Ok(exit)
}

fn emit(payload: &str, out: &Option<PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(file) => {
            fs::write(file, payload)?;
            eprintln!("wrote {}", file.display());
        }
        None => {
            print!("{payload}");
            std::io::stdout().flush()?;
        }
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON serialization cannot fail");
    s.push('\n');
    s
}

fn complex_value(c: &ComplexRepr) -> Value {
    serde_json::from_str(&c.to_json_string()).expect("canonical complex JSON parses")
}

// ---------------------------------------------------------------------------
// Complex sources
// ---------------------------------------------------------------------------

fn resolve_source(
    source: &SourceArgs,
    cli: &Cli,
) -> anyhow::Result<(ComplexRepr, Option<Multigraph>)> {
    if let Some(file) = &source.file {
        let text = fs::read_to_string(file)?;
        return Ok((ComplexRepr::from_json_str(&text)?, None));
    }
    let Some(spec) = &source.graph else {
        return Err(DevoidError::InvalidParameter(
            "provide a complex source: --graph family:n or --file complex.json".into(),
        )
        .into());
    };
    let g = parse_graph(spec, cli.seed, source.density)?;
    let c = match source.builder {
        Builder::Devoid => {
            let family = parse_patterns(&source.pattern)?;
            devoid_complex(&DevoidSpec::new(g.clone(), family)?)?
        }
        Builder::Ind => independence_complex(&g)?,
        Builder::Dom => dominance_complex(&g)?,
    };
    Ok((c, Some(g)))
}

fn parse_graph(spec: &str, seed: u64, density: f64) -> devoid::Result<Multigraph> {
    let (family, num) = spec.split_once(':').ok_or_else(|| {
        DevoidError::InvalidParameter(format!(
            "graph spec must look like family:n, got {spec:?}"
        ))
    })?;
    let n: usize = num.parse().map_err(|_| {
        DevoidError::InvalidParameter(format!("bad vertex count in graph spec {spec:?}"))
    })?;
    match family {
        "path" => path(n),
        "cycle" => cycle(n),
        "star" => star(n),
        "complete" => complete(n),
        "tree" => random_tree(n, seed),
        "forest" => random_forest(n, seed),
        "chordal" => random_chordal(n, density, seed),
        other => Err(DevoidError::InvalidParameter(format!(
            "unknown graph family {other:?}; expected path|cycle|star|complete|tree|forest|chordal"
        ))),
    }
}

fn parse_patterns(spec: &str) -> devoid::Result<Vec<PatternGraph>> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(PatternGraph::from_name)
        .collect()
}

fn parse_strategy(spec: &str, g: Option<&Multigraph>) -> devoid::Result<PivotStrategy> {
    let graph_needed = |name: &str| {
        DevoidError::InvalidParameter(format!(
            "the {name} strategy follows the source graph; use it with --graph, not --file"
        ))
    };
    if spec == "greedy" {
        return Ok(PivotStrategy::Greedy);
    }
    if spec == "simplicial" {
        return Ok(PivotStrategy::SimplicialVertex(
            g.ok_or_else(|| graph_needed("simplicial"))?.clone(),
        ));
    }
    if spec == "leaf" {
        return Ok(PivotStrategy::LeafNeighbor(
            g.ok_or_else(|| graph_needed("leaf"))?.clone(),
        ));
    }
    if let Some(file) = spec.strip_prefix("scripted:") {
        let text = fs::read_to_string(file).map_err(DevoidError::Io)?;
        return Ok(PivotStrategy::Scripted(ScriptedPlan::parse(&text)?));
    }
    if let Some(k) = spec.strip_prefix("path:") {
        let k: usize = k.parse().map_err(|_| {
            DevoidError::InvalidParameter(format!("bad block width in strategy {spec:?}"))
        })?;
        return Ok(PivotStrategy::PathLabeling(k));
    }
    if let Some(k) = spec.strip_prefix("cycle:") {
        let k: usize = k.parse().map_err(|_| {
            DevoidError::InvalidParameter(format!("bad block width in strategy {spec:?}"))
        })?;
        return Ok(PivotStrategy::CycleLabeling(k));
    }
    Err(DevoidError::InvalidParameter(format!(
        "unknown strategy {spec:?}; expected greedy|scripted:<file>|path:<k>|cycle:<k>|simplicial|leaf"
    )))
}

// ---------------------------------------------------------------------------
// Reductions
// ---------------------------------------------------------------------------

fn parse_vertex_list(s: &str) -> devoid::Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>().map_err(|_| {
                DevoidError::InvalidParameter(format!("bad vertex {t:?} in vertex list"))
            })
        })
        .collect()
}

fn certificate_text(cert: &ContractibilityCertificate) -> String {
    match cert {
        ContractibilityCertificate::ConeApex(w) => format!("cone apex {w}"),
        ContractibilityCertificate::CollapseSequence(steps) => {
            format!("collapses in {} steps", steps.len())
        }
    }
}

fn run_reduce(
    c: &ComplexRepr,
    op: &str,
    format: Format,
    _budget_faces: usize,
) -> anyhow::Result<String> {
    if op == "fold" {
        let (result, trace) = fold_reduce(c)?;
        return Ok(match format {
            Format::Json => pretty(&serde_json::json!({
                "op": "fold",
                "trace": trace.iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
                "result": complex_value(&result),
            })),
            Format::Table => {
                let mut out = String::new();
                let _ = writeln!(out, "op        fold");
                let _ = writeln!(out, "folds     {}", trace.len());
                for (u, v) in &trace {
                    let _ = writeln!(out, "  witness {u} deletes {v}");
                }
                let _ = writeln!(
                    out,
                    "live      {} -> {}",
                    c.live_vertices().cardinality(),
                    result.live_vertices().cardinality()
                );
                out
            }
        });
    }
    if let Some(pair) = op.strip_prefix("split:") {
        let vs = parse_vertex_list(pair)?;
        let [u, v] = vs[..] else {
            return Err(DevoidError::InvalidParameter(
                "split takes exactly two vertices: split:<u>,<v>".into(),
            )
            .into());
        };
        let (deletion, link) = split_reduce(c, u, v)?;
        return Ok(match format {
            Format::Json => pretty(&serde_json::json!({
                "op": "split",
                "pivot": [u, v],
                "deletion": complex_value(&deletion),
                "link": complex_value(&link),
            })),
            Format::Table => format!(
                "op        split\npivot     ({u},{v})\ndeletion  {} live vertices\nlink      {} live vertices\n",
                deletion.live_vertices().cardinality(),
                link.live_vertices().cardinality()
            ),
        });
    }
    if let Some(list) = op.strip_prefix("complement:") {
        let vs = parse_vertex_list(list)?;
        let links = complementation(c, Face::from_vertices(vs.iter().copied()))?;
        return Ok(match format {
            Format::Json => pretty(&serde_json::json!({
                "op": "complement",
                "set": vs,
                "links": links.iter().map(complex_value).collect::<Vec<_>>(),
            })),
            Format::Table => {
                let mut out = String::new();
                let _ = writeln!(out, "op        complement");
                let _ = writeln!(out, "set       {vs:?}");
                let _ = writeln!(out, "wedge of  {} suspended links", links.len());
                out
            }
        });
    }
    if let Some(rest) = op.strip_prefix("surgery:") {
        let mut parts = rest.split('/');
        let k_list = parse_vertex_list(parts.next().unwrap_or(""))?;
        let k = Face::from_vertices(k_list.iter().copied());
        let cofaces: Vec<Face> = parts
            .map(|p| Ok(Face::from_vertices(parse_vertex_list(p)?)))
            .collect::<devoid::Result<_>>()?;
        let split = nonface_split(c, k, &cofaces)?;
        return Ok(match format {
            Format::Json => pretty(&serde_json::json!({
                "op": "surgery",
                "nonface": k_list,
                "cofaces": cofaces.iter().map(|f| f.to_vec()).collect::<Vec<_>>(),
                "sphere_dim": split.sphere_dim,
                "homology_shift": split.homology_shift(),
                "link": complex_value(&split.link),
                "certificate": certificate_text(&split.certificate),
            })),
            Format::Table => format!(
                "op           surgery\nnonface      {k_list:?}\nsphere dim   {}\nshift        {}\ncertificate  {}\n",
                split.sphere_dim,
                split.homology_shift(),
                certificate_text(&split.certificate)
            ),
        });
    }
    Err(DevoidError::InvalidParameter(format!(
        "unknown reduction {op:?}; expected fold|split:u,v|complement:a,b,...|surgery:k1,k2[/f1,f2,...]"
    ))
    .into())
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

fn build_table(c: &ComplexRepr) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "vertices          {}", c.n_vertices());
    let _ = writeln!(
        out,
        "live vertices     {}",
        c.live_vertices().cardinality()
    );
    let _ = writeln!(out, "minimal non-faces {}", c.min_nonfaces().len());
    match c.f_vector() {
        Ok(f) => {
            let total: usize = f.iter().sum();
            let _ = writeln!(out, "faces             {total}");
            if total > 0 {
                let _ = writeln!(out, "dimension         {}", f.len() as i64 - 2);
            } else {
                let _ = writeln!(out, "dimension         - (void)");
            }
            let _ = writeln!(out, "f-vector          {f:?}");
        }
        Err(e) => {
            let _ = writeln!(out, "faces             not enumerated ({e})");
        }
    }
    out
}

fn morse_table(report: &devoid::MorseReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "strategy      {}", report.strategy);
    let _ = writeln!(out, "tree nodes    {}", report.tree_nodes);
    let _ = writeln!(out, "matched pairs {}", report.matched_pairs);
    let _ = writeln!(out, "critical      {}", report.critical.len());
    for cell in &report.critical {
        let _ = writeln!(out, "  {cell}");
    }
    let _ = writeln!(out, "descriptor    {}", report.interpret());
    out
}

fn homology_table(profile: &devoid::BettiProfile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dim  betti  torsion");
    for (d, b) in &profile.betti {
        let torsion = profile
            .torsion
            .get(d)
            .map(|fs| {
                fs.iter()
                    .map(|f| f.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .unwrap_or_else(|| "-".to_string());
        let _ = writeln!(out, "{d:<4} {b:<6} {torsion}");
    }
    let _ = writeln!(out, "chi (reduced): {}", profile.reduced_euler());
    out
}

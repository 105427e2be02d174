//! Command line interface: squarefree powers, Betti tables, depth profiles,
//! facet-cover certificates, linear quotients and corpus scans.
//!
//! Inputs are file paths (ideal or graph text format) or family shorthands
//! like `whiskered:1,1,1,1`, `path_complement:6`, `complete_bipartite:3,3`.

use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use sqfpow::covers;
use sqfpow::homology::{Budget, HomologyError};
use sqfpow::io;
use sqfpow::linquot;
use sqfpow::profile::{self, DepthMethod, ProfileOptions, ScanEntry};
use sqfpow::verify::{self, CheckContext};
use sqfpow::{betti, FieldSpec, Graph, SqfIdeal};

#[derive(Parser)]
#[command(
    name = "sqfpow",
    version,
    about = "Exact computations with squarefree powers of squarefree monomial ideals"
)]
struct Cli {
    /// Coefficient field: `q` for the rationals or a prime.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Largest ambient variable count accepted by the homology engine.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Emit JSON instead of human-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Restrict the ambient ring to the support of the input ideal.
    #[arg(long, global = true)]
    trim: bool,
    /// Time limit in seconds for ordering searches.
    #[arg(long, global = true)]
    timeout: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the k-th squarefree power of an ideal.
    Power {
        input: String,
        #[arg(short)]
        k: usize,
    },
    /// Graded Betti numbers of S/I by Hochster's formula.
    Betti { input: String },
    /// Depth of S/I.
    Depth { input: String },
    /// Normalized depth profile over all nonzero squarefree powers.
    Profile { input: String },
    /// Well-ordered facet cover certificates for edge-ideal powers.
    Cover {
        graph: String,
        #[arg(short)]
        k: usize,
        /// Use an explicit construction instead of the backtracking search.
        #[arg(long, value_enum)]
        construct: Option<Construction>,
    },
    /// Linear quotients certificate and the induced depth.
    Linquot { input: String },
    /// Profile a corpus and report monotonicity violations. Targets:
    /// `all:<n>` for the exhaustive corpus, family shorthands, or files.
    Scan { targets: Vec<String> },
    /// Run the built-in verification suite.
    VerifyPaper {
        /// Run a single named check.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    /// Split construction for graphs with disconnected complement.
    Disconnected,
    /// Dominating-clique construction.
    Clique,
}

enum CliError {
    Usage(String),
    Failure(String),
    Budget(String),
}

impl CliError {
    fn code(&self) -> ExitCode {
        match self {
            CliError::Failure(_) => ExitCode::from(1),
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Budget(_) => ExitCode::from(3),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failure(m) | CliError::Budget(m) => m,
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn classify_homology_error(e: HomologyError) -> CliError {
    match e {
        HomologyError::BudgetExceeded { .. } | HomologyError::FaceBudgetExceeded { .. } => {
            CliError::Budget(e.to_string())
        }
        other => CliError::Failure(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.code()
        }
    }
}

struct Settings {
    field: FieldSpec,
    budget: Budget,
    json: bool,
    trim: bool,
    timeout: Option<Duration>,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let field: FieldSpec = cli.field.parse().map_err(usage)?;
    let budget = cli
        .budget
        .map(Budget::with_max_ambient)
        .unwrap_or_default();
    let settings = Settings {
        field,
        budget,
        json: cli.json,
        trim: cli.trim,
        timeout: cli.timeout.map(Duration::from_secs),
    };
    match cli.command {
        Command::Power { input, k } => power(&settings, &input, k),
        Command::Betti { input } => betti_cmd(&settings, &input),
        Command::Depth { input } => depth_cmd(&settings, &input),
        Command::Profile { input } => profile_cmd(&settings, &input),
        Command::Cover { graph, k, construct } => cover_cmd(&settings, &graph, k, construct),
        Command::Linquot { input } => linquot_cmd(&settings, &input),
        Command::Scan { targets } => scan_cmd(&settings, &targets),
        Command::VerifyPaper { only } => verify_cmd(&settings, only.as_deref()),
    }
}

/// Load an ideal from a family shorthand (via its edge ideal) or a file.
fn load_ideal(settings: &Settings, arg: &str) -> Result<SqfIdeal, CliError> {
    let ideal = match io::classify_graph_input(arg) {
        io::GraphInput::Family(spec) => spec.build().map_err(usage)?.edge_ideal(),
        io::GraphInput::File(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| usage(format!("cannot read `{path}`: {e}")))?;
            io::parse_ideal(&text).map_err(usage)?
        }
    };
    let support = ideal.support();
    if !ideal.is_zero() && support.len() < ideal.ambient() {
        let unused = support.complement_in(ideal.ambient());
        if settings.trim {
            let (trimmed, kept) = ideal.trim();
            eprintln!(
                "note: trimmed unused variables {unused}; kept original indices {kept:?}"
            );
            return Ok(trimmed);
        }
        eprintln!(
            "warning: variables {unused} do not appear in any generator; each inflates depth by one (use --trim to drop them)"
        );
    }
    Ok(ideal)
}

fn load_graph(arg: &str) -> Result<Graph, CliError> {
    match io::classify_graph_input(arg) {
        io::GraphInput::Family(spec) => spec.build().map_err(usage),
        io::GraphInput::File(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| usage(format!("cannot read `{path}`: {e}")))?;
            io::parse_graph(&text).map_err(usage)
        }
    }
}

fn power(settings: &Settings, input: &str, k: usize) -> Result<(), CliError> {
    if k == 0 {
        return Err(usage("k must be at least 1"));
    }
    let ideal = load_ideal(settings, input)?;
    let power = ideal.squarefree_power(k);
    print!("{}", io::format_ideal(&power));
    Ok(())
}

fn betti_cmd(settings: &Settings, input: &str) -> Result<(), CliError> {
    let ideal = load_ideal(settings, input)?;
    let table = betti::hochster_betti(&ideal, settings.field, &settings.budget)
        .map_err(classify_homology_error)?;
    if settings.json {
        let rows: Vec<serde_json::Value> = table
            .rows()
            .map(|(i, j, v)| serde_json::json!({ "i": i, "j": j, "beta": v }))
            .collect();
        let out = serde_json::json!({
            "rows": rows,
            "projdim": table.projdim(),
            "depth": table.depth(),
            "regularity": table.regularity_quotient(),
            "field": settings.field.to_string(),
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        for (i, j, v) in table.rows() {
            println!("{i} {j} {v}");
        }
        println!("projdim {}", table.projdim());
        println!("depth {}", table.depth());
    }
    Ok(())
}

fn depth_cmd(settings: &Settings, input: &str) -> Result<(), CliError> {
    let ideal = load_ideal(settings, input)?;
    let depth = betti::depth(&ideal, settings.field, &settings.budget)
        .map_err(classify_homology_error)?;
    println!("{depth}");
    Ok(())
}

fn profile_cmd(settings: &Settings, input: &str) -> Result<(), CliError> {
    let ideal = load_ideal(settings, input)?;
    let opts = ProfileOptions {
        method: DepthMethod::Auto,
        budget: settings.budget,
        lq_deadline: settings.timeout.or(ProfileOptions::default().lq_deadline),
    };
    let profile = profile::profile(&ideal, input, settings.field, &opts)
        .map_err(|e| match e {
            profile::ProfileError::Homology(h) => classify_homology_error(h),
            other => CliError::Failure(other.to_string()),
        })?;
    if settings.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&profile).expect("serializable")
        );
    } else {
        println!("# {}", profile.descriptor);
        println!("k d_k depth g");
        for row in &profile.rows {
            println!(
                "{} {} {} {}",
                row.k, row.min_degree, row.depth, row.normalized
            );
        }
    }
    Ok(())
}

fn cover_cmd(
    _settings: &Settings,
    graph_arg: &str,
    k: usize,
    construct: Option<Construction>,
) -> Result<(), CliError> {
    let graph = load_graph(graph_arg)?;
    let cover = match construct {
        Some(Construction::Disconnected) => covers::construct_cover_disconnected(&graph, k)
            .map_err(|e| CliError::Failure(e.to_string()))?,
        Some(Construction::Clique) => covers::construct_cover_dominating_clique(&graph, k)
            .map_err(|e| CliError::Failure(e.to_string()))?,
        None => {
            let nu = graph.matching_number();
            if k == 0 || k > nu {
                return Err(usage(format!("k={k} out of range 1..={nu}")));
            }
            let power = graph.edge_ideal().squarefree_power(k);
            let host = covers::facet_complex(&power)
                .map_err(|e| CliError::Failure(e.to_string()))?;
            let cardinality = graph.n() - 2 * k + 1;
            covers::find_well_ordered_cover(&host, cardinality).ok_or_else(|| {
                CliError::Failure(format!(
                    "no well-ordered facet cover of cardinality {cardinality}"
                ))
            })?
        }
    };
    let transcript = covers::well_ordered_transcript(&cover)
        .map_err(|reason| CliError::Failure(format!("cover failed verification: {reason}")))?;
    let out = serde_json::json!({
        "sequence": cover.sequence,
        "transcript": transcript,
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    Ok(())
}

fn linquot_cmd(settings: &Settings, input: &str) -> Result<(), CliError> {
    let ideal = load_ideal(settings, input)?;
    let deadline = settings.timeout.map(|d| std::time::Instant::now() + d);
    let cert = linquot::find_linear_quotients_within(&ideal, deadline).map_err(|e| match e {
        linquot::LinQuotError::Timeout => CliError::Budget(e.to_string()),
        other => CliError::Failure(other.to_string()),
    })?;
    match cert {
        None => {
            if settings.json {
                println!("{}", serde_json::json!({ "linear_quotients": false }));
            } else {
                println!("no linear quotients ordering exists");
            }
            Ok(())
        }
        Some(cert) => {
            let depth = cert.depth().ok();
            if settings.json {
                let out = serde_json::json!({
                    "linear_quotients": true,
                    "ordering": cert.ordering,
                    "colon_counts": cert.colon_counts,
                    "depth": depth,
                });
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out).expect("serializable")
                );
            } else {
                println!("ordering {:?}", cert.ordering);
                println!("colon counts {:?}", cert.colon_counts);
                match depth {
                    Some(d) => println!("depth {d}"),
                    None => println!("depth: single generator, use `depth`"),
                }
            }
            Ok(())
        }
    }
}

fn scan_cmd(settings: &Settings, targets: &[String]) -> Result<(), CliError> {
    if targets.is_empty() {
        return Err(usage("scan requires at least one target"));
    }
    let mut entries: Vec<ScanEntry> = Vec::new();
    for target in targets {
        if let Some(rest) = target.strip_prefix("all:") {
            let n: usize = rest
                .parse()
                .map_err(|_| usage(format!("bad corpus size in `{target}`")))?;
            if n > 7 {
                return Err(usage("exhaustive corpora are limited to 7 vertices"));
            }
            for (idx, graph) in profile::graphs_without_isolated(n, true).into_iter().enumerate() {
                entries.push(ScanEntry {
                    id: format!("all:{n}#{idx}"),
                    ideal: graph.edge_ideal(),
                });
            }
        } else {
            match io::classify_graph_input(target) {
                io::GraphInput::Family(spec) => {
                    let graph = spec.build().map_err(usage)?;
                    entries.push(ScanEntry { id: target.clone(), ideal: graph.edge_ideal() });
                }
                io::GraphInput::File(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| usage(format!("cannot read `{path}`: {e}")))?;
                    let ideal = io::parse_ideal(&text).map_err(usage)?;
                    entries.push(ScanEntry { id: target.clone(), ideal });
                }
            }
        }
    }
    let opts = ProfileOptions {
        method: DepthMethod::Auto,
        budget: settings.budget,
        lq_deadline: settings.timeout.or(ProfileOptions::default().lq_deadline),
    };
    let report = profile::scan(&entries, settings.field, &opts);
    if settings.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
    } else {
        println!(
            "scanned {} instances in {} ms",
            report.instances, report.elapsed_ms
        );
        println!("tail patterns: {}", report.tail_patterns.len());
        for v in &report.violations {
            println!("FINDING: {} has non-monotone profile {:?}", v.id, v.normalized);
            println!("replay:\n{}", v.replay);
        }
        for (id, err) in &report.errors {
            println!("error: {id}: {err}");
        }
        if report.violations.is_empty() && report.errors.is_empty() {
            println!("no monotonicity violations");
        }
    }
    if report.errors.iter().any(|(_, e)| e.contains("budget")) {
        return Err(CliError::Budget("some instances exceeded the budget".into()));
    }
    if !report.errors.is_empty() {
        return Err(CliError::Failure("some instances failed".into()));
    }
    Ok(())
}

fn verify_cmd(settings: &Settings, only: Option<&str>) -> Result<(), CliError> {
    let ctx = CheckContext { field: settings.field, budget: settings.budget };
    let reports = match only {
        Some(name) => {
            let report = verify::run_check(name, &ctx)
                .ok_or_else(|| usage(format!("unknown check `{name}`")))?;
            vec![report]
        }
        None => verify::run_all(&ctx),
    };
    let mut failed = false;
    for report in &reports {
        let status = if report.passed {
            if report.flagged {
                "PASS (flagged)"
            } else {
                "PASS"
            }
        } else {
            failed = true;
            "FAIL"
        };
        println!("[{status}] {} ({:.2?})", report.name, report.elapsed);
        for note in &report.notes {
            println!("    note: {note}");
        }
        for failure in &report.failures {
            println!("    failure: {failure}");
        }
    }
    if failed {
        Err(CliError::Failure("some checks failed".into()))
    } else {
        Ok(())
    }
}

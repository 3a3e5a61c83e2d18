use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dpd_core::corpus;
use dpd_core::cover::Cover;
use dpd_core::cycles::enumerate_cycles;
use dpd_core::discharge::{audit, RuleSet};
use dpd_core::dp::{dp_chromatic_number, DEFAULT_BUDGET};
use dpd_core::io::{parse_cover, read_plane_graph, GraphDocument};
use dpd_core::plane::PlaneGraph;
use dpd_core::solver::{find_m_coloring_limited, SolverError};
use dpd_core::structure::{
    check_hypotheses, degeneracy_ordering, triangle_distance, triangles, Theorem,
};

/// DP-colouring and discharging audits for plane graphs.
#[derive(Parser)]
#[command(name = "dpd", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sizes, histograms, short-cycle census and triangle distance.
    Analyze { path: PathBuf },
    /// Applies a rule set and reports charges.
    Discharge {
        path: PathBuf,
        #[arg(long, default_value = "A")]
        ruleset: RuleSet,
        /// Print every transfer.
        #[arg(long)]
        log: bool,
    },
    /// Searches for an M-colouring of one cover.
    DpSolve {
        path: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = CoverKind::Identity)]
        cover: CoverKind,
        #[arg(long, required_if_eq("cover", "file"))]
        cover_file: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Search-node budget; defaults to $DPD_BUDGET.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Smallest k at most `max_k` with the graph DP-k-colourable.
    DpChromatic {
        path: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Checks the hypotheses of theorem A, B or C.
    Check {
        path: PathBuf,
        #[arg(long)]
        theorem: Theorem,
    },
    /// Degeneracy with its peeling order.
    Degeneracy { path: PathBuf },
    /// Writes the built-in corpus as graph documents.
    Corpus { dir: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum CoverKind {
    Identity,
    Random,
    File,
}

const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Output text plus exit code.
type Outcome = (String, u8);

fn load(path: &Path) -> Result<PlaneGraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    read_plane_graph(&text)
        .map(|(_, g)| g)
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn budget(flag: Option<u64>) -> Result<u64, String> {
    match (flag, std::env::var("DPD_BUDGET")) {
        (Some(b), _) => Ok(b),
        (None, Ok(v)) => v
            .trim()
            .parse()
            .map_err(|_| format!("DPD_BUDGET is not a number: '{v}'")),
        (None, Err(_)) => Ok(DEFAULT_BUDGET),
    }
}

fn histogram(values: impl Iterator<Item = usize>) -> String {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for v in values {
        *counts.entry(v).or_default() += 1;
    }
    counts
        .iter()
        .map(|(k, n)| format!("{k}:{n}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn analyze(g: &PlaneGraph) -> Result<Outcome, String> {
    let graph = g.graph();
    let mut out = String::new();
    writeln!(
        out,
        "V={} E={} F={}",
        g.vertex_count(),
        g.edge_count(),
        g.face_count()
    )
    .unwrap();
    writeln!(
        out,
        "degrees: {}",
        histogram(graph.vertices().map(|v| graph.degree(v)))
    )
    .unwrap();
    writeln!(
        out,
        "face lengths: {}",
        histogram(g.faces().iter().map(|f| f.len()))
    )
    .unwrap();
    let cycles = enumerate_cycles(graph, 10).map_err(|e| e.to_string())?;
    for len in 3..=10 {
        let n = cycles.iter().filter(|c| c.len() == len).count();
        writeln!(out, "{len}-cycles: {n}").unwrap();
    }
    let dist = triangle_distance(graph).map_or("none".to_string(), |d| d.to_string());
    writeln!(out, "triangles: {}; dist∇: {dist}", triangles(graph).len()).unwrap();
    Ok((out, 0))
}

fn discharge(g: &PlaneGraph, ruleset: RuleSet, log: bool) -> Result<Outcome, String> {
    let theorem = match ruleset {
        RuleSet::A => Theorem::A,
        RuleSet::B => Theorem::B,
        RuleSet::C => Theorem::C,
    };
    let report = audit(g, theorem).map_err(|e| e.to_string())?;
    let mut out = report.to_string();
    let failures = report.failures();
    writeln!(out, "VERDICT").unwrap();
    if failures.is_empty() {
        writeln!(out, "no minimality property fails").unwrap();
    }
    for f in failures {
        writeln!(out, "{f}").unwrap();
    }
    if log {
        writeln!(out, "TRANSFERS").unwrap();
        for t in report.outcome.ledger.transfers() {
            writeln!(out, "{t}").unwrap();
        }
    }
    Ok((out, 0))
}

fn dp_solve(
    g: &PlaneGraph,
    k: usize,
    kind: CoverKind,
    file: Option<&Path>,
    seed: u64,
    limit: u64,
) -> Result<Outcome, String> {
    let graph = g.graph();
    let cover = match kind {
        CoverKind::Identity => Cover::identity(graph, k),
        CoverKind::Random => Cover::random_permutation(graph, k, seed),
        CoverKind::File => {
            let path = file.ok_or("--cover file needs --cover-file")?;
            let text =
                std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            return solve(
                parse_cover(&text, graph).map_err(|e| format!("{}: {e}", path.display()))?,
                limit,
            );
        }
    }
    .map_err(|e| e.to_string())?;
    solve(cover, limit)
}

fn solve(cover: Cover, limit: u64) -> Result<Outcome, String> {
    match find_m_coloring_limited(&cover, limit) {
        Ok(r) => match r.transversal {
            Some(t) => Ok((format!("found\n{t}\nnodes {}\n", r.stats.nodes), 0)),
            None => Ok((
                format!("exhausted\nnodes {}\n", r.stats.nodes),
                EXIT_NEGATIVE,
            )),
        },
        Err(e @ SolverError::BudgetExceeded { .. }) => {
            Ok((format!("budget exceeded: {e}\n"), EXIT_BUDGET))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn dp_chromatic(g: &PlaneGraph, max_k: usize, limit: u64) -> Result<Outcome, String> {
    match dp_chromatic_number(g.graph(), max_k, limit) {
        Ok(k) => Ok((format!("{k}\n"), 0)),
        Err(e @ SolverError::NotWithinMax(_)) => Ok((format!("{e}\n"), EXIT_NEGATIVE)),
        Err(e @ SolverError::BudgetExceeded { .. }) => {
            Ok((format!("budget exceeded: {e}\n"), EXIT_BUDGET))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn check(g: &PlaneGraph, theorem: Theorem) -> Result<Outcome, String> {
    let report = check_hypotheses(g.graph(), theorem);
    let mut out = format!(
        "theorem {theorem}: {}\n",
        if report.satisfied {
            "satisfied"
        } else {
            "violated"
        }
    );
    for w in &report.witnesses {
        writeln!(out, "{w}").unwrap();
    }
    Ok((out, if report.satisfied { 0 } else { EXIT_NEGATIVE }))
}

fn degeneracy(g: &PlaneGraph) -> Result<Outcome, String> {
    let cert = degeneracy_ordering(g.graph());
    let order: Vec<String> = cert.peel_order.iter().map(|v| v.to_string()).collect();
    Ok((
        format!("{}\npeel {}\n", cert.degeneracy, order.join(" ")),
        0,
    ))
}

fn write_corpus(dir: &Path) -> Result<Outcome, String> {
    std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let graphs = corpus::corpus();
    for ng in &graphs {
        let path = dir.join(format!("{}.json", ng.name));
        let doc = GraphDocument::from_plane_graph(Some(&ng.name), &ng.graph);
        std::fs::write(&path, doc.format()).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok((
        format!("wrote {} graphs to {}\n", graphs.len(), dir.display()),
        0,
    ))
}

fn run(cli: Cli) -> Result<Outcome, String> {
    match cli.command {
        Command::Analyze { path } => analyze(&load(&path)?),
        Command::Discharge { path, ruleset, log } => discharge(&load(&path)?, ruleset, log),
        Command::DpSolve {
            path,
            k,
            cover,
            cover_file,
            seed,
            budget: b,
        } => dp_solve(
            &load(&path)?,
            k,
            cover,
            cover_file.as_deref(),
            seed,
            budget(b)?,
        ),
        Command::DpChromatic {
            path,
            max_k,
            budget: b,
        } => dp_chromatic(&load(&path)?, max_k, budget(b)?),
        Command::Check { path, theorem } => check(&load(&path)?, theorem),
        Command::Degeneracy { path } => degeneracy(&load(&path)?),
        Command::Corpus { dir } => write_corpus(&dir),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

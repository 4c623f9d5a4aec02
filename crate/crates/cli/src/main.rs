//! Command-line front end: solving, verification, the 3DM reduction, the
//! exhaustive oracle and seeded instance generation over the line-based
//! file formats.
//!
//! Exit codes: 0 success or YES, 1 verified NO or failed verification,
//! 2 input error, 3 oracle budget exhaustion.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use vfree_core::extended::{
    extended_matching_covering_max_quasidegree, perfect_extended_matching,
    verify_extended_matching, ExtendedMatching,
};
use vfree_core::gen::{gen_hypergraph_regular, gen_liang, gen_threedm, gen_threedm_no};
use vfree_core::io::{
    read_bipartite, read_certificate, read_hypergraph, read_required, read_threedm,
    write_bipartite, write_edge_certificate, write_extended_certificate, write_hypergraph,
    write_liang_certificate, write_threedm,
};
use vfree_core::liang::{solve_liang, verify_liang_parts};
use vfree_core::oracle::{oracle_vfree_cover, OracleBudget, OracleError};
use vfree_core::reduce3dm::reduce_3dm;
use vfree_core::{BipartiteGraph, TwoMatching};

#[derive(Parser)]
#[command(
    name = "vfree",
    version,
    about = "V-free 2-matchings, extended matchings in hypergraphs, and the 3DM reduction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Suppress progress messages on stderr.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Cover every degree-3 T-node with a matching plus node-disjoint S-links.
    Solve {
        /// Bipartite instance file.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Certificate destination; stdout when omitted.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Compute an extended matching of a hypergraph.
    Extmatch {
        /// Hypergraph instance file.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Certificate destination; stdout when omitted.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Demand a perfect extended matching (input must be oddly uniform
        /// and quasi-regular) instead of max-quasi-degree coverage.
        #[arg(long)]
        perfect: bool,
    },
    /// Build the bipartite gadget graph of a 3-dimensional matching instance.
    Reduce3dm {
        /// 3DM instance file.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Bipartite output file; role annotations go to `<FILE>.roles`.
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// Exhaustively decide V-free coverability, emitting a witness on YES.
    Oracle {
        /// Bipartite instance file.
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Witness destination; stdout when omitted.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Required T-nodes: an index file, `all`, or `deg3` for the
        /// degree-3 T-nodes of the instance.
        #[arg(long, value_name = "FILE|all|deg3", default_value = "all")]
        required: String,
        /// Edge-count cap for the search.
        #[arg(long, value_name = "N")]
        budget_edges: Option<usize>,
        /// Node-count cap for the search.
        #[arg(long, value_name = "N")]
        budget_nodes: Option<usize>,
        /// Wall-clock cap in seconds.
        #[arg(long, value_name = "SECONDS")]
        time_limit: Option<u64>,
    },
    /// Check a certificate against an instance and report violations.
    Verify {
        /// Instance file (bipartite or hypergraph).
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Certificate file.
        #[arg(long, value_name = "FILE")]
        cert: PathBuf,
        /// Nodes that must be covered: an index file, `all`, or `deg3`
        /// (bipartite instances only).
        #[arg(long, value_name = "FILE|all|deg3", default_value = "all")]
        required: String,
    },
    /// Generate a random instance file.
    Gen {
        /// Instance family.
        #[arg(long, value_enum)]
        kind: Kind,
        /// Destination; stdout when omitted.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// S-side size (liang).
        #[arg(long, default_value_t = 10, value_name = "N")]
        s_count: usize,
        /// T-side size (liang).
        #[arg(long, default_value_t = 10, value_name = "N")]
        t_count: usize,
        /// Node count (hypergraph).
        #[arg(long, default_value_t = 12, value_name = "N")]
        nodes: usize,
        /// Hyperedge cardinality (hypergraph).
        #[arg(long, default_value_t = 3, value_name = "K")]
        arity: usize,
        /// Per-node degree (hypergraph).
        #[arg(long, default_value_t = 4, value_name = "R")]
        degree: usize,
        /// Part size (3dm families).
        #[arg(long, default_value_t = 2, value_name = "N")]
        part: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Liang,
    Hypergraph,
    #[value(name = "3dm")]
    Threedm,
    #[value(name = "3dm-no")]
    ThreedmNo,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let quiet = cli.quiet;
    match run(cli.command, quiet) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_file(p: &Path) -> Result<String, String> {
    fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))
}

fn emit(out: Option<&Path>, content: &str) -> Result<(), String> {
    match out {
        Some(p) => fs::write(p, content).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn parse_required(spec: &str, all: usize) -> Result<BTreeSet<usize>, String> {
    if spec == "all" {
        return Ok((0..all).collect());
    }
    if spec == "deg3" {
        return Err("`deg3` only applies to bipartite instances".into());
    }
    let text = read_file(Path::new(spec))?;
    read_required(&text).map_err(|e| format!("{spec}: {e}"))
}

fn required_t(spec: &str, g: &BipartiteGraph) -> Result<BTreeSet<usize>, String> {
    if spec == "deg3" {
        return Ok((0..g.t_count()).filter(|&t| g.adj_t(t).len() == 3).collect());
    }
    parse_required(spec, g.t_count())
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

fn info(quiet: bool, msg: String) {
    if !quiet {
        eprintln!("{msg}");
    }
}

fn run(command: Command, quiet: bool) -> Result<ExitCode, String> {
    match command {
        Command::Solve { input, out } => {
            let g = read_bipartite(&read_file(&input)?).map_err(|e| e.to_string())?;
            let sol = solve_liang(&g).map_err(|e| e.to_string())?;
            emit(out.as_deref(), &write_liang_certificate(sol.m.edges(), sol.f.links()))?;
            info(
                quiet,
                format!(
                    "covered {} with {} and {}",
                    plural(sol.covered.len(), "T-node"),
                    plural(sol.m.len(), "matching edge"),
                    plural(sol.f.len(), "link")
                ),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Extmatch { input, out, perfect } => {
            let h = read_hypergraph(&read_file(&input)?).map_err(|e| e.to_string())?;
            let em = if perfect {
                perfect_extended_matching(&h)
            } else {
                extended_matching_covering_max_quasidegree(&h)
            }
            .map_err(|e| e.to_string())?;
            emit(out.as_deref(), &write_extended_certificate(&em))?;
            info(
                quiet,
                format!(
                    "{} and {}",
                    plural(em.hyperedges.len(), "hyperedge"),
                    plural(em.pairs.len(), "pair")
                ),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce3dm { input, out } => {
            let inst = read_threedm(&read_file(&input)?).map_err(|e| e.to_string())?;
            let (g, gm) = reduce_3dm(&inst);
            emit(Some(&out), &write_bipartite(&g))?;
            let mut roles = out.clone().into_os_string();
            roles.push(".roles");
            let roles = PathBuf::from(roles);
            emit(Some(&roles), &gm.sidecar(&g))?;
            info(
                quiet,
                format!(
                    "reduced to {} + {} nodes, {} edges; roles in {}",
                    g.s_count(),
                    g.t_count(),
                    g.edge_count(),
                    roles.display()
                ),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { input, out, required, budget_edges, budget_nodes, time_limit } => {
            let g = read_bipartite(&read_file(&input)?).map_err(|e| e.to_string())?;
            let required = required_t(&required, &g)?;
            let mut budget = OracleBudget::default();
            if let Some(n) = budget_edges {
                budget.max_edges = n;
            }
            if let Some(n) = budget_nodes {
                budget.max_nodes = n;
            }
            if let Some(secs) = time_limit {
                budget.time_limit = Duration::from_secs(secs);
            }
            match oracle_vfree_cover(&g, &required, &budget) {
                Ok(Some(witness)) => {
                    emit(out.as_deref(), &write_edge_certificate(witness.edges()))?;
                    info(quiet, format!("YES: witness with {}", plural(witness.len(), "edge")));
                    Ok(ExitCode::SUCCESS)
                }
                Ok(None) => {
                    info(quiet, "NO: no V-free 2-matching covers the required nodes".into());
                    Ok(ExitCode::from(1))
                }
                Err(OracleError::BudgetExceeded(msg)) => {
                    eprintln!("budget exceeded: {msg}");
                    Ok(ExitCode::from(3))
                }
            }
        }
        Command::Verify { input, cert, required } => {
            let instance = read_file(&input)?;
            let cert = read_certificate(&read_file(&cert)?).map_err(|e| e.to_string())?;
            let header = instance
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty())
                .unwrap_or("");
            let violations = if header.starts_with("b ") {
                let g = read_bipartite(&instance).map_err(|e| e.to_string())?;
                let required = required_t(&required, &g)?;
                if cert.is_extended() {
                    return Err("extended-matching certificate against a bipartite instance".into());
                }
                if cert.links.is_empty() {
                    verify_cover(&g, &cert.edges, &required)
                } else {
                    let links: Vec<(usize, usize, usize)> =
                        cert.links.iter().map(|l| (l.u, l.center, l.w)).collect();
                    let report = verify_liang_parts(&g, &cert.edges, &links, &required);
                    if report.is_ok() {
                        info(
                            quiet,
                            format!(
                                "covers {} required and {} incidental T-nodes",
                                report.required_covered.len(),
                                report.incidental_covered.len()
                            ),
                        );
                    }
                    report.violations
                }
            } else if header.starts_with("h ") {
                let h = read_hypergraph(&instance).map_err(|e| e.to_string())?;
                if !cert.edges.is_empty() || !cert.links.is_empty() {
                    return Err("edge certificate against a hypergraph instance".into());
                }
                let required = parse_required(&required, h.node_count())?;
                let em = ExtendedMatching { hyperedges: cert.hyperedges, pairs: cert.pairs };
                verify_extended_matching(&h, &em, &required)
            } else {
                return Err("verify expects a bipartite or hypergraph instance".into());
            };
            if violations.is_empty() {
                println!("OK");
                Ok(ExitCode::SUCCESS)
            } else {
                for v in &violations {
                    println!("violation: {v}");
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Gen { kind, out, seed, s_count, t_count, nodes, arity, degree, part } => {
            let content = match kind {
                Kind::Liang => write_bipartite(&gen_liang(s_count, t_count, seed)),
                Kind::Hypergraph => write_hypergraph(
                    &gen_hypergraph_regular(nodes, arity, degree, seed)
                        .map_err(|e| e.to_string())?,
                ),
                Kind::Threedm => write_threedm(&gen_threedm(part, seed)),
                Kind::ThreedmNo => {
                    write_threedm(&gen_threedm_no(part, seed).map_err(|e| e.to_string())?)
                }
            };
            emit(out.as_deref(), &content)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Checks an edge set as a V-free 2-matching covering `required`.
fn verify_cover(g: &BipartiteGraph, edges: &[(usize, usize)], required: &BTreeSet<usize>) -> Vec<String> {
    let mut violations = Vec::new();
    let mut seen = BTreeSet::new();
    let mut ok_edges = Vec::new();
    for &(s, t) in edges {
        if !g.has_edge(s, t) {
            violations.push(format!("(s{s}, t{t}) is not an edge of the graph"));
        } else if !seen.insert((s, t)) {
            violations.push(format!("duplicate edge (s{s}, t{t})"));
        } else {
            ok_edges.push((s, t));
        }
    }
    if !violations.is_empty() {
        return violations;
    }
    let tm = match TwoMatching::new(g, ok_edges) {
        Ok(tm) => tm,
        Err(e) => return vec![e.to_string()],
    };
    if let Some(v) = tm.v_path(g) {
        violations.push(format!("V-path component centred at {}", v.nodes[1]));
    }
    let covered = tm.covered_t();
    for &t in required {
        if !covered.contains(&t) {
            violations.push(format!("required node t{t} not covered"));
        }
    }
    violations
}

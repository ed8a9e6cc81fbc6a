//! Command-line front end: flow existence and counting, criticality
//! testing, whole-corpus censuses, family construction, genus, density
//! bounds, and plane duality checks.
//!
//! Exit codes: 0 when the run succeeds and every check passes, 2 when a
//! bound violation, duality disagreement, or cross-check failure is found,
//! 1 on input or usage errors.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use flowcrit::graph::{decode_sparse6, encode_sparse6, parse_dimacs, parse_graph_auto};
use flowcrit::{
    catalog_json, catalog_sparse6, census_csv, census_json, count_nz_flows, critical_boundaries,
    density_functionals, dual_4ore_catalog, euler_genus_with_budget, flower_snark, has_nz_flow,
    is_flow_critical, k3n_plus, primal_4ore_catalog, run_census, BorderedGraph, BoundStatus,
    BoundaryMode, CensusError, CensusJob, CensusSource, CriticalityMode, CriticalityVerdict,
    GenusError, Group, GroupElement, Multigraph, PlaneGraph, RotationSystem,
    DEFAULT_GENUS_BUDGET,
};

const EXIT_VIOLATION: u8 = 2;

#[derive(Parser)]
#[command(
    name = "flowcrit",
    version,
    about = "Group-valued nowhere-zero flows: existence, criticality, censuses, \
             extremal families, genus, and density bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a bordered graph has a nowhere-zero flow (or count them)
    Flow {
        /// Graph file (graph6/sparse6/DIMACS/JSON) or a one-line graph6/sparse6 literal
        #[arg(long)]
        graph: String,
        /// Group as comma-separated cyclic factor orders, e.g. "3" or "2,2"
        #[arg(long)]
        group: String,
        /// Boundary: residues per vertex, vertices comma-separated ("1,1,1,0");
        /// for product groups, residues within a vertex comma-separated and
        /// vertices semicolon-separated ("1,0;0,1;1,1"). Defaults to zero.
        #[arg(long)]
        beta: Option<String>,
        /// Print the number of nowhere-zero flows instead of a witness
        #[arg(long)]
        count: bool,
    },
    /// Test flow-criticality under the zero boundary (or sweep all boundaries)
    Critical {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Fast)]
        mode: ModeArg,
        /// Enumerate all boundaries (up to symmetry) that make the graph critical
        #[arg(long)]
        all_boundaries: bool,
    },
    /// Sweep all small connected graphs (or a file of graphs) and check every bound
    Census {
        /// Generate all connected simple graphs on up to this many vertices
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        n: Option<usize>,
        /// Read graphs from a file instead, one graph6/sparse6 line each
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        group: String,
        /// Sweep every boundary per graph instead of only the zero boundary
        #[arg(long)]
        all_boundaries: bool,
        /// Compute exact genus per graph (enables the genus-dependent bound)
        #[arg(long)]
        genus: bool,
        /// Re-verify every k-th fast verdict with the brute oracle
        #[arg(long, value_name = "K")]
        cross_check: Option<usize>,
        /// Directory for census.json and census.csv
        #[arg(long)]
        out: PathBuf,
    },
    /// Emit a member (or catalog) of the built-in extremal families
    Construct {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// k for flower, n for k3nplus, max vertex count for the catalogs
        #[arg(long)]
        param: usize,
        /// Also write the output into this directory
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the Euler genus of a graph exactly
    Genus {
        #[arg(long)]
        graph: String,
        /// Face-tracing step budget for the embedding search
        #[arg(long, alias = "genus-budget", default_value_t = DEFAULT_GENUS_BUDGET)]
        budget: u64,
    },
    /// Report density functionals and edge-bound checks for a graph
    Bounds {
        #[arg(long)]
        graph: String,
        /// Euler genus, if known, for the genus-dependent bound
        #[arg(long)]
        genus: Option<usize>,
    },
    /// Check 3-colorability of a stored plane graph against flows of its dual
    Duality {
        /// JSON file: {"sparse6"| "n"+"edges", "rotations"} or an array of such objects
        #[arg(long)]
        plane_graph: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Fast,
    Brute,
}

impl From<ModeArg> for CriticalityMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Fast => CriticalityMode::Fast,
            ModeArg::Brute => CriticalityMode::Brute,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "dual4ore")]
    Dual4Ore,
    #[value(name = "4ore")]
    FourOre,
    #[value(name = "k3nplus")]
    K3nPlus,
    #[value(name = "flower")]
    Flower,
}

fn main() -> ExitCode {
    // exit 2 is reserved for genuine check violations, so usage errors
    // take 1 instead of clap's default 2
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Flow {
            graph,
            group,
            beta,
            count,
        } => cmd_flow(&graph, &group, beta.as_deref(), count),
        Command::Critical {
            graph,
            group,
            mode,
            all_boundaries,
        } => cmd_critical(&graph, &group, mode, all_boundaries),
        Command::Census {
            n,
            input,
            group,
            all_boundaries,
            genus,
            cross_check,
            out,
        } => cmd_census(n, input.as_deref(), &group, all_boundaries, genus, cross_check, &out),
        Command::Construct { family, param, out } => cmd_construct(family, param, out.as_deref()),
        Command::Genus { graph, budget } => cmd_genus(&graph, budget),
        Command::Bounds { graph, genus } => cmd_bounds(&graph, genus),
        Command::Duality { plane_graph } => cmd_duality(&plane_graph),
    }
}

/// Loads a graph from a file path or, failing that, treats the argument as
/// a one-line graph literal.
fn load_graph(spec: &str) -> Result<Multigraph> {
    if Path::new(spec).is_file() {
        let text = fs::read_to_string(spec)
            .with_context(|| format!("reading graph file {spec}"))?;
        return parse_graph_text(&text)
            .with_context(|| format!("parsing graph file {spec}"));
    }
    parse_graph_auto(spec)
        .with_context(|| format!("parsing graph literal {spec:?} (and no such file exists)"))
}

fn parse_graph_text(text: &str) -> Result<Multigraph> {
    if text.lines().any(|l| {
        let l = l.trim_start();
        l.starts_with("p ") || l.starts_with("p\t")
    }) {
        return Ok(parse_dimacs(text)?);
    }
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| anyhow!("file contains no graph"))?;
    Ok(parse_graph_auto(line)?)
}

fn parse_group(spec: &str) -> Result<Group> {
    Group::from_str(spec).with_context(|| format!("parsing group spec {spec:?}"))
}

/// Parses a boundary in the CLI spelling: one residue list per vertex,
/// vertices separated by commas for cyclic groups and by semicolons for
/// product groups. Residues are reduced modulo their factor order.
fn parse_beta(group: &Group, spec: &str, n: usize) -> Result<Vec<GroupElement>> {
    let orders = group.factor_orders();
    let vertex_specs: Vec<&str> = if orders.len() == 1 {
        spec.split(',').collect()
    } else {
        spec.split(';').collect()
    };
    if vertex_specs.len() != n {
        bail!(
            "boundary lists {} vertices but the graph has {n}",
            vertex_specs.len()
        );
    }
    let mut beta = Vec::with_capacity(n);
    for (v, vs) in vertex_specs.iter().enumerate() {
        let parts: Vec<&str> = vs.split(',').map(str::trim).collect();
        if parts.len() != orders.len() {
            bail!(
                "vertex {v} lists {} residues but the group has rank {}",
                parts.len(),
                orders.len()
            );
        }
        let mut residues = Vec::with_capacity(orders.len());
        for (part, &order) in parts.iter().zip(orders) {
            let r: u16 = part
                .parse()
                .with_context(|| format!("residue {part:?} at vertex {v}"))?;
            residues.push(r % order);
        }
        beta.push(group.element(&residues));
    }
    Ok(beta)
}

/// Spells a boundary back in the syntax `parse_beta` accepts.
fn beta_string(group: &Group, beta: &[GroupElement]) -> String {
    let sep = if group.rank() == 1 { "," } else { ";" };
    beta.iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn cmd_flow(graph: &str, group: &str, beta: Option<&str>, count: bool) -> Result<u8> {
    let g = load_graph(graph)?;
    let group = parse_group(group)?;
    let beta = match beta {
        Some(s) => parse_beta(&group, s, g.n())?,
        None => vec![group.zero(); g.n()],
    };
    let bg = BorderedGraph::new(g.clone(), group, beta)
        .map_err(|e| anyhow!("invalid bordered graph: {e}"))?;
    if count {
        println!("{}", count_nz_flows(&bg));
        return Ok(0);
    }
    match has_nz_flow(&bg) {
        Some(flow) => {
            println!("flow: yes");
            for (eid, val) in flow.values() {
                let e = &g.edges()[*eid];
                println!("  edge {eid} ({} -> {}): {val}", e.u, e.v);
            }
        }
        None => println!("flow: no"),
    }
    Ok(0)
}

fn cmd_critical(graph: &str, group: &str, mode: ModeArg, all_boundaries: bool) -> Result<u8> {
    let g = load_graph(graph)?;
    let group = parse_group(group)?;
    if all_boundaries {
        let boundaries = critical_boundaries(&g, &group, true)
            .map_err(|e| anyhow!("boundary sweep failed: {e}"))?;
        println!(
            "critical boundaries (up to automorphism and negation): {}",
            boundaries.len()
        );
        for beta in &boundaries {
            println!("  {}", beta_string(&group, beta));
        }
        return Ok(0);
    }
    let bg = BorderedGraph::with_zero_boundary(g, group);
    let verdict =
        is_flow_critical(&bg, mode.into()).map_err(|e| anyhow!("criticality test failed: {e}"))?;
    match verdict {
        CriticalityVerdict::Critical => println!("critical: yes"),
        CriticalityVerdict::HasFlow(_) => {
            println!("critical: no (the graph already has a nowhere-zero flow)")
        }
        CriticalityVerdict::ContractionWithoutFlow(p) => {
            println!(
                "critical: no (a proper contraction also has no flow; parts {:?})",
                p.parts()
            )
        }
    }
    Ok(0)
}

fn cmd_census(
    max_n: Option<usize>,
    input: Option<&Path>,
    group: &str,
    all_boundaries: bool,
    genus: bool,
    cross_check: Option<usize>,
    out: &Path,
) -> Result<u8> {
    let source = match (max_n, input) {
        (Some(n), None) => CensusSource::Generate { max_n: n },
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let mut graphs = Vec::new();
            for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
                graphs.push(
                    parse_graph_auto(line).with_context(|| format!("parsing line {line:?}"))?,
                );
            }
            CensusSource::Explicit(graphs)
        }
        _ => bail!("give exactly one of --n and --input"),
    };
    let job = CensusJob {
        source,
        group: parse_group(group)?,
        mode: if all_boundaries {
            BoundaryMode::AllBoundaries
        } else {
            BoundaryMode::ZeroBoundary
        },
        compute_genus: genus,
        brute_cross_check_interval: cross_check,
    };
    let outcome = match run_census(&job) {
        Ok(outcome) => outcome,
        Err(
            e @ (CensusError::CrossCheckDisagreement { .. }
            | CensusError::ReductionMismatch { .. }),
        ) => {
            eprintln!("{e}");
            return Ok(EXIT_VIOLATION);
        }
        Err(e) => return Err(anyhow!("census failed: {e}")),
    };
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    fs::write(out.join("census.json"), census_json(&outcome))?;
    fs::write(out.join("census.csv"), census_csv(&outcome))?;
    let s = &outcome.summary;
    println!("graphs: {}", s.graphs);
    println!("critical: {}", s.critical_count);
    for c in &s.critical {
        println!("  {c}");
    }
    println!("bound violations: {}", s.violations.len());
    for v in &s.violations {
        println!("  {v}");
    }
    println!("tight for the genus bound: {}", s.tight.len());
    println!(
        "reports written to {} (census.json, census.csv)",
        out.display()
    );
    Ok(if s.all_pass { 0 } else { EXIT_VIOLATION })
}

fn cmd_construct(family: FamilyArg, param: usize, out: Option<&Path>) -> Result<u8> {
    let (stem, sparse6, sidecar): (&str, String, Option<String>) = match family {
        FamilyArg::Dual4Ore => {
            let entries = dual_4ore_catalog(param)?;
            let json = serde_json::to_string_pretty(&catalog_json(&entries))?;
            ("dual4ore", catalog_sparse6(&entries), Some(json))
        }
        FamilyArg::FourOre => {
            let graphs = primal_4ore_catalog(param)?;
            let lines: Vec<String> = graphs
                .iter()
                .map(|g| encode_sparse6(g).expect("constructed graphs encode"))
                .collect();
            ("4ore", lines.join("\n"), None)
        }
        FamilyArg::K3nPlus => (
            "k3nplus",
            encode_sparse6(&k3n_plus(param)?).expect("constructed graphs encode"),
            None,
        ),
        FamilyArg::Flower => (
            "flower",
            encode_sparse6(&flower_snark(param)?).expect("constructed graphs encode"),
            None,
        ),
    };
    println!("{sparse6}");
    if let Some(dir) = out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        fs::write(dir.join(format!("{stem}.s6")), format!("{sparse6}\n"))?;
        if let Some(json) = sidecar {
            fs::write(dir.join(format!("{stem}.json")), json)?;
        }
    }
    Ok(0)
}

fn cmd_genus(graph: &str, budget: u64) -> Result<u8> {
    let g = load_graph(graph)?;
    match euler_genus_with_budget(&g, budget) {
        Ok(cert) => {
            println!("genus: {}", cert.genus);
            println!("faces: {}", cert.face_count);
            println!("verified: {}", cert.verify(&g));
            Ok(0)
        }
        Err(GenusError::BudgetExceeded { lower_bound }) => {
            println!("genus: >= {lower_bound} (budget of {budget} steps exhausted)");
            Ok(0)
        }
        Err(e) => Err(anyhow!("genus computation failed: {e}")),
    }
}

fn cmd_bounds(graph: &str, genus: Option<usize>) -> Result<u8> {
    let g = load_graph(graph)?;
    let report = density_functionals(&g, genus);
    println!("{}", serde_json::to_string_pretty(&report)?);
    let failed = report
        .bounds
        .entries()
        .iter()
        .any(|(_, check)| check.status == BoundStatus::Fail);
    Ok(if failed { EXIT_VIOLATION } else { 0 })
}

fn cmd_duality(path: &Path) -> Result<u8> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .with_context(|| format!("parsing {} as JSON", path.display()))?;
    let items: Vec<serde_json::Value> = match value {
        serde_json::Value::Array(items) => items,
        obj => vec![obj],
    };
    if items.is_empty() {
        bail!("no plane graphs in {}", path.display());
    }
    let z3 = Group::cyclic(3).expect("3 is a valid order");
    let mut disagreements = 0usize;
    for (i, item) in items.iter().enumerate() {
        let pg = plane_graph_from_json(item)
            .with_context(|| format!("entry {i} of {}", path.display()))?;
        let colorable = pg.graph().is_k_colorable(3);
        let dual = pg.dual().map_err(|e| {
            anyhow!("entry {i}: dual undefined ({e}); duality needs a bridgeless plane graph")
        })?;
        let dual_bg = BorderedGraph::with_zero_boundary(dual.graph().clone(), z3.clone());
        let dual_flows = has_nz_flow(&dual_bg).is_some();
        let verdict = if colorable == dual_flows {
            "agree"
        } else {
            disagreements += 1;
            "DISAGREE"
        };
        println!(
            "entry {i}: primal 3-colorable = {colorable}, dual has nowhere-zero flow = {dual_flows} -> {verdict}"
        );
    }
    if disagreements > 0 {
        eprintln!("{disagreements} duality disagreement(s) found");
        return Ok(EXIT_VIOLATION);
    }
    Ok(0)
}

/// Reads `{"n": ..., "edges": [[u,v], ...]}` or `{"sparse6": ...}` plus
/// `"rotations": [[edge ids], ...]` into a validated plane graph. An
/// explicit edge list wins over sparse6 because the rotations refer to
/// edge ids in that exact order, which sparse6 does not preserve.
fn plane_graph_from_json(item: &serde_json::Value) -> Result<PlaneGraph> {
    let graph = if let Some(edges_json) = item.get("edges").and_then(|v| v.as_array()) {
        let n = item
            .get("n")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| anyhow!("\"edges\" needs a companion \"n\""))? as usize;
        let mut pairs = Vec::with_capacity(edges_json.len());
        for e in edges_json {
            let pair = e
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| anyhow!("edges must be [u, v] pairs"))?;
            let u = pair[0].as_u64().ok_or_else(|| anyhow!("bad endpoint"))? as usize;
            let v = pair[1].as_u64().ok_or_else(|| anyhow!("bad endpoint"))? as usize;
            pairs.push((u, v));
        }
        Multigraph::from_edge_list(n, &pairs)?
    } else if let Some(s6) = item.get("sparse6").and_then(|v| v.as_str()) {
        decode_sparse6(s6)?
    } else {
        bail!("missing \"edges\" or \"sparse6\"");
    };
    let rotations_json = item
        .get("rotations")
        .and_then(|v| v.as_array())
        .ok_or_else(|| anyhow!("missing \"rotations\""))?;
    let mut rotations = Vec::with_capacity(rotations_json.len());
    for r in rotations_json {
        let ids = r
            .as_array()
            .ok_or_else(|| anyhow!("rotations must be lists of edge ids"))?;
        let mut rot = Vec::with_capacity(ids.len());
        for id in ids {
            rot.push(id.as_u64().ok_or_else(|| anyhow!("bad edge id"))? as usize);
        }
        rotations.push(rot);
    }
    let scheme = RotationSystem {
        rotations,
        flipped: BTreeSet::new(),
    };
    Ok(PlaneGraph::from_embedding(graph, scheme)?)
}

//! Exhaustive sweeps over small graphs: generate every connected simple
//! graph up to isomorphism, test flow-criticality (optionally over every
//! boundary), attach genus and density data, and check the edge bounds on
//! the whole corpus at once.
//!
//! Results are deterministic: records are sorted by canonical form, so two
//! runs of the same job emit byte-identical reports regardless of thread
//! scheduling.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::critical::{
    critical_boundaries, is_flow_critical, CriticalityError, CriticalityMode,
};
use crate::density::{check_bounds, BoundStatus, DensityReport};
use crate::flow::BorderedGraph;
use crate::graph::Multigraph;
use crate::group::{Group, GroupElement};
use crate::topology::{euler_genus, GenusError};

/// Largest vertex count the generator will enumerate; beyond this the
/// isomorphism-class count (261080 connected graphs at nine vertices)
/// stops being a desk-scale sweep.
pub const GENERATOR_CAP: usize = 8;

/// Largest vertex count accepted in all-boundaries mode. The boundary
/// space is |Γ|^(n−1) per graph, so the sweep is kept to sizes where
/// exhausting it per graph stays in seconds.
pub const BOUNDARY_MODE_CAP: usize = 6;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("generator handles at most {cap} vertices, asked for {n}")]
    GeneratorCap { n: usize, cap: usize },
    #[error("all-boundaries mode handles at most {cap} vertices, got a graph on {n}")]
    BoundaryCap { n: usize, cap: usize },
    #[error("census graphs must be connected (graph {index} in the input is not)")]
    Disconnected { index: usize },
    #[error(
        "fast/brute criticality disagreement on {canonical}: fast says {fast}, brute says {brute}"
    )]
    CrossCheckDisagreement {
        canonical: String,
        fast: bool,
        brute: bool,
    },
    #[error(
        "symmetry-reduced boundary list for {canonical} does not match the \
         unreduced enumeration ({reduced} orbit minima listed, {expected} found directly)"
    )]
    ReductionMismatch {
        canonical: String,
        reduced: usize,
        expected: usize,
    },
    #[error(transparent)]
    Criticality(#[from] CriticalityError),
    #[error(transparent)]
    Genus(#[from] GenusError),
}

/// Where the census graphs come from.
#[derive(Debug, Clone)]
pub enum CensusSource {
    /// Every connected simple graph on 1..=max_n vertices, one per
    /// isomorphism class.
    Generate { max_n: usize },
    /// Caller-supplied graphs; deduplicated by canonical form so records
    /// stay one-per-class.
    Explicit(Vec<Multigraph>),
}

/// Whether to test only the zero boundary or sweep every boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryMode {
    ZeroBoundary,
    AllBoundaries,
}

#[derive(Debug, Clone)]
pub struct CensusJob {
    pub source: CensusSource,
    pub group: Group,
    pub mode: BoundaryMode,
    /// Compute exact genus per graph (needed for the genus-dependent
    /// bound; the purely combinatorial bounds work without it).
    pub compute_genus: bool,
    /// Re-verify every k-th record (in canonical order) with the brute
    /// criticality mode; any disagreement aborts the whole run.
    pub brute_cross_check_interval: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusRecord {
    /// Canonical form, hex-encoded; the sort key for all output.
    pub canonical: String,
    pub n: usize,
    pub m: usize,
    /// Verdict for the zero boundary.
    pub critical_zero_boundary: bool,
    /// In all-boundaries mode, the number of criticality-inducing
    /// boundaries up to automorphism and negation.
    pub critical_boundaries_count: Option<usize>,
    /// Exact genus, or a lower bound if the search budget ran out.
    pub genus: Option<usize>,
    pub genus_is_lower_bound: bool,
    pub report: DensityReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusSummary {
    pub graphs: usize,
    pub critical_count: usize,
    /// Canonical forms of the zero-boundary-critical graphs.
    pub critical: Vec<String>,
    /// Bound failures on critical graphs, as "canonical: bound" strings.
    pub violations: Vec<String>,
    /// Critical graphs meeting the genus-dependent edge bound with
    /// equality.
    pub tight: Vec<String>,
    pub all_pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusOutcome {
    pub records: Vec<CensusRecord>,
    pub summary: CensusSummary,
}

/// Every connected simple graph on exactly `n` vertices, one representative
/// per isomorphism class, sorted by canonical form.
///
/// Built by vertex extension: each class on `n` vertices arises from some
/// class on `n−1` by adding a vertex joined to a nonempty neighbour set, so
/// extending every smaller class by every nonempty subset and deduplicating
/// canonically is exhaustive. Class counts for n = 1..=8 are
/// 1, 1, 2, 6, 21, 112, 853, 11117.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Multigraph>, CensusError> {
    if n > GENERATOR_CAP {
        return Err(CensusError::GeneratorCap {
            n,
            cap: GENERATOR_CAP,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut layer = vec![Multigraph::empty(1)];
    for size in 2..=n {
        let candidates: Vec<(Vec<u8>, Multigraph)> = layer
            .par_iter()
            .flat_map_iter(|g| {
                let base: Vec<(usize, usize)> =
                    g.edges().iter().map(|e| (e.u, e.v)).collect();
                (1u32..1 << (size - 1)).map(move |mask| {
                    let mut pairs = base.clone();
                    for b in 0..size - 1 {
                        if mask >> b & 1 == 1 {
                            pairs.push((b, size - 1));
                        }
                    }
                    let h = Multigraph::from_edge_list(size, &pairs)
                        .expect("extension endpoints are in range");
                    (h.canonical_form(), h)
                })
            })
            .collect();
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        let mut sorted = candidates;
        sorted.sort_by(|a, b| a.0.cmp(&b.0));
        for (form, h) in sorted {
            if seen.insert(form) {
                next.push(h);
            }
        }
        layer = next;
    }
    Ok(layer)
}

/// Runs a census job and returns sorted records plus a summary. The record
/// list is keyed and ordered by canonical form, so equal jobs produce
/// byte-identical serialized reports.
pub fn run_census(job: &CensusJob) -> Result<CensusOutcome, CensusError> {
    let graphs = collect_graphs(job)?;
    if job.mode == BoundaryMode::AllBoundaries {
        if let Some(g) = graphs.iter().find(|g| g.n() > BOUNDARY_MODE_CAP) {
            return Err(CensusError::BoundaryCap {
                n: g.n(),
                cap: BOUNDARY_MODE_CAP,
            });
        }
    }

    let mut keyed: Vec<(Multigraph, CensusRecord)> = graphs
        .into_par_iter()
        .map(|g| survey_graph(g, job))
        .collect::<Result<Vec<_>, CensusError>>()?;
    keyed.sort_by(|a, b| a.1.canonical.cmp(&b.1.canonical));

    if let Some(k) = job.brute_cross_check_interval {
        let k = k.max(1);
        keyed
            .par_iter()
            .enumerate()
            .filter(|(i, _)| i % k == 0)
            .map(|(_, (g, record))| cross_check(g, record, &job.group))
            .collect::<Result<Vec<_>, CensusError>>()?;
    }

    let records: Vec<CensusRecord> = keyed.into_iter().map(|(_, r)| r).collect();
    let summary = summarize(&records);
    Ok(CensusOutcome { records, summary })
}

fn collect_graphs(job: &CensusJob) -> Result<Vec<Multigraph>, CensusError> {
    match &job.source {
        CensusSource::Generate { max_n } => {
            if *max_n > GENERATOR_CAP {
                return Err(CensusError::GeneratorCap {
                    n: *max_n,
                    cap: GENERATOR_CAP,
                });
            }
            let mut all = Vec::new();
            for n in 1..=*max_n {
                all.extend(enumerate_connected_graphs(n)?);
            }
            Ok(all)
        }
        CensusSource::Explicit(graphs) => {
            let mut seen = BTreeSet::new();
            let mut out = Vec::new();
            for (index, g) in graphs.iter().enumerate() {
                if !g.is_connected() {
                    return Err(CensusError::Disconnected { index });
                }
                if seen.insert(g.canonical_form()) {
                    out.push(g.clone());
                }
            }
            Ok(out)
        }
    }
}

fn survey_graph(
    g: Multigraph,
    job: &CensusJob,
) -> Result<(Multigraph, CensusRecord), CensusError> {
    if !g.is_connected() {
        return Err(CensusError::Disconnected { index: 0 });
    }
    let bg = BorderedGraph::with_zero_boundary(g.clone(), job.group.clone());
    let critical_zero_boundary =
        is_flow_critical(&bg, CriticalityMode::Fast)?.is_critical();

    let critical_boundaries_count = match job.mode {
        BoundaryMode::ZeroBoundary => None,
        BoundaryMode::AllBoundaries => {
            let reduced = critical_boundaries(&g, &job.group, true)?;
            if g.n() <= 4 {
                verify_boundary_reduction(&g, &job.group, &reduced)?;
            }
            Some(reduced.len())
        }
    };

    let (genus, genus_is_lower_bound) = if job.compute_genus {
        match euler_genus(&g) {
            Ok(cert) => (Some(cert.genus), false),
            Err(GenusError::BudgetExceeded { lower_bound }) => (Some(lower_bound), true),
            Err(other) => return Err(other.into()),
        }
    } else {
        (None, false)
    };
    // a lower bound is not usable for the genus-dependent inequality, so
    // the density report only sees exactly-known values
    let exact_genus = genus.filter(|_| !genus_is_lower_bound);

    let mut report = crate::density::density_functionals(&g, exact_genus);
    report.bounds = check_bounds(&g, exact_genus, critical_zero_boundary);

    let record = CensusRecord {
        canonical: hex(&g.canonical_form()),
        n: g.n(),
        m: g.m(),
        critical_zero_boundary,
        critical_boundaries_count,
        genus,
        genus_is_lower_bound,
        report,
    };
    Ok((g, record))
}

fn cross_check(
    g: &Multigraph,
    record: &CensusRecord,
    group: &Group,
) -> Result<(), CensusError> {
    let bg = BorderedGraph::with_zero_boundary(g.clone(), group.clone());
    let brute = is_flow_critical(&bg, CriticalityMode::Brute)?.is_critical();
    if brute != record.critical_zero_boundary {
        return Err(CensusError::CrossCheckDisagreement {
            canonical: record.canonical.clone(),
            fast: record.critical_zero_boundary,
            brute,
        });
    }
    Ok(())
}

/// Recomputes the orbit-reduced critical boundary list from scratch — full
/// enumeration without symmetry, then explicit orbit closure under
/// automorphisms and negation — and compares it with the reduced list. This
/// shares no code with the reduction being checked.
fn verify_boundary_reduction(
    g: &Multigraph,
    group: &Group,
    reduced: &[Vec<GroupElement>],
) -> Result<(), CensusError> {
    let full = critical_boundaries(g, group, false)?;
    let automorphisms = g.canonical_certificate().automorphisms;
    let mut minima: BTreeSet<Vec<usize>> = BTreeSet::new();
    for beta in &full {
        minima.insert(orbit_minimum(beta, group, &automorphisms));
    }
    let reduced_keys: BTreeSet<Vec<usize>> = reduced
        .iter()
        .map(|beta| beta.iter().map(|b| group.index_of(b)).collect())
        .collect();
    if minima != reduced_keys {
        return Err(CensusError::ReductionMismatch {
            canonical: hex(&g.canonical_form()),
            reduced: reduced_keys.len(),
            expected: minima.len(),
        });
    }
    Ok(())
}

/// Lexicographically least index vector in the orbit of `beta` under vertex
/// automorphisms and global negation, found by breadth-first closure.
fn orbit_minimum(
    beta: &[GroupElement],
    group: &Group,
    automorphisms: &[Vec<usize>],
) -> Vec<usize> {
    let start: Vec<usize> = beta.iter().map(|b| group.index_of(b)).collect();
    let mut seen = BTreeSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(key) = queue.pop_front() {
        let elems: Vec<GroupElement> =
            key.iter().map(|&i| group.element_at(i)).collect();
        let mut images = Vec::new();
        for perm in automorphisms {
            let mut image = vec![0; key.len()];
            for (v, &pv) in perm.iter().enumerate() {
                image[pv] = key[v];
            }
            images.push(image);
        }
        let negated: Vec<usize> = elems
            .iter()
            .map(|e| group.index_of(&group.neg(e)))
            .collect();
        images.push(negated);
        for image in images {
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    seen.into_iter().next().expect("orbit contains beta itself")
}

fn summarize(records: &[CensusRecord]) -> CensusSummary {
    let mut critical = Vec::new();
    let mut violations = Vec::new();
    let mut tight = Vec::new();
    for r in records {
        if r.critical_zero_boundary {
            critical.push(r.canonical.clone());
        }
        for (name, check) in r.report.bounds.entries() {
            if check.status == BoundStatus::Fail && !check.vacuous {
                violations.push(format!("{}: {}", r.canonical, name));
            }
        }
        if r.critical_zero_boundary && !r.genus_is_lower_bound {
            if let Some(g) = r.genus {
                // 2m = 5n + 5g − 8, rearranged to avoid underflow at n = 1
                if 2 * r.m + 8 == 5 * r.n + 5 * g {
                    tight.push(r.canonical.clone());
                }
            }
        }
    }
    CensusSummary {
        graphs: records.len(),
        critical_count: critical.len(),
        critical,
        all_pass: violations.is_empty(),
        violations,
        tight,
    }
}

/// The whole outcome as a JSON string (pretty-printed, trailing newline).
pub fn census_json(outcome: &CensusOutcome) -> String {
    let mut s = serde_json::to_string_pretty(outcome).expect("census records serialize");
    s.push('\n');
    s
}

/// One CSV row per record, sorted by canonical form. Bound columns hold
/// `pass` / `fail` / `n/a`, with `(vacuous)` appended when criticality was
/// not established for that graph.
pub fn census_csv(outcome: &CensusOutcome) -> String {
    let mut out = String::from(
        "canonical_form,n,m,critical_zero_boundary,critical_boundaries_count,\
         genus,genus_is_lower_bound,potential,sigma,sigma_prime,\
         genus_edge_bound,edge_bound_3n_minus_5,edge_bound_3n_minus_8,edge_bound_4n_minus_10\n",
    );
    for r in &outcome.records {
        let count = r
            .critical_boundaries_count
            .map(|c| c.to_string())
            .unwrap_or_default();
        let genus = r.genus.map(|g| g.to_string()).unwrap_or_default();
        let pi = r
            .report
            .pi
            .map(|p| p.to_string())
            .unwrap_or_default();
        let bounds: Vec<String> = r
            .report
            .bounds
            .entries()
            .iter()
            .map(|(_, check)| {
                let word = match check.status {
                    BoundStatus::Pass => "pass",
                    BoundStatus::Fail => "fail",
                    BoundStatus::NotApplicable => "n/a",
                };
                if check.vacuous {
                    format!("{word} (vacuous)")
                } else {
                    word.to_string()
                }
            })
            .collect();
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.canonical,
            r.n,
            r.m,
            r.critical_zero_boundary,
            count,
            genus,
            r.genus_is_lower_bound,
            pi,
            r.report.sigma,
            r.report.sigma_prime,
            bounds[0],
            bounds[1],
            bounds[2],
            bounds[3],
        )
        .expect("writing to a String cannot fail");
    }
    out
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::dual_4ore_catalog;
    use crate::graph::Multigraph;

    fn job(source: CensusSource, mode: BoundaryMode, genus: bool) -> CensusJob {
        CensusJob {
            source,
            group: Group::cyclic(3).unwrap(),
            mode,
            compute_genus: genus,
            brute_cross_check_interval: None,
        }
    }

    #[test]
    fn generator_matches_the_known_class_counts() {
        let expected = [1usize, 1, 2, 6, 21, 112, 853];
        for (i, want) in expected.iter().enumerate() {
            let n = i + 1;
            let graphs = enumerate_connected_graphs(n).unwrap();
            assert_eq!(graphs.len(), *want, "class count at n = {n}");
            for g in &graphs {
                assert!(g.is_connected());
                assert_eq!(g.n(), n);
                assert!(g.edges().iter().all(|e| e.u != e.v));
            }
            // pairwise distinct canonical forms
            let forms: BTreeSet<_> =
                graphs.iter().map(|g| g.canonical_form()).collect();
            assert_eq!(forms.len(), graphs.len());
        }
        assert!(matches!(
            enumerate_connected_graphs(9),
            Err(CensusError::GeneratorCap { n: 9, cap: 8 })
        ));
    }

    #[test]
    fn zero_boundary_census_finds_exactly_the_known_criticals() {
        let outcome = run_census(&job(
            CensusSource::Generate { max_n: 4 },
            BoundaryMode::ZeroBoundary,
            true,
        ))
        .unwrap();
        assert_eq!(outcome.records.len(), 1 + 1 + 2 + 6);
        let k2 = Multigraph::from_edge_list(2, &[(0, 1)]).unwrap();
        let k4 = Multigraph::complete(4);
        let expected: BTreeSet<String> = [&k2, &k4]
            .iter()
            .map(|g| hex(&g.canonical_form()))
            .collect();
        let found: BTreeSet<String> =
            outcome.summary.critical.iter().cloned().collect();
        assert_eq!(found, expected);
        assert!(outcome.summary.all_pass);
        // K2 and K4 meet the genus-dependent bound with equality
        assert_eq!(outcome.summary.tight.len(), 2);
        // records come out sorted and genus is exact everywhere at this size
        for w in outcome.records.windows(2) {
            assert!(w[0].canonical < w[1].canonical);
        }
        assert!(outcome
            .records
            .iter()
            .all(|r| r.genus == Some(0) && !r.genus_is_lower_bound));
    }

    #[test]
    fn brute_cross_check_accepts_the_fast_verdicts() {
        let mut j = job(
            CensusSource::Generate { max_n: 4 },
            BoundaryMode::ZeroBoundary,
            false,
        );
        j.brute_cross_check_interval = Some(1);
        let outcome = run_census(&j).unwrap();
        assert_eq!(outcome.summary.critical_count, 2);
    }

    #[test]
    fn all_boundaries_mode_counts_orbits_and_verifies_small_cases() {
        let outcome = run_census(&job(
            CensusSource::Generate { max_n: 4 },
            BoundaryMode::AllBoundaries,
            false,
        ))
        .unwrap();
        // every n <= 4 record passed through the independent orbit check
        for r in &outcome.records {
            assert!(r.critical_boundaries_count.is_some(), "{}", r.canonical);
        }
        // K1 admits only the zero boundary and it is not critical there
        let k1 = outcome.records.iter().find(|r| r.n == 1).unwrap();
        assert_eq!(k1.critical_boundaries_count, Some(0));
        // K2 over Z3: zero boundary is critical, and the two nonzero
        // boundaries form one orbit under negation whose members flow
        let k2 = outcome
            .records
            .iter()
            .find(|r| r.n == 2 && r.m == 1)
            .unwrap();
        assert_eq!(k2.critical_boundaries_count, Some(1));
        let too_big = run_census(&job(
            CensusSource::Explicit(vec![Multigraph::complete(7)]),
            BoundaryMode::AllBoundaries,
            false,
        ));
        assert!(matches!(
            too_big,
            Err(CensusError::BoundaryCap { n: 7, cap: 6 })
        ));
    }

    #[test]
    fn catalog_graphs_census_as_critical_and_tight() {
        let graphs: Vec<Multigraph> = dual_4ore_catalog(8)
            .unwrap()
            .into_iter()
            .map(|e| e.graph)
            .collect();
        assert_eq!(graphs.len(), 6);
        let outcome = run_census(&job(
            CensusSource::Explicit(graphs),
            BoundaryMode::ZeroBoundary,
            true,
        ))
        .unwrap();
        assert_eq!(outcome.summary.critical_count, 6);
        assert_eq!(outcome.summary.tight.len(), 6);
        assert!(outcome.summary.all_pass);
        for r in &outcome.records {
            assert_eq!(r.genus, Some(0));
            assert_eq!(r.report.pi, Some(8));
        }
    }

    #[test]
    fn reports_are_deterministic_and_parse_back() {
        let j = job(
            CensusSource::Generate { max_n: 4 },
            BoundaryMode::ZeroBoundary,
            true,
        );
        let a = run_census(&j).unwrap();
        let b = run_census(&j).unwrap();
        assert_eq!(census_json(&a), census_json(&b));
        assert_eq!(census_csv(&a), census_csv(&b));
        let parsed: serde_json::Value = serde_json::from_str(&census_json(&a)).unwrap();
        assert_eq!(
            parsed["records"].as_array().unwrap().len(),
            a.records.len()
        );
        let csv = census_csv(&a);
        assert_eq!(csv.lines().count(), a.records.len() + 1);
        assert!(csv.starts_with("canonical_form,"));
    }

    #[test]
    fn explicit_sources_are_deduplicated_and_checked() {
        let k4 = Multigraph::complete(4);
        let relabeled =
            Multigraph::from_edge_list(4, &[(3, 2), (3, 1), (3, 0), (2, 1), (2, 0), (1, 0)])
                .unwrap();
        let outcome = run_census(&job(
            CensusSource::Explicit(vec![k4.clone(), relabeled]),
            BoundaryMode::ZeroBoundary,
            false,
        ))
        .unwrap();
        assert_eq!(outcome.records.len(), 1);
        let two_parts = Multigraph::empty(3);
        assert!(matches!(
            run_census(&job(
                CensusSource::Explicit(vec![two_parts]),
                BoundaryMode::ZeroBoundary,
                false,
            )),
            Err(CensusError::Disconnected { index: 0 })
        ));
    }
}

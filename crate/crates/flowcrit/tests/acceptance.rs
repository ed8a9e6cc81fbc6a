//! The release gate: one check per verification target, each printing a
//! single PASS/FAIL line (visible with `--nocapture`) and asserting.
//!
//! Every randomized check uses a fixed ChaCha seed, so the suite is fully
//! deterministic.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use flowcrit::{
    check_genus_subadditivity, count_nz_flows, count_nz_flows_dc, density_functionals,
    dual_4ore_catalog, enumerate_connected_graphs, euler_genus, flower_snark, has_nz_flow,
    is_exceptional, is_flow_critical, is_planar, k3n_plus, primal_4ore_catalog, run_census,
    BorderedGraph, BoundaryMode, CensusJob, CensusSource, CriticalityMode, GenusError, Group,
    GroupElement, Multigraph, Partition, PlaneGraph,
};
use flowcrit::{transport_flow_to_contraction, CriticalityVerdict};

fn verdict(number: usize, name: &str, pass: bool, detail: &str) {
    println!(
        "criterion {number:>2} {name}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {number} ({name}) failed: {detail}");
}

fn z3() -> Group {
    "3".parse().unwrap()
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Every boundary over `group` on `n` vertices whose values sum to zero,
/// enumerated with the last vertex forced.
fn all_zero_sum_boundaries(group: &Group, n: usize) -> Vec<Vec<GroupElement>> {
    let k = group.order();
    let free = (n - 1) as u32;
    (0..k.pow(free))
        .map(|rank| {
            let mut r = rank;
            let mut beta = Vec::with_capacity(n);
            let mut sum = group.zero();
            for pos in 0..free {
                let place = k.pow(free - 1 - pos);
                let e = group.element_at(r / place);
                r %= place;
                sum = group.add(&sum, &e);
                beta.push(e);
            }
            beta.push(group.neg(&sum));
            beta
        })
        .collect()
}

/// Random connected simple graph: a spanning tree plus extra edges, capped
/// at `max_m` edges total.
fn random_connected_graph(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize, max_m: usize) -> Multigraph {
    let n = rng.random_range(min_n..=max_n);
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for v in 1..n {
        pairs.insert((rng.random_range(0..v), v));
    }
    let extras = rng.random_range(0..=max_m.saturating_sub(pairs.len()));
    for _ in 0..extras {
        if n < 2 {
            break;
        }
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a != b {
            pairs.insert((a.min(b), a.max(b)));
        }
    }
    let list: Vec<(usize, usize)> = pairs.into_iter().collect();
    Multigraph::from_edge_list(n, &list).unwrap()
}

/// Random boundary summing to zero; `nonzero` forces at least one nonzero
/// value.
fn random_boundary(rng: &mut ChaCha8Rng, group: &Group, n: usize, nonzero: bool) -> Vec<GroupElement> {
    loop {
        let mut beta = Vec::with_capacity(n);
        let mut sum = group.zero();
        for _ in 0..n - 1 {
            let e = group.element_at(rng.random_range(0..group.order()));
            sum = group.add(&sum, &e);
            beta.push(e);
        }
        beta.push(group.neg(&sum));
        if !nonzero || beta.iter().any(|e| !e.is_zero()) {
            return beta;
        }
    }
}

#[test]
fn check_01_catalog_fingerprint() {
    let start = Instant::now();
    let entries = dual_4ore_catalog(10).unwrap();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    let mut fingerprint_ok = true;
    let mut potential_ok = true;
    for e in &entries {
        *counts.entry(e.graph.n()).or_default() += 1;
        fingerprint_ok &= 2 * e.graph.m() == 5 * e.graph.n() - 8;
        assert!(is_planar(&e.graph));
        potential_ok &= density_functionals(&e.graph, Some(0)).pi == Some(8);
    }
    let counts_ok = counts == BTreeMap::from([(4, 1), (6, 1), (8, 4), (10, 19)]);
    let elapsed = start.elapsed();
    let pass = fingerprint_ok && potential_ok && counts_ok && elapsed < Duration::from_secs(60);
    verdict(
        1,
        "catalog fingerprint 2m = 5n - 8 and potential 8",
        pass,
        &format!(
            "{} entries, sizes {counts:?}, {:.1}s",
            entries.len(),
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn check_02_catalog_criticality() {
    let start = Instant::now();
    let entries = dual_4ore_catalog(10).unwrap();
    let group = z3();
    let mut fast_critical = 0usize;
    let mut brute_checked = 0usize;
    let mut agree = true;
    for (i, e) in entries.iter().enumerate() {
        let bg = BorderedGraph::with_zero_boundary(e.graph.clone(), group.clone());
        let fast = is_flow_critical(&bg, CriticalityMode::Fast).unwrap();
        if fast.is_critical() {
            fast_critical += 1;
        }
        // a tenth of the entries, spread across sizes, re-proved by the
        // all-partitions oracle
        if i % 10 == 0 {
            brute_checked += 1;
            let brute = is_flow_critical(&bg, CriticalityMode::Brute).unwrap();
            agree &= fast.is_critical() == brute.is_critical();
        }
    }
    let elapsed = start.elapsed();
    let pass = fast_critical == entries.len() && agree && elapsed < Duration::from_secs(600);
    verdict(
        2,
        "catalog flow-criticality",
        pass,
        &format!(
            "{fast_critical}/{} critical, {brute_checked} brute-confirmed, {:.1}s",
            entries.len(),
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn check_03_catalog_nonzero_boundaries_flow() {
    let start = Instant::now();
    let group = z3();
    let mut boundaries = 0usize;
    let mut failures = 0usize;
    for e in dual_4ore_catalog(8).unwrap() {
        for beta in all_zero_sum_boundaries(&group, e.graph.n()) {
            if beta.iter().all(|x| x.is_zero()) {
                continue;
            }
            boundaries += 1;
            let bg = BorderedGraph::new(e.graph.clone(), group.clone(), beta).unwrap();
            if has_nz_flow(&bg).is_none() {
                failures += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failures == 0 && boundaries > 0 && elapsed < Duration::from_secs(600);
    verdict(
        3,
        "every nonzero boundary flows on small catalog entries",
        pass,
        &format!(
            "{boundaries} boundaries, {failures} failures, {:.1}s",
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn check_04_k3n_family() {
    let start = Instant::now();
    let group = z3();
    let mut pass = true;
    let mut notes = Vec::new();
    for n in 7..=9 {
        let g = k3n_plus(n).unwrap();
        let edges_ok = g.m() == 3 * n - 8;
        let bg = BorderedGraph::with_zero_boundary(g, group.clone());
        let critical = is_flow_critical(&bg, CriticalityMode::Fast)
            .unwrap()
            .is_critical();
        pass &= edges_ok && critical;
        notes.push(format!("n={n}: m={} critical={critical}", bg.graph().m()));
    }
    let genus = euler_genus(&k3n_plus(7).unwrap()).unwrap().genus;
    pass &= genus == 1 && genus == (7usize - 5).div_ceil(2);
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(300);
    verdict(
        4,
        "augmented complete bipartite family",
        pass,
        &format!(
            "{}; genus(n=7)={genus}, {:.1}s",
            notes.join(", "),
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn check_05_06_07_small_graph_census_bounds() {
    let start = Instant::now();
    let job = CensusJob {
        source: CensusSource::Generate { max_n: 6 },
        group: z3(),
        mode: BoundaryMode::ZeroBoundary,
        compute_genus: true,
        brute_cross_check_interval: Some(25),
    };
    let outcome = run_census(&job).unwrap();

    let corpus: Vec<Multigraph> = (1..=6)
        .flat_map(|n| enumerate_connected_graphs(n).unwrap())
        .collect();
    let by_canonical: BTreeMap<String, &Multigraph> = corpus
        .iter()
        .map(|g| (hex(&g.canonical_form()), g))
        .collect();

    // criterion 5: exact-genus edge bound on every critical graph, with
    // equality exactly at the exceptional ones
    let mut genus_bound_ok = true;
    let mut equality_matches_exceptional = true;
    let mut criticals = 0usize;
    let mut tight = 0usize;
    // criterion 6: non-exceptional planar criticals stay under (5n - 9)/2
    let mut planar_bound_ok = true;
    // criterion 7: every critical graph except the single edge stays under
    // 4n - 10
    let mut global_bound_ok = true;
    for r in &outcome.records {
        if !r.critical_zero_boundary {
            continue;
        }
        criticals += 1;
        let g = by_canonical[&r.canonical];
        let genus = r.genus.expect("census computed genus");
        assert!(!r.genus_is_lower_bound, "budget suffices at this scale");
        // 2m <= 5n + 5g - 8, rearranged to sidestep usize underflow
        genus_bound_ok &= 2 * r.m + 8 <= 5 * r.n + 5 * genus;
        let is_tight = 2 * r.m + 8 == 5 * r.n + 5 * genus;
        let exceptional = is_exceptional(g).unwrap();
        equality_matches_exceptional &= is_tight == exceptional;
        if is_tight {
            tight += 1;
        }
        if genus == 0 && !exceptional {
            planar_bound_ok &= 2 * r.m <= 5 * r.n - 9;
        }
        if !(r.n == 2 && r.m == 1) {
            global_bound_ok &= r.m + 10 <= 4 * r.n;
        }
    }
    genus_bound_ok &= outcome.summary.all_pass;
    let elapsed = start.elapsed();
    let within = elapsed < Duration::from_secs(1800);

    verdict(
        5,
        "exact-genus edge bound over the n <= 6 census",
        genus_bound_ok && equality_matches_exceptional && within,
        &format!(
            "{} graphs, {criticals} critical, {tight} tight (all exceptional), {:.1}s",
            outcome.records.len(),
            elapsed.as_secs_f64()
        ),
    );
    verdict(
        6,
        "planar non-exceptional criticals under (5n - 9)/2",
        planar_bound_ok,
        &format!("{criticals} criticals screened"),
    );
    verdict(
        7,
        "criticals other than the single edge under 4n - 10",
        global_bound_ok,
        &format!("{criticals} criticals screened"),
    );
}

#[test]
fn check_08_boundary_sweep_sigma() {
    let start = Instant::now();
    let job = CensusJob {
        source: CensusSource::Generate { max_n: 5 },
        group: z3(),
        mode: BoundaryMode::AllBoundaries,
        compute_genus: false,
        brute_cross_check_interval: None,
    };
    let outcome = run_census(&job).unwrap();
    let mut sparse_violations = 0usize;
    let mut critical_pairs = 0usize;
    for r in &outcome.records {
        // the sweep already covers the zero boundary, so the orbit count
        // alone says whether any boundary makes this graph critical
        let count = r.critical_boundaries_count.expect("all-boundaries mode");
        if count > 0 {
            critical_pairs += count;
            if r.report.sigma < 5 {
                sparse_violations += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = sparse_violations == 0 && critical_pairs > 0 && elapsed < Duration::from_secs(1800);
    verdict(
        8,
        "no critical boundary pair with sigma below 5 for n <= 5",
        pass,
        &format!(
            "{} graphs, {critical_pairs} critical pairs, {sparse_violations} below, {:.1}s",
            outcome.records.len(),
            elapsed.as_secs_f64()
        ),
    );
}

fn grid(rows: usize, cols: usize) -> Multigraph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut pairs = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                pairs.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                pairs.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Multigraph::from_edge_list(rows * cols, &pairs).unwrap()
}

fn wheel(rim: usize) -> Multigraph {
    let mut pairs: Vec<(usize, usize)> = (1..=rim).map(|v| (0, v)).collect();
    for v in 1..=rim {
        pairs.push((v, if v == rim { 1 } else { v + 1 }));
    }
    Multigraph::from_edge_list(rim + 1, &pairs).unwrap()
}

fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let mut pairs = Vec::new();
    for u in 0..a {
        for v in 0..b {
            pairs.push((u, a + v));
        }
    }
    Multigraph::from_edge_list(a + b, &pairs).unwrap()
}

#[test]
fn check_09_coloring_flow_duality() {
    let group = z3();
    let mut graphs: Vec<Multigraph> = Vec::new();
    graphs.extend((3..=8).map(Multigraph::cycle));
    graphs.extend((4..=7).map(wheel));
    graphs.push(Multigraph::complete(4));
    // prism
    graphs.push(
        Multigraph::from_edge_list(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap(),
    );
    // cube
    graphs.push(
        Multigraph::from_edge_list(
            8,
            &[
                (0, 1), (1, 2), (2, 3), (3, 0),
                (4, 5), (5, 6), (6, 7), (7, 4),
                (0, 4), (1, 5), (2, 6), (3, 7),
            ],
        )
        .unwrap(),
    );
    // octahedron
    graphs.push(
        Multigraph::from_edge_list(
            6,
            &[
                (0, 2), (0, 3), (0, 4), (0, 5),
                (1, 2), (1, 3), (1, 4), (1, 5),
                (2, 4), (4, 3), (3, 5), (5, 2),
            ],
        )
        .unwrap(),
    );
    // pentagonal bipyramid
    let mut bipyramid: Vec<(usize, usize)> = (2..7).map(|v| (0, v)).collect();
    bipyramid.extend((2..7).map(|v| (1, v)));
    bipyramid.extend((2..7).map(|v| (v, if v == 6 { 2 } else { v + 1 })));
    graphs.push(Multigraph::from_edge_list(7, &bipyramid).unwrap());
    graphs.push(complete_bipartite(2, 3));
    graphs.push(complete_bipartite(2, 4));
    graphs.push(grid(3, 3));
    graphs.push(grid(2, 4));

    let mut plane_graphs: Vec<PlaneGraph> = graphs
        .into_iter()
        .map(|g| {
            assert!(g.is_2_connected(), "duality corpus stays 2-connected");
            PlaneGraph::new(g).unwrap()
        })
        .collect();
    for fourore in primal_4ore_catalog(7).unwrap() {
        plane_graphs.push(PlaneGraph::new(fourore).unwrap().dual().unwrap());
    }

    let mut disagreements = 0usize;
    for pg in &plane_graphs {
        let colorable = pg.graph().is_k_colorable(3);
        let dual = pg.dual().unwrap();
        let bg = BorderedGraph::with_zero_boundary(dual.graph().clone(), group.clone());
        if colorable != has_nz_flow(&bg).is_some() {
            disagreements += 1;
        }
    }
    let pass = disagreements == 0 && plane_graphs.len() >= 20;
    verdict(
        9,
        "3-colorability matches dual flow existence",
        pass,
        &format!(
            "{} plane graphs, {disagreements} disagreements",
            plane_graphs.len()
        ),
    );
}

#[test]
fn check_10_flow_count_group_independence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x66c1);
    let z4: Group = "4".parse().unwrap();
    let z22: Group = "2,2".parse().unwrap();
    let mut mismatches = 0usize;
    let trials = 50;
    for _ in 0..trials {
        let g = random_connected_graph(&mut rng, 2, 6, 8);
        let by_z4 = count_nz_flows(&BorderedGraph::with_zero_boundary(g.clone(), z4.clone()));
        let by_z22 = count_nz_flows(&BorderedGraph::with_zero_boundary(g.clone(), z22.clone()));
        let by_dc = count_nz_flows_dc(&g, 4);
        if by_z4 != by_z22 || by_z22 != by_dc {
            mismatches += 1;
        }
    }
    verdict(
        10,
        "flow counts agree across groups of order four",
        mismatches == 0,
        &format!("{trials} random graphs, {mismatches} mismatches"),
    );
}

#[test]
fn check_11_fast_brute_agreement() {
    let group = z3();
    let corpus: Vec<Multigraph> = (2..=5)
        .flat_map(|n| enumerate_connected_graphs(n).unwrap())
        .collect();
    let mut disagreements = 0usize;
    for g in &corpus {
        let bg = BorderedGraph::with_zero_boundary(g.clone(), group.clone());
        let fast = is_flow_critical(&bg, CriticalityMode::Fast).unwrap();
        let brute = is_flow_critical(&bg, CriticalityMode::Brute).unwrap();
        if fast.is_critical() != brute.is_critical() {
            disagreements += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xfab);
    let samples = 1000;
    for _ in 0..samples {
        let g = corpus[rng.random_range(0..corpus.len())].clone();
        let beta = random_boundary(&mut rng, &group, g.n(), true);
        let bg = BorderedGraph::new(g, group.clone(), beta).unwrap();
        let fast = is_flow_critical(&bg, CriticalityMode::Fast).unwrap();
        let brute = is_flow_critical(&bg, CriticalityMode::Brute).unwrap();
        if fast.is_critical() != brute.is_critical() {
            disagreements += 1;
        }
    }
    verdict(
        11,
        "fast criticality equals the all-partitions oracle",
        disagreements == 0,
        &format!(
            "{} zero-boundary graphs + {samples} sampled boundaries, {disagreements} disagreements",
            corpus.len()
        ),
    );
}

#[test]
fn check_12_flower_snark() {
    let start = Instant::now();
    let group: Group = "2,2".parse().unwrap();
    let g = flower_snark(5).unwrap();
    let bg = BorderedGraph::with_zero_boundary(g, group);
    let flowless = has_nz_flow(&bg).is_none();
    let critical = matches!(
        is_flow_critical(&bg, CriticalityMode::Fast).unwrap(),
        CriticalityVerdict::Critical
    );
    let elapsed = start.elapsed();
    let pass = flowless && critical && elapsed < Duration::from_secs(300);
    verdict(
        12,
        "flower snark J5 has no Klein-four flow and is critical",
        pass,
        &format!(
            "flowless={flowless} critical={critical}, {:.1}s",
            elapsed.as_secs_f64()
        ),
    );
}

#[test]
fn check_13_genus_subadditivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e7);
    let mut verified = 0usize;
    let mut failures = 0usize;
    let mut attempts = 0usize;
    while verified < 50 && attempts < 500 {
        attempts += 1;
        let g = random_connected_graph(&mut rng, 4, 8, 14);
        // grow a random connected induced part of size at least two
        let target = rng.random_range(2..g.n());
        let mut part = BTreeSet::from([rng.random_range(0..g.n())]);
        while part.len() < target {
            let frontier: Vec<usize> = part
                .iter()
                .flat_map(|&v| g.neighbors(v))
                .filter(|v| !part.contains(v))
                .collect();
            if frontier.is_empty() {
                break;
            }
            part.insert(frontier[rng.random_range(0..frontier.len())]);
        }
        if part.len() < 2 {
            continue;
        }
        match check_genus_subadditivity(&g, &part) {
            Ok(true) => verified += 1,
            Ok(false) => failures += 1,
            Err(GenusError::BudgetExceeded { .. }) => continue,
            Err(e) => panic!("subadditivity check errored: {e}"),
        }
    }
    verdict(
        13,
        "genus subadditivity over merged parts",
        failures == 0 && verified >= 50,
        &format!("{verified} instances verified, {failures} failures"),
    );
}

#[test]
fn check_14_contraction_transport() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a3);
    let groups: Vec<Group> = ["3", "2,2", "4"].iter().map(|s| s.parse().unwrap()).collect();
    let mut transported = 0usize;
    let mut failures = 0usize;
    let mut attempts = 0usize;
    while transported < 500 && attempts < 50_000 {
        attempts += 1;
        let g = random_connected_graph(&mut rng, 2, 6, 8);
        let group = groups[attempts % groups.len()].clone();
        let beta = random_boundary(&mut rng, &group, g.n(), false);
        let bg = match BorderedGraph::new(g, group, beta) {
            Ok(bg) => bg,
            Err(_) => continue,
        };
        let Some(flow) = has_nz_flow(&bg) else {
            continue;
        };
        // random proper partition: shuffle and cut into fewer parts than
        // vertices
        let n = bg.graph().n();
        if n < 2 {
            continue;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let part_count = rng.random_range(1..n);
        let mut parts: Vec<Vec<usize>> = vec![Vec::new(); part_count];
        for (i, v) in order.into_iter().enumerate() {
            parts[i % part_count].push(v);
        }
        let partition = Partition::from_parts(n, &parts).unwrap();
        let (contracted, _) = bg.contract(&partition);
        let moved = transport_flow_to_contraction(&flow, &bg, &partition, &contracted);
        if moved.validate(&contracted).is_err() {
            failures += 1;
        }
        transported += 1;
    }
    verdict(
        14,
        "flows survive transport to contractions",
        failures == 0 && transported >= 500,
        &format!("{transported} transports validated, {failures} failures"),
    );
}

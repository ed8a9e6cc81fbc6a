//! Flow-criticality: bordered graphs with no nowhere-zero flow whose every
//! proper contraction (onto connected parts) has one.
//!
//! Two decision modes. `Brute` quantifies over every proper partition with
//! connected parts, straight from the definition. `Fast` checks only
//! single-edge contractions, which suffices: flows survive further
//! contraction (restricting a flow to the surviving edges keeps conservation
//! and nonzeroness), and every proper partition with connected parts
//! contracts some edge first, so a flow for each edge contraction forces one
//! for each coarser quotient. The equivalence is itself under test, not just
//! assumed — see the property test at the bottom.

use crate::flow::{has_nz_flow, BorderedGraph, Flow};
use crate::graph::{Multigraph, Partition, VertexId};
use crate::group::{Group, GroupElement};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CriticalityError {
    #[error("criticality is defined for connected graphs only")]
    Disconnected,
    #[error("the bordered graph already has a nowhere-zero flow")]
    AlreadyHasFlow,
    #[error("boundary space too large to enumerate")]
    BoundarySpaceTooLarge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalityMode {
    /// Single-edge contractions only; equivalent to `Brute` and much faster.
    Fast,
    /// Every proper partition with connected parts, straight from the
    /// definition. Exponential; for cross-checking on small graphs.
    Brute,
}

/// Outcome of a criticality test, carrying the disqualifying witness when
/// there is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CriticalityVerdict {
    Critical,
    /// The graph itself has a nowhere-zero flow.
    HasFlow(Flow),
    /// A proper contraction with connected parts that has no flow.
    ContractionWithoutFlow(Partition),
}

impl CriticalityVerdict {
    pub fn is_critical(&self) -> bool {
        matches!(self, CriticalityVerdict::Critical)
    }
}

/// Distinct adjacent vertex pairs in first-edge-id order. Parallel edges
/// give the same contraction, so one representative suffices.
fn adjacent_pairs(g: &Multigraph) -> Vec<(VertexId, VertexId)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for e in g.edges() {
        if seen.insert((e.u, e.v)) {
            out.push((e.u, e.v));
        }
    }
    out
}

pub fn is_flow_critical(
    bg: &BorderedGraph,
    mode: CriticalityMode,
) -> Result<CriticalityVerdict, CriticalityError> {
    if !bg.graph().is_connected() {
        return Err(CriticalityError::Disconnected);
    }
    if let Some(f) = has_nz_flow(bg) {
        return Ok(CriticalityVerdict::HasFlow(f));
    }
    match mode {
        CriticalityMode::Fast => {
            for (u, v) in adjacent_pairs(bg.graph()) {
                let partition = Partition::merging_pair(bg.graph().n(), u, v);
                let (contracted, _) = bg.contract(&partition);
                if has_nz_flow(&contracted).is_none() {
                    return Ok(CriticalityVerdict::ContractionWithoutFlow(partition));
                }
            }
        }
        CriticalityMode::Brute => {
            for partition in Partition::enumerate_proper_g_connected(bg.graph()) {
                let (contracted, _) = bg.contract(&partition);
                if has_nz_flow(&contracted).is_none() {
                    return Ok(CriticalityVerdict::ContractionWithoutFlow(partition));
                }
            }
        }
    }
    Ok(CriticalityVerdict::Critical)
}

/// Contracts edges greedily (first in id order whose contraction still has
/// no flow) until the quotient is critical. Returns the critical bordered
/// quotient and the partition of the original vertices reaching it — the
/// singleton partition when the input is already critical.
pub fn find_flow_critical_contraction(
    bg: &BorderedGraph,
) -> Result<(BorderedGraph, Partition), CriticalityError> {
    if !bg.graph().is_connected() {
        return Err(CriticalityError::Disconnected);
    }
    if has_nz_flow(bg).is_some() {
        return Err(CriticalityError::AlreadyHasFlow);
    }
    let n = bg.graph().n();
    let mut labels: Vec<usize> = (0..n).collect();
    let mut current = bg.clone();
    'outer: loop {
        for (u, v) in adjacent_pairs(current.graph()) {
            let partition = Partition::merging_pair(current.graph().n(), u, v);
            let (contracted, map) = current.contract(&partition);
            if has_nz_flow(&contracted).is_none() {
                for l in labels.iter_mut() {
                    *l = map[*l];
                }
                current = contracted;
                continue 'outer;
            }
        }
        // no single-edge contraction lacks a flow, so the quotient is critical
        debug_assert!(matches!(
            is_flow_critical(&current, CriticalityMode::Fast),
            Ok(CriticalityVerdict::Critical)
        ));
        return Ok((current, Partition::from_labels(&labels)));
    }
}

/// All boundaries making `g` flow-critical, in lexicographic order of their
/// element indices (free values on every vertex but the last, which the
/// zero-sum condition forces). With `dedup_symmetry`, only one boundary per
/// orbit under graph automorphisms and global negation is kept — the
/// lexicographically least.
pub fn critical_boundaries(
    g: &Multigraph,
    group: &Group,
    dedup_symmetry: bool,
) -> Result<Vec<Vec<GroupElement>>, CriticalityError> {
    if !g.is_connected() {
        return Err(CriticalityError::Disconnected);
    }
    let n = g.n();
    let k = group.order();
    if n == 0 {
        return Ok(Vec::new());
    }
    let free = (n - 1) as u32;
    let total = k
        .checked_pow(free)
        .filter(|&t| t <= 100_000_000)
        .ok_or(CriticalityError::BoundarySpaceTooLarge)?;
    let automorphisms = if dedup_symmetry {
        g.canonical_certificate().automorphisms
    } else {
        Vec::new()
    };
    let mut out = Vec::new();
    for rank in 0..total {
        let mut beta = Vec::with_capacity(n);
        let mut r = rank;
        let mut sum = group.zero();
        for pos in 0..free {
            let place = k.pow(free - 1 - pos);
            let e = group.element_at(r / place);
            r %= place;
            sum = group.add(&sum, &e);
            beta.push(e);
        }
        beta.push(group.neg(&sum));
        if dedup_symmetry && !is_orbit_minimum(&beta, group, &automorphisms) {
            continue;
        }
        let bg = BorderedGraph::new(g.clone(), group.clone(), beta.clone())
            .expect("forced last value closes the sum");
        if is_flow_critical(&bg, CriticalityMode::Fast)?.is_critical() {
            out.push(beta);
        }
    }
    Ok(out)
}

/// Whether `beta` is the lexicographically least point of its orbit under
/// vertex automorphisms combined with negating every value. Criticality is
/// invariant under both, so orbit minima are canonical representatives.
fn is_orbit_minimum(beta: &[GroupElement], group: &Group, automorphisms: &[Vec<usize>]) -> bool {
    let key: Vec<usize> = beta.iter().map(|b| group.index_of(b)).collect();
    for perm in automorphisms {
        for negate in [false, true] {
            let mut image: Vec<usize> = vec![0; beta.len()];
            for (v, &pv) in perm.iter().enumerate() {
                let val = if negate {
                    group.neg(&beta[v])
                } else {
                    beta[v].clone()
                };
                image[pv] = group.index_of(&val);
            }
            if image < key {
                return false;
            }
        }
    }
    true
}

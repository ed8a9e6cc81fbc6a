//! Density functionals and edge-count bound predicates.
//!
//! Everything here is exact integer arithmetic: the potential
//! π = 5n − 2m + 5·genus, the deficiency functionals σ = 3n − m and
//! σ′ = 4n − m, the sparseness predicate (exceptional or π ≥ 9), partition
//! weights, and the per-graph report of the edge-count bounds. The bounds
//! are statements about flow-critical graphs, so each line carries a
//! `vacuous` marker when the caller has not asserted criticality — the raw
//! inequality is still recorded.

use crate::families::{is_exceptional, FamilyError};
use crate::graph::{Multigraph, Partition};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DensityError {
    #[error("genus unknown and the graph is not recognizably exceptional")]
    GenusUnknown,
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// One bound line: the verdict on the raw inequality, plus whether the
/// bound's hypothesis (flow-criticality) was actually asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub status: BoundStatus,
    pub vacuous: bool,
}

/// The four edge-count bounds, one verdict each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    /// 2m ≤ 5n + 5·genus − 8; needs the genus, else not applicable.
    pub genus_edge_bound: BoundCheck,
    /// m ≤ 3n − 5.
    pub edge_bound_3n_minus_5: BoundCheck,
    /// m ≤ 3n − 8; stated for n ≥ 7 only.
    pub edge_bound_3n_minus_8: BoundCheck,
    /// m ≤ 4n − 10; stated for every critical graph except K₂.
    pub edge_bound_4n_minus_10: BoundCheck,
}

impl BoundsReport {
    /// The lines with their report keys, for tabular output.
    pub fn entries(&self) -> [(&'static str, BoundCheck); 4] {
        [
            ("genus_edge_bound", self.genus_edge_bound),
            ("edge_bound_3n_minus_5", self.edge_bound_3n_minus_5),
            ("edge_bound_3n_minus_8", self.edge_bound_3n_minus_8),
            ("edge_bound_4n_minus_10", self.edge_bound_4n_minus_10),
        ]
    }

    pub fn any_failure(&self) -> bool {
        self.entries()
            .iter()
            .any(|(_, check)| check.status == BoundStatus::Fail && !check.vacuous)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    pub n: usize,
    pub m: usize,
    pub genus: Option<usize>,
    /// π = 5n − 2m + 5·genus; unknown exactly when the genus is.
    pub pi: Option<i64>,
    /// σ = 3n − m.
    pub sigma: i64,
    /// σ′ = 4n − m.
    pub sigma_prime: i64,
    pub bounds: BoundsReport,
}

fn potential(n: usize, m: usize, genus: usize) -> i64 {
    5 * n as i64 - 2 * m as i64 + 5 * genus as i64
}

/// All functionals of one graph. Bounds are reported with the vacuous
/// marker set; callers who know the graph is flow-critical overwrite them
/// via [`check_bounds`].
pub fn density_functionals(g: &Multigraph, genus: Option<usize>) -> DensityReport {
    let (n, m) = (g.n(), g.m());
    DensityReport {
        n,
        m,
        genus,
        pi: genus.map(|gen| potential(n, m, gen)),
        sigma: 3 * n as i64 - m as i64,
        sigma_prime: 4 * n as i64 - m as i64,
        bounds: check_bounds(g, genus, false),
    }
}

/// The four bound lines for one graph. `critical` states whether the
/// caller has established flow-criticality; without it every line is
/// marked vacuous, since the bounds only claim anything for critical
/// graphs.
pub fn check_bounds(g: &Multigraph, genus: Option<usize>, critical: bool) -> BoundsReport {
    let n = g.n() as i64;
    let m = g.m() as i64;
    let vacuous = !critical;
    let verdict = |ok: bool| BoundCheck {
        status: if ok { BoundStatus::Pass } else { BoundStatus::Fail },
        vacuous,
    };
    let na = BoundCheck {
        status: BoundStatus::NotApplicable,
        vacuous,
    };
    BoundsReport {
        genus_edge_bound: match genus {
            Some(gen) => verdict(2 * m <= 5 * n + 5 * gen as i64 - 8),
            None => na,
        },
        edge_bound_3n_minus_5: verdict(m <= 3 * n - 5),
        edge_bound_3n_minus_8: if n >= 7 { verdict(m <= 3 * n - 8) } else { na },
        edge_bound_4n_minus_10: if g.n() == 2 && g.m() == 1 {
            na
        } else {
            verdict(m <= 4 * n - 10)
        },
    }
}

/// Sparse means exceptional or π ≥ 9. The π test needs the genus; the
/// exceptional test needs the graph within the recognition cap. When
/// neither route can decide, the unknown is an error, never a guess.
pub fn is_sparse(g: &Multigraph, genus: Option<usize>) -> Result<bool, DensityError> {
    if let Some(gen) = genus {
        if potential(g.n(), g.m(), gen) >= 9 {
            return Ok(true);
        }
        return Ok(is_exceptional(g)?);
    }
    match is_exceptional(g) {
        Ok(true) => Ok(true),
        Ok(false) => Err(DensityError::GenusUnknown),
        Err(e) => Err(e.into()),
    }
}

/// Partition weight w = 4·n_P + 3·k_P, where k_P counts parts inducing an
/// exceptional subgraph and n_P the parts of size ≥ 2 that do not;
/// singletons contribute nothing. Returns (n_P, k_P, w).
pub fn partition_weight(
    g: &Multigraph,
    p: &Partition,
) -> Result<(usize, usize, usize), DensityError> {
    let mut n_p = 0usize;
    let mut k_p = 0usize;
    for part in p.parts() {
        if part.len() <= 1 {
            continue;
        }
        let (sub, _) = g.induced(&part.iter().copied().collect());
        if is_exceptional(&sub)? {
            k_p += 1;
        } else {
            n_p += 1;
        }
    }
    Ok((n_p, k_p, 4 * n_p + 3 * k_p))
}

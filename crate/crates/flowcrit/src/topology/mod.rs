//! Exact Euler genus and planarity at desk scale.
//!
//! An embedding is a rotation system — a cyclic order of edge ends at each
//! vertex — plus a sign per edge; a negative sign means the edge crosses an
//! orientation-reversing patch of the surface. Faces come from the standard
//! tracing rule on (dart, side) flags, and Euler's relation turns the face
//! count into the Euler genus of the embedding (2 per handle, 1 per
//! crosscap). The minimum over all embeddings is found by inserting edges
//! one at a time into partial embeddings, with two exact prunes: deleting
//! an edge never increases an embedding's genus, so a partial embedding
//! already above the target can be abandoned; and the target iterates
//! upward from Euler's-formula and planarity lower bounds, so the first
//! success is the minimum.
//!
//! Graphs are first split into blocks (genus adds over blocks), and within
//! a block, parallel edges and degree-2 vertices are reduced away and
//! re-inserted into the found embedding afterwards. None of the assembly
//! arithmetic is taken on faith: every reversal step and the final splice
//! are re-traced and checked against the expected face count.
//!
//! Everything that searches for embeddings draws from one step budget, and
//! running out produces an explicit "unknown" with a defensible lower
//! bound — never a guess.

mod planarity;

pub use planarity::{is_planar, plane_embedding};

use crate::graph::{Edge, EdgeId, Multigraph, Partition, VertexId};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Default face-tracing step budget for a genus computation.
pub const DEFAULT_GENUS_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenusError {
    #[error("genus is computed for connected graphs only")]
    Disconnected,
    #[error("the selected vertex set must induce a connected subgraph")]
    PartNotConnected,
    #[error("face-tracing budget exhausted; genus is at least {lower_bound}")]
    BudgetExceeded { lower_bound: usize },
}

/// Cyclic order of incident edges at every vertex plus the set of
/// sign-reversed edges. A vertex with no incident edges has an empty
/// rotation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    pub rotations: Vec<Vec<EdgeId>>,
    pub flipped: BTreeSet<EdgeId>,
}

impl RotationSystem {
    /// The rotation system induced by edge order — an arbitrary but valid
    /// starting embedding.
    pub fn from_edge_order(g: &Multigraph) -> Self {
        let mut rotations = vec![Vec::new(); g.n()];
        for e in g.edges() {
            rotations[e.u].push(e.id);
            rotations[e.v].push(e.id);
        }
        RotationSystem {
            rotations,
            flipped: BTreeSet::new(),
        }
    }

    /// Checks that each rotation is a permutation of the incident edges.
    pub fn is_valid_for(&self, g: &Multigraph) -> bool {
        if self.rotations.len() != g.n() {
            return false;
        }
        for v in 0..g.n() {
            let mut expected: Vec<EdgeId> = g.incident_edges(v).map(|e| e.id).collect();
            let mut got = self.rotations[v].clone();
            expected.sort_unstable();
            got.sort_unstable();
            if expected != got {
                return false;
            }
        }
        self.flipped.iter().all(|&id| g.edge(id).is_ok())
    }

    /// Number of faces of this embedding of `g` (unbudgeted; a single trace
    /// is linear in the graph).
    pub fn face_count(&self, g: &Multigraph) -> usize {
        let mut unlimited = u64::MAX;
        trace_faces(g.n(), g.edges(), &self.rotations, &self.flipped, &mut unlimited)
            .expect("single trace cannot exhaust an unlimited budget")
    }
}

/// An embedding together with the genus it attains; the face count makes
/// Euler's relation checkable without trusting the search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusCertificate {
    pub genus: usize,
    pub embedding: RotationSystem,
    pub face_count: usize,
}

impl GenusCertificate {
    /// Re-traces the embedding and re-checks Euler's relation
    /// |V| − |E| + F = 2 − genus. Independent of how the certificate was
    /// produced.
    pub fn verify(&self, g: &Multigraph) -> bool {
        if !g.is_connected() || !self.embedding.is_valid_for(g) {
            return false;
        }
        let f = self.embedding.face_count(g);
        f == self.face_count
            && (g.n() as i64) - (g.m() as i64) + (f as i64) == 2 - (self.genus as i64)
    }
}

/// Traces all faces of a (possibly partial) embedding, drawing one budget
/// unit per flag step. Flags are (dart, side) pairs; every face is traced
/// once per side, so the orbit count halves into the face count.
fn trace_faces(
    n: usize,
    edges: &[Edge],
    rotations: &[Vec<EdgeId>],
    flipped: &BTreeSet<EdgeId>,
    budget: &mut u64,
) -> Result<usize, GenusError> {
    let m = edges.len();
    if m == 0 {
        return Ok(if n == 0 { 0 } else { 1 });
    }
    let mut id_to_idx = BTreeMap::new();
    for (i, e) in edges.iter().enumerate() {
        id_to_idx.insert(e.id, i);
    }
    let mut pos: Vec<BTreeMap<EdgeId, usize>> = vec![BTreeMap::new(); n];
    for (v, rot) in rotations.iter().enumerate() {
        for (i, &id) in rot.iter().enumerate() {
            pos[v].insert(id, i);
        }
    }
    let flip: Vec<bool> = edges.iter().map(|e| flipped.contains(&e.id)).collect();
    let nflags = 4 * m;
    let mut seen = vec![false; nflags];
    let mut orbits = 0usize;
    for start in 0..nflags {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut f = start;
        loop {
            if *budget == 0 {
                return Err(GenusError::BudgetExceeded { lower_bound: 0 });
            }
            *budget -= 1;
            seen[f] = true;
            let side = f & 1;
            let dart = f >> 1;
            let dir = dart & 1;
            let eidx = dart >> 1;
            let e = &edges[eidx];
            let head = if dir == 0 { e.v } else { e.u };
            let side2 = side ^ usize::from(flip[eidx]);
            let rot = &rotations[head];
            let i = pos[head][&e.id];
            let j = if side2 == 0 {
                (i + 1) % rot.len()
            } else {
                (i + rot.len() - 1) % rot.len()
            };
            let next_idx = id_to_idx[&rot[j]];
            let next_dir = usize::from(edges[next_idx].u != head);
            f = (((next_idx << 1) | next_dir) << 1) | side2;
            if f == start {
                break;
            }
        }
    }
    debug_assert_eq!(orbits % 2, 0, "the two sides pair faces up");
    Ok(orbits / 2)
}

/// Genus of an embedding of a connected graph on the vertices that carry an
/// edge: 2 − |V| + |E| − F.
fn scheme_genus(active_vertices: usize, m: usize, faces: usize) -> usize {
    let g = 2 + m as i64 - active_vertices as i64 - faces as i64;
    debug_assert!(g >= 0, "no embedding beats the sphere (got genus {g})");
    g as usize
}

/// Exact Euler genus with the default tracing budget.
pub fn euler_genus(g: &Multigraph) -> Result<GenusCertificate, GenusError> {
    euler_genus_with_budget(g, DEFAULT_GENUS_BUDGET)
}

/// Exact Euler genus of a connected graph; `budget` caps the total number
/// of face-tracing steps before the search declares itself out of its depth
/// and reports a lower bound instead.
pub fn euler_genus_with_budget(
    g: &Multigraph,
    budget: u64,
) -> Result<GenusCertificate, GenusError> {
    if !g.is_connected() {
        return Err(GenusError::Disconnected);
    }
    let mut budget = budget;
    let blocks = g.blocks();
    let block_graphs: Vec<Multigraph> = blocks
        .iter()
        .map(|ids| g.subgraph_of_edges(&ids.iter().copied().collect()))
        .collect();
    let formula_lbs: Vec<usize> = block_graphs.iter().map(formula_lower_bound).collect();

    let mut total_genus = 0usize;
    let mut total_faces = 0usize;
    let mut rotations: Vec<Vec<EdgeId>> = vec![Vec::new(); g.n()];
    let mut flipped: BTreeSet<EdgeId> = BTreeSet::new();
    for (bi, h) in block_graphs.iter().enumerate() {
        match block_genus(h, &mut budget) {
            Ok((genus, scheme, faces)) => {
                total_genus += genus;
                total_faces += faces;
                for v in 0..g.n() {
                    // concatenation splices the block's cyclic order in one
                    // contiguous run, which merges exactly one face pair at
                    // a shared cut vertex
                    rotations[v].extend(scheme.rotations[v].iter().copied());
                }
                flipped.extend(scheme.flipped.iter().copied());
            }
            Err(GenusError::BudgetExceeded { lower_bound }) => {
                let rest: usize = formula_lbs[bi + 1..].iter().sum();
                return Err(GenusError::BudgetExceeded {
                    lower_bound: total_genus + lower_bound.max(formula_lbs[bi]) + rest,
                });
            }
            Err(e) => return Err(e),
        }
    }
    let scheme = RotationSystem { rotations, flipped };
    if g.m() == 0 {
        // a single vertex: one face, genus zero
        return Ok(GenusCertificate {
            genus: 0,
            embedding: scheme,
            face_count: 1,
        });
    }
    let expected_faces = total_faces - (blocks.len() - 1);
    let traced = scheme.face_count(g);
    assert_eq!(
        traced, expected_faces,
        "block splice must merge one face per extra block"
    );
    let cert = GenusCertificate {
        genus: total_genus,
        embedding: scheme,
        face_count: traced,
    };
    debug_assert!(cert.verify(g));
    Ok(cert)
}

/// Euler-formula lower bound on the genus of a block, computed on its
/// simple skeleton: a simple graph on ≥ 3 vertices has F ≤ 2m/3.
fn formula_lower_bound(h: &Multigraph) -> usize {
    let active = (0..h.n()).filter(|&v| h.degree(v) > 0).count();
    if active < 3 {
        return 0;
    }
    let distinct: BTreeSet<(VertexId, VertexId)> = h.edges().iter().map(|e| (e.u, e.v)).collect();
    let need = distinct.len() as i64 - 3 * active as i64 + 6;
    (need.div_euclid(3) + i64::from(need.rem_euclid(3) > 0)).max(0) as usize
}

/// One step of shrinking a block to its kernel.
enum Reduction {
    /// `removed` was parallel to `kept`.
    RemoveParallel { removed: Edge, kept: EdgeId },
    /// Degree-2 vertex suppressed: `e1` and `e2` met at `vertex`; the
    /// replacement edge spans their far endpoints.
    SuppressDeg2 {
        vertex: VertexId,
        e1: Edge,
        e2: Edge,
        replacement: Edge,
    },
}

/// Genus, embedding, and face count of one block. The block shares vertex
/// labels and edge ids with the ambient graph; vertices outside it keep
/// empty rotations.
fn block_genus(
    h: &Multigraph,
    budget: &mut u64,
) -> Result<(usize, RotationSystem, usize), GenusError> {
    // planar blocks short-circuit through the polynomial embedder, leaving
    // the insertion search to blocks that genuinely need a higher surface
    if let Some(scheme) = plane_embedding(h) {
        let faces = scheme.face_count(h);
        return Ok((0, scheme, faces));
    }
    // shrink to a kernel of minimum degree ≥ 3 (or a single edge), keeping
    // a snapshot of the graph before each step for the verified replay
    let mut work = h.clone();
    let mut log: Vec<(Multigraph, Reduction)> = Vec::new();
    loop {
        if let Some((kept, extra)) = first_parallel_extra(&work) {
            let snapshot = work.clone();
            let removed = *work.edge(extra).expect("parallel edge");
            work = work.delete_edge(extra).expect("parallel edge");
            log.push((snapshot, Reduction::RemoveParallel { removed, kept }));
            continue;
        }
        if work.m() > 1 {
            if let Some(v) = (0..work.n()).find(|&v| work.degree(v) == 2) {
                let snapshot = work.clone();
                let inc: Vec<Edge> = work.incident_edges(v).copied().collect();
                let (e1, e2) = (inc[0], inc[1]);
                let (a, b) = (e1.other(v), e2.other(v));
                debug_assert_ne!(a, b, "a parallel pair survived dedup");
                work = work.delete_edge(e1.id).expect("incident edge");
                work = work.delete_edge(e2.id).expect("incident edge");
                let (next, rid) = work.add_edge(a, b).expect("distinct endpoints");
                let replacement = *next.edge(rid).expect("fresh edge");
                work = next;
                log.push((
                    snapshot,
                    Reduction::SuppressDeg2 {
                        vertex: v,
                        e1,
                        e2,
                        replacement,
                    },
                ));
                continue;
            }
        }
        break;
    }

    let (genus, mut scheme) = kernel_genus(&work, budget)?;
    let mut faces = scheme.face_count(&work);

    // replay the reductions newest-first; each undo re-traces the snapshot
    // and must land exactly on the predicted face count
    for (snapshot, step) in log.iter().rev() {
        match step {
            Reduction::SuppressDeg2 {
                vertex,
                e1,
                e2,
                replacement,
            } => {
                let a = e1.other(*vertex);
                let b = e2.other(*vertex);
                replace_entry(&mut scheme.rotations[a], replacement.id, e1.id);
                replace_entry(&mut scheme.rotations[b], replacement.id, e2.id);
                scheme.rotations[*vertex] = vec![e1.id, e2.id];
                if scheme.flipped.remove(&replacement.id) {
                    scheme.flipped.insert(e1.id);
                }
                // subdividing an edge disturbs no face
                assert_eq!(
                    scheme.face_count(snapshot),
                    faces,
                    "subdividing must preserve every face"
                );
            }
            Reduction::RemoveParallel { removed, kept } => {
                insert_parallel_as_bigon(&mut scheme, removed, *kept, snapshot, faces + 1);
                faces += 1;
            }
        }
    }
    let active = (0..h.n()).filter(|&v| h.degree(v) > 0).count();
    debug_assert_eq!(scheme_genus(active, h.m(), faces), genus);
    Ok((genus, scheme, faces))
}

fn replace_entry(rot: &mut [EdgeId], from: EdgeId, to: EdgeId) {
    for slot in rot.iter_mut() {
        if *slot == from {
            *slot = to;
            return;
        }
    }
    panic!("rotation does not contain edge {from}");
}

/// Re-inserts `removed` parallel to `kept` so that the two strands bound a
/// bigon, keeping the genus unchanged. The right relative placement depends
/// on the kept edge's sign, so the four candidates are tried and the trace
/// arbitrates.
fn insert_parallel_as_bigon(
    scheme: &mut RotationSystem,
    removed: &Edge,
    kept: EdgeId,
    graph: &Multigraph,
    expected_faces: usize,
) {
    let (u, v) = (removed.u, removed.v);
    let pu = scheme.rotations[u]
        .iter()
        .position(|&id| id == kept)
        .expect("kept edge present at u");
    let pv = scheme.rotations[v]
        .iter()
        .position(|&id| id == kept)
        .expect("kept edge present at v");
    if scheme.flipped.contains(&kept) {
        scheme.flipped.insert(removed.id);
    }
    for du in [0usize, 1] {
        for dv in [0usize, 1] {
            scheme.rotations[u].insert(pu + du, removed.id);
            scheme.rotations[v].insert(pv + dv, removed.id);
            if scheme.face_count(graph) == expected_faces {
                return;
            }
            scheme.rotations[u].remove(pu + du);
            scheme.rotations[v].remove(pv + dv);
        }
    }
    unreachable!("some placement beside the kept strand always bounds a bigon");
}

/// First parallel pair `(kept, extra)` in edge order, if any.
fn first_parallel_extra(g: &Multigraph) -> Option<(EdgeId, EdgeId)> {
    let mut seen: BTreeMap<(VertexId, VertexId), EdgeId> = BTreeMap::new();
    for e in g.edges() {
        if let Some(&kept) = seen.get(&(e.u, e.v)) {
            return Some((kept, e.id));
        }
        seen.insert((e.u, e.v), e.id);
    }
    None
}

/// Exact genus of a reduced kernel (simple with minimum active degree ≥ 3,
/// or a single edge), by iterative-deepening edge insertion.
fn kernel_genus(
    k: &Multigraph,
    budget: &mut u64,
) -> Result<(usize, RotationSystem), GenusError> {
    if k.m() <= 1 {
        return Ok((0, RotationSystem::from_edge_order(k)));
    }
    let mut lb = formula_lower_bound(k);
    if lb == 0 && !is_planar(k) {
        lb = 1;
    }
    let order = insertion_order(k);
    let mut target = lb;
    loop {
        let mut search = EmbedSearch {
            g: k,
            order: &order,
            rotations: vec![Vec::new(); k.n()],
            flipped: BTreeSet::new(),
            placed: Vec::with_capacity(k.m()),
            active: vec![false; k.n()],
            active_n: 0,
            target,
            budget,
        };
        match search.descend(0) {
            Ok(true) => {
                let scheme = RotationSystem {
                    rotations: search.rotations,
                    flipped: search.flipped,
                };
                return Ok((target, scheme));
            }
            Ok(false) => target += 1,
            Err(GenusError::BudgetExceeded { .. }) => {
                // every smaller target was searched to completion
                return Err(GenusError::BudgetExceeded {
                    lower_bound: target,
                });
            }
            Err(e) => return Err(e),
        }
    }
}

/// Edge indexes ordered so that each new edge touches an already-placed
/// vertex and cycles close as early as possible: DFS tree edges interleaved
/// with the back edges they complete. The second component marks tree
/// edges, whose signs can be fixed positive by switching.
fn insertion_order(g: &Multigraph) -> Vec<(usize, bool)> {
    let adj = g.incidence_lists();
    let root = (0..g.n()).max_by_key(|&v| g.degree(v)).unwrap_or(0);
    let mut visited = vec![false; g.n()];
    let mut emitted = vec![false; g.m()];
    let mut order = Vec::with_capacity(g.m());
    let mut stack = vec![root];
    visited[root] = true;
    while let Some(u) = stack.pop() {
        for &(w, idx) in &adj[u] {
            if !emitted[idx] && visited[w] {
                emitted[idx] = true;
                order.push((idx, false));
            }
        }
        for &(w, idx) in &adj[u] {
            if !visited[w] {
                visited[w] = true;
                emitted[idx] = true;
                order.push((idx, true));
                stack.push(w);
            }
        }
    }
    debug_assert_eq!(order.len(), g.m(), "kernels are connected");
    order
}

struct EmbedSearch<'a> {
    g: &'a Multigraph,
    order: &'a [(usize, bool)],
    rotations: Vec<Vec<EdgeId>>,
    flipped: BTreeSet<EdgeId>,
    placed: Vec<Edge>,
    active: Vec<bool>,
    active_n: usize,
    target: usize,
    budget: &'a mut u64,
}

impl EmbedSearch<'_> {
    fn descend(&mut self, pos: usize) -> Result<bool, GenusError> {
        if pos == self.order.len() {
            return Ok(true);
        }
        let (eidx, is_tree) = self.order[pos];
        let e = self.g.edges()[eidx];
        // inserting into each gap of the current rotation covers every
        // distinct cyclic extension exactly once
        let slots_u = self.rotations[e.u].len().max(1);
        let slots_v = self.rotations[e.v].len().max(1);
        // a sign matters only off the spanning tree, and a genus-0 target
        // never needs one (the sphere is orientable)
        let signs: &[bool] = if is_tree || self.target == 0 {
            &[false]
        } else {
            &[false, true]
        };
        let mut children: Vec<(usize, usize, usize, bool)> = Vec::new();
        for su in 0..slots_u {
            for sv in 0..slots_v {
                for &flip in signs {
                    self.place(e, su, sv, flip);
                    let genus = self.partial_genus()?;
                    self.unplace(e, su, sv, flip);
                    if genus <= self.target {
                        children.push((genus, su, sv, flip));
                    }
                }
            }
        }
        children.sort_unstable();
        for (_, su, sv, flip) in children {
            self.place(e, su, sv, flip);
            if self.descend(pos + 1)? {
                return Ok(true);
            }
            self.unplace(e, su, sv, flip);
        }
        Ok(false)
    }

    fn place(&mut self, e: Edge, su: usize, sv: usize, flip: bool) {
        self.rotations[e.u].insert(su, e.id);
        self.rotations[e.v].insert(sv, e.id);
        if flip {
            self.flipped.insert(e.id);
        }
        self.placed.push(e);
        for w in [e.u, e.v] {
            if !self.active[w] {
                self.active[w] = true;
                self.active_n += 1;
            }
        }
    }

    fn unplace(&mut self, e: Edge, su: usize, sv: usize, flip: bool) {
        debug_assert_eq!(self.rotations[e.u][su], e.id);
        debug_assert_eq!(self.rotations[e.v][sv], e.id);
        self.rotations[e.u].remove(su);
        self.rotations[e.v].remove(sv);
        if flip {
            self.flipped.remove(&e.id);
        }
        self.placed.pop();
        for w in [e.u, e.v] {
            if self.rotations[w].is_empty() && self.active[w] {
                self.active[w] = false;
                self.active_n -= 1;
            }
        }
    }

    /// Genus of the partial embedding; the insertion order keeps the placed
    /// subgraph connected, so Euler's relation applies directly.
    fn partial_genus(&mut self) -> Result<usize, GenusError> {
        let faces = trace_faces(
            self.g.n(),
            &self.placed,
            &self.rotations,
            &self.flipped,
            self.budget,
        )?;
        Ok(scheme_genus(self.active_n, self.placed.len(), faces))
    }
}

/// Checks g(G) ≥ g(G/B) + g(G[B]) by computing all three genera exactly.
pub fn check_genus_subadditivity(
    g: &Multigraph,
    b: &BTreeSet<VertexId>,
) -> Result<bool, GenusError> {
    check_genus_subadditivity_with_budget(g, b, DEFAULT_GENUS_BUDGET)
}

pub fn check_genus_subadditivity_with_budget(
    g: &Multigraph,
    b: &BTreeSet<VertexId>,
    budget: u64,
) -> Result<bool, GenusError> {
    let (sub, _) = g.induced(b);
    if !sub.is_connected() {
        return Err(GenusError::PartNotConnected);
    }
    let mut parts: Vec<Vec<VertexId>> = vec![b.iter().copied().collect()];
    parts.extend((0..g.n()).filter(|v| !b.contains(v)).map(|v| vec![v]));
    let partition = Partition::from_parts(g.n(), &parts).expect("parts cover the vertex set");
    let (quotient, _) = g.contract(&partition);
    let whole = euler_genus_with_budget(g, budget)?.genus;
    let contracted = euler_genus_with_budget(&quotient, budget)?.genus;
    let inside = euler_genus_with_budget(&sub, budget)?.genus;
    Ok(whole >= contracted + inside)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn genus_of(g: &Multigraph) -> usize {
        let cert = euler_genus(g).expect("within budget");
        assert!(cert.verify(g));
        cert.genus
    }

    #[test]
    fn planar_staples_have_genus_zero() {
        assert_eq!(genus_of(&Multigraph::complete(4)), 0);
        assert_eq!(genus_of(&Multigraph::cycle(5)), 0);
        assert_eq!(genus_of(&Multigraph::path(6)), 0);
        assert_eq!(genus_of(&Multigraph::empty(1)), 0);
        let theta = Multigraph::from_edge_list(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(genus_of(&theta), 0);
    }

    #[test]
    fn small_nonplanar_classics() {
        assert_eq!(genus_of(&Multigraph::complete(5)), 1);
        let k33 = Multigraph::from_edge_list(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(genus_of(&k33), 1);
        assert_eq!(genus_of(&Multigraph::complete(6)), 1);
    }

    #[test]
    fn genus_adds_over_blocks() {
        // two K5's sharing a vertex
        let mut pairs = Vec::new();
        for a in 0..5 {
            for b in (a + 1)..5 {
                pairs.push((a, b));
            }
        }
        for a in 4..9 {
            for b in (a + 1)..9 {
                pairs.push((a, b));
            }
        }
        let g = Multigraph::from_edge_list(9, &pairs).unwrap();
        assert_eq!(genus_of(&g), 2);
    }

    #[test]
    fn reductions_round_trip_through_the_embedding() {
        // K5 with every edge subdivided once still has genus 1
        let base = Multigraph::complete(5);
        let mut pairs = Vec::new();
        let mut next = 5;
        for e in base.edges() {
            pairs.push((e.u, next));
            pairs.push((next, e.v));
            next += 1;
        }
        let subdivided = Multigraph::from_edge_list(next, &pairs).unwrap();
        assert_eq!(genus_of(&subdivided), 1);
        // a doubled edge on K5 changes nothing either
        let (doubled, _) = Multigraph::complete(5).add_edge(0, 1).unwrap();
        assert_eq!(genus_of(&doubled), 1);
    }

    #[test]
    fn disconnected_is_refused() {
        let g = Multigraph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(euler_genus(&g).unwrap_err(), GenusError::Disconnected);
    }

    #[test]
    fn budget_runs_out_honestly() {
        let g = Multigraph::complete(6);
        match euler_genus_with_budget(&g, 50) {
            Err(GenusError::BudgetExceeded { lower_bound }) => {
                assert!(lower_bound >= 1, "the formula bound for K6 is 1");
            }
            other => panic!("a tiny budget should fail, got {other:?}"),
        }
    }

    #[test]
    fn subadditivity_on_known_cases() {
        let k5 = Multigraph::complete(5);
        let triangle: BTreeSet<usize> = [0, 1, 2].into();
        assert!(check_genus_subadditivity(&k5, &triangle).unwrap());
        let single: BTreeSet<usize> = [3].into();
        assert!(check_genus_subadditivity(&k5, &single).unwrap());
        // contracting one K5 of a two-K5 chain leaves the other intact
        let mut pairs = Vec::new();
        for a in 0..5 {
            for b in (a + 1)..5 {
                pairs.push((a, b));
            }
        }
        for a in 4..9 {
            for b in (a + 1)..9 {
                pairs.push((a, b));
            }
        }
        let g = Multigraph::from_edge_list(9, &pairs).unwrap();
        let b: BTreeSet<usize> = (0..5).collect();
        assert!(check_genus_subadditivity(&g, &b).unwrap());
    }

    #[test]
    fn certificates_expose_their_embeddings() {
        let g = Multigraph::cycle(4);
        let cert = euler_genus(&g).unwrap();
        assert_eq!(cert.face_count, 2);
        assert!(cert.embedding.is_valid_for(&g));
        let mut bad = cert.clone();
        bad.face_count += 1;
        assert!(!bad.verify(&g));
    }

    #[test]
    fn planarity_and_genus_zero_coincide() {
        let samples = [
            Multigraph::complete(4),
            Multigraph::complete(5),
            Multigraph::cycle(6),
            Multigraph::from_edge_list(
                6,
                &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
            )
            .unwrap(),
        ];
        for g in &samples {
            assert_eq!(is_planar(g), genus_of(g) == 0);
        }
    }
}

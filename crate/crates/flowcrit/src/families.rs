//! The extremal graph families: Ore sums, plane gluings, the dual-4-Ore
//! and 4-Ore catalogs, exceptional-graph recognition, the augmented
//! complete bipartite family, and flower snarks.
//!
//! The two catalogs are breadth-first closures: 4-Ore graphs are generated
//! from K₄ by Ore sums, dual 4-Ore graphs from plane drawings of K₄ by
//! gluings, both deduplicated by canonical form. Gluing inserts one plane
//! graph into a face of another, and the abstract result depends only on
//! the chosen vertices and edge — not on which face hosts the insertion —
//! so the closure stays complete as long as every vertex pair that is
//! cofacial in *some* plane embedding is offered. A pair (u, v) admits such
//! an embedding exactly when u and v are adjacent or the graph plus a uv
//! edge is still planar, and in the latter case re-embedding with a helper
//! edge produces a witness drawing to glue into.

use crate::graph::{encode_sparse6, EdgeId, GraphError, Multigraph, VertexId};
use crate::topology::{plane_embedding, GenusError, RotationSystem};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::{LazyLock, Mutex};
use thiserror::Error;

/// Largest vertex count either catalog will generate.
pub const CATALOG_CAP: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("graph is not planar")]
    NotPlanar,
    #[error("vertices {0} and {1} share no face of this embedding")]
    NotCofacial(VertexId, VertexId),
    #[error("gluing must identify two distinct vertices")]
    IdentifyLoops,
    #[error("no placement of the inserted drawing closes up to a plane embedding")]
    EmbeddingFailed,
    #[error("both sides of the split must keep at least one edge")]
    EmptySplitSide,
    #[error("edge {0} is not incident with the split vertex")]
    SplitEdgeNotAtVertex(EdgeId),
    #[error("construction requires 2-connected inputs")]
    NotTwoConnected,
    #[error("graphs on {n} vertices are beyond the catalog cap of {cap}")]
    AboveCatalogCap { n: usize, cap: usize },
    #[error("{family} requires {requirement}, got {got}")]
    BadParameter {
        family: &'static str,
        requirement: &'static str,
        got: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Topology(#[from] GenusError),
}

/// A connected multigraph together with one plane (genus-0) embedding and
/// the face walks derived from it. All rotations are sign-free: a plane
/// embedding is orientable, so the signs normalize away.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: Multigraph,
    embedding: RotationSystem,
    /// Each face as its boundary walk of (tail vertex, edge) darts.
    faces: Vec<Vec<(VertexId, EdgeId)>>,
}

impl PlaneGraph {
    /// Embeds the graph in the plane, or reports that none exists.
    pub fn new(graph: Multigraph) -> Result<Self, FamilyError> {
        if !graph.is_connected() {
            return Err(FamilyError::Topology(GenusError::Disconnected));
        }
        let scheme = plane_embedding(&graph).ok_or(FamilyError::NotPlanar)?;
        Self::from_embedding(graph, scheme)
    }

    /// Wraps an explicit embedding after checking it really is plane.
    pub fn from_embedding(
        graph: Multigraph,
        embedding: RotationSystem,
    ) -> Result<Self, FamilyError> {
        if !graph.is_connected() {
            return Err(FamilyError::Topology(GenusError::Disconnected));
        }
        if !embedding.is_valid_for(&graph) || !embedding.flipped.is_empty() {
            return Err(FamilyError::EmbeddingFailed);
        }
        let faces = trace_dart_faces(&graph, &embedding);
        let euler = graph.n() as i64 - graph.m() as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(FamilyError::NotPlanar);
        }
        Ok(PlaneGraph {
            graph,
            embedding,
            faces,
        })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn embedding(&self) -> &RotationSystem {
        &self.embedding
    }

    /// Face boundary walks; each entry is the dart (tail vertex, edge id).
    pub fn faces(&self) -> &[Vec<(VertexId, EdgeId)>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Whether some face of this embedding has both vertices on its walk.
    pub fn cofacial(&self, u: VertexId, v: VertexId) -> bool {
        self.faces.iter().any(|walk| {
            let mut has_u = false;
            let mut has_v = false;
            for &(tail, _) in walk {
                has_u |= tail == u;
                has_v |= tail == v;
            }
            has_u && has_v
        })
    }

    /// The plane dual: one vertex per face, one edge per edge. Dual edge
    /// `i` crosses `self.graph().edges()[i]`. Requires a bridgeless graph,
    /// since a bridge has the same face on both sides.
    pub fn dual(&self) -> Result<PlaneGraph, FamilyError> {
        if !self.graph.bridges().is_empty() || self.graph.n() < 2 {
            return Err(FamilyError::NotTwoConnected);
        }
        // face index of every dart
        let mut dart_face: BTreeMap<(VertexId, EdgeId), usize> = BTreeMap::new();
        for (fi, walk) in self.faces.iter().enumerate() {
            for &(tail, eid) in walk {
                dart_face.insert((tail, eid), fi);
            }
        }
        let mut pairs = Vec::with_capacity(self.graph.m());
        for e in self.graph.edges() {
            let fa = dart_face[&(e.u, e.id)];
            let fb = dart_face[&(e.v, e.id)];
            debug_assert_ne!(fa, fb, "bridgeless graphs separate their faces");
            pairs.push((fa, fb));
        }
        let dual_graph = Multigraph::from_edge_list(self.faces.len(), &pairs)?;
        // the face walks themselves are the dual rotations
        let rotations: Vec<Vec<EdgeId>> = self
            .faces
            .iter()
            .map(|walk| {
                walk.iter()
                    .map(|&(tail, eid)| {
                        let idx = self
                            .graph
                            .edges()
                            .iter()
                            .position(|e| e.id == eid && (e.u == tail || e.v == tail))
                            .expect("face darts use real edges");
                        dual_graph.edges()[idx].id
                    })
                    .collect()
            })
            .collect();
        PlaneGraph::from_embedding(
            dual_graph,
            RotationSystem {
                rotations,
                flipped: BTreeSet::new(),
            },
        )
    }
}

/// Face walks of a sign-free rotation system: orbits of darts under
/// "arrive, then leave along the next edge in the rotation".
fn trace_dart_faces(
    g: &Multigraph,
    scheme: &RotationSystem,
) -> Vec<Vec<(VertexId, EdgeId)>> {
    let edges = g.edges();
    let m = edges.len();
    let mut pos: Vec<BTreeMap<EdgeId, usize>> = vec![BTreeMap::new(); g.n()];
    for (v, rot) in scheme.rotations.iter().enumerate() {
        for (i, &id) in rot.iter().enumerate() {
            pos[v].insert(id, i);
        }
    }
    let mut id_to_idx = BTreeMap::new();
    for (i, e) in edges.iter().enumerate() {
        id_to_idx.insert(e.id, i);
    }
    // dart 2i is edges[i] traversed u -> v, dart 2i+1 is v -> u
    let mut seen = vec![false; 2 * m];
    let mut faces = Vec::new();
    for start in 0..2 * m {
        if seen[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut d = start;
        loop {
            seen[d] = true;
            let e = &edges[d >> 1];
            let (tail, head) = if d & 1 == 0 { (e.u, e.v) } else { (e.v, e.u) };
            walk.push((tail, e.id));
            let rot = &scheme.rotations[head];
            let i = pos[head][&e.id];
            let next_id = rot[(i + 1) % rot.len()];
            let next_idx = id_to_idx[&next_id];
            let next_tail_is_u = edges[next_idx].u == head;
            d = (next_idx << 1) | usize::from(!next_tail_is_u);
            if d == start {
                break;
            }
        }
        faces.push(walk);
    }
    faces
}

/// Ore sum: split vertex `z` of `h1` into two vertices, one keeping
/// `x_edges` and the other the rest, then identify them with the endpoints
/// of edge `e` of `h2` and delete `e`.
pub fn ore_sum(
    h1: &Multigraph,
    z: VertexId,
    x_edges: &BTreeSet<EdgeId>,
    h2: &Multigraph,
    e: EdgeId,
) -> Result<Multigraph, FamilyError> {
    if !h1.is_2_connected() || !h2.is_2_connected() {
        return Err(FamilyError::NotTwoConnected);
    }
    if z >= h1.n() {
        return Err(FamilyError::Graph(GraphError::VertexOutOfRange(z, h1.n())));
    }
    let incident: BTreeSet<EdgeId> = h1.incident_edges(z).map(|ed| ed.id).collect();
    for &id in x_edges {
        if !incident.contains(&id) {
            return Err(FamilyError::SplitEdgeNotAtVertex(id));
        }
    }
    if x_edges.is_empty() || x_edges.len() == incident.len() {
        return Err(FamilyError::EmptySplitSide);
    }
    let target = *h2.edge(e)?;

    // vertices: h1 minus z keep order, then all of h2 shifted; z's edges
    // reattach to the shifted endpoints of the deleted edge
    let mut map1 = vec![usize::MAX; h1.n()];
    let mut next = 0;
    for v in 0..h1.n() {
        if v != z {
            map1[v] = next;
            next += 1;
        }
    }
    let shift = h1.n() - 1;
    let x_side = shift + target.u;
    let y_side = shift + target.v;
    let mut pairs = Vec::with_capacity(h1.m() + h2.m() - 1);
    for ed in h1.edges() {
        if ed.touches(z) {
            let other = map1[ed.other(z)];
            let stub = if x_edges.contains(&ed.id) { x_side } else { y_side };
            pairs.push((other, stub));
        } else {
            pairs.push((map1[ed.u], map1[ed.v]));
        }
    }
    for ed in h2.edges() {
        if ed.id != e {
            pairs.push((shift + ed.u, shift + ed.v));
        }
    }
    let result = Multigraph::from_edge_list(h1.n() + h2.n() - 1, &pairs)?;
    assert_eq!(result.m(), h1.m() + h2.m() - 1);
    assert!(
        result.is_2_connected(),
        "an Ore sum of 2-connected graphs is 2-connected"
    );
    Ok(result)
}

/// Gluing: delete edge `e = u2v2` of `g2` and identify `u2 ~ u1`, `v2 ~ v1`
/// across the disjoint union, drawing `g2 − e` inside a face of `g1` that
/// has both `u1` and `v1` on its boundary.
pub fn glue(
    g1: &PlaneGraph,
    u1: VertexId,
    v1: VertexId,
    g2: &PlaneGraph,
    e: EdgeId,
) -> Result<PlaneGraph, FamilyError> {
    if u1 == v1 {
        return Err(FamilyError::IdentifyLoops);
    }
    let target = *g2.graph.edge(e)?;
    if !g1.cofacial(u1, v1) {
        return Err(FamilyError::NotCofacial(u1, v1));
    }
    let (n1, n2) = (g1.graph.n(), g2.graph.n());
    let (u2, v2) = (target.u, target.v);

    // combined vertex labels: g1 keeps its own, g2's surviving vertices
    // follow in order
    let mut map2 = vec![usize::MAX; n2];
    map2[u2] = u1;
    map2[v2] = v1;
    let mut next = n1;
    for w in 0..n2 {
        if w != u2 && w != v2 {
            map2[w] = next;
            next += 1;
        }
    }
    // combined edges: g1's in order, then g2's minus e; remember where each
    // old edge landed
    let mut pairs = Vec::with_capacity(g1.graph.m() + g2.graph.m() - 1);
    let mut new_id1: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
    let mut new_id2: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
    for ed in g1.graph.edges() {
        new_id1.insert(ed.id, pairs.len());
        pairs.push((ed.u, ed.v));
    }
    for ed in g2.graph.edges() {
        if ed.id != e {
            new_id2.insert(ed.id, pairs.len());
            pairs.push((map2[ed.u], map2[ed.v]));
        }
    }
    let combined = Multigraph::from_edge_list(n1 + n2 - 2, &pairs)?;
    let expected_faces = g1.face_count() + g2.face_count() - 1;

    // rotations away from the seam copy straight over
    let mut base: Vec<Vec<EdgeId>> = vec![Vec::new(); combined.n()];
    for v in 0..n1 {
        base[v] = g1.embedding.rotations[v]
            .iter()
            .map(|id| new_id1[id])
            .collect();
    }
    for w in 0..n2 {
        if w != u2 && w != v2 {
            base[map2[w]] = g2.embedding.rotations[w]
                .iter()
                .map(|id| new_id2[id])
                .collect();
        }
    }
    // the inserted drawing's rotations at the seam, opened at the deleted
    // edge so they splice in as one contiguous run
    let open_u = opened_at(&g2.embedding.rotations[u2], e)
        .into_iter()
        .map(|id| new_id2[&id])
        .collect::<Vec<_>>();
    let open_v = opened_at(&g2.embedding.rotations[v2], e)
        .into_iter()
        .map(|id| new_id2[&id])
        .collect::<Vec<_>>();

    // try every gap at the two seam vertices and both orientations of the
    // inserted drawing; the face trace arbitrates
    let du = base[u1].len().max(1);
    let dv = base[v1].len().max(1);
    for mirror in [false, true] {
        let (iu, iv) = if mirror {
            let mut ru = open_u.clone();
            let mut rv = open_v.clone();
            ru.reverse();
            rv.reverse();
            (ru, rv)
        } else {
            (open_u.clone(), open_v.clone())
        };
        for gu in 0..du {
            for gv in 0..dv {
                let mut rotations = base.clone();
                splice_into(&mut rotations[u1], gu, &iu);
                splice_into(&mut rotations[v1], gv, &iv);
                let scheme = RotationSystem {
                    rotations,
                    flipped: BTreeSet::new(),
                };
                if scheme.face_count(&combined) == expected_faces {
                    return PlaneGraph::from_embedding(combined, scheme);
                }
            }
        }
    }
    Err(FamilyError::EmbeddingFailed)
}

/// The rotation linearized at `e`: the cyclic order starting just after the
/// removed edge.
fn opened_at(rot: &[EdgeId], e: EdgeId) -> Vec<EdgeId> {
    let p = rot
        .iter()
        .position(|&id| id == e)
        .expect("deleted edge sits in the seam rotation");
    let mut out = Vec::with_capacity(rot.len() - 1);
    for k in 1..rot.len() {
        out.push(rot[(p + k) % rot.len()]);
    }
    out
}

fn splice_into(rot: &mut Vec<EdgeId>, gap: usize, inserted: &[EdgeId]) {
    let at = gap.min(rot.len());
    let tail = rot.split_off(at);
    rot.extend(inserted.iter().copied());
    rot.extend(tail);
}

/// How a catalog entry was built; parents are identified by their canonical
/// forms, which resolve against the same catalog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    BaseK4,
    Glue { left: Vec<u8>, right: Vec<u8> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub graph: Multigraph,
    pub canonical: Vec<u8>,
    pub provenance: Provenance,
    pub embedding: PlaneGraph,
}

/// Levels of the dual 4-Ore closure computed so far; grows on demand so
/// that small queries never pay for the deep levels.
struct CatalogCache {
    built_to: usize,
    by_size: BTreeMap<usize, Vec<CatalogEntry>>,
}

impl CatalogCache {
    fn seed() -> Self {
        let k4 = Multigraph::complete(4);
        let entry = CatalogEntry {
            canonical: k4.canonical_form(),
            embedding: PlaneGraph::new(k4.clone()).expect("K4 is planar"),
            graph: k4,
            provenance: Provenance::BaseK4,
        };
        CatalogCache {
            built_to: 4,
            by_size: BTreeMap::from([(4, vec![entry])]),
        }
    }

    fn extend_to(&mut self, max_n: usize) {
        while self.built_to + 2 <= max_n {
            let size = self.built_to + 2;
            self.by_size.insert(size, self.level(size));
            self.built_to = size;
        }
    }

    /// One closure level: glue every smaller pair of entries at every
    /// vertex pair that is cofacial in some embedding, along every edge of
    /// the inserted entry, then deduplicate by canonical form.
    fn level(&self, size: usize) -> Vec<CatalogEntry> {
        // (host drawing with the pair cofacial, pair, parents)
        let mut jobs: Vec<(PlaneGraph, VertexId, VertexId, &CatalogEntry, &CatalogEntry)> =
            Vec::new();
        for (&a, lefts) in self.by_size.range(..size) {
            let b = size + 2 - a;
            let Some(rights) = self.by_size.get(&b) else {
                continue;
            };
            for left in lefts {
                for u1 in 0..a {
                    for v1 in 0..a {
                        if u1 == v1 {
                            continue;
                        }
                        if let Some(host) = coface_embedding(&left.embedding, u1, v1) {
                            for right in rights {
                                jobs.push((host.clone(), u1, v1, left, right));
                            }
                        }
                    }
                }
            }
        }
        let glued: Vec<CatalogEntry> = jobs
            .par_iter()
            .flat_map_iter(|(host, u1, v1, left, right)| {
                right.graph.edges().iter().map(move |ed| {
                    let plane = glue(host, *u1, *v1, &right.embedding, ed.id)
                        .expect("cofacial gluings embed");
                    CatalogEntry {
                        canonical: plane.graph().canonical_form(),
                        graph: plane.graph().clone(),
                        provenance: Provenance::Glue {
                            left: left.canonical.clone(),
                            right: right.canonical.clone(),
                        },
                        embedding: plane,
                    }
                })
            })
            .collect();
        let mut fresh: Vec<CatalogEntry> = Vec::new();
        let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
        let mut sorted = glued;
        sorted.sort_by(|x, y| x.canonical.cmp(&y.canonical));
        for entry in sorted {
            if seen.insert(entry.canonical.clone()) {
                fresh.push(entry);
            }
        }
        fresh
    }
}

static CATALOG_CACHE: LazyLock<Mutex<CatalogCache>> =
    LazyLock::new(|| Mutex::new(CatalogCache::seed()));

/// All dual 4-Ore graphs with at most `max_n` vertices: the closure of
/// plane K₄ drawings under gluing, deduplicated by canonical form. Every
/// entry carries a witnessing plane embedding and its construction tree.
pub fn dual_4ore_catalog(max_n: usize) -> Result<Vec<CatalogEntry>, FamilyError> {
    if max_n > CATALOG_CAP {
        return Err(FamilyError::AboveCatalogCap {
            n: max_n,
            cap: CATALOG_CAP,
        });
    }
    let mut cache = CATALOG_CACHE.lock().expect("catalog cache");
    cache.extend_to(max_n);
    let mut all: Vec<CatalogEntry> = cache
        .by_size
        .range(..=max_n)
        .flat_map(|(_, entries)| entries.iter().cloned())
        .collect();
    drop(cache);
    all.sort_by(|x, y| (x.graph.n(), &x.canonical).cmp(&(y.graph.n(), &y.canonical)));
    for entry in &all {
        assert_eq!(
            2 * entry.graph.m(),
            5 * entry.graph.n() - 8,
            "dual 4-Ore edge-count fingerprint"
        );
    }
    Ok(all)
}

/// A drawing of the same graph in which `u` and `v` are cofacial, if any
/// plane embedding achieves that: either the stored one already does, or
/// the graph stays planar with a helper uv edge and the re-embedding
/// (minus the helper) is a witness.
fn coface_embedding(g: &PlaneGraph, u: VertexId, v: VertexId) -> Option<PlaneGraph> {
    if g.cofacial(u, v) {
        return Some(g.clone());
    }
    let (with_helper, helper) = g.graph().add_edge(u, v).ok()?;
    let scheme = plane_embedding(&with_helper)?;
    let mut rotations = scheme.rotations;
    for rot in rotations.iter_mut() {
        rot.retain(|&id| id != helper);
    }
    let graph = with_helper.delete_edge(helper).expect("helper edge");
    let plane = PlaneGraph::from_embedding(
        graph,
        RotationSystem {
            rotations,
            flipped: BTreeSet::new(),
        },
    )
    .expect("deleting one edge keeps the embedding plane");
    debug_assert!(plane.cofacial(u, v), "the helper edge's faces merge");
    Some(plane)
}

/// Whether `g` is K₂ or a dual 4-Ore graph. Beyond the catalog cap the
/// answer is a genuine unknown, reported as an error rather than a guess.
/// Queries build the catalog only as deep as the graph is large.
pub fn is_exceptional(g: &Multigraph) -> Result<bool, FamilyError> {
    if g.n() == 2 && g.m() == 1 {
        return Ok(true);
    }
    if g.n() > CATALOG_CAP {
        return Err(FamilyError::AboveCatalogCap {
            n: g.n(),
            cap: CATALOG_CAP,
        });
    }
    // cheap fingerprint first: dual 4-Ore graphs have 2m = 5n − 8
    if 5 * g.n() < 8 || (5 * g.n() - 8) % 2 != 0 || 2 * g.m() != 5 * g.n() - 8 {
        return Ok(false);
    }
    let canonical = g.canonical_form();
    let mut cache = CATALOG_CACHE.lock().expect("catalog cache");
    cache.extend_to(g.n());
    Ok(cache
        .by_size
        .get(&g.n())
        .is_some_and(|entries| entries.iter().any(|e| e.canonical == canonical)))
}

/// All 4-Ore graphs with at most `max_n` vertices: the closure of K₄ under
/// Ore sums, deduplicated by canonical form.
pub fn primal_4ore_catalog(max_n: usize) -> Result<Vec<Multigraph>, FamilyError> {
    if max_n > CATALOG_CAP {
        return Err(FamilyError::AboveCatalogCap {
            n: max_n,
            cap: CATALOG_CAP,
        });
    }
    let mut by_size: BTreeMap<usize, Vec<Multigraph>> = BTreeMap::new();
    if max_n >= 4 {
        by_size.insert(4, vec![Multigraph::complete(4)]);
    }
    let mut size = 7;
    while size <= max_n {
        let mut jobs: Vec<(&Multigraph, &Multigraph, VertexId, Vec<EdgeId>, EdgeId)> = Vec::new();
        for (&a, lefts) in by_size.range(..size) {
            let b = size + 1 - a;
            let Some(rights) = by_size.get(&b) else {
                continue;
            };
            for h1 in lefts {
                for h2 in rights {
                    for z in 0..h1.n() {
                        let incident: Vec<EdgeId> = h1.incident_edges(z).map(|e| e.id).collect();
                        // proper nonempty subsets; both orientations arise
                        // because a subset and its complement both appear
                        for mask in 1..(1u32 << incident.len()) - 1 {
                            let x: Vec<EdgeId> = incident
                                .iter()
                                .enumerate()
                                .filter(|(i, _)| mask >> i & 1 == 1)
                                .map(|(_, &id)| id)
                                .collect();
                            for ed in h2.edges() {
                                jobs.push((h1, h2, z, x.clone(), ed.id));
                            }
                        }
                    }
                }
            }
        }
        let sums: Vec<Multigraph> = jobs
            .par_iter()
            .map(|(h1, h2, z, x, e)| {
                ore_sum(h1, *z, &x.iter().copied().collect(), h2, *e)
                    .expect("catalog Ore sums satisfy every precondition")
            })
            .collect();
        let mut fresh = Vec::new();
        let mut seen = BTreeSet::new();
        let mut sorted: Vec<(Vec<u8>, Multigraph)> =
            sums.into_iter().map(|g| (g.canonical_form(), g)).collect();
        sorted.sort_by(|x, y| x.0.cmp(&y.0));
        for (canon, g) in sorted {
            if seen.insert(canon) {
                fresh.push(g);
            }
        }
        by_size.insert(size, fresh);
        size += 3;
    }
    let mut all: Vec<Multigraph> = by_size.into_values().flatten().collect();
    all.sort_by_key(|g| (g.n(), g.canonical_form()));
    for g in &all {
        assert_eq!(
            3 * g.m(),
            5 * g.n() - 2,
            "4-Ore edge-count fingerprint"
        );
    }
    Ok(all)
}

/// K₃,ₙ₋₃ plus one edge between two of the degree-(n−3) vertices. Defined
/// for n ≥ 7; it has 3n − 8 edges.
pub fn k3n_plus(n: usize) -> Result<Multigraph, FamilyError> {
    if n < 7 {
        return Err(FamilyError::BadParameter {
            family: "k3n_plus",
            requirement: "n ≥ 7",
            got: n,
        });
    }
    let mut pairs = Vec::with_capacity(3 * n - 8);
    for left in 0..3 {
        for right in 3..n {
            pairs.push((left, right));
        }
    }
    pairs.push((0, 1));
    let g = Multigraph::from_edge_list(n, &pairs).expect("bipartite plus one edge");
    debug_assert_eq!(g.m(), 3 * n - 8);
    Ok(g)
}

/// The flower snark on 4k vertices (k odd, ≥ 3): k claws whose centers'
/// leaves close into one k-cycle and one 2k-cycle.
pub fn flower_snark(k: usize) -> Result<Multigraph, FamilyError> {
    if k < 3 || k % 2 == 0 {
        return Err(FamilyError::BadParameter {
            family: "flower_snark",
            requirement: "odd k ≥ 3",
            got: k,
        });
    }
    // vertex w of claw i: center i, then t = k+i, u = 2k+i, v = 3k+i
    let mut pairs = Vec::with_capacity(6 * k);
    for i in 0..k {
        pairs.push((i, k + i));
        pairs.push((i, 2 * k + i));
        pairs.push((i, 3 * k + i));
    }
    for i in 0..k {
        pairs.push((k + i, k + (i + 1) % k));
    }
    for i in 0..k - 1 {
        pairs.push((2 * k + i, 2 * k + i + 1));
    }
    pairs.push((2 * k + (k - 1), 3 * k));
    for i in 0..k - 1 {
        pairs.push((3 * k + i, 3 * k + i + 1));
    }
    pairs.push((3 * k + (k - 1), 2 * k));
    let g = Multigraph::from_edge_list(4 * k, &pairs).expect("flower snark edge list");
    debug_assert_eq!(g.m(), 6 * k);
    debug_assert!((0..g.n()).all(|v| g.degree(v) == 3));
    Ok(g)
}

/// The catalog as sparse6 text, one entry per line, for interchange with
/// standard graph tools.
pub fn catalog_sparse6(entries: &[CatalogEntry]) -> String {
    entries
        .iter()
        .map(|e| encode_sparse6(&e.graph).expect("catalog graphs encode"))
        .collect::<Vec<_>>()
        .join("\n")
}

/// JSON sidecar with sizes, canonical forms, provenance, and embeddings.
pub fn catalog_json(entries: &[CatalogEntry]) -> serde_json::Value {
    serde_json::Value::Array(
        entries
            .iter()
            .map(|e| {
                // rotations refer to edge ids in this explicit edge order;
                // the sparse6 line alone would renumber them on decode
                let edges: Vec<[usize; 2]> =
                    e.graph.edges().iter().map(|ed| [ed.u, ed.v]).collect();
                serde_json::json!({
                    "n": e.graph.n(),
                    "m": e.graph.m(),
                    "edges": edges,
                    "sparse6": encode_sparse6(&e.graph).expect("catalog graphs encode"),
                    "canonical": hex(&e.canonical),
                    "provenance": provenance_json(&e.provenance),
                    "rotations": e.embedding.embedding().rotations,
                })
            })
            .collect(),
    )
}

fn provenance_json(p: &Provenance) -> serde_json::Value {
    match p {
        Provenance::BaseK4 => serde_json::json!({ "kind": "k4" }),
        Provenance::Glue { left, right } => serde_json::json!({
            "kind": "glue",
            "left": hex(left),
            "right": hex(right),
        }),
    }
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

//! Loopless multigraphs with stable edge identities.
//!
//! Every edge carries an id that survives contraction, deletion and
//! splitting-off — the surgeries never reuse ids — so a flow found on a
//! contracted graph can be transported back to the graph it came from by
//! id alone. Vertices are dense indices `0..n`; parallel edges are allowed,
//! loops never are (an edge whose endpoints collide during contraction is
//! dropped, which is exactly what group-valued flows want).

mod canon;
mod io;

pub use canon::CanonicalCertificate;
pub use io::{
    decode_graph6, decode_sparse6, encode_dimacs, encode_graph6, encode_sparse6, parse_dimacs,
    parse_graph_auto, GraphIoError,
};

use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, VecDeque};
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Edge connectivity reported for a single-vertex graph, which no cut can
/// disconnect.
pub const INFINITE_CONNECTIVITY: usize = usize::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0} rejected")]
    LoopRejected(VertexId),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(VertexId, usize),
    #[error("no edge with id {0}")]
    NoSuchEdge(EdgeId),
    #[error("edges {0} and {1} do not share exactly one endpoint")]
    NotSplittable(EdgeId, EdgeId),
    #[error("splitting edges {0} and {1} would create a loop")]
    SplitWouldLoop(EdgeId, EdgeId),
    #[error("partition is not an exact cover of the vertex set")]
    BadPartition,
}

/// An undirected edge; endpoints are stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub id: EdgeId,
}

impl Edge {
    /// The endpoint that is not `w`.
    ///
    /// # Panics
    /// Panics if `w` is not an endpoint.
    pub fn other(&self, w: VertexId) -> VertexId {
        if w == self.u {
            self.v
        } else if w == self.v {
            self.u
        } else {
            panic!("vertex {w} is not an endpoint of edge {}", self.id)
        }
    }

    pub fn touches(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }
}

/// A loopless multigraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    /// Sorted by id; ids need not be contiguous after surgery.
    edges: Vec<Edge>,
    /// Next id to hand out; strictly above every id ever used in this lineage.
    next_edge_id: EdgeId,
}

impl Multigraph {
    /// Builds a graph from an edge list; edge ids are assigned in input order.
    pub fn from_edge_list(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for (id, &(a, b)) in pairs.iter().enumerate() {
            if a >= n {
                return Err(GraphError::VertexOutOfRange(a, n));
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange(b, n));
            }
            if a == b {
                return Err(GraphError::LoopRejected(a));
            }
            edges.push(Edge {
                u: a.min(b),
                v: a.max(b),
                id,
            });
        }
        Ok(Multigraph {
            n,
            next_edge_id: edges.len(),
            edges,
        })
    }

    pub fn empty(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
            next_edge_id: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        Multigraph::from_edge_list(n, &pairs).expect("complete graph is loopless")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::from_edge_list(n, &pairs).expect("cycle is loopless")
    }

    pub fn path(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Multigraph::from_edge_list(n, &pairs).expect("path is loopless")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge, GraphError> {
        self.edges
            .binary_search_by_key(&id, |e| e.id)
            .map(|i| &self.edges[i])
            .map_err(|_| GraphError::NoSuchEdge(id))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = &Edge> + '_ {
        self.edges.iter().filter(move |e| e.touches(v))
    }

    /// Number of edge ends at `v` (parallel edges all count).
    pub fn degree(&self, v: VertexId) -> usize {
        self.incident_edges(v).count()
    }

    /// Number of parallel edges between `a` and `b`.
    pub fn multiplicity(&self, a: VertexId, b: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|e| e.touches(a) && e.touches(b))
            .count()
    }

    /// Distinct neighbours of `v`, ascending.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let set: BTreeSet<_> = self.incident_edges(v).map(|e| e.other(v)).collect();
        set.into_iter().collect()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert((e.u, e.v)))
    }

    /// Adjacency lists of (neighbour, edge index into `edges()`), built once
    /// for algorithms that walk the graph heavily.
    pub(crate) fn incidence_lists(&self) -> Vec<Vec<(VertexId, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (idx, e) in self.edges.iter().enumerate() {
            adj[e.u].push((e.v, idx));
            adj[e.v].push((e.u, idx));
        }
        adj
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let adj = self.incidence_lists();
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<VertexId>> = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let label = out.len();
            let mut queue = VecDeque::from([start]);
            comp[start] = label;
            let mut members = vec![start];
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = label;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Contracts every part of `partition` to a single vertex; part `i` of
    /// the normalized partition becomes vertex `i`. Edges inside a part are
    /// dropped; all other edges keep their ids. Also returns the map from
    /// old vertices to new ones.
    pub fn contract(&self, partition: &Partition) -> (Multigraph, Vec<VertexId>) {
        assert_eq!(partition.n(), self.n, "partition is over a different vertex set");
        let map = partition.part_index_map();
        let mut edges = Vec::new();
        for e in &self.edges {
            let (a, b) = (map[e.u], map[e.v]);
            if a != b {
                edges.push(Edge {
                    u: a.min(b),
                    v: a.max(b),
                    id: e.id,
                });
            }
        }
        (
            Multigraph {
                n: partition.parts().len(),
                edges,
                next_edge_id: self.next_edge_id,
            },
            map,
        )
    }

    /// Contracts a single edge; shorthand for contracting the partition that
    /// merges its endpoints.
    pub fn contract_edge(&self, id: EdgeId) -> Result<(Multigraph, Vec<VertexId>), GraphError> {
        let e = self.edge(id)?;
        let partition = Partition::merging_pair(self.n, e.u, e.v);
        Ok(self.contract(&partition))
    }

    pub fn delete_edge(&self, id: EdgeId) -> Result<Multigraph, GraphError> {
        self.edge(id)?;
        Ok(Multigraph {
            n: self.n,
            edges: self.edges.iter().filter(|e| e.id != id).cloned().collect(),
            next_edge_id: self.next_edge_id,
        })
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in ascending
    /// order of the original labels. Edge ids are retained. Also returns the
    /// map from old vertex to new, `usize::MAX` for dropped vertices.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> (Multigraph, Vec<VertexId>) {
        let mut map = vec![usize::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            assert!(old < self.n, "vertex {old} out of range");
            map[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| map[e.u] != usize::MAX && map[e.v] != usize::MAX)
            .map(|e| Edge {
                u: map[e.u].min(map[e.v]),
                v: map[e.u].max(map[e.v]),
                id: e.id,
            })
            .collect();
        (
            Multigraph {
                n: keep.len(),
                edges,
                next_edge_id: self.next_edge_id,
            },
            map,
        )
    }

    /// Subgraph keeping only the listed edges; vertex set and edge ids are
    /// unchanged, so per-block results can be combined without relabelling.
    pub fn subgraph_of_edges(&self, ids: &BTreeSet<EdgeId>) -> Multigraph {
        Multigraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .filter(|e| ids.contains(&e.id))
                .cloned()
                .collect(),
            next_edge_id: self.next_edge_id,
        }
    }

    /// Splits off the pair `e1`, `e2` at their common endpoint: both edges
    /// are removed and a fresh edge joins their other endpoints. The new edge
    /// gets a never-before-used id (the largest in the graph).
    pub fn split_off(&self, e1: EdgeId, e2: EdgeId) -> Result<(Multigraph, EdgeId), GraphError> {
        if e1 == e2 {
            return Err(GraphError::NotSplittable(e1, e2));
        }
        let a = *self.edge(e1)?;
        let b = *self.edge(e2)?;
        let shared = if b.touches(a.u) && !b.touches(a.v) {
            a.u
        } else if b.touches(a.v) && !b.touches(a.u) {
            a.v
        } else if b.touches(a.u) && b.touches(a.v) {
            // parallel pair: either choice of shared endpoint loops
            return Err(GraphError::SplitWouldLoop(e1, e2));
        } else {
            return Err(GraphError::NotSplittable(e1, e2));
        };
        let (x, y) = (a.other(shared), b.other(shared));
        if x == y {
            return Err(GraphError::SplitWouldLoop(e1, e2));
        }
        let new_id = self.next_edge_id;
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| e.id != e1 && e.id != e2)
            .cloned()
            .collect();
        edges.push(Edge {
            u: x.min(y),
            v: x.max(y),
            id: new_id,
        });
        Ok((
            Multigraph {
                n: self.n,
                edges,
                next_edge_id: new_id + 1,
            },
            new_id,
        ))
    }

    /// Adds one edge with a fresh id; used by the constructions.
    pub fn add_edge(&self, a: VertexId, b: VertexId) -> Result<(Multigraph, EdgeId), GraphError> {
        if a >= self.n {
            return Err(GraphError::VertexOutOfRange(a, self.n));
        }
        if b >= self.n {
            return Err(GraphError::VertexOutOfRange(b, self.n));
        }
        if a == b {
            return Err(GraphError::LoopRejected(a));
        }
        let id = self.next_edge_id;
        let mut edges = self.edges.clone();
        edges.push(Edge {
            u: a.min(b),
            v: a.max(b),
            id,
        });
        Ok((
            Multigraph {
                n: self.n,
                edges,
                next_edge_id: id + 1,
            },
            id,
        ))
    }

    /// Global edge connectivity with a witnessing cut.
    ///
    /// A single vertex cannot be cut: that returns
    /// [`INFINITE_CONNECTIVITY`]. A disconnected graph returns 0 and an
    /// empty cut whose near side is the first component.
    pub fn edge_connectivity(&self) -> (usize, EdgeCut) {
        if self.n <= 1 {
            return (
                INFINITE_CONNECTIVITY,
                EdgeCut {
                    side_a: (0..self.n).collect(),
                    side_b: Vec::new(),
                    cut_edges: Vec::new(),
                },
            );
        }
        let comps = self.components();
        if comps.len() > 1 {
            let side_a = comps[0].clone();
            let in_a: BTreeSet<_> = side_a.iter().copied().collect();
            let side_b = (0..self.n).filter(|v| !in_a.contains(v)).collect();
            return (
                0,
                EdgeCut {
                    side_a,
                    side_b,
                    cut_edges: Vec::new(),
                },
            );
        }
        let adj = self.incidence_lists();
        let mut best: Option<(usize, Vec<bool>)> = None;
        for t in 1..self.n {
            let (value, reach) = self.max_flow_unit(&adj, 0, t);
            if best.as_ref().is_none_or(|(b, _)| value < *b) {
                best = Some((value, reach));
            }
        }
        let (value, reach) = best.expect("n >= 2");
        let side_a: Vec<_> = (0..self.n).filter(|&v| reach[v]).collect();
        let side_b: Vec<_> = (0..self.n).filter(|&v| !reach[v]).collect();
        let cut_edges: Vec<_> = self
            .edges
            .iter()
            .filter(|e| reach[e.u] != reach[e.v])
            .map(|e| e.id)
            .collect();
        debug_assert_eq!(cut_edges.len(), value);
        (value, EdgeCut {
            side_a,
            side_b,
            cut_edges,
        })
    }

    /// Unit-capacity max flow between `s` and `t`; returns the value and the
    /// residual-reachable side of the final cut.
    fn max_flow_unit(
        &self,
        adj: &[Vec<(VertexId, usize)>],
        s: VertexId,
        t: VertexId,
    ) -> (usize, Vec<bool>) {
        // net flow along each edge in its stored u->v direction, in {-1,0,1}
        let mut net = vec![0i8; self.edges.len()];
        let mut value = 0usize;
        loop {
            let mut pred: Vec<Option<(VertexId, usize)>> = vec![None; self.n];
            let mut reach = vec![false; self.n];
            reach[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, idx) in &adj[u] {
                    let e = &self.edges[idx];
                    let forward = e.u == u;
                    let used = if forward { net[idx] } else { -net[idx] };
                    if used < 1 && !reach[w] {
                        reach[w] = true;
                        pred[w] = Some((u, idx));
                        queue.push_back(w);
                    }
                }
            }
            if !reach[t] {
                return (value, reach);
            }
            let mut v = t;
            while v != s {
                let (u, idx) = pred[v].expect("path back to source");
                if self.edges[idx].u == u {
                    net[idx] += 1;
                } else {
                    net[idx] -= 1;
                }
                v = u;
            }
            value += 1;
        }
    }

    /// Edges whose removal disconnects their component.
    pub fn bridges(&self) -> Vec<EdgeId> {
        self.blocks()
            .into_iter()
            .filter(|b| b.len() == 1)
            .map(|b| b[0])
            .collect()
    }

    /// Biconnected components as sorted edge-id sets (lowpoint DFS). Parallel
    /// edges land in one block together, as they should: a doubled edge is a
    /// cycle.
    pub fn blocks(&self) -> Vec<Vec<EdgeId>> {
        struct Dfs<'a> {
            g: &'a Multigraph,
            adj: Vec<Vec<(VertexId, usize)>>,
            disc: Vec<usize>,
            low: Vec<usize>,
            timer: usize,
            stack: Vec<usize>,
            out: Vec<Vec<EdgeId>>,
        }
        impl Dfs<'_> {
            fn run(&mut self, u: VertexId, enter: Option<usize>) {
                self.disc[u] = self.timer;
                self.low[u] = self.timer;
                self.timer += 1;
                for k in 0..self.adj[u].len() {
                    let (w, idx) = self.adj[u][k];
                    if Some(idx) == enter {
                        continue; // only the entering instance; a parallel copy is a real cycle
                    }
                    if self.disc[w] == usize::MAX {
                        self.stack.push(idx);
                        self.run(w, Some(idx));
                        self.low[u] = self.low[u].min(self.low[w]);
                        if self.low[w] >= self.disc[u] {
                            let mut block = Vec::new();
                            loop {
                                let top = self.stack.pop().expect("tree edge still stacked");
                                block.push(self.g.edges[top].id);
                                if top == idx {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            self.out.push(block);
                        }
                    } else if self.disc[w] < self.disc[u] {
                        self.stack.push(idx);
                        self.low[u] = self.low[u].min(self.disc[w]);
                    }
                }
            }
        }
        let mut dfs = Dfs {
            g: self,
            adj: self.incidence_lists(),
            disc: vec![usize::MAX; self.n],
            low: vec![0; self.n],
            timer: 0,
            stack: Vec::new(),
            out: Vec::new(),
        };
        for root in 0..self.n {
            if dfs.disc[root] == usize::MAX {
                dfs.run(root, None);
            }
        }
        dfs.out.sort();
        dfs.out
    }

    /// Connected, at least three vertices, and no cut vertex.
    pub fn is_2_connected(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.articulation_vertices().is_empty()
    }

    /// Vertices that lie in more than one block.
    pub fn articulation_vertices(&self) -> Vec<VertexId> {
        let mut block_count = vec![0usize; self.n];
        for block in self.blocks() {
            let mut members = BTreeSet::new();
            for id in block {
                let e = self.edge(id).expect("block edges exist");
                members.insert(e.u);
                members.insert(e.v);
            }
            for v in members {
                block_count[v] += 1;
            }
        }
        (0..self.n).filter(|&v| block_count[v] >= 2).collect()
    }

    /// Proper k-colorability of the underlying simple graph.
    pub fn is_k_colorable(&self, k: usize) -> bool {
        if self.n == 0 {
            return true;
        }
        if k == 0 {
            return self.n == 0;
        }
        // order vertices by decreasing degree for earlier conflicts
        let mut order: Vec<VertexId> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut pos = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![BTreeSet::new(); self.n];
        for e in &self.edges {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
        let mut colors = vec![usize::MAX; self.n];
        fn go(
            i: usize,
            order: &[VertexId],
            adj: &[BTreeSet<VertexId>],
            colors: &mut [usize],
            k: usize,
        ) -> bool {
            if i == order.len() {
                return true;
            }
            let v = order[i];
            // symmetry break: never open more than one new color
            let used_so_far = colors.iter().filter(|&&c| c != usize::MAX).map(|&c| c + 1).max().unwrap_or(0);
            for c in 0..k.min(used_so_far + 1) {
                if adj[v].iter().all(|&w| colors[w] != c) {
                    colors[v] = c;
                    if go(i + 1, order, adj, colors, k) {
                        return true;
                    }
                    colors[v] = usize::MAX;
                }
            }
            false
        }
        go(0, &order, &adj, &mut colors, k)
    }

    /// Canonical byte string; equal strings exactly characterize isomorphism.
    pub fn canonical_form(&self) -> Vec<u8> {
        canon::certificate(self).form
    }

    /// Canonical form plus the relabelling that achieves it and the full
    /// automorphism group (as maps old vertex -> old vertex).
    pub fn canonical_certificate(&self) -> CanonicalCertificate {
        canon::certificate(self)
    }

    pub fn is_isomorphic(&self, other: &Multigraph) -> bool {
        self.n == other.n
            && self.m() == other.m()
            && self.canonical_form() == other.canonical_form()
    }
}

/// One side of an edge cut, with the cut's edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCut {
    pub side_a: Vec<VertexId>,
    pub side_b: Vec<VertexId>,
    pub cut_edges: Vec<EdgeId>,
}

/// A partition of `0..n` into disjoint nonempty parts, normalized so each
/// part is sorted and parts are ordered by their least element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    n: usize,
    parts: Vec<Vec<VertexId>>,
}

impl Partition {
    pub fn from_parts(n: usize, parts: &[Vec<VertexId>]) -> Result<Self, GraphError> {
        let mut seen = vec![false; n];
        let mut count = 0usize;
        let mut normalized: Vec<Vec<VertexId>> = Vec::with_capacity(parts.len());
        for part in parts {
            if part.is_empty() {
                return Err(GraphError::BadPartition);
            }
            let mut p = part.clone();
            p.sort_unstable();
            p.dedup();
            if p.len() != part.len() {
                return Err(GraphError::BadPartition);
            }
            for &v in &p {
                if v >= n || seen[v] {
                    return Err(GraphError::BadPartition);
                }
                seen[v] = true;
                count += 1;
            }
            normalized.push(p);
        }
        if count != n {
            return Err(GraphError::BadPartition);
        }
        normalized.sort_by_key(|p| p[0]);
        Ok(Partition {
            n,
            parts: normalized,
        })
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            n,
            parts: (0..n).map(|v| vec![v]).collect(),
        }
    }

    /// The partition that merges exactly `a` and `b`.
    pub fn merging_pair(n: usize, a: VertexId, b: VertexId) -> Self {
        assert!(a != b && a < n && b < n);
        let mut parts = vec![vec![a.min(b), a.max(b)]];
        parts.extend((0..n).filter(|&v| v != a && v != b).map(|v| vec![v]));
        Partition::from_parts(n, &parts).expect("valid by construction")
    }

    /// Builds a partition from a part label per vertex.
    pub fn from_labels(labels: &[usize]) -> Self {
        let distinct: BTreeSet<_> = labels.iter().copied().collect();
        let parts: Vec<Vec<VertexId>> = distinct
            .into_iter()
            .map(|l| (0..labels.len()).filter(|&v| labels[v] == l).collect())
            .collect();
        Partition::from_parts(labels.len(), &parts).expect("labels cover every vertex")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[Vec<VertexId>] {
        &self.parts
    }

    /// Map from vertex to the index of its part.
    pub fn part_index_map(&self) -> Vec<usize> {
        let mut map = vec![usize::MAX; self.n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                map[v] = i;
            }
        }
        map
    }

    /// At least one part has more than one vertex, so contracting it
    /// actually changes the graph.
    pub fn is_proper(&self) -> bool {
        self.parts.iter().any(|p| p.len() > 1)
    }

    /// Every part induces a connected subgraph of `g`.
    pub fn is_g_connected(&self, g: &Multigraph) -> bool {
        assert_eq!(self.n, g.n(), "partition is over a different vertex set");
        self.parts.iter().all(|part| {
            let set: BTreeSet<_> = part.iter().copied().collect();
            let (sub, _) = g.induced(&set);
            sub.is_connected()
        })
    }

    /// Every part of `self` sits inside one part of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.n != coarser.n {
            return false;
        }
        let coarse_map = coarser.part_index_map();
        self.parts
            .iter()
            .all(|p| p.iter().all(|&v| coarse_map[v] == coarse_map[p[0]]))
    }

    /// All partitions of `0..n` (restricted growth strings); Bell(n) many.
    pub fn enumerate_all(n: usize) -> Vec<Partition> {
        if n == 0 {
            return vec![Partition::from_labels(&[])];
        }
        let mut out = Vec::new();
        let mut labels = vec![0usize; n];
        fn go(i: usize, max_used: usize, labels: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == labels.len() {
                out.push(Partition::from_labels(labels));
                return;
            }
            for l in 0..=max_used + 1 {
                labels[i] = l;
                go(i + 1, max_used.max(l), labels, out);
            }
        }
        go(1, 0, &mut labels, &mut out);
        out
    }

    /// All proper partitions whose parts induce connected subgraphs of `g`.
    pub fn enumerate_proper_g_connected(g: &Multigraph) -> Vec<Partition> {
        Partition::enumerate_all(g.n())
            .into_iter()
            .filter(|p| p.is_proper() && p.is_g_connected(g))
            .collect()
    }
}

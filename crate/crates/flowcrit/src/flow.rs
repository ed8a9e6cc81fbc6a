//! Flows with values in a finite abelian group, on bordered graphs.
//!
//! A bordered graph is a multigraph with a boundary: one group element per
//! vertex, summing to zero on every component. A flow assigns each edge a
//! value and a direction — stored as the value on the low-to-high dart —
//! such that at every vertex the net flow *out* equals the boundary there.
//! With the zero boundary this is the classical flow condition, and a
//! nowhere-zero flow is one avoiding the zero value on every edge.
//!
//! Existence and exact counting run the same search: pick a DFS spanning
//! forest, let the cotree edges range over nonzero values, and read each
//! tree edge off conservation across its fundamental cut, pruning the
//! moment a tree edge is forced to zero. Counting is exhaustive — cotree
//! assignments biject with flows. An independent deletion–contraction
//! recursion on the flow count cross-checks the search.

use crate::graph::{EdgeId, Multigraph, Partition, VertexId};
use crate::group::{Group, GroupElement};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlowError {
    #[error("boundary has {0} entries for a graph on {1} vertices")]
    BoundaryLength(usize, usize),
    #[error("boundary does not sum to zero on the component of vertex {0}")]
    BoundaryComponentSum(VertexId),
    #[error("flow assigns no value to edge {0}")]
    MissingEdgeValue(EdgeId),
    #[error("flow assigns a value to edge {0}, which the graph does not have")]
    ExtraEdgeValue(EdgeId),
    #[error("flow value on edge {0} is zero")]
    ZeroOnEdge(EdgeId),
    #[error("conservation fails at vertex {0}")]
    ConservationFails(VertexId),
    #[error("graph must be connected for this operation")]
    Disconnected,
    #[error("vertex set is not a valid part of this graph")]
    BadPart,
}

/// A multigraph together with a group and a boundary that sums to zero on
/// every component. Construction validates the boundary, so a value of this
/// type is always a well-posed flow problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderedGraph {
    graph: Multigraph,
    group: Group,
    beta: Vec<GroupElement>,
}

impl BorderedGraph {
    pub fn new(
        graph: Multigraph,
        group: Group,
        beta: Vec<GroupElement>,
    ) -> Result<Self, FlowError> {
        validate_boundary(&graph, &group, &beta)?;
        Ok(BorderedGraph { graph, group, beta })
    }

    pub fn with_zero_boundary(graph: Multigraph, group: Group) -> Self {
        let beta = vec![group.zero(); graph.n()];
        BorderedGraph { graph, group, beta }
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn beta(&self) -> &[GroupElement] {
        &self.beta
    }

    pub fn has_zero_boundary(&self) -> bool {
        self.beta.iter().all(|b| b.is_zero())
    }

    /// The bordered graph after contracting `partition`: part sums become
    /// the new boundary values.
    pub fn contract(&self, partition: &Partition) -> (BorderedGraph, Vec<VertexId>) {
        let (contracted, map) = self.graph.contract(partition);
        let mut beta = vec![self.group.zero(); contracted.n()];
        for (v, b) in self.beta.iter().enumerate() {
            beta[map[v]] = self.group.add(&beta[map[v]], b);
        }
        (
            BorderedGraph {
                graph: contracted,
                group: self.group.clone(),
                beta,
            },
            map,
        )
    }

    pub fn contract_edge(&self, id: EdgeId) -> Result<(BorderedGraph, Vec<VertexId>), crate::graph::GraphError> {
        let e = self.graph.edge(id)?;
        let partition = Partition::merging_pair(self.graph.n(), e.u, e.v);
        Ok(self.contract(&partition))
    }
}

/// Checks that the boundary has one value per vertex and sums to zero on
/// every component.
pub fn validate_boundary(
    graph: &Multigraph,
    group: &Group,
    beta: &[GroupElement],
) -> Result<(), FlowError> {
    if beta.len() != graph.n() {
        return Err(FlowError::BoundaryLength(beta.len(), graph.n()));
    }
    for comp in graph.components() {
        let mut sum = group.zero();
        for &v in &comp {
            sum = group.add(&sum, &beta[v]);
        }
        if !sum.is_zero() {
            return Err(FlowError::BoundaryComponentSum(comp[0]));
        }
    }
    Ok(())
}

/// An edge-indexed family of group values; the stored value is the flow in
/// the low-to-high direction of each edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flow {
    values: BTreeMap<EdgeId, GroupElement>,
}

impl Flow {
    pub fn from_values(values: BTreeMap<EdgeId, GroupElement>) -> Self {
        Flow { values }
    }

    pub fn values(&self) -> &BTreeMap<EdgeId, GroupElement> {
        &self.values
    }

    /// The value on the dart of `edge` pointing toward `toward`, in `g`.
    pub fn value_toward(
        &self,
        g: &Multigraph,
        group: &Group,
        edge: EdgeId,
        toward: VertexId,
    ) -> Result<GroupElement, FlowError> {
        let e = g.edge(edge).map_err(|_| FlowError::ExtraEdgeValue(edge))?;
        let raw = self
            .values
            .get(&edge)
            .ok_or(FlowError::MissingEdgeValue(edge))?;
        if toward == e.v {
            Ok(raw.clone())
        } else if toward == e.u {
            Ok(group.neg(raw))
        } else {
            Err(FlowError::ExtraEdgeValue(edge))
        }
    }

    /// Independent validator: exact edge set, all values nonzero, and
    /// conservation (net outflow equals the boundary) at every vertex.
    /// Deliberately written against the definition, not the search.
    pub fn validate(&self, bg: &BorderedGraph) -> Result<(), FlowError> {
        let g = bg.graph();
        for e in g.edges() {
            match self.values.get(&e.id) {
                None => return Err(FlowError::MissingEdgeValue(e.id)),
                Some(val) if val.is_zero() => return Err(FlowError::ZeroOnEdge(e.id)),
                Some(_) => {}
            }
        }
        for id in self.values.keys() {
            if g.edge(*id).is_err() {
                return Err(FlowError::ExtraEdgeValue(*id));
            }
        }
        let group = bg.group();
        for v in 0..g.n() {
            let mut out = group.zero();
            for e in g.incident_edges(v) {
                let toward_other = self.value_toward(g, group, e.id, e.other(v))?;
                out = group.add(&out, &toward_other);
            }
            if out != bg.beta()[v] {
                return Err(FlowError::ConservationFails(v));
            }
        }
        Ok(())
    }
}

/// Restriction of a flow to a contraction: surviving edges keep their value,
/// re-signed when the contraction flips the endpoint order the value is
/// stored against. Nowhere-zero survives untouched.
pub fn transport_flow_to_contraction(
    flow: &Flow,
    original: &BorderedGraph,
    partition: &Partition,
    contracted: &BorderedGraph,
) -> Flow {
    let map = partition.part_index_map();
    let group = original.group();
    let mut values = BTreeMap::new();
    for e in original.graph().edges() {
        let (a, b) = (map[e.u], map[e.v]);
        if a == b {
            continue;
        }
        let val = flow.values()[&e.id].clone();
        // stored against e.u < e.v; the contracted edge stores low' -> high'
        values.insert(e.id, if a < b { val } else { group.neg(&val) });
    }
    debug_assert!(contracted
        .graph()
        .edges()
        .iter()
        .all(|e| values.contains_key(&e.id)));
    Flow { values }
}

/// Transports a flow on a split-off graph back to the graph it came from:
/// the new edge's value rides both replaced edges, oriented through the
/// split vertex, and every other edge keeps its value.
pub fn transport_flow_from_split(
    flow_on_split: &Flow,
    original: &BorderedGraph,
    split: &Multigraph,
    e1: EdgeId,
    e2: EdgeId,
    new_edge: EdgeId,
) -> Result<Flow, FlowError> {
    let group = original.group();
    let g = original.graph();
    let a = *g.edge(e1).map_err(|_| FlowError::ExtraEdgeValue(e1))?;
    let b = *g.edge(e2).map_err(|_| FlowError::ExtraEdgeValue(e2))?;
    let shared = if b.touches(a.u) { a.u } else { a.v };
    debug_assert!(b.touches(shared));
    let x = a.other(shared);
    let y = b.other(shared);
    // value along the x -> y direction of the replacement edge
    let through = flow_on_split.value_toward(split, group, new_edge, y)?;
    let mut values = BTreeMap::new();
    for e in g.edges() {
        if e.id == e1 || e.id == e2 {
            continue;
        }
        values.insert(
            e.id,
            flow_on_split
                .values()
                .get(&e.id)
                .ok_or(FlowError::MissingEdgeValue(e.id))?
                .clone(),
        );
    }
    // e1 carries `through` from x into the shared vertex, e2 carries it out to y
    let e1_stored = if a.u == x { through.clone() } else { group.neg(&through) };
    let e2_stored = if b.v == y { through.clone() } else { group.neg(&through) };
    values.insert(e1, e1_stored);
    values.insert(e2, e2_stored);
    Ok(Flow { values })
}

/// Group-element arithmetic on table indices, for the search inner loop.
pub(crate) struct GroupTables {
    pub k: usize,
    add: Vec<u16>,
    neg: Vec<u16>,
}

impl GroupTables {
    pub fn new(group: &Group) -> Self {
        let k = group.order();
        let elems = group.elements();
        let mut add = vec![0u16; k * k];
        let mut neg = vec![0u16; k];
        for a in 0..k {
            neg[a] = group.index_of(&group.neg(&elems[a])) as u16;
            for b in 0..k {
                add[a * k + b] = group.index_of(&group.add(&elems[a], &elems[b])) as u16;
            }
        }
        GroupTables { k, add, neg }
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.k + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }
}

enum SearchGoal {
    FindOne,
    CountAll,
}

/// One connected component prepared for the cotree search.
struct ComponentSearch {
    /// cotree edge indexes (into graph.edges()), in DFS discovery order
    cotree: Vec<usize>,
    /// per cotree position: list of (tree-slot, sign is +1 when true)
    crossings: Vec<Vec<(usize, bool)>>,
    /// per tree-slot: edge index, child vertex, subtree boundary sum (index)
    tree_slots: Vec<(usize, VertexId, u16)>,
    /// per tree-slot: number of crossing cotree edges
    degree: Vec<usize>,
}

fn prepare_component(
    g: &Multigraph,
    beta_idx: &[u16],
    tables: &GroupTables,
    comp: &[VertexId],
    adj: &[Vec<(VertexId, usize)>],
) -> ComponentSearch {
    let root = comp[0];
    let n = g.n();
    let mut parent: Vec<Option<(VertexId, usize)>> = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut preorder = Vec::with_capacity(comp.len());
    let mut in_tree = vec![false; g.m()];
    // iterative DFS for the spanning tree
    let mut stack = vec![root];
    visited[root] = true;
    while let Some(u) = stack.pop() {
        preorder.push(u);
        for &(w, idx) in &adj[u] {
            if !visited[w] {
                visited[w] = true;
                parent[w] = Some((u, idx));
                depth[w] = depth[u] + 1;
                in_tree[idx] = true;
                stack.push(w);
            }
        }
    }
    // subtree boundary sums, children before parents
    let mut subtree_sum = vec![0u16; n];
    for &v in &preorder {
        subtree_sum[v] = beta_idx[v];
    }
    for &v in preorder.iter().rev() {
        if let Some((p, _)) = parent[v] {
            subtree_sum[p] = tables.add(subtree_sum[p], subtree_sum[v]);
        }
    }
    // tree slots in a fixed order
    let mut slot_of_child = vec![usize::MAX; n];
    let mut tree_slots = Vec::new();
    for &v in &preorder {
        if let Some((_, idx)) = parent[v] {
            slot_of_child[v] = tree_slots.len();
            tree_slots.push((idx, v, subtree_sum[v]));
        }
    }
    // cotree edges in discovery order, with their fundamental-path crossings
    let in_comp: Vec<bool> = {
        let mut f = vec![false; n];
        for &v in comp {
            f[v] = true;
        }
        f
    };
    let mut cotree = Vec::new();
    let mut crossings = Vec::new();
    let mut degree = vec![0usize; tree_slots.len()];
    for (idx, e) in g.edges().iter().enumerate() {
        if in_tree[idx] || !in_comp[e.u] {
            continue;
        }
        let mut cross = Vec::new();
        let (mut x, mut y) = (e.u, e.v); // climb from the low endpoint with +1
        while x != y {
            if depth[x] >= depth[y] {
                cross.push((slot_of_child[x], true));
                x = parent[x].expect("not yet at the root").0;
            } else {
                cross.push((slot_of_child[y], false));
                y = parent[y].expect("not yet at the root").0;
            }
        }
        for &(slot, _) in &cross {
            degree[slot] += 1;
        }
        cotree.push(idx);
        crossings.push(cross);
    }
    ComponentSearch {
        cotree,
        crossings,
        tree_slots,
        degree,
    }
}

impl ComponentSearch {
    /// Runs the cotree search; returns the completion count (stopping at the
    /// first under `FindOne`) and the last full assignment's edge values.
    fn run(
        &self,
        g: &Multigraph,
        tables: &GroupTables,
        goal: &SearchGoal,
    ) -> (u128, Option<BTreeMap<EdgeId, u16>>) {
        let slots = self.tree_slots.len();
        let mut acc = vec![0u16; slots];
        let mut remaining = self.degree.clone();
        // a tree edge with no crossings is a bridge: its value is fixed now
        for s in 0..slots {
            if remaining[s] == 0 && self.tree_slots[s].2 == 0 {
                return (0, None);
            }
        }
        let mut chosen = vec![0u16; self.cotree.len()];
        let mut count: u128 = 0;
        let mut witness = None;
        self.descend(
            0,
            tables,
            &mut acc,
            &mut remaining,
            &mut chosen,
            &mut count,
            &mut witness,
            goal,
        );
        let witness = witness.map(|chosen: Vec<u16>| self.extract(g, tables, &chosen));
        (count, witness)
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        pos: usize,
        tables: &GroupTables,
        acc: &mut [u16],
        remaining: &mut [usize],
        chosen: &mut [u16],
        count: &mut u128,
        witness: &mut Option<Vec<u16>>,
        goal: &SearchGoal,
    ) -> bool {
        if pos == self.cotree.len() {
            *count += 1;
            if witness.is_none() {
                *witness = Some(chosen.to_vec());
            }
            return matches!(goal, SearchGoal::FindOne);
        }
        for val in 1..tables.k as u16 {
            chosen[pos] = val;
            let mut ok = true;
            let mut applied = 0usize;
            for (i, &(slot, positive)) in self.crossings[pos].iter().enumerate() {
                let signed = if positive { val } else { tables.neg(val) };
                acc[slot] = tables.add(acc[slot], signed);
                remaining[slot] -= 1;
                applied = i + 1;
                if remaining[slot] == 0 && tables.sub(self.tree_slots[slot].2, acc[slot]) == 0 {
                    ok = false;
                    break;
                }
            }
            if ok
                && self.descend(pos + 1, tables, acc, remaining, chosen, count, witness, goal)
            {
                return true;
            }
            for &(slot, positive) in self.crossings[pos][..applied].iter() {
                let signed = if positive { val } else { tables.neg(val) };
                acc[slot] = tables.sub(acc[slot], signed);
                remaining[slot] += 1;
            }
        }
        false
    }

    /// Rebuilds stored edge values from a full cotree assignment.
    fn extract(
        &self,
        g: &Multigraph,
        tables: &GroupTables,
        chosen: &[u16],
    ) -> BTreeMap<EdgeId, u16> {
        let mut out = BTreeMap::new();
        let mut acc = vec![0u16; self.tree_slots.len()];
        for (pos, &idx) in self.cotree.iter().enumerate() {
            let val = chosen[pos];
            out.insert(g.edges()[idx].id, val);
            for &(slot, positive) in &self.crossings[pos] {
                let signed = if positive { val } else { tables.neg(val) };
                acc[slot] = tables.add(acc[slot], signed);
            }
        }
        for (s, &(idx, child, subtree_sum)) in self.tree_slots.iter().enumerate() {
            let out_of_subtree = tables.sub(subtree_sum, acc[s]);
            let e = &g.edges()[idx];
            // stored low -> high; the out-direction points away from the child
            let stored = if e.u == child {
                out_of_subtree
            } else {
                tables.neg(out_of_subtree)
            };
            out.insert(e.id, stored);
        }
        out
    }
}

fn search(bg: &BorderedGraph, goal: SearchGoal) -> (u128, Option<Flow>) {
    let g = bg.graph();
    let group = bg.group();
    let tables = GroupTables::new(group);
    let beta_idx: Vec<u16> = bg.beta().iter().map(|b| group.index_of(b) as u16).collect();
    let adj = g.incidence_lists();
    let mut total: u128 = 1;
    let mut values = BTreeMap::new();
    for comp in g.components() {
        let prepared = prepare_component(g, &beta_idx, &tables, &comp, &adj);
        let (count, comp_values) = prepared.run(g, &tables, &goal);
        if count == 0 {
            return (0, None);
        }
        total = total.saturating_mul(count);
        values.extend(comp_values.expect("count > 0 leaves a witness"));
    }
    let elems = group.elements();
    let flow = Flow {
        values: values
            .into_iter()
            .map(|(id, idx)| (id, elems[idx as usize].clone()))
            .collect(),
    };
    debug_assert_eq!(flow.validate(bg), Ok(()));
    (total, Some(flow))
}

/// Finds a nowhere-zero flow if one exists. The witness always revalidates.
pub fn has_nz_flow(bg: &BorderedGraph) -> Option<Flow> {
    search(bg, SearchGoal::FindOne).1
}

/// Exact number of nowhere-zero flows (component counts multiply).
pub fn count_nz_flows(bg: &BorderedGraph) -> u128 {
    search(bg, SearchGoal::CountAll).0
}

/// Exact nowhere-zero flow count with the zero boundary, by
/// deletion–contraction on the flow count: contracting a non-bridge edge
/// versus deleting it, with loops created by contraction paid out as a
/// factor of (k-1) each. Independent of the search above; memoized on
/// canonical forms. Depends only on the group's order `k`, never its
/// structure — which is itself one of the cross-checks.
pub fn count_nz_flows_dc(g: &Multigraph, k: usize) -> u128 {
    assert!(k >= 2, "flow counts need a group of order at least 2");
    let mut memo: HashMap<Vec<u8>, i128> = HashMap::new();
    let result = dc(g, k as i128, &mut memo);
    assert!(result >= 0, "flow counts are nonnegative");
    result as u128
}

fn dc(g: &Multigraph, k: i128, memo: &mut HashMap<Vec<u8>, i128>) -> i128 {
    if g.m() == 0 {
        return 1;
    }
    let key = g.canonical_form();
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let bridges: BTreeSet<EdgeId> = g.bridges().into_iter().collect();
    let value = if bridges.len() == g.m() {
        // every remaining edge is a bridge; no nowhere-zero flow survives
        0
    } else {
        let e = *g
            .edges()
            .iter()
            .find(|e| !bridges.contains(&e.id))
            .expect("some non-bridge edge");
        // contracting e turns its parallel copies into loops, each worth k-1
        let loops = g.multiplicity(e.u, e.v) as u32 - 1;
        let (contracted, _) = g.contract_edge(e.id).expect("edge exists");
        let deleted = g.delete_edge(e.id).expect("edge exists");
        (k - 1).pow(loops) * dc(&contracted, k, memo) - dc(&deleted, k, memo)
    };
    memo.insert(key, value);
    value
}

/// The boundary induced on `part` by a nowhere-zero flow `f` of the
/// contraction that merges `part` to a point: each inside vertex keeps its
/// boundary minus what `f` already routes away through its outside edges.
/// Returns the bordered graph on the induced subgraph (vertices relabelled
/// ascending) together with the vertex map.
pub fn induced_boundary(
    bg: &BorderedGraph,
    part: &BTreeSet<VertexId>,
    f: &Flow,
) -> Result<(BorderedGraph, Vec<VertexId>), FlowError> {
    let g = bg.graph();
    let group = bg.group();
    if part.is_empty() || part.iter().any(|&v| v >= g.n()) {
        return Err(FlowError::BadPart);
    }
    let mut parts: Vec<Vec<VertexId>> = vec![part.iter().copied().collect()];
    parts.extend((0..g.n()).filter(|v| !part.contains(v)).map(|v| vec![v]));
    let partition = Partition::from_parts(g.n(), &parts).expect("parts cover the vertex set");
    let (quotient, map) = bg.contract(&partition);
    f.validate(&quotient)?;
    let (sub, sub_map) = g.induced(part);
    let mut beta = Vec::with_capacity(sub.n());
    let ordered: Vec<VertexId> = part.iter().copied().collect();
    for &u in &ordered {
        let mut b = bg.beta()[u].clone();
        for e in g.incident_edges(u) {
            let other = e.other(u);
            if part.contains(&other) {
                continue;
            }
            // value toward `other`, read back through the contraction's relabelling
            let stored = &f.values()[&e.id];
            let toward_high = if map[e.u] < map[e.v] {
                stored.clone()
            } else {
                group.neg(stored)
            };
            let toward_other = if other == e.v {
                toward_high
            } else {
                group.neg(&toward_high)
            };
            b = group.sub(&b, &toward_other);
        }
        beta.push(b);
    }
    debug_assert!(ordered.iter().enumerate().all(|(i, &u)| sub_map[u] == i));
    let bordered = BorderedGraph::new(sub, group.clone(), beta)?;
    Ok((bordered, sub_map))
}

/// Glues a flow on the contracted-outside part to a flow on the induced
/// inside part; together they form a flow of the whole bordered graph.
pub fn combine_flows(
    bg: &BorderedGraph,
    part: &BTreeSet<VertexId>,
    outside: &Flow,
    inside: &Flow,
) -> Result<Flow, FlowError> {
    let g = bg.graph();
    let group = bg.group();
    let mut parts: Vec<Vec<VertexId>> = vec![part.iter().copied().collect()];
    parts.extend((0..g.n()).filter(|v| !part.contains(v)).map(|v| vec![v]));
    let partition = Partition::from_parts(g.n(), &parts).expect("parts cover the vertex set");
    let map = partition.part_index_map();
    let mut values = BTreeMap::new();
    for e in g.edges() {
        let inside_edge = part.contains(&e.u) && part.contains(&e.v);
        if inside_edge {
            // induced relabelling preserves order, so the stored sign holds
            let val = inside
                .values()
                .get(&e.id)
                .ok_or(FlowError::MissingEdgeValue(e.id))?;
            values.insert(e.id, val.clone());
        } else {
            let stored = outside
                .values()
                .get(&e.id)
                .ok_or(FlowError::MissingEdgeValue(e.id))?;
            let val = if map[e.u] < map[e.v] {
                stored.clone()
            } else {
                group.neg(stored)
            };
            values.insert(e.id, val);
        }
    }
    let flow = Flow { values };
    flow.validate(bg)?;
    Ok(flow)
}

/// First boundary (free values on all vertices but the last, in element
/// order) that admits no nowhere-zero flow; `None` means the graph is
/// group-connected. Requires a connected graph.
pub fn group_connectivity_witness(
    g: &Multigraph,
    group: &Group,
) -> Result<Option<Vec<GroupElement>>, FlowError> {
    if !g.is_connected() {
        return Err(FlowError::Disconnected);
    }
    let n = g.n();
    let k = group.order();
    if n == 0 {
        return Ok(None);
    }
    let free = n - 1;
    let total = k.checked_pow(free as u32).expect("boundary space fits");
    for rank in 0..total {
        let mut beta = Vec::with_capacity(n);
        let mut r = rank;
        let mut sum = group.zero();
        for pos in 0..free {
            // most-significant digit first keeps the order lexicographic
            let place = k.pow((free - 1 - pos) as u32);
            let digit = r / place;
            r %= place;
            let e = group.element_at(digit);
            sum = group.add(&sum, &e);
            beta.push(e);
        }
        beta.push(group.neg(&sum));
        let bg = BorderedGraph::new(g.clone(), group.clone(), beta.clone())
            .expect("last value forces a zero sum");
        if has_nz_flow(&bg).is_none() {
            return Ok(Some(beta));
        }
    }
    Ok(None)
}

pub fn is_group_connected(g: &Multigraph, group: &Group) -> Result<bool, FlowError> {
    Ok(group_connectivity_witness(g, group)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u16) -> Group {
        Group::cyclic(n).unwrap()
    }

    fn petersen() -> Multigraph {
        let mut pairs = Vec::new();
        for i in 0..5 {
            pairs.push((i, (i + 1) % 5)); // outer cycle
            pairs.push((i, i + 5)); // spokes
            pairs.push((i + 5, (i + 2) % 5 + 5)); // pentagram
        }
        Multigraph::from_edge_list(10, &pairs).unwrap()
    }

    #[test]
    fn triangle_z3_has_exactly_two_flows() {
        let bg = BorderedGraph::with_zero_boundary(Multigraph::cycle(3), z(3));
        assert_eq!(count_nz_flows(&bg), 2);
        let f = has_nz_flow(&bg).expect("cycle has a flow");
        f.validate(&bg).unwrap();
    }

    #[test]
    fn k4_counts_across_groups() {
        let k4 = Multigraph::complete(4);
        assert_eq!(count_nz_flows(&BorderedGraph::with_zero_boundary(k4.clone(), z(3))), 0);
        assert_eq!(count_nz_flows(&BorderedGraph::with_zero_boundary(k4.clone(), z(5))), 24);
        // groups of order 4: count is 6 either way, matching deletion-contraction
        let z4 = count_nz_flows(&BorderedGraph::with_zero_boundary(k4.clone(), z(4)));
        let klein = count_nz_flows(&BorderedGraph::with_zero_boundary(
            k4.clone(),
            Group::new(&[2, 2]).unwrap(),
        ));
        assert_eq!(z4, 6);
        assert_eq!(klein, 6);
        assert_eq!(count_nz_flows_dc(&k4, 4), 6);
        assert_eq!(count_nz_flows_dc(&k4, 3), 0);
        assert_eq!(count_nz_flows_dc(&k4, 5), 24);
    }

    #[test]
    fn bridges_kill_zero_boundary_flows() {
        // two triangles joined by a bridge
        let g = Multigraph::from_edge_list(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)],
        )
        .unwrap();
        let bg = BorderedGraph::with_zero_boundary(g.clone(), z(5));
        assert_eq!(count_nz_flows(&bg), 0);
        assert!(has_nz_flow(&bg).is_none());
        assert_eq!(count_nz_flows_dc(&g, 5), 0);
        // a bridge can carry a nonzero boundary, though
        let k2 = Multigraph::path(2);
        let group = z(3);
        let beta = vec![group.element(&[1]), group.element(&[2])];
        let bg = BorderedGraph::new(k2, group, beta).unwrap();
        let f = has_nz_flow(&bg).expect("boundary pushes one unit across");
        f.validate(&bg).unwrap();
    }

    #[test]
    fn petersen_z5_flow_exists_and_counts_agree() {
        let p = petersen();
        let bg = BorderedGraph::with_zero_boundary(p.clone(), z(5));
        let f = has_nz_flow(&bg).expect("Petersen has a nowhere-zero 5-flow");
        f.validate(&bg).unwrap();
        assert_eq!(count_nz_flows(&bg), count_nz_flows_dc(&p, 5));
        // and no nowhere-zero 4-flow: the classic snark obstruction
        assert!(has_nz_flow(&BorderedGraph::with_zero_boundary(p.clone(), z(4))).is_none());
        assert_eq!(count_nz_flows_dc(&p, 4), 0);
    }

    #[test]
    fn triangle_all_ones_boundary_has_no_flow() {
        let group = z(3);
        let beta = vec![group.element(&[1]); 3];
        let bg = BorderedGraph::new(Multigraph::cycle(3), group, beta).unwrap();
        assert!(has_nz_flow(&bg).is_none());
    }

    #[test]
    fn boundary_validation_catches_bad_sums() {
        let group = z(3);
        let beta = vec![group.element(&[1]), group.element(&[1])];
        assert_eq!(
            BorderedGraph::new(Multigraph::path(2), group.clone(), beta),
            Err(FlowError::BoundaryComponentSum(0))
        );
        // zero total across components is not enough: each component must close
        let g = Multigraph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        let beta = vec![
            group.element(&[1]),
            group.element(&[0]),
            group.element(&[0]),
            group.element(&[2]),
        ];
        assert_eq!(
            BorderedGraph::new(g, group, beta),
            Err(FlowError::BoundaryComponentSum(0))
        );
    }

    #[test]
    fn induced_boundary_matches_worked_example() {
        // triangle u,v,w with zero boundary; contract {u,v}; the doubled edge
        // carries 1 toward w on one strand and 2 on the other
        let group = z(3);
        let g = Multigraph::cycle(3); // edges: 0-1 (id 0), 1-2 (id 1), 0-2 (id 2)
        let bg = BorderedGraph::with_zero_boundary(g, group.clone());
        let part: BTreeSet<usize> = [0, 1].into();
        // contraction: vertices {0,1} -> 0, {2} -> 1; edges 1 and 2 survive
        let mut values = BTreeMap::new();
        values.insert(2usize, group.element(&[1])); // 0-2 stored toward 2: value 1
        values.insert(1usize, group.element(&[2])); // 1-2 stored toward 2: value 2
        let f = Flow::from_values(values);
        let (inner, _) = induced_boundary(&bg, &part, &f).unwrap();
        assert_eq!(inner.beta()[0], group.element(&[2])); // vertex u
        assert_eq!(inner.beta()[1], group.element(&[1])); // vertex v
        // the inside graph is a single edge; its flow plus f rebuilds a flow of G
        let inside = has_nz_flow(&inner).expect("K2 with opposite boundary flows");
        let full = combine_flows(&bg, &part, &f, &inside).unwrap();
        full.validate(&bg).unwrap();
    }

    #[test]
    fn split_off_transports_back() {
        // C4 with a chord pattern: split the path 0-1-2 at vertex 1
        let g = Multigraph::cycle(4);
        let group = z(5);
        let bg = BorderedGraph::with_zero_boundary(g.clone(), group.clone());
        let (split, new_edge) = g.split_off(0, 1).unwrap(); // edges 0-1 and 1-2
        let split_bg = BorderedGraph::with_zero_boundary(split.clone(), group.clone());
        let f = has_nz_flow(&split_bg).expect("triangle plus isolated vertex flows");
        let back = transport_flow_from_split(&f, &bg, &split, 0, 1, new_edge).unwrap();
        back.validate(&bg).unwrap();
        assert!(!back.values()[&0].is_zero());
    }

    #[test]
    fn group_connectivity_examples() {
        let group = z(3);
        // the doubled edge is Z3-connected
        let double = Multigraph::from_edge_list(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(group_connectivity_witness(&double, &group).unwrap(), None);
        // the triangle is not; the first failing boundary is all-ones
        let witness = group_connectivity_witness(&Multigraph::cycle(3), &group)
            .unwrap()
            .expect("triangle is not Z3-connected");
        assert_eq!(witness, vec![group.element(&[1]); 3]);
        assert!(matches!(
            group_connectivity_witness(&Multigraph::from_edge_list(3, &[(0, 1)]).unwrap(), &group),
            Err(FlowError::Disconnected)
        ));
    }

    #[test]
    fn flow_transport_to_contraction_stays_valid() {
        let g = Multigraph::complete(4);
        let group = z(5);
        let bg = BorderedGraph::with_zero_boundary(g, group);
        let f = has_nz_flow(&bg).unwrap();
        let partition = Partition::merging_pair(4, 1, 3);
        let (contracted, _) = bg.contract(&partition);
        let moved = transport_flow_to_contraction(&f, &bg, &partition, &contracted);
        moved.validate(&contracted).unwrap();
    }
}

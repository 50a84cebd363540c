//! Simple undirected graphs with stable vertex identities.
//!
//! Vertices are small integer ids backed by one `u128` adjacency row each.
//! Ids survive every operation: deleting or contracting vertices never
//! renumbers the rest. A contraction merges its endpoints into a *fresh* id
//! (one past the largest id seen so far), and the accompanying [`VertexMap`]
//! records where every original vertex went. This is what lets the
//! search-tree solvers relate decisions made deep in a branch back to edges
//! of the input graph.
//!
//! The representation is deliberately dense and capped at [`MAX_VERTICES`]
//! ids; the algorithms built on top are exponential in their budget and only
//! ever see desk-scale instances.

use std::fmt;

use crate::bits;
use crate::{Error, Result};

/// Identifier of a vertex. Stable across contractions and deletions.
pub type VertexId = u32;

/// A set of vertices, as a bitmask over ids.
pub type VertexSet = u128;

/// Hard cap on the id space (original vertices plus fresh contraction ids).
pub const MAX_VERTICES: usize = 128;

/// An unordered edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Canonicalizing constructor.
    ///
    /// # Panics
    /// Panics if `a == b` (self-loops are not representable).
    pub fn new(a: VertexId, b: VertexId) -> Edge {
        assert!(a != b, "self-loop {a}-{a}");
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    /// Smaller endpoint.
    pub fn u(&self) -> VertexId {
        self.u
    }

    /// Larger endpoint.
    pub fn v(&self) -> VertexId {
        self.v
    }

    /// Both endpoints, ascending.
    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Simple undirected graph over stable vertex ids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    /// Bitmask of live vertex ids.
    present: VertexSet,
    /// Adjacency rows indexed by id; `rows.len()` is the id capacity.
    rows: Vec<u128>,
}

impl Graph {
    /// Graph with no vertices.
    pub fn empty() -> Graph {
        Graph {
            present: 0,
            rows: Vec::new(),
        }
    }

    /// Edgeless graph on ids `0..n`.
    ///
    /// # Panics
    /// Panics if `n > MAX_VERTICES`.
    pub fn with_vertices(n: u32) -> Graph {
        assert!(
            (n as usize) <= MAX_VERTICES,
            "vertex count {n} exceeds capacity {MAX_VERTICES}"
        );
        let present = if n == 0 { 0 } else { (!0u128) >> (128 - n) };
        Graph {
            present,
            rows: vec![0; n as usize],
        }
    }

    /// Graph on ids `0..n` with the given edges.
    pub fn from_edges(n: u32, edges: &[(VertexId, VertexId)]) -> Graph {
        let mut g = Graph::with_vertices(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Inserts the edge `a-b`.
    ///
    /// # Panics
    /// Panics on self-loops or dead endpoints.
    pub fn add_edge(&mut self, a: VertexId, b: VertexId) {
        assert!(a != b, "self-loop {a}-{a}");
        assert!(
            self.has_vertex(a) && self.has_vertex(b),
            "edge {a}-{b} references a dead vertex"
        );
        self.rows[a as usize] |= bits::bit(b);
        self.rows[b as usize] |= bits::bit(a);
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        (v as usize) < self.rows.len() && self.present & bits::bit(v) != 0
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        (a as usize) < self.rows.len()
            && (b as usize) < MAX_VERTICES
            && self.rows[a as usize] & bits::bit(b) != 0
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    /// Open neighborhood of `v` as a mask.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> VertexSet {
        self.rows[v as usize]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: VertexId) -> VertexSet {
        self.rows[v as usize] | bits::bit(v)
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        bits::count(self.rows[v as usize])
    }

    /// Mask of live vertex ids.
    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        self.present
    }

    /// Live vertex ids in ascending order.
    pub fn vertices(&self) -> bits::BitIter {
        bits::iter(self.present)
    }

    pub fn vertex_count(&self) -> usize {
        bits::count(self.present)
    }

    pub fn edge_count(&self) -> usize {
        let sum: usize = self.vertices().map(|v| self.degree(v)).sum();
        sum / 2
    }

    /// All edges in canonical `(u, v)` ascending order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for v in bits::iter(self.rows[u as usize]) {
                if v > u {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    /// Edges with both endpoints inside `mask`, canonical order.
    pub fn edges_within(&self, mask: VertexSet) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in bits::iter(self.present & mask) {
            for v in bits::iter(self.rows[u as usize] & mask) {
                if v > u {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    /// Induced subgraph on `mask`; ids are preserved.
    pub fn induced(&self, mask: VertexSet) -> Graph {
        let present = self.present & mask;
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, r)| {
                if present & bits::bit(v as VertexId) != 0 {
                    r & present
                } else {
                    0
                }
            })
            .collect();
        Graph { present, rows }
    }

    /// Deletes every vertex in `mask`, preserving the ids of the rest.
    pub fn remove_vertices(&self, mask: VertexSet) -> Graph {
        self.induced(!mask)
    }

    /// True when the ids are exactly `0..vertex_count()`.
    pub fn has_contiguous_ids(&self) -> bool {
        let n = self.vertex_count() as u32;
        self.present == Graph::with_vertices(n).present
    }

    /// True if every pair of distinct vertices in `mask` is adjacent.
    pub fn is_clique_set(&self, mask: VertexSet) -> bool {
        let m = mask & self.present;
        bits::iter(m).all(|v| self.rows[v as usize] & m == m & !bits::bit(v))
    }

    /// True if no two vertices in `mask` are adjacent.
    pub fn is_independent_set(&self, mask: VertexSet) -> bool {
        let m = mask & self.present;
        bits::iter(m).all(|v| self.rows[v as usize] & m == 0)
    }

    /// True if the vertices of `mask` induce a connected subgraph.
    /// The empty set and singletons count as connected.
    pub fn is_connected_set(&self, mask: VertexSet) -> bool {
        let m = mask & self.present;
        let Some(start) = bits::first(m) else {
            return true;
        };
        let mut seen = bits::bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u128;
            for v in bits::iter(frontier) {
                next |= self.rows[v as usize] & m & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen == m
    }

    /// Connected components of the live vertex set, each as a mask,
    /// ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = self.present;
        while let Some(start) = bits::first(left) {
            let mut seen = bits::bit(start);
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0u128;
                for v in bits::iter(frontier) {
                    next |= self.rows[v as usize] & left & !seen;
                }
                seen |= next;
                frontier = next;
            }
            out.push(seen);
            left &= !seen;
        }
        out
    }

    /// Largest live id plus one (0 for the empty graph).
    pub fn id_capacity(&self) -> usize {
        match 128u32.checked_sub(self.present.leading_zeros()) {
            Some(c) => c as usize,
            None => 0,
        }
    }

    fn fresh_ids(&self, count: usize) -> Vec<VertexId> {
        let base = self.id_capacity();
        assert!(
            base + count <= MAX_VERTICES,
            "id space exhausted: {base} live + {count} fresh exceeds {MAX_VERTICES}"
        );
        (0..count).map(|i| (base + i) as VertexId).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, V={:?}, E={:?})",
            self.vertex_count(),
            bits::to_vec(self.present),
            self.edges()
        )
    }
}

/// Total map from the vertices of one graph onto the vertices of a
/// contraction of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    map: Vec<VertexId>,
}

impl VertexMap {
    /// Identity on `0..capacity`.
    pub fn identity(capacity: usize) -> VertexMap {
        VertexMap {
            map: (0..capacity as VertexId).collect(),
        }
    }

    /// Image of `v`.
    #[inline]
    pub fn apply(&self, v: VertexId) -> VertexId {
        self.map[v as usize]
    }

    /// Image of a vertex set.
    pub fn apply_set(&self, mask: VertexSet) -> VertexSet {
        bits::iter(mask).fold(0, |acc, v| acc | bits::bit(self.apply(v)))
    }

    /// Composition `other ∘ self` (apply `self` first).
    pub fn then(&self, other: &VertexMap) -> VertexMap {
        VertexMap {
            map: self.map.iter().map(|&v| other.apply(v)).collect(),
        }
    }

    /// Preimage of `v` within the original id range.
    pub fn preimage(&self, v: VertexId) -> VertexSet {
        let mut mask = 0u128;
        for (orig, &img) in self.map.iter().enumerate() {
            if img == v {
                mask |= bits::bit(orig as VertexId);
            }
        }
        mask
    }

    fn new_on(capacity: usize) -> VertexMap {
        VertexMap::identity(capacity)
    }
}

/// A partition of a graph's vertices into connected blocks.
///
/// Contracting every block to a point yields the quotient graph; the blocks
/// witness which original vertices each quotient vertex stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessStructure {
    blocks: Vec<VertexSet>,
}

impl WitnessStructure {
    /// Builds a witness structure from blocks, validating that they are
    /// nonempty, disjoint, and cover exactly the live vertices of `g`.
    /// Connectivity is *not* checked here; [`quotient`] rejects disconnected
    /// blocks so that the error can name the offender.
    pub fn new(g: &Graph, mut blocks: Vec<VertexSet>) -> Result<WitnessStructure> {
        blocks.retain(|&b| b != 0);
        blocks.sort_by_key(|&b| bits::first(b));
        let mut union = 0u128;
        for &b in &blocks {
            if union & b != 0 {
                return Err(Error::PreconditionViolated(
                    "witness blocks overlap".into(),
                ));
            }
            union |= b;
        }
        if union != g.vertex_set() {
            return Err(Error::PreconditionViolated(
                "witness blocks do not cover the vertex set".into(),
            ));
        }
        Ok(WitnessStructure { blocks })
    }

    /// Blocks ordered by smallest member.
    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Sum over blocks of (size - 1): the number of edge contractions the
    /// structure stands for.
    pub fn contraction_cost(&self) -> usize {
        self.blocks.iter().map(|b| bits::count(*b) - 1).sum()
    }
}

/// Contracts a single edge. The merged vertex receives a fresh id adjacent
/// to `N(u) ∪ N(v) − {u, v}`; all other vertices keep their ids.
pub fn contract_edge(g: &Graph, e: Edge) -> Result<(Graph, VertexMap)> {
    contract_edges(g, &[e])
}

/// Contracts a set of edges simultaneously.
///
/// The result is the quotient by the connected components of the spanning
/// subgraph `(V, f)`, so it does not depend on any ordering of `f`.
pub fn contract_edges(g: &Graph, f: &[Edge]) -> Result<(Graph, VertexMap)> {
    let w = witness_from_edges(g, f)?;
    quotient_with_map(g, &w)
}

/// Witness structure whose blocks are the connected components of the
/// spanning subgraph `(V(g), f)`; untouched vertices form singleton blocks.
pub fn witness_from_edges(g: &Graph, f: &[Edge]) -> Result<WitnessStructure> {
    for &e in f {
        if !g.contains(e) {
            return Err(Error::EdgeNotPresent(e));
        }
    }
    // Union-find over ids, then gather blocks.
    let cap = g.id_capacity();
    let mut parent: Vec<VertexId> = (0..cap as VertexId).collect();
    fn find(parent: &mut [VertexId], v: VertexId) -> VertexId {
        let mut r = v;
        while parent[r as usize] != r {
            r = parent[r as usize];
        }
        let mut c = v;
        while parent[c as usize] != r {
            let next = parent[c as usize];
            parent[c as usize] = r;
            c = next;
        }
        r
    }
    for &e in f {
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        if a != b {
            parent[a.max(b) as usize] = a.min(b);
        }
    }
    let mut block_of_root: Vec<VertexSet> = vec![0; cap];
    for v in g.vertices() {
        let r = find(&mut parent, v);
        block_of_root[r as usize] |= bits::bit(v);
    }
    let blocks: Vec<VertexSet> = block_of_root.into_iter().filter(|&b| b != 0).collect();
    WitnessStructure::new(g, blocks)
}

/// Quotient graph of `g` by `w`: one vertex per block, two block-vertices
/// adjacent iff `g` has an edge between the blocks.
///
/// Singleton blocks keep their vertex id; larger blocks receive fresh ids in
/// order of their smallest member.
pub fn quotient(g: &Graph, w: &WitnessStructure) -> Result<Graph> {
    quotient_with_map(g, w).map(|(q, _)| q)
}

/// [`quotient`], also returning the map from original ids to block ids.
pub fn quotient_with_map(g: &Graph, w: &WitnessStructure) -> Result<(Graph, VertexMap)> {
    for &b in w.blocks() {
        if !g.is_connected_set(b) {
            return Err(Error::DisconnectedBlock {
                block: bits::to_vec(b),
            });
        }
    }
    let merged: Vec<VertexSet> = w.blocks().iter().copied().filter(|b| bits::count(*b) > 1).collect();
    let fresh = g.fresh_ids(merged.len());

    let mut map = VertexMap::new_on(g.id_capacity());
    for (block, &id) in merged.iter().zip(&fresh) {
        for v in bits::iter(*block) {
            map.map[v as usize] = id;
        }
    }

    let cap = g.id_capacity() + merged.len();
    let mut rows = vec![0u128; cap];
    let mut present = 0u128;
    for &b in w.blocks() {
        let rep = map.apply(bits::first(b).expect("nonempty block"));
        present |= bits::bit(rep);
        let row: u128 = bits::iter(b).fold(0, |acc, v| acc | g.neighbors(v));
        rows[rep as usize] = map.apply_set(row) & !bits::bit(rep);
    }
    // The OR of mapped neighbor rows is already symmetric: an edge between two
    // blocks contributes to both sides.
    Ok((Graph { present, rows }, map))
}

/// Partitions the live vertices into maximal classes of equal *open*
/// neighborhoods. Each class is an independent set (two adjacent vertices
/// can never share open neighborhoods). Classes are ordered by smallest
/// member, members ascending.
pub fn twin_partition(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut classes: Vec<(VertexSet, Vec<VertexId>)> = Vec::new();
    for v in g.vertices() {
        let nb = g.neighbors(v);
        match classes.iter_mut().find(|(rep, _)| *rep == nb) {
            Some((_, members)) => members.push(v),
            None => classes.push((nb, vec![v])),
        }
    }
    classes.into_iter().map(|(_, m)| m).collect()
}

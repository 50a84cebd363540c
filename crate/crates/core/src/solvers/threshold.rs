//! Threshold contraction on split inputs.
//!
//! Split graphs stay split under contraction and never grow longer induced
//! paths, so the problem is exactly: kill every induced P4 with at most `k`
//! contractions. Each induced P4 of a split graph runs independent-clique-
//! clique-independent; there are five ways to destroy one, giving a bounded
//! five-way search tree. Two of the ways only *commit* a clique vertex to
//! being touched (set `T`) and mark the paths that commitment will handle;
//! the leaves then grow a bounded candidate set and finish exhaustively.
//!
//! The tree is a sound YES-detector (all certificates re-verify), but the
//! bookkeeping can strand a solution: committed vertices stay in `T` after a
//! later branch contracts their promised edge, and a solved leaf then fails
//! the `|T'| ≤ 2k'` gate (observed on a 10-vertex split graph at k = 2). A
//! NO from the tree is therefore confirmed by exhaustive search before being
//! reported.

use crate::bits;
use crate::graph::{Graph, VertexId, VertexSet};
use crate::oracle::{min_contraction_in_pool, ContractionSolution};
use crate::recognition::{self, split_partition_max_clique, TargetClass};
use crate::solvers::{SolveStats, Trail};
use crate::{Error, Result};

/// Decides whether at most `k` contractions turn the split graph `g` into a
/// threshold graph. Fails with [`Error::NotSplit`] on non-split inputs.
pub fn threshold_contraction_split(g: &Graph, k: u32) -> Result<Option<ContractionSolution>> {
    let mut stats = SolveStats::default();
    threshold_contraction_split_with_stats(g, k, &mut stats)
}

/// [`threshold_contraction_split`] with search counters; the counters also
/// carry the structural bound checks (`bound_violations` stays 0 unless the
/// candidate-set cap is ever exceeded). The exhaustive confirmation of NO
/// answers can fail with [`Error::BudgetTooLarge`] on instances far beyond
/// the intended scale.
pub fn threshold_contraction_split_with_stats(
    g: &Graph,
    k: u32,
    stats: &mut SolveStats,
) -> Result<Option<ContractionSolution>> {
    let part = split_partition_max_clique(g).map_err(|_| Error::NotSplit)?;
    let root = Node {
        trail: Trail::new(g),
        k,
        kmask: part.clique,
        tmask: 0,
        marks: Vec::new(),
    };
    if let Some(sol) = search(root, stats)? {
        return Ok(Some(sol));
    }
    let (sol, ostats) = crate::oracle::oracle_contraction_capped(
        g,
        k,
        TargetClass::Threshold,
        crate::oracle::DEFAULT_ENUMERATION_CAP,
    )?;
    stats.subset_checks += ostats.leaves;
    Ok(sol)
}

#[derive(Clone)]
struct Node {
    trail: Trail,
    k: u32,
    /// Clique side of the tracked split partition; contractions involving a
    /// clique vertex keep the merged vertex on the clique side.
    kmask: VertexSet,
    /// Clique vertices committed to being incident with a solution edge.
    tmask: VertexSet,
    /// Anchor pairs `(a, b)`: every induced P4 containing both is marked.
    marks: Vec<(VertexId, VertexId)>,
}

impl Node {
    fn contract(&self, a: VertexId, b: VertexId) -> Node {
        let mut trail = self.trail.clone();
        let merged = trail.contract_current(a, b);
        let remap_mask = |mask: VertexSet| {
            if mask & (bits::bit(a) | bits::bit(b)) != 0 {
                (mask & !(bits::bit(a) | bits::bit(b))) | bits::bit(merged)
            } else {
                mask
            }
        };
        let remap_v = |v: VertexId| if v == a || v == b { merged } else { v };
        Node {
            trail,
            k: self.k - 1,
            kmask: remap_mask(self.kmask),
            tmask: remap_mask(self.tmask),
            marks: self
                .marks
                .iter()
                .map(|&(x, y)| (remap_v(x), remap_v(y)))
                .collect(),
        }
    }

    fn commit(&self, vertex: VertexId, anchor: VertexId) -> Node {
        let mut child = self.clone();
        child.tmask |= bits::bit(vertex);
        child.marks.push((vertex, anchor));
        child
    }
}

fn search(node: Node, stats: &mut SolveStats) -> Result<Option<ContractionSolution>> {
    match first_unmarked_p4(&node) {
        None => leaf(node, stats),
        Some([v1, v2, v3, v4]) => {
            if node.k == 0 || bits::count(node.tmask) >= 2 * node.k as usize {
                // A live unmarked P4 at exhausted budget: reject this branch.
                return Ok(None);
            }
            stats.branch_nodes += 1;
            for child in [
                node.contract(v1, v2),
                node.contract(v3, v4),
                node.contract(v2, v3),
                node.commit(v2, v4),
                node.commit(v3, v1),
            ] {
                if let Some(sol) = search(child, stats)? {
                    return Ok(Some(sol));
                }
            }
            Ok(None)
        }
    }
}

/// Lexicographically first induced P4 `v1-v2-v3-v4` (`v1, v4` independent
/// side, `v2, v3` clique side, canonical orientation `v1 < v4`) that is not
/// covered by any mark pair.
fn first_unmarked_p4(node: &Node) -> Option<[VertexId; 4]> {
    let g = &node.trail.current;
    let km = node.kmask;
    let im = g.vertex_set() & !km;
    for v1 in bits::iter(im) {
        for v2 in bits::iter(g.neighbors(v1) & km) {
            for v3 in bits::iter(km & !g.neighbors(v1) & !bits::bit(v2)) {
                debug_assert!(g.has_edge(v2, v3), "clique side must induce a clique");
                for v4 in bits::iter(g.neighbors(v3) & im & !g.neighbors(v2)) {
                    if v4 <= v1 {
                        continue; // mirrored orientation handled from v4's side
                    }
                    let quad =
                        bits::bit(v1) | bits::bit(v2) | bits::bit(v3) | bits::bit(v4);
                    let marked = node
                        .marks
                        .iter()
                        .any(|&(a, b)| quad & bits::bit(a) != 0 && quad & bits::bit(b) != 0);
                    if !marked {
                        return Some([v1, v2, v3, v4]);
                    }
                }
            }
        }
    }
    None
}

/// Processes a node where every remaining induced P4 is marked.
fn leaf(node: Node, stats: &mut SolveStats) -> Result<Option<ContractionSolution>> {
    if bits::count(node.tmask) > 2 * node.k as usize {
        return Ok(None);
    }
    stats.processed_leaves += 1;
    let g = &node.trail.current;
    let k = node.k;
    debug_assert!(node.tmask & !node.kmask == 0, "T stays on the clique side");
    let krest = node.kmask & !node.tmask;
    let im = g.vertex_set() & !node.kmask;

    // Untouched clique vertex dominating all others by closed neighborhood.
    // G' minus T' is threshold (every P4 is marked, marks anchor in T'), so
    // the closed neighborhoods on krest form a chain; its maximum exists
    // whenever krest does.
    let mut dominator = None;
    if krest != 0 {
        let mut u = bits::first(krest).unwrap();
        for w in bits::iter(krest) {
            let nu = g.closed_neighbors(u);
            let nw = g.closed_neighbors(w);
            if nw & !nu != 0 && nu & !nw == 0 {
                u = w;
            }
        }
        for w in bits::iter(krest) {
            if g.closed_neighbors(w) & !g.closed_neighbors(u) != 0 {
                return Err(Error::InternalInvariantViolation(
                    "no dominating vertex on the untouched clique side".into(),
                ));
            }
        }
        dominator = Some(u);
    }

    // P(w): committed vertices v such that some induced P4 runs through the
    // clique edge w-v. Group the w's by equal P(w), keep the 2k+1 of largest
    // degree per class.
    let mut classes: Vec<(u128, Vec<VertexId>)> = Vec::new();
    for w in bits::iter(krest) {
        let mut pmask = 0u128;
        for v in bits::iter(node.tmask) {
            debug_assert!(g.has_edge(w, v));
            let x_side = g.neighbors(w) & im & !g.neighbors(v);
            let y_side = g.neighbors(v) & im & !g.neighbors(w);
            if x_side != 0 && y_side != 0 {
                pmask |= bits::bit(v);
            }
        }
        if pmask != 0 {
            match classes.iter_mut().find(|(p, _)| *p == pmask) {
                Some((_, members)) => members.push(w),
                None => classes.push((pmask, vec![w])),
            }
        }
    }
    let class_cap = 2 * k as usize + 1;
    let mut rmask: VertexSet = 0;
    for (_, mut members) in classes {
        members.sort_by_key(|&w| (usize::MAX - g.degree(w), w));
        members.truncate(class_cap);
        for w in members {
            rmask |= bits::bit(w);
        }
    }
    let r_bound = (2 * k as u128 + 1).saturating_mul(1u128 << (2 * k).min(120));
    if bits::count(rmask) as u128 > r_bound {
        stats.bound_violations += 1;
    }

    let mut search_mask = node.tmask | rmask;
    if let Some(u) = dominator {
        search_mask |= bits::bit(u);
    }
    let pool = g.edges_within(search_mask);
    stats.max_leaf_pool = stats.max_leaf_pool.max(pool.len());
    let (found, ostats) =
        min_contraction_in_pool(g, k, TargetClass::Threshold, &pool, u64::MAX)?;
    stats.subset_checks += ostats.leaves;
    match found {
        None => Ok(None),
        Some(edges) => {
            let mut trail = node.trail;
            trail.contract_current_set(&edges);
            let sol = trail.into_solution()?;
            if !recognition::is_threshold(&sol.resulting) {
                return Err(Error::InternalInvariantViolation(
                    "composed threshold certificate failed verification".into(),
                ));
            }
            Ok(Some(sol))
        }
    }
}

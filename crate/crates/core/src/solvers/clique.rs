//! Clique contraction by branching on a non-adjacent pair.
//!
//! At every node the solver picks the lexicographically first non-adjacent
//! pair `(u, v)`. In any witness structure of a solution, either the blocks
//! of `u` and `v` coincide or they are adjacent; both cases force an edge
//! incident to `u` or to `v` whose endpoints share a block (a block of size
//! one cannot carry the required cross edge `uv`). Contracting such an edge
//! keeps the instance a YES with budget one less, so branching over all
//! edges at `u` and `v` is complete, and each branch is trivially sound.

use crate::bits;
use crate::graph::Graph;
use crate::oracle::ContractionSolution;
use crate::recognition::is_clique;
use crate::solvers::{SolveStats, Trail};

/// Decides whether `g` becomes a complete graph after at most `k` edge
/// contractions; returns a verifiable certificate on YES.
pub fn clique_contraction(g: &Graph, k: u32) -> Option<ContractionSolution> {
    let mut stats = SolveStats::default();
    clique_contraction_with_stats(g, k, &mut stats)
}

/// [`clique_contraction`] with search counters.
pub fn clique_contraction_with_stats(
    g: &Graph,
    k: u32,
    stats: &mut SolveStats,
) -> Option<ContractionSolution> {
    stats.clique_calls += 1;
    // Contractions never join components, and complete graphs have at most
    // one, so anything disconnected is a NO regardless of budget.
    if g.components().len() > 1 {
        return None;
    }
    let trail = Trail::new(g);
    branch(trail, k, stats).map(|t| {
        t.into_solution()
            .expect("trail edges are input edges by construction")
    })
}

fn branch(trail: Trail, k: u32, stats: &mut SolveStats) -> Option<Trail> {
    let g = &trail.current;
    if is_clique(g) {
        return Some(trail);
    }
    if k == 0 {
        return None;
    }
    let (u, v) = first_nonadjacent_pair(g).expect("non-clique has a non-adjacent pair");
    stats.branch_nodes += 1;
    let candidates = bits::bit(u) | bits::bit(v);
    let mut pool = g.edges();
    pool.retain(|e| (bits::bit(e.u()) | bits::bit(e.v())) & candidates != 0);
    for e in pool {
        let mut child = trail.clone();
        child.contract_current(e.u(), e.v());
        if let Some(done) = branch(child, k - 1, stats) {
            return Some(done);
        }
    }
    None
}

fn first_nonadjacent_pair(g: &Graph) -> Option<(u32, u32)> {
    let verts = bits::to_vec(g.vertex_set());
    for (i, &u) in verts.iter().enumerate() {
        for &v in &verts[i + 1..] {
            if !g.has_edge(u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

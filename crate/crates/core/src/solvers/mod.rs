//! Budget-parameterized search-tree solvers.
//!
//! Three problems, one pattern: branch, contract, and hand every YES back as
//! an edge set of the *input* graph so it can be re-verified independently.

mod clique;
mod split;
mod svd;
mod threshold;

pub use clique::{clique_contraction, clique_contraction_with_stats};
pub use split::{apply_rule2, rule1_rejects, split_contraction, split_contraction_with_stats};
pub use svd::split_vertex_deletion;
pub use threshold::{threshold_contraction_split, threshold_contraction_split_with_stats};

use crate::graph::{contract_edges, Edge, Graph, VertexId, VertexMap};

/// Counters exposed by the solvers for reporting and for the structural
/// bound checks in the test suites.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolveStats {
    /// Interior nodes of the search tree (nodes that actually branched).
    pub branch_nodes: u64,
    /// Leaves that were fully processed (not pruned on entry).
    pub processed_leaves: u64,
    /// Edge subsets tested by exhaustive leaf or reduced-instance searches.
    pub subset_checks: u64,
    /// Invocations of the clique-contraction subsolver.
    pub clique_calls: u64,
    /// Structural bound violations observed (must stay 0).
    pub bound_violations: u64,
    /// Largest candidate-set size seen at a processed leaf.
    pub max_leaf_pool: usize,
}

/// A branch-local view of a partially contracted graph that can always
/// translate one more contraction back into an input-graph edge.
#[derive(Clone)]
pub(crate) struct Trail {
    original: Graph,
    pub current: Graph,
    pub map: VertexMap,
    pub chosen: Vec<Edge>,
}

impl Trail {
    pub fn new(g: &Graph) -> Trail {
        Trail {
            original: g.clone(),
            current: g.clone(),
            map: VertexMap::identity(g.id_capacity()),
            chosen: Vec::new(),
        }
    }

    /// Contracts the current-graph edge `a-b`, recording the lexicographically
    /// first input edge that crosses the two blocks. Returns the merged id.
    pub fn contract_current(&mut self, a: VertexId, b: VertexId) -> VertexId {
        debug_assert!(self.current.has_edge(a, b), "contracting a non-edge");
        let pre = self
            .original
            .edges()
            .into_iter()
            .find(|e| {
                let (iu, iv) = (self.map.apply(e.u()), self.map.apply(e.v()));
                (iu, iv) == (a.min(b), a.max(b)) || (iv, iu) == (a.min(b), a.max(b))
            })
            .expect("a current edge always has an input preimage");
        self.chosen.push(pre);
        let (next, step) =
            contract_edges(&self.current, &[Edge::new(a, b)]).expect("edge verified present");
        self.current = next;
        let merged = step.apply(a);
        self.map = self.map.then(&step);
        merged
    }

    /// Contracts a set of current-graph edges, one translation per edge.
    pub fn contract_current_set(&mut self, edges: &[Edge]) {
        // Translate all preimages against the *same* block structure first:
        // every edge in the set crosses two distinct blocks of the combined
        // witness, so per-edge preimages remain distinct input edges.
        let (next, step) =
            contract_edges(&self.current, edges).expect("edges verified present");
        for e in edges {
            let pre = self
                .original
                .edges()
                .into_iter()
                .find(|cand| {
                    let (iu, iv) = (self.map.apply(cand.u()), self.map.apply(cand.v()));
                    (iu, iv) == e.endpoints() || (iv, iu) == e.endpoints()
                })
                .expect("a current edge always has an input preimage");
            self.chosen.push(pre);
        }
        self.current = next;
        self.map = self.map.then(&step);
    }

    /// Finishes the trail into a solution for the input graph.
    pub fn into_solution(self) -> crate::Result<crate::oracle::ContractionSolution> {
        crate::oracle::ContractionSolution::build(&self.original, self.chosen)
    }
}

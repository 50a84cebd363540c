//! Split vertex deletion by bounded obstruction branching.

use crate::bits;
use crate::graph::{Graph, VertexId, VertexSet};
use crate::pattern::{find_forbidden_masked, SPLIT_OBSTRUCTIONS};

/// Finds a smallest set `D` with `|D| ≤ d` such that `g − D` is split, or
/// `None` if no such set exists.
///
/// Branches on the vertices of an induced 2K2/C4/C5 (at most five choices
/// per violation), trying budgets `0..=d` in increasing order, so the
/// returned set has minimum size. Deterministic: violations come from the
/// lexicographic pattern scan and vertices are tried in ascending order.
pub fn split_vertex_deletion(g: &Graph, d: u32) -> Option<Vec<VertexId>> {
    for budget in 0..=d {
        let mut deleted = Vec::with_capacity(budget as usize);
        if branch(g, g.vertex_set(), budget, &mut deleted) {
            deleted.sort_unstable();
            return Some(deleted);
        }
    }
    None
}

fn branch(g: &Graph, alive: VertexSet, budget: u32, deleted: &mut Vec<VertexId>) -> bool {
    match find_forbidden_masked(g, alive, &SPLIT_OBSTRUCTIONS) {
        None => true,
        Some(occ) => {
            if budget == 0 {
                return false;
            }
            let mut verts = occ.vertices;
            verts.sort_unstable();
            for v in verts {
                deleted.push(v);
                if branch(g, alive & !bits::bit(v), budget - 1, deleted) {
                    return true;
                }
                deleted.pop();
            }
            false
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::is_split;

    fn cycle(n: u32) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn split_graph_needs_no_deletions() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(split_vertex_deletion(&g, 2), Some(vec![]));
    }

    #[test]
    fn c5_needs_one_deletion() {
        let g = cycle(5);
        let d = split_vertex_deletion(&g, 1).unwrap();
        assert_eq!(d.len(), 1);
        assert!(is_split(&g.remove_vertices(bits::bit(d[0]))));
    }

    #[test]
    fn two_k2_is_hopeless_at_zero() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(split_vertex_deletion(&g, 0), None);
    }

    #[test]
    fn deletion_sets_are_minimum() {
        // C6 needs two deletions: removing any one vertex leaves a P5,
        // which still contains a 2K2.
        let g = cycle(6);
        assert!(split_vertex_deletion(&g, 1).is_none());
        let d = split_vertex_deletion(&g, 2).unwrap();
        assert_eq!(d.len(), 2);
        let mask = d.iter().fold(0u128, |m, &v| m | bits::bit(v));
        assert!(is_split(&g.remove_vertices(mask)));
    }
}

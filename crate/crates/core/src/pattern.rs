//! Induced-subgraph search for the four obstruction patterns.
//!
//! Split graphs are exactly the {2K2, C4, C5}-free graphs and threshold
//! graphs the {2K2, C4, P4}-free graphs, so a deterministic "find me one
//! induced occurrence" routine doubles as a certificate producer for both
//! recognizers. The search is a naive scan over 4- and 5-vertex subsets;
//! instance sizes here never make that the bottleneck.

use crate::bits;
use crate::graph::{Graph, VertexId, VertexSet};

/// The four forbidden patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// Two independent edges.
    TwoK2,
    /// Chordless 4-cycle.
    C4,
    /// Chordless 5-cycle.
    C5,
    /// Chordless path on four vertices.
    P4,
}

impl Pattern {
    pub fn vertex_count(&self) -> usize {
        match self {
            Pattern::C5 => 5,
            _ => 4,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Pattern::TwoK2 => "2K2",
            Pattern::C4 => "C4",
            Pattern::C5 => "C5",
            Pattern::P4 => "P4",
        }
    }
}

/// Obstruction set characterizing split graphs.
pub const SPLIT_OBSTRUCTIONS: [Pattern; 3] = [Pattern::TwoK2, Pattern::C4, Pattern::C5];

/// Obstruction set characterizing threshold graphs.
pub const THRESHOLD_OBSTRUCTIONS: [Pattern; 3] = [Pattern::TwoK2, Pattern::C4, Pattern::P4];

/// An induced occurrence: the pattern and its vertices in canonical order
/// (matching order for 2K2, traversal order for paths and cycles).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub pattern: Pattern,
    pub vertices: Vec<VertexId>,
}

/// Finds the first induced occurrence of any pattern in `family`.
///
/// Deterministic: 4-vertex subsets are scanned in lexicographic order of
/// their sorted id tuples (patterns tried in `family` order per subset),
/// then 5-vertex subsets for C5. Returns `None` iff the graph contains no
/// induced occurrence of any family member.
pub fn find_forbidden(g: &Graph, family: &[Pattern]) -> Option<Occurrence> {
    find_forbidden_masked(g, g.vertex_set(), family)
}

/// [`find_forbidden`] restricted to the subgraph induced by `mask`.
pub fn find_forbidden_masked(g: &Graph, mask: VertexSet, family: &[Pattern]) -> Option<Occurrence> {
    let verts = bits::to_vec(g.vertex_set() & mask);
    let quads: Vec<Pattern> = family
        .iter()
        .copied()
        .filter(|p| p.vertex_count() == 4)
        .collect();
    if !quads.is_empty() && verts.len() >= 4 {
        let n = verts.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let quad = [verts[a], verts[b], verts[c], verts[d]];
                        for &p in &quads {
                            if let Some(vs) = match_quad(g, quad, p) {
                                return Some(Occurrence {
                                    pattern: p,
                                    vertices: vs,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    if family.contains(&Pattern::C5) && verts.len() >= 5 {
        let n = verts.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        for e in d + 1..n {
                            let five = [verts[a], verts[b], verts[c], verts[d], verts[e]];
                            if let Some(vs) = match_c5(g, five) {
                                return Some(Occurrence {
                                    pattern: Pattern::C5,
                                    vertices: vs,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// True iff the subgraph induced by `mask` contains no pattern from `family`.
pub fn is_free_of(g: &Graph, family: &[Pattern]) -> bool {
    find_forbidden(g, family).is_none()
}

fn match_quad(g: &Graph, q: [VertexId; 4], p: Pattern) -> Option<Vec<VertexId>> {
    let [a, b, c, d] = q;
    let e = |x: VertexId, y: VertexId| g.has_edge(x, y);
    let edge_count = [e(a, b), e(a, c), e(a, d), e(b, c), e(b, d), e(c, d)]
        .iter()
        .filter(|&&x| x)
        .count();
    match p {
        Pattern::TwoK2 => {
            if edge_count != 2 {
                return None;
            }
            if e(a, b) && e(c, d) {
                Some(vec![a, b, c, d])
            } else if e(a, c) && e(b, d) {
                Some(vec![a, c, b, d])
            } else if e(a, d) && e(b, c) {
                Some(vec![a, d, b, c])
            } else {
                None
            }
        }
        Pattern::C4 => {
            if edge_count != 4 {
                return None;
            }
            let mask = bits::bit(a) | bits::bit(b) | bits::bit(c) | bits::bit(d);
            if q.iter().any(|&v| bits::count(g.neighbors(v) & mask) != 2) {
                return None;
            }
            // Walk the cycle from `a` through its smaller neighbor.
            let nbrs = bits::to_vec(g.neighbors(a) & mask);
            let (n1, n2) = (nbrs[0], nbrs[1]);
            let x = q
                .iter()
                .copied()
                .find(|&v| v != a && v != n1 && v != n2)
                .unwrap();
            Some(vec![a, n1, x, n2])
        }
        Pattern::P4 => {
            if edge_count != 3 {
                return None;
            }
            let mask = bits::bit(a) | bits::bit(b) | bits::bit(c) | bits::bit(d);
            let mut ends: Vec<VertexId> = q
                .iter()
                .copied()
                .filter(|&v| bits::count(g.neighbors(v) & mask) == 1)
                .collect();
            if ends.len() != 2 {
                return None; // triangle plus isolated, or a star
            }
            ends.sort_unstable();
            let (s, t) = (ends[0], ends[1]);
            let m1 = bits::first(g.neighbors(s) & mask).unwrap();
            let m2 = bits::first(g.neighbors(t) & mask).unwrap();
            debug_assert!(g.has_edge(m1, m2));
            Some(vec![s, m1, m2, t])
        }
        Pattern::C5 => None,
    }
}

fn match_c5(g: &Graph, q: [VertexId; 5]) -> Option<Vec<VertexId>> {
    let mask: VertexSet = q.iter().fold(0, |acc, &v| acc | bits::bit(v));
    if q.iter().any(|&v| bits::count(g.neighbors(v) & mask) != 2) {
        return None;
    }
    // Degrees all 2 on five vertices means a disjoint union of cycles; the
    // only option with 5 vertices is a single C5. Walk it from q[0].
    let start = q[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = bits::first(g.neighbors(start) & mask).unwrap();
    while cur != start {
        order.push(cur);
        let next = bits::first(g.neighbors(cur) & mask & !bits::bit(prev) & !bits::bit(cur)).unwrap();
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(order.len(), 5);
    Some(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn cycle(n: u32) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn c5_is_found_as_itself() {
        let g = cycle(5);
        let occ = find_forbidden(&g, &SPLIT_OBSTRUCTIONS).unwrap();
        assert_eq!(occ.pattern, Pattern::C5);
        assert_eq!(occ.vertices, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn complete_graph_is_clean() {
        let mut g = Graph::with_vertices(4);
        for u in 0..4 {
            for v in u + 1..4 {
                g.add_edge(u, v);
            }
        }
        assert!(find_forbidden(&g, &THRESHOLD_OBSTRUCTIONS).is_none());
        assert!(find_forbidden(&g, &SPLIT_OBSTRUCTIONS).is_none());
    }

    #[test]
    fn p4_is_found() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let occ = find_forbidden(&g, &[Pattern::P4]).unwrap();
        assert_eq!(occ.pattern, Pattern::P4);
        assert_eq!(occ.vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn two_k2_found_in_matching_order() {
        let g = Graph::from_edges(4, &[(0, 2), (1, 3)]);
        let occ = find_forbidden(&g, &SPLIT_OBSTRUCTIONS).unwrap();
        assert_eq!(occ.pattern, Pattern::TwoK2);
        assert_eq!(occ.vertices, vec![0, 2, 1, 3]);
    }

    #[test]
    fn c4_reported_in_cycle_order() {
        let g = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]);
        let occ = find_forbidden(&g, &[Pattern::C4]).unwrap();
        assert_eq!(occ.pattern, Pattern::C4);
        // Cycle through 0: neighbors 2 and 3, remaining vertex 1.
        assert_eq!(occ.vertices, vec![0, 2, 1, 3]);
    }

    #[test]
    fn masked_search_ignores_outside_vertices() {
        let g = cycle(5);
        assert!(find_forbidden_masked(&g, 0b01111, &SPLIT_OBSTRUCTIONS).is_none());
        assert!(find_forbidden_masked(&g, !0, &SPLIT_OBSTRUCTIONS).is_some());
    }
}

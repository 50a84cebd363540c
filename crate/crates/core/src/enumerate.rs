//! Enumeration and seeded generation of test instances.

use rand::Rng;

use crate::graph::{Graph, VertexId};
use crate::oracle::BipartiteInstance;

/// Number of vertex pairs on `n` vertices, i.e. the number of bits in an
/// edge mask.
pub fn pair_count(n: u32) -> u32 {
    n * n.saturating_sub(1) / 2
}

/// Builds the graph on `0..n` whose edge set is encoded by `mask`: bit `i`
/// of the mask is the i-th pair `(u, v)`, `u < v`, in lexicographic order.
pub fn graph_from_mask(n: u32, mask: u64) -> Graph {
    let mut g = Graph::with_vertices(n);
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
            i += 1;
        }
    }
    g
}

/// All labeled graphs on exactly `n` vertices, in edge-mask order.
///
/// # Panics
/// Panics if `pair_count(n) > 63`.
pub fn all_graphs(n: u32) -> impl Iterator<Item = Graph> {
    let bits = pair_count(n);
    assert!(bits <= 63, "too many labeled graphs to enumerate");
    (0u64..1 << bits).map(move |mask| graph_from_mask(n, mask))
}

/// Uniform random graph on `n` vertices with edge probability `p`.
pub fn random_graph<R: Rng>(n: u32, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::with_vertices(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random split graph: a clique of random size on the low ids, an
/// independent set on the rest, and cross edges with probability 1/2.
pub fn random_split_graph<R: Rng>(n: u32, rng: &mut R) -> Graph {
    let clique = rng.random_range(0..=n);
    let mut g = Graph::with_vertices(n);
    for u in 0..clique {
        for v in u + 1..clique {
            g.add_edge(u, v);
        }
    }
    for u in 0..clique {
        for v in clique..n {
            if rng.random_bool(0.5) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random triangle-free graph with one twin class inflated to
/// `class_size` members, for exercising the twin reduction rule.
///
/// The base is a random bipartite graph on `3 + 3` vertices; vertex 0 is
/// then cloned `class_size - 1` times (same open neighborhood, no edges
/// inside the class). Triangle-freeness keeps every induced split subgraph's
/// clique side at size at most 2.
pub fn random_inflated_twin_graph<R: Rng>(class_size: u32, rng: &mut R) -> Graph {
    let left = 3u32;
    let right = 3u32;
    let n = left + right + class_size - 1;
    let mut g = Graph::with_vertices(n);
    let mut nbrs0: Vec<VertexId> = Vec::new();
    for u in 0..left {
        for v in left..left + right {
            // Keep vertex 0 non-isolated so the class actually interacts.
            let p = if u == 0 { 0.7 } else { 0.5 };
            if rng.random_bool(p) {
                g.add_edge(u, v);
                if u == 0 {
                    nbrs0.push(v);
                }
            }
        }
    }
    if nbrs0.is_empty() {
        g.add_edge(0, left);
        nbrs0.push(left);
    }
    for clone in left + right..n {
        for &v in &nbrs0 {
            g.add_edge(clone, v);
        }
    }
    g
}

/// Random bipartite instance with `nx + ny` vertices, edge probability `p`,
/// and budget `t`.
pub fn random_bipartite<R: Rng>(nx: u32, ny: u32, p: f64, t: u32, rng: &mut R) -> BipartiteInstance {
    let mut edges = Vec::new();
    for x in 0..nx {
        for y in nx..nx + ny {
            if rng.random_bool(p) {
                edges.push((x, y));
            }
        }
    }
    BipartiteInstance::new(nx, ny, &edges, t).expect("edges are crossing by construction")
}

/// All bipartite edge patterns for sides of size `nx`, `ny`: bit `i` of the
/// mask is the pair `(x, y)` in row-major order.
pub fn bipartite_from_mask(nx: u32, ny: u32, mask: u64, t: u32) -> BipartiteInstance {
    let mut edges = Vec::new();
    let mut i = 0;
    for x in 0..nx {
        for y in nx..nx + ny {
            if mask >> i & 1 == 1 {
                edges.push((x, y));
            }
            i += 1;
        }
    }
    BipartiteInstance::new(nx, ny, &edges, t).expect("edges are crossing by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn graph_counts_match() {
        assert_eq!(all_graphs(3).count(), 8);
        assert_eq!(all_graphs(4).count(), 64);
    }

    #[test]
    fn mask_roundtrip_edge_order() {
        let g = graph_from_mask(4, 0b1);
        assert!(g.has_edge(0, 1));
        assert_eq!(g.edge_count(), 1);
        let g = graph_from_mask(4, 0b100000);
        assert!(g.has_edge(2, 3));
    }

    #[test]
    fn random_split_graphs_are_split() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_split_graph(9, &mut rng);
            assert!(crate::recognition::is_split(&g));
        }
    }

    #[test]
    fn inflated_twin_graph_has_big_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = random_inflated_twin_graph(8, &mut rng);
            let classes = crate::graph::twin_partition(&g);
            assert!(classes.iter().any(|c| c.len() >= 8));
        }
    }
}

//! Cross-module invariants, checked against independent brute-force routes.

use contractk::bits;
use contractk::enumerate::{graph_from_mask, pair_count};
use contractk::graph::{
    contract_edge, contract_edges, quotient, twin_partition, witness_from_edges, Edge, Graph,
};
use contractk::io;
use contractk::pattern::{find_forbidden, Pattern, SPLIT_OBSTRUCTIONS, THRESHOLD_OBSTRUCTIONS};
use contractk::recognition::{
    check_split, check_threshold, is_split, is_threshold, SplitCheck, ThresholdCheck,
};
use proptest::prelude::*;

/// Independent occurrence test: does `g` contain an induced subgraph
/// isomorphic to `pattern`, checked by trying every injection of the
/// pattern's vertices into every subset?
fn naive_contains(g: &Graph, pattern: Pattern) -> bool {
    let pat_edges: &[(usize, usize)] = match pattern {
        Pattern::TwoK2 => &[(0, 1), (2, 3)],
        Pattern::C4 => &[(0, 1), (1, 2), (2, 3), (3, 0)],
        Pattern::P4 => &[(0, 1), (1, 2), (2, 3)],
        Pattern::C5 => &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
    };
    let size = pattern.vertex_count();
    let verts = bits::to_vec(g.vertex_set());
    subsets(&verts, size).into_iter().any(|subset| {
        permutations(&subset).into_iter().any(|perm| {
            (0..size).all(|i| {
                (i + 1..size).all(|j| {
                    let expect = pat_edges.contains(&(i, j)) || pat_edges.contains(&(j, i));
                    g.has_edge(perm[i], perm[j]) == expect
                })
            })
        })
    })
}

fn subsets(verts: &[u32], size: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(verts: &[u32], start: usize, size: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..verts.len() {
            cur.push(verts[i]);
            rec(verts, i + 1, size, cur, out);
            cur.pop();
        }
    }
    rec(verts, 0, size, &mut cur, &mut out);
    out
}

fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn arb_graph(max_n: u32) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = pair_count(n);
        (Just(n), 0u64..(1u64 << bits))
    })
    .prop_map(|(n, mask)| graph_from_mask(n, mask))
}

fn arb_graph_with_edges(max_n: u32, max_f: usize) -> impl Strategy<Value = (Graph, Vec<Edge>)> {
    arb_graph(max_n).prop_flat_map(move |g| {
        let edges = g.edges();
        let m = edges.len();
        proptest::collection::vec(0..m.max(1), 0..=max_f).prop_map(move |idxs| {
            let mut f: Vec<Edge> = idxs
                .into_iter()
                .filter(|&i| i < m)
                .map(|i| edges[i])
                .collect();
            f.sort_unstable();
            f.dedup();
            (g.clone(), f)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn contraction_is_order_independent((g, f) in arb_graph_with_edges(8, 3)) {
        let (base, base_map) = contract_edges(&g, &f).unwrap();
        // The set-based operation must not care about slice order.
        let mut rev = f.clone();
        rev.reverse();
        let (again, again_map) = contract_edges(&g, &rev).unwrap();
        prop_assert_eq!(&again, &base);
        prop_assert_eq!(&again_map, &base_map);
        // Sequential one-at-a-time contraction agrees up to relabeling:
        // same block structure, same adjacency between blocks.
        let mut cur = g.clone();
        let mut map = contractk::graph::VertexMap::identity(g.id_capacity());
        for e in &f {
            let (a, b) = (map.apply(e.u()), map.apply(e.v()));
            if a == b {
                continue; // endpoints already merged; edge has dissolved
            }
            let (next, step) = contract_edge(&cur, Edge::new(a, b)).unwrap();
            cur = next;
            map = map.then(&step);
        }
        prop_assert_eq!(cur.vertex_count(), base.vertex_count());
        for u in g.vertices() {
            for v in g.vertices() {
                prop_assert_eq!(
                    map.apply(u) == map.apply(v),
                    base_map.apply(u) == base_map.apply(v),
                    "block structure differs at ({}, {})", u, v
                );
                if u != v {
                    let seq_adj = map.apply(u) != map.apply(v)
                        && cur.has_edge(map.apply(u), map.apply(v));
                    let set_adj = base_map.apply(u) != base_map.apply(v)
                        && base.has_edge(base_map.apply(u), base_map.apply(v));
                    prop_assert_eq!(seq_adj, set_adj);
                }
            }
        }
    }

    #[test]
    fn contraction_equals_witness_quotient((g, f) in arb_graph_with_edges(8, 4)) {
        let (direct, _) = contract_edges(&g, &f).unwrap();
        let w = witness_from_edges(&g, &f).unwrap();
        let via_quotient = quotient(&g, &w).unwrap();
        prop_assert_eq!(direct, via_quotient);
    }

    #[test]
    fn find_forbidden_agrees_with_naive_enumeration(g in arb_graph(8)) {
        for family in [&SPLIT_OBSTRUCTIONS[..], &THRESHOLD_OBSTRUCTIONS[..]] {
            let found = find_forbidden(&g, family).is_some();
            let naive = family.iter().any(|&p| naive_contains(&g, p));
            prop_assert_eq!(found, naive);
        }
        if let Some(occ) = find_forbidden(&g, &SPLIT_OBSTRUCTIONS) {
            // The reported vertices really carry the pattern.
            let sub = occ.vertices.iter().fold(0u128, |m, &v| m | bits::bit(v));
            prop_assert!(naive_contains(&g.induced(sub), occ.pattern));
        }
    }

    #[test]
    fn twin_classes_share_neighborhoods(g in arb_graph(8)) {
        let classes = twin_partition(&g);
        let mut seen = 0u128;
        for class in &classes {
            let rep = g.neighbors(class[0]);
            for &v in class {
                prop_assert_eq!(g.neighbors(v), rep);
                prop_assert_eq!(seen & bits::bit(v), 0);
                seen |= bits::bit(v);
            }
            // Twin classes are independent sets.
            prop_assert_eq!(rep & class.iter().fold(0u128, |m, &v| m | bits::bit(v)), 0);
        }
        prop_assert_eq!(seen, g.vertex_set());
        for (i, a) in classes.iter().enumerate() {
            for b in &classes[i + 1..] {
                prop_assert_ne!(g.neighbors(a[0]), g.neighbors(b[0]));
            }
        }
    }

    #[test]
    fn recognizers_match_their_certificates(g in arb_graph(7)) {
        match check_split(&g) {
            SplitCheck::Split(p) => {
                prop_assert!(is_split(&g));
                prop_assert!(p.is_valid_for(&g));
            }
            SplitCheck::NotSplit(occ) => {
                prop_assert!(!is_split(&g));
                prop_assert!(naive_contains(&g, occ.pattern));
            }
        }
        match check_threshold(&g) {
            ThresholdCheck::Threshold(ord) => {
                prop_assert!(is_threshold(&g));
                prop_assert!(is_split(&g), "threshold implies split");
                prop_assert!(ord.is_valid_for(&g));
            }
            ThresholdCheck::NotThreshold(occ) => {
                prop_assert!(!is_threshold(&g));
                prop_assert!(naive_contains(&g, occ.pattern));
            }
        }
    }

    #[test]
    fn graph_format_roundtrips(g in arb_graph(10)) {
        let text = io::format_graph(&g).unwrap();
        let back = io::parse_graph(&text).unwrap();
        prop_assert_eq!(back, g);
    }
}

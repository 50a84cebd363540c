//! Certificate verification: contract, then recognize.

use crate::graph::{contract_edges, Edge, Graph};
use crate::recognition::{in_class, TargetClass};
use crate::Result;

/// True iff `|f| ≤ k` and contracting `f` in `g` lands in `target`.
/// Fails with [`crate::Error::EdgeNotPresent`] if `f` is not an edge set of `g`.
pub fn verify_certificate(g: &Graph, f: &[Edge], target: TargetClass, k: u32) -> Result<bool> {
    let mut dedup = f.to_vec();
    dedup.sort_unstable();
    dedup.dedup();
    let (contracted, _) = contract_edges(g, &dedup)?;
    Ok(dedup.len() <= k as usize && in_class(&contracted, target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn cycle(n: u32) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn c4_one_edge_is_valid_for_split() {
        let g = cycle(4);
        assert!(verify_certificate(&g, &[Edge::new(0, 1)], TargetClass::Split, 1).unwrap());
    }

    #[test]
    fn c5_one_edge_is_invalid_for_split() {
        let g = cycle(5);
        assert!(!verify_certificate(&g, &[Edge::new(0, 1)], TargetClass::Split, 1).unwrap());
    }

    #[test]
    fn p4_empty_set_is_invalid_for_threshold() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(!verify_certificate(&g, &[], TargetClass::Threshold, 0).unwrap());
    }

    #[test]
    fn budget_overrun_is_invalid() {
        let g = cycle(4);
        let f = [Edge::new(0, 1), Edge::new(2, 3)];
        assert!(!verify_certificate(&g, &f, TargetClass::Split, 1).unwrap());
        assert!(verify_certificate(&g, &f, TargetClass::Split, 2).unwrap());
    }

    #[test]
    fn foreign_edges_are_rejected() {
        let g = cycle(4);
        let err = verify_certificate(&g, &[Edge::new(0, 2)], TargetClass::Split, 1).unwrap_err();
        assert_eq!(err, Error::EdgeNotPresent(Edge::new(0, 2)));
    }
}

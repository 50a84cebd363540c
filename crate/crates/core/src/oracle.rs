//! Brute-force oracles.
//!
//! These are the ground truth the search-tree solvers are validated against:
//! an exact minimum-cardinality contraction oracle, and exact solvers for the
//! three bipartite domination problems. Everything here enumerates, checks,
//! and returns the first (minimum, then lexicographic) certificate, so
//! results are deterministic and independent of the solver code paths.

use crate::bits;
use crate::graph::{contract_edges, Edge, Graph, VertexId, VertexMap, VertexSet};
use crate::recognition::{self, TargetClass};
use crate::{Error, Result};

/// Default cap on the number of edge subsets a contraction oracle may visit.
/// Exceeding it yields [`Error::BudgetTooLarge`] instead of an open-ended run.
pub const DEFAULT_ENUMERATION_CAP: u64 = 100_000_000;

/// A verifiable certificate for a contraction problem: an edge set of the
/// input graph together with the contracted graph it produces.
#[derive(Debug, Clone)]
pub struct ContractionSolution {
    /// Contracted edges, named by input-graph vertex ids, canonical order.
    pub edges: Vec<Edge>,
    /// The graph after contracting `edges`.
    pub resulting: Graph,
    /// Map from input vertices onto `resulting`'s vertices.
    pub map: VertexMap,
}

impl ContractionSolution {
    /// Builds the solution by actually contracting `edges` in `g`.
    pub fn build(g: &Graph, mut edges: Vec<Edge>) -> Result<ContractionSolution> {
        edges.sort_unstable();
        edges.dedup();
        let (resulting, map) = contract_edges(g, &edges)?;
        Ok(ContractionSolution {
            edges,
            resulting,
            map,
        })
    }

    /// The trivial empty solution.
    pub fn trivial(g: &Graph) -> ContractionSolution {
        ContractionSolution::build(g, Vec::new()).expect("empty edge set always contracts")
    }
}

/// Counters reported by the contraction oracle.
#[derive(Debug, Clone, Copy, Default)]
pub struct OracleStats {
    /// Edge subsets whose contraction was actually tested.
    pub leaves: u64,
}

/// Decides whether `g` can be contracted into `target` with at most `k`
/// edges, using the default enumeration cap. Returns a minimum-cardinality
/// certificate (lexicographically first among those) on YES.
pub fn oracle_contraction(
    g: &Graph,
    k: u32,
    target: TargetClass,
) -> Result<Option<ContractionSolution>> {
    oracle_contraction_capped(g, k, target, DEFAULT_ENUMERATION_CAP).map(|(sol, _)| sol)
}

/// [`oracle_contraction`] with an explicit subset cap and visit counters.
pub fn oracle_contraction_capped(
    g: &Graph,
    k: u32,
    target: TargetClass,
    cap: u64,
) -> Result<(Option<ContractionSolution>, OracleStats)> {
    let pool = g.edges();
    let (found, stats) = min_contraction_in_pool(g, k, target, &pool, cap)?;
    let sol = match found {
        Some(edges) => Some(ContractionSolution::build(g, edges)?),
        None => None,
    };
    Ok((sol, stats))
}

/// Core enumeration: smallest `F ⊆ pool`, `|F| ≤ k`, whose contraction puts
/// `g` in `target`; ties broken lexicographically by the pool order.
///
/// Only acyclic subsets are expanded. Any subset containing a cycle within
/// one witness block induces the same quotient as its spanning forest, which
/// is strictly smaller and enumerated earlier, so skipping cyclic subsets
/// changes neither the decision nor the returned minimum certificate.
pub(crate) fn min_contraction_in_pool(
    g: &Graph,
    k: u32,
    target: TargetClass,
    pool: &[Edge],
    cap: u64,
) -> Result<(Option<Vec<Edge>>, OracleStats)> {
    let m = pool.len();
    let max_size = (k as usize).min(m);
    let required = subset_count(m, max_size);
    if required > cap as u128 {
        return Err(Error::BudgetTooLarge { required, cap });
    }

    let mut stats = OracleStats::default();
    let mut state = ContractScratch::new(g);
    for size in 0..=max_size {
        let mut picked = Vec::with_capacity(size);
        if dfs(&mut state, pool, 0, size, target, &mut picked, &mut stats) {
            let edges = picked.iter().map(|&i| pool[i]).collect();
            return Ok((Some(edges), stats));
        }
    }
    Ok((None, stats))
}

fn dfs(
    state: &mut ContractScratch,
    pool: &[Edge],
    start: usize,
    remaining: usize,
    target: TargetClass,
    picked: &mut Vec<usize>,
    stats: &mut OracleStats,
) -> bool {
    if remaining == 0 {
        stats.leaves += 1;
        return state.in_class(target);
    }
    if pool.len() - start < remaining {
        return false;
    }
    let snapshot = state.save();
    for i in start..=pool.len() - remaining {
        let (a, b) = pool[i].endpoints();
        let (ra, rb) = (state.rep(a), state.rep(b));
        if ra == rb {
            continue; // already in one block; a smaller subset covered this
        }
        state.merge(ra, rb);
        picked.push(i);
        if dfs(state, pool, i + 1, remaining - 1, target, picked, stats) {
            return true;
        }
        picked.pop();
        state.restore(&snapshot);
    }
    false
}

/// Number of subsets of size at most `k` from `m` elements, saturating.
fn subset_count(m: usize, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for j in 0..=k.min(m) {
        if j > 0 {
            binom = match binom.checked_mul((m - j + 1) as u128) {
                Some(x) => x / j as u128,
                None => return u128::MAX,
            };
        }
        total = total.saturating_add(binom);
    }
    total
}

/// Scratch state for incremental contraction during subset enumeration:
/// merged adjacency rows keyed by block representatives.
struct ContractScratch {
    present: VertexSet,
    rows: Vec<u128>,
    rep: Vec<VertexId>,
}

#[derive(Clone)]
struct Snapshot {
    present: VertexSet,
    rows: Vec<u128>,
    rep: Vec<VertexId>,
}

impl ContractScratch {
    fn new(g: &Graph) -> ContractScratch {
        let cap = g.id_capacity();
        let rows = (0..cap as u32).map(|v| {
            if g.has_vertex(v) {
                g.neighbors(v)
            } else {
                0
            }
        });
        ContractScratch {
            present: g.vertex_set(),
            rows: rows.collect(),
            rep: (0..cap as VertexId).collect(),
        }
    }

    #[inline]
    fn rep(&self, v: VertexId) -> VertexId {
        self.rep[v as usize]
    }

    /// Merges block `rb` into block `ra` (both representatives, distinct).
    fn merge(&mut self, ra: VertexId, rb: VertexId) {
        let (ra, rb) = (ra.min(rb), ra.max(rb));
        let merged = (self.rows[ra as usize] | self.rows[rb as usize])
            & !bits::bit(ra)
            & !bits::bit(rb);
        self.rows[ra as usize] = merged;
        self.rows[rb as usize] = 0;
        self.present &= !bits::bit(rb);
        for w in bits::iter(merged) {
            self.rows[w as usize] = (self.rows[w as usize] | bits::bit(ra)) & !bits::bit(rb);
        }
        for r in self.rep.iter_mut() {
            if *r == rb {
                *r = ra;
            }
        }
    }

    fn save(&self) -> Snapshot {
        Snapshot {
            present: self.present,
            rows: self.rows.clone(),
            rep: self.rep.clone(),
        }
    }

    fn restore(&mut self, s: &Snapshot) {
        self.present = s.present;
        self.rows.copy_from_slice(&s.rows);
        self.rep.copy_from_slice(&s.rep);
    }

    fn in_class(&self, target: TargetClass) -> bool {
        match target {
            TargetClass::Split => recognition::split_mask_check(self.present, &self.rows[..]),
            TargetClass::Threshold => {
                recognition::threshold_mask_check(self.present, &self.rows[..])
            }
            TargetClass::Clique => recognition::clique_mask_check(self.present, &self.rows[..]),
        }
    }
}

/// A two-sided instance for the domination problems: sides `X` and `Y`,
/// edges crossing between them, and a budget `t`.
///
/// Vertex ids follow the text format: `X` is `0..x_count`, `Y` is
/// `x_count..x_count + y_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteInstance {
    x_count: u32,
    y_count: u32,
    edges: Vec<(VertexId, VertexId)>,
    /// Adjacency from each x (by index) into Y, bits are y *indices*.
    x_adj: Vec<u128>,
    budget: u32,
}

impl BipartiteInstance {
    /// Validating constructor; edges must cross the sides and are stored
    /// as `(x, y)` with global ids.
    pub fn new(
        x_count: u32,
        y_count: u32,
        edges: &[(VertexId, VertexId)],
        budget: u32,
    ) -> Result<BipartiteInstance> {
        assert!((x_count + y_count) as usize <= crate::graph::MAX_VERTICES);
        let mut x_adj = vec![0u128; x_count as usize];
        let mut canon: Vec<(VertexId, VertexId)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            let (x, y) = if a < x_count { (a, b) } else { (b, a) };
            if x >= x_count || y < x_count || y >= x_count + y_count {
                return Err(Error::PreconditionViolated(format!(
                    "edge {a}-{b} does not cross the bipartition"
                )));
            }
            x_adj[x as usize] |= bits::bit(y - x_count);
            canon.push((x, y));
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(BipartiteInstance {
            x_count,
            y_count,
            edges: canon,
            x_adj,
            budget,
        })
    }

    pub fn x_count(&self) -> u32 {
        self.x_count
    }

    pub fn y_count(&self) -> u32 {
        self.y_count
    }

    /// The budget `t` carried by the instance.
    pub fn budget(&self) -> u32 {
        self.budget
    }

    /// Same instance with a different budget.
    pub fn with_budget(&self, t: u32) -> BipartiteInstance {
        let mut out = self.clone();
        out.budget = t;
        out
    }

    /// Edges as `(x, y)` global-id pairs, sorted.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Global ids of the X side.
    pub fn x_ids(&self) -> impl Iterator<Item = VertexId> {
        0..self.x_count
    }

    /// Global ids of the Y side.
    pub fn y_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.x_count..self.x_count + self.y_count
    }

    /// Neighbors of the x with index `xi`, as a mask of y indices.
    pub fn x_neighbors(&self, xi: u32) -> u128 {
        self.x_adj[xi as usize]
    }

    /// Neighbors of the y with index `yi`, as a mask of x indices.
    pub fn y_neighbors(&self, yi: u32) -> u128 {
        let mut mask = 0u128;
        for (xi, &adj) in self.x_adj.iter().enumerate() {
            if adj & bits::bit(yi) != 0 {
                mask |= bits::bit(xi as u32);
            }
        }
        mask
    }

    /// True iff the x-index set dominates all of Y.
    pub fn x_set_dominates_y(&self, x_idx_mask: u128) -> bool {
        let covered = bits::iter(x_idx_mask).fold(0u128, |acc, xi| acc | self.x_adj[xi as usize]);
        covered & self.full_y_mask() == self.full_y_mask()
    }

    /// True iff the y-index set dominates all of X.
    pub fn y_set_dominates_x(&self, y_idx_mask: u128) -> bool {
        self.x_adj.iter().all(|&adj| adj & y_idx_mask != 0)
    }

    fn full_y_mask(&self) -> u128 {
        if self.y_count == 0 {
            0
        } else {
            (!0u128) >> (128 - self.y_count)
        }
    }

    /// The underlying graph on global ids (useful for tests and embedding).
    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.x_count + self.y_count, &self.edges)
    }
}

/// Smallest `S ⊆ Y` with `|S| ≤ t` dominating X, as global ids.
pub fn oracle_rbds(inst: &BipartiteInstance) -> Option<Vec<VertexId>> {
    let t = inst.budget().min(inst.y_count);
    for size in 0..=t {
        let mut combo = Vec::with_capacity(size as usize);
        if let Some(found) = combos(inst.y_count, size, 0, &mut combo, &mut |mask| {
            inst.y_set_dominates_x(mask)
        }) {
            return Some(bits::iter(found).map(|yi| yi + inst.x_count).collect());
        }
    }
    None
}

/// Smallest `S ⊆ X` with `|S| ≤ t` dominating Y, as global ids.
pub fn oracle_osds(inst: &BipartiteInstance) -> Option<Vec<VertexId>> {
    let t = inst.budget().min(inst.x_count);
    for size in 0..=t {
        let mut combo = Vec::with_capacity(size as usize);
        if let Some(found) = combos(inst.x_count, size, 0, &mut combo, &mut |mask| {
            inst.x_set_dominates_y(mask)
        }) {
            return Some(bits::to_vec(found));
        }
    }
    None
}

/// First subset (by size, then lexicographic) of `0..n` passing `pred`,
/// as an index mask.
fn combos(
    n: u32,
    size: u32,
    start: u32,
    acc: &mut Vec<u32>,
    pred: &mut impl FnMut(u128) -> bool,
) -> Option<u128> {
    if size == 0 {
        let mask = acc.iter().fold(0u128, |m, &i| m | bits::bit(i));
        return if pred(mask) { Some(mask) } else { None };
    }
    for i in start..=n - size {
        acc.push(i);
        if let Some(found) = combos(n, size - 1, i + 1, acc, pred) {
            return Some(found);
        }
        acc.pop();
    }
    None
}

/// Partition of X into exactly `t` sets, each dominating Y, as blocks of
/// global ids. Blocks may be empty only when `Y = ∅` (an empty block
/// dominates nothing otherwise).
pub fn oracle_osdomatic(inst: &BipartiteInstance) -> Option<Vec<Vec<VertexId>>> {
    let t = inst.budget();
    let nx = inst.x_count;
    if t == 0 {
        return if nx == 0 { Some(Vec::new()) } else { None };
    }
    if inst.y_count == 0 {
        // Every block, even an empty one, dominates the empty side.
        let mut blocks = vec![Vec::new(); t as usize];
        for xi in 0..nx {
            blocks[(xi % t) as usize].push(xi);
        }
        return Some(blocks);
    }
    if nx < t {
        return None;
    }
    // Restricted-growth strings over X, pruned to those that can still
    // reach exactly t labels.
    let mut labels = vec![0u32; nx as usize];
    if rgs_search(inst, &mut labels, 0, 0, t) {
        let mut blocks = vec![Vec::new(); t as usize];
        for (xi, &l) in labels.iter().enumerate() {
            blocks[l as usize].push(xi as u32);
        }
        return Some(blocks);
    }
    None
}

fn rgs_search(
    inst: &BipartiteInstance,
    labels: &mut [u32],
    pos: usize,
    used: u32,
    t: u32,
) -> bool {
    let nx = labels.len();
    if pos == nx {
        if used != t {
            return false;
        }
        return (0..t).all(|l| {
            let mask = labels
                .iter()
                .enumerate()
                .filter(|&(_, &ll)| ll == l)
                .fold(0u128, |m, (xi, _)| m | bits::bit(xi as u32));
            inst.x_set_dominates_y(mask)
        });
    }
    // Remaining positions must be able to introduce the missing labels.
    let remaining = (nx - pos) as u32;
    let max_label = used.min(t - 1);
    for l in 0..=max_label {
        let new_used = if l == used { used + 1 } else { used };
        if t - new_used < remaining || new_used == t {
            labels[pos] = l;
            if rgs_search(inst, labels, pos + 1, new_used, t) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    fn path(n: u32) -> Graph {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn c4_needs_one_contraction_to_split() {
        let sol = oracle_contraction(&cycle(4), 1, TargetClass::Split)
            .unwrap()
            .unwrap();
        assert_eq!(sol.edges.len(), 1);
        assert!(recognition::is_split(&sol.resulting));
    }

    #[test]
    fn c5_needs_two_contractions_to_split() {
        assert!(oracle_contraction(&cycle(5), 1, TargetClass::Split)
            .unwrap()
            .is_none());
        let sol = oracle_contraction(&cycle(5), 2, TargetClass::Split)
            .unwrap()
            .unwrap();
        assert_eq!(sol.edges.len(), 2);
        assert!(recognition::is_split(&sol.resulting));
    }

    #[test]
    fn p4_needs_two_contractions_to_clique() {
        assert!(oracle_contraction(&path(4), 1, TargetClass::Clique)
            .unwrap()
            .is_none());
        let sol = oracle_contraction(&path(4), 2, TargetClass::Clique)
            .unwrap()
            .unwrap();
        assert_eq!(sol.edges.len(), 2);
        assert!(recognition::is_clique(&sol.resulting));
    }

    #[test]
    fn two_k2_needs_one_contraction_to_split() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        let sol = oracle_contraction(&g, 1, TargetClass::Split)
            .unwrap()
            .unwrap();
        assert_eq!(sol.edges.len(), 1);
    }

    #[test]
    fn zero_budget_matches_recognizer() {
        for mask in 0u64..64 {
            let g = crate::enumerate::graph_from_mask(4, mask);
            for target in [TargetClass::Split, TargetClass::Threshold, TargetClass::Clique] {
                let yes = oracle_contraction(&g, 0, target).unwrap().is_some();
                assert_eq!(yes, recognition::in_class(&g, target));
            }
        }
    }

    #[test]
    fn budget_cap_is_enforced() {
        let g = cycle(12);
        let err = oracle_contraction_capped(&g, 6, TargetClass::Clique, 100).unwrap_err();
        assert!(matches!(err, Error::BudgetTooLarge { .. }));
    }

    #[test]
    fn oracle_minimality_and_monotonicity() {
        for mask in 0u64..(1 << 10) {
            let g = crate::enumerate::graph_from_mask(5, mask);
            let mut last_yes = false;
            for k in 0..=2 {
                let sol = oracle_contraction(&g, k, TargetClass::Split).unwrap();
                if last_yes {
                    assert!(sol.is_some(), "monotonicity violated (mask {mask}, k {k})");
                }
                if let Some(s) = &sol {
                    assert!(s.edges.len() <= k as usize);
                    assert!(recognition::is_split(&s.resulting));
                    last_yes = true;
                }
            }
        }
    }

    fn inst(nx: u32, ny: u32, edges: &[(u32, u32)], t: u32) -> BipartiteInstance {
        BipartiteInstance::new(nx, ny, edges, t).unwrap()
    }

    #[test]
    fn rbds_basics() {
        let i = inst(1, 1, &[(0, 1)], 1);
        assert_eq!(oracle_rbds(&i), Some(vec![1]));

        let i = inst(2, 1, &[(0, 2), (1, 2)], 1);
        assert_eq!(oracle_rbds(&i), Some(vec![2]));

        let i = inst(2, 2, &[(0, 2), (1, 3)], 1);
        assert_eq!(oracle_rbds(&i), None);
    }

    #[test]
    fn osds_basics() {
        let i = inst(1, 1, &[(0, 1)], 1);
        assert_eq!(oracle_osds(&i), Some(vec![0]));

        // Y nonempty, t = 0: nothing can dominate it.
        let i = inst(1, 1, &[(0, 1)], 0);
        assert_eq!(oracle_osds(&i), None);
    }

    #[test]
    fn osds_four_by_four_example() {
        // |X| = 4, t = 2; {x0, x1} covers all four y's.
        let edges = [
            (1, 4),
            (0, 4),
            (0, 5),
            (2, 5),
            (2, 7),
            (1, 6),
            (1, 7),
            (3, 7),
        ];
        let i = inst(4, 4, &edges, 2);
        assert_eq!(oracle_osds(&i), Some(vec![0, 1]));
    }

    #[test]
    fn osdomatic_basics() {
        let i = inst(1, 1, &[(0, 1)], 1);
        assert_eq!(oracle_osdomatic(&i), Some(vec![vec![0]]));

        let i = inst(2, 1, &[(0, 2), (1, 2)], 2);
        assert_eq!(oracle_osdomatic(&i), Some(vec![vec![0], vec![1]]));

        let i = inst(2, 2, &[(0, 2), (1, 3)], 2);
        assert_eq!(oracle_osdomatic(&i), None);
    }

    #[test]
    fn osdomatic_empty_y_pads_blocks() {
        let i = inst(2, 0, &[], 2);
        let blocks = oracle_osdomatic(&i).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks.iter().map(|b| b.len()).sum::<usize>(), 2);
    }

    #[test]
    fn threshold_yes_implies_split_yes() {
        for mask in 0u64..(1 << 10) {
            let g = crate::enumerate::graph_from_mask(5, mask);
            if !recognition::is_split(&g) {
                continue;
            }
            for k in 0..=2 {
                let th = oracle_contraction(&g, k, TargetClass::Threshold).unwrap();
                if th.is_some() {
                    assert!(oracle_contraction(&g, k, TargetClass::Split)
                        .unwrap()
                        .is_some());
                }
            }
        }
    }
}

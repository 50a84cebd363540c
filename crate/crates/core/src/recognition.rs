//! Recognition of split, threshold, and complete graphs, with certificates.
//!
//! Decisions use fast structural tests (degree sequences for split, peeling
//! for threshold); certificates come from the partition itself on success and
//! from the forbidden-pattern scanner on failure. The two routes are
//! independent, which the test suites exploit.

use crate::bits;
use crate::graph::{Graph, VertexId, VertexSet};
use crate::pattern::{self, Occurrence, SPLIT_OBSTRUCTIONS, THRESHOLD_OBSTRUCTIONS};
use crate::{Error, Result};

/// Target classes of the contraction problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TargetClass {
    Split,
    Threshold,
    Clique,
}

impl TargetClass {
    pub fn name(&self) -> &'static str {
        match self {
            TargetClass::Split => "split",
            TargetClass::Threshold => "threshold",
            TargetClass::Clique => "clique",
        }
    }
}

/// A split partition certificate: `clique` induces a complete subgraph,
/// `independent` an edgeless one, and the clique side is a maximal clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

impl SplitPartition {
    /// Checks all three invariants against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.clique & self.independent == 0
            && (self.clique | self.independent) == g.vertex_set()
            && g.is_clique_set(self.clique)
            && g.is_independent_set(self.independent)
            && bits::iter(self.independent)
                .all(|v| g.neighbors(v) & self.clique != self.clique)
    }
}

/// Orderings certifying thresholdness: closed neighborhoods ascend along the
/// clique side, open neighborhoods descend along the independent side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdOrdering {
    pub clique_order: Vec<VertexId>,
    pub indep_order: Vec<VertexId>,
}

impl ThresholdOrdering {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let nested_up = self.clique_order.windows(2).all(|w| {
            g.closed_neighbors(w[0]) & !g.closed_neighbors(w[1]) == 0
        });
        let nested_down = self
            .indep_order
            .windows(2)
            .all(|w| g.neighbors(w[1]) & !g.neighbors(w[0]) == 0);
        nested_up && nested_down
    }
}

/// Outcome of split recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitCheck {
    Split(SplitPartition),
    NotSplit(Occurrence),
}

impl SplitCheck {
    pub fn is_split(&self) -> bool {
        matches!(self, SplitCheck::Split(_))
    }
}

/// Outcome of threshold recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThresholdCheck {
    Threshold(ThresholdOrdering),
    NotThreshold(Occurrence),
}

impl ThresholdCheck {
    pub fn is_threshold(&self) -> bool {
        matches!(self, ThresholdCheck::Threshold(_))
    }
}

/// Split recognition with a certificate either way: a [`SplitPartition`]
/// whose clique side is maximal, or an induced 2K2/C4/C5.
pub fn check_split(g: &Graph) -> SplitCheck {
    if is_split(g) {
        SplitCheck::Split(split_partition_max_clique(g).expect("degree test accepted"))
    } else {
        SplitCheck::NotSplit(
            pattern::find_forbidden(g, &SPLIT_OBSTRUCTIONS)
                .expect("non-split graph must contain an obstruction"),
        )
    }
}

/// Threshold recognition with a certificate either way.
pub fn check_threshold(g: &Graph) -> ThresholdCheck {
    if is_threshold(g) {
        let part = split_partition_max_clique(g).expect("threshold graphs are split");
        let mut clique_order = bits::to_vec(part.clique);
        clique_order.sort_by_key(|&v| (bits::count(g.closed_neighbors(v)), v));
        let mut indep_order = bits::to_vec(part.independent);
        indep_order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
        let ord = ThresholdOrdering {
            clique_order,
            indep_order,
        };
        debug_assert!(ord.is_valid_for(g));
        ThresholdCheck::Threshold(ord)
    } else {
        ThresholdCheck::NotThreshold(
            pattern::find_forbidden(g, &THRESHOLD_OBSTRUCTIONS)
                .expect("non-threshold graph must contain an obstruction"),
        )
    }
}

/// Fast split test via the degree-sequence splittance criterion.
pub fn is_split(g: &Graph) -> bool {
    split_mask_check(g.vertex_set(), rows_of(g))
}

/// Fast threshold test: repeatedly peel a vertex that is isolated or
/// universal in the remainder; threshold graphs peel down to nothing.
pub fn is_threshold(g: &Graph) -> bool {
    threshold_mask_check(g.vertex_set(), rows_of(g))
}

/// True iff every pair of live vertices is adjacent.
pub fn is_clique(g: &Graph) -> bool {
    g.is_clique_set(g.vertex_set())
}

/// Membership test for a [`TargetClass`].
pub fn in_class(g: &Graph, class: TargetClass) -> bool {
    match class {
        TargetClass::Split => is_split(g),
        TargetClass::Threshold => is_threshold(g),
        TargetClass::Clique => is_clique(g),
    }
}

fn rows_of(g: &Graph) -> RowsRef<'_> {
    RowsRef { g }
}

/// Adapter so the mask-level checks can run on a [`Graph`] or on the raw
/// scratch state of a subset-enumeration loop without building graphs.
pub(crate) struct RowsRef<'a> {
    g: &'a Graph,
}

impl<'a> Rows for RowsRef<'a> {
    #[inline]
    fn row(&self, v: VertexId) -> u128 {
        self.g.neighbors(v)
    }
}

pub(crate) trait Rows {
    fn row(&self, v: VertexId) -> u128;
}

impl Rows for &[u128] {
    #[inline]
    fn row(&self, v: VertexId) -> u128 {
        self[v as usize]
    }
}

/// Degree-sequence split test over raw rows.
pub(crate) fn split_mask_check(present: VertexSet, rows: impl Rows) -> bool {
    let n = bits::count(present);
    if n <= 1 {
        return true;
    }
    let mut degs = [0usize; 128];
    for (i, v) in bits::iter(present).enumerate() {
        degs[i] = bits::count(rows.row(v) & present);
    }
    let degs = &mut degs[..n];
    degs.sort_unstable_by(|a, b| b.cmp(a));
    // Largest m with d_m >= m-1 (1-indexed); equality in the splittance
    // formula characterizes split graphs.
    let mut m = 0;
    while m < n && degs[m] >= m {
        m += 1;
    }
    let head: usize = degs[..m].iter().sum();
    let tail: usize = degs[m..].iter().sum();
    head == m * (m - 1) + tail
}

/// Peeling threshold test over raw rows.
pub(crate) fn threshold_mask_check(present: VertexSet, rows: impl Rows) -> bool {
    let mut live = present;
    let mut n = bits::count(live);
    while n > 0 {
        let mut peeled = false;
        for v in bits::iter(live) {
            let d = bits::count(rows.row(v) & live);
            if d == 0 || d == n - 1 {
                live &= !bits::bit(v);
                n -= 1;
                peeled = true;
                break;
            }
        }
        if !peeled {
            return false;
        }
    }
    true
}

/// Clique test over raw rows.
pub(crate) fn clique_mask_check(present: VertexSet, rows: impl Rows) -> bool {
    bits::iter(present).all(|v| rows.row(v) & present == present & !bits::bit(v))
}

/// Split partition whose clique side is a maximal clique.
///
/// Starts from the degree-sequence partition and moves any independent-side
/// vertex adjacent to the whole clique across (lowest id first), repeating
/// to a fixpoint. Returns [`Error::NotSplit`] for non-split inputs.
pub fn split_partition_max_clique(g: &Graph) -> Result<SplitPartition> {
    if !is_split(g) {
        return Err(Error::NotSplit);
    }
    let present = g.vertex_set();
    let mut order = bits::to_vec(present);
    order.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
    let n = order.len();
    let mut m = 0;
    while m < n && g.degree(order[m]) >= m {
        m += 1;
    }
    let mut clique: VertexSet = order[..m].iter().fold(0, |acc, &v| acc | bits::bit(v));
    let mut indep = present & !clique;
    loop {
        let candidate = bits::iter(indep).find(|&v| g.neighbors(v) & clique == clique);
        match candidate {
            Some(v) => {
                clique |= bits::bit(v);
                indep &= !bits::bit(v);
            }
            None => break,
        }
    }
    let part = SplitPartition {
        clique,
        independent: indep,
    };
    debug_assert!(part.is_valid_for(g));
    Ok(part)
}

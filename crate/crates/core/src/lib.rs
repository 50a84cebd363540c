//! Exact algorithms for edge-contraction problems on small graphs.
//!
//! The crate revolves around one question: can a graph be turned into a member
//! of a target class (split, threshold, or complete) by contracting at most
//! `k` edges? It provides
//!
//! - a compact bitset graph type with stable vertex identities across
//!   contractions ([`graph`]),
//! - recognizers with certificates for split, threshold, and complete graphs
//!   ([`recognition`]),
//! - brute-force oracles for the contraction problems and for three bipartite
//!   domination problems ([`oracle`]),
//! - budget-parameterized search-tree solvers for split, threshold (on split
//!   inputs), and clique contraction ([`solvers`]),
//! - instance generators that translate between the problems, with solution
//!   lifting in the constructive direction ([`reductions`]),
//! - text formats and certificate verification ([`io`], [`verify`]),
//! - instance enumeration/generation and a self-checking bench harness
//!   ([`enumerate`], [`bench`]).
//!
//! All solvers are deterministic: identical inputs produce identical
//! certificates, branch orders, and counters.
//!
//! # Example
//!
//! The 5-cycle needs two contractions to become split, and every YES comes
//! with an edge set that can be checked independently:
//!
//! ```
//! use contractk::{graph::Graph, solvers, verify, TargetClass};
//!
//! let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
//! assert!(solvers::split_contraction(&c5, 1)?.is_none());
//!
//! let sol = solvers::split_contraction(&c5, 2)?.expect("two suffice");
//! assert!(verify::verify_certificate(&c5, &sol.edges, TargetClass::Split, 2)?);
//! # Ok::<(), contractk::Error>(())
//! ```

pub mod bench;
pub mod bits;
pub mod enumerate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod pattern;
pub mod recognition;
pub mod reductions;
pub mod solvers;
pub mod verify;

pub use graph::{Edge, Graph, VertexId, VertexMap, VertexSet, WitnessStructure};
pub use oracle::{BipartiteInstance, ContractionSolution};
pub use recognition::TargetClass;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An edge named in a contraction set is absent from the graph.
    #[error("edge {0} not present in graph")]
    EdgeNotPresent(Edge),
    /// A witness block does not induce a connected subgraph.
    #[error("witness block {block:?} does not induce a connected subgraph")]
    DisconnectedBlock {
        /// Vertices of the offending block.
        block: Vec<VertexId>,
    },
    /// The input graph is not a split graph.
    #[error("input graph is not split")]
    NotSplit,
    /// A brute-force enumeration would visit more subsets than the cap allows.
    #[error("enumeration of {required} subsets exceeds cap {cap}")]
    BudgetTooLarge {
        /// Upper bound on the number of subsets that would be visited.
        required: u128,
        /// The configured cap.
        cap: u64,
    },
    /// An internal structural guarantee failed; indicates a bug, not a NO answer.
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    /// A documented precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    /// A supplied source solution does not certify the source instance.
    #[error("invalid source certificate: {0}")]
    InvalidSourceCertificate(String),
    /// Malformed instance or certificate text.
    #[error("parse error at line {line}: {msg}")]
    Parse {
        /// 1-based line number.
        line: usize,
        /// Description of the problem.
        msg: String,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

//! Instance translations between the problems, with provenance and
//! constructive solution lifting.
//!
//! Four generators:
//!
//! * clique contraction → split contraction (universal independent set),
//! * red-blue dominating set → split contraction (clique gadget plus leaves),
//! * one-sided dominating set → one-sided domatic number (pad both sides),
//! * one-sided domatic number → threshold contraction on a split graph.
//!
//! Every generator fixes the output vertex layout (source vertices first,
//! then gadget roles in a canonical order) so instances are byte-stable, and
//! records a role per output vertex. Lifting maps a source certificate to a
//! verified target certificate exactly the way the constructions do.

use std::fmt;

use crate::bits;
use crate::graph::{witness_from_edges, Edge, Graph, VertexId};
use crate::oracle::{BipartiteInstance, ContractionSolution};
use crate::recognition::TargetClass;
use crate::verify::verify_certificate;
use crate::{Error, Result};

/// Provenance of an output vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// Vertex copied from the source graph (clique→split).
    Source(u32),
    /// Source X-side vertex.
    SourceX(u32),
    /// Source Y-side vertex.
    SourceY(u32),
    /// Member of the universal independent set (clique→split).
    NewIndependent,
    /// Member of the clique gadget `C` (rbds→split).
    CliqueC,
    /// The designated clique vertex adjacent to all of Y (rbds→split).
    DesignatedU,
    /// Pendant leaf attached to the X vertex with the given index.
    Leaf(u32),
    /// Member of the set `Z` adjacent to all of Y (osds→osdomatic).
    Z(u32),
    /// The vertex `w` adjacent to all of X (osds→osdomatic).
    W,
    /// Clique vertex standing for the X vertex with the given index
    /// (osdomatic→threshold).
    K(u32),
    /// Member of the clique gadget `A` (osdomatic→threshold).
    A,
    /// Member of the independent set `B` complete to `K`.
    B,
    /// Copy `l` of the Y vertex with index `j` (osdomatic→threshold).
    Copy {
        l: u32,
        j: u32,
    },
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Source(i) => write!(f, "source{i}"),
            Role::SourceX(i) => write!(f, "x{i}"),
            Role::SourceY(j) => write!(f, "y{j}"),
            Role::NewIndependent => write!(f, "indep"),
            Role::CliqueC => write!(f, "clique"),
            Role::DesignatedU => write!(f, "u"),
            Role::Leaf(i) => write!(f, "leaf-x{i}"),
            Role::Z(i) => write!(f, "z{i}"),
            Role::W => write!(f, "w"),
            Role::K(i) => write!(f, "k-x{i}"),
            Role::A => write!(f, "a"),
            Role::B => write!(f, "b"),
            Role::Copy { l, j } => write!(f, "i{l}-y{j}"),
        }
    }
}

/// A generated contraction instance: graph, budget, and per-vertex roles.
#[derive(Debug, Clone)]
pub struct GraphArtifact {
    pub graph: Graph,
    pub budget: u32,
    /// Indexed by vertex id.
    pub roles: Vec<Role>,
}

impl GraphArtifact {
    /// Id of the first vertex carrying `role`.
    pub fn find_role(&self, role: Role) -> Option<VertexId> {
        self.roles.iter().position(|r| *r == role).map(|i| i as VertexId)
    }
}

/// A generated bipartite instance with per-vertex roles.
#[derive(Debug, Clone)]
pub struct BipartiteArtifact {
    pub instance: BipartiteInstance,
    pub roles: Vec<Role>,
}

fn check_capacity(n: usize) -> Result<()> {
    if n > crate::graph::MAX_VERTICES {
        return Err(Error::PreconditionViolated(format!(
            "generated instance needs {n} vertices, capacity is {}",
            crate::graph::MAX_VERTICES
        )));
    }
    Ok(())
}

/// Clique contraction `(g, k)` → split contraction `(g', k)`: add an
/// independent set of `k + 2` new vertices adjacent to every old vertex.
/// At least two of them survive any `k` contractions untouched, pinning all
/// old vertices into the final clique side.
///
/// Requires a connected source. Contractions cannot join components, so a
/// disconnected source is a trivial NO for clique contraction, while the
/// universal new vertices would let the target absorb isolated pieces and
/// break the equivalence.
pub fn split_from_clique(g: &Graph, k: u32) -> Result<GraphArtifact> {
    if !g.has_contiguous_ids() {
        return Err(Error::PreconditionViolated(
            "source graph must use ids 0..n".into(),
        ));
    }
    if g.components().len() > 1 {
        return Err(Error::PreconditionViolated(
            "source graph must be connected".into(),
        ));
    }
    let n = g.vertex_count() as u32;
    let total = n + k + 2;
    check_capacity(total as usize)?;
    let mut out = Graph::with_vertices(total);
    for e in g.edges() {
        out.add_edge(e.u(), e.v());
    }
    for fresh in n..total {
        for old in 0..n {
            out.add_edge(fresh, old);
        }
    }
    let mut roles: Vec<Role> = (0..n).map(Role::Source).collect();
    roles.extend(std::iter::repeat_n(Role::NewIndependent, (k + 2) as usize));
    Ok(GraphArtifact {
        graph: out,
        budget: k,
        roles,
    })
}

/// Red-blue dominating set `(X, Y, t)` → split contraction at budget
/// `|X| + t`: keep the bipartite graph, add a clique `C` of `|X| + t + 3`
/// vertices whose designated member `u` sees all of Y, and append
/// `|X| + t + 1` pendant leaves to every X vertex.
///
/// Requires every X vertex to have a neighbor (isolated X vertices make the
/// source trivially NO while leaves cannot encode it) and `t ≤ |X|`.
pub fn split_from_rbds(inst: &BipartiteInstance) -> Result<GraphArtifact> {
    let nx = inst.x_count();
    let ny = inst.y_count();
    let t = inst.budget();
    if t > nx {
        return Err(Error::PreconditionViolated(format!(
            "budget t={t} exceeds |X|={nx}"
        )));
    }
    for xi in 0..nx {
        if inst.x_neighbors(xi) == 0 {
            return Err(Error::PreconditionViolated(format!(
                "X vertex {xi} has no neighbor in Y"
            )));
        }
    }
    let clique_size = nx + t + 3;
    let leaves_per_x = nx + t + 1;
    let total = nx + ny + clique_size + nx * leaves_per_x;
    check_capacity(total as usize)?;
    let mut out = Graph::with_vertices(total);
    for &(x, y) in inst.edges() {
        out.add_edge(x, y);
    }
    let c_base = nx + ny;
    let u = c_base; // designated vertex comes first inside C
    for a in c_base..c_base + clique_size {
        for b in a + 1..c_base + clique_size {
            out.add_edge(a, b);
        }
    }
    for y in nx..nx + ny {
        out.add_edge(u, y);
    }
    let leaf_base = c_base + clique_size;
    for xi in 0..nx {
        for l in 0..leaves_per_x {
            out.add_edge(xi, leaf_base + xi * leaves_per_x + l);
        }
    }
    let mut roles: Vec<Role> = (0..nx).map(Role::SourceX).collect();
    roles.extend((0..ny).map(Role::SourceY));
    roles.push(Role::DesignatedU);
    roles.extend(std::iter::repeat_n(Role::CliqueC, (clique_size - 1) as usize));
    for xi in 0..nx {
        roles.extend(std::iter::repeat_n(Role::Leaf(xi), leaves_per_x as usize));
    }
    Ok(GraphArtifact {
        graph: out,
        budget: nx + t,
        roles,
    })
}

/// One-sided dominating set `(X, Y, t)` → one-sided domatic number with
/// `t' = |X| - t + 1`: add `Z` (`|X| - t` vertices seeing all of Y) to the
/// X side and `w` (seeing all of X, none of Z) to the Y side.
///
/// Requires `1 ≤ t ≤ |X|`.
pub fn osdomatic_from_osds(inst: &BipartiteInstance) -> Result<BipartiteArtifact> {
    let nx = inst.x_count();
    let ny = inst.y_count();
    let t = inst.budget();
    if t < 1 || t > nx {
        return Err(Error::PreconditionViolated(format!(
            "budget t={t} outside 1..=|X| (|X|={nx})"
        )));
    }
    let z_count = nx - t;
    let new_nx = nx + z_count;
    let new_ny = ny + 1;
    check_capacity((new_nx + new_ny) as usize)?;
    let y_base = new_nx;
    let w = y_base + ny;
    let mut edges: Vec<(VertexId, VertexId)> = inst
        .edges()
        .iter()
        .map(|&(x, y)| (x, y - nx + y_base))
        .collect();
    for x in 0..nx {
        edges.push((x, w));
    }
    for z in nx..new_nx {
        for y in y_base..y_base + ny {
            edges.push((z, y));
        }
    }
    let instance = BipartiteInstance::new(new_nx, new_ny, &edges, nx - t + 1)?;
    let mut roles: Vec<Role> = (0..nx).map(Role::SourceX).collect();
    roles.extend((0..z_count).map(Role::Z));
    roles.extend((0..ny).map(Role::SourceY));
    roles.push(Role::W);
    Ok(BipartiteArtifact { instance, roles })
}

/// One-sided domatic number `(X, Y, t)` → threshold contraction on a split
/// graph at budget `|X| - t`: clique side `K ∪ A` with `K` standing for X
/// and `|A| = 2|X| + 1`; independent side `B` (`|X| + 1` vertices complete
/// to `K`) plus `|X| + 1` disjoint copies of Y complete to `A`, each copy
/// wired to `K` by the source edges.
///
/// Requires `1 ≤ t ≤ |X|`.
pub fn threshold_from_osdomatic(inst: &BipartiteInstance) -> Result<GraphArtifact> {
    let nx = inst.x_count();
    let ny = inst.y_count();
    let t = inst.budget();
    if t < 1 || t > nx {
        return Err(Error::PreconditionViolated(format!(
            "budget t={t} outside 1..=|X| (|X|={nx})"
        )));
    }
    let a_size = 2 * nx + 1;
    let b_size = nx + 1;
    let copies = nx + 1;
    let total = nx + a_size + b_size + copies * ny;
    check_capacity(total as usize)?;
    let mut out = Graph::with_vertices(total);
    let a_base = nx;
    let b_base = a_base + a_size;
    let i_base = b_base + b_size;
    // K ∪ A is one large clique.
    for u in 0..a_base + a_size {
        for v in u + 1..a_base + a_size {
            out.add_edge(u, v);
        }
    }
    // B complete to K.
    for b in b_base..b_base + b_size {
        for u in 0..nx {
            out.add_edge(b, u);
        }
    }
    for l in 0..copies {
        for j in 0..ny {
            let v = i_base + l * ny + j;
            // Copies complete to A.
            for a in a_base..a_base + a_size {
                out.add_edge(v, a);
            }
            // Source edges into K.
            for xi in bits::iter(inst.y_neighbors(j)) {
                out.add_edge(v, xi);
            }
        }
    }
    let mut roles: Vec<Role> = (0..nx).map(Role::K).collect();
    roles.extend(std::iter::repeat_n(Role::A, a_size as usize));
    roles.extend(std::iter::repeat_n(Role::B, b_size as usize));
    for l in 0..copies {
        roles.extend((0..ny).map(|j| Role::Copy { l, j }));
    }
    Ok(GraphArtifact {
        graph: out,
        budget: nx - t,
        roles,
    })
}

/// Lifts a clique-contraction certificate through [`split_from_clique`]:
/// the same edge set works verbatim.
pub fn lift_clique_cert(
    source: &Graph,
    art: &GraphArtifact,
    cert: &[Edge],
) -> Result<ContractionSolution> {
    if !verify_certificate(source, cert, TargetClass::Clique, art.budget)? {
        return Err(Error::InvalidSourceCertificate(
            "edge set does not make the source a clique within budget".into(),
        ));
    }
    let sol = ContractionSolution::build(&art.graph, cert.to_vec())?;
    if !verify_certificate(&art.graph, &sol.edges, TargetClass::Split, art.budget)? {
        return Err(Error::InternalInvariantViolation(
            "lifted clique certificate failed split verification".into(),
        ));
    }
    Ok(sol)
}

/// Lifts a red-blue dominating set `Y'` through [`split_from_rbds`]: contract
/// a spanning tree of `{u} ∪ Y' ∪ X` (star edges `u-y`, plus one edge from
/// each X vertex to its first dominator in `Y'`).
pub fn lift_rbds_cert(
    inst: &BipartiteInstance,
    art: &GraphArtifact,
    chosen_y: &[VertexId],
) -> Result<ContractionSolution> {
    let nx = inst.x_count();
    let mut ys: Vec<VertexId> = chosen_y.to_vec();
    ys.sort_unstable();
    ys.dedup();
    if ys.len() > inst.budget() as usize {
        return Err(Error::InvalidSourceCertificate(format!(
            "{} dominators exceed budget {}",
            ys.len(),
            inst.budget()
        )));
    }
    let y_mask: u128 = ys.iter().fold(0, |m, &y| {
        m | bits::bit(y.checked_sub(nx).expect("Y ids start at |X|"))
    });
    if !inst.y_set_dominates_x(y_mask) {
        return Err(Error::InvalidSourceCertificate(
            "set does not dominate X".into(),
        ));
    }
    let u = art
        .find_role(Role::DesignatedU)
        .expect("artifact carries a designated vertex");
    let mut edges: Vec<Edge> = ys.iter().map(|&y| Edge::new(u, y)).collect();
    for xi in 0..nx {
        let dominator = ys
            .iter()
            .copied()
            .find(|&y| inst.x_neighbors(xi) & bits::bit(y - nx) != 0)
            .expect("every X vertex is dominated");
        edges.push(Edge::new(xi, dominator));
    }
    let sol = ContractionSolution::build(&art.graph, edges)?;
    if !verify_certificate(&art.graph, &sol.edges, TargetClass::Split, art.budget)? {
        return Err(Error::InternalInvariantViolation(
            "lifted dominating set failed split verification".into(),
        ));
    }
    Ok(sol)
}

/// Extracts a red-blue dominating set from *any* valid certificate of the
/// [`split_from_rbds`] output: the witness block containing `u`, intersected
/// with Y.
pub fn rbds_from_split_cert(
    inst: &BipartiteInstance,
    art: &GraphArtifact,
    cert: &[Edge],
) -> Result<Vec<VertexId>> {
    if !verify_certificate(&art.graph, cert, TargetClass::Split, art.budget)? {
        return Err(Error::InvalidSourceCertificate(
            "edge set is not a split certificate for the generated graph".into(),
        ));
    }
    let u = art.find_role(Role::DesignatedU).expect("designated vertex");
    let w = witness_from_edges(&art.graph, cert)?;
    let block = w
        .blocks()
        .iter()
        .copied()
        .find(|b| b & bits::bit(u) != 0)
        .expect("blocks cover the graph");
    let nx = inst.x_count();
    let ys: Vec<VertexId> = inst.y_ids().filter(|&y| block & bits::bit(y) != 0).collect();
    let y_mask: u128 = ys.iter().fold(0, |m, &y| m | bits::bit(y - nx));
    if ys.len() > inst.budget() as usize || !inst.y_set_dominates_x(y_mask) {
        return Err(Error::InternalInvariantViolation(
            "extracted set does not solve the source instance".into(),
        ));
    }
    Ok(ys)
}

/// Lifts a one-sided dominating set `S` through [`osdomatic_from_osds`]:
/// `S` (padded with spare X vertices) forms one block; the remaining X
/// vertices pair up with the Z vertices.
pub fn lift_osds_cert(
    inst: &BipartiteInstance,
    art: &BipartiteArtifact,
    chosen_x: &[VertexId],
) -> Result<Vec<Vec<VertexId>>> {
    let nx = inst.x_count();
    let t = inst.budget();
    let mut xs: Vec<VertexId> = chosen_x.to_vec();
    xs.sort_unstable();
    xs.dedup();
    if xs.len() > t as usize || xs.iter().any(|&x| x >= nx) {
        return Err(Error::InvalidSourceCertificate(
            "not a subset of X within budget".into(),
        ));
    }
    let x_mask: u128 = xs.iter().fold(0, |m, &x| m | bits::bit(x));
    if !inst.x_set_dominates_y(x_mask) {
        return Err(Error::InvalidSourceCertificate(
            "set does not dominate Y".into(),
        ));
    }
    let z_count = nx - t;
    let spare: Vec<VertexId> = (0..nx).filter(|&x| x_mask & bits::bit(x) == 0).collect();
    let (paired, extra) = spare.split_at(z_count as usize);
    let mut first_block = xs.clone();
    first_block.extend_from_slice(extra);
    let mut blocks = vec![first_block];
    for (i, &x) in paired.iter().enumerate() {
        blocks.push(vec![x, nx + i as u32]);
    }
    // Self-check against the generated instance.
    let out = &art.instance;
    debug_assert_eq!(blocks.len() as u32, out.budget());
    for b in &blocks {
        let mask: u128 = b.iter().fold(0, |m, &x| m | bits::bit(x));
        if !out.x_set_dominates_y(mask) {
            return Err(Error::InternalInvariantViolation(
                "lifted block fails to dominate the padded Y side".into(),
            ));
        }
    }
    Ok(blocks)
}

/// Lifts a domatic partition through [`threshold_from_osdomatic`]: contract
/// each block of corresponding K vertices to a point (a star per block).
pub fn lift_osdomatic_cert(
    inst: &BipartiteInstance,
    art: &GraphArtifact,
    partition: &[Vec<VertexId>],
) -> Result<ContractionSolution> {
    let nx = inst.x_count();
    let t = inst.budget();
    if partition.len() != t as usize {
        return Err(Error::InvalidSourceCertificate(format!(
            "expected {t} blocks, got {}",
            partition.len()
        )));
    }
    let mut seen: u128 = 0;
    for block in partition {
        for &x in block {
            if x >= nx || seen & bits::bit(x) != 0 {
                return Err(Error::InvalidSourceCertificate(
                    "blocks must disjointly cover X".into(),
                ));
            }
            seen |= bits::bit(x);
        }
        let mask: u128 = block.iter().fold(0, |m, &x| m | bits::bit(x));
        if inst.y_count() > 0 && !inst.x_set_dominates_y(mask) {
            return Err(Error::InvalidSourceCertificate(
                "a block fails to dominate Y".into(),
            ));
        }
    }
    if bits::count(seen) != nx as usize {
        return Err(Error::InvalidSourceCertificate(
            "blocks must cover all of X".into(),
        ));
    }
    // Empty blocks only certify instances with Y = ∅; rebalance to keep the
    // contraction count at |X| - t.
    let blocks: Vec<Vec<VertexId>> = if partition.iter().any(|b| b.is_empty()) {
        let all: Vec<VertexId> = (0..nx).collect();
        let mut rebuilt: Vec<Vec<VertexId>> = all[..(t - 1) as usize]
            .iter()
            .map(|&x| vec![x])
            .collect();
        rebuilt.push(all[(t - 1) as usize..].to_vec());
        rebuilt
    } else {
        partition.to_vec()
    };
    let mut edges = Vec::new();
    for block in &blocks {
        let mut sorted = block.clone();
        sorted.sort_unstable();
        for &x in &sorted[1..] {
            edges.push(Edge::new(sorted[0], x));
        }
    }
    let sol = ContractionSolution::build(&art.graph, edges)?;
    if !verify_certificate(&art.graph, &sol.edges, TargetClass::Threshold, art.budget)? {
        return Err(Error::InternalInvariantViolation(
            "lifted partition failed threshold verification".into(),
        ));
    }
    Ok(sol)
}

//! Line-oriented text formats for graphs, bipartite instances, certificates,
//! and provenance sidecars.
//!
//! Graph format: header `p contract <n> <m>`, then `m` lines `e <u> <v>`
//! with 0-based ids below `n`. Bipartite format: header
//! `p bipartite <|X|> <|Y|> <m> <t>`; X vertices are `0..|X|`, Y vertices
//! `|X|..|X|+|Y|`. Lines starting with `c` are comments; blank lines are
//! ignored. ASCII, LF line endings.

use crate::graph::{Edge, Graph, VertexId};
use crate::oracle::BipartiteInstance;
use crate::reductions::Role;
use crate::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

fn parse_fields(line: usize, s: &str, expect: usize, what: &str) -> Result<Vec<u64>> {
    let fields: Vec<&str> = s.split_ascii_whitespace().collect();
    if fields.len() != expect {
        return Err(parse_err(
            line,
            format!("expected {what}, got {} fields", fields.len()),
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<u64>()
                .map_err(|_| parse_err(line, format!("invalid integer '{f}'")))
        })
        .collect()
}

/// Parses the `p contract` graph format.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = significant_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing 'p contract <n> <m>' header"))?;
    let rest = header
        .strip_prefix("p contract")
        .ok_or_else(|| parse_err(hline, "expected 'p contract <n> <m>' header"))?;
    let nums = parse_fields(hline, rest, 2, "'p contract <n> <m>'")?;
    let (n, m) = (nums[0], nums[1]);
    if n > crate::graph::MAX_VERTICES as u64 {
        return Err(parse_err(
            hline,
            format!("vertex count {n} exceeds capacity {}", crate::graph::MAX_VERTICES),
        ));
    }
    let mut g = Graph::with_vertices(n as u32);
    let mut count = 0u64;
    for (lno, line) in lines {
        let rest = line
            .strip_prefix('e')
            .ok_or_else(|| parse_err(lno, "expected 'e <u> <v>'"))?;
        let nums = parse_fields(lno, rest, 2, "'e <u> <v>'")?;
        let (u, v) = (nums[0], nums[1]);
        if u >= n || v >= n {
            return Err(parse_err(lno, format!("endpoint out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_err(lno, "self-loops are not allowed"));
        }
        if g.has_edge(u as VertexId, v as VertexId) {
            return Err(parse_err(lno, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u as VertexId, v as VertexId);
        count += 1;
    }
    if count != m {
        return Err(parse_err(
            1,
            format!("header declares {m} edges, found {count}"),
        ));
    }
    Ok(g)
}

/// Serializes a graph with contiguous ids `0..n`.
pub fn format_graph(g: &Graph) -> Result<String> {
    if !g.has_contiguous_ids() {
        return Err(Error::PreconditionViolated(
            "only graphs with ids 0..n can be serialized".into(),
        ));
    }
    let mut out = format!("p contract {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("e {} {}\n", e.u(), e.v()));
    }
    Ok(out)
}

/// Parses the `p bipartite` instance format.
pub fn parse_bipartite(text: &str) -> Result<BipartiteInstance> {
    let mut lines = significant_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing 'p bipartite <|X|> <|Y|> <m> <t>' header"))?;
    let rest = header
        .strip_prefix("p bipartite")
        .ok_or_else(|| parse_err(hline, "expected 'p bipartite <|X|> <|Y|> <m> <t>' header"))?;
    let nums = parse_fields(hline, rest, 4, "'p bipartite <|X|> <|Y|> <m> <t>'")?;
    let (nx, ny, m, t) = (nums[0], nums[1], nums[2], nums[3]);
    if nx + ny > crate::graph::MAX_VERTICES as u64 {
        return Err(parse_err(hline, "instance exceeds vertex capacity"));
    }
    let mut edges = Vec::new();
    for (lno, line) in lines {
        let rest = line
            .strip_prefix('e')
            .ok_or_else(|| parse_err(lno, "expected 'e <x> <y>'"))?;
        let nums = parse_fields(lno, rest, 2, "'e <x> <y>'")?;
        let (x, y) = (nums[0], nums[1]);
        if x >= nx {
            return Err(parse_err(lno, format!("x endpoint {x} outside 0..{nx}")));
        }
        if y < nx || y >= nx + ny {
            return Err(parse_err(
                lno,
                format!("y endpoint {y} outside {nx}..{}", nx + ny),
            ));
        }
        edges.push((x as VertexId, y as VertexId));
    }
    if edges.len() as u64 != m {
        return Err(parse_err(
            1,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    BipartiteInstance::new(nx as u32, ny as u32, &edges, t as u32)
}

/// Serializes a bipartite instance.
pub fn format_bipartite(inst: &BipartiteInstance) -> String {
    let mut out = format!(
        "p bipartite {} {} {} {}\n",
        inst.x_count(),
        inst.y_count(),
        inst.edges().len(),
        inst.budget()
    );
    for &(x, y) in inst.edges() {
        out.push_str(&format!("e {x} {y}\n"));
    }
    out
}

/// Parses a certificate: `e <u> <v>` lines (comments and blanks allowed).
pub fn parse_edge_list(text: &str) -> Result<Vec<Edge>> {
    let mut edges = Vec::new();
    for (lno, line) in significant_lines(text) {
        let rest = line
            .strip_prefix('e')
            .ok_or_else(|| parse_err(lno, "expected 'e <u> <v>'"))?;
        let nums = parse_fields(lno, rest, 2, "'e <u> <v>'")?;
        if nums[0] == nums[1] {
            return Err(parse_err(lno, "self-loops are not allowed"));
        }
        edges.push(Edge::new(nums[0] as VertexId, nums[1] as VertexId));
    }
    Ok(edges)
}

/// Serializes a certificate edge list.
pub fn format_edge_list(edges: &[Edge]) -> String {
    let mut out = String::new();
    for e in edges {
        out.push_str(&format!("e {} {}\n", e.u(), e.v()));
    }
    out
}

/// Serializes a provenance sidecar: one `v <id> <role>` line per vertex.
pub fn format_roles(roles: &[Role]) -> String {
    let mut out = String::new();
    for (id, role) in roles.iter().enumerate() {
        out.push_str(&format!("v {id} {role}\n"));
    }
    out
}

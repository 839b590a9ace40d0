//! Simple undirected graphs, all-pairs hop distances and the two
//! interchange formats (edge list and graph6).

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are sorted and free of duplicates and self-loops. Values
/// are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge iterator. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, labels: None })
    }

    /// Attaches cosmetic vertex names. Panics if the count differs from `n`.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a vertex: its label if one is attached, else its id.
    pub fn vertex_name(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Same edge set, labels dropped. Used for labeled-graph equality checks.
    pub fn without_labels(&self) -> Graph {
        Graph {
            adj: self.adj.clone(),
            labels: None,
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return false;
        }
        bfs_distances(self, 0).iter().all(|&d| d != UNREACHABLE)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n()];
        let mut queue = VecDeque::new();
        for s in 0..self.n() {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = color[u] ^ 1;
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Marker for vertex pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// Dense all-pairs hop distance matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistMatrix {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().filter(|&x| x != UNREACHABLE).max().unwrap_or(0)
    }

    pub fn all_reachable(&self) -> bool {
        self.d.iter().all(|&x| x != UNREACHABLE)
    }
}

fn bfs_distances(g: &Graph, s: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.n()];
    let mut queue = VecDeque::with_capacity(g.n());
    dist[s] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        let du = dist[u] + 1;
        for &v in g.neighbors(u) {
            if dist[v] == UNREACHABLE {
                dist[v] = du;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// BFS from every vertex.
pub fn distance_matrix(g: &Graph) -> DistMatrix {
    let n = g.n();
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        d.extend(bfs_distances(g, s));
    }
    DistMatrix { n, d }
}

/// Parses the `u v` per line edge-list format. `#` starts a comment; blank
/// lines are skipped. Vertex count is one more than the largest id seen.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut n = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let mut next_id = |what: &str| -> Result<usize> {
            let tok = tokens.next().ok_or_else(|| Error::EdgeList {
                line: line_no,
                message: format!("missing {what} vertex"),
            })?;
            tok.parse::<usize>().map_err(|_| Error::EdgeList {
                line: line_no,
                message: format!("malformed vertex id {tok:?}"),
            })
        };
        let u = next_id("first")?;
        let v = next_id("second")?;
        if let Some(extra) = tokens.next() {
            return Err(Error::EdgeList {
                line: line_no,
                message: format!("unexpected token {extra:?}"),
            });
        }
        if u == v {
            return Err(Error::EdgeList {
                line: line_no,
                message: format!("self-loop at vertex {u}"),
            });
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

/// One `u v` line per edge with a leading comment giving the sizes.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# n={} m={}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

const GRAPH6_HEADER: &[u8] = b">>graph6<<";
const GRAPH6_MAX_N: usize = 68_719_476_735;

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 record, with or without the `>>graph6<<` header.
/// Trailing whitespace (typically the newline) is ignored.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut start = 0;
    if bytes.starts_with(GRAPH6_HEADER) {
        start = GRAPH6_HEADER.len();
    }
    let mut end = bytes.len();
    while end > start && bytes[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    let body = &bytes[start..end];
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(start + i, format!("byte {b} outside 63..=126")));
        }
    }
    if body.is_empty() {
        return Err(g6_err(start, "empty record"));
    }

    let (n, header_len) = if body[0] != 126 {
        ((body[0] - 63) as usize, 1)
    } else if body.len() >= 2 && body[1] != 126 {
        if body.len() < 4 {
            return Err(g6_err(start + body.len(), "truncated size field"));
        }
        (decode_sixes(&body[1..4]), 4)
    } else {
        if body.len() < 8 {
            return Err(g6_err(start + body.len(), "truncated size field"));
        }
        (decode_sixes(&body[2..8]), 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() != expected {
        return Err(g6_err(
            start + header_len + data.len().min(expected),
            format!(
                "expected {expected} adjacency bytes for {n} vertices, found {}",
                data.len()
            ),
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[data.len() - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(g6_err(start + header_len + data.len() - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

fn decode_sixes(chunk: &[u8]) -> usize {
    chunk.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

/// Encodes a graph as a graph6 record without header or newline.
pub fn emit_graph6(g: &Graph) -> Result<Vec<u8>> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidArgument("graph6 needs at least one vertex".into()));
    }
    if n > GRAPH6_MAX_N {
        return Err(Error::cap("graph6 vertex count", GRAPH6_MAX_N, n));
    }
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(out)
}

/// Heuristic format detection: a single whitespace-free line of graph6
/// characters (or an explicit header) is graph6, anything else is an edge
/// list.
pub fn looks_like_graph6(bytes: &[u8]) -> bool {
    if bytes.starts_with(GRAPH6_HEADER) {
        return true;
    }
    let trimmed = bytes.trim_ascii();
    !trimmed.is_empty() && trimmed.iter().all(|b| (63..=126).contains(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn edge_list_examples() {
        let g = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 2));
        let g = parse_edge_list("0 1\n1 0").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
        let g = parse_edge_list("# header\n\n0 1 # trailing\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edge_list_errors_carry_line() {
        assert!(matches!(parse_edge_list("0 0"), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 1\n1 x"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 1\n\n3"), Err(Error::EdgeList { line: 3, .. })));
        assert!(matches!(parse_edge_list("0 1 2"), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("-1 2"), Err(Error::EdgeList { line: 1, .. })));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(5, [(0, 4), (1, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn distances() {
        let d = distance_matrix(&path3());
        assert_eq!(d.get(0, 2), 2);
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let d = distance_matrix(&c6);
        for u in 0..6 {
            assert_eq!(d.get(u, (u + 3) % 6), 3);
        }
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(distance_matrix(&two).get(0, 3), UNREACHABLE);
    }

    #[test]
    fn gamma3_distance_via_bfs() {
        // 000,001,010,100,101 as vertices 0..5
        let labels = [0b000u32, 0b001, 0b010, 0b100, 0b101];
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                if (labels[i] ^ labels[j]).count_ones() == 1 {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(5, edges).unwrap();
        let d = distance_matrix(&g);
        assert_eq!(d.get(1, 3), 2);
    }

    #[test]
    fn connectivity_and_bipartiteness() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(c4.is_connected() && c4.is_bipartite());
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(c5.is_connected() && !c5.is_bipartite());
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two.is_connected());
        assert!(!Graph::empty(0).is_connected());
    }

    /// Decoder written directly from the format description, kept separate
    /// from `parse_graph6`.
    fn reference_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let b = s.as_bytes();
        let n = (b[0] - 63) as usize;
        let mut bits = Vec::new();
        for &c in &b[1..] {
            let v = c - 63;
            for k in (0..6).rev() {
                bits.push((v >> k) & 1);
            }
        }
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[idx] == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        (n, edges)
    }

    #[test]
    fn graph6_known_record() {
        let g = parse_graph6(b"D?{").unwrap();
        let (n, edges) = reference_decode("D?{");
        assert_eq!(g, Graph::from_edges(n, edges).unwrap());
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree(4), 4);
        assert_eq!(emit_graph6(&g).unwrap(), b"D?{");
        assert_eq!(parse_graph6(b">>graph6<<D?{\n").unwrap(), g);
    }

    #[test]
    fn graph6_k1_and_errors() {
        let k1 = Graph::empty(1);
        assert_eq!(emit_graph6(&k1).unwrap(), b"@");
        assert_eq!(parse_graph6(b"@").unwrap(), k1);
        assert!(matches!(parse_graph6(b"D?"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6(b"D? {"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(parse_graph6(b"").is_err());
        // C_4 needs 6 bits = 1 byte; padding must be zero for n = 3 (3 bits).
        assert!(parse_graph6(b"Bw").is_ok());
        assert!(parse_graph6(b"Bx").is_err());
    }

    #[test]
    fn graph6_round_trips() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let enc = emit_graph6(&c4).unwrap();
        assert_eq!(parse_graph6(&enc).unwrap(), c4);
        assert_eq!(emit_graph6(&parse_graph6(&enc).unwrap()).unwrap(), enc);

        // a graph large enough for the 4-byte size prefix
        let big = Graph::from_edges(100, (0..99).map(|i| (i, i + 1))).unwrap();
        let enc = emit_graph6(&big).unwrap();
        assert_eq!(enc[0], 126);
        assert_eq!(parse_graph6(&enc).unwrap(), big);
    }

    #[test]
    fn detect_format() {
        assert!(looks_like_graph6(b"D?{\n"));
        assert!(looks_like_graph6(b">>graph6<<D?{"));
        assert!(!looks_like_graph6(b"0 1\n1 2\n"));
        assert!(!looks_like_graph6(b""));
    }
}

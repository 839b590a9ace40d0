//! Generators for the graph families used throughout: Fibonacci cubes,
//! hypercubes, paths, cycles, random trees, Cartesian products, simplex
//! graphs, complements and the (1,2)-TSP / hardness reduction instances.

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default limit on the number of cliques enumerated for `κ(G)`.
pub const DEFAULT_CLIQUE_CAP: usize = 1_000_000;

const MAX_CUBE_DIM: usize = 24;

fn bit_label(x: usize, d: usize) -> String {
    (0..d).map(|i| if (x >> (d - 1 - i)) & 1 == 1 { '1' } else { '0' }).collect()
}

/// `Γ_d`: binary strings of length `d` without two consecutive ones,
/// adjacent at Hamming distance one. Vertices are numbered by increasing
/// value of the string read as a binary number, so vertex 0 is `00…0`.
pub fn fibonacci_cube(d: usize) -> Result<Graph> {
    if d == 0 {
        return Err(Error::InvalidArgument("Fibonacci cube dimension must be at least 1".into()));
    }
    if d > MAX_CUBE_DIM + 8 {
        return Err(Error::cap("Fibonacci cube dimension", MAX_CUBE_DIM + 8, d));
    }
    let strings: Vec<usize> = (0..1usize << d).filter(|x| x & (x >> 1) == 0).collect();
    let index: HashMap<usize, usize> = strings.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut edges = Vec::new();
    for (i, &s) in strings.iter().enumerate() {
        for b in 0..d {
            if s >> b & 1 == 0 {
                if let Some(&j) = index.get(&(s | 1 << b)) {
                    edges.push((i, j));
                }
            }
        }
    }
    let labels = strings.iter().map(|&s| bit_label(s, d)).collect();
    Ok(Graph::from_edges(strings.len(), edges)?.with_labels(labels))
}

/// `Q_k`, vertex `x` labelled by its `k`-bit binary expansion.
pub fn hypercube(k: usize) -> Result<Graph> {
    if k > MAX_CUBE_DIM {
        return Err(Error::cap("hypercube dimension", MAX_CUBE_DIM, k));
    }
    let n = 1usize << k;
    let edges = (0..n).flat_map(|v| (0..k).map(move |b| (v, v ^ (1 << b))).filter(|&(u, w)| u < w));
    let labels = (0..n).map(|v| bit_label(v, k)).collect();
    Ok(Graph::from_edges(n, edges)?.with_labels(labels))
}

/// `C_n` for `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path on `n >= 1` vertices `0-1-…-(n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("path needs at least 1 vertex".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Uniform random labelled tree on `n >= 1` vertices from a random Prüfer
/// sequence. Deterministic per seed.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("tree needs at least 1 vertex".into()));
    }
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = leaves.pop_first().expect("Prüfer decoding always has a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let a = leaves.pop_first().expect("two leaves remain");
    let b = leaves.pop_first().expect("two leaves remain");
    edges.push((a, b));
    Graph::from_edges(n, edges)
}

/// `G □ H` with `(u, v)` numbered `u * |V(H)| + v`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let mut edges = Vec::with_capacity(g.edge_count() * nh + h.edge_count() * g.n());
    for u in 0..g.n() {
        for (v, w) in h.edges() {
            edges.push((u * nh + v, u * nh + w));
        }
    }
    for (u, x) in g.edges() {
        for v in 0..nh {
            edges.push((u * nh + v, x * nh + v));
        }
    }
    Graph::from_edges(g.n() * nh, edges).expect("product of simple graphs is simple")
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v));
    Graph::from_edges(n, edges).expect("complement is simple")
}

/// All cliques of `g` including the empty one, ordered by size and then
/// lexicographically by sorted member list. Cliques larger than
/// `max_size` are skipped.
pub fn cliques(g: &Graph, max_size: usize, cap: usize) -> Result<Vec<Vec<usize>>> {
    fn extend(
        g: &Graph,
        current: &mut Vec<usize>,
        candidates: &[usize],
        max_size: usize,
        cap: usize,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        if out.len() >= cap {
            return Err(Error::ResourceCap {
                what: "clique enumeration",
                limit: cap,
                actual: out.len() + 1,
                hint: "; use the 2-simplex graph instead",
            });
        }
        out.push(current.clone());
        if current.len() == max_size {
            return Ok(());
        }
        for (i, &v) in candidates.iter().enumerate() {
            let next: Vec<usize> = candidates[i + 1..].iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            current.push(v);
            extend(g, current, &next, max_size, cap, out)?;
            current.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    let all: Vec<usize> = (0..g.n()).collect();
    extend(g, &mut Vec::new(), &all, max_size, cap, &mut out)?;
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn clique_name(c: &[usize]) -> String {
    let mut s = String::from("{");
    for (i, v) in c.iter().enumerate() {
        let _ = write!(s, "{}{v}", if i == 0 { "" } else { "," });
    }
    s.push('}');
    s
}

fn clique_graph(cliques: Vec<Vec<usize>>) -> Graph {
    let index: HashMap<&[usize], usize> = cliques.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let mut edges = Vec::new();
    for (i, c) in cliques.iter().enumerate() {
        for drop in 0..c.len() {
            let mut sub = c.clone();
            sub.remove(drop);
            edges.push((index[sub.as_slice()], i));
        }
    }
    let labels = cliques.iter().map(|c| clique_name(c)).collect();
    Graph::from_edges(cliques.len(), edges)
        .expect("clique graph is simple")
        .with_labels(labels)
}

/// `κ(G)`: one vertex per clique (the empty clique is vertex 0), adjacent
/// when the cliques differ by exactly one vertex.
pub fn simplex_graph_with_cap(g: &Graph, cap: usize) -> Result<Graph> {
    Ok(clique_graph(cliques(g, usize::MAX, cap)?))
}

pub fn simplex_graph(g: &Graph) -> Result<Graph> {
    simplex_graph_with_cap(g, DEFAULT_CLIQUE_CAP)
}

/// `κ₂(G)`: the subgraph of `κ(G)` on cliques with at most two vertices.
pub fn two_simplex_graph(g: &Graph) -> Graph {
    clique_graph(cliques(g, 2, usize::MAX).expect("no cap on κ₂"))
}

/// `κ₂(Ḡ)`, whose Fibonacci dimension encodes Hamiltonian paths of `G`.
pub fn hardness_instance(g: &Graph) -> Graph {
    two_simplex_graph(&complement(g))
}

/// Symmetric (1,2)-TSP instance: distance 1 along edges, 2 otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tsp12Instance {
    n: usize,
    dist: Vec<u8>,
}

impl Tsp12Instance {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance between distinct points; 0 on the diagonal.
    pub fn get(&self, a: usize, b: usize) -> u8 {
        self.dist[a * self.n + b]
    }

    /// `n` on the first line, then `n` rows of space-separated entries.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for a in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|b| self.get(a, b).to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |line: usize, m: String| Error::EdgeList { line, message: m };
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (l0, first) = lines.next().ok_or_else(|| bad(1, "empty TSP instance".into()))?;
        let n: usize = first.trim().parse().map_err(|_| bad(l0 + 1, "bad point count".into()))?;
        let mut dist = Vec::with_capacity(n * n);
        for a in 0..n {
            let (li, line) = lines.next().ok_or_else(|| bad(l0 + 2 + a, "missing row".into()))?;
            let row: Vec<u8> = line
                .split_whitespace()
                .map(|t| t.parse::<u8>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad(li + 1, "bad entry".into()))?;
            if row.len() != n {
                return Err(bad(li + 1, format!("expected {n} entries")));
            }
            for (b, &x) in row.iter().enumerate() {
                let ok = if a == b { x == 0 } else { x == 1 || x == 2 };
                if !ok {
                    return Err(bad(li + 1, format!("entry ({a},{b}) = {x} not allowed")));
                }
            }
            dist.extend(row);
        }
        let inst = Tsp12Instance { n, dist };
        if (0..n).any(|a| (0..n).any(|b| inst.get(a, b) != inst.get(b, a))) {
            return Err(bad(1, "matrix is not symmetric".into()));
        }
        Ok(inst)
    }
}

pub fn tsp12_instance(g: &Graph) -> Result<Tsp12Instance> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidArgument("(1,2)-TSP needs at least 2 points".into()));
    }
    let mut dist = vec![2u8; n * n];
    for a in 0..n {
        dist[a * n + a] = 0;
        for &b in g.neighbors(a) {
            dist[a * n + b] = 1;
        }
    }
    Ok(Tsp12Instance { n, dist })
}

//! Semicubes of a partial cube and the graphs built on them: `X(G)`,
//! the semicube graph `Sc(G)`, the pair-contracted `Y(G)` and the crossing
//! graph `G^#`.

use std::fmt;

use crate::bits::BitRows;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partial_cube::HypercubeEmbedding;

/// One semicube `W(coord, side)`: the vertices whose coordinate `coord` in
/// the hypercube embedding equals `side`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemicubeRef {
    pub coord: usize,
    pub side: bool,
}

impl SemicubeRef {
    pub fn new(coord: usize, side: bool) -> Self {
        SemicubeRef { coord, side }
    }

    /// Dense node index `2 * coord + side`.
    #[inline]
    pub fn node(self) -> usize {
        2 * self.coord + self.side as usize
    }

    #[inline]
    pub fn from_node(node: usize) -> Self {
        SemicubeRef {
            coord: node / 2,
            side: node % 2 == 1,
        }
    }

    pub fn complement(self) -> Self {
        SemicubeRef {
            coord: self.coord,
            side: !self.side,
        }
    }
}

impl fmt::Display for SemicubeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W({},{})", self.coord, self.side as u8)
    }
}

/// Membership bitsets of all `2k` semicubes, row `2i + s` is `W(i, s)`.
#[derive(Clone, Debug)]
pub struct Semicubes {
    k: usize,
    sets: BitRows,
}

impl Semicubes {
    pub fn new(emb: &HypercubeEmbedding) -> Self {
        let (n, k) = (emb.n(), emb.k());
        let mut sets = BitRows::new(2 * k, n);
        for v in 0..n {
            for i in 0..k {
                sets.set(2 * i + emb.bit(v, i) as usize, v, true);
            }
        }
        Semicubes { k, sets }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn contains(&self, w: SemicubeRef, v: usize) -> bool {
        self.sets.get(w.node(), v)
    }

    pub fn members(&self, w: SemicubeRef) -> Vec<usize> {
        self.sets.ones(w.node()).collect()
    }

    pub fn intersect(&self, a: SemicubeRef, b: SemicubeRef) -> bool {
        self.sets.rows_intersect(a.node(), b.node())
    }

    pub fn cover(&self, a: SemicubeRef, b: SemicubeRef) -> bool {
        self.sets.rows_cover(a.node(), b.node())
    }
}

/// Symmetric dense adjacency over a small node set.
#[derive(Clone, PartialEq, Eq)]
pub struct DenseGraph {
    adj: BitRows,
}

impl DenseGraph {
    fn new(nodes: usize) -> Self {
        DenseGraph {
            adj: BitRows::new(nodes, nodes),
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.rows()
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj.get(a, b)
    }

    fn connect(&mut self, a: usize, b: usize, on: bool) {
        self.adj.set(a, b, on);
        self.adj.set(b, a, on);
    }

    pub fn neighbors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.ones(a)
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adj.count_ones(a) as usize
    }

    /// Neighbor mask of `a` packed in one word; requires at most 64 nodes.
    #[inline]
    pub fn neighbor_word(&self, a: usize) -> u64 {
        debug_assert!(self.node_count() <= 64);
        self.adj.row_word(a)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.node_count()).flat_map(move |a| self.adj.ones(a).filter(move |&b| b > a).map(move |b| (a, b)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.node_count(), self.edges()).expect("dense adjacency is a simple graph")
    }
}

impl fmt::Debug for DenseGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DenseGraph")
            .field("nodes", &self.node_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

macro_rules! semicube_node_graph {
    ($name:ident) => {
        impl $name {
            /// Number of complementary pairs.
            pub fn k(&self) -> usize {
                self.graph.node_count() / 2
            }

            pub fn adjacent(&self, a: SemicubeRef, b: SemicubeRef) -> bool {
                self.graph.adjacent(a.node(), b.node())
            }

            pub fn dense(&self) -> &DenseGraph {
                &self.graph
            }

            pub fn edges(&self) -> impl Iterator<Item = (SemicubeRef, SemicubeRef)> + '_ {
                self.graph
                    .edges()
                    .map(|(a, b)| (SemicubeRef::from_node(a), SemicubeRef::from_node(b)))
            }

            pub fn edge_count(&self) -> usize {
                self.graph.edge_count()
            }
        }
    };
}

/// `X(G)`: semicubes from different pairs are adjacent when disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XGraph {
    graph: DenseGraph,
}

semicube_node_graph!(XGraph);

impl XGraph {
    /// Builds an X-type graph from arbitrary edges over `2k` semicube nodes.
    /// Rejects edges inside a complementary pair.
    pub fn from_edges<I>(k: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SemicubeRef, SemicubeRef)>,
    {
        let mut graph = DenseGraph::new(2 * k);
        for (a, b) in edges {
            if a.coord >= k || b.coord >= k {
                return Err(Error::InvalidArgument(format!("{a}-{b} outside {k} pairs")));
            }
            if a.coord == b.coord {
                return Err(Error::InvalidArgument(format!("{a}-{b} joins a complementary pair")));
            }
            graph.connect(a.node(), b.node(), true);
        }
        Ok(XGraph { graph })
    }
}

/// `Sc(G)`: semicubes adjacent when their union is `V(G)` and they meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScGraph {
    graph: DenseGraph,
}

semicube_node_graph!(ScGraph);

/// `Y(G)`: `X(G)` with each complementary pair merged into one node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YGraph {
    graph: DenseGraph,
}

impl YGraph {
    pub fn k(&self) -> usize {
        self.graph.node_count()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.graph.adjacent(i, j)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph.edges()
    }

    pub fn to_graph(&self) -> Graph {
        self.graph.to_graph()
    }
}

/// Starts from the complete graph minus intra-pair edges and, for every
/// vertex, deletes the edges among the `k` semicubes containing it.
pub fn build_x(emb: &HypercubeEmbedding) -> XGraph {
    let k = emb.k();
    let mut graph = DenseGraph::new(2 * k);
    for a in 0..2 * k {
        for b in 0..2 * k {
            if a / 2 != b / 2 {
                graph.adj.set(a, b, true);
            }
        }
    }
    let mut holding = BitRows::new(1, 2 * k);
    for v in 0..emb.n() {
        holding.row_mut(0).fill(0);
        for i in 0..k {
            holding.set(0, 2 * i + emb.bit(v, i) as usize, true);
        }
        for i in 0..k {
            let a = 2 * i + emb.bit(v, i) as usize;
            for (w, h) in graph.adj.row_mut(a).iter_mut().zip(holding.row(0)) {
                *w &= !h;
            }
        }
    }
    XGraph { graph }
}

pub fn build_sc(emb: &HypercubeEmbedding) -> ScGraph {
    let sc = Semicubes::new(emb);
    let k = emb.k();
    let mut graph = DenseGraph::new(2 * k);
    for a in 0..2 * k {
        for b in a + 1..2 * k {
            let (wa, wb) = (SemicubeRef::from_node(a), SemicubeRef::from_node(b));
            if sc.cover(wa, wb) && sc.intersect(wa, wb) {
                graph.connect(a, b, true);
            }
        }
    }
    ScGraph { graph }
}

pub fn build_y(x: &XGraph) -> YGraph {
    let k = x.k();
    let mut graph = DenseGraph::new(k);
    for (a, b) in x.graph.edges() {
        graph.connect(a / 2, b / 2, true);
    }
    YGraph { graph }
}

/// `G^#` on the `k` coordinates: `i ~ j` when all four intersections
/// `W(i,a) ∩ W(j,b)` are nonempty.
pub fn crossing_graph(emb: &HypercubeEmbedding) -> Graph {
    let sc = Semicubes::new(emb);
    let k = emb.k();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let crosses = [(false, false), (false, true), (true, false), (true, true)]
                .iter()
                .all(|&(a, b)| sc.intersect(SemicubeRef::new(i, a), SemicubeRef::new(j, b)));
            if crosses {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(k, edges).expect("crossing graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partial_cube::canonical_embedding;

    fn w(i: usize, s: u8) -> SemicubeRef {
        SemicubeRef::new(i, s == 1)
    }

    fn star3() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cube(k: usize) -> Graph {
        let n = 1usize << k;
        let mut e = Vec::new();
        for v in 0..n {
            for b in 0..k {
                if v < v ^ (1 << b) {
                    e.push((v, v ^ (1 << b)));
                }
            }
        }
        Graph::from_edges(n, e).unwrap()
    }

    #[test]
    fn display_names() {
        assert_eq!(w(3, 0).to_string(), "W(3,0)");
        assert_eq!(SemicubeRef::from_node(7), w(3, 1));
        assert_eq!(w(2, 1).complement(), w(2, 0));
    }

    #[test]
    fn star_x_is_a_triangle_on_leaf_sides() {
        let e = canonical_embedding(&star3()).unwrap();
        let x = build_x(&e);
        let mut edges: Vec<_> = x.edges().collect();
        edges.sort();
        assert_eq!(edges, vec![(w(0, 1), w(1, 1)), (w(0, 1), w(2, 1)), (w(1, 1), w(2, 1))]);
        let y = build_y(&x);
        assert_eq!(y.to_graph().edge_count(), 3);
    }

    #[test]
    fn x_matches_disjointness_definition() {
        for g in [path(5), star3(), cube(3)] {
            let e = canonical_embedding(&g).unwrap();
            let sc = Semicubes::new(&e);
            let x = build_x(&e);
            for a in 0..2 * e.k() {
                for b in 0..2 * e.k() {
                    let (wa, wb) = (SemicubeRef::from_node(a), SemicubeRef::from_node(b));
                    let expect = wa.coord != wb.coord && !sc.intersect(wa, wb);
                    assert_eq!(x.adjacent(wa, wb), expect, "{wa} {wb}");
                }
            }
        }
    }

    #[test]
    fn hypercubes_have_empty_x_and_sc_and_complete_crossing() {
        for k in 1..=4 {
            let e = canonical_embedding(&cube(k)).unwrap();
            assert_eq!(build_x(&e).edge_count(), 0);
            assert_eq!(build_sc(&e).edge_count(), 0);
            assert_eq!(build_y(&build_x(&e)).to_graph().edge_count(), 0);
            assert_eq!(crossing_graph(&e).edge_count(), k * (k - 1) / 2);
        }
    }

    #[test]
    fn path_sc_and_y() {
        let e = canonical_embedding(&path(3)).unwrap();
        let sc = build_sc(&e);
        // W(0,1) = {1,2} and W(1,0) = {0,1}
        assert_eq!(sc.edges().collect::<Vec<_>>(), vec![(w(0, 1), w(1, 0))]);

        let e4 = canonical_embedding(&path(4)).unwrap();
        let y = build_y(&build_x(&e4)).to_graph();
        assert_eq!(y.n(), 3);
        assert!(y.is_connected());
    }

    #[test]
    fn trees_do_not_cross_and_c6_does() {
        let t = Graph::from_edges(7, [(0, 1), (1, 2), (1, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(crossing_graph(&canonical_embedding(&t).unwrap()).edge_count(), 0);
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let e = canonical_embedding(&c6).unwrap();
        assert_eq!(crossing_graph(&e).edge_count(), 3);
        assert_eq!(build_x(&e).edge_count(), 0);
    }

    #[test]
    fn x_from_edges_rejects_intra_pair() {
        assert!(XGraph::from_edges(2, [(w(0, 0), w(0, 1))]).is_err());
        assert!(XGraph::from_edges(2, [(w(0, 0), w(2, 1))]).is_err());
        let x = XGraph::from_edges(2, [(w(0, 0), w(1, 1))]).unwrap();
        assert!(x.adjacent(w(1, 1), w(0, 0)));
    }
}

//! Djoković–Winkler classes, partial-cube recognition and the canonical
//! irredundant embedding into the hypercube `Q_k`.

use crate::bits::BitRows;
use crate::error::{Error, Result};
use crate::graph::{distance_matrix, DistMatrix, Graph, UNREACHABLE};

/// Partition of the edge set into Θ*-classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaPartition {
    /// Edges `(u, v)` with `u < v` in [`Graph::edges`] order.
    pub edges: Vec<(usize, usize)>,
    /// Class index of each edge, parallel to `edges`.
    pub class_of: Vec<usize>,
    /// Edges of each class; classes are numbered by their first edge.
    pub classes: Vec<Vec<(usize, usize)>>,
}

impl ThetaPartition {
    pub fn k(&self) -> usize {
        self.classes.len()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so the first edge names the class
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

fn require_connected_bipartite(g: &Graph, dist: &DistMatrix) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::not_partial_cube("graph has no vertices"));
    }
    if !dist.all_reachable() {
        return Err(Error::not_partial_cube("graph is disconnected"));
    }
    if !g.is_bipartite() {
        return Err(Error::not_partial_cube("graph contains an odd cycle"));
    }
    Ok(())
}

/// Θ*-classes: edges `uv`, `xy` are related when
/// `d(u,x) + d(v,y) != d(u,y) + d(v,x)`, closed transitively.
pub fn theta_classes(g: &Graph, dist: &DistMatrix) -> Result<ThetaPartition> {
    require_connected_bipartite(g, dist)?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    let mut uf = UnionFind::new(m);
    for (a, &(u, v)) in edges.iter().enumerate() {
        let (du, dv) = (dist.row(u), dist.row(v));
        for (b, &(x, y)) in edges.iter().enumerate().skip(a + 1) {
            if du[x] + dv[y] != du[y] + dv[x] {
                uf.union(a, b);
            }
        }
    }
    let mut class_of = vec![usize::MAX; m];
    let mut root_class = vec![usize::MAX; m];
    let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
    for e in 0..m {
        let r = uf.find(e);
        if root_class[r] == usize::MAX {
            root_class[r] = classes.len();
            classes.push(Vec::new());
        }
        class_of[e] = root_class[r];
        classes[root_class[r]].push(edges[e]);
    }
    Ok(ThetaPartition {
        edges,
        class_of,
        classes,
    })
}

/// Vertex labels in `Q_k`, one row per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypercubeEmbedding {
    labels: BitRows,
}

impl HypercubeEmbedding {
    /// Wraps labels without checking them; use [`verify_labels`] to certify.
    pub fn from_labels(labels: BitRows) -> Self {
        HypercubeEmbedding { labels }
    }

    pub fn k(&self) -> usize {
        self.labels.cols()
    }

    pub fn n(&self) -> usize {
        self.labels.rows()
    }

    #[inline]
    pub fn bit(&self, v: usize, i: usize) -> bool {
        self.labels.get(v, i)
    }

    pub fn labels(&self) -> &BitRows {
        &self.labels
    }

    pub fn label_string(&self, v: usize) -> String {
        self.labels.row_string(v)
    }

    /// Every coordinate takes both values somewhere.
    pub fn is_irredundant(&self) -> bool {
        is_irredundant(&self.labels)
    }
}

pub(crate) fn is_irredundant(labels: &BitRows) -> bool {
    (0..labels.cols()).all(|i| {
        let ones = (0..labels.rows()).filter(|&v| labels.get(v, i)).count();
        ones > 0 && ones < labels.rows()
    })
}

/// A vertex pair whose label distance disagrees with the graph distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub u: usize,
    pub v: usize,
    /// `None` when the pair is disconnected.
    pub graph_distance: Option<u32>,
    pub hamming: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsometryCheck {
    Isometric,
    Violated(Witness),
}

impl IsometryCheck {
    pub fn is_isometric(&self) -> bool {
        matches!(self, IsometryCheck::Isometric)
    }
}

/// Compares Hamming distance of labels with graph distance over all pairs.
/// The first violating pair in `(u, v)` lexicographic order is reported.
pub fn verify_labels(dist: &DistMatrix, labels: &BitRows) -> Result<IsometryCheck> {
    if labels.rows() != dist.n() {
        return Err(Error::InvalidArgument(format!(
            "{} labels for {} vertices",
            labels.rows(),
            dist.n()
        )));
    }
    for u in 0..dist.n() {
        let row = dist.row(u);
        for (v, &d) in row.iter().enumerate().skip(u + 1) {
            let h = labels.hamming(u, v);
            if d != h {
                return Ok(IsometryCheck::Violated(Witness {
                    u,
                    v,
                    graph_distance: (d != UNREACHABLE).then_some(d),
                    hamming: h,
                }));
            }
        }
    }
    Ok(IsometryCheck::Isometric)
}

/// Checks a binary-string labelling for isometry. All labels must share one
/// length and there must be one per vertex.
pub fn verify_isometric<S: AsRef<str>>(g: &Graph, labels: &[S]) -> Result<IsometryCheck> {
    let bits = BitRows::from_strings(labels).map_err(Error::InvalidArgument)?;
    verify_labels(&distance_matrix(g), &bits)
}

/// Canonical embedding: coordinate `i` is the `i`-th Θ-class (first-seen
/// edge order) and a vertex gets a 1 exactly when it lies on the side of the
/// class away from vertex 0.
pub fn canonical_embedding_with(g: &Graph, dist: &DistMatrix) -> Result<HypercubeEmbedding> {
    let theta = theta_classes(g, dist)?;
    let n = g.n();
    let k = theta.k();
    let mut labels = BitRows::new(n, k);
    for (i, class) in theta.classes.iter().enumerate() {
        let (a, b) = class[0];
        // orient so that `near` is the endpoint on vertex 0's side
        let (near, far) = if dist.get(0, a) < dist.get(0, b) { (a, b) } else { (b, a) };
        let (dn, df) = (dist.row(near), dist.row(far));
        for v in 0..n {
            if df[v] < dn[v] {
                labels.set(v, i, true);
            }
        }
    }
    match verify_labels(dist, &labels)? {
        IsometryCheck::Isometric => Ok(HypercubeEmbedding { labels }),
        IsometryCheck::Violated(w) => Err(Error::NotPartialCube {
            reason: format!(
                "Θ-class labelling is not isometric: vertices {} and {} are at distance {} but labels differ in {} places",
                w.u,
                w.v,
                w.graph_distance.unwrap_or(UNREACHABLE),
                w.hamming
            ),
            witness: Some((w.u, w.v)),
        }),
    }
}

pub fn canonical_embedding(g: &Graph) -> Result<HypercubeEmbedding> {
    canonical_embedding_with(g, &distance_matrix(g))
}

pub fn is_partial_cube(g: &Graph) -> bool {
    canonical_embedding(g).is_ok()
}

/// Isometric dimension: the number of Θ-classes of a partial cube.
pub fn idim(g: &Graph) -> Result<usize> {
    canonical_embedding(g).map(|e| e.k())
}

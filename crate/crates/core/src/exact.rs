//! Exact Fibonacci dimension.
//!
//! `fdim(G) = idim(G) + p(X(G)) - 1` where `p(X(G))` is the minimum number
//! of coordinating paths of `X(G)`. The minimum is found by dynamic
//! programming over subsets of complementary pairs, and the embedding into
//! `Γ_f` is assembled from the chosen paths.

use crate::bits::BitRows;
use crate::error::{Error, Result};
use crate::graph::{distance_matrix, DistMatrix, Graph};
use crate::partial_cube::{canonical_embedding_with, is_irredundant, verify_labels, HypercubeEmbedding, IsometryCheck};
use crate::semicube::{build_x, SemicubeRef, Semicubes, XGraph};

/// Default limit on `k` for the subset DP; `2^25 * 50` one-byte states.
pub const DEFAULT_MAX_K: usize = 25;

/// Beyond this the node masks no longer fit one machine word.
const HARD_MAX_K: usize = 32;

/// Paths of `X(G)` that together meet every complementary pair exactly once.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoordinatingPathSystem {
    pub paths: Vec<Vec<SemicubeRef>>,
}

impl CoordinatingPathSystem {
    pub fn new(paths: Vec<Vec<SemicubeRef>>) -> Self {
        CoordinatingPathSystem { paths }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Checks the system against `X(G)` for `k` pairs: consecutive nodes
    /// adjacent, no empty path, every pair met exactly once overall.
    pub fn validate(&self, x: &XGraph) -> Result<()> {
        self.validate_with(x.k(), |a, b| x.adjacent(a, b))
    }

    fn validate_with(&self, k: usize, adjacent: impl Fn(SemicubeRef, SemicubeRef) -> bool) -> Result<()> {
        let mut seen = vec![false; k];
        for (pi, path) in self.paths.iter().enumerate() {
            if path.is_empty() {
                return Err(Error::InvalidPathSystem(format!("path {pi} is empty")));
            }
            for (ni, &w) in path.iter().enumerate() {
                if w.coord >= k {
                    return Err(Error::InvalidPathSystem(format!("{w} is outside the {k} pairs")));
                }
                if std::mem::replace(&mut seen[w.coord], true) {
                    return Err(Error::InvalidPathSystem(format!("pair {} is met twice", w.coord)));
                }
                if ni > 0 && !adjacent(path[ni - 1], w) {
                    return Err(Error::InvalidPathSystem(format!(
                        "{} and {w} are consecutive on path {pi} but not adjacent in X",
                        path[ni - 1]
                    )));
                }
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPathSystem(format!("pair {i} is not covered")));
        }
        Ok(())
    }
}

/// Meaning of one coordinate of a Fibonacci embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Column {
    /// Bit is 1 exactly for members of this semicube.
    Semicube(SemicubeRef),
    /// Constant zero between two paths.
    Separator,
}

/// Vertex labels in the Fibonacci cube `Γ_f`, one row per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibonacciEmbedding {
    labels: BitRows,
    columns: Vec<Column>,
}

impl FibonacciEmbedding {
    pub fn dimension(&self) -> usize {
        self.labels.cols()
    }

    pub fn n(&self) -> usize {
        self.labels.rows()
    }

    pub fn labels(&self) -> &BitRows {
        &self.labels
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn label_string(&self, v: usize) -> String {
        self.labels.row_string(v)
    }

    /// No label contains two consecutive ones.
    pub fn is_fibonacci(&self) -> bool {
        (0..self.n()).all(|v| !self.labels.row_has_adjacent_ones(v))
    }

    /// Labels with every constant-zero column removed.
    pub fn without_zero_columns(&self) -> BitRows {
        let keep: Vec<usize> = (0..self.dimension())
            .filter(|&c| (0..self.n()).any(|v| self.labels.get(v, c)))
            .collect();
        let mut out = BitRows::new(self.n(), keep.len());
        for v in 0..self.n() {
            for (j, &c) in keep.iter().enumerate() {
                if self.labels.get(v, c) {
                    out.set(v, j, true);
                }
            }
        }
        out
    }

    /// Full certificate: Fibonacci strings, isometric, and the nonzero
    /// columns form an irredundant hypercube embedding.
    pub fn certify(&self, dist: &DistMatrix) -> Result<()> {
        if let Some(v) = (0..self.n()).find(|&v| self.labels.row_has_adjacent_ones(v)) {
            return Err(Error::Verification(format!(
                "label of vertex {v} ({}) contains \"11\"",
                self.label_string(v)
            )));
        }
        if let IsometryCheck::Violated(w) = verify_labels(dist, &self.labels)? {
            return Err(Error::Verification(format!(
                "vertices {} and {} at graph distance {:?} have Hamming distance {}",
                w.u, w.v, w.graph_distance, w.hamming
            )));
        }
        if !is_irredundant(&self.without_zero_columns()) {
            return Err(Error::Verification("a nonzero column is constant".into()));
        }
        Ok(())
    }
}

/// Result of a Fibonacci-dimension computation together with everything
/// needed to audit it.
#[derive(Clone, Debug)]
pub struct FibonacciSolution {
    pub dimension: usize,
    pub idim: usize,
    pub hypercube: HypercubeEmbedding,
    pub system: CoordinatingPathSystem,
    pub embedding: FibonacciEmbedding,
}

#[inline]
fn spread_pairs(set: u64) -> u64 {
    // bit i of `set` -> bits 2i and 2i+1
    let mut x = set & 0xFFFF_FFFF;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x | (x << 1)
}

/// Minimum system of coordinating paths by DP over subsets of pairs.
///
/// `table[I][w]` is the least number of paths covering the pairs in `I`
/// with one path ending at node `w`. Either `w` is a one-node path
/// (`1 + best[I - pair(w)]`) or it extends a path ending at an X-neighbor
/// `w'` inside `I - pair(w)`. Ties prefer extending, then the lowest `w'`.
pub fn min_coordinating_paths(x: &XGraph, max_k: usize) -> Result<CoordinatingPathSystem> {
    let k = x.k();
    let limit = max_k.min(HARD_MAX_K);
    if k > limit {
        return Err(Error::ResourceCap {
            what: "exact subset DP over complementary pairs",
            limit,
            actual: k,
            hint: "; use the 3/2-approximation instead",
        });
    }
    if k == 0 {
        return Ok(CoordinatingPathSystem::default());
    }
    let nodes = 2 * k;
    let subsets = 1usize << k;
    let full = subsets - 1;
    let nbr: Vec<u64> = (0..nodes).map(|a| x.dense().neighbor_word(a)).collect();

    let mut table: Vec<u8> = Vec::new();
    table
        .try_reserve_exact(subsets * nodes)
        .map_err(|_| Error::cap("exact DP table (bytes)", usize::MAX, subsets * nodes))?;
    table.resize(subsets * nodes, u8::MAX);
    let mut best = vec![u8::MAX; subsets];

    for set in 1..subsets {
        let mut set_best = u8::MAX;
        let mut pairs = set;
        while pairs != 0 {
            let j = pairs.trailing_zeros() as usize;
            pairs &= pairs - 1;
            let rest = set & !(1 << j);
            let allowed = spread_pairs(rest as u64);
            for node in [2 * j, 2 * j + 1] {
                let value = if rest == 0 {
                    1
                } else {
                    let row = &table[rest * nodes..(rest + 1) * nodes];
                    let mut v = best[rest] + 1;
                    let mut cand = nbr[node] & allowed;
                    while cand != 0 {
                        let t = cand.trailing_zeros() as usize;
                        cand &= cand - 1;
                        v = v.min(row[t]);
                    }
                    v
                };
                table[set * nodes + node] = value;
                set_best = set_best.min(value);
            }
        }
        best[set] = set_best;
    }

    // Walk back from the best end node, re-deriving each choice with the
    // same preference order used above.
    let mut set = full;
    let mut node = (0..nodes)
        .find(|&w| table[full * nodes + w] == best[full])
        .expect("full set has a finite entry");
    let mut paths: Vec<Vec<SemicubeRef>> = Vec::new();
    let mut current = vec![SemicubeRef::from_node(node)];
    loop {
        let value = table[set * nodes + node];
        let rest = set & !(1 << (node / 2));
        if rest == 0 {
            break;
        }
        let row = &table[rest * nodes..(rest + 1) * nodes];
        let mut cand = nbr[node] & spread_pairs(rest as u64);
        let mut next = None;
        while cand != 0 {
            let t = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if row[t] == value {
                next = Some(t);
                break;
            }
        }
        match next {
            Some(t) => {
                current.push(SemicubeRef::from_node(t));
                node = t;
            }
            None => {
                debug_assert_eq!(best[rest] + 1, value);
                let t = (0..nodes)
                    .find(|&w| row[w] == best[rest])
                    .expect("subset has a finite entry");
                paths.push(std::mem::take(&mut current));
                current.push(SemicubeRef::from_node(t));
                node = t;
            }
        }
        set = rest;
    }
    paths.push(current);
    paths.reverse();
    for p in &mut paths {
        p.reverse();
    }
    let system = CoordinatingPathSystem { paths };
    debug_assert_eq!(system.len(), best[full] as usize);
    Ok(system)
}

/// Lays the paths out one after another, separated by a constant-zero
/// coordinate. The column for node `W(a, s)` is 1 exactly on `W(a, s)`, so a
/// coordinate may be flipped relative to the hypercube embedding.
pub fn embed_from_paths(emb: &HypercubeEmbedding, system: &CoordinatingPathSystem) -> Result<FibonacciEmbedding> {
    let sc = Semicubes::new(emb);
    system.validate_with(emb.k(), |a, b| a.coord != b.coord && !sc.intersect(a, b))?;
    let mut columns = Vec::new();
    for (pi, path) in system.paths.iter().enumerate() {
        if pi > 0 {
            columns.push(Column::Separator);
        }
        columns.extend(path.iter().map(|&w| Column::Semicube(w)));
    }
    Ok(materialize(emb, columns))
}

fn materialize(emb: &HypercubeEmbedding, columns: Vec<Column>) -> FibonacciEmbedding {
    let mut labels = BitRows::new(emb.n(), columns.len());
    for (c, col) in columns.iter().enumerate() {
        if let Column::Semicube(w) = col {
            for v in 0..emb.n() {
                if emb.bit(v, w.coord) == w.side {
                    labels.set(v, c, true);
                }
            }
        }
    }
    FibonacciEmbedding { labels, columns }
}

/// `u1 0 u2 0 ... 0 uk`: always an isometric embedding into `Γ_{2k-1}`.
pub fn doubling_embedding(emb: &HypercubeEmbedding) -> FibonacciEmbedding {
    let mut columns = Vec::new();
    for i in 0..emb.k() {
        if i > 0 {
            columns.push(Column::Separator);
        }
        columns.push(Column::Semicube(SemicubeRef::new(i, true)));
    }
    materialize(emb, columns)
}

/// Builds and certifies the embedding for a given path system.
pub(crate) fn solution_from_system(
    dist: &DistMatrix,
    hypercube: HypercubeEmbedding,
    system: CoordinatingPathSystem,
) -> Result<FibonacciSolution> {
    let embedding = embed_from_paths(&hypercube, &system)?;
    embedding.certify(dist)?;
    let idim = hypercube.k();
    Ok(FibonacciSolution {
        dimension: embedding.dimension(),
        idim,
        hypercube,
        system,
        embedding,
    })
}

pub fn fdim_exact_with(g: &Graph, dist: &DistMatrix, max_k: usize) -> Result<FibonacciSolution> {
    let hypercube = canonical_embedding_with(g, dist)?;
    let x = build_x(&hypercube);
    let system = min_coordinating_paths(&x, max_k)?;
    let sol = solution_from_system(dist, hypercube, system)?;
    debug_assert_eq!(sol.dimension, (sol.idim + sol.system.len()).saturating_sub(1));
    Ok(sol)
}

/// Exact Fibonacci dimension with a certified embedding into `Γ_f`.
pub fn fdim_exact(g: &Graph) -> Result<FibonacciSolution> {
    fdim_exact_with(g, &distance_matrix(g), DEFAULT_MAX_K)
}

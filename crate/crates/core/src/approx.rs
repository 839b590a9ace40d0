//! Polynomial-time bounds and approximations of the Fibonacci dimension:
//! lattice dimension, dimension bounds, the matching-based 3/2
//! approximation, the lattice-dimension-two formula and the greedy
//! `(1+ε)` scheme for simplex graphs.

use crate::constructions::{cliques, complement, DEFAULT_CLIQUE_CAP};
use crate::error::{Error, Result};
use crate::exact::{min_coordinating_paths, solution_from_system, CoordinatingPathSystem, FibonacciSolution};
use crate::graph::{distance_matrix, DistMatrix, Graph};
use crate::matching::max_matching;
use crate::partial_cube::{canonical_embedding_with, HypercubeEmbedding};
use crate::semicube::{build_sc, build_x, build_y, crossing_graph, SemicubeRef, XGraph};

pub use crate::matching::Matching;

/// Closed interval known to contain `fdim(G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DimBounds {
    pub lower: usize,
    pub upper: usize,
}

/// Lattice dimension: `idim(G)` minus a maximum matching of `Sc(G)`.
pub fn ldim_of(emb: &HypercubeEmbedding) -> usize {
    let sc = build_sc(emb);
    emb.k() - max_matching(&sc.dense().to_graph()).size()
}

pub fn ldim(g: &Graph) -> Result<usize> {
    let emb = canonical_embedding_with(g, &distance_matrix(g))?;
    Ok(ldim_of(&emb))
}

pub(crate) fn bounds_from(idim: usize, ldim: usize) -> DimBounds {
    DimBounds {
        lower: idim.max((2 * ldim).saturating_sub(1)),
        upper: (idim + ldim).saturating_sub(1),
    }
}

/// `max(idim, 2 ldim - 1) <= fdim <= idim + ldim - 1`.
pub fn fdim_bounds(g: &Graph) -> Result<DimBounds> {
    let emb = canonical_embedding_with(g, &distance_matrix(g))?;
    Ok(bounds_from(emb.k(), ldim_of(&emb)))
}

/// Path system built from a maximum matching of `Y(G)`: one two-node path
/// per matched pair, a one-node path for every other pair.
pub fn matching_path_system(x: &XGraph) -> CoordinatingPathSystem {
    let k = x.k();
    let y = build_y(x);
    let matching = max_matching(&y.to_graph());
    let mut covered = vec![false; k];
    let mut paths = Vec::new();
    for (i, j) in matching.edges() {
        let pair = [false, true]
            .iter()
            .flat_map(|&a| [false, true].map(move |b| (SemicubeRef::new(i, a), SemicubeRef::new(j, b))))
            .find(|&(a, b)| x.adjacent(a, b))
            .expect("Y edge comes from an X edge");
        paths.push(vec![pair.0, pair.1]);
        covered[i] = true;
        covered[j] = true;
    }
    for (i, done) in covered.iter().enumerate() {
        if !done {
            paths.push(vec![SemicubeRef::new(i, false)]);
        }
    }
    paths.sort_by_key(|p| p.iter().map(|w| w.coord).min());
    CoordinatingPathSystem::new(paths)
}

/// Embedding into `Γ_{f'}` with `f' = 2k - |M| - 1 <= 3/2 fdim(G)`.
pub fn fdim_approx_3_2_with(g: &Graph, dist: &DistMatrix) -> Result<FibonacciSolution> {
    let hypercube = canonical_embedding_with(g, dist)?;
    let x = build_x(&hypercube);
    let system = matching_path_system(&x);
    solution_from_system(dist, hypercube, system)
}

pub fn fdim_approx_3_2(g: &Graph) -> Result<FibonacciSolution> {
    fdim_approx_3_2_with(g, &distance_matrix(g))
}

/// Checks `G ≅ P_a □ P_b` for some split `a + b = idim`, `a, b >= 1`,
/// by placing a degree-two corner at the origin and reading grid
/// coordinates off distances to two corners.
pub fn is_grid(g: &Graph, dist: &DistMatrix, idim: usize) -> bool {
    let n = g.n();
    let corners: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 2).collect();
    for a in 1..idim {
        let b = idim - a;
        if (a + 1) * (b + 1) != n || g.edge_count() != a * (b + 1) + b * (a + 1) {
            continue;
        }
        for &origin in &corners {
            for &side in &corners {
                if dist.get(origin, side) as usize != a || side == origin {
                    continue;
                }
                if grid_coordinates(g, dist, origin, side, a, b) {
                    return true;
                }
            }
        }
    }
    false
}

fn grid_coordinates(g: &Graph, dist: &DistMatrix, origin: usize, side: usize, a: usize, b: usize) -> bool {
    let n = g.n();
    let mut pos = vec![(0i64, 0i64); n];
    let mut taken = vec![false; n];
    for (v, p) in pos.iter_mut().enumerate() {
        let (d0, d1, a) = (dist.get(origin, v) as i64, dist.get(side, v) as i64, a as i64);
        let twice_i = d0 - d1 + a;
        let twice_j = d0 + d1 - a;
        if twice_i % 2 != 0 || twice_j % 2 != 0 {
            return false;
        }
        let (i, j) = (twice_i / 2, twice_j / 2);
        if !(0..=a).contains(&i) || !(0..=b as i64).contains(&j) {
            return false;
        }
        let slot = (i * (b as i64 + 1) + j) as usize;
        if std::mem::replace(&mut taken[slot], true) {
            return false;
        }
        *p = (i, j);
    }
    g.edges().all(|(u, v)| {
        let (pu, pv) = (pos[u], pos[v]);
        (pu.0 - pv.0).abs() + (pu.1 - pv.1).abs() == 1
    })
}

/// Fibonacci dimension of a partial cube with lattice dimension two:
/// `idim + 1` for a product of two paths, `idim` otherwise.
pub fn fdim_ldim2(g: &Graph) -> Result<usize> {
    let dist = distance_matrix(g);
    let emb = canonical_embedding_with(g, &dist)?;
    let l = ldim_of(&emb);
    if l != 2 {
        return Err(Error::InvalidArgument(format!("lattice dimension is {l}, not 2")));
    }
    let k = emb.k();
    Ok(if is_grid(g, &dist, k) { k + 1 } else { k })
}

/// Starts from one-node paths on `allowed` and keeps joining two paths
/// whose end nodes are adjacent in `X`, scanning path pairs in ascending
/// index order and taking the first joinable end pair.
pub fn greedy_path_system(x: &XGraph, allowed: &[SemicubeRef]) -> Result<CoordinatingPathSystem> {
    let k = x.k();
    let mut seen = vec![false; k];
    for w in allowed {
        if w.coord >= k || std::mem::replace(&mut seen[w.coord], true) {
            return Err(Error::InvalidArgument(format!("{w} repeats a pair or is out of range")));
        }
    }
    if allowed.len() != k {
        return Err(Error::InvalidArgument(format!(
            "{} allowed nodes for {k} pairs",
            allowed.len()
        )));
    }
    let mut paths: Vec<Vec<SemicubeRef>> = allowed.iter().map(|&w| vec![w]).collect();
    'outer: loop {
        for i in 0..paths.len() {
            for j in i + 1..paths.len() {
                let (p, q) = (&paths[i], &paths[j]);
                let (ps, pe, qs, qe) = (p[0], p[p.len() - 1], q[0], q[q.len() - 1]);
                let joined: Option<Vec<SemicubeRef>> = if x.adjacent(pe, qs) {
                    Some(p.iter().chain(q.iter()).copied().collect())
                } else if x.adjacent(pe, qe) {
                    Some(p.iter().chain(q.iter().rev()).copied().collect())
                } else if x.adjacent(ps, qs) {
                    Some(p.iter().rev().chain(q.iter()).copied().collect())
                } else if x.adjacent(ps, qe) {
                    Some(q.iter().chain(p.iter()).copied().collect())
                } else {
                    None
                };
                if let Some(path) = joined {
                    paths[i] = path;
                    paths.remove(j);
                    continue 'outer;
                }
            }
        }
        break;
    }
    Ok(CoordinatingPathSystem::new(paths))
}

/// Outcome of the simplex-graph scheme.
#[derive(Clone, Debug)]
pub struct SimplexSolution {
    pub solution: FibonacciSolution,
    /// Size of the greedy system, whether or not it was used.
    pub greedy_paths: usize,
    /// True when the greedy system was too large and the exact DP ran.
    pub used_exact: bool,
}

/// For each pair, the semicube isolated in `X(H)`; `W(i,0)` when both are.
pub fn isolated_per_pair(x: &XGraph) -> Option<Vec<SemicubeRef>> {
    (0..x.k())
        .map(|i| {
            [false, true]
                .into_iter()
                .map(|s| SemicubeRef::new(i, s))
                .find(|w| x.dense().degree(w.node()) == 0)
        })
        .collect()
}

fn inconsistent(msg: String) -> Error {
    Error::InvalidArgument(format!("graph is not the simplex graph of the given graph: {msg}"))
}

/// `(1+ε)`-approximation for `H = κ(G)`.
///
/// Greedy paths on `X(H)` minus one isolated semicube per pair; if more
/// than `ε k` paths remain, `G` has a clique of size at least `ε k` and the
/// exact DP runs instead.
pub fn fdim_simplex_eps(h: &Graph, g: &Graph, eps: f64, max_k: usize) -> Result<SimplexSolution> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidArgument(format!("epsilon must lie in (0,1), got {eps}")));
    }
    let dist = distance_matrix(h);
    let hypercube = canonical_embedding_with(h, &dist)?;
    let k = hypercube.k();

    let all_cliques = cliques(g, usize::MAX, DEFAULT_CLIQUE_CAP)?;
    if k != g.n() {
        return Err(inconsistent(format!("idim is {k}, expected {}", g.n())));
    }
    if h.n() != all_cliques.len() {
        return Err(inconsistent(format!("{} vertices, expected {}", h.n(), all_cliques.len())));
    }
    let expected_edges: usize = all_cliques.iter().map(Vec::len).sum();
    if h.edge_count() != expected_edges {
        return Err(inconsistent(format!("{} edges, expected {expected_edges}", h.edge_count())));
    }
    let x = build_x(&hypercube);
    let isolated = isolated_per_pair(&x).ok_or_else(|| inconsistent("a pair has no isolated semicube".into()))?;
    let allowed: Vec<SemicubeRef> = isolated.iter().map(|w| w.complement()).collect();
    let remaining_edges = x.edge_count();
    let expected_x = complement(g).edge_count();
    if remaining_edges != expected_x {
        return Err(inconsistent(format!(
            "X(H) minus isolated nodes has {remaining_edges} edges, expected {expected_x}"
        )));
    }

    let greedy = greedy_path_system(&x, &allowed)?;
    let greedy_paths = greedy.len();
    let (system, used_exact) = if (greedy_paths as f64) <= eps * k as f64 {
        (greedy, false)
    } else {
        (min_coordinating_paths(&x, max_k)?, true)
    };
    let solution = solution_from_system(&dist, hypercube, system)?;
    Ok(SimplexSolution {
        solution,
        greedy_paths,
        used_exact,
    })
}

/// Every two Θ-classes cross, i.e. the crossing graph is complete.
pub fn has_complete_crossing_graph(g: &Graph) -> Result<bool> {
    let emb = canonical_embedding_with(g, &distance_matrix(g))?;
    let k = emb.k();
    Ok(crossing_graph(&emb).edge_count() == k * k.saturating_sub(1) / 2)
}

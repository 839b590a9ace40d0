//! Brute-force references for small inputs.
//!
//! Nothing here calls into the embedding, semicube, DP or matching code;
//! only the graph model is shared. These are slow on purpose and meant for
//! certifying the real algorithms.

use std::collections::VecDeque;

use crate::constructions::Tsp12Instance;
use crate::error::{Error, Result};
use crate::graph::{distance_matrix, Graph, UNREACHABLE};
use crate::semicube::{SemicubeRef, XGraph};

pub const MAX_FDIM_VERTICES: usize = 16;
pub const MAX_FDIM_DIMENSION: usize = 16;
pub const MAX_IDIM_VERTICES: usize = 24;
pub const MAX_PATH_COVER_PAIRS: usize = 9;
pub const MAX_TSP_POINTS: usize = 15;
pub const MAX_MEDIAN_VERTICES: usize = 200;

/// Smallest `f <= f_max` for which `g` embeds isometrically into `Γ_f`,
/// found by backtracking over Fibonacci strings in BFS order from vertex 0.
/// `Ok(None)` when no such `f` exists.
pub fn brute_force_fdim(g: &Graph, f_max: usize) -> Result<Option<usize>> {
    let n = g.n();
    if n > MAX_FDIM_VERTICES {
        return Err(Error::cap("brute-force fdim vertex count", MAX_FDIM_VERTICES, n));
    }
    if f_max > MAX_FDIM_DIMENSION {
        return Err(Error::cap("brute-force fdim dimension", MAX_FDIM_DIMENSION, f_max));
    }
    if n == 0 {
        return Ok(None);
    }
    let dist = distance_matrix(g);
    if !dist.all_reachable() {
        return Ok(None);
    }
    if n == 1 {
        return Ok(Some(0));
    }
    let (order, parent) = bfs_order(g);

    let lowest = (dist.diameter() as usize).max(1);
    if lowest > f_max {
        return Ok(None);
    }
    // Γ_f embeds in Γ_{f+1}, so the largest f decides existence
    let fits = |f: usize| {
        let rev = |x: u32| x.reverse_bits() >> (32 - f);
        // reversing every label is an automorphism of Γ_f: fix the root's
        // orientation
        let roots: Vec<u32> = (0u32..1 << f).filter(|&x| x & (x >> 1) == 0 && x <= rev(x)).collect();
        let mut label = vec![0u32; n];
        assign(0, f, &order, &parent, &roots, &dist, &mut label)
    };
    if !fits(f_max) {
        return Ok(None);
    }
    Ok(Some((lowest..f_max).find(|&f| fits(f)).unwrap_or(f_max)))
}

fn assign(
    pos: usize,
    f: usize,
    order: &[usize],
    parent: &[usize],
    roots: &[u32],
    dist: &crate::graph::DistMatrix,
    label: &mut [u32],
) -> bool {
    if pos == order.len() {
        return true;
    }
    let v = order[pos];
    let fits = |cand: u32, label: &[u32]| {
        order[..pos]
            .iter()
            .all(|&u| (label[u] ^ cand).count_ones() == dist.get(u, v))
    };
    if pos == 0 {
        for &s in roots {
            label[v] = s;
            if assign(1, f, order, parent, roots, dist, label) {
                return true;
            }
        }
        return false;
    }
    let base = label[parent[v]];
    for b in 0..f {
        let cand = base ^ (1 << b);
        if cand & (cand >> 1) != 0 || !fits(cand, label) {
            continue;
        }
        label[v] = cand;
        if assign(pos + 1, f, order, parent, roots, dist, label) {
            return true;
        }
    }
    false
}

/// Least `k` for which `g` embeds isometrically into `Q_k`, by
/// backtracking in BFS order. The root sits at `0…0` and coordinates are
/// introduced in order, which removes the hypercube's symmetry. `Ok(None)`
/// when no embedding with at most `k_max` coordinates exists.
pub fn brute_force_idim(g: &Graph, k_max: usize) -> Result<Option<usize>> {
    let n = g.n();
    if n > MAX_IDIM_VERTICES {
        return Err(Error::cap("brute-force idim vertex count", MAX_IDIM_VERTICES, n));
    }
    if k_max > 64 {
        return Err(Error::cap("brute-force idim dimension", 64, k_max));
    }
    if n == 0 {
        return Ok(None);
    }
    let dist = distance_matrix(g);
    if !dist.all_reachable() {
        return Ok(None);
    }
    let (order, parent) = bfs_order(g);
    fn place(
        pos: usize,
        used: usize,
        k_max: usize,
        order: &[usize],
        parent: &[usize],
        dist: &crate::graph::DistMatrix,
        label: &mut [u64],
    ) -> Option<usize> {
        if pos == order.len() {
            return Some(used);
        }
        let v = order[pos];
        let base = label[parent[v]];
        // flip one coordinate already in use, or the next fresh one
        for b in 0..(used + 1).min(k_max) {
            let cand = base ^ (1 << b);
            if order[..pos].iter().all(|&u| (label[u] ^ cand).count_ones() == dist.get(u, v)) {
                label[v] = cand;
                if let Some(k) = place(pos + 1, used.max(b + 1), k_max, order, parent, dist, label) {
                    return Some(k);
                }
            }
        }
        None
    }
    let mut label = vec![0u64; n];
    Ok(place(1, 0, k_max, &order, &parent, &dist, &mut label))
}

fn bfs_order(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    (order, parent)
}

/// Minimum number of coordinating paths by branch and bound over
/// sequences of (pair, side) choices; a new path starts whenever the next
/// node is not adjacent to the previous one.
pub fn brute_force_path_cover(x: &XGraph) -> Result<usize> {
    let k = x.k();
    if k > MAX_PATH_COVER_PAIRS {
        return Err(Error::cap("brute-force path cover pairs", MAX_PATH_COVER_PAIRS, k));
    }
    if k == 0 {
        return Ok(0);
    }
    fn search(x: &XGraph, used: &mut [bool], last: SemicubeRef, paths: usize, left: usize, best: &mut usize) {
        if left == 0 {
            *best = (*best).min(paths);
            return;
        }
        for i in 0..used.len() {
            if used[i] {
                continue;
            }
            for side in [false, true] {
                let next = SemicubeRef::new(i, side);
                let cost = paths + usize::from(!x.adjacent(last, next));
                if cost >= *best {
                    continue;
                }
                used[i] = true;
                search(x, used, next, cost, left - 1, best);
                used[i] = false;
            }
        }
    }
    let mut best = k;
    let mut used = vec![false; k];
    for i in 0..k {
        for side in [false, true] {
            used[i] = true;
            search(x, &mut used, SemicubeRef::new(i, side), 1, k - 1, &mut best);
            used[i] = false;
        }
    }
    Ok(best)
}

/// Plain backtracking over simple paths.
pub fn has_hamiltonian_path(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > MAX_TSP_POINTS {
        return Err(Error::cap("Hamiltonian path vertex count", MAX_TSP_POINTS, n));
    }
    if n <= 1 {
        return Ok(true);
    }
    fn extend(g: &Graph, v: usize, visited: &mut [bool], count: usize) -> bool {
        if count == visited.len() {
            return true;
        }
        for &u in g.neighbors(v) {
            if !visited[u] {
                visited[u] = true;
                if extend(g, u, visited, count + 1) {
                    return true;
                }
                visited[u] = false;
            }
        }
        false
    }
    let mut visited = vec![false; n];
    for s in 0..n {
        visited[s] = true;
        if extend(g, s, &mut visited, 1) {
            return Ok(true);
        }
        visited[s] = false;
    }
    Ok(false)
}

/// Optimal closed tour length by Held–Karp over subsets.
pub fn tsp12_optimal(inst: &Tsp12Instance) -> Result<u32> {
    let n = inst.n();
    if n > MAX_TSP_POINTS {
        return Err(Error::cap("Held-Karp point count", MAX_TSP_POINTS, n));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("tour needs at least 2 points".into()));
    }
    // point 0 is the fixed start; subsets range over points 1..n
    let m = n - 1;
    let full = (1usize << m) - 1;
    let mut cost = vec![u32::MAX; (1 << m) * m];
    for j in 0..m {
        cost[(1 << j) * m + j] = inst.get(0, j + 1) as u32;
    }
    for set in 1..=full {
        for j in 0..m {
            if set >> j & 1 == 0 {
                continue;
            }
            let c = cost[set * m + j];
            if c == u32::MAX {
                continue;
            }
            for t in 0..m {
                if set >> t & 1 == 1 {
                    continue;
                }
                let next = set | 1 << t;
                let cand = c + inst.get(j + 1, t + 1) as u32;
                let slot = &mut cost[next * m + t];
                if cand < *slot {
                    *slot = cand;
                }
            }
        }
    }
    Ok((0..m)
        .map(|j| cost[full * m + j] + inst.get(j + 1, 0) as u32)
        .min()
        .expect("at least one point besides the start"))
}

/// Every triple has exactly one vertex lying on geodesics between each
/// two of them.
pub fn is_median_graph(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > MAX_MEDIAN_VERTICES {
        return Err(Error::cap("median check vertex count", MAX_MEDIAN_VERTICES, n));
    }
    if n == 0 {
        return Ok(false);
    }
    let d = distance_matrix(g);
    if d.get(0, n - 1) == UNREACHABLE || !d.all_reachable() {
        return Ok(false);
    }
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                let mut medians = 0;
                for m in 0..n {
                    if d.get(a, m) + d.get(m, b) == d.get(a, b)
                        && d.get(b, m) + d.get(m, c) == d.get(b, c)
                        && d.get(a, m) + d.get(m, c) == d.get(a, c)
                    {
                        medians += 1;
                        if medians > 1 {
                            return Ok(false);
                        }
                    }
                }
                if medians != 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complement, cycle, fibonacci_cube, hypercube, path, random_tree, tsp12_instance};

    fn w(i: usize, s: u8) -> SemicubeRef {
        SemicubeRef::new(i, s == 1)
    }

    #[test]
    fn fdim_examples() {
        assert_eq!(brute_force_fdim(&path(4).unwrap(), 5).unwrap(), Some(3));
        assert_eq!(brute_force_fdim(&hypercube(2).unwrap(), 5).unwrap(), Some(3));
        assert_eq!(brute_force_fdim(&cycle(6).unwrap(), 5).unwrap(), Some(5));
        assert_eq!(brute_force_fdim(&cycle(6).unwrap(), 4).unwrap(), None);
        assert_eq!(brute_force_fdim(&cycle(5).unwrap(), 8).unwrap(), None);
        assert_eq!(brute_force_fdim(&fibonacci_cube(4).unwrap(), 6).unwrap(), Some(4));
        assert!(brute_force_fdim(&path(17).unwrap(), 5).is_err());
    }

    #[test]
    fn idim_examples() {
        assert_eq!(brute_force_idim(&path(5).unwrap(), 10).unwrap(), Some(4));
        assert_eq!(brute_force_idim(&cycle(6).unwrap(), 10).unwrap(), Some(3));
        assert_eq!(brute_force_idim(&hypercube(3).unwrap(), 10).unwrap(), Some(3));
        assert_eq!(brute_force_idim(&hypercube(3).unwrap(), 2).unwrap(), None);
        assert_eq!(brute_force_idim(&cycle(5).unwrap(), 10).unwrap(), None);
        let k23 = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(brute_force_idim(&k23, 10).unwrap(), None);
        assert_eq!(brute_force_idim(&Graph::empty(1), 3).unwrap(), Some(0));
    }

    #[test]
    fn path_cover_examples() {
        assert_eq!(brute_force_path_cover(&XGraph::from_edges(4, []).unwrap()).unwrap(), 4);
        // X(P_4) with vertex 0 as base
        let x = XGraph::from_edges(3, [(w(0, 0), w(1, 1)), (w(0, 0), w(2, 1)), (w(1, 0), w(2, 1))]).unwrap();
        assert_eq!(brute_force_path_cover(&x).unwrap(), 1);
        assert!(brute_force_path_cover(&XGraph::from_edges(10, []).unwrap()).is_err());
    }

    #[test]
    fn hamiltonian_and_tsp() {
        let p4 = path(4).unwrap();
        assert!(has_hamiltonian_path(&p4).unwrap());
        assert_eq!(tsp12_optimal(&tsp12_instance(&p4).unwrap()).unwrap(), 5);
        let k4 = complement(&Graph::empty(4));
        assert_eq!(tsp12_optimal(&tsp12_instance(&k4).unwrap()).unwrap(), 4);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!has_hamiltonian_path(&star).unwrap());
        assert_eq!(tsp12_optimal(&tsp12_instance(&star).unwrap()).unwrap(), 6);
        assert_eq!(tsp12_optimal(&tsp12_instance(&Graph::empty(5)).unwrap()).unwrap(), 10);
    }

    #[test]
    fn tsp_matches_permutation_enumeration() {
        fn permute(rest: &mut Vec<usize>, prefix: &mut Vec<usize>, inst: &Tsp12Instance, best: &mut u32) {
            if rest.is_empty() {
                let mut len = inst.get(0, prefix[0]) as u32 + inst.get(*prefix.last().unwrap(), 0) as u32;
                for w in prefix.windows(2) {
                    len += inst.get(w[0], w[1]) as u32;
                }
                *best = (*best).min(len);
                return;
            }
            for i in 0..rest.len() {
                let v = rest.remove(i);
                prefix.push(v);
                permute(rest, prefix, inst, best);
                prefix.pop();
                rest.insert(i, v);
            }
        }
        for seed in 0..10 {
            let t = random_tree(7, seed).unwrap();
            let inst = tsp12_instance(&t).unwrap();
            let mut best = u32::MAX;
            permute(&mut (1..7).collect(), &mut Vec::new(), &inst, &mut best);
            assert_eq!(tsp12_optimal(&inst).unwrap(), best);
        }
    }

    #[test]
    fn median_examples() {
        assert!(is_median_graph(&random_tree(10, 4).unwrap()).unwrap());
        assert!(!is_median_graph(&cycle(6).unwrap()).unwrap());
        assert!(is_median_graph(&fibonacci_cube(5).unwrap()).unwrap());
        assert!(is_median_graph(&hypercube(3).unwrap()).unwrap());
        assert!(!is_median_graph(&cycle(5).unwrap()).unwrap());
    }
}

//! Test corpus shared by the integration suites, plus small independent
//! helpers (BFS distances, isomorphism dedup) that avoid the library's own
//! algorithms.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use fibdim::constructions::{
    cartesian_product, cycle, fibonacci_cube, hypercube, path, random_tree, simplex_graph, two_simplex_graph,
};
use fibdim::semicube::build_x;
use fibdim::{canonical_embedding, is_partial_cube, Graph};
use petgraph::graph::UnGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All-pairs BFS distances; `None` for unreachable.
pub fn bfs_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    (0..g.n())
        .map(|s| {
            let mut d = vec![None; g.n()];
            d[s] = Some(0);
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &v in g.neighbors(u) {
                    if d[v].is_none() {
                        d[v] = Some(d[u].unwrap() + 1);
                        q.push_back(v);
                    }
                }
            }
            d
        })
        .collect()
}

/// Labels are `'0'/'1'` strings; checks Hamming = graph distance for all
/// pairs.
pub fn is_isometric_labelling(g: &Graph, labels: &[String]) -> bool {
    let d = bfs_distances(g);
    labels.len() == g.n()
        && (0..g.n()).all(|u| {
            (0..g.n()).all(|v| {
                let h = labels[u].bytes().zip(labels[v].bytes()).filter(|(a, b)| a != b).count();
                d[u][v] == Some(h)
            })
        })
}

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut pg = UnGraph::with_capacity(g.n(), g.edge_count());
    for _ in 0..g.n() {
        pg.add_node(());
    }
    for (u, v) in g.edges() {
        pg.add_edge((u as u32).into(), (v as u32).into(), ());
    }
    pg
}

/// Isomorphism-invariant fingerprint: per-vertex (degree, sorted neighbor
/// degrees, distance histogram), sorted.
fn fingerprint(g: &Graph) -> Vec<(usize, Vec<usize>, Vec<usize>)> {
    let d = bfs_distances(g);
    let mut fp: Vec<_> = (0..g.n())
        .map(|u| {
            let mut nd: Vec<usize> = g.neighbors(u).iter().map(|&v| g.degree(v)).collect();
            nd.sort_unstable();
            let mut hist = vec![0; g.n() + 1];
            for x in &d[u] {
                hist[x.unwrap_or(g.n())] += 1;
            }
            (g.degree(u), nd, hist)
        })
        .collect();
    fp.sort();
    fp
}

/// Keeps one representative per isomorphism class, in input order.
pub fn dedup_isomorphic(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut buckets: HashMap<_, Vec<(UnGraph<(), ()>, usize)>> = HashMap::new();
    let mut out = Vec::new();
    for g in graphs {
        let pg = to_petgraph(&g);
        let bucket = buckets.entry((g.n(), g.edge_count(), fingerprint(&g))).or_default();
        if bucket.iter().any(|(h, _)| petgraph::algo::is_isomorphic(h, &pg)) {
            continue;
        }
        bucket.push((pg, out.len()));
        out.push(g);
    }
    out
}

/// Every graph on `n` vertices up to isomorphism, grown one vertex at a
/// time: each class on `n` vertices arises from one on `n - 1` plus a new
/// vertex with some neighborhood.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let smaller = all_graphs(n - 1);
    let v = n - 1;
    dedup_isomorphic(smaller.iter().flat_map(|h| {
        (0u64..1 << v).map(move |mask| {
            let old = h.edges();
            let new = (0..v).filter(move |u| mask >> u & 1 == 1).map(move |u| (u, v));
            Graph::from_edges(n, old.chain(new)).unwrap()
        })
    }))
}

/// Every connected bipartite graph on `n` vertices up to isomorphism, via
/// spanning subgraphs of `K_{a, n-a}`.
pub fn connected_bipartite_graphs(n: usize) -> Vec<Graph> {
    if n == 1 {
        return vec![Graph::empty(1)];
    }
    let mut candidates = Vec::new();
    for a in 1..=n / 2 {
        let pairs: Vec<(usize, usize)> = (0..a).flat_map(|u| (a..n).map(move |v| (u, v))).collect();
        for mask in 0u64..1 << pairs.len() {
            if (mask.count_ones() as usize) < n - 1 {
                continue;
            }
            let g = Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e))
                .unwrap();
            if g.is_connected() {
                candidates.push(g);
            }
        }
    }
    dedup_isomorphic(candidates)
}

/// Random graph on `n` vertices with edge probability `p`.
pub fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.random_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

/// A random path, even cycle or small tree with `idim` in `1..=max_idim`.
pub fn random_factor(rng: &mut ChaCha8Rng, max_idim: usize) -> Graph {
    match rng.random_range(0..3) {
        0 => path(rng.random_range(2..=max_idim + 1)).unwrap(),
        1 if max_idim >= 2 => cycle(2 * rng.random_range(2..=max_idim)).unwrap(),
        _ => random_tree(rng.random_range(2..=max_idim + 1), rng.random()).unwrap(),
    }
}

pub struct Named {
    pub name: String,
    pub graph: Graph,
}

fn named(name: impl Into<String>, graph: Graph) -> Named {
    Named {
        name: name.into(),
        graph,
    }
}

/// Partial cubes used across suites: small connected bipartite partial
/// cubes, the standard families, grids, products and simplex graphs.
/// Every member has at most 14 Θ-classes.
pub fn corpus() -> Vec<Named> {
    let mut out = Vec::new();
    for n in 2..=7 {
        for (i, g) in connected_bipartite_graphs(n).into_iter().enumerate() {
            if is_partial_cube(&g) {
                out.push(named(format!("bip{n}#{i}"), g));
            }
        }
    }
    for d in 1..=8 {
        out.push(named(format!("fib-cube{d}"), fibonacci_cube(d).unwrap()));
    }
    for k in 1..=4 {
        out.push(named(format!("hypercube{k}"), hypercube(k).unwrap()));
    }
    for n in (4..=14).step_by(2) {
        out.push(named(format!("cycle{n}"), cycle(n).unwrap()));
    }
    for n in [2, 5, 9] {
        out.push(named(format!("path{n}"), path(n).unwrap()));
    }
    for seed in 0..8 {
        let n = 4 + seed as usize;
        out.push(named(format!("tree{n}s{seed}"), random_tree(n, seed).unwrap()));
    }
    for a in 2..=5 {
        for b in a..=6 {
            out.push(named(format!("grid{a}x{b}"), cartesian_product(&path(a).unwrap(), &path(b).unwrap())));
        }
    }
    out.push(named("C4xP3", cartesian_product(&cycle(4).unwrap(), &path(3).unwrap())));
    out.push(named("C6xP2", cartesian_product(&cycle(6).unwrap(), &path(2).unwrap())));
    out.push(named("fib-cube3xfib-cube3", cartesian_product(&fibonacci_cube(3).unwrap(), &fibonacci_cube(3).unwrap())));
    out.push(named("tree5xC4", cartesian_product(&random_tree(5, 3).unwrap(), &cycle(4).unwrap())));
    let mut r = rng(7);
    for i in 0..6 {
        let g = random_graph(5, 0.5, &mut r);
        out.push(named(format!("simplex#{i}"), simplex_graph(&g).unwrap()));
        out.push(named(format!("two-simplex#{i}"), two_simplex_graph(&random_graph(6, 0.4, &mut r))));
    }
    out
}

/// Checks `X(G □ H)` against the disjoint union `X(G) ∪ X(H)` as labeled
/// graphs. Each Θ-class of the product is matched to the factor class whose
/// coordinate it copies (vertex `(u, v)` of the product is `u·|H| + v`).
pub fn product_x_is_labeled_union(g: &Graph, h: &Graph) -> bool {
    let p = cartesian_product(g, h);
    let (eg, eh, ep) = (
        canonical_embedding(g).unwrap(),
        canonical_embedding(h).unwrap(),
        canonical_embedding(&p).unwrap(),
    );
    let nh = h.n();
    if ep.k() != eg.k() + eh.k() {
        return false;
    }
    // product class -> (factor, class in factor)
    let mut class_map = Vec::new();
    for c in 0..ep.k() {
        let from_g = (0..eg.k()).find(|&i| {
            (0..g.n()).all(|u| (0..nh).all(|v| ep.bit(u * nh + v, c) == eg.bit(u, i)))
        });
        let from_h = (0..eh.k()).find(|&j| {
            (0..g.n()).all(|u| (0..nh).all(|v| ep.bit(u * nh + v, c) == eh.bit(v, j)))
        });
        match (from_g, from_h) {
            (Some(i), None) => class_map.push((0u8, i)),
            (None, Some(j)) => class_map.push((1u8, j)),
            _ => return false,
        }
    }
    let mut sorted = class_map.clone();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != ep.k() {
        return false;
    }
    let key = |f: u8, coord: usize, side: bool| (f, coord, side);
    let norm = |a: (u8, usize, bool), b: (u8, usize, bool)| if a < b { (a, b) } else { (b, a) };
    let mut product_edges: Vec<_> = build_x(&ep)
        .edges()
        .map(|(a, b)| {
            let (fa, ia) = class_map[a.coord];
            let (fb, ib) = class_map[b.coord];
            norm(key(fa, ia, a.side), key(fb, ib, b.side))
        })
        .collect();
    let mut union_edges: Vec<_> = build_x(&eg)
        .edges()
        .map(|(a, b)| norm(key(0, a.coord, a.side), key(0, b.coord, b.side)))
        .chain(build_x(&eh).edges().map(|(a, b)| norm(key(1, a.coord, a.side), key(1, b.coord, b.side))))
        .collect();
    product_edges.sort();
    union_edges.sort();
    product_edges == union_edges
}

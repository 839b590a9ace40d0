//! Maximum-cardinality matching in general graphs (Edmonds' blossom
//! algorithm, `O(V^3)`).

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// A matching stored as a mate array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<usize>,
}

impl Matching {
    pub fn mate(&self, v: usize) -> Option<usize> {
        (self.mate[v] != NONE).then_some(self.mate[v])
    }

    pub fn size(&self) -> usize {
        self.mate.iter().filter(|&&m| m != NONE).count() / 2
    }

    /// Matched pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(u, &m)| m != NONE && u < m)
            .map(|(u, &m)| (u, m))
            .collect()
    }

    /// Every matched pair is an edge of `g` and the mate relation is
    /// symmetric.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.mate.len() == g.n()
            && self
                .mate
                .iter()
                .enumerate()
                .all(|(u, &m)| m == NONE || (self.mate[m] == u && g.has_edge(u, m)))
    }
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex that
    /// ends an augmenting path, if any.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}

pub fn max_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut b = Blossom {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    for u in 0..n {
        if b.mate[u] == NONE {
            if let Some(&v) = g.neighbors(u).iter().find(|&&v| b.mate[v] == NONE) {
                b.mate[u] = v;
                b.mate[v] = u;
            }
        }
    }
    for root in 0..n {
        if b.mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = b.find_path(root) {
            while v != NONE {
                let pv = b.parent[v];
                let ppv = b.mate[pv];
                b.mate[v] = pv;
                b.mate[pv] = v;
                v = ppv;
            }
        }
    }
    Matching { mate: b.mate }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Largest matching over every way of leaving the lowest free vertex
    /// single or pairing it with a free neighbor.
    fn brute_force(g: &Graph) -> usize {
        fn rec(g: &Graph, from: usize, used: &mut Vec<bool>) -> usize {
            let Some(v) = (from..g.n()).find(|&v| !used[v]) else {
                return 0;
            };
            used[v] = true;
            let mut best = rec(g, v + 1, used);
            for &u in g.neighbors(v) {
                if !used[u] {
                    used[u] = true;
                    best = best.max(1 + rec(g, v + 1, used));
                    used[u] = false;
                }
            }
            used[v] = false;
            best
        }
        rec(g, 0, &mut vec![false; g.n()])
    }

    #[test]
    fn small_cases() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(max_matching(&k3).size(), 1);
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let m = max_matching(&p4);
        assert_eq!(m.size(), 2);
        assert_eq!(m.edges(), vec![(0, 1), (2, 3)]);
        assert_eq!(max_matching(&Graph::empty(0)).size(), 0);
    }

    #[test]
    fn needs_blossom_contraction() {
        // Greedy pairs 0-1 first; reaching the pendants 6 and 7 requires
        // augmenting through the odd cycle 1-2-3-4-5.
        let g = Graph::from_edges(
            8,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (3, 6), (4, 7)],
        )
        .unwrap();
        let m = max_matching(&g);
        assert!(m.is_valid_for(&g));
        assert_eq!(m.size(), brute_force(&g));
        assert_eq!(m.size(), 3);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
                let edges = pairs.iter().zip(mask).filter(|(_, keep)| *keep).map(|(e, _)| *e);
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn matches_brute_force(g in arb_graph(12)) {
            let m = max_matching(&g);
            prop_assert!(m.is_valid_for(&g));
            prop_assert_eq!(m.size(), brute_force(&g));
        }
    }
}

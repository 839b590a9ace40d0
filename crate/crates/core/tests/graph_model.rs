mod common;

use fibdim::graph::{distance_matrix, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, UNREACHABLE};
use fibdim::{Error, Graph};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            Graph::from_edges(n, pairs.iter().zip(mask).filter(|(_, k)| *k).map(|(e, _)| *e)).unwrap()
        })
    })
}

/// Straight transcription of the graph6 layout: size byte(s), then the
/// upper triangle column by column, six bits per byte, MSB first.
fn reference_graph6_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
    let b = s.as_bytes();
    let (n, rest) = if b[0] != 126 {
        (b[0] as usize - 63, &b[1..])
    } else {
        ((b[1] as usize - 63) << 12 | (b[2] as usize - 63) << 6 | (b[3] as usize - 63), &b[4..])
    };
    let bits: Vec<bool> = rest.iter().flat_map(|&c| (0..6).rev().map(move |i| (c - 63) >> i & 1 == 1)).collect();
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    (n, edges)
}

#[test]
fn graph6_decodes_like_the_reference() {
    for s in ["D?{", "Bw", "@", "A_", "Ch", "IsaB@_WB?"] {
        let g = parse_graph6(s.as_bytes()).unwrap();
        let (n, edges) = reference_graph6_decode(s);
        assert_eq!(g.n(), n, "{s}");
        assert_eq!(g.edges().collect::<Vec<_>>(), edges, "{s}");
        assert_eq!(emit_graph6(&g).unwrap(), s.as_bytes());
    }
    let star = parse_graph6(b"D?{").unwrap();
    assert_eq!(star.degree(4), 4);
    assert_eq!(star.edge_count(), 4);
}

#[test]
fn graph6_large_size_prefix() {
    let g = fibdim::constructions::path(100).unwrap();
    let text = String::from_utf8(emit_graph6(&g).unwrap()).unwrap();
    assert_eq!(text.as_bytes()[0], 126);
    let (n, edges) = reference_graph6_decode(&text);
    assert_eq!(n, 100);
    assert_eq!(edges.len(), 99);
    assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g);
}

#[test]
fn graph6_errors_carry_offsets() {
    for bad in [&b"Bx"[..], b"D?", b"D?{{", b"\x01", b"", b"~??"] {
        assert!(matches!(parse_graph6(bad), Err(Error::Graph6 { .. })), "{bad:?}");
    }
}

#[test]
fn edge_list_errors_carry_line_numbers() {
    let err = parse_edge_list("0 1\n# fine\n\n1 2 3\n").unwrap_err();
    assert_eq!(err, Error::EdgeList { line: 4, message: "unexpected token \"3\"".into() });
    assert!(matches!(parse_edge_list("0 1\n2\n"), Err(Error::EdgeList { line: 2, .. })));
    assert!(matches!(parse_edge_list("0 -1\n"), Err(Error::EdgeList { line: 1, .. })));
    assert!(matches!(parse_edge_list("3 3\n"), Err(Error::EdgeList { line: 1, .. })));
    assert_eq!(err.exit_code(), 1);
}

#[test]
fn edge_list_ignores_comments_and_duplicates() {
    let g = parse_edge_list("# header\n0 1 # trailing\n1 0\n\n  2 1\n").unwrap();
    assert_eq!(g.n(), 3);
    assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
}

#[test]
fn disconnected_distances_are_unreachable() {
    let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    let d = distance_matrix(&g);
    assert_eq!(d.get(0, 2), UNREACHABLE);
    assert!(!d.all_reachable());
    assert!(!g.is_connected());
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(70)) {
        let bytes = emit_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&bytes).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(20)) {
        let parsed = parse_edge_list(&emit_edge_list(&g)).unwrap();
        // trailing isolated vertices are not representable in an edge list
        prop_assert_eq!(parsed.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted(g in arb_graph(20)) {
        for u in 0..g.n() {
            let nb = g.neighbors(u);
            prop_assert!(nb.windows(2).all(|w| w[0] < w[1]));
            for &v in nb {
                prop_assert!(v != u);
                prop_assert!(g.neighbors(v).binary_search(&u).is_ok());
            }
        }
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn distance_matrix_axioms(g in arb_graph(16)) {
        let d = distance_matrix(&g);
        let reference = common::bfs_distances(&g);
        for u in 0..g.n() {
            prop_assert_eq!(d.get(u, u), 0);
            for v in 0..g.n() {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                prop_assert_eq!(d.get(u, v) == 1, g.has_edge(u, v));
                prop_assert_eq!(reference[u][v].map_or(UNREACHABLE, |x| x as u32), d.get(u, v));
                for w in 0..g.n() {
                    if d.get(u, w) != UNREACHABLE && d.get(w, v) != UNREACHABLE {
                        prop_assert!(d.get(u, v) <= d.get(u, w) + d.get(w, v));
                    }
                }
            }
        }
    }
}

#![allow(dead_code)]

use beflow::CubicMultigraph;
use proptest::prelude::*;

/// Pairs `3n` half-edges in the order given by `keys`, then switches pairs to remove loops.
pub fn pairing_graph(n: usize, keys: &[u32]) -> CubicMultigraph {
    let mut half: Vec<usize> = (0..3 * n).collect();
    half.sort_by_key(|&h| (keys[h], h));
    let mut edges: Vec<(usize, usize)> = half.chunks(2).map(|c| (c[0] / 3, c[1] / 3)).collect();
    while let Some(i) = edges.iter().position(|&(u, v)| u == v) {
        let a = edges[i].0;
        let j = edges.iter().position(|&(u, v)| u != a && v != a).expect("n >= 2 leaves another pair");
        let (b, c) = edges[j];
        edges[i] = (a, b);
        edges[j] = (a, c);
    }
    CubicMultigraph::new(n, edges).expect("pairing is cubic and loopless")
}

/// Random cubic multigraph with an even order in `lo..=hi`.
pub fn cubic(lo: usize, hi: usize) -> impl Strategy<Value = CubicMultigraph> {
    (lo / 2..=hi / 2)
        .prop_flat_map(|h| proptest::collection::vec(any::<u32>(), 6 * h).prop_map(move |k| pairing_graph(2 * h, &k)))
}

pub fn connected_cubic(lo: usize, hi: usize) -> impl Strategy<Value = CubicMultigraph> {
    cubic(lo, hi).prop_filter("connected", |g| is_connected_without(g, usize::MAX))
}

/// A random graph with a random permutation of its vertices.
pub fn relabelled(lo: usize, hi: usize) -> impl Strategy<Value = (CubicMultigraph, Vec<usize>)> {
    cubic(lo, hi).prop_flat_map(|g| {
        let ids: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(ids).prop_shuffle())
    })
}

/// Graph search ignoring edge `skip`.
pub fn is_connected_without(g: &CubicMultigraph, skip: usize) -> bool {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if e == skip || (a != v && b != v) {
                continue;
            }
            let w = if a == v { b } else { a };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

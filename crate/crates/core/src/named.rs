//! A small catalog of graphs used throughout the examples and tests.

use crate::graph::CubicMultigraph;

fn build(n: usize, edges: Vec<(usize, usize)>) -> CubicMultigraph {
    CubicMultigraph::new(n, edges).expect("catalog graphs are cubic")
}

/// Two vertices joined by three parallel edges.
pub fn theta() -> CubicMultigraph {
    build(2, vec![(0, 1), (0, 1), (0, 1)])
}

pub fn k4() -> CubicMultigraph {
    build(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// The 4-cycle 0-1-2-3 with the edges 0-1 and 2-3 doubled.
pub fn doubled_square() -> CubicMultigraph {
    build(4, vec![(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)])
}

pub fn k33() -> CubicMultigraph {
    let mut e = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            e.push((a, b));
        }
    }
    build(6, e)
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> CubicMultigraph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        e.push((i, i + 5));
    }
    for i in 0..5 {
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, e)
}

/// The prism over a `k`-cycle (circular ladder), `k >= 3`.
pub fn prism(k: usize) -> CubicMultigraph {
    assert!(k >= 3);
    let mut e = Vec::new();
    for i in 0..k {
        e.push((i, (i + 1) % k));
        e.push((k + i, k + (i + 1) % k));
        e.push((i, k + i));
    }
    build(2 * k, e)
}

/// The Möbius ladder on `2k` vertices, `k >= 2` (k = 2 is a multigraph, k = 3 is K_{3,3}).
pub fn mobius_ladder(k: usize) -> CubicMultigraph {
    assert!(k >= 2);
    let n = 2 * k;
    let mut e = Vec::new();
    for i in 0..n {
        e.push((i, (i + 1) % n));
    }
    for i in 0..k {
        e.push((i, i + k));
    }
    build(n, e)
}

/// Two copies of K4 with one subdivided edge, joined through their subdivision vertices
/// 4 and 5 by a bridge.
pub fn bridged_k4_pair() -> CubicMultigraph {
    let gadget = |s: usize, a: usize, b: usize, c: usize, d: usize| {
        vec![(s, a), (s, b), (a, c), (a, d), (b, c), (b, d), (c, d)]
    };
    let mut e = gadget(4, 0, 1, 2, 3);
    e.extend(gadget(5, 6, 7, 8, 9));
    e.push((4, 5));
    build(10, e)
}

/// Smallest bridged cubic multigraph: two triangles, each with one doubled side, joined
/// by the bridge 2 -- 3.
pub fn bridged_digon_triangles() -> CubicMultigraph {
    build(
        6,
        vec![(0, 1), (0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (4, 5)],
    )
}

/// 16-vertex cubic graph with no perfect matching: a central vertex joined to three
/// copies of K4 with one subdivided edge. Removing the center leaves three odd components.
pub fn no_perfect_matching16() -> CubicMultigraph {
    let mut e = Vec::new();
    for g in 0..3 {
        let s = 1 + 5 * g;
        let (a, b, c, d) = (s + 1, s + 2, s + 3, s + 4);
        e.extend([(0, s), (s, a), (s, b), (a, c), (a, d), (b, c), (b, d), (c, d)]);
    }
    build(16, e)
}

/// Heawood graph (14 vertices, girth 6).
pub fn heawood() -> CubicMultigraph {
    let mut e = Vec::new();
    for i in 0..14 {
        e.push((i, (i + 1) % 14));
    }
    for i in (0..14).step_by(2) {
        e.push((i, (i + 5) % 14));
    }
    build(14, e)
}

/// 24 vertices: triangle `0,1,2` joined to the middles of the 5-vertex paths `3..8`,
/// `8..13`, `13..18`; each path has chords `a-d`, `b-e`, and its ends go to the 6-cycle
/// `18..24`. The triangle, the three paths and the 6-cycle form a spanning factor.
pub fn triangle_hub() -> CubicMultigraph {
    let mut e = vec![(0, 1), (1, 2), (2, 0), (0, 5), (1, 10), (2, 15)];
    for s in [3, 8, 13] {
        for i in 0..4 {
            e.push((s + i, s + i + 1));
        }
    }
    for s in [3, 8, 13] {
        e.push((s, s + 3));
        e.push((s + 4, s + 1));
    }
    for (i, s) in [3, 7, 8, 12, 13, 17].into_iter().enumerate() {
        e.push((s, 18 + i));
    }
    for i in 0..6 {
        e.push((18 + i, 18 + (i + 1) % 6));
    }
    build(24, e)
}

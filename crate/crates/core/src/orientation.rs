//! Bisections, balanced orientations and the cut criterion for orientability.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CubicMultigraph, VertexSet};
use crate::maxflow::FlowNetwork;

/// Largest order for which all bisections are enumerated by default.
pub const ENUMERATION_LIMIT: usize = 14;

/// A two-coloring of the vertices with colors `1` and `2` in equal numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Bisection {
    colors: Vec<u8>,
}

impl TryFrom<Vec<u8>> for Bisection {
    type Error = Error;

    fn try_from(colors: Vec<u8>) -> Result<Self> {
        Bisection::new(colors)
    }
}

impl From<Bisection> for Vec<u8> {
    fn from(b: Bisection) -> Self {
        b.colors
    }
}

impl Bisection {
    pub fn new(colors: Vec<u8>) -> Result<Self> {
        if let Some(c) = colors.iter().find(|&&c| c != 1 && c != 2) {
            return Err(Error::MalformedInput(format!("color {c} is neither 1 nor 2")));
        }
        let twos = colors.iter().filter(|&&c| c == 2).count();
        let ones = colors.len() - twos;
        if ones != twos || colors.is_empty() {
            return Err(Error::NotBisection { ones, twos });
        }
        Ok(Self { colors })
    }

    /// Color 2 on the vertices whose bit is set in `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        Self::new((0..n).map(|v| if mask >> v & 1 == 1 { 2 } else { 1 }).collect())
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, v: usize) -> u8 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    /// Bit mask of the color-2 class (`n <= 64`).
    pub fn mask(&self) -> u64 {
        self.colors.iter().enumerate().filter(|(_, &c)| c == 2).fold(0, |m, (v, _)| m | 1 << v)
    }

    /// The same partition with colors exchanged.
    pub fn swapped(&self) -> Self {
        Self { colors: self.colors.iter().map(|&c| 3 - c).collect() }
    }

    /// Representative of the swap class: vertex 0 gets color 1.
    pub fn normalized(&self) -> Self {
        if self.colors[0] == 2 {
            self.swapped()
        } else {
            self.clone()
        }
    }

    /// `|A ∩ V2| - |A ∩ V1|`.
    pub fn delta(&self, a: &VertexSet) -> i64 {
        a.iter().map(|v| if self.colors[v] == 2 { 1 } else { -1 }).sum()
    }

    pub fn delta_mask(&self, mask: u64) -> i64 {
        let twos = (mask & self.mask()).count_ones() as i64;
        2 * twos - mask.count_ones() as i64
    }

    fn check_graph(&self, g: &CubicMultigraph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::MismatchedGraph(format!(
                "bisection has {} vertices, graph has {}",
                self.n(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// `δ(A)` of a bisection; `Δ(A)` is its absolute value.
pub fn delta(bis: &Bisection, a: &VertexSet) -> i64 {
    bis.delta(a)
}

/// A direction for every edge, stored as `(tail, head)` by edge index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orientation {
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// Validates that `arcs[e]` is edge `e` of `g` in one of its two directions.
    pub fn new(g: &CubicMultigraph, arcs: Vec<(usize, usize)>) -> Result<Self> {
        let o = Self { arcs };
        o.check_graph(g)?;
        Ok(o)
    }

    /// Every edge directed from its smaller to its larger endpoint.
    pub fn natural(g: &CubicMultigraph) -> Self {
        Self { arcs: g.edges().to_vec() }
    }

    pub(crate) fn from_tails(g: &CubicMultigraph, tails: &[usize]) -> Self {
        let arcs = tails.iter().enumerate().map(|(e, &t)| (t, g.other_end(e, t))).collect();
        Self { arcs }
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc(&self, e: usize) -> (usize, usize) {
        self.arcs[e]
    }

    pub fn check_graph(&self, g: &CubicMultigraph) -> Result<()> {
        if self.arcs.len() != g.m() {
            return Err(Error::MismatchedGraph(format!(
                "orientation has {} arcs, graph has {} edges",
                self.arcs.len(),
                g.m()
            )));
        }
        for (e, &(t, h)) in self.arcs.iter().enumerate() {
            let (u, v) = g.edge(e);
            if !((t, h) == (u, v) || (t, h) == (v, u)) {
                return Err(Error::MismatchedGraph(format!("arc {e} ({t},{h}) is not edge ({u},{v})")));
            }
        }
        Ok(())
    }

    pub fn outdegrees(&self, n: usize) -> Vec<usize> {
        let mut out = vec![0; n];
        for &(t, _) in &self.arcs {
            out[t] += 1;
        }
        out
    }

    pub fn is_balanced(&self, n: usize) -> bool {
        self.outdegrees(n).iter().all(|&d| d == 1 || d == 2)
    }

    /// The bisection read off the outdegrees, if the orientation is balanced.
    pub fn bisection(&self, n: usize) -> Result<Bisection> {
        let out = self.outdegrees(n);
        if let Some(v) = out.iter().position(|&d| d != 1 && d != 2) {
            return Err(Error::MalformedInput(format!("vertex {v} has outdegree {}", out[v])));
        }
        Bisection::new(out.into_iter().map(|d| d as u8).collect())
    }

    /// Numbers of arcs leaving and entering `a`.
    pub fn cut_split(&self, a: &VertexSet) -> (usize, usize) {
        let mut out = 0;
        let mut inc = 0;
        for &(t, h) in &self.arcs {
            match (a.contains(t), a.contains(h)) {
                (true, false) => out += 1,
                (false, true) => inc += 1,
                _ => {}
            }
        }
        (out, inc)
    }
}

/// Result of the orientability test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrientabilityCertificate {
    /// An orientation whose outdegrees equal the colors.
    Orientable(Orientation),
    /// A set with `d(A) < Δ(A)`.
    Violating(VertexSet),
}

impl OrientabilityCertificate {
    pub fn is_orientable(&self) -> bool {
        matches!(self, Self::Orientable(_))
    }

    pub fn orientation(self) -> Option<Orientation> {
        match self {
            Self::Orientable(o) => Some(o),
            Self::Violating(_) => None,
        }
    }
}

/// Assigns every edge to one of its endpoints so that vertex `v` receives exactly
/// `color(v)` edges; the endpoint becomes the tail. A deficient vertex set on the
/// source side of a minimum cut certifies failure.
pub fn check_orientable(g: &CubicMultigraph, bis: &Bisection) -> Result<OrientabilityCertificate> {
    bis.check_graph(g)?;
    let (n, m) = (g.n(), g.m());
    let source = n + m;
    let sink = source + 1;
    let mut net = FlowNetwork::<i64>::new(n + m + 2);
    for v in 0..n {
        net.add_arc(source, v, bis.color(v) as i64);
    }
    let mut claims = Vec::with_capacity(2 * m);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        claims.push((e, u, net.add_arc(u, n + e, 3)));
        claims.push((e, v, net.add_arc(v, n + e, 3)));
        net.add_arc(n + e, sink, 1);
    }
    if net.max_flow(source, sink) == m as i64 {
        let mut tails = vec![usize::MAX; m];
        for (e, v, id) in claims {
            if net.flow(id) == 1 {
                tails[e] = v;
            }
        }
        return Ok(OrientabilityCertificate::Orientable(Orientation::from_tails(g, &tails)));
    }
    let reach = net.residual_reachable(source);
    Ok(OrientabilityCertificate::Violating(VertexSet::from_vertices(
        n,
        (0..n).filter(|&v| reach[v]),
    )))
}

/// Balanced orientation from the virtual pairing `(0,1), (2,3), ...`.
pub fn balanced_orientation(g: &CubicMultigraph) -> Orientation {
    let partner: Vec<usize> = (0..g.n()).map(|v| v ^ 1).collect();
    balanced_orientation_with_pairing(g, &partner).expect("consecutive pairing is perfect")
}

/// Adds the virtual edges `v - partner[v]`, orients the resulting 4-regular multigraph
/// along Euler circuits and drops the virtual edges again.
pub fn balanced_orientation_with_pairing(g: &CubicMultigraph, partner: &[usize]) -> Result<Orientation> {
    let n = g.n();
    if partner.len() != n || (0..n).any(|v| partner[v] >= n || partner[v] == v || partner[partner[v]] != v) {
        return Err(Error::MalformedInput("pairing is not a perfect matching".into()));
    }
    let m = g.m();
    let mut ends: Vec<(usize, usize)> = g.edges().to_vec();
    ends.extend((0..n).filter(|&v| v < partner[v]).map(|v| (v, partner[v])));
    let mut adj = vec![Vec::with_capacity(4); n];
    for (e, &(u, v)) in ends.iter().enumerate() {
        adj[u].push(e);
        adj[v].push(e);
    }
    let mut used = vec![false; ends.len()];
    let mut tail = vec![usize::MAX; ends.len()];
    let mut cursor = vec![0usize; n];
    // Hierholzer's walk; orienting each edge in the direction it is first traversed
    // gives indegree = outdegree = 2 everywhere.
    for start in 0..n {
        let mut stack = vec![start];
        while let Some(&v) = stack.last() {
            while cursor[v] < adj[v].len() && used[adj[v][cursor[v]]] {
                cursor[v] += 1;
            }
            if cursor[v] == adj[v].len() {
                stack.pop();
                continue;
            }
            let e = adj[v][cursor[v]];
            used[e] = true;
            tail[e] = v;
            let (a, b) = ends[e];
            stack.push(if a == v { b } else { a });
        }
    }
    Ok(Orientation::from_tails(g, &tail[..m]))
}

/// All bisections with vertex 0 colored 1, i.e. one per swap class.
pub fn enumerate_bisections(g: &CubicMultigraph) -> Result<Vec<Bisection>> {
    enumerate_bisections_up_to(g, ENUMERATION_LIMIT)
}

pub fn enumerate_bisections_up_to(g: &CubicMultigraph, limit: usize) -> Result<Vec<Bisection>> {
    let n = g.n();
    if n > limit || n > 32 {
        return Err(Error::TooLarge { n, limit: limit.min(32) });
    }
    let half = (n / 2) as u32;
    let mut out = Vec::new();
    // color-2 class drawn from vertices 1..n
    for rest in 0u64..1 << (n - 1) {
        if rest.count_ones() == half {
            out.push(Bisection::from_mask(n, rest << 1)?);
        }
    }
    Ok(out)
}

/// Orientable bisections, one per swap class, each with a witness orientation.
pub fn enumerate_orientable_bisections(g: &CubicMultigraph) -> Result<Vec<(Bisection, Orientation)>> {
    enumerate_orientable_bisections_up_to(g, ENUMERATION_LIMIT)
}

pub fn enumerate_orientable_bisections_up_to(
    g: &CubicMultigraph,
    limit: usize,
) -> Result<Vec<(Bisection, Orientation)>> {
    let mut out = Vec::new();
    for bis in enumerate_bisections_up_to(g, limit)? {
        if let OrientabilityCertificate::Orientable(o) = check_orientable(g, &bis)? {
            out.push((bis, o));
        }
    }
    Ok(out)
}

/// Brute-force orientability check: `d(A) >= Δ(A)` for all `2^n` subsets (`n <= 24`).
/// Returns the first violating mask, if any.
pub fn cut_oracle_violation(g: &CubicMultigraph, bis: &Bisection) -> Option<u64> {
    assert!(g.n() <= 24, "cut oracle is exponential");
    (1u64..1 << g.n()).find(|&mask| {
        (crate::graph::cut_degree_mask(g, mask) as i64) < bis.delta_mask(mask).abs()
    })
}

//! Exact `(r, α)`-flow feasibility through circulations with lower bounds.
//!
//! A flow in a fixed orientation is a feasible circulation in the network obtained by
//! adding an excess collector `x` joined to every vertex by two opposite arcs of
//! capacity `[0, α]`; original arcs carry `[1, r-1]`. Lower bounds are removed by the usual
//! demand transformation and the rest is a maximum flow in exact arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{cut_degree_mask, CubicMultigraph, VertexSet};
use crate::maxflow::FlowNetwork;
use crate::orientation::{
    balanced_orientation, check_orientable, enumerate_orientable_bisections, Bisection, Orientation,
    OrientabilityCertificate,
};
use crate::rational::{abs, fmt_rational, int, parse_rational, Rational};

/// A point of the `r`-`α` plane with `r >= 2` and `α >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlowPoint {
    #[serde(with = "crate::rational::serde_str")]
    pub r: Rational,
    #[serde(with = "crate::rational::serde_str")]
    pub alpha: Rational,
}

impl FlowPoint {
    pub fn new(r: Rational, alpha: Rational) -> Result<Self> {
        if r < int(2) {
            return Err(Error::BadFlowPoint(format!("r = {} is below 2", fmt_rational(&r))));
        }
        if alpha.is_negative() {
            return Err(Error::BadFlowPoint(format!("alpha = {} is negative", fmt_rational(&alpha))));
        }
        Ok(Self { r, alpha })
    }

    /// Parses both coordinates from `p/q` strings.
    pub fn parse(r: &str, alpha: &str) -> Result<Self> {
        Self::new(parse_rational(r)?, parse_rational(alpha)?)
    }

    /// Shorthand for integer fractions, panicking on an invalid point.
    pub fn frac(rn: i64, rd: i64, an: i64, ad: i64) -> Self {
        Self::new(Rational::new(rn.into(), rd.into()), Rational::new(an.into(), ad.into()))
            .expect("valid flow point")
    }
}

impl std::fmt::Display for FlowPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", fmt_rational(&self.r), fmt_rational(&self.alpha))
    }
}

/// Directed arc with exact lower and upper bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedArc {
    pub from: usize,
    pub to: usize,
    pub lower: Rational,
    pub upper: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculationNetwork {
    pub nodes: usize,
    pub arcs: Vec<BoundedArc>,
}

impl CirculationNetwork {
    pub fn new(nodes: usize) -> Self {
        Self { nodes, arcs: Vec::new() }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, lower: Rational, upper: Rational) -> usize {
        self.arcs.push(BoundedArc { from, to, lower, upper });
        self.arcs.len() - 1
    }

    /// The excess-collector network of an oriented cubic graph: arcs `0..m` are the edges,
    /// then `x -> v` and `v -> x` for each vertex `v`, with `x = n`.
    pub fn for_orientation(g: &CubicMultigraph, o: &Orientation, p: &FlowPoint) -> Self {
        let n = g.n();
        let mut net = Self::new(n + 1);
        let one = int(1);
        let top = &p.r - &one;
        for &(t, h) in o.arcs() {
            net.add_arc(t, h, one.clone(), top.clone());
        }
        for v in 0..n {
            net.add_arc(n, v, Rational::zero(), p.alpha.clone());
            net.add_arc(v, n, Rational::zero(), p.alpha.clone());
        }
        net
    }

    pub fn excess_collector(&self) -> usize {
        self.nodes - 1
    }
}

/// Outcome of [`feasible_circulation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Circulation {
    /// Conserving arc values within bounds.
    Feasible(Vec<Rational>),
    /// Node set `A` whose outgoing lower bounds exceed its incoming upper bounds.
    Violating(VertexSet),
}

/// Decides whether a conserving flow within the bounds exists.
pub fn feasible_circulation(net: &CirculationNetwork) -> Result<Circulation> {
    for (i, a) in net.arcs.iter().enumerate() {
        if a.lower > a.upper {
            return Err(Error::BadBounds { arc: i });
        }
    }
    // Common denominator scaling keeps the max-flow in machine integers when it fits.
    let mut scale = BigInt::one();
    for a in &net.arcs {
        scale = scale.lcm(a.lower.denom()).lcm(a.upper.denom());
    }
    let scaled: Option<Vec<(i64, i64)>> = net
        .arcs
        .iter()
        .map(|a| {
            let l = (a.lower.numer() * (&scale / a.lower.denom())).to_i64()?;
            let u = (a.upper.numer() * (&scale / a.upper.denom())).to_i64()?;
            Some((l, u))
        })
        .collect();
    let total: Option<i64> = scaled.as_ref().and_then(|s| {
        s.iter().try_fold(0i64, |acc, &(_, u)| acc.checked_add(u.checked_abs()?))
    });
    let result = match (scaled, total) {
        (Some(bounds), Some(t)) if t < i64::MAX / 4 => {
            solve(net, &bounds, 0i64).map_values(|v| Rational::new(v.into(), scale.clone()))
        }
        _ => {
            let bounds: Vec<(Rational, Rational)> =
                net.arcs.iter().map(|a| (a.lower.clone(), a.upper.clone())).collect();
            solve(net, &bounds, Rational::zero())
        }
    };
    Ok(result.into_circulation(net.nodes))
}

enum Solved<C> {
    Values(Vec<C>),
    Cut(Vec<bool>),
}

impl<C> Solved<C> {
    fn map_values<D>(self, f: impl Fn(C) -> D) -> Solved<D> {
        match self {
            Solved::Values(v) => Solved::Values(v.into_iter().map(f).collect()),
            Solved::Cut(c) => Solved::Cut(c),
        }
    }
}

impl Solved<Rational> {
    fn into_circulation(self, nodes: usize) -> Circulation {
        match self {
            Solved::Values(v) => Circulation::Feasible(v),
            Solved::Cut(reach) => {
                Circulation::Violating(VertexSet::from_vertices(nodes, (0..nodes).filter(|&v| !reach[v])))
            }
        }
    }
}

fn solve<C>(net: &CirculationNetwork, bounds: &[(C, C)], zero: C) -> Solved<C>
where
    C: crate::maxflow::Capacity,
{
    let n = net.nodes;
    let (source, sink) = (n, n + 1);
    let mut flow = FlowNetwork::new(n + 2);
    let mut balance = vec![zero.clone(); n];
    let mut ids = Vec::with_capacity(net.arcs.len());
    for (a, (l, u)) in net.arcs.iter().zip(bounds) {
        ids.push(flow.add_arc(a.from, a.to, u.clone() - l.clone()));
        balance[a.to] = balance[a.to].clone() + l.clone();
        balance[a.from] = balance[a.from].clone() - l.clone();
    }
    let mut demand = zero.clone();
    for (v, b) in balance.iter().enumerate() {
        if *b > zero {
            flow.add_arc(source, v, b.clone());
            demand = demand + b.clone();
        } else if *b < zero {
            flow.add_arc(v, sink, zero.clone() - b.clone());
        }
    }
    if flow.max_flow(source, sink) == demand {
        Solved::Values(ids.iter().zip(bounds).map(|(&id, (l, _))| l.clone() + flow.flow(id)).collect())
    } else {
        let mut reach = flow.residual_reachable(source);
        reach.truncate(n);
        Solved::Cut(reach)
    }
}

/// Values on every edge of a fixed orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowAssignment {
    pub orientation: Orientation,
    #[serde(with = "crate::rational::serde_str_vec")]
    pub values: Vec<Rational>,
}

impl FlowAssignment {
    /// `Σ out - Σ in` at every vertex.
    pub fn net_outflow(&self, n: usize) -> Vec<Rational> {
        let mut net = vec![Rational::zero(); n];
        for (&(t, h), f) in self.orientation.arcs().iter().zip(&self.values) {
            net[t] += f;
            net[h] -= f;
        }
        net
    }
}

/// A bisection ruled out at a point, with the set whose inequality fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfeasibleBisection {
    pub bisection: Bisection,
    pub set: VertexSet,
    /// Right-hand side of the violated inequality, strictly above `α`.
    pub bound: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlowVerdict {
    Feasible(FlowAssignment),
    /// One entry per orientable bisection; bisections that are not orientable admit no
    /// flow at all and are not listed.
    Infeasible(Vec<InfeasibleBisection>),
}

impl FlowVerdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Self::Feasible(_))
    }

    pub fn witness(self) -> Option<FlowAssignment> {
        match self {
            Self::Feasible(f) => Some(f),
            Self::Infeasible(_) => None,
        }
    }
}

/// `(2d(A) - (d(A) - Δ(A)) r) / (2|A|)`, the least `α` allowed by set `A`.
pub fn cut_bound(d: usize, big_delta: usize, size: usize, r: &Rational) -> Rational {
    let d = int(d as i64);
    let dd = int(big_delta as i64);
    (int(2) * &d - (&d - dd) * r) / int(2 * size as i64)
}

/// Outcome of a flow search in one orientation: values, or a violating vertex set of `g`.
pub enum OrientedOutcome {
    Feasible(FlowAssignment),
    Violating(VertexSet),
}

/// Looks for a flow in the fixed orientation `o`.
pub fn flow_in_orientation(g: &CubicMultigraph, o: &Orientation, p: &FlowPoint) -> Result<OrientedOutcome> {
    o.check_graph(g)?;
    let n = g.n();
    let net = CirculationNetwork::for_orientation(g, o, p);
    Ok(match feasible_circulation(&net)? {
        Circulation::Feasible(mut values) => {
            values.truncate(g.m());
            OrientedOutcome::Feasible(FlowAssignment { orientation: o.clone(), values })
        }
        Circulation::Violating(a) => {
            // A set holding the collector corresponds to the complement of the rest.
            let graph_set = if a.contains(n) {
                VertexSet::from_vertices(n, (0..n).filter(|&v| !a.contains(v)))
            } else {
                VertexSet::from_vertices(n, a.iter())
            };
            OrientedOutcome::Violating(graph_set)
        }
    })
}

/// Decides whether `g` admits an `(r, α)`-flow, with a witness or per-bisection reasons.
pub fn check_flow(g: &CubicMultigraph, p: &FlowPoint) -> Result<FlowVerdict> {
    if p.alpha >= int(3) {
        return Err(Error::AlphaOutOfRange(fmt_rational(&p.alpha)));
    }
    if p.alpha >= int(1) {
        let orientation = balanced_orientation(g);
        let values = vec![int(1); g.m()];
        return Ok(FlowVerdict::Feasible(FlowAssignment { orientation, values }));
    }
    let mut reasons = Vec::new();
    for (bis, o) in enumerate_orientable_bisections(g)? {
        match flow_in_orientation(g, &o, p)? {
            OrientedOutcome::Feasible(fa) => return Ok(FlowVerdict::Feasible(fa)),
            OrientedOutcome::Violating(set) => {
                let mask_bound = set_bound(g, &bis, &set, &p.r);
                debug_assert!(mask_bound > p.alpha, "violating set must break the inequality");
                reasons.push(InfeasibleBisection { bisection: bis, set, bound: mask_bound });
            }
        }
    }
    Ok(FlowVerdict::Infeasible(reasons))
}

/// Flow for a given bisection: orientability first, then the circulation.
pub fn check_flow_for_bisection(g: &CubicMultigraph, bis: &Bisection, p: &FlowPoint) -> Result<FlowVerdict> {
    let OrientabilityCertificate::Orientable(o) = check_orientable(g, bis)? else {
        return Err(Error::NotOrientable);
    };
    Ok(match flow_in_orientation(g, &o, p)? {
        OrientedOutcome::Feasible(fa) => FlowVerdict::Feasible(fa),
        OrientedOutcome::Violating(set) => {
            let bound = set_bound(g, bis, &set, &p.r);
            FlowVerdict::Infeasible(vec![InfeasibleBisection { bisection: bis.clone(), set, bound }])
        }
    })
}

fn set_bound(g: &CubicMultigraph, bis: &Bisection, set: &VertexSet, r: &Rational) -> Rational {
    let d = crate::graph::cut_degree(g, set);
    cut_bound(d, bis.delta(set).unsigned_abs() as usize, set.len(), r)
}

/// Per-vertex check of a flow.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowReport {
    pub valid: bool,
    /// `|Σ out - Σ in|` per vertex.
    #[serde(with = "crate::rational::serde_str_vec")]
    pub excess: Vec<Rational>,
    /// Edges whose value leaves `[1, r-1]`.
    pub bad_edges: Vec<usize>,
    /// Vertices whose excess exceeds `α`.
    pub bad_vertices: Vec<usize>,
}

/// Exact check of edge bounds and vertex excesses.
pub fn verify_flow(g: &CubicMultigraph, fa: &FlowAssignment, p: &FlowPoint) -> Result<FlowReport> {
    fa.orientation.check_graph(g)?;
    if fa.values.len() != g.m() {
        return Err(Error::MismatchedGraph(format!(
            "{} flow values for {} edges",
            fa.values.len(),
            g.m()
        )));
    }
    let top = &p.r - int(1);
    let bad_edges: Vec<usize> =
        (0..g.m()).filter(|&e| fa.values[e] < int(1) || fa.values[e] > top).collect();
    let excess: Vec<Rational> = fa.net_outflow(g.n()).iter().map(abs).collect();
    let bad_vertices: Vec<usize> = (0..g.n()).filter(|&v| excess[v] > p.alpha).collect();
    Ok(FlowReport { valid: bad_edges.is_empty() && bad_vertices.is_empty(), excess, bad_edges, bad_vertices })
}

/// Distinct `(d(A), Δ(A), |A|)` over nonempty `A`, each with the first mask producing it.
pub fn cut_profile(g: &CubicMultigraph, bis: &Bisection) -> Vec<((usize, usize, usize), u64)> {
    let n = g.n();
    let twos = bis.mask();
    let mut seen = std::collections::HashMap::new();
    for mask in 1u64..1 << n {
        let d = cut_degree_mask(g, mask);
        let size = mask.count_ones() as i64;
        let dd = (2 * (mask & twos).count_ones() as i64 - size).unsigned_abs() as usize;
        seen.entry((d, dd, size as usize)).or_insert(mask);
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by_key(|&(_, mask)| mask);
    out
}

/// Result of the brute-force cut condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutCondition {
    pub holds: bool,
    /// A set with the largest right-hand side (first such subset in mask order).
    pub worst: VertexSet,
    pub worst_bound: Rational,
}

/// Checks `α >= (2d(A) - (d(A)-Δ(A)) r) / (2|A|)` over all nonempty `A` (`n <= 20`).
pub fn cut_condition_oracle(g: &CubicMultigraph, bis: &Bisection, p: &FlowPoint) -> Result<CutCondition> {
    if g.n() > 20 {
        return Err(Error::TooLarge { n: g.n(), limit: 20 });
    }
    if bis.n() != g.n() {
        return Err(Error::MismatchedGraph("bisection size differs from graph".into()));
    }
    let mut best: Option<(Rational, u64)> = None;
    for ((d, dd, size), mask) in cut_profile(g, bis) {
        let bound = cut_bound(d, dd, size, &p.r);
        let better = match &best {
            None => true,
            Some((b, m)) => bound > *b || (bound == *b && mask < *m),
        };
        if better {
            best = Some((bound, mask));
        }
    }
    let (worst_bound, mask) = best.expect("nonempty vertex set");
    Ok(CutCondition {
        holds: p.alpha >= worst_bound,
        worst: VertexSet::from_mask(g.n(), mask),
        worst_bound,
    })
}

//! Exact feasible domains in the `r`-`α` plane.
//!
//! Every domain handled here is closed upward and to the right, so it is stored as its
//! lower frontier: a nonincreasing piecewise-linear function of `r` on `[2, ∞)` that ends
//! in a horizontal ray. Each piece remembers the line that produced it, the bisection that
//! realizes it and the vertex set whose inequality it is.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flow::{cut_profile, FlowPoint};
use crate::graph::{CubicMultigraph, VertexSet};
use crate::orientation::{check_orientable, enumerate_bisections_up_to, Bisection};
use crate::rational::{fmt_rational, int, parse_rational, Rational};
use num_traits::{Signed, Zero};

/// Largest order accepted by [`bed_of_graph`].
pub const GRAPH_LIMIT: usize = 14;
/// Largest order accepted by [`bed_of_bisection`].
pub const BISECTION_LIMIT: usize = 20;

/// `(r - 2α) / (1 - α)`: where the line through `(2, 1)` and `p` meets `α = 0`.
pub fn trace(p: &FlowPoint) -> Result<Rational> {
    if p.alpha >= int(1) {
        return Err(Error::UndefinedTrace);
    }
    Ok((&p.r - int(2) * &p.alpha) / (int(1) - &p.alpha))
}

/// The constraint `α >= a - b·r` generated by a vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlane {
    pub a: Rational,
    pub b: Rational,
    pub set: Option<VertexSet>,
}

impl HalfPlane {
    /// `a = d/|A|`, `b = (d - Δ) / (2|A|)`.
    pub fn from_cut(d: usize, big_delta: usize, size: usize, set: VertexSet) -> Self {
        let size = int(size as i64);
        Self {
            a: int(d as i64) / &size,
            b: int(d as i64 - big_delta as i64) / (int(2) * size),
            set: Some(set),
        }
    }

    fn floor() -> Self {
        Self { a: Rational::zero(), b: Rational::zero(), set: None }
    }

    pub fn value_at(&self, r: &Rational) -> Rational {
        &self.a - &self.b * r
    }
}

/// Plotting window; purely presentational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub r: (Rational, Rational),
    pub alpha: (Rational, Rational),
}

impl Default for Window {
    fn default() -> Self {
        Self::with_rmax(int(8)).expect("8 > 2")
    }
}

impl Window {
    pub fn new(r_lo: Rational, r_hi: Rational, a_lo: Rational, a_hi: Rational) -> Result<Self> {
        if !(int(2) <= r_lo && r_lo < r_hi) {
            return Err(Error::MalformedInput("window needs 2 <= r_lo < r_hi".into()));
        }
        if !(Rational::zero() <= a_lo && a_lo < a_hi && a_hi <= int(1)) {
            return Err(Error::MalformedInput("window needs 0 <= alpha_lo < alpha_hi <= 1".into()));
        }
        Ok(Self { r: (r_lo, r_hi), alpha: (a_lo, a_hi) })
    }

    pub fn with_rmax(r_max: Rational) -> Result<Self> {
        Self::new(int(2), r_max, int(0), int(1))
    }

    /// Default window, with `BEFLOW_RMAX` overriding the right edge when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var("BEFLOW_RMAX") {
            Ok(v) if !v.trim().is_empty() => Self::with_rmax(parse_rational(v.trim())?),
            _ => Ok(Self::default()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Piece {
    start: Rational,
    line: HalfPlane,
    witness: Option<Bisection>,
}

impl Piece {
    fn value(&self, r: &Rational) -> Rational {
        self.line.value_at(r)
    }
}

/// One corner of a frontier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrontierVertex {
    pub r: Rational,
    pub alpha: Rational,
    /// Bisection whose own domain has this vertex on its frontier.
    pub witness: Option<Bisection>,
    /// Sets whose inequalities define the two frontier pieces meeting here.
    pub binding_sets: Vec<VertexSet>,
}

/// Upward-closed region `{(r, α) : r >= 2, α >= f(r)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowRegion {
    pieces: Vec<Piece>,
    pub window: Window,
}

impl FlowRegion {
    fn from_pieces(mut pieces: Vec<Piece>) -> Self {
        pieces.dedup_by(|next, prev| next.line.a == prev.line.a && next.line.b == prev.line.b);
        debug_assert!(pieces.last().is_some_and(|p| p.line.b.is_zero()), "frontier ends horizontally");
        Self { pieces, window: Window::default() }
    }

    pub fn with_window(mut self, window: Window) -> Self {
        self.window = window;
        self
    }

    fn piece_at(&self, r: &Rational) -> &Piece {
        let i = self.pieces.partition_point(|p| p.start <= *r);
        &self.pieces[i.saturating_sub(1)]
    }

    /// Frontier height at `r` (`r >= 2`).
    pub fn frontier_at(&self, r: &Rational) -> Rational {
        self.piece_at(r).value(r)
    }

    pub fn frontier(&self) -> Vec<FrontierVertex> {
        self.pieces
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let mut binding_sets = Vec::new();
                let sides = if i > 0 { vec![&self.pieces[i - 1], p] } else { vec![p] };
                for q in sides {
                    if let Some(s) = &q.line.set {
                        if !binding_sets.contains(s) {
                            binding_sets.push(s.clone());
                        }
                    }
                }
                FrontierVertex { r: p.start.clone(), alpha: p.value(&p.start), witness: p.witness.clone(), binding_sets }
            })
            .collect()
    }

    /// Corners as bare coordinates.
    pub fn corners(&self) -> Vec<(Rational, Rational)> {
        self.pieces.iter().map(|p| (p.start.clone(), p.value(&p.start))).collect()
    }

    /// `α_m`: height of the horizontal ray.
    pub fn alpha_min(&self) -> Rational {
        self.pieces.last().expect("nonempty").line.a.clone()
    }

    /// `r_m`: where the horizontal ray starts.
    pub fn r_min(&self) -> Rational {
        self.pieces.last().expect("nonempty").start.clone()
    }

    pub fn contains(&self, p: &FlowPoint) -> bool {
        p.alpha >= self.frontier_at(&p.r)
    }

    /// Least trace over the part of the region below `α = 1`; attained at a corner.
    pub fn min_trace(&self) -> Result<Rational> {
        self.corners()
            .into_iter()
            .filter(|(_, a)| *a < int(1))
            .map(|(r, alpha)| trace(&FlowPoint { r, alpha }).expect("alpha below 1"))
            .min()
            .ok_or(Error::EmptyBelowOne)
    }

    fn breakpoints<'a>(&'a self, other: &'a FlowRegion) -> Vec<Rational> {
        let mut rs: Vec<Rational> =
            self.pieces.iter().chain(&other.pieces).map(|p| p.start.clone()).collect();
        rs.sort();
        rs.dedup();
        rs
    }

    /// `self ⊆ other`, compared at every breakpoint of both frontiers and on the rays.
    pub fn is_subset_of(&self, other: &FlowRegion) -> bool {
        self.breakpoints(other).iter().all(|r| self.frontier_at(r) >= other.frontier_at(r))
            && self.alpha_min() >= other.alpha_min()
    }

    /// Pointwise minimum of the two frontiers.
    pub fn union(&self, other: &FlowRegion) -> FlowRegion {
        let rs = self.breakpoints(other);
        let mut out: Vec<Piece> = Vec::new();
        for (i, s) in rs.iter().enumerate() {
            let end = rs.get(i + 1);
            let pa = self.piece_at(s);
            let pb = other.piece_at(s);
            let (va, vb) = (pa.value(s), pb.value(s));
            // lower just right of s: smaller value, or equal value and steeper descent
            let a_first = va < vb || (va == vb && pa.line.b >= pb.line.b);
            let (lo, hi) = if a_first { (pa, pb) } else { (pb, pa) };
            out.push(Piece { start: s.clone(), ..lo.clone() });
            if lo.line.b < hi.line.b {
                let x = (&hi.line.a - &lo.line.a) / (&hi.line.b - &lo.line.b);
                if x > *s && end.is_none_or(|e| x < *e) {
                    out.push(Piece { start: x, ..hi.clone() });
                }
            }
        }
        FlowRegion::from_pieces(out).with_window(self.window.clone())
    }

    /// Whether the closed segment `p -> q` lies in the region (`p.r <= q.r`).
    pub fn contains_segment(&self, p: &(Rational, Rational), q: &(Rational, Rational)) -> bool {
        let height = |r: &Rational| {
            if q.0 == p.0 {
                p.1.clone().min(q.1.clone())
            } else {
                &p.1 + (&q.1 - &p.1) * (r - &p.0) / (&q.0 - &p.0)
            }
        };
        let mut rs = vec![p.0.clone(), q.0.clone()];
        rs.extend(self.pieces.iter().map(|pc| pc.start.clone()).filter(|r| *r > p.0 && *r < q.0));
        rs.iter().all(|r| height(r) >= self.frontier_at(r))
    }

    pub fn report(&self) -> RegionReport {
        RegionReport {
            window: WindowReport {
                r: [fmt_rational(&self.window.r.0), fmt_rational(&self.window.r.1)],
                alpha: [fmt_rational(&self.window.alpha.0), fmt_rational(&self.window.alpha.1)],
            },
            frontier: self
                .frontier()
                .into_iter()
                .map(|v| VertexReport {
                    r: fmt_rational(&v.r),
                    alpha: fmt_rational(&v.alpha),
                    witness_bisection: v.witness.map(|b| b.colors().to_vec()),
                    binding_sets: v.binding_sets.iter().map(VertexSet::to_vec).collect(),
                })
                .collect(),
            alpha_min: fmt_rational(&self.alpha_min()),
            r_min: fmt_rational(&self.r_min()),
        }
    }
}

/// JSON form of a region.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionReport {
    pub window: WindowReport,
    pub frontier: Vec<VertexReport>,
    pub alpha_min: String,
    pub r_min: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowReport {
    pub r: [String; 2],
    pub alpha: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexReport {
    pub r: String,
    pub alpha: String,
    pub witness_bisection: Option<Vec<u8>>,
    pub binding_sets: Vec<Vec<usize>>,
}

impl RegionReport {
    /// Corner coordinates parsed back to exact values.
    pub fn corners(&self) -> Result<Vec<(Rational, Rational)>> {
        self.frontier.iter().map(|v| Ok((parse_rational(&v.r)?, parse_rational(&v.alpha)?))).collect()
    }
}

pub fn region_subset(a: &FlowRegion, b: &FlowRegion) -> bool {
    a.is_subset_of(b)
}

pub fn region_equal(a: &FlowRegion, b: &FlowRegion) -> bool {
    a.is_subset_of(b) && b.is_subset_of(a)
}

/// Upper envelope of `α >= a - b·r` over the given lines and `α >= 0`, on `r >= 2`.
fn envelope(lines: Vec<HalfPlane>, witness: Option<Bisection>) -> FlowRegion {
    let mut lines = lines;
    lines.push(HalfPlane::floor());
    let two = int(2);
    let pick = |cands: &mut dyn Iterator<Item = (usize, Rational)>| -> usize {
        // largest key, ties to the flattest line, then the earliest
        let mut best: Option<(usize, Rational)> = None;
        for (i, key) in cands {
            let better = match &best {
                None => true,
                Some((j, k)) => key > *k || (key == *k && lines[i].b < lines[*j].b),
            };
            if better {
                best = Some((i, key));
            }
        }
        best.expect("candidates").0
    };
    let mut cur = pick(&mut lines.iter().enumerate().map(|(i, l)| (i, l.value_at(&two))));
    let mut r = two;
    let mut pieces = Vec::new();
    loop {
        pieces.push(Piece { start: r.clone(), line: lines[cur].clone(), witness: witness.clone() });
        if lines[cur].b.is_zero() {
            break;
        }
        let c = &lines[cur];
        // the next line to take over is the flatter one crossing first; ties to the flattest
        let mut next: Option<(usize, Rational)> = None;
        for (i, l) in lines.iter().enumerate() {
            if l.b < c.b {
                let x = (&c.a - &l.a) / (&c.b - &l.b);
                let better = match &next {
                    None => true,
                    Some((j, y)) => x < *y || (x == *y && l.b < lines[*j].b),
                };
                if better {
                    next = Some((i, x));
                }
            }
        }
        let (i, x) = next.expect("the floor line is flatter");
        debug_assert!(x > r);
        cur = i;
        r = x;
    }
    FlowRegion::from_pieces(pieces)
}

/// Feasible domain of one orientable bisection (`n <= 20`).
pub fn bed_of_bisection(g: &CubicMultigraph, bis: &Bisection) -> Result<FlowRegion> {
    if g.n() > BISECTION_LIMIT {
        return Err(Error::TooLarge { n: g.n(), limit: BISECTION_LIMIT });
    }
    if !check_orientable(g, bis)?.is_orientable() {
        return Err(Error::NotOrientable);
    }
    Ok(bed_of_orientable(g, bis))
}

fn bed_of_orientable(g: &CubicMultigraph, bis: &Bisection) -> FlowRegion {
    let lines = cut_profile(g, bis)
        .into_iter()
        .map(|((d, dd, size), mask)| HalfPlane::from_cut(d, dd, size, VertexSet::from_mask(g.n(), mask)))
        .collect();
    envelope(lines, Some(bis.clone()))
}

/// Orientable bisections and their domains, in enumeration order.
pub fn beds_by_bisection(g: &CubicMultigraph, limit: usize) -> Result<Vec<(Bisection, FlowRegion)>> {
    let all = enumerate_bisections_up_to(g, limit)?;
    let per: Vec<Option<(Bisection, FlowRegion)>> = all
        .into_par_iter()
        .map(|bis| {
            let ok = check_orientable(g, &bis).expect("sizes agree").is_orientable();
            ok.then(|| {
                let region = bed_of_orientable(g, &bis);
                (bis, region)
            })
        })
        .collect();
    Ok(per.into_iter().flatten().collect())
}

/// Feasible domain of the graph: union over its orientable bisections (`n <= 14`).
pub fn bed_of_graph(g: &CubicMultigraph) -> Result<FlowRegion> {
    let beds = beds_by_bisection(g, GRAPH_LIMIT)?;
    let mut iter = beds.into_iter().map(|(_, r)| r);
    let first = iter.next().expect("every cubic graph has a balanced orientation");
    Ok(iter.fold(first, |acc, r| acc.union(&r)))
}

/// A bisection whose own domain is already the whole domain of `g` (`n <= 12`).
pub fn dominant_orientation_search(g: &CubicMultigraph) -> Result<Option<Bisection>> {
    let beds = beds_by_bisection(g, 12)?;
    let mut iter = beds.iter().map(|(_, r)| r.clone());
    let first = iter.next().expect("nonempty");
    let whole = iter.fold(first, |acc, r| acc.union(&r));
    Ok(beds.into_iter().find(|(_, r)| region_equal(r, &whole)).map(|(b, _)| b))
}

/// `urd(p)`: the closed domain with corners `(2, ∞)`, `(2, 1)`, `p`, `(∞, α_p)`.
pub fn urd(p: &FlowPoint) -> Result<FlowRegion> {
    if p.alpha > int(1) {
        return Err(Error::BadFlowPoint(format!("urd needs alpha <= 1, got {p}")));
    }
    let tail = Piece {
        start: p.r.clone(),
        line: HalfPlane { a: p.alpha.clone(), b: Rational::zero(), set: None },
        witness: None,
    };
    if p.r == int(2) {
        return Ok(FlowRegion::from_pieces(vec![tail]));
    }
    let b = (int(1) - &p.alpha) / (&p.r - int(2));
    let head = Piece {
        start: int(2),
        line: HalfPlane { a: int(1) + int(2) * &b, b, set: None },
        witness: None,
    };
    Ok(FlowRegion::from_pieces(vec![head, tail]))
}

/// Regions named after a trace level `k`, plus `urd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedRegion {
    /// Segment of `α = (k-r)/(k-2)` from `(2,1)` (open) to `(k,0)` (closed).
    L(i64),
    /// Upper part of `L_k`, from its lower endpoint (closed) to `(2,1)` (open).
    M(i64),
    /// Half-open triangle with corners `M_k`'s endpoint, `(2,1)` and `(4, (k-3)/(k-1))`;
    /// the lower and left sides belong to it, the upper-right side does not.
    A(i64),
    Urd(FlowPoint),
}

impl NamedRegion {
    pub fn named(tag: &str, k: i64) -> Result<Self> {
        if k < 3 {
            return Err(Error::BadK(k));
        }
        match tag {
            "L" => Ok(Self::L(k)),
            "M" => Ok(Self::M(k)),
            "A" => Ok(Self::A(k)),
            other => Err(Error::MalformedInput(format!("unknown region tag {other:?}"))),
        }
    }

    /// `(3 + (k-3)/(k-1), (k-3)/(k-1))`, the lower endpoint of `M_k`.
    pub fn m_endpoint(k: i64) -> Result<FlowPoint> {
        if k < 3 {
            return Err(Error::BadK(k));
        }
        let h = Rational::new((k - 3).into(), (k - 1).into());
        FlowPoint::new(int(3) + &h, h)
    }

    pub fn contains(&self, p: &FlowPoint) -> bool {
        let (r, a) = (&p.r, &p.alpha);
        match self {
            Self::L(k) | Self::M(k) => {
                let on_line = a * int(k - 2) == int(*k) - r;
                let in_range = *r > int(2) && *r <= int(*k);
                let upper = match self {
                    Self::M(k) => *r <= Self::m_endpoint(*k).expect("k >= 3").r,
                    _ => true,
                };
                on_line && in_range && upper
            }
            Self::A(k) => {
                let h = Rational::new((k - 3).into(), (k - 1).into());
                *a >= h
                    && a * int(k - 2) >= int(*k) - r
                    && a * int(k - 1) < int(k + 1) - r
            }
            Self::Urd(q) => urd(q).map(|u| u.contains(p)).unwrap_or(false),
        }
    }

    /// Whether the named region lies inside an upward-closed region.
    pub fn is_within(&self, region: &FlowRegion) -> bool {
        let corner = (int(2), int(1));
        match self {
            Self::L(k) => region.contains_segment(&corner, &(int(*k), Rational::zero())),
            // The lower side of A_k is horizontal, so for an upward-closed region both
            // reduce to the segment M_k.
            Self::M(k) | Self::A(k) => {
                let e = Self::m_endpoint(*k).expect("k >= 3");
                region.contains_segment(&corner, &(e.r, e.alpha))
            }
            Self::Urd(q) => urd(q).map(|u| u.is_subset_of(region)).unwrap_or(false),
        }
    }

    /// Polygon outline for drawing (open sides included).
    pub fn outline(&self) -> Vec<(Rational, Rational)> {
        match self {
            Self::L(k) => vec![(int(2), int(1)), (int(*k), Rational::zero())],
            Self::M(k) => {
                let e = Self::m_endpoint(*k).expect("k >= 3");
                vec![(int(2), int(1)), (e.r, e.alpha)]
            }
            Self::A(k) => {
                let e = Self::m_endpoint(*k).expect("k >= 3");
                vec![(int(2), int(1)), (e.r, e.alpha.clone()), (int(4), e.alpha)]
            }
            Self::Urd(q) => vec![(int(2), int(1)), (q.r.clone(), q.alpha.clone())],
        }
    }
}

/// Whether the midpoint of every pair of member points is again a member.
pub fn midpoint_closed(region: &FlowRegion, points: &[FlowPoint]) -> bool {
    points.iter().all(|p| {
        points.iter().all(|q| {
            if !(region.contains(p) && region.contains(q)) {
                return true;
            }
            let mid = FlowPoint {
                r: (&p.r + &q.r) / int(2),
                alpha: (&p.alpha + &q.alpha) / int(2),
            };
            region.contains(&mid)
        })
    })
}

/// Sign of `α - f(r)`: `1` strictly inside, `0` on the frontier, `-1` outside.
pub fn side_of(region: &FlowRegion, p: &FlowPoint) -> i32 {
    let d = &p.alpha - region.frontier_at(&p.r);
    if d.is_zero() {
        0
    } else if d.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::rational::ratio;

    fn fp(r: Rational, a: Rational) -> FlowPoint {
        FlowPoint::new(r, a).unwrap()
    }

    #[test]
    fn trace_values() {
        assert_eq!(trace(&FlowPoint::frac(7, 2, 1, 2)).unwrap(), int(5));
        for k in 3..=6 {
            assert_eq!(trace(&fp(int(k), int(0))).unwrap(), int(k));
        }
        assert_eq!(trace(&FlowPoint::frac(10, 3, 1, 3)).unwrap(), int(4));
        assert_eq!(trace(&FlowPoint::frac(2, 1, 1, 1)), Err(Error::UndefinedTrace));
    }

    #[test]
    fn theta_domain() {
        let g = named::theta();
        let b = Bisection::new(vec![1, 2]).unwrap();
        let r = bed_of_bisection(&g, &b).unwrap();
        assert_eq!(r.corners(), vec![(int(2), int(1)), (int(3), int(0))]);
        let whole = bed_of_graph(&g).unwrap();
        assert!(region_equal(&r, &whole));
        assert_eq!((whole.r_min(), whole.alpha_min()), (int(3), int(0)));
        assert!(whole.contains(&FlowPoint::frac(3, 1, 0, 1)));
        assert!(!whole.contains(&FlowPoint::frac(5, 2, 1, 4)));
        assert!(whole.contains(&FlowPoint::frac(2, 1, 1, 1)));
        assert_eq!(whole.min_trace().unwrap(), int(3));
    }

    #[test]
    fn k4_domain() {
        let g = named::k4();
        let whole = bed_of_graph(&g).unwrap();
        assert_eq!(whole.corners(), vec![(int(2), int(1)), (int(4), int(0))]);
        assert_eq!(whole.min_trace().unwrap(), int(4));
        let dominant = dominant_orientation_search(&g).unwrap().unwrap();
        assert!(region_equal(&bed_of_bisection(&g, &dominant).unwrap(), &whole));
    }

    #[test]
    fn union_takes_pointwise_minimum() {
        let a = urd(&FlowPoint::frac(3, 1, 1, 2)).unwrap();
        let b = urd(&FlowPoint::frac(5, 1, 0, 1)).unwrap();
        let u = a.union(&b);
        // a is lower up to r = 7/2, where b's descent crosses a's ray
        assert_eq!(u.frontier_at(&int(3)), ratio(1, 2));
        assert_eq!(u.frontier_at(&int(4)), ratio(1, 3));
        assert_eq!(u.corners()[2], (ratio(7, 2), ratio(1, 2)));
        assert_eq!(u.alpha_min(), int(0));
        assert!(a.is_subset_of(&u) && b.is_subset_of(&u));
        assert!(!u.is_subset_of(&a));
    }

    #[test]
    fn named_regions() {
        assert_eq!(NamedRegion::m_endpoint(4).unwrap(), FlowPoint::frac(10, 3, 1, 3));
        assert_eq!(NamedRegion::m_endpoint(5).unwrap(), FlowPoint::frac(7, 2, 1, 2));
        assert_eq!(NamedRegion::named("M", 2), Err(Error::BadK(2)));
        let a4 = NamedRegion::A(4);
        assert!(a4.contains(&FlowPoint::frac(10, 3, 1, 3)));
        assert!(!a4.contains(&FlowPoint::frac(2, 1, 1, 1)));
        assert!(!a4.contains(&FlowPoint::frac(4, 1, 1, 3)));
        assert!(a4.contains(&FlowPoint::frac(7, 2, 1, 3)));
        let l4 = NamedRegion::L(4);
        assert!(l4.contains(&FlowPoint::frac(4, 1, 0, 1)));
        assert!(!l4.contains(&FlowPoint::frac(2, 1, 1, 1)));
        assert!(NamedRegion::M(5).contains(&FlowPoint::frac(3, 1, 2, 3)));
        assert!(!NamedRegion::M(5).contains(&FlowPoint::frac(4, 1, 1, 3)));
    }

    #[test]
    fn window_validation() {
        assert!(Window::new(int(2), int(2), int(0), int(1)).is_err());
        assert!(Window::new(int(2), int(6), int(0), ratio(3, 2)).is_err());
        assert_eq!(Window::default().r.1, int(8));
    }
}

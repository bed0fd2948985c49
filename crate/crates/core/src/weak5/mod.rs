//! Constructive orientable 5-weak bisections.
//!
//! Pipeline per connected component: a path/cycle [`factor`], the [`skeletal`] tree over
//! its components split into pes-subgraphs, a recursive [`coloring`] of each piece, and
//! a merge across the removed even edges. The result is checked end to end and comes
//! with a `(7/2, 1/2)`-flow in a witness orientation.

pub mod coloring;
pub mod factor;
pub mod skeletal;

use serde::{Deserialize, Serialize};

pub use coloring::{color_pegs, merge_colorings, BranchForest, VerifyDepth, Weak5Stats};
pub use factor::{
    check_factor, enumerate_factors, find_factor, find_factor_with_budget, ComponentKind, FactorComponent,
    FactorDecomposition, FactorViolation,
};
pub use skeletal::{build_skeletal, PesSubgraph, SkeletalStructure};

use crate::bisection::{find_k_weak, is_k_weak, SEARCH_LIMIT};
use crate::error::{Error, Result};
use crate::flow::{check_flow_for_bisection, verify_flow, FlowAssignment, FlowPoint, FlowVerdict};
use crate::graph::CubicMultigraph;
use crate::orientation::{check_orientable, Bisection, Orientation, OrientabilityCertificate};

/// The flow point every constructed bisection is checked against.
pub fn target_point() -> FlowPoint {
    FlowPoint::frac(7, 2, 1, 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Weak5Options {
    pub depth: VerifyDepth,
    /// Use the exhaustive search when no factor is found within the budget.
    pub allow_fallback: bool,
    pub factor_budget: u64,
}

impl Default for Weak5Options {
    fn default() -> Self {
        Self { depth: VerifyDepth::Release, allow_fallback: true, factor_budget: factor::FACTOR_BUDGET }
    }
}

/// The construction for one connected component, in that component's own labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCertificate {
    /// Vertices of the input graph, in the order used as local labels.
    pub vertices: Vec<usize>,
    pub factor: Option<FactorDecomposition>,
    pub skeletal: Option<SkeletalStructure>,
    pub fallback: bool,
}

/// Everything needed to re-check a construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weak5Certificate {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub components: Vec<ComponentCertificate>,
    pub bisection: Bisection,
    pub orientation: Orientation,
    pub point: FlowPoint,
    pub flow: FlowAssignment,
    pub stats: Weak5Stats,
}

impl Weak5Certificate {
    pub fn used_fallback(&self) -> bool {
        self.components.iter().any(|c| c.fallback)
    }
}

/// Colors a connected graph from a given factor.
pub fn construct_with_factor(
    g: &CubicMultigraph,
    f: &FactorDecomposition,
    depth: VerifyDepth,
    stats: &mut Weak5Stats,
) -> Result<(Bisection, SkeletalStructure)> {
    let s = build_skeletal(g, f)?;
    let colors = color_pegs(g, f, &s, depth, stats)?;
    let colors = merge_colorings(g, f, &s, colors, stats)?;
    let bis = Bisection::new(colors).map_err(|e| Error::InternalVerificationFailed(e.to_string()))?;
    Ok((bis, s))
}

fn construct_component(
    g: &CubicMultigraph,
    opts: &Weak5Options,
    stats: &mut Weak5Stats,
) -> Result<(Bisection, Option<FactorDecomposition>, Option<SkeletalStructure>)> {
    if let Some(f) = find_factor_with_budget(g, opts.factor_budget)? {
        let (bis, s) = construct_with_factor(g, &f, opts.depth, stats)?;
        return Ok((bis, Some(f), Some(s)));
    }
    if !opts.allow_fallback || g.n() > SEARCH_LIMIT {
        return Err(Error::InternalVerificationFailed(format!(
            "no usable factor found on {} vertices",
            g.n()
        )));
    }
    stats.fallbacks += 1;
    let bis = find_k_weak(g, 5, true)?
        .ok_or_else(|| Error::InternalVerificationFailed("exhaustive search found nothing".into()))?;
    Ok((bis, None, None))
}

/// Orientable 5-weak bisection with default options.
pub fn construct_orientable_5weak(g: &CubicMultigraph) -> Result<Weak5Certificate> {
    construct_orientable_5weak_with(g, &Weak5Options::default())
}

pub fn construct_orientable_5weak_with(g: &CubicMultigraph, opts: &Weak5Options) -> Result<Weak5Certificate> {
    let mut stats = Weak5Stats::default();
    let mut colors = vec![0u8; g.n()];
    let mut components = Vec::new();
    for vertices in g.components() {
        let (local, _) = g.component_subgraph(&vertices)?;
        let (bis, factor, skeletal) = construct_component(&local, opts, &mut stats)?;
        for (i, &v) in vertices.iter().enumerate() {
            colors[v] = bis.color(i);
        }
        components.push(ComponentCertificate { vertices, fallback: factor.is_none(), factor, skeletal });
    }
    let bisection = Bisection::new(colors).map_err(|e| Error::InternalVerificationFailed(e.to_string()))?;
    let (weak, report) = is_k_weak(g, &bisection, 5)?;
    if !weak {
        let bad = report.violators(5).first().map(|c| c.vertices.clone()).unwrap_or_default();
        return Err(Error::InternalVerificationFailed(format!("monochromatic component {bad:?} is too large")));
    }
    let point = target_point();
    let flow = match check_flow_for_bisection(g, &bisection, &point) {
        Ok(FlowVerdict::Feasible(fa)) => fa,
        Ok(FlowVerdict::Infeasible(v)) => {
            let set = v.first().map(|x| x.set.to_vec()).unwrap_or_default();
            return Err(Error::InternalVerificationFailed(format!("no (7/2, 1/2)-flow; set {set:?} binds")));
        }
        Err(Error::NotOrientable) => {
            return Err(Error::InternalVerificationFailed("bisection is not orientable".into()))
        }
        Err(e) => return Err(e),
    };
    if !verify_flow(g, &flow, &point)?.valid {
        return Err(Error::InternalVerificationFailed("flow does not verify".into()));
    }
    Ok(Weak5Certificate {
        n: g.n(),
        edges: g.edges().to_vec(),
        components,
        bisection,
        orientation: flow.orientation.clone(),
        point,
        flow,
        stats,
    })
}

/// Re-checks a certificate against `g` without trusting any of its claims.
pub fn verify_certificate(g: &CubicMultigraph, cert: &Weak5Certificate) -> Result<()> {
    if cert.n != g.n() || cert.edges != g.edges() {
        return Err(Error::MismatchedGraph("certificate was issued for another graph".into()));
    }
    if cert.bisection.n() != g.n() {
        return Err(Error::MismatchedGraph("bisection size differs from graph".into()));
    }
    let fail = |m: &str| Err(Error::InternalVerificationFailed(m.to_string()));
    if !is_k_weak(g, &cert.bisection, 5)?.0 {
        return fail("bisection is not 5-weak");
    }
    cert.orientation.check_graph(g)?;
    let out = cert.orientation.outdegrees(g.n());
    if (0..g.n()).any(|v| out[v] != cert.bisection.color(v) as usize) {
        return fail("orientation outdegrees differ from the bisection");
    }
    if cert.flow.orientation != cert.orientation {
        return fail("flow uses another orientation");
    }
    if !verify_flow(g, &cert.flow, &cert.point)?.valid {
        return fail("flow does not verify");
    }
    if !matches!(check_orientable(g, &cert.bisection)?, OrientabilityCertificate::Orientable(_)) {
        return fail("bisection is not orientable");
    }
    Ok(())
}

//! JSON records emitted by the commands and re-checked by `verify`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bisection::{find_k_weak, hunt_one, is_k_weak, HuntCertificate, HuntRecord, HuntVerdict, Violation};
use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::flow::{check_flow, cut_bound, verify_flow, FlowAssignment, FlowPoint, FlowVerdict};
use crate::graph::{cut_degree, CubicMultigraph, VertexSet};
use crate::orientation::{check_orientable, enumerate_orientable_bisections, Bisection, Orientation};
use crate::rational::{fmt_rational, parse_rational};
use crate::region::{bed_of_graph, RegionReport, Window};
use crate::weak5::{construct_orientable_5weak_with, verify_certificate, Weak5Certificate, Weak5Options};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphJson {
    pub fn of(g: &CubicMultigraph) -> Self {
        Self { n: g.n(), edges: g.edges().to_vec() }
    }

    pub fn graph(&self) -> Result<CubicMultigraph> {
        CubicMultigraph::new(self.n, self.edges.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FlowOutcome {
    Feasible { flow: FlowAssignment },
    /// One violated inequality per orientable bisection, largest bound first.
    Infeasible { violations: Vec<Violation> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Record {
    Flow { graph: GraphJson, point: FlowPoint, outcome: FlowOutcome },
    Region { graph: GraphJson, region: RegionReport },
    Bisection {
        graph: GraphJson,
        k: i64,
        orientable: bool,
        bisection: Option<Bisection>,
        orientation: Option<Orientation>,
    },
    Weak5 { graph: GraphJson, certificate: Box<Weak5Certificate> },
    Hunt { graph: GraphJson, record: HuntRecord },
}

impl Record {
    pub fn graph_json(&self) -> &GraphJson {
        match self {
            Self::Flow { graph, .. }
            | Self::Region { graph, .. }
            | Self::Bisection { graph, .. }
            | Self::Weak5 { graph, .. }
            | Self::Hunt { graph, .. } => graph,
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            Self::Flow { outcome: FlowOutcome::Feasible { .. }, .. } => "feasible",
            Self::Flow { outcome: FlowOutcome::Infeasible { .. }, .. } => "infeasible",
            Self::Region { .. } => "computed",
            Self::Bisection { bisection: Some(_), .. } => "found",
            Self::Bisection { bisection: None, .. } => "none",
            Self::Weak5 { .. } => "constructed",
            Self::Hunt { record, .. } => match record.verdict {
                HuntVerdict::Skipped => "skipped",
                HuntVerdict::Holds => "holds",
                HuntVerdict::Finding => "finding",
            },
        }
    }

    /// Exit status contributed by this record.
    pub fn status(&self) -> i32 {
        match self.verdict() {
            "infeasible" | "none" => 1,
            _ => 0,
        }
    }
}

pub fn flow_record(g: &CubicMultigraph, point: &FlowPoint) -> Result<Record> {
    let outcome = match check_flow(g, point)? {
        FlowVerdict::Feasible(flow) => FlowOutcome::Feasible { flow },
        FlowVerdict::Infeasible(mut list) => {
            list.sort_by(|a, b| b.bound.cmp(&a.bound));
            let violations = list
                .into_iter()
                .map(|v| Violation { bisection: v.bisection, set: v.set.to_vec(), bound: fmt_rational(&v.bound) })
                .collect();
            FlowOutcome::Infeasible { violations }
        }
    };
    Ok(Record::Flow { graph: GraphJson::of(g), point: point.clone(), outcome })
}

pub fn region_record(g: &CubicMultigraph, window: &Window) -> Result<Record> {
    let region = bed_of_graph(g)?.with_window(window.clone());
    Ok(Record::Region { graph: GraphJson::of(g), region: region.report() })
}

pub fn bisection_record(g: &CubicMultigraph, k: i64, orientable: bool) -> Result<Record> {
    let bisection = find_k_weak(g, k, orientable)?;
    let orientation = match &bisection {
        Some(b) if orientable => check_orientable(g, b)?.orientation(),
        _ => None,
    };
    Ok(Record::Bisection { graph: GraphJson::of(g), k, orientable, bisection, orientation })
}

pub fn weak5_record(g: &CubicMultigraph, opts: &Weak5Options) -> Result<Record> {
    let certificate = construct_orientable_5weak_with(g, opts)?;
    Ok(Record::Weak5 { graph: GraphJson::of(g), certificate: Box::new(certificate) })
}

pub fn hunt_record(g: &CubicMultigraph, conjecture: crate::bisection::Conjecture) -> Result<Record> {
    Ok(Record::Hunt { graph: GraphJson::of(g), record: hunt_one(g, conjecture)? })
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InternalVerificationFailed(msg.into())
}

fn check_violations(g: &CubicMultigraph, point: &FlowPoint, violations: &[Violation]) -> Result<()> {
    let mut listed = BTreeSet::new();
    for v in violations {
        if v.bisection.n() != g.n() || v.set.iter().any(|&x| x >= g.n()) || v.set.is_empty() {
            return Err(invalid("violation does not fit the graph"));
        }
        let set = VertexSet::from_vertices(g.n(), v.set.iter().copied());
        let bound = cut_bound(cut_degree(g, &set), v.bisection.delta(&set).unsigned_abs() as usize, set.len(), &point.r);
        if bound != parse_rational(&v.bound)? || bound <= point.alpha {
            return Err(invalid(format!("set {:?} does not violate the cut condition", v.set)));
        }
        listed.insert(v.bisection.normalized());
    }
    for (b, _) in enumerate_orientable_bisections(g)? {
        if !listed.contains(&b.normalized()) {
            return Err(invalid(format!("orientable bisection {:?} is not ruled out", b.colors())));
        }
    }
    Ok(())
}

fn check_bisection(g: &CubicMultigraph, k: i64, b: &Bisection, o: Option<&Orientation>) -> Result<()> {
    if b.n() != g.n() {
        return Err(invalid("bisection size differs from graph"));
    }
    if !is_k_weak(g, b, k)?.0 {
        return Err(invalid(format!("bisection is not {k}-weak")));
    }
    if let Some(o) = o {
        o.check_graph(g)?;
        if (0..g.n()).any(|v| o.outdegrees(g.n())[v] != b.color(v) as usize) {
            return Err(invalid("orientation outdegrees differ from the colors"));
        }
    }
    Ok(())
}

/// Re-checks a record from scratch; `Err` explains why it does not hold.
pub fn verify_record(rec: &Record) -> Result<()> {
    let g = rec.graph_json().graph()?;
    match rec {
        Record::Flow { point, outcome: FlowOutcome::Feasible { flow }, .. } => {
            if !verify_flow(&g, flow, point)?.valid {
                return Err(invalid("flow violates its bounds"));
            }
        }
        Record::Flow { point, outcome: FlowOutcome::Infeasible { violations }, .. } => {
            if point.alpha >= crate::rational::int(1) {
                return Err(invalid("every graph has a flow once alpha >= 1"));
            }
            check_violations(&g, point, violations)?;
        }
        Record::Region { region, .. } => {
            let mut fresh = bed_of_graph(&g)?.report();
            fresh.window = region.window.clone();
            if fresh != *region {
                return Err(invalid("region differs from a fresh computation"));
            }
        }
        Record::Bisection { k, orientable, bisection: Some(b), orientation, .. } => {
            if *orientable && orientation.is_none() {
                return Err(invalid("orientable verdict without an orientation"));
            }
            check_bisection(&g, *k, b, orientation.as_ref())?;
        }
        Record::Bisection { k, orientable, bisection: None, .. } => {
            if find_k_weak(&g, *k, *orientable)?.is_some() {
                return Err(invalid(format!("a {k}-weak bisection exists")));
            }
        }
        Record::Weak5 { certificate, .. } => verify_certificate(&g, certificate)?,
        Record::Hunt { record, .. } => {
            if record.form != canonical_form(&g) {
                return Err(invalid("canonical form does not match the graph"));
            }
            match (&record.verdict, &record.certificate) {
                (HuntVerdict::Holds, Some(HuntCertificate::Bisection { bisection, orientation })) => {
                    check_bisection(&g, 4, bisection, Some(orientation))?
                }
                (HuntVerdict::Holds, Some(HuntCertificate::Flow { point, flow })) => {
                    if !verify_flow(&g, flow, point)?.valid {
                        return Err(invalid("flow violates its bounds"));
                    }
                }
                (HuntVerdict::Finding, Some(HuntCertificate::Infeasible { point, violations })) => {
                    check_violations(&g, point, violations)?
                }
                (HuntVerdict::Finding, Some(HuntCertificate::Flow { .. })) | (HuntVerdict::Skipped, None) => {
                    let fresh = hunt_one(&g, record.conjecture)?;
                    if fresh.verdict != record.verdict {
                        return Err(invalid("verdict differs from a fresh run"));
                    }
                }
                _ => return Err(invalid("verdict and certificate do not match")),
            }
        }
    }
    Ok(())
}

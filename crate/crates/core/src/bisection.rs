//! k-weak bisections: detection, exact search and conjecture sweeps.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::flow::{check_flow, FlowAssignment, FlowPoint, FlowVerdict};
use crate::graph::{has_perfect_matching, CubicMultigraph};
use crate::named;
use crate::orientation::{check_orientable, Bisection, Orientation, OrientabilityCertificate};
use crate::rational::fmt_rational;

/// Largest order accepted by [`find_k_weak`].
pub const SEARCH_LIMIT: usize = 24;

/// A connected monochromatic piece of the graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonochromaticComponent {
    pub color: u8,
    pub vertices: Vec<usize>,
    pub is_tree: bool,
}

impl MonochromaticComponent {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonochromaticReport {
    pub components: Vec<MonochromaticComponent>,
}

impl MonochromaticReport {
    pub fn of(g: &CubicMultigraph, bis: &Bisection) -> Self {
        let n = g.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let color = bis.color(s);
            seen[s] = true;
            let mut vertices = vec![s];
            let mut i = 0;
            let mut ends = 0;
            while i < vertices.len() {
                let v = vertices[i];
                i += 1;
                for w in g.neighbors(v) {
                    if bis.color(w) == color {
                        ends += 1;
                        if !seen[w] {
                            seen[w] = true;
                            vertices.push(w);
                        }
                    }
                }
            }
            vertices.sort_unstable();
            let is_tree = ends / 2 + 1 == vertices.len();
            components.push(MonochromaticComponent { color, vertices, is_tree });
        }
        Self { components }
    }

    /// Components that are not trees on at most `k - 2` vertices.
    pub fn violators(&self, k: usize) -> Vec<&MonochromaticComponent> {
        self.components.iter().filter(|c| !c.is_tree || c.size() + 2 > k).collect()
    }
}

fn check_k(k: i64) -> Result<usize> {
    if k < 3 {
        return Err(Error::BadK(k));
    }
    Ok(k as usize)
}

/// Whether every monochromatic component is a tree on at most `k - 2` vertices.
pub fn is_k_weak(g: &CubicMultigraph, bis: &Bisection, k: i64) -> Result<(bool, MonochromaticReport)> {
    let k = check_k(k)?;
    if bis.n() != g.n() {
        return Err(Error::MismatchedGraph("bisection size differs from graph".into()));
    }
    let report = MonochromaticReport::of(g, bis);
    Ok((report.violators(k).is_empty(), report))
}

struct Search<'a> {
    g: &'a CubicMultigraph,
    max_size: usize,
    orientable: bool,
    colors: Vec<u8>,
    counts: [usize; 3],
}

impl Search<'_> {
    /// Whether coloring `v` with `c` keeps its monochromatic component a small tree.
    fn admissible(&self, v: usize, c: u8) -> bool {
        let g = self.g;
        let mut roots: Vec<usize> = Vec::new();
        for w in g.neighbors(v) {
            if self.colors[w] == c {
                roots.push(w);
            }
        }
        if roots.is_empty() {
            return true;
        }
        // flood each colored neighbor's component; any overlap is a cycle through v
        let mut mark = vec![usize::MAX; g.n()];
        let mut size = 1;
        for (idx, &r) in roots.iter().enumerate() {
            if mark[r] != usize::MAX {
                return false;
            }
            let mut stack = vec![r];
            mark[r] = idx;
            while let Some(x) = stack.pop() {
                size += 1;
                for y in g.neighbors(x) {
                    if y != v && self.colors[y] == c && mark[y] == usize::MAX {
                        mark[y] = idx;
                        stack.push(y);
                    }
                }
            }
            if size > self.max_size {
                return false;
            }
        }
        true
    }

    fn next_vertex(&self) -> Option<usize> {
        // most colored neighbors first, then smallest id
        (0..self.g.n())
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| {
                let colored = self.g.neighbors(v).iter().filter(|&&w| self.colors[w] != 0).count();
                (colored, std::cmp::Reverse(v))
            })
    }

    fn run(&mut self) -> Option<Bisection> {
        let half = self.g.n() / 2;
        let Some(v) = self.next_vertex() else {
            let bis = Bisection::new(self.colors.clone()).expect("balanced by construction");
            if self.orientable && !check_orientable(self.g, &bis).expect("sizes agree").is_orientable() {
                return None;
            }
            return Some(bis);
        };
        for c in [1u8, 2] {
            if self.counts[c as usize] == half || !self.admissible(v, c) {
                continue;
            }
            self.colors[v] = c;
            self.counts[c as usize] += 1;
            let found = self.run();
            self.colors[v] = 0;
            self.counts[c as usize] -= 1;
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Exact search for a k-weak bisection, optionally also orientable (`n <= 24`).
pub fn find_k_weak(g: &CubicMultigraph, k: i64, require_orientable: bool) -> Result<Option<Bisection>> {
    let k = check_k(k)?;
    if g.n() > SEARCH_LIMIT {
        return Err(Error::TooLarge { n: g.n(), limit: SEARCH_LIMIT });
    }
    let mut s = Search {
        g,
        max_size: k - 2,
        orientable: require_orientable,
        colors: vec![0; g.n()],
        counts: [0; 3],
    };
    // both properties are invariant under swapping colors
    s.colors[0] = 1;
    s.counts[1] = 1;
    Ok(s.run())
}

/// Conjectures checked by [`hunt`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Conjecture {
    /// Cubic graphs with a perfect matching, Petersen excepted, have an orientable
    /// 4-weak bisection.
    Bl3,
    /// Simple cubic graphs admit a `(17/4, 1/4)`-flow.
    Simple414,
}

impl std::str::FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bl3" => Ok(Self::Bl3),
            "simple414" => Ok(Self::Simple414),
            other => Err(Error::UnknownConjecture(other.to_string())),
        }
    }
}

impl Conjecture {
    pub fn tag(self) -> &'static str {
        match self {
            Self::Bl3 => "bl3",
            Self::Simple414 => "simple414",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HuntVerdict {
    Skipped,
    Holds,
    Finding,
}

/// Evidence attached to a hunt record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HuntCertificate {
    Bisection { bisection: Bisection, orientation: Orientation },
    Flow { point: FlowPoint, flow: FlowAssignment },
    /// No orientable bisection admits the flow; one violated inequality per bisection.
    Infeasible { point: FlowPoint, violations: Vec<Violation> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub bisection: Bisection,
    pub set: Vec<usize>,
    pub bound: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntRecord {
    pub conjecture: Conjecture,
    pub form: CanonicalForm,
    pub verdict: HuntVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<HuntCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntReport {
    pub records: Vec<HuntRecord>,
}

impl HuntReport {
    pub fn findings(&self) -> impl Iterator<Item = &HuntRecord> {
        self.records.iter().filter(|r| r.verdict == HuntVerdict::Finding)
    }

    pub fn count(&self, verdict: HuntVerdict) -> usize {
        self.records.iter().filter(|r| r.verdict == verdict).count()
    }
}

fn infeasible_certificate(point: FlowPoint, verdict: FlowVerdict) -> HuntCertificate {
    match verdict {
        FlowVerdict::Feasible(flow) => HuntCertificate::Flow { point, flow },
        FlowVerdict::Infeasible(list) => HuntCertificate::Infeasible {
            point,
            violations: list
                .into_iter()
                .map(|v| Violation { bisection: v.bisection, set: v.set.to_vec(), bound: fmt_rational(&v.bound) })
                .collect(),
        },
    }
}

/// Checks one graph against a conjecture.
pub fn hunt_one(g: &CubicMultigraph, conjecture: Conjecture) -> Result<HuntRecord> {
    let form = canonical_form(g);
    let skip = |reason: &str| HuntRecord {
        conjecture,
        form: form.clone(),
        verdict: HuntVerdict::Skipped,
        reason: Some(reason.to_string()),
        certificate: None,
    };
    match conjecture {
        Conjecture::Bl3 => {
            if form == canonical_form(&named::petersen()) {
                return Ok(skip("Petersen graph is excluded"));
            }
            if !has_perfect_matching(g) {
                return Ok(skip("no perfect matching"));
            }
            if let Some(bisection) = find_k_weak(g, 4, true)? {
                let OrientabilityCertificate::Orientable(orientation) = check_orientable(g, &bisection)? else {
                    return Err(Error::InternalVerificationFailed("search returned a non-orientable bisection".into()));
                };
                return Ok(HuntRecord {
                    conjecture,
                    form,
                    verdict: HuntVerdict::Holds,
                    reason: None,
                    certificate: Some(HuntCertificate::Bisection { bisection, orientation }),
                });
            }
            let point = FlowPoint::frac(10, 3, 1, 3);
            let verdict = check_flow(g, &point)?;
            Ok(HuntRecord {
                conjecture,
                form,
                verdict: HuntVerdict::Finding,
                reason: Some("no orientable 4-weak bisection".into()),
                certificate: Some(infeasible_certificate(point, verdict)),
            })
        }
        Conjecture::Simple414 => {
            if !g.is_simple() {
                return Ok(skip("has parallel edges"));
            }
            let point = FlowPoint::frac(17, 4, 1, 4);
            let verdict = check_flow(g, &point)?;
            let holds = verdict.is_feasible();
            Ok(HuntRecord {
                conjecture,
                form,
                verdict: if holds { HuntVerdict::Holds } else { HuntVerdict::Finding },
                reason: (!holds).then(|| "no (17/4, 1/4)-flow".to_string()),
                certificate: Some(infeasible_certificate(point, verdict)),
            })
        }
    }
}

/// Checks every graph of a corpus, in parallel, keeping corpus order.
pub fn hunt(corpus: &[CubicMultigraph], conjecture: Conjecture) -> Result<HuntReport> {
    let records: Result<Vec<HuntRecord>> = corpus.par_iter().map(|g| hunt_one(g, conjecture)).collect();
    Ok(HuntReport { records: records? })
}

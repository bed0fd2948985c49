//! Canonical labelling of small multigraphs by individualization and refinement.
//!
//! Equitable refinement splits vertex cells by their multiplicity-weighted neighbor
//! counts into every other cell. When refinement stalls, each vertex of the first
//! non-singleton cell is individualized in turn. Every discrete leaf yields a labelling;
//! the canonical form is the lexicographically smallest relabelled edge multiset.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::CubicMultigraph;

/// Isomorphism-invariant form of a multigraph: vertex count plus the sorted multiset of
/// relabelled edges, each written with the smaller endpoint first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: usize,
    edges: Vec<(u16, u16)>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    /// Rebuilds the graph in canonical labelling.
    pub fn to_graph(&self) -> CubicMultigraph {
        CubicMultigraph::new(self.n, self.edges().collect()).expect("canonical form of a cubic graph")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for CanonicalForm {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        let bad = || crate::Error::MalformedInput(format!("bad canonical form {s:?}"));
        let (n, rest) = s.split_once(':').ok_or_else(bad)?;
        let n = n.parse().map_err(|_| bad())?;
        let mut edges = Vec::new();
        for tok in rest.split(',').filter(|t| !t.is_empty()) {
            let (u, v) = tok.split_once('-').ok_or_else(bad)?;
            edges.push((u.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?));
        }
        Ok(Self { n, edges })
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CanonicalForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Best relabelled edge list so far, with the labelling that produced it.
type Leaf = (Vec<(u16, u16)>, Vec<usize>);

struct Refiner<'a> {
    g: &'a CubicMultigraph,
    best: Option<Leaf>,
}

impl Refiner<'_> {
    /// Splits cells until the partition is equitable. Cell order after a split follows the
    /// sorted signatures, which keeps the procedure label-independent.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let n = self.g.n();
        let mut cell_of = vec![0usize; n];
        loop {
            for (ci, c) in cells.iter().enumerate() {
                for &v in c {
                    cell_of[v] = ci;
                }
            }
            let k = cells.len();
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(n);
            let mut split = false;
            for c in &cells {
                if c.len() == 1 {
                    next.push(c.clone());
                    continue;
                }
                let mut sig: Vec<(Vec<u8>, usize)> = c
                    .iter()
                    .map(|&v| {
                        let mut counts = vec![0u8; k];
                        for w in self.g.neighbors(v) {
                            counts[cell_of[w]] += 1;
                        }
                        (counts, v)
                    })
                    .collect();
                sig.sort();
                let before = next.len();
                let mut start = 0;
                for i in 1..=sig.len() {
                    if i == sig.len() || sig[i].0 != sig[start].0 {
                        next.push(sig[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
                split |= next.len() - before > 1;
            }
            cells = next;
            if !split {
                return cells;
            }
        }
    }

    fn search(&mut self, cells: Vec<Vec<usize>>) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let mut label = vec![0usize; self.g.n()];
            for (i, c) in cells.iter().enumerate() {
                label[c[0]] = i;
            }
            let mut edges: Vec<(u16, u16)> = self
                .g
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (label[u] as u16, label[v] as u16);
                    (a.min(b), a.max(b))
                })
                .collect();
            edges.sort_unstable();
            if self.best.as_ref().is_none_or(|(b, _)| edges < *b) {
                self.best = Some((edges, label));
            }
            return;
        };
        for &v in &cells[target] {
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend(cells[..target].iter().cloned());
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend(cells[target + 1..].iter().cloned());
            self.search(next);
        }
    }
}

/// Returns the canonical form and a labelling `label[old] = new` that realizes it.
pub fn canonical_labeling(g: &CubicMultigraph) -> (CanonicalForm, Vec<usize>) {
    let mut r = Refiner { g, best: None };
    r.search(vec![(0..g.n()).collect()]);
    let (edges, label) = r.best.expect("at least one leaf");
    (CanonicalForm { n: g.n(), edges }, label)
}

pub fn canonical_form(g: &CubicMultigraph) -> CanonicalForm {
    canonical_labeling(g).0
}

pub fn are_isomorphic(a: &CubicMultigraph, b: &CubicMultigraph) -> bool {
    a.n() == b.n() && canonical_form(a) == canonical_form(b)
}

/// Reference canonical form by brute force over all `n!` labellings (`n <= 8`).
pub fn brute_force_form(g: &CubicMultigraph) -> CanonicalForm {
    fn permute(k: usize, perm: &mut Vec<usize>, g: &CubicMultigraph, best: &mut Option<Vec<(u16, u16)>>) {
        if k == perm.len() {
            let mut edges: Vec<(u16, u16)> = g
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (perm[u] as u16, perm[v] as u16);
                    (a.min(b), a.max(b))
                })
                .collect();
            edges.sort_unstable();
            if best.as_ref().is_none_or(|b| edges < *b) {
                *best = Some(edges);
            }
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute(k + 1, perm, g, best);
            perm.swap(k, i);
        }
    }
    assert!(g.n() <= 8, "brute force canonical form is limited to 8 vertices");
    let mut best = None;
    permute(0, &mut (0..g.n()).collect(), g, &mut best);
    CanonicalForm { n: g.n(), edges: best.unwrap() }
}

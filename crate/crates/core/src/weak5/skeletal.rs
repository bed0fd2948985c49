//! The skeletal tree over factor components and its split into pes-subgraphs.

use serde::{Deserialize, Serialize};

use super::factor::{check_factor, FactorDecomposition};
use crate::error::{Error, Result};
use crate::graph::CubicMultigraph;

/// A connected piece of the skeletal tree left after removing the even edges. Every
/// remaining tree edge inside it splits it into two odd parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PesSubgraph {
    /// Factor component holding the smallest vertex.
    pub root: usize,
    pub components: Vec<usize>,
    pub vertices: Vec<usize>,
    /// Skeletal edges inside this piece.
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletalStructure {
    /// Non-factor edges contracting to a spanning tree of the factor components, in
    /// insertion order (critical edges first).
    pub skeletal_edges: Vec<usize>,
    /// Even edges, in removal order.
    pub removed: Vec<usize>,
    pub pes: Vec<PesSubgraph>,
}

impl SkeletalStructure {
    pub fn is_skeletal(&self, e: usize) -> bool {
        self.skeletal_edges.contains(&e)
    }

    pub fn is_removed(&self, e: usize) -> bool {
        self.removed.contains(&e)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Size of the part containing component `from` once tree edge `cut` is deleted.
fn side_size(
    g: &CubicMultigraph,
    f: &FactorDecomposition,
    active: &[(usize, bool)],
    cut: usize,
    from: usize,
) -> usize {
    let nc = f.components.len();
    let mut seen = vec![false; nc];
    seen[from] = true;
    let mut stack = vec![from];
    let mut size = 0;
    while let Some(c) = stack.pop() {
        size += f.components[c].k();
        for &(e, on) in active {
            if !on || e == cut {
                continue;
            }
            let (u, v) = g.edge(e);
            let (a, b) = (f.comp_of(u), f.comp_of(v));
            let next = if a == c { b } else if b == c { a } else { continue };
            if !seen[next] {
                seen[next] = true;
                stack.push(next);
            }
        }
    }
    size
}

/// Labels each factor component with the index of its part under the active edges.
fn parts(g: &CubicMultigraph, f: &FactorDecomposition, active: &[(usize, bool)]) -> Vec<usize> {
    let nc = f.components.len();
    let mut parent: Vec<usize> = (0..nc).collect();
    for &(e, on) in active {
        if on {
            let (u, v) = g.edge(e);
            let (a, b) = (find(&mut parent, f.comp_of(u)), find(&mut parent, f.comp_of(v)));
            parent[a] = b;
        }
    }
    (0..nc).map(|c| find(&mut parent, c)).collect()
}

/// Builds the skeletal tree and strips even edges one at a time, lowest index first.
pub fn build_skeletal(g: &CubicMultigraph, f: &FactorDecomposition) -> Result<SkeletalStructure> {
    let violations = check_factor(g, f)?;
    if let Some(v) = violations.first() {
        return Err(Error::FactorInvalid(format!("condition {}: {}", v.condition, v.message)));
    }
    let nc = f.components.len();
    let mut parent: Vec<usize> = (0..nc).collect();
    let mut skeletal_edges = Vec::new();
    for &e in &f.critical_edges {
        let (u, v) = g.edge(e);
        let (a, b) = (find(&mut parent, f.comp_of(u)), find(&mut parent, f.comp_of(v)));
        if a == b {
            return Err(Error::FactorInvalid(format!("critical edge {e} closes a cycle")));
        }
        parent[a] = b;
        skeletal_edges.push(e);
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if f.in_factor(e) || skeletal_edges.contains(&e) {
            continue;
        }
        let (a, b) = (find(&mut parent, f.comp_of(u)), find(&mut parent, f.comp_of(v)));
        if a != b {
            parent[a] = b;
            skeletal_edges.push(e);
        }
    }
    if skeletal_edges.len() + 1 != nc {
        return Err(Error::NotConnected);
    }

    let mut by_index = skeletal_edges.clone();
    by_index.sort_unstable();
    let mut active: Vec<(usize, bool)> = by_index.iter().map(|&e| (e, true)).collect();
    let mut removed = Vec::new();
    loop {
        let even = active.iter().position(|&(e, on)| {
            on && side_size(g, f, &active, e, f.comp_of(g.edge(e).0)).is_multiple_of(2)
        });
        let Some(i) = even else { break };
        active[i].1 = false;
        removed.push(active[i].0);
        let label = parts(g, f, &active);
        let mut sizes = vec![0usize; nc];
        for c in 0..nc {
            sizes[label[c]] += f.components[c].k();
        }
        if sizes.iter().any(|s| s % 2 == 1) {
            return Err(Error::StructureViolation(format!(
                "removing even edge {} left an odd part",
                active[i].0
            )));
        }
    }

    let label = parts(g, f, &active);
    let mut pes: Vec<PesSubgraph> = Vec::new();
    let mut slot = vec![usize::MAX; nc];
    for v in 0..g.n() {
        let c = f.comp_of(v);
        let l = label[c];
        if slot[l] == usize::MAX {
            slot[l] = pes.len();
            pes.push(PesSubgraph { root: c, components: Vec::new(), vertices: Vec::new(), edges: Vec::new() });
        }
        let p = &mut pes[slot[l]];
        p.vertices.push(v);
        if !p.components.contains(&c) {
            p.components.push(c);
        }
    }
    for p in &mut pes {
        p.components.sort_unstable();
    }
    for &(e, on) in &active {
        if on {
            pes[slot[label[f.comp_of(g.edge(e).0)]]].edges.push(e);
        }
    }
    Ok(SkeletalStructure { skeletal_edges, removed, pes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::weak5::factor::{enumerate_factors, find_factor};

    #[test]
    fn single_component_has_one_pes() {
        let g = named::theta();
        let f = find_factor(&g).unwrap().unwrap();
        let s = build_skeletal(&g, &f).unwrap();
        assert!(s.skeletal_edges.is_empty());
        assert_eq!(s.pes.len(), 1);
        assert_eq!(s.pes[0].vertices, vec![0, 1]);
    }

    #[test]
    fn pes_pieces_are_even_and_edges_odd() {
        for g in [named::petersen(), named::bridged_k4_pair(), named::prism(4), named::k33()] {
            for f in enumerate_factors(&g).unwrap() {
                let s = build_skeletal(&g, &f).unwrap();
                assert_eq!(s.skeletal_edges.len() + 1, f.components.len());
                let total: usize = s.pes.iter().map(|p| p.vertices.len()).sum();
                assert_eq!(total, g.n());
                for p in &s.pes {
                    assert_eq!(p.vertices.len() % 2, 0);
                    assert_eq!(p.vertices[0], f.components[p.root].vertices.iter().copied().min().unwrap());
                }
                assert!(f.critical_edges.iter().all(|e| s.is_skeletal(*e)));
            }
        }
    }
}

//! Spanning path/cycle factors with the adjacency restrictions the coloring relies on.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::CubicMultigraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    Path,
    EvenCycle,
    OddCycle,
}

/// A path or cycle of the factor. `vertices` runs `v1..vk`; `edges[i]` joins
/// `vertices[i]` and `vertices[i+1]`, and for cycles the last edge closes `vk -> v1`.
/// The external vertices are always `v1` and `vk`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorComponent {
    pub kind: ComponentKind,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl FactorComponent {
    pub fn k(&self) -> usize {
        self.vertices.len()
    }

    pub fn externals(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().expect("nonempty"))
    }

    pub fn is_cycle(&self) -> bool {
        self.kind != ComponentKind::Path
    }

    pub fn is_odd_path(&self) -> bool {
        self.kind == ComponentKind::Path && self.k() % 2 == 1
    }
}

/// A factor with its external-vertex marks and critical edges. The lookup tables are
/// not serialized; [`FactorDecomposition::reindexed`] rebuilds them.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FactorDecomposition {
    pub components: Vec<FactorComponent>,
    /// Edges from an external vertex of an odd cycle to a vertex off that cycle.
    pub critical_edges: Vec<usize>,
    #[serde(skip)]
    comp_of: Vec<usize>,
    #[serde(skip)]
    pos: Vec<usize>,
    #[serde(skip)]
    in_factor: Vec<bool>,
}

impl PartialEq for FactorDecomposition {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components && self.critical_edges == other.critical_edges
    }
}

impl Eq for FactorDecomposition {}

impl FactorDecomposition {
    /// Builds the decomposition of a factor given as an edge subset, marking externals
    /// deterministically. Fails if some vertex has factor degree outside `{1, 2}`.
    pub fn from_edges(g: &CubicMultigraph, factor: &[usize]) -> Result<Self> {
        let n = g.n();
        let mut in_factor = vec![false; g.m()];
        let mut deg = vec![0usize; n];
        for &e in factor {
            if e >= g.m() || in_factor[e] {
                return Err(Error::Inconsistent(format!("factor edge {e} repeated or out of range")));
            }
            in_factor[e] = true;
            let (u, v) = g.edge(e);
            deg[u] += 1;
            deg[v] += 1;
        }
        if let Some(v) = (0..n).find(|&v| deg[v] == 0 || deg[v] > 2) {
            return Err(Error::Inconsistent(format!("vertex {v} has factor degree {}", deg[v])));
        }
        let fedges = |v: usize| -> Vec<usize> {
            let mut es: Vec<usize> = g.incident(v).into_iter().filter(|&e| in_factor[e]).collect();
            es.dedup();
            es
        };
        let mut done = vec![false; n];
        let mut components = Vec::new();
        // paths first from their smaller endpoint, then cycles
        for v in 0..n {
            if done[v] || deg[v] != 1 {
                continue;
            }
            let (vertices, edges) = walk(g, v, fedges(v)[0], &fedges, &mut done);
            let far = *vertices.last().expect("path");
            let (vertices, edges) = if far < v { reverse_path(vertices, edges) } else { (vertices, edges) };
            components.push(FactorComponent { kind: ComponentKind::Path, vertices, edges });
        }
        for v in 0..n {
            if done[v] {
                continue;
            }
            // v is the smallest vertex of a new cycle
            let mut cycle_edges = fedges(v);
            cycle_edges.sort_unstable();
            let (mut vertices, mut edges) = walk(g, v, cycle_edges[1], &fedges, &mut done);
            if vertices.len() % 2 == 0 {
                // v1 = v, vk its neighbor through the lower-index edge
                components.push(FactorComponent { kind: ComponentKind::EvenCycle, vertices, edges });
                continue;
            }
            let simple = edges.iter().copied().filter(|&e| {
                let (a, b) = g.edge(e);
                g.multiplicity(a, b) == 1
            });
            let chosen = simple.min().ok_or_else(|| {
                Error::Inconsistent(format!("odd cycle through {v} has no simple edge"))
            })?;
            let (a, b) = g.edge(chosen);
            let (v1, vk) = (a.min(b), a.max(b));
            // restart the walk at v1 leaving away from vk
            for &u in &vertices {
                done[u] = false;
            }
            let away = fedges(v1).into_iter().find(|&e| e != chosen).expect("cycle degree 2");
            (vertices, edges) = walk(g, v1, away, &fedges, &mut done);
            debug_assert_eq!(*vertices.last().unwrap(), vk);
            components.push(FactorComponent { kind: ComponentKind::OddCycle, vertices, edges });
        }
        Ok(Self::assemble(g, components, in_factor))
    }

    fn assemble(g: &CubicMultigraph, components: Vec<FactorComponent>, in_factor: Vec<bool>) -> Self {
        let n = g.n();
        let mut comp_of = vec![usize::MAX; n];
        let mut pos = vec![usize::MAX; n];
        for (c, comp) in components.iter().enumerate() {
            for (i, &v) in comp.vertices.iter().enumerate() {
                comp_of[v] = c;
                pos[v] = i;
            }
        }
        let mut critical_edges = Vec::new();
        for comp in components.iter().filter(|c| c.kind == ComponentKind::OddCycle) {
            let (v1, vk) = comp.externals();
            for x in [v1, vk] {
                for e in g.incident(x) {
                    if !in_factor[e] && comp_of[g.other_end(e, x)] != comp_of[x] && !critical_edges.contains(&e) {
                        critical_edges.push(e);
                    }
                }
            }
        }
        critical_edges.sort_unstable();
        Self { components, critical_edges, comp_of, pos, in_factor }
    }

    /// Rebuilds the lookup tables of a deserialized decomposition.
    pub fn reindexed(mut self, g: &CubicMultigraph) -> Result<Self> {
        let mut in_factor = vec![false; g.m()];
        for comp in &self.components {
            for &e in &comp.edges {
                if e >= g.m() {
                    return Err(Error::Inconsistent(format!("edge {e} out of range")));
                }
                in_factor[e] = true;
            }
        }
        let components = std::mem::take(&mut self.components);
        let rebuilt = Self::assemble(g, components, in_factor);
        if rebuilt.comp_of.contains(&usize::MAX) {
            return Err(Error::Inconsistent("components do not cover every vertex".into()));
        }
        Ok(rebuilt)
    }

    pub fn comp_of(&self, v: usize) -> usize {
        self.comp_of[v]
    }

    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn in_factor(&self, e: usize) -> bool {
        self.in_factor[e]
    }

    pub fn is_external(&self, v: usize) -> bool {
        let c = &self.components[self.comp_of[v]];
        let (a, b) = c.externals();
        v == a || v == b
    }

    pub fn factor_edges(&self) -> Vec<usize> {
        (0..self.in_factor.len()).filter(|&e| self.in_factor[e]).collect()
    }
}

fn walk(
    g: &CubicMultigraph,
    start: usize,
    first: usize,
    fedges: &dyn Fn(usize) -> Vec<usize>,
    done: &mut [bool],
) -> (Vec<usize>, Vec<usize>) {
    let mut vertices = vec![start];
    let mut edges = Vec::new();
    done[start] = true;
    let mut v = start;
    let mut e = first;
    loop {
        let w = g.other_end(e, v);
        edges.push(e);
        if done[w] {
            // closed a cycle back at start
            return (vertices, edges);
        }
        done[w] = true;
        vertices.push(w);
        match fedges(w).into_iter().find(|&f| f != e) {
            Some(f) => {
                v = w;
                e = f;
            }
            None => return (vertices, edges),
        }
    }
}

fn reverse_path(mut vertices: Vec<usize>, mut edges: Vec<usize>) -> (Vec<usize>, Vec<usize>) {
    vertices.reverse();
    edges.reverse();
    (vertices, edges)
}

/// A broken structural requirement of a factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorViolation {
    /// `0` for shape problems, `1..=5` for the adjacency conditions.
    pub condition: u8,
    pub vertices: Vec<usize>,
    pub message: String,
}

/// Lists every violated requirement; empty means the factor is usable.
///
/// 1. odd paths have non-adjacent endpoints;
/// 2. endpoints of distinct paths are non-adjacent;
/// 3. a chord of an odd cycle is parallel to a cycle edge;
/// 4. an off-cycle neighbor of an odd-cycle vertex is internal to an odd path;
/// 5. an odd path meets at most one odd-cycle vertex.
pub fn check_factor(g: &CubicMultigraph, f: &FactorDecomposition) -> Result<Vec<FactorViolation>> {
    let n = g.n();
    if f.comp_of.len() != n || f.in_factor.len() != g.m() {
        return Err(Error::Inconsistent("decomposition built for another graph".into()));
    }
    let mut out = Vec::new();
    let mut shape = |vertices: Vec<usize>, message: String| {
        out.push(FactorViolation { condition: 0, vertices, message });
    };
    let mut covered = vec![0usize; n];
    for comp in &f.components {
        let k = comp.k();
        for &v in &comp.vertices {
            covered[v] += 1;
        }
        let expected_edges = if comp.is_cycle() { k } else { k - 1 };
        if k < 2 || comp.edges.len() != expected_edges {
            shape(comp.vertices.clone(), "component has the wrong number of edges".into());
            continue;
        }
        for (i, &e) in comp.edges.iter().enumerate() {
            let (a, b) = (comp.vertices[i], comp.vertices[(i + 1) % k]);
            let (u, v) = g.edge(e);
            if !((u, v) == (a, b) || (u, v) == (b, a)) {
                shape(vec![a, b], format!("edge {e} does not join consecutive vertices"));
            }
        }
        let parity_ok = match comp.kind {
            ComponentKind::Path => true,
            ComponentKind::EvenCycle => k % 2 == 0,
            ComponentKind::OddCycle => k % 2 == 1,
        };
        if !parity_ok {
            shape(comp.vertices.clone(), "cycle parity does not match its tag".into());
        }
        if comp.kind == ComponentKind::OddCycle {
            let (v1, vk) = comp.externals();
            if g.multiplicity(v1, vk) != 1 {
                shape(vec![v1, vk], "odd-cycle externals are not joined by a simple edge".into());
            }
        }
    }
    if let Some(v) = (0..n).find(|&v| covered[v] != 1) {
        return Err(Error::Inconsistent(format!("vertex {v} lies in {} components", covered[v])));
    }

    let comp = |v: usize| &f.components[f.comp_of[v]];
    let is_path_end = |v: usize| {
        let c = comp(v);
        c.kind == ComponentKind::Path && (v == c.vertices[0] || v == *c.vertices.last().unwrap())
    };
    for c in &f.components {
        if c.is_odd_path() && g.multiplicity(c.vertices[0], *c.vertices.last().unwrap()) > 0 {
            out.push(FactorViolation {
                condition: 1,
                vertices: vec![c.vertices[0], *c.vertices.last().unwrap()],
                message: "odd path with adjacent endpoints".into(),
            });
        }
    }
    for (u, v) in g.edges().iter().copied() {
        if f.comp_of[u] != f.comp_of[v] && is_path_end(u) && is_path_end(v) {
            out.push(FactorViolation {
                condition: 2,
                vertices: vec![u, v],
                message: "endpoints of two paths are adjacent".into(),
            });
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if f.in_factor[e] || f.comp_of[u] != f.comp_of[v] {
            continue;
        }
        let c = comp(u);
        if c.kind == ComponentKind::OddCycle {
            let k = c.k();
            let d = (f.pos[u] + k - f.pos[v]) % k;
            if d != 1 && d != k - 1 {
                out.push(FactorViolation {
                    condition: 3,
                    vertices: vec![u, v],
                    message: "odd cycle has a chord between non-consecutive vertices".into(),
                });
            }
        }
    }
    for c in f.components.iter().filter(|c| c.kind == ComponentKind::OddCycle) {
        for &y in &c.vertices {
            for x in g.neighbors(y) {
                if f.comp_of[x] == f.comp_of[y] {
                    continue;
                }
                let cx = comp(x);
                if !(cx.is_odd_path() && !is_path_end(x)) {
                    out.push(FactorViolation {
                        condition: 4,
                        vertices: vec![y, x],
                        message: "odd-cycle neighbor is not an internal vertex of an odd path".into(),
                    });
                }
            }
        }
    }
    for c in f.components.iter().filter(|c| c.is_odd_path()) {
        let mut touched: Vec<usize> = Vec::new();
        for &x in &c.vertices {
            for y in g.neighbors(x) {
                if comp(y).kind == ComponentKind::OddCycle && !touched.contains(&y) {
                    touched.push(y);
                }
            }
        }
        if touched.len() > 1 {
            out.push(FactorViolation {
                condition: 5,
                vertices: touched,
                message: "odd path meets more than one odd-cycle vertex".into(),
            });
        }
    }
    Ok(out)
}

/// Vertex-by-vertex enumeration of spanning subgraphs with all degrees in `{1, 2}`,
/// pruning partial choices that already break a condition.
struct FactorSearch<'a> {
    g: &'a CubicMultigraph,
    order: Vec<usize>,
    deg: Vec<u8>,
    decided: Vec<bool>,
    taken: Vec<bool>,
    trail: Vec<usize>,
    nodes: u64,
    budget: u64,
    low_first: bool,
    mark: std::cell::RefCell<(u32, Vec<u32>)>,
}

/// A finished factor component seen during the search.
enum Piece {
    Path { ends: [usize; 2], k: usize },
    Cycle { vertices: Vec<usize> },
}

impl FactorSearch<'_> {
    /// Vertices are visited breadth-first from `root`; `low_first` tries factor degree 1
    /// before 2 at each vertex.
    fn new(g: &CubicMultigraph, budget: u64, root: usize, low_first: bool) -> FactorSearch<'_> {
        let n = g.n();
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for s in (root..n).chain(0..root) {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            order.push(s);
            let mut i = order.len() - 1;
            while i < order.len() {
                let v = order[i];
                i += 1;
                for w in g.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        order.push(w);
                    }
                }
            }
        }
        FactorSearch {
            g,
            order,
            deg: vec![0; n],
            decided: vec![false; g.m()],
            taken: vec![false; g.m()],
            trail: Vec::new(),
            nodes: 0,
            budget,
            low_first,
            mark: std::cell::RefCell::new((0, vec![0; n])),
        }
    }

    fn decide(&mut self, e: usize, take: bool) {
        self.decided[e] = true;
        self.taken[e] = take;
        self.trail.push(e);
        if take {
            let (u, v) = self.g.edge(e);
            self.deg[u] += 1;
            self.deg[v] += 1;
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().expect("trail");
            if self.taken[e] {
                let (u, v) = self.g.edge(e);
                self.deg[u] -= 1;
                self.deg[v] -= 1;
            }
            self.decided[e] = false;
            self.taken[e] = false;
        }
    }

    fn is_final(&self, v: usize) -> bool {
        self.g.incident(v).iter().all(|&e| self.decided[e])
    }

    fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.g
            .incident(v)
            .into_iter()
            .filter(|&e| self.decided[e] && !self.taken[e])
            .map(move |e| self.g.other_end(e, v))
    }

    /// The component through `v` if all its vertices are final.
    fn piece(&self, v: usize) -> Option<Piece> {
        let mut guard = self.mark.borrow_mut();
        let (stamp, marks) = &mut *guard;
        *stamp += 1;
        marks[v] = *stamp;
        let mut seen = vec![v];
        let mut i = 0;
        while i < seen.len() {
            let x = seen[i];
            i += 1;
            if !self.is_final(x) {
                return None;
            }
            for e in self.g.incident(x) {
                if self.taken[e] {
                    let y = self.g.other_end(e, x);
                    if marks[y] != *stamp {
                        marks[y] = *stamp;
                        seen.push(y);
                    }
                }
            }
        }
        let ends: Vec<usize> = seen.iter().copied().filter(|&x| self.deg[x] == 1).collect();
        Some(if ends.is_empty() {
            Piece::Cycle { vertices: seen }
        } else {
            Piece::Path { ends: [ends[0], ends[1]], k: seen.len() }
        })
    }

    fn on_odd_cycle(&self, v: usize) -> bool {
        self.deg[v] == 2 && matches!(self.piece(v), Some(Piece::Cycle { vertices }) if vertices.len() % 2 == 1)
    }

    /// Whether the finished structure around `v` already breaks a condition.
    fn clash(&self, v: usize) -> bool {
        if !self.is_final(v) {
            return false;
        }
        match self.deg[v] {
            0 => true,
            1 => {
                // a path end may not touch another path end, nor an odd cycle
                let piece = self.piece(v);
                self.out_neighbors(v).any(|u| {
                    if self.on_odd_cycle(u) {
                        return true;
                    }
                    if !(self.deg[u] == 1 && self.is_final(u)) {
                        return false;
                    }
                    match &piece {
                        Some(Piece::Path { ends, k }) => ends.contains(&u) && k % 2 == 1 || !ends.contains(&u),
                        _ => false,
                    }
                })
            }
            _ => match self.piece(v) {
                Some(Piece::Cycle { vertices }) if vertices.len() % 2 == 1 => vertices.iter().any(|&y| {
                    self.out_neighbors(y).any(|x| {
                        if vertices.contains(&x) {
                            // chords must run parallel to a cycle edge
                            return !self.g.incident(y).iter().any(|&e| self.taken[e] && self.g.other_end(e, y) == x);
                        }
                        match self.piece(x) {
                            Some(Piece::Cycle { .. }) => true,
                            Some(Piece::Path { ends, k }) => k % 2 == 0 || ends.contains(&x),
                            None => self.deg[x] == 1 && self.is_final(x),
                        }
                    })
                }),
                _ => false,
            },
        }
    }

    /// Visits valid factors in search order until `visit` returns `true`. Returns
    /// `Err(())` when the node budget runs out.
    fn run(&mut self, i: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> std::result::Result<bool, ()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        let g = self.g;
        if i == self.order.len() {
            let chosen: Vec<usize> = (0..g.m()).filter(|&e| self.taken[e]).collect();
            return Ok(visit(&chosen));
        }
        let v = self.order[i];
        let mut open: Vec<usize> = g.incident(v).into_iter().filter(|&e| !self.decided[e]).collect();
        open.dedup();
        let d = self.deg[v] as usize;
        let targets = if self.low_first { [1usize, 2] } else { [2, 1] };
        for target in targets {
            if target < d || target - d > open.len() {
                continue;
            }
            for pick in subsets(open.len(), target - d) {
                let mark = self.trail.len();
                let mut ok = true;
                for (j, &e) in open.iter().enumerate() {
                    let take = pick >> j & 1 == 1;
                    if take && self.deg[g.other_end(e, v)] >= 2 {
                        ok = false;
                        break;
                    }
                    self.decide(e, take);
                }
                if ok {
                    let mut touched = vec![v];
                    for w in g.neighbors(v) {
                        if self.deg[w] == 2 {
                            for e in g.incident(w) {
                                if !self.decided[e] {
                                    self.decide(e, false);
                                }
                            }
                        }
                        touched.push(w);
                        touched.extend(g.neighbors(w));
                    }
                    touched.sort_unstable();
                    touched.dedup();
                    if !touched.iter().any(|&t| self.clash(t)) {
                        let stop = self.run(i + 1, visit);
                        if stop != Ok(false) {
                            self.undo_to(mark);
                            return stop;
                        }
                    }
                }
                self.undo_to(mark);
            }
        }
        Ok(false)
    }
}

/// Masks over `len` bits with exactly `size` bits set, in increasing order.
fn subsets(len: usize, size: usize) -> impl Iterator<Item = u32> {
    (0u32..1 << len).filter(move |m| m.count_ones() as usize == size)
}

/// Default node budget of [`find_factor`].
pub const FACTOR_BUDGET: u64 = 5_000_000;

/// First valid factor in search order, or `None` if the search is exhausted or the
/// budget runs out.
pub fn find_factor(g: &CubicMultigraph) -> Result<Option<FactorDecomposition>> {
    find_factor_with_budget(g, FACTOR_BUDGET)
}

pub fn find_factor_with_budget(g: &CubicMultigraph, budget: u64) -> Result<Option<FactorDecomposition>> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut found = None;
    let mut visit = |edges: &[usize]| {
        let f = FactorDecomposition::from_edges(g, edges).expect("degrees are 1 or 2");
        if check_factor(g, &f).expect("consistent").is_empty() {
            found = Some(f);
            true
        } else {
            false
        }
    };
    // restarts alternate the degree preference and rotate the root, with growing budgets
    let mut spent = 0u64;
    let mut slice = 2_000u64;
    let mut attempt = 0;
    while spent < budget {
        let this = slice.min(budget - spent);
        let mut search = FactorSearch::new(g, this, (attempt / 2) % g.n(), attempt % 2 == 0);
        if search.run(0, &mut visit).is_ok() {
            // found, or the whole space is exhausted
            break;
        }
        spent += this;
        attempt += 1;
        if attempt % 2 == 0 {
            slice = slice.saturating_mul(2);
        }
    }
    Ok(found)
}

/// Every valid factor (`n <= 12`), in search order.
pub fn enumerate_factors(g: &CubicMultigraph) -> Result<Vec<FactorDecomposition>> {
    if g.n() > 12 {
        return Err(Error::TooLarge { n: g.n(), limit: 12 });
    }
    let mut all = Vec::new();
    let mut visit = |edges: &[usize]| {
        let f = FactorDecomposition::from_edges(g, edges).expect("degrees are 1 or 2");
        if check_factor(g, &f).expect("consistent").is_empty() {
            all.push(f);
        }
        false
    };
    let _ = FactorSearch::new(g, u64::MAX, 0, true).run(0, &mut visit);
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn theta_factor_is_one_edge() {
        let g = named::theta();
        let f = find_factor(&g).unwrap().unwrap();
        assert_eq!(f.components.len(), 1);
        assert_eq!(f.components[0].kind, ComponentKind::Path);
        assert_eq!(f.components[0].vertices, vec![0, 1]);
        assert_eq!(enumerate_factors(&g).unwrap().len(), 6);
        assert!(f.critical_edges.is_empty());
        assert!(check_factor(&g, &f).unwrap().is_empty());
    }

    #[test]
    fn k4_factors_have_no_odd_parts() {
        let g = named::k4();
        let all = enumerate_factors(&g).unwrap();
        assert!(!all.is_empty());
        for f in &all {
            assert!(f.components.iter().all(|c| c.kind != ComponentKind::OddCycle && !c.is_odd_path()));
        }
    }

    #[test]
    fn petersen_factor_validates() {
        let g = named::petersen();
        let f = find_factor(&g).unwrap().unwrap();
        assert!(check_factor(&g, &f).unwrap().is_empty());
        let covered: usize = f.components.iter().map(|c| c.k()).sum();
        assert_eq!(covered, 10);
    }

    #[test]
    fn triangle_next_to_path_end_breaks_condition_4() {
        // prism: triangles 0-1-2 and 3-4-5 with rungs i - i+3
        let g = named::prism(3);
        let e = |u: usize, v: usize| g.edges().iter().position(|&x| x == (u, v) || x == (v, u)).unwrap();
        let f = FactorDecomposition::from_edges(&g, &[e(0, 1), e(1, 2), e(0, 2), e(3, 4), e(4, 5)]).unwrap();
        let conds: Vec<u8> = check_factor(&g, &f).unwrap().iter().map(|v| v.condition).collect();
        assert!(conds.contains(&4));
    }

    #[test]
    fn adjacent_path_ends_break_condition_2() {
        let g = named::k33();
        // K33 parts {0,1,2} / {3,4,5}; paths 0-3 and 1-4 plus 2-5 leave ends 0 and 4 adjacent
        let e = |u: usize, v: usize| g.edges().iter().position(|&x| x == (u, v) || x == (v, u)).unwrap();
        let f = FactorDecomposition::from_edges(&g, &[e(0, 3), e(1, 4), e(2, 5)]).unwrap();
        let conds: Vec<u8> = check_factor(&g, &f).unwrap().iter().map(|v| v.condition).collect();
        assert!(conds.contains(&2));
    }

    #[test]
    fn odd_cycle_externals_use_a_simple_edge() {
        // triangle 0-1-2 with 0=1 doubled, bridge 2-3, mirror triangle 3-4-5 with 4=5 doubled
        let g = named::bridged_digon_triangles();
        for f in enumerate_factors(&g).unwrap() {
            for c in f.components.iter().filter(|c| c.kind == ComponentKind::OddCycle) {
                let (a, b) = c.externals();
                assert_eq!(g.multiplicity(a, b), 1);
            }
        }
    }

    fn brute_force_factors(g: &CubicMultigraph) -> Vec<Vec<usize>> {
        let m = g.m();
        let mut out = Vec::new();
        for mask in 0u32..1 << m {
            let edges: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
            let Ok(f) = FactorDecomposition::from_edges(g, &edges) else { continue };
            if check_factor(g, &f).unwrap().is_empty() {
                out.push(edges);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn pruned_search_finds_every_valid_factor() {
        for n in [2, 4, 6, 8] {
            for g in crate::generate::generate_cubic(n, true).unwrap() {
                let mut found: Vec<Vec<usize>> =
                    enumerate_factors(&g).unwrap().iter().map(|f| f.factor_edges()).collect();
                found.sort();
                assert_eq!(found, brute_force_factors(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn disconnected_input_rejected() {
        let mut edges = named::k4().edges().to_vec();
        edges.extend(named::k4().edges().iter().map(|&(u, v)| (u + 4, v + 4)));
        let g = CubicMultigraph::new(8, edges).unwrap();
        assert_eq!(find_factor(&g), Err(Error::NotConnected));
    }
}

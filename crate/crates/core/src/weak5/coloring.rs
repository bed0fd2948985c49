//! Recursive coloring of pes-subgraphs and the merge across removed even edges.

use serde::{Deserialize, Serialize};

use super::factor::{ComponentKind, FactorDecomposition};
use super::skeletal::SkeletalStructure;
use crate::error::{Error, Result};
use crate::graph::CubicMultigraph;

/// How much checking runs during coloring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyDepth {
    /// Final checks only.
    #[default]
    Release,
    /// Every peg set is checked as it is colored.
    Debug,
}

/// Counters for one construction. Only the debug depth fills the check counters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weak5Stats {
    pub pegs: usize,
    pub parity_checks: usize,
    pub bicritical_checks: usize,
    pub interval_checks: usize,
    pub full_checks: usize,
    pub even_removals: usize,
    pub critical_flips: usize,
    pub fallbacks: usize,
}

impl Weak5Stats {
    pub fn absorb(&mut self, other: &Weak5Stats) {
        self.pegs += other.pegs;
        self.parity_checks += other.parity_checks;
        self.bicritical_checks += other.bicritical_checks;
        self.interval_checks += other.interval_checks;
        self.full_checks += other.full_checks;
        self.even_removals += other.even_removals;
        self.critical_flips += other.critical_flips;
        self.fallbacks += other.fallbacks;
    }
}

/// Rooted form of the pes-subgraphs: each non-root factor component hangs from its
/// parent by a stem edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchForest {
    pub roots: Vec<usize>,
    pub parent: Vec<Option<usize>>,
    pub stem: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
}

impl BranchForest {
    pub fn new(g: &CubicMultigraph, f: &FactorDecomposition, s: &SkeletalStructure) -> Self {
        let nc = f.components.len();
        let mut parent = vec![None; nc];
        let mut stem = vec![None; nc];
        let mut children = vec![Vec::new(); nc];
        let mut roots = Vec::new();
        for p in &s.pes {
            roots.push(p.root);
            let mut seen = vec![false; nc];
            seen[p.root] = true;
            let mut queue = vec![p.root];
            let mut i = 0;
            while i < queue.len() {
                let c = queue[i];
                i += 1;
                for &e in &p.edges {
                    let (u, v) = g.edge(e);
                    let (a, b) = (f.comp_of(u), f.comp_of(v));
                    let d = if a == c { b } else if b == c { a } else { continue };
                    if !seen[d] {
                        seen[d] = true;
                        parent[d] = Some(c);
                        stem[d] = Some(e);
                        children[c].push(d);
                        queue.push(d);
                    }
                }
            }
        }
        Self { roots, parent, stem, children }
    }
}

#[derive(Clone, Copy, Debug)]
enum LimbKind {
    Child(usize),
    Stem,
}

#[derive(Clone, Copy, Debug)]
struct Limb {
    heel: usize,
    edge: usize,
    kind: LimbKind,
}

struct Colorer<'a> {
    g: &'a CubicMultigraph,
    f: &'a FactorDecomposition,
    forest: BranchForest,
    active: Vec<bool>,
    subtree: Vec<Vec<usize>>,
    depth: VerifyDepth,
    stats: &'a mut Weak5Stats,
    colors: Vec<u8>,
}

impl Colorer<'_> {
    fn critical_at(&self, x: usize) -> Option<usize> {
        let c = self.f.comp_of(x);
        self.g
            .incident(x)
            .into_iter()
            .find(|&e| !self.f.in_factor(e) && self.f.comp_of(self.g.other_end(e, x)) != c)
    }

    fn bicritical(&self, c: usize) -> bool {
        let comp = &self.f.components[c];
        if comp.kind != ComponentKind::OddCycle {
            return false;
        }
        let (v1, vk) = comp.externals();
        [v1, vk].iter().all(|&x| self.critical_at(x).is_some_and(|e| self.active[e]))
    }

    fn fill_subtrees(&mut self, c: usize) {
        let mut vs = self.f.components[c].vertices.clone();
        for d in self.forest.children[c].clone() {
            self.fill_subtrees(d);
            vs.extend_from_slice(&self.subtree[d]);
        }
        self.subtree[c] = vs;
    }

    fn flip(&mut self, d: usize) {
        for i in 0..self.subtree[d].len() {
            let v = self.subtree[d][i];
            self.colors[v] = 3 - self.colors[v];
        }
    }

    fn top_color(&self, d: usize) -> Result<u8> {
        let ones = self.subtree[d].iter().filter(|&&v| self.colors[v] == 1).count();
        let twos = self.subtree[d].len() - ones;
        match ones as i64 - twos as i64 {
            1 => Ok(1),
            -1 => Ok(2),
            other => Err(Error::StructureViolation(format!("limb top has imbalance {other}"))),
        }
    }

    /// Colors the peg set with base `c`: the subtree of `c`, plus the lower end of its
    /// stem when `c` is not a root.
    fn color(&mut self, c: usize) -> Result<()> {
        let g = self.g;
        let children = self.forest.children[c].clone();
        for &d in &children {
            self.color(d)?;
        }
        self.stats.pegs += 1;
        let comp = self.f.components[c].clone();
        let stem = self.forest.stem[c];
        let mut limbs: Vec<Limb> = children
            .iter()
            .map(|&d| {
                let e = self.forest.stem[d].expect("child has a stem");
                let (u, v) = g.edge(e);
                let heel = if self.f.comp_of(u) == c { u } else { v };
                Limb { heel, edge: e, kind: LimbKind::Child(d) }
            })
            .collect();
        let mut lower = None;
        if let Some(e) = stem {
            let (u, v) = g.edge(e);
            let (heel, low) = if self.f.comp_of(u) == c { (u, v) } else { (v, u) };
            limbs.push(Limb { heel, edge: e, kind: LimbKind::Stem });
            lower = Some(low);
        }

        let bicritical = self.bicritical(c);
        let mut order = comp.vertices.clone();
        if bicritical && stem.is_some() && stem == self.critical_at(order[0]) {
            order.reverse();
        }
        let mut at = vec![usize::MAX; g.n()];
        for (i, &v) in order.iter().enumerate() {
            at[v] = i;
        }
        limbs.sort_by_key(|l| (at[l.heel], l.edge));
        let (k, m) = (order.len(), limbs.len());
        self.stats.parity_checks += 1;
        if m % 2 != k % 2 {
            return Err(Error::StructureViolation(format!(
                "peg set at component {c} has {m} limbs on a base of {k} vertices"
            )));
        }

        let counter_parity = |j: usize| if j % 2 == 1 { 2 } else { 1 };
        let parity = |j: usize| if j % 2 == 1 { 1 } else { 2 };
        let mut targets: Vec<u8> = (1..=m).map(counter_parity).collect();
        if bicritical {
            let first = limbs[0];
            let LimbKind::Child(d) = first.kind else {
                return Err(Error::StructureViolation(format!("first limb of odd cycle {c} is its stem")));
            };
            if first.heel != order[0] || Some(first.edge) != self.critical_at(order[0]) {
                return Err(Error::StructureViolation(format!("first limb of odd cycle {c} is not critical")));
            }
            let x = g.other_end(first.edge, first.heel);
            let top = self.top_color(d)?;
            let t1 = if self.colors[x] == 2 { top } else { 3 - top };
            for (j, t) in targets.iter_mut().enumerate().skip(1) {
                *t = parity(j + 1);
            }
            targets[0] = t1;
            targets[m - 1] = 3 - t1;
        }
        let mut lower_color = None;
        for (limb, &t) in limbs.iter().zip(&targets) {
            match limb.kind {
                LimbKind::Child(d) => {
                    if self.top_color(d)? != t {
                        self.flip(d);
                    }
                }
                LimbKind::Stem => lower_color = Some(t),
            }
        }
        for (i, &v) in order.iter().enumerate() {
            self.colors[v] = parity(i + 1);
        }
        if self.depth == VerifyDepth::Debug {
            self.verify(c, &order, &limbs, lower.zip(lower_color))?;
        }
        Ok(())
    }

    /// Checks a freshly colored peg set: balance, the bi-critical rule for every odd cycle
    /// inside, and orientability via intervals and (when small) all subsets.
    fn verify(&mut self, c: usize, order: &[usize], limbs: &[Limb], lower: Option<(usize, u8)>) -> Result<()> {
        let g = self.g;
        let n = g.n();
        let mut vt = self.subtree[c].clone();
        let mut col: Vec<u8> = vt.iter().map(|&v| self.colors[v]).collect();
        if let Some((low, lc)) = lower {
            vt.push(low);
            col.push(lc);
        }
        let t = vt.len();
        let mut loc = vec![usize::MAX; n];
        for (i, &v) in vt.iter().enumerate() {
            loc[v] = i;
        }
        let mut et: Vec<(usize, usize)> = Vec::new();
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if loc[u] == usize::MAX || loc[v] == usize::MAX {
                continue;
            }
            let in_subtree = |x: usize| lower.is_none_or(|(low, _)| x != low);
            let inner = in_subtree(u) && in_subtree(v) && (self.f.in_factor(e) || self.active[e]);
            if inner || self.forest.stem[c] == Some(e) {
                et.push((loc[u], loc[v]));
            }
        }
        let ones = col.iter().filter(|&&x| x == 1).count();
        if 2 * ones != t {
            return Err(Error::StructureViolation(format!("peg set at {c} is not balanced")));
        }

        let comps: Vec<usize> = {
            let mut cs: Vec<usize> = self.subtree[c].iter().map(|&v| self.f.comp_of(v)).collect();
            cs.sort_unstable();
            cs.dedup();
            cs
        };
        for &cc in &comps {
            if !self.bicritical(cc) {
                continue;
            }
            self.stats.bicritical_checks += 1;
            let (v1, vk) = self.f.components[cc].externals();
            let ok = [v1, vk].iter().any(|&x| {
                let e = self.critical_at(x).expect("bi-critical");
                Some(e) != self.forest.stem[cc] && {
                    let (u, v) = g.edge(e);
                    self.colors[u] != self.colors[v]
                }
            });
            if !ok {
                return Err(Error::StructureViolation(format!(
                    "odd cycle {cc} has no bichromatic critical edge off its stem"
                )));
            }
        }

        let holds = |member: &[bool]| {
            let d = et.iter().filter(|&&(a, b)| member[a] != member[b]).count() as i64;
            let delta: i64 = (0..t).filter(|&i| member[i]).map(|i| if col[i] == 1 { 1 } else { -1 }).sum();
            d >= delta.abs()
        };

        let k = order.len();
        let mut pieces: Vec<Vec<usize>> = order.iter().map(|&v| vec![loc[v]]).collect();
        for l in limbs {
            let at = order.iter().position(|&v| v == l.heel).expect("heel on base");
            match l.kind {
                LimbKind::Child(d) => pieces[at].extend(self.subtree[d].iter().map(|&v| loc[v])),
                LimbKind::Stem => pieces[at].push(loc[lower.expect("stem limb").0]),
            }
        }
        let cyclic = self.f.components[c].is_cycle();
        let mut interval_ok = true;
        for start in 0..k {
            let max_len = if cyclic { k } else { k - start };
            let mut member = vec![false; t];
            for len in 1..=max_len {
                for &i in &pieces[(start + len - 1) % k] {
                    member[i] = true;
                }
                self.stats.interval_checks += 1;
                interval_ok &= holds(&member);
            }
        }
        let full_ok = if t <= 16 {
            self.stats.full_checks += 1;
            (1u32..(1 << t)).all(|mask| {
                let member: Vec<bool> = (0..t).map(|i| mask >> i & 1 == 1).collect();
                holds(&member)
            })
        } else {
            interval_ok
        };
        match (interval_ok, full_ok) {
            (true, true) => Ok(()),
            (true, false) => Err(Error::StructureViolation(format!(
                "peg set at {c} passes the interval check but fails on some subset"
            ))),
            _ => Err(Error::StructureViolation(format!("peg set at {c} is not orientable"))),
        }
    }
}

fn active_edges(g: &CubicMultigraph, s: &SkeletalStructure) -> Vec<bool> {
    let mut active = vec![false; g.m()];
    for p in &s.pes {
        for &e in &p.edges {
            active[e] = true;
        }
    }
    active
}

/// Colors every pes-subgraph recursively from its root.
pub fn color_pegs(
    g: &CubicMultigraph,
    f: &FactorDecomposition,
    s: &SkeletalStructure,
    depth: VerifyDepth,
    stats: &mut Weak5Stats,
) -> Result<Vec<u8>> {
    let forest = BranchForest::new(g, f, s);
    let nc = f.components.len();
    let roots = forest.roots.clone();
    let mut colorer = Colorer {
        g,
        f,
        forest,
        active: active_edges(g, s),
        subtree: vec![Vec::new(); nc],
        depth,
        stats,
        colors: vec![0; g.n()],
    };
    for &r in &roots {
        colorer.fill_subtrees(r);
    }
    if colorer.subtree.iter().any(|s| s.is_empty()) {
        return Err(Error::StructureViolation("pes-subgraphs do not cover every component".into()));
    }
    for &r in &roots {
        colorer.color(r)?;
    }
    Ok(colorer.colors)
}

/// Reinserts the removed even edges, last removed first. A monochromatic critical edge
/// is repaired by swapping the colors of the side not holding the smaller vertex.
pub fn merge_colorings(
    g: &CubicMultigraph,
    f: &FactorDecomposition,
    s: &SkeletalStructure,
    mut colors: Vec<u8>,
    stats: &mut Weak5Stats,
) -> Result<Vec<u8>> {
    let nc = f.components.len();
    let mut label: Vec<usize> = (0..nc).collect();
    for (i, p) in s.pes.iter().enumerate() {
        for &c in &p.components {
            label[c] = i;
        }
    }
    let critical: Vec<bool> = (0..g.m()).map(|e| f.critical_edges.contains(&e)).collect();
    for &e in s.removed.iter().rev() {
        stats.even_removals += 1;
        let (u, v) = g.edge(e);
        let (a, b) = (label[f.comp_of(u)], label[f.comp_of(v)]);
        if a == b {
            return Err(Error::StructureViolation(format!("removed edge {e} lies inside one part")));
        }
        if critical[e] && colors[u] == colors[v] {
            stats.critical_flips += 1;
            let side = |l: usize| -> Vec<usize> { (0..g.n()).filter(|&x| label[f.comp_of(x)] == l).collect() };
            let (sa, sb) = (side(a), side(b));
            for x in if sa[0] < sb[0] { sb } else { sa } {
                colors[x] = 3 - colors[x];
            }
        }
        for l in label.iter_mut() {
            if *l == b {
                *l = a;
            }
        }
    }
    Ok(colors)
}

//! Cubic multigraphs: validation, text formats and elementary structure queries.
//!
//! Edges are identified by their position in the edge list, so parallel edges are
//! individually addressable. Loops are rejected; every vertex has degree exactly 3.

use std::fmt;

use crate::error::{Error, Result};

/// A loopless cubic multigraph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CubicMultigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<[usize; 3]>,
}

impl fmt::Debug for CubicMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubicMultigraph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl CubicMultigraph {
    /// Validates and builds a graph. Edge order is preserved.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedInput("graph has no vertices".into()));
        }
        let mut deg = vec![0usize; n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::MalformedInput(format!(
                    "edge {i} ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::LoopEdge { edge: i, vertex: u });
            }
            deg[u] += 1;
            deg[v] += 1;
        }
        if n % 2 == 1 {
            return Err(Error::OddVertexCount(n));
        }
        if let Some((vertex, &degree)) = deg.iter().enumerate().find(|(_, &d)| d != 3) {
            return Err(Error::NotCubic { vertex, degree });
        }
        let mut incidence = vec![[usize::MAX; 3]; n];
        let mut fill = vec![0usize; n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incidence[u][fill[u]] = i;
            fill[u] += 1;
            incidence[v][fill[v]] = i;
            fill[v] += 1;
        }
        Ok(Self { n, edges, incidence })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The three edge indices at `v`, in increasing order.
    pub fn incident(&self, v: usize) -> [usize; 3] {
        self.incidence[v]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Neighbors of `v` with multiplicity, in incidence order.
    pub fn neighbors(&self, v: usize) -> [usize; 3] {
        self.incidence[v].map(|e| self.other_end(e, v))
    }

    /// Number of edges joining `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.incidence[u]
            .iter()
            .filter(|&&e| self.other_end(e, u) == v)
            .count()
    }

    pub fn is_simple(&self) -> bool {
        (0..self.n).all(|v| {
            let nb = self.neighbors(v);
            nb[0] != nb[1] && nb[0] != nb[2] && nb[1] != nb[2]
        })
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The subgraph induced by a union of components, relabelled to `0..len` in the order
    /// given, together with the map from new edge index to old edge index.
    pub fn component_subgraph(&self, vertices: &[usize]) -> Result<(CubicMultigraph, Vec<usize>)> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        let mut edge_map = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            match (index[u] != usize::MAX, index[v] != usize::MAX) {
                (true, true) => {
                    edges.push((index[u], index[v]));
                    edge_map.push(e);
                }
                (false, false) => {}
                _ => {
                    return Err(Error::MalformedInput(
                        "vertex set is not a union of components".into(),
                    ))
                }
            }
        }
        Ok((CubicMultigraph::new(vertices.len(), edges)?, edge_map))
    }

    /// Applies a vertex relabelling `perm[old] = new`; edges are rewritten in place and
    /// keep their order.
    pub fn relabel(&self, perm: &[usize]) -> CubicMultigraph {
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        CubicMultigraph::new(self.n, edges).expect("relabelling preserves cubicity")
    }

    /// Serializes to the `cub` edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// A subset of the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VertexSet {
    members: Vec<bool>,
    len: usize,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        Self { members: vec![false; n], len: 0 }
    }

    pub fn full(n: usize) -> Self {
        Self { members: vec![true; n], len: n }
    }

    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Bit `i` of `mask` selects vertex `i`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Self::from_vertices(n, (0..n).filter(|&i| mask >> i & 1 == 1))
    }

    pub fn insert(&mut self, v: usize) {
        if !self.members[v] {
            self.members[v] = true;
            self.len += 1;
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.get(v).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Size of the ground set.
    pub fn universe(&self) -> usize {
        self.members.len()
    }

    pub fn complement(&self) -> Self {
        let members: Vec<bool> = self.members.iter().map(|b| !b).collect();
        let len = members.len() - self.len;
        Self { members, len }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// `d(A)`: the number of edges with exactly one endpoint in `a`, counted with multiplicity.
pub fn cut_degree(g: &CubicMultigraph, a: &VertexSet) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| a.contains(u) != a.contains(v))
        .count()
}

/// Bitmask form of [`cut_degree`] for graphs with at most 64 vertices.
pub fn cut_degree_mask(g: &CubicMultigraph, mask: u64) -> usize {
    g.edges()
        .iter()
        .filter(|&&(u, v)| ((mask >> u) ^ (mask >> v)) & 1 == 1)
        .count()
}

/// Edges whose removal disconnects their component. Parallel edges are never bridges.
pub fn bridges(g: &CubicMultigraph) -> Vec<usize> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, edge used to enter it, next incidence slot)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(top) = stack.last_mut() {
            let (v, via) = (top.0, top.1);
            if top.2 < 3 {
                let e = g.incident(v)[top.2];
                top.2 += 1;
                if e == via {
                    continue;
                }
                let w = g.other_end(e, v);
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        out.push(via);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Exhaustive perfect-matching search: match the lowest unmatched vertex to each of its
/// unmatched neighbors in turn.
pub fn has_perfect_matching(g: &CubicMultigraph) -> bool {
    fn go(g: &CubicMultigraph, matched: &mut [bool]) -> bool {
        let Some(v) = matched.iter().position(|&b| !b) else {
            return true;
        };
        matched[v] = true;
        let mut tried = [usize::MAX; 3];
        for (i, w) in g.neighbors(v).into_iter().enumerate() {
            if matched[w] || tried.contains(&w) {
                continue;
            }
            tried[i] = w;
            matched[w] = true;
            if go(g, matched) {
                return true;
            }
            matched[w] = false;
        }
        matched[v] = false;
        false
    }
    g.n().is_multiple_of(2) && go(g, &mut vec![false; g.n()])
}

/// Parses the `cub` edge-list format: optional `#` comment lines, a header `n m`, then
/// `m` lines `u v` with 0-based vertex ids. Repeated lines are parallel edges.
pub fn parse_edge_list(text: &str) -> Result<CubicMultigraph> {
    let mut graphs = parse_corpus(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        0 => Err(Error::MalformedInput("no graph found".into())),
        k => Err(Error::MalformedInput(format!("expected one graph, found {k}"))),
    }
}

/// Parses a sequence of `cub` records, one after another; each header line announces how
/// many edge lines follow.
pub fn parse_corpus(text: &str) -> Result<Vec<CubicMultigraph>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let pair = |lineno: usize, line: &str| -> Result<(usize, usize)> {
        let mut it = line.split_whitespace();
        let bad = || Error::MalformedInput(format!("line {lineno}: expected two integers, got {line:?}"));
        let a = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let b = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        if it.next().is_some() {
            return Err(bad());
        }
        Ok((a, b))
    };
    let mut out = Vec::new();
    while let Some((lineno, header)) = lines.next() {
        let (n, m) = pair(lineno, header)?;
        let mut edges = Vec::with_capacity(m);
        for k in 0..m {
            let (ln, line) = lines.next().ok_or_else(|| {
                Error::MalformedInput(format!(
                    "graph header on line {lineno} announces {m} edges, found {k}"
                ))
            })?;
            edges.push(pair(ln, line)?);
        }
        out.push(CubicMultigraph::new(n, edges)?);
    }
    Ok(out)
}

/// Decodes one graph6 line (simple graphs only).
pub fn import_graph6(line: &str) -> Result<CubicMultigraph> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    if line.starts_with(':') || line.starts_with('&') {
        return Err(Error::MalformedInput(
            "sparse6 and digraph6 are not graph6".into(),
        ));
    }
    let bytes = line.as_bytes();
    let bad = |msg: &str| Error::MalformedInput(format!("graph6: {msg}"));
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, rest) = match bytes {
        [] => return Err(bad("empty")),
        [126, 126, r @ ..] => {
            if r.len() < 6 {
                return Err(bad("truncated size"));
            }
            let n = r[..6].iter().fold(0usize, |acc, &b| acc << 6 | six(b));
            (n, &r[6..])
        }
        [126, r @ ..] => {
            if r.len() < 3 {
                return Err(bad("truncated size"));
            }
            let n = r[..3].iter().fold(0usize, |acc, &b| acc << 6 | six(b));
            (n, &r[3..])
        }
        [b, r @ ..] => (six(*b), r),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if rest.len() != nbits.div_ceil(6) {
        return Err(bad("adjacency length does not match vertex count"));
    }
    let bit = |k: usize| (six(rest[k / 6]) >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    let mut degree = vec![0usize; n];
    for &(u, v) in &edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    if let Some(vertex) = degree.iter().position(|&d| d != 3) {
        return Err(Error::NotCubic { vertex, degree: degree[vertex] });
    }
    CubicMultigraph::new(n, edges)
}

/// Encodes a simple graph as graph6; `None` for multigraphs.
pub fn to_graph6(g: &CubicMultigraph) -> Option<String> {
    if !g.is_simple() {
        return None;
    }
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | adj[i * n + j] as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Some(String::from_utf8(out).expect("graph6 is ASCII"))
}

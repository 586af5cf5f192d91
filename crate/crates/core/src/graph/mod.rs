//! Finite simple graphs on named vertices, and the ideals built from them.
//!
//! Vertices are indices into a [`VariableSet`], so the vertex names double as
//! the variables of every ideal constructed from the graph. Adjacency rows are
//! bitmasks, which caps graphs at 64 vertices.

mod chordal;
mod covers;
mod ferrers;
mod ideals;
mod matching;

pub use covers::maximal_independent_sets;
pub use ferrers::FerrersChain;

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::VariableSet;

/// Bitmask of vertex indices.
pub type VertexMask = u64;

pub fn bits(mask: VertexMask) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

pub(crate) fn mask_of(indices: &[usize]) -> VertexMask {
    indices.iter().fold(0, |m, &i| m | 1 << i)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    vars: VariableSet,
    adj: Vec<VertexMask>,
}

impl SimpleGraph {
    pub fn empty(vars: VariableSet) -> Result<Self> {
        if vars.len() > 64 {
            return Err(Error::TooManyVertices(vars.len()));
        }
        let n = vars.len();
        Ok(Self {
            vars,
            adj: vec![0; n],
        })
    }

    /// Graph on `vars` with the given index pairs as edges.
    pub fn from_edges(vars: VariableSet, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(vars)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph on vertices `x1..xn` (or another prefix).
    pub fn indexed(prefix: &str, n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges(VariableSet::indexed(prefix, n), edges)
    }

    /// Graph from named edges; vertices in order of first appearance.
    pub fn from_named_edges(edges: &[(&str, &str)]) -> Result<Self> {
        let mut names: Vec<&str> = Vec::new();
        for &(u, v) in edges {
            for w in [u, v] {
                if !names.contains(&w) {
                    names.push(w);
                }
            }
        }
        let vars = VariableSet::new(names.iter().copied())?;
        let idx: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| (vars.index_of(u).unwrap(), vars.index_of(v).unwrap()))
            .collect();
        Self::from_edges(vars, &idx)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(Error::UnknownVertex(format!("#{}", u.max(v))));
        }
        if u == v {
            return Err(Error::Precondition(format!(
                "loop at `{}`",
                self.vars.name(u)
            )));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Parses the edge-list format: the first line lists vertex names, each
    /// following non-blank line is a `u v` pair.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing vertex line".into()))?;
        let vars = VariableSet::new(header.split_whitespace())?;
        let mut g = Self::empty(vars)?;
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [u, v] = parts[..] else {
                return Err(Error::Parse(format!("expected `u v`, got `{line}`")));
            };
            let (iu, iv) = (g.vertex(u)?, g.vertex(v)?);
            g.add_edge(iu, iv)?;
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = self.vars.names().join(" ");
        out.push('\n');
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", self.vars.name(u), self.vars.name(v)));
        }
        out
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn name(&self, v: usize) -> &str {
        self.vars.name(v)
    }

    pub fn all_vertices(&self) -> VertexMask {
        if self.adj.len() == 64 {
            u64::MAX
        } else {
            (1 << self.adj.len()) - 1
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexMask {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.adj.len() {
            for v in bits(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.adj.len()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.adj.len()).filter(|&v| self.adj[v] == 0).collect()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.adj.contains(&0)
    }

    /// Errors unless every vertex has a neighbour.
    pub fn require_no_isolated_vertices(&self) -> Result<()> {
        if self.has_isolated_vertices() {
            Err(Error::IsolatedVertices)
        } else {
            Ok(())
        }
    }

    pub fn complement(&self) -> Self {
        let all = self.all_vertices();
        Self {
            vars: self.vars.clone(),
            adj: (0..self.adj.len())
                .map(|v| all & !self.adj[v] & !(1 << v))
                .collect(),
        }
    }

    /// Induced subgraph on named vertices, keeping names and their order in `self`.
    pub fn induced_subgraph(&self, names: &[&str]) -> Result<Self> {
        let idx = names
            .iter()
            .map(|n| self.vertex(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.induced_by_mask(mask_of(&idx)))
    }

    pub fn induced_by_mask(&self, mask: VertexMask) -> Self {
        let keep: Vec<usize> = bits(mask & self.all_vertices()).collect();
        let vars = VariableSet::new(keep.iter().map(|&v| self.vars.name(v).to_string()))
            .expect("names of a graph are distinct");
        let mut adj = vec![0; keep.len()];
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Self { vars, adj }
    }

    /// Relabels vertex `v` as `perm[v]`, keeping the variable set.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut adj = vec![0; self.adj.len()];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Self {
            vars: self.vars.clone(),
            adj,
        }
    }

    /// Vertex masks of connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexMask> {
        let mut seen = 0;
        let mut out = Vec::new();
        for v in 0..self.adj.len() {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1 << v;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for u in bits(frontier) {
                    next |= self.adj[u];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A proper 2-colouring as a mask of the colour-1 vertices, if one exists.
    /// The smallest vertex of each component gets colour 0.
    pub fn two_coloring(&self) -> Option<VertexMask> {
        let n = self.adj.len();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in bits(self.adj[u]) {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(
            color
                .iter()
                .enumerate()
                .filter(|(_, c)| **c == Some(true))
                .fold(0, |m, (i, _)| m | 1 << i),
        )
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Degree-1 vertices whose only neighbour is `v`.
    pub fn leaves_with_joint(&self, v: usize) -> VertexMask {
        bits(self.adj[v])
            .filter(|&u| self.degree(u) == 1)
            .fold(0, |m, u| m | 1 << u)
    }

    pub fn is_clique(&self, mask: VertexMask) -> bool {
        bits(mask).all(|v| self.adj[v] & mask == mask & !(1 << v))
    }

    pub fn is_independent(&self, mask: VertexMask) -> bool {
        bits(mask).all(|v| self.adj[v] & mask == 0)
    }

    pub fn is_vertex_cover(&self, mask: VertexMask) -> bool {
        self.edges()
            .iter()
            .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
    }

    /// Brute-force isomorphism test with a degree-sequence filter.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        let n = self.num_vertices();
        if n != other.num_vertices()
            || self.num_edges() != other.num_edges()
            || self.degree_sequence() != other.degree_sequence()
        {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        fn extend(
            a: &SimpleGraph,
            b: &SimpleGraph,
            at: usize,
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            let n = a.num_vertices();
            if at == n {
                return true;
            }
            for cand in 0..n {
                if used[cand] || a.degree(at) != b.degree(cand) {
                    continue;
                }
                let consistent =
                    (0..at).all(|u| a.has_edge(u, at) == b.has_edge(perm[u], cand));
                if consistent {
                    used[cand] = true;
                    perm[at] = cand;
                    if extend(a, b, at + 1, perm, used) {
                        return true;
                    }
                    used[cand] = false;
                }
            }
            false
        }
        extend(self, other, 0, &mut perm, &mut used)
    }

    /// Vertex-disjoint union; names of `other` get a `'` suffix on clashes.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let mut names: Vec<String> = self.vars.names().to_vec();
        for name in other.vars.names() {
            let mut nm = name.clone();
            while names.contains(&nm) {
                nm.push('\'');
            }
            names.push(nm);
        }
        let shift = self.adj.len();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << shift));
        Self {
            vars: VariableSet::new(names).expect("names made distinct"),
            adj,
        }
    }
}

/// Small named graphs on vertices `x1, x2, ...`.
pub mod named {
    use super::SimpleGraph;

    fn build(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::indexed("x", n, edges).expect("valid small graph")
    }

    pub fn path(vertices: usize) -> SimpleGraph {
        let e: Vec<_> = (1..vertices).map(|i| (i - 1, i)).collect();
        build(vertices, &e)
    }

    pub fn cycle(n: usize) -> SimpleGraph {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        e.push((n - 1, 0));
        build(n, &e)
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        build(n, &e)
    }

    /// `K_{1,leaves}` with centre `x1`.
    pub fn star(leaves: usize) -> SimpleGraph {
        let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        build(leaves + 1, &e)
    }

    pub fn triangle() -> SimpleGraph {
        complete(3)
    }

    pub fn claw() -> SimpleGraph {
        star(3)
    }

    /// `k` disjoint edges.
    pub fn matching(k: usize) -> SimpleGraph {
        let e: Vec<_> = (0..k).map(|i| (2 * i, 2 * i + 1)).collect();
        build(2 * k, &e)
    }

    /// Triangle with a pendant edge.
    pub fn paw() -> SimpleGraph {
        build(4, &[(0, 1), (1, 2), (1, 3), (2, 3)])
    }

    /// `K4` minus an edge.
    pub fn diamond() -> SimpleGraph {
        build(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    }

    /// An edge next to a path with two edges.
    pub fn edge_and_p3() -> SimpleGraph {
        build(5, &[(0, 1), (2, 3), (3, 4)])
    }

    pub fn edge_and_triangle() -> SimpleGraph {
        build(5, &[(0, 1), (2, 3), (3, 4), (2, 4)])
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|&(u, v)| format!("{}-{}", self.name(u), self.name(v)))
            .collect();
        write!(f, "SimpleGraph({:?}; {})", self.vars, edges.join(", "))
    }
}

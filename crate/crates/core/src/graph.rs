//! Signed graphs and their positive part.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Undirected graph on `0..n` whose edges carry a sign.
///
/// Neighbourhoods are kept as sorted adjacency lists per sign, so the
/// positive and negative edge sets are disjoint by construction and every
/// pair is stored once. Values are immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    pos: Vec<Vec<usize>>,
    neg: Vec<Vec<usize>>,
}

impl SignedGraph {
    /// Builds a graph from explicit edge lists.
    ///
    /// Rejects out-of-range endpoints, self-loops and any pair listed twice
    /// (in either orientation, with either sign).
    pub fn new<P, N>(n: usize, pos_edges: P, neg_edges: N) -> Result<Self>
    where
        P: IntoIterator<Item = (usize, usize)>,
        N: IntoIterator<Item = (usize, usize)>,
    {
        let mut builder = SignedGraphBuilder::new(n);
        for (u, v) in pos_edges {
            builder.add(u, v, Sign::Positive)?;
        }
        for (u, v) in neg_edges {
            builder.add(u, v, Sign::Negative)?;
        }
        Ok(builder.build())
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        SignedGraph {
            n,
            pos: vec![Vec::new(); n],
            neg: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn pos_neighbors(&self, v: usize) -> &[usize] {
        &self.pos[v]
    }

    pub fn neg_neighbors(&self, v: usize) -> &[usize] {
        &self.neg[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.pos[v].len() + self.neg[v].len()
    }

    /// Sign of the edge `{u, v}`, if present.
    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        if self.pos[u].binary_search(&v).is_ok() {
            Some(Sign::Positive)
        } else if self.neg[u].binary_search(&v).is_ok() {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    /// Positive edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn pos_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        Self::edges_of(&self.pos)
    }

    /// Negative edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn neg_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        Self::edges_of(&self.neg)
    }

    /// All edges with their signs, ordered by `(u, v)`.
    pub fn edges(&self) -> Vec<(usize, usize, Sign)> {
        let mut all: Vec<_> = self
            .pos_edges()
            .map(|(u, v)| (u, v, Sign::Positive))
            .chain(self.neg_edges().map(|(u, v)| (u, v, Sign::Negative)))
            .collect();
        all.sort_unstable();
        all
    }

    fn edges_of(adj: &[Vec<usize>]) -> impl Iterator<Item = (usize, usize)> + '_ {
        adj.iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn pos_edge_count(&self) -> usize {
        self.pos.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neg_edge_count(&self) -> usize {
        self.neg.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edge_count(&self) -> usize {
        self.pos_edge_count() + self.neg_edge_count()
    }

    /// First pair `(u, v)`, `u < v`, without an edge; `None` when complete.
    pub fn missing_pair(&self) -> Option<(usize, usize)> {
        for u in 0..self.n {
            if self.degree(u) == self.n - 1 {
                continue;
            }
            let mut adjacent = vec![false; self.n];
            for &w in self.pos[u].iter().chain(&self.neg[u]) {
                adjacent[w] = true;
            }
            if let Some(v) = (u + 1..self.n).find(|&v| !adjacent[v]) {
                return Some((u, v));
            }
            // every missing partner of u is smaller and was reported earlier
        }
        None
    }

    pub fn is_complete(&self) -> bool {
        self.missing_pair().is_none()
    }

    /// The unsigned graph formed by the positive edges only.
    pub fn positive_graph(&self) -> UnsignedGraph {
        UnsignedGraph {
            adj: self.pos.clone(),
        }
    }

    /// Induced subgraph on `vertices`, relabelled `0..k` in the given order.
    ///
    /// `vertices` must be distinct and in range.
    pub fn induced(&self, vertices: &[usize]) -> Result<SignedGraph> {
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in vertices.iter().enumerate() {
            if old >= self.n {
                return Err(Error::VertexOutOfRange { vertex: old, n: self.n });
            }
            if index[old] != usize::MAX {
                return Err(Error::DuplicateWitnessVertex(old));
            }
            index[old] = new;
        }
        let relabel = |adj: &[usize]| -> Vec<usize> {
            let mut out: Vec<usize> = adj
                .iter()
                .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                .collect();
            out.sort_unstable();
            out
        };
        Ok(SignedGraph {
            n: vertices.len(),
            pos: vertices.iter().map(|&v| relabel(&self.pos[v])).collect(),
            neg: vertices.iter().map(|&v| relabel(&self.neg[v])).collect(),
        })
    }

    /// Induced subgraph with vertex `v` deleted; remaining vertices keep
    /// their relative order.
    pub fn without_vertex(&self, v: usize) -> Result<SignedGraph> {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        self.induced(&keep)
    }

    /// Disjoint union with `other`, whose vertices are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let shift = |adj: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            adj.iter()
                .map(|ns| ns.iter().map(|&w| w + self.n).collect())
                .collect()
        };
        let mut pos = self.pos.clone();
        pos.extend(shift(&other.pos));
        let mut neg = self.neg.clone();
        neg.extend(shift(&other.neg));
        SignedGraph {
            n: self.n + other.n,
            pos,
            neg,
        }
    }
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SignedGraph")
            .field("n", &self.n)
            .field("pos", &self.pos_edges().collect::<Vec<_>>())
            .field("neg", &self.neg_edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Incremental builder used by parsers and generators.
#[derive(Debug, Clone)]
pub struct SignedGraphBuilder {
    n: usize,
    pos: Vec<Vec<usize>>,
    neg: Vec<Vec<usize>>,
    seen: HashSet<(usize, usize)>,
}

impl SignedGraphBuilder {
    pub fn new(n: usize) -> Self {
        SignedGraphBuilder {
            n,
            pos: vec![Vec::new(); n],
            neg: vec![Vec::new(); n],
            seen: HashSet::new(),
        }
    }

    pub fn add(&mut self, u: usize, v: usize, sign: Sign) -> Result<&mut Self> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if !self.seen.insert((a, b)) {
            return Err(Error::DuplicateEdge(a, b));
        }
        let adj = match sign {
            Sign::Positive => &mut self.pos,
            Sign::Negative => &mut self.neg,
        };
        adj[a].push(b);
        adj[b].push(a);
        Ok(self)
    }

    /// Like [`add`](Self::add) but for generators that emit each pair once
    /// by construction; skips duplicate tracking.
    pub(crate) fn add_unchecked(&mut self, u: usize, v: usize, sign: Sign) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let adj = match sign {
            Sign::Positive => &mut self.pos,
            Sign::Negative => &mut self.neg,
        };
        adj[u].push(v);
        adj[v].push(u);
    }

    pub fn build(mut self) -> SignedGraph {
        for list in self.pos.iter_mut().chain(self.neg.iter_mut()) {
            list.sort_unstable();
        }
        SignedGraph {
            n: self.n,
            pos: self.pos,
            neg: self.neg,
        }
    }
}

/// Plain undirected graph given by sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnsignedGraph {
    adj: Vec<Vec<usize>>,
}

impl UnsignedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let g = SignedGraph::new(n, edges, std::iter::empty())?;
        Ok(g.positive_graph())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        SignedGraph::edges_of(&self.adj)
    }

    /// Connected components, each sorted ascending, listed by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

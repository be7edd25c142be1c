//! Simple undirected graphs and the operators acting on them.

mod cover;
mod family;
mod io;
mod ops;

pub use cover::CliqueCover;
pub use family::FamilySpec;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted and deduplicated, so two graphs compare
/// equal exactly when they have the same order and the same labeled edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from labeled edges the caller guarantees are in range
    /// and loop-free.
    pub(crate) fn from_edges_unchecked(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            debug_assert!(u < n && v < n && u != v);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    /// The null graph with no vertices.
    pub fn null() -> Self {
        Graph::default()
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn complete(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_null(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        Graph {
            adj: (0..n)
                .map(|v| (0..n).filter(|&u| u != v && !self.has_edge(v, u)).collect())
                .collect(),
        }
    }

    /// Line graph: one vertex per edge (numbered in [`Graph::edges`] order),
    /// adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let edges: Vec<_> = self.edges().collect();
        let mut out = Vec::new();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    out.push((i, j));
                }
            }
        }
        Graph::from_edges_unchecked(edges.len(), out)
    }

    /// True when no vertex has three pairwise non-adjacent neighbors.
    pub fn is_claw_free(&self) -> bool {
        for v in 0..self.order() {
            let nb = &self.adj[v];
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    if nb[j + 1..]
                        .iter()
                        .any(|&c| !self.has_edge(a, c) && !self.has_edge(b, c))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::Parse(format!("permutation has length {} for order {n}", perm.len())));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Parse("not a permutation".into()));
            }
        }
        Ok(Graph::from_edges_unchecked(n, self.edges().map(|(u, v)| (perm[u], perm[v]))))
    }

    /// Closed neighborhoods as bitmasks; requires `n <= 64`.
    pub(crate) fn closed_masks(&self, what: &'static str) -> Result<Vec<u64>> {
        let n = self.order();
        if n > 64 {
            return Err(Error::TooLarge { what, order: n, limit: 64 });
        }
        Ok(self
            .adj
            .iter()
            .enumerate()
            .map(|(v, list)| list.iter().fold(1u64 << v, |m, &u| m | 1u64 << u))
            .collect())
    }

    pub fn is_well_formed(&self) -> bool {
        let n = self.order();
        self.adj.iter().enumerate().all(|(v, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list.iter().all(|&u| u < n && u != v && self.adj[u].binary_search(&v).is_ok())
        })
    }
}

//! Undirected simple graphs on dense integer vertex indices.
//!
//! Every other module consumes [`Graph`]. Edges are stored canonically with the
//! smaller endpoint first and sorted, adjacency lists are sorted, so iteration
//! order is deterministic everywhere downstream.

mod bipartite;
mod degeneracy;
pub mod generators;
pub mod io;
pub mod minor;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use bipartite::{is_bipartite, Bipartition};
pub use degeneracy::{degeneracy, Degeneracy, DegeneracyBound};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge {0}-{1} declared twice")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
}

/// An undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[Vertex; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = GraphError;

    fn try_from(r: GraphRepr) -> Result<Self, Self::Error> {
        Graph::from_edges(r.n, r.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph, rejecting self-loops, repeated edges and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut canon = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_canonical(n, canon))
    }

    /// Like [`Graph::from_edges`] but silently drops loops and repeats.
    pub fn from_edges_lossy<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut canon: Vec<_> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        assert!(
            canon.iter().all(|&(_, v)| v < n),
            "edge endpoint out of range"
        );
        canon.sort_unstable();
        canon.dedup();
        Self::from_canonical(n, canon)
    }

    fn from_canonical(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical sorted edge list, smaller endpoint first.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in the given order.
    ///
    /// Returns the subgraph and the map from new to old labels.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        (Graph::from_edges_lossy(keep.len(), edges), keep.to_vec())
    }

    /// Spanning subgraph keeping only the edges accepted by `keep`.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(Vertex, Vertex) -> bool) -> Graph {
        let edges = self.edges.iter().copied().filter(|&(u, v)| keep(u, v)).collect();
        Self::from_canonical(self.n, edges)
    }

    /// Whether `set` is non-empty and induces a connected subgraph.
    pub fn is_connected_set(&self, set: &[Vertex]) -> bool {
        let Some(&start) = set.first() else {
            return false;
        };
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        let distinct = {
            let mut s = set.to_vec();
            s.sort_unstable();
            s.dedup();
            s.len()
        };
        reached == distinct
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.is_connected_set(&self.vertices().collect::<Vec<_>>())
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Whether any edge joins the two vertex sets, or they share a vertex.
    pub fn touches(&self, a: &[Vertex], b: &[Vertex]) -> bool {
        let mut mark = vec![false; self.n];
        for &v in a {
            mark[v] = true;
            for &w in &self.adj[v] {
                mark[w] = true;
            }
        }
        b.iter().any(|&v| mark[v])
    }

    /// Some clique on `size` vertices, if one exists. Exponential in the worst case.
    pub fn find_clique(&self, size: usize) -> Option<Vec<Vertex>> {
        fn extend(g: &Graph, chosen: &mut Vec<Vertex>, cands: &[Vertex], size: usize) -> bool {
            if chosen.len() == size {
                return true;
            }
            if chosen.len() + cands.len() < size {
                return false;
            }
            for (i, &v) in cands.iter().enumerate() {
                let next: Vec<_> = cands[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&w| g.has_edge(v, w))
                    .collect();
                chosen.push(v);
                if extend(g, chosen, &next, size) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        let cands: Vec<_> = self
            .vertices()
            .filter(|&v| size <= 1 || self.degree(v) + 1 >= size)
            .collect();
        let mut chosen = Vec::new();
        extend(self, &mut chosen, &cands, size).then_some(chosen)
    }

    /// Edge set as a sorted vector, for isomorphism-free comparisons in tests.
    pub fn edge_vec(&self) -> Vec<(Vertex, Vertex)> {
        self.edges.clone()
    }
}

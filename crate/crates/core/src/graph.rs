//! Simple undirected graphs.
//!
//! Vertices are `0..vertex_count`. The text formats in [`crate::edgelist`] and
//! [`crate::board`] translate to and from the 1-based ids users see.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An edge stored with its smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes an endpoint pair so the smaller id comes first.
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated edges and out-of-range ids.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut adj = vec![Vec::new(); vertex_count];
        let mut edge_count = 0;
        for (u, v) in edges {
            for x in [u, v] {
                if x >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: x,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj, edge_count })
    }

    /// The graph on `vertex_count` vertices with no edges.
    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); vertex_count],
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// A copy of the graph without the given edges. Every listed pair must be an edge.
    pub fn without_edges(&self, removed: &[Edge]) -> Result<Self> {
        let mut adj = self.adj.clone();
        for &(u, v) in removed {
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
            let Ok(i) = adj[u].binary_search(&v) else {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            };
            adj[u].remove(i);
            let j = adj[v].binary_search(&u).expect("adjacency is symmetric");
            adj[v].remove(j);
        }
        Ok(Graph {
            adj,
            edge_count: self.edge_count - removed.len(),
        })
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for s in 0..self.vertex_count() {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &self.adj[u] {
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
        self.components().len() <= 1
    }

    /// Largest shortest-path distance over all vertex pairs.
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for s in 0..self.vertex_count() {
            for d in self.distances_from(s) {
                best = best.max(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(best)
    }

    /// The subgraph induced on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &u) in vertices.iter().enumerate() {
            index[u] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| edge(index[u], index[v]));
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph of a simple graph")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange {
                vertex: 2,
                vertex_count: 2
            })
        );
    }

    #[test]
    fn adjacency_is_symmetric_and_counts_edges() {
        let g = Graph::from_edges(4, [(0, 1), (2, 1), (3, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        let degree_sum: usize = (0..4).map(|u| g.degree(u)).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
        for (u, v) in g.edges() {
            assert!(u < v && g.has_edge(v, u));
        }
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn removing_edges() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let h = g.without_edges(&[(2, 0)]).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert!(!h.has_edge(0, 2));
        assert_eq!(
            g.without_edges(&[(0, 1), (0, 1)]).unwrap_err(),
            Error::DuplicateEdge(0, 1)
        );
        let p = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(p.without_edges(&[(1, 2)]), Err(Error::NotAnEdge(1, 2)));
    }

    #[test]
    fn diameter_needs_connectivity() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.diameter(), Err(Error::Disconnected));
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(Graph::empty(1).diameter(), Ok(0));
    }
}

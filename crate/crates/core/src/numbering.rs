//! Vertex numberings and the quantities they induce on a graph.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// A bijection from vertices `0..v` to labels `1..=v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Numbering {
    /// `labels[u]` is the label of vertex `u`.
    labels: Vec<usize>,
    /// `order[l - 1]` is the vertex with label `l`.
    order: Vec<usize>,
}

impl Numbering {
    /// Builds a numbering from per-vertex labels in `1..=labels.len()`.
    pub fn from_labels(labels: Vec<usize>) -> Result<Self> {
        let v = labels.len();
        let mut order = vec![usize::MAX; v];
        for (u, &l) in labels.iter().enumerate() {
            if l == 0 || l > v || order[l - 1] != usize::MAX {
                return Err(Error::NotABijection(v));
            }
            order[l - 1] = u;
        }
        Ok(Numbering { labels, order })
    }

    /// Builds a numbering from the sequence of vertices receiving labels `1, 2, ...`.
    pub fn from_order(order: Vec<usize>) -> Result<Self> {
        let v = order.len();
        let mut labels = vec![0; v];
        for (i, &u) in order.iter().enumerate() {
            if u >= v || labels[u] != 0 {
                return Err(Error::NotABijection(v));
            }
            labels[u] = i + 1;
        }
        Ok(Numbering { labels, order })
    }

    pub fn identity(v: usize) -> Self {
        Numbering {
            labels: (1..=v).collect(),
            order: (0..v).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, u: usize) -> usize {
        self.labels[u]
    }

    pub fn vertex_with_label(&self, label: usize) -> usize {
        self.order[label - 1]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// The mirror numbering `v + 1 - label`.
    pub fn reversed(&self) -> Self {
        let v = self.len();
        Numbering {
            labels: self.labels.iter().map(|&l| v + 1 - l).collect(),
            order: self.order.iter().rev().copied().collect(),
        }
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if g.vertex_count() != self.len() {
            return Err(Error::SizeMismatch {
                graph: g.vertex_count(),
                numbering: self.len(),
            });
        }
        Ok(())
    }

    fn span(&self, (u, v): Edge) -> usize {
        self.labels[u].abs_diff(self.labels[v])
    }
}

/// Induced length `|label(u) - label(v)|` of the edge `{u, v}`.
pub fn edge_length(g: &Graph, nu: &Numbering, u: usize, v: usize) -> Result<usize> {
    nu.check(g)?;
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    Ok(nu.span((u, v)))
}

/// Largest induced edge length; 0 when the graph has no edges.
pub fn bandwidth_of_numbering(g: &Graph, nu: &Numbering) -> Result<usize> {
    nu.check(g)?;
    Ok(g.edges().map(|e| nu.span(e)).max().unwrap_or(0))
}

/// Number of edges whose induced length is strictly greater than `t`.
pub fn count_edges_longer_than(g: &Graph, nu: &Numbering, t: usize) -> Result<usize> {
    nu.check(g)?;
    Ok(g.edges().filter(|&e| nu.span(e) > t).count())
}

/// Edges whose induced length exceeds `t`, with their lengths, in edge order.
pub fn edges_longer_than(g: &Graph, nu: &Numbering, t: usize) -> Result<Vec<(Edge, usize)>> {
    nu.check(g)?;
    Ok(g.edges()
        .map(|e| (e, nu.span(e)))
        .filter(|&(_, len)| len > t)
        .collect())
}

/// Histogram of induced edge lengths.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LengthProfile {
    pub counts: BTreeMap<usize, usize>,
    pub max_length: usize,
}

impl LengthProfile {
    pub fn count(&self, length: usize) -> usize {
        self.counts.get(&length).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

pub fn length_profile(g: &Graph, nu: &Numbering) -> Result<LengthProfile> {
    nu.check(g)?;
    let mut counts = BTreeMap::new();
    for e in g.edges() {
        *counts.entry(nu.span(e)).or_insert(0) += 1;
    }
    let max_length = counts.keys().next_back().copied().unwrap_or(0);
    Ok(LengthProfile { counts, max_length })
}

/// Entry `k` (for `k = 0..=v`) counts vertices labelled at most `k` that have a
/// neighbor labelled above `k`.
pub fn boundary_profile(g: &Graph, nu: &Numbering) -> Result<Vec<usize>> {
    nu.check(g)?;
    let v = g.vertex_count();
    // A vertex labelled l is on the boundary of prefix k exactly for l <= k < max
    // label among its neighbors, so each vertex adds 1 on a label interval.
    let mut delta = vec![0isize; v + 2];
    for u in 0..v {
        let l = nu.label(u);
        let reach = g
            .neighbors(u)
            .iter()
            .map(|&w| nu.label(w))
            .max()
            .unwrap_or(0);
        if reach > l {
            delta[l] += 1;
            delta[reach] -= 1;
        }
    }
    let mut out = Vec::with_capacity(v + 1);
    let mut run = 0isize;
    for d in delta.iter().take(v + 1) {
        run += d;
        out.push(run as usize);
    }
    Ok(out)
}

/// Maximum entry of [`boundary_profile`], the vertex-isoperimetric value of `nu`.
pub fn vertex_isoperimetric_of_numbering(g: &Graph, nu: &Numbering) -> Result<usize> {
    Ok(boundary_profile(g, nu)?.into_iter().max().unwrap_or(0))
}

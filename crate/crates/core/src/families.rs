//! Graph family generators.

use crate::error::{invalid, Result};
use crate::graph::{Edge, Graph};

/// A cell of the `n`-row, `m`-column board. Rows count bottom-up from 1, columns
/// left-to-right from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridCoord {
    pub row: usize,
    pub col: usize,
}

impl GridCoord {
    pub const fn new(row: usize, col: usize) -> Self {
        GridCoord { row, col }
    }

    /// Vertex index in a grid with `cols` columns: `(row - 1) * cols + (col - 1)`.
    ///
    /// The 1-based id used in files is this value plus one.
    pub fn index(self, cols: usize) -> usize {
        (self.row - 1) * cols + (self.col - 1)
    }

    pub fn from_index(index: usize, cols: usize) -> Self {
        GridCoord {
            row: index / cols + 1,
            col: index % cols + 1,
        }
    }

    /// Anti-diagonal number `row + col - 1`.
    pub fn diagonal(self) -> usize {
        self.row + self.col - 1
    }
}

impl std::fmt::Display for GridCoord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The rectangular grid with `m` columns and `n` rows.
pub fn grid(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(invalid(format!(
            "grid dimensions must be positive, got {m}x{n}"
        )));
    }
    let mut edges = Vec::with_capacity(2 * m * n);
    for row in 1..=n {
        for col in 1..=m {
            let here = GridCoord::new(row, col).index(m);
            if col < m {
                edges.push((here, here + 1));
            }
            if row < n {
                edges.push((here, here + m));
            }
        }
    }
    Graph::from_edges(m * n, edges)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs at least one vertex"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("complete graph needs at least one vertex"));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

fn wheel_edges(m: usize, offset: usize) -> impl Iterator<Item = Edge> {
    let rim = m - 1;
    (0..rim).flat_map(move |i| {
        let a = offset + 1 + i;
        let b = offset + 1 + (i + 1) % rim;
        [(offset, a), (a, b)]
    })
}

/// The wheel on `m` vertices: vertex 0 is the center, `1..m` form the rim cycle.
pub fn wheel(m: usize) -> Result<Graph> {
    if m < 4 {
        return Err(invalid(format!("wheel needs at least 4 vertices, got {m}")));
    }
    Graph::from_edges(m, wheel_edges(m, 0))
}

/// The complete bipartite graph with parts `0..m` and `m..m+n`, for `m >= n >= 1`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if n == 0 || m < n {
        return Err(invalid(format!(
            "complete bipartite graph needs m >= n >= 1, got ({m}, {n})"
        )));
    }
    Graph::from_edges(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
}

/// Centers of the two wheels in [`double_wheel_axis`].
pub const DOUBLE_WHEEL_CENTERS: Edge = (0, 7);

/// Two copies of the 7-vertex wheel whose centers are joined by one extra edge.
pub fn double_wheel_axis() -> Graph {
    let edges = wheel_edges(7, 0)
        .chain(wheel_edges(7, 7))
        .chain(std::iter::once(DOUBLE_WHEEL_CENTERS));
    Graph::from_edges(14, edges).expect("fixed construction")
}

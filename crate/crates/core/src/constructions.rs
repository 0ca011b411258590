//! Explicit grid numberings: the down-diagonal lexicographic arrangement, the
//! cut-and-flip numbering with few long edges, the two-long-edge numberings of the
//! square grid, and a fixed 4x4 board used for vertex-isoperimetric experiments.

use std::collections::BTreeMap;

use crate::board::GridBoard;
use crate::error::{invalid, Result};
use crate::families::{grid, GridCoord};
use crate::graph::{edge, Edge, Graph};
use crate::numbering::{edges_longer_than, Numbering};

/// A finite set of cells whose rows are contiguous column intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseBoard {
    /// row -> (first column, last column)
    rows: BTreeMap<usize, (usize, usize)>,
}

impl StaircaseBoard {
    /// Builds a board from arbitrary cells. Fails if some row is not contiguous.
    pub fn from_cells<I: IntoIterator<Item = GridCoord>>(cells: I) -> Result<Self> {
        let mut cols: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in cells {
            if c.row == 0 || c.col == 0 {
                return Err(invalid(format!(
                    "cell {c} is outside the positive quadrant"
                )));
            }
            cols.entry(c.row).or_default().push(c.col);
        }
        let mut rows = BTreeMap::new();
        for (r, mut cs) in cols {
            cs.sort_unstable();
            cs.dedup();
            let (lo, hi) = (cs[0], cs[cs.len() - 1]);
            if hi - lo + 1 != cs.len() {
                return Err(invalid(format!("row {r} is not a contiguous interval")));
            }
            rows.insert(r, (lo, hi));
        }
        Ok(StaircaseBoard { rows })
    }

    pub fn interval(&self, row: usize) -> Option<(usize, usize)> {
        self.rows.get(&row).copied()
    }

    pub fn contains(&self, cell: GridCoord) -> bool {
        self.interval(cell.row)
            .is_some_and(|(lo, hi)| lo <= cell.col && cell.col <= hi)
    }

    pub fn len(&self) -> usize {
        self.rows.values().map(|(lo, hi)| hi - lo + 1).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = GridCoord> + '_ {
        self.rows
            .iter()
            .flat_map(|(&r, &(lo, hi))| (lo..=hi).map(move |c| GridCoord::new(r, c)))
    }

    /// Cells sorted by anti-diagonal ascending, then row descending.
    pub fn diagonal_order(&self) -> Vec<GridCoord> {
        let mut cells: Vec<_> = self.cells().collect();
        cells.sort_by_key(|c| (c.diagonal(), std::cmp::Reverse(c.row)));
        cells
    }

    /// Number of cells on each anti-diagonal `row + col - 1`.
    pub fn diagonal_lengths(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for c in self.cells() {
            *out.entry(c.diagonal()).or_insert(0) += 1;
        }
        out
    }

    /// Renders labels top row first, single-space separated. Columns left of a
    /// row's interval are shown as `.`.
    pub fn to_text(&self, label: impl Fn(GridCoord) -> usize) -> String {
        let mut out = String::new();
        for (&r, &(lo, hi)) in self.rows.iter().rev() {
            let mut toks: Vec<String> = (1..lo).map(|_| ".".to_string()).collect();
            toks.extend((lo..=hi).map(|c| label(GridCoord::new(r, c)).to_string()));
            out.push_str(&toks.join(" "));
            out.push('\n');
        }
        out
    }
}

/// An edge that a construction makes longer than its threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LongEdge {
    pub edge: Edge,
    pub ends: (GridCoord, GridCoord),
    pub length: usize,
}

/// A grid numbering together with every edge longer than `threshold`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub cols: usize,
    pub rows: usize,
    pub numbering: Numbering,
    pub threshold: usize,
    pub long_edges: Vec<LongEdge>,
}

impl ConstructionReport {
    /// Reports the edges of the `cols x rows` grid longer than `threshold` under `numbering`.
    pub fn from_numbering(
        cols: usize,
        rows: usize,
        numbering: Numbering,
        threshold: usize,
    ) -> Result<Self> {
        let g = grid(cols, rows)?;
        let long_edges = edges_longer_than(&g, &numbering, threshold)?
            .into_iter()
            .map(|((u, v), length)| LongEdge {
                edge: (u, v),
                ends: (
                    GridCoord::from_index(u, cols),
                    GridCoord::from_index(v, cols),
                ),
                length,
            })
            .collect();
        Ok(ConstructionReport {
            cols,
            rows,
            numbering,
            threshold,
            long_edges,
        })
    }

    pub fn graph(&self) -> Graph {
        grid(self.cols, self.rows).expect("validated dimensions")
    }

    pub fn board(&self) -> GridBoard {
        GridBoard::new(self.cols, self.rows, self.numbering.clone()).expect("matching size")
    }

    pub fn long_lengths(&self) -> Vec<usize> {
        self.long_edges.iter().map(|e| e.length).collect()
    }
}

fn rectangle(m: usize, n: usize) -> impl Iterator<Item = GridCoord> {
    (1..=n).flat_map(move |r| (1..=m).map(move |c| GridCoord::new(r, c)))
}

fn numbering_from_cell_order(cols: usize, order: &[GridCoord]) -> Numbering {
    Numbering::from_order(order.iter().map(|c| c.index(cols)).collect())
        .expect("cell order covers the board once")
}

/// The down-diagonal lexicographic arrangement of the grid with `m >= n` columns
/// and `n` rows: cells are labelled by anti-diagonal, top-left to bottom-right
/// within each diagonal.
pub fn down_diagonal_lex(m: usize, n: usize) -> Result<Numbering> {
    if n == 0 || m < n {
        return Err(invalid(format!("need m >= n >= 1, got ({m}, {n})")));
    }
    let board = StaircaseBoard::from_cells(rectangle(m, n))?;
    Ok(numbering_from_cell_order(m, &board.diagonal_order()))
}

fn check_reduction_params(m: usize, n: usize, k: usize) -> Result<()> {
    if k == 0 || n <= 2 * k || m < n {
        return Err(invalid(format!(
            "need m >= n > 2k >= 2, got (m, n, k) = ({m}, {n}, {k})"
        )));
    }
    Ok(())
}

fn in_cut_block(n: usize, k: usize, c: GridCoord) -> bool {
    c.row <= k && c.col + k >= n
}

/// Reflection carrying the lower-right `k x (m - n + k + 1)` block to the right
/// edge of the board. It is an involution and preserves lattice adjacency.
pub fn flip_cell(m: usize, k: usize, c: GridCoord) -> GridCoord {
    GridCoord::new(m + k + 1 - c.col, m + k + 1 - c.row)
}

/// The board with the lower-right block cut out and reattached by [`flip_cell`].
pub fn modified_board(m: usize, n: usize, k: usize) -> Result<StaircaseBoard> {
    check_reduction_params(m, n, k)?;
    StaircaseBoard::from_cells(rectangle(m, n).map(|c| {
        if in_cut_block(n, k, c) {
            flip_cell(m, k, c)
        } else {
            c
        }
    }))
}

/// Ranks of the modified board's cells in down-diagonal order.
fn modified_ranks(board: &StaircaseBoard) -> BTreeMap<GridCoord, usize> {
    board
        .diagonal_order()
        .into_iter()
        .enumerate()
        .map(|(i, c)| (c, i + 1))
        .collect()
}

/// The modified board labelled in down-diagonal order, as text (top row first).
pub fn modified_board_text(m: usize, n: usize, k: usize) -> Result<String> {
    let board = modified_board(m, n, k)?;
    let ranks = modified_ranks(&board);
    Ok(board.to_text(|c| ranks[&c]))
}

/// Grid numbering with exactly `m - n + 2k` edges longer than `n - k`.
///
/// The modified board is numbered down-diagonally; each grid cell takes the label
/// of its image on the modified board.
pub fn modified_board_numbering(m: usize, n: usize, k: usize) -> Result<ConstructionReport> {
    let board = modified_board(m, n, k)?;
    let ranks = modified_ranks(&board);
    let labels = rectangle(m, n)
        .map(|c| {
            let image = if in_cut_block(n, k, c) {
                flip_cell(m, k, c)
            } else {
                c
            };
            ranks[&image]
        })
        .collect();
    ConstructionReport::from_numbering(m, n, Numbering::from_labels(labels)?, n - k)
}

/// Numbering of the `n x n` grid with two long edges (length at least `n`) that
/// share the bottom-row cell in column `n - 1`.
pub fn adjacent_reduction_numbering(n: usize) -> Result<ConstructionReport> {
    if n < 3 {
        return Err(invalid(format!("need n >= 3, got {n}")));
    }
    modified_board_numbering(n, n, 1)
}

/// Numbering of the `n x n` grid with two disjoint long edges, the vertical edges
/// below the two leftmost top-row cells.
///
/// Cells go in down-diagonal order except the top-row cells in columns 1 and 2,
/// which are held back: column 2 is placed after the last cell on diagonal
/// `n + 2`, column 1 after the last cell on diagonal `n + 3`.
pub fn nonadjacent_reduction_numbering(n: usize) -> Result<ConstructionReport> {
    if n < 3 {
        return Err(invalid(format!("need n >= 3, got {n}")));
    }
    let first = GridCoord::new(n, 1);
    let second = GridCoord::new(n, 2);
    let board = StaircaseBoard::from_cells(rectangle(n, n))?;
    let rest: Vec<GridCoord> = board
        .diagonal_order()
        .into_iter()
        .filter(|&c| c != first && c != second)
        .collect();
    let split_at = |d: usize| rest.iter().take_while(|c| c.diagonal() <= d).count();
    let (a, b) = (split_at(n + 2), split_at(n + 3));
    let mut order = Vec::with_capacity(n * n);
    order.extend_from_slice(&rest[..a]);
    order.push(second);
    order.extend_from_slice(&rest[a..b]);
    order.push(first);
    order.extend_from_slice(&rest[b..]);
    ConstructionReport::from_numbering(n, n, numbering_from_cell_order(n, &order), n - 1)
}

/// A fixed numbering of the 4x4 grid and the top-row edge (labels 7 and 13) whose
/// removal lowers the vertex-isoperimetric number to 3.
pub fn vi_example_board() -> (Numbering, Edge) {
    const TOP_DOWN: [[usize; 4]; 4] = [
        [7, 13, 15, 16],
        [4, 8, 12, 14],
        [2, 5, 9, 11],
        [1, 3, 6, 10],
    ];
    let mut labels = vec![0; 16];
    for (i, row) in TOP_DOWN.iter().enumerate() {
        for (j, &l) in row.iter().enumerate() {
            labels[GridCoord::new(4 - i, j + 1).index(4)] = l;
        }
    }
    let e = edge(GridCoord::new(4, 1).index(4), GridCoord::new(4, 2).index(4));
    (Numbering::from_labels(labels).expect("fixed board"), e)
}

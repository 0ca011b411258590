//! Character rendering of a numbered grid's adjacency matrix.
//!
//! Row and column `i` belong to the vertex labelled `i + 1`, so the band of
//! nonzero entries around the diagonal is the numbering's bandwidth.

use bandred::board::GridBoard;
use bandred::families::grid;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandReport {
    pub rows: Vec<String>,
    pub max_distance: usize,
    /// Symmetric pairs at exactly the given distance.
    pub at_distance: usize,
    /// Symmetric pairs beyond the given distance.
    pub beyond: usize,
}

/// Entries within `distance` print `#`, at exactly `distance` print `=`, beyond
/// it `!`; zero entries print `.`.
pub fn band(board: &GridBoard, distance: usize) -> BandReport {
    let g = grid(board.cols, board.rows).expect("board has positive size");
    let v = g.vertex_count();
    let nu = &board.numbering;
    let mut cells = vec![vec![b'.'; v]; v];
    let (mut max_distance, mut at_distance, mut beyond) = (0, 0, 0);
    for (a, b) in g.edges() {
        let (i, j) = (nu.label(a) - 1, nu.label(b) - 1);
        let d = i.abs_diff(j);
        max_distance = max_distance.max(d);
        let mark = match d.cmp(&distance) {
            std::cmp::Ordering::Less => b'#',
            std::cmp::Ordering::Equal => {
                at_distance += 1;
                b'='
            }
            std::cmp::Ordering::Greater => {
                beyond += 1;
                b'!'
            }
        };
        cells[i][j] = mark;
        cells[j][i] = mark;
    }
    BandReport {
        rows: cells
            .into_iter()
            .map(|r| String::from_utf8(r).expect("ascii"))
            .collect(),
        max_distance,
        at_distance,
        beyond,
    }
}

//! Board text format for numberings of rectangular grids.
//!
//! One line per row, top row first, labels separated by single spaces. The
//! reader accepts any whitespace between labels.

use crate::error::{Error, Result};
use crate::families::GridCoord;
use crate::numbering::Numbering;

/// A numbering of the grid with `cols` columns and `rows` rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridBoard {
    pub cols: usize,
    pub rows: usize,
    pub numbering: Numbering,
}

impl GridBoard {
    pub fn new(cols: usize, rows: usize, numbering: Numbering) -> Result<Self> {
        if cols * rows != numbering.len() || cols == 0 || rows == 0 {
            return Err(Error::SizeMismatch {
                graph: cols * rows,
                numbering: numbering.len(),
            });
        }
        Ok(GridBoard {
            cols,
            rows,
            numbering,
        })
    }

    pub fn label_at(&self, cell: GridCoord) -> usize {
        self.numbering.label(cell.index(self.cols))
    }

    fn rows_top_down(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (1..=self.rows).rev().map(move |r| {
            (1..=self.cols)
                .map(|c| self.label_at(GridCoord::new(r, c)))
                .collect()
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in self.rows_top_down() {
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Like [`GridBoard::to_text`] with right-aligned columns.
    pub fn to_aligned_text(&self) -> String {
        let width = self.numbering.len().to_string().len();
        let mut out = String::new();
        for row in self.rows_top_down() {
            let line: Vec<String> = row.iter().map(|l| format!("{l:>width$}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut rows_top_down = Vec::new();
        for (i, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: i + 1,
                        message: format!("not a label: {tok:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if let Some(first) = rows_top_down.first() {
                let first: &Vec<usize> = first;
                if first.len() != row.len() {
                    return Err(Error::Parse {
                        line: i + 1,
                        message: format!("expected {} labels, found {}", first.len(), row.len()),
                    });
                }
            }
            rows_top_down.push(row);
        }
        let rows = rows_top_down.len();
        if rows == 0 {
            return Err(Error::Parse {
                line: 1,
                message: "empty board".into(),
            });
        }
        let cols = rows_top_down[0].len();
        let mut labels = vec![0; rows * cols];
        for (i, row) in rows_top_down.iter().enumerate() {
            let r = rows - i;
            for (j, &l) in row.iter().enumerate() {
                labels[GridCoord::new(r, j + 1).index(cols)] = l;
            }
        }
        let numbering = Numbering::from_labels(labels)?;
        Ok(GridBoard {
            cols,
            rows,
            numbering,
        })
    }
}

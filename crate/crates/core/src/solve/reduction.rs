//! k-th bandwidth reduction numbers, computed two ways: as the fewest long edges
//! over all numberings, and directly as the fewest edge deletions.

use super::layout::{decide, exact_bandwidth_with, min_long_edges_with};
use super::{Budget, Exhausted, Meter, SearchOutcome, Status, Witness};
use crate::constructions::modified_board_numbering;
use crate::error::{invalid, Error, Result};
use crate::families::grid;
use crate::graph::{Edge, Graph};
use crate::numbering::Numbering;

fn unresolved(g: &Graph, lower_bound: usize, meter: &Meter) -> SearchOutcome {
    SearchOutcome {
        value: g.edge_count(),
        lower_bound,
        status: Status::Unknown,
        witness: None,
        nodes_expanded: meter.nodes(),
        elapsed: meter.elapsed(),
    }
}

/// Computes the bandwidth and the reduction target `b - k`, or the outcome to
/// return early when the bandwidth search runs out of budget.
fn target(
    g: &Graph,
    k: usize,
    meter: &mut Meter,
) -> Result<std::result::Result<usize, SearchOutcome>> {
    if g.edge_count() == 0 {
        return Err(Error::NotReducible);
    }
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    let bw = exact_bandwidth_with(g, meter)?;
    if bw.status != Status::Optimal {
        return Ok(Err(unresolved(g, 0, meter)));
    }
    if k > bw.value {
        return Err(invalid(format!(
            "k = {k} exceeds the bandwidth {}",
            bw.value
        )));
    }
    Ok(Ok(bw.value - k))
}

fn reduction_number_with(
    g: &Graph,
    k: usize,
    budget: Budget,
    seed: Option<&Numbering>,
) -> Result<SearchOutcome> {
    let mut meter = Meter::new(budget);
    match target(g, k, &mut meter)? {
        Ok(t) => min_long_edges_with(g, t, seed, &mut meter),
        Err(outcome) => Ok(outcome),
    }
}

/// Fewest edges longer than `b - k` over all numberings, where `b` is the
/// bandwidth of `g`.
pub fn reduction_number(g: &Graph, k: usize, budget: Budget) -> Result<SearchOutcome> {
    reduction_number_with(g, k, budget, None)
}

/// [`reduction_number`] for the grid with `m` columns and `n` rows, using the
/// cut-and-flip numbering as the initial incumbent when `m >= n > 2k`.
pub fn grid_reduction_number(
    m: usize,
    n: usize,
    k: usize,
    budget: Budget,
) -> Result<SearchOutcome> {
    let g = grid(m, n)?;
    let seed = if m >= n && n > 2 * k && k >= 1 {
        Some(modified_board_numbering(m, n, k)?.numbering)
    } else {
        None
    };
    reduction_number_with(&g, k, budget, seed.as_ref())
}

/// Advances `comb` to the next `comb.len()`-subset of `0..n` in lexicographic order.
fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let r = comb.len();
    let Some(i) = (0..r).rev().find(|&i| comb[i] < n - r + i) else {
        return false;
    };
    comb[i] += 1;
    for j in i + 1..r {
        comb[j] = comb[j - 1] + 1;
    }
    true
}

/// Fewest edge deletions that bring the bandwidth down to at most `b - k`.
///
/// Tries every deletion set of size 1, 2, ... in lexicographic edge order and
/// runs the bandwidth decision on what remains.
pub fn reduction_by_deletion(g: &Graph, k: usize, budget: Budget) -> Result<SearchOutcome> {
    let mut meter = Meter::new(budget);
    let t = match target(g, k, &mut meter)? {
        Ok(t) => t,
        Err(outcome) => return Ok(outcome),
    };
    let edges: Vec<Edge> = g.edges().collect();
    for size in 1..=edges.len() {
        let mut comb: Vec<usize> = (0..size).collect();
        loop {
            let removed: Vec<Edge> = comb.iter().map(|&j| edges[j]).collect();
            let rest = g.without_edges(&removed)?;
            match decide(&rest, t, &mut meter)? {
                Ok(Some(numbering)) => {
                    return Ok(SearchOutcome {
                        value: size,
                        lower_bound: size,
                        status: Status::Optimal,
                        witness: Some(Witness::Deletion {
                            edges: removed,
                            numbering,
                        }),
                        nodes_expanded: meter.nodes(),
                        elapsed: meter.elapsed(),
                    });
                }
                Ok(None) => {}
                Err(Exhausted) => return Ok(unresolved(g, size, &meter)),
            }
            if !next_combination(&mut comb, edges.len()) {
                break;
            }
        }
    }
    unreachable!("deleting every edge leaves bandwidth 0")
}

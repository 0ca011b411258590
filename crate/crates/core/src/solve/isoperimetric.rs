use std::time::Instant;

use super::{adjacency_masks, bits, full_mask, SearchOutcome, Status, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numbering::Numbering;

pub const DEFAULT_VI_CAP: usize = 20;
/// Hard ceiling on the table size regardless of the caller's cap.
const TABLE_LIMIT: usize = 30;

/// Exact vertex-isoperimetric number by dynamic programming over vertex subsets.
///
/// `best[S]` is the smallest possible maximum boundary over orderings that list
/// `S` first: `best[S] = max(boundary(S), min over u in S of best[S - u])`.
/// Uses `2^v` bytes, so graphs above `cap` vertices are rejected.
pub fn vertex_isoperimetric(g: &Graph, cap: usize) -> Result<SearchOutcome> {
    let start = Instant::now();
    let v = g.vertex_count();
    let limit = cap.min(TABLE_LIMIT);
    if v > limit {
        return Err(Error::TooLarge {
            vertex_count: v,
            limit,
        });
    }
    let adj = adjacency_masks(g)?;
    let full = full_mask(v);
    let boundary = |s: u64| bits(s).filter(|&u| adj[u] & full & !s != 0).count() as u8;

    let mut best = vec![0u8; 1 << v];
    for s in 1..=full {
        let inner = bits(s)
            .map(|u| best[(s & !(1 << u)) as usize])
            .min()
            .unwrap();
        best[s as usize] = inner.max(boundary(s));
    }

    let mut order_rev = Vec::with_capacity(v);
    let mut s = full;
    while s != 0 {
        let last = bits(s)
            .min_by_key(|&u| best[(s & !(1 << u)) as usize])
            .unwrap();
        order_rev.push(last);
        s &= !(1 << last);
    }
    order_rev.reverse();
    let value = best[full as usize] as usize;
    Ok(SearchOutcome {
        value,
        lower_bound: value,
        status: Status::Optimal,
        witness: Some(Witness::Numbering(Numbering::from_order(order_rev)?)),
        nodes_expanded: 1 << v,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, grid, path};
    use crate::numbering::vertex_isoperimetric_of_numbering;

    #[test]
    fn small_values() {
        assert_eq!(
            vertex_isoperimetric(&path(7).unwrap(), 20).unwrap().value,
            1
        );
        assert_eq!(
            vertex_isoperimetric(&complete(5).unwrap(), 20)
                .unwrap()
                .value,
            4
        );
        assert_eq!(
            vertex_isoperimetric(&grid(3, 3).unwrap(), 20)
                .unwrap()
                .value,
            3
        );
        assert_eq!(vertex_isoperimetric(&Graph::empty(1), 20).unwrap().value, 0);
    }

    #[test]
    fn witness_attains_value() {
        let g = grid(4, 3).unwrap();
        let out = vertex_isoperimetric(&g, 20).unwrap();
        let nu = out.witness.unwrap();
        assert_eq!(
            vertex_isoperimetric_of_numbering(&g, nu.numbering()).unwrap(),
            out.value
        );
    }

    #[test]
    fn cap_is_enforced() {
        let g = grid(5, 5).unwrap();
        assert_eq!(
            vertex_isoperimetric(&g, 20),
            Err(Error::TooLarge {
                vertex_count: 25,
                limit: 20
            })
        );
        assert!(vertex_isoperimetric(&path(5).unwrap(), 4).is_err());
    }
}

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// `ceil((v - 1) / d)` for a connected graph with diameter `d`: a numbering of
/// bandwidth `b` reaches at most `1 + d * b` labels from any vertex.
pub fn diameter_lower_bound(g: &Graph) -> Result<usize> {
    let v = g.vertex_count();
    if v < 2 {
        return Err(invalid("diameter bound needs at least two vertices"));
    }
    let d = g.diameter()?;
    Ok((v - 1).div_ceil(d))
}

/// Largest `v - k` such that the graph has more than `v(v-1)/2 - k(k+1)/2` edges.
///
/// Every numbering of `K_v` has exactly `k(k+1)/2` edges longer than `v - 1 - k`,
/// so a graph that dense cannot avoid all of them. Returns 0 when no `k`
/// qualifies.
pub fn density_lower_bound(g: &Graph) -> usize {
    let v = g.vertex_count();
    let e = g.edge_count();
    let pairs = v * v.saturating_sub(1) / 2;
    (1..v)
        .find(|&k| e > pairs - k * (k + 1) / 2)
        .map_or(0, |k| v - k)
}

/// `k(k+1)/2`, the k-th bandwidth reduction number of the complete graph `K_n`.
pub fn brk_complete_formula(n: usize, k: usize) -> Result<usize> {
    if k == 0 || k >= n {
        return Err(invalid(format!(
            "need 1 <= k <= n - 1, got (n, k) = ({n}, {k})"
        )));
    }
    Ok(k * (k + 1) / 2)
}

/// Best cheap lower bound on the bandwidth: the diameter bound on each component,
/// the density bound, and half the maximum degree.
pub fn lower_bound(g: &Graph) -> usize {
    let mut best = density_lower_bound(g).max(g.max_degree().div_ceil(2));
    for comp in g.components() {
        if comp.len() >= 2 {
            let sub = g.induced(&comp);
            match diameter_lower_bound(&sub) {
                Ok(b) => best = best.max(b),
                Err(Error::Disconnected) => unreachable!("components are connected"),
                Err(_) => {}
            }
        }
    }
    best
}

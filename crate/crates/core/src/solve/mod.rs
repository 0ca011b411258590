//! Exact solvers.
//!
//! All searches are single-threaded and deterministic: identical inputs and node
//! budgets give identical values, statuses and node counts. Running out of budget
//! is reported through [`Status`], never as an error.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::numbering::Numbering;

mod bounds;
mod isoperimetric;
mod layout;
mod reduction;

pub use bounds::{brk_complete_formula, density_lower_bound, diameter_lower_bound, lower_bound};
pub use isoperimetric::{vertex_isoperimetric, DEFAULT_VI_CAP};
pub use layout::{bandwidth_decision, exact_bandwidth, min_long_edges, min_long_edges_from};
pub use reduction::{grid_reduction_number, reduction_by_deletion, reduction_number};

/// Largest graph the bitmask searches accept.
pub const MAX_SEARCH_VERTICES: usize = 64;

/// Limits on a search. Exceeding either limit stops the search with a
/// non-optimal status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub const fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            time_limit: None,
        }
    }

    pub const fn unlimited() -> Self {
        Budget::nodes(u64::MAX)
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::nodes(100_000_000)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    /// The value is proven optimal.
    Optimal,
    /// The witness achieves the value; optimality was not established.
    UpperBound,
    /// The budget ran out before any conclusion.
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Optimal => "optimal",
            Status::UpperBound => "upper_bound",
            Status::Unknown => "unknown",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Numbering(Numbering),
    /// Deleted edges, and a numbering of the remaining graph achieving the target.
    Deletion {
        edges: Vec<Edge>,
        numbering: Numbering,
    },
}

impl Witness {
    pub fn numbering(&self) -> &Numbering {
        match self {
            Witness::Numbering(nu) | Witness::Deletion { numbering: nu, .. } => nu,
        }
    }
}

/// Result of a search.
///
/// `value` is the optimum when `status` is optimal and otherwise the best upper
/// bound known; `lower_bound` is the best proven lower bound (equal to `value`
/// when optimal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub value: usize,
    pub lower_bound: usize,
    pub status: Status,
    pub witness: Option<Witness>,
    pub nodes_expanded: u64,
    pub elapsed: Duration,
}

impl SearchOutcome {
    pub fn is_optimal(&self) -> bool {
        self.status == Status::Optimal
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Answer {
    Yes(Numbering),
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub answer: Answer,
    pub nodes_expanded: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Exhausted;

pub(crate) struct Meter {
    nodes: u64,
    max_nodes: u64,
    start: Instant,
    deadline: Option<Instant>,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        let start = Instant::now();
        Meter {
            nodes: 0,
            max_nodes: budget.max_nodes,
            start,
            deadline: budget.time_limit.map(|d| start + d),
        }
    }

    /// Counts one search node.
    pub(crate) fn tick(&mut self) -> std::result::Result<(), Exhausted> {
        if self.nodes >= self.max_nodes {
            return Err(Exhausted);
        }
        self.nodes += 1;
        if let Some(deadline) = self.deadline {
            if self.nodes.is_multiple_of(4096) && Instant::now() >= deadline {
                self.max_nodes = self.nodes;
            }
        }
        Ok(())
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }

    pub(crate) fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }
}

pub(crate) fn adjacency_masks(g: &Graph) -> Result<Vec<u64>> {
    if g.vertex_count() > MAX_SEARCH_VERTICES {
        return Err(Error::TooLarge {
            vertex_count: g.vertex_count(),
            limit: MAX_SEARCH_VERTICES,
        });
    }
    Ok((0..g.vertex_count())
        .map(|u| g.neighbors(u).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect())
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub(crate) fn full_mask(v: usize) -> u64 {
    if v == 64 {
        u64::MAX
    } else {
        (1u64 << v) - 1
    }
}

//! Left-to-right layout searches: the bandwidth decision procedure and the
//! branch-and-bound for the fewest edges longer than a threshold.
//!
//! Both place vertices at positions `0, 1, ...` in turn. A placed vertex whose
//! position is within the threshold of the next free slot and that still has
//! unplaced neighbors is *active*; placed vertices further back are *old*. The
//! remaining subproblem depends only on the placed set, the first vertex (for
//! reversal symmetry) and the active window, which keys the memo tables.

use std::collections::{HashMap, HashSet};

use super::{
    adjacency_masks, bits, bounds, full_mask, Answer, Budget, Decision, Exhausted, Meter,
    SearchOutcome, Status, Witness,
};
use crate::error::Result;
use crate::graph::Graph;
use crate::numbering::{bandwidth_of_numbering, count_edges_longer_than, Numbering};

const MEMO_LIMIT: usize = 1 << 23;
const NO_VERTEX: u64 = u64::MAX;

struct Placement<'a> {
    adj: &'a [u64],
    full: u64,
    order: Vec<usize>,
    pos: Vec<usize>,
    placed: u64,
}

impl<'a> Placement<'a> {
    fn new(adj: &'a [u64]) -> Self {
        let v = adj.len();
        Placement {
            adj,
            full: full_mask(v),
            order: Vec::with_capacity(v),
            pos: vec![usize::MAX; v],
            placed: 0,
        }
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    fn push(&mut self, u: usize) {
        self.pos[u] = self.order.len();
        self.order.push(u);
        self.placed |= 1 << u;
    }

    fn pop(&mut self) {
        let u = self.order.pop().expect("non-empty placement");
        self.pos[u] = usize::MAX;
        self.placed &= !(1 << u);
    }

    fn unplaced(&self) -> u64 {
        self.full & !self.placed
    }

    /// Reversal symmetry: the last vertex must have a larger id than the first,
    /// so some unplaced vertex must still exceed the first.
    fn symmetry_allows(&self) -> bool {
        match self.order.first() {
            Some(&f) if self.len() >= 2 => self.unplaced() >> f >> 1 != 0,
            _ => true,
        }
    }

    fn first_key(&self) -> u64 {
        self.order.first().map_or(NO_VERTEX, |&f| f as u64)
    }

    /// Unplaced vertices grouped by the latest slot (as an offset from the next
    /// free slot, `0..width`) that keeps them within `width` of every placed
    /// neighbor. Vertices without placed neighbors in the window are omitted.
    fn deadlines(&self, width: usize) -> Vec<u64> {
        let i = self.order.len();
        let unplaced = self.unplaced();
        let mut by_offset = vec![0u64; width];
        let mut seen = 0u64;
        for q in i.saturating_sub(width)..i {
            let fresh = self.adj[self.order[q]] & unplaced & !seen;
            if fresh != 0 {
                by_offset[q + width - i] |= fresh;
                seen |= fresh;
            }
        }
        by_offset
    }
}

/// Most vertices that can miss their deadlines: `max_x (#deadline <= x) - (x + 1)`.
fn deadline_overflow(by_offset: &[u64]) -> usize {
    let mut acc = 0usize;
    let mut worst = 0usize;
    for (x, m) in by_offset.iter().enumerate() {
        acc += m.count_ones() as usize;
        worst = worst.max(acc.saturating_sub(x + 1));
    }
    worst
}

struct BandSearch<'a> {
    p: Placement<'a>,
    width: usize,
    failed: HashSet<Vec<u64>>,
}

impl BandSearch<'_> {
    fn run(&mut self, meter: &mut Meter) -> std::result::Result<bool, Exhausted> {
        meter.tick()?;
        if self.p.order.len() == self.p.len() {
            return Ok(true);
        }
        if !self.p.symmetry_allows() {
            return Ok(false);
        }
        let by_offset = self.p.deadlines(self.width);
        if deadline_overflow(&by_offset) > 0 {
            return Ok(false);
        }
        let mut key = Vec::with_capacity(self.width + 2);
        key.push(self.p.placed);
        key.push(self.p.first_key());
        key.extend_from_slice(&by_offset);
        if self.failed.contains(&key) {
            return Ok(false);
        }
        // A vertex due now is forced.
        let candidates = if by_offset[0] != 0 {
            by_offset[0]
        } else {
            self.p.unplaced()
        };
        for c in bits(candidates) {
            self.p.push(c);
            if self.run(meter)? {
                return Ok(true);
            }
            self.p.pop();
        }
        if self.failed.len() < MEMO_LIMIT {
            self.failed.insert(key);
        }
        Ok(false)
    }
}

/// Searches for an order of bandwidth at most `width`. `Ok(None)` means none exists.
pub(crate) fn decide(
    g: &Graph,
    width: usize,
    meter: &mut Meter,
) -> Result<std::result::Result<Option<Numbering>, Exhausted>> {
    let adj = adjacency_masks(g)?;
    let v = g.vertex_count();
    if g.edge_count() == 0 || width + 1 >= v {
        return Ok(Ok(Some(Numbering::identity(v))));
    }
    if width == 0 {
        return Ok(Ok(None));
    }
    let mut search = BandSearch {
        p: Placement::new(&adj),
        width,
        failed: HashSet::new(),
    };
    Ok(search.run(meter).map(|found| {
        found.then(|| Numbering::from_order(search.p.order.clone()).expect("complete order"))
    }))
}

/// Whether some numbering of `g` has bandwidth at most `b`.
pub fn bandwidth_decision(g: &Graph, b: usize, budget: Budget) -> Result<Decision> {
    let mut meter = Meter::new(budget);
    let answer = match decide(g, b, &mut meter)? {
        Ok(Some(nu)) => Answer::Yes(nu),
        Ok(None) => Answer::No,
        Err(Exhausted) => Answer::Unknown,
    };
    Ok(Decision {
        answer,
        nodes_expanded: meter.nodes(),
        elapsed: meter.elapsed(),
    })
}

pub(crate) fn exact_bandwidth_with(g: &Graph, meter: &mut Meter) -> Result<SearchOutcome> {
    let v = g.vertex_count();
    let identity = Numbering::identity(v);
    let upper = bandwidth_of_numbering(g, &identity)?;
    let mut lower = bounds::lower_bound(g).min(upper);
    let outcome = |value, lower_bound, status, nu: Numbering, meter: &Meter| SearchOutcome {
        value,
        lower_bound,
        status,
        witness: Some(Witness::Numbering(nu)),
        nodes_expanded: meter.nodes(),
        elapsed: meter.elapsed(),
    };
    while lower < upper {
        match decide(g, lower, meter)? {
            Ok(Some(nu)) => return Ok(outcome(lower, lower, Status::Optimal, nu, meter)),
            Ok(None) => lower += 1,
            Err(Exhausted) => return Ok(outcome(upper, lower, Status::Unknown, identity, meter)),
        }
    }
    Ok(outcome(upper, upper, Status::Optimal, identity, meter))
}

/// The bandwidth of `g`, searching upward from the cheap lower bounds.
pub fn exact_bandwidth(g: &Graph, budget: Budget) -> Result<SearchOutcome> {
    exact_bandwidth_with(g, &mut Meter::new(budget))
}

struct LongEdgeSearch<'a> {
    p: Placement<'a>,
    threshold: usize,
    best: usize,
    best_order: Option<Vec<usize>>,
    /// Lower bounds on the remaining cost, not counting edges from old vertices.
    memo: HashMap<Vec<u64>, usize>,
}

impl LongEdgeSearch<'_> {
    fn run(&mut self, cost: usize, meter: &mut Meter) -> std::result::Result<(), Exhausted> {
        meter.tick()?;
        let v = self.p.len();
        let i = self.p.order.len();
        if i == v {
            if cost < self.best {
                self.best = cost;
                self.best_order = Some(self.p.order.clone());
            }
            return Ok(());
        }
        if !self.p.symmetry_allows() {
            return Ok(());
        }
        let t = self.threshold;
        let unplaced = self.p.unplaced();
        let lo = i.saturating_sub(t);
        let mut old = 0u64;
        let mut old_edges = 0usize;
        for &u in &self.p.order[..lo] {
            old |= 1 << u;
            old_edges += (self.p.adj[u] & unplaced).count_ones() as usize;
        }

        let mut key = Vec::with_capacity(t + 2);
        key.push(self.p.placed);
        key.push(self.p.first_key());
        key.extend(std::iter::repeat_n(0, t - (i - lo)));
        // Each active vertex can keep at most its remaining short slots.
        let mut excess = 0usize;
        for q in lo..i {
            let pending = self.p.adj[self.p.order[q]] & unplaced;
            key.push(pending);
            let slots = (q + t).min(v - 1) + 1 - i;
            excess += (pending.count_ones() as usize).saturating_sub(slots);
        }
        let mut by_offset = self.p.deadlines(t);
        // Slots past the end do not exist.
        let last = v - 1 - i;
        if last + 1 < t {
            let tail = by_offset[last + 1..].iter().fold(0, |a, m| a | m);
            by_offset[last] |= tail;
            by_offset.truncate(last + 1);
        }
        let mut window_bound = excess.max(deadline_overflow(&by_offset));
        if let Some(&known) = self.memo.get(&key) {
            window_bound = window_bound.max(known);
        }
        if cost + old_edges + window_bound >= self.best {
            return Ok(());
        }

        let mut candidates: Vec<(usize, usize)> = bits(unplaced)
            .map(|c| ((self.p.adj[c] & old).count_ones() as usize, c))
            .collect();
        candidates.sort_unstable();
        for (delta, c) in candidates {
            self.p.push(c);
            self.run(cost + delta, meter)?;
            self.p.pop();
            if self.best == 0 {
                break;
            }
        }
        let future = self.best.saturating_sub(cost + old_edges);
        if self.memo.len() < MEMO_LIMIT || self.memo.contains_key(&key) {
            let slot = self.memo.entry(key).or_insert(0);
            *slot = (*slot).max(future);
        }
        Ok(())
    }
}

pub(crate) fn min_long_edges_with(
    g: &Graph,
    t: usize,
    initial: Option<&Numbering>,
    meter: &mut Meter,
) -> Result<SearchOutcome> {
    let adj = adjacency_masks(g)?;
    let v = g.vertex_count();
    let done = |value: usize, nu: Numbering, meter: &Meter| SearchOutcome {
        value,
        lower_bound: value,
        status: Status::Optimal,
        witness: Some(Witness::Numbering(nu)),
        nodes_expanded: meter.nodes(),
        elapsed: meter.elapsed(),
    };
    if g.edge_count() == 0 || t + 1 >= v {
        return Ok(done(0, Numbering::identity(v), meter));
    }
    if t == 0 {
        return Ok(done(g.edge_count(), Numbering::identity(v), meter));
    }
    let mut search = LongEdgeSearch {
        p: Placement::new(&adj),
        threshold: t,
        best: g.edge_count() + 1,
        best_order: None,
        memo: HashMap::new(),
    };
    if let Some(nu) = initial {
        search.best = count_edges_longer_than(g, nu, t)?;
        search.best_order = Some(nu.order().to_vec());
    }
    let finished = search.best == 0 || search.run(0, meter).is_ok();
    let witness = search
        .best_order
        .map(|order| Witness::Numbering(Numbering::from_order(order).expect("complete order")));
    let status = match (finished, &witness) {
        (true, _) => Status::Optimal,
        (false, Some(_)) => Status::UpperBound,
        (false, None) => Status::Unknown,
    };
    let value = if witness.is_some() {
        search.best
    } else {
        g.edge_count()
    };
    Ok(SearchOutcome {
        value,
        lower_bound: if finished { value } else { 0 },
        status,
        witness,
        nodes_expanded: meter.nodes(),
        elapsed: meter.elapsed(),
    })
}

/// Fewest edges longer than `t` over all numberings of `g`.
pub fn min_long_edges(g: &Graph, t: usize, budget: Budget) -> Result<SearchOutcome> {
    min_long_edges_from(g, t, budget, None)
}

/// [`min_long_edges`] seeded with a known numbering as the initial incumbent.
pub fn min_long_edges_from(
    g: &Graph,
    t: usize,
    budget: Budget,
    initial: Option<&Numbering>,
) -> Result<SearchOutcome> {
    min_long_edges_with(g, t, initial, &mut Meter::new(budget))
}

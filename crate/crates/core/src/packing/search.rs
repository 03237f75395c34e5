//! Backtracking decision procedure for "is there a packing coloring of the
//! host graph with colors `1..=k`?".
//!
//! Vertices are branched in a fixed order: decreasing degree in the `k`-th
//! distance power, ties by index. Colors are tried in ascending order, so
//! the first witness found is the lexicographically first one under that
//! vertex order. Each node is pruned when
//!
//! * some uncolored vertex has no color left, or
//! * the colors' residual room cannot cover the uncolored vertices. The room
//!   of color `i` is the smallest of its unused capacity, the number of
//!   uncolored vertices still allowed `i`, and a clique-cover bound on how
//!   many of those can share `i`.

use std::rc::Rc;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::DistanceMatrix;
use crate::independent::ConflictGraph;

use super::capacity::{CapacityProfile, PowerGraphs};
use super::Color;

/// Limits on a computation. Exhausting either yields a timeout, never a
/// refutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 100_000_000,
            max_time: Duration::from_secs(600),
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            ..Budget::default()
        }
    }
}

/// Node and clock accounting shared by every search of one computation.
#[derive(Debug)]
pub struct Meter {
    budget: Budget,
    started: Instant,
    nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct OutOfBudget;

impl Meter {
    pub fn new(budget: Budget) -> Self {
        Meter {
            budget,
            started: Instant::now(),
            nodes: 0,
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn elapsed(&self) -> Duration {
        self.started.elapsed()
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(OutOfBudget);
        }
        if self.nodes.is_multiple_of(4096) && self.started.elapsed() > self.budget.max_time {
            return Err(OutOfBudget);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KOutcome {
    Colorable(Vec<Color>),
    /// Refuted by the capacity count alone.
    CapacityInfeasible {
        covered: usize,
        needed: usize,
    },
    /// Refuted by exhaustive search.
    Infeasible,
    Timeout,
}

impl KOutcome {
    pub fn is_infeasible(&self) -> bool {
        matches!(
            self,
            KOutcome::Infeasible | KOutcome::CapacityInfeasible { .. }
        )
    }
}

/// Decides whether the host graph with distances `d` has a packing coloring
/// with colors `1..=k`.
pub fn solve_k(d: &DistanceMatrix, k: Color, budget: Budget) -> KOutcome {
    solve_k_metered(d, k, &mut Meter::new(budget))
}

/// [`solve_k`] charging its work to an existing meter.
pub fn solve_k_metered(d: &DistanceMatrix, k: Color, meter: &mut Meter) -> KOutcome {
    let powers = PowerGraphs::new(d);
    let caps = CapacityProfile::new(&powers);
    decide(&powers, &caps, k, meter)
}

pub(crate) fn decide(
    powers: &PowerGraphs<'_>,
    caps: &CapacityProfile<'_>,
    k: Color,
    meter: &mut Meter,
) -> KOutcome {
    let n = powers.distances().len();
    if n == 0 {
        return KOutcome::Colorable(Vec::new());
    }
    if k == 0 {
        return KOutcome::CapacityInfeasible {
            covered: 0,
            needed: n,
        };
    }
    let covered = caps.total(k);
    if covered < n {
        return KOutcome::CapacityInfeasible { covered, needed: n };
    }
    let mut search = Search::new(powers, caps, k);
    match search.run(meter) {
        Ok(true) => KOutcome::Colorable(search.colors),
        Ok(false) => KOutcome::Infeasible,
        Err(OutOfBudget) => KOutcome::Timeout,
    }
}

struct Search {
    k: usize,
    /// `powers[c]` is the conflict graph of color `c + 1`.
    powers: Vec<Rc<ConflictGraph>>,
    caps: Vec<usize>,
    order: Vec<usize>,
    forbidden: Vec<VertexSet>,
    used: Vec<usize>,
    uncolored: VertexSet,
    colors: Vec<Color>,
    saved: Vec<VertexSet>,
    /// Colors from this index on share one conflict graph, so an unused one
    /// is as good as any other.
    interchangeable: usize,
}

impl Search {
    fn new(powers: &PowerGraphs<'_>, caps: &CapacityProfile<'_>, k: Color) -> Self {
        let n = powers.distances().len();
        let graphs: Vec<_> = (1..=k).map(|c| powers.power(c)).collect();
        let widest = &graphs[k as usize - 1];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(widest.conflicts(v).len()), v));
        Search {
            k: k as usize,
            powers: graphs,
            caps: caps.profile(k),
            order,
            forbidden: vec![VertexSet::new(n); k as usize],
            used: vec![0; k as usize],
            uncolored: VertexSet::full(n),
            colors: vec![0; n],
            saved: vec![VertexSet::new(n); n],
            interchangeable: powers.distances().max_finite().max(1) as usize - 1,
        }
    }

    fn run(&mut self, meter: &mut Meter) -> Result<bool, OutOfBudget> {
        self.descend(0, meter)
    }

    fn descend(&mut self, depth: usize, meter: &mut Meter) -> Result<bool, OutOfBudget> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        let mut opened = false;
        for c in 0..self.k {
            if self.forbidden[c].contains(v) || self.used[c] >= self.caps[c] {
                continue;
            }
            if c >= self.interchangeable && self.used[c] == 0 {
                if opened {
                    continue;
                }
                opened = true;
            }
            meter.tick()?;
            self.saved[depth].clone_from(&self.forbidden[c]);
            self.forbidden[c].union_with(self.powers[c].conflicts(v));
            self.used[c] += 1;
            self.uncolored.remove(v);
            self.colors[v] = c as Color + 1;

            if self.can_finish() && self.descend(depth + 1, meter)? {
                return Ok(true);
            }

            self.colors[v] = 0;
            self.uncolored.insert(v);
            self.used[c] -= 1;
            std::mem::swap(&mut self.forbidden[c], &mut self.saved[depth]);
        }
        Ok(false)
    }

    fn can_finish(&self) -> bool {
        let remaining = self.uncolored.len();
        if remaining == 0 {
            return true;
        }
        let mut reachable = VertexSet::new(self.uncolored.capacity());
        let mut room = 0;
        for c in 0..self.k {
            let free = self.caps[c] - self.used[c];
            if free == 0 {
                continue;
            }
            let mut eligible = self.uncolored.clone();
            eligible.difference_with(&self.forbidden[c]);
            let count = eligible.len();
            if count == 0 {
                continue;
            }
            let mut bound = free.min(count);
            if bound > 1 {
                bound = bound.min(self.powers[c].clique_cover_bound(&eligible));
            }
            room += bound;
            reachable.union_with(&eligible);
        }
        room >= remaining && reachable.len() == remaining
    }
}

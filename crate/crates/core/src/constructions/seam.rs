//! Bounded recoloring of a window of host vertices.
//!
//! Every vertex outside the window keeps its color. Window vertices are
//! recolored by backtracking in ascending index order; each vertex first
//! tries its current color and then `1..=max_color` ascending, so the
//! result is the first valid completion under that fixed order and changes
//! as little as the order allows.

use std::rc::Rc;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{DistanceMatrix, LabeledGraph, UNREACHABLE};
use crate::independent::ConflictGraph;
use crate::packing::{Budget, Color, Meter, OutOfBudget, PackingColoring, PowerGraphs};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepairError {
    #[error("no valid recoloring of the window with colors up to {max_color}")]
    NoCompletion { max_color: Color },
    #[error("repair search ran out of budget after {nodes} nodes")]
    Timeout { nodes: u64 },
    #[error("conflict between {a} and {b} lies outside the window")]
    ConflictOutsideWindow { a: usize, b: usize },
    #[error("max_color {max_color} is below the largest color in use ({used})")]
    MaxColorTooSmall { max_color: Color, used: Color },
    #[error("coloring has {found} colors for {expected} host vertices")]
    SizeMismatch { expected: usize, found: usize },
}

/// Recolors the host vertices in `window` so that the coloring becomes a
/// valid packing coloring of `t.graph` using colors `1..=max_color`.
/// `d` is the distance matrix of `t.graph`; `c` is indexed like `t.labels`.
pub fn seam_repair(
    t: &LabeledGraph,
    d: &DistanceMatrix,
    c: &PackingColoring,
    window: &VertexSet,
    max_color: Color,
    budget: Budget,
) -> Result<PackingColoring, RepairError> {
    let n = t.graph.vertex_count();
    let colors = c.colors();
    if colors.len() != n {
        return Err(RepairError::SizeMismatch {
            expected: n,
            found: colors.len(),
        });
    }
    if c.max_color() > max_color {
        return Err(RepairError::MaxColorTooSmall {
            max_color,
            used: c.max_color(),
        });
    }
    for a in 0..n {
        for b in a + 1..n {
            let dist = d.get(a, b);
            let clash = colors[a] == colors[b] && dist != UNREACHABLE && dist <= colors[a];
            if clash && !window.contains(a) && !window.contains(b) {
                return Err(RepairError::ConflictOutsideWindow { a, b });
            }
        }
    }

    let powers = PowerGraphs::new(d);
    let balls: Vec<_> = (1..=max_color).map(|i| powers.power(i)).collect();
    let mut forbidden = vec![VertexSet::new(n); max_color as usize];
    for v in (0..n).filter(|&v| !window.contains(v)) {
        let slot = colors[v] as usize - 1;
        forbidden[slot].union_with(balls[slot].conflicts(v));
    }

    let order: Vec<usize> = window.iter().collect();
    let mut repair = Repair {
        balls: &balls,
        order: &order,
        original: colors,
        forbidden,
        result: colors.to_vec(),
        pending: window.clone(),
    };
    let mut meter = Meter::new(budget);
    match repair.descend(0, &mut meter) {
        Ok(true) => {
            let mut out = c.clone();
            *out.colors_mut() = repair.result;
            Ok(out)
        }
        Ok(false) => Err(RepairError::NoCompletion { max_color }),
        Err(_) => Err(RepairError::Timeout {
            nodes: meter.nodes(),
        }),
    }
}

struct Repair<'a> {
    balls: &'a [Rc<ConflictGraph>],
    order: &'a [usize],
    original: &'a [Color],
    forbidden: Vec<VertexSet>,
    result: Vec<Color>,
    pending: VertexSet,
}

impl Repair<'_> {
    fn candidates(&self, v: usize) -> impl Iterator<Item = Color> {
        let first = self.original[v];
        let max = self.forbidden.len() as Color;
        std::iter::once(first).chain((1..=max).filter(move |&c| c != first))
    }

    fn descend(&mut self, depth: usize, meter: &mut Meter) -> Result<bool, OutOfBudget> {
        let Some(&v) = self.order.get(depth) else {
            return Ok(true);
        };
        let candidates: Vec<Color> = self.candidates(v).collect();
        for color in candidates {
            let slot = color as usize - 1;
            if self.forbidden[slot].contains(v) {
                continue;
            }
            meter.tick()?;
            let saved = self.forbidden[slot].clone();
            self.forbidden[slot].union_with(self.balls[slot].conflicts(v));
            self.pending.remove(v);
            self.result[v] = color;
            if self.every_pending_has_a_color() && self.descend(depth + 1, meter)? {
                return Ok(true);
            }
            self.pending.insert(v);
            self.forbidden[slot] = saved;
        }
        self.result[v] = self.original[v];
        Ok(false)
    }

    fn every_pending_has_a_color(&self) -> bool {
        self.pending
            .iter()
            .all(|u| self.forbidden.iter().any(|f| !f.contains(u)))
    }
}

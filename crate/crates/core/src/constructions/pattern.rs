use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{generate, Element, Family, Graph};
use crate::packing::{violations, Color, PackingColoring, Target};

use super::{cycle_element, ConstructionError};

/// One period of an 8-color packing coloring of the distance graph
/// `D(1,2)` (integers, `i ~ j` iff `|i - j|` is 1 or 2).
const D12_PERIOD: [Color; 54] = [
    8, 1, 2, 6, 1, 4, 3, 2, 1, 5, 7, 1, 2, 3, 4, 1, 6, 2, 1, 8, 3, 1, 2, 4, 1, 5, 7, 1, 3, 2, 1, 6,
    4, 1, 2, 3, 1, 8, 5, 1, 2, 4, 1, 3, 6, 1, 2, 7, 1, 5, 4, 2, 1, 3,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PatternTable {
    colors: &'static [Color; 54],
}

impl PatternTable {
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn colors(&self) -> &'static [Color] {
        self.colors
    }

    /// Color at an integer position, extended periodically.
    pub fn at(&self, position: usize) -> Color {
        self.colors[position % self.colors.len()]
    }

    pub fn count(&self, color: Color) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }
}

pub fn d12_pattern() -> PatternTable {
    PatternTable {
        colors: &D12_PERIOD,
    }
}

/// The statements describing where the raw pattern can clash across the
/// seam `u_n u_1` of a cycle. Vertices are `u_1..u_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SeamTag {
    /// `c(u_n u_1)` is 1 or 5.
    A,
    /// `u_n` or `u_n u_1` has color 2.
    B,
    /// `u_n`, `u_n u_1` or `u_{n-1} u_n` has color 4.
    C,
    /// Color 6 within `u_{n-4} u_{n-3}, ..., u_n u_1`.
    D,
    /// Color 7 within `u_{n-1}, ..., u_n u_1`.
    E,
    /// Color 8 within `u_{n-7}, ..., u_n u_1`.
    F,
}

impl fmt::Display for SeamTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeamConflict {
    pub a: Element,
    pub b: Element,
    pub color: Color,
    pub distance: u32,
    pub tag: Option<SeamTag>,
}

/// Position of an element in the cyclic order `u_1, u_1u_2, u_2, ...,
/// u_n, u_nu_1` (0-based), on the canonically numbered cycle.
pub(crate) fn cycle_position(n: usize, e: &Element) -> usize {
    match *e {
        Element::Vertex(v) => 2 * v,
        Element::Edge(0, v) if v == n - 1 => 2 * n - 1,
        Element::Edge(u, _) => 2 * u + 1,
    }
}

fn tag_for(n: usize, e: &Element, color: Color) -> Option<SeamTag> {
    // number of elements before the seam edge u_n u_1
    let back = 2 * n - 1 - cycle_position(n, e);
    match color {
        1 | 5 if back == 0 => Some(SeamTag::A),
        2 if back <= 1 => Some(SeamTag::B),
        4 if back <= 2 => Some(SeamTag::C),
        6 if back <= 8 => Some(SeamTag::D),
        7 if back <= 3 => Some(SeamTag::E),
        8 if back <= 15 => Some(SeamTag::F),
        _ => None,
    }
}

/// Applies the pattern along `u_1, u_1u_2, u_2, ..., u_n, u_nu_1` and lists
/// the resulting conflicts.
pub fn pattern_on_cycle(
    n: usize,
) -> Result<(PackingColoring, Vec<SeamConflict>), ConstructionError> {
    if n < 13 {
        return Err(ConstructionError::TooSmall {
            family: "cycle",
            min: 13,
            n,
        });
    }
    let g = generate(Family::Cycle(n))?;
    let pattern = d12_pattern();
    let pairs = (0..2 * n).map(|p| (cycle_element(n, p), pattern.at(p)));
    let coloring = PackingColoring::from_assignments(&g, Target::Total, pairs)?;
    let conflicts = seam_conflicts(&g, &coloring)?;
    Ok((coloring, conflicts))
}

pub(crate) fn seam_conflicts(
    g: &Graph,
    c: &PackingColoring,
) -> Result<Vec<SeamConflict>, ConstructionError> {
    let n = g.vertex_count();
    Ok(violations(g, c)?
        .into_iter()
        .map(|v| SeamConflict {
            a: v.a,
            b: v.b,
            color: v.color,
            distance: v.distance,
            tag: tag_for(n, &v.a, v.color).or_else(|| tag_for(n, &v.b, v.color)),
        })
        .collect())
}

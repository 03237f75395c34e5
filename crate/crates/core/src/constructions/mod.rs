//! Explicit packing total colorings of stars, paths and cycles.
//!
//! Short paths and cycles use fixed tables. Longer ones reuse the periodic
//! 8-color coloring of the distance graph `D(1,2)`: the total graph of a
//! path is a segment of it, and on a cycle the pattern only breaks near the
//! wrap-around edge, where [`seam_repair`] recolors a bounded window.

mod pattern;
mod seam;

pub use pattern::{d12_pattern, pattern_on_cycle, PatternTable, SeamConflict, SeamTag};
pub use seam::{seam_repair, RepairError};

use std::collections::BTreeSet;

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{
    all_pairs_distances, generate, total_graph, Element, Family, Graph, GraphError,
};
use crate::packing::{Budget, Color, PackingColoring, PackingError, Target};

/// Elements within this total-graph distance of the wrap-around edge are
/// free to change during repair.
pub const SEAM_WINDOW_RADIUS: u32 = 8;
/// Largest color the repaired cycle colorings may use.
pub const SEAM_MAX_COLOR: Color = 11;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{family} construction needs n >= {min}, got {n}")]
    TooSmall {
        family: &'static str,
        min: usize,
        n: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Packing(#[from] PackingError),
    #[error(transparent)]
    Repair(#[from] RepairError),
}

/// Element at 0-based position `p` of `u_1, u_1u_2, u_2, ..., u_n, u_nu_1`.
pub(crate) fn cycle_element(n: usize, p: usize) -> Element {
    if p.is_multiple_of(2) {
        Element::Vertex(p / 2)
    } else {
        let u = (p - 1) / 2;
        Element::edge(u, (u + 1) % n)
    }
}

/// Leaves get 1; the center and every edge get their own color.
pub fn color_star_total(n: usize) -> Result<PackingColoring, ConstructionError> {
    let g = generate(Family::Star(n))?;
    let mut next = 1;
    let colors = crate::graph::elements(&g)
        .iter()
        .map(|e| match e {
            Element::Vertex(v) if *v > 0 => 1,
            _ => {
                next += 1;
                next
            }
        })
        .collect();
    Ok(PackingColoring::new(Target::Total, colors)?)
}

// Tables below name vertices `u_1..u_n`: `(i, 0)` is `u_i` and `(i, j)` is
// the edge `u_i u_j`. Class `k` of a table gets color `k + 1`; unlisted
// elements then get fresh colors in walk order.
type Class = &'static [(usize, usize)];

const PATHS: [&[Class]; 10] = [
    &[],
    &[],
    &[],
    &[&[(1, 0), (3, 0)]],
    &[&[(1, 0), (4, 0), (2, 3)]],
    &[
        &[(1, 0), (4, 0), (2, 3)],
        &[(2, 0), (4, 5)],
        &[(5, 0), (1, 2)],
        &[(3, 0)],
        &[(3, 4)],
    ],
    &[
        &[(1, 0), (3, 0), (6, 0), (4, 5)],
        &[(2, 0), (5, 0)],
        &[(1, 2), (5, 6)],
    ],
    &[
        &[(1, 0), (4, 0), (7, 0), (2, 3), (5, 6)],
        &[(2, 0), (5, 0)],
        &[(3, 0), (6, 7)],
        &[(6, 0), (1, 2)],
        &[(3, 4)],
        &[(4, 5)],
    ],
    &[
        &[(1, 0), (3, 0), (6, 0), (4, 5), (7, 8)],
        &[(5, 0), (8, 0), (2, 3)],
        &[(7, 0), (3, 4)],
        &[(2, 0), (6, 7)],
        &[(5, 6)],
        &[(1, 2)],
        &[(4, 0)],
    ],
    &[
        &[(1, 0), (3, 0), (6, 0), (9, 0), (4, 5), (7, 8)],
        &[(5, 0), (8, 0), (2, 3)],
        &[(7, 0), (3, 4)],
        &[(2, 0), (6, 7)],
        &[(5, 6)],
        &[(1, 2), (8, 9)],
        &[(4, 0)],
    ],
];

const CYCLES: [&[Class]; 13] = [
    &[],
    &[],
    &[],
    &[&[(1, 0), (2, 3)]],
    &[&[(1, 0), (2, 3)]],
    &[&[(1, 0), (4, 0), (2, 3)], &[(2, 0), (4, 5)]],
    &[&[(1, 0), (4, 0), (2, 3), (5, 6)], &[(2, 0), (5, 0)]],
    &[
        &[(2, 0), (4, 0), (7, 0), (5, 6)],
        &[(3, 0), (6, 7)],
        &[(6, 0), (2, 3)],
    ],
    &[
        &[(2, 0), (5, 0), (7, 0), (3, 4), (8, 1)],
        &[(4, 0), (1, 2), (6, 7)],
        &[(1, 0), (4, 5)],
    ],
    &[
        &[(2, 0), (5, 0), (8, 0), (3, 4), (6, 7), (9, 1)],
        &[(4, 0), (1, 2), (7, 8)],
        &[(7, 0), (2, 3)],
        &[(1, 0), (5, 6)],
    ],
    &[
        &[(1, 2), (3, 0), (5, 0), (6, 7), (8, 9), (10, 0)],
        &[(2, 0), (4, 5), (7, 0), (9, 10)],
        &[(4, 0), (7, 8)],
        &[(3, 4), (8, 0)],
    ],
    &[
        &[(1, 0), (2, 3), (4, 0), (5, 6), (7, 0), (9, 0), (10, 11)],
        &[(2, 0), (4, 5), (7, 8), (10, 0)],
        &[(1, 2), (5, 0), (8, 9)],
        &[(6, 7), (11, 0)],
        &[(6, 0), (11, 1)],
    ],
    &[
        &[
            (1, 0),
            (2, 3),
            (4, 0),
            (5, 6),
            (7, 0),
            (8, 9),
            (10, 0),
            (11, 12),
        ],
        &[(2, 0), (5, 0), (8, 0), (10, 11)],
        &[(3, 0), (6, 7), (11, 0)],
        &[(6, 0), (12, 0)],
        &[(1, 2), (7, 8)],
    ],
];

fn table_element(&(i, j): &(usize, usize)) -> Element {
    if j == 0 {
        Element::Vertex(i - 1)
    } else {
        Element::edge(i - 1, j - 1)
    }
}

fn from_table(
    g: &Graph,
    walk: &[Element],
    classes: &[Class],
) -> Result<PackingColoring, ConstructionError> {
    let mut pairs: Vec<(Element, Color)> = Vec::new();
    for (k, class) in classes.iter().enumerate() {
        pairs.extend(class.iter().map(|x| (table_element(x), k as Color + 1)));
    }
    let listed: BTreeSet<Element> = pairs.iter().map(|p| p.0).collect();
    let mut next = classes.len() as Color;
    for e in walk.iter().filter(|e| !listed.contains(e)) {
        next += 1;
        pairs.push((*e, next));
    }
    Ok(PackingColoring::from_assignments(g, Target::Total, pairs)?)
}

fn path_walk(n: usize) -> Vec<Element> {
    (0..2 * n - 1).map(|p| cycle_element(n + 1, p)).collect()
}

/// An optimal packing total coloring of `P_n` for `n <= 9`; for longer
/// paths the `D(1,2)` pattern along `u_1, u_1u_2, ..., u_n`, which uses at
/// most 8 colors.
pub fn color_path_total(n: usize) -> Result<PackingColoring, ConstructionError> {
    let g = generate(Family::Path(n))?;
    let walk = path_walk(n);
    if let Some(classes) = PATHS.get(n) {
        return from_table(&g, &walk, classes);
    }
    let pattern = d12_pattern();
    let pairs = walk.iter().enumerate().map(|(p, e)| (*e, pattern.at(p)));
    Ok(PackingColoring::from_assignments(&g, Target::Total, pairs)?)
}

/// The `D(1,2)` pattern on the segment `0..len`.
pub fn color_d12_segment(len: usize) -> Result<PackingColoring, ConstructionError> {
    generate(Family::D12Segment(len))?;
    let pattern = d12_pattern();
    Ok(PackingColoring::new(
        Target::Graph,
        (0..len).map(|p| pattern.at(p)).collect(),
    )?)
}

/// Outcome of coloring a long cycle: the raw pattern's conflicts and the
/// repaired coloring.
#[derive(Debug, Clone)]
pub struct RepairedCycle {
    pub n: usize,
    pub conflicts: Vec<SeamConflict>,
    /// Elements whose color the repair changed.
    pub recolored: Vec<Element>,
    pub coloring: PackingColoring,
}

impl RepairedCycle {
    /// Distinct seam tags among the raw conflicts.
    pub fn tags(&self) -> BTreeSet<SeamTag> {
        self.conflicts.iter().filter_map(|c| c.tag).collect()
    }
}

/// Colors `C_n` for `n >= 13` with the pattern, then repairs the window
/// around the wrap-around edge with colors up to [`SEAM_MAX_COLOR`].
pub fn repair_cycle(n: usize, budget: Budget) -> Result<RepairedCycle, ConstructionError> {
    let (raw, conflicts) = pattern_on_cycle(n)?;
    let g = generate(Family::Cycle(n))?;
    let t = total_graph(&g);
    let d = all_pairs_distances(&t.graph);
    let seam = Element::edge(0, n - 1)
        .index_in(&g)
        .expect("seam edge exists");
    let window: VertexSet = (0..t.graph.vertex_count())
        .filter(|&v| d.get(seam, v) <= SEAM_WINDOW_RADIUS)
        .collect();
    let coloring = if conflicts.is_empty() {
        raw.clone()
    } else {
        seam_repair(&t, &d, &raw, &window, SEAM_MAX_COLOR, budget)?
    };
    let recolored = t
        .labels
        .iter()
        .enumerate()
        .filter(|&(v, _)| raw.colors()[v] != coloring.colors()[v])
        .map(|(_, e)| *e)
        .collect();
    Ok(RepairedCycle {
        n,
        conflicts,
        recolored,
        coloring,
    })
}

/// An optimal packing total coloring of `C_n` for `n <= 12`; for longer
/// cycles the repaired pattern from [`repair_cycle`].
pub fn color_cycle_total(n: usize) -> Result<PackingColoring, ConstructionError> {
    let g = generate(Family::Cycle(n))?;
    if let Some(classes) = CYCLES.get(n) {
        let walk: Vec<Element> = (0..2 * n).map(|p| cycle_element(n, p)).collect();
        return from_table(&g, &walk, classes);
    }
    Ok(repair_cycle(n, Budget::default())?.coloring)
}

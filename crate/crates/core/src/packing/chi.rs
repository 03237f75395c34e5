use serde::{Deserialize, Serialize};

use crate::graph::{all_pairs_distances, line_graph, total_graph, Graph};

use super::capacity::{CapacityProfile, PowerGraphs};
use super::classify::{classify_small, SmallClass};
use super::search::{decide, Budget, KOutcome, Meter};
use super::{Color, PackingColoring, PackingError, Target};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum RefutationKind {
    /// The first `k` capacities cover only `covered < needed` vertices.
    Capacity { covered: usize, needed: usize },
    /// Backtracking exhausted every assignment.
    ExhaustedSearch,
    /// Ruled out by the small-value characterization of connected graphs.
    Classifier,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refutation {
    pub k: Color,
    #[serde(flatten)]
    pub kind: RefutationKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub millis: u64,
}

/// Exact chromatic value with its witness and a refutation for every
/// smaller color count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub value: Color,
    pub witness: PackingColoring,
    pub refutations: Vec<Refutation>,
    pub stats: SolveStats,
}

impl SolveReport {
    /// The refutation that certifies the lower bound `value`, i.e. the one
    /// for `k = value - 1`.
    pub fn binding_refutation(&self) -> Option<&Refutation> {
        self.refutations.last()
    }
}

/// Packing chromatic number of `g`.
pub fn chi_rho(g: &Graph, budget: Budget) -> Result<SolveReport, PackingError> {
    solve_host(g, Target::Graph, Vec::new(), budget)
}

/// Packing total chromatic number: the packing chromatic number of the
/// total graph, reported on the vertices and edges of `g`.
pub fn chi_rho_total(g: &Graph, budget: Budget) -> Result<SolveReport, PackingError> {
    let mut prior = Vec::new();
    if g.vertex_count() > 0 && g.is_connected() {
        let floor = match classify_small(g)? {
            SmallClass::One => 1,
            SmallClass::Three => 3,
            SmallClass::Four => 4,
            SmallClass::AtLeastFive => 5,
        };
        prior = (1..floor)
            .map(|k| Refutation {
                k,
                kind: RefutationKind::Classifier,
            })
            .collect();
    }
    solve_host(&total_graph(g).graph, Target::Total, prior, budget)
}

/// Packing chromatic index: the packing chromatic number of the line graph,
/// reported on the edges of `g`.
pub fn chi_rho_index(g: &Graph, budget: Budget) -> Result<SolveReport, PackingError> {
    if g.edge_count() == 0 {
        return Err(PackingError::Edgeless);
    }
    solve_host(&line_graph(g).graph, Target::Line, Vec::new(), budget)
}

/// Iterates `k` upward past `prior`, refuting each `k` by capacity or by
/// exhaustive search, until a coloring is found. `host` vertices are indexed
/// in `target` element order, so the witness needs no relabelling.
fn solve_host(
    host: &Graph,
    target: Target,
    prior: Vec<Refutation>,
    budget: Budget,
) -> Result<SolveReport, PackingError> {
    let d = all_pairs_distances(host);
    let powers = PowerGraphs::new(&d);
    let caps = CapacityProfile::new(&powers);
    let mut meter = Meter::new(budget);
    let n = host.vertex_count();

    let mut refutations = prior;
    if n == 0 {
        return Ok(SolveReport {
            value: 0,
            witness: PackingColoring::new(target, Vec::new())?,
            refutations,
            stats: stats(&meter),
        });
    }
    // color a maximum independent set 1 and everything else distinctly
    let upper = (n - caps.capacity(1) + 1) as Color;
    let mut k = refutations.last().map_or(1, |r| r.k + 1);
    loop {
        let kind = match decide(&powers, &caps, k, &mut meter) {
            KOutcome::Colorable(colors) => {
                debug_assert!(super::host_coloring_is_valid(&d, &colors));
                return Ok(SolveReport {
                    value: k,
                    witness: PackingColoring::new(target, colors)?,
                    refutations,
                    stats: stats(&meter),
                });
            }
            KOutcome::CapacityInfeasible { covered, needed } => {
                RefutationKind::Capacity { covered, needed }
            }
            KOutcome::Infeasible => RefutationKind::ExhaustedSearch,
            KOutcome::Timeout => {
                return Err(PackingError::Timeout {
                    lower: k,
                    upper,
                    nodes: meter.nodes(),
                })
            }
        };
        assert!(k < upper, "search refuted the independent-set upper bound");
        refutations.push(Refutation { k, kind });
        k += 1;
    }
}

fn stats(meter: &Meter) -> SolveStats {
    SolveStats {
        nodes: meter.nodes(),
        millis: meter.elapsed().as_millis() as u64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::packing::is_valid;

    fn family(f: Family) -> Graph {
        generate(f).unwrap()
    }

    fn check(g: &Graph, report: &SolveReport) {
        assert!(is_valid(g, &report.witness));
        assert_eq!(report.witness.color_count(), report.value as usize);
        let ks: Vec<Color> = report.refutations.iter().map(|r| r.k).collect();
        assert_eq!(ks, (1..report.value).collect::<Vec<_>>());
    }

    #[test]
    fn stars_have_packing_number_two() {
        for n in 1..=6 {
            let g = family(Family::Star(n));
            let r = chi_rho(&g, Budget::default()).unwrap();
            assert_eq!(r.value, 2);
            check(&g, &r);
        }
        let k1 = Graph::empty(1);
        assert_eq!(chi_rho(&k1, Budget::default()).unwrap().value, 1);
    }

    #[test]
    fn total_values_of_the_smallest_graphs() {
        for (g, expected) in [
            (family(Family::Path(2)), 3),
            (family(Family::Path(3)), 4),
            (family(Family::Cycle(3)), 5),
        ] {
            let r = chi_rho_total(&g, Budget::default()).unwrap();
            assert_eq!(r.value, expected);
            check(&g, &r);
        }
    }

    #[test]
    fn classifier_refutations_come_first() {
        let r = chi_rho_total(&family(Family::Cycle(4)), Budget::default()).unwrap();
        assert_eq!(r.value, 7);
        assert!(r.refutations[..4]
            .iter()
            .all(|x| x.kind == RefutationKind::Classifier));
    }

    #[test]
    fn index_of_small_graphs() {
        assert_eq!(
            chi_rho_index(&family(Family::Star(3)), Budget::default())
                .unwrap()
                .value,
            3
        );
        assert_eq!(
            chi_rho_index(&family(Family::Path(2)), Budget::default())
                .unwrap()
                .value,
            1
        );
        let p4 = chi_rho_index(&family(Family::Path(4)), Budget::default()).unwrap();
        let p3 = chi_rho(&family(Family::Path(3)), Budget::default()).unwrap();
        assert_eq!(p4.value, p3.value);
        assert_eq!(p4.witness.target(), Target::Line);
        assert_eq!(
            chi_rho_index(&Graph::empty(3), Budget::default()),
            Err(PackingError::Edgeless)
        );
    }

    #[test]
    fn timeout_reports_bounds() {
        let g = family(Family::Path(12));
        match chi_rho_total(&g, Budget::nodes(50)) {
            Err(PackingError::Timeout { lower, upper, .. }) => assert!(lower <= 7 && upper >= 8),
            other => panic!("expected timeout, got {other:?}"),
        }
    }

    #[test]
    fn disconnected_total_value_is_component_max() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        assert_eq!(chi_rho_total(&g, Budget::default()).unwrap().value, 4);
    }
}

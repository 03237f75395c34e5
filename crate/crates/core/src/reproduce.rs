//! Table-driven checks of the known values for paths, cycles and stars,
//! the general bounds, and the periodic pattern.
//!
//! A suite is a list of independent [`Case`]s; [`run_case`] turns one into
//! a [`Row`] comparing the computed value (or range) with the expected one.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::{diameter2_exact, upper_bound_total};
use crate::constructions::{
    color_cycle_total, color_d12_segment, color_path_total, color_star_total, pattern_on_cycle,
    repair_cycle, SEAM_MAX_COLOR,
};
use crate::graph::{
    all_pairs_distances, generate, random_connected, random_graph, random_subgraph, total_graph,
    Family, Graph,
};
use crate::packing::{
    chi_rho, chi_rho_total, is_valid, solve_k_metered, Budget, CapacityProfile, Color, KOutcome,
    Meter, PackingError, PowerGraphs, Target,
};

pub const PATH_VALUES: [(usize, Color); 7] =
    [(3, 4), (4, 5), (5, 5), (6, 6), (7, 6), (8, 7), (9, 7)];
pub const CYCLE_VALUES: [(usize, Color); 10] = [
    (3, 5),
    (4, 7),
    (5, 7),
    (6, 8),
    (7, 9),
    (8, 9),
    (9, 9),
    (10, 10),
    (11, 9),
    (12, 10),
];

pub const CSV_HEADER: &str = "family,n,target,value_or_range,paper_value,status,nodes,millis";

/// Random graphs in the bounds suite.
pub const SANDWICH_GRAPHS: usize = 200;
pub const SUBGRAPH_PAIRS: usize = 100;
pub const DIAMETER_TWO_GRAPHS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Paths,
    Cycles,
    Stars,
    Bounds,
    Pattern,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Paths,
        Suite::Cycles,
        Suite::Stars,
        Suite::Bounds,
        Suite::Pattern,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Paths => "paths",
            Suite::Cycles => "cycles",
            Suite::Stars => "stars",
            Suite::Bounds => "bounds",
            Suite::Pattern => "pattern",
        })
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.to_string() == s)
            .ok_or_else(|| {
                format!("unknown suite `{s}` (expected paths, cycles, stars, bounds or pattern)")
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    /// Exact value of `P_n`.
    PathExact(usize),
    /// `P_n` beyond the tables: 6 colors refuted, pattern witness with 8.
    PathRange(usize),
    CycleExact(usize),
    /// `C_n` for `n >= 13`: 6 colors refuted, repaired pattern with at
    /// most 11.
    CycleRange(usize),
    Star(usize),
    /// Lower and upper bounds around the exact value of a random
    /// connected graph, plus the vertex-coloring comparison.
    Sandwich(usize),
    /// Monotonicity under taking a random subgraph.
    Subgraph(usize),
    /// The diameter-2 closed form against the solver, on `T(C_3)`, `T(C_4)`
    /// and then random diameter-2 graphs.
    DiameterTwo(usize),
    /// Raw pattern on `C_n`, expected conflict-free.
    CyclePattern(usize),
    /// Pattern on the segment `0..len` of `D(1,2)`.
    Segment(usize),
}

pub fn suite_cases(suite: Suite) -> Vec<Case> {
    match suite {
        Suite::Paths => PATH_VALUES
            .iter()
            .map(|&(n, _)| Case::PathExact(n))
            .chain((10..=14).map(Case::PathRange))
            .collect(),
        Suite::Cycles => CYCLE_VALUES
            .iter()
            .map(|&(n, _)| Case::CycleExact(n))
            .chain((13..=40).map(Case::CycleRange))
            .collect(),
        Suite::Stars => (1..=8).map(Case::Star).collect(),
        Suite::Bounds => (0..SANDWICH_GRAPHS)
            .map(Case::Sandwich)
            .chain((0..SUBGRAPH_PAIRS).map(Case::Subgraph))
            .chain((0..DIAMETER_TWO_GRAPHS + 2).map(Case::DiameterTwo))
            .collect(),
        Suite::Pattern => [27, 54, 81]
            .into_iter()
            .map(Case::CyclePattern)
            .chain([Case::Segment(162)])
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
    Timeout,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::Timeout => "timeout",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub family: String,
    pub n: usize,
    pub target: Target,
    pub value_or_range: String,
    /// Known value or range, as a CSV cell.
    #[serde(rename = "paper_value")]
    pub expected: String,
    pub status: Status,
    pub nodes: u64,
    pub millis: u64,
    /// Free-form remark; not part of the CSV schema.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// The CSV projection of a [`Row`], in header order.
#[derive(Serialize)]
struct CsvRecord<'a> {
    family: &'a str,
    n: usize,
    target: Target,
    value_or_range: &'a str,
    #[serde(rename = "paper_value")]
    expected: &'a str,
    status: Status,
    nodes: u64,
    millis: u64,
}

/// Writes `rows` as CSV with the [`CSV_HEADER`] columns.
pub fn write_csv<W: std::io::Write>(rows: &[Row], out: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer.serialize(CsvRecord {
            family: &row.family,
            n: row.n,
            target: row.target,
            value_or_range: &row.value_or_range,
            expected: &row.expected,
            status: row.status,
            nodes: row.nodes,
            millis: row.millis,
        })?;
    }
    writer.flush()?;
    Ok(())
}

/// Running tally for one case.
struct Tally {
    started: Instant,
    nodes: u64,
}

impl Tally {
    fn new() -> Self {
        Tally {
            started: Instant::now(),
            nodes: 0,
        }
    }

    fn row(
        &self,
        family: &str,
        n: usize,
        target: Target,
        value: String,
        expected: String,
        status: Status,
    ) -> Row {
        Row {
            family: family.to_string(),
            n,
            target,
            value_or_range: value,
            expected,
            status,
            nodes: self.nodes,
            millis: self.started.elapsed().as_millis() as u64,
            note: None,
        }
    }
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Match
    } else {
        Status::Mismatch
    }
}

fn range(lo: Color, hi: Color) -> String {
    if lo == hi {
        lo.to_string()
    } else {
        format!("[{lo},{hi}]")
    }
}

fn known_value(table: &[(usize, Color)], n: usize) -> Color {
    table
        .iter()
        .find(|&&(m, _)| m == n)
        .expect("case drawn from the table")
        .1
}

pub fn run_case(case: Case, budget: Budget) -> Row {
    match case {
        Case::PathExact(n) => exact_total(
            Family::Path(n),
            "path",
            known_value(&PATH_VALUES, n),
            budget,
        ),
        Case::CycleExact(n) => exact_total(
            Family::Cycle(n),
            "cycle",
            known_value(&CYCLE_VALUES, n),
            budget,
        ),
        Case::Star(n) => star(n, budget),
        Case::PathRange(n) => path_range(n, budget),
        Case::CycleRange(n) => cycle_range(n, budget),
        Case::Sandwich(i) => sandwich(i, budget),
        Case::Subgraph(i) => subgraph(i, budget),
        Case::DiameterTwo(i) => diameter_two(i, budget),
        Case::CyclePattern(n) => cycle_pattern(n),
        Case::Segment(len) => segment(len),
    }
}

fn exact_total(family: Family, name: &str, expected: Color, budget: Budget) -> Row {
    let g = generate(family).expect("suite families are valid");
    let n = g.vertex_count();
    let mut tally = Tally::new();
    let construction = match family {
        Family::Path(n) => color_path_total(n),
        Family::Cycle(n) => color_cycle_total(n),
        _ => color_star_total(n - 1),
    }
    .expect("suite sizes have constructions");
    match chi_rho_total(&g, budget) {
        Ok(report) => {
            tally.nodes = report.stats.nodes;
            let ok = report.value == expected
                && is_valid(&g, &report.witness)
                && is_valid(&g, &construction)
                && construction.color_count() == expected as usize;
            tally.row(
                name,
                n,
                Target::Total,
                report.value.to_string(),
                expected.to_string(),
                status(ok),
            )
        }
        Err(PackingError::Timeout {
            lower,
            upper,
            nodes,
        }) => {
            tally.nodes = nodes;
            tally.row(
                name,
                n,
                Target::Total,
                range(lower, upper),
                expected.to_string(),
                Status::Timeout,
            )
        }
        Err(e) => panic!("{name} {n}: {e}"),
    }
}

fn star(n: usize, budget: Budget) -> Row {
    let mut row = exact_total(Family::Star(n), "star", n as Color + 2, budget);
    row.n = n;
    row
}

/// Lower bound 7 from refuting 6 colors; upper bound from the pattern. A
/// further attempt at 7 colors settles the exact value when it finishes.
fn path_range(n: usize, budget: Budget) -> Row {
    let g = generate(Family::Path(n)).expect("n >= 10");
    let d = all_pairs_distances(&total_graph(&g).graph);
    let mut tally = Tally::new();
    let witness = color_path_total(n).expect("n >= 10");
    let upper = witness.max_color();
    let expected = "{7,8}".to_string();
    let mut meter = Meter::new(budget);
    let six = solve_k_metered(&d, 6, &mut meter);
    tally.nodes = meter.nodes();
    if six == KOutcome::Timeout {
        return tally.row(
            "path",
            n,
            Target::Total,
            range(1, upper),
            expected,
            Status::Timeout,
        );
    }
    let mut meter = Meter::new(budget);
    let seven = solve_k_metered(&d, 7, &mut meter);
    tally.nodes += meter.nodes();
    let (lo, hi, note) = match seven {
        KOutcome::Colorable(_) => (7, 7, Some("7 colors found by search".to_string())),
        k if k.is_infeasible() => (8, upper, Some("7 colors refuted by search".to_string())),
        _ => (7, upper, None),
    };
    let ok = six.is_infeasible()
        && is_valid(&g, &witness)
        && upper <= 8
        && (7..=8).contains(&lo)
        && hi <= 8;
    let mut row = tally.row(
        "path",
        n,
        Target::Total,
        range(lo, hi),
        expected,
        status(ok),
    );
    row.note = note;
    row
}

fn cycle_range(n: usize, budget: Budget) -> Row {
    let g = generate(Family::Cycle(n)).expect("n >= 13");
    let d = all_pairs_distances(&total_graph(&g).graph);
    let mut tally = Tally::new();
    let expected = "[7,11]".to_string();
    let mut meter = Meter::new(budget);
    let six = solve_k_metered(&d, 6, &mut meter);
    tally.nodes = meter.nodes();
    let repaired = repair_cycle(n, budget);
    let upper = repaired
        .as_ref()
        .map_or(SEAM_MAX_COLOR, |r| r.coloring.max_color());
    if six == KOutcome::Timeout {
        return tally.row(
            "cycle",
            n,
            Target::Total,
            range(1, upper),
            expected,
            Status::Timeout,
        );
    }
    let Ok(r) = repaired else {
        let mut row = tally.row(
            "cycle",
            n,
            Target::Total,
            "?".to_string(),
            expected,
            Status::Mismatch,
        );
        row.note = repaired.err().map(|e| e.to_string());
        return row;
    };
    let tags: Vec<String> = r.tags().iter().map(|t| t.to_string()).collect();
    // the counting bound alone often beats 7
    let powers = PowerGraphs::new(&d);
    let caps = CapacityProfile::new(&powers);
    let lower = (1..)
        .find(|&k| !caps.infeasible(k))
        .expect("rainbow coloring always fits")
        .max(7);
    let ok = six.is_infeasible() && is_valid(&g, &r.coloring) && upper <= SEAM_MAX_COLOR;
    let mut row = tally.row(
        "cycle",
        n,
        Target::Total,
        range(lower, upper),
        expected,
        status(ok),
    );
    row.note = Some(format!(
        "seam tags {}; {} elements recolored",
        if tags.is_empty() {
            "none".to_string()
        } else {
            tags.join("")
        },
        r.recolored.len()
    ));
    row
}

fn case_rng(salt: u64, i: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(salt.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ i as u64)
}

/// The `i`-th random connected graph of the bounds suite, on 2 to 7
/// vertices.
pub fn sandwich_graph(i: usize) -> Graph {
    let mut rng = case_rng(1, i);
    let n = rng.gen_range(2..=7);
    let p = rng.gen_range(0.1..0.7);
    random_connected(&mut rng, n, p)
}

/// The `i`-th `(H, G)` pair of the bounds suite, with `H` a subgraph of a
/// random graph `G` on at most 7 vertices.
pub fn subgraph_pair(i: usize) -> (Graph, Graph) {
    let mut rng = case_rng(2, i);
    let n = rng.gen_range(1..=7);
    let p = rng.gen_range(0.2..0.8);
    let g = random_graph(&mut rng, n, p);
    let keep = rng.gen_range(0.3..1.0);
    (random_subgraph(&mut rng, &g, keep), g)
}

/// `T(C_3)`, `T(C_4)`, then random graphs of diameter exactly 2 on at most
/// 9 vertices.
pub fn diameter_two_graph(i: usize) -> Graph {
    match i {
        0 | 1 => total_graph(&generate(Family::Cycle(i + 3)).unwrap()).graph,
        _ => {
            let mut rng = case_rng(3, i);
            loop {
                let n = rng.gen_range(3..=9);
                let p = rng.gen_range(0.3..0.8);
                let g = random_graph(&mut rng, n, p);
                if all_pairs_distances(&g).diameter() == Some(2) {
                    return g;
                }
            }
        }
    }
}

fn sandwich(i: usize, budget: Budget) -> Row {
    let g = sandwich_graph(i);
    let n = g.vertex_count();
    let mut tally = Tally::new();
    let lower = g.max_degree() as Color + 2;
    let upper = upper_bound_total(&g).expect("connected");
    let expected = format!("[{lower},{upper}]");
    let (total, plain) = match (chi_rho_total(&g, budget), chi_rho(&g, budget)) {
        (Ok(t), Ok(p)) => (t, p),
        _ => {
            return tally.row(
                "random",
                n,
                Target::Total,
                "?".to_string(),
                expected,
                Status::Timeout,
            )
        }
    };
    tally.nodes = total.stats.nodes + plain.stats.nodes;
    let ok = total.value >= plain.value && (lower..=upper).contains(&total.value);
    let mut row = tally.row(
        "random",
        n,
        Target::Total,
        total.value.to_string(),
        expected,
        status(ok),
    );
    if total.value == plain.value {
        row.note = Some(format!(
            "vertex and total values coincide on {}",
            g.to_edge_list().trim_end().replace('\n', "; ")
        ));
    }
    row
}

fn subgraph(i: usize, budget: Budget) -> Row {
    let (h, g) = subgraph_pair(i);
    let mut tally = Tally::new();
    let (small, big) = match (chi_rho_total(&h, budget), chi_rho_total(&g, budget)) {
        (Ok(s), Ok(b)) => (s, b),
        _ => {
            return tally.row(
                "subgraph",
                g.vertex_count(),
                Target::Total,
                "?".into(),
                "monotone".into(),
                Status::Timeout,
            )
        }
    };
    tally.nodes = small.stats.nodes + big.stats.nodes;
    tally.row(
        "subgraph",
        g.vertex_count(),
        Target::Total,
        format!("{}<={}", small.value, big.value),
        "monotone".to_string(),
        status(small.value <= big.value),
    )
}

fn diameter_two(i: usize, budget: Budget) -> Row {
    let g = diameter_two_graph(i);
    let family = match i {
        0 => "total-c3",
        1 => "total-c4",
        _ => "diameter2",
    };
    let mut tally = Tally::new();
    let formula = diameter2_exact(&g).expect("connected").expect("diameter 2");
    match chi_rho(&g, budget) {
        Ok(r) => {
            tally.nodes = r.stats.nodes;
            tally.row(
                family,
                g.vertex_count(),
                Target::Graph,
                r.value.to_string(),
                formula.to_string(),
                status(r.value == formula),
            )
        }
        Err(_) => tally.row(
            family,
            g.vertex_count(),
            Target::Graph,
            "?".into(),
            formula.to_string(),
            Status::Timeout,
        ),
    }
}

fn cycle_pattern(n: usize) -> Row {
    let tally = Tally::new();
    let g = generate(Family::Cycle(n)).expect("n >= 13");
    let (c, conflicts) = pattern_on_cycle(n).expect("n >= 13");
    let ok = conflicts.is_empty() && is_valid(&g, &c) && c.color_count() == 8;
    let mut row = tally.row(
        "cycle-pattern",
        n,
        Target::Total,
        c.color_count().to_string(),
        "8".to_string(),
        status(ok),
    );
    if !conflicts.is_empty() {
        row.note = Some(format!("{} conflicts", conflicts.len()));
    }
    row
}

fn segment(len: usize) -> Row {
    let tally = Tally::new();
    let g = generate(Family::D12Segment(len)).expect("len >= 1");
    let c = color_d12_segment(len).expect("len >= 1");
    let ok = is_valid(&g, &c) && c.color_count() == 8;
    tally.row(
        "d12",
        len,
        Target::Graph,
        c.color_count().to_string(),
        "8".to_string(),
        status(ok),
    )
}

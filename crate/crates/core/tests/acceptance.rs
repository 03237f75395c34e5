//! End-to-end acceptance checks. Runs as a plain binary and prints one
//! PASS/FAIL line per criterion; exits nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{floyd, total_adjacency};
use packem::bounds::{diameter2_exact, upper_bound_total};
use packem::constructions::{
    color_cycle_total, color_path_total, color_star_total, pattern_on_cycle,
};
use packem::graph::{
    all_pairs_distances, element_distance, elements, generate, random_connected, random_graph,
    random_subgraph, total_graph, DistanceMatrix, Family, UNREACHABLE,
};
use packem::packing::{
    brute_force_chi, chi_rho, chi_rho_total, classify_small, is_valid, solve_k, CapacityProfile,
    KOutcome, PowerGraphs, SmallClass,
};
use packem::{Budget, Color, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration) -> Budget {
    Budget {
        max_nodes: u64::MAX,
        max_time: limit,
    }
}

fn timed<T>(limit: Duration, what: &str, f: impl FnOnce() -> T) -> Result<T, String> {
    let start = Instant::now();
    let out = f();
    let spent = start.elapsed();
    ensure(spent <= limit, || {
        format!("{what} took {spent:?}, limit {limit:?}")
    })?;
    Ok(out)
}

fn total_value(g: &Graph, limit: Duration) -> Result<Color, String> {
    let r = chi_rho_total(g, within(limit)).map_err(|e| e.to_string())?;
    ensure(
        is_valid(g, &r.witness) && r.witness.max_color() == r.value,
        || "witness does not validate".into(),
    )?;
    Ok(r.value)
}

fn vertex_value(g: &Graph) -> Result<Color, String> {
    chi_rho(g, Budget::default())
        .map(|r| r.value)
        .map_err(|e| e.to_string())
}

/// Plain backtracking over colors `1..=k` in index order, independent of
/// the library search.
fn naive_colorable(d: &DistanceMatrix, k: Color) -> bool {
    fn go(d: &DistanceMatrix, k: Color, colors: &mut Vec<Color>) -> bool {
        let next = colors.len();
        if next == d.len() {
            return true;
        }
        for c in 1..=k {
            if (0..next).all(|u| colors[u] != c || d.get(u, next) > c) {
                colors.push(c);
                if go(d, k, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    go(d, k, &mut Vec::new())
}

/// Largest independent set and largest matching by subset enumeration.
fn alpha_nu(g: &Graph) -> (usize, usize) {
    let n = g.vertex_count();
    let alpha = (0u32..1 << n)
        .filter(|s| {
            g.edges()
                .iter()
                .all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0)
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let m = g.edge_count();
    let nu = (0u64..1 << m)
        .filter(|s| {
            let mut seen = 0u32;
            g.edges()
                .iter()
                .enumerate()
                .filter(|(i, _)| s >> i & 1 == 1)
                .all(|(_, &(u, v))| {
                    let clash = seen & (1 << u | 1 << v) != 0;
                    seen |= 1 << u | 1 << v;
                    !clash
                })
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0);
    (alpha, nu)
}

fn paths_exact() -> Check {
    let expected = [4, 5, 5, 6, 6, 7, 7];
    let limit = Duration::from_secs(60);
    for (n, want) in (3..=9).zip(expected) {
        let g = generate(Family::Path(n)).unwrap();
        let got = timed(limit, &format!("P{n}"), || total_value(&g, limit))??;
        ensure(got == want, || format!("P{n}: got {got}, expected {want}"))?;
    }
    Ok("P3..P9 = 4,5,5,6,6,7,7".into())
}

fn paths_range() -> Check {
    let limit = Duration::from_secs(300);
    for n in 10..=14 {
        let g = generate(Family::Path(n)).unwrap();
        let d = all_pairs_distances(&total_graph(&g).graph);
        timed(limit, &format!("P{n}"), || -> Result<(), String> {
            let outcome = solve_k(&d, 6, within(limit));
            ensure(outcome == KOutcome::Infeasible, || {
                format!("P{n}: k=6 gave {outcome:?}, expected exhaustive refutation")
            })?;
            let witness = color_path_total(n).map_err(|e| e.to_string())?;
            ensure(is_valid(&g, &witness) && witness.max_color() <= 8, || {
                format!("P{n}: pattern witness invalid or uses more than 8 colors")
            })
        })??;
    }
    Ok("P10..P14: k=6 exhausted, pattern witness <= 8 colors".into())
}

fn cycles_exact() -> Check {
    let expected = [5, 7, 7, 8, 9, 9, 9, 10, 9, 10];
    let limit = Duration::from_secs(600);
    for (n, want) in (3..=12).zip(expected) {
        let g = generate(Family::Cycle(n)).unwrap();
        let got = timed(limit, &format!("C{n}"), || total_value(&g, limit))??;
        ensure(got == want, || format!("C{n}: got {got}, expected {want}"))?;
    }
    let g = generate(Family::Cycle(12)).unwrap();
    let d = all_pairs_distances(&total_graph(&g).graph);
    let powers = PowerGraphs::new(&d);
    let caps = CapacityProfile::new(&powers);
    ensure(caps.total(9) == 23 && d.len() == 24, || {
        format!(
            "T(C12): first 9 capacities cover {}, expected 23",
            caps.total(9)
        )
    })?;
    let outcome = solve_k(&d, 9, Budget::nodes(1));
    ensure(
        matches!(
            outcome,
            KOutcome::CapacityInfeasible {
                covered: 23,
                needed: 24
            }
        ),
        || format!("T(C12) k=9 not refuted by counting: {outcome:?}"),
    )?;
    Ok("C3..C12 = 5,7,7,8,9,9,9,10,9,10; T(C12) k=9 refuted by 23 < 24".into())
}

fn cycles_range() -> Check {
    let limit = Duration::from_secs(10);
    let mut worst = 0;
    for n in 13..=40 {
        let g = generate(Family::Cycle(n)).unwrap();
        let c = timed(limit, &format!("C{n}"), || color_cycle_total(n))?
            .map_err(|e| format!("C{n}: {e}"))?;
        ensure(is_valid(&g, &c) && c.max_color() <= 11, || {
            format!(
                "C{n}: construction invalid or uses {} colors",
                c.max_color()
            )
        })?;
        worst = worst.max(c.max_color());
    }
    for n in 13..=15 {
        let g = generate(Family::Cycle(n)).unwrap();
        let d = all_pairs_distances(&total_graph(&g).graph);
        let outcome = solve_k(&d, 6, Budget::default());
        ensure(
            matches!(
                outcome,
                KOutcome::Infeasible | KOutcome::CapacityInfeasible { .. }
            ),
            || format!("C{n}: k=6 gave {outcome:?}"),
        )?;
        ensure(!naive_colorable(&d, 6), || {
            format!("C{n}: naive search found a 6-coloring")
        })?;
    }
    Ok(format!(
        "C13..C40 constructed with <= {worst} colors; k=6 refuted on C13..C15"
    ))
}

fn stars() -> Check {
    let limit = Duration::from_secs(10);
    for n in 1..=8 {
        let g = generate(Family::Star(n)).unwrap();
        let got = timed(limit, &format!("K1,{n}"), || total_value(&g, limit))??;
        ensure(got == n as Color + 2, || format!("K1,{n}: got {got}"))?;
        let c = color_star_total(n).map_err(|e| e.to_string())?;
        ensure(is_valid(&g, &c) && c.max_color() == n as Color + 2, || {
            format!("K1,{n}: construction invalid")
        })?;
    }
    Ok("K1,n = n+2 for n = 1..8".into())
}

fn pattern_multiples() -> Check {
    timed(
        Duration::from_secs(5),
        "pattern",
        || -> Result<(), String> {
            for n in [27, 54] {
                let g = generate(Family::Cycle(n)).unwrap();
                let (c, conflicts) = pattern_on_cycle(n).map_err(|e| e.to_string())?;
                ensure(conflicts.is_empty(), || {
                    format!("C{n}: {} conflicts", conflicts.len())
                })?;
                ensure(is_valid(&g, &c) && c.max_color() == 8, || {
                    format!("C{n}: not a valid 8-coloring")
                })?;
            }
            Ok(())
        },
    )??;
    Ok("C27 and C54 conflict-free with 8 colors".into())
}

fn bounds_suite() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let limit = Duration::from_secs(600);
    for i in 0..200 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.0..0.7);
        let g = random_connected(&mut rng, n, p);
        let total = total_value(&g, limit)?;
        let vertex = vertex_value(&g)?;
        ensure(total >= vertex, || {
            format!("graph {i}: total {total} < vertex {vertex}")
        })?;
        if g.edge_count() > 0 {
            let delta = g.max_degree() as Color;
            ensure(total >= delta + 2, || {
                format!("graph {i}: {total} < delta+2")
            })?;
        }
        let (alpha, nu) = alpha_nu(&g);
        let upper = (g.element_count() - alpha.max(nu) + 1) as Color;
        ensure(upper_bound_total(&g) == Ok(upper), || {
            format!("graph {i}: library upper bound differs from {upper}")
        })?;
        ensure(total <= upper, || {
            format!("graph {i}: {total} > upper {upper}")
        })?;
    }
    for i in 0..100 {
        let n = rng.gen_range(1..=7);
        let p = rng.gen_range(0.0..0.7);
        let g = random_connected(&mut rng, n, p);
        let h = random_subgraph(&mut rng, &g, 0.7);
        let (big, small) = (total_value(&g, limit)?, total_value(&h, limit)?);
        ensure(small <= big, || {
            format!("pair {i}: subgraph {small} > graph {big}")
        })?;
    }
    ensure(start.elapsed() <= limit, || {
        "bounds suite over 10 minutes".into()
    })?;
    Ok("200 graphs: total >= vertex, >= delta+2, <= upper; 100 subgraph pairs monotone".into())
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for i in 0..100 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let fast = vertex_value(&g)?;
        let slow = brute_force_chi(&g).map_err(|e| e.to_string())?;
        ensure(fast == slow, || {
            format!("graph {i}: solver {fast}, brute force {slow}")
        })?;
    }
    ensure(start.elapsed() <= Duration::from_secs(600), || {
        "over 10 minutes".into()
    })?;
    Ok("100 graphs agree with brute force".into())
}

fn metric_equivalence() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut pairs = 0;
    for i in 0..50 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.0..0.8);
        let g = random_graph(&mut rng, n, p);
        let d = all_pairs_distances(&g);
        let reference = floyd(&total_adjacency(&g));
        let els = elements(&g);
        for (a, x) in els.iter().enumerate() {
            for (b, y) in els.iter().enumerate() {
                let want = reference[a][b].unwrap_or(UNREACHABLE);
                let got = element_distance(&g, &d, x, y).map_err(|e| e.to_string())?;
                ensure(got == want, || {
                    format!("graph {i}: d({x}, {y}) = {got}, expected {want}")
                })?;
                pairs += 1;
            }
        }
    }
    ensure(start.elapsed() <= Duration::from_secs(120), || {
        "over 2 minutes".into()
    })?;
    Ok(format!("{pairs} element pairs on 50 graphs"))
}

fn classifier() -> Check {
    let start = Instant::now();
    let mut checked = 0;
    for n in 1..=4usize {
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << slots.len() {
            let edges: Vec<_> = (0..slots.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| slots[i])
                .collect();
            let g = Graph::from_edges(n, edges).unwrap();
            if !g.is_connected() {
                continue;
            }
            let value = total_value(&g, Duration::from_secs(60))?;
            let class = classify_small(&g).map_err(|e| e.to_string())?;
            let agrees = match class {
                SmallClass::AtLeastFive => value >= 5,
                other => other.value() == Some(value),
            };
            ensure(agrees, || {
                format!("{g:?}: classifier {class:?}, solver {value}")
            })?;
            checked += 1;
        }
    }
    ensure(checked == 44, || {
        format!("enumerated {checked} graphs, expected 44")
    })?;
    ensure(start.elapsed() <= Duration::from_secs(60), || {
        "over 1 minute".into()
    })?;
    Ok("all 44 connected labelled graphs on <= 4 vertices".into())
}

fn diameter_two() -> Check {
    for (n, want) in [(3, 5), (4, 7)] {
        let t = total_graph(&generate(Family::Cycle(n)).unwrap()).graph;
        let formula = diameter2_exact(&t).map_err(|e| e.to_string())?;
        let exact = vertex_value(&t)?;
        ensure(formula == Some(want) && exact == want, || {
            format!("T(C{n}): formula {formula:?}, solver {exact}, expected {want}")
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0011);
    let mut found = 0;
    while found < 20 {
        let n = rng.gen_range(3..=9);
        let p = rng.gen_range(0.3..0.9);
        let g = random_graph(&mut rng, n, p);
        if !g.is_connected() || all_pairs_distances(&g).diameter() != Some(2) {
            continue;
        }
        let formula = diameter2_exact(&g).map_err(|e| e.to_string())?;
        let exact = vertex_value(&g)?;
        ensure(formula == Some(exact), || {
            format!("{g:?}: formula {formula:?}, solver {exact}")
        })?;
        found += 1;
    }
    Ok("T(C3) = 5, T(C4) = 7, 20 random diameter-2 graphs".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("paths exact", paths_exact),
        ("paths range", paths_range),
        ("cycles exact", cycles_exact),
        ("cycles range", cycles_range),
        ("stars", stars),
        ("pattern multiples of 27", pattern_multiples),
        ("bounds suite", bounds_suite),
        ("oracle equivalence", oracle_equivalence),
        ("metric equivalence", metric_equivalence),
        ("small-graph classifier", classifier),
        ("diameter-2 formula", diameter_two),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

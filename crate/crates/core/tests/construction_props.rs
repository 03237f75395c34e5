use packem::constructions::{
    color_cycle_total, color_d12_segment, color_path_total, color_star_total, d12_pattern,
    pattern_on_cycle, repair_cycle, seam_repair, SEAM_MAX_COLOR, SEAM_WINDOW_RADIUS,
};
use packem::graph::{
    all_pairs_distances, element_distance, generate, total_graph, Element, Family,
};
use packem::packing::{is_valid, violations};
use packem::Budget;
use proptest::prelude::*;

fn seam_distance(n: usize, e: &Element) -> u32 {
    let g = generate(Family::Cycle(n)).unwrap();
    let d = all_pairs_distances(&g);
    element_distance(&g, &d, e, &Element::edge(0, n - 1)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn long_paths_use_at_most_eight_colors(n in 10usize..150) {
        let g = generate(Family::Path(n)).unwrap();
        let c = color_path_total(n).unwrap();
        prop_assert!(is_valid(&g, &c));
        prop_assert!(c.max_color() <= 8);
    }

    #[test]
    fn stars_validate(n in 1usize..40) {
        let g = generate(Family::Star(n)).unwrap();
        let c = color_star_total(n).unwrap();
        prop_assert!(is_valid(&g, &c));
        prop_assert_eq!(c.max_color() as usize, n + 2);
    }

    #[test]
    fn raw_pattern_conflicts_stay_at_the_seam(n in 13usize..120) {
        let (_, conflicts) = pattern_on_cycle(n).unwrap();
        prop_assert_eq!(conflicts.is_empty(), n % 27 == 0);
        for c in &conflicts {
            prop_assert!(c.distance <= c.color);
            prop_assert!(c.color != 3);
            let near = seam_distance(n, &c.a).min(seam_distance(n, &c.b));
            prop_assert!(near <= SEAM_WINDOW_RADIUS);
        }
    }

    #[test]
    fn segment_pattern_is_clean_away_from_the_ends(len in 40usize..200) {
        let g = generate(Family::D12Segment(len)).unwrap();
        let c = color_d12_segment(len).unwrap();
        for v in violations(&g, &c).unwrap() {
            let touches_end = [v.a, v.b].iter().any(|e| match *e {
                Element::Vertex(x) => x < 17 || x >= len - 17,
                Element::Edge(..) => unreachable!("vertex coloring"),
            });
            prop_assert!(touches_end, "{}", v);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn repaired_cycles_validate(n in 41usize..90) {
        let r = repair_cycle(n, Budget::default()).unwrap();
        let g = generate(Family::Cycle(n)).unwrap();
        prop_assert!(is_valid(&g, &r.coloring));
        prop_assert!(r.coloring.max_color() <= SEAM_MAX_COLOR);
        for e in &r.recolored {
            prop_assert!(seam_distance(n, e) <= SEAM_WINDOW_RADIUS);
        }
    }
}

#[test]
fn pattern_table_counts() {
    let p = d12_pattern();
    assert_eq!(p.len(), 54);
    assert_eq!((p.at(0), p.at(1)), (8, 1));
    assert!(p.colors().iter().all(|&c| (1..=8).contains(&c)));
    assert_eq!(p.count(8), 3);
    assert_eq!(p.count(7), 3);
}

#[test]
fn segment_162_interior_is_clean() {
    let g = generate(Family::D12Segment(162)).unwrap();
    let c = color_d12_segment(162).unwrap();
    let d = all_pairs_distances(&g);
    for v in violations(&g, &c).unwrap() {
        if let (Element::Vertex(a), Element::Vertex(b)) = (v.a, v.b) {
            assert!(!(17..145).contains(&a) || !(17..145).contains(&b), "{v}");
            assert_eq!(d.get(a, b), v.distance);
        }
    }
}

#[test]
fn repair_leaves_valid_colorings_alone() {
    let n = 27;
    let g = generate(Family::Cycle(n)).unwrap();
    let t = total_graph(&g);
    let d = all_pairs_distances(&t.graph);
    let (raw, conflicts) = pattern_on_cycle(n).unwrap();
    assert!(conflicts.is_empty());
    let window = (0..t.graph.vertex_count()).collect();
    let out = seam_repair(&t, &d, &raw, &window, SEAM_MAX_COLOR, Budget::default()).unwrap();
    assert_eq!(out, raw);
}

#[test]
fn small_constructions_are_optimal_and_valid() {
    let paths = [4, 5, 5, 6, 6, 7, 7];
    for (n, want) in (3..=9).zip(paths) {
        let c = color_path_total(n).unwrap();
        assert!(is_valid(&generate(Family::Path(n)).unwrap(), &c));
        assert_eq!(c.max_color(), want, "P{n}");
    }
    let cycles = [5, 7, 7, 8, 9, 9, 9, 10, 9, 10];
    for (n, want) in (3..=12).zip(cycles) {
        let c = color_cycle_total(n).unwrap();
        assert!(is_valid(&generate(Family::Cycle(n)).unwrap(), &c));
        assert_eq!(c.max_color(), want, "C{n}");
    }
}

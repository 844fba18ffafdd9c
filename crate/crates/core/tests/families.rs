use spack_core::critical::is_k_critical;
use spack_core::families::*;
use spack_core::graph::{all_pairs_distances, Graph};
use spack_core::packing::PackingSequence;
use spack_core::solver::{chi_s, is_valid_coloring, Coloring};

fn seq(s: &str) -> PackingSequence {
    s.parse().unwrap()
}

fn valid(g: &Graph, s: &PackingSequence, c: &Coloring) -> bool {
    is_valid_coloring(g, &all_pairs_distances(g), s, c)
}

#[test]
fn packing_chromatic_number_of_cycles() {
    let s = PackingSequence::packing();
    for n in 3..=30 {
        assert_eq!(
            chi_s(&make_cycle(n).unwrap(), &s).chi,
            predicted_chi_rho_cycle(n),
            "C{n}"
        );
    }
}

#[test]
fn cycles_under_one_three_three() {
    for s4 in [3u32, 4, 5, 10] {
        let s = PackingSequence::repeating(&[1, 3, 3, s4]).unwrap();
        for n in 3..=30 {
            let want = predicted_chi_cycle_133(n, s4);
            if want == 5 && n > 20 {
                continue;
            }
            assert_eq!(chi_s(&make_cycle(n).unwrap(), &s).chi, want, "C{n} s4={s4}");
        }
    }
}

#[test]
fn paths_need_three_colors() {
    for n in 4..=12 {
        assert_eq!(chi_s(&make_path(n).unwrap(), &seq("1,3,3")).chi, 3, "P{n}");
    }
}

#[test]
fn g2k_is_four_critical() {
    let s = seq("1,3^3+");
    for k in 3..=8 {
        let g = make_g2k(k).unwrap();
        assert!(is_k_critical(&g, &s, 4), "G_{}", 2 * k);
        assert!(valid(&g, &s, &g2k_pattern(k)));
    }
}

#[test]
fn explicit_patterns_are_valid() {
    let s133 = seq("1,3,3");
    for n in 1..=24 {
        assert!(valid(&make_path(n).unwrap(), &s133, &pattern_1213(n)));
    }
    for m in 1..=6 {
        assert!(valid(&make_cycle(4 * m).unwrap(), &s133, &pattern_1213(4 * m)));
    }
    let c8: Coloring = "1 2 1 3 1 2 1 4".parse().unwrap();
    assert!(valid(&make_cycle(8).unwrap(), &seq("1,3,4,4"), &c8));
    assert!(valid(
        &make_path(6).unwrap(),
        &seq("1,4^3+"),
        &"1 2 1 3 1 4".parse().unwrap()
    ));
    for n in (5..=29).filter(|n| n % 4 == 1) {
        assert!(valid(&make_cycle(n).unwrap(), &seq("1,3^3+"), &cycle_pattern_mod4_1(n)));
    }
    for n in (6..=30).filter(|n| n % 4 == 2) {
        assert!(valid(&make_cycle(n).unwrap(), &seq("1,3^3+"), &cycle_pattern_mod4_2(n)));
    }
}

#[test]
fn piecewise_coloring_of_4k_plus_3_cycles() {
    for k in 1..=5 {
        let n = 4 * k + 3;
        let c = make_cycle(n).unwrap();
        let colors = cycle_pattern_mod4_3(k);
        for s4 in 3..(n / 2) as u32 {
            assert!(
                valid(&c, &PackingSequence::repeating(&[1, 3, 3, s4]).unwrap(), &colors),
                "k={k} s4={s4}"
            );
        }
        // at the threshold the two vertices colored 4 are too close
        let at = PackingSequence::repeating(&[1, 3, 3, (n / 2) as u32]).unwrap();
        assert!(!valid(&c, &at, &colors));
        assert!(valid(&c, &at, &cycle_pattern_mod4_3_five(n)));
    }
}

#[test]
fn seven_cycle_is_five_critical() {
    let s = seq("1,3^3+");
    let g = make_cycle(7).unwrap();
    assert_eq!(chi_s(&g, &s).chi, 5);
    assert!(is_k_critical(&g, &s, 5));
    assert!(!is_k_critical(&g, &s, 4));
    // C11 already fits in four colors
    assert_eq!(chi_s(&make_cycle(11).unwrap(), &s).chi, 4);
}

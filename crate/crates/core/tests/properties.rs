use proptest::prelude::*;

use springweb::classify::{smooth_by_diagram, smooth_by_tableau_general};
use springweb::diagrams::{diagram_from_tableau, matching_from_tableau};
use springweb::geometry::{base_from_web, fmso_triple};
use springweb::qseries::{q_binomial, QPolynomial};
use springweb::tableaux::enumerate_tableaux;
use springweb::webs::{dissect, triangulate_with, web_from_tableau, web_from_triangulation, ApexRule};
use springweb::{TwoColumnShape, TwoColumnTableau};

fn rectangle_tableau() -> impl Strategy<Value = TwoColumnTableau> {
    (2..=7usize).prop_flat_map(|k| {
        let all = enumerate_tableaux(TwoColumnShape::rectangle(k).unwrap());
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn any_tableau() -> impl Strategy<Value = TwoColumnTableau> {
    (2..=13usize)
        .prop_flat_map(|n| (Just(n), 1..=n / 2))
        .prop_flat_map(|(n, k)| {
            let all = enumerate_tableaux(TwoColumnShape::new(n, k).unwrap());
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
}

/// Rotate the grid by a half turn and replace each entry `x` by `n + 1 - x`.
fn evacuation_oracle(t: &TwoColumnTableau) -> TwoColumnTableau {
    let n = t.n();
    let mut col2: Vec<usize> = t.col1().iter().map(|&x| n + 1 - x).collect();
    col2.sort_unstable();
    TwoColumnTableau::rectangular(col2).unwrap()
}

#[test]
fn enumeration_matches_hook_lengths() {
    for shape in TwoColumnShape::all_up_to(14) {
        let all = enumerate_tableaux(shape);
        assert_eq!(all.len().to_string(), shape.hook_length_count().to_string(), "{shape}");
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
    let catalan: Vec<usize> = (1..=8)
        .map(|k| enumerate_tableaux(TwoColumnShape::rectangle(k).unwrap()).len())
        .collect();
    assert_eq!(catalan, vec![1, 2, 5, 14, 42, 132, 429, 1430]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn tau_star_counts_short_edges(t in any_tableau()) {
        let tau = t.tau_star();
        prop_assert!(tau.iter().all(|&j| !t.in_col2(j) && t.in_col2(j + 1)));
        prop_assert_eq!(tau.len(), diagram_from_tableau(&t).short_edges().len());
    }

    #[test]
    fn diagrams_are_a_bijection(t in any_tableau()) {
        let d = diagram_from_tableau(&t);
        prop_assert_eq!(d.to_tableau(), t.clone());
        prop_assert_eq!(d.rays().len(), t.n() - 2 * t.k());
        let json = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<springweb::MatchingRayDiagram>(&json).unwrap(), d);
    }

    #[test]
    fn general_and_diagram_clauses_agree(t in any_tableau()) {
        let a = smooth_by_tableau_general(&t);
        let b = smooth_by_diagram(&diagram_from_tableau(&t));
        prop_assert_eq!(a.smooth, b.smooth);
        prop_assert_eq!(a.clause(), b.clause());
    }

    #[test]
    fn triple_sums_to_first_column(t in any_tableau()) {
        if let Ok(x) = fmso_triple(&t) {
            prop_assert_eq!(x.sum(), t.n() - t.k());
        } else {
            prop_assert!(!smooth_by_tableau_general(&t).smooth);
        }
    }

    #[test]
    fn claws_count_wrapping_short_edges(t in rectangle_tableau()) {
        let m = matching_from_tableau(&t).unwrap();
        let w = web_from_tableau(&t).unwrap();
        let claws = w.claws().len();
        prop_assert_eq!(claws, m.short_edges_mod().len());
        let tau = t.tau_star().len();
        let expected = if t.split_row(t.k() - 1).is_some() { tau } else { tau + 1 };
        prop_assert_eq!(claws, expected);
        prop_assert_eq!(m.to_tableau(), t);
    }

    #[test]
    fn forest_iff_at_most_three_claws(t in rectangle_tableau()) {
        let w = web_from_tableau(&t).unwrap();
        prop_assert_eq!(w.is_forest(), w.claws().len() <= 3);
        prop_assert_eq!(w.filled().len() + 2, w.claws().len().max(2));
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<springweb::HourglassWeb>(&json).unwrap(), w);
    }

    #[test]
    fn forest_connectivity_from_triple(t in rectangle_tableau()) {
        let w = web_from_tableau(&t).unwrap();
        if w.is_forest() {
            let x = fmso_triple(&t).unwrap();
            prop_assert_eq!(w.is_connected(), x.a != 0 && x.c != 0);
        }
    }

    #[test]
    fn triangulation_choice_is_invisible(t in rectangle_tableau()) {
        let p = dissect(&matching_from_tableau(&t).unwrap()).unwrap();
        let least = web_from_triangulation(&triangulate_with(&p, ApexRule::LeastLabel));
        let greatest = web_from_triangulation(&triangulate_with(&p, ApexRule::GreatestLabel));
        prop_assert_eq!(least.break_set(), greatest.break_set());
        prop_assert_eq!(least.is_forest(), greatest.is_forest());
        if least.is_forest() {
            prop_assert_eq!(base_from_web(&least).unwrap(), base_from_web(&greatest).unwrap());
        }
    }

    #[test]
    fn evacuation_is_half_turn_complement(t in rectangle_tableau()) {
        let e = t.evacuation().unwrap();
        prop_assert_eq!(&e, &evacuation_oracle(&t));
        prop_assert_eq!(e.evacuation().unwrap(), t);
    }

    #[test]
    fn promotion_has_order_dividing_n(t in rectangle_tableau()) {
        let mut p = t.clone();
        for _ in 0..t.n() {
            p = p.promotion().unwrap();
        }
        prop_assert_eq!(p, t.clone());
        let rotated = web_from_tableau(&t).unwrap().rotate();
        prop_assert_eq!(web_from_tableau(&t.promotion().unwrap()).unwrap().break_set(), rotated.break_set());
    }

    #[test]
    fn q_binomial_other_pascal_rule(n in 1..=16usize, d in 1..=16usize) {
        prop_assume!(d <= n);
        let other = &q_binomial(n - 1, d - 1).shift(n - d) + &q_binomial(n - 1, d);
        prop_assert_eq!(q_binomial(n, d), other);
    }

    #[test]
    fn polynomial_product_evaluates_to_product(a in prop::collection::vec(0u64..50, 0..8), b in prop::collection::vec(0u64..50, 0..8)) {
        let (p, q) = (QPolynomial::from_u64(&a), QPolynomial::from_u64(&b));
        prop_assert_eq!((&p * &q).eval_at_one(), p.eval_at_one() * q.eval_at_one());
        prop_assert_eq!(&p * &q, &q * &p);
    }
}

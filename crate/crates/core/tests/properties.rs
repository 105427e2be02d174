//! Property tests for the structural invariants: antichain normalization,
//! the power tower, vanishing bounds, duality, and the agreement between
//! the combinatorial and homological depth routes.

use proptest::prelude::*;

use sqfpow::betti;
use sqfpow::bits::VarSet;
use sqfpow::graph::{FamilySpec, Graph};
use sqfpow::homology::Budget;
use sqfpow::ideal::{SqfIdeal, SqfMonomial};
use sqfpow::linquot;
use sqfpow::FieldSpec;

fn budget() -> Budget {
    Budget::default()
}

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

/// Strategy: a nonzero squarefree ideal on up to `max_n` variables.
fn arb_ideal(max_n: usize) -> impl Strategy<Value = SqfIdeal> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(
            proptest::collection::btree_set(1..=n, 1..=3.min(n)),
            1..=6,
        )
        .prop_map(move |gens| {
            SqfIdeal::minimalize(
                n,
                gens.into_iter().map(SqfMonomial::from_vars),
            )
            .expect("indices in range, no unit")
        })
    })
}

/// Strategy: a graph on up to `max_n` vertices without isolated vertices.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(move |n| {
            let pairs: Vec<(usize, usize)> = (1..=n)
                .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
                .collect();
            proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(move |mask| {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .zip(&mask)
                    .filter(|(_, &b)| b)
                    .map(|(&e, _)| e)
                    .collect();
                Graph::new(n, edges).expect("valid edges")
            })
        })
        .prop_filter("no isolated vertices", |g| {
            g.isolated_vertices().is_empty()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generators_form_an_antichain(ideal in arb_ideal(8)) {
        let gens = ideal.gens();
        for (i, a) in gens.iter().enumerate() {
            for (j, b) in gens.iter().enumerate() {
                prop_assert!(i == j || !a.divides(*b));
            }
        }
    }

    #[test]
    fn power_tower(ideal in arb_ideal(8), k in 1usize..=3) {
        let lhs = ideal.squarefree_power(k + 1);
        let rhs = ideal
            .squarefree_product(&ideal.squarefree_power(k))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn power_vanishes_exactly_above_nu(ideal in arb_ideal(8)) {
        let nu = ideal.nu().unwrap();
        prop_assert!(!ideal.squarefree_power(nu).is_zero());
        prop_assert!(ideal.squarefree_power(nu + 1).is_zero());
    }

    #[test]
    fn minimum_degrees_superadditive(ideal in arb_ideal(8)) {
        let nu = ideal.nu().unwrap();
        let d1 = ideal.min_degree().unwrap();
        let mut prev = d1;
        for k in 2..=nu {
            let dk = ideal.degree_stats(k).unwrap().min_degree;
            prop_assert!(dk >= prev + d1);
            prev = dk;
        }
    }

    #[test]
    fn complement_is_involution(graph in arb_graph(7)) {
        prop_assert_eq!(graph.complement().complement(), graph);
    }

    #[test]
    fn matching_number_is_nu_of_edge_ideal(graph in arb_graph(7)) {
        prop_assert_eq!(
            graph.matching_number(),
            graph.edge_ideal().nu().unwrap()
        );
    }

    #[test]
    fn matching_vertex_sets_are_power_supports(graph in arb_graph(6)) {
        let ideal = graph.edge_ideal();
        for k in 1..=graph.matching_number() {
            let mut sets: Vec<VarSet> = graph
                .k_matchings(k)
                .into_iter()
                .map(|m| m.vertex_set())
                .collect();
            sets.sort();
            sets.dedup();
            let supports: Vec<VarSet> = ideal
                .squarefree_power(k)
                .gens()
                .iter()
                .map(|g| g.support())
                .collect();
            prop_assert_eq!(sets, supports);
        }
    }

    #[test]
    fn gamma_k_matches_stanley_reisner(graph in arb_graph(6)) {
        let ideal = graph.edge_ideal();
        for k in 1..=graph.matching_number() {
            let gamma = graph.gamma_k(k).unwrap();
            let sr = sqfpow::stanley_reisner(&ideal.squarefree_power(k));
            prop_assert_eq!(gamma.facets(), sr.facets());
        }
    }

    #[test]
    fn normalized_depth_is_nonnegative(ideal in arb_ideal(7)) {
        let nu = ideal.nu().unwrap();
        let mut power = ideal.clone();
        for k in 1..=nu {
            if k > 1 {
                power = power.squarefree_product(&ideal).unwrap();
            }
            let dk = power.min_degree().unwrap();
            let depth = betti::depth(&power, q(), &budget()).unwrap();
            prop_assert!(depth >= dk - 1, "depth {} below {} at k={}", depth, dk - 1, k);
        }
    }

    #[test]
    fn first_betti_row_counts_generators(ideal in arb_ideal(7)) {
        let table = betti::hochster_betti(&ideal, q(), &budget()).unwrap();
        let mut counts = std::collections::BTreeMap::new();
        for g in ideal.gens() {
            *counts.entry(g.degree()).or_insert(0u64) += 1;
        }
        for (&j, &count) in &counts {
            prop_assert_eq!(table.betti(1, j), count);
        }
        let total: u64 = (0..=ideal.ambient()).map(|j| table.betti(1, j)).sum();
        prop_assert_eq!(total, ideal.num_gens() as u64);
    }

    #[test]
    fn terai_duality(ideal in arb_ideal(6)) {
        let table = betti::hochster_betti(&ideal, q(), &budget()).unwrap();
        let dual = betti::alexander_dual(&ideal).unwrap();
        let dual_table = betti::hochster_betti(&dual, q(), &budget()).unwrap();
        prop_assert_eq!(table.projdim(), dual_table.regularity_ideal());
        prop_assert_eq!(
            betti::dual_regularity(&ideal, q(), &budget()).unwrap(),
            table.projdim()
        );
    }

    #[test]
    fn alexander_dual_involution(ideal in arb_ideal(8)) {
        let dual = betti::alexander_dual(&ideal).unwrap();
        prop_assert_eq!(betti::alexander_dual(&dual).unwrap(), ideal);
    }

    /// Reduced Euler characteristic two ways: alternating face counts must
    /// equal the alternating sum of homology dimensions, over any field.
    #[test]
    fn euler_characteristic_consistency(ideal in arb_ideal(7)) {
        let complex = sqfpow::stanley_reisner(&ideal);
        let faces = complex.faces_by_size(None);
        let from_faces: i64 = faces
            .iter()
            .enumerate()
            .map(|(s, level)| {
                let sign = if s % 2 == 0 { -1 } else { 1 };
                sign * level.len() as i64
            })
            .sum();
        for field in [q(), FieldSpec::Prime(2), FieldSpec::Prime(32003)] {
            let h = sqfpow::reduced_homology(&complex, field, &budget()).unwrap();
            let from_homology: i64 = h
                .dims()
                .iter()
                .enumerate()
                .map(|(idx, &d)| {
                    let sign = if idx % 2 == 0 { -1 } else { 1 };
                    sign * d as i64
                })
                .sum();
            prop_assert_eq!(from_faces, from_homology);
        }
    }

    #[test]
    fn certificates_replay(ideal in arb_ideal(6)) {
        if let Some(cert) = linquot::find_linear_quotients(&ideal).unwrap() {
            let replayed =
                linquot::verify_linear_quotients(&ideal, &cert.ordering).unwrap();
            prop_assert_eq!(&replayed.colon_counts, &cert.colon_counts);
            if ideal.num_gens() >= 2 {
                let formula = cert.depth().unwrap();
                let hochster = betti::depth(&ideal, q(), &budget()).unwrap();
                prop_assert_eq!(formula, hochster);
            }
        }
    }

    #[test]
    fn whiskered_family_invariants(
        whiskers in proptest::collection::vec(1usize..=2, 2..=4)
    ) {
        let graph = FamilySpec::Whiskered(whiskers.clone()).build().unwrap();
        prop_assert_eq!(graph.matching_number(), whiskers.len());
        prop_assert!(graph.is_cochordal());
    }

    #[test]
    fn dominating_clique_forces_min_depth(graph in arb_graph(6)) {
        for k in 2..=graph.matching_number() {
            if graph.dominating_clique(2 * k - 1).is_some() {
                prop_assert!(
                    betti::top_betti_mindepth(&graph, k, q(), &budget()).unwrap()
                );
            }
        }
    }

    #[test]
    fn min_depth_with_quotients_needs_dominating_matching(graph in arb_graph(6)) {
        let ideal = graph.edge_ideal();
        for k in 1..=graph.matching_number() {
            let power = ideal.squarefree_power(k);
            if linquot::find_linear_quotients(&power).unwrap().is_none() {
                continue;
            }
            if betti::top_betti_mindepth(&graph, k, q(), &budget()).unwrap() {
                prop_assert!(graph.dominating_k_matching(k).is_some());
            }
        }
    }
}

/// Containment-preserving stabilization: once the square of a path
/// complement reaches the degree-4 Veronese, every later power is the
/// matching Veronese.
#[test]
fn path_complement_powers_stabilize() {
    for n in 6..=8usize {
        let graph = FamilySpec::PathComplement(n).build().unwrap();
        let ideal = graph.edge_ideal();
        let veronese = |d: usize| {
            SqfIdeal::minimalize(
                n,
                sqfpow::bits::subsets_of_size(n, d)
                    .into_iter()
                    .map(SqfMonomial::from_support),
            )
            .unwrap()
        };
        // The second squarefree power equals m^[4], and containment holds
        // generator-wise.
        assert!(veronese(2).contains_ideal(&ideal));
        assert_eq!(ideal.squarefree_power(2), veronese(4));
        for l in 2..=graph.matching_number() {
            assert_eq!(ideal.squarefree_power(l), veronese(2 * l), "n={n} l={l}");
        }
    }
}

/// Depth is additive plus one across products in disjoint variables.
#[test]
fn disjoint_product_depth() {
    let cases: [(&[&[usize]], usize, &[&[usize]], usize); 3] = [
        (&[&[1, 2]], 2, &[&[1, 2]], 2),
        (&[&[1, 2], &[2, 3]], 3, &[&[1, 2], &[2, 3]], 3),
        (&[&[1, 2], &[1, 3]], 3, &[&[1]], 1),
    ];
    for (left_gens, left_n, right_gens, right_n) in cases {
        let left = SqfIdeal::minimalize(
            left_n,
            left_gens
                .iter()
                .map(|g| SqfMonomial::from_vars(g.iter().copied())),
        )
        .unwrap();
        let right = SqfIdeal::minimalize(
            right_n,
            right_gens
                .iter()
                .map(|g| SqfMonomial::from_vars(g.iter().copied())),
        )
        .unwrap();
        // Embed the right ideal after the left one's variables.
        let shifted = SqfIdeal::minimalize(
            left_n + right_n,
            right
                .gens()
                .iter()
                .map(|g| SqfMonomial::from_vars(g.support().iter().map(|v| v + left_n))),
        )
        .unwrap();
        let left_embedded = SqfIdeal::minimalize(
            left_n + right_n,
            left.gens().iter().copied(),
        )
        .unwrap();
        let product = left_embedded.squarefree_product(&shifted).unwrap();
        let expected = betti::depth(&left, q(), &budget()).unwrap()
            + betti::depth(&right, q(), &budget()).unwrap()
            + 1;
        assert_eq!(
            betti::depth(&product, q(), &budget()).unwrap(),
            expected
        );
    }
}

/// The homology engine agrees between the rationals and GF(32003) on the
/// deterministic fixtures (recorded as a check, not a theorem).
#[test]
fn field_agreement_on_fixtures() {
    let p = FieldSpec::Prime(32003);
    let ideal = sqfpow::verify::fixtures::top_gap_ideal();
    let cube = ideal.squarefree_power(3);
    assert_eq!(
        betti::depth(&cube, q(), &budget()).unwrap(),
        betti::depth(&cube, p, &budget()).unwrap()
    );
    let whiskered = sqfpow::verify::fixtures::whiskered(&[2, 2, 2]).edge_ideal();
    assert_eq!(
        betti::depth(&whiskered, q(), &budget()).unwrap(),
        betti::depth(&whiskered, p, &budget()).unwrap()
    );
}

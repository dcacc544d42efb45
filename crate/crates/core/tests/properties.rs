mod common;

use common::{random_complex, random_ideal, random_quadratic, rng};
use egh_core::lpp::{egh_for_quadratic, quotient_monomials, EghOptions};
use egh_core::primes::smallest_minimal_prime;
use egh_core::regseq::{
    build_ga, check_certificate, decompose_degree_two, find_matching,
    find_regular_sequence, is_regular_sequence_of_products, MatchingOutcome, RegseqOptions,
};
use egh_core::simplicial::{
    betti_numbers, check_balanced, depth_and_pd, hochster_betti, is_cohen_macaulay,
    projective_dimension, BalanceCheck, Coloring, Graph,
};
use egh_core::{
    balance, hilbert_series_equal, polarize, Field, Monomial, MonomialIdeal, SimplicialComplex,
};
use proptest::prelude::*;

fn quadratic_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (2usize..=7, 1usize..=10, any::<u64>())
        .prop_map(|(n, g, seed)| random_quadratic(&mut rng(seed), n, g))
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (1usize..=6, any::<u32>()).prop_map(|(n, mask)| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let edges = pairs
            .into_iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        Graph::new(n, edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn certificates_are_regular_sequences(ideal in quadratic_strategy(), seed in any::<u64>()) {
        let cert = find_regular_sequence(&ideal, &RegseqOptions { seed, ..Default::default() }).unwrap();
        check_certificate(&cert).unwrap();
        let check = is_regular_sequence_of_products(&cert.products(), Field::Rationals).unwrap();
        prop_assert!(check.is_regular());
    }

    #[test]
    fn deterministic_search_always_certifies(ideal in quadratic_strategy()) {
        let opts = RegseqOptions { deterministic: true, ..Default::default() };
        let cert = find_regular_sequence(&ideal, &opts).unwrap();
        prop_assert!(cert.fallback);
        check_certificate(&cert).unwrap();
    }

    #[test]
    fn same_seed_same_certificate(ideal in quadratic_strategy(), seed in any::<u64>()) {
        let opts = RegseqOptions { seed, ..Default::default() };
        prop_assert_eq!(
            find_regular_sequence(&ideal, &opts).unwrap(),
            find_regular_sequence(&ideal, &opts).unwrap()
        );
    }

    #[test]
    fn hall_condition_holds_for_every_subset(ideal in quadratic_strategy()) {
        let prime = smallest_minimal_prime(&ideal).unwrap();
        let dec = decompose_degree_two(&ideal, &prime).unwrap();
        for a in 0..1u64 << dec.g() {
            let perfect = matches!(find_matching(&build_ga(&dec, a)), MatchingOutcome::Perfect(_));
            prop_assert!(perfect);
        }
    }

    #[test]
    fn lex_plus_squares_matches_hilbert_series(ideal in quadratic_strategy()) {
        let r = egh_for_quadratic(&ideal, &EghOptions::default()).unwrap();
        let j = &r.result.ideal;
        prop_assert!(r.result.series_equal);
        prop_assert!(hilbert_series_equal(&ideal, j).unwrap());
        let n = ideal.n();
        for i in 0..r.height {
            prop_assert!(j.contains(&Monomial::from_pairs(n, &[(i, 2)])));
        }
        // in each degree the ideal meets the quotient basis in an initial lex segment
        let powers = vec![2u32; r.height];
        for d in 0..r.result.picked_per_degree.len() + 2 {
            let slice = quotient_monomials(n, &powers, d as u32);
            let inside: Vec<bool> = slice.iter().map(|m| j.contains(m)).collect();
            let k = inside.iter().filter(|&&b| b).count();
            prop_assert!(inside[..k].iter().all(|&b| b));
        }
    }

    #[test]
    fn auslander_buchsbaum(ideal in quadratic_strategy()) {
        let r = depth_and_pd(&ideal, Field::Rationals, 16).unwrap();
        prop_assert_eq!(r.depth + r.projective_dimension, ideal.n());
    }

    #[test]
    fn polarization_preserves_betti_numbers(seed in any::<u64>(), n in 1usize..=4, g in 1usize..=4) {
        let ideal = random_ideal(&mut rng(seed), n, g, 2);
        prop_assume!(!ideal.is_zero() && !ideal.is_unit());
        let pol = polarize(&ideal);
        let direct = betti_numbers(&ideal, Field::Rationals, 16).unwrap();
        prop_assert_eq!(&direct, &hochster_betti(&pol.ideal, Field::Rationals, 16).unwrap());
        prop_assert_eq!(&direct, &betti_numbers(&pol.ideal, Field::Rationals, 16).unwrap());
    }

    #[test]
    fn split_projective_dimension_agrees(seed in any::<u64>(), n in 1usize..=4, g in 1usize..=5, powers in 0usize..=4) {
        let mut ideal = random_ideal(&mut rng(seed), n, g, 3);
        let pure: Vec<Monomial> = (0..powers.min(n)).map(|v| Monomial::from_pairs(n, &[(v, 2)])).collect();
        ideal = ideal.sum(&MonomialIdeal::new(n, pure).unwrap()).unwrap();
        prop_assume!(!ideal.is_unit());
        prop_assert_eq!(
            projective_dimension(&ideal, Field::Rationals, 16).unwrap(),
            depth_and_pd(&ideal, Field::Rationals, 16).unwrap().projective_dimension
        );
    }

    #[test]
    fn stanley_reisner_round_trip(seed in any::<u64>(), v in 1usize..=7, f in 1usize..=5) {
        let c = random_complex(&mut rng(seed), v, f);
        let sr = c.stanley_reisner().unwrap();
        prop_assert_eq!(SimplicialComplex::of_ideal(&sr).unwrap(), c);
    }

    #[test]
    fn coning_preserves_cohen_macaulayness(seed in any::<u64>(), v in 1usize..=6, f in 1usize..=4) {
        let c = random_complex(&mut rng(seed), v, f);
        let cone = c.join_simplex(1).unwrap();
        prop_assert_eq!(
            is_cohen_macaulay(&c, Field::Rationals).unwrap().cohen_macaulay,
            is_cohen_macaulay(&cone, Field::Rationals).unwrap().cohen_macaulay
        );
        prop_assert_eq!(c.h_vector().unwrap(), cone.h_vector().unwrap()[..c.h_vector().unwrap().len()].to_vec());
    }

    #[test]
    fn h_vector_sums_to_top_faces(seed in any::<u64>(), v in 1usize..=7, f in 1usize..=5) {
        let c = random_complex(&mut rng(seed), v, f);
        let h = c.h_vector().unwrap();
        let fv = c.f_vector().unwrap();
        prop_assert_eq!(h.iter().sum::<i64>(), *fv.last().unwrap() as i64);
    }

    #[test]
    fn found_colorings_verify(seed in any::<u64>(), v in 1usize..=7, f in 1usize..=5) {
        let c = random_complex(&mut rng(seed), v, f);
        if let BalanceCheck::Balanced(col) = check_balanced(&c, None).unwrap() {
            prop_assert!(check_balanced(&c, Some(&col)).unwrap().is_balanced());
        }
    }

    #[test]
    fn balance_certificates_hold(graph in graph_strategy()) {
        let delta = SimplicialComplex::independence_complex(&graph).unwrap();
        prop_assume!(is_cohen_macaulay(&delta, Field::Rationals).unwrap().cohen_macaulay);
        let r = balance(&delta, Field::Rationals).unwrap();
        let gamma = r.gamma_complex().unwrap();
        prop_assert!(r.h_equal);
        prop_assert!(check_balanced(&gamma, Some(&Coloring(r.coloring.clone()))).unwrap().is_balanced());
        prop_assert!(is_cohen_macaulay(&gamma, Field::Rationals).unwrap().cohen_macaulay);
        // a flag output balances again to the same h-vector
        if gamma.is_flag() {
            let again = balance(&gamma, Field::Rationals).unwrap();
            prop_assert_eq!(
                egh_core::simplicial::h_polynomial(&again.gamma_h_vector),
                egh_core::simplicial::h_polynomial(&r.h_vector)
            );
        }
    }
}

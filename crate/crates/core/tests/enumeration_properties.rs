mod common;

use common::{arb_graph, arb_nonempty_graph, random_graph};
use indom::enumeration::*;
use indom::{Graph, IntPoly};
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn enumeration_matches_subset_sweep(g in arb_graph(12)) {
        prop_assert_eq!(di_polynomial(&g).unwrap(), di_polynomial_bruteforce(&g).unwrap());
    }

    #[test]
    fn emitted_sets_are_independent_dominating(g in arb_graph(12)) {
        let sets = maximal_independent_sets(&g).unwrap();
        for s in &sets {
            prop_assert!(is_independent_dominating(&g, &s.to_vec()).unwrap());
        }
        let at_one = di_polynomial(&g).unwrap().evaluate_int(&BigInt::from(1));
        prop_assert_eq!(at_one, BigInt::from(sets.len()));
        let mut sorted = sets.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), sets.len());
    }

    #[test]
    fn coefficient_signs_and_low_terms(g in arb_nonempty_graph(12)) {
        let d = di_polynomial(&g).unwrap();
        let i = independence_polynomial(&g).unwrap();
        prop_assert!(!d.has_negative_coeff() && !i.has_negative_coeff());
        prop_assert_eq!(d.coeff(0), BigInt::from(0));
        prop_assert_eq!(i.coeff(0), BigInt::from(1));
        prop_assert_eq!(i.coeff(1), BigInt::from(g.order()));
        prop_assert_eq!(i.degree(), d.degree());
    }

    #[test]
    fn value_at_minus_one_is_parity_difference(g in arb_graph(12)) {
        let sets = maximal_independent_sets(&g).unwrap();
        let even = sets.iter().filter(|s| s.len() % 2 == 0).count() as i64;
        let odd = sets.len() as i64 - even;
        let d = di_polynomial(&g).unwrap();
        prop_assert_eq!(d.evaluate_int(&BigInt::from(-1)), BigInt::from(even - odd));
    }

    #[test]
    fn independence_polynomial_counts_independent_sets(g in arb_graph(10)) {
        let n = g.order();
        let mut counts = vec![0i64; n + 1];
        for mask in 0u32..(1 << n) {
            let independent = g.edges().all(|(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0);
            if independent {
                counts[mask.count_ones() as usize] += 1;
            }
        }
        prop_assert_eq!(independence_polynomial(&g).unwrap(), IntPoly::from_i64s(&counts));
    }

    #[test]
    fn well_covered_iff_monomial(g in arb_nonempty_graph(9)) {
        let sets = maximal_independent_sets(&g).unwrap();
        let same_size = sets.windows(2).all(|w| w[0].len() == w[1].len());
        prop_assert_eq!(is_well_covered(&g).unwrap(), same_size);
    }
}

#[test]
fn domination_parameter_chain() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..200 {
        let g = random_graph(&mut rng, 1 + i % 10, 0.4);
        let (gm, gi, a) = (gamma(&g).unwrap(), gamma_i(&g).unwrap(), alpha(&g).unwrap());
        assert!(gm <= gi && gi <= a, "{:?}: {gm} {gi} {a}", g.to_graph6());
    }
}

#[test]
fn results_do_not_depend_on_worker_count() {
    let g = Graph::cycle(9).corona(&Graph::path(3));
    let one = indom::parallel::with_workers(1, || (maximal_independent_sets(&g).unwrap(), di_polynomial(&g).unwrap()));
    let four = indom::parallel::with_workers(4, || (maximal_independent_sets(&g).unwrap(), di_polynomial(&g).unwrap()));
    assert_eq!(one, four);
    let brute1 = indom::parallel::with_workers(1, || di_polynomial_bruteforce(&Graph::cycle(18)).unwrap());
    let brute3 = indom::parallel::with_workers(3, || di_polynomial_bruteforce(&Graph::cycle(18)).unwrap());
    assert_eq!(brute1, brute3);
}

/// Graphs whose `D_i` has a zero coefficient strictly between `γᵢ` and `α`.
#[test]
fn coefficient_gaps_occur() {
    // K_{1,3}: the hub alone, or all three leaves
    assert_eq!(di_polynomial(&Graph::star(3)).unwrap(), IntPoly::from_i64s(&[0, 1, 0, 1]));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut gaps = 0;
    for i in 0..300 {
        let g = random_graph(&mut rng, 2 + i % 9, 0.3);
        let d = di_polynomial(&g).unwrap();
        let low = d.lowest_degree().unwrap();
        if d.coeffs()[low..].iter().any(|c| !c.is_positive()) {
            gaps += 1;
        }
    }
    assert!(gaps > 0);
}

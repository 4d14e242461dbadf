//! Invariants checked on random complexes and random seeds.

mod common;

use proptest::prelude::*;

use common::admissible_expansions;
use srtk::artinian::{graded_reduction, level_quotient_of, random_lsop};
use srtk::builtin::builtin;
use srtk::enumeration::{d_binomial_expansion, HVectorBundle};
use srtk::homology::{hochster_dims, is_buchsbaum, reduced_betti};
use srtk::{FiniteField, PrimeField, SimplicialComplex};

/// Random complexes on at most 6 vertices with facets of size at most 3.
fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    proptest::collection::vec(proptest::collection::btree_set(1u32..=6, 1..=3), 1..8)
        .prop_map(|facets| SimplicialComplex::from_facets(6, facets.into_iter().map(|f| f.into_iter().collect::<Vec<_>>())).unwrap())
}

fn arb_char() -> impl Strategy<Value = u32> {
    prop_oneof![Just(2u32), Just(3), Just(32003)]
}

fn padded(v: &[usize], len: usize) -> Vec<i64> {
    let mut out: Vec<i64> = v.iter().map(|&x| x as i64).collect();
    out.resize(len.max(out.len()), 0);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduction_invariants(c in arb_complex(), p in arb_char(), seed in any::<u64>()) {
        let field = FiniteField::generic(p).unwrap();
        let forms = random_lsop(&c, field, seed).unwrap();
        let r = graded_reduction(&c, &forms).unwrap();
        prop_assert_eq!(r.dims()[0], 1);
        prop_assert!(r.top_degree() <= c.d());
        let socle = r.socle_profile();
        for j in 0..=r.top_degree() {
            prop_assert!(socle.in_degree(j) <= r.dims()[j]);
        }
        prop_assert_eq!(socle.in_degree(r.top_degree()), r.dims()[r.top_degree()]);

        let prime = PrimeField::new(p).unwrap();
        if is_buchsbaum(&c, prime) {
            let b = HVectorBundle::new(&c, reduced_betti(&c, prime)).unwrap();
            prop_assert_eq!(padded(r.dims(), c.d() + 1), b.h_prime);
        }
    }

    #[test]
    fn level_quotient_is_idempotent(c in arb_complex(), seed in any::<u64>()) {
        let field = FiniteField::default();
        let forms = random_lsop(&c, field, seed).unwrap();
        let r = graded_reduction(&c, &forms).unwrap();
        let d = c.d();
        let q = level_quotient_of(&r, d).unwrap();
        let again = q.algebra.quotient_by_socle(1..=d.saturating_sub(1)).unwrap();
        if q.is_level && q.socle_degree == d {
            prop_assert_eq!(&again, &q.algebra);
        }
        prop_assert!(q.dims.iter().zip(r.dims()).all(|(a, b)| a <= b));
    }

    #[test]
    fn homology_cross_checks(c in arb_complex(), p in arb_char()) {
        let prime = PrimeField::new(p).unwrap();
        let betti = reduced_betti(&c, prime);
        for i in 0..=c.d() {
            prop_assert_eq!(hochster_dims(&c, prime, i).unwrap().in_degree(0), betti.get(i as isize - 1));
        }
        let euler: i64 = c.f_vector().iter().enumerate().map(|(k, &f)| if k % 2 == 1 { f } else { -f }).sum();
        prop_assert_eq!(euler, betti.euler_characteristic());
    }

    #[test]
    fn expansion_matches_exhaustive_search(b in 0i64..=120, n in 1i64..=4, d in 0i64..=3) {
        let all = admissible_expansions(n, d, b);
        let found = &all[&b];
        prop_assert_eq!(found.len(), 1);
        let e = d_binomial_expansion(b, n, d).unwrap();
        prop_assert_eq!((e.m_top, e.ms), found[0].clone());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn dimensions_do_not_depend_on_the_seed(seed in any::<u64>()) {
        for (name, p) in [("torus7", 32003u32), ("rp2_6", 2), ("wedge_two_circles", 3)] {
            let c = builtin(name).unwrap();
            let field = FiniteField::generic(p).unwrap();
            let base = graded_reduction(&c, &random_lsop(&c, field, 0).unwrap()).unwrap();
            let other = graded_reduction(&c, &random_lsop(&c, field, seed).unwrap()).unwrap();
            prop_assert_eq!(base.dims(), other.dims());
            prop_assert_eq!(base.socle_profile(), other.socle_profile());
        }
    }
}

//! Randomized invariants over the core algebra: every statement here holds
//! for all inputs, so any counterexample proptest finds is a real bug.

mod common;

use common::fin;
use num::BigRational;
use proptest::prelude::*;
use troplin::prevariety::{dimension, orthogonal_generators, prevariety_member};
use troplin::puiseux::{PuiseuxPoly, PuiseuxVector};
use troplin::trop::is_tropically_orthogonal;
use troplin::variety::{plucker_coordinates, trop_generators_from_plucker, trop_space_member};
use troplin::{ExtRat, TropMatrix, TropVector};

fn ext_entry() -> impl Strategy<Value = ExtRat> {
    prop_oneof![
        1 => Just(ExtRat::Infinity),
        4 => (-8i64..=8, 1i64..=4).prop_map(|(n, d)| fin(n, d)),
    ]
}

fn trop_vector(n: usize) -> impl Strategy<Value = TropVector> {
    prop::collection::vec(ext_entry(), n).prop_map(|c| TropVector::new(c).unwrap())
}

fn trop_matrix(ns: std::ops::RangeInclusive<usize>, ks: std::ops::RangeInclusive<usize>)
-> impl Strategy<Value = TropMatrix> {
    (ns, ks).prop_flat_map(|(n, k)| {
        prop::collection::vec(trop_vector(n), k)
            .prop_map(move |rows| TropMatrix::new(n, rows).unwrap())
    })
}

fn puiseux_poly() -> impl Strategy<Value = PuiseuxPoly> {
    prop::collection::vec(((-8i64..=8), (-4i64..=4), (1i64..=2)), 0..=3).prop_map(|terms| {
        PuiseuxPoly::from_terms(terms.into_iter().map(|(c, en, ed)| {
            (
                BigRational::new(en.into(), ed.into()),
                BigRational::from_integer(c.into()),
            )
        }))
    })
}

fn puiseux_vector(n: usize) -> impl Strategy<Value = PuiseuxVector> {
    prop::collection::vec(puiseux_poly(), n).prop_map(|c| PuiseuxVector::new(c).unwrap())
}

proptest! {
    #[test]
    fn orthogonality_is_symmetric(
        (x, a) in (2usize..=5).prop_flat_map(|n| (trop_vector(n), trop_vector(n)))
    ) {
        prop_assert_eq!(
            is_tropically_orthogonal(&x, &a).unwrap(),
            is_tropically_orthogonal(&a, &x).unwrap()
        );
    }

    #[test]
    fn orthogonality_survives_finite_scaling(
        (x, a) in (2usize..=5).prop_flat_map(|n| (trop_vector(n), trop_vector(n))),
        c in (-8i64..=8, 1i64..=4).prop_map(|(n, d)| fin(n, d)),
    ) {
        prop_assert_eq!(
            is_tropically_orthogonal(&x.scale(&c), &a).unwrap(),
            is_tropically_orthogonal(&x, &a).unwrap()
        );
    }

    #[test]
    fn ext_display_round_trips(e in ext_entry()) {
        prop_assert_eq!(e.to_string().parse::<ExtRat>().unwrap(), e);
    }

    #[test]
    fn poly_display_round_trips(p in puiseux_poly()) {
        prop_assert_eq!(p.to_string().parse::<PuiseuxPoly>().unwrap(), p);
    }

    #[test]
    fn valuation_is_multiplicative(p in puiseux_poly(), q in puiseux_poly()) {
        prop_assert_eq!((&p * &q).valuation(), &p.valuation() + &q.valuation());
    }

    #[test]
    fn valuation_of_sums_is_bounded(p in puiseux_poly(), q in puiseux_poly()) {
        let bound = (&p + &q).valuation();
        prop_assert!(bound >= p.valuation().min(q.valuation()));
    }

    #[test]
    fn dot_valuation_dominates_termwise_minimum(
        (u, v) in (2usize..=4).prop_flat_map(|n| (puiseux_vector(n), puiseux_vector(n)))
    ) {
        let dot = u.dot(&v).unwrap();
        let bound = u
            .iter()
            .zip(v.iter())
            .map(|(a, b)| &a.valuation() + &b.valuation())
            .min()
            .unwrap();
        prop_assert!(dot.valuation() >= bound);
        prop_assert_eq!(u.dot(&v).unwrap(), v.dot(&u).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_generators_annihilate_rows(m in trop_matrix(2..=4, 1..=3)) {
        let gens = orthogonal_generators(&m).unwrap();
        for g in gens.gens() {
            for row in m.rows() {
                prop_assert!(is_tropically_orthogonal(g, row).unwrap());
            }
        }
    }

    #[test]
    fn rows_lie_in_their_double_complement(m in trop_matrix(2..=4, 1..=3)) {
        let xs = orthogonal_generators(&m).unwrap();
        for row in m.rows() {
            prop_assert!(prevariety_member(&xs.to_matrix(), row).unwrap());
        }
    }

    #[test]
    fn hull_points_reproduce_through_membership(
        m in trop_matrix(2..=4, 1..=3),
        raw in prop::collection::vec(ext_entry(), 12),
    ) {
        let gens = orthogonal_generators(&m).unwrap();
        let coeffs: Vec<ExtRat> = raw.into_iter().take(gens.len()).collect();
        if coeffs.len() < gens.len() {
            return Ok(());
        }
        let p = gens.hull_eval(&coeffs).unwrap();
        let back = gens.hull_member(&p).unwrap();
        prop_assert!(back.is_some(), "hull point {p} rejected");
        prop_assert_eq!(gens.hull_eval(&back.unwrap()).unwrap(), p);
    }

    #[test]
    fn complement_dimensions_cover_the_ambient(m in trop_matrix(2..=4, 1..=2)) {
        let xs = orthogonal_generators(&m).unwrap();
        let ys = orthogonal_generators(&xs.to_matrix()).unwrap();
        prop_assert!(dimension(&xs) + dimension(&ys) >= m.ambient_dim());
    }

    #[test]
    fn minor_and_row_membership_agree(
        consts in prop::collection::vec((-3i64..=3, 0i64..=2), 4),
        x in trop_vector(4),
    ) {
        // rows (1, 0, a, b), (0, 1, c, d) always span two dimensions
        let poly = |i: usize| PuiseuxPoly::from_int_terms(&[(consts[i].0, consts[i].1)]);
        let rows = vec![
            PuiseuxVector::new(vec![
                PuiseuxPoly::one(), PuiseuxPoly::zero(), poly(0), poly(1),
            ]).unwrap(),
            PuiseuxVector::new(vec![
                PuiseuxPoly::zero(), PuiseuxPoly::one(), poly(2), poly(3),
            ]).unwrap(),
        ];
        let p = plucker_coordinates(&rows).unwrap();
        let by_minors = trop_space_member(&p, &x).unwrap();
        let by_rows = prevariety_member(&trop_generators_from_plucker(&p), &x).unwrap();
        prop_assert_eq!(by_minors, by_rows);
    }

    #[test]
    fn combination_tropicalizations_are_members(
        consts in prop::collection::vec((-3i64..=3, 0i64..=2), 4),
        c1 in puiseux_poly(),
        c2 in puiseux_poly(),
    ) {
        let poly = |i: usize| PuiseuxPoly::from_int_terms(&[(consts[i].0, consts[i].1)]);
        let rows = vec![
            PuiseuxVector::new(vec![
                PuiseuxPoly::one(), PuiseuxPoly::zero(), poly(0), poly(1),
            ]).unwrap(),
            PuiseuxVector::new(vec![
                PuiseuxPoly::zero(), PuiseuxPoly::one(), poly(2), poly(3),
            ]).unwrap(),
        ];
        let p = plucker_coordinates(&rows).unwrap();
        let combo = rows[0].scale(&c1).add(&rows[1].scale(&c2)).unwrap();
        prop_assert!(trop_space_member(&p, &combo.tropicalize()).unwrap());
    }
}

//! Randomized algebraic laws, all exact and all driven by fixed-seed
//! ChaCha runners so every run exercises the identical case list. No
//! failure-persistence files are written; a failure reproduces by itself.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rmatq::json;
use rmatq::op::{lift12, lift23, Op2};
use rmatq::poly::{rat, Monomial, Poly, Rat};
use rmatq::series::HSeries;
use rmatq::solve::{solve_affine, RatMat};

fn runner(seed: u8, cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]),
    )
}

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

/// Sparse polynomials in two fixed variables, up to three terms.
fn arb_poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec((-6i64..=6, 1i64..=3, 0u32..=2, 0u32..=2), 0..=3).prop_map(
        |terms| {
            let mut p = Poly::zero();
            for (n, d, e1, e2) in terms {
                p = p.add(&Poly::term(
                    rat(n, d),
                    Monomial::from_pairs(&[("u", e1), ("v", e2)]),
                ));
            }
            p
        },
    )
}

fn arb_op(d: usize) -> impl Strategy<Value = Op2> {
    proptest::collection::vec(arb_poly(), d * d * d * d).prop_map(move |entries| {
        let mut op = Op2::zero(d);
        let mut it = entries.into_iter();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        op.set_entry(i, j, k, l, it.next().expect("sized vec"));
                    }
                }
            }
        }
        op
    })
}

/// A series whose leading coefficient is unipotent (identity plus a
/// strictly triangular rational part in the flat basis), hence always
/// invertible, with arbitrary polynomial coefficients above order 0.
fn arb_unipotent_series(d: usize, order: usize) -> impl Strategy<Value = HSeries> {
    let dd = d * d;
    (
        proptest::collection::vec(arb_rat(), dd * dd),
        proptest::collection::vec(arb_op(d), order),
    )
        .prop_map(move |(lead_entries, higher)| {
            let mut lead = Op2::identity(d);
            let mut it = lead_entries.into_iter();
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        for l in 0..d {
                            let c = it.next().expect("sized vec");
                            // Strictly below the diagonal: output flat index
                            // greater than input flat index.
                            if k * d + l > i * d + j {
                                lead.set_entry(i, j, k, l, Poly::constant(c));
                            }
                        }
                    }
                }
            }
            let mut coeffs = vec![lead];
            coeffs.extend(higher);
            HSeries::from_coeffs(coeffs)
        })
}

fn arb_series() -> impl Strategy<Value = HSeries> {
    (1usize..=3, 0usize..=3).prop_flat_map(|(d, n)| {
        proptest::collection::vec(arb_op(d), n + 1).prop_map(HSeries::from_coeffs)
    })
}

#[test]
fn poly_ring_laws() {
    let mut r = runner(1, 64);
    r.run(&(arb_poly(), arb_poly(), arb_poly()), |(a, b, c)| {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), Poly::zero());
        prop_assert_eq!(a.mul(&Poly::one()), a.clone());
        prop_assert_eq!(a.mul(&Poly::zero()), Poly::zero());
        Ok(())
    })
    .unwrap();
}

#[test]
fn poly_display_parse_round_trip() {
    let mut r = runner(2, 64);
    r.run(&arb_poly(), |a| {
        let text = a.to_string();
        let back: Poly = text.parse().expect("own display must parse");
        prop_assert_eq!(back, a);
        Ok(())
    })
    .unwrap();
}

#[test]
fn permutation_squares_to_identity_up_to_dim_4() {
    for d in 1..=4 {
        let p = Op2::permutation_p(d);
        assert_eq!(p.compose(&p), Op2::identity(d));
    }
}

#[test]
fn lifts_are_functorial_and_linear() {
    let mut r = runner(3, 24);
    r.run(&(arb_op(2), arb_op(2)), |(a, b)| {
        prop_assert_eq!(lift12(&a.compose(&b)), lift12(&a).compose(&lift12(&b)));
        prop_assert_eq!(lift23(&a.compose(&b)), lift23(&a).compose(&lift23(&b)));
        prop_assert_eq!(lift12(&a.add(&b)), lift12(&a).add(&lift12(&b)));
        prop_assert_eq!(lift23(&a.add(&b)), lift23(&a).add(&lift23(&b)));
        Ok(())
    })
    .unwrap();
}

#[test]
fn series_inverse_multiplies_back_to_one_on_both_sides() {
    let mut r = runner(4, 16);
    r.run(&arb_unipotent_series(2, 3), |s| {
        let inv = s.inverse().expect("unipotent leading term");
        let id = HSeries::identity(2, 3);
        prop_assert_eq!(s.mul(&inv).expect("same dim"), id.clone());
        prop_assert_eq!(inv.mul(&s).expect("same dim"), id);
        Ok(())
    })
    .unwrap();
}

#[test]
fn mirror_is_an_involution_and_inverse_is_too() {
    let mut r = runner(5, 12);
    r.run(&arb_unipotent_series(2, 3), |s| {
        let twice = s
            .mirror()
            .expect("invertible")
            .mirror()
            .expect("invertible");
        prop_assert_eq!(twice, s.clone());
        let inv_inv = s.inverse().expect("invertible").inverse().expect("invertible");
        prop_assert_eq!(inv_inv, s);
        Ok(())
    })
    .unwrap();
}

#[test]
fn h_negation_laws() {
    let mut r = runner(6, 24);
    r.run(
        &(arb_unipotent_series(2, 3), arb_unipotent_series(2, 3)),
        |(s, t)| {
            prop_assert_eq!(s.h_negation().h_negation(), s.clone());
            prop_assert_eq!(
                s.mul(&t).expect("same dim").h_negation(),
                s.h_negation().mul(&t.h_negation()).expect("same dim")
            );
            Ok(())
        },
    )
    .unwrap();
}

#[test]
fn truncation_commutes_with_arithmetic() {
    let mut r = runner(7, 16);
    r.run(
        &(arb_unipotent_series(2, 3), arb_unipotent_series(2, 3), 0usize..=3),
        |(s, t, k)| {
            prop_assert_eq!(
                s.truncate(k).mul(&t.truncate(k)).expect("same dim"),
                s.mul(&t).expect("same dim").truncate(k)
            );
            prop_assert_eq!(
                s.truncate(k).add(&t.truncate(k)).expect("same dim"),
                s.add(&t).expect("same dim").truncate(k)
            );
            prop_assert_eq!(
                s.truncate(k).inverse().expect("unipotent"),
                s.inverse().expect("unipotent").truncate(k)
            );
            Ok(())
        },
    )
    .unwrap();
}

#[test]
fn solver_round_trips_consistent_systems() {
    let mut r = runner(8, 48);
    r.run(
        &(
            1usize..=5,
            1usize..=4,
            proptest::collection::vec(arb_rat(), 20),
            proptest::collection::vec(arb_poly(), 4),
        ),
        |(rows, cols, mat_entries, x0_terms)| {
            let mut m = RatMat::zero(rows, cols);
            let mut it = mat_entries.into_iter();
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, it.next().expect("sized vec"));
                }
            }
            let x0: Vec<Poly> = (0..cols)
                .map(|j| x0_terms.get(j).cloned().unwrap_or_else(Poly::zero))
                .collect();
            let rhs = m.mul_poly_vec(&x0);
            let sol = solve_affine(&m, &rhs);
            prop_assert!(
                sol.obstructions.is_empty(),
                "consistent system reported obstructions"
            );
            prop_assert_eq!(m.mul_poly_vec(&sol.particular), rhs);
            for k in &sol.kernel_basis {
                prop_assert!(m.mul_vec(k).iter().all(|c| c == &rat(0, 1)));
            }
            Ok(())
        },
    )
    .unwrap();
}

#[test]
fn json_round_trip_is_bit_exact() {
    let mut r = runner(9, 24);
    r.run(&arb_series(), |s| {
        let dto = json::series_to_json(&s);
        let text = serde_json::to_string(&dto).expect("serialize");
        let parsed: json::SeriesJson = serde_json::from_str(&text).expect("parse");
        let back = json::series_from_json(&parsed).expect("validate");
        prop_assert_eq!(&back, &s);
        let again = serde_json::to_string(&json::series_to_json(&back)).expect("serialize");
        prop_assert_eq!(again, text);
        Ok(())
    })
    .unwrap();
}

#[test]
fn substitution_is_a_ring_homomorphism() {
    let mut r = runner(10, 48);
    r.run(&(arb_poly(), arb_poly(), arb_rat(), arb_rat()), |(a, b, x, y)| {
        let mut bind = std::collections::BTreeMap::new();
        bind.insert("u".to_string(), x);
        bind.insert("v".to_string(), y);
        prop_assert_eq!(
            a.add(&b).substitute(&bind),
            a.substitute(&bind).add(&b.substitute(&bind))
        );
        prop_assert_eq!(
            a.mul(&b).substitute(&bind),
            a.substitute(&bind).mul(&b.substitute(&bind))
        );
        Ok(())
    })
    .unwrap();
}

//! End-to-end acceptance checks, one test per headline capability.
//!
//! Each test prints a single `criterion N: PASS/FAIL — …` line before its
//! assertions, so a plain `cargo test --test acceptance -- --nocapture`
//! reads as a checklist. A FAIL line always comes with the exact witness
//! that broke the identity; nothing here is loosened to make a red case
//! green.

use rmatq::catalog;
use rmatq::op::Op2;
use rmatq::poly::{rat, Poly};
use rmatq::quantize::{self, ConstraintSet};
use rmatq::verify;
use std::collections::{BTreeMap, BTreeSet};

fn line(n: usize, pass: bool, detail: &str) -> bool {
    println!(
        "criterion {n}: {} — {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    pass
}

fn theta_zero() -> BTreeMap<String, rmatq::poly::Rat> {
    let mut b = BTreeMap::new();
    b.insert("theta".to_string(), rat(0, 1));
    b
}

/// The braid relation R¹²R²³R¹² = R²³R¹²R²³ for the dim-2 catalog family,
/// with symbolic theta, through truncation order 4.
#[test]
fn criterion_1_braid_for_the_dim2_family_through_order_4() {
    let r = catalog::example1(4).expect("catalog");
    let rep = verify::braid_residual(&r);
    let ok = line(
        1,
        rep.is_zero,
        &format!("example1 braid residual through order 4: {}", rep.summary()),
    );
    assert!(
        ok,
        "example1 braid residual is not identically zero: {}; the family \
         satisfies the relation only through order 2 — the order-3 residual \
         is an exact multiple of theta",
        rep.summary()
    );
}

/// R·R − 1 for the dim-2 family is nonzero, every witness is an exact
/// multiple of theta, and the residual vanishes identically at theta = 0.
#[test]
fn criterion_2_unitarity_fails_exactly_by_theta() {
    let r = catalog::example1(2).expect("catalog");
    let rep = verify::involution_residual(&r);
    let witnesses_are_theta_multiples = !rep.is_zero
        && !rep.witnesses.is_empty()
        && rep
            .witnesses
            .iter()
            .all(|w| !w.value.is_zero() && w.value.substitute(&theta_zero()).is_zero());
    let at_zero = verify::involution_residual(&r.substitute(&theta_zero()));
    let ok = witnesses_are_theta_multiples && at_zero.is_zero;
    line(
        2,
        ok,
        &format!(
            "example1 R·R − 1: {}; after theta→0: {}",
            rep.summary(),
            at_zero.summary()
        ),
    );
    assert!(ok);
}

/// The mirror transform P∘R⁻¹∘P of the dim-2 family equals the family
/// itself under (h, theta) → (−h, −theta), entry-exact through order 4.
#[test]
fn criterion_3_mirror_law_of_the_dim2_family() {
    let r = catalog::example1(4).expect("catalog");
    let flips: BTreeSet<String> = BTreeSet::from(["theta".to_string()]);
    let rep = verify::mirror_residual(&r, &flips).expect("leading term invertible");
    let ok = line(
        3,
        rep.is_zero,
        &format!(
            "example1 mirror vs (h,theta)→(−h,−theta) through order 4: {}",
            rep.summary()
        ),
    );
    assert!(ok, "{}", rep.summary());
}

/// The dim-3 family passes the full suite with symbolic lambda: braid
/// through order 6, involution, and the mirror law with no parameter flips.
#[test]
fn criterion_4_dim3_family_full_suite_through_order_6() {
    let r = catalog::example2(6).expect("catalog");
    let braid = verify::braid_residual(&r);
    let inv = verify::involution_residual(&r);
    let mirror =
        verify::mirror_residual(&r, &BTreeSet::new()).expect("leading term invertible");
    let ok = braid.is_zero && inv.is_zero && mirror.is_zero;
    line(
        4,
        ok,
        &format!(
            "example2: braid {}; involution {}; mirror {}",
            braid.summary(),
            inv.summary(),
            mirror.summary()
        ),
    );
    assert!(ok);
}

/// Restricting the dim-3 family to the basis span {e0, e1} reproduces the
/// dim-2 family at theta = 0, entry-exact at every order.
#[test]
fn criterion_5_dim2_family_embeds_in_the_dim3_family() {
    let big = catalog::example2(3).expect("catalog");
    let small = catalog::example1(3).expect("catalog").substitute(&theta_zero());
    let mut mismatches = Vec::new();
    for n in 0..=3 {
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let b = big.coeff(n).entry(i, j, k, l);
                        let s = small.coeff(n).entry(i, j, k, l);
                        if b != s {
                            mismatches.push(format!(
                                "order {n} entry ({i},{j})->({k},{l}): {b} vs {s}"
                            ));
                        }
                    }
                }
            }
        }
    }
    let ok = line(
        5,
        mismatches.is_empty(),
        &format!(
            "example2 restricted to indices {{0,1}} vs example1 at theta=0: {}",
            if mismatches.is_empty() {
                "entry-exact match".to_string()
            } else {
                mismatches.join("; ")
            }
        ),
    );
    assert!(ok);
}

/// Classical limits: both families have leading term P; the dim-2 limit is
/// exactly the two-entry operator r(e0⊗e1) = e0⊗e0, r(e1⊗e0) = −e0⊗e0; the
/// dim-3 limit is skewsymmetric, satisfies the classical Yang–Baxter
/// equation, and is supported exactly on the flag index pattern
/// (k,l) ∈ {(j−1,i), (j,i−1)}. The entry-level sign comparison against the
/// literal flag formula is emitted as a report, not asserted.
#[test]
fn criterion_6_classical_limits_and_flag_support() {
    let (lead1, r1) = verify::classical_limit(&catalog::example1(2).expect("catalog"));
    let (lead2, r2) = verify::classical_limit(&catalog::example2(3).expect("catalog"));

    let mut expected = Op2::zero(2);
    expected.set_entry(0, 1, 0, 0, Poly::one());
    expected.set_entry(1, 0, 0, 0, Poly::one().neg());
    let r1_exact = r1.op == expected;

    let skew = verify::classical_skew_residual(&r2);
    let cyb = verify::cyb_residual(&r2);

    let mut support_ok = true;
    for ((i, j, k, l), _) in r2.op.nonzero_entries() {
        let lower = j >= 1 && (k, l) == (j - 1, i);
        let upper = i >= 1 && (k, l) == (j, i - 1);
        if !(lower || upper) {
            support_ok = false;
        }
    }

    // Sign comparison against the literal flag formula at c = 1: reported,
    // never asserted, and never silently sign-corrected.
    let cmp = catalog::flag_comparison(&r2, &Poly::constant(rat(1, 1)));
    println!("{}", cmp.render());

    let ok = lead1
        && lead2
        && r1_exact
        && skew.is_zero
        && cyb.is_zero
        && support_ok
        && cmp.same_support;
    line(
        6,
        ok,
        &format!(
            "leading terms P: {lead1}/{lead2}; example1 limit exact: {r1_exact}; \
             example2 limit skew {} / cyb {} / flag-pattern support {} \
             (sign relation vs literal formula at c=1: all_negated = {})",
            skew.summary(),
            cyb.summary(),
            support_ok,
            cmp.all_negated
        ),
    );
    assert!(ok);
}

/// Quantizing the dim-2 classical limit braid-only at order 2 leaves the
/// (1,1)→(0,0) entry free, and the dim-2 family is a member of the solved
/// family with that parameter bound to theta; adding the involution
/// constraint forces the entry to zero, admits the theta=0 specialization,
/// and rejects the symbolic-theta family.
#[test]
fn criterion_7_quantizer_reproduces_the_dim2_family() {
    let r = catalog::example1_limit();
    let candidate = catalog::example1(2).expect("catalog");

    let braid_only =
        quantize::quantize(&r, 2, ConstraintSet::braid_only()).expect("order in range");
    let free_entry = braid_only
        .series
        .coeff(2)
        .entry(1, 1, 0, 0)
        .as_constant()
        .is_none();
    let m_braid = quantize::membership_check(&braid_only, &candidate);
    let theta_bound = m_braid
        .bindings
        .values()
        .filter(|v| !v.is_zero())
        .collect::<Vec<_>>()
        == vec![&Poly::var("theta")];

    let with_inv =
        quantize::quantize(&r, 2, ConstraintSet::new(true, false)).expect("order in range");
    let forced_zero = with_inv.series.coeff(2).entry(1, 1, 0, 0).is_zero();
    let m_inv_zero =
        quantize::membership_check(&with_inv, &candidate.substitute(&theta_zero()));
    let m_inv_symbolic = quantize::membership_check(&with_inv, &candidate);

    let ok = braid_only.obstruction_free()
        && free_entry
        && m_braid.is_member()
        && theta_bound
        && with_inv.obstruction_free()
        && forced_zero
        && m_inv_zero.is_member()
        && !m_inv_symbolic.is_member();
    line(
        7,
        ok,
        &format!(
            "braid-only: obstruction-free {}, (1,1)->(0,0) free {}, member {} \
             (theta binding {}); with involution: entry forced to zero {}, \
             theta=0 member {}, symbolic theta rejected {}",
            braid_only.obstruction_free(),
            free_entry,
            m_braid.is_member(),
            theta_bound,
            forced_zero,
            m_inv_zero.is_member(),
            !m_inv_symbolic.is_member()
        ),
    );
    assert!(ok);
}

/// Quantizing the dim-3 classical limit at order 3 under braid + involution
/// + mirror is obstruction-free, and the dim-3 family is a member with
/// exactly one free direction (the lambda family). Raw per-order parameter
/// counts are then reported against the conjectured essential counts
/// (dim−2 with the mirror constraint, dim−1 without) for dim 2 and dim 3 at
/// their stabilization orders; those counts include gauge directions and
/// are reported, not asserted.
#[test]
fn criterion_8_quantizer_covers_the_dim3_family_and_reports_counts() {
    let both = ConstraintSet::new(true, true);
    let inv_only = ConstraintSet::new(true, false);

    let r3 = verify::classical_limit(&catalog::example2(3).expect("catalog")).1;
    let q = quantize::quantize(&r3, 3, both).expect("order in range");
    let m = quantize::membership_check(&q, &catalog::example2(3).expect("catalog"));
    let hard = q.obstruction_free() && m.is_member() && m.free_directions == 1;

    line(
        8,
        hard,
        &format!(
            "order-3 run: obstruction-free {}, example2 member {}, free directions {}",
            q.obstruction_free(),
            m.is_member(),
            m.free_directions
        ),
    );

    // Reported comparisons at the stabilization orders. Runs beyond order 3
    // pick up consistency conditions on earlier parameters; their counts
    // are printed, not asserted.
    let d2 = quantize::quantize(
        &catalog::example1_limit(),
        quantize::stabilization_order(2),
        both,
    )
    .expect("order in range");
    print!("{}", quantize::parameter_report(&d2).render());

    let d3_both = quantize::quantize(&r3, quantize::stabilization_order(3), both)
        .expect("order in range");
    print!("{}", quantize::parameter_report(&d3_both).render());
    for rec in &d3_both.per_order {
        if !rec.obstructions.is_empty() {
            println!(
                "  order {}: {} consistency condition(s) on earlier parameters",
                rec.order,
                rec.obstructions.len()
            );
        }
    }

    let d3_inv = quantize::quantize(&r3, quantize::stabilization_order(3), inv_only)
        .expect("order in range");
    print!("{}", quantize::parameter_report(&d3_inv).render());
    for rec in &d3_inv.per_order {
        if !rec.obstructions.is_empty() {
            println!(
                "  order {}: {} consistency condition(s) on earlier parameters",
                rec.order,
                rec.obstructions.len()
            );
        }
    }

    // The conjectured essential counts the reports compare against.
    let c2 = quantize::parameter_report(&d2).conjectured;
    let c3_both = quantize::parameter_report(&d3_both).conjectured;
    let c3_inv = quantize::parameter_report(&d3_inv).conjectured;
    assert_eq!(c2, Some(0));
    assert_eq!(c3_both, Some(1));
    assert_eq!(c3_inv, Some(2));
    assert!(hard);
}

/// Deterministic spot checks of the property suites (the randomized
/// versions with fixed seeds live in the `props` test target): P² = 1 for
/// dims 1..=4, inverse multiply-back on a unipotent series with symbolic
/// entries, mirror∘mirror = identity, lift functoriality, an exact solver
/// round-trip, and JSON round-trip bit-exactness.
#[test]
fn criterion_9_property_spot_checks() {
    // P² = 1 up to dim 4.
    let p_sq = (1..=4).all(|d| {
        let p = Op2::permutation_p(d);
        p.compose(&p) == Op2::identity(d)
    });

    // Inverse multiply-back for a unipotent-leading series with symbolic
    // coefficients.
    let mut s = rmatq::series::HSeries::identity(2, 3);
    s.coeff_mut(1).set_entry(0, 1, 0, 0, Poly::var("a"));
    s.coeff_mut(2).set_entry(1, 0, 1, 1, Poly::var("b"));
    s.coeff_mut(3).set_entry(1, 1, 0, 0, Poly::var("a").mul(&Poly::var("b")));
    let inv = s.inverse().expect("unipotent leading term");
    let back = s.mul(&inv).expect("same dim") ;
    let multiply_back = back == rmatq::series::HSeries::identity(2, 3);

    // mirror∘mirror is the identity transform.
    let e2 = catalog::example2(4).expect("catalog");
    let mm = e2
        .mirror()
        .expect("invertible")
        .mirror()
        .expect("invertible");
    let mirror_involutive = mm == e2;

    // Lifts are functorial: lift(a∘b) = lift(a)∘lift(b) on both slots.
    let mut a = Op2::zero(2);
    a.set_entry(0, 1, 1, 0, Poly::var("x"));
    a.set_entry(1, 1, 0, 0, Poly::one());
    let b = Op2::permutation_p(2);
    let functorial = rmatq::op::lift12(&a.compose(&b))
        == rmatq::op::lift12(&a).compose(&rmatq::op::lift12(&b))
        && rmatq::op::lift23(&a.compose(&b))
            == rmatq::op::lift23(&a).compose(&rmatq::op::lift23(&b));

    // Solver round-trip on a small system with symbolic right-hand side.
    let m = rmatq::solve::RatMat::from_rows(vec![
        vec![rat(1, 1), rat(2, 1), rat(0, 1)],
        vec![rat(0, 1), rat(1, 1), rat(1, 1)],
    ]);
    let rhs = vec![Poly::var("u"), Poly::var("v")];
    let sol = rmatq::solve::solve_affine(&m, &rhs);
    let solved = m
        .mul_poly_vec(&sol.particular)
        .iter()
        .zip(&rhs)
        .all(|(got, want)| got == want)
        && sol.obstructions.is_empty()
        && sol
            .kernel_basis
            .iter()
            .all(|k| m.mul_vec(k).iter().all(|c| c == &rat(0, 1)));

    // JSON round-trip is bit-exact and deterministic.
    let dto = rmatq::json::series_to_json(&e2);
    let text = serde_json::to_string(&dto).expect("serialize");
    let parsed: rmatq::json::SeriesJson = serde_json::from_str(&text).expect("parse");
    let back2 = rmatq::json::series_from_json(&parsed).expect("validate");
    let json_exact = back2 == e2 && serde_json::to_string(&rmatq::json::series_to_json(&back2)).expect("serialize") == text;

    let ok = p_sq && multiply_back && mirror_involutive && functorial && solved && json_exact;
    line(
        9,
        ok,
        &format!(
            "P²=1 dims 1..4: {p_sq}; inverse multiply-back: {multiply_back}; \
             mirror twice = id: {mirror_involutive}; lift functoriality: {functorial}; \
             solver round-trip: {solved}; JSON bit-exact round-trip: {json_exact}"
        ),
    );
    assert!(ok);
}

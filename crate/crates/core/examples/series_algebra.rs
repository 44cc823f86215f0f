//! The series algebra underneath everything else: ℏ-truncated operator
//! series with exact multivariate-rational entries. Multiplication
//! composes coefficients with the Cauchy rule, inversion is order-by-order
//! (the order-0 coefficient must be invertible — here it is always the
//! permutation P with P² = 1), `mirror` conjugates the inverse by P, and
//! `h_negation` flips the sign of every odd coefficient.
//!
//! All of it works with symbolic entries, so identities verified here are
//! polynomial identities, not numeric spot checks.
//!
//! Run with: cargo run --example series_algebra

use rmatq::{HSeries, Op2, Poly};

fn main() {
    // A dim-2 series with the permutation leading and fully symbolic
    // higher coefficients: entry (i j -> k l) of the h^n coefficient is
    // the variable a{n}_{ijkl}.
    let d = 2;
    let order = 3;
    let mut coeffs = vec![Op2::permutation_p(d)];
    for n in 1..=order {
        let mut op = Op2::zero(d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        op.set_entry(i, j, k, l, Poly::var(&format!("a{n}_{i}{j}{k}{l}")));
                    }
                }
            }
        }
        coeffs.push(op);
    }
    let s = HSeries::from_coeffs(coeffs);
    println!(
        "symbolic series: dim {}, truncation order {}, {} parameters",
        s.dim(),
        s.order(),
        s.params().len()
    );

    // Inversion is exact and two-sided, entirely symbolically.
    let inv = s.inverse().expect("leading coefficient is invertible");
    let id = HSeries::identity(d, order);
    assert!(s.mul(&inv).expect("dims match").sub(&id).expect("dims match").is_zero());
    assert!(inv.mul(&s).expect("dims match").sub(&id).expect("dims match").is_zero());
    println!("s · s⁻¹ = s⁻¹ · s = 1 as polynomial identities");

    // Sample inverse coefficient entry, to show the exact symbolic form.
    let entry = inv.coeff(2).entry(0, 1, 0, 1);
    println!("(s⁻¹)₂ entry (0 1 -> 0 1) = {entry}");

    // mirror is an involution, and so is h-negation.
    let m = s.mirror().expect("invertible");
    let mm = m.mirror().expect("invertible");
    assert!(mm.sub(&s).expect("dims match").is_zero());
    assert!(s.h_negation().h_negation().sub(&s).expect("dims match").is_zero());
    println!("mirror² = id and (−ℏ)² = id");

    // Truncation commutes with multiplication: dropping orders after a
    // product equals multiplying the dropped series.
    let t = 2;
    let product_then_truncate = s.mul(&inv).expect("dims match").truncate(t);
    let truncate_then_product = s.truncate(t).mul(&inv.truncate(t)).expect("dims match");
    assert!(product_then_truncate
        .sub(&truncate_then_product)
        .expect("dims match")
        .is_zero());
    println!("truncation to order {t} commutes with multiplication");
}

//! Check the involution law R(ℏ)·R(−ℏ) = 1 and the mirror law
//! P∘R(ℏ)⁻¹∘P = R(−ℏ) for the catalog families.
//!
//! The dim-3 family satisfies both outright. The dim-2 family needs its
//! parameter θ flipped alongside ℏ on the right-hand side of the mirror
//! law — `mirror_residual` takes the set of parameters to flip — and its
//! involution residual is a nonzero θ-multiple, vanishing exactly on the
//! θ = 0 member.
//!
//! Run with: cargo run --example involution_and_mirror

use std::collections::BTreeSet;

use rmatq::catalog;
use rmatq::poly::rat;
use rmatq::verify::{involution_residual, mirror_residual};

fn main() {
    let no_flips = BTreeSet::new();

    // Dim 3: both laws hold exactly, with no parameter flips.
    let r = catalog::example2(6).expect("catalog order is valid");
    let inv = involution_residual(&r);
    let mir = mirror_residual(&r, &no_flips).expect("series is invertible");
    println!("example2 involution: {}", inv.summary());
    println!("example2 mirror:     {}", mir.summary());
    assert!(inv.is_zero && mir.is_zero);

    // Dim 2: the involution residual is a θ-multiple at order 2.
    let r = catalog::example1(4).expect("catalog order is valid");
    let inv = involution_residual(&r);
    println!("example1 involution: {}", inv.summary());
    assert!(!inv.is_zero);
    let theta_zero = [("theta".to_string(), rat(0, 1))].into();
    assert!(involution_residual(&r.substitute(&theta_zero)).is_zero);
    println!("  …and it vanishes on the theta = 0 member");

    // Dim 2 mirror law: plain form fails, the θ-flipped form is an exact
    // polynomial identity (R⁻¹ terminates because the square of the
    // classical part vanishes).
    let plain = mirror_residual(&r, &no_flips).expect("series is invertible");
    let flips: BTreeSet<String> = ["theta".to_string()].into();
    let flipped = mirror_residual(&r, &flips).expect("series is invertible");
    println!("example1 mirror, no flips:   {}", plain.summary());
    println!("example1 mirror, theta flip: {}", flipped.summary());
    assert!(!plain.is_zero);
    assert!(flipped.is_zero);

    // The same law restated without an inverse: R(ℏ) · [P∘R(−ℏ)|flip∘P]
    // must be the identity series.
    let p = rmatq::Op2::permutation_p(2);
    let neg_flip = r
        .h_negation()
        .substitute_poly(&[("theta".to_string(), rmatq::Poly::var("theta").neg())].into());
    let conjugated = rmatq::HSeries::from_coeffs(
        neg_flip
            .coeffs()
            .iter()
            .map(|a| p.compose(a).compose(&p))
            .collect(),
    );
    let product = r.mul(&conjugated).expect("dims match");
    assert!(product
        .sub(&rmatq::HSeries::identity(2, 4))
        .expect("dims match")
        .is_zero());
    println!("restated multiplicative form also holds exactly");
}

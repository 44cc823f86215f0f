//! Quantize the dim-2 classical operator order by order in ℏ and watch the
//! free-parameter count respond to each added constraint.
//!
//! At each order n ≥ 2 the braid relation (optionally plus involution and
//! the mirror law) imposes a linear system on the unknown coefficient; the
//! quantizer solves it exactly, names one fresh parameter per kernel
//! direction, and reports any consistency conditions on earlier
//! parameters as obstructions — it never specializes a parameter on its
//! own.
//!
//! Run with: cargo run --example quantize_dim2

use rmatq::catalog;
use rmatq::quantize::{membership_check, parameter_report, quantize, ConstraintSet};

fn main() {
    let r = catalog::example1_limit();

    // Braid alone at order 2: the linearized system is identically zero,
    // so every one of the 2⁴ coefficient entries is free.
    let braid_only = quantize(&r, 2, ConstraintSet::braid_only()).expect("order ≥ 2");
    println!("{}", parameter_report(&braid_only).render());
    assert!(braid_only.obstruction_free());
    assert_eq!(braid_only.total_new_parameters, 16);

    // Braid alone at order 3: the order-3 system is only consistent on a
    // subspace of the order-2 parameters. The run records those
    // conditions and keeps going rather than picking values.
    let order3 = quantize(&r, 3, ConstraintSet::braid_only()).expect("order ≥ 2");
    assert!(!order3.obstruction_free());
    for rec in &order3.per_order {
        if !rec.obstructions.is_empty() {
            println!(
                "order {}: {} consistency condition(s), e.g. {} = 0",
                rec.order,
                rec.obstructions.len(),
                rec.obstructions[0]
            );
        }
    }

    // Adding involution at order 2 cuts the kernel from 16 to 6.
    let with_inv = quantize(&r, 2, ConstraintSet::new(true, false)).expect("order ≥ 2");
    println!("{}", parameter_report(&with_inv).render());
    assert_eq!(with_inv.total_new_parameters, 6);

    // The catalog's dim-2 family at order 2 lies inside the braid-only
    // family: membership solves for the parameters and finds exactly one
    // genuinely free direction — the family parameter θ.
    let candidate = catalog::example1(2).expect("valid order");
    let member = membership_check(&braid_only, &candidate);
    assert!(member.is_member());
    assert_eq!(member.free_directions, 1);
    println!("example1 ⊂ braid-only family; nonzero parameter bindings:");
    for (name, value) in member.bindings.iter().filter(|(_, v)| !v.is_zero()) {
        println!("  {name} = {value}");
    }
}

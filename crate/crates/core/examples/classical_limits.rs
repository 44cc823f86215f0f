//! Extract the classical limit of each catalog family and verify the two
//! classical identities: skewsymmetry r^{kℓ}_{ij} = −r^{ℓk}_{ji} and the
//! classical Yang–Baxter equation, both checked exactly from their
//! indexed forms.
//!
//! A quantum series qualifies for a classical limit here when its leading
//! coefficient is the permutation operator P; the limit is then the ℏ¹
//! coefficient.
//!
//! Run with: cargo run --example classical_limits

use rmatq::catalog;
use rmatq::verify::{classical_limit, classical_skew_residual, cyb_residual};
use rmatq::{Op2, Poly};

fn main() {
    for (name, series) in [
        ("example1", catalog::example1(2).expect("valid order")),
        ("example2", catalog::example2(3).expect("valid order")),
    ] {
        let (leads_with_p, limit) = classical_limit(&series);
        assert!(leads_with_p, "{name} must lead with the permutation");

        let skew = classical_skew_residual(&limit);
        let cyb = cyb_residual(&limit);
        println!("{name} limit: {} | {}", skew.summary(), cyb.summary());
        assert!(skew.is_zero && cyb.is_zero);

        println!("  nonzero entries (i j -> k l):");
        for ((i, j, k, l), p) in limit.op.nonzero_entries() {
            println!("    ({i} {j}) -> ({k} {l}): {p}");
        }
    }

    // The dim-2 limit is exactly the rank-two operator sending
    // e0⊗e1 ↦ e0⊗e0 and e1⊗e0 ↦ −e0⊗e0.
    let (_, limit) = classical_limit(&catalog::example1(2).expect("valid order"));
    let mut expected = Op2::zero(2);
    expected.set_entry(0, 1, 0, 0, Poly::one());
    expected.set_entry(1, 0, 0, 0, Poly::one().neg());
    assert_eq!(limit.op, expected);
    println!("example1 limit matches its closed two-entry form");

    // The dim-3 limit is supported exactly on lowering moves: input
    // (i, j) maps onto (j−1, i) and (j, i−1).
    let (_, limit) = classical_limit(&catalog::example2(3).expect("valid order"));
    for ((i, j, k, l), _) in limit.op.nonzero_entries() {
        let lowers_j = j >= 1 && (k, l) == (j - 1, i);
        let lowers_i = i >= 1 && (k, l) == (j, i - 1);
        assert!(lowers_j || lowers_i, "unexpected support at ({i},{j},{k},{l})");
    }
    println!("example2 limit is supported only on index-lowering moves");
}

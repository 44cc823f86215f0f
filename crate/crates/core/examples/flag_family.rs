//! The catalog's d-dimensional skewsymmetric classical family: for every
//! dimension and every value of its constant c — symbolic included — it
//! satisfies skewsymmetry and the classical Yang–Baxter equation exactly.
//!
//! The example also prints the entry-level comparison between this family
//! and the extracted classical limits of the quantum catalog entries. The
//! comparison is reported rather than asserted: under this library's index
//! conventions the literal formula at c = 1 reproduces the exact negatives
//! of both limits, a sign that no single rational c removes.
//!
//! Run with: cargo run --example flag_family

use rmatq::catalog::{self, central_c, flag_comparison, flag_r};
use rmatq::verify::{classical_limit, classical_skew_residual, cyb_residual};
use rmatq::Poly;

fn main() {
    // Skew + CYB hold for symbolic c in every small dimension.
    let c = Poly::var("c");
    for d in 1..=4 {
        let r = flag_r(d, &c);
        let skew = classical_skew_residual(&r);
        let cyb = cyb_residual(&r);
        println!("dim {d}, symbolic c: {} | {}", skew.summary(), cyb.summary());
        assert!(skew.is_zero && cyb.is_zero);
    }

    // A distinguished rational value of c for each dimension.
    for d in 2..=4 {
        println!("central c at dim {d}: {}", central_c(d));
    }

    // Comparison against the extracted classical limits at c = 1.
    let one = Poly::one();
    for (name, series) in [
        ("example1", catalog::example1(2).expect("valid order")),
        ("example2", catalog::example2(3).expect("valid order")),
    ] {
        let (_, limit) = classical_limit(&series);
        let cmp = flag_comparison(&limit, &one);
        println!("\nflag formula vs {name} limit (c = 1):");
        print!("{}", cmp.render());
        assert!(cmp.same_support, "supports must coincide");
        // all_negated is a reported observation, not an invariant the
        // library promises; see the module docs of `catalog`.
        println!(
            "  same support: {} | all equal: {} | all negated: {}",
            cmp.same_support, cmp.all_equal, cmp.all_negated
        );
    }
}

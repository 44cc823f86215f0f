//! Residual computations for the identities the library cares about.
//!
//! Every check is phrased as a residual: an exact polynomial-valued tensor
//! that is identically zero iff the identity holds. Reports carry the total
//! nonzero count plus a handful of witness entries — a single nonzero
//! witness already falsifies an identity, and full d⁶ dumps are unreadable.
//!
//! Checks on quantum series `R(ℏ)`:
//! * **braid** — `R¹²R²³R¹² = R²³R¹²R²³` on V⊗V⊗V;
//! * **involution** (unitarity) — `R·R = 1`;
//! * **mirror** — `P∘R⁻¹∘P = R(−ℏ)`, optionally with a simultaneous sign
//!   flip of named parameters.
//!
//! Checks on classical operators `r`:
//! * **cyb** — the classical Yang–Baxter sum over cyclically permuted index
//!   triples, implemented literally from its indexed form;
//! * **skew** — `r^{kℓ}_{ij} + r^{ℓk}_{ji} = 0`, cross-checked against the
//!   operator form `PrP + r = 0`.

use crate::op::{lift12, lift23, Op2, Op3};
use crate::poly::Poly;
use crate::series::{HSeries, SeriesError};
use std::collections::BTreeSet;

/// At most this many nonzero residual entries are kept as witnesses.
pub const WITNESS_CAP: usize = 5;

/// A classical r-matrix: an operator on V⊗V, rational or polynomial in
/// named parameters, playing the role of the ℏ¹ coefficient of a quantum
/// series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalR {
    pub op: Op2,
}

impl ClassicalR {
    pub fn new(op: Op2) -> Self {
        ClassicalR { op }
    }

    /// `dim(V)`.
    pub fn dim(&self) -> usize {
        self.op.dim()
    }
}

/// One nonzero residual component: its index tuple and exact value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Index layout depends on the identity; see each residual function.
    pub index: Vec<usize>,
    pub value: Poly,
}

/// Outcome of one identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualReport {
    /// Which identity was checked ("braid", "cyb", "involution", "mirror",
    /// "skew").
    pub identity: String,
    pub is_zero: bool,
    /// Total number of nonzero residual components.
    pub nonzero_count: usize,
    /// Up to [`WITNESS_CAP`] nonzero components.
    pub witnesses: Vec<Witness>,
}

impl ResidualReport {
    /// Collect a report from a stream of nonzero residual components.
    fn collect(identity: &str, nonzero: impl Iterator<Item = (Vec<usize>, Poly)>) -> Self {
        let mut count = 0;
        let mut witnesses = Vec::new();
        for (index, value) in nonzero {
            debug_assert!(!value.is_zero());
            count += 1;
            if witnesses.len() < WITNESS_CAP {
                witnesses.push(Witness { index, value });
            }
        }
        ResidualReport {
            identity: identity.to_string(),
            is_zero: count == 0,
            nonzero_count: count,
            witnesses,
        }
    }

    /// One-line human summary, e.g. `braid: ok` or
    /// `involution: 2 nonzero entries, e.g. [2, 1, 1, 0, 0] = 2*theta`.
    pub fn summary(&self) -> String {
        if self.is_zero {
            format!("{}: ok", self.identity)
        } else {
            let w = &self.witnesses[0];
            format!(
                "{}: {} nonzero entries, e.g. {:?} = {}",
                self.identity, self.nonzero_count, w.index, w.value
            )
        }
    }
}

/// Coefficients of the ℏ-series product of two Op3-coefficient series,
/// truncated at `order`.
fn conv3(a: &[Op3], b: &[Op3], order: usize, dim: usize) -> Vec<Op3> {
    let mut out = vec![Op3::zero(dim); order + 1];
    for (p, ap) in a.iter().enumerate().take(order + 1) {
        if ap.is_zero() {
            continue;
        }
        for (q, bq) in b.iter().enumerate().take(order + 1 - p) {
            if bq.is_zero() {
                continue;
            }
            out[p + q] = out[p + q].add(&ap.compose(bq));
        }
    }
    out
}

/// ℏ-coefficients of `R¹²R²³R¹² − R²³R¹²R²³` through the truncation order
/// of `r`. Shared with the quantizer, which needs individual coefficients.
pub(crate) fn braid_residual_coeffs(r: &HSeries) -> Vec<Op3> {
    let d = r.dim();
    let order = r.order();
    let a12: Vec<Op3> = r.coeffs().iter().map(lift12).collect();
    let a23: Vec<Op3> = r.coeffs().iter().map(lift23).collect();
    let lhs = conv3(&conv3(&a12, &a23, order, d), &a12, order, d);
    let rhs = conv3(&conv3(&a23, &a12, order, d), &a23, order, d);
    lhs.iter()
        .zip(&rhs)
        .map(|(l, h)| l.sub(h))
        .collect()
}

/// Residual of the braid relation `R¹²R²³R¹² = R²³R¹²R²³` through the
/// truncation order. Witness index layout:
/// `[n, i1, i2, i3, o1, o2, o3]` — ℏ-order, input triple, output triple.
pub fn braid_residual(r: &HSeries) -> ResidualReport {
    let coeffs = braid_residual_coeffs(r);
    let nonzero = coeffs.iter().enumerate().flat_map(|(n, op)| {
        op.nonzero_entries().map(move |(i, o, p)| {
            (vec![n, i.0, i.1, i.2, o.0, o.1, o.2], p.clone())
        })
    });
    ResidualReport::collect("braid", nonzero)
}

/// Residual of involutivity (unitarity) `R·R = 1` through the truncation
/// order. Witness index layout: `[n, i, j, k, l]`.
pub fn involution_residual(r: &HSeries) -> ResidualReport {
    let square = r.mul(r).expect("same series, dims match");
    let id = HSeries::identity(r.dim(), r.order());
    let diff = square.sub(&id).expect("dims match");
    let nonzero = diff.coeffs().iter().enumerate().flat_map(|(n, op)| {
        op.nonzero_entries()
            .map(move |((i, j, k, l), p)| (vec![n, i, j, k, l], p.clone()))
    });
    ResidualReport::collect("involution", nonzero)
}

/// Residual of the mirror law `P∘R⁻¹∘P = R(−ℏ)|_{p → −p for p ∈ flips}`
/// through the truncation order. The plain mirror condition is the empty
/// flip set; a nonempty set negates those parameters on the right-hand
/// side, allowing laws where mirroring is absorbed by a parameter sign.
/// Witness index layout: `[n, i, j, k, l]`.
pub fn mirror_residual(
    r: &HSeries,
    flips: &BTreeSet<String>,
) -> Result<ResidualReport, SeriesError> {
    let lhs = r.mirror()?;
    let mut bindings = std::collections::BTreeMap::new();
    for name in flips {
        bindings.insert(name.clone(), Poly::var(name).neg());
    }
    let rhs = r.h_negation().substitute_poly(&bindings);
    let diff = lhs.sub(&rhs)?;
    let nonzero = diff.coeffs().iter().enumerate().flat_map(|(n, op)| {
        op.nonzero_entries()
            .map(move |((i, j, k, l), p)| (vec![n, i, j, k, l], p.clone()))
    });
    Ok(ResidualReport::collect("mirror", nonzero))
}

/// Residual of the classical Yang–Baxter equation, evaluated literally
/// from its indexed form: with `r^{kℓ}_{ij}` the matrix elements,
///
/// ```text
/// [c(r)]^{φψξ}_{ijk} = Σ_s ( r^{sφ}_{ij} r^{ξψ}_{sk} + r^{ψs}_{ij} r^{ξφ}_{sk} )
///                      + c.p.(i,j,k; φ,ψ,ξ)
/// ```
///
/// where `c.p.` adds the two simultaneous cyclic shifts of the lower and
/// upper triples. Witness index layout: `[i, j, k, φ, ψ, ξ]`.
pub fn cyb_residual(r: &ClassicalR) -> ResidualReport {
    let d = r.dim();
    let op = &r.op;
    // The bracketed two-term sum at one index tuple.
    let bracket = |i: usize, j: usize, k: usize, phi: usize, psi: usize, xi: usize| {
        let mut acc = Poly::zero();
        for s in 0..d {
            let t1 = op.entry(i, j, s, phi).mul(op.entry(s, k, xi, psi));
            let t2 = op.entry(i, j, psi, s).mul(op.entry(s, k, xi, phi));
            acc = acc.add(&t1).add(&t2);
        }
        acc
    };
    let mut nonzero = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for phi in 0..d {
                    for psi in 0..d {
                        for xi in 0..d {
                            let res = bracket(i, j, k, phi, psi, xi)
                                .add(&bracket(j, k, i, psi, xi, phi))
                                .add(&bracket(k, i, j, xi, phi, psi));
                            if !res.is_zero() {
                                nonzero.push((vec![i, j, k, phi, psi, xi], res));
                            }
                        }
                    }
                }
            }
        }
    }
    ResidualReport::collect("cyb", nonzero.into_iter())
}

/// Residual of classical skewsymmetry `r^{kℓ}_{ij} + r^{ℓk}_{ji} = 0`.
/// Also evaluates the equivalent operator form `PrP + r = 0` and asserts
/// the two verdicts agree. Witness index layout: `[i, j, k, l]`.
pub fn classical_skew_residual(r: &ClassicalR) -> ResidualReport {
    let d = r.dim();
    let op = &r.op;
    let mut nonzero = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let res = op.entry(i, j, k, l).add(op.entry(j, i, l, k));
                    if !res.is_zero() {
                        nonzero.push((vec![i, j, k, l], res));
                    }
                }
            }
        }
    }
    let report = ResidualReport::collect("skew", nonzero.into_iter());
    // Independent operator-form cross-check: PrP + r must vanish exactly
    // when the entry-wise condition does.
    let p = Op2::permutation_p(d);
    let operator_form = p.compose(op).compose(&p).add(op);
    assert_eq!(
        operator_form.is_zero(),
        report.is_zero,
        "entry-wise and operator-form skewsymmetry verdicts disagree"
    );
    report
}

/// Quasiclassical extraction: returns whether the ℏ⁰ coefficient is the
/// permutation P, and the ℏ¹ coefficient wrapped as a classical operator.
///
/// # Panics
/// Panics if the truncation order is 0 (there is no ℏ¹ slot to read).
pub fn classical_limit(r: &HSeries) -> (bool, ClassicalR) {
    assert!(
        r.order() >= 1,
        "classical limit needs truncation order at least 1"
    );
    let p_check = *r.coeff(0) == Op2::permutation_p(r.dim());
    (p_check, ClassicalR::new(r.coeff(1).clone()))
}

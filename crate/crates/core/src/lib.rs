//! Exact-arithmetic operator series for braid-relation verification and
//! order-by-order quantization of classical r-matrices.
//!
//! The library works over the polynomial ring Q[p1, p2, ...] in named formal
//! parameters with exact rational coefficients, and represents quantum
//! R-matrices as truncated power series in ℏ whose coefficients are linear
//! operators on V⊗V. Everything is exact: no floats, no tolerances.
//!
//! Module map:
//!
//! * [`poly`] — multivariate polynomials over arbitrary-precision rationals,
//!   with a canonical string form used everywhere (display, JSON, CLI).
//! * [`solve`] — exact affine linear solving over Q with polynomial
//!   right-hand sides: particular solution, kernel basis, cokernel
//!   functionals, and obstruction polynomials.
//! * [`op`] — dense operators on V⊗V and V⊗V⊗V in the four-index entry
//!   convention `R^{kl}_{ij}` (input pair down, output pair up), plus the
//!   permutation operator and the slot lifts to triple tensor products.
//! * [`series`] — truncated ℏ-series with operator coefficients: ring
//!   arithmetic, exact inversion, the mirror operator, ℏ-negation and
//!   parameter substitution.
//! * [`verify`] — residual reports for every identity of interest: the braid
//!   relation, the classical Yang–Baxter equation, involutivity (unitarity),
//!   mirror symmetry, classical skewsymmetry, and quasiclassical extraction.
//! * [`catalog`] — built-in exact constructors: two worked R-matrix families
//!   (dim 2 with parameter `theta`, dim 3 with parameter `lambda`) and the
//!   flag-type classical r-matrix family with its centering constant.
//! * [`quantize`] — the order-by-order quantizer: solves the braid relation
//!   (optionally plus involution and mirror constraints) degree by degree,
//!   introducing free parameters from per-order kernels and reporting
//!   obstruction polynomials.
//! * [`json`] — serde DTOs for the stable JSON interchange formats.
//! * [`cli`] — the `rmatq` command-line front end (verify / quantize /
//!   catalog / export).
//!
//! The `examples/` directory is the guided tour: each file is a runnable
//! walkthrough of one capability (`cargo run --example braid_check`, ...).

pub mod catalog;
pub mod cli;
pub mod json;
pub mod op;
pub mod poly;
pub mod quantize;
pub mod series;
pub mod solve;
pub mod verify;

pub use op::{lift12, lift23, Op2, Op3};
pub use poly::{Poly, Rat};
pub use series::HSeries;
pub use verify::{ClassicalR, ResidualReport};

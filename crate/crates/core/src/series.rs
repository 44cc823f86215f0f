//! Truncated power series in ℏ with operator coefficients.
//!
//! An [`HSeries`] models `R(ℏ) = R₀ + ℏ·R₁ + … + ℏᴺ·Rₙ` in the truncated
//! ring where ℏ^(N+1) = 0; every coefficient is an [`Op2`] with polynomial
//! entries. Arithmetic results carry the smaller truncation order of the
//! operands, so precision claims are never silently inflated. Inversion and
//! the mirror operator `R ↦ P ∘ R⁻¹ ∘ P` are exact.

use crate::op::Op2;
use crate::poly::{Poly, Rat};
use crate::solve::{invert, RatMat};
use num::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

/// Errors from series operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("leading coefficient is singular; the series has no inverse")]
    SingularLeading,
    #[error("leading coefficient must be parameter-free to invert")]
    ParametricLeading,
}

/// A truncated ℏ-series of operators on V⊗V.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HSeries {
    dim: usize,
    order: usize,
    /// `coeffs[n]` is the operator coefficient of ℏⁿ; length `order + 1`.
    coeffs: Vec<Op2>,
}

impl HSeries {
    /// The zero series at a given truncation order.
    pub fn zero(dim: usize, order: usize) -> Self {
        HSeries {
            dim,
            order,
            coeffs: vec![Op2::zero(dim); order + 1],
        }
    }

    /// A constant series (the operator at ℏ⁰, zero beyond).
    pub fn constant(op: Op2, order: usize) -> Self {
        let mut s = HSeries::zero(op.dim(), order);
        s.coeffs[0] = op;
        s
    }

    /// The multiplicative identity series.
    pub fn identity(dim: usize, order: usize) -> Self {
        HSeries::constant(Op2::identity(dim), order)
    }

    /// Build from explicit coefficients (order = `coeffs.len() - 1`).
    ///
    /// # Panics
    /// Panics if `coeffs` is empty or the dimensions disagree.
    pub fn from_coeffs(coeffs: Vec<Op2>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the ℏ⁰ slot");
        let dim = coeffs[0].dim();
        assert!(
            coeffs.iter().all(|c| c.dim() == dim),
            "coefficient dimension mismatch"
        );
        HSeries {
            dim,
            order: coeffs.len() - 1,
            coeffs,
        }
    }

    /// `dim(V)`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The truncation order N (coefficients ℏ⁰…ℏᴺ retained).
    pub fn order(&self) -> usize {
        self.order
    }

    /// The coefficient of ℏⁿ.
    pub fn coeff(&self, n: usize) -> &Op2 {
        &self.coeffs[n]
    }

    /// Mutable access to the coefficient of ℏⁿ.
    pub fn coeff_mut(&mut self, n: usize) -> &mut Op2 {
        &mut self.coeffs[n]
    }

    /// All coefficients, ascending in ℏ-order.
    pub fn coeffs(&self) -> &[Op2] {
        &self.coeffs
    }

    /// Restrict to a smaller truncation order.
    ///
    /// # Panics
    /// Panics if `order > self.order()` — a truncated series carries no
    /// information past its own order; use the constructors to build at a
    /// higher order instead.
    pub fn truncate(&self, order: usize) -> HSeries {
        assert!(
            order <= self.order,
            "cannot truncate order {} series to order {}",
            self.order,
            order
        );
        HSeries {
            dim: self.dim,
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check_dim(&self, other: &HSeries) -> Result<(), SeriesError> {
        if self.dim != other.dim {
            return Err(SeriesError::DimMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    /// Sum; the result is truncated to the smaller operand order.
    pub fn add(&self, other: &HSeries) -> Result<HSeries, SeriesError> {
        self.check_dim(other)?;
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].add(&other.coeffs[n]))
            .collect();
        Ok(HSeries {
            dim: self.dim,
            order,
            coeffs,
        })
    }

    /// Difference; truncated to the smaller operand order.
    pub fn sub(&self, other: &HSeries) -> Result<HSeries, SeriesError> {
        self.check_dim(other)?;
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].sub(&other.coeffs[n]))
            .collect();
        Ok(HSeries {
            dim: self.dim,
            order,
            coeffs,
        })
    }

    /// Product (Cauchy product of operator compositions), truncated to the
    /// smaller operand order: `coeff_n = Σ_{p+q=n} aₚ ∘ b_q`.
    pub fn mul(&self, other: &HSeries) -> Result<HSeries, SeriesError> {
        self.check_dim(other)?;
        let order = self.order.min(other.order);
        let mut coeffs = vec![Op2::zero(self.dim); order + 1];
        for p in 0..=order {
            if self.coeffs[p].is_zero() {
                continue;
            }
            for q in 0..=(order - p) {
                if other.coeffs[q].is_zero() {
                    continue;
                }
                let prod = self.coeffs[p].compose(&other.coeffs[q]);
                coeffs[p + q] = coeffs[p + q].add(&prod);
            }
        }
        Ok(HSeries {
            dim: self.dim,
            order,
            coeffs,
        })
    }

    /// Entry-wise negation.
    pub fn neg(&self) -> HSeries {
        HSeries {
            dim: self.dim,
            order: self.order,
            coeffs: self.coeffs.iter().map(Op2::neg).collect(),
        }
    }

    /// True iff every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Op2::is_zero)
    }

    /// Exact multiplicative inverse through the truncation order.
    ///
    /// Requires the ℏ⁰ coefficient to be an invertible parameter-free
    /// rational matrix; then `B₀ = A₀⁻¹` and
    /// `Bₙ = −A₀⁻¹ · Σ_{p=1..n} Aₚ ∘ B_{n−p}`.
    pub fn inverse(&self) -> Result<HSeries, SeriesError> {
        let d = self.dim;
        let dd = d * d;
        // Extract the leading coefficient as a rational matrix (output flat
        // index as row, input flat index as column).
        let mut m0 = RatMat::zero(dd, dd);
        for ((i, j, k, l), p) in self.coeffs[0].nonzero_entries() {
            let c = p.as_constant().ok_or(SeriesError::ParametricLeading)?;
            m0.set(k * d + l, i * d + j, c);
        }
        let m0_inv = invert(&m0).ok_or(SeriesError::SingularLeading)?;
        let mut b0 = Op2::zero(d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let v = m0_inv.get(k * d + l, i * d + j);
                        if !v.is_zero() {
                            b0.set_entry(i, j, k, l, Poly::constant(v.clone()));
                        }
                    }
                }
            }
        }
        let mut inv = vec![b0.clone()];
        for n in 1..=self.order {
            let mut acc = Op2::zero(d);
            for p in 1..=n {
                if self.coeffs[p].is_zero() || inv[n - p].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[p].compose(&inv[n - p]));
            }
            inv.push(b0.compose(&acc).neg());
        }
        Ok(HSeries {
            dim: d,
            order: self.order,
            coeffs: inv,
        })
    }

    /// The mirror operator `R^M = P ∘ R⁻¹ ∘ P`, to the same truncation
    /// order.
    pub fn mirror(&self) -> Result<HSeries, SeriesError> {
        let p = Op2::permutation_p(self.dim);
        let inv = self.inverse()?;
        let coeffs = inv
            .coeffs
            .iter()
            .map(|c| p.compose(c).compose(&p))
            .collect();
        Ok(HSeries {
            dim: self.dim,
            order: self.order,
            coeffs,
        })
    }

    /// ℏ → −ℏ: multiplies the ℏⁿ coefficient by (−1)ⁿ.
    pub fn h_negation(&self) -> HSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| if n % 2 == 1 { c.neg() } else { c.clone() })
            .collect();
        HSeries {
            dim: self.dim,
            order: self.order,
            coeffs,
        }
    }

    /// Substitute exact rational values for parameters in every entry.
    pub fn substitute(&self, bindings: &BTreeMap<String, Rat>) -> HSeries {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.map_entries(|p| p.substitute(bindings)))
            .collect();
        HSeries {
            dim: self.dim,
            order: self.order,
            coeffs,
        }
    }

    /// Substitute polynomials for parameters in every entry.
    pub fn substitute_poly(&self, bindings: &BTreeMap<String, Poly>) -> HSeries {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.map_entries(|p| p.substitute_poly(bindings)))
            .collect();
        HSeries {
            dim: self.dim,
            order: self.order,
            coeffs,
        }
    }

    /// The set of parameter names occurring anywhere in the series.
    pub fn params(&self) -> std::collections::BTreeSet<String> {
        let mut out = std::collections::BTreeSet::new();
        for c in &self.coeffs {
            for (_, p) in c.nonzero_entries() {
                out.extend(p.params());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::op::Op2;
    use crate::poly::{rat, Poly};

    /// P + ℏ·r with the standard dim-2 classical part, optionally a ℏ²·θ
    /// corner entry — the smallest interesting test series.
    fn small_series(order: usize, with_theta: bool) -> HSeries {
        let mut s = HSeries::constant(Op2::permutation_p(2), order);
        s.coeff_mut(1).set_entry(0, 1, 0, 0, Poly::one());
        s.coeff_mut(1).set_entry(1, 0, 0, 0, Poly::one().neg());
        if with_theta && order >= 2 {
            s.coeff_mut(2).set_entry(1, 1, 0, 0, Poly::var("theta"));
        }
        s
    }

    #[test]
    fn mul_by_identity() {
        let a = small_series(3, true);
        let id = HSeries::identity(2, 3);
        assert_eq!(a.mul(&id).unwrap(), a);
        assert_eq!(id.mul(&a).unwrap(), a);
    }

    #[test]
    fn mul_truncates_to_smaller_order() {
        let a = small_series(4, true);
        let b = HSeries::identity(2, 2);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.order(), 2);
        assert_eq!(prod, a.truncate(2));
    }

    #[test]
    fn first_order_product_coefficient() {
        // (P + ℏr)² has ℏ¹ coefficient P∘r + r∘P; check against the direct
        // two-term expansion.
        let a = small_series(1, false);
        let sq = a.mul(&a).unwrap();
        let p = Op2::permutation_p(2);
        let r = a.coeff(1).clone();
        let want = p.compose(&r).add(&r.compose(&p));
        assert_eq!(sq.coeff(1), &want);
    }

    #[test]
    fn inverse_of_permutation_is_itself() {
        let p = HSeries::constant(Op2::permutation_p(3), 4);
        assert_eq!(p.inverse().unwrap(), p);
    }

    #[test]
    fn inverse_multiplies_back_with_symbolic_theta() {
        let a = small_series(4, true);
        let inv = a.inverse().unwrap();
        let id = HSeries::identity(2, 4);
        assert_eq!(a.mul(&inv).unwrap(), id);
        assert_eq!(inv.mul(&a).unwrap(), id);
    }

    #[test]
    fn singular_leading_is_an_error() {
        let z = HSeries::zero(2, 1);
        assert_eq!(z.inverse().unwrap_err(), SeriesError::SingularLeading);
        let mut s = HSeries::zero(2, 1);
        s.coeff_mut(0).set_entry(0, 0, 0, 0, Poly::var("theta"));
        assert_eq!(s.inverse().unwrap_err(), SeriesError::ParametricLeading);
    }

    #[test]
    fn mirror_of_permutation_is_itself() {
        let p = HSeries::constant(Op2::permutation_p(2), 3);
        assert_eq!(p.mirror().unwrap(), p);
    }

    #[test]
    fn mirror_is_an_involution() {
        let a = small_series(4, true);
        assert_eq!(a.mirror().unwrap().mirror().unwrap(), a);
    }

    #[test]
    fn double_h_negation_is_identity() {
        let a = small_series(3, true);
        assert_eq!(a.h_negation().h_negation(), a);
    }

    #[test]
    fn substitution_kills_theta_entry() {
        let a = small_series(2, true);
        let mut b = BTreeMap::new();
        b.insert("theta".to_string(), rat(0, 1));
        let s = a.substitute(&b);
        assert!(s.coeff(2).is_zero());
    }
}

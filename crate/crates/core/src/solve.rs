//! Exact affine linear solving over Q with polynomial right-hand sides.
//!
//! [`solve_affine`] solves `M·x = rhs` where `M` is an exact rational m×n
//! matrix and `rhs` is a vector of polynomials in formal parameters. Because
//! the system is linear, solving it for a polynomial right-hand side is the
//! same as solving it monomial-by-monomial; the implementation factors that
//! through a single reduced row echelon pass with tracked row operations
//! (`E·M = RREF`), which is then applied to the whole polynomial vector at
//! once. The result reports:
//!
//! * a particular solution (free variables set to zero),
//! * a rational basis of the kernel (null space) of `M`,
//! * the cokernel functionals (the tracked rows that annihilate `M`), and
//! * the obstruction polynomials `f·rhs` for every cokernel functional `f`
//!   with `f·rhs ≠ 0` — the exact conditions under which the system is
//!   inconsistent. Inconsistency is *reported*, never raised.

use crate::poly::{Poly, Rat};
use num::Zero;

/// A dense exact rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    /// The zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    /// The identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = RatMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::from_integer(1.into()));
        }
        m
    }

    /// Build from row vectors; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    /// Matrix–vector product over the rationals.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc += a * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    /// Matrix–vector product against a polynomial vector.
    pub fn mul_poly_vec(&self, v: &[Poly]) -> Vec<Poly> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Poly::zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc = acc.add(&v[c].scale(a));
                    }
                }
                acc
            })
            .collect()
    }
}

/// Outcome of an exact affine solve. See [`solve_affine`].
#[derive(Debug, Clone)]
pub struct AffineSolution {
    /// A particular solution with all free variables set to zero; entries
    /// are polynomials because the right-hand side is.
    pub particular: Vec<Poly>,
    /// Rational basis vectors of `null(M)`, one per free column, in
    /// ascending free-column order.
    pub kernel_basis: Vec<Vec<Rat>>,
    /// Rational functionals `f` with `f·M = 0`, spanning the cokernel.
    pub cokernel: Vec<Vec<Rat>>,
    /// The nonzero polynomials `f·rhs` over the cokernel functionals: the
    /// exact inconsistency conditions. Empty iff the system is solvable for
    /// every parameter value.
    pub obstructions: Vec<Poly>,
}

struct Rref {
    /// Row-reduced matrix.
    reduced: RatMat,
    /// Tracked row operations: `ops · original = reduced`.
    ops: RatMat,
    /// For each pivot, `(row, col)` in ascending row order.
    pivots: Vec<(usize, usize)>,
}

/// Reduced row echelon form with tracked row operations, exact pivoting on
/// the first nonzero entry of each column.
fn rref(m: &RatMat) -> Rref {
    let mut a = m.clone();
    let mut e = RatMat::identity(m.rows());
    let mut pivots = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..a.cols() {
        if pivot_row >= a.rows() {
            break;
        }
        // Find a row at or below pivot_row with a nonzero entry in col.
        let Some(found) = (pivot_row..a.rows()).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        // Swap into position.
        if found != pivot_row {
            for c in 0..a.cols() {
                let tmp = a.get(found, c).clone();
                a.set(found, c, a.get(pivot_row, c).clone());
                a.set(pivot_row, c, tmp);
            }
            for c in 0..e.cols() {
                let tmp = e.get(found, c).clone();
                e.set(found, c, e.get(pivot_row, c).clone());
                e.set(pivot_row, c, tmp);
            }
        }
        // Normalize the pivot row.
        let inv = {
            let p = a.get(pivot_row, col).clone();
            Rat::from_integer(1.into()) / p
        };
        for c in 0..a.cols() {
            let v = a.get(pivot_row, c) * &inv;
            a.set(pivot_row, c, v);
        }
        for c in 0..e.cols() {
            let v = e.get(pivot_row, c) * &inv;
            e.set(pivot_row, c, v);
        }
        // Eliminate the column everywhere else (full reduction).
        for r in 0..a.rows() {
            if r == pivot_row {
                continue;
            }
            let factor = a.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            for c in 0..a.cols() {
                let v = a.get(r, c) - &(a.get(pivot_row, c) * &factor);
                a.set(r, c, v);
            }
            for c in 0..e.cols() {
                let v = e.get(r, c) - &(e.get(pivot_row, c) * &factor);
                e.set(r, c, v);
            }
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
    }
    Rref {
        reduced: a,
        ops: e,
        pivots,
    }
}

/// Solve `M·x = rhs` exactly; see the module docs for the returned pieces.
pub fn solve_affine(m: &RatMat, rhs: &[Poly]) -> AffineSolution {
    assert_eq!(rhs.len(), m.rows(), "rhs length must equal row count");
    let Rref {
        reduced,
        ops,
        pivots,
    } = rref(m);
    let rank = pivots.len();

    // Transform the polynomial rhs by the same row operations.
    let b = ops.mul_poly_vec(rhs);

    // Rows past the rank have zero coefficient rows; their transformed rhs
    // entries must vanish identically for the system to be solvable.
    let mut cokernel = Vec::new();
    let mut obstructions = Vec::new();
    for r in rank..m.rows() {
        let functional: Vec<Rat> = (0..ops.cols()).map(|c| ops.get(r, c).clone()).collect();
        if !b[r].is_zero() {
            obstructions.push(b[r].clone());
        }
        cokernel.push(functional);
    }

    // Particular solution: free variables zero, pivot variables read off the
    // fully reduced rows.
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut particular = vec![Poly::zero(); m.cols()];
    for &(r, c) in &pivots {
        particular[c] = b[r].clone();
    }

    // Kernel basis: one vector per free column, ascending.
    let mut kernel_basis = Vec::new();
    for free in 0..m.cols() {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); m.cols()];
        v[free] = Rat::from_integer(1.into());
        for &(r, c) in &pivots {
            let coeff = reduced.get(r, free);
            if !coeff.is_zero() {
                v[c] = -coeff.clone();
            }
        }
        kernel_basis.push(v);
    }

    AffineSolution {
        particular,
        kernel_basis,
        cokernel,
        obstructions,
    }
}

/// Exact inverse of a square rational matrix, if it exists.
pub fn invert(m: &RatMat) -> Option<RatMat> {
    assert_eq!(m.rows(), m.cols(), "inverse requires a square matrix");
    let n = m.rows();
    let r = rref(m);
    if r.pivots.len() < n {
        return None;
    }
    Some(r.ops)
}

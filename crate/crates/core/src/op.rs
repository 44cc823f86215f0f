//! Linear operators on V⊗V and V⊗V⊗V with polynomial entries.
//!
//! The entry convention everywhere is `R^{kl}_{ij}`: lower indices label the
//! input basis vector, upper indices the output, first upper index = first
//! output slot, so that
//!
//! ```text
//! R(e_i ⊗ e_j) = Σ_{k,l} R^{kl}_{ij} · e_k ⊗ e_l .
//! ```
//!
//! Operators are stored densely (d⁴ respectively d⁶ polynomial slots); the
//! public data model keeps all four (six) indices — flattening to matrices
//! happens only inside the exact linear solver. Dimensions of interest are
//! tiny (d ≤ 4), so the dense quartic/sextic loops are deliberate.

use crate::poly::Poly;
use std::fmt;

/// A linear operator on V⊗V with entries `R^{kl}_{ij}` in [`Poly`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Op2 {
    dim: usize,
    /// Dense entries indexed by `((i*d + j)*d + k)*d + l`.
    entries: Vec<Poly>,
}

impl Op2 {
    /// The zero operator on V⊗V with `dim(V) = d`.
    pub fn zero(d: usize) -> Self {
        assert!(d >= 1, "operator dimension must be at least 1");
        Op2 {
            dim: d,
            entries: vec![Poly::zero(); d * d * d * d],
        }
    }

    /// The identity operator on V⊗V.
    pub fn identity(d: usize) -> Self {
        let mut out = Op2::zero(d);
        for i in 0..d {
            for j in 0..d {
                out.set_entry(i, j, i, j, Poly::one());
            }
        }
        out
    }

    /// The permutation operator `P(x ⊗ y) = y ⊗ x`, i.e. `P^{kl}_{ij} =
    /// [k=j][l=i]`.
    pub fn permutation_p(d: usize) -> Self {
        let mut out = Op2::zero(d);
        for i in 0..d {
            for j in 0..d {
                out.set_entry(i, j, j, i, Poly::one());
            }
        }
        out
    }

    /// Build from a list of `(i, j, k, l, entry)` items; repeated indices
    /// accumulate.
    pub fn from_entries(d: usize, items: &[(usize, usize, usize, usize, Poly)]) -> Self {
        let mut out = Op2::zero(d);
        for (i, j, k, l, p) in items {
            let cur = out.entry(*i, *j, *k, *l).add(p);
            out.set_entry(*i, *j, *k, *l, cur);
        }
        out
    }

    /// `dim(V)`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        let d = self.dim;
        debug_assert!(i < d && j < d && k < d && l < d);
        ((i * d + j) * d + k) * d + l
    }

    /// The entry `R^{kl}_{ij}`.
    pub fn entry(&self, i: usize, j: usize, k: usize, l: usize) -> &Poly {
        &self.entries[self.idx(i, j, k, l)]
    }

    /// Overwrite the entry `R^{kl}_{ij}`.
    pub fn set_entry(&mut self, i: usize, j: usize, k: usize, l: usize, p: Poly) {
        let idx = self.idx(i, j, k, l);
        self.entries[idx] = p;
    }

    /// Iterate the nonzero entries as `((i, j, k, l), entry)`.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = ((usize, usize, usize, usize), &Poly)> {
        let d = self.dim;
        self.entries.iter().enumerate().filter_map(move |(n, p)| {
            if p.is_zero() {
                None
            } else {
                let l = n % d;
                let k = (n / d) % d;
                let j = (n / (d * d)) % d;
                let i = n / (d * d * d);
                Some(((i, j, k, l), p))
            }
        })
    }

    /// True iff every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Operator composition `(self ∘ other)(x) = self(other(x))`, by the
    /// index formula `(a∘b)^{kl}_{ij} = Σ_{s,t} a^{kl}_{st} · b^{st}_{ij}`.
    pub fn compose(&self, other: &Op2) -> Op2 {
        assert_eq!(self.dim, other.dim, "operator dimension mismatch");
        let d = self.dim;
        let mut out = Op2::zero(d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut acc = Poly::zero();
                        for s in 0..d {
                            for t in 0..d {
                                let b = other.entry(i, j, s, t);
                                if b.is_zero() {
                                    continue;
                                }
                                let a = self.entry(s, t, k, l);
                                if a.is_zero() {
                                    continue;
                                }
                                acc = acc.add(&a.mul(b));
                            }
                        }
                        if !acc.is_zero() {
                            out.set_entry(i, j, k, l, acc);
                        }
                    }
                }
            }
        }
        out
    }

    /// Entry-wise sum.
    pub fn add(&self, other: &Op2) -> Op2 {
        assert_eq!(self.dim, other.dim, "operator dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Op2 {
            dim: self.dim,
            entries,
        }
    }

    /// Entry-wise difference.
    pub fn sub(&self, other: &Op2) -> Op2 {
        assert_eq!(self.dim, other.dim, "operator dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        Op2 {
            dim: self.dim,
            entries,
        }
    }

    /// Entry-wise negation.
    pub fn neg(&self) -> Op2 {
        Op2 {
            dim: self.dim,
            entries: self.entries.iter().map(Poly::neg).collect(),
        }
    }

    /// Scale every entry by a polynomial.
    pub fn scale(&self, s: &Poly) -> Op2 {
        Op2 {
            dim: self.dim,
            entries: self.entries.iter().map(|p| p.mul(s)).collect(),
        }
    }

    /// Apply a polynomial map to every entry.
    pub fn map_entries(&self, f: impl Fn(&Poly) -> Poly) -> Op2 {
        Op2 {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl fmt::Display for Op2 {
    /// Action notation, one line per input pair with a nonzero image, e.g.
    /// `R(e1⊗e0) = e0⊗e1 - e0⊗e0` (entry polynomials in parentheses when
    /// they are not ±1).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim;
        let mut first_line = true;
        for i in 0..d {
            for j in 0..d {
                let mut parts: Vec<String> = Vec::new();
                for k in 0..d {
                    for l in 0..d {
                        let p = self.entry(i, j, k, l);
                        if p.is_zero() {
                            continue;
                        }
                        let basis = format!("e{k}⊗e{l}");
                        let s = p.to_string();
                        let part = if s == "1" {
                            basis
                        } else if s == "-1" {
                            format!("-{basis}")
                        } else if p.term_count() == 1 {
                            format!("{s} {basis}")
                        } else {
                            format!("({s}) {basis}")
                        };
                        parts.push(part);
                    }
                }
                if parts.is_empty() {
                    continue;
                }
                if !first_line {
                    writeln!(f)?;
                }
                first_line = false;
                let mut rhs = String::new();
                for (n, part) in parts.iter().enumerate() {
                    if n == 0 {
                        rhs.push_str(part);
                    } else if let Some(stripped) = part.strip_prefix('-') {
                        rhs.push_str(" - ");
                        rhs.push_str(stripped);
                    } else {
                        rhs.push_str(" + ");
                        rhs.push_str(part);
                    }
                }
                write!(f, "R(e{i}⊗e{j}) = {rhs}")?;
            }
        }
        if first_line {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A linear operator on V⊗V⊗V, produced by the slot lifts and their
/// compositions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Op3 {
    dim: usize,
    /// Dense entries indexed by `in_flat * d³ + out_flat`, where a triple
    /// `(a, b, c)` flattens to `(a*d + b)*d + c`.
    entries: Vec<Poly>,
}

impl Op3 {
    /// The zero operator on V⊗V⊗V.
    pub fn zero(d: usize) -> Self {
        assert!(d >= 1, "operator dimension must be at least 1");
        Op3 {
            dim: d,
            entries: vec![Poly::zero(); d.pow(6)],
        }
    }

    /// The identity operator on V⊗V⊗V.
    pub fn identity(d: usize) -> Self {
        let mut out = Op3::zero(d);
        let d3 = d * d * d;
        for v in 0..d3 {
            out.entries[v * d3 + v] = Poly::one();
        }
        out
    }

    /// `dim(V)`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    fn d3(&self) -> usize {
        self.dim * self.dim * self.dim
    }

    /// The entry with input triple `(i1, i2, i3)` and output triple
    /// `(o1, o2, o3)`.
    pub fn entry(&self, i: (usize, usize, usize), o: (usize, usize, usize)) -> &Poly {
        let d = self.dim;
        let fi = (i.0 * d + i.1) * d + i.2;
        let fo = (o.0 * d + o.1) * d + o.2;
        &self.entries[fi * self.d3() + fo]
    }

    /// Overwrite the entry with input triple `i` and output triple `o`.
    pub fn set_entry(&mut self, i: (usize, usize, usize), o: (usize, usize, usize), p: Poly) {
        let d = self.dim;
        let fi = (i.0 * d + i.1) * d + i.2;
        let fo = (o.0 * d + o.1) * d + o.2;
        let d3 = self.d3();
        self.entries[fi * d3 + fo] = p;
    }

    pub(crate) fn entry_flat(&self, fi: usize, fo: usize) -> &Poly {
        &self.entries[fi * self.d3() + fo]
    }

    fn set_entry_flat(&mut self, fi: usize, fo: usize, p: Poly) {
        let d3 = self.d3();
        self.entries[fi * d3 + fo] = p;
    }

    /// Iterate nonzero entries as `((i1,i2,i3), (o1,o2,o3), entry)`.
    pub fn nonzero_entries(
        &self,
    ) -> impl Iterator<Item = ((usize, usize, usize), (usize, usize, usize), &Poly)> {
        let d = self.dim;
        let d3 = self.d3();
        self.entries.iter().enumerate().filter_map(move |(n, p)| {
            if p.is_zero() {
                return None;
            }
            let fi = n / d3;
            let fo = n % d3;
            let unflat = |f: usize| (f / (d * d), (f / d) % d, f % d);
            Some((unflat(fi), unflat(fo), p))
        })
    }

    /// True iff every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Operator composition `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Op3) -> Op3 {
        assert_eq!(self.dim, other.dim, "operator dimension mismatch");
        let d3 = self.d3();
        let mut out = Op3::zero(self.dim);
        for fi in 0..d3 {
            for m in 0..d3 {
                let b = other.entry_flat(fi, m);
                if b.is_zero() {
                    continue;
                }
                for fo in 0..d3 {
                    let a = self.entry_flat(m, fo);
                    if a.is_zero() {
                        continue;
                    }
                    let cur = out.entry_flat(fi, fo).add(&a.mul(b));
                    out.set_entry_flat(fi, fo, cur);
                }
            }
        }
        out
    }

    /// Entry-wise sum.
    pub fn add(&self, other: &Op3) -> Op3 {
        assert_eq!(self.dim, other.dim, "operator dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Op3 {
            dim: self.dim,
            entries,
        }
    }

    /// Entry-wise difference.
    pub fn sub(&self, other: &Op3) -> Op3 {
        assert_eq!(self.dim, other.dim, "operator dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        Op3 {
            dim: self.dim,
            entries,
        }
    }
}

/// Lift an operator on V⊗V to slots 1,2 of V⊗V⊗V:
/// `a^{12}(x ⊗ y ⊗ z) = a(x ⊗ y) ⊗ z`.
pub fn lift12(a: &Op2) -> Op3 {
    let d = a.dim();
    let mut out = Op3::zero(d);
    for ((i, j, k, l), p) in a.nonzero_entries() {
        for m in 0..d {
            let fi = (i * d + j) * d + m;
            let fo = (k * d + l) * d + m;
            out.set_entry_flat(fi, fo, p.clone());
        }
    }
    out
}

/// Lift an operator on V⊗V to slots 2,3 of V⊗V⊗V:
/// `a^{23}(x ⊗ y ⊗ z) = x ⊗ a(y ⊗ z)`.
pub fn lift23(a: &Op2) -> Op3 {
    let d = a.dim();
    let mut out = Op3::zero(d);
    for ((i, j, k, l), p) in a.nonzero_entries() {
        for m in 0..d {
            let fi = (m * d + i) * d + j;
            let fo = (m * d + k) * d + l;
            out.set_entry_flat(fi, fo, p.clone());
        }
    }
    out
}

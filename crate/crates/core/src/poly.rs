//! Multivariate polynomials over exact rationals in named formal parameters.
//!
//! A [`Poly`] is a finite sum of terms `coefficient * monomial` where the
//! coefficient is an arbitrary-precision rational ([`Rat`]) and the monomial
//! is a product of named parameters with positive integer exponents. The
//! parameter universe is implicit (the set of names that occur); unions are
//! taken automatically by the arithmetic, and names are ordered
//! alphabetically so that every operation is canonical and deterministic.
//!
//! The canonical string form — terms in descending lexicographic monomial
//! order, coefficients as `p/q`, exponents with `^`, factors joined by `*`,
//! e.g. `3/2*lambda^2 - 1/4` — is produced by `Display` and accepted back by
//! `FromStr`, bit-exactly. That string is the single source of truth for
//! JSON embedding and CLI output.

use num::{BigInt, One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// Exact arbitrary-precision rational scalar.
///
/// `num`'s `BigRational` already maintains the invariants we need: always
/// reduced to lowest terms, denominator positive, canonical zero `0/1`.
pub type Rat = num::BigRational;

/// Convenience constructor: the exact rational `n/d`.
///
/// # Panics
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "rational with zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience constructor: the integer `n` as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// A monomial: parameter names with positive exponents (empty = 1).
///
/// Monomials are totally ordered lexicographically over the alphabetically
/// ordered union of their parameter names, with absent names counting as
/// exponent zero. This is the order used for canonical printing (descending)
/// and for deterministic iteration everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<String, u32>,
}

impl Monomial {
    /// The empty monomial (the constant term's monomial).
    pub fn unit() -> Self {
        Monomial::default()
    }

    /// A single parameter raised to a power. Exponent 0 yields the unit.
    pub fn var(name: &str, exp: u32) -> Self {
        let mut exps = BTreeMap::new();
        if exp > 0 {
            exps.insert(name.to_string(), exp);
        }
        Monomial { exps }
    }

    /// Build from `(name, exponent)` pairs; zero exponents are dropped,
    /// repeated names accumulate.
    pub fn from_pairs(pairs: &[(&str, u32)]) -> Self {
        let mut exps: BTreeMap<String, u32> = BTreeMap::new();
        for (name, e) in pairs {
            if *e > 0 {
                *exps.entry((*name).to_string()).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    /// True for the empty (unit) monomial.
    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    /// Exponent of `name` (0 if absent).
    pub fn exponent(&self, name: &str) -> u32 {
        self.exps.get(name).copied().unwrap_or(0)
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    /// Iterate `(name, exponent)` in alphabetical name order.
    pub fn factors(&self) -> impl Iterator<Item = (&str, u32)> {
        self.exps.iter().map(|(n, e)| (n.as_str(), *e))
    }

    /// Product of two monomials (exponents add).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (n, e) in &other.exps {
            *exps.entry(n.clone()).or_insert(0) += e;
        }
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Lexicographic over the alphabetical union of names; a missing name
        // has exponent 0. The alphabetically first differing name decides.
        let mut a = self.exps.iter().peekable();
        let mut b = other.exps.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (Some((an, ae)), Some((bn, be))) => match an.cmp(bn) {
                    // The side that owns the alphabetically earlier name has
                    // a positive exponent where the other side has zero.
                    std::cmp::Ordering::Less => return std::cmp::Ordering::Greater,
                    std::cmp::Ordering::Greater => return std::cmp::Ordering::Less,
                    std::cmp::Ordering::Equal => match ae.cmp(be) {
                        std::cmp::Ordering::Equal => {
                            a.next();
                            b.next();
                        }
                        ord => return ord,
                    },
                },
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (None, Some(_)) => return std::cmp::Ordering::Less,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A multivariate polynomial with exact rational coefficients.
///
/// Invariants: no zero coefficients are stored; monomials are unique. Both
/// are maintained by every constructor and operation, so `PartialEq` is
/// canonical structural equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    /// A constant polynomial.
    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        Poly { terms }
    }

    /// The constant polynomial `n/d`.
    pub fn from_rat(n: i64, d: i64) -> Self {
        Poly::constant(rat(n, d))
    }

    /// The constant polynomial `n`.
    pub fn from_int(n: i64) -> Self {
        Poly::constant(rat_int(n))
    }

    /// A single parameter as a degree-1 polynomial.
    pub fn var(name: &str) -> Self {
        Poly::term(Rat::one(), Monomial::var(name, 1))
    }

    /// A single term `c * m`.
    pub fn term(c: Rat, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// True iff this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff no parameter occurs (including the zero polynomial).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_unit)
    }

    /// The value as a rational if constant, `None` otherwise.
    pub fn as_constant(&self) -> Option<Rat> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .get(&Monomial::unit())
                .cloned()
                .unwrap_or_else(Rat::zero),
        )
    }

    /// The set of parameter names occurring with nonzero exponent.
    pub fn params(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            for (n, _) in m.factors() {
                out.insert(n.to_string());
            }
        }
        out
    }

    /// Total degree (0 for constants and for zero).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The coefficient of a monomial (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Iterate `(monomial, coefficient)` in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn insert_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Sum of two polynomials.
    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    /// Difference of two polynomials.
    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }

    /// Additive inverse.
    pub fn neg(&self) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        Poly { terms }
    }

    /// Product of two polynomials.
    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Scale by an exact rational.
    pub fn scale(&self, s: &Rat) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c * s))
            .collect();
        Poly { terms }
    }

    /// Small integer power.
    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Partial evaluation: substitute exact rational values for some
    /// parameters. Names absent from the polynomial are ignored.
    pub fn substitute(&self, bindings: &BTreeMap<String, Rat>) -> Poly {
        let poly_bindings: BTreeMap<String, Poly> = bindings
            .iter()
            .map(|(k, v)| (k.clone(), Poly::constant(v.clone())))
            .collect();
        self.substitute_poly(&poly_bindings)
    }

    /// Substitute polynomials for some parameters (ring homomorphism on the
    /// bound names, identity on the rest).
    pub fn substitute_poly(&self, bindings: &BTreeMap<String, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for (name, e) in m.factors() {
                let factor = match bindings.get(name) {
                    Some(p) => p.pow(e),
                    None => Poly::term(Rat::one(), Monomial::var(name, e)),
                };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        out
    }
}

fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Poly {
    /// Canonical form: descending lexicographic monomial order, `p/q`
    /// coefficients, `^` exponents, `*` separators; unit coefficients and
    /// exponents elided; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            let mut body = String::new();
            let factors: Vec<String> = m
                .factors()
                .map(|(n, e)| {
                    if e == 1 {
                        n.to_string()
                    } else {
                        format!("{n}^{e}")
                    }
                })
                .collect();
            if m.is_unit() {
                body.push_str(&format_rat(&abs));
            } else {
                if !abs.is_one() {
                    body.push_str(&format_rat(&abs));
                    body.push('*');
                }
                body.push_str(&factors.join("*"));
            }
            if idx == 0 {
                if negative {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
            } else if negative {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

/// Error parsing the canonical polynomial string form.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParsePolyError {
    #[error("empty polynomial string")]
    Empty,
    #[error("invalid number `{0}`")]
    BadNumber(String),
    #[error("invalid exponent `{0}`")]
    BadExponent(String),
    #[error("unexpected character `{0}` at byte {1}")]
    Unexpected(char, usize),
    #[error("malformed term `{0}`")]
    BadTerm(String),
}

impl FromStr for Poly {
    type Err = ParsePolyError;

    /// Parse the canonical string form (and harmless variants with extra
    /// whitespace). Round-trips `Display` bit-exactly.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParsePolyError::Empty);
        }
        // Split into signed terms at top level (no parentheses in the
        // canonical grammar).
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0usize;
        let mut sign_negative = false;
        let bytes = s.as_bytes();
        let mut i = 0usize;
        // Leading sign.
        if bytes[0] == b'-' {
            sign_negative = true;
            start = 1;
            i = 1;
        } else if bytes[0] == b'+' {
            start = 1;
            i = 1;
        }
        while i < bytes.len() {
            let c = bytes[i] as char;
            if (c == '+' || c == '-')
                && i > start
                && bytes[i - 1].is_ascii_whitespace()
                && i + 1 < bytes.len()
                && bytes[i + 1].is_ascii_whitespace()
            {
                terms.push((sign_negative, s[start..i].trim()));
                sign_negative = c == '-';
                start = i + 1;
            }
            i += 1;
        }
        terms.push((sign_negative, s[start..].trim()));

        let mut out = Poly::zero();
        for (neg, term) in terms {
            if term.is_empty() {
                return Err(ParsePolyError::BadTerm(term.to_string()));
            }
            let (coeff, mono) = parse_term(term)?;
            let coeff = if neg { -coeff } else { coeff };
            out.insert_term(mono, coeff);
        }
        Ok(out)
    }
}

fn parse_term(term: &str) -> Result<(Rat, Monomial), ParsePolyError> {
    let mut coeff = Rat::one();
    let mut pairs: Vec<(String, u32)> = Vec::new();
    let mut seen_number = false;
    for factor in term.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(ParsePolyError::BadTerm(term.to_string()));
        }
        let first = factor.chars().next().unwrap();
        if first.is_ascii_digit() {
            if seen_number || !pairs.is_empty() {
                // Canonical form puts the single numeric factor first.
                return Err(ParsePolyError::BadTerm(term.to_string()));
            }
            seen_number = true;
            coeff = parse_rat(factor)?;
        } else if first.is_ascii_alphabetic() || first == '_' {
            let (name, exp) = match factor.split_once('^') {
                None => (factor, 1u32),
                Some((n, e)) => {
                    let exp: u32 = e
                        .trim()
                        .parse()
                        .map_err(|_| ParsePolyError::BadExponent(e.to_string()))?;
                    (n.trim(), exp)
                }
            };
            if !name
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(ParsePolyError::BadTerm(term.to_string()));
            }
            pairs.push((name.to_string(), exp));
        } else {
            return Err(ParsePolyError::Unexpected(first, 0));
        }
    }
    let pair_refs: Vec<(&str, u32)> = pairs.iter().map(|(n, e)| (n.as_str(), *e)).collect();
    Ok((coeff, Monomial::from_pairs(&pair_refs)))
}

fn parse_rat(s: &str) -> Result<Rat, ParsePolyError> {
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s.trim())
                .map_err(|_| ParsePolyError::BadNumber(s.to_string()))?;
            Ok(Rat::from(n))
        }
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim())
                .map_err(|_| ParsePolyError::BadNumber(s.to_string()))?;
            let q = BigInt::from_str(q.trim())
                .map_err(|_| ParsePolyError::BadNumber(s.to_string()))?;
            if q.is_zero() {
                return Err(ParsePolyError::BadNumber(s.to_string()));
            }
            Ok(Rat::new(p, q))
        }
    }
}

// Operator sugar on references, so call sites read like arithmetic.
impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}
impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::sub(self, rhs)
    }
}
impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}
impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

//! Arithmetic in the ring `F_2[x_0..x_{m-1}] / (x_i^2 - x_i)`.
//!
//! Monomials are squarefree, so a monomial is just a set of variable
//! indices, stored as a bit mask. Polynomials are kept in algebraic normal
//! form: a sorted list of distinct monomial masks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest number of variables supported anywhere in the crate.
pub const MAX_VARS: u32 = 30;

/// A squarefree monomial, the product of the variables in its mask.
///
/// The empty mask is the constant monomial `1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(u32);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub const fn from_mask(mask: u32) -> Self {
        Monomial(mask)
    }

    /// Builds a monomial from variable indices. Repeated indices are idempotent.
    pub fn from_vars<I: IntoIterator<Item = u32>>(vars: I) -> Self {
        Monomial(vars.into_iter().fold(0, |acc, v| acc | (1 << v)))
    }

    pub const fn var(i: u32) -> Self {
        Monomial(1 << i)
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    pub const fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn is_one(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, var: u32) -> bool {
        self.0 >> var & 1 == 1
    }

    /// Variable indices in ascending order.
    pub fn vars(self) -> impl Iterator<Item = u32> + Clone {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            Some(v)
        })
    }

    pub fn vars_vec(self) -> Vec<u32> {
        self.vars().collect()
    }

    pub fn max_var(self) -> Option<u32> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros())
    }

    /// One past the largest variable index, i.e. the smallest `m` able to hold it.
    pub fn span(self) -> u32 {
        32 - self.0.leading_zeros()
    }

    /// `self | other`, i.e. `ind(self) ⊆ ind(other)`.
    pub const fn divides(self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    /// The monomial supported on `ind(self) ∩ ind(other)`.
    pub const fn gcd(self, other: Monomial) -> Monomial {
        Monomial(self.0 & other.0)
    }

    /// Product of monomials; variables are idempotent.
    pub const fn times(self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    /// Exact quotient `self / divisor`.
    pub fn divide(self, divisor: Monomial) -> Result<Monomial> {
        if !divisor.divides(self) {
            return Err(Error::NonDivisor {
                dividend: self,
                divisor,
            });
        }
        Ok(Monomial(self.0 & !divisor.0))
    }

    /// Row index of the polar transform that evaluates to this monomial:
    /// the sum of `2^j` over the variables `j < m` absent from the monomial.
    pub fn row_index(self, m: u32) -> u32 {
        debug_assert!(m <= MAX_VARS && self.span() <= m);
        !self.0 & full_mask(m)
    }

    /// Inverse of [`Monomial::row_index`].
    pub fn from_row_index(row: u32, m: u32) -> Monomial {
        debug_assert!(m <= MAX_VARS && u64::from(row) < 1u64 << m);
        Monomial(!row & full_mask(m))
    }
}

pub(crate) fn full_mask(m: u32) -> u32 {
    ((1u64 << m) - 1) as u32
}

/// `gcd(f, g)`: the monomial on the common variables.
pub fn mono_gcd(f: Monomial, g: Monomial) -> Monomial {
    f.gcd(g)
}

/// Exact quotient `f / h`, failing with [`Error::NonDivisor`] when `h ∤ f`.
pub fn mono_divide(f: Monomial, h: Monomial) -> Result<Monomial> {
    f.divide(h)
}

pub fn row_index_of(f: Monomial, m: u32) -> u32 {
    f.row_index(m)
}

pub fn monomial_of_row(row: u32, m: u32) -> Monomial {
    Monomial::from_row_index(row, m)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for v in self.vars() {
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A polynomial in algebraic normal form.
///
/// The canonical form is the list of monomials sorted by mask, with no
/// repeats; equality and hashing use that form.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polynomial {
    terms: Vec<u32>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::from(Monomial::ONE)
    }

    /// Sums the given monomials over GF(2): a monomial listed twice cancels.
    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(monomials: I) -> Self {
        let terms = monomials.into_iter().map(Monomial::mask).collect();
        Polynomial {
            terms: cancel_pairs(terms),
        }
    }

    /// The affine linear form `Σ_{j ∈ vars} x_j + constant`.
    pub fn linear(vars: u32, constant: bool) -> Self {
        let mut terms: Vec<u32> = Vec::with_capacity(vars.count_ones() as usize + 1);
        if constant {
            terms.push(0);
        }
        terms.extend(Monomial(vars).vars().map(|v| 1 << v));
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().map(|&t| Monomial(t))
    }

    pub fn contains(&self, f: Monomial) -> bool {
        self.terms.binary_search(&f.0).is_ok()
    }

    /// Degree of the polynomial; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.count_ones()).max().unwrap_or(0)
    }

    /// Union of all variables appearing in the polynomial.
    pub fn support_mask(&self) -> u32 {
        self.terms.iter().fold(0, |a, t| a | t)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Polynomial { terms: out }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &s in &self.terms {
            for &t in &other.terms {
                products.push(s | t);
            }
        }
        Polynomial {
            terms: cancel_pairs(products),
        }
    }

    /// Evaluation of the polynomial at every point of `F_2^m`.
    pub fn evaluate(&self, m: u32) -> Evaluation {
        let mut ev = Evaluation::zeros(m);
        for &t in &self.terms {
            ev.xor_monomial(t);
        }
        ev
    }
}

/// Sorts and drops every value that occurs an even number of times.
fn cancel_pairs(mut terms: Vec<u32>) -> Vec<u32> {
    terms.sort_unstable();
    let mut out = Vec::with_capacity(terms.len());
    let mut i = 0;
    while i < terms.len() {
        let mut j = i;
        while j < terms.len() && terms[j] == terms[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            out.push(terms[i]);
        }
        i = j;
    }
    out
}

pub fn poly_add(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p.add(q)
}

pub fn poly_mul(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p.mul(q)
}

pub fn evaluate(p: &Polynomial, m: u32) -> Evaluation {
    p.evaluate(m)
}

impl From<Monomial> for Polynomial {
    fn from(f: Monomial) -> Self {
        Polynomial { terms: vec![f.0] }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.monomials().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Truth table of a polynomial over `F_2^m`, packed 64 positions per word.
///
/// Position `p` holds the value at the point whose integer encoding is
/// `N - 1 - p`, with `x_0` as the least significant bit. Equivalently,
/// monomial `f` evaluates to 1 at position `p` iff `p & mask(f) == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Evaluation {
    m: u32,
    words: Vec<u64>,
}

impl Evaluation {
    pub fn zeros(m: u32) -> Self {
        assert!(m <= MAX_VARS, "m = {m} exceeds {MAX_VARS}");
        let n = 1usize << m;
        Evaluation {
            m,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Length `N = 2^m`.
    pub fn len(&self) -> usize {
        1 << self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, p: usize) -> bool {
        assert!(p < self.len());
        self.words[p / 64] >> (p % 64) & 1 == 1
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len()).map(|p| self.get(p))
    }

    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &Evaluation) {
        debug_assert_eq!(self.m, other.m);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Evaluation) -> Evaluation {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &Evaluation) -> Evaluation {
        debug_assert_eq!(self.m, other.m);
        Evaluation {
            m: self.m,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// Hamming weight of `self XOR other` without materialising it.
    pub fn xor_weight(&self, other: &Evaluation) -> u32 {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones())
            .sum()
    }

    fn xor_monomial(&mut self, mask: u32) {
        let n = self.len();
        let low = mask & 63;
        let mut pattern = 0u64;
        for b in 0..n.min(64) {
            if b as u32 & low == 0 {
                pattern |= 1 << b;
            }
        }
        let high = u64::from(mask & !63);
        for (w, word) in self.words.iter_mut().enumerate() {
            if (w as u64) << 6 & high == 0 {
                *word ^= pattern;
            }
        }
    }
}

impl fmt::Display for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Evaluation(m={}, {self})", self.m)
    }
}

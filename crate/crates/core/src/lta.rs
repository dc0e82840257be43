//! The lower-triangular affine group `LTA(m,2)`, its monomial subgroups
//! `LTA(m,2)_g` and orbits of monomials under them.
//!
//! An element `(B, ε)` substitutes `x_i ↦ x_i + Σ_{j<i} b_{i,j} x_j + ε_i`.
//! The subgroup attached to a monomial `g` only lets rows `i ∈ ind(g)` move,
//! and only towards variables `j ∉ ind(g)`; the translation is likewise
//! restricted to `ind(g)`.

use std::collections::HashSet;

use rand::Rng;

use crate::error::{pow2, Error, Result};
use crate::ring::{full_mask, Monomial, Polynomial, MAX_VARS};

/// An element of `LTA(m,2)` in dense form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    m: u32,
    /// `lower[i]` holds the bits `b_{i,j}` for `j < i`.
    lower: Vec<u32>,
    eps: u32,
}

impl GroupElement {
    pub fn identity(m: u32) -> Self {
        assert!(m <= MAX_VARS);
        GroupElement {
            m,
            lower: vec![0; m as usize],
            eps: 0,
        }
    }

    /// Validates that `lower[i]` only uses columns `j < i`.
    pub fn new(m: u32, lower: Vec<u32>, eps: u32) -> Result<Self> {
        if m > MAX_VARS || lower.len() != m as usize {
            return Err(Error::InvalidParameter(format!(
                "expected {m} rows for a group element, got {}",
                lower.len()
            )));
        }
        for (i, &row) in lower.iter().enumerate() {
            if row >> i != 0 {
                return Err(Error::InvalidParameter(format!(
                    "row {i} of B is not strictly lower triangular"
                )));
            }
        }
        if eps & !full_mask(m) != 0 {
            return Err(Error::InvalidParameter("translation uses a variable ≥ m".into()));
        }
        Ok(GroupElement { m, lower, eps })
    }

    /// Uniformly random element of the full group.
    pub fn random<R: Rng + ?Sized>(m: u32, rng: &mut R) -> Self {
        let lower = (0..m).map(|i| rng.gen::<u32>() & ((1u32 << i) - 1)).collect();
        GroupElement {
            m,
            lower,
            eps: rng.gen::<u32>() & full_mask(m),
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn b(&self, i: u32, j: u32) -> bool {
        j < i && self.lower[i as usize] >> j & 1 == 1
    }

    pub fn eps(&self, i: u32) -> bool {
        self.eps >> i & 1 == 1
    }

    /// The image `y_i` of `x_i` as an affine linear form.
    pub fn linear_form(&self, i: u32) -> Polynomial {
        Polynomial::linear(1 << i | self.lower[i as usize], self.eps(i))
    }

    /// The reduced normal form of `∏_{i ∈ ind(f)} y_i`.
    pub fn apply(&self, f: Monomial) -> Polynomial {
        debug_assert!(f.span() <= self.m);
        f.vars()
            .fold(Polynomial::one(), |acc, i| acc.mul(&self.linear_form(i)))
    }
}

pub fn apply(e: &GroupElement, f: Monomial) -> Polynomial {
    e.apply(f)
}

/// The free coordinates of `LTA(m,2)_g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupMask {
    pub base: Monomial,
    pub m: u32,
    /// Free `b_{i,j}` positions in row-major order.
    pub b_positions: Vec<(u32, u32)>,
    /// Free `ε_i` positions, ascending.
    pub eps_positions: Vec<u32>,
}

impl SubgroupMask {
    pub fn new(base: Monomial, m: u32) -> Self {
        Self::acting_on(base, base, m)
    }

    /// Coordinates of `LTA(m,2)_base` that can affect the image of `target`.
    /// Rows outside `ind(target)` are fixed to zero, since they never enter
    /// the product.
    pub fn acting_on(base: Monomial, target: Monomial, m: u32) -> Self {
        let mut b_positions = Vec::new();
        for i in target.vars() {
            for j in 0..i {
                if !base.contains(j) {
                    b_positions.push((i, j));
                }
            }
        }
        SubgroupMask {
            base,
            m,
            b_positions,
            eps_positions: target.vars().collect(),
        }
    }

    pub fn free_bits(&self) -> usize {
        self.b_positions.len() + self.eps_positions.len()
    }

    /// Number of elements, `2^{free bits}`.
    pub fn size(&self) -> Result<u128> {
        pow2(self.free_bits() as u32)
    }

    /// The element whose free coordinates are the bits of `index`, the first
    /// coordinate being the most significant.
    pub fn element(&self, index: u64) -> GroupElement {
        let n = self.free_bits();
        let mut e = GroupElement::identity(self.m);
        let bit = |k: usize| index >> (n - 1 - k) & 1 == 1;
        for (k, &(i, j)) in self.b_positions.iter().enumerate() {
            if bit(k) {
                e.lower[i as usize] |= 1 << j;
            }
        }
        let off = self.b_positions.len();
        for (k, &i) in self.eps_positions.iter().enumerate() {
            if bit(off + k) {
                e.eps |= 1 << i;
            }
        }
        e
    }

    /// All elements in lexicographic order of their free coordinates.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        let n = self.free_bits();
        assert!(n < 64, "subgroup with {n} free bits cannot be enumerated");
        (0..1u64 << n).map(move |k| self.element(k))
    }
}

/// `λ_f(i)`: number of indices `j < i` outside `ind(f)`.
pub fn lambda_single(f: Monomial, i: u32) -> u32 {
    let below = (1u64 << i) - 1;
    i - (u64::from(f.mask()) & below).count_ones()
}

/// `|λ_f(g)| = Σ_{i ∈ ind(g)} λ_f(i)`.
pub fn lambda_total(f: Monomial, g: Monomial) -> u32 {
    g.vars().map(|i| lambda_single(f, i)).sum()
}

/// Per-variable `λ_f(i)` for `i ∈ ind(g)`, ascending in `i`.
pub fn lambda_terms(f: Monomial, g: Monomial) -> Vec<u32> {
    g.vars().map(|i| lambda_single(f, i)).collect()
}

/// `deg(f) + |λ_f|`, the base-2 logarithm of the orbit size.
pub fn orbit_exponent(f: Monomial) -> u32 {
    f.degree() + lambda_total(f, f)
}

/// `|LTA(m,2)_f · f| = 2^{deg(f) + |λ_f|}`.
pub fn orbit_cardinality(f: Monomial) -> Result<u128> {
    pow2(orbit_exponent(f))
}

/// Elements of `LTA(m,2)_g`, in lexicographic order of the free coordinates
/// (row-major `B` positions, then `ε`).
pub fn subgroup_elements(g: Monomial, m: u32) -> impl Iterator<Item = GroupElement> {
    let mask = SubgroupMask::new(g, m);
    let n = mask.free_bits();
    assert!(n < 64, "subgroup with {n} free bits cannot be enumerated");
    (0..1u64 << n).map(move |k| mask.element(k))
}

/// Every element of the full group `LTA(m,2)`. Only sensible for tiny `m`.
pub fn full_group_elements(m: u32) -> impl Iterator<Item = GroupElement> {
    let mut positions = Vec::new();
    for i in 0..m {
        for j in 0..i {
            positions.push((i, j));
        }
    }
    let n = positions.len() + m as usize;
    assert!(n < 40, "LTA({m},2) is too large to enumerate");
    (0..1u64 << n).map(move |k| {
        let mut e = GroupElement::identity(m);
        for (b, &(i, j)) in positions.iter().enumerate() {
            if k >> b & 1 == 1 {
                e.lower[i as usize] |= 1 << j;
            }
        }
        e.eps = (k >> positions.len()) as u32 & full_mask(m);
        e
    })
}

/// The orbit `LTA(m,2)_base · target` for a divisor `target` of `base`,
/// deduplicated and listed in enumeration order.
pub fn orbit(base: Monomial, target: Monomial, m: u32) -> Result<Vec<Polynomial>> {
    if !target.divides(base) {
        return Err(Error::NonDivisor {
            dividend: base,
            divisor: target,
        });
    }
    if base.span() > m {
        return Err(Error::InvalidParameter(format!("{base} uses a variable outside 0..{m}")));
    }
    let mask = SubgroupMask::acting_on(base, target, m);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for e in mask.elements() {
        let p = e.apply(target);
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Applies every element of `LTA(m,2)_f` to `f` and reports
/// `(elements enumerated, distinct polynomials)`.
pub fn orbit_enumeration_stats(f: Monomial, m: u32) -> (u64, u64) {
    let mut seen = HashSet::new();
    let mut total = 0;
    for e in subgroup_elements(f, m) {
        total += 1;
        seen.insert(e.apply(f));
    }
    (total, seen.len() as u64)
}

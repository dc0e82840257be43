//! The partial orders on monomials and decreasing sets.

use std::collections::BTreeSet;

use crate::ring::{full_mask, Monomial};

/// `f ≼_w g`: `f` divides `g`.
pub fn divides_order(f: Monomial, g: Monomial) -> bool {
    f.divides(g)
}

/// `f ≼_sh g`: equal degrees and, with both index lists sorted, each index
/// of `f` is at most the matching index of `g`. Unequal degrees give `false`.
pub fn shift_order(f: Monomial, g: Monomial) -> bool {
    f.degree() == g.degree() && f.vars().zip(g.vars()).all(|(i, j)| i <= j)
}

/// `f ≼ g`: some `g*` with `f ≼_sh g* ≼_w g` exists.
///
/// The top `deg f` indices of `g` dominate every other subset of that size
/// elementwise, so they are the only witness worth trying.
pub fn preceq(f: Monomial, g: Monomial) -> bool {
    let (s, t) = (f.degree() as usize, g.degree() as usize);
    if s > t {
        return false;
    }
    f.vars().zip(g.vars().skip(t - s)).all(|(i, j)| i <= j)
}

/// Returns a pair `(lower, upper)` with `upper ∈ set`, `lower ≼ upper` and
/// `lower ∉ set`, or `None` when the set is decreasing.
pub fn find_violation(set: &BTreeSet<Monomial>, m: u32) -> Option<(Monomial, Monomial)> {
    // Checking the covering relations suffices: removing one variable, or
    // lowering one index by one, generates the order.
    for &f in set {
        for v in f.vars() {
            let lower = Monomial::from_mask(f.mask() & !(1 << v));
            if !set.contains(&lower) {
                return Some((lower, f));
            }
            if v > 0 && !f.contains(v - 1) {
                let shifted = Monomial::from_mask((f.mask() & !(1 << v)) | 1 << (v - 1));
                if !set.contains(&shifted) {
                    return Some((shifted, f));
                }
            }
        }
        debug_assert!(f.span() <= m);
    }
    None
}

pub fn is_decreasing(set: &BTreeSet<Monomial>, m: u32) -> bool {
    find_violation(set, m).is_none()
}

/// Smallest decreasing superset of `set`.
pub fn decreasing_closure(set: &BTreeSet<Monomial>, m: u32) -> BTreeSet<Monomial> {
    let mut out = set.clone();
    let mut stack: Vec<Monomial> = set.iter().copied().collect();
    while let Some(f) = stack.pop() {
        for v in f.vars() {
            let mut next = vec![Monomial::from_mask(f.mask() & !(1 << v))];
            if v > 0 && !f.contains(v - 1) {
                next.push(Monomial::from_mask((f.mask() & !(1 << v)) | 1 << (v - 1)));
            }
            for g in next {
                if out.insert(g) {
                    stack.push(g);
                }
            }
        }
    }
    debug_assert!(out.iter().all(|f| f.mask() & !full_mask(m) == 0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(vars: &[u32]) -> Monomial {
        Monomial::from_vars(vars.iter().copied())
    }

    fn set(ms: &[&[u32]]) -> BTreeSet<Monomial> {
        ms.iter().map(|v| mono(v)).collect()
    }

    /// Literal reading of the definition: search every divisor of `g`.
    fn preceq_exhaustive(f: Monomial, g: Monomial) -> bool {
        let gm = g.mask();
        let mut sub = gm;
        loop {
            let cand = Monomial::from_mask(sub);
            if shift_order(f, cand) {
                return true;
            }
            if sub == 0 {
                return false;
            }
            sub = (sub - 1) & gm;
        }
    }

    #[test]
    fn order_examples() {
        assert!(divides_order(mono(&[0, 1]), mono(&[0, 1, 3])));
        assert!(!divides_order(mono(&[2]), mono(&[0, 1])));
        assert!(divides_order(mono(&[4, 2]), mono(&[4, 2])));

        assert!(shift_order(mono(&[2, 3]), mono(&[2, 6])));
        assert!(!shift_order(mono(&[3, 4]), mono(&[1, 5])));
        assert!(!shift_order(mono(&[1, 5]), mono(&[3, 4])));
        assert!(shift_order(mono(&[1, 5]), mono(&[1, 5])));
        assert!(!shift_order(mono(&[1]), mono(&[1, 5])));

        for i in 0..7 {
            for j in i..7 {
                assert!(preceq(mono(&[i]), mono(&[j])));
            }
        }
        assert!(preceq(mono(&[1, 2]), mono(&[0, 1, 5])));
        assert!(preceq_exhaustive(mono(&[1, 2]), mono(&[0, 1, 5])));
        assert!(!preceq(mono(&[3, 4]), mono(&[1, 5])));
        assert!(!preceq(mono(&[1, 5]), mono(&[3, 4])));
    }

    #[test]
    fn greedy_witness_matches_exhaustive_search() {
        for m in 0..=6u32 {
            for a in 0..1u32 << m {
                for b in 0..1u32 << m {
                    let (f, g) = (Monomial::from_mask(a), Monomial::from_mask(b));
                    assert_eq!(preceq(f, g), preceq_exhaustive(f, g), "{f} vs {g}");
                }
            }
        }
    }

    #[test]
    fn preceq_is_a_partial_order() {
        let m = 5;
        let all: Vec<Monomial> = (0..1u32 << m).map(Monomial::from_mask).collect();
        for &f in &all {
            assert!(preceq(f, f));
            for &g in &all {
                if f != g && preceq(f, g) {
                    assert!(!preceq(g, f), "antisymmetry {f} {g}");
                }
                if divides_order(f, g) {
                    assert!(preceq(f, g));
                }
                if shift_order(f, g) {
                    assert!(preceq(f, g));
                }
                for &h in &all {
                    if preceq(f, g) && preceq(g, h) {
                        assert!(preceq(f, h), "transitivity {f} {g} {h}");
                    }
                }
            }
        }
    }

    #[test]
    fn decreasing_examples() {
        assert!(is_decreasing(&set(&[&[], &[0], &[1], &[0, 1]]), 2));
        assert!(!is_decreasing(&set(&[&[1]]), 2));
        let rm: BTreeSet<Monomial> = (0..1u32 << 6)
            .map(Monomial::from_mask)
            .filter(|f| f.degree() <= 3)
            .collect();
        assert!(is_decreasing(&rm, 6));
    }

    #[test]
    fn closure_examples() {
        assert_eq!(decreasing_closure(&set(&[&[1]]), 2), set(&[&[], &[0], &[1]]));
        let d = set(&[&[], &[0], &[1], &[0, 1]]);
        assert_eq!(decreasing_closure(&d, 2), d);
        assert_eq!(
            decreasing_closure(&set(&[&[1, 2]]), 3),
            set(&[&[], &[0], &[1], &[2], &[0, 1], &[0, 2], &[1, 2]])
        );
    }

    #[test]
    fn closure_agrees_with_brute_force_scan() {
        let m = 5;
        for seed in 0..200u32 {
            let a = seed.wrapping_mul(2654435761) % 32;
            let b = seed.wrapping_mul(40503) % 32;
            let gens = set(&[&Monomial::from_mask(a).vars_vec(), &Monomial::from_mask(b).vars_vec()]);
            let expected: BTreeSet<Monomial> = (0..1u32 << m)
                .map(Monomial::from_mask)
                .filter(|g| gens.iter().any(|&f| preceq(*g, f)))
                .collect();
            let got = decreasing_closure(&gens, m);
            assert_eq!(got, expected);
            assert!(is_decreasing(&got, m));
            assert_eq!(decreasing_closure(&got, m), got);
        }
    }

    #[test]
    fn violation_check_agrees_with_definition() {
        let m = 4;
        // every subset of the 16 monomials of m = 4 would be 2^16 sets; sample a
        // structured family instead: all sets given by a mask over monomials.
        for family in (0u32..1 << 16).step_by(97) {
            let s: BTreeSet<Monomial> =
                (0..16).filter(|i| family >> i & 1 == 1).map(Monomial::from_mask).collect();
            let by_def = s.iter().all(|&f| {
                (0..16u32)
                    .map(Monomial::from_mask)
                    .all(|g| !preceq(g, f) || s.contains(&g))
            });
            assert_eq!(is_decreasing(&s, m), by_def);
        }
    }
}

//! Minkowski sums of monomial orbits and the pair sets they generate.
//!
//! For two maximum-degree monomials `f, g` sharing `h = gcd(f, g)` of degree
//! `r - 2`, the codewords of weight `1.5 w_min` attached to the pair are the
//! products `H · S` with `H` in the orbit of `h` and `S` in the sum of the
//! orbits of the two coprime quadratic parts `f/h` and `g/h`.

use std::collections::{BTreeMap, HashMap, HashSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{pow2, Error, Result};
use crate::lta::{orbit, orbit_exponent, GroupElement};
use crate::ring::{Evaluation, Monomial, Polynomial};

/// Two coprime degree-2 monomials, ordered so that `fpart` holds the
/// largest variable of the two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeTwoPair {
    fpart: Monomial,
    gpart: Monomial,
}

impl DegreeTwoPair {
    pub fn new(f: Monomial, g: Monomial) -> Result<Self> {
        for p in [f, g] {
            if p.degree() != 2 {
                return Err(Error::NotDegreeTwo(p));
            }
        }
        if !f.gcd(g).is_one() {
            return Err(Error::NotCoprime(f, g));
        }
        let (fpart, gpart) = if f.max_var() > g.max_var() { (f, g) } else { (g, f) };
        Ok(DegreeTwoPair { fpart, gpart })
    }

    pub fn fpart(&self) -> Monomial {
        self.fpart
    }

    pub fn gpart(&self) -> Monomial {
        self.gpart
    }

    /// `(i_1, i_2, j_1, j_2)` with `i_1 < i_2`, `j_1 < j_2`, `i_2 > j_2`.
    pub fn indices(&self) -> (u32, u32, u32, u32) {
        let f = self.fpart.vars_vec();
        let g = self.gpart.vars_vec();
        (f[0], f[1], g[0], g[1])
    }
}

/// The degree of collision `α ∈ {0, 1, 2}` of a canonical pair:
/// the number of interleavings of the lower index of `fpart` below `gpart`.
pub fn collision_degree(p: &DegreeTwoPair) -> u32 {
    let (i1, _, j1, j2) = p.indices();
    if i1 > j2 {
        0
    } else if i1 > j1 {
        1
    } else {
        2
    }
}

/// `|LTA·f + LTA·g| = |LTA·f| · |LTA·g| / 2^α` for coprime quadratics.
pub fn minkowski_cardinality(f: Monomial, g: Monomial) -> Result<u128> {
    let p = DegreeTwoPair::new(f, g)?;
    let exp = orbit_exponent(f) + orbit_exponent(g) - collision_degree(&p);
    pow2(exp)
}

/// `{a + b : a ∈ A, b ∈ B}`, deduplicated.
pub fn minkowski_sum_set(a: &[Polynomial], b: &[Polynomial]) -> HashSet<Polynomial> {
    a.par_iter()
        .fold(HashSet::new, |mut acc, p| {
            acc.extend(b.iter().map(|q| p.add(q)));
            acc
        })
        .reduce(HashSet::new, |mut x, y| {
            x.extend(y);
            x
        })
}

/// The three factors `(h, f/h, g/h)` of a qualifying pair.
fn split_pair(f: Monomial, g: Monomial) -> Result<(Monomial, Monomial, Monomial)> {
    let bad = |reason: &str| Error::BadPair {
        f,
        g,
        reason: reason.to_string(),
    };
    if f.degree() != g.degree() {
        return Err(bad("degrees differ"));
    }
    if f.degree() < 2 {
        return Err(bad("degree below 2"));
    }
    let h = f.gcd(g);
    if h.degree() + 2 != f.degree() {
        return Err(bad("gcd does not have degree r - 2"));
    }
    Ok((h, f.divide(h)?, g.divide(h)?))
}

/// Orbits `(LTA_h·h, LTA_f·f/h, LTA_g·g/h)` of a qualifying pair.
fn pair_factors(f: Monomial, g: Monomial, m: u32) -> Result<(Vec<Polynomial>, Vec<Polynomial>, Vec<Polynomial>)> {
    let (h, fh, gh) = split_pair(f, g)?;
    Ok((orbit(h, h, m)?, orbit(f, fh, m)?, orbit(g, gh, m)?))
}

/// `LTA_h·h · (LTA_f·f/h + LTA_g·g/h)` as polynomials.
pub fn pair_set(f: Monomial, g: Monomial, m: u32) -> Result<HashSet<Polynomial>> {
    let (hs, fs, gs) = pair_factors(f, g, m)?;
    let sums: Vec<Polynomial> = minkowski_sum_set(&fs, &gs).into_iter().collect();
    Ok(hs
        .par_iter()
        .flat_map_iter(|hp| sums.iter().map(move |s| hp.mul(s)))
        .collect())
}

/// The pair set as evaluation vectors. Uses `ev(H·S) = ev(H) ∧ ev(S)`, which
/// avoids multiplying polynomials and is much faster at larger `m`.
pub fn pair_set_evaluations(f: Monomial, g: Monomial, m: u32) -> Result<HashSet<Evaluation>> {
    let (hs, fs, gs) = pair_factors(f, g, m)?;
    let sums: Vec<Evaluation> = minkowski_sum_set(&fs, &gs)
        .into_iter()
        .map(|s| s.evaluate(m))
        .collect();
    Ok(hs
        .par_iter()
        .flat_map_iter(|hp| {
            let he = hp.evaluate(m);
            sums.iter().map(move |s| he.and(s))
        })
        .collect())
}

/// Groups `orbit(f2) × orbit(g2)` by `P + Q` and returns the histogram
/// `class size → number of classes`.
pub fn collision_classes(f2: Monomial, g2: Monomial, m: u32) -> Result<BTreeMap<u64, u64>> {
    DegreeTwoPair::new(f2, g2)?;
    let fs = orbit(f2, f2, m)?;
    let gs = orbit(g2, g2, m)?;
    let mut classes: HashMap<Polynomial, u64> = HashMap::new();
    for p in &fs {
        for q in &gs {
            *classes.entry(p.add(q)).or_default() += 1;
        }
    }
    let mut hist = BTreeMap::new();
    for size in classes.into_values() {
        *hist.entry(size).or_default() += 1;
    }
    Ok(hist)
}

/// Outcome of [`full_group_sample_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub trials: u64,
    pub failures: u64,
    pub pair_set_size: usize,
    /// First sampled polynomial that fell outside the pair set, if any.
    pub first_failure: Option<String>,
}

impl SampleReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Draws independent uniform elements of the full group `LTA(m,2)` for each
/// of the three factors `h`, `f/h`, `g/h`, forms `A(h)·(B(f/h) + C(g/h))`
/// and checks membership in [`pair_set`]. This probes that enlarging the
/// acting groups to the full group produces nothing new.
pub fn full_group_sample_check(f: Monomial, g: Monomial, m: u32, trials: u64, seed: u64) -> Result<SampleReport> {
    let (h, fh, gh) = split_pair(f, g)?;
    let set = pair_set(f, g, m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    let mut first_failure = None;
    for _ in 0..trials {
        let a = GroupElement::random(m, &mut rng);
        let b = GroupElement::random(m, &mut rng);
        let c = GroupElement::random(m, &mut rng);
        let p = a.apply(h).mul(&b.apply(fh).add(&c.apply(gh)));
        if !set.contains(&p) {
            failures += 1;
            first_failure.get_or_insert_with(|| p.to_string());
        }
    }
    Ok(SampleReport {
        trials,
        failures,
        pair_set_size: set.len(),
        first_failure,
    })
}

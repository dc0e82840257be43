//! Decreasing monomial codes: construction, validation and derived data.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::order::{decreasing_closure, find_violation};
use crate::ring::{Evaluation, Monomial, Polynomial, MAX_VARS};

/// A decreasing monomial code `C(I)` of length `2^m`.
///
/// Immutable once built. The monomials are kept sorted by descending row
/// index of the polar transform (ascending mask).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    m: u32,
    monomials: Vec<Monomial>,
    r: u32,
}

/// Result of ingesting a row-index list.
#[derive(Debug, Clone)]
pub struct Ingested {
    pub spec: CodeSpec,
    /// Rows added by the decreasing closure (empty in strict mode).
    pub added_rows: Vec<u32>,
}

/// Two maximum-degree monomials whose gcd has degree `r - 2`.
///
/// `f` is the one with the larger row index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialPair {
    pub f: Monomial,
    pub g: Monomial,
    pub h: Monomial,
}

fn check_m(m: u32) -> Result<()> {
    if m == 0 || m > MAX_VARS {
        return Err(Error::InvalidParameter(format!("m must be in 1..={MAX_VARS}, got {m}")));
    }
    Ok(())
}

impl CodeSpec {
    /// Builds a code from its information set `A` (row indices of the polar
    /// transform). In strict mode a non-decreasing set is rejected with a
    /// witness; otherwise it is replaced by its decreasing closure.
    pub fn from_row_indices(rows: &[u32], m: u32, strict: bool) -> Result<Ingested> {
        check_m(m)?;
        let mut seen = BTreeSet::new();
        for &row in rows {
            if u64::from(row) >= 1u64 << m {
                return Err(Error::IndexOutOfRange { row: row.into(), m });
            }
            if !seen.insert(row) {
                return Err(Error::DuplicateRow(row));
            }
        }
        let set: BTreeSet<Monomial> = seen.iter().map(|&r| Monomial::from_row_index(r, m)).collect();
        let (spec, added) = Self::from_set(set, m, strict)?;
        let added_rows = added.iter().map(|f| f.row_index(m)).collect();
        Ok(Ingested { spec, added_rows })
    }

    /// Builds a code from generating monomials. Returns the monomials the
    /// closure had to add (always empty in strict mode).
    pub fn from_monomials<I>(monomials: I, m: u32, strict: bool) -> Result<(CodeSpec, Vec<Monomial>)>
    where
        I: IntoIterator<Item = Monomial>,
    {
        check_m(m)?;
        let set: BTreeSet<Monomial> = monomials.into_iter().collect();
        if let Some(f) = set.iter().find(|f| f.span() > m) {
            return Err(Error::InvalidParameter(format!("{f} uses a variable outside 0..{m}")));
        }
        Self::from_set(set, m, strict)
    }

    fn from_set(set: BTreeSet<Monomial>, m: u32, strict: bool) -> Result<(CodeSpec, Vec<Monomial>)> {
        if set.is_empty() {
            return Err(Error::EmptyCode);
        }
        let (set, added) = match find_violation(&set, m) {
            None => (set, Vec::new()),
            Some((lower, upper)) if strict => return Err(Error::NotDecreasing { lower, upper }),
            Some(_) => {
                let closed = decreasing_closure(&set, m);
                let added = closed.difference(&set).copied().collect();
                (closed, added)
            }
        };
        let r = set.iter().map(|f| f.degree()).max().unwrap_or(0);
        Ok((
            CodeSpec {
                m,
                monomials: set.into_iter().collect(),
                r,
            },
            added,
        ))
    }

    /// The Reed–Muller code `R(r, m)`: every monomial of degree at most `r`.
    pub fn reed_muller(r: u32, m: u32) -> Result<CodeSpec> {
        check_m(m)?;
        if r > m {
            return Err(Error::InvalidParameter(format!("RM order r = {r} exceeds m = {m}")));
        }
        let monomials = (0..1u32 << m)
            .map(Monomial::from_mask)
            .filter(|f| f.degree() <= r)
            .collect();
        Ok(CodeSpec { m, monomials, r })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Code length `N = 2^m`.
    pub fn length(&self) -> u64 {
        1 << self.m
    }

    /// Dimension `K = |I|`.
    pub fn dimension(&self) -> usize {
        self.monomials.len()
    }

    pub fn rate(&self) -> f64 {
        self.dimension() as f64 / self.length() as f64
    }

    /// Maximum degree `r` over the generating set.
    pub fn max_degree(&self) -> u32 {
        self.r
    }

    /// Minimum distance `2^{m - r}`.
    pub fn w_min(&self) -> u64 {
        1 << (self.m - self.r)
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn contains(&self, f: Monomial) -> bool {
        self.monomials.binary_search(&f).is_ok()
    }

    /// The degree-`j` stratum `I_j`, in ascending mask order.
    pub fn stratum(&self, degree: u32) -> Vec<Monomial> {
        self.monomials.iter().copied().filter(|f| f.degree() == degree).collect()
    }

    pub fn strata(&self) -> BTreeMap<u32, Vec<Monomial>> {
        let mut out: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
        for &f in &self.monomials {
            out.entry(f.degree()).or_default().push(f);
        }
        out
    }

    /// All row indices `A`, ascending.
    pub fn row_indices(&self) -> Vec<u32> {
        let mut rows: Vec<u32> = self.monomials.iter().map(|f| f.row_index(self.m)).collect();
        rows.sort_unstable();
        rows
    }

    /// Rows of the maximum-degree monomials, `A_{m-r}`, ascending.
    pub fn max_degree_rows(&self) -> Vec<u32> {
        let mut rows: Vec<u32> = self
            .stratum(self.r)
            .iter()
            .map(|f| f.row_index(self.m))
            .collect();
        rows.sort_unstable();
        rows
    }

    /// Unordered pairs `{f, g} ⊆ I_r` with `deg gcd(f, g) = r - 2`, sorted by
    /// the row index of `f` descending, then that of `g` descending.
    pub fn max_degree_pairs(&self) -> Vec<MonomialPair> {
        if self.r < 2 {
            return Vec::new();
        }
        let mut top = self.stratum(self.r);
        // Ascending mask is descending row index.
        top.sort_unstable();
        let mut out = Vec::new();
        for (a, &f) in top.iter().enumerate() {
            for &g in &top[a + 1..] {
                let h = f.gcd(g);
                if h.degree() == self.r - 2 {
                    out.push(MonomialPair { f, g, h });
                }
            }
        }
        out
    }

    /// One evaluation row per generating monomial, in descending row-index order.
    pub fn generator_rows(&self) -> Vec<Evaluation> {
        self.monomials
            .iter()
            .map(|&f| Polynomial::from(f).evaluate(self.m))
            .collect()
    }
}

/// Parses an information-set file: decimal row indices separated by
/// whitespace or commas, with `#` starting a comment.
pub fn parse_row_list(text: &str) -> Result<Vec<u32>> {
    let mut rows = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let row = tok.parse::<u32>().map_err(|e| Error::Parse {
                line: n + 1,
                msg: format!("{tok:?}: {e}"),
            })?;
            rows.push(row);
        }
    }
    Ok(rows)
}

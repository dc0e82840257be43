//! Closed-form counts of minimum-weight and 1.5×minimum-weight codewords,
//! the core-row-set view of the same count, and the truncated union bound.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{CodeSpec, MonomialPair};
use crate::error::{pow2, Error, Result};
use crate::lta::{lambda_terms, lambda_total, orbit_cardinality};
use crate::minkowski::{collision_degree, DegreeTwoPair};
use crate::ring::Monomial;

/// Serializes exact counts as decimal strings so that 64-bit JSON consumers
/// do not truncate them.
mod decimal {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// One summand of the 1.5×w_min count: a pair of maximum-degree monomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub f_row: u32,
    pub g_row: u32,
    pub f: Monomial,
    pub g: Monomial,
    pub h: Monomial,
    pub f_over_h: Monomial,
    pub g_over_h: Monomial,
    /// `λ_h(i)` for `i ∈ ind(h)`, ascending in `i`.
    pub lambda_h_terms: Vec<u32>,
    /// `λ_f(i)` for `i ∈ ind(f/h)`.
    pub lambda_f_terms: Vec<u32>,
    /// `λ_g(i)` for `i ∈ ind(g/h)`.
    pub lambda_g_terms: Vec<u32>,
    pub lambda_h: u32,
    pub lambda_f_part: u32,
    pub lambda_g_part: u32,
    pub alpha: u32,
    /// `log2(count)`.
    pub exponent: u32,
    #[serde(with = "decimal")]
    pub count: u128,
}

impl PairRecord {
    fn build(pair: &MonomialPair, m: u32, r: u32) -> Result<Self> {
        let MonomialPair { f, g, h } = *pair;
        let f_over_h = f.divide(h)?;
        let g_over_h = g.divide(h)?;
        let alpha = collision_degree(&DegreeTwoPair::new(f_over_h, g_over_h)?);
        let lambda_h = lambda_total(h, h);
        let lambda_f_part = lambda_total(f, f_over_h);
        let lambda_g_part = lambda_total(g, g_over_h);
        let exponent = r + 2 + lambda_h + lambda_f_part + lambda_g_part - alpha;
        Ok(PairRecord {
            f_row: f.row_index(m),
            g_row: g.row_index(m),
            f,
            g,
            h,
            f_over_h,
            g_over_h,
            lambda_h_terms: lambda_terms(h, h),
            lambda_f_terms: lambda_terms(f, f_over_h),
            lambda_g_terms: lambda_terms(g, g_over_h),
            lambda_h,
            lambda_f_part,
            lambda_g_part,
            alpha,
            exponent,
            count: pow2(exponent)?,
        })
    }
}

/// Counts of codewords of weight `w_min` and `1.5·w_min`, with the
/// per-pair breakdown of the latter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub m: u32,
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(rename = "K")]
    pub k: usize,
    pub r: u32,
    pub wmin: u64,
    #[serde(rename = "A_wmin", with = "decimal")]
    pub a_wmin: u128,
    #[serde(rename = "A_1p5wmin", with = "decimal")]
    pub a_1p5wmin: u128,
    pub pairs: Vec<PairRecord>,
}

impl WeightReport {
    /// `1.5·w_min`, or `None` when `w_min` is odd (only for `r = m`).
    pub fn w_1p5(&self) -> Option<u64> {
        self.wmin.is_multiple_of(2).then_some(self.wmin / 2 * 3)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })
    }

    /// Summary lines followed by an aligned per-pair table.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "N = {}, K = {}, r = {}", self.n, self.k, self.r);
        let _ = writeln!(out, "w_min = {}", self.wmin);
        let _ = writeln!(out, "A_wmin = {}", self.a_wmin);
        let _ = writeln!(out, "A_1.5wmin = {}", self.a_1p5wmin);
        if self.pairs.is_empty() {
            return out;
        }
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        let header = ["f_row", "g_row", "h", "f/h", "g/h", "lambda_h", "lambda_f", "lambda_g", "alpha", "count"];
        let rows: Vec<[String; 10]> = self
            .pairs
            .iter()
            .map(|p| {
                [
                    p.f_row.to_string(),
                    p.g_row.to_string(),
                    p.h.to_string(),
                    p.f_over_h.to_string(),
                    p.g_over_h.to_string(),
                    join(&p.lambda_h_terms),
                    join(&p.lambda_f_terms),
                    join(&p.lambda_g_terms),
                    p.alpha.to_string(),
                    p.count.to_string(),
                ]
            })
            .collect();
        let mut widths = header.map(str::len);
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &mut dyn Iterator<Item = &str>| {
            cells
                .zip(widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        out.push('\n');
        let _ = writeln!(out, "{}", line(&mut header.iter().copied()));
        for row in &rows {
            let _ = writeln!(out, "{}", line(&mut row.iter().map(String::as_str)));
        }
        let _ = writeln!(out, "total = {}", self.a_1p5wmin);
        out
    }
}

fn checked_sum<I: IntoIterator<Item = u128>>(it: I) -> Result<u128> {
    it.into_iter()
        .try_fold(0u128, |acc, x| acc.checked_add(x))
        .ok_or(Error::Overflow(128))
}

/// `A_{w_min} = Σ_{f ∈ I_r} 2^{deg f + |λ_f|}`.
pub fn count_min_weight(spec: &CodeSpec) -> Result<u128> {
    let sizes = spec
        .stratum(spec.max_degree())
        .into_iter()
        .map(orbit_cardinality)
        .collect::<Result<Vec<_>>>()?;
    checked_sum(sizes)
}

/// `A_{1.5 w_min}` as a sum over pairs `f, g ∈ I_r` whose gcd has degree
/// `r - 2`, each contributing `2^{r + 2 + |λ_h| + |λ_f(f/h)| + |λ_g(g/h)| - α}`.
///
/// Codes with `r < 2` have no such pairs and a zero count. The full space
/// (`r = m`) is rejected, since `1.5 w_min` is then not an integer.
pub fn count_1p5(spec: &CodeSpec) -> Result<WeightReport> {
    let (m, r) = (spec.m(), spec.max_degree());
    if r == m {
        return Err(Error::InvalidParameter(format!(
            "the 1.5 w_min count needs r < m, got r = m = {m}"
        )));
    }
    let pairs = spec
        .max_degree_pairs()
        .par_iter()
        .map(|p| PairRecord::build(p, m, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightReport {
        m,
        n: spec.length(),
        k: spec.dimension(),
        r,
        wmin: spec.w_min(),
        a_wmin: count_min_weight(spec)?,
        a_1p5wmin: checked_sum(pairs.iter().map(|p| p.count))?,
        pairs,
    })
}

fn require_max_degree_row(spec: &CodeSpec, row: u32) -> Result<()> {
    if spec.max_degree_rows().binary_search(&row).is_err() {
        return Err(Error::RowNotMaxDegree(row));
    }
    Ok(())
}

/// `K_f̄`: rows `i > f̄` of the information set whose binary support has
/// exactly one index outside that of `f̄`.
pub fn core_row_set(spec: &CodeSpec, f_row: u32) -> Result<BTreeSet<u32>> {
    require_max_degree_row(spec, f_row)?;
    Ok(spec
        .row_indices()
        .into_iter()
        .filter(|&i| i > f_row && (i & !f_row).count_ones() == 1)
        .collect())
}

/// The coset-view count `2^{|K_f̄| + |K_ḡ| - (r - 2) - |K_f̄ ∩ K_ḡ|}` for
/// two maximum-degree rows whose supports differ in exactly two indices.
pub fn count_pair_coset(spec: &CodeSpec, f_row: u32, g_row: u32) -> Result<u128> {
    let m = spec.m();
    let (f, g) = (Monomial::from_row_index(f_row, m), Monomial::from_row_index(g_row, m));
    let kf = core_row_set(spec, f_row)?;
    let kg = core_row_set(spec, g_row)?;
    if (g_row & !f_row).count_ones() != 2 {
        return Err(Error::BadPair {
            f,
            g,
            reason: "row supports must differ in exactly two indices".into(),
        });
    }
    let r = spec.max_degree() as i64;
    let common = kf.intersection(&kg).count() as i64;
    let exp = kf.len() as i64 + kg.len() as i64 - (r - 2) - common;
    let exp = u32::try_from(exp).map_err(|_| Error::BadPair {
        f,
        g,
        reason: format!("negative exponent {exp}"),
    })?;
    pow2(exp)
}

/// `Q(x) = P(Z > x)` for a standard normal `Z`.
pub fn q_function(x: f64) -> f64 {
    0.5 * libm::erfc(x / std::f64::consts::SQRT_2)
}

/// The union bound on ML block error probability over BPSK/AWGN, truncated
/// to the weights `w_min` and `1.5·w_min`.
pub fn union_bound(report: &WeightReport, rate: f64, ebn0_db: &[f64]) -> Result<Vec<f64>> {
    if !(rate > 0.0 && rate <= 1.0) {
        return Err(Error::InvalidParameter(format!("rate must be in (0, 1], got {rate}")));
    }
    let mut terms = vec![(report.wmin as f64, report.a_wmin as f64)];
    if let Some(w) = report.w_1p5() {
        terms.push((w as f64, report.a_1p5wmin as f64));
    }
    Ok(ebn0_db
        .iter()
        .map(|&db| {
            let ebn0 = 10f64.powf(db / 10.0);
            terms
                .iter()
                .filter(|(_, a)| *a != 0.0)
                .map(|&(w, a)| a * q_function((2.0 * w * rate * ebn0).sqrt()))
                .fold(0.0, |acc, t| acc + t)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(rows: &[u32], m: u32) -> CodeSpec {
        CodeSpec::from_row_indices(rows, m, false).unwrap().spec
    }

    #[test]
    fn min_weight_examples() {
        let m8 = CodeSpec::from_monomials(
            [&[0, 1, 2, 3][..], &[0, 1, 2, 4], &[0, 1, 2, 5], &[0, 1, 3, 4]]
                .iter()
                .map(|v| Monomial::from_vars(v.iter().copied())),
            8,
            false,
        )
        .unwrap()
        .0;
        assert_eq!(count_min_weight(&m8).unwrap(), 176);
        assert_eq!(count_min_weight(&CodeSpec::reed_muller(3, 7).unwrap()).unwrap(), 94488);
    }

    #[test]
    fn one_five_small_cases() {
        let rep = count_1p5(&code(&[112, 104], 7)).unwrap();
        assert_eq!((rep.a_wmin, rep.a_1p5wmin), (48, 0));
        let rep = count_1p5(&CodeSpec::reed_muller(0, 5).unwrap()).unwrap();
        assert_eq!(rep.a_1p5wmin, 0);
        assert!(rep.pairs.is_empty());
        assert!(count_1p5(&CodeSpec::reed_muller(3, 3).unwrap()).is_err());
    }

    #[test]
    fn record_exponent_matches_count() {
        let rep = count_1p5(&code(&[112, 104, 100, 98, 97, 88, 84], 7)).unwrap();
        for p in &rep.pairs {
            assert_eq!(p.count, 1u128 << p.exponent);
            assert_eq!(p.lambda_h, p.lambda_h_terms.iter().sum::<u32>());
        }
    }

    #[test]
    fn json_round_trip() {
        let rep = count_1p5(&code(&[112, 104, 100, 98, 97, 88, 84], 7)).unwrap();
        let text = rep.to_json();
        assert!(text.contains("\"A_1p5wmin\": \"5376\""));
        let back = WeightReport::from_json(&text).unwrap();
        assert_eq!(back, rep);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn core_row_set_errors() {
        let spec = code(&[112, 104, 100, 98, 97, 88, 84], 7);
        assert_eq!(core_row_set(&spec, 127), Err(Error::RowNotMaxDegree(127)));
        assert!(matches!(count_pair_coset(&spec, 112, 104), Err(Error::BadPair { .. })));
    }

    #[test]
    fn union_bound_basics() {
        let mut rep = count_1p5(&code(&[112, 104], 7)).unwrap();
        rep.a_wmin = 0;
        let zero = union_bound(&rep, 0.5, &[0.0, 3.0]).unwrap();
        assert!(zero.iter().all(|v| v.to_bits() == 0.0f64.to_bits()));
        rep.a_wmin = 1;
        assert_eq!(union_bound(&rep, 0.5, &[f64::NEG_INFINITY]).unwrap(), vec![0.5]);
        assert!(union_bound(&rep, 0.0, &[1.0]).is_err());
        let v = union_bound(&rep, 0.5, &[2.0, 8.0]).unwrap();
        assert!(v[1] <= v[0]);
        assert!((q_function(0.0) - 0.5).abs() < 1e-15);
    }
}

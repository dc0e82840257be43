//! Brute-force ground truth: exhaustive weight spectra, explicit
//! minimum-weight codeword sets, and the census of `1.5·w_min` codewords
//! obtained as sums of two minimum-weight codewords.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::CodeSpec;
use crate::error::{Error, Result};
use crate::lta::{orbit, orbit_cardinality};
use crate::ring::Evaluation;

/// Default largest dimension for exhaustive enumeration.
pub const DEFAULT_K_LIMIT: usize = 24;
/// Largest `m` accepted by exhaustive enumeration (`N ≤ 2048`).
pub const MAX_ORACLE_M: u32 = 11;
/// Default cap on the number of explicit minimum-weight codewords.
pub const DEFAULT_ORBIT_CAP: u128 = 1 << 20;
/// Default cap on the number of pairs examined by the census.
pub const DEFAULT_PAIR_CAP: u128 = 1 << 31;

/// Exact weight distribution of a code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(rename = "K")]
    pub k: usize,
    /// Weight → number of codewords, keyed and valued as decimal strings
    /// in JSON.
    #[serde(with = "counts")]
    pub counts: BTreeMap<u64, u128>,
}

mod counts {
    use std::collections::BTreeMap;

    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &BTreeMap<u64, u128>, s: S) -> Result<S::Ok, S::Error> {
        // JSON object keys sort as strings; parsing restores numeric order.
        let as_str: Vec<(String, String)> = v.iter().map(|(w, c)| (w.to_string(), c.to_string())).collect();
        let mut map = serde_json::Map::new();
        for (w, c) in as_str {
            map.insert(w, serde_json::Value::String(c));
        }
        map.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u64, u128>, D::Error> {
        let raw: BTreeMap<String, String> = BTreeMap::deserialize(d)?;
        raw.into_iter()
            .map(|(w, c)| Ok((w.parse().map_err(D::Error::custom)?, c.parse().map_err(D::Error::custom)?)))
            .collect()
    }
}

impl Spectrum {
    pub fn count(&self, weight: u64) -> u128 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.values().sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spectrum serialization cannot fail")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,count\n");
        for (w, c) in &self.counts {
            let _ = writeln!(out, "{w},{c}");
        }
        out
    }
}

fn check_enumerable(spec: &CodeSpec, k_limit: usize) -> Result<()> {
    if spec.dimension() > k_limit {
        return Err(Error::TooLarge {
            what: "code dimension",
            size: spec.dimension() as u128,
            limit: k_limit as u128,
        });
    }
    if spec.m() > MAX_ORACLE_M {
        return Err(Error::TooLarge {
            what: "code length",
            size: spec.length().into(),
            limit: 1 << MAX_ORACLE_M,
        });
    }
    Ok(())
}

/// Visits every codeword in Gray-code order. The message space is split
/// into contiguous segments processed in parallel; `init` builds one
/// accumulator per segment and `merge` combines them.
fn for_each_codeword<T, I, V, M>(spec: &CodeSpec, init: I, visit: V, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    V: Fn(&mut T, &Evaluation) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    let rows = spec.generator_rows();
    let k = rows.len() as u32;
    let total = 1u64 << k;
    let seg_bits = (k.min(8)).min(rayon::current_num_threads().next_power_of_two().trailing_zeros() + 2);
    let segments = 1u64 << seg_bits;
    let len = total / segments;
    (0..segments)
        .into_par_iter()
        .fold(&init, |mut acc, s| {
            let start = s * len;
            let mut word = Evaluation::zeros(spec.m());
            let gray = start ^ (start >> 1);
            for (b, row) in rows.iter().enumerate() {
                if gray >> b & 1 == 1 {
                    word.xor_assign(row);
                }
            }
            visit(&mut acc, &word);
            for i in start + 1..start + len {
                word.xor_assign(&rows[i.trailing_zeros() as usize]);
                visit(&mut acc, &word);
            }
            acc
        })
        .reduce(&init, &merge)
}

/// The weight distribution over all `2^K` codewords.
pub fn brute_force_spectrum(spec: &CodeSpec, k_limit: usize) -> Result<Spectrum> {
    check_enumerable(spec, k_limit)?;
    let n = spec.length() as usize;
    let hist = for_each_codeword(
        spec,
        || vec![0u64; n + 1],
        |h, w| h[w.weight() as usize] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    );
    Ok(Spectrum {
        n: spec.length(),
        k: spec.dimension(),
        counts: hist
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .map(|(w, c)| (w as u64, c.into()))
            .collect(),
    })
}

/// Every codeword of the given weight, by exhaustive enumeration.
pub fn codewords_of_weight(spec: &CodeSpec, weight: u64, k_limit: usize) -> Result<HashSet<Evaluation>> {
    check_enumerable(spec, k_limit)?;
    Ok(for_each_codeword(
        spec,
        HashSet::new,
        |set, w| {
            if u64::from(w.weight()) == weight {
                set.insert(w.clone());
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    ))
}

/// The union of the orbits `LTA_f · f` over `f ∈ I_r`, as evaluations.
/// Fails when the number of codewords would exceed `cap`.
pub fn min_weight_set(spec: &CodeSpec, cap: u128) -> Result<HashSet<Evaluation>> {
    let top = spec.stratum(spec.max_degree());
    let mut size = 0u128;
    for &f in &top {
        size = size.saturating_add(orbit_cardinality(f).unwrap_or(u128::MAX));
    }
    if size > cap {
        return Err(Error::TooLarge {
            what: "minimum-weight codeword set",
            size,
            limit: cap,
        });
    }
    let m = spec.m();
    let per_monomial = top
        .par_iter()
        .map(|&f| Ok(orbit(f, f, m)?.iter().map(|p| p.evaluate(m)).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    Ok(per_monomial.into_iter().flatten().collect())
}

/// Result of [`one_five_census`].
#[derive(Debug, Clone)]
pub struct Census {
    pub min_weight_words: usize,
    pub pairs_examined: u128,
    pub words: HashSet<Evaluation>,
}

impl Census {
    pub fn count(&self) -> u128 {
        self.words.len() as u128
    }
}

/// Sums of two distinct minimum-weight codewords that have weight exactly
/// `1.5·w_min`, deduplicated.
pub fn one_five_census(spec: &CodeSpec, orbit_cap: u128, pair_cap: u128) -> Result<Census> {
    let words: Vec<Evaluation> = min_weight_set(spec, orbit_cap)?.into_iter().collect();
    let n = words.len() as u128;
    let pairs = n * n.saturating_sub(1) / 2;
    if pairs > pair_cap {
        return Err(Error::TooLarge {
            what: "census pair count",
            size: pairs,
            limit: pair_cap,
        });
    }
    let target = (spec.w_min() * 3 / 2) as u32;
    let found = (0..words.len())
        .into_par_iter()
        .fold(HashSet::new, |mut acc, i| {
            for j in i + 1..words.len() {
                if words[i].xor_weight(&words[j]) == target {
                    acc.insert(words[i].xor(&words[j]));
                }
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(Census {
        min_weight_words: words.len(),
        pairs_examined: pairs,
        words: if spec.w_min().is_multiple_of(2) { found } else { HashSet::new() },
    })
}

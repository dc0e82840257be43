//! Helpers shared by the integration tests: fixture loading, random
//! decreasing codes, and reference implementations written independently of
//! the library.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use dmcodes::order::decreasing_closure;
use dmcodes::{parse_row_list, CodeSpec, Monomial};
use rand::Rng;

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

/// Loads a decreasing A-file from the repository `data/` directory.
pub fn load_code(name: &str, m: u32) -> CodeSpec {
    let text = std::fs::read_to_string(data_path(name)).expect("fixture file");
    let rows = parse_row_list(&text).expect("fixture parses");
    CodeSpec::from_row_indices(&rows, m, true).expect("fixture is decreasing").spec
}

/// The code generated by the decreasing closure of the given row indices.
pub fn closure_code(rows: &[u32], m: u32) -> CodeSpec {
    CodeSpec::from_row_indices(rows, m, false).unwrap().spec
}

pub fn mono(vars: &[u32]) -> Monomial {
    Monomial::from_vars(vars.iter().copied())
}

/// A random decreasing code with `2 ≤ r < m` and dimension at most `k_max`,
/// obtained as the closure of one to three random monomials.
pub fn random_decreasing_code<R: Rng>(rng: &mut R, m: u32, k_max: usize) -> CodeSpec {
    loop {
        let n_gens = rng.gen_range(1..=3);
        let gens: BTreeSet<Monomial> = (0..n_gens)
            .map(|_| Monomial::from_mask(rng.gen_range(0..1u32 << m)))
            .collect();
        let closed = decreasing_closure(&gens, m);
        let r = closed.iter().map(|f| f.degree()).max().unwrap();
        if closed.len() > k_max || r < 2 || r >= m {
            continue;
        }
        return CodeSpec::from_monomials(closed, m, true).unwrap().0;
    }
}

/// Reference `Q(x)` computed without any error-function library: a power
/// series for small arguments and a Lentz continued fraction for the tail.
pub fn q_reference(x: f64) -> f64 {
    if x < 0.0 {
        return 1.0 - q_reference(-x);
    }
    let pdf = (-0.5 * x * x).exp() / (2.0 * std::f64::consts::PI).sqrt();
    if x < 3.0 {
        // Φ(x) - 1/2 = pdf(x) · Σ x^{2n+1} / (1·3·5···(2n+1))
        let mut term = x;
        let mut sum = x;
        let mut n = 0.0;
        while term.abs() > 1e-20 * sum.abs() {
            n += 1.0;
            term *= x * x / (2.0 * n + 1.0);
            sum += term;
        }
        0.5 - pdf * sum
    } else {
        // Q(x) = pdf(x) / (x + 1/(x + 2/(x + 3/(x + ...))))
        let tiny = 1e-300;
        let mut f = x;
        let mut c = x;
        let mut d = 0.0;
        for k in 1..500 {
            let a = k as f64;
            d = x + a * d;
            d = if d.abs() < tiny { tiny } else { d };
            c = x + a / c;
            c = if c.abs() < tiny { tiny } else { c };
            d = 1.0 / d;
            let delta = c * d;
            f *= delta;
            if (delta - 1.0).abs() < 1e-16 {
                break;
            }
        }
        pdf / f
    }
}

/// Line-by-line port of the reference enumeration script. Inputs
/// are the sorted information set `A` and `n = log2 N`; output is
/// `([w_min, 1.5 w_min], [A_wmin, A_1.5wmin])`. Indices are 1-based as in
/// the original.
pub fn reference_script(a: &[u32], n: u32) -> ([f64; 2], [u128; 2]) {
    let zeros = |x: u32| (0..n).filter(|b| x >> b & 1 == 0).count() as u32;
    let r = a.iter().map(|&x| zeros(x)).max().unwrap();
    let mut sorted = a.to_vec();
    sorted.sort_unstable();
    let amr: Vec<u32> = sorted.iter().copied().filter(|&x| zeros(x) == r).collect();
    let w1 = 2f64.powi((n - r) as i32);
    let w = [w1, 1.5 * w1];
    let mut a_w = [0u128; 2];
    // find(~(reverse(dec2bin(i,n))-'0')): 1-based positions of zero bits.
    let find = |x: u32| -> Vec<u32> { (0..n).filter(|b| x >> b & 1 == 0).map(|b| b + 1).collect() };
    let lambda = |f: &[u32], g: &[u32]| -> i64 {
        g.iter().map(|&i| (1..i).filter(|j| !f.contains(j)).count() as i64).sum()
    };
    let mut amr_sub = amr.clone();
    for &i in &amr {
        let f = find(i);
        a_w[0] += 1u128 << (r as i64 + lambda(&f, &f));
        amr_sub.retain(|&x| x != i);
        for &j in &amr_sub {
            let g = find(j);
            let h: Vec<u32> = f.iter().copied().filter(|x| g.contains(x)).collect();
            if h.len() as u32 + 2 == r {
                let foh: Vec<u32> = f.iter().copied().filter(|x| !h.contains(x)).collect();
                let goh: Vec<u32> = g.iter().copied().filter(|x| !h.contains(x)).collect();
                let alpha = i64::from(foh[1] > goh[1] && goh[1] > foh[0]) + i64::from(goh[0] > foh[0]);
                let e = r as i64 + 2 + lambda(&h, &h) + lambda(&f, &foh) + lambda(&g, &goh) - alpha;
                a_w[1] += 1u128 << e;
            }
        }
    }
    (w, a_w)
}

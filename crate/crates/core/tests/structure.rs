//! Structural properties tying the closed forms to explicit codeword sets.

mod common;

use std::collections::HashSet;

use common::{closure_code, load_code, mono, q_reference, random_decreasing_code};
use dmcodes::minkowski::pair_set_evaluations;
use dmcodes::oracle::{codewords_of_weight, DEFAULT_K_LIMIT, DEFAULT_ORBIT_CAP, DEFAULT_PAIR_CAP};
use dmcodes::{
    brute_force_spectrum, count_1p5, count_min_weight, full_group_sample_check, min_weight_set, one_five_census,
    orbit, union_bound, CodeSpec, Evaluation,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Union of the pair sets of a code, checking pairwise disjointness.
fn union_of_pair_sets(spec: &CodeSpec) -> HashSet<Evaluation> {
    let mut union = HashSet::new();
    for p in spec.max_degree_pairs() {
        let set = pair_set_evaluations(p.f, p.g, spec.m()).unwrap();
        let before = union.len();
        union.extend(set.iter().cloned());
        assert_eq!(union.len(), before + set.len(), "pair sets overlap at {} {}", p.f, p.g);
    }
    union
}

#[test]
fn pair_sets_partition_the_polar_census() {
    let spec = load_code("polar_128_64.txt", 7);
    let union = union_of_pair_sets(&spec);
    assert_eq!(union.len(), 5376);
    let census = one_five_census(&spec, DEFAULT_ORBIT_CAP, DEFAULT_PAIR_CAP).unwrap();
    assert_eq!(census.words, union);
}

#[test]
fn pair_sets_match_closed_form_on_random_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut checked = 0;
    while checked < 60 {
        let spec = random_decreasing_code(&mut rng, 4 + checked % 4, usize::MAX);
        let rep = count_1p5(&spec).unwrap();
        // Materializing tens of millions of words adds nothing over smaller codes.
        if rep.a_1p5wmin > 1 << 17 {
            continue;
        }
        checked += 1;
        assert_eq!(union_of_pair_sets(&spec).len() as u128, rep.a_1p5wmin, "A = {:?}", spec.row_indices());
    }
}

#[test]
fn min_weight_orbits_are_disjoint() {
    let codes = [
        load_code("polar_128_64.txt", 7),
        CodeSpec::from_monomials(
            [mono(&[0, 1, 2, 3]), mono(&[0, 1, 2, 4]), mono(&[0, 1, 2, 5]), mono(&[0, 1, 3, 4])],
            8,
            false,
        )
        .unwrap()
        .0,
    ];
    for spec in &codes {
        let m = spec.m();
        let total: usize = spec
            .stratum(spec.max_degree())
            .iter()
            .map(|&f| orbit(f, f, m).unwrap().len())
            .sum();
        let set = min_weight_set(spec, DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(set.len(), total);
        assert_eq!(set.len() as u128, count_min_weight(spec).unwrap());
        assert!(set.iter().all(|e| u64::from(e.weight()) == spec.w_min()));
    }
}

#[test]
fn full_group_sampling_stays_in_pair_sets() {
    for (f, g) in [
        (mono(&[0, 1, 2, 4]), mono(&[0, 1, 3, 5])),
        (mono(&[1, 2, 3, 4]), mono(&[0, 1, 3, 5])),
    ] {
        let report = full_group_sample_check(f, g, 7, 1000, 42).unwrap();
        assert_eq!(report.failures, 0, "{report:?}");
    }
}

#[test]
fn counts_depend_only_on_top_degree() {
    let full = load_code("polar_128_64.txt", 7);
    let closed = closure_code(&[112, 104, 100, 98, 97, 88, 84], 7);
    let mut rm_plus = CodeSpec::reed_muller(3, 7).unwrap().monomials().to_vec();
    rm_plus.extend(full.stratum(4));
    let (rm_plus, _) = CodeSpec::from_monomials(rm_plus, 7, true).unwrap();
    assert!(closed.dimension() < full.dimension() && full.dimension() < rm_plus.dimension());
    let reports: Vec<_> = [&full, &closed, &rm_plus].iter().map(|s| count_1p5(s).unwrap()).collect();
    for r in &reports {
        assert_eq!((r.a_wmin, r.a_1p5wmin), (688, 5376));
        assert_eq!(r.pairs, reports[0].pairs);
    }
}

#[test]
fn oracle_agrees_with_closed_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut nonzero = 0;
    for i in 0..150 {
        let spec = random_decreasing_code(&mut rng, 4 + i % 3, 20);
        let rep = count_1p5(&spec).unwrap();
        let spectrum = brute_force_spectrum(&spec, DEFAULT_K_LIMIT).unwrap();
        let n = spec.length();
        assert_eq!(spectrum.total(), 1 << spec.dimension());
        assert_eq!(spectrum.count(0), 1);
        for (&w, &c) in &spectrum.counts {
            assert_eq!(spectrum.count(n - w), c, "complement symmetry");
        }
        assert_eq!(spectrum.count(rep.wmin), rep.a_wmin);
        assert_eq!(spectrum.count(rep.wmin * 3 / 2), rep.a_1p5wmin);
        assert!(spectrum.counts.keys().all(|&w| w == 0 || w >= rep.wmin));
        let census = one_five_census(&spec, DEFAULT_ORBIT_CAP, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!(census.words, codewords_of_weight(&spec, rep.wmin * 3 / 2, DEFAULT_K_LIMIT).unwrap());
        let mins = min_weight_set(&spec, DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(mins, codewords_of_weight(&spec, rep.wmin, DEFAULT_K_LIMIT).unwrap());
        nonzero += usize::from(rep.a_1p5wmin > 0);
    }
    assert!(nonzero >= 20, "only {nonzero} codes had 1.5 w_min codewords");
}

#[test]
fn union_bound_matches_reference_q() {
    let spec = load_code("polar_128_64.txt", 7);
    let rep = count_1p5(&spec).unwrap();
    let rate = spec.rate();
    let grid: Vec<f64> = (0..=10).map(f64::from).collect();
    let got = union_bound(&rep, rate, &grid).unwrap();
    assert_eq!(got.len(), 11);
    for (&db, &v) in grid.iter().zip(&got) {
        let ebn0 = 10f64.powf(db / 10.0);
        let expect = 688.0 * q_reference((2.0 * 8.0 * rate * ebn0).sqrt())
            + 5376.0 * q_reference((2.0 * 12.0 * rate * ebn0).sqrt());
        assert!(((v - expect) / expect).abs() < 1e-12, "{db} dB: {v} vs {expect}");
    }
    assert!(got.windows(2).all(|w| w[1] <= w[0]));
}

#[test]
fn reference_q_is_consistent() {
    assert!((q_reference(0.0) - 0.5).abs() < 1e-16);
    // Q(1.96) ≈ 0.024997895148220435 and Q(5) ≈ 2.866515718791939e-7.
    assert!((q_reference(1.96) / 0.024997895148220435 - 1.0).abs() < 1e-13);
    assert!((q_reference(5.0) / 2.866515718791939e-7 - 1.0).abs() < 1e-13);
    assert!((q_reference(2.999) / q_reference(3.001) - 1.0).abs() < 0.01);
}

//! Exact minimum-weight and 1.5×minimum-weight codeword counts for decreasing
//! monomial codes (polar and Reed–Muller codes), together with the algebra
//! behind them and brute-force oracles to check the closed forms.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`] — monomials, polynomials in ANF, evaluation vectors;
//! * [`order`] — the monomial partial order and decreasing sets;
//! * [`code`] — decreasing monomial codes and their ingestion from row lists;
//! * [`lta`] — the lower-triangular affine group and monomial orbits;
//! * [`minkowski`] — collision degree, Minkowski sums of orbits, pair sets;
//! * [`enumerator`] — closed-form counts, core row sets, the union bound;
//! * [`oracle`] — exhaustive spectra and explicit codeword censuses.

pub mod code;
pub mod enumerator;
pub mod error;
pub mod lta;
pub mod minkowski;
pub mod oracle;
pub mod order;
pub mod ring;

pub use code::{parse_row_list, CodeSpec, Ingested, MonomialPair};
pub use enumerator::{
    core_row_set, count_1p5, count_min_weight, count_pair_coset, q_function, union_bound,
    PairRecord, WeightReport,
};
pub use error::{Error, Result};
pub use lta::{
    lambda_single, lambda_total, orbit, orbit_cardinality, subgroup_elements, GroupElement,
    SubgroupMask,
};
pub use minkowski::{
    collision_classes, collision_degree, full_group_sample_check, minkowski_cardinality,
    minkowski_sum_set, pair_set, DegreeTwoPair,
};
pub use oracle::{brute_force_spectrum, min_weight_set, one_five_census, Spectrum};
pub use order::{decreasing_closure, is_decreasing, preceq};
pub use ring::{Evaluation, Monomial, Polynomial};

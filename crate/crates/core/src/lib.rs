//! Exact computations with stationary descendent invariants of an elliptic
//! curve.
//!
//! The crate covers the whole pipeline from symmetric-group combinatorics to
//! quasimodular forms:
//!
//! - [`combinatorics`]: partitions, centralizer orders, `p(n)`, pentagonal pairs
//! - [`characters`]: Murnaghan–Nakayama characters and the character-sum oracle
//! - [`shifted_symmetric`]: Bernoulli numbers and shifted symmetric power sums
//! - [`qseries`]: truncated power series over `Q`, Eisenstein series, `Δ`
//! - [`descendents`]: descendent labels, invariants and their generating series
//! - [`quasimodular`]: Eisenstein monomial bases of `QM_k` and exact expansion
//! - [`matroid`]: exact linear matroids and the descendent matroids `M_k`
//! - [`decomposition`]: expressions of `Δ` in descendents, Ramanujan `τ`
//!
//! All arithmetic is exact; there is no floating point anywhere in the crate.

pub mod characters;
pub mod combinatorics;
pub mod decomposition;
pub mod descendents;
mod error;
pub mod linalg;
pub mod matroid;
pub mod qseries;
pub mod quasimodular;
pub mod rational;
pub mod shifted_symmetric;

/// Crate version; keys on-disk caches of derived data.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use characters::{character, gw_character_oracle, CharacterTable};
pub use combinatorics::{
    centralizer_order, partition_count, partitions_min_two, partitions_of, pentagonal_pairs,
    Partition,
};
pub use decomposition::{
    all_positive_decompositions, poly_basis_expand, solve_linear, tau_direct, tau_niebur,
    tau_pentagonal, tau_relation_report, tau_relation_report_with, LinearDecomposition, PolynomialDecomposition, TauReport,
};
pub use descendents::{bracket_series, gw_invariant, to_eisenstein, DescendentLabel};
pub use error::{Error, Result};
pub use matroid::{descendent_matroid, named_restriction, LinearMatroid, TuttePolynomial};
pub use qseries::{discriminant, eisenstein_series, euler_function, inverse_euler, QSeries};
pub use quasimodular::{eisenstein_monomials, expand_in_eisenstein, qm_dimension, EisensteinMonomial};
pub use rational::Rational;
pub use shifted_symmetric::{bernoulli, pk_constant, shifted_power_sum};

//! Fixtures shared by the kernel benchmarks.

use descendent::decomposition::parse_basis_key;
use descendent::matroid::descendent_matroid;
use descendent::{DescendentLabel, LinearMatroid, Rational};

/// The first basis of `M_12 | S^12`.
pub fn first_positive_basis() -> Vec<DescendentLabel> {
    parse_basis_key(12, "1234567").expect("valid key")
}

/// Rows of the weight-`k` Eisenstein coordinate matrix.
pub fn coordinate_rows(k: u32) -> Vec<Vec<Rational>> {
    matroid(k).matrix_rows()
}

pub fn matroid(k: u32) -> LinearMatroid {
    descendent_matroid(k, false).expect("even weight in range")
}

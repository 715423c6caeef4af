//! Stationary descendent labels, their disconnected invariants, and the
//! generating series `⟨τ_{k₁}…τ_{k_n}⟩ = (q)_∞ Σ_d ⟨…⟩_d q^d`.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{partitions_of, Partition};
use crate::qseries::{euler_function, QSeries};
use crate::quasimodular::{expand_in_eisenstein, qm_dimension, EisensteinMonomial, DEFAULT_MARGIN};
use crate::rational::Rational;
use crate::shifted_symmetric::shifted_power_sum;
use crate::{Error, Result};

/// The insertion orders `k₁ ≥ k₂ ≥ … ≥ 0` of `⟨τ_{k₁}…τ_{k_n}⟩`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct DescendentLabel {
    insertions: Vec<u32>,
}

impl DescendentLabel {
    pub fn new(mut insertions: Vec<u32>) -> Self {
        insertions.sort_unstable_by(|a, b| b.cmp(a));
        DescendentLabel { insertions }
    }

    /// Inverse of [`DescendentLabel::to_partition`]: parts `λ_i ≥ 2` become
    /// insertions `λ_i − 2`.
    pub fn from_partition(p: &Partition) -> Result<Self> {
        if p.parts().iter().any(|&x| x < 2) {
            return Err(Error::InvalidArgument(format!(
                "partition {p} has a part below 2"
            )));
        }
        Ok(DescendentLabel {
            insertions: p.parts().iter().map(|&x| x - 2).collect(),
        })
    }

    pub fn to_partition(&self) -> Partition {
        Partition::new(self.insertions.iter().map(|&k| k + 2).collect())
            .expect("insertions are kept descending")
    }

    pub fn insertions(&self) -> &[u32] {
        &self.insertions
    }

    /// Number of insertions (the pointedness of the descendent).
    pub fn len(&self) -> usize {
        self.insertions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.insertions.is_empty()
    }

    /// `Σ (k_i + 2)`.
    pub fn weight(&self) -> u32 {
        self.insertions.iter().map(|k| k + 2).sum()
    }

    /// True when every insertion is strictly positive.
    pub fn is_positive(&self) -> bool {
        self.insertions.iter().all(|&k| k > 0)
    }

    /// `Π (k_i + 1)!`.
    pub fn factorial_denominator(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &k in &self.insertions {
            for j in 2..=k + 1 {
                acc *= j;
            }
        }
        acc
    }
}

impl From<Vec<u32>> for DescendentLabel {
    fn from(v: Vec<u32>) -> Self {
        DescendentLabel::new(v)
    }
}

impl From<DescendentLabel> for Vec<u32> {
    fn from(l: DescendentLabel) -> Self {
        l.insertions
    }
}

impl fmt::Display for DescendentLabel {
    /// Sage-style insertion list, e.g. `[2, 0, 0]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, k) in self.insertions.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for DescendentLabel {
    type Err = Error;

    /// Comma separated insertions, brackets optional: `"2,2"`, `"[4, 0]"`, `""`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if body.is_empty() {
            return Ok(DescendentLabel::default());
        }
        body.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidArgument(format!("bad insertion {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(DescendentLabel::new)
    }
}

/// `⟨τ_{k₁}…τ_{k_n}⟩^{•E}_d = Σ_{λ⊢d} Π_i p_{k_i+1}(λ) / Π_i (k_i+1)!`.
///
/// This is the character double sum after row orthogonality
/// `Σ_μ (χ^λ_μ)²/z_μ = 1` has collapsed the sum over `μ`.
pub fn gw_invariant(label: &DescendentLabel, d: u32) -> Rational {
    let key = (label.clone(), d);
    if let Some(v) = INVARIANTS.read().unwrap().as_ref().and_then(|m| m.get(&key)) {
        return v.clone();
    }
    let v = gw_invariant_uncached(label, d);
    INVARIANTS
        .write()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .entry(key)
        .or_insert(v)
        .clone()
}

static INVARIANTS: RwLock<Option<HashMap<(DescendentLabel, u32), Rational>>> = RwLock::new(None);

fn gw_invariant_uncached(label: &DescendentLabel, d: u32) -> Rational {
    let mut total = Rational::zero();
    for lambda in partitions_of(d) {
        let mut prod = Rational::one();
        for &k in label.insertions() {
            prod *= shifted_power_sum(k + 1, &lambda);
        }
        total += prod;
    }
    total / Rational::from_integer(label.factorial_denominator())
}

/// `Σ_{d ≤ order} ⟨…⟩_d q^d`, before multiplying by `(q)_∞`.
pub fn invariant_series(label: &DescendentLabel, order: usize) -> QSeries {
    QSeries::from_coeffs((0..=order).map(|d| gw_invariant(label, d as u32)).collect())
}

/// `(q)_∞ Σ_d ⟨…⟩_d q^d` truncated at `order`.
pub fn bracket_series(label: &DescendentLabel, order: usize) -> QSeries {
    euler_function(order).mul(&invariant_series(label, order))
}

/// Coordinates of `⟨label⟩` in the Eisenstein monomial basis of its weight,
/// listed in [`crate::eisenstein_monomials`] order (zero coordinates included).
pub fn to_eisenstein(label: &DescendentLabel) -> Result<Vec<(EisensteinMonomial, Rational)>> {
    let k = label.weight();
    if k < 2 {
        return Err(Error::OddWeight(k));
    }
    let order = qm_dimension(k)? + DEFAULT_MARGIN;
    let series = bracket_series(label, order);
    expand_in_eisenstein(&series, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn l(v: &[u32]) -> DescendentLabel {
        DescendentLabel::new(v.to_vec())
    }

    #[test]
    fn weights() {
        assert_eq!(l(&[2, 2]).weight(), 8);
        assert_eq!(l(&[10]).weight(), 12);
        assert_eq!(l(&[]).weight(), 0);
    }

    #[test]
    fn canonical_order() {
        assert_eq!(l(&[0, 2, 1]), l(&[2, 1, 0]));
        assert_eq!(l(&[0, 2, 1]).insertions(), &[2, 1, 0]);
        assert_eq!("[0, 2]".parse::<DescendentLabel>().unwrap(), l(&[2, 0]));
        assert_eq!("".parse::<DescendentLabel>().unwrap(), l(&[]));
        assert!("2,x".parse::<DescendentLabel>().is_err());
    }

    #[test]
    fn partition_bijection() {
        let p = Partition::new(vec![4, 2, 2]).unwrap();
        assert_eq!(DescendentLabel::from_partition(&p).unwrap(), l(&[2, 0, 0]));
        assert_eq!(l(&[2, 0, 0]).to_partition(), p);
    }

    #[test]
    fn invariants() {
        assert_eq!(gw_invariant(&l(&[2, 2]), 3), rat(166577809, 11059200));
        assert_eq!(gw_invariant(&l(&[2, 2]), 0), rat(49, 33177600));
        assert_eq!(gw_invariant(&l(&[0]), 2), rat(47, 12));
        assert_eq!(gw_invariant(&l(&[0]), 0), rat(-1, 24));
        assert_eq!(gw_invariant(&l(&[]), 5), int(7));
    }

    #[test]
    fn tau_two_squared_series() {
        let s = bracket_series(&l(&[2, 2]), 3);
        assert_eq!(
            s.coeffs(),
            &[
                rat(49, 33177600),
                rat(127, 69120),
                rat(15703, 23040),
                rat(248437, 17280)
            ]
        );
    }

    #[test]
    fn empty_label_is_one() {
        assert_eq!(bracket_series(&l(&[]), 10), QSeries::one(10));
    }
}

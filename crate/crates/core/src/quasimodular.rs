//! Weight-graded Eisenstein monomial bases of `QM_k = Q[E₂, E₄, E₆]_k` and
//! exact coordinates of `q`-series in them.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::combinatorics::partitions_bounded;
use crate::linalg::solve_leading;
use crate::qseries::{eisenstein_series, QSeries};
use crate::rational::Rational;
use crate::{Error, Result};

/// Extra coefficients checked after solving for the coordinates.
pub const DEFAULT_MARGIN: usize = 5;

/// `E₂^a E₄^b E₆^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u32; 3]", into = "[u32; 3]")]
pub struct EisensteinMonomial {
    pub e2: u32,
    pub e4: u32,
    pub e6: u32,
}

impl EisensteinMonomial {
    pub const fn new(e2: u32, e4: u32, e6: u32) -> Self {
        EisensteinMonomial { e2, e4, e6 }
    }

    pub fn weight(&self) -> u32 {
        2 * self.e2 + 4 * self.e4 + 6 * self.e6
    }

    /// Sage-style key listing the weights of the factors, e.g. `(6, 2)` for
    /// `E₆E₂` and `(2, 2, 2, 2)` for `E₂⁴`.
    pub fn weight_key(&self) -> Vec<u32> {
        std::iter::repeat_n(6, self.e6 as usize)
            .chain(std::iter::repeat_n(4, self.e4 as usize))
            .chain(std::iter::repeat_n(2, self.e2 as usize))
            .collect()
    }

    pub fn series(&self, order: usize) -> QSeries {
        let key = (*self, order);
        if let Some(s) = MONOMIAL_SERIES.read().unwrap().as_ref().and_then(|m| m.get(&key)) {
            return s.clone();
        }
        let power = |k: u32, e: u32| {
            eisenstein_series(k, order)
                .expect("2, 4, 6 are valid weights")
                .pow(e as i64)
                .expect("nonnegative exponent")
        };
        let s = power(2, self.e2).mul(&power(4, self.e4)).mul(&power(6, self.e6));
        MONOMIAL_SERIES
            .write()
            .unwrap()
            .get_or_insert_with(HashMap::new)
            .entry(key)
            .or_insert(s)
            .clone()
    }
}

static MONOMIAL_SERIES: RwLock<Option<HashMap<(EisensteinMonomial, usize), QSeries>>> =
    RwLock::new(None);

impl From<[u32; 3]> for EisensteinMonomial {
    fn from([a, b, c]: [u32; 3]) -> Self {
        EisensteinMonomial::new(a, b, c)
    }
}

impl From<EisensteinMonomial> for [u32; 3] {
    fn from(m: EisensteinMonomial) -> Self {
        [m.e2, m.e4, m.e6]
    }
}

impl fmt::Display for EisensteinMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (name, e) in [("E6", self.e6), ("E4", self.e4), ("E2", self.e2)] {
            match e {
                0 => {}
                1 => factors.push(name.to_string()),
                _ => factors.push(format!("{name}^{e}")),
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

fn check_weight(k: u32) -> Result<()> {
    if !k.is_multiple_of(2) {
        Err(Error::OddWeight(k))
    } else {
        Ok(())
    }
}

/// `dim QM_k`: partitions of `k/2` into parts at most 3.
pub fn qm_dimension(k: u32) -> Result<usize> {
    check_weight(k)?;
    Ok(partitions_bounded(k / 2, 1, 3).len())
}

/// All monomials of weight `k`, by decreasing `E₆` exponent, then decreasing
/// `E₄` exponent.
pub fn eisenstein_monomials(k: u32) -> Result<Vec<EisensteinMonomial>> {
    check_weight(k)?;
    let mut out = Vec::new();
    for c in (0..=k / 6).rev() {
        let rest = k - 6 * c;
        for b in (0..=rest / 4).rev() {
            let a2 = rest - 4 * b;
            out.push(EisensteinMonomial::new(a2 / 2, b, c));
        }
    }
    Ok(out)
}

/// Coordinates of `series` in the weight-`k` Eisenstein basis with the default
/// consistency margin.
pub fn expand_in_eisenstein(series: &QSeries, k: u32) -> Result<Vec<(EisensteinMonomial, Rational)>> {
    expand_in_eisenstein_with_margin(series, k, DEFAULT_MARGIN)
}

/// Solves for the coordinates from the leading `dim QM_k` coefficients
/// (extending while the system is singular) and verifies them against every
/// coefficient of `series`. The series must have order at least
/// `dim QM_k + margin`.
pub fn expand_in_eisenstein_with_margin(
    series: &QSeries,
    k: u32,
    margin: usize,
) -> Result<Vec<(EisensteinMonomial, Rational)>> {
    let monomials = eisenstein_monomials(k)?;
    let need = monomials.len() + margin;
    if series.order() < need {
        return Err(Error::InsufficientOrder {
            have: series.order(),
            need,
        });
    }
    let order = series.order();
    let columns: Vec<QSeries> = monomials.iter().map(|m| m.series(order)).collect();
    let rows: Vec<Vec<Rational>> = (0..=order)
        .map(|n| columns.iter().map(|c| c.coeffs()[n].clone()).collect())
        .collect();
    let x = solve_leading(&rows, series.coeffs())?;
    Ok(monomials.into_iter().zip(x).collect())
}

/// `Σ coeff · monomial` as a series of the given order.
pub fn reconstruct(expansion: &[(EisensteinMonomial, Rational)], order: usize) -> QSeries {
    expansion
        .iter()
        .fold(QSeries::zero(order), |acc, (m, c)| acc.add(&m.series(order).scale(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::discriminant;
    use crate::rational::int;
    use num_traits::Zero;

    fn mono(v: &[(u32, u32, u32)]) -> Vec<EisensteinMonomial> {
        v.iter().map(|&(a, b, c)| EisensteinMonomial::new(a, b, c)).collect()
    }

    #[test]
    fn dimensions() {
        assert_eq!(qm_dimension(12).unwrap(), 7);
        assert_eq!(qm_dimension(8).unwrap(), 4);
        assert_eq!(qm_dimension(2).unwrap(), 1);
        assert_eq!(qm_dimension(0).unwrap(), 1);
        assert_eq!(qm_dimension(7), Err(Error::OddWeight(7)));
    }

    #[test]
    fn monomial_orders() {
        assert_eq!(eisenstein_monomials(4).unwrap(), mono(&[(0, 1, 0), (2, 0, 0)]));
        assert_eq!(
            eisenstein_monomials(6).unwrap(),
            mono(&[(0, 0, 1), (1, 1, 0), (3, 0, 0)])
        );
        assert_eq!(
            eisenstein_monomials(8).unwrap(),
            mono(&[(1, 0, 1), (0, 2, 0), (2, 1, 0), (4, 0, 0)])
        );
        for k in (0..=20).step_by(2) {
            assert_eq!(eisenstein_monomials(k).unwrap().len(), qm_dimension(k).unwrap());
            assert!(eisenstein_monomials(k).unwrap().iter().all(|m| m.weight() == k));
        }
    }

    #[test]
    fn display_and_keys() {
        let m = EisensteinMonomial::new(2, 1, 0);
        assert_eq!(m.to_string(), "E4*E2^2");
        assert_eq!(m.weight_key(), vec![4, 2, 2]);
        assert_eq!(EisensteinMonomial::new(0, 0, 0).to_string(), "1");
    }

    #[test]
    fn discriminant_coordinates() {
        let delta = discriminant(12).unwrap();
        let x = expand_in_eisenstein(&delta, 12).unwrap();
        for (m, c) in x {
            let expected = match (m.e2, m.e4, m.e6) {
                (0, 3, 0) => int(8000),
                (0, 0, 2) => int(-147),
                _ => Rational::zero(),
            };
            assert_eq!(c, expected, "{m}");
        }
    }

    #[test]
    fn basis_element() {
        let e2sq = EisensteinMonomial::new(2, 0, 0).series(8);
        let x = expand_in_eisenstein(&e2sq, 4).unwrap();
        assert_eq!(x.iter().map(|(_, c)| c.clone()).collect::<Vec<_>>(), vec![int(0), int(1)]);
    }

    #[test]
    fn errors() {
        let short = EisensteinMonomial::new(2, 0, 0).series(5);
        assert_eq!(
            expand_in_eisenstein(&short, 4),
            Err(Error::InsufficientOrder { have: 5, need: 7 })
        );
        // weight-6 form is not in QM_4
        let e6 = EisensteinMonomial::new(0, 0, 1).series(10);
        assert!(matches!(
            expand_in_eisenstein(&e6, 4),
            Err(Error::Inconsistent { .. })
        ));
    }
}

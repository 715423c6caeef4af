//! Truncated power series in `q` with exact rational coefficients.
//!
//! A [`QSeries`] carries its truncation order explicitly: it stores the
//! coefficients of `q⁰ … q^order` and nothing is known beyond. Binary
//! operations on series of different orders truncate to the smaller one.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{partition_count, pentagonal_pairs};
use crate::rational::{format_rational, serde_rational_vec, Rational};
use crate::shifted_symmetric::bernoulli;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSeries", into = "RawSeries")]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawSeries {
    order: usize,
    #[serde(with = "serde_rational_vec")]
    coeffs: Vec<Rational>,
}

impl TryFrom<RawSeries> for QSeries {
    type Error = String;

    fn try_from(raw: RawSeries) -> std::result::Result<Self, String> {
        if raw.coeffs.len() != raw.order + 1 {
            return Err(format!(
                "series of order {} needs {} coefficients, got {}",
                raw.order,
                raw.order + 1,
                raw.coeffs.len()
            ));
        }
        Ok(QSeries { coeffs: raw.coeffs })
    }
}

impl From<QSeries> for RawSeries {
    fn from(s: QSeries) -> Self {
        RawSeries {
            order: s.order(),
            coeffs: s.coeffs,
        }
    }
}

impl QSeries {
    /// Series from `q⁰ … q^order` coefficients; `coeffs` must be nonempty.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the q^0 coefficient");
        QSeries { coeffs }
    }

    pub fn from_integers<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::from_coeffs(
            coeffs
                .into_iter()
                .map(|c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `q^n`; `None` past the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, order: usize) -> QSeries {
        let n = order.min(self.order());
        QSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let n = self.order().min(other.order());
        QSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        let n = self.order().min(other.order());
        QSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let n = self.order().min(other.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QSeries { coeffs: out }
    }

    /// `self^exp` by repeated squaring. Negative exponents are rejected.
    pub fn pow(&self, exp: i64) -> Result<QSeries> {
        if exp < 0 {
            return Err(Error::NegativeExponent(exp));
        }
        let mut result = QSeries::one(self.order());
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries({self})")
    }
}

impl fmt::Display for QSeries {
    /// `a0 + a1*q + a2*q^2 + O(q^{n+1})`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = format_rational(&c.abs());
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match n {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*q")?,
                _ => write!(f, "{mag}*q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&QSeries> for &QSeries {
            type Output = QSeries;
            fn $m(self, rhs: &QSeries) -> QSeries {
                QSeries::$m(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// `(q)_∞ = Σ_{d∈ℤ} (−1)^d q^{(3d²−d)/2}`, truncated at `order`.
pub fn euler_function(order: usize) -> QSeries {
    let mut s = QSeries::zero(order);
    for (d1, _) in pentagonal_pairs(order as u32) {
        let exp = ((3 * d1 * d1 - d1) / 2) as usize;
        s.coeffs[exp] = if d1.rem_euclid(2) == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
    }
    s
}

/// `1/(q)_∞ = Σ p(d) q^d`.
pub fn inverse_euler(order: usize) -> QSeries {
    QSeries {
        coeffs: (0..=order)
            .map(|d| Rational::from_integer(partition_count(d as u32)))
            .collect(),
    }
}

/// `σ_k(n) = Σ_{d | n} d^k`.
pub fn divisor_sigma(k: u32, n: u64) -> BigInt {
    let mut acc = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            acc += num_traits::pow(BigInt::from(d), k as usize);
            let e = n / d;
            if e != d {
                acc += num_traits::pow(BigInt::from(e), k as usize);
            }
        }
        d += 1;
    }
    acc
}

/// Non-normalized Eisenstein series `E_k = −B_k/(2k) + Σ σ_{k−1}(n) qⁿ`.
pub fn eisenstein_series(k: u32, order: usize) -> Result<QSeries> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::OddWeight(k));
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(-bernoulli(k) / Rational::from_integer(BigInt::from(2 * k)));
    for n in 1..=order as u64 {
        coeffs.push(Rational::from_integer(divisor_sigma(k - 1, n)));
    }
    Ok(QSeries { coeffs })
}

/// `Δ = q Π (1 − qⁿ)²⁴`, built both as the product and as `8000E₄³ − 147E₆²`;
/// the two must agree coefficient for coefficient.
pub fn discriminant(order: usize) -> Result<QSeries> {
    let product = {
        let eta24 = euler_function(order).pow(24)?;
        let mut coeffs = vec![Rational::zero(); order + 1];
        coeffs[1..].clone_from_slice(&eta24.coeffs[..order]);
        QSeries { coeffs }
    };
    let e4 = eisenstein_series(4, order)?;
    let e6 = eisenstein_series(6, order)?;
    let eisenstein = e4
        .pow(3)?
        .scale(&Rational::from_integer(8000.into()))
        .sub(&e6.pow(2)?.scale(&Rational::from_integer(147.into())));
    if let Some(n) = (0..=order).find(|&n| product.coeffs[n] != eisenstein.coeffs[n]) {
        return Err(Error::Internal(format!(
            "discriminant constructions disagree at q^{n}: {} vs {}",
            format_rational(&product.coeffs[n]),
            format_rational(&eisenstein.coeffs[n])
        )));
    }
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn geometric_series() {
        let one_minus_q = QSeries::from_integers([1, -1, 0, 0, 0, 0]);
        let geom = QSeries::from_integers([1; 6]);
        assert_eq!(one_minus_q.mul(&geom), QSeries::one(5));
    }

    #[test]
    fn pow_small() {
        let s = QSeries::from_integers([1, 1, 0]);
        assert_eq!(s.pow(2).unwrap(), QSeries::from_integers([1, 2, 1]));
        assert_eq!(s.pow(0).unwrap(), QSeries::one(2));
        assert_eq!(s.pow(-1), Err(Error::NegativeExponent(-1)));
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = QSeries::from_integers([1, 2, 3, 4]);
        let b = QSeries::from_integers([1, 1]);
        assert_eq!(a.add(&b).order(), 1);
        assert_eq!(a.mul(&b), QSeries::from_integers([1, 3]));
    }

    #[test]
    fn euler_examples() {
        assert_eq!(
            euler_function(7),
            QSeries::from_integers([1, -1, -1, 0, 0, 1, 0, 1])
        );
        assert_eq!(euler_function(12).coeff(12), Some(&int(-1)));
        assert_eq!(euler_function(30).mul(&inverse_euler(30)), QSeries::one(30));
        assert_eq!(
            inverse_euler(4),
            QSeries::from_integers([1, 1, 2, 3, 5])
        );
        assert_eq!(inverse_euler(12).coeff(12), Some(&int(77)));
    }

    #[test]
    fn eisenstein_examples() {
        let e2 = eisenstein_series(2, 4).unwrap();
        assert_eq!(e2.coeffs(), &[rat(-1, 24), int(1), int(3), int(4), int(7)]);
        assert_eq!(e2.scale(&int(24)).coeff(0), Some(&int(-1)));
        assert_eq!(eisenstein_series(4, 0).unwrap().coeff(0), Some(&rat(1, 240)));
        assert_eq!(eisenstein_series(6, 0).unwrap().coeff(0), Some(&rat(-1, 504)));
        assert_eq!(eisenstein_series(3, 4), Err(Error::OddWeight(3)));
        assert_eq!(eisenstein_series(0, 4), Err(Error::OddWeight(0)));
    }

    #[test]
    fn discriminant_head() {
        let d = discriminant(6).unwrap();
        assert_eq!(d, QSeries::from_integers([0, 1, -24, 252, -1472, 4830, -6048]));
    }

    #[test]
    fn display() {
        let s = QSeries::from_coeffs(vec![rat(1, 2), int(0), int(-3)]);
        assert_eq!(s.to_string(), "1/2 - 3*q^2 + O(q^3)");
    }

    #[test]
    fn json_shape() {
        let s = QSeries::from_coeffs(vec![rat(-1, 24), int(1)]);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"order":1,"coeffs":["-1/24","1"]}"#);
        let back: QSeries = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<QSeries>(r#"{"order":3,"coeffs":["1"]}"#).is_err());
    }
}

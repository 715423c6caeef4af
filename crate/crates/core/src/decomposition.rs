//! The discriminant form in descendent coordinates, and Ramanujan's `τ`.
//!
//! Two kinds of expansions are computed:
//!
//! - linear: `Δ = Σ_{b∈B} a_b ⟨b⟩` for a basis `B` of `M_k | S^k`
//!   ([`solve_linear`], [`all_positive_decompositions`]);
//! - polynomial: `Δ` as a polynomial in one of the eight generator triples
//!   `(⟨τ₀⟩, ⟨wt 4⟩, ⟨wt 6⟩)` ([`poly_basis_expand`]).
//!
//! A linear expansion turns into a formula for `τ(d)` through the pentagonal
//! number theorem ([`tau_pentagonal`]).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::pentagonal_pairs;
use crate::descendents::{bracket_series, gw_invariant, DescendentLabel};
use crate::linalg::solve_leading;
use crate::matroid::{descendent_ground_set, descendent_matroid};
use crate::qseries::{discriminant, divisor_sigma, QSeries};
use crate::quasimodular::{eisenstein_monomials, qm_dimension, EisensteinMonomial};
use crate::rational::{common_denominator, format_rational, to_integer, Rational};
use crate::{Error, Result};

/// Coefficients of a weight-12 expansion are solved with this many `q`-terms.
pub const WORKING_ORDER: usize = 25;

/// Coefficients past `dim QM_k` that a linear expansion must also reproduce.
pub const LINEAR_MARGIN: usize = 10;

/// `target = Σ coefficients[i] · ⟨basis[i]⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearDecomposition {
    pub weight: u32,
    pub basis: Vec<DescendentLabel>,
    pub coefficients: Vec<Rational>,
    /// Least positive integer clearing every denominator of `coefficients`.
    pub scale: BigInt,
    /// Digit key such as `"1234567"` when the basis lies in the positive
    /// ground set `S^k` (digit `i` is its `i`-th element, 1-based).
    pub key: Option<String>,
}

impl LinearDecomposition {
    /// `scale · coefficients`, all integers.
    pub fn scaled_coefficients(&self) -> Vec<BigInt> {
        let s = Rational::from_integer(self.scale.clone());
        self.coefficients
            .iter()
            .map(|c| (c * &s).to_integer())
            .collect()
    }

    /// `Σ a_b ⟨b⟩` to the given order.
    pub fn reconstruct(&self, order: usize) -> QSeries {
        self.basis
            .iter()
            .zip(&self.coefficients)
            .fold(QSeries::zero(order), |acc, (b, a)| {
                acc.add(&bracket_series(b, order).scale(a))
            })
    }
}

impl fmt::Display for LinearDecomposition {
    /// `scale*Delta = c1*[10] + c2*[7, 1] + ...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*Delta =", self.scale)?;
        for (i, (b, c)) in self.basis.iter().zip(self.scaled_coefficients()).enumerate() {
            let sign = match (i, c.is_negative()) {
                (0, false) => " ",
                (0, true) => " -",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            write!(f, "{sign}{}*{b}", c.abs())?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct LinearRecord<'a> {
    key: Option<&'a str>,
    weight: u32,
    scale: String,
    basis: &'a [DescendentLabel],
    coefficients: Vec<String>,
    scaled_coefficients: Vec<String>,
}

impl Serialize for LinearDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LinearRecord {
            key: self.key.as_deref(),
            weight: self.weight,
            scale: self.scale.to_string(),
            basis: &self.basis,
            coefficients: self.coefficients.iter().map(format_rational).collect(),
            scaled_coefficients: self.scaled_coefficients().iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

/// 1-based digit key of `basis` inside the positive ground set of weight `k`.
pub fn basis_key(k: u32, basis: &[DescendentLabel]) -> Option<String> {
    let ground = descendent_ground_set(k, true);
    if ground.len() > 9 {
        return None;
    }
    let mut digits: Vec<usize> = basis
        .iter()
        .map(|b| ground.iter().position(|g| g == b).map(|i| i + 1))
        .collect::<Option<_>>()?;
    digits.sort_unstable();
    Some(digits.iter().map(|d| d.to_string()).collect())
}

/// Inverse of [`basis_key`]: `"2456789"` to the corresponding labels.
pub fn parse_basis_key(k: u32, key: &str) -> Result<Vec<DescendentLabel>> {
    let ground = descendent_ground_set(k, true);
    key.chars()
        .filter(|c| !matches!(c, ',' | ' ' | '(' | ')'))
        .map(|c| {
            c.to_digit(10)
                .filter(|&d| d >= 1 && (d as usize) <= ground.len())
                .map(|d| ground[d as usize - 1].clone())
                .ok_or_else(|| Error::InvalidArgument(format!("bad basis digit {c:?} in {key:?}")))
        })
        .collect()
}

/// Expresses `target` (weight `k`) in the given descendents.
///
/// The first `dim QM_k` coefficients determine the solution; it must then
/// reproduce at least [`LINEAR_MARGIN`] further coefficients of `target`.
pub fn solve_linear(
    basis: &[DescendentLabel],
    target: &QSeries,
    k: u32,
) -> Result<LinearDecomposition> {
    let dim = qm_dimension(k)?;
    if basis.len() != dim {
        return Err(Error::CoefficientCount {
            expected: dim,
            got: basis.len(),
        });
    }
    if let Some(b) = basis.iter().find(|b| b.weight() != k) {
        return Err(Error::InvalidArgument(format!("{b} has weight {}, not {k}", b.weight())));
    }
    let need = dim + LINEAR_MARGIN;
    if target.order() < need {
        return Err(Error::InsufficientOrder {
            have: target.order(),
            need,
        });
    }
    let order = target.order();
    let columns: Vec<QSeries> = basis.iter().map(|b| bracket_series(b, order)).collect();
    let rows: Vec<Vec<Rational>> = (0..=order)
        .map(|n| columns.iter().map(|c| c.coeffs()[n].clone()).collect())
        .collect();
    let coefficients = solve_leading(&rows, target.coeffs())?;
    let scale = common_denominator(&coefficients);
    Ok(LinearDecomposition {
        weight: k,
        basis: basis.to_vec(),
        coefficients,
        scale,
        key: basis_key(k, basis),
    })
}

/// `Δ` in every basis of `M_12 | S^12`, in lexicographic basis order.
pub fn all_positive_decompositions(k: u32) -> Result<Vec<LinearDecomposition>> {
    if k != 12 {
        return Err(Error::InvalidArgument(format!(
            "discriminant decompositions exist for weight 12 only, not {k}"
        )));
    }
    let m = descendent_matroid(k, true)?;
    let delta = discriminant(WORKING_ORDER)?;
    m.bases_labels()
        .par_iter()
        .map(|b| solve_linear(b, &delta, k))
        .collect()
}

/// The eight generator triples `(wt 2, wt 4, wt 6)`, numbered as paths through
/// `⟨τ₀⟩ → {⟨τ₀²⟩, ⟨τ₂⟩} → {⟨τ₀³⟩, ⟨τ₁²⟩, ⟨τ₂τ₀⟩, ⟨τ₄⟩}`.
pub fn generator_triple(triple_type: u32) -> Result<[DescendentLabel; 3]> {
    if !(1..=8).contains(&triple_type) {
        return Err(Error::InvalidTripleType(triple_type));
    }
    let l = |v: &[u32]| DescendentLabel::new(v.to_vec());
    let wt4 = if triple_type <= 4 { l(&[0, 0]) } else { l(&[2]) };
    let wt6 = match (triple_type - 1) % 4 {
        0 => l(&[0, 0, 0]),
        1 => l(&[1, 1]),
        2 => l(&[2, 0]),
        _ => l(&[4]),
    };
    Ok([l(&[0]), wt4, wt6])
}

/// A weight-`k` form as a polynomial in a generator triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialDecomposition {
    pub triple_type: u32,
    pub weight: u32,
    pub generators: [DescendentLabel; 3],
    /// Nonzero terms; each key lists its factors, weight-6 generator first.
    pub terms: Vec<(Vec<DescendentLabel>, Rational)>,
}

impl PolynomialDecomposition {
    fn factors(generators: &[DescendentLabel; 3], m: &EisensteinMonomial) -> Vec<DescendentLabel> {
        let [g2, g4, g6] = generators;
        std::iter::repeat_n(g6.clone(), m.e6 as usize)
            .chain(std::iter::repeat_n(g4.clone(), m.e4 as usize))
            .chain(std::iter::repeat_n(g2.clone(), m.e2 as usize))
            .collect()
    }

    pub fn coefficient(&self, factors: &[DescendentLabel]) -> Rational {
        let mut want = factors.to_vec();
        want.sort();
        self.terms
            .iter()
            .find(|(f, _)| {
                let mut have = f.clone();
                have.sort();
                have == want
            })
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn reconstruct(&self, order: usize) -> QSeries {
        let gens: Vec<QSeries> = self.generators.iter().map(|g| bracket_series(g, order)).collect();
        let mut acc = QSeries::zero(order);
        for (factors, c) in &self.terms {
            let mut prod = QSeries::one(order);
            for f in factors {
                let i = self.generators.iter().position(|g| g == f).expect("factor is a generator");
                prod = prod.mul(&gens[i]);
            }
            acc = acc.add(&prod.scale(c));
        }
        acc
    }
}

impl fmt::Display for PolynomialDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (factors, c)) in self.terms.iter().enumerate() {
            let sign = match (i, c.is_negative()) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let body: Vec<String> = factors.iter().map(|l| format!("<{l}>")).collect();
            write!(f, "{sign}{}*{}", format_rational(&c.abs()), body.join("*"))?;
        }
        Ok(())
    }
}

/// The weight-`k` form with leading coefficients `leading_coeffs` (one per
/// dimension of `QM_k`), written in the monomials of generator triple
/// `triple_type`.
pub fn poly_basis_expand(
    triple_type: u32,
    k: u32,
    leading_coeffs: &[Rational],
) -> Result<PolynomialDecomposition> {
    let generators = generator_triple(triple_type)?;
    let monomials = eisenstein_monomials(k)?;
    let dim = monomials.len();
    if leading_coeffs.len() != dim {
        return Err(Error::CoefficientCount {
            expected: dim,
            got: leading_coeffs.len(),
        });
    }
    let order = dim - 1;
    let gens: Vec<QSeries> = generators.iter().map(|g| bracket_series(g, order)).collect();
    let columns: Vec<QSeries> = monomials
        .iter()
        .map(|m| {
            gens[0]
                .pow(m.e2 as i64)
                .and_then(|a| Ok(a.mul(&gens[1].pow(m.e4 as i64)?)))
                .and_then(|a| Ok(a.mul(&gens[2].pow(m.e6 as i64)?)))
        })
        .collect::<Result<_>>()?;
    let rows: Vec<Vec<Rational>> = (0..dim)
        .map(|n| columns.iter().map(|c| c.coeffs()[n].clone()).collect())
        .collect();
    let x = solve_leading(&rows, leading_coeffs).map_err(|e| match e {
        Error::Singular { .. } => Error::Internal(format!(
            "generator triple {triple_type} fails to span QM_{k}: {e}"
        )),
        other => other,
    })?;
    let terms = monomials
        .iter()
        .zip(x)
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| (PolynomialDecomposition::factors(&generators, m), c))
        .collect();
    Ok(PolynomialDecomposition {
        triple_type,
        weight: k,
        generators,
        terms,
    })
}

/// `τ(d) = Σ_{3d₁²−d₁+2d₂=2d} Σ_{b∈B} (−1)^{d₁} a_b ⟨b⟩_{d₂}`.
pub fn tau_pentagonal(d: u32, decomposition: &LinearDecomposition) -> Result<BigInt> {
    let mut total = Rational::zero();
    for (d1, d2) in pentagonal_pairs(d) {
        let mut inner = Rational::zero();
        for (b, a) in decomposition.basis.iter().zip(&decomposition.coefficients) {
            inner += a * gw_invariant(b, d2 as u32);
        }
        if d1.rem_euclid(2) == 0 {
            total += inner;
        } else {
            total -= inner;
        }
    }
    to_integer(&total)
}

/// Niebur's formula
/// `τ(n) = n⁴σ(n) − 24 Σ_{i=1}^{n−1} i²(35i² − 52in + 18n²) σ(i) σ(n−i)`.
pub fn tau_niebur(n: u64) -> BigInt {
    let sigma = |m: u64| divisor_sigma(1, m);
    let nb = BigInt::from(n);
    let mut sum = BigInt::zero();
    for i in 1..n {
        let ib = BigInt::from(i);
        let poly = BigInt::from(35) * &ib * &ib - BigInt::from(52) * &ib * &nb
            + BigInt::from(18) * &nb * &nb;
        sum += &ib * &ib * poly * sigma(i) * sigma(n - i);
    }
    num_traits::pow(nb, 4) * sigma(n) - BigInt::from(24) * sum
}

/// `τ(n)` read off the `q`-expansion of `Δ`.
pub fn tau_direct(n: u64) -> Result<BigInt> {
    let delta = discriminant(n as usize)?;
    to_integer(&delta.coeffs()[n as usize])
}

/// Outcome of checking classical identities of `τ` up to `max_d`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TauReport {
    pub max_d: u32,
    /// Coprime pairs `(m, n)`, `1 < m < n`, `mn ≤ max_d`, that were checked.
    pub multiplicative_pairs: Vec<(u32, u32)>,
    /// `(p, r)` with `p^{r+1} ≤ max_d` checked against the Hecke recursion.
    pub hecke_cases: Vec<(u32, u32)>,
    /// Primes checked against `τ(p)² ≤ 4p¹¹`.
    pub deligne_primes: Vec<u32>,
    /// Every `d ≤ max_d` was checked for `τ(d) ≠ 0`.
    pub nonvanishing_checked: u32,
    pub violations: Vec<String>,
}

impl TauReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Checks multiplicativity, the Hecke recursion, the Deligne bound (by exact
/// squaring) and nonvanishing for the coefficients of `Δ` up to `max_d`.
pub fn tau_relation_report(max_d: u32) -> Result<TauReport> {
    let delta = discriminant(max_d as usize)?;
    let taus: Vec<BigInt> = delta.coeffs().iter().map(to_integer).collect::<Result<_>>()?;
    tau_relation_report_with(max_d, |d| Ok(taus[d as usize].clone()))
}

/// As [`tau_relation_report`], with `τ(d)` supplied by the caller (for example
/// through [`tau_pentagonal`], giving relations among descendent invariants).
pub fn tau_relation_report_with<F>(max_d: u32, tau: F) -> Result<TauReport>
where
    F: Fn(u32) -> Result<BigInt>,
{
    if max_d < 2 {
        return Err(Error::InvalidArgument(format!("max_d must be at least 2, got {max_d}")));
    }
    let t: Vec<BigInt> = std::iter::once(Ok(BigInt::zero()))
        .chain((1..=max_d).map(&tau))
        .collect::<Result<_>>()?;
    let mut report = TauReport {
        max_d,
        ..TauReport::default()
    };
    if !t[1].is_one() {
        report.violations.push(format!("tau(1) = {}, expected 1", t[1]));
    }
    for m in 2..=max_d {
        for n in m + 1..=max_d / m {
            if m.gcd(&n) == 1 {
                report.multiplicative_pairs.push((m, n));
                let prod = &t[m as usize] * &t[n as usize];
                if prod != t[(m * n) as usize] {
                    report.violations.push(format!(
                        "multiplicativity: tau({m})tau({n}) = {prod} != tau({}) = {}",
                        m * n,
                        t[(m * n) as usize]
                    ));
                }
            }
        }
    }
    for p in (2..=max_d).filter(|&p| is_prime(p)) {
        let p11 = num_traits::pow(BigInt::from(p), 11);
        let mut r = 1u32;
        while let Some(next) = p.checked_pow(r + 1).filter(|&v| v <= max_d) {
            report.hecke_cases.push((p, r));
            let pr = p.pow(r) as usize;
            let prev = p.pow(r - 1) as usize;
            let rhs = &t[p as usize] * &t[pr] - &p11 * &t[prev];
            if rhs != t[next as usize] {
                report.violations.push(format!(
                    "Hecke: tau({p}^{}) = {} != {rhs}",
                    r + 1,
                    t[next as usize]
                ));
            }
            r += 1;
        }
        report.deligne_primes.push(p);
        let sq = &t[p as usize] * &t[p as usize];
        if sq > BigInt::from(4) * &p11 {
            report
                .violations
                .push(format!("Deligne: tau({p})^2 = {sq} > 4*{p}^11"));
        }
    }
    for d in 1..=max_d {
        if t[d as usize].is_zero() {
            report.violations.push(format!("tau({d}) = 0"));
        }
    }
    report.nonvanishing_checked = max_d;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn l(v: &[u32]) -> DescendentLabel {
        DescendentLabel::new(v.to_vec())
    }

    #[test]
    fn niebur_small() {
        assert_eq!(tau_niebur(1), BigInt::from(1));
        assert_eq!(tau_niebur(2), BigInt::from(-24));
        assert_eq!(tau_niebur(3), BigInt::from(252));
        assert_eq!(tau_niebur(6), BigInt::from(-6048));
    }

    #[test]
    fn triples() {
        assert_eq!(generator_triple(1).unwrap(), [l(&[0]), l(&[0, 0]), l(&[0, 0, 0])]);
        assert_eq!(generator_triple(6).unwrap(), [l(&[0]), l(&[2]), l(&[1, 1])]);
        assert_eq!(generator_triple(8).unwrap(), [l(&[0]), l(&[2]), l(&[4])]);
        assert_eq!(generator_triple(0), Err(Error::InvalidTripleType(0)));
        assert_eq!(generator_triple(9), Err(Error::InvalidTripleType(9)));
    }

    #[test]
    fn e4_in_type_one() {
        let e4 = [Rational::new(1.into(), 240.into()), int(1)];
        let p = poly_basis_expand(1, 4, &e4).unwrap();
        let six_fifths = Rational::new(6.into(), 5.into());
        assert_eq!(p.coefficient(&[l(&[0, 0])]), six_fifths);
        assert_eq!(p.coefficient(&[l(&[0]), l(&[0])]), six_fifths);
        assert_eq!(p.terms.len(), 2);
        assert!(matches!(
            poly_basis_expand(1, 4, &[int(1)]),
            Err(Error::CoefficientCount { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn keys_round_trip() {
        let b = parse_basis_key(12, "2456789").unwrap();
        assert_eq!(b[0], l(&[7, 1]));
        assert_eq!(b[6], l(&[1, 1, 1, 1]));
        assert_eq!(basis_key(12, &b).as_deref(), Some("2456789"));
        assert!(parse_basis_key(12, "0123456").is_err());
    }

    #[test]
    fn report_small() {
        let r = tau_relation_report(6).unwrap();
        assert!(r.is_clean(), "{:?}", r.violations);
        assert_eq!(r.multiplicative_pairs, vec![(2, 3)]);
        assert_eq!(r.hecke_cases, vec![(2, 1)]);
        assert_eq!(r.deligne_primes, vec![2, 3, 5]);
        assert!(tau_relation_report(1).is_err());
    }

    #[test]
    fn report_flags_violations() {
        let r = tau_relation_report_with(6, |d| Ok(BigInt::from(if d == 6 { 0 } else { 1 }))).unwrap();
        assert!(!r.is_clean());
        assert!(r.violations.iter().any(|v| v.starts_with("tau(6) = 0")));
    }
}

//! Bernoulli numbers and shifted symmetric power sums.
//!
//! The shifted power sum of order `k` is
//!
//! ```text
//! p_k(λ) = Σ_i [ (λ_i − i + ½)^k − (−i + ½)^k ] + c_k,
//! c_k    = −(1 − 2^{−k}) · B_{k+1} / (k + 1)  =  (1 − 2^{−k}) ζ(−k).
//! ```
//!
//! With this constant `p_1(λ) = |λ| − 1/24`, and the `q⁰` coefficient of every
//! descendent series is `Π c_{k_i+1} / (k_i+1)!`.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::Partition;
use crate::rational::Rational;

static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// `B_k` with the convention `B_1 = −1/2`.
pub fn bernoulli(k: u32) -> Rational {
    let k = k as usize;
    if let Some(b) = BERNOULLI.read().unwrap().get(k) {
        return b.clone();
    }
    let mut cache = BERNOULLI.write().unwrap();
    while cache.len() <= k {
        let n = cache.len();
        let next = if n == 0 {
            Rational::one()
        } else if n > 1 && n % 2 == 1 {
            Rational::zero()
        } else {
            // Σ_{j=0}^{n} C(n+1, j) B_j = 0
            let mut acc = Rational::zero();
            let mut binom = BigInt::one();
            for (j, b) in cache.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * Rational::from_integer(binom.clone());
                }
                binom = binom * (n + 1 - j) / (j + 1);
            }
            -acc / Rational::from_integer(BigInt::from(n + 1))
        };
        cache.push(next);
    }
    cache[k].clone()
}

/// The constant term `c_k` of `p_k`.
pub fn pk_constant(k: u32) -> Rational {
    assert!(k >= 1, "shifted power sums start at order 1");
    let two_k = Rational::from_integer(BigInt::one() << k);
    let factor = Rational::one() - two_k.recip();
    -factor * bernoulli(k + 1) / Rational::from_integer(BigInt::from(k + 1))
}

/// The bracketed row sum `Σ_i [(r_i − i + ½)^k − (−i + ½)^k]` over arbitrary rows,
/// zeros allowed. Zero rows contribute nothing.
pub fn row_power_sum(k: u32, rows: &[u32]) -> Rational {
    // work with doubled values 2r − 2i + 1 and divide by 2^k at the end
    let mut acc = BigInt::zero();
    for (idx, &r) in rows.iter().enumerate() {
        let i = idx as i64 + 1;
        let shifted = BigInt::from(2 * r as i64 - 2 * i + 1);
        let base = BigInt::from(1 - 2 * i);
        acc += num_traits::pow(shifted, k as usize) - num_traits::pow(base, k as usize);
    }
    Rational::new(acc, BigInt::one() << k)
}

type PowerSumKey = (u32, Partition);

static POWER_SUMS: RwLock<Option<HashMap<PowerSumKey, Rational>>> = RwLock::new(None);

/// `p_k(λ)`, memoized per `(k, λ)`.
pub fn shifted_power_sum(k: u32, lambda: &Partition) -> Rational {
    assert!(k >= 1, "shifted power sums start at order 1");
    let key = (k, lambda.clone());
    if let Some(v) = POWER_SUMS.read().unwrap().as_ref().and_then(|m| m.get(&key)) {
        return v.clone();
    }
    let value = row_power_sum(k, lambda.parts()) + pk_constant(k);
    POWER_SUMS
        .write()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .entry(key)
        .or_insert(value)
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), int(0));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_recurrence_holds() {
        for n in 1..30usize {
            let mut acc = Rational::zero();
            let mut binom = BigInt::one();
            for j in 0..=n {
                acc += bernoulli(j as u32) * Rational::from_integer(binom.clone());
                binom = binom * (n + 1 - j) / (j + 1);
            }
            assert!(acc.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn constants() {
        assert_eq!(pk_constant(1), rat(-1, 24));
        assert_eq!(pk_constant(2), int(0));
        assert_eq!(pk_constant(3), rat(7, 960));
        for k in 1..20 {
            assert_eq!(pk_constant(k).is_zero(), k % 2 == 0, "k = {k}");
        }
    }

    #[test]
    fn power_sums() {
        let l21 = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(shifted_power_sum(1, &l21), rat(71, 24));
        assert_eq!(shifted_power_sum(3, &l21), rat(6487, 960));
        assert_eq!(shifted_power_sum(5, &Partition::empty()), pk_constant(5));
    }
}

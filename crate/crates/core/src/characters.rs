//! Irreducible characters of the symmetric group by the Murnaghan–Nakayama
//! rule, and the character-sum form of the descendent invariants.
//!
//! Rim hooks are removed on beta-sets (first-column hook lengths): stripping a
//! hook of length `r` moves one bead from `b` to the empty position `b − r`,
//! with sign `(−1)^{beads strictly between}`.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::{centralizer_order, partitions_of, Partition};
use crate::descendents::DescendentLabel;
use crate::rational::Rational;
use crate::shifted_symmetric::shifted_power_sum;
use crate::{Error, Result};

/// `χ^λ_μ` for all `λ, μ ⊢ d`, rows and columns in canonical partition order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    d: u32,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(d: u32) -> Self {
        let partitions = partitions_of(d);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut values = vec![vec![0i64; partitions.len()]; partitions.len()];
        for (j, mu) in partitions.iter().enumerate() {
            let mut memo = HashMap::new();
            for (i, lambda) in partitions.iter().enumerate() {
                values[i][j] = mn_recursive(beta_set(lambda), mu.parts(), &mut memo);
            }
        }
        CharacterTable {
            d,
            partitions,
            index,
            values,
        }
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        let i = *self.index.get(lambda)?;
        let j = *self.index.get(mu)?;
        Some(self.values[i][j])
    }

    /// Row `λ` as `(μ, χ^λ_μ)` pairs.
    pub fn row(&self, i: usize) -> &[i64] {
        &self.values[i]
    }
}

static TABLES: RwLock<Option<HashMap<u32, Arc<CharacterTable>>>> = RwLock::new(None);

/// The character table of `S_d`, materialized once per degree.
pub fn character_table(d: u32) -> Arc<CharacterTable> {
    if let Some(t) = TABLES.read().unwrap().as_ref().and_then(|m| m.get(&d)) {
        return Arc::clone(t);
    }
    let table = Arc::new(CharacterTable::new(d));
    let mut guard = TABLES.write().unwrap();
    Arc::clone(guard.get_or_insert_with(HashMap::new).entry(d).or_insert(table))
}

pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            lambda: lambda.size(),
            mu: mu.size(),
        });
    }
    let table = character_table(lambda.size());
    table
        .get(lambda, mu)
        .ok_or_else(|| Error::Internal(format!("missing character entry {lambda} {mu}")))
}

fn beta_set(lambda: &Partition) -> BTreeSet<u32> {
    let l = lambda.len() as u32;
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i as u32)
        .collect()
}

fn partition_of_beta(beta: &BTreeSet<u32>) -> Partition {
    let parts: Vec<u32> = beta
        .iter()
        .rev()
        .enumerate()
        .map(|(i, &b)| b + i as u32 + 1 - beta.len() as u32)
        .filter(|&p| p > 0)
        .collect();
    Partition::new(parts).expect("beta-set decodes to a partition")
}

fn mn_recursive(
    beta: BTreeSet<u32>,
    mu: &[u32],
    memo: &mut HashMap<(Partition, usize), i64>,
) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (partition_of_beta(&beta), mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0i64;
    for &b in &beta {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let height = beta.range(b - r + 1..b).count();
        let mut next = beta.clone();
        next.remove(&b);
        next.insert(b - r);
        let sub = mn_recursive(next, rest, memo);
        if height.is_multiple_of(2) {
            total += sub;
        } else {
            total -= sub;
        }
    }
    memo.insert(key, total);
    total
}

/// `(1/Π(k_i+1)!) Σ_{λ,μ ⊢ d} (1/z_μ)(χ^λ_μ)² Π_i p_{k_i+1}(λ)`.
///
/// The slow double sum over pairs of partitions; kept as an independent check
/// on [`crate::descendents::gw_invariant`].
pub fn gw_character_oracle(label: &DescendentLabel, d: u32) -> Rational {
    let table = character_table(d);
    let parts = table.partitions();
    let inv_z: Vec<Rational> = parts
        .iter()
        .map(|mu| Rational::new(1.into(), centralizer_order(mu)))
        .collect();
    let mut total = Rational::zero();
    for (i, lambda) in parts.iter().enumerate() {
        let mut weight = Rational::zero();
        for (j, &chi) in table.row(i).iter().enumerate() {
            if chi != 0 {
                weight += &inv_z[j] * Rational::from_integer(BigInt::from(chi * chi));
            }
        }
        if weight.is_zero() {
            continue;
        }
        let mut prod = weight;
        for &k in label.insertions() {
            prod *= shifted_power_sum(k + 1, lambda);
        }
        total += prod;
    }
    total / Rational::from_integer(label.factorial_denominator())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(character(&p(&[3]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(character(&Partition::empty(), &Partition::empty()).unwrap(), 1);
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(
            character(&p(&[2]), &p(&[1])),
            Err(Error::SizeMismatch { lambda: 2, mu: 1 })
        );
    }

    #[test]
    fn trivial_and_sign() {
        for d in 1..=7u32 {
            let t = character_table(d);
            let sign = Partition::new(vec![1; d as usize]).unwrap();
            for mu in t.partitions() {
                assert_eq!(t.get(&p(&[d]), mu), Some(1));
                let e = if (d as usize - mu.len()).is_multiple_of(2) { 1 } else { -1 };
                assert_eq!(t.get(&sign, mu), Some(e));
            }
        }
    }

    #[test]
    fn hook_length_dimensions() {
        // f^λ = d! / Π hooks
        for d in 1..=8u32 {
            let t = character_table(d);
            let identity = Partition::new(vec![1; d as usize]).unwrap();
            for lambda in t.partitions() {
                let conj: Vec<u32> = (0..lambda.parts()[0])
                    .map(|c| lambda.parts().iter().filter(|&&r| r > c).count() as u32)
                    .collect();
                let mut hooks: u64 = 1;
                for (i, &row) in lambda.parts().iter().enumerate() {
                    for j in 0..row {
                        hooks *= (row - j - 1 + conj[j as usize] - i as u32) as u64;
                    }
                }
                let fact: u64 = (1..=d as u64).product();
                assert_eq!(t.get(lambda, &identity).unwrap() as u64, fact / hooks);
            }
        }
    }
}

//! Integer partitions and the counting functions built on them.
//!
//! Enumeration order is descending reverse-lexicographic throughout: `[n]`
//! first, `[1, ..., 1]` last. Matrix columns of the descendent matroids and the
//! digit keys of the decomposition tables are indexed in this order, so it is
//! part of the public contract.

use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates `parts` as given; they must already be positive and weakly
    /// decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Sorts arbitrary positive parts into canonical order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiplicities `(part, m_part)` in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Partitions of `n` with every part in `min_part..=max_part`, in descending
/// reverse-lexicographic order.
pub fn partitions_bounded(n: u32, min_part: u32, max_part: u32) -> Vec<Partition> {
    fn rec(rem: u32, min: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        let mut first = max.min(rem);
        while first >= min {
            prefix.push(first);
            rec(rem - first, min, first, prefix, out);
            prefix.pop();
            first -= 1;
        }
    }
    let mut out = Vec::new();
    rec(n, min_part.max(1), max_part, &mut Vec::new(), &mut out);
    out
}

pub fn partitions_of(n: u32) -> Vec<Partition> {
    partitions_bounded(n, 1, n)
}

/// Partitions of `k` with no part equal to 1. Under `λ_i ↦ τ_{λ_i − 2}` this is
/// the ground set of the weight-`k` descendent matroid, in canonical order.
pub fn partitions_min_two(k: u32) -> Vec<Partition> {
    partitions_bounded(k, 2, k)
}

/// `z_λ = (Π m_i!)(Π λ_i)`.
pub fn centralizer_order(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (part, m) in lambda.multiplicities() {
        for j in 1..=m {
            z *= j;
        }
        for _ in 0..m {
            z *= part;
        }
    }
    z
}

static PARTITION_COUNTS: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// `p(d)` by Euler's pentagonal recurrence, memoized.
pub fn partition_count(d: u32) -> BigInt {
    let d = d as usize;
    {
        let cache = PARTITION_COUNTS.read().unwrap();
        if let Some(v) = cache.get(d) {
            return v.clone();
        }
    }
    let mut cache = PARTITION_COUNTS.write().unwrap();
    // another writer may have filled it meanwhile; extension is idempotent
    while cache.len() <= d {
        let n = cache.len() as i64;
        let next = if n == 0 {
            BigInt::one()
        } else {
            let mut acc = BigInt::zero();
            for j in 1i64.. {
                let g1 = j * (3 * j - 1) / 2;
                if g1 > n {
                    break;
                }
                let g2 = j * (3 * j + 1) / 2;
                let mut term = cache[(n - g1) as usize].clone();
                if g2 <= n {
                    term += &cache[(n - g2) as usize];
                }
                if j % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        };
        cache.push(next);
    }
    cache[d].clone()
}

/// Generalized pentagonal number `(3j² − j)/2` for `j ∈ ℤ`.
pub fn pentagonal(j: i64) -> u64 {
    ((3 * j * j - j) / 2) as u64
}

/// All `(d₁, d₂)` with `d₁ ∈ ℤ`, `d₂ ≥ 0` and `3d₁² − d₁ + 2d₂ = 2d`, ordered by
/// increasing pentagonal number (`d₁ = 0, 1, −1, 2, −2, …`).
pub fn pentagonal_pairs(d: u32) -> Vec<(i64, u64)> {
    let d = d as u64;
    let mut out = Vec::new();
    for m in 0i64.. {
        let mut any = false;
        let candidates: &[i64] = if m == 0 { &[0] } else { &[m, -m] };
        for &j in candidates {
            let g = pentagonal(j);
            if g <= d {
                out.push((j, d - g));
                any = true;
            }
        }
        if !any {
            break;
        }
    }
    out
}

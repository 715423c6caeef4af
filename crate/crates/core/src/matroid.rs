//! Linear matroids over `Q` and the descendent matroids `M_k`.
//!
//! The ground set of `M_k` is every stationary descendent of weight `k`, in the
//! canonical order of [`crate::partitions_min_two`]; the column of a label is
//! its coordinate vector in the Eisenstein basis of `QM_k`.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::combinatorics::partitions_min_two;
use crate::descendents::{to_eisenstein, DescendentLabel};
use crate::linalg::{integer_rank, integer_vector};
use crate::quasimodular::qm_dimension;
use crate::rational::Rational;
use crate::{Error, Result};

/// Largest weight `descendent_matroid` builds by default.
pub const DEFAULT_MAX_WEIGHT: u32 = 18;

/// Largest ground set the subset-sum Tutte computation accepts.
pub const TUTTE_CAP: usize = 16;

/// A matroid represented by labelled rational column vectors of equal length.
#[derive(Clone, Debug)]
pub struct LinearMatroid<L = DescendentLabel> {
    labels: Vec<L>,
    columns: Vec<Vec<Rational>>,
    // columns scaled to integers; same matroid, cheaper elimination
    scaled: Vec<Vec<BigInt>>,
    dimension: usize,
    rank: usize,
}

impl<L: Clone + Eq + Hash + fmt::Debug + Send + Sync> LinearMatroid<L> {
    /// `columns[i]` is the vector of `labels[i]`; every column has length
    /// `dimension`.
    pub fn new(labels: Vec<L>, columns: Vec<Vec<Rational>>, dimension: usize) -> Result<Self> {
        if labels.len() != columns.len() {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} columns",
                labels.len(),
                columns.len()
            )));
        }
        if let Some(c) = columns.iter().find(|c| c.len() != dimension) {
            return Err(Error::InvalidArgument(format!(
                "column of length {} in a matroid of dimension {dimension}",
                c.len()
            )));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(*l)) {
            return Err(Error::InvalidArgument(format!("duplicate label {dup:?}")));
        }
        let scaled: Vec<Vec<BigInt>> = columns.iter().map(|c| integer_vector(c)).collect();
        let rank = integer_rank(&scaled);
        Ok(LinearMatroid {
            labels,
            columns,
            scaled,
            dimension,
            rank,
        })
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn columns(&self) -> &[Vec<Rational>] {
        &self.columns
    }

    /// The representing matrix row by row (`dimension × |E|`).
    pub fn matrix_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.dimension)
            .map(|r| self.columns.iter().map(|c| c[r].clone()).collect())
            .collect()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rank_of(&self, indices: &[usize]) -> usize {
        let cols: Vec<Vec<BigInt>> = indices.iter().map(|&i| self.scaled[i].clone()).collect();
        integer_rank(&cols)
    }

    pub fn is_independent_indices(&self, indices: &[usize]) -> bool {
        self.rank_of(indices) == indices.len()
    }

    pub fn index_of(&self, label: &L) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(format!("{label:?}")))
    }

    pub fn indices_of(&self, labels: &[L]) -> Result<Vec<usize>> {
        labels.iter().map(|l| self.index_of(l)).collect()
    }

    pub fn is_independent(&self, subset: &[L]) -> Result<bool> {
        let idx = self.indices_of(subset)?;
        Ok(self.is_independent_indices(&idx))
    }

    /// Every basis as sorted index lists, in lexicographic order.
    pub fn bases(&self) -> Vec<Vec<usize>> {
        let candidates: Vec<Vec<usize>> = Combinations::new(self.size(), self.rank).collect();
        candidates
            .into_par_iter()
            .filter(|c| self.is_independent_indices(c))
            .collect()
    }

    /// Bases as label lists, same order as [`LinearMatroid::bases`].
    pub fn bases_labels(&self) -> Vec<Vec<L>> {
        self.bases()
            .into_iter()
            .map(|b| b.into_iter().map(|i| self.labels[i].clone()).collect())
            .collect()
    }

    pub fn bases_count(&self) -> usize {
        let candidates: Vec<Vec<usize>> = Combinations::new(self.size(), self.rank).collect();
        candidates
            .into_par_iter()
            .filter(|c| self.is_independent_indices(c))
            .count()
    }

    /// `T(x, y) = Σ_{A⊆E} (x−1)^{r(E)−r(A)} (y−1)^{|A|−r(A)}`, by enumerating
    /// all subsets. Refuses ground sets above [`TUTTE_CAP`].
    pub fn tutte(&self) -> Result<TuttePolynomial> {
        let n = self.size();
        if n > TUTTE_CAP {
            return Err(Error::TutteTooLarge {
                size: n,
                cap: TUTTE_CAP,
            });
        }
        // shifted[(a, b)] counts subsets contributing (x−1)^a (y−1)^b
        let shifted: BTreeMap<(u32, u32), i64> = (0u32..1 << n)
            .into_par_iter()
            .map(|mask| {
                let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                let r = self.rank_of(&subset);
                ((self.rank - r) as u32, (subset.len() - r) as u32)
            })
            .fold(BTreeMap::new, |mut acc, key| {
                *acc.entry(key).or_insert(0i64) += 1;
                acc
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            });
        let mut coeffs: BTreeMap<(u32, u32), i64> = BTreeMap::new();
        for (&(a, b), &count) in &shifted {
            for i in 0..=a {
                for j in 0..=b {
                    let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                    let c = count * binomial(a, i) * binomial(b, j) * sign;
                    *coeffs.entry((i, j)).or_insert(0) += c;
                }
            }
        }
        coeffs.retain(|_, c| *c != 0);
        Ok(TuttePolynomial { coeffs })
    }

    /// `M | S`, keeping the ground-set order of `self`.
    pub fn restrict(&self, subset: &[L]) -> Result<Self> {
        let mut idx = self.indices_of(subset)?;
        idx.sort_unstable();
        idx.dedup();
        Ok(self.restrict_indices(&idx))
    }

    pub fn restrict_indices(&self, indices: &[usize]) -> Self {
        let labels = indices.iter().map(|&i| self.labels[i].clone()).collect();
        let columns = indices.iter().map(|&i| self.columns[i].clone()).collect();
        let scaled: Vec<Vec<BigInt>> = indices.iter().map(|&i| self.scaled[i].clone()).collect();
        let rank = integer_rank(&scaled);
        LinearMatroid {
            labels,
            columns,
            scaled,
            dimension: self.dimension,
            rank,
        }
    }

    /// `Some((r, n))` when this is the uniform matroid `U_{r,n}`.
    pub fn is_uniform(&self) -> Option<(usize, usize)> {
        let n = self.size();
        let r = self.rank;
        let expected = binomial(n as u32, r as u32);
        (self.bases_count() as i64 == expected).then_some((r, n))
    }
}

fn binomial(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Index combinations of `0..n` of size `k` in lexicographic order.
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut c = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if c[i] < self.n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                self.current = Some(c);
                break;
            }
        }
        Some(out)
    }
}

/// Integer Tutte polynomial, `coeffs[(i, j)]` the coefficient of `x^i y^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuttePolynomial {
    coeffs: BTreeMap<(u32, u32), i64>,
}

impl TuttePolynomial {
    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), i64)>>(terms: I) -> Self {
        let mut coeffs = BTreeMap::new();
        for (k, v) in terms {
            *coeffs.entry(k).or_insert(0) += v;
        }
        coeffs.retain(|_, c| *c != 0);
        TuttePolynomial { coeffs }
    }

    pub fn coeff(&self, x_deg: u32, y_deg: u32) -> i64 {
        self.coeffs.get(&(x_deg, y_deg)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.coeffs.iter().map(|(&k, &v)| (k, v))
    }

    pub fn evaluate(&self, x: i64, y: i64) -> i64 {
        self.coeffs
            .iter()
            .map(|(&(i, j), &c)| c * x.pow(i) * y.pow(j))
            .sum()
    }
}

impl fmt::Display for TuttePolynomial {
    /// Terms by decreasing total degree, then decreasing `x` degree, e.g.
    /// `x^4 + 3*x^3 + y^3 + 6*x^2 + x*y + 4*y^2 + 9*x + 9*y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&((i, j), _)| (std::cmp::Reverse(i + j), std::cmp::Reverse(i)));
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, ((i, j), c)) in terms.into_iter().enumerate() {
            let var = |name: &str, e: u32| match e {
                0 => None,
                1 => Some(name.to_string()),
                _ => Some(format!("{name}^{e}")),
            };
            let vars: Vec<String> = [var("x", i), var("y", j)].into_iter().flatten().collect();
            let mag = c.abs();
            let body = match (vars.is_empty(), mag) {
                (true, _) => mag.to_string(),
                (false, 1) => vars.join("*"),
                (false, _) => format!("{mag}*{}", vars.join("*")),
            };
            match (n, c < 0) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// Ground set of `M_k` (or of `M_k | S^k` when `positive`), canonical order.
pub fn descendent_ground_set(k: u32, positive: bool) -> Vec<DescendentLabel> {
    partitions_min_two(k)
        .iter()
        .map(|p| DescendentLabel::from_partition(p).expect("parts are at least 2"))
        .filter(|l| !positive || l.is_positive())
        .collect()
}

/// `M_k` represented by `A_k`, or `M_k | S^k` when `positive`; `k` up to
/// [`DEFAULT_MAX_WEIGHT`].
pub fn descendent_matroid(k: u32, positive: bool) -> Result<LinearMatroid> {
    descendent_matroid_with_cap(k, positive, DEFAULT_MAX_WEIGHT)
}

pub fn descendent_matroid_with_cap(k: u32, positive: bool, max_weight: u32) -> Result<LinearMatroid> {
    if !k.is_multiple_of(2) || k == 0 {
        return Err(Error::OddWeight(k));
    }
    if k > max_weight {
        return Err(Error::WeightOutOfRange {
            weight: k,
            min: 2,
            max: max_weight,
        });
    }
    let labels = descendent_ground_set(k, positive);
    let columns = labels
        .par_iter()
        .map(|l| Ok(to_eisenstein(l)?.into_iter().map(|(_, c)| c).collect()))
        .collect::<Result<Vec<Vec<Rational>>>>()?;
    LinearMatroid::new(labels, columns, qm_dimension(k)?)
}

/// Labels removed from the 1-, 2- and 3-pointed part of `S^k` in the weight
/// 14, 16 and 18 restrictions.
pub fn named_restriction_exclusions(k: u32) -> Result<Vec<DescendentLabel>> {
    let l = |v: &[u32]| DescendentLabel::new(v.to_vec());
    match k {
        14 => Ok(vec![l(&[3, 3, 2])]),
        16 => Ok(vec![l(&[4, 3, 3])]),
        18 => Ok(vec![l(&[4, 4, 4]), l(&[5, 4, 3]), l(&[5, 5, 2]), l(&[6, 3, 3])]),
        _ => Err(Error::UnsupportedRestriction(k)),
    }
}

/// `M_k | S'` where `S'` keeps the positive descendents with at most three
/// insertions, minus [`named_restriction_exclusions`].
pub fn named_restriction(k: u32) -> Result<LinearMatroid> {
    let excluded = named_restriction_exclusions(k)?;
    let m = descendent_matroid(k, true)?;
    let keep: Vec<DescendentLabel> = m
        .labels()
        .iter()
        .filter(|l| l.len() <= 3 && !excluded.contains(l))
        .cloned()
        .collect();
    m.restrict(&keep)
}

//! Ground truth: partitions of n classified by how many parts exceed 1.
//!
//! Two independent routes produce the same [`ClassificationRow`]: walking
//! every partition ([`classify_by_enumeration`]) and a counting DP
//! ([`classify_by_counting`]).

use serde::{Deserialize, Serialize};

use crate::count::BigCount;
use crate::error::{PartitionError, Result};

/// Default largest n accepted by [`enumerate_partitions`]. p(60) = 966467.
pub const DEFAULT_ENUMERATION_CEILING: usize = 60;

/// A partition, parts stored in nonincreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts` into nonincreasing order. Zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts different from 1.
    pub fn non_unit_parts(&self) -> usize {
        self.parts.iter().take_while(|&&p| p >= 2).count()
    }
}

/// Partitions of n in reverse-lexicographic order, from `[n]` down to `[1; n]`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Partitions {
    fn new(n: usize) -> Self {
        Partitions {
            current: if n == 0 { None } else { Some(vec![n]) },
        }
    }

    fn advance(parts: &mut Vec<usize>) -> bool {
        let Some(idx) = parts.iter().rposition(|&p| p > 1) else {
            return false;
        };
        let ones = parts.len() - idx - 1;
        let v = parts[idx] - 1;
        parts.truncate(idx);
        // redistribute v + 1 + ones into parts no larger than v
        let mut rem = v + 1 + ones;
        while rem >= v {
            parts.push(v);
            rem -= v;
        }
        if rem > 0 {
            parts.push(rem);
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.as_mut()?;
        let out = Partition { parts: cur.clone() };
        if !Self::advance(cur) {
            self.current = None;
        }
        Some(out)
    }
}

/// Streams every partition of n, guarded by [`DEFAULT_ENUMERATION_CEILING`].
pub fn enumerate_partitions(n: usize) -> Result<Partitions> {
    enumerate_partitions_capped(n, DEFAULT_ENUMERATION_CEILING)
}

pub fn enumerate_partitions_capped(n: usize, ceiling: usize) -> Result<Partitions> {
    if n == 0 {
        return Err(PartitionError::ZeroN);
    }
    if n > ceiling {
        return Err(PartitionError::EnumerationCeiling { n, ceiling });
    }
    Ok(Partitions::new(n))
}

/// One row of the classification table: `counts[k]` partitions of n have
/// exactly k parts different from 1, for k = 0 ..= floor(n/2).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRow {
    pub n: usize,
    pub counts: Vec<BigCount>,
}

impl ClassificationRow {
    pub fn total(&self) -> BigCount {
        self.counts.iter().sum()
    }

    /// Re-labels into A-table form: a[0] = counts[0] + counts[1],
    /// a[j] = counts[j + 1].
    pub fn to_a_row(&self) -> ATableRow {
        let mut a = Vec::with_capacity(self.counts.len().saturating_sub(1).max(1));
        let first = self.counts.first().cloned().unwrap_or_default()
            + self.counts.get(1).cloned().unwrap_or_default();
        a.push(first);
        a.extend(self.counts.iter().skip(2).cloned());
        ATableRow { n: self.n, a }
    }
}

/// One row of the A-table: `a[beta]` = A_n^beta for beta = 0 ..= r(n).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ATableRow {
    pub n: usize,
    pub a: Vec<BigCount>,
}

impl ATableRow {
    pub fn get(&self, beta: usize) -> BigCount {
        self.a.get(beta).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigCount {
        self.a.iter().sum()
    }
}

pub fn classify_by_enumeration(n: usize) -> Result<ClassificationRow> {
    classify_by_enumeration_capped(n, DEFAULT_ENUMERATION_CEILING)
}

pub fn classify_by_enumeration_capped(n: usize, ceiling: usize) -> Result<ClassificationRow> {
    let mut tally = vec![0u64; n / 2 + 1];
    for p in enumerate_partitions_capped(n, ceiling)? {
        tally[p.non_unit_parts()] += 1;
    }
    Ok(ClassificationRow {
        n,
        counts: tally.into_iter().map(BigCount::from).collect(),
    })
}

/// Counting DP shared across every n up to a bound.
///
/// `exact[k][x]` holds the number of partitions of x into exactly k parts.
/// A partition of m into exactly k parts >= 2 corresponds to one of m - k into
/// exactly k parts, so
/// `counts_n[k] = sum_{m=2k}^{n} exact[k][m - k]`.
#[derive(Debug, Clone)]
pub struct ClassificationTable {
    n_max: usize,
    /// `rows[n - 1]` is the classification of n.
    rows: Vec<ClassificationRow>,
}

impl ClassificationTable {
    pub fn build(n_max: usize) -> Self {
        let kmax = n_max / 2;
        // exact[k][x], x in 0..=n_max - k
        let mut exact: Vec<Vec<BigCount>> = Vec::with_capacity(kmax + 1);
        exact.push({
            let mut v = vec![BigCount::zero(); n_max + 1];
            v[0] = BigCount::one();
            v
        });
        for k in 1..=kmax {
            let mut v = vec![BigCount::zero(); n_max + 1];
            for x in k..=n_max {
                // smallest part is 1 (drop it) or every part is >= 2 (subtract 1 from each)
                let mut val = exact[k - 1][x - 1].clone();
                val += &v[x - k];
                v[x] = val;
            }
            exact.push(v);
        }

        let mut rows = Vec::with_capacity(n_max);
        // running[k] = sum_{m=2k}^{n} exact[k][m - k]
        let mut running = vec![BigCount::zero(); kmax + 1];
        // m = 0: the all-ones partition
        running[0] = BigCount::one();
        for n in 1..=n_max {
            for (k, acc) in running.iter_mut().enumerate().take(n / 2 + 1) {
                *acc += &exact[k][n - k];
            }
            rows.push(ClassificationRow {
                n,
                counts: running[..=n / 2].to_vec(),
            });
        }
        ClassificationTable { n_max, rows }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn row(&self, n: usize) -> Option<&ClassificationRow> {
        n.checked_sub(1).and_then(|i| self.rows.get(i))
    }

    pub fn rows(&self) -> &[ClassificationRow] {
        &self.rows
    }
}

pub fn classify_by_counting(n: usize) -> Result<ClassificationRow> {
    if n == 0 {
        return Err(PartitionError::ZeroN);
    }
    Ok(ClassificationTable::build(n)
        .row(n)
        .cloned()
        .expect("row n is built"))
}

/// Table II row of n from the counting oracle.
pub fn semantic_a_row(n: usize) -> Result<ATableRow> {
    Ok(classify_by_counting(n)?.to_a_row())
}

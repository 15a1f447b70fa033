//! Generalized pentagonal numbers and Euler's recurrence for p(n).

use crate::count::BigCount;

/// A generalized pentagonal number g = k(3k-1)/2 for nonzero k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PentagonalIndex {
    pub k: i64,
    pub g: usize,
}

impl PentagonalIndex {
    pub fn new(k: i64) -> Self {
        assert!(k != 0, "pentagonal index k must be nonzero");
        let g = k * (3 * k - 1) / 2;
        PentagonalIndex { k, g: g as usize }
    }

    /// (-1)^(k+1): true for a `+` term.
    pub fn is_positive(&self) -> bool {
        self.k.rem_euclid(2) == 1
    }
}

/// All g_k <= `limit` for k = 1, -1, 2, -2, ..., in increasing order.
pub fn pentagonal_numbers_upto(limit: usize) -> Vec<PentagonalIndex> {
    let mut out = Vec::new();
    let mut k: i64 = 1;
    loop {
        let pos = PentagonalIndex::new(k);
        if pos.g > limit {
            break;
        }
        out.push(pos);
        let neg = PentagonalIndex::new(-k);
        if neg.g > limit {
            break;
        }
        out.push(neg);
        k += 1;
    }
    out
}

/// Growable table of p(0), p(1), ... filled by Euler's recurrence.
///
/// Filled sequentially; once filled it can be shared read-only across
/// threads through `&EulerCache`.
#[derive(Debug, Clone)]
pub struct EulerCache {
    values: Vec<BigCount>,
    pentagonals: Vec<PentagonalIndex>,
}

impl Default for EulerCache {
    fn default() -> Self {
        Self::new()
    }
}

impl EulerCache {
    pub fn new() -> Self {
        EulerCache {
            values: vec![BigCount::one()],
            pentagonals: Vec::new(),
        }
    }

    /// Seeds the table from previously computed values p(0..len).
    ///
    /// Returns `None` if `values` is empty or `values[0] != 1`.
    pub fn from_values(values: Vec<BigCount>) -> Option<Self> {
        if values.first() != Some(&BigCount::one()) {
            return None;
        }
        Some(EulerCache {
            values,
            pentagonals: Vec::new(),
        })
    }

    /// Largest n currently held.
    pub fn filled_to(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[BigCount] {
        &self.values
    }

    /// p(n) if already in the table.
    pub fn get(&self, n: usize) -> Option<&BigCount> {
        self.values.get(n)
    }

    /// Extends the table through `n`.
    pub fn fill_to(&mut self, n: usize) {
        if n <= self.filled_to() {
            return;
        }
        if self.pentagonals.last().is_none_or(|p| p.g < n) {
            self.pentagonals = pentagonal_numbers_upto(n);
        }
        self.values.reserve(n - self.filled_to());
        for m in self.values.len()..=n {
            let mut plus = BigCount::zero();
            let mut minus = BigCount::zero();
            for pent in self.pentagonals.iter().take_while(|p| p.g <= m) {
                let term = &self.values[m - pent.g];
                if pent.is_positive() {
                    plus += term;
                } else {
                    minus += term;
                }
            }
            self.values.push(&plus - &minus);
        }
    }

    pub fn p(&mut self, n: usize) -> &BigCount {
        self.fill_to(n);
        &self.values[n]
    }
}

/// p(n) by Euler's pentagonal recurrence, extending `cache` through `n`.
pub fn p_euler(n: usize, cache: &mut EulerCache) -> BigCount {
    cache.p(n).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(limit: usize) -> Vec<(i64, usize)> {
        pentagonal_numbers_upto(limit)
            .into_iter()
            .map(|p| (p.k, p.g))
            .collect()
    }

    #[test]
    fn pentagonal_examples() {
        assert_eq!(gs(7), vec![(1, 1), (-1, 2), (2, 5), (-2, 7)]);
        assert!(gs(0).is_empty());
        assert_eq!(*gs(12).last().unwrap(), (3, 12));
    }

    #[test]
    fn pentagonal_matches_brute_force() {
        let limit = 2000usize;
        let mut brute: Vec<usize> = (-100i64..=100)
            .filter(|&k| k != 0)
            .map(|k| (k * (3 * k - 1) / 2) as usize)
            .filter(|&g| g <= limit)
            .collect();
        brute.sort_unstable();
        let got: Vec<usize> = pentagonal_numbers_upto(limit).iter().map(|p| p.g).collect();
        assert_eq!(got, brute);
        assert!(got.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn euler_small_values() {
        let mut cache = EulerCache::new();
        assert_eq!(p_euler(0, &mut cache), 1u64);
        assert_eq!(p_euler(1, &mut cache), 1u64);
        let expect = [1u64, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(p_euler(i + 1, &mut cache), *e);
        }
        assert_eq!(p_euler(22, &mut cache), 1002u64);
        assert_eq!(p_euler(100, &mut cache), 190_569_292u64);
    }

    #[test]
    fn cache_grows_without_recomputation() {
        let mut a = EulerCache::new();
        a.fill_to(50);
        let snapshot = a.values()[..=50].to_vec();
        a.fill_to(120);
        assert_eq!(&a.values()[..=50], &snapshot[..]);
        let mut b = EulerCache::new();
        b.fill_to(120);
        assert_eq!(a.values(), b.values());
    }

    #[test]
    fn seeded_cache_continues() {
        let mut full = EulerCache::new();
        full.fill_to(80);
        let mut seeded = EulerCache::from_values(full.values()[..=30].to_vec()).unwrap();
        seeded.fill_to(80);
        assert_eq!(seeded.values(), full.values());
        assert!(EulerCache::from_values(vec![]).is_none());
        assert!(EulerCache::from_values(vec![BigCount::from(2u64)]).is_none());
    }
}

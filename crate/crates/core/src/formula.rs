//! The non-recursive closed formula p(n) = sum_{beta=0}^{r} A_n^beta.
//!
//! For beta >= 2,
//!
//! ```text
//! A_n^beta = sum over (alpha_1 .. alpha_{beta-1}) of A^1_{n + 2 - 2 beta - gamma},
//! gamma    = 3 alpha_1 + 4 alpha_2 + ... + (beta + 1) alpha_{beta-1},
//! ```
//!
//! with alpha_i ranging over `0..=s-(i+1)`, and pinned to 0 when that bound
//! is not positive. Two evaluators are provided: a literal nested iteration
//! ([`a_beta_naive`]) and a coefficient DP over gamma ([`a_beta_dp`]).
//!
//! Since A^1 vanishes at arguments <= 1, only gamma <= n - 2 beta can
//! contribute. Both evaluators use that bound.

use serde::{Deserialize, Serialize};

use crate::count::BigCount;
use crate::error::{PartitionError, Result};
use crate::params::{a1, a1_u64, params_with, FormulaParams, SMode};

/// Tuple-count ceiling for [`a_beta_naive`].
pub const DEFAULT_NAIVE_CEILING: u64 = 10_000_000;

/// Multiplicity cap of alpha_i (1-based): max(0, s - (i + 1)).
pub fn alpha_cap(i: usize, s: usize) -> usize {
    s.saturating_sub(i + 1)
}

/// gamma weight of alpha_i (1-based).
pub fn alpha_weight(i: usize) -> usize {
    i + 2
}

/// One index tuple (alpha_1, ..., alpha_{beta-1}) of the nested sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaTuple {
    pub beta: usize,
    pub alphas: Vec<usize>,
}

impl AlphaTuple {
    pub fn gamma(&self) -> usize {
        self.alphas
            .iter()
            .enumerate()
            .map(|(idx, &a)| alpha_weight(idx + 1) * a)
            .sum()
    }

    /// Whether every component lies within its cap for the given s.
    pub fn is_valid(&self, s: usize) -> bool {
        self.beta >= 2
            && self.alphas.len() == self.beta - 1
            && self
                .alphas
                .iter()
                .enumerate()
                .all(|(idx, &a)| a <= alpha_cap(idx + 1, s))
    }
}

/// N(gamma): how many alpha tuples reach each gamma weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaWeightVector {
    pub beta: usize,
    pub s: usize,
    /// `counts[g]` = N(g) for g in `0..=gamma_max`.
    pub counts: Vec<BigCount>,
}

impl GammaWeightVector {
    pub fn gamma_max(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn get(&self, gamma: usize) -> BigCount {
        self.counts.get(gamma).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigCount {
        self.counts.iter().sum()
    }
}

/// Multiplies `poly` (truncated at its length) by
/// 1 + x^w + x^{2w} + ... + x^{cap w}.
fn mul_bounded_geometric(poly: &[BigCount], weight: usize, cap: usize) -> Vec<BigCount> {
    if cap == 0 {
        return poly.to_vec();
    }
    let span = (cap + 1) * weight;
    let mut out: Vec<BigCount> = Vec::with_capacity(poly.len());
    for g in 0..poly.len() {
        // out[g] = out[g - w] + poly[g] - poly[g - (cap+1) w]
        let mut v = poly[g].clone();
        if g >= weight {
            v += &out[g - weight];
        }
        if g >= span {
            v = &v - &poly[g - span];
        }
        out.push(v);
    }
    out
}

/// N(gamma) for gamma <= `gamma_max`: coefficients of
/// prod_{i=1}^{beta-1} (1 + x^{w_i} + ... + x^{cap_i w_i}) with w_i = i + 2.
pub fn gamma_weights(beta: usize, s: usize, gamma_max: usize) -> GammaWeightVector {
    let mut counts = vec![BigCount::zero(); gamma_max + 1];
    counts[0] = BigCount::one();
    for i in 1..beta {
        counts = mul_bounded_geometric(&counts, alpha_weight(i), alpha_cap(i, s));
    }
    GammaWeightVector { beta, s, counts }
}

fn check_beta(beta: usize) -> Result<()> {
    if beta < 2 {
        Err(PartitionError::BetaTooSmall(beta))
    } else {
        Ok(())
    }
}

/// Largest useful gamma for (n, beta), or `None` if no term can be nonzero.
fn gamma_limit(n: usize, beta: usize) -> Option<usize> {
    n.checked_sub(2 * beta)
}

fn a1_arg(n: usize, beta: usize, gamma: usize) -> i64 {
    n as i64 + 2 - 2 * beta as i64 - gamma as i64
}

/// A_n^beta as sum_gamma N(gamma) * A^1_{n+2-2beta-gamma}.
pub fn a_beta_dp(n: usize, beta: usize, params: &FormulaParams) -> Result<BigCount> {
    check_beta(beta)?;
    let Some(limit) = gamma_limit(n, beta) else {
        return Ok(BigCount::zero());
    };
    let weights = gamma_weights(beta, params.s, limit);
    Ok(weighted_a1_sum(n, beta, &weights.counts))
}

fn weighted_a1_sum(n: usize, beta: usize, counts: &[BigCount]) -> BigCount {
    let mut acc = BigCount::zero();
    for (gamma, mult) in counts.iter().enumerate() {
        if mult.is_zero() {
            continue;
        }
        let a = a1_u64(a1_arg(n, beta, gamma));
        if a != 0 {
            acc += mult.mul_u64(a);
        }
    }
    acc
}

/// Depth-first walk over alpha tuples with gamma <= `limit`, in the nested
/// sum's order (alpha_1 outermost). Stops early once `ceiling` tuples have
/// been visited.
struct TupleWalk<'a> {
    s: usize,
    limit: usize,
    ceiling: u64,
    visited: u64,
    alphas: Vec<usize>,
    visit: &'a mut dyn FnMut(&[usize], usize),
}

impl TupleWalk<'_> {
    fn descend(&mut self, depth: usize, gamma: usize) -> std::result::Result<(), ()> {
        if depth == self.alphas.len() {
            self.visited += 1;
            if self.visited > self.ceiling {
                return Err(());
            }
            (self.visit)(&self.alphas, gamma);
            return Ok(());
        }
        let i = depth + 1;
        let w = alpha_weight(i);
        for a in 0..=alpha_cap(i, self.s) {
            let g = gamma + a * w;
            if g > self.limit {
                break;
            }
            self.alphas[depth] = a;
            self.descend(depth + 1, g)?;
        }
        self.alphas[depth] = 0;
        Ok(())
    }
}

fn walk_tuples(
    beta: usize,
    s: usize,
    limit: usize,
    ceiling: u64,
    mut visit: impl FnMut(&[usize], usize),
) -> std::result::Result<u64, ()> {
    let mut walk = TupleWalk {
        s,
        limit,
        ceiling,
        visited: 0,
        alphas: vec![0; beta - 1],
        visit: &mut visit,
    };
    walk.descend(0, 0)?;
    Ok(walk.visited)
}

/// One term of the nested sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NaiveTerm {
    pub alphas: Vec<usize>,
    pub gamma: usize,
    /// Argument m of A^1_m.
    pub arg: i64,
    pub value: BigCount,
}

/// Every term of the nested sum for A_n^beta with a nonzero A^1 factor,
/// in iteration order.
pub fn naive_terms(
    n: usize,
    beta: usize,
    params: &FormulaParams,
    ceiling: u64,
) -> Result<Vec<NaiveTerm>> {
    check_beta(beta)?;
    let Some(limit) = gamma_limit(n, beta) else {
        return Ok(Vec::new());
    };
    let mut terms = Vec::new();
    walk_tuples(beta, params.s, limit, ceiling, |alphas, gamma| {
        let arg = a1_arg(n, beta, gamma);
        let value = a1(arg);
        if !value.is_zero() {
            terms.push(NaiveTerm {
                alphas: alphas.to_vec(),
                gamma,
                arg,
                value,
            });
        }
    })
    .map_err(|_| PartitionError::NaiveTooLarge { n, beta, ceiling })?;
    Ok(terms)
}

/// A_n^beta by literal nested iteration, with the default tuple ceiling.
pub fn a_beta_naive(n: usize, beta: usize, params: &FormulaParams) -> Result<BigCount> {
    a_beta_naive_capped(n, beta, params, DEFAULT_NAIVE_CEILING)
}

pub fn a_beta_naive_capped(
    n: usize,
    beta: usize,
    params: &FormulaParams,
    ceiling: u64,
) -> Result<BigCount> {
    naive_sum(n, beta, params, ceiling).map(|(v, _)| v)
}

/// The nested sum and the number of tuples visited.
fn naive_sum(
    n: usize,
    beta: usize,
    params: &FormulaParams,
    ceiling: u64,
) -> Result<(BigCount, u64)> {
    check_beta(beta)?;
    let Some(limit) = gamma_limit(n, beta) else {
        return Ok((BigCount::zero(), 0));
    };
    let mut acc = BigCount::zero();
    let visited = walk_tuples(beta, params.s, limit, ceiling, |_, gamma| {
        acc += a1(a1_arg(n, beta, gamma));
    })
    .map_err(|_| PartitionError::NaiveTooLarge { n, beta, ceiling })?;
    Ok((acc, visited))
}

/// A_n^beta with s = floor(n/3).
pub fn a_value(n: usize, beta: usize) -> BigCount {
    a_value_with(n, beta, SMode::Floor)
}

/// A_n^beta: n for beta = 0, A^1_n for beta = 1, the nested sum above that,
/// and 0 past r(n).
pub fn a_value_with(n: usize, beta: usize, mode: SMode) -> BigCount {
    let Ok(params) = params_with(n, mode) else {
        return BigCount::zero();
    };
    if beta > params.r {
        return BigCount::zero();
    }
    match beta {
        0 => BigCount::from(n),
        1 => a1(n as i64),
        _ => a_beta_dp(n, beta, &params).expect("beta >= 2"),
    }
}

/// All addends A_n^0 ..= A_n^r, sharing one gamma DP across beta.
pub fn closed_row(n: usize, mode: SMode) -> Result<Vec<BigCount>> {
    let params = params_with(n, mode)?;
    let mut row = Vec::with_capacity(params.r + 1);
    row.push(BigCount::from(n));
    if params.r >= 1 {
        row.push(a1(n as i64));
    }
    if params.r < 2 {
        return Ok(row);
    }
    // N for beta = 1 is the empty product; each step appends alpha_{beta-1}.
    let mut counts = vec![BigCount::zero(); n - 4 + 1];
    counts[0] = BigCount::one();
    for beta in 2..=params.r {
        let limit = n - 2 * beta;
        counts.truncate(limit + 1);
        let i = beta - 1;
        counts = mul_bounded_geometric(&counts, alpha_weight(i), alpha_cap(i, params.s));
        row.push(weighted_a1_sum(n, beta, &counts));
    }
    Ok(row)
}

/// p(n) by the closed formula with s = floor(n/3).
pub fn p_closed(n: usize) -> Result<BigCount> {
    p_closed_with(n, SMode::Floor)
}

pub fn p_closed_with(n: usize, mode: SMode) -> Result<BigCount> {
    Ok(closed_row(n, mode)?.into_iter().sum())
}

/// p(n) by the closed formula with every addend beta >= 2 evaluated by
/// literal nested iteration. `ceiling` bounds the tuples visited across all
/// addends together.
pub fn p_closed_naive(n: usize, mode: SMode, ceiling: u64) -> Result<BigCount> {
    let params = params_with(n, mode)?;
    let mut total = BigCount::from(n);
    if params.r >= 1 {
        total += a1(n as i64);
    }
    let mut budget = ceiling;
    for beta in 2..=params.r {
        let (v, visited) = naive_sum(n, beta, &params, budget)
            .map_err(|_| PartitionError::NaiveTooLarge { n, beta, ceiling })?;
        budget -= visited;
        total += v;
    }
    Ok(total)
}

/// Nonzero contributions N(gamma) * A^1_{arg} to one addend.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaTerm {
    pub gamma: usize,
    pub multiplicity: BigCount,
    pub arg: i64,
    pub a1: BigCount,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AddendTrace {
    pub beta: usize,
    pub value: BigCount,
    /// Empty for beta < 2.
    pub terms: Vec<GammaTerm>,
}

/// Per-beta breakdown of one closed-formula evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedTrace {
    pub params: FormulaParams,
    pub mode: SMode,
    pub addends: Vec<AddendTrace>,
    pub total: BigCount,
}

pub fn trace_closed(n: usize, mode: SMode) -> Result<ClosedTrace> {
    let params = params_with(n, mode)?;
    let mut addends = Vec::with_capacity(params.r + 1);
    for beta in 0..=params.r {
        let value = a_value_with(n, beta, mode);
        let mut terms = Vec::new();
        if beta >= 2 {
            if let Some(limit) = gamma_limit(n, beta) {
                let weights = gamma_weights(beta, params.s, limit);
                for (gamma, mult) in weights.counts.into_iter().enumerate() {
                    let arg = a1_arg(n, beta, gamma);
                    let a = a1(arg);
                    if !mult.is_zero() && !a.is_zero() {
                        terms.push(GammaTerm {
                            gamma,
                            multiplicity: mult,
                            arg,
                            a1: a,
                        });
                    }
                }
            }
        }
        addends.push(AddendTrace { beta, value, terms });
    }
    let total = addends.iter().map(|a| &a.value).sum();
    Ok(ClosedTrace {
        params,
        mode,
        addends,
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::params_for;

    const A22: [u64; 11] = [22, 100, 204, 241, 197, 125, 66, 30, 12, 4, 1];

    fn naive(n: usize, beta: usize) -> BigCount {
        a_beta_naive(n, beta, &params_for(n).unwrap()).unwrap()
    }

    fn dp(n: usize, beta: usize) -> BigCount {
        a_beta_dp(n, beta, &params_for(n).unwrap()).unwrap()
    }

    /// Every tuple in the full box, no pruning.
    fn brute_gamma_counts(beta: usize, s: usize, gamma_max: usize) -> Vec<u64> {
        let caps: Vec<usize> = (1..beta).map(|i| alpha_cap(i, s)).collect();
        let mut out = vec![0u64; gamma_max + 1];
        let mut idx = vec![0usize; caps.len()];
        loop {
            let t = AlphaTuple {
                beta,
                alphas: idx.clone(),
            };
            assert!(t.is_valid(s));
            let g = t.gamma();
            if g <= gamma_max {
                out[g] += 1;
            }
            let mut d = 0;
            loop {
                if d == caps.len() {
                    return out;
                }
                if idx[d] < caps[d] {
                    idx[d] += 1;
                    break;
                }
                idx[d] = 0;
                d += 1;
            }
        }
    }

    #[test]
    fn worked_example_naive() {
        for (beta, &want) in A22.iter().enumerate().skip(2) {
            assert_eq!(naive(22, beta), want, "beta={beta}");
        }
    }

    #[test]
    fn worked_example_dp() {
        for (beta, &want) in A22.iter().enumerate().skip(2) {
            assert_eq!(dp(22, beta), want, "beta={beta}");
        }
        assert_eq!(dp(11, 3), 7u64);
        assert_eq!(dp(11, 4), 2u64);
    }

    #[test]
    fn table_two_spot_values() {
        assert_eq!(naive(5, 2), 0u64);
        assert_eq!(naive(10, 3), 4u64);
        assert_eq!(a_value(4, 3), 0u64);
        assert_eq!(a_value(22, 0), 22u64);
        assert_eq!(a_value(22, 1), 100u64);
    }

    #[test]
    fn beta_below_two_rejected() {
        let p = params_for(10).unwrap();
        assert_eq!(a_beta_naive(10, 1, &p), Err(PartitionError::BetaTooSmall(1)));
        assert_eq!(a_beta_dp(10, 0, &p), Err(PartitionError::BetaTooSmall(0)));
    }

    #[test]
    fn naive_ceiling_enforced() {
        let p = params_for(80).unwrap();
        let err = a_beta_naive_capped(80, 8, &p, 10).unwrap_err();
        assert!(matches!(err, PartitionError::NaiveTooLarge { .. }));
    }

    #[test]
    fn gamma_weights_examples() {
        let w = gamma_weights(2, 7, 18);
        let ones: Vec<usize> = (0..=18).filter(|&g| w.get(g) == 1u64).collect();
        assert_eq!(ones, vec![0, 3, 6, 9, 12, 15]);
        assert_eq!(w.total(), 6u64);

        let w = gamma_weights(10, 7, 2);
        assert_eq!(w.counts, vec![BigCount::one(), BigCount::zero(), BigCount::zero()]);

        let w = gamma_weights(3, 7, 14);
        let got: Vec<u64> = w.counts.iter().map(|c| c.to_u64().unwrap()).collect();
        assert_eq!(got, brute_gamma_counts(3, 7, 14));
        // 3a + 4b: only (2, 1) reaches 10; 12 is reached by (4, 0) and (0, 3)
        assert_eq!(&got[..13], &[1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1, 2]);
        let contributions: u64 = got
            .iter()
            .enumerate()
            .map(|(g, &c)| c * a1_u64(22 + 2 - 6 - g as i64))
            .sum();
        assert_eq!(contributions, 241);
    }

    #[test]
    fn gamma_weights_match_brute_force() {
        for beta in 2..=6 {
            for s in 0..=9 {
                let gmax = 40;
                let got: Vec<u64> = gamma_weights(beta, s, gmax)
                    .counts
                    .iter()
                    .map(|c| c.to_u64().unwrap())
                    .collect();
                assert_eq!(got, brute_gamma_counts(beta, s, gmax), "beta={beta} s={s}");
            }
        }
    }

    #[test]
    fn gamma_mass_is_tuple_count() {
        for beta in 2..=7 {
            for s in 0..=8 {
                let caps: usize = (1..beta).map(|i| alpha_cap(i, s) + 1).product();
                let max_gamma: usize = (1..beta).map(|i| alpha_cap(i, s) * alpha_weight(i)).sum();
                assert_eq!(gamma_weights(beta, s, max_gamma).total(), caps as u64);
            }
        }
    }

    #[test]
    fn closed_row_matches_a_value() {
        for n in 1..=60 {
            for mode in [SMode::Floor, SMode::Ceil, SMode::Nearest] {
                let row = closed_row(n, mode).unwrap();
                let r = params_with(n, mode).unwrap().r;
                assert_eq!(row.len(), r + 1);
                for (beta, v) in row.iter().enumerate() {
                    assert_eq!(*v, a_value_with(n, beta, mode), "n={n} beta={beta}");
                }
            }
        }
    }

    #[test]
    fn p_closed_small() {
        assert_eq!(p_closed(1).unwrap(), 1u64);
        assert_eq!(p_closed(2).unwrap(), 2u64);
        assert_eq!(p_closed(3).unwrap(), 3u64);
        assert_eq!(p_closed(22).unwrap(), 1002u64);
        assert_eq!(p_closed(0), Err(PartitionError::ZeroN));
    }

    #[test]
    fn naive_total_matches_dp_total() {
        for n in 1..=40 {
            assert_eq!(
                p_closed_naive(n, SMode::Floor, DEFAULT_NAIVE_CEILING).unwrap(),
                p_closed(n).unwrap()
            );
        }
    }

    #[test]
    fn zero_region_past_r() {
        for n in 1..=40 {
            let r = params_for(n).unwrap().r;
            for beta in r + 1..r + 5 {
                assert!(a_value(n, beta).is_zero());
            }
        }
    }

    #[test]
    fn a22_3_has_thirteen_terms() {
        let terms = naive_terms(22, 3, &params_for(22).unwrap(), DEFAULT_NAIVE_CEILING).unwrap();
        assert_eq!(terms.len(), 13);
        let sum: BigCount = terms.iter().map(|t| &t.value).sum();
        assert_eq!(sum, 241u64);
    }

    #[test]
    fn trace_of_22() {
        let t = trace_closed(22, SMode::Floor).unwrap();
        let vals: Vec<u64> = t.addends.iter().map(|a| a.value.to_u64().unwrap()).collect();
        assert_eq!(vals, A22);
        assert_eq!(t.total, 1002u64);
        let args: Vec<i64> = t.addends[2].terms.iter().map(|g| g.arg).collect();
        assert_eq!(args, vec![20, 17, 14, 11, 8, 5]);
    }
}

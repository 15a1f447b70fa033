//! Cross-checks of the closed formula against the recurrence and the
//! classification oracle, plus the published golden values.
//!
//! Nothing here panics on disagreement; mismatches end up in the returned
//! report.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::count::BigCount;
use crate::enumerate::{classify_by_enumeration, ATableRow, ClassificationRow, ClassificationTable};
use crate::error::{PartitionError, Result};
use crate::formula::{closed_row, naive_terms, trace_closed, ClosedTrace, DEFAULT_NAIVE_CEILING};
use crate::golden;
use crate::par::{map_ordered, Execution};
use crate::params::{a1, a1_u64, params_for, SMode};
use crate::pentagonal::EulerCache;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub s_mode: SMode,
    /// Also compute p(n) from the counting oracle and compare A-rows entrywise.
    pub include_oracle: bool,
    #[serde(default)]
    pub execution: Execution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Range {
    pub lo: usize,
    pub hi: usize,
}

/// Per-beta context attached to a disagreeing n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Breakdown {
    /// A_n^beta from the closed formula.
    pub formula: Vec<BigCount>,
    /// A_n^beta from the counting oracle.
    pub oracle: Vec<BigCount>,
    /// Smallest beta where the two rows differ.
    pub first_beta: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NRecord {
    pub n: usize,
    pub p_euler: BigCount,
    pub p_closed: BigCount,
    pub p_oracle: Option<BigCount>,
    /// True iff every present total agrees and, with the oracle, the formula
    /// and oracle A-rows agree entrywise.
    pub agree: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub breakdown: Option<Breakdown>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct ElapsedMs {
    pub euler: f64,
    pub closed: f64,
    pub oracle: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub range: Range,
    pub config: VerifyConfig,
    pub per_n: Vec<NRecord>,
    pub first_divergence: Option<usize>,
    /// Smallest disagreeing beta at `first_divergence`.
    pub first_divergent_beta: Option<usize>,
    pub elapsed_ms: ElapsedMs,
}

impl VerificationReport {
    pub fn agree_count(&self) -> usize {
        self.per_n.iter().filter(|r| r.agree).count()
    }

    pub fn all_agree(&self) -> bool {
        self.first_divergence.is_none()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// The report minus wall-clock timings, for determinism comparisons.
    pub fn without_timings(&self) -> Self {
        VerificationReport {
            elapsed_ms: ElapsedMs::default(),
            ..self.clone()
        }
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn first_beta_mismatch(formula: &[BigCount], oracle: &ATableRow) -> Option<usize> {
    let len = formula.len().max(oracle.a.len());
    (0..len).find(|&b| formula.get(b).cloned().unwrap_or_default() != oracle.get(b))
}

pub fn verify_range(lo: usize, hi: usize, include_oracle: bool) -> Result<VerificationReport> {
    verify_range_with(
        lo,
        hi,
        VerifyConfig {
            include_oracle,
            ..VerifyConfig::default()
        },
    )
}

/// Computes p(n) for each n in `lo..=hi` by the recurrence and by the closed
/// formula (and by the oracle when configured), recording every mismatch.
pub fn verify_range_with(lo: usize, hi: usize, config: VerifyConfig) -> Result<VerificationReport> {
    verify_range_seeded(lo, hi, config, &mut EulerCache::new())
}

/// As [`verify_range_with`], reusing and extending a recurrence table.
pub fn verify_range_seeded(
    lo: usize,
    hi: usize,
    config: VerifyConfig,
    euler: &mut EulerCache,
) -> Result<VerificationReport> {
    if lo == 0 || lo > hi {
        return Err(PartitionError::InvalidRange { lo, hi });
    }

    let t = Instant::now();
    euler.fill_to(hi);
    let euler_ms = ms(t.elapsed());

    let ns: Vec<usize> = (lo..=hi).collect();
    let t = Instant::now();
    let rows: Vec<Vec<BigCount>> = map_ordered(config.execution, &ns, |&n| {
        closed_row(n, config.s_mode).expect("n >= 1")
    });
    let closed_ms = ms(t.elapsed());

    let mut oracle_ms = None;
    let mut oracle_table = None;
    if config.include_oracle {
        let t = Instant::now();
        oracle_table = Some(ClassificationTable::build(hi));
        oracle_ms = Some(ms(t.elapsed()));
    }

    let mut per_n = Vec::with_capacity(ns.len());
    for (&n, row) in ns.iter().zip(rows) {
        let p_euler = euler.get(n).cloned().expect("filled");
        let p_closed: BigCount = row.iter().sum();
        let oracle_row = oracle_table
            .as_ref()
            .map(|t| t.row(n).expect("built through hi").to_a_row());
        let p_oracle = oracle_row.as_ref().map(ATableRow::total);

        let mut agree = p_euler == p_closed;
        if let Some(o) = &oracle_row {
            agree &= p_oracle.as_ref() == Some(&p_euler);
            agree &= first_beta_mismatch(&row, o).is_none();
        }

        per_n.push(NRecord {
            n,
            p_euler,
            p_closed,
            p_oracle,
            agree,
            breakdown: if agree { None } else { Some(row) }.map(|formula| {
                let oracle = oracle_row
                    .clone()
                    .unwrap_or_else(|| ClassificationTable::build(n).row(n).unwrap().to_a_row());
                Breakdown {
                    first_beta: first_beta_mismatch(&formula, &oracle),
                    formula,
                    oracle: oracle.a,
                }
            }),
        });
    }

    let first = per_n.iter().find(|r| !r.agree);
    Ok(VerificationReport {
        range: Range { lo, hi },
        config,
        first_divergence: first.map(|r| r.n),
        first_divergent_beta: first.and_then(|r| r.breakdown.as_ref()?.first_beta),
        per_n,
        elapsed_ms: ElapsedMs {
            euler: euler_ms,
            closed: closed_ms,
            oracle: oracle_ms,
        },
    })
}

/// One instance of A_{n+5}^2 = A_{n+3}^1 + A_n^1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub n: usize,
    /// A_{n+3}^1 + A_n^1.
    pub rhs: BigCount,
    /// A_{n+5}^2 from the closed formula.
    pub formula_lhs: BigCount,
    /// A_{n+5}^2 from the counting oracle.
    pub semantic_lhs: BigCount,
    pub formula_holds: bool,
    pub semantic_holds: bool,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.formula_holds && self.semantic_holds
    }
}

pub fn check_identity_a2(lo: usize, hi: usize) -> Result<Vec<IdentityCheck>> {
    if lo == 0 || lo > hi {
        return Err(PartitionError::InvalidRange { lo, hi });
    }
    let table = ClassificationTable::build(hi + 5);
    Ok((lo..=hi)
        .map(|n| {
            let rhs = a1(n as i64 + 3) + a1(n as i64);
            let formula_lhs = crate::formula::a_value(n + 5, 2);
            let semantic_lhs = table.row(n + 5).expect("built").to_a_row().get(2);
            IdentityCheck {
                n,
                formula_holds: formula_lhs == rhs,
                semantic_holds: semantic_lhs == rhs,
                rhs,
                formula_lhs,
                semantic_lhs,
            }
        })
        .collect())
}

/// A cell where a regenerated table differs from the published one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellMismatch {
    /// "classification" or "a-table".
    pub table: String,
    /// Which route produced the wrong value.
    pub source: String,
    pub n: usize,
    pub column: usize,
    pub expected: u64,
    pub got: BigCount,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoldenTables {
    pub table1: Vec<ClassificationRow>,
    pub table2: Vec<ATableRow>,
    /// Empty when every route reproduces every published cell.
    pub mismatches: Vec<CellMismatch>,
    pub cells_checked: usize,
}

/// Regenerates both published tables for n = 1..=11 from each route and
/// compares them cell by cell.
///
/// Classification rows come from enumeration and the counting DP; A-table
/// rows come from the counting DP and from the closed formula.
pub fn golden_tables() -> GoldenTables {
    let counting = ClassificationTable::build(11);
    let mut mismatches = Vec::new();
    let mut cells = 0;
    let mut table1 = Vec::new();
    let mut table2 = Vec::new();

    for (i, expected) in golden::CLASSIFICATION.iter().enumerate() {
        let n = i + 1;
        let by_count = counting.row(n).unwrap().clone();
        let by_enum = classify_by_enumeration(n).expect("n <= 11 is under the ceiling");
        for (source, row) in [("counting", &by_count), ("enumeration", &by_enum)] {
            for (k, &e) in expected.iter().enumerate() {
                cells += 1;
                let got = row.counts.get(k).cloned().unwrap_or_default();
                if got != e {
                    mismatches.push(CellMismatch {
                        table: "classification".into(),
                        source: source.into(),
                        n,
                        column: k,
                        expected: e,
                        got,
                    });
                }
            }
        }
        table1.push(by_count);
    }

    for (i, expected) in golden::A_TABLE.iter().enumerate() {
        let n = i + 1;
        let semantic = counting.row(n).unwrap().to_a_row();
        let formula = ATableRow {
            n,
            a: closed_row(n, SMode::Floor).expect("n >= 1"),
        };
        for (source, row) in [("oracle", &semantic), ("formula", &formula)] {
            for (beta, &e) in expected.iter().enumerate() {
                cells += 1;
                let got = row.get(beta);
                if got != e {
                    mismatches.push(CellMismatch {
                        table: "a-table".into(),
                        source: source.into(),
                        n,
                        column: beta,
                        expected: e,
                        got,
                    });
                }
            }
        }
        table2.push(semantic);
    }

    GoldenTables {
        table1,
        table2,
        mismatches,
        cells_checked: cells,
    }
}

/// Structured trace of p(22) by the closed formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WorkedExample {
    pub trace: ClosedTrace,
    /// (m, A_m^1) for the summands of A_22^2.
    pub a2_summands: Vec<(i64, BigCount)>,
    /// (m, A_m^1) for the nonzero summands of A_22^3.
    pub a3_summands: Vec<(i64, BigCount)>,
}

/// Recomputes p(22) and checks every printed intermediate value.
///
/// Returns the list of disagreements as the error.
pub fn worked_example_p22() -> std::result::Result<WorkedExample, Vec<String>> {
    let mut errors = Vec::new();
    let params = params_for(22).expect("22 >= 1");
    if (params.r, params.s) != (10, 7) {
        errors.push(format!("expected r=10 s=7, got r={} s={}", params.r, params.s));
    }

    let trace = trace_closed(22, SMode::Floor).expect("22 >= 1");
    let addends: Vec<BigCount> = trace.addends.iter().map(|a| a.value.clone()).collect();
    if addends.len() != golden::P22_ADDENDS.len() {
        errors.push(format!("expected 11 addends, got {}", addends.len()));
    }
    for (beta, (&e, got)) in golden::P22_ADDENDS.iter().zip(&addends).enumerate() {
        if *got != e {
            errors.push(format!("A_22^{beta}: expected {e}, got {got}"));
        }
    }
    if trace.total != golden::P22 {
        errors.push(format!("p(22): expected {}, got {}", golden::P22, trace.total));
    }

    let to_pairs = |beta: usize| -> Vec<(i64, BigCount)> {
        naive_terms(22, beta, &params, DEFAULT_NAIVE_CEILING)
            .expect("beta >= 2, tiny tuple count")
            .into_iter()
            .map(|t| (t.arg, t.value))
            .collect()
    };

    let a2 = to_pairs(2);
    let a2_args: Vec<i64> = a2.iter().map(|(m, _)| *m).collect();
    if a2_args != golden::A22_2_ARGS {
        errors.push(format!("A_22^2 arguments: expected {:?}, got {a2_args:?}", golden::A22_2_ARGS));
    }
    for ((m, v), &e) in a2.iter().zip(&golden::A22_2_SUMMANDS) {
        if *v != e {
            errors.push(format!("A_{m}^1: expected {e}, got {v}"));
        }
    }

    let a3 = to_pairs(3);
    let mut a3_args: Vec<i64> = a3.iter().map(|(m, _)| *m).collect();
    a3_args.sort_unstable();
    let mut printed = golden::A22_3_ARGS.to_vec();
    printed.sort_unstable();
    if a3_args != printed {
        errors.push(format!("A_22^3 arguments: expected {printed:?}, got {a3_args:?}"));
    }
    let printed_sum: u64 = golden::A22_3_ARGS.iter().map(|&m| a1_u64(m)).sum();
    if printed_sum != golden::P22_ADDENDS[3] {
        errors.push(format!("printed A_22^3 summands add to {printed_sum}"));
    }

    if errors.is_empty() {
        Ok(WorkedExample {
            trace,
            a2_summands: a2,
            a3_summands: a3,
        })
    } else {
        Err(errors)
    }
}

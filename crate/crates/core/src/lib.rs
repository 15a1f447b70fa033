//! Exact computation of the partition function p(n) three ways:
//!
//! * a non-recursive closed formula, p(n) = sum_{beta=0}^{r} A_n^beta
//!   ([`formula`]),
//! * Euler's pentagonal-number recurrence ([`pentagonal`]),
//! * partitions classified by their number of parts different from 1
//!   ([`enumerate`]), by explicit enumeration and by a counting DP.
//!
//! [`verify`] cross-checks the routes and reproduces the published tables.

pub mod cache;
pub mod count;
pub mod enumerate;
pub mod error;
pub mod formula;
pub mod golden;
pub mod par;
pub mod params;
pub mod pentagonal;
pub mod verify;

pub use count::BigCount;
pub use enumerate::{
    classify_by_counting, classify_by_enumeration, enumerate_partitions, semantic_a_row,
    ATableRow, ClassificationRow, ClassificationTable, Partition,
};
pub use error::{PartitionError, Result};
pub use formula::{
    a_beta_dp, a_beta_naive, a_value, a_value_with, closed_row, gamma_weights, p_closed,
    p_closed_naive, p_closed_with, AlphaTuple, GammaWeightVector,
};
pub use par::Execution;
pub use params::{a1, params_for, params_with, top_beta, FormulaParams, SMode};
pub use pentagonal::{p_euler, pentagonal_numbers_upto, EulerCache, PentagonalIndex};
pub use verify::{
    check_identity_a2, golden_tables, verify_range, verify_range_with, worked_example_p22,
    VerificationReport, VerifyConfig,
};

//! The summation parameters r and s, and the closed form for A_n^1.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::count::BigCount;
use crate::error::{PartitionError, Result};

/// How the inner-sum bound s is derived from n.
///
/// `Floor` (s = floor(n/3)) is the adopted reading. The others exist so the
/// verification sweep can be re-run under alternative readings.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SMode {
    #[default]
    Floor,
    Ceil,
    Nearest,
}

impl SMode {
    pub fn s_for(self, n: usize) -> usize {
        match self {
            SMode::Floor => n / 3,
            SMode::Ceil => n.div_ceil(3),
            // n/3 is never exactly half-way, so plain rounding is unambiguous
            SMode::Nearest => (n + 1) / 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SMode::Floor => "floor",
            SMode::Ceil => "ceil",
            SMode::Nearest => "nearest",
        }
    }
}

impl fmt::Display for SMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "floor" => Ok(SMode::Floor),
            "ceil" => Ok(SMode::Ceil),
            "nearest" => Ok(SMode::Nearest),
            other => Err(format!("unknown s-mode {other:?} (expected floor, ceil or nearest)")),
        }
    }
}

/// `(n, r, s)` for one evaluation of the closed formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaParams {
    pub n: usize,
    /// Top index of the outer sum over beta.
    pub r: usize,
    /// Bound parameter of the nested alpha sums.
    pub s: usize,
}

/// r(n): (n-2)/2 for even n, (n-3)/2 for odd n >= 3, 0 for n = 1.
pub fn top_beta(n: usize) -> usize {
    if n < 2 {
        0
    } else if n.is_multiple_of(2) {
        (n - 2) / 2
    } else {
        (n - 3) / 2
    }
}

pub fn params_for(n: usize) -> Result<FormulaParams> {
    params_with(n, SMode::Floor)
}

pub fn params_with(n: usize, mode: SMode) -> Result<FormulaParams> {
    if n == 0 {
        return Err(PartitionError::ZeroN);
    }
    Ok(FormulaParams {
        n,
        r: top_beta(n),
        s: mode.s_for(n),
    })
}

/// A^1 as a machine integer; zero for every argument below 2.
pub fn a1_u64(m: i64) -> u64 {
    if m <= 1 {
        return 0;
    }
    let m = m as u64;
    if m.is_multiple_of(2) {
        let r = (m - 2) / 2;
        r * r
    } else {
        let r = (m - 3) / 2;
        r * (r + 1)
    }
}

/// A_m^1: r^2 for even m, r(r+1) for odd m, and 0 for m <= 1.
pub fn a1(m: i64) -> BigCount {
    if m <= 1 {
        return BigCount::zero();
    }
    // r^2 overflows u64 once m is around 2^33
    if m < (1 << 32) {
        return BigCount::from(a1_u64(m));
    }
    let m = m as u64;
    let r = if m.is_multiple_of(2) { (m - 2) / 2 } else { (m - 3) / 2 };
    let r = BigCount::from(r);
    if m.is_multiple_of(2) {
        &r * &r
    } else {
        &r * &(r.clone() + BigCount::one())
    }
}

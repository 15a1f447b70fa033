use std::time::Instant;

use partfn::formula::{p_closed_naive, DEFAULT_NAIVE_CEILING};
use partfn::{classify_by_counting, p_closed, p_euler, BigCount, EulerCache, PartitionError, SMode};

use crate::{Method, EXIT_DIVERGENCE, EXIT_OK};

/// 1, 2, 4, ... below `n_max`, then `n_max`.
pub fn schedule(n_max: usize) -> Vec<usize> {
    let mut out: Vec<usize> = std::iter::successors(Some(1usize), |&n| n.checked_mul(2))
        .take_while(|&n| n < n_max)
        .collect();
    out.push(n_max);
    out
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Closed => "closed",
        Method::Euler => "euler",
        Method::Oracle => "oracle",
        Method::Naive => "naive",
    }
}

enum Cell {
    Done { ms: f64, value: BigCount },
    Capped,
}

fn run_one(method: Method, n: usize) -> Result<Cell, String> {
    let t = Instant::now();
    let value = match method {
        Method::Closed => p_closed(n).map_err(|e| e.to_string())?,
        Method::Euler => p_euler(n, &mut EulerCache::new()),
        Method::Oracle => classify_by_counting(n).map_err(|e| e.to_string())?.total(),
        Method::Naive => match p_closed_naive(n, SMode::Floor, DEFAULT_NAIVE_CEILING) {
            Ok(v) => v,
            Err(PartitionError::NaiveTooLarge { .. }) => return Ok(Cell::Capped),
            Err(e) => return Err(e.to_string()),
        },
    };
    Ok(Cell::Done {
        ms: t.elapsed().as_secs_f64() * 1e3,
        value,
    })
}

pub fn run(n_max: usize, methods: &[Method]) -> Result<u8, String> {
    if n_max == 0 {
        return Err("n_max must be at least 1".into());
    }
    if methods.is_empty() {
        return Err("no methods selected".into());
    }
    let mut methods = methods.to_vec();
    methods.dedup();

    let mut header = format!("{:>6}", "n");
    for m in &methods {
        header.push_str(&format!("  {:>12}", format!("{}_ms", method_name(*m))));
    }
    header.push_str("  equal");
    println!("{header}");

    let mut capped = vec![false; methods.len()];
    let mut all_equal = true;
    // last scheduled n at which naive was not slower than the DP
    let mut naive_not_slower: Option<usize> = None;
    let mut compared = false;
    for n in schedule(n_max) {
        let mut line = format!("{n:>6}");
        let mut values: Vec<BigCount> = Vec::new();
        let mut times = vec![None; methods.len()];
        for (i, m) in methods.iter().enumerate() {
            if capped[i] {
                line.push_str(&format!("  {:>12}", "capped"));
                continue;
            }
            match run_one(*m, n)? {
                Cell::Done { ms, value } => {
                    line.push_str(&format!("  {ms:>12.4}"));
                    times[i] = Some(ms);
                    values.push(value);
                }
                Cell::Capped => {
                    capped[i] = true;
                    line.push_str(&format!("  {:>12}", "capped"));
                }
            }
        }
        let equal = values.windows(2).all(|w| w[0] == w[1]);
        all_equal &= equal;
        line.push_str(&format!("  {equal}"));
        println!("{line}");

        let naive = methods.iter().position(|&m| m == Method::Naive);
        let dp = methods.iter().position(|&m| m == Method::Closed);
        if let (Some(a), Some(b)) = (naive, dp) {
            if let (Some(tn), Some(td)) = (times[a], times[b]) {
                compared = true;
                if tn <= td {
                    naive_not_slower = Some(n);
                }
            }
        }
    }
    if methods.contains(&Method::Naive) && methods.contains(&Method::Closed) {
        match (compared, naive_not_slower) {
            (false, _) => {}
            (true, None) => println!("naive slower than dp throughout"),
            (true, Some(n)) => println!("naive/dp crossover: naive slower beyond n={n}"),
        }
    }
    if all_equal {
        Ok(EXIT_OK)
    } else {
        eprintln!("methods disagree");
        Ok(EXIT_DIVERGENCE)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schedule_is_geometric_then_cap() {
        assert_eq!(schedule(1), vec![1]);
        assert_eq!(schedule(10), vec![1, 2, 4, 8, 10]);
        assert_eq!(schedule(16), vec![1, 2, 4, 8, 16]);
    }
}

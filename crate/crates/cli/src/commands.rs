use std::path::Path;

use partfn::cache::CacheFile;
use partfn::formula::{p_closed_naive, trace_closed, ClosedTrace, DEFAULT_NAIVE_CEILING};
use partfn::verify::verify_range_seeded;
use partfn::{
    classify_by_counting, p_closed, p_euler, BigCount, EulerCache, Execution, SMode,
    VerificationReport, VerifyConfig,
};

use crate::{bench, tables, Cli, Command, Format, Method, EXIT_DIVERGENCE, EXIT_OK};

pub fn run(cli: Cli) -> Result<u8, String> {
    let cache = cli.cache.as_deref();
    match cli.command {
        Command::Compute { n, method } => compute(n, method, cache),
        Command::Table {
            kind,
            n_max,
            format,
            source,
        } => {
            print!("{}", tables::render(kind, n_max, format, source)?);
            Ok(EXIT_OK)
        }
        Command::Verify {
            lo,
            hi,
            include_oracle,
            s_mode,
            format,
            sequential,
        } => {
            let config = VerifyConfig {
                s_mode: s_mode.into(),
                include_oracle,
                execution: if sequential {
                    Execution::Sequential
                } else {
                    Execution::Parallel
                },
            };
            verify(lo, hi, config, format, cache)
        }
        Command::Trace { n, s_mode, format } => {
            let trace = trace_closed(n, s_mode.into()).map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&trace).map_err(|e| e.to_string())?
                ),
                Format::Text | Format::Csv => print!("{}", render_trace(&trace)),
            }
            Ok(EXIT_OK)
        }
        Command::Bench { n_max, methods } => bench::run(n_max, &methods),
    }
}

fn load_euler(cache: Option<&Path>) -> Result<EulerCache, String> {
    let Some(path) = cache else {
        return Ok(EulerCache::new());
    };
    match CacheFile::read_if_exists(path).map_err(|e| format!("{}: {e}", path.display()))? {
        None => Ok(EulerCache::new()),
        Some(file) => EulerCache::from_values(file.values)
            .ok_or_else(|| format!("{}: cache does not start at p(0) = 1", path.display())),
    }
}

fn save_euler(cache: Option<&Path>, euler: &EulerCache) -> Result<(), String> {
    if let Some(path) = cache {
        CacheFile::new(Some("euler".into()), euler.values().to_vec())
            .write(path)
            .map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn compute(n: usize, method: Method, cache: Option<&Path>) -> Result<u8, String> {
    if n == 0 {
        return Err("n must be at least 1".into());
    }
    let mut euler = load_euler(cache)?;
    let cached = euler.get(n).cloned();
    let value: BigCount = match method {
        Method::Closed => p_closed(n).map_err(|e| e.to_string())?,
        Method::Oracle => classify_by_counting(n).map_err(|e| e.to_string())?.total(),
        Method::Naive => {
            p_closed_naive(n, SMode::Floor, DEFAULT_NAIVE_CEILING).map_err(|e| e.to_string())?
        }
        Method::Euler => {
            let v = p_euler(n, &mut euler);
            save_euler(cache, &euler)?;
            v
        }
    };
    println!("{value}");
    if let Some(c) = cached {
        if c != value {
            eprintln!("cache holds p({n}) = {c}, which disagrees");
            return Ok(EXIT_DIVERGENCE);
        }
    }
    Ok(EXIT_OK)
}

fn verify(
    lo: usize,
    hi: usize,
    config: VerifyConfig,
    format: Format,
    cache: Option<&Path>,
) -> Result<u8, String> {
    let mut euler = load_euler(cache)?;
    let report =
        verify_range_seeded(lo, hi, config, &mut euler).map_err(|e| e.to_string())?;
    save_euler(cache, &euler)?;
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text | Format::Csv => print!("{}", render_report(&report, format)),
    }
    Ok(if report.all_agree() {
        EXIT_OK
    } else {
        EXIT_DIVERGENCE
    })
}

fn render_report(report: &VerificationReport, format: Format) -> String {
    let mut out = String::new();
    let oracle = report.config.include_oracle;
    if format == Format::Csv {
        out.push_str("n,p_euler,p_closed,p_oracle,agree\n");
        for r in &report.per_n {
            let o = r.p_oracle.as_ref().map(ToString::to_string).unwrap_or_default();
            out.push_str(&format!("{},{},{},{},{}\n", r.n, r.p_euler, r.p_closed, o, r.agree));
        }
        return out;
    }
    out.push_str(&format!(
        "s-mode: {}  oracle: {}\n",
        report.config.s_mode,
        if oracle { "counting" } else { "off" }
    ));
    for r in &report.per_n {
        out.push_str(&format!(
            "n={} euler={} closed={}",
            r.n, r.p_euler, r.p_closed
        ));
        if let Some(o) = &r.p_oracle {
            out.push_str(&format!(" oracle={o}"));
        }
        out.push_str(if r.agree { " ok\n" } else { " DIVERGES\n" });
        if let Some(b) = &r.breakdown {
            let join = |v: &[BigCount]| {
                v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
            };
            out.push_str(&format!("  formula A: {}\n", join(&b.formula)));
            out.push_str(&format!("  oracle  A: {}\n", join(&b.oracle)));
            if let Some(beta) = b.first_beta {
                out.push_str(&format!("  first differing beta: {beta}\n"));
            }
        }
    }
    out.push_str(&format!(
        "agree: {}/{}\n",
        report.agree_count(),
        report.per_n.len()
    ));
    match report.first_divergence {
        None => out.push_str("first divergence: none\n"),
        Some(n) => {
            out.push_str(&format!("first divergence: n={n}"));
            if let Some(b) = report.first_divergent_beta {
                out.push_str(&format!(" beta={b}"));
            }
            out.push('\n');
        }
    }
    let e = &report.elapsed_ms;
    out.push_str(&format!("elapsed ms: euler={:.3} closed={:.3}", e.euler, e.closed));
    if let Some(o) = e.oracle {
        out.push_str(&format!(" oracle={o:.3}"));
    }
    out.push('\n');
    out
}

pub fn render_trace(trace: &ClosedTrace) -> String {
    let mut out = format!("r={} s={}\n", trace.params.r, trace.params.s);
    for a in &trace.addends {
        out.push_str(&format!("A^{}={}", a.beta, a.value));
        if !a.terms.is_empty() {
            let terms: Vec<String> = a
                .terms
                .iter()
                .map(|t| format!("g{}:{}*A1({})={}", t.gamma, t.multiplicity, t.arg, t.a1))
                .collect();
            out.push_str(&format!("  [{}]", terms.join(" ")));
        }
        out.push('\n');
    }
    out.push_str(&format!("p={}\n", trace.total));
    out
}

//! `pullback-lvalues`: exact class-number and α_k tables, q-expansions, and
//! the verification suites, from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod output;
mod verify;

use output::Format;

#[derive(Parser)]
#[command(
    name = "pullback-lvalues",
    version,
    about = "Exact Eisenstein-pullback special values: tables, q-expansions, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Direct,
    Pieces,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Exact,
    Numeric,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormArg {
    Eisenstein,
    Delta,
    Theta1,
    Theta2,
    Miller,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generalized class-number table (1) or the alpha table (2)
    Tables {
        /// Which table: 1 = H(k-1,3), H(k-1,4); 2 = alpha_k
        #[arg(long)]
        which: u8,
        /// Weight or inclusive range of even weights, e.g. `12` or `12..22`
        #[arg(long)]
        k: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Memoize Bernoulli numbers in this JSON file across runs
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Print alpha_k by one or both routes
    Alpha {
        /// Weight or inclusive range of even weights
        #[arg(long)]
        k: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Direct)]
        route: RouteArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Run the exact and/or numeric verification suite
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Weight for the end-to-end numeric check (default 12)
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        cache: Option<PathBuf>,
        /// `json` emits the checks plus the full end-to-end report
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the first coefficients of a named q-expansion
    Qexp {
        #[arg(long, value_enum)]
        form: FormArg,
        /// Weight (eisenstein and miller forms)
        #[arg(long)]
        k: Option<u32>,
        /// Miller basis element index (0-based)
        #[arg(long)]
        index: Option<usize>,
        /// Number of coefficients; defaults to PULLBACK_LVALUES_PRECISION or 64
        #[arg(long)]
        terms: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Parse `12` or `12..22` into the even weights it covers, inclusive. An
/// explicitly named odd weight is an error; odd endpoints of a range are
/// skipped silently.
fn parse_k_range(s: &str) -> Result<Vec<u32>, String> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: u32 = lo.trim().parse().map_err(|_| format!("bad range start {lo:?}"))?;
        let hi: u32 = hi.trim().parse().map_err(|_| format!("bad range end {hi:?}"))?;
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok((lo..=hi).filter(|k| k % 2 == 0).collect())
    } else {
        let k: u32 = s.trim().parse().map_err(|_| format!("bad weight {s:?}"))?;
        if k % 2 != 0 {
            return Err(format!("weight {k} is odd; the theory is even-weight only"));
        }
        Ok(vec![k])
    }
}

fn default_precision() -> usize {
    std::env::var("PULLBACK_LVALUES_PRECISION")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(64)
}

fn load_cache(path: &PathBuf) -> Result<(), String> {
    if !path.exists() {
        return Ok(());
    }
    let text = std::fs::read_to_string(path).map_err(|e| format!("cache read: {e}"))?;
    let values: Vec<pullback_core::Rational> =
        serde_json::from_str(&text).map_err(|e| format!("cache parse: {e}"))?;
    pullback_core::bernoulli::seed_bernoulli_cache(values);
    Ok(())
}

fn save_cache(path: &PathBuf) {
    let values = pullback_core::bernoulli::bernoulli_cache_snapshot();
    if let Ok(text) = serde_json::to_string(&values) {
        let _ = std::fs::write(path, text);
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => usage_error(&msg),
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Tables {
            which,
            k,
            format,
            cache,
        } => {
            if let Some(path) = &cache {
                load_cache(path)?;
            }
            let ks = parse_k_range(&k)?;
            for &k in &ks {
                if !(12..=100).contains(&k) {
                    return Err(format!("weight {k} outside the supported table range 12..=100"));
                }
            }
            match which {
                1 => {
                    let rows = pullback_core::special::emit_table1(&ks)
                        .map_err(|e| e.to_string())?;
                    output::print_table1(&rows, format);
                }
                2 => {
                    let rows = pullback_core::special::emit_table2(&ks)
                        .map_err(|e| e.to_string())?;
                    output::print_table2(&rows, format);
                }
                other => return Err(format!("no table {other}; use --which 1 or 2")),
            }
            if let Some(path) = &cache {
                save_cache(path);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Alpha {
            k,
            route,
            format,
            cache,
        } => {
            if let Some(path) = &cache {
                load_cache(path)?;
            }
            let ks = parse_k_range(&k)?;
            for &kk in &ks {
                if kk < 12 {
                    return Err(format!("alpha_k needs even k >= 12, got {kk}"));
                }
            }
            output::print_alpha(&ks, route, format).map_err(|e| e.to_string())?;
            if let Some(path) = &cache {
                save_cache(path);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            k,
            cache,
            format,
        } => {
            if let Some(path) = &cache {
                load_cache(path)?;
            }
            let mut results = Vec::new();
            let mut report = None;
            if matches!(suite, SuiteArg::Exact | SuiteArg::All) {
                results.extend(verify::run_exact_suite());
            }
            if matches!(suite, SuiteArg::Numeric | SuiteArg::All) {
                let (checks, rep) = verify::run_numeric_suite(k);
                results.extend(checks);
                report = rep;
            }
            let all_pass = results.iter().all(|r| r.pass);
            match format {
                Format::Json => {
                    let doc = serde_json::json!({
                        "checks": results,
                        "theorem_report": report,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                _ => {
                    for r in &results {
                        let tag = if r.pass { "PASS" } else { "FAIL" };
                        println!("[{tag}] {}: {}", r.name, r.detail);
                    }
                    println!(
                        "{}: {} checks, {} failed",
                        if all_pass { "ok" } else { "FAILED" },
                        results.len(),
                        results.iter().filter(|r| !r.pass).count()
                    );
                }
            }
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Qexp {
            form,
            k,
            index,
            terms,
            format,
        } => {
            let n = terms.unwrap_or_else(default_precision);
            if n == 0 {
                return Err("need at least one term".into());
            }
            let series = build_qexp(form, k, index, n)?;
            output::print_qexp(&series, format);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn build_qexp(
    form: FormArg,
    k: Option<u32>,
    index: Option<usize>,
    n: usize,
) -> Result<pullback_core::QSeries, String> {
    use pullback_core::qseries;
    match form {
        FormArg::Eisenstein => {
            let k = k.ok_or("eisenstein needs --k")?;
            qseries::eisenstein_qexp(k, n).map_err(|e| e.to_string())
        }
        FormArg::Delta => qseries::delta_qexp(n.max(2)).map(|s| s.truncate(n)).map_err(|e| e.to_string()),
        FormArg::Theta1 => Ok(qseries::theta_qexp(qseries::ThetaKind::One, n)),
        FormArg::Theta2 => Ok(qseries::theta_qexp(qseries::ThetaKind::Two, n)),
        FormArg::Miller => {
            let k = k.ok_or("miller needs --k")?;
            let i = index.ok_or("miller needs --index")?;
            let basis = qseries::miller_basis(k, n.max(2)).map_err(|e| e.to_string())?;
            basis
                .into_iter()
                .nth(i)
                .map(|s| s.truncate(n))
                .ok_or_else(|| format!("miller basis of weight {k} has no element {i}"))
        }
    }
}

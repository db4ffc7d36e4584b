//! `zeta` — evaluate the Riemann zeta function anywhere in the complex
//! plane (except s = 1), print exact Bernoulli numbers and exact ζ(-k),
//! tabulate grids, and run self-consistency checks.
//!
//! Exit codes: 0 success, 1 mathematical/domain failure (with a
//! machine-readable error record on stdout), 2 usage error.

mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use zeta_core::consistency::{suite_cross_depth, suite_ladder_vs_exact, suite_ladder_vs_oracle, SuiteReport};
use zeta_core::ladder::{zeta, LadderConfig};
use zeta_core::rational::{to_human_string, to_machine_string};
use zeta_core::special_values::zeta_neg_int;
use zeta_core::{bernoulli, Complex, ZetaError};

use output::{fmt_arg, fmt_complex_sig, fmt_sig, ErrorRecord, OutputRecord, CSV_HEADER};

#[derive(Parser)]
#[command(
    name = "zeta",
    version,
    about = "Riemann zeta function calculator with exact rational special values"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate zeta(s) at one point
    Eval {
        /// Argument s as `RE` or `RE,IM` (comma, no spaces)
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// Absolute error target (relative once |value| exceeds 1)
        #[arg(long, env = "ZETA_DEFAULT_TOL", default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact rational zeta(-K)
    Special {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact Bernoulli numbers B_0..B_N
    Bernoulli {
        #[arg(long)]
        upto: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate zeta along a horizontal grid line; plot-ready output
    Table {
        #[arg(long = "re-from", allow_negative_numbers = true)]
        re_from: f64,
        #[arg(long = "re-to", allow_negative_numbers = true)]
        re_to: f64,
        #[arg(long)]
        step: f64,
        /// Imaginary part of the grid line
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        im: f64,
        #[arg(long, env = "ZETA_DEFAULT_TOL", default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run the self-consistency suites (ladder vs exact, ladder vs oracle,
    /// cross-depth); exits 0 only if every suite passes.
    ///
    /// Setting ZETA_CHECK_FAULT_INJECT=1 perturbs one Bernoulli comparison
    /// to demonstrate that the suites detect a broken build.
    Check {
        /// Grid to check on (only `standard` is defined)
        #[arg(long, default_value = "standard")]
        grid: String,
        /// Pass threshold for every suite's max error
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
}

fn parse_complex(text: &str) -> Result<Complex, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| format!("invalid number {t:?} in --s"))
    };
    match text.split_once(',') {
        Some((re, im)) => Ok(Complex::new(parse(re)?, parse(im)?)),
        None => Ok(Complex::new(parse(text)?, 0.0)),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit_math_error(e: &ZetaError, s: Option<Complex>, format: Format) -> ExitCode {
    let rec = ErrorRecord::new(e, s);
    match format {
        Format::Text => println!("error: {} ({})", rec.error, rec.detail),
        Format::Json => println!("{}", serde_json::to_string(&rec).expect("serializable")),
        Format::Csv => {
            println!("{CSV_HEADER}");
            println!("{}", rec.csv_row());
        }
    }
    ExitCode::from(1)
}

fn cmd_eval(s_text: &str, tol: f64, format: Format) -> ExitCode {
    let s = match parse_complex(s_text) {
        Ok(s) => s,
        Err(msg) => return usage_error(&msg),
    };
    let cfg = LadderConfig::with_tol(tol);
    if let Err(e @ ZetaError::Config { .. }) = cfg.validate() {
        return usage_error(&e.to_string());
    }
    match zeta(s, &cfg) {
        Ok(r) => {
            let rec = OutputRecord::from_eval(s, &r);
            match format {
                Format::Text => println!(
                    "zeta({}) = {}  (method: {}, depth: {}, err <= {})",
                    fmt_arg(s),
                    fmt_complex_sig(r.value, 10),
                    r.method,
                    r.depth_k,
                    fmt_sig(r.err_estimate, 2),
                ),
                Format::Json => println!("{}", serde_json::to_string(&rec).expect("serializable")),
                Format::Csv => {
                    println!("{CSV_HEADER}");
                    println!("{}", rec.csv_row());
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => emit_math_error(&e, Some(s), format),
    }
}

fn cmd_special(k: u32, format: Format) -> ExitCode {
    let value = zeta_neg_int(k);
    match format {
        Format::Text => println!("{}", to_human_string(&value)),
        Format::Json => {
            let rec = OutputRecord {
                k: Some(u64::from(k)),
                ..OutputRecord::exact(to_machine_string(&value))
            };
            println!("{}", serde_json::to_string(&rec).expect("serializable"));
        }
        Format::Csv => {
            println!("k,value");
            println!("{k},{}", to_machine_string(&value));
        }
    }
    ExitCode::SUCCESS
}

fn cmd_bernoulli(upto: usize, format: Format) -> ExitCode {
    let table = bernoulli::bernoulli_upto(upto);
    if format == Format::Csv {
        println!("n,value");
    }
    for (n, b) in table.values().iter().enumerate() {
        match format {
            Format::Text => println!("{n}\t{}", to_human_string(b)),
            Format::Json => {
                let rec = OutputRecord {
                    n: Some(n as u64),
                    ..OutputRecord::exact(to_machine_string(b))
                };
                println!("{}", serde_json::to_string(&rec).expect("serializable"));
            }
            Format::Csv => println!("{n},{}", to_machine_string(b)),
        }
    }
    ExitCode::SUCCESS
}

fn cmd_table(re_from: f64, re_to: f64, step: f64, im: f64, tol: f64, format: Format) -> ExitCode {
    if !(re_from.is_finite() && re_to.is_finite() && step.is_finite() && im.is_finite()) {
        return usage_error("grid bounds must be finite");
    }
    if re_from > re_to {
        return usage_error("--re-from must not exceed --re-to");
    }
    if step <= 0.0 {
        return usage_error("--step must be positive");
    }
    let cfg = LadderConfig::with_tol(tol);
    if cfg.validate().is_err() {
        return usage_error("tolerance must be a positive finite number");
    }

    if format == Format::Csv {
        println!("{CSV_HEADER}");
    }
    let count = ((re_to - re_from) / step + 1e-9).floor() as u64;
    for i in 0..=count {
        let s = Complex::new(re_from + step * i as f64, im);
        match zeta(s, &cfg) {
            Ok(r) => {
                let rec = OutputRecord::from_eval(s, &r);
                match format {
                    Format::Text => println!(
                        "{}\t{}\t{}\t{}\t{}",
                        s.re,
                        s.im,
                        fmt_complex_sig(r.value, 10),
                        r.method,
                        r.depth_k
                    ),
                    Format::Json => {
                        println!("{}", serde_json::to_string(&rec).expect("serializable"))
                    }
                    Format::Csv => println!("{}", rec.csv_row()),
                }
            }
            // grid points at the pole are flagged and skipped, not fatal
            Err(e @ ZetaError::Pole { .. }) => {
                let rec = ErrorRecord::new(&e, Some(s));
                match format {
                    Format::Text => println!("{}\t{}\tskipped: pole", s.re, s.im),
                    Format::Json => {
                        println!("{}", serde_json::to_string(&rec).expect("serializable"))
                    }
                    Format::Csv => println!("{}", rec.csv_row()),
                }
            }
            Err(e) => return emit_math_error(&e, Some(s), format),
        }
    }
    ExitCode::SUCCESS
}

fn cmd_check(grid: &str, tol: f64) -> ExitCode {
    if grid != "standard" {
        return usage_error(&format!("unknown grid {grid:?}; only \"standard\" is defined"));
    }
    if !(tol.is_finite() && tol > 0.0) {
        return usage_error("--tol must be a positive finite number");
    }
    let cfg = LadderConfig::default();
    let inject = std::env::var("ZETA_CHECK_FAULT_INJECT").is_ok_and(|v| v == "1");

    let suites: Vec<Box<dyn Fn() -> zeta_core::Result<SuiteReport>>> = vec![
        Box::new(move || suite_ladder_vs_exact(&LadderConfig::default(), inject)),
        Box::new(move || suite_ladder_vs_oracle(&cfg, 1e-10)),
        Box::new(|| suite_cross_depth(&LadderConfig::default())),
    ];

    let mut all_pass = true;
    for suite in suites {
        match suite() {
            Ok(report) => {
                let pass = report.max_err <= tol;
                all_pass &= pass;
                println!(
                    "suite={} points={} max_err={:.3e} tol={:.1e} status={}",
                    report.name,
                    report.points,
                    report.max_err,
                    tol,
                    if pass { "PASS" } else { "FAIL" }
                );
            }
            Err(e) => {
                all_pass = false;
                println!("suite error: {e}");
            }
        }
    }
    if all_pass {
        println!("check: all suites passed");
        ExitCode::SUCCESS
    } else {
        println!("check: FAILED");
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Eval { s, tol, format } => cmd_eval(&s, tol, format),
        Cmd::Special { k, format } => cmd_special(k, format),
        Cmd::Bernoulli { upto, format } => cmd_bernoulli(upto, format),
        Cmd::Table {
            re_from,
            re_to,
            step,
            im,
            tol,
            format,
        } => cmd_table(re_from, re_to, step, im, tol, format),
        Cmd::Check { grid, tol } => cmd_check(&grid, tol),
    }
}

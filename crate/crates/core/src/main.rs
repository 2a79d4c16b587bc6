//! Command-line frontend: identity verification, binomial transforms,
//! harmonic-sum closed forms, the series-acceleration demo, and named
//! series coefficient dumps.
//!
//! Exit codes: 0 success/verified, 1 mathematical failure (identity
//! violated or pole diagnostic), 2 usage or parse error.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use euler_series::identities::{registry_ids, verify, verify_all, Bounds, IdentityReport};
use euler_series::transforms::{
    accelerate_alternating, binomial_transform, inverse_binomial_transform, ln2_reference,
};
use euler_series::polyfamilies::hsum_closed_form_sides;
use euler_series::{Rat, Series};

#[derive(Parser)]
#[command(name = "euler-series", version, about = "Exact Euler-type series transformations and identity verification")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify registered identities over a parameter grid.
    Verify {
        /// Identity id (see --all failures for the registered list).
        #[arg(long, conflicts_with = "all")]
        id: Option<String>,
        /// Run the whole registry.
        #[arg(long)]
        all: bool,
        /// Largest summation index for finite identities.
        #[arg(long = "n-max", default_value_t = 16)]
        n_max: usize,
        /// Truncation order for series identities.
        #[arg(long, default_value_t = 16)]
        order: usize,
        /// Restrict the alpha grid to a single rational.
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        alpha: Option<Rat>,
        /// Restrict the p grid to a single rational.
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        p: Option<Rat>,
        /// Seed for the randomized cases.
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Apply the (inverse) binomial transform to a JSON array of rationals.
    Transform {
        /// Input file (JSON array of "p/q" strings); standard input if omitted.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Apply the inverse transform instead.
        #[arg(long)]
        inverse: bool,
    },
    /// Closed form for sum (H_{p+n}-H_p) C(p+n,n) n^m z^n: both sides per degree.
    Hsum {
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        p: Rat,
        #[arg(long, default_value_t = 16)]
        order: usize,
    },
    /// Compare raw vs Euler-transformed partial sums of the alternating
    /// harmonic series (limit ln 2).
    Accelerate {
        #[arg(long)]
        terms: usize,
    },
    /// Dump coefficients of a named series.
    Series {
        /// One of: log1p, neglog, exp, geometric, binom, nbinom, hgen, loggen.
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 16)]
        order: usize,
        /// Parameter for binom.
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        alpha: Option<Rat>,
        /// Parameter for nbinom and loggen.
        #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
        p: Option<Rat>,
    },
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> std::io::Result<ExitCode> {
    match cli.cmd {
        Cmd::Verify {
            id,
            all,
            n_max,
            order,
            alpha,
            p,
            seed,
        } => {
            let mut bounds = Bounds::with_limits(n_max, order);
            bounds.seed = seed;
            if let Some(alpha) = alpha {
                bounds.alpha_grid = vec![alpha];
            }
            if let Some(p) = p {
                bounds.p_grid = vec![p];
            }
            let reports = if all {
                verify_all(&bounds)
            } else {
                let Some(id) = id else {
                    return Ok(usage_error("pass --id <IDENTITY> or --all"));
                };
                match verify(&id, &bounds) {
                    Ok(report) => vec![report],
                    Err(e) => {
                        eprintln!("error: {e}");
                        eprintln!("registered identities:");
                        for (rid, anchor) in registry_ids() {
                            eprintln!("  {rid}  ({anchor})");
                        }
                        return Ok(ExitCode::from(2));
                    }
                }
            };
            let text = render_reports(&reports, cli.format, all);
            emit(&cli.out, &text)?;
            let ok = reports.iter().all(IdentityReport::all_verified);
            if !ok {
                for report in &reports {
                    for case in &report.cases {
                        if let Some(w) = &case.witness {
                            eprintln!(
                                "FAIL {} {:?} at index {}: lhs {} != rhs {}",
                                report.identity, case.params, w.index, w.lhs, w.rhs
                            );
                        }
                    }
                }
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }

        Cmd::Transform { input, inverse } => {
            let raw = match &input {
                Some(path) => fs::read_to_string(path)?,
                None => {
                    let mut buf = String::new();
                    std::io::stdin().read_to_string(&mut buf)?;
                    buf
                }
            };
            let strings: Vec<String> = match serde_json::from_str(&raw) {
                Ok(v) => v,
                Err(e) => return Ok(usage_error(&format!("input is not a JSON array of strings: {e}"))),
            };
            let mut values = Vec::with_capacity(strings.len());
            for (i, s) in strings.iter().enumerate() {
                match s.parse::<Rat>() {
                    Ok(v) => values.push(v),
                    Err(_) => {
                        return Ok(usage_error(&format!(
                            "invalid rational {s:?} at index {i}"
                        )))
                    }
                }
            }
            if values.is_empty() {
                return Ok(usage_error("input array is empty"));
            }
            let result = if inverse {
                inverse_binomial_transform(&values)
            } else {
                binomial_transform(&values)
            };
            let strings: Vec<String> = result.iter().map(Rat::to_string).collect();
            let text = match cli.format {
                Format::Json => serde_json::to_string(&strings).unwrap(),
                Format::Csv => {
                    let mut s = String::from("index,value\n");
                    for (i, v) in strings.iter().enumerate() {
                        s.push_str(&format!("{i},{v}\n"));
                    }
                    s.trim_end().to_string()
                }
                Format::Plain => strings.join("\n"),
            };
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Hsum { m, p, order } => {
            let (lhs, rhs) = match hsum_closed_form_sides(m, &p, order) {
                Ok(sides) => sides,
                Err(e) => {
                    eprintln!("error: {e} (need p > -1 with no pole in p+1..p+{order})");
                    return Ok(ExitCode::from(1));
                }
            };
            #[derive(Serialize)]
            struct Row {
                n: usize,
                lhs: String,
                rhs: String,
                equal: bool,
            }
            let rows: Vec<Row> = (0..=order)
                .map(|n| Row {
                    n,
                    lhs: lhs.coeff(n).to_string(),
                    rhs: rhs.coeff(n).to_string(),
                    equal: lhs.coeff(n) == rhs.coeff(n),
                })
                .collect();
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&rows).unwrap(),
                Format::Csv => {
                    let mut s = String::from("n,lhs,rhs,equal\n");
                    for r in &rows {
                        s.push_str(&format!("{},{},{},{}\n", r.n, r.lhs, r.rhs, r.equal));
                    }
                    s.trim_end().to_string()
                }
                Format::Plain => rows
                    .iter()
                    .map(|r| format!("{:>3}  {:>24}  {:>24}  {}", r.n, r.lhs, r.rhs, r.equal))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Accelerate { terms } => {
            if terms < 1 {
                return Ok(usage_error("--terms must be at least 1"));
            }
            let ln2 = ln2_reference();
            #[derive(Serialize)]
            struct Row {
                n: usize,
                raw: String,
                transformed: String,
                raw_error: String,
                transformed_error: String,
            }
            let rows: Vec<Row> = accelerate_alternating(terms)
                .into_iter()
                .map(|r| Row {
                    n: r.n,
                    raw_error: (&r.raw - &ln2).abs().to_decimal(30),
                    transformed_error: (&r.transformed - &ln2).abs().to_decimal(30),
                    raw: r.raw.to_string(),
                    transformed: r.transformed.to_string(),
                })
                .collect();
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&rows).unwrap(),
                Format::Csv => {
                    let mut s = String::from("n,raw,transformed,raw_error,transformed_error\n");
                    for r in &rows {
                        s.push_str(&format!(
                            "{},{},{},{},{}\n",
                            r.n, r.raw, r.transformed, r.raw_error, r.transformed_error
                        ));
                    }
                    s.trim_end().to_string()
                }
                Format::Plain => rows
                    .iter()
                    .map(|r| {
                        format!(
                            "{:>3}  raw_err {:>38}  transformed_err {:>38}",
                            r.n, r.raw_error, r.transformed_error
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Series {
            name,
            order,
            alpha,
            p,
        } => {
            let need = |opt: &Option<Rat>, flag: &str| -> Result<Rat, String> {
                opt.clone().ok_or_else(|| format!("series {name:?} needs --{flag}"))
            };
            let series: Result<Series, String> = match name.as_str() {
                "log1p" => Ok(Series::log1p(order)),
                "neglog" => Ok(Series::neg_log1m(order)),
                "exp" => Ok(Series::exp(order)),
                "geometric" => Ok(Series::geometric(order)),
                "binom" => need(&alpha, "alpha").map(|a| Series::binom_pow(&a, order)),
                "nbinom" => need(&p, "p").map(|p| Series::nbinom(&p, order)),
                "hgen" => Ok(Series::neg_log1m(order).mul(&Series::geometric(order))),
                "loggen" => {
                    need(&p, "p").map(|p| Series::neg_log1m(order).mul(&Series::nbinom(&p, order)))
                }
                _ => Err(format!(
                    "unknown series {name:?}; known: log1p, neglog, exp, geometric, binom, nbinom, hgen, loggen"
                )),
            };
            let series = match series {
                Ok(s) => s,
                Err(msg) => return Ok(usage_error(&msg)),
            };
            let strings: Vec<String> = series.coeffs().iter().map(Rat::to_string).collect();
            let text = match cli.format {
                Format::Json => serde_json::to_string(&strings).unwrap(),
                Format::Csv => {
                    let mut s = String::from("degree,coefficient\n");
                    for (i, v) in strings.iter().enumerate() {
                        s.push_str(&format!("{i},{v}\n"));
                    }
                    s.trim_end().to_string()
                }
                Format::Plain => strings.join("\n"),
            };
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn render_reports(reports: &[IdentityReport], format: Format, as_list: bool) -> String {
    match format {
        Format::Json => {
            if as_list || reports.len() != 1 {
                serde_json::to_string_pretty(reports).unwrap()
            } else {
                serde_json::to_string_pretty(&reports[0]).unwrap()
            }
        }
        Format::Csv => {
            let mut s = String::from("identity,anchor,params,status,witness_index,witness_lhs,witness_rhs\n");
            for report in reports {
                for case in &report.cases {
                    let params = case
                        .params
                        .iter()
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect::<Vec<_>>()
                        .join(";");
                    let status = match case.status {
                        euler_series::identities::CaseStatus::Verified => "verified",
                        euler_series::identities::CaseStatus::Failed => "failed",
                        euler_series::identities::CaseStatus::SkippedPole => "skipped-pole",
                    };
                    let (wi, wl, wr) = match &case.witness {
                        Some(w) => (w.index.to_string(), w.lhs.clone(), w.rhs.clone()),
                        None => (String::new(), String::new(), String::new()),
                    };
                    s.push_str(&format!(
                        "{},{},{},{},{},{},{}\n",
                        report.identity, report.anchor, params, status, wi, wl, wr
                    ));
                }
            }
            s.trim_end().to_string()
        }
        Format::Plain => reports
            .iter()
            .map(|r| {
                format!(
                    "{:<16} {:<10} verified={:<4} failed={:<4} skipped={:<4} {}",
                    r.identity,
                    r.anchor,
                    r.summary.verified,
                    r.summary.failed,
                    r.summary.skipped,
                    if r.all_verified() { "ok" } else { "FAIL" }
                )
            })
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! or input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::involution::{cancellation_stats, enumerate_fixed_points, involute, MoveCase};
use crate::partition::{parse_partition, DistinctPartition, Sign};
use crate::qseries::{euler_product, rhs_fixed_points, rhs_general};
use crate::staircase::{render_ferrers, staircase};
use crate::verify::{run_suite, Suite, SuiteParams};

#[derive(Debug, Parser)]
#[command(name = "franklin", about = "Extended Franklin involution and q-series identity checks")]
struct Cli {
    /// Write standard output to FILE instead.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RhsKind {
    General,
    Fixed,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    General,
    Sylvester,
    Durfee,
    Involution,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the expansion of prod_{n>m} (1 - q^n), or one of its closed forms.
    Expand {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        rhs: Option<RhsKind>,
        /// Print the coefficient list instead of the polynomial.
        #[arg(long)]
        raw: bool,
    },
    /// Show the m-landing staircase of a partition.
    Staircase {
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        render: bool,
    },
    /// Apply the involution to a partition.
    Involve {
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
        #[arg(long)]
        m: usize,
        /// Also draw the diagrams before and after.
        #[arg(long)]
        trace: bool,
    },
    /// List the fixed points of the involution up to a size bound.
    FixedPoints {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        json: bool,
    },
    /// Per-size cancellation statistics.
    Stats {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run identity checks.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct FixedPointJson {
    parts: Vec<usize>,
    sign: &'static str,
    size: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct FixedPointsJson {
    m: usize,
    max_size: usize,
    count: usize,
    fixed_points: Vec<FixedPointJson>,
}

fn sign_str(sign: Sign) -> &'static str {
    match sign {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

fn parse_for(text: &str, m: usize) -> Result<DistinctPartition, Error> {
    let lambda = parse_partition(text)?;
    lambda.check_parts_exceed(m)?;
    Ok(lambda)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn execute(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Expand { m, order, rhs, raw } => {
            let series = match rhs {
                None => euler_product(m, order),
                Some(RhsKind::General) => rhs_general(m, order),
                Some(RhsKind::Fixed) => rhs_fixed_points(m, order),
            };
            let text = if raw {
                series.raw().join(",")
            } else {
                series.to_string()
            };
            Ok(Outcome::ok(text + "\n"))
        }
        Command::Staircase { partition, m, render } => {
            let lambda = parse_for(&partition, m)?;
            let s = staircase(&lambda, m)?;
            let mut out = String::new();
            let join = |v: &[usize]| {
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            let cells: Vec<String> = s
                .cells()
                .iter()
                .map(|c| format!("({},{})", c.row, c.col))
                .collect();
            let _ = writeln!(out, "partition: {lambda}");
            let _ = writeln!(out, "m: {m}");
            let _ = writeln!(out, "s_m: {}", s.len());
            let _ = writeln!(out, "stairs: {}", s.stair_count());
            let _ = writeln!(out, "landing rows: {}", join(s.landing_rows()));
            let _ = writeln!(out, "top overlap: {}", s.top_overlap());
            let _ = writeln!(out, "cells: {}", cells.join(" "));
            if render {
                out.push('\n');
                out.push_str(&render_ferrers(&lambda, m, true)?);
            }
            Ok(Outcome::ok(out))
        }
        Command::Involve {
            partition,
            m,
            trace,
        } => {
            let lambda = parse_for(&partition, m)?;
            let result = involute(&lambda, m)?;
            let mut out = String::new();
            let _ = writeln!(out, "case: {}", result.case);
            let _ = writeln!(out, "image: {}", result.image);
            let _ = writeln!(
                out,
                "weight: {} -> {}",
                lambda.weight(),
                result.image.weight()
            );
            if trace {
                for (label, p) in [("before", &lambda), ("after", &result.image)] {
                    let _ = writeln!(out, "\n{label}:");
                    if p.is_empty() {
                        out.push_str("(empty)\n");
                    } else {
                        out.push_str(&render_ferrers(p, m, true)?);
                    }
                }
                if result.case == MoveCase::Fixed {
                    let _ = writeln!(out, "\n(fixed point)");
                }
            }
            Ok(Outcome::ok(out))
        }
        Command::FixedPoints { m, max_size, json } => {
            let fixed = enumerate_fixed_points(m, max_size);
            let text = if json {
                to_json(&FixedPointsJson {
                    m,
                    max_size,
                    count: fixed.len(),
                    fixed_points: fixed
                        .iter()
                        .map(|f| FixedPointJson {
                            parts: f.partition.parts().to_vec(),
                            sign: sign_str(f.weight.sign),
                            size: f.weight.exponent,
                        })
                        .collect(),
                })
            } else {
                let mut out = String::new();
                for f in &fixed {
                    let _ = writeln!(out, "{}\t{}", f.partition, f.weight);
                }
                out
            };
            Ok(Outcome::ok(text))
        }
        Command::Stats { m, max_size, json } => {
            let table = cancellation_stats(m, max_size);
            let text = if json {
                to_json(&table)
            } else {
                let mut out = String::from("size\tpartitions\tfixed\tpositive\tnegative\tresidual\tcoefficient\n");
                for s in &table.per_size {
                    let _ = writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        s.size,
                        s.partitions,
                        s.fixed,
                        s.fixed_positive,
                        s.fixed_negative,
                        s.residual,
                        s.product_coefficient
                    );
                }
                out
            };
            Ok(Outcome::ok(text))
        }
        Command::Verify {
            suite,
            m,
            order,
            max_size,
            json,
        } => {
            let defaults = SuiteParams::default();
            let params = SuiteParams {
                m: m.unwrap_or(defaults.m),
                order: order.unwrap_or(defaults.order),
                max_size: max_size.unwrap_or(defaults.max_size),
            };
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::General => Suite::General,
                SuiteArg::Sylvester => Suite::Sylvester,
                SuiteArg::Durfee => Suite::Durfee,
                SuiteArg::Involution => Suite::Involution,
            };
            let reports = run_suite(suite, params);
            let code = if reports.iter().all(|r| r.passed()) { 0 } else { 1 };
            let text = if json {
                to_json(&reports)
            } else {
                reports.iter().map(|r| format!("{r}\n")).collect()
            };
            Ok(Outcome { text, code })
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            return if informational {
                let _ = stdout.write_all(rendered.as_bytes());
                0
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
                2
            };
        }
    };
    let outcome = match execute(cli.command) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    match cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &outcome.text) {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => {
            let _ = stdout.write_all(outcome.text.as_bytes());
        }
    }
    outcome.code
}

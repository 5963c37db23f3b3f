//! Command-line front end: `analyze`, `corpus` and `selfcheck`.
//!
//! Exit codes: 0 success, 1 computation or configuration error, 2 corpus,
//! selfcheck or oracle mismatch, 64 usage error.

pub mod config;
pub mod corpus;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{self, OracleCaps};
use crate::order::Order;
use crate::qz::{self, AbGroup};
use crate::theorems;
use config::InputDocument;
use report::{ChainReportDocument, OracleState, OracleStatusDoc, ReportDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "brauer-pinch", version, about = "Brauer groups of pinched varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze a configuration or chain document.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Certify the exact part of the report by enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Re-run the built-in examples and compare with the committed reports.
    Corpus {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the enumeration suites against the group arithmetic.
    Selfcheck {
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        max_order: u64,
    },
}

/// Outcome of rendering one document.
pub struct Rendered {
    pub text: String,
    /// The oracle ran and found a discrepancy.
    pub oracle_failed: bool,
}

/// Parses, analyzes and renders a document.
pub fn render_document(bytes: &[u8], format: Format, with_oracle: bool, caps: &OracleCaps) -> Result<Rendered> {
    match config::parse_document(bytes)? {
        InputDocument::Config(doc) => {
            let cfg = config::to_config(&doc)?;
            let r = theorems::analyze(&cfg)?;
            let status = if with_oracle {
                OracleStatusDoc::from_outcome(oracle::verify_report(&cfg, &r, caps))
            } else {
                OracleStatusDoc::not_requested()
            };
            let oracle_failed = status.status == OracleState::Fail;
            let d = ReportDocument::new(&doc, &r, status);
            let text = match format {
                Format::Json => report::to_json(&d),
                Format::Text => d.to_text(),
            };
            Ok(Rendered { text, oracle_failed })
        }
        InputDocument::Chain(doc) => {
            let steps = doc
                .chain
                .iter()
                .map(config::to_config)
                .collect::<Result<Vec<_>>>()?;
            let r = theorems::seminormalization_chain(&steps)?;
            let d = ChainReportDocument::new(&doc, &r);
            let text = match format {
                Format::Json => report::to_json(&d),
                Format::Text => d.to_text(),
            };
            Ok(Rendered {
                text,
                oracle_failed: false,
            })
        }
    }
}

fn report_error(err: &mut dyn Write, e: &Error) {
    let _ = writeln!(err, "error[{}]: {e}", e.class());
}

/// Entry point; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{shown}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{shown}");
                    EXIT_USAGE
                }
            };
        }
    };
    let caps = match OracleCaps::from_env() {
        Ok(c) => c,
        Err(e) => {
            report_error(err, &e);
            return EXIT_ERROR;
        }
    };
    match cli.command {
        Command::Analyze {
            file,
            format,
            oracle,
        } => analyze(&file, format, oracle, &caps, out, err),
        Command::Corpus { format } => run_corpus(format, &caps, out),
        Command::Selfcheck { max_order } => selfcheck(max_order, &caps, out, err),
    }
}

fn analyze(
    file: &PathBuf,
    format: Format,
    with_oracle: bool,
    caps: &OracleCaps,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let bytes = match std::fs::read(file) {
        Ok(b) => b,
        Err(e) => {
            report_error(err, &Error::Io(format!("cannot read {}: {e}", file.display())));
            return EXIT_ERROR;
        }
    };
    match render_document(&bytes, format, with_oracle, caps) {
        Ok(r) => {
            let _ = write!(out, "{}", r.text);
            if r.oracle_failed {
                let _ = writeln!(err, "oracle: the report disagrees with enumeration");
                EXIT_MISMATCH
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            report_error(err, &e);
            EXIT_ERROR
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CorpusLine {
    name: &'static str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

#[derive(Serialize)]
struct CorpusSummary {
    entries: Vec<CorpusLine>,
    passed: bool,
}

/// Compares every corpus entry with its committed report.
pub fn check_corpus(caps: &OracleCaps) -> Vec<(&'static str, std::result::Result<(), String>)> {
    corpus::ENTRIES
        .iter()
        .map(|e| {
            let result = match render_document(e.config.as_bytes(), Format::Json, true, caps) {
                Ok(r) => match corpus::first_difference(e.expected, &r.text) {
                    None => Ok(()),
                    Some(line) => Err(format!("differs from the committed report at line {line}")),
                },
                Err(err) => Err(format!("error[{}]: {err}", err.class())),
            };
            (e.name, result)
        })
        .collect()
}

fn run_corpus(format: Format, caps: &OracleCaps, out: &mut dyn Write) -> i32 {
    let results = check_corpus(caps);
    let passed = results.iter().all(|(_, r)| r.is_ok());
    match format {
        Format::Text => {
            for (name, r) in &results {
                let _ = match r {
                    Ok(()) => writeln!(out, "ok        {name}"),
                    Err(d) => writeln!(out, "MISMATCH  {name}: {d}"),
                };
            }
            let ok = results.iter().filter(|(_, r)| r.is_ok()).count();
            let _ = writeln!(out, "{ok}/{} corpus entries reproduce", results.len());
        }
        Format::Json => {
            let summary = CorpusSummary {
                entries: results
                    .into_iter()
                    .map(|(name, r)| CorpusLine {
                        name,
                        status: if r.is_ok() { "ok" } else { "mismatch" },
                        detail: r.err(),
                    })
                    .collect(),
                passed,
            };
            let _ = write!(out, "{}", report::to_json(&summary));
        }
    }
    if passed {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    }
}

/// Every non-decreasing list of factors `≥ 2` with product at most `bound`.
pub fn factor_lists(bound: u64) -> Vec<Vec<u64>> {
    fn go(start: u64, rest: u64, cur: &mut Vec<u64>, all: &mut Vec<Vec<u64>>) {
        all.push(cur.clone());
        let mut f = start;
        while f <= rest {
            cur.push(f);
            go(f, rest / f, cur, all);
            cur.pop();
            f += 1;
        }
    }
    let mut all = Vec::new();
    go(2, bound, &mut Vec::new(), &mut all);
    all
}

/// `qz::product` of cyclic groups has the element-order census of the
/// explicit product, for every factor list in [`factor_lists`].
pub fn census_suite(bound: u64, caps: &OracleCaps) -> Result<std::result::Result<usize, Vec<u64>>> {
    let lists = factor_lists(bound);
    for list in &lists {
        let g = qz::product(list.iter().map(|&m| AbGroup::cyclic(Order::from_u64(m).expect("positive"))));
        let factors: Vec<u64> = match &g {
            AbGroup::Known(k) => k.invariant_factors().iter().filter_map(Order::to_u64).collect(),
            _ => return Ok(Err(list.clone())),
        };
        if factors.windows(2).any(|w| w[1] % w[0] != 0)
            || oracle::census_invariant_factors(&factors, caps)? != oracle::census_invariant_factors(list, caps)?
        {
            return Ok(Err(list.clone()));
        }
    }
    Ok(Ok(lists.len()))
}

fn selfcheck(max_order: u64, caps: &OracleCaps, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let lattice = oracle::lattice_counterexample(max_order, caps, |a, b| {
        let qa = qz::cyclic(a).expect("positive");
        let qb = qz::cyclic(b).expect("positive");
        let order = |g: qz::QzSubgroup| g.known_order().and_then(Order::to_u64).unwrap_or(0);
        (order(qa.intersect(&qb)), order(qa.join(&qb)))
    });
    let mut failed = false;
    match lattice {
        Ok(None) => {
            let _ = writeln!(out, "lattice  pass  {} pairs up to order {max_order}", max_order * max_order);
        }
        Ok(Some(c)) => {
            failed = true;
            let _ = writeln!(
                out,
                "lattice  FAIL  {}({}, {}): expected order {}, got {}",
                c.operation, c.a, c.b, c.expected, c.got
            );
        }
        Err(e) => {
            report_error(err, &e);
            return EXIT_ERROR;
        }
    }
    let bound = caps.census.min(1000);
    match census_suite(bound, caps) {
        Ok(Ok(n)) => {
            let _ = writeln!(out, "census   pass  {n} factor lists with product <= {bound}");
        }
        Ok(Err(list)) => {
            failed = true;
            let _ = writeln!(out, "census   FAIL  factor list {list:?}");
        }
        Err(e) => {
            report_error(err, &e);
            return EXIT_ERROR;
        }
    }
    if failed {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use braidfloer::braid::{parse_braid, BraidWord, TransitivityMode};
use braidfloer::four_manifold::SumConfiguration;
use braidfloer::nielsen::MAX_REFINE_DEPTH;
use braidfloer::report::{build_report, render_text, ReportConfig};
use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, ValueEnum};
use rayon::prelude::*;

const EXIT_PARSE: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Floer-theoretic and 4-manifold invariants of framed spherical braids.
#[derive(Debug, Parser)]
#[command(name = "braidfloer", version)]
#[command(group(ArgGroup::new("input").required(true).args(["braid", "batch"])))]
struct Args {
    /// Braid expression, e.g. "d=3; s1 s2"
    #[arg(long)]
    braid: Option<String>,

    /// File with one braid expression per line; `#` starts a comment
    #[arg(long)]
    batch: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Conjugator length for twisted-conjugacy merging (0 = homological classes only)
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=MAX_REFINE_DEPTH as i64))]
    refine_depth: u8,

    /// JSON piece table for the fiber sum; defaults to M1, T4, K3, K3
    #[arg(long)]
    config: Option<PathBuf>,

    /// Accept any d-cycle, relabeling punctures to (1 2 ... d)
    #[arg(long)]
    relaxed: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_PARSE,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(&args) {
        Ok(output) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(output.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("braidfloer: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(args: &Args) -> Result<String, Failure> {
    let config = ReportConfig {
        refine_depth: args.refine_depth.into(),
        transitivity: if args.relaxed {
            TransitivityMode::Relaxed
        } else {
            TransitivityMode::Strict
        },
        pieces: match &args.config {
            Some(path) => load_config(path)?,
            None => SumConfiguration::standard(),
        },
        ..ReportConfig::default()
    };
    let inputs: Vec<(String, BraidWord)> = match (&args.braid, &args.batch) {
        (Some(text), None) => vec![(text.clone(), parse_line(text, None)?)],
        (None, Some(path)) => read_batch(path)?,
        _ => {
            return Err(Failure::usage(
                "exactly one of --braid, --batch is required",
            ))
        }
    };
    let rendered: Vec<Result<String, Failure>> = inputs
        .par_iter()
        .map(|(text, braid)| {
            let report = build_report(text, braid, &config)
                .map_err(|e| Failure::parse(format!("{text}: invalid configuration: {e}")))?;
            Ok(match args.format {
                Format::Json => {
                    let mut line = serde_json::to_string(&report).expect("report serializes");
                    line.push('\n');
                    line
                }
                Format::Text => render_text(&report),
            })
        })
        .collect();
    rendered.into_iter().collect()
}

fn load_config(path: &Path) -> Result<SumConfiguration, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn parse_line(text: &str, line: Option<usize>) -> Result<BraidWord, Failure> {
    parse_braid(text).map_err(|e| match line {
        Some(n) => Failure::parse(format!("line {n}: {e}")),
        None => Failure::parse(e.to_string()),
    })
}

fn read_batch(path: &Path) -> Result<Vec<(String, BraidWord)>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        out.push((content.to_string(), parse_line(content, Some(k + 1))?));
    }
    Ok(out)
}

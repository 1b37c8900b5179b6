//! `wsadist` command-line front end.
//!
//! ```text
//! wsadist dist [--mode M] [--normalize N] [--model P] [--format F] [--tab-width W] [--files] A B
//! wsadist normalize [--normalize N] [INPUT]
//! wsadist detect [--threshold T] [--min-rows R] [--normalize N] [--model P] [--format F] [--tab-width W] [INPUT]
//! ```
//!
//! Exit codes: 0 success, 2 bad flags or cost model, 3 unreadable input,
//! 4 input exceeds a distance size limit.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use wsadist_core::{
    detect_tables, distance, expand_tabs, normalize_line, Algorithm, Cost, CostModel, DetectConfig,
    DistanceError, NormalizationMode, TableRegion,
};

#[derive(Debug, Parser)]
#[command(
    name = "wsadist",
    version,
    about = "Trailing-whitespace-agnostic edit distance and plaintext table detection"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Distance between two strings, or between two files line by line.
    Dist {
        #[arg(long, value_enum, default_value_t = Mode::WsAgnostic)]
        mode: Mode,
        /// Treat the operands as paths (`-` for stdin) and compare line k with line k.
        #[arg(long)]
        files: bool,
        #[command(flatten)]
        scoring: Scoring,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        first: String,
        second: String,
    },
    /// Normalize every line of the input.
    Normalize {
        #[arg(long, value_enum, default_value_t = Normalization::Cased)]
        normalize: Normalization,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Report table regions in a plaintext document.
    Detect {
        #[arg(long, default_value_t = 0.5, value_parser = parse_threshold)]
        threshold: f64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(2..))]
        min_rows: u64,
        #[command(flatten)]
        scoring: Scoring,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(default_value = "-")]
        input: String,
    },
}

#[derive(Debug, Args)]
struct Scoring {
    #[arg(long, value_enum, default_value_t = Normalization::Cased)]
    normalize: Normalization,
    /// `unit`, `appendix-a`, or a path to a JSON cost model.
    #[arg(long, default_value = "appendix-a")]
    model: String,
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    tab_width: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Standard,
    WsAgnostic,
    NaiveOracle,
}

impl From<Mode> for Algorithm {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::Standard => Algorithm::Standard,
            Mode::WsAgnostic => Algorithm::WsAgnostic,
            Mode::NaiveOracle => Algorithm::NaiveOracle,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Normalization {
    Simple,
    Cased,
    None,
}

impl From<Normalization> for NormalizationMode {
    fn from(n: Normalization) -> Self {
        match n {
            Normalization::Simple => NormalizationMode::Simple,
            Normalization::Cased => NormalizationMode::Cased,
            Normalization::None => NormalizationMode::None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    #[value(alias = "structured")]
    Json,
}

fn parse_threshold(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(0.0..=1.0).contains(&t) {
        return Err(format!("{t} is not in [0, 1]"));
    }
    Ok(t)
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Limit(#[from] DistanceError),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Limit(_) => 4,
        }
    }
}

/// One compared line pair in a `dist` report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCost {
    pub line: usize,
    pub cost: Cost,
}

/// Structured output of `dist`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistReport {
    pub pairs: Vec<PairCost>,
    pub total: Cost,
}

/// Structured output of `detect`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DetectReport {
    pub regions: Vec<TableRegion>,
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return e.exit_code();
        }
    };

    let result = match cli.command {
        Command::Dist {
            mode,
            files,
            scoring,
            format,
            first,
            second,
        } => run_dist(
            mode, files, &scoring, format, &first, &second, stdin, stdout,
        ),
        Command::Normalize { normalize, input } => run_normalize(normalize, &input, stdin, stdout),
        Command::Detect {
            threshold,
            min_rows,
            scoring,
            format,
            input,
        } => run_detect(threshold, min_rows, &scoring, format, &input, stdin, stdout),
    };

    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "wsadist: {e}");
            e.exit_code()
        }
    }
}

fn load_model(source: &str) -> Result<CostModel, CliError> {
    if let Some(model) = CostModel::preset(source) {
        return Ok(model);
    }
    let text = fs::read_to_string(source)
        .map_err(|e| CliError::Input(format!("cannot read cost model {source:?}: {e}")))?;
    CostModel::from_json(&text).map_err(|e| CliError::Usage(format!("cost model {source:?}: {e}")))
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, CliError> {
    let mut bytes = Vec::new();
    let read = if path == "-" {
        stdin.read_to_end(&mut bytes).map(|_| ())
    } else {
        fs::File::open(path).and_then(|mut f| f.read_to_end(&mut bytes).map(|_| ()))
    };
    read.map_err(|e| CliError::Input(format!("cannot read {path:?}: {e}")))?;
    String::from_utf8(bytes).map_err(|_| CliError::Input(format!("{path:?} is not valid UTF-8")))
}

fn emit(stdout: &mut dyn Write, text: &str) -> Result<(), CliError> {
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| CliError::Input(format!("cannot write output: {e}")))
}

#[allow(clippy::too_many_arguments)]
fn run_dist(
    mode: Mode,
    files: bool,
    scoring: &Scoring,
    format: Format,
    first: &str,
    second: &str,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    if files && first == "-" && second == "-" {
        return Err(CliError::Usage(
            "at most one operand may read standard input".to_string(),
        ));
    }
    let model = load_model(&scoring.model)?;
    let normalization = NormalizationMode::from(scoring.normalize);
    let tab_width = scoring.tab_width as usize;
    let prepare = |s: &str| normalize_line(&expand_tabs(s, tab_width), normalization);

    let (left, right) = if files {
        let a = read_input(first, stdin)?;
        let b = read_input(second, stdin)?;
        (
            a.lines().map(String::from).collect::<Vec<_>>(),
            b.lines().map(String::from).collect::<Vec<_>>(),
        )
    } else {
        (vec![first.to_string()], vec![second.to_string()])
    };

    let rows = left.len().max(right.len());
    let mut pairs = Vec::with_capacity(rows);
    for line in 0..rows {
        let a = prepare(left.get(line).map_or("", String::as_str));
        let b = prepare(right.get(line).map_or("", String::as_str));
        let cost = distance(mode.into(), &a, &b, &model)?.cost;
        pairs.push(PairCost { line, cost });
    }
    let report = DistReport {
        total: pairs.iter().map(|p| p.cost).sum(),
        pairs,
    };

    let text = match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&report).expect("serializable")
        ),
        Format::Text if !files => format!("{}\n", report.total),
        Format::Text => {
            let mut out = String::new();
            for p in &report.pairs {
                out.push_str(&format!("{}\t{}\n", p.line, p.cost));
            }
            out.push_str(&format!("total\t{}\n", report.total));
            out
        }
    };
    emit(stdout, &text)
}

fn run_normalize(
    normalize: Normalization,
    input: &str,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let text = read_input(input, stdin)?;
    let mode = NormalizationMode::from(normalize);
    let mut out = String::with_capacity(text.len());
    for line in text.split_inclusive('\n') {
        let body = line.trim_end_matches(['\n', '\r']);
        out.push_str(&normalize_line(body, mode));
        out.push_str(&line[body.len()..]);
    }
    emit(stdout, &out)
}

fn run_detect(
    threshold: f64,
    min_rows: u64,
    scoring: &Scoring,
    format: Format,
    input: &str,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let invalid = |e: wsadist_core::table_detect::ConfigError| CliError::Usage(e.to_string());
    let model = load_model(&scoring.model)?;
    let config = DetectConfig::default()
        .with_threshold(threshold)
        .map_err(invalid)?
        .with_min_rows(min_rows as usize)
        .map_err(invalid)?
        .with_tab_width(scoring.tab_width as usize)
        .map_err(invalid)?
        .with_mode(scoring.normalize.into())
        .with_model(model);

    let text = read_input(input, stdin)?;
    let lines: Vec<&str> = text.lines().collect();
    let report = DetectReport {
        regions: detect_tables(&lines, &config),
    };

    let out = match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&report).expect("serializable")
        ),
        Format::Text => report
            .regions
            .iter()
            .map(|r| format!("{} {} {:.6}\n", r.start_line, r.end_line, r.score))
            .collect(),
    };
    emit(stdout, &out)
}

//! Command-line surface: `fres`, `sample`, `filter`, `stats`, `sari`.
//!
//! Contract: stdout carries data, stderr carries the run manifest and
//! diagnostics. Exit codes are stable: 0 ok, 2 I/O, 3 bad flags, 4 empty
//! corpus, 5 line-alignment mismatch.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::corpus::{self, PairReader, StatsAccumulator};
use crate::sari::{sari_corpus, SariInstance, SariOptions};
use crate::selector::{
    build_pseudo_corpus, Comparison, OrientationPolicy, SelectorConfig,
};
use crate::textmetrics::fres_of_line;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 2;
pub const EXIT_FLAGS: i32 = 3;
pub const EXIT_EMPTY_CORPUS: i32 = 4;
pub const EXIT_MISALIGNED: i32 = 5;

#[derive(Parser)]
#[command(
    name = "simplicorpus",
    version,
    about = "Build pseudo sentence-simplification corpora and score outputs with SARI"
)]
struct Cli {
    /// Worker threads for per-pair scoring (default: available parallelism)
    #[arg(long, global = true, env = "SIMPLICORPUS_THREADS")]
    threads: Option<usize>,

    /// Write the run manifest JSON here instead of stderr
    #[arg(long, global = true, value_name = "PATH")]
    report: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a Flesch Reading Ease score per input line
    Fres {
        /// Input file; stdin when omitted
        input: Option<PathBuf>,
    },
    /// Uniformly sample pairs from a TSV corpus (seeded, reproducible)
    Sample(SampleArgs),
    /// Build a pseudo simplification corpus by readability-difference filtering
    Filter(FilterArgs),
    /// Report corpus statistics as JSON
    Stats {
        /// Input TSV; stdin when omitted
        input: Option<PathBuf>,
    },
    /// Score a system output with SARI against original + references
    Sari(SariArgs),
}

#[derive(Args)]
struct SampleArgs {
    /// Input TSV; stdin when omitted
    input: Option<PathBuf>,
    /// Sample size
    #[arg(long, default_value_t = 2_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// RNG seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output TSV; stdout when omitted
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FilterArgs {
    /// Input TSV; stdin when omitted
    input: Option<PathBuf>,
    /// Minimum readability-score difference a pair must clear
    #[arg(long, default_value_t = 10.0)]
    threshold: f64,
    /// Complex/simple role assignment
    #[arg(long, value_enum, default_value_t = OrientArg::Auto)]
    orient: OrientArg,
    /// Threshold comparison
    #[arg(long, value_enum, default_value_t = CmpArg::Gt)]
    cmp: CmpArg,
    /// Output file for the complex side
    #[arg(long, default_value = "complex.txt")]
    complex_out: PathBuf,
    /// Output file for the simple side
    #[arg(long, default_value = "simple.txt")]
    simple_out: PathBuf,
    /// Write a single TSV here instead of the two parallel files
    #[arg(long)]
    tsv: Option<PathBuf>,
}

#[derive(Args)]
struct SariArgs {
    /// Original (complex) sentences, one per line
    #[arg(long)]
    orig: PathBuf,
    /// System output, line-aligned with the original
    #[arg(long)]
    sys: PathBuf,
    /// Reference files, comma separated, each line-aligned
    #[arg(long, value_delimiter = ',', required = true)]
    refs: Vec<PathBuf>,
    /// Score the delete operation as F1 instead of precision
    #[arg(long)]
    del_f1: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrientArg {
    Auto,
    KeepOrder,
}

#[derive(Clone, Copy, ValueEnum)]
enum CmpArg {
    /// strictly greater than the threshold
    Gt,
    /// greater than or equal to the threshold
    Ge,
}

enum CliError {
    Io(io::Error),
    Flags(String),
    EmptyCorpus,
    Misaligned(String),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => EXIT_IO,
            CliError::Flags(_) => EXIT_FLAGS,
            CliError::EmptyCorpus => EXIT_EMPTY_CORPUS,
            CliError::Misaligned(_) => EXIT_MISALIGNED,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Io(e) => format!("I/O error: {e}"),
            CliError::Flags(m) => m.clone(),
            CliError::EmptyCorpus => "corpus contains no valid pairs".to_string(),
            CliError::Misaligned(m) => m.clone(),
        }
    }
}

/// Everything needed to reproduce a run: resolved configuration, counts,
/// and timing. Emitted on stderr (or `--report`) after every success.
#[derive(Serialize)]
struct RunManifest {
    subcommand: &'static str,
    config: serde_json::Value,
    counts: serde_json::Value,
    duration_secs: f64,
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_FLAGS,
            };
            let _ = e.print();
            return code;
        }
    };
    let threads = cli
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let started = Instant::now();
    let result = match &cli.command {
        Command::Fres { input } => cmd_fres(input.as_deref()),
        Command::Sample(args) => cmd_sample(args),
        Command::Filter(args) => cmd_filter(args, threads),
        Command::Stats { input } => cmd_stats(input.as_deref()),
        Command::Sari(args) => cmd_sari(args),
    };
    match result {
        Ok((subcommand, config, counts)) => {
            let manifest = RunManifest {
                subcommand,
                config,
                counts,
                duration_secs: started.elapsed().as_secs_f64(),
            };
            if write_manifest(&manifest, cli.report.as_deref()).is_err() {
                return EXIT_IO;
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("simplicorpus: {}", e.message());
            e.exit_code()
        }
    }
}

fn write_manifest(manifest: &RunManifest, path: Option<&Path>) -> io::Result<()> {
    let text = serde_json::to_string(manifest)?;
    match path {
        Some(p) => std::fs::write(p, text + "\n"),
        None => writeln!(io::stderr(), "{text}"),
    }
}

fn open_input(path: Option<&Path>) -> Result<Box<dyn BufRead>, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(Box::new(BufReader::new(File::open(p)?))),
        _ => Ok(Box::new(BufReader::new(io::stdin()))),
    }
}

type CmdResult = Result<(&'static str, serde_json::Value, serde_json::Value), CliError>;

fn cmd_fres(input: Option<&Path>) -> CmdResult {
    let reader = open_input(input)?;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut lines = 0u64;
    let mut unscoreable = 0u64;
    for line in reader.lines() {
        let line = line?;
        match fres_of_line(&line) {
            Ok(score) => writeln!(out, "{:.2}\t{}", score.value, line)?,
            Err(_) => {
                unscoreable += 1;
                writeln!(out, "NA\t{}", line)?;
            }
        }
        lines += 1;
    }
    out.flush()?;
    Ok((
        "fres",
        json!({ "input": input.map(display_path) }),
        json!({ "lines": lines, "unscoreable": unscoreable }),
    ))
}

fn cmd_sample(args: &SampleArgs) -> CmdResult {
    let mut reader = PairReader::new(open_input(args.input.as_deref())?);
    let mut reservoir = corpus::Reservoir::new(args.n as usize, args.seed);
    for pair in reader.by_ref() {
        reservoir.push(pair?);
    }
    let read = reader.report();
    let sampled = reservoir.finish();
    match &args.output {
        Some(path) => {
            let mut out = BufWriter::new(File::create(path)?);
            corpus::write_tsv(&mut out, &sampled)?;
            out.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            corpus::write_tsv(&mut out, &sampled)?;
            out.flush()?;
        }
    }
    Ok((
        "sample",
        json!({
            "input": args.input.as_deref().map(display_path),
            "output": args.output.as_deref().map(display_path),
            "n": args.n,
            "seed": args.seed,
        }),
        json!({
            "read": read.read,
            "malformed_lines": read.malformed,
            "sampled": sampled.len(),
        }),
    ))
}

fn cmd_filter(args: &FilterArgs, threads: usize) -> CmdResult {
    if args.threshold.is_nan() || args.threshold < 0.0 {
        return Err(CliError::Flags(format!(
            "--threshold must be a non-negative number, got {}",
            args.threshold
        )));
    }
    let config = SelectorConfig {
        threshold: args.threshold,
        orientation: match args.orient {
            OrientArg::Auto => OrientationPolicy::Auto,
            OrientArg::KeepOrder => OrientationPolicy::KeepOrder,
        },
        comparison: match args.cmp {
            CmpArg::Gt => Comparison::StrictGreater,
            CmpArg::Ge => Comparison::GreaterEqual,
        },
    };
    let mut reader = PairReader::new(open_input(args.input.as_deref())?);

    enum Sink {
        Parallel(BufWriter<File>, BufWriter<File>),
        Tsv(BufWriter<File>),
    }
    let mut sink = match &args.tsv {
        Some(path) => Sink::Tsv(BufWriter::new(File::create(path)?)),
        None => Sink::Parallel(
            BufWriter::new(File::create(&args.complex_out)?),
            BufWriter::new(File::create(&args.simple_out)?),
        ),
    };
    let report = build_pseudo_corpus(reader.by_ref(), &config, threads, |pair| {
        match &mut sink {
            Sink::Parallel(complex, simple) => {
                writeln!(complex, "{}", pair.complex)?;
                writeln!(simple, "{}", pair.simple)?;
            }
            Sink::Tsv(out) => writeln!(out, "{}\t{}", pair.complex, pair.simple)?,
        }
        Ok(())
    })?;
    match &mut sink {
        Sink::Parallel(complex, simple) => {
            complex.flush()?;
            simple.flush()?;
        }
        Sink::Tsv(out) => out.flush()?,
    }
    let read = reader.report();
    println!("{}", serde_json::to_string(&report)?);
    Ok((
        "filter",
        json!({
            "input": args.input.as_deref().map(display_path),
            "threshold": args.threshold,
            "orientation": config.orientation,
            "comparison": config.comparison,
            "complex_out": display_path(&args.complex_out),
            "simple_out": display_path(&args.simple_out),
            "tsv": args.tsv.as_deref().map(display_path),
            "threads": threads,
        }),
        json!({
            "read": report.read,
            "kept": report.kept,
            "dropped_below_threshold": report.dropped_below_threshold,
            "dropped_unscoreable": report.dropped_unscoreable,
            "malformed_lines": read.malformed,
        }),
    ))
}

fn cmd_stats(input: Option<&Path>) -> CmdResult {
    let mut reader = PairReader::new(open_input(input)?);
    let mut acc = StatsAccumulator::new();
    for pair in reader.by_ref() {
        let pair = pair?;
        acc.add(&pair.source, &pair.target);
    }
    let read = reader.report();
    let stats = acc.finish().map_err(|_| CliError::EmptyCorpus)?;
    let mut report = serde_json::to_value(&stats)?;
    report["malformed_lines"] = json!(read.malformed);
    println!("{report}");
    Ok((
        "stats",
        json!({ "input": input.map(display_path) }),
        report,
    ))
}

fn cmd_sari(args: &SariArgs) -> CmdResult {
    let orig = read_lines(&args.orig)?;
    let sys = read_lines(&args.sys)?;
    let refs: Vec<Vec<String>> = args
        .refs
        .iter()
        .map(|p| read_lines(p))
        .collect::<Result<_, _>>()?;
    for (path, lines) in std::iter::once((&args.sys, &sys)).chain(args.refs.iter().zip(&refs)) {
        if lines.len() != orig.len() {
            return Err(CliError::Misaligned(format!(
                "{} has {} lines but {} has {}",
                path.display(),
                lines.len(),
                args.orig.display(),
                orig.len()
            )));
        }
    }
    let instances: Vec<SariInstance> = (0..orig.len())
        .map(|i| {
            let ref_lines: Vec<&str> = refs.iter().map(|r| r[i].as_str()).collect();
            SariInstance::from_lines(&orig[i], &sys[i], &ref_lines)
        })
        .collect();
    let opts = SariOptions {
        delete_f1: args.del_f1,
    };
    let score = sari_corpus(&instances, opts).map_err(|e| match e {
        crate::sari::SariError::EmptyCorpus => CliError::EmptyCorpus,
        other => CliError::Misaligned(other.to_string()),
    })?;
    let per_n: Vec<_> = score
        .per_n
        .iter()
        .enumerate()
        .map(|(i, s)| json!({ "n": i + 1, "keep": s.keep, "add": s.add, "del": s.del }))
        .collect();
    let output = json!({
        "overall": score.overall,
        "keep": score.keep_f1,
        "add": score.add_f1,
        "del": score.del_score,
        "per_n": per_n,
        "sentences": instances.len(),
    });
    println!("{output}");
    eprintln!(
        "SARI {:.2} (keep {:.2} / add {:.2} / del {:.2}) over {} sentences",
        score.overall,
        score.keep_f1,
        score.add_f1,
        score.del_score,
        instances.len()
    );
    Ok((
        "sari",
        json!({
            "orig": display_path(&args.orig),
            "sys": display_path(&args.sys),
            "refs": args.refs.iter().map(|p| display_path(p)).collect::<Vec<_>>(),
            "del_f1": args.del_f1,
        }),
        json!({ "sentences": instances.len(), "overall": score.overall }),
    ))
}

fn read_lines(path: &Path) -> Result<Vec<String>, CliError> {
    let mut text = String::new();
    File::open(path)?.read_to_string(&mut text)?;
    Ok(text.lines().map(String::from).collect())
}

fn display_path(path: &Path) -> String {
    path.display().to_string()
}

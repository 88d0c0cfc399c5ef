//! `kmcover`: centers and parabolic covering kernels of generalized Cartan
//! matrices from the command line.
//!
//! Exit codes: 0 ok, 2 rejected input, 3 unreadable or unparsable input,
//! 4 internal consistency failure, 1 output I/O failure.

mod catalog;
mod document;
mod render;

use std::cell::Cell;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kmcover::cartan::{builtin, classify, violations};
use kmcover::center::{center_generators, center_structure};
use kmcover::parabolic::{enumerate_each, report, EnumerateOptions, DEFAULT_ENUMERATION_LIMIT};
use kmcover::{CartanMatrix, Error, GammaMode, Structure};
use serde::Serialize;

use catalog::{existing_subsets, CatalogError, CatalogRecord, CatalogWriter, FORMAT_VERSION};
use document::MatrixDocument;
use render::{CenterView, ClassifyView, EnumerateSummary, ReportView, ValidateView};

const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
const LONG_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (catalog format 1)");

#[derive(Parser)]
#[command(name = "kmcover", version = LONG_VERSION, about = "Centers and parabolic covering kernels of generalized Cartan matrices")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the generalized Cartan matrix axioms.
    Validate {
        /// Matrix file (JSON document or whitespace grid); `-` reads stdin.
        path: PathBuf,
    },
    /// Finite / affine / indefinite type, per Dynkin component.
    Classify { path: PathBuf },
    /// Center of the simply connected group: finite part and torus rank.
    Center { path: PathBuf },
    /// Report for one proper subset I of the index set.
    Parabolic {
        path: PathBuf,
        /// Comma-separated labels, e.g. `1,2`; empty for the torus.
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
        /// Row route only; skip the cross-check against the lattice route.
        #[arg(long)]
        fast: bool,
    },
    /// Reports for every proper subset, appended to a JSONL catalog.
    Enumerate {
        path: PathBuf,
        /// Catalog file; records already present for this matrix are skipped.
        /// Without it, records go to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (0 = one per core).
        #[arg(long, env = "KMCOVER_JOBS", default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        fast: bool,
        /// Allow ranks above the limit.
        #[arg(long)]
        force: bool,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
        limit: usize,
    },
    /// Print a builtin matrix.
    Generate {
        /// finite-a .. finite-g, or affine-a.
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Output(io::Error),
    Rejected(String),
    Parse(String),
    Consistency(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Output(_) => 1,
            Failure::Rejected(_) => 2,
            Failure::Parse(_) => 3,
            Failure::Consistency(_) => 4,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) => Failure::Consistency(e.to_string()),
            _ => Failure::Rejected(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Output(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Output(e) => write!(f, "write failed: {e}"),
            Failure::Rejected(m) | Failure::Parse(m) | Failure::Consistency(m) => f.write_str(m),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read_document(path: &Path) -> Result<MatrixDocument, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Parse(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?
    };
    MatrixDocument::parse(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<(MatrixDocument, CartanMatrix), Failure> {
    let doc = read_document(path)?;
    let a = CartanMatrix::with_labels(doc.matrix(), doc.labels_or_default())?;
    Ok((doc, a))
}

fn print_json<T: Serialize>(value: &T) -> CmdResult {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn print_text(text: &str) -> CmdResult {
    io::stdout().lock().write_all(text.as_bytes())?;
    Ok(())
}

fn cmd_validate(json: bool, path: &Path) -> CmdResult {
    let doc = read_document(path)?;
    let found = violations(&doc.matrix());
    if json {
        print_json(&ValidateView::new(doc.n, &found))?;
    } else if found.is_empty() {
        print_text(&format!("valid generalized Cartan matrix of rank {}\n", doc.n))?;
    } else {
        let lines: String = found.iter().map(|v| format!("  {v}\n")).collect();
        print_text(&format!("invalid generalized Cartan matrix:\n{lines}"))?;
    }
    if found.is_empty() {
        Ok(())
    } else {
        Err(Failure::Rejected(format!("{} violation(s)", found.len())))
    }
}

fn cmd_classify(json: bool, path: &Path) -> CmdResult {
    let (_, a) = load(path)?;
    let t = classify(&a);
    if json {
        print_json(&ClassifyView::new(&a, &t))
    } else {
        print_text(&render::classify_text(&a, &t))
    }
}

fn cmd_center(json: bool, path: &Path) -> CmdResult {
    let (_, a) = load(path)?;
    let c = center_structure(&a);
    if json {
        let generators = center_generators(&a).ok();
        if let Some(g) = &generators {
            g.verify(&a)?;
        }
        print_json(&CenterView::new(&c, generators.as_ref()))
    } else {
        print_text(&format!("{}\n", render::center_line(&c)))
    }
}

fn parse_subset(a: &CartanMatrix, spec: &str) -> Result<kmcover::IndexSubset, Failure> {
    let labels: Vec<&str> = spec.split(',').map(str::trim).filter(|l| !l.is_empty()).collect();
    Ok(a.subset_from_labels(&labels)?)
}

fn mode(fast: bool) -> GammaMode {
    if fast {
        GammaMode::Fast
    } else {
        GammaMode::Checked
    }
}

fn cmd_parabolic(json: bool, path: &Path, subset: &str, fast: bool) -> CmdResult {
    let (_, a) = load(path)?;
    let i = parse_subset(&a, subset)?;
    let r = report(&a, &i, mode(fast))?;
    if json {
        print_json(&ReportView::new(&a, &r))
    } else {
        print_text(&render::report_text(&a, &r))
    }
}

struct EnumerateArgs<'a> {
    path: &'a Path,
    out: Option<&'a Path>,
    jobs: usize,
    fast: bool,
    force: bool,
    limit: usize,
}

fn cmd_enumerate(json: bool, args: EnumerateArgs<'_>) -> CmdResult {
    let (doc, a) = load(args.path)?;
    let digest = doc.digest();
    let options = EnumerateOptions {
        mode: mode(args.fast),
        limit: args.limit,
        force: args.force,
        jobs: args.jobs,
        ..Default::default()
    };
    if a.n() > options.limit && !options.force {
        return Err(Error::LimitExceeded {
            n: a.n(),
            limit: options.limit,
        }
        .into());
    }
    let done = match args.out {
        Some(p) => existing_subsets(p, &digest).map_err(|e| match e {
            CatalogError::Io(e) => Failure::Parse(format!("{}: {e}", p.display())),
            CatalogError::Malformed { line, message } => {
                Failure::Parse(format!("{}:{line}: malformed catalog record: {message}", p.display()))
            }
        })?,
        None => Default::default(),
    };
    let mut writer: CatalogWriter<Box<dyn Write>> = match args.out {
        Some(p) => CatalogWriter::new(Box::new(std::fs::OpenOptions::new().create(true).append(true).open(p)?)),
        None => CatalogWriter::new(Box::new(io::stdout())),
    };

    let skipped = Cell::new(0u64);
    let mut summary = EnumerateSummary {
        digest: digest.clone(),
        n: a.n(),
        subsets: 0,
        written: 0,
        skipped: 0,
        split: 0,
        semidirect: 0,
    };
    let mut write_error = None;
    let result = enumerate_each(
        &a,
        &options,
        |s| {
            let fresh = !done.contains(&a.subset_labels(s));
            if !fresh {
                skipped.set(skipped.get() + 1);
            }
            fresh
        },
        |r| {
            match r.structure {
                Structure::Split => summary.split += 1,
                Structure::Semidirect => summary.semidirect += 1,
            }
            let record = CatalogRecord {
                digest: &digest,
                subset: a.subset_labels(&r.subset),
                report: ReportView::new(&a, &r),
                tool_version: TOOL_VERSION,
                format_version: FORMAT_VERSION,
            };
            writer.write(&record).map_err(|e| {
                let msg = e.to_string();
                write_error = Some(e);
                Error::Consistency(msg)
            })?;
            summary.written += 1;
            Ok(())
        },
    );
    if let Some(e) = write_error {
        return Err(Failure::Output(e));
    }
    writer.finish()?;
    result?;
    summary.skipped = skipped.get();
    summary.subsets = summary.written + summary.skipped;

    if args.out.is_some() {
        if json {
            print_json(&summary)
        } else {
            print_text(&render::summary_text(&summary))
        }
    } else {
        eprint!("{}", render::summary_text(&summary));
        Ok(())
    }
}

fn cmd_generate(json: bool, family: &str, rank: usize) -> CmdResult {
    let a = builtin(family, rank)?;
    let doc = MatrixDocument::from_cartan(&a);
    if json {
        print_json(&doc)
    } else {
        print_text(&doc.to_grid())
    }
}

fn run(cli: Cli) -> CmdResult {
    let json = cli.json;
    match cli.command {
        Command::Validate { path } => cmd_validate(json, &path),
        Command::Classify { path } => cmd_classify(json, &path),
        Command::Center { path } => cmd_center(json, &path),
        Command::Parabolic { path, subset, fast } => cmd_parabolic(json, &path, &subset, fast),
        Command::Enumerate {
            path,
            out,
            jobs,
            fast,
            force,
            limit,
        } => cmd_enumerate(
            json,
            EnumerateArgs {
                path: &path,
                out: out.as_deref(),
                jobs,
                fast,
                force,
                limit,
            },
        ),
        Command::Generate { family, rank } => cmd_generate(json, &family, rank),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}

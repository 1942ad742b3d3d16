//! Command-line front end for `toric-fano`.
//!
//! Every command is a function from parsed arguments to an [`Outcome`]
//! (standard output, standard error, exit code), so the binary is a thin
//! wrapper and the commands are testable in process.
//!
//! Exit codes: 0 success; 1 verification failure or internal error; 2 bad
//! input or arguments; 3 degenerate polygon; 4 degree bound too small; 5 I/O.

pub mod corpus;
pub mod document;
pub mod oracle;
pub mod render;
pub mod report;

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use thiserror::Error;
use toric_fano::classify::classify;
use toric_fano::lattice::primitive_edges;
use toric_fano::symbolic::{minimum_degree_bound, verify_local_structure, Field, SymbolicError, DEFAULT_DEGREE_BOUND};

use crate::document::PolygonDocument;
use crate::report::{ReportDocument, VerificationSection};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_DEGREE_BOUND: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degenerate polygon: {0}")]
    Degenerate(String),
    #[error("degree bound {given} is too small; minimum usable degree bound is {required}")]
    DegreeBoundTooSmall { required: u32, given: u32 },
    #[error("I/O error: {0}")]
    Io(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Degenerate(_) => EXIT_DEGENERATE,
            CliError::DegreeBoundTooSmall { .. } => EXIT_DEGREE_BOUND,
            CliError::Io(_) => EXIT_IO,
            CliError::Internal(_) => EXIT_FAILURE,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn error(e: &CliError) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() }
    }
}

#[derive(Debug, Parser)]
#[command(name = "toric-fano", version, about = "Fano schemes of lines on projective toric surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify F1(X_P) for the polygon in FILE ("-" for standard input).
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Classify and certify the local structure at every torus-fixed line.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
        degree_bound: u32,
        /// Characteristic of the coefficient field: 0 or a prime.
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long)]
        json: bool,
    },
    /// List the built-in example polygons, or write them as documents.
    Corpus {
        #[arg(long)]
        emit_dir: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Draw the polygon with its primitive edges labelled.
    Render {
        file: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Brute-force oracles for differential checks against the formulas.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Ray-scan gamma_b and gamma_c per primitive edge.
    Gamma {
        file: PathBuf,
        #[arg(long)]
        edge: Option<usize>,
    },
    /// Height-one lattice point count per primitive edge.
    Mu {
        file: PathBuf,
        #[arg(long)]
        edge: Option<usize>,
    },
    /// Lattice width by scanning primitive directions.
    Width { file: PathBuf },
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Classify { file, json } => cmd_classify(&file, json),
        Command::Verify { file, degree_bound, characteristic, json } => {
            cmd_verify(&file, degree_bound, characteristic, json)
        }
        Command::Corpus { emit_dir, json } => cmd_corpus(emit_dir.as_deref(), json),
        Command::Render { file, output } => cmd_render(&file, &output),
        Command::Oracle { which } => oracle::cmd_oracle(&which),
    };
    result.unwrap_or_else(|e| Outcome::error(&e))
}

pub fn read_document(path: &Path) -> Result<PolygonDocument, CliError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(e.to_string()))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?
    };
    PolygonDocument::parse(&text)
}

fn render_report(report: &ReportDocument, json: bool) -> String {
    if json {
        report.to_json()
    } else {
        report.to_text()
    }
}

pub fn cmd_classify(path: &Path, json: bool) -> Result<Outcome, CliError> {
    let doc = read_document(path)?;
    let report = ReportDocument::classify(&doc)?;
    Ok(Outcome::ok(render_report(&report, json)))
}

/// Classification plus per-edge verification; edges are checked in
/// parallel and reported in edge order.
pub fn verify_document(doc: &PolygonDocument, degree_bound: u32, field: &Field) -> Result<ReportDocument, CliError> {
    if degree_bound < 2 {
        return Err(CliError::Parse(format!("degree bound must be at least 2, got {degree_bound}")));
    }
    let mut report = ReportDocument::classify(doc)?;
    let poly = report.polygon.clone();
    let edges = primitive_edges(&poly);
    let results: Vec<_> =
        edges.par_iter().map(|e| verify_local_structure(&poly, e, degree_bound, field)).collect();
    let mut reports = Vec::new();
    for r in results {
        match r {
            Ok(r) => reports.push(r),
            Err(SymbolicError::DegreeBoundTooSmall { .. }) => {
                let mut required = 2;
                for e in &edges {
                    let d = minimum_degree_bound(&poly, e).map_err(|e| CliError::Internal(e.to_string()))?;
                    required = required.max(d);
                }
                return Err(CliError::DegreeBoundTooSmall { required, given: degree_bound });
            }
            Err(e) => return Err(CliError::Internal(format!("verification error: {e}"))),
        }
    }
    report.verification = Some(VerificationSection { degree_bound, field: field.clone(), edges: reports });
    Ok(report)
}

pub fn cmd_verify(path: &Path, degree_bound: u32, characteristic: u64, json: bool) -> Result<Outcome, CliError> {
    let field = Field::from_characteristic(characteristic).map_err(|e| CliError::Parse(e.to_string()))?;
    let doc = read_document(path)?;
    let report = verify_document(&doc, degree_bound, &field)?;
    let mut out = Outcome::ok(render_report(&report, json));
    let section = report.verification.as_ref().expect("verification section");
    for r in section.edges.iter().filter(|r| !r.ok()) {
        out.code = EXIT_FAILURE;
        out.stderr.push_str(&format!("verification failed on edge {}: {} -> {}\n", r.edge_index, r.b, r.c));
    }
    Ok(out)
}

pub fn cmd_corpus(emit_dir: Option<&Path>, json: bool) -> Result<Outcome, CliError> {
    let entries = corpus::corpus();
    if let Some(dir) = emit_dir {
        fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
        let mut listing = String::new();
        for e in &entries {
            let path = dir.join(format!("{}.json", e.name));
            fs::write(&path, e.document().to_json()).map_err(|err| CliError::Io(format!("{}: {err}", path.display())))?;
            listing.push_str(&format!("{}\n", path.display()));
        }
        return Ok(Outcome::ok(listing));
    }
    if json {
        let items: Vec<serde_json::Value> = entries
            .iter()
            .map(|e| {
                let d = classify(&e.polygon).expect("corpus classifies");
                serde_json::json!({
                    "name": e.name,
                    "description": e.description,
                    "reconstructed": e.reconstructed,
                    "vertices": report::points_json(e.polygon.vertices()),
                    "summary": d.summary(),
                    "total_degree": d.total_degree.as_ref().map(report::number),
                })
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&items).expect("serializable");
        s.push('\n');
        return Ok(Outcome::ok(s));
    }
    let mut s = String::new();
    for e in &entries {
        let d = classify(&e.polygon).expect("corpus classifies");
        let total = d.total_degree.as_ref().map_or("n/a".to_string(), ToString::to_string);
        s.push_str(&format!(
            "{:<13} {}{}\n  {}\n  F1 = {}  degree {}\n",
            e.name,
            e.description,
            if e.reconstructed { " [reconstructed]" } else { "" },
            e.polygon,
            d.summary(),
            total
        ));
    }
    Ok(Outcome::ok(s))
}

pub fn cmd_render(path: &Path, output: &Path) -> Result<Outcome, CliError> {
    let doc = read_document(path)?;
    let poly = doc.polygon()?;
    let svg = render::render_svg(&poly).map_err(|e| CliError::Internal(e.to_string()))?;
    fs::write(output, svg).map_err(|e| CliError::Io(format!("{}: {e}", output.display())))?;
    Ok(Outcome::ok(format!("wrote {}\n", output.display())))
}

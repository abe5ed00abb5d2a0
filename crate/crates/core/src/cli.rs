//! The `fhalg` command line. Exit status: 0 when every check passes, 1 when
//! an identity fails, 2 for unusable input.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};

use crate::catalog::{
    algebra_report, check_report, double_report, load_embedding, preset, subpair_report,
    verify_report, AlgebraSpec, Report,
};
use crate::double::{build_double, LARGE_INPUT_DIM};
use crate::error::{Error, Result};
use crate::extension::verify_pair;
use crate::hopf::HopfData;

#[derive(Debug, Parser)]
#[command(
    name = "fhalg",
    version,
    about = "Exact checks for finite-dimensional Hopf and Frobenius algebras"
)]
pub struct Cli {
    /// Print reports as JSON objects.
    #[arg(long, global = true)]
    pub json: bool,
    /// Run independent check groups concurrently.
    #[arg(long, global = true)]
    pub parallel: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms at the declared level.
    Verify { spec: String },
    /// FH profile, or the augmented Frobenius data below Hopf level.
    Report { spec: String },
    /// The full identity suite.
    Check { spec: String },
    /// Build and check the quantum double.
    Double {
        spec: String,
        /// Write the double as a JSON spec.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Relative Frobenius structure of a Hopf subalgebra K of H.
    Subpair {
        h: String,
        k: String,
        /// JSON list of rows, row i the image of the i-th basis element of K.
        #[arg(long)]
        embedding: PathBuf,
    },
    /// Print or write a built-in example as a JSON spec.
    Preset {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// What a command printed and how it ended.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn read_spec(source: &str) -> Result<AlgebraSpec> {
    if let Some(name) = source.strip_prefix("preset:") {
        return Ok(AlgebraSpec::from_hopf(&preset(name)?));
    }
    let text = std::fs::read_to_string(source).map_err(|e| Error::Io(format!("{source}: {e}")))?;
    AlgebraSpec::from_json(&text)
}

fn load(source: &str) -> Result<HopfData> {
    read_spec(source)?.build()
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn render(r: &Report, json: bool) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&r.to_json()).expect("report serialization");
        s.push('\n');
        s
    } else {
        r.to_human()
    }
}

fn execute(cli: &Cli, stderr: &mut String) -> Result<(String, bool)> {
    let report = match &cli.command {
        Command::Verify { spec } => verify_report(&read_spec(spec)?.build_unchecked()?),
        Command::Report { spec } => algebra_report(&load(spec)?)?,
        Command::Check { spec } => check_report(&load(spec)?, cli.parallel)?,
        Command::Double { spec, out } => {
            let h = load(spec)?;
            if h.dim() > LARGE_INPUT_DIM {
                stderr.push_str(&format!(
                    "warning: dim H = {} gives a double of dimension {}; this may be slow\n",
                    h.dim(),
                    h.dim() * h.dim()
                ));
            }
            let dd = build_double(h)?;
            if let Some(path) = out {
                write(path, &AlgebraSpec::from_hopf(dd.double()).to_json())?;
            }
            double_report(&dd, cli.parallel)?
        }
        Command::Subpair { h, k, embedding } => {
            let h = Arc::new(load(h)?);
            let k = Arc::new(load(k)?);
            let iota = load_embedding(embedding, h.field())?;
            subpair_report(&verify_pair(h, k, iota)?)?
        }
        Command::Preset { name, out } => {
            let name = name.strip_prefix("preset:").unwrap_or(name);
            let text = AlgebraSpec::from_hopf(&preset(name)?).to_json();
            return match out {
                Some(path) => {
                    write(path, &text)?;
                    Ok((String::new(), true))
                }
                None => Ok((text + "\n", true)),
            };
        }
    };
    Ok((render(&report, cli.json), report.all_passed()))
}

pub fn run(cli: &Cli) -> Outcome {
    let mut stderr = String::new();
    match execute(cli, &mut stderr) {
        Ok((stdout, passed)) => Outcome {
            stdout,
            stderr,
            code: if passed { 0 } else { 1 },
        },
        Err(e) => {
            stderr.push_str(&format!("error: {e}\n"));
            Outcome {
                stdout: String::new(),
                stderr,
                code: e.exit_code(),
            }
        }
    }
}

/// Parses the process arguments, runs, prints, and exits. Usage errors exit 2.
pub fn main() -> ! {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let outcome = run(&cli);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code)
}

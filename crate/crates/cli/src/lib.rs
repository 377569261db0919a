//! `subalg`: SAGBI bases, SG-bases and syzygies from problem files.

pub mod commands;
pub mod parse;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use sagbi_core::{Integer, Rational};

pub use commands::{
    execute, CommandKind, Failure, Options, EXIT_CAP, EXIT_FAILURE, EXIT_INPUT, EXIT_OK,
};
pub use parse::{parse_polynomial, parse_problem, ParseError, ProblemFile, RingKind};
pub use report::{Entry, Report, Section, Space};

#[derive(Parser, Debug)]
#[command(
    name = "subalg",
    version,
    about = "SAGBI bases, SG-bases and syzygies over Z and Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Complete the [F] generators to a SAGBI basis.
    Sagbi(Common),
    /// Complete the [G] (or [H]) generators to an SG-basis of their ideal.
    Sg(Common),
    /// Generators of the syzygies of the [H] (or [G]) elements.
    Syz(Common),
    /// s-reduce a polynomial by the [F] generators as given.
    Reduce(WithPoly),
    /// Membership in the subalgebra and, with [G] or [H], in the ideal.
    Member(WithPoly),
}

#[derive(Args, Debug)]
struct Common {
    /// Problem file.
    file: PathBuf,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Show every construction pass.
    #[arg(long)]
    trail: bool,
    /// Show representations and replay checks.
    #[arg(long)]
    certificates: bool,
    /// Pass limit; overrides `max_passes` in the file.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_passes: Option<u64>,
}

#[derive(Args, Debug)]
struct WithPoly {
    #[command(flatten)]
    common: Common,
    /// Polynomial in the problem variables.
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
}

/// What a run printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn error(code: i32, message: String) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code,
        }
    }
}

/// Runs a command on an in-memory problem.
pub fn run_problem(
    kind: CommandKind,
    problem: &ProblemFile,
    opts: &Options,
    json: bool,
) -> Outcome {
    let result = match problem.ring {
        RingKind::Int => execute::<Integer>(kind, problem, opts),
        RingKind::Rat => execute::<Rational>(kind, problem, opts),
    };
    match result {
        Ok((report, code)) => Outcome {
            stdout: if json {
                report.to_json()
            } else {
                report.to_text()
            },
            stderr: String::new(),
            code,
        },
        Err(f) => Outcome::error(f.code, f.message),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    let (kind, common, poly) = match cli.command {
        Command::Sagbi(c) => (CommandKind::Sagbi, c, None),
        Command::Sg(c) => (CommandKind::Sg, c, None),
        Command::Syz(c) => (CommandKind::Syz, c, None),
        Command::Reduce(w) => (CommandKind::Reduce, w.common, Some(w.poly)),
        Command::Member(w) => (CommandKind::Member, w.common, Some(w.poly)),
    };
    let text = match std::fs::read_to_string(&common.file) {
        Ok(t) => t,
        Err(e) => return Outcome::error(EXIT_INPUT, format!("{}: {e}", common.file.display())),
    };
    let problem = match parse_problem(&text) {
        Ok(p) => p,
        Err(e) => {
            return Outcome::error(
                EXIT_INPUT,
                format!(
                    "{}:{}:{}: {}",
                    common.file.display(),
                    e.line,
                    e.column,
                    e.message
                ),
            )
        }
    };
    let opts = Options {
        trail: common.trail,
        certificates: common.certificates,
        max_passes: common.max_passes.map(|n| n as usize),
        poly,
    };
    run_problem(kind, &problem, &opts, common.json)
}

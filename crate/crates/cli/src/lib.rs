//! Command-line front end: count tables against reference values, named
//! verifications, and direct access to the library operations.

pub mod args;
pub mod cache;
mod commands;
pub mod golden;
pub mod render;
mod tables;
mod verify;

use std::ffi::OsString;
use std::fmt;

use clap::Parser;

use args::{Cli, Command};
use render::Output;

/// Why a run did not succeed; each kind has its own exit code.
#[derive(Debug)]
pub enum Failure {
    /// A computed value disagrees with a reference or cached value.
    Mismatch(String),
    Usage(String),
    Cap(String),
    Io(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Usage(_) | Failure::Io(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Mismatch(m) => write!(f, "mismatch: {m}"),
            Failure::Usage(m) => write!(f, "{m}"),
            Failure::Cap(m) => write!(f, "{m}"),
            Failure::Io(m) => write!(f, "I/O error: {m}"),
        }
    }
}

impl From<punctual_core::Error> for Failure {
    fn from(e: punctual_core::Error) -> Self {
        match e {
            punctual_core::Error::ResourceCap(_) => Failure::Cap(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Rendered output and whether every checked value matched.
pub struct Outcome {
    pub output: Output,
    pub ok: bool,
}

impl Outcome {
    pub fn ok(output: Output) -> Self {
        Outcome { output, ok: true }
    }
}

/// Runs the CLI on `args` (including the program name), writing to stdout
/// and stderr, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.global.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return 2;
        }
    };
    match pool.install(|| execute(&cli)) {
        Ok(outcome) => {
            print!("{}", outcome.output.render(cli.global.format));
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(f) => {
            eprintln!("error: {f}");
            f.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Tables { which, kmax } => tables::run(g, *which, *kmax),
        Command::Verify { check } => verify::run(*check),
        Command::Enumerate(a) => commands::enumerate(g, a),
        Command::Tangent(a) => commands::tangent(a),
        Command::Apolar(a) => commands::apolar(g, a),
        Command::Oseq(a) => commands::oseq(a),
        Command::Bounds { which } => commands::bounds(which),
        Command::Regular(a) => commands::regular(g, a),
        Command::Cache { action } => commands::cache(g, *action),
    }
}

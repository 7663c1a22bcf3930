//! Command-line front-end: reads instance files, runs the library's checks and
//! constructions, and prints `key: value` reports closed by a `VERDICT` line.

mod commands;
mod error;
mod instance;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use bicolim::bicolim::DEFAULT_MAX_PREMORPHISMS;
use bicolim::fincat::DEFAULT_MAX_FUNCTORS;
use bicolim::generate::Params;
use clap::{Parser, Subcommand};

pub use commands::Notion;
pub use error::{
    CliError, EXIT_FALSE, EXIT_INTERNAL, EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_RESOURCE,
    EXIT_VALIDATION,
};
pub use instance::{InstanceFile, PseudoconeData};
pub use report::Report;

use commands::Limits;

/// Environment variable capping the worker threads.
pub const THREADS_VAR: &str = "BICOLIM_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "bicolim",
    version,
    about = "Filteredness checks and bicolimits of finite 2-functors"
)]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Bound on enumerated functors.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_FUNCTORS)]
    max_functors: usize,
    /// Bound on enumerated premorphisms.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_PREMORPHISMS)]
    max_premorphisms: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the 2-category laws, the 2-functor laws and the pseudocone conditions.
    Validate { path: PathBuf },
    /// Decide every filteredness axiom.
    Classify {
        path: PathBuf,
        /// Exit with the false-verdict code unless this notion holds.
        #[arg(long, value_enum)]
        query: Option<Notion>,
    },
    /// Build the bicolimit category.
    Bicolim {
        path: PathBuf,
        /// Write the serialized category and its classes here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Factor the file's pseudocone through the bicolimit.
    Factor { path: PathBuf },
    /// Compare L(F^P) with L(F)^P.
    Diamond {
        path: PathBuf,
        /// A category of the file, or one of terminal, arrow, discrete2, square.
        #[arg(long)]
        shape: Option<String>,
        /// Compute the flags even when the hypotheses fail.
        #[arg(long)]
        allow_hypothesis_violation: bool,
    },
    /// Compare the bicolimit with the classical filtered colimit.
    CompareClassical { path: PathBuf },
    /// Print an instance file from a generator family or a shipped fixture.
    Generate {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long, default_value_t = 4)]
        objects: usize,
        #[arg(long, default_value_t = 4)]
        edges: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            CliError::Parse(format!(
                "{THREADS_VAR} must be a positive integer, got `{value}`"
            ))
        })?;
    // A pool built earlier in the same process keeps its size.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

enum Output {
    Report(Report),
    Text(String),
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    configure_threads()?;
    let limits = Limits {
        max_functors: cli.max_functors,
        max_premorphisms: cli.max_premorphisms,
    };
    let report = match &cli.command {
        Command::Validate { path } => commands::validate(&commands::load(path)?)?,
        Command::Classify { path, query } => {
            commands::classify_cmd(&commands::load(path)?, *query)?
        }
        Command::Bicolim { path, out } => {
            commands::bicolim_cmd(&commands::load(path)?, out.as_deref(), limits)?
        }
        Command::Factor { path } => commands::factor_cmd(&commands::load(path)?, limits)?,
        Command::Diamond {
            path,
            shape,
            allow_hypothesis_violation,
        } => commands::diamond_cmd(
            &commands::load(path)?,
            shape.as_deref(),
            *allow_hypothesis_violation,
            limits,
        )?,
        Command::CompareClassical { path } => {
            commands::compare_classical_cmd(&commands::load(path)?, limits)?
        }
        Command::Generate {
            family,
            fixture,
            objects,
            edges,
            density,
            seed,
            out,
        } => {
            let params = Params {
                objects: *objects,
                edges: *edges,
                density: *density,
            };
            let file =
                commands::generate_instance(family.as_deref(), fixture.as_deref(), params, *seed)?;
            let text = file.to_json();
            match out {
                None => return Ok(Output::Text(text)),
                Some(path) => {
                    std::fs::write(path, &text)
                        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
                    let mut r = Report::new();
                    r.field("written", path.display().to_string());
                    r.verdict("generated", true);
                    r
                }
            }
        }
    };
    Ok(Output::Report(report))
}

/// Runs one invocation and returns its exit code. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(Output::Text(text)) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Ok(Output::Report(r)) => {
            let text = if cli.json {
                r.render_json()
            } else {
                r.render_text()
            };
            let _ = out.write_all(text.as_bytes());
            r.exit_code
        }
        Err(e) => {
            if cli.json {
                let v = serde_json::json!({"error": e.kind(), "message": e.to_string(), "exit_code": e.exit_code()});
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&v).expect("error serializes")
                );
            }
            let _ = writeln!(err, "error ({}): {e}", e.kind());
            e.exit_code()
        }
    }
}

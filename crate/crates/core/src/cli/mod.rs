//! The `cgc` command line.
//!
//! Exit codes: 0 success, 1 example mismatch, 2 usage, 3 unreadable input,
//! 4 config syntax, 5 config schema, 6 invalid config value, 7 construction
//! failure, 8 search limit exceeded.

mod render;

use std::ffi::OsString;
use std::io::{IsTerminal, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::config::{CodeConfig, ConfigError, OutputFormat};
use crate::examples::{fixtures, summary, verify_example};
use crate::free_distance::DistanceError;
use crate::goppa::{build_code, parameter_bounds, GoppaError};

pub use render::{human, machine, summary_line, Style};

#[derive(Parser, Debug)]
#[command(name = "cgc", version, about = "Convolutional Goppa codes over P^m x A^1")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a code from a config file and report its parameters.
    Build(BuildArgs),
    /// Rebuild the bundled reference codes and compare with their fixtures.
    VerifyExamples {
        /// Also run the brute-force distance oracle.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Upper bounds on n, k, memory and degree for given q, m, r.
    Bounds {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        machine: bool,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct BuildArgs {
    pub config: PathBuf,
    /// Compute the free distance even if the config does not ask for it.
    #[arg(long)]
    pub distance: bool,
    /// Cross-check the free distance by brute force.
    #[arg(long)]
    pub bruteforce: bool,
    /// Print the generator, canonical generator and control matrices.
    #[arg(long)]
    pub emit_matrices: bool,
    /// Emit JSON instead of the table.
    #[arg(long)]
    pub machine: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Build(#[from] GoppaError),
    #[error("invalid arguments: {0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
            CliError::Config(ConfigError::Syntax(_)) => 4,
            CliError::Config(ConfigError::Schema(_)) => 5,
            CliError::Config(ConfigError::Invariant { .. }) => 6,
            CliError::Build(GoppaError::Distance(
                DistanceError::StateSpaceTooLarge { .. } | DistanceError::SearchSpaceTooLarge { .. },
            )) => 8,
            CliError::Build(_) => 7,
        }
    }
}

/// Builds the code described by `text` and renders the report.
pub fn cmd_build(text: &str, args: &BuildArgs, style: Style) -> Result<String, CliError> {
    let cfg = CodeConfig::parse(text)?;
    let (_, construction) = cfg.field_and_construction()?;
    let mut opts = cfg.build_options();
    opts.compute_distance |= args.distance;
    opts.bruteforce |= args.bruteforce;
    let report = build_code(&construction, &opts)?;
    if args.machine || cfg.options.output_format == OutputFormat::Machine {
        Ok(machine(&report))
    } else {
        Ok(human(&report, args.emit_matrices, style))
    }
}

/// Verification report and whether every example matched.
pub fn cmd_verify_examples(bruteforce: bool, style: Style) -> (String, bool) {
    let outcomes: Vec<_> = fixtures()
        .iter()
        .map(|fx| verify_example(fx, bruteforce))
        .collect();
    let mut out = String::new();
    for o in &outcomes {
        let status = if o.mismatches.is_empty() {
            style.good("ok")
        } else {
            style.bad("MISMATCH")
        };
        out.push_str(&format!("{:<9} {status}", o.id));
        if let Some(r) = &o.report {
            out.push_str(&format!("  {}", summary_line(r)));
            if let Some(bf) = r.free_distance.as_ref().and_then(|d| d.bruteforce.as_ref()) {
                out.push_str(&format!(
                    "  bruteforce d_free={} (deg_bound {})",
                    bf.value, bf.deg_bound
                ));
            }
        }
        out.push('\n');
    }
    let ok = outcomes.iter().all(|o| o.mismatches.is_empty());
    let line = summary(&outcomes);
    out.push_str(&if ok { style.good(&line) } else { style.bad(&line) });
    out.push('\n');
    (out, ok)
}

/// Styling is on for terminals unless `CGC_COLOR=0`; `CGC_COLOR=1` forces it.
pub fn style_from_env(stdout_is_terminal: bool) -> Style {
    let color = match std::env::var("CGC_COLOR").as_deref() {
        Ok("0") => false,
        Ok("1") => true,
        _ => stdout_is_terminal,
    };
    Style { color }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, style: Style) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Build(args) => std::fs::read_to_string(&args.config)
            .map_err(|source| CliError::Io {
                path: args.config.display().to_string(),
                source,
            })
            .and_then(|text| cmd_build(&text, &args, style))
            .map(|s| (s, true)),
        Command::VerifyExamples { bruteforce } => Ok(cmd_verify_examples(bruteforce, style)),
        Command::Bounds { q, m, r, machine } => {
            if q < 2 || m == 0 {
                Err(CliError::Usage("need q >= 2 and m >= 1".into()))
            } else {
                Ok((render::bounds(&parameter_bounds(q, m, r), machine), true))
            }
        }
    };
    match result {
        Ok((text, ok)) => {
            let _ = out.write_all(text.as_bytes());
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "{} {e}", style.bad("error:"));
            e.exit_code()
        }
    }
}

pub fn main() -> i32 {
    let style = style_from_env(std::io::stdout().is_terminal());
    run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
        style,
    )
}

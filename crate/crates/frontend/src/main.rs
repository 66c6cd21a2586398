use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use parbelos_core::{ParbelosInputs, Point, Side};
use parbelos_frontend::cli::{
    parse_point, render_script, run_script, script_text, ParbelosRun, ScriptOutcome, EXIT_ERROR, EXIT_FAIL, EXIT_PASS,
};
use parbelos_frontend::fuzz::{run_fuzz, FuzzConfig};
use parbelos_frontend::RenderOptions;

#[derive(Parser)]
#[command(name = "parbelos", version, about = "Exact parbelos constructions and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Evaluate a construction script and report its assertions.
    Check {
        file: PathBuf,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Build the parbelos on three collinear cusps and verify its theorems.
    Parbelos {
        /// First outer cusp, as X,Y with integer or p/q coordinates.
        #[arg(long, value_name = "X,Y", value_parser = parse_point, allow_hyphen_values = true)]
        c1: Point,
        /// Middle cusp, strictly between the others, as X,Y with integer or p/q coordinates.
        #[arg(long, value_name = "X,Y", value_parser = parse_point, allow_hyphen_values = true)]
        c2: Point,
        /// Second outer cusp, as X,Y with integer or p/q coordinates.
        #[arg(long, value_name = "X,Y", value_parser = parse_point, allow_hyphen_values = true)]
        c3: Point,
        /// Opening side of the parabolas, seen along C1 -> C3.
        #[arg(long, default_value = "left", value_parser = ["left", "right"])]
        side: String,
        /// Print the full figure and reports as JSON.
        #[arg(long)]
        json: bool,
        /// Also write the figure as SVG.
        #[arg(long, value_name = "OUT.svg")]
        svg: Option<PathBuf>,
    },
    /// Run the seeded randomized invariant suite.
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Bound on numerator and denominator of sampled rationals.
        #[arg(long, default_value_t = 10_000)]
        max_height: u64,
        /// Spread cases over threads; results are identical.
        #[arg(long)]
        parallel: bool,
    },
    /// Draw every binding of a construction script.
    Render {
        file: PathBuf,
        #[arg(long, value_name = "OUT.svg")]
        svg: PathBuf,
    },
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn read(path: &PathBuf) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Check { file, json } => {
            let outcome = run_script(&read(&file)?);
            match (&outcome, json) {
                (ScriptOutcome::Done(report), true) => emit(&format!("{}\n", report.to_json())),
                (ScriptOutcome::Done(_), false) => emit(&script_text(&outcome)),
                _ => eprint!("{}: {}", file.display(), script_text(&outcome)),
            }
            if let ScriptOutcome::Done(report) = &outcome {
                for a in report.failed() {
                    eprintln!("{}:{}: assertion failed: {}", file.display(), a.line, a.pred);
                }
            }
            Ok(outcome.exit_code())
        }
        Command::Parbelos { c1, c2, c3, side, json, svg } => {
            let run = match ParbelosRun::new(&ParbelosInputs::new(
                c1,
                c2,
                c3,
                side.parse::<Side>().map_err(anyhow::Error::msg)?,
            )) {
                Ok(run) => run,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(EXIT_ERROR);
                }
            };
            if json {
                emit(&format!("{}\n", run.to_json()));
            } else {
                emit(&run.to_text());
            }
            if let Some(path) = svg {
                let doc = run.to_svg(&RenderOptions::default())?;
                fs::write(&path, doc).with_context(|| format!("cannot write {}", path.display()))?;
            }
            Ok(if run.overall { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Fuzz { cases, seed, max_height, parallel } => {
            let summary = run_fuzz(&FuzzConfig { cases, seed, max_height, parallel });
            for failure in &summary.failures {
                emit(&format!("FAIL {failure}\n"));
            }
            emit(&format!(
                "{} cases, {} checks, {} failures (seed {seed}, max height {max_height})\n",
                summary.cases,
                summary.checks,
                summary.failures.len()
            ));
            Ok(if summary.passed() { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Render { file, svg } => {
            let doc = match render_script(&read(&file)?, &RenderOptions::default()) {
                Ok(doc) => doc,
                Err(e) => {
                    eprintln!("{}: {e}", file.display());
                    return Ok(EXIT_ERROR);
                }
            };
            fs::write(&svg, doc).with_context(|| format!("cannot write {}", svg.display()))?;
            Ok(EXIT_PASS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}

//! `akcheck`: command-line front end for the `akcong` engine.
//!
//! Exit codes: 0 when every check passes, 1 when any fails, 2 on usage or
//! configuration errors.

mod cli;
mod run;
mod select;

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Parser;

use cli::{Cli, Command, Format};
use run::Run;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn render_text(run: &Run) -> String {
    let mut out = String::new();
    for r in &run.results {
        let _ = write!(out, "{r}");
        if let Some(s) = r.sign.filter(|&s| s < 0) {
            let _ = write!(out, " sign {s}");
        }
        let _ = writeln!(out, " ({} ms)", r.duration_ms);
        for note in &r.notes {
            let _ = writeln!(out, "    {note}");
        }
    }
    let passed = run.results.iter().filter(|r| r.passed()).count();
    let _ = writeln!(
        out,
        "{}: {passed} passed, {} failed",
        run.command,
        run.results.len() - passed
    );
    out
}

fn emit(text: &str, common: &cli::Common) -> Result<()> {
    match &common.output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn execute(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Coeffs(args) => {
            let rows = run::coeffs(&args)?;
            let mut out = String::new();
            for row in rows {
                let _ = write!(out, "{:>6}  {:>3}", row.n, row.residue);
                if let Some(e) = row.exact {
                    let _ = write!(out, "  {e}");
                }
                out.push('\n');
            }
            std::io::stdout().write_all(out.as_bytes())?;
            Ok(0)
        }
        Command::Verify(cmd) => {
            let common = run::common(&cmd).clone();
            let report = akcong::par::with_workers(common.workers, || run::verify(&cmd))?;
            let text = match common.format {
                Format::Text => render_text(&report),
                Format::Json => serde_json::to_string_pretty(&report)? + "\n",
            };
            emit(&text, &common)?;
            if common.output.is_some() {
                let passed = report.results.iter().filter(|r| r.passed()).count();
                println!("{}: {passed}/{} passed", report.command, report.results.len());
            }
            Ok(if report.all_passed() { 0 } else { EXIT_FAIL })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match execute(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

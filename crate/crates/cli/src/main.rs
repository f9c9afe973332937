mod commands;
mod family;
mod report;
mod verify;

use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use commands::{CoxeterArgs, FlipArgs, LgroupAction, Outcome};
use family::FamilyArgs;
use report::{Format, Report, Status};
use verify::VerifyArgs;

/// Exact Cartan, Coxeter and tilting computations for one-branch extensions
/// of rectangle posets and Nakayama algebras.
///
/// Reports are JSON by default. Polynomials are ascending coefficient arrays
/// (index = degree), matrices are arrays of rows. Exit status: 0 pass,
/// 1 a checked identity failed, 2 usage or input error.
#[derive(Debug, Parser)]
#[command(name = "onebranch", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Include per-instance results in verify reports
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "lowercase")]
enum Command {
    /// Cartan matrix of a family member or a poset file
    Cartan(FamilyArgs),
    /// Coxeter polynomial from the matrix, the closed form, or both
    Coxeter(CoxeterArgs),
    /// Run a verification sweep
    Verify(VerifyArgs),
    /// Computations in the group L(2,3,u+1)
    Lgroup {
        #[command(subcommand)]
        action: LgroupAction,
    },
    /// Cartan matrix of the flip at a down-set
    Flip(FlipArgs),
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Cartan(args) => commands::cartan(args),
        Command::Coxeter(args) => commands::coxeter(args),
        Command::Verify(args) => verify::verify(args, cli.verbose),
        Command::Lgroup { action } => commands::lgroup(action),
        Command::Flip(args) => commands::flip(args),
    }
}

/// The subcommand's own arguments, without the enum wrapper.
fn parameters(command: &Command) -> Value {
    match serde_json::to_value(command) {
        Ok(Value::Object(map)) if map.len() == 1 => map.into_iter().next().map(|(_, v)| v).unwrap_or(Value::Null),
        Ok(other) => other,
        Err(_) => Value::Null,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let parameters = parameters(&cli.command);
    let report = match dispatch(&cli) {
        Ok(Outcome { results, status }) => Report { command, parameters, results, status },
        Err(e) => {
            eprintln!("error: {e:#}");
            Report { command, parameters, results: json!({"error": format!("{e:#}")}), status: Status::Error }
        }
    };
    let mut out = io::stdout().lock();
    if let Err(e) = report.write(cli.format, &mut out).and_then(|_| Ok(out.flush()?)) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    ExitCode::from(report.status.exit_code())
}

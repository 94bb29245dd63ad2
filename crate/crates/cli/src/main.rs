//! `quasi`: verify, classify and construct cocycles and quasialgebras.

mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "quasi", version, about = "Check, classify and build group-graded quasialgebras")]
struct Cli {
    /// Print a JSON envelope `{status, summary, payload}` instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a cocycle table file and run the identity suite on it.
    Verify {
        /// Cocycle table in JSON.
        file: PathBuf,
    },
    /// Enumerate every mu_N-valued cocycle on a group and sort them into classes.
    Classify(ClassifyArgs),
    /// Emit the table of a named cocycle family.
    Family(FamilyArgs),
    /// Print the multiplication table of a built-in quasialgebra.
    Table(TableArgs),
    /// Multiply two matrices in a quasimatrix algebra.
    Qmatmul(QmatmulArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Group such as `z3`, `Z_4` or `2,2`.
    #[arg(long)]
    group: String,
    /// Order N of the value group mu_N.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    values: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Trivial,
    Qxyz,
    #[value(alias = "prop8")]
    Noncoboundary,
    Symmetric,
    Octonion,
    Trilinear,
    Z3params,
}

#[derive(Args)]
struct FamilyArgs {
    name: FamilyName,
    /// Group of the trivial table.
    #[arg(long)]
    group: Option<String>,
    /// Order of the cyclic group, or the modulus of a trilinear form.
    #[arg(long)]
    n: Option<u32>,
    /// Number of factors `(Z_n)^rank` of a trilinear form.
    #[arg(long)]
    rank: Option<usize>,
    /// Trilinear coefficients, comma separated, last index fastest.
    #[arg(long)]
    tensor: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<String>,
    /// Write the table here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableName {
    Octonions,
    #[value(alias = "example11")]
    TwistedZ3,
    Quasimatrix,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PhiName {
    Trivial,
    Qxyz,
    #[value(alias = "prop8")]
    Noncoboundary,
    Symmetric,
}

#[derive(Args)]
struct TableArgs {
    name: TableName,
    /// Size of the quasimatrix algebra.
    #[arg(long)]
    n: Option<u32>,
    /// Cocycle of the quasimatrix algebra.
    #[arg(long)]
    phi: Option<PhiName>,
    /// Cocycle table file for the quasimatrix algebra.
    #[arg(long, conflicts_with = "phi")]
    phi_file: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<String>,
}

#[derive(Args)]
struct QmatmulArgs {
    a: PathBuf,
    b: PathBuf,
    /// Cocycle table on Z_n.
    phi: PathBuf,
    /// Send a generator to a root of unity, as `name=zeta_N^k`.
    #[arg(long = "embed")]
    embed: Vec<String>,
    /// Compute in Q(zeta_N) for this N.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    field: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Ok,
    Violations,
    Error,
}

struct Outcome {
    status: Status,
    summary: String,
    payload: Value,
    /// Full human-readable output.
    text: String,
}

#[derive(Debug)]
struct CliError {
    code: u8,
    message: String,
    hint: Option<String>,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into(), hint: None }
    }
}

impl From<quasialg::Error> for CliError {
    fn from(e: quasialg::Error) -> Self {
        match e {
            quasialg::Error::LimitExceeded { required, .. } => CliError {
                code: 3,
                message: e.to_string(),
                hint: Some(if required <= u64::MAX as u128 {
                    format!("set {}={required} to run this search", quasialg::classify::SEARCH_LIMIT_VAR)
                } else {
                    "no limit can cover this search; use a smaller group or value group".to_string()
                }),
            },
            e => CliError::usage(e.to_string()),
        }
    }
}

impl From<quasialg::scalar::ScalarError> for CliError {
    fn from(e: quasialg::scalar::ScalarError) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<quasialg::group::GroupError> for CliError {
    fn from(e: quasialg::group::GroupError) -> Self {
        CliError::usage(e.to_string())
    }
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Verify { file } => commands::verify(&file),
        Command::Classify(a) => commands::classify(&a),
        Command::Family(a) => commands::family(&a),
        Command::Table(a) => commands::table(&a),
        Command::Qmatmul(a) => commands::qmatmul(&a),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                emit(&(pretty(&json!({"status": out.status, "summary": out.summary, "payload": out.payload})) + "\n"));
            } else {
                emit(&out.text);
            }
            ExitCode::from(if out.status == Status::Ok { 0 } else { 1 })
        }
        Err(e) => {
            if cli.json {
                let payload = json!({"exit_code": e.code, "hint": e.hint});
                emit(&(pretty(&json!({"status": Status::Error, "summary": e.message, "payload": payload})) + "\n"));
            } else {
                eprintln!("error: {}", e.message);
                if let Some(h) = &e.hint {
                    eprintln!("hint: {h}");
                }
            }
            ExitCode::from(e.code)
        }
    }
}

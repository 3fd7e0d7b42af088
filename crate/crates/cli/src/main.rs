//! `vwc`: unmixedness and Cohen-Macaulayness of weighted edge ideals of very
//! well-covered graphs, by combinatorial criteria and by algebraic oracles.
//!
//! Exit codes: 0 verdict true (or no mismatches), 1 verdict false, 2 input
//! error, 3 resource cap.

mod commands;
mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sha2::{Digest, Sha256};
use vwc_core::criteria::CampaignConfig;
use vwc_core::homology::FieldSpec;
use vwc_core::io::{parse_input, Input};
use vwc_core::{Error, Limits};

use commands::{Ctx, Mode};
use report::{InputInfo, Outcome};

#[derive(Parser, Debug)]
#[command(name = "vwc", version, about = "Unmixed and Cohen-Macaulay checks for weighted edge ideals")]
struct Cli {
    /// Emit a JSON report document.
    #[arg(long, global = true)]
    json: bool,
    /// Human-readable table; with --json, indented JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Field characteristic for homology: 0 or a prime.
    #[arg(long, global = true, default_value_t = 0)]
    field: u64,
    /// Largest number of (polarized) variables the exponential oracles accept.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_VARS)]
    cap_vars: usize,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 20240601)]
    seed: u64,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct UnmixedMode {
    /// Only the combinatorial criterion (graph inputs).
    #[arg(long)]
    criterion: bool,
    /// Only the minimal-prime oracle.
    #[arg(long)]
    bruteforce: bool,
    /// Both, with a MISMATCH block if they disagree.
    #[arg(long)]
    both: bool,
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct CmMode {
    /// Only the combinatorial criterion (graph inputs).
    #[arg(long)]
    criterion: bool,
    /// Only Reisner's criterion on the Stanley-Reisner complex.
    #[arg(long)]
    homology: bool,
    /// Both, with a MISMATCH block if they disagree.
    #[arg(long)]
    both: bool,
}

fn mode(criterion: bool, oracle: bool, both: bool) -> Option<Mode> {
    match (criterion, oracle, both) {
        (true, _, _) => Some(Mode::Criterion),
        (_, true, _) => Some(Mode::Oracle),
        (_, _, true) => Some(Mode::Both),
        _ => None,
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the full battery on the embedded datasets (D1, D2, G, Gw1, Gw2).
    PaperExamples { names: Vec<String> },
    /// Is the ideal unmixed?
    CheckUnmixed {
        file: PathBuf,
        #[command(flatten)]
        mode: UnmixedMode,
    },
    /// Is the quotient Cohen-Macaulay?
    CheckCm {
        file: PathBuf,
        #[command(flatten)]
        mode: CmMode,
    },
    /// Serre's condition (S_s) via links; non-squarefree ideals are polarized.
    CheckS2 {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        s: u32,
    },
    /// Depth of the quotient by Hochster's formula.
    Depth { file: PathBuf },
    /// Krull dimension of the quotient.
    Dim { file: PathBuf },
    /// Minimal primes of a squarefree ideal, one per line.
    MinPrimes { file: PathBuf },
    /// Polarization of the ideal.
    Polarize { file: PathBuf },
    /// Reduced homology of a complex, or of the Stanley-Reisner complex.
    Homology { file: PathBuf },
    /// Cross-validate criteria against oracles on random instances.
    Fuzz {
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        h_max: usize,
        #[arg(long, default_value_t = 3)]
        w_max: u32,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::PaperExamples { .. } => "paper-examples",
            Command::CheckUnmixed { .. } => "check-unmixed",
            Command::CheckCm { .. } => "check-cm",
            Command::CheckS2 { .. } => "check-s2",
            Command::Depth { .. } => "depth",
            Command::Dim { .. } => "dim",
            Command::MinPrimes { .. } => "min-primes",
            Command::Polarize { .. } => "polarize",
            Command::Homology { .. } => "homology",
            Command::Fuzz { .. } => "fuzz",
        }
    }

    fn file(&self) -> Option<&PathBuf> {
        match self {
            Command::CheckUnmixed { file, .. }
            | Command::CheckCm { file, .. }
            | Command::CheckS2 { file, .. }
            | Command::Depth { file }
            | Command::Dim { file }
            | Command::MinPrimes { file }
            | Command::Polarize { file }
            | Command::Homology { file } => Some(file),
            Command::PaperExamples { .. } | Command::Fuzz { .. } => None,
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ResourceCap { .. } => 3,
        _ => 2,
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), message: e.to_string() }
    }
}

fn load(path: &PathBuf) -> Result<(Input, InputInfo), Failure> {
    let bytes = fs::read(path).map_err(|e| Failure { code: 2, message: format!("cannot read {}: {e}", path.display()) })?;
    let text = String::from_utf8(bytes)
        .map_err(|_| Failure { code: 2, message: format!("{} is not UTF-8", path.display()) })?;
    let input = parse_input(&text).map_err(|e| Failure {
        code: exit_code(&e),
        message: format!("{}: {e}", path.display()),
    })?;
    let info = InputInfo {
        path: Some(path.display().to_string()),
        kind: input.kind().to_string(),
        sha256: sha256_hex(text.as_bytes()),
    };
    Ok((input, info))
}

fn run(cli: &Cli) -> Result<(Outcome, Option<InputInfo>), Failure> {
    let ctx = Ctx { field: FieldSpec::new(cli.field)?, limits: Limits::new(cli.cap_vars) };
    let loaded = cli.command.file().map(load).transpose()?;
    let (input, info) = match loaded {
        Some((i, info)) => (Some(i), Some(info)),
        None => (None, None),
    };
    let input = input.as_ref();
    let outcome = match &cli.command {
        Command::PaperExamples { names } => commands::paper_examples(&ctx, names),
        Command::CheckUnmixed { mode: m, .. } => {
            commands::check_unmixed(&ctx, input.unwrap(), mode(m.criterion, m.bruteforce, m.both))
        }
        Command::CheckCm { mode: m, .. } => commands::check_cm(&ctx, input.unwrap(), mode(m.criterion, m.homology, m.both)),
        Command::CheckS2 { s, .. } => commands::check_serre(&ctx, input.unwrap(), *s),
        Command::Depth { .. } => commands::depth(&ctx, input.unwrap()),
        Command::Dim { .. } => commands::dim(input.unwrap()),
        Command::MinPrimes { .. } => commands::min_primes(input.unwrap()),
        Command::Polarize { .. } => commands::polarize_cmd(input.unwrap()),
        Command::Homology { .. } => commands::homology(&ctx, input.unwrap()),
        Command::Fuzz { count, h_max, w_max } => commands::fuzz(
            &ctx,
            CampaignConfig { count: *count, h_max: *h_max, w_max: *w_max, seed: cli.seed },
        ),
    }?;
    Ok((outcome, info))
}

fn emit(cli: &Cli, text: String) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn render_json(cli: &Cli, value: &serde_json::Value) -> String {
    let mut s = if cli.pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("JSON values serialize");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = cli.command.name();
    let (text, code) = match run(&cli) {
        Ok((outcome, info)) => {
            let code = outcome.exit_code();
            let text = if cli.json {
                render_json(&cli, &report::to_json(command, info.as_ref(), cli.field, &outcome))
            } else if cli.pretty {
                report::to_table(&outcome)
            } else {
                report::to_text(&outcome)
            };
            (text, code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            if !cli.json {
                return ExitCode::from(f.code);
            }
            (render_json(&cli, &report::error_json(command, &f.message, f.code)), f.code)
        }
    };
    if let Err(e) = emit(&cli, text) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

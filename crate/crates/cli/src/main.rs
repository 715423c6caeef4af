mod args;
mod cache;
mod commands;

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use args::{Cli, Format};

/// Failure of a command: usage errors exit with 2, everything else with 1.
#[derive(Debug)]
pub struct CliError {
    kind: String,
    message: String,
    usage: bool,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            kind: "usage".into(),
            message: message.into(),
            usage: true,
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        CliError {
            kind: "io".into(),
            message: format!("{}: {e}", path.display()),
            usage: false,
        }
    }

    fn exit_code(&self) -> u8 {
        if self.usage {
            2
        } else {
            1
        }
    }
}

impl From<descendent::Error> for CliError {
    fn from(e: descendent::Error) -> Self {
        CliError {
            kind: e.kind().into(),
            message: e.to_string(),
            usage: false,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = commands::run(&cli);
    let mut stdout = std::io::stdout().lock();
    match (result, cli.format) {
        (Ok(out), Format::Text) => {
            let _ = writeln!(stdout, "{}", out.text);
            ExitCode::SUCCESS
        }
        (Ok(out), Format::Json) => {
            let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).expect("json"));
            ExitCode::SUCCESS
        }
        (Err(e), Format::Text) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
        (Err(e), Format::Json) => {
            let body = json!({"error": {"kind": e.kind, "message": e.message}});
            let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&body).expect("json"));
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

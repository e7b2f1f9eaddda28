mod args;
mod commands;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use stratquant_core::bounds::Bounds;

use args::{Cli, Command};
use commands::{Output, UsageError};

fn run(cli: &Cli) -> Result<Output, UsageError> {
    let g = &cli.global;
    let bounds = if g.unsafe_bounds { Bounds::unlimited() } else { Bounds::default() };
    match &cli.command {
        Command::Check { suite, algebra } => commands::check(*suite, algebra.as_deref(), g.seed),
        Command::Dims { lmax, kmax } => commands::dims(*lmax, *kmax, g.seed, &bounds),
        Command::Gram { s, l, k } => commands::gram_cmd(*s, *l, *k, &bounds),
        Command::ReduceSample { s, l, count } => commands::reduce_sample(*s, *l, *count, g.seed, &bounds),
        Command::Adjoint { count, z } => commands::adjoint(*count, z, g.seed, &bounds),
        Command::Dirac { n, max_degree, probe_degree, no_potential } => {
            commands::dirac(*n, *max_degree, *probe_degree, *no_potential, &bounds)
        }
    }
}

fn render(cli: &Cli, out: &Output) -> Result<String, UsageError> {
    if cli.global.json {
        let mut s = serde_json::to_string_pretty(&out.json)?;
        s.push('\n');
        Ok(s)
    } else if cli.global.csv {
        out.csv.clone().ok_or_else(|| UsageError("--csv is available for dims and reduce-sample only".into()))
    } else {
        Ok(out.text.clone())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| Ok((render(&cli, &out)?, out.exit)));
    let (text, code) = match result {
        Ok(r) => r,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.global.out {
        Some(path) => fs::write(path, text.as_bytes()).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{CommandFactory, Parser};
use jacobi_cells_cli::args::{Cli, Command};
use jacobi_cells_cli::{run, EXIT_FAIL, EXIT_USAGE};

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let started = Instant::now();

    if let Some(n) = cli.threads {
        if n == 0 {
            return usage("--threads must be at least 1");
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: could not start {n} worker threads: {e}");
            return ExitCode::from(EXIT_FAIL as u8);
        }
    }

    // the program name is left out so reports do not depend on the install path
    let echo = std::iter::once("jacobi-cells".to_string())
        .chain(argv.into_iter().skip(1))
        .collect();
    let outcome = match run(&cli.command, echo) {
        Ok(outcome) => outcome,
        Err(e) => return usage(&e.0),
    };

    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.output),
        None => std::io::stdout()
            .lock()
            .write_all(outcome.output.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: could not write output: {e}");
        return ExitCode::from(EXIT_FAIL as u8);
    }
    if matches!(cli.command, Command::Verify { .. }) {
        eprintln!("wall time: {:.3}s", started.elapsed().as_secs_f64());
    }
    ExitCode::from(outcome.status as u8)
}

fn usage(message: &str) -> ExitCode {
    eprintln!(
        "error: {message}\n\n{}\n\nFor more information, try '--help'.",
        Cli::command().render_usage()
    );
    ExitCode::from(EXIT_USAGE as u8)
}

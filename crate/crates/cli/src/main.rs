use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod render;

use args::Cli;

fn configure_threads() {
    #[cfg(feature = "parallel")]
    {
        let requested = std::env::var("SCHUBERT_THREADS")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .unwrap_or(0);
        if requested > 0 {
            // Only fails if a global pool already exists, which cannot happen here.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(requested).build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let outcome = commands::run(&cli);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    let _ = stdout.flush();
    if let Some(msg) = &outcome.stderr {
        eprintln!("{msg}");
    }
    ExitCode::from(outcome.code)
}

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use limitcyc_cli::commands::{run_flex, run_intersect, run_job_path, JobCommand};
use limitcyc_cli::corpus;

/// Exact limit 0-cycles of divisors on degenerating plane curves.
#[derive(Parser)]
#[command(name = "limitcyc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a job file without computing limits.
    Verify { job: PathBuf },
    /// Limit cycle from twisting certificates.
    Limit { job: PathBuf },
    /// Limit cycle from t-saturation.
    Oracle { job: PathBuf },
    /// Both paths and an equality verdict.
    Compare { job: PathBuf },
    /// Intersection cycle of two plane curves.
    Intersect {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
    /// Limits of flexes on x*G - t*F1.
    Flex {
        #[arg(long)]
        g: String,
        #[arg(long)]
        f1: String,
    },
    /// Run the bundled corpus, or every job file in a directory.
    Corpus {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(c as u8)
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return code(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let job = |cmd: JobCommand, path: &PathBuf| {
        let r = run_job_path(cmd, path);
        emit(&(r.to_json() + "\n"));
        code(r.exit_code)
    };
    match &cli.command {
        Command::Verify { job: path } => job(JobCommand::Verify, path),
        Command::Limit { job: path } => job(JobCommand::Limit, path),
        Command::Oracle { job: path } => job(JobCommand::Oracle, path),
        Command::Compare { job: path } => job(JobCommand::Compare, path),
        Command::Intersect { p, q } => {
            let r = run_intersect(p, q);
            emit(&(r.to_json() + "\n"));
            code(r.exit_code)
        }
        Command::Flex { g, f1 } => {
            let r = run_flex(g, f1);
            emit(&(r.to_json() + "\n"));
            code(r.exit_code)
        }
        Command::Corpus { dir } => {
            let entries = match dir {
                Some(d) => match corpus::load_dir(d) {
                    Ok(e) => e,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return code(e.exit_code());
                    }
                },
                None => corpus::bundled(),
            };
            let outcomes = corpus::run_all(&entries);
            emit(&corpus::table(&outcomes));
            code(if outcomes.iter().all(|o| o.pass) { 0 } else { 1 })
        }
    }
}

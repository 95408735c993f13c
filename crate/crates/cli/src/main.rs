//! `sda`: measure, batch-score, rank and validate layout documents, or serve
//! the scoring API.
//!
//! Exit codes: 0 success, 1 validation or domain error, 2 I/O error, 3 usage.

mod commands;
mod serve;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sda_core::ReportFormat;

#[derive(Debug, Parser)]
#[command(name = "sda", version, about = "Screen layout aesthetics measurement")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MeasureFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BatchFormat {
    Csv,
    Json,
}

impl From<MeasureFormat> for ReportFormat {
    fn from(f: MeasureFormat) -> Self {
        match f {
            MeasureFormat::Json => ReportFormat::Json,
            MeasureFormat::Csv => ReportFormat::Csv,
            MeasureFormat::Text => ReportFormat::Text,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Score one layout document
    Measure {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: MeasureFormat,
        /// Include per-object geometry (json and text formats)
        #[arg(long)]
        detail: bool,
    },
    /// Score every layout matching a glob into one report file
    Batch {
        glob: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: BatchFormat,
        /// Files scored in parallel (default: available cores)
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: Option<u32>,
    },
    /// Score several layouts and rank them by aesthetic value
    Rank {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
    },
    /// Check a layout document and list every problem found
    Validate { file: PathBuf },
    /// Run the HTTP scoring API
    Serve {
        #[arg(long, default_value_t = 8080, value_parser = clap::value_parser!(u16).range(1..))]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        bind: String,
        /// Directory of static assets served at `/`
        #[arg(long = "static")]
        static_dir: Option<PathBuf>,
        /// Allow cross-origin requests from anywhere (development only)
        #[arg(long)]
        permissive_cors: bool,
    },
}

/// Failure classes, one per non-zero exit code.
#[derive(Debug)]
pub enum CliError {
    Domain(String),
    Io(String),
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Io(_) => 2,
            CliError::Usage(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Domain(m) | CliError::Io(m) | CliError::Usage(m) => m,
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SDA_LOG", "info")).init();

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };

    let result = match cli.command {
        Command::Measure { file, format, detail } => commands::measure(&file, format.into(), detail),
        Command::Batch {
            glob,
            out,
            format,
            jobs,
        } => {
            let format = match format {
                BatchFormat::Csv => ReportFormat::Csv,
                BatchFormat::Json => ReportFormat::Json,
            };
            let jobs = jobs
                .map(|j| j as usize)
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            commands::batch(&glob, &out, format, jobs)
        }
        Command::Rank { files } => commands::rank(&files),
        Command::Validate { file } => commands::validate(&file),
        Command::Serve {
            port,
            bind,
            static_dir,
            permissive_cors,
        } => serve::run(&bind, port, static_dir, permissive_cors),
    };

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if !err.message().is_empty() {
                eprintln!("error: {}", err.message());
            }
            ExitCode::from(err.exit_code())
        }
    }
}

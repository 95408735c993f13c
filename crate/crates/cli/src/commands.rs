use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use sda_core::report::{render_batch_csv, render_batch_json};
use sda_core::{detail, parse_layout, render_report, round4, DetailReport, FormatError, ReportFormat};

use crate::CliError;

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn score(path: &Path) -> Result<DetailReport, CliError> {
    let bytes = read(path)?;
    let layout = parse_layout(&bytes).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
    detail(&layout).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))
}

fn print(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| CliError::Io(format!("stdout: {e}")))
}

pub fn measure(file: &Path, format: ReportFormat, include_detail: bool) -> Result<(), CliError> {
    let report = score(file)?;
    print(&render_report(&report, &file.display().to_string(), format, include_detail))
}

pub fn batch(pattern: &str, out: &Path, format: ReportFormat, jobs: usize) -> Result<(), CliError> {
    let entries = glob::glob(pattern).map_err(|e| CliError::Usage(format!("bad glob `{pattern}`: {e}")))?;
    let mut paths: Vec<PathBuf> = entries.filter_map(Result::ok).filter(|p| p.is_file()).collect();
    if paths.is_empty() {
        return Err(CliError::Usage(format!("no files match `{pattern}`")));
    }
    paths.sort();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Io(format!("thread pool: {e}")))?;
    let results: Vec<(String, Result<DetailReport, CliError>)> = pool.install(|| {
        paths
            .par_iter()
            .map(|p| (p.display().to_string(), score(p)))
            .collect()
    });

    let mut failed = 0;
    let mut scored = Vec::with_capacity(results.len());
    for (path, result) in &results {
        match result {
            Ok(report) => scored.push((path.as_str(), report)),
            Err(e) => {
                failed += 1;
                eprintln!("error: {}", e.message());
            }
        }
    }

    let text = match format {
        ReportFormat::Json => render_batch_json(scored.iter().copied()),
        _ => render_batch_csv(scored.iter().copied()),
    };
    fs::write(out, text).map_err(|e| CliError::Io(format!("{}: {e}", out.display())))?;
    log::info!("scored {} of {} files into {}", scored.len(), results.len(), out.display());

    if failed > 0 {
        Err(CliError::Domain(format!("{failed} of {} files failed", results.len())))
    } else {
        Ok(())
    }
}

pub fn rank(files: &[PathBuf]) -> Result<(), CliError> {
    let mut scored = Vec::with_capacity(files.len());
    for f in files {
        let report = score(f)?;
        scored.push((f.display().to_string(), report.measures.aesthetic_value));
    }
    let mut text = String::from("rank\tvalue\tfile\n");
    for e in sda_core::rank(scored) {
        text.push_str(&format!("{}\t{}\t{}\n", e.rank, round4(e.value), e.id));
    }
    print(&text)
}

pub fn validate(file: &Path) -> Result<(), CliError> {
    let bytes = read(file)?;
    match parse_layout(&bytes) {
        Ok(_) => print("valid\n"),
        Err(FormatError::Invalid(errors)) => {
            let n = errors.violations().len();
            let mut text = format!("invalid: {n} violation{}\n", if n == 1 { "" } else { "s" });
            for v in errors.violations() {
                text.push_str(&format!("  {v}\n"));
            }
            print(&text)?;
            Err(CliError::Domain(String::new()))
        }
        Err(other) => {
            print(&format!("invalid: {other}\n"))?;
            Err(CliError::Domain(String::new()))
        }
    }
}

//! Run-level report envelope shared by the verify subcommands.

use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;

/// One verification run: the target, its configuration, every underlying
/// report, and a summary with the first counterexample inlined. Serialized
/// bytes depend only on the run configuration, never on worker count or
/// cache state.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub target: String,
    pub config: Value,
    pub reports: Vec<Value>,
    pub summary: RunSummary,
}

#[derive(Debug, Serialize)]
pub struct RunSummary {
    pub checks: usize,
    pub failures: usize,
    pub all_pass: bool,
    pub first_failure: Option<Value>,
}

impl RunReport {
    pub fn new<C, R>(target: &str, config: &C, reports: &[R], passed: &[bool]) -> Result<Self>
    where
        C: Serialize,
        R: Serialize,
    {
        assert_eq!(reports.len(), passed.len());
        let reports: Vec<Value> = reports
            .iter()
            .map(serde_json::to_value)
            .collect::<serde_json::Result<_>>()?;
        let failures = passed.iter().filter(|&&ok| !ok).count();
        let first_failure = passed
            .iter()
            .position(|&ok| !ok)
            .map(|idx| reports[idx].clone());
        Ok(RunReport {
            target: target.to_string(),
            config: serde_json::to_value(config)?,
            reports,
            summary: RunSummary {
                checks: passed.len(),
                failures,
                all_pass: failures == 0,
                first_failure,
            },
        })
    }

    /// Writes the JSON report to `out` (stdout when absent) and prints a
    /// one-line summary. Reports are written even when checks failed.
    pub fn emit(&self, out: Option<&Path>) -> Result<()> {
        let body = serde_json::to_string_pretty(self)?;
        match out {
            Some(path) => {
                std::fs::write(path, body + "\n")
                    .with_context(|| format!("writing report to {}", path.display()))?;
                println!(
                    "{}: {}/{} checks passed{}",
                    self.target,
                    self.summary.checks - self.summary.failures,
                    self.summary.checks,
                    if self.summary.all_pass { "" } else { " [FAIL]" },
                );
            }
            None => {
                let mut stdout = std::io::stdout().lock();
                writeln!(stdout, "{body}")?;
            }
        }
        Ok(())
    }
}

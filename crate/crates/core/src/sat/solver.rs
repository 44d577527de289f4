//! Driving an external SAT solver over DIMACS files.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, Stdio};

use crate::error::{Error, Result};

/// Environment variable consulted when no solver command is given.
pub const SOLVER_ENV: &str = "LDIMKIT_SAT_SOLVER";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolverStatus {
    Sat,
    Unsat,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverResult {
    pub status: SolverStatus,
    /// True variables, present exactly when `status` is `Sat`.
    pub model: Option<BTreeSet<i32>>,
}

impl SolverResult {
    pub fn is_sat(&self) -> bool {
        self.status == SolverStatus::Sat
    }
}

/// Picks the explicit command if given, otherwise `$LDIMKIT_SAT_SOLVER`.
pub fn resolve_solver(explicit: Option<&str>) -> Result<String> {
    if let Some(cmd) = explicit.filter(|c| !c.trim().is_empty()) {
        return Ok(cmd.to_string());
    }
    match std::env::var(SOLVER_ENV) {
        Ok(cmd) if !cmd.trim().is_empty() => Ok(cmd),
        _ => Err(Error::Environment(format!(
            "no SAT solver configured (pass --solver or set {SOLVER_ENV})"
        ))),
    }
}

/// Runs `solver_command` (program and arguments, whitespace separated) with
/// the DIMACS file appended as its last argument.
pub fn run_solver(cnf_path: &Path, solver_command: &str) -> Result<SolverResult> {
    let mut parts = solver_command.split_whitespace();
    let program = parts
        .next()
        .ok_or_else(|| Error::Environment("empty solver command".into()))?;
    let output = Command::new(program)
        .args(parts)
        .arg(cnf_path)
        .stdin(Stdio::null())
        .stderr(Stdio::inherit())
        .output()
        .map_err(|e| Error::Environment(format!("cannot launch {program:?}: {e}")))?;
    let stdout = String::from_utf8_lossy(&output.stdout);
    parse_solver_output(&stdout, output.status.code())
}

/// Parses `s`/`v` lines in the SAT competition format. Exit codes 10 and 20
/// stand in for a missing status line.
pub fn parse_solver_output(text: &str, exit_code: Option<i32>) -> Result<SolverResult> {
    let mut status = None;
    let mut model = BTreeSet::new();
    let mut saw_values = false;
    for line in text.lines() {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix("s ") {
            status = Some(match rest.trim() {
                "SATISFIABLE" => SolverStatus::Sat,
                "UNSATISFIABLE" => SolverStatus::Unsat,
                "UNKNOWN" | "INDETERMINATE" => SolverStatus::Unknown,
                other => return Err(Error::Protocol(format!("unknown status {other:?}"))),
            });
        } else if let Some(rest) = line.strip_prefix("v") {
            if !(rest.is_empty() || rest.starts_with(' ')) {
                continue;
            }
            saw_values = true;
            for tok in rest.split_whitespace() {
                let lit: i32 = tok
                    .parse()
                    .map_err(|_| Error::Protocol(format!("bad model literal {tok:?}")))?;
                if lit > 0 {
                    model.insert(lit);
                }
            }
        }
    }
    let status = match (status, exit_code) {
        (Some(s), _) => s,
        (None, Some(10)) => SolverStatus::Sat,
        (None, Some(20)) => SolverStatus::Unsat,
        _ => {
            return Err(Error::Protocol(
                "solver printed no status line and exited without 10/20".into(),
            ))
        }
    };
    match status {
        SolverStatus::Sat if !saw_values => Err(Error::Protocol(
            "satisfiable but no model was printed".into(),
        )),
        SolverStatus::Sat => Ok(SolverResult {
            status,
            model: Some(model),
        }),
        _ => Ok(SolverResult {
            status,
            model: None,
        }),
    }
}
